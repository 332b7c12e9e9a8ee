#include "gwilf/permutation.hpp"

namespace gwilf {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = static_cast<int>(entries_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v])
      throw DomainError("Permutation: entries must be exactly 1..n, each once");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("Permutation::identity: negative length");
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::reversed() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

}  // namespace gwilf

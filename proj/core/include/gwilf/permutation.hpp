#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "gwilf/errors.hpp"

namespace gwilf {

// One-line notation permutation of {1, ..., n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int pos) const { return entries_[pos]; }  // 0-based position
  const std::vector<int>& entries() const { return entries_; }
  Permutation reversed() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

// The unique permutation order-isomorphic to a list of distinct values.
template <typename T>
Permutation reduce(std::span<const T> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw DomainError("reduce: empty input");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  for (int i = 0; i + 1 < n; ++i)
    if (values[order[i]] == values[order[i + 1]])
      throw DomainError("reduce: duplicate values");
  std::vector<int> ranks(n);
  for (int r = 0; r < n; ++r) ranks[order[r]] = r + 1;
  return Permutation(std::move(ranks));
}

template <typename T>
Permutation reduce(const std::vector<T>& values) {
  return reduce(std::span<const T>(values));
}

}  // namespace gwilf

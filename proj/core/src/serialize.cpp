#include "gwilf/serialize.hpp"

#include <json.hpp>

#include "gwilf/errors.hpp"

namespace gwilf {

std::string qpoly_to_json(const QPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& cs = p.coeffs();
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (cs[e] == 0) continue;
    arr.push_back({std::to_string(e), cs[e].str()});
  }
  return arr.dump();
}

QPoly qpoly_from_json(const std::string& text, std::optional<unsigned> cap) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("qpoly_from_json: ") + e.what());
  }
  if (!arr.is_array()) throw DomainError("qpoly_from_json: expected a JSON array");
  std::vector<BigInt> coeffs;
  long long prev = -1;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw DomainError("qpoly_from_json: entries must be [exponent, coefficient] string pairs");
    const BigInt exp_big = parse_decimal(item[0].get<std::string>());
    if (exp_big < 0 || exp_big > 1000000)
      throw DomainError("qpoly_from_json: exponent out of range");
    const long long e = exp_big.convert_to<long long>();
    if (e <= prev) throw DomainError("qpoly_from_json: exponents must be strictly ascending");
    prev = e;
    const BigInt c = parse_decimal(item[1].get<std::string>());
    if (coeffs.size() < static_cast<std::size_t>(e) + 1)
      coeffs.resize(static_cast<std::size_t>(e) + 1, BigInt(0));
    coeffs[static_cast<std::size_t>(e)] = c;
  }
  return QPoly::from_coeffs(std::move(coeffs), cap);
}

}  // namespace gwilf

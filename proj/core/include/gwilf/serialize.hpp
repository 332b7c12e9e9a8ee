#pragma once

#include <optional>
#include <string>

#include "gwilf/qpoly.hpp"

namespace gwilf {

// JSON array of [exponent, coefficient] pairs, both as decimal strings,
// ascending exponents, zero coefficients omitted: [["0","14"],["1","6"]].
// The zero polynomial serializes to [].
std::string qpoly_to_json(const QPoly& p);

// Inverse of qpoly_to_json. The cap, if any, is supplied by the caller
// (it is carried by the surrounding context, not the array itself).
// Throws DomainError on malformed input.
QPoly qpoly_from_json(const std::string& text,
                      std::optional<unsigned> cap = std::nullopt);

}  // namespace gwilf

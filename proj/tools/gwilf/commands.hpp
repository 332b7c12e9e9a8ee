#pragma once

#include <string>

#include "gwilf/common.hpp"

namespace gwilf::cli {

// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 resource limit. Commands return the code; throwing DomainError maps to
// 1 and ResourceLimitError to 3 in main.

int cmd_dist(const CommonOptions& opts, const std::string& mode);
int cmd_counts(const CommonOptions& opts, unsigned r);
int cmd_verify(const CommonOptions& opts, const std::string& r_spec);
int cmd_oracle(const CommonOptions& opts);
int cmd_moments(const CommonOptions& opts, int order);

}  // namespace gwilf::cli

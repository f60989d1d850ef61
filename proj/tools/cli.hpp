#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fourfold::cli {

inline constexpr const char* kReportSchema = "fourfold.report/1";

// Exit codes: 0 computed (any verdict but Inconclusive), 2 Inconclusive,
// 1 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourfold::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/equidist.hpp"

namespace permstat::cli {

enum class OutputFormat { Plain, Csv, Json };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCapExceeded = 2;
inline constexpr int kVerifyFailed = 3;

// Runs one invocation; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CSV table: header "<stat>,...,count", one row per value tuple in
// lexicographic order, LF line endings.
std::string table_to_csv(const JointDistribution& d);
// Throws ParseError on malformed input.
JointDistribution table_from_csv(std::string_view csv);

}  // namespace permstat::cli

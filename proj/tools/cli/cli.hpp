#pragma once

#include <polylie/report.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polylie::cli {

enum class Format { Tsv, Json };

/// parse_lincomb plus check_symbol on every term.
symbolic::LinComb parse_expression(std::string_view text);

/// Runs one command line (argv[0] is the program name). Exit codes:
/// 0 pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylie::cli

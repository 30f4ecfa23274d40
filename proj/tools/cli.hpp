#pragma once

// Command-line front end: seq, det, verify, automaton, bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 fast/oracle mismatch, 4 automaton failure.

#include "tmhankel/eisenstein.hpp"

#include <iosfwd>
#include <string_view>

namespace tmhankel::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kMismatch = 3,
  kAutomatonFailed = 4,
};

enum class OutputFormat { Plain, Csv, Json };

// Decimal digits, optionally "<digits>^<digits>" for an exact power.
// Signs, whitespace and scientific notation are rejected with ParseError.
BigInt parse_index(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tmhankel::cli

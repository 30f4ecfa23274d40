#pragma once

// Identity sweeps behind `tmhankel verify`. Each suite checks a family of
// identities over a grid and tallies passes per identity; the first failure
// (in grid order) is kept for reporting.

#include "tmhankel/eisenstein.hpp"
#include "tmhankel/hankel.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace tmhankel {

struct IdentityTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Failure {
  std::string identity;
  std::string n;
  std::string p;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityTally> tallies;
  std::optional<Failure> first_failure;
  // Informational lines that do not affect the verdict.
  std::vector<std::string> notes;

  bool ok() const;
  std::size_t total_checks() const;
};

struct VerifyOptions {
  // Unset bounds fall back to the suite's own defaults.
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> p_max;
  std::uint64_t seed = 20140504;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Thread-safe memo of oracle determinants shared across identities.
class OracleTable {
 public:
  UnitOrZero operator()(Family family, std::size_t n, std::size_t p);

 private:
  struct Key {
    Family family;
    std::size_t n;
    std::size_t p;
    auto operator<=>(const Key&) const = default;
  };
  std::shared_mutex mutex_;
  std::map<Key, UnitOrZero> memo_;
};

SuiteReport verify_generators(const VerifyOptions& options);
SuiteReport verify_theorem_tables(const VerifyOptions& options);
SuiteReport verify_lemma(const VerifyOptions& options);
SuiteReport verify_corollary(const VerifyOptions& options);
SuiteReport verify_blocks(const VerifyOptions& options);
SuiteReport verify_oracle(const VerifyOptions& options);

// "generators", "theorem-tables", "lemma", "corollary", "blocks", "oracle".
const std::vector<std::string_view>& suite_names();
bool is_suite_name(std::string_view name);
// name may be "all", which runs every suite in order.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

}  // namespace tmhankel

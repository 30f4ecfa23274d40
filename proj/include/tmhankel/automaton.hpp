#pragma once

// Empirical 3-kernel automata for the four determinant columns
// |H_n^0|, |H_n^1|, |Σ_n^0|, |Σ_n^1|.
//
// Kernel sequences n ↦ v(3^e·n + r) are compared on their first prefix_len
// terms only, so two states may be merged wrongly if the prefix is too short.
// Every automaton is replayed against its column before it is returned.

#include "tmhankel/eisenstein.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace tmhankel {

enum class ColumnSelector { H0, H1, Sigma0, Sigma1 };

std::string_view to_string(ColumnSelector selector);
// Accepts "h0", "h1", "s0", "s1" (case-insensitive).
std::optional<ColumnSelector> parse_column_selector(std::string_view text);

UnitOrZero column_value(ColumnSelector selector, const BigInt& n);

/// Deterministic finite automaton with output, reading base-3 digits of n
/// least-significant first.
struct Dfao {
  std::vector<UnitOrZero> outputs;
  std::vector<std::array<std::size_t, 3>> transitions;
  std::size_t initial = 0;

  std::size_t state_count() const { return outputs.size(); }
  UnitOrZero run(const BigInt& n) const;

  // {"states":[{"output":"J"},…],"transitions":[[s0,s1,s2],…],"initial":0,"digit_order":"lsd"}
  nlohmann::ordered_json to_json() const;
};

inline constexpr std::size_t kMinPrefixLength = 81;
inline constexpr std::size_t kMaxKernelStates = 64;
inline constexpr std::size_t kReplayBound = 729;

// Throws InvalidSize if prefix_len < 81, NonConvergence past 64 states, and
// ReplayFailure if the result disagrees with the column on
// n < max(prefix_len, 729).
Dfao kernel_dfao(ColumnSelector selector, std::size_t prefix_len);

}  // namespace tmhankel

#pragma once

// The sequence c = coefficients of ∏_{k≥0} (1 + J x^{3^k}) and its companion
// s_n = c_n + c_{n+1}. Terms always lie in {0, ±1, ±J, ±J²}, so they are
// carried as UnitOrZero rather than as general Eisenstein integers.

#include "tmhankel/eisenstein.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tmhankel {

enum class SequenceKind { C, S };

std::string_view to_string(SequenceKind kind);

using Term = UnitOrZero;

// Random access by base-3 digits: 0 if any digit is 2, else J^(number of 1 digits).
Term c_term(const BigInt& n);
Term c_term(std::uint64_t n);

// s_{3m} = −J² c_m, s_{3m+1} = J c_m, s_{3m+2} = c_{m+1}.
Term s_term(const BigInt& n);
Term s_term(std::uint64_t n);

Term term(SequenceKind kind, const BigInt& n);

// c_0 … c_{count−1} filled bottom-up from c_0 = 1, c_{3m} = c_m,
// c_{3m+1} = J c_m, c_{3m+2} = 0.
std::vector<Term> c_block_recurrence(std::size_t count);

// Prefix of the fixed point of 1↦1J0, J↦JJ²0, J²↦J²10, 0↦000 seeded at 1.
std::vector<Term> c_block_morphism(std::size_t count);

// Coefficients of ∏_{3^k < count} (1 + J x^{3^k}) truncated to degree count−1,
// multiplied out over Z[J].
std::vector<Term> c_block_product(std::size_t count);

std::vector<Term> s_block(std::size_t count);

}  // namespace tmhankel

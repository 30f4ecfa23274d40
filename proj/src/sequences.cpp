#include "tmhankel/sequences.hpp"

#include <algorithm>
#include <array>

namespace tmhankel {

std::string_view to_string(SequenceKind kind) { return kind == SequenceKind::C ? "c" : "s"; }

Term c_term(const BigInt& n) {
  if (n.fits_ulong_p()) return c_term(static_cast<std::uint64_t>(n.get_ui()));
  const std::string digits = n.get_str(3);
  if (digits.find('2') != std::string::npos) return Term::zero();
  const auto ones = std::count(digits.begin(), digits.end(), '1');
  return Term::unit(1, static_cast<int>(ones % 3));
}

Term c_term(std::uint64_t n) {
  int ones = 0;
  for (; n != 0; n /= 3) {
    const auto digit = n % 3;
    if (digit == 2) return Term::zero();
    ones += static_cast<int>(digit);
  }
  return Term::unit(1, ones % 3);
}

Term s_term(const BigInt& n) {
  if (n.fits_ulong_p()) return s_term(static_cast<std::uint64_t>(n.get_ui()));
  BigInt m;
  const unsigned long r = mpz_fdiv_q_ui(m.get_mpz_t(), n.get_mpz_t(), 3);
  switch (r) {
    case 0: return -Term::j2() * c_term(m);
    case 1: return Term::j() * c_term(m);
    default: return c_term(BigInt(m + 1));
  }
}

Term s_term(std::uint64_t n) {
  const std::uint64_t m = n / 3;
  switch (n % 3) {
    case 0: return -Term::j2() * c_term(m);
    case 1: return Term::j() * c_term(m);
    default: return c_term(m + 1);
  }
}

Term term(SequenceKind kind, const BigInt& n) {
  return kind == SequenceKind::C ? c_term(n) : s_term(n);
}

std::vector<Term> c_block_recurrence(std::size_t count) {
  std::vector<Term> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) {
      out[i] = Term::one();
      continue;
    }
    const std::size_t m = i / 3;
    switch (i % 3) {
      case 0: out[i] = out[m]; break;
      case 1: out[i] = Term::j() * out[m]; break;
      default: out[i] = Term::zero(); break;
    }
  }
  return out;
}

namespace {

// σ applied to a single letter.
std::array<Term, 3> substitute(Term letter) {
  if (letter.is_zero()) return {Term::zero(), Term::zero(), Term::zero()};
  // 1↦1J0, J↦JJ²0, J²↦J²10: the letter x maps to x, Jx, 0.
  return {letter, Term::j() * letter, Term::zero()};
}

}  // namespace

std::vector<Term> c_block_morphism(std::size_t count) {
  std::vector<Term> word{Term::one()};
  while (word.size() < count) {
    std::vector<Term> next;
    next.reserve(word.size() * 3);
    for (const Term letter : word) {
      for (const Term image : substitute(letter)) next.push_back(image);
      if (next.size() >= count) break;
    }
    word = std::move(next);
  }
  word.resize(std::min(word.size(), count));
  return word;
}

std::vector<Term> c_block_product(std::size_t count) {
  std::vector<EisensteinInt> poly(count);
  if (count == 0) return {};
  poly[0] = EisensteinInt::one();
  const EisensteinInt j = EisensteinInt::j();
  for (std::size_t step = 1; step < count; step *= 3) {
    // In place multiply by (1 + J x^step), high degrees first.
    for (std::size_t i = count; i-- > step;) {
      if (!poly[i - step].is_zero()) poly[i] += j * poly[i - step];
    }
  }
  std::vector<Term> out;
  out.reserve(count);
  for (const auto& coeff : poly) out.push_back(classify(coeff));
  return out;
}

std::vector<Term> s_block(std::size_t count) {
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(s_term(static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace tmhankel

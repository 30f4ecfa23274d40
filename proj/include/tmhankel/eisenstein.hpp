#pragma once

/**
 * @file eisenstein.hpp
 * @brief Exact arithmetic in Z[J], J = (√−3 − 1)/2, and the 7-element
 *        value set {0, ±1, ±J, ±J²}.
 *
 * Elements are stored in the basis {1, J}. Products reduce with
 * J² = −1 − J, so (a1 + b1 J)(a2 + b2 J) = (a1a2 − b1b2) + (a1b2 + a2b1 − b1b2) J.
 * Coordinates are GMP integers: determinant values are tiny, but the
 * intermediate minors of fraction-free elimination are not.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tmhankel {

using BigInt = mpz_class;

class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit EisensteinInt(long a) : a_(a), b_(0) {}

  // a + bJ + cJ², normalized through J² = −1 − J.
  static EisensteinInt from_triple(const BigInt& a, const BigInt& b, const BigInt& c) {
    return {a - c, b - c};
  }

  static EisensteinInt zero() { return {}; }
  static EisensteinInt one() { return EisensteinInt(1); }
  static EisensteinInt j() { return {0, 1}; }
  static EisensteinInt j2() { return {-1, -1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  // Complex conjugate: conj(J) = J² = −1 − J, hence conj(a + bJ) = (a − b) − bJ.
  EisensteinInt conj() const { return {a_ - b_, -b_}; }

  EisensteinInt& operator+=(const EisensteinInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisensteinInt& operator-=(const EisensteinInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  BigInt a_{0};
  BigInt b_{0};
};

// a² − ab + b² = x · conj(x).
BigInt norm(const EisensteinInt& x);

// Returns q with q · y = x. Throws DivisionByZero / NotDivisible.
EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y);

// Renders "a+bJ" with normalized signs: "0", "J", "-J", "2-3J", "-1".
std::string to_string(const EisensteinInt& x);
std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

/// An element of {0, ±1, ±J, ±J²}. Closed under multiplication and negation.
class UnitOrZero {
 public:
  // Defaults to zero.
  constexpr UnitOrZero() = default;

  static constexpr UnitOrZero zero() { return {}; }
  // sign · J^exponent; sign must be ±1, exponent is taken mod 3.
  static constexpr UnitOrZero unit(int sign, int exponent) {
    UnitOrZero u;
    u.zero_ = false;
    u.negative_ = sign < 0;
    u.exponent_ = static_cast<std::uint8_t>(((exponent % 3) + 3) % 3);
    return u;
  }
  static constexpr UnitOrZero one() { return unit(1, 0); }
  static constexpr UnitOrZero minus_one() { return unit(-1, 0); }
  static constexpr UnitOrZero j() { return unit(1, 1); }
  static constexpr UnitOrZero j2() { return unit(1, 2); }

  constexpr bool is_zero() const { return zero_; }
  // Only meaningful for units.
  constexpr int sign() const { return negative_ ? -1 : 1; }
  constexpr int exponent() const { return exponent_; }

  constexpr UnitOrZero operator-() const {
    if (zero_) return *this;
    return unit(-sign(), exponent_);
  }
  friend constexpr UnitOrZero operator*(UnitOrZero x, UnitOrZero y) {
    if (x.zero_ || y.zero_) return zero();
    return unit(x.sign() * y.sign(), x.exponent_ + y.exponent_);
  }
  constexpr UnitOrZero& operator*=(UnitOrZero o) { return *this = *this * o; }

  constexpr UnitOrZero pow(unsigned k) const {
    UnitOrZero r = one();
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend constexpr bool operator==(UnitOrZero, UnitOrZero) = default;

  // Dense code in [0, 7): 0 for zero, then 1, J, J², −1, −J, −J².
  constexpr int code() const {
    if (zero_) return 0;
    return 1 + exponent_ + (negative_ ? 3 : 0);
  }
  static constexpr UnitOrZero from_code(int c) {
    if (c == 0) return zero();
    return unit(c >= 4 ? -1 : 1, (c - 1) % 3);
  }

 private:
  bool zero_ = true;
  bool negative_ = false;
  std::uint8_t exponent_ = 0;
};

/// (−1)^k for the parity of a big integer.
inline UnitOrZero parity_sign(const BigInt& k) {
  return mpz_odd_p(k.get_mpz_t()) ? UnitOrZero::minus_one() : UnitOrZero::one();
}

EisensteinInt embed(UnitOrZero u);

// Throws NotInValueSet for anything outside the 7 coordinate pairs.
UnitOrZero classify(const EisensteinInt& x);

// One of "0", "1", "-1", "J", "-J", "J^2", "-J^2".
std::string to_string(UnitOrZero u);
// Inverse of to_string(UnitOrZero); throws ParseError.
UnitOrZero parse_unit_or_zero(std::string_view text);
std::ostream& operator<<(std::ostream& os, UnitOrZero u);

}  // namespace tmhankel

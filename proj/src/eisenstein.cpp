#include "tmhankel/eisenstein.hpp"

#include "tmhankel/errors.hpp"

#include <ostream>

namespace tmhankel {

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  BigInt bb = b_ * o.b_;
  BigInt a = a_ * o.a_ - bb;
  BigInt b = a_ * o.b_ + o.a_ * b_ - bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

BigInt norm(const EisensteinInt& x) {
  return x.a() * x.a() - x.a() * x.b() + x.b() * x.b();
}

EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) throw DivisionByZero("exact_div: divisor is zero");
  if (x.is_zero()) return {};
  BigInt n = norm(y);
  EisensteinInt num = x * y.conj();
  if (n == 1) return num;
  BigInt qa, qb;
  if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t())) {
    throw NotDivisible("exact_div: " + to_string(x) + " is not divisible by " + to_string(y));
  }
  mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  return {std::move(qa), std::move(qb)};
}

std::string to_string(const EisensteinInt& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return x.a().get_str();
  std::string out;
  if (sa != 0) out = x.a().get_str();
  if (sb > 0 && sa != 0) out += '+';
  if (x.b() == -1) {
    out += '-';
  } else if (x.b() != 1) {
    out += x.b().get_str();
  }
  out += 'J';
  return out;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) { return os << to_string(x); }

EisensteinInt embed(UnitOrZero u) {
  if (u.is_zero()) return {};
  EisensteinInt base;
  switch (u.exponent()) {
    case 0: base = EisensteinInt::one(); break;
    case 1: base = EisensteinInt::j(); break;
    default: base = EisensteinInt::j2(); break;
  }
  return u.sign() < 0 ? -base : base;
}

UnitOrZero classify(const EisensteinInt& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sa == 0 && sb == 0) return UnitOrZero::zero();
  if (sb == 0 && abs(x.a()) == 1) return UnitOrZero::unit(sa, 0);
  if (sa == 0 && abs(x.b()) == 1) return UnitOrZero::unit(sb, 1);
  // ±J² = ∓1 ∓ J
  if (x.a() == x.b() && abs(x.a()) == 1) return UnitOrZero::unit(-sa, 2);
  throw NotInValueSet("classify: " + to_string(x) + " is not in {0, ±1, ±J, ±J²}");
}

std::string to_string(UnitOrZero u) {
  if (u.is_zero()) return "0";
  std::string out = u.sign() < 0 ? "-" : "";
  switch (u.exponent()) {
    case 0: out += "1"; break;
    case 1: out += "J"; break;
    default: out += "J^2"; break;
  }
  return out;
}

UnitOrZero parse_unit_or_zero(std::string_view text) {
  for (int c = 0; c < 7; ++c) {
    const UnitOrZero u = UnitOrZero::from_code(c);
    if (to_string(u) == text) return u;
  }
  throw ParseError("not a unit-or-zero encoding: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, UnitOrZero u) { return os << to_string(u); }

}  // namespace tmhankel

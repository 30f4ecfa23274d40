#include "tmhankel/closed_form.hpp"

#include "tmhankel/errors.hpp"

#include <mutex>

namespace tmhankel {

namespace {

constexpr Family H = Family::H;
constexpr Family S = Family::Sigma;

constexpr Relation rel(std::string_view name, Family family, int a, int b, bool negate, int j_power,
                       std::array<DetFactor, 3> factors, std::size_t count) {
  return {name, family, a, b, negate, j_power, false, factors, count};
}

constexpr Relation zero_rel(std::string_view name, Family family, int a, int b) {
  return {name, family, a, b, false, 0, true, {}, 0};
}

// Factor shorthand: (family, m or m+1, q or q+1, power).
constexpr DetFactor f(Family family, int dn, int dp, unsigned power = 1) { return {family, dn, dp, power}; }

constexpr std::array<Relation, 18> kLemma{{
    rel("L1", H, 0, 0, false, 0, {f(H, 0, 0), f(H, 0, 1), f(S, 0, 0)}, 3),
    rel("L2", H, 1, 0, false, 0, {f(H, 0, 1), f(H, 1, 0), f(S, 0, 0)}, 3),
    rel("L3", H, 2, 0, true, 2, {f(H, 1, 0, 2), f(S, 0, 1)}, 2),
    rel("L4", H, 0, 1, false, 0, {f(H, 0, 1, 2), f(S, 0, 0)}, 2),
    rel("L5", H, 1, 1, false, 1, {f(H, 0, 1), f(H, 1, 0), f(S, 0, 1)}, 3),
    rel("L6", H, 2, 1, false, 1, {f(H, 1, 1), f(H, 1, 0), f(S, 0, 1)}, 3),
    rel("L7", H, 0, 2, false, 0, {f(H, 0, 1, 2), f(S, 0, 1)}, 2),
    zero_rel("L8", H, 1, 2),
    rel("L9", H, 2, 2, true, 0, {f(H, 1, 1, 2), f(S, 0, 1)}, 2),
    rel("L10", S, 0, 0, false, 0, {f(S, 0, 0, 2), f(H, 0, 1)}, 2),
    rel("L11", S, 1, 0, true, 2, {f(H, 1, 0), f(S, 0, 0), f(S, 0, 1)}, 3),
    rel("L12", S, 2, 0, true, 2, {f(H, 1, 0), f(S, 1, 0), f(S, 0, 1)}, 3),
    rel("L13", S, 0, 1, false, 0, {f(H, 0, 1), f(S, 0, 0), f(S, 0, 1)}, 3),
    rel("L14", S, 1, 1, false, 1, {f(H, 1, 0), f(S, 0, 1, 2)}, 2),
    rel("L15", S, 2, 1, true, 0, {f(H, 1, 1), f(S, 1, 0), f(S, 0, 1)}, 3),
    rel("L16", S, 0, 2, false, 0, {f(S, 0, 1, 2), f(H, 0, 1)}, 2),
    rel("L17", S, 1, 2, false, 0, {f(S, 0, 1, 2), f(H, 1, 1)}, 2),
    zero_rel("L18", S, 2, 2),
}};

constexpr ABFactor g(ABSide side, int dn, unsigned power = 1) { return {side, dn, power}; }
constexpr ABSide A = ABSide::A;
constexpr ABSide B = ABSide::B;

constexpr std::array<ABRelation, 6> kCorollary{{
    {"C1", A, 0, {g(A, 0, 3)}, 1},
    {"C2", A, 1, {g(A, 0), g(B, 0, 2)}, 2},
    {"C3", A, 2, {g(A, 1), g(B, 0, 2)}, 2},
    {"C4", B, 0, {g(A, 0, 2), g(B, 0)}, 2},
    {"C5", B, 1, {g(B, 0, 3)}, 1},
    {"C6", B, 2, {g(A, 1, 2), g(B, 0)}, 2},
}};

// n = 3m + r.
int divmod3(const BigInt& n, BigInt& m) {
  return static_cast<int>(mpz_fdiv_q_ui(m.get_mpz_t(), n.get_mpz_t(), 3));
}

}  // namespace

std::span<const Relation> lemma_relations() { return kLemma; }

const Relation& relation_for(Family family, int n_residue, int p_residue) {
  for (const auto& r : kLemma) {
    if (r.family == family && r.n_residue == n_residue && r.p_residue == p_residue) return r;
  }
  throw IndexOutOfRange("relation_for: residues must lie in {0, 1, 2}");
}

std::span<const ABRelation> corollary_relations() { return kCorollary; }

UnitOrZero h_col0(const BigInt& n) {
  UnitOrZero acc = UnitOrZero::one();
  BigInt k = n;
  BigInt m;
  while (k > 1) {
    switch (divmod3(k, m)) {
      case 0: k = m; break;
      case 1: k = m + 1; break;
      default:
        acc *= -UnitOrZero::j2();
        k = m + 1;
        break;
    }
  }
  // |H_0^0| = |H_1^0| = 1
  return acc;
}

UnitOrZero h_col1(const BigInt& n) {
  UnitOrZero acc = UnitOrZero::one();
  BigInt k = n;
  BigInt m;
  while (k > 0) {
    switch (divmod3(k, m)) {
      case 0: k = m; break;
      case 1:
        acc *= UnitOrZero::j();
        k = m;
        break;
      default:
        acc *= UnitOrZero::j();
        k = m + 1;
        break;
    }
  }
  return acc;
}

UnitOrZero sigma_col0(const BigInt& n) {
  UnitOrZero acc = UnitOrZero::one();
  BigInt k = n;
  BigInt m;
  while (k > 0) {
    switch (divmod3(k, m)) {
      case 0: k = m; break;
      case 1:
        acc *= -UnitOrZero::j2();
        k = m;
        break;
      default:
        acc *= -UnitOrZero::j2();
        k = m + 1;
        break;
    }
  }
  return acc;
}

UnitOrZero sigma_col1(const BigInt& n) {
  UnitOrZero acc = UnitOrZero::one();
  BigInt k = n;
  BigInt m;
  while (k > 0) {
    switch (divmod3(k, m)) {
      case 1: acc *= UnitOrZero::j(); break;
      default: break;
    }
    k = m;
  }
  return acc;
}

bool Evaluator::Key::operator<(const Key& o) const {
  if (family != o.family) return family < o.family;
  if (const int c = cmp(n, o.n); c != 0) return c < 0;
  return cmp(p, o.p) < 0;
}

UnitOrZero Evaluator::eval(const DetKey& key) { return eval(key.family, key.n, key.p); }

UnitOrZero Evaluator::eval(Family family, const BigInt& n, const BigInt& p) {
  if (sgn(n) < 0 || sgn(p) < 0) throw IndexOutOfRange("eval: indices must be nonnegative");
  if (n <= 2) return oracle_det({family, p, n});

  Key key{family, n, p};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  BigInt m, q;
  const int a = divmod3(n, m);
  const int b = divmod3(p, q);
  const Relation& r = relation_for(family, a, b);

  UnitOrZero value = UnitOrZero::zero();
  if (!r.vanishes) {
    value = parity_sign(m) * UnitOrZero::unit(r.negate ? -1 : 1, r.j_power);
    for (const DetFactor& factor : r.rhs()) {
      value *= eval(factor.family, BigInt(m + factor.dn), BigInt(q + factor.dp)).pow(factor.power);
      if (value.is_zero()) break;
    }
  }

  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

ABValue Evaluator::ab(const BigInt& n, const BigInt& p) {
  const UnitOrZero sign = parity_sign(n);
  const BigInt n1 = n + 1;
  const BigInt p1 = p + 1;
  return {sign * eval(Family::H, n, p1) * eval(Family::Sigma, n, p),
          sign * eval(Family::H, n1, p) * eval(Family::Sigma, n, p1)};
}

std::size_t Evaluator::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void Evaluator::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

Evaluator& default_evaluator() {
  static Evaluator instance;
  return instance;
}

UnitOrZero eval(const DetKey& key) { return default_evaluator().eval(key); }

ABValue ab(const BigInt& n, const BigInt& p) { return default_evaluator().ab(n, p); }

}  // namespace tmhankel

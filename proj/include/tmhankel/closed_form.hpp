#pragma once

/**
 * @file closed_form.hpp
 * @brief Logarithmic-time evaluation of |H_n^p| (Hankel determinants of c)
 *        and |Σ_n^p| (Hankel determinants of s).
 *
 * The general evaluator reduces (family, n, p) with n = 3m + a, p = 3q + b
 * through one of eighteen product relations. Each relation multiplies a unit
 * (−1)^m · (±1) · J^k by determinants at orders {m, m+1} and offsets
 * {q, q+1}, so both indices shrink by a factor of three per step. Orders
 * n ≤ 2 are computed directly on the ≤2×2 matrix.
 *
 * The four columns p ∈ {0, 1} also have single-chain recurrences, exposed as
 * h_col0 / h_col1 / sigma_col0 / sigma_col1.
 */

#include "tmhankel/eisenstein.hpp"
#include "tmhankel/hankel.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <shared_mutex>
#include <span>
#include <string_view>

namespace tmhankel {

using DetKey = HankelSpec;

// One determinant factor |X_{m+dn}^{q+dp}|^power on the right of a relation.
struct DetFactor {
  Family family;
  int dn;
  int dp;
  unsigned power;
};

/// |X_{3m+a}^{3q+b}| = (−1)^m · (negate ? −1 : 1) · J^j_power · ∏ factors,
/// or identically 0 when vanishes is set.
struct Relation {
  std::string_view name;
  Family family;
  int n_residue;
  int p_residue;
  bool negate;
  int j_power;
  bool vanishes;
  std::array<DetFactor, 3> factors;
  std::size_t factor_count;

  std::span<const DetFactor> rhs() const { return {factors.data(), factor_count}; }
};

// L1–L18 in order: H with p ≡ 0, 1, 2 (each over n ≡ 0, 1, 2), then Sigma.
std::span<const Relation> lemma_relations();
const Relation& relation_for(Family family, int n_residue, int p_residue);

// Column recurrences for p = 0, 1; all O(log n).
UnitOrZero h_col0(const BigInt& n);
UnitOrZero h_col1(const BigInt& n);
UnitOrZero sigma_col0(const BigInt& n);
UnitOrZero sigma_col1(const BigInt& n);

/// A_n^p = (−1)^n |H_n^{p+1}|·|Σ_n^p| and B_n^p = (−1)^n |H_{n+1}^p|·|Σ_n^{p+1}|.
struct ABValue {
  UnitOrZero a;
  UnitOrZero b;

  friend bool operator==(const ABValue&, const ABValue&) = default;
};

enum class ABSide { A, B };

struct ABFactor {
  ABSide side;
  int dn;
  unsigned power;
};

/// X_{3m+residue}^{3q} = ∏ factors evaluated at (m+dn, q).
struct ABRelation {
  std::string_view name;
  ABSide side;
  int n_residue;
  std::array<ABFactor, 2> factors;
  std::size_t factor_count;

  std::span<const ABFactor> rhs() const { return {factors.data(), factor_count}; }
};

// C1–C6.
std::span<const ABRelation> corollary_relations();

/// Memoized evaluator. Safe to share between threads: the memo is a cache of
/// a pure function guarded by a shared mutex, so racing writers agree.
class Evaluator {
 public:
  UnitOrZero eval(const DetKey& key);
  UnitOrZero eval(Family family, const BigInt& n, const BigInt& p);
  ABValue ab(const BigInt& n, const BigInt& p);

  std::size_t memo_size() const;
  void clear();

 private:
  struct Key {
    Family family;
    BigInt n;
    BigInt p;

    bool operator<(const Key& o) const;
  };

  mutable std::shared_mutex mutex_;
  std::map<Key, UnitOrZero> memo_;
};

// Process-wide shared evaluator.
Evaluator& default_evaluator();

UnitOrZero eval(const DetKey& key);
ABValue ab(const BigInt& n, const BigInt& p);

}  // namespace tmhankel

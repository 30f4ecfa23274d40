#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel matrices of c and s, the exact determinant oracle, and the
 *        block machinery used to split a matrix into a 3×3 grid by residues.
 *
 * Index convention: every public index in this header is 1-based, matching
 * the usual matrix subscripts (m_{1,1} is the top-left entry).
 */

#include "tmhankel/eisenstein.hpp"
#include "tmhankel/sequences.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace tmhankel {

inline constexpr std::size_t kDefaultOracleCap = 512;

// HANKEL_ORACLE_CAP if set to a positive integer, otherwise kDefaultOracleCap.
std::size_t oracle_cap();

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  // 1-based.
  EisensteinInt& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const EisensteinInt& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  bool is_symmetric() const;
  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const EisensteinInt& k, const Matrix& m);
  friend Matrix operator*(UnitOrZero k, const Matrix& m) { return embed(k) * m; }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EisensteinInt> data_;
};

enum class Family { H, Sigma };

std::string_view to_string(Family family);

// H pairs with the sequence c, Sigma with s.
constexpr SequenceKind kind_of(Family family) {
  return family == Family::H ? SequenceKind::C : SequenceKind::S;
}

/// Names one determinant: |H_n^p| (family H) or |Σ_n^p| (family Sigma).
struct HankelSpec {
  Family family = Family::H;
  BigInt p = 0;
  BigInt n = 0;

  SequenceKind kind() const { return kind_of(family); }
};

// n×n matrix with entry (i, j) = u_{p+i+j−2}. Throws CapExceeded when n > cap.
Matrix hankel_matrix(SequenceKind kind, const BigInt& p, const BigInt& n,
                     std::size_t cap = oracle_cap());

// Hankel matrix of s; equals sigma_matrix_as_sum entrywise.
Matrix sigma_matrix(const BigInt& p, const BigInt& n, std::size_t cap = oracle_cap());
// H_n^p + H_n^{p+1} built from c.
Matrix sigma_matrix_as_sum(const BigInt& p, const BigInt& n, std::size_t cap = oracle_cap());

Matrix build(const HankelSpec& spec, std::size_t cap = oracle_cap());

// n×n matrix with entry (i, j) = u_{p+3(i+j−2)}.
Matrix k_matrix(SequenceKind kind, const BigInt& p, const BigInt& n, std::size_t cap = oracle_cap());

// Fraction-free elimination over Z[J]. The empty matrix has determinant 1.
EisensteinInt det_bareiss(const Matrix& m);

// classify(det_bareiss(build(spec))).
UnitOrZero oracle_det(const HankelSpec& spec, std::size_t cap = oracle_cap());

Matrix delete_column(const Matrix& m, std::size_t i);
Matrix delete_row(const Matrix& m, std::size_t i);

/// Column permutation: column j of the matrix is the unit vector e_{image[j]}.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  std::size_t size() const { return image_.size(); }
  // 1-based column index in, 1-based unit-vector index out.
  std::size_t operator()(std::size_t column) const { return image_[column - 1]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Matrix to_matrix() const;
  // Sign of the permutation, i.e. det of to_matrix().
  int sign() const;

 private:
  std::vector<std::size_t> image_;
};

// Sizes of the residue classes 1, 2, 0 (mod 3) in {1..n}:
// ⌊(n+2)/3⌋, ⌊(n+1)/3⌋, ⌊n/3⌋.
std::array<std::size_t, 3> residue_class_sizes(std::size_t n);

// Columns e_1, e_4, …, then e_2, e_5, …, then e_3, e_6, …. Throws InvalidSize for n < 1.
Permutation permutation_P(std::size_t n);

using BlockGrid = std::array<std::array<Matrix, 3>, 3>;

// Pᵗ·m·P for P = permutation_P(n), cut into blocks of sizes (n1, n2, n3).
// Throws InvalidSize unless m is n×n.
BlockGrid conjugate_blocks(const Matrix& m, std::size_t n);

// The 3×3 grid that the residue split of H_{3n+residue}^p(u) must equal,
// assembled from K-matrices with the (n+1)-th row or column removed where
// the residue classes have unequal sizes. residue ∈ {0, 1, 2}.
BlockGrid residue_block_assembly(SequenceKind kind, const BigInt& p, std::size_t n, int residue);

// The rows×cols block of m whose top-left entry is m(row, col).
Matrix submatrix(const Matrix& m, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols);

}  // namespace tmhankel

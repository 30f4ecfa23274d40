#include "tmhankel/hankel.hpp"

#include "tmhankel/errors.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace tmhankel {

std::size_t oracle_cap() {
  if (const char* env = std::getenv("HANKEL_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOracleCap;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m(i, i) = EisensteinInt::one();
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = i + 1; j <= cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvalidSize("matrix sum: shape mismatch");
  Matrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw InvalidSize("matrix product: shape mismatch");
  Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 1; i <= x.rows_; ++i) {
    for (std::size_t k = 1; k <= x.cols_; ++k) {
      const EisensteinInt& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 1; j <= y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const EisensteinInt& k, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::string_view to_string(Family family) { return family == Family::H ? "H" : "Sigma"; }

namespace {

std::size_t checked_size(const BigInt& n, std::size_t cap) {
  if (sgn(n) < 0) throw InvalidSize("matrix order must be nonnegative");
  if (!n.fits_ulong_p() || n.get_ui() > cap) {
    throw CapExceeded("matrix order " + n.get_str() + " exceeds the oracle cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(n.get_ui());
}

// Entry (i, j) = u_{p + stride·(i+j−2)}; the anti-diagonals are shared, so
// each term is computed once.
Matrix strided_hankel(SequenceKind kind, const BigInt& p, const BigInt& n, unsigned long stride,
                      std::size_t cap) {
  if (sgn(p) < 0) throw IndexOutOfRange("sequence offset must be nonnegative");
  const std::size_t order = checked_size(n, cap);
  Matrix m(order, order);
  if (order == 0) return m;
  std::vector<EisensteinInt> diagonal;
  diagonal.reserve(2 * order - 1);
  for (std::size_t d = 0; d + 1 < 2 * order; ++d) {
    diagonal.push_back(embed(term(kind, BigInt(p + stride * d))));
  }
  for (std::size_t i = 1; i <= order; ++i) {
    for (std::size_t j = 1; j <= order; ++j) m(i, j) = diagonal[i + j - 2];
  }
  return m;
}

}  // namespace

Matrix hankel_matrix(SequenceKind kind, const BigInt& p, const BigInt& n, std::size_t cap) {
  return strided_hankel(kind, p, n, 1, cap);
}

Matrix sigma_matrix(const BigInt& p, const BigInt& n, std::size_t cap) {
  return hankel_matrix(SequenceKind::S, p, n, cap);
}

Matrix sigma_matrix_as_sum(const BigInt& p, const BigInt& n, std::size_t cap) {
  return hankel_matrix(SequenceKind::C, p, n, cap) + hankel_matrix(SequenceKind::C, BigInt(p + 1), n, cap);
}

Matrix build(const HankelSpec& spec, std::size_t cap) {
  return hankel_matrix(spec.kind(), spec.p, spec.n, cap);
}

Matrix k_matrix(SequenceKind kind, const BigInt& p, const BigInt& n, std::size_t cap) {
  return strided_hankel(kind, p, n, 3, cap);
}

EisensteinInt det_bareiss(const Matrix& m) {
  if (!m.is_square()) throw InvalidSize("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return EisensteinInt::one();

  std::vector<std::vector<EisensteinInt>> a(n, std::vector<EisensteinInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i + 1, j + 1);
  }

  bool negate = false;
  EisensteinInt previous = EisensteinInt::one();
  EisensteinInt t;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return EisensteinInt::zero();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    const EisensteinInt& pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const EisensteinInt& lead = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij ← (a_ij·a_kk − a_ik·a_kj) / previous pivot
        a[i][j] *= pivot;
        if (!lead.is_zero() && !a[k][j].is_zero()) {
          t = lead;
          t *= a[k][j];
          a[i][j] -= t;
        }
        if (!(previous == EisensteinInt::one())) a[i][j] = exact_div(a[i][j], previous);
      }
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

UnitOrZero oracle_det(const HankelSpec& spec, std::size_t cap) {
  return classify(det_bareiss(build(spec, cap)));
}

Matrix delete_column(const Matrix& m, std::size_t i) {
  if (i < 1 || i > m.cols()) throw IndexOutOfRange("delete_column: index " + std::to_string(i));
  Matrix out(m.rows(), m.cols() - 1);
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    for (std::size_t c = 1, k = 1; c <= m.cols(); ++c) {
      if (c != i) out(r, k++) = m(r, c);
    }
  }
  return out;
}

Matrix delete_row(const Matrix& m, std::size_t i) {
  if (i < 1 || i > m.rows()) throw IndexOutOfRange("delete_row: index " + std::to_string(i));
  Matrix out(m.rows() - 1, m.cols());
  for (std::size_t r = 1, k = 1; r <= m.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 1; c <= m.cols(); ++c) out(k, c) = m(r, c);
    ++k;
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (const std::size_t v : image_) {
    if (v < 1 || v > image_.size() || seen[v]) throw InvalidSize("permutation image is not a bijection");
    seen[v] = true;
  }
}

Matrix Permutation::to_matrix() const {
  Matrix m(size(), size());
  for (std::size_t j = 1; j <= size(); ++j) m((*this)(j), j) = EisensteinInt::one();
  return m;
}

int Permutation::sign() const {
  // Parity from the cycle decomposition.
  std::vector<bool> visited(size() + 1, false);
  int sign = 1;
  for (std::size_t start = 1; start <= size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t x = start; !visited[x]; x = (*this)(x)) {
      visited[x] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

std::array<std::size_t, 3> residue_class_sizes(std::size_t n) {
  return {(n + 2) / 3, (n + 1) / 3, n / 3};
}

Permutation permutation_P(std::size_t n) {
  if (n < 1) throw InvalidSize("permutation_P: n must be at least 1");
  const auto sizes = residue_class_sizes(n);
  std::vector<std::size_t> image;
  image.reserve(n);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 1; k <= sizes[r]; ++k) image.push_back(3 * k - (2 - r));
  }
  return Permutation(std::move(image));
}

Matrix submatrix(const Matrix& m, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) {
  if (row < 1 || col < 1 || row + rows - 1 > m.rows() || col + cols - 1 > m.cols()) {
    throw IndexOutOfRange("submatrix: block outside the matrix");
  }
  Matrix out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) out(i, j) = m(row + i - 1, col + j - 1);
  }
  return out;
}

BlockGrid conjugate_blocks(const Matrix& m, std::size_t n) {
  if (m.rows() != n || m.cols() != n) throw InvalidSize("conjugate_blocks: matrix is not n×n");
  if (n == 0) return {};
  const Matrix p = permutation_P(n).to_matrix();
  const Matrix conjugated = p.transpose() * m * p;
  const auto sizes = residue_class_sizes(n);
  const std::array<std::size_t, 3> starts{1, 1 + sizes[0], 1 + sizes[0] + sizes[1]};
  BlockGrid grid;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      grid[r][c] = submatrix(conjugated, starts[r], starts[c], sizes[r], sizes[c]);
    }
  }
  return grid;
}

BlockGrid residue_block_assembly(SequenceKind kind, const BigInt& p, std::size_t n, int residue) {
  const BigInt small(static_cast<unsigned long>(n));
  const BigInt large(static_cast<unsigned long>(n + 1));
  auto k = [&](int shift, const BigInt& order) { return k_matrix(kind, BigInt(p + shift), order); };
  auto drop_col = [&](int shift) { return delete_column(k(shift, large), n + 1); };
  auto drop_row = [&](int shift) { return delete_row(k(shift, large), n + 1); };

  switch (residue) {
    case 0:
      return {{{k(0, small), k(1, small), k(2, small)},
               {k(1, small), k(2, small), k(3, small)},
               {k(2, small), k(3, small), k(4, small)}}};
    case 1:
      return {{{k(0, large), drop_col(1), drop_col(2)},
               {drop_row(1), k(2, small), k(3, small)},
               {drop_row(2), k(3, small), k(4, small)}}};
    case 2:
      return {{{k(0, large), k(1, large), drop_col(2)},
               {k(1, large), k(2, large), drop_col(3)},
               {drop_row(2), drop_row(3), k(4, small)}}};
    default:
      throw IndexOutOfRange("residue_block_assembly: residue must be 0, 1 or 2");
  }
}

}  // namespace tmhankel

#include "monoidrep/rational_matrix.hpp"

#include <utility>

#include "monoidrep/errors.hpp"

namespace monoidrep {

namespace {

// Per-row denominator clearing: scaling rows changes neither rank nor
// nullspace, and it lets elimination run over the integers.
std::vector<std::vector<mpz_class>> cleared_copy(const RationalMatrix& a) {
  std::vector<std::vector<mpz_class>> m(a.rows(),
                                        std::vector<mpz_class>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class scale = 1;
    for (int j = 0; j < a.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              a.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < a.cols(); ++j) {
      mpq_class v = a.at(i, j) * scale;
      internal_check(v.get_den() == 1, "denominator clearing failed");
      m[i][j] = v.get_num();
    }
  }
  return m;
}

// Fraction-free forward elimination (Bareiss). Leaves the matrix in
// integer echelon form and returns the pivot columns. Every intermediate
// entry is a minor of the input, which keeps the growth polynomial.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots;
  mpz_class prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m[i][j] = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, mpq_class(0)) {
  internal_check(rows >= 0 && cols >= 0, "negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  internal_check(a.cols() == b.rows(), "matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

int rank(const RationalMatrix& a) {
  auto m = cleared_copy(a);
  return static_cast<int>(bareiss_echelon(m).size());
}

RationalMatrix nullspace(const RationalMatrix& a,
                         std::vector<int>* free_columns) {
  auto m = cleared_copy(a);
  const std::vector<int> pivots = bareiss_echelon(m);
  const int r = static_cast<int>(pivots.size());
  const int cols = a.cols();

  // Reduce the integer echelon rows over the rationals (back
  // substitution from the last pivot up), keeping only pivot rows.
  RationalMatrix e(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = pivots[i]; j < cols; ++j)
      e.at(i, j) = mpq_class(m[i][j]) / m[i][pivots[i]];
  for (int i = r - 1; i >= 0; --i)
    for (int k = 0; k < i; ++k) {
      mpq_class f = e.at(k, pivots[i]);
      if (f == 0) continue;
      for (int j = pivots[i]; j < cols; ++j)
        e.at(k, j) -= f * e.at(i, j);
    }

  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  RationalMatrix basis(cols - r, cols);
  if (free_columns) free_columns->clear();
  int row = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    if (free_columns) free_columns->push_back(f);
    basis.at(row, f) = 1;
    for (int i = 0; i < r; ++i) basis.at(row, pivots[i]) = -e.at(i, f);
    ++row;
  }
  return basis;
}

std::vector<int> rref(RationalMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(row, j));
    mpq_class inv = a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) /= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      mpq_class f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<mpq_class>> solve(const RationalMatrix& a,
                                            const std::vector<mpq_class>& b) {
  internal_check(static_cast<int>(b.size()) == a.rows(),
                 "solve: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<mpq_class> x(a.cols(), mpq_class(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  internal_check(a.rows() == a.cols(), "inverse of a non-square matrix");
  const int n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  internal_check(static_cast<int>(pivots.size()) == n &&
                     (n == 0 || pivots.back() == n - 1),
                 "inverse of a singular matrix");
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace monoidrep

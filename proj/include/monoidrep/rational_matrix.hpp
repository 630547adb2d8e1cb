#pragma once

// Exact rational matrices over GMP. Rank and nullspace run fraction-free
// (Bareiss) elimination on a denominator-cleared integer copy to control
// coefficient growth; the small dense helpers (rref, solve, inverse) work
// directly over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace monoidrep {

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero-filled
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return data_[index(i, j)]; }
  const mpq_class& at(int i, int j) const { return data_[index(i, j)]; }

  bool operator==(const RationalMatrix&) const = default;
  RationalMatrix transposed() const;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

int rank(const RationalMatrix& a);

// Rows of the result form a basis of {v : a·v = 0}, derived from the
// reduced echelon form: one row per free column (ascending), carrying
// entry 1 at that free column and 0 at every other free column. When
// free_columns is given it receives those columns, in basis-row order.
RationalMatrix nullspace(const RationalMatrix& a,
                         std::vector<int>* free_columns = nullptr);

// In-place reduction to reduced row echelon form; returns the pivot
// columns in order. Deterministic: first nonzero entry pivoting.
std::vector<int> rref(RationalMatrix& a);

// One solution of a·x = b with all free variables set to 0, or nullopt
// when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve(const RationalMatrix& a,
                                            const std::vector<mpq_class>& b);

RationalMatrix inverse(const RationalMatrix& a);

}  // namespace monoidrep

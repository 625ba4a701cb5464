#pragma once

// Exact integer linear algebra: dense arbitrary-precision matrices, Smith
// normal form, integer kernels, Diophantine solving and lattice membership.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fibseq {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Shapes with zero rows or columns are
/// legal and carry their dimensions, so block assembly never special-cases
/// rank-0 summands.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Literal helper, mostly for tests: every row must have the same length.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_column(const IntVector& column);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_zero() const;
  bool is_identity() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntVector column(std::size_t j) const;
  void set_column(std::size_t j, const IntVector& values);
  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const IntMatrix& values);
  IntMatrix scaled(const Integer& factor) const;
  /// Largest absolute value of any entry (0 for empty matrices).
  Integer max_abs() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product; basis of A(x)B indexed by i * rows(B) + j.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D in invariant factor form.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SnfDecomposition snf(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> invariant_factors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Columns form a Z-basis of {x : M x = 0}; the kernel is saturated, so the
/// basis extends to a basis of the ambient lattice.
IntMatrix kernel_basis(const IntMatrix& m);

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b);
/// Column-wise solve of M X = B; absent if any column has no integer solution.
std::optional<IntMatrix> solve(const IntMatrix& m, const IntMatrix& b);

bool member_of_span(const IntMatrix& generators, const IntVector& v);
/// True iff every column of `vectors` lies in the Z-span of `generators`.
bool span_contains(const IntMatrix& generators, const IntMatrix& vectors);
bool same_span(const IntMatrix& a, const IntMatrix& b);

/// Linearly independent generators of the column span.
IntMatrix column_span_basis(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// L with L * basis = images, for `basis` whose columns form a basis of a
/// saturated sublattice. Throws Error(NotWellDefined) otherwise.
IntMatrix extend_from_sublattice(const IntMatrix& basis, const IntMatrix& images);

/// Rank of M reduced modulo a prime p.
std::size_t rank_mod_p(const IntMatrix& m, unsigned p);

}  // namespace fibseq

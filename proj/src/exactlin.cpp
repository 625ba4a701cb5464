#include "fibseq/exactlin.hpp"

#include "fibseq/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace fibseq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::InvalidChainMap: return "InvalidChainMap";
    case ErrorCode::MalformedSubquotient: return "MalformedSubquotient";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::Incomposable: return "Incomposable";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::WrongVariant: return "WrongVariant";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotFiberSequence: return "NotFiberSequence";
    case ErrorCode::IncompatibleRestrictions: return "IncompatibleRestrictions";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_column(const IntVector& column) {
  return IntMatrix(column.size(), 1, column);
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x.is_zero(); });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(std::size_t j, const IntVector& values) {
  if (values.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  IntMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& values) {
  if (row0 + values.rows() > rows_ || col0 + values.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < values.cols(); ++j) (*this)(row0 + i, col0 + j) = values(i, j);
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix r = *this;
  for (auto& x : r.entries_) x *= factor;
  return r;
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : entries_) best = std::max(best, Integer(abs(x)));
  return best;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.entries_) x = -x;
  return r;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shapes");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "product of " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x" << b.cols();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Integer& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack rows");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack cols");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "](" << m.rows() << "x" << m.cols() << ")";
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

/// In-place reduction of D to Smith form. Row operations are mirrored into U
/// and column operations into V when tracking is requested, so that
/// U * M * V = D holds throughout.
class SmithReducer {
 public:
  SmithReducer(IntMatrix d, bool track_u, bool track_v)
      : d_(std::move(d)), track_u_(track_u), track_v_(track_v) {
    if (track_u_) u_ = IntMatrix::identity(d_.rows());
    if (track_v_) v_ = IntMatrix::identity(d_.cols());
  }

  void run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_step(t)) break;
      if (d_(t, t) < 0) negate_row(t);
      rank_ = t + 1;
    }
  }

  IntMatrix& d() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  std::size_t rank() const { return rank_; }

 private:
  // Returns false if the trailing submatrix is zero.
  bool reduce_step(std::size_t t) {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    for (;;) {
      // smallest nonzero |entry|, first by row then by column on ties
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& x = d_(i, j);
          if (x.is_zero()) continue;
          Integer ax = abs(x);
          if (pi == m || ax < best) {
            best = std::move(ax);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return false;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      const Integer pivot = d_(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d_(i, t).is_zero()) continue;
        Integer q = d_(i, t) / pivot;
        if (!q.is_zero()) add_row_multiple(i, t, -q);
        if (!d_(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d_(t, j).is_zero()) continue;
        Integer q = d_(t, j) / pivot;
        if (!q.is_zero()) add_col_multiple(j, t, -q);
        if (!d_(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!d_(i, j).is_zero() && Integer(d_(i, j) % pivot) != 0) {
            add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    if (track_u_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    if (track_v_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < d_.cols(); ++j)
      if (!d_(source, j).is_zero()) d_(target, j) += factor * d_(source, j);
    if (track_u_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_(source, j).is_zero()) u_(target, j) += factor * u_(source, j);
  }

  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < d_.rows(); ++i)
      if (!d_(i, source).is_zero()) d_(i, target) += factor * d_(i, source);
    if (track_v_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!v_(i, source).is_zero()) v_(i, target) += factor * v_(i, source);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    if (track_u_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix d_, u_, v_;
  bool track_u_, track_v_;
  std::size_t rank_ = 0;
};

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  SmithReducer r(m, true, true);
  r.run();
  return {std::move(r.u()), std::move(r.d()), std::move(r.v()), r.rank()};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  SmithReducer r(m, false, false);
  r.run();
  std::vector<Integer> out;
  out.reserve(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.d()(i, i));
  return out;
}

std::size_t rank(const IntMatrix& m) {
  // Rank over Q equals rank modulo a large prime for all but finitely many
  // primes; the Smith reduction gives it exactly.
  SmithReducer r(m, false, false);
  r.run();
  return r.rank();
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithReducer r(m, false, true);
  r.run();
  const std::size_t n = m.cols();
  return r.v().block(0, r.rank(), n, n - r.rank());
}

namespace {

std::optional<IntMatrix> solve_with(const SnfDecomposition& s, const IntMatrix& b) {
  const IntMatrix ub = s.U * b;
  const std::size_t n = s.V.rows();
  IntMatrix y(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      if (i < s.rank) {
        const Integer& di = s.D(i, i);
        if (Integer(ub(i, c) % di) != 0) return std::nullopt;
        y(i, c) = ub(i, c) / di;
      } else if (!ub(i, c).is_zero()) {
        return std::nullopt;
      }
    }
  }
  return s.V * y;
}

}  // namespace

std::optional<IntMatrix> solve(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side rows");
  if (b.cols() == 0) return IntMatrix(m.cols(), 0);
  return solve_with(snf(m), b);
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b) {
  auto x = solve(m, IntMatrix::from_column(b));
  if (!x) return std::nullopt;
  return x->column(0);
}

bool member_of_span(const IntMatrix& generators, const IntVector& v) {
  return solve(generators, v).has_value();
}

bool span_contains(const IntMatrix& generators, const IntMatrix& vectors) {
  if (vectors.cols() == 0) return true;
  return solve(generators, vectors).has_value();
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && span_contains(a, b) && span_contains(b, a);
}

IntMatrix column_span_basis(const IntMatrix& m) {
  // M V = U^-1 D, so the first rank columns of M V span the column space.
  SmithReducer r(m, false, true);
  r.run();
  const IntMatrix mv = m * r.v();
  return mv.block(0, 0, m.rows(), r.rank());
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const auto f = invariant_factors(m);
  return f.size() == m.rows() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

IntMatrix extend_from_sublattice(const IntMatrix& basis, const IntMatrix& images) {
  if (images.cols() != basis.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "extend_from_sublattice: one image per basis vector");
  }
  const std::size_t m = basis.rows();
  const std::size_t k = basis.cols();
  const SnfDecomposition s = snf(basis);
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= s.rank || s.D(i, i) != 1) {
      throw Error(ErrorCode::NotWellDefined, "sublattice is not saturated or basis is dependent");
    }
  }
  // U Z V = [I; 0], hence with W = U^-1 diag(V^-1, I) the first k columns of
  // W are Z and W^-1 = diag(V, I) U.
  IntMatrix padded(images.rows(), m);
  padded.set_block(0, 0, images * s.V);
  return padded * s.U;
}

std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  const long long mod = p;
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer r = m(i, j) % mod;
      if (r < 0) r += mod;
      a[i][j] = r.convert_to<long long>();
    }
  auto inverse = [mod](long long x) {
    long long result = 1, base = x, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    const long long inv = inverse(a[r][c]);
    for (auto& x : a[r]) x = x * inv % mod;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long long f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % mod + mod) % mod;
    }
    ++r;
  }
  return r;
}

}  // namespace fibseq

#include "fibseq/modelcat.hpp"

#include "fibseq/error.hpp"

#include <algorithm>

namespace fibseq {

bool is_surjective(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  const auto f = invariant_factors(m);
  return f.size() == m.rows() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

bool is_fibration(const ChainMap& f) {
  const bool nonneg =
      f.source().variant() == Variant::NonNegative && f.target().variant() == Variant::NonNegative;
  for (const auto& [n, r] : f.target().ranks()) {
    (void)r;
    if (nonneg && n < 1) continue;
    if (!is_surjective(f.at(n))) return false;
  }
  return true;
}

bool is_acyclic(const ChainComplex& c) { return has_vanishing_homology(c); }

namespace {

bool same_complex_data(const ChainComplex& a, const ChainComplex& b) {
  return a.ranks() == b.ranks() && a.diffs() == b.diffs();
}

}  // namespace

Pullback pullback(const ChainMap& g, const ChainMap& f) {
  if (!same_complex_data(f.target(), g.target())) {
    throw Error(ErrorCode::Incomposable, "pullback legs have different targets");
  }
  const ChainComplex& b = f.source();
  const ChainComplex& c = g.source();
  const auto [lo, hi] = degree_span(b, c);

  Pullback out;
  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    IntMatrix basis = kernel_basis(hstack(f.at(n), -g.at(n)));
    ranks[n] = basis.cols();
    out.basis.emplace(n, std::move(basis));
  }
  auto basis_at = [&](int n) {
    auto it = out.basis.find(n);
    return it == out.basis.end() ? IntMatrix(b.rank(n) + c.rank(n), 0) : it->second;
  };
  std::map<int, IntMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const IntMatrix image = block_diag(b.d(n), c.d(n)) * basis_at(n);
    auto coords = solve(basis_at(n - 1), image);
    if (!coords) throw std::logic_error("pullback: differential leaves the kernel");
    diffs[n] = std::move(*coords);
  }
  const Variant variant = (b.variant() == Variant::NonNegative && c.variant() == Variant::NonNegative)
                              ? Variant::NonNegative
                              : Variant::Unbounded;
  out.complex = ChainComplex(std::move(ranks), std::move(diffs), variant);

  std::map<int, IntMatrix> pb, pc;
  for (const auto& [n, k] : out.basis) {
    pb[n] = k.block(0, 0, b.rank(n), k.cols());
    pc[n] = k.block(b.rank(n), 0, c.rank(n), k.cols());
  }
  out.to_b = ChainMap::trusted(out.complex, b, std::move(pb));
  out.to_c = ChainMap::trusted(out.complex, c, std::move(pc));
  out.f = f;
  out.g = g;
  return out;
}

ChainMap universal_map(const Pullback& p, const ChainMap& u, const ChainMap& v) {
  const ChainComplex& x = u.source();
  const auto [lo, hi] = degree_span(x, p.complex);
  for (int n = lo; n <= hi; ++n) {
    if (!(p.f.at(n) * u.at(n) == p.g.at(n) * v.at(n))) {
      throw Error(ErrorCode::NotCommuting, "f u != g v at degree " + std::to_string(n));
    }
  }
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : x.ranks()) {
    (void)r;
    auto it = p.basis.find(n);
    if (it == p.basis.end()) continue;
    auto coords = solve(it->second, vstack(u.at(n), v.at(n)));
    if (!coords) throw std::logic_error("universal_map: cone does not factor through the pullback");
    comps[n] = std::move(*coords);
  }
  return ChainMap::trusted(x, p.complex, std::move(comps));
}

PathObject path_object(const ChainComplex& b) {
  const ChainComplex bu = with_variant(b, Variant::Unbounded);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  std::map<int, IntMatrix> s, p0, p1;
  if (!bu.is_zero()) {
    const int lo = bu.min_degree() - 1;
    const int hi = bu.max_degree();
    auto r = [&](int n) { return 2 * bu.rank(n) + bu.rank(n + 1); };
    for (int n = lo; n <= hi; ++n) ranks[n] = r(n);
    for (int n = lo + 1; n <= hi; ++n) {
      const std::size_t bn = bu.rank(n), bm = bu.rank(n - 1);
      IntMatrix d(r(n - 1), r(n));
      d.set_block(0, 0, bu.d(n));
      d.set_block(bm, bn, bu.d(n));
      d.set_block(2 * bm, 0, IntMatrix::identity(bn));
      d.set_block(2 * bm, bn, -IntMatrix::identity(bn));
      d.set_block(2 * bm, 2 * bn, -bu.d(n + 1));
      diffs[n] = std::move(d);
    }
    for (const auto& [n, rb] : bu.ranks()) {
      IntMatrix sec(r(n), rb);
      sec.set_block(0, 0, IntMatrix::identity(rb));
      sec.set_block(rb, 0, IntMatrix::identity(rb));
      s[n] = std::move(sec);
      IntMatrix e0(rb, r(n)), e1(rb, r(n));
      e0.set_block(0, 0, IntMatrix::identity(rb));
      e1.set_block(0, rb, IntMatrix::identity(rb));
      p0[n] = std::move(e0);
      p1[n] = std::move(e1);
    }
  }
  ChainComplex pb(std::move(ranks), std::move(diffs), Variant::Unbounded);
  PathObject out{pb, ChainMap::trusted(b, pb, std::move(s)), ChainMap::trusted(pb, b, std::move(p0)),
                 ChainMap::trusted(pb, b, std::move(p1))};
  if (b.variant() == Variant::NonNegative) {
    const Truncation t = truncate_nonnegative(pb);
    out.section = corestrict(out.section, t);
    out.end0 = compose(out.end0, t.inclusion);
    out.end1 = compose(out.end1, t.inclusion);
    out.complex = t.complex;
  }
  return out;
}

Factorization factor_we_fib(const ChainMap& f) {
  Factorization out;
  out.path = path_object(f.target());
  out.pf = pullback(out.path.end0, f);
  out.p = compose(out.path.end1, out.pf.to_c);
  out.w = universal_map(out.pf, identity_map(f.source()), compose(out.path.section, f));
  return out;
}

void CommSquare::validate() const {
  const ChainMap lhs = compose(right, top);
  const ChainMap rhs = compose(bottom, left);
  if (!same_complex_data(lhs.source(), rhs.source()) || !same_complex_data(lhs.target(), rhs.target())) {
    throw Error(ErrorCode::Incomposable, "square corners do not match");
  }
  const auto [lo, hi] = degree_span(lhs.source(), lhs.target());
  for (int n = lo; n <= hi; ++n) {
    if (!(lhs.at(n) == rhs.at(n))) {
      throw Error(ErrorCode::NotCommuting, "square does not commute at degree " + std::to_string(n));
    }
  }
}

ModelSquareWitness is_model_square(const CommSquare& s) {
  s.validate();
  ModelSquareWitness w;
  w.factorization = factor_we_fib(s.right);
  w.pullback = pullback(s.bottom, w.factorization.p);
  w.universal = universal_map(w.pullback, compose(w.factorization.w, s.top), s.left);
  w.verdict = is_quasi_iso(w.universal);
  return w;
}

bool is_homotopy_fiber_sequence(const CommSquare& s) {
  return is_acyclic(s.left.target()) && is_model_square(s).verdict;
}

}  // namespace fibseq

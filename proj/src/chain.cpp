#include "fibseq/chain.hpp"

#include "fibseq/error.hpp"

#include <algorithm>
#include <sstream>

namespace fibseq {

const char* to_string(Variant v) { return v == Variant::Unbounded ? "unbounded" : "nonnegative"; }

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ChainComplex::ChainComplex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> diffs, Variant variant)
    : variant_(variant) {
  for (const auto& [n, r] : ranks) {
    if (r == 0) continue;
    if (variant == Variant::NonNegative && n < 0) {
      throw Error(ErrorCode::NegativeDegree,
                  "nonnegative complex has a module in degree " + std::to_string(n));
    }
    ranks_[n] = r;
  }
  for (auto& [n, m] : diffs) {
    if (m.rows() != rank(n - 1) || m.cols() != rank(n)) {
      throw Error(ErrorCode::InvalidComplex, "d_" + std::to_string(n) + " has shape " + shape(m) +
                                                 ", expected " + std::to_string(rank(n - 1)) + "x" +
                                                 std::to_string(rank(n)));
    }
    if (!m.is_zero()) diffs_.emplace(n, std::move(m));
  }
  for (const auto& [n, m] : diffs_) {
    auto below = diffs_.find(n - 1);
    if (below != diffs_.end() && !(below->second * m).is_zero()) {
      throw Error(ErrorCode::InvalidComplex,
                  "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0 at degree " + std::to_string(n));
    }
  }
}

std::size_t ChainComplex::rank(int n) const {
  auto it = ranks_.find(n);
  return it == ranks_.end() ? 0 : it->second;
}

IntMatrix ChainComplex::d(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return IntMatrix(rank(n - 1), rank(n));
}

int ChainComplex::min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
int ChainComplex::max_degree() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

ChainComplex with_variant(const ChainComplex& c, Variant variant) {
  if (c.variant() == variant) return c;
  return ChainComplex(c.ranks(), c.diffs(), variant);
}

// ---------------------------------------------------------------------------

std::pair<int, int> degree_span(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_zero() && b.is_zero()) return {0, -1};
  if (a.is_zero()) return {b.min_degree(), b.max_degree()};
  if (b.is_zero()) return {a.min_degree(), a.max_degree()};
  return {std::min(a.min_degree(), b.min_degree()), std::max(a.max_degree(), b.max_degree())};
}

ChainMap ChainMap::trusted(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components) {
  ChainMap f;
  for (auto& [n, m] : components) {
    if (m.rows() != target.rank(n) || m.cols() != source.rank(n)) {
      throw Error(ErrorCode::InvalidChainMap, "component f_" + std::to_string(n) + " has shape " + shape(m) +
                                                  ", expected " + std::to_string(target.rank(n)) + "x" +
                                                  std::to_string(source.rank(n)));
    }
    if (!m.is_zero()) f.components_.emplace(n, std::move(m));
  }
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  return f;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components)
    : ChainMap(trusted(std::move(source), std::move(target), std::move(components))) {
  const auto [lo, hi] = degree_span(source_, target_);
  for (int n = lo; n <= hi + 1; ++n) {
    if (!(target_.d(n) * at(n) == at(n - 1) * source_.d(n))) {
      throw Error(ErrorCode::InvalidChainMap, "d f != f d at degree " + std::to_string(n));
    }
  }
}

IntMatrix ChainMap::at(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return IntMatrix(target_.rank(n), source_.rank(n));
}

// ---------------------------------------------------------------------------

ChainComplex shift(const ChainComplex& a, int p) {
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, r] : a.ranks()) ranks[n + p] = r;
  for (const auto& [n, m] : a.diffs()) diffs[n + p] = (p % 2 == 0) ? m : -m;
  if (a.variant() == Variant::NonNegative && !a.is_zero() && a.min_degree() + p < 0) {
    throw Error(ErrorCode::NegativeDegree, "shift by " + std::to_string(p) + " leaves the nonnegative range");
  }
  return ChainComplex(std::move(ranks), std::move(diffs), a.variant());
}

ChainMap shift_map(const ChainMap& f, int p) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components()) comps[n + p] = m;
  return ChainMap::trusted(shift(f.source(), p), shift(f.target(), p), std::move(comps));
}

namespace {

Variant joint_variant(const ChainComplex& a, const ChainComplex& b) {
  return (a.variant() == Variant::NonNegative && b.variant() == Variant::NonNegative) ? Variant::NonNegative
                                                                                      : Variant::Unbounded;
}

}  // namespace

MappingCone mapping_cone(const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const Variant variant = joint_variant(a, b);
  auto [lo, hi] = degree_span(shift(with_variant(a, Variant::Unbounded), 1), b);

  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks[n] = a.rank(n - 1) + b.rank(n);
  std::map<int, IntMatrix> diffs;
  for (int n = lo; n <= hi + 1; ++n) {
    IntMatrix d(a.rank(n - 2) + b.rank(n - 1), a.rank(n - 1) + b.rank(n));
    d.set_block(0, 0, -a.d(n - 1));
    d.set_block(a.rank(n - 2), 0, f.at(n - 1));
    d.set_block(a.rank(n - 2), a.rank(n - 1), b.d(n));
    diffs[n] = std::move(d);
  }
  ChainComplex cone(ranks, std::move(diffs), variant);

  std::map<int, IntMatrix> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    IntMatrix i(cone.rank(n), b.rank(n));
    i.set_block(a.rank(n - 1), 0, IntMatrix::identity(b.rank(n)));
    inc[n] = std::move(i);
    IntMatrix p(a.rank(n - 1), cone.rank(n));
    p.set_block(0, 0, IntMatrix::identity(a.rank(n - 1)));
    proj[n] = std::move(p);
  }
  ChainComplex a1 = with_variant(shift(with_variant(a, Variant::Unbounded), 1), variant);
  MappingCone out{cone, ChainMap::trusted(b, cone, std::move(inc)), ChainMap{}};
  out.projection = ChainMap::trusted(cone, std::move(a1), std::move(proj));
  return out;
}

// ---------------------------------------------------------------------------

Subquotient homology(const ChainComplex& a, int n) {
  return Subquotient::trusted(a.rank(n), kernel_basis(a.d(n)), a.d(n + 1));
}

FgAbelianGroup homology_group(const ChainComplex& a, int n) {
  // ker d_n is a direct summand, so the torsion of H_n is read off the
  // invariant factors of d_{n+1} alone.
  const std::size_t r_out = rank(a.d(n));
  const auto factors = invariant_factors(a.d(n + 1));
  FgAbelianGroup g;
  g.free_rank = a.rank(n) - r_out - factors.size();
  for (const auto& f : factors)
    if (f != 1) g.torsion.push_back(f);
  return g;
}

std::map<int, FgAbelianGroup> homology_table(const ChainComplex& a) {
  std::map<int, FgAbelianGroup> out;
  for (const auto& [n, r] : a.ranks()) {
    auto g = homology_group(a, n);
    if (!g.is_trivial()) out.emplace(n, std::move(g));
  }
  return out;
}

SubquotientHom induced_on_homology(const ChainMap& f, int n) {
  return induced(f.at(n), homology(f.source(), n), homology(f.target(), n));
}

bool has_vanishing_homology(const ChainComplex& a) {
  std::map<int, std::vector<Integer>> factors;
  for (const auto& [n, m] : a.diffs()) factors[n] = invariant_factors(m);
  auto rank_of = [&](int n) -> std::size_t {
    auto it = factors.find(n);
    return it == factors.end() ? 0 : it->second.size();
  };
  for (const auto& [n, r] : a.ranks()) {
    if (r != rank_of(n) + rank_of(n + 1)) return false;
  }
  for (const auto& [n, fs] : factors)
    for (const auto& x : fs)
      if (x != 1) return false;
  return true;
}

bool is_quasi_iso(const ChainMap& f) { return has_vanishing_homology(mapping_cone(f).cone); }

bool is_quasi_iso_degreewise(const ChainMap& f) {
  const auto [lo, hi] = degree_span(f.source(), f.target());
  for (int n = lo; n <= hi; ++n)
    if (!is_isomorphism(induced_on_homology(f, n))) return false;
  return true;
}

ChainComplex sphere(int n, Variant variant) { return ChainComplex({{n, 1}}, {}, variant); }

ChainComplex disk(int n, Variant variant) {
  return ChainComplex({{n, 1}, {n - 1, 1}}, {{n, IntMatrix::identity(1)}}, variant);
}

// ---------------------------------------------------------------------------

DirectSum direct_sum(const ChainComplex& a, const ChainComplex& b) {
  std::map<int, std::size_t> ranks;
  for (const auto& [n, r] : a.ranks()) ranks[n] += r;
  for (const auto& [n, r] : b.ranks()) ranks[n] += r;
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, r] : ranks) {
    (void)r;
    diffs[n] = block_diag(a.d(n), b.d(n));
  }
  ChainComplex sum(ranks, std::move(diffs), joint_variant(a, b));
  std::map<int, IntMatrix> i1, i2, p1, p2;
  for (const auto& [n, r] : ranks) {
    (void)r;
    const std::size_t ra = a.rank(n), rb = b.rank(n);
    i1[n] = vstack(IntMatrix::identity(ra), IntMatrix(rb, ra));
    i2[n] = vstack(IntMatrix(ra, rb), IntMatrix::identity(rb));
    p1[n] = hstack(IntMatrix::identity(ra), IntMatrix(ra, rb));
    p2[n] = hstack(IntMatrix(rb, ra), IntMatrix::identity(rb));
  }
  return {sum,
          ChainMap::trusted(a, sum, std::move(i1)),
          ChainMap::trusted(b, sum, std::move(i2)),
          ChainMap::trusted(sum, a, std::move(p1)),
          ChainMap::trusted(sum, b, std::move(p2))};
}

ChainMap direct_sum_map(const ChainMap& f, const ChainMap& g) {
  const ChainComplex src = direct_sum(f.source(), g.source()).sum;
  const ChainComplex tgt = direct_sum(f.target(), g.target()).sum;
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : src.ranks()) {
    (void)r;
    comps[n] = block_diag(f.at(n), g.at(n));
  }
  return ChainMap::trusted(src, tgt, std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target().ranks() == g.source().ranks() && f.target().diffs() == g.source().diffs())) {
    throw Error(ErrorCode::Incomposable, "target of the first map differs from the source of the second");
  }
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components()) comps[n] = g.at(n) * m;
  return ChainMap::trusted(f.source(), g.target(), std::move(comps));
}

ChainMap identity_map(const ChainComplex& a) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : a.ranks()) comps[n] = IntMatrix::identity(r);
  return ChainMap::trusted(a, a, std::move(comps));
}

ChainMap zero_map(const ChainComplex& a, const ChainComplex& b) { return ChainMap::trusted(a, b, {}); }

ChainMap add(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorCode::DimensionMismatch, "sum of maps with different endpoints");
  }
  std::map<int, IntMatrix> comps;
  const auto [lo, hi] = degree_span(f.source(), f.target());
  for (int n = lo; n <= hi; ++n) comps[n] = f.at(n) + g.at(n);
  return ChainMap::trusted(f.source(), f.target(), std::move(comps));
}

ChainMap negate(const ChainMap& f) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components()) comps[n] = -m;
  return ChainMap::trusted(f.source(), f.target(), std::move(comps));
}

// ---------------------------------------------------------------------------

std::size_t homology_dim_mod_p(const ChainComplex& a, int n, unsigned p) {
  return a.rank(n) - rank_mod_p(a.d(n), p) - rank_mod_p(a.d(n + 1), p);
}

std::map<int, std::size_t> betti_numbers_mod_p(const ChainComplex& a, unsigned p) {
  std::map<int, std::size_t> out;
  for (const auto& [n, r] : a.ranks()) {
    (void)r;
    const std::size_t b = homology_dim_mod_p(a, n, p);
    if (b != 0) out[n] = b;
  }
  return out;
}

long long euler_characteristic(const ChainComplex& a) {
  long long chi = 0;
  for (const auto& [n, r] : a.ranks()) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
  return chi;
}

// ---------------------------------------------------------------------------

Truncation truncate_nonnegative(const ChainComplex& c) {
  const IntMatrix basis = kernel_basis(c.d(0));
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, r] : c.ranks())
    if (n >= 1) ranks[n] = r;
  ranks[0] = basis.cols();
  for (const auto& [n, m] : c.diffs())
    if (n >= 2) diffs[n] = m;
  auto d1 = solve(basis, c.d(1));
  if (!d1) throw std::logic_error("truncation: d_1 does not land in ker d_0");
  diffs[1] = std::move(*d1);
  ChainComplex t(std::move(ranks), std::move(diffs), Variant::NonNegative);

  std::map<int, IntMatrix> inc;
  for (const auto& [n, r] : t.ranks()) inc[n] = n == 0 ? basis : IntMatrix::identity(r);
  ChainMap inclusion = ChainMap::trusted(t, c, std::move(inc));
  return {std::move(t), std::move(inclusion), basis};
}

ChainMap truncate_map(const ChainMap& f, const Truncation& src, const Truncation& tgt) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components())
    if (n >= 1) comps[n] = m;
  auto f0 = solve(tgt.degree0_basis, f.at(0) * src.degree0_basis);
  if (!f0) throw std::logic_error("truncate_map: degree-0 cycles not preserved");
  comps[0] = std::move(*f0);
  return ChainMap::trusted(src.complex, tgt.complex, std::move(comps));
}

ChainMap corestrict(const ChainMap& f, const Truncation& tgt) {
  if (!f.source().is_zero() && f.source().min_degree() < 0) {
    throw Error(ErrorCode::NegativeDegree, "corestriction needs a source in nonnegative degrees");
  }
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components())
    if (n >= 1) comps[n] = m;
  auto f0 = solve(tgt.degree0_basis, f.at(0));
  if (!f0) throw std::logic_error("corestrict: degree-0 image leaves ker d_0");
  comps[0] = std::move(*f0);
  return ChainMap::trusted(f.source(), tgt.complex, std::move(comps));
}

std::map<int, IntMatrix> contracting_homotopy(const ChainComplex& c) {
  std::map<int, IntMatrix> s;
  if (c.is_zero()) return s;
  IntMatrix previous(c.rank(c.min_degree()), c.rank(c.min_degree() - 1));  // s_{n-1}
  for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
    const IntMatrix rhs = IntMatrix::identity(c.rank(n)) - previous * c.d(n);
    auto sn = solve(c.d(n + 1), rhs);
    if (!sn) throw Error(ErrorCode::NotAcyclic, "no contraction at degree " + std::to_string(n));
    s[n] = *sn;
    previous = std::move(*sn);
  }
  return s;
}

}  // namespace fibseq

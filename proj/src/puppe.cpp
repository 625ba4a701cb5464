#include "fibseq/puppe.hpp"

#include "fibseq/error.hpp"

#include <future>

namespace fibseq {

ChainMap as_unbounded(const ChainMap& f) {
  return ChainMap::trusted(with_variant(f.source(), Variant::Unbounded),
                           with_variant(f.target(), Variant::Unbounded), f.components());
}

ChainMap with_endpoints(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  return ChainMap::trusted(source, target, f.components());
}

Variant variant_of(const ChainMap& f) {
  return (f.source().variant() == Variant::NonNegative && f.target().variant() == Variant::NonNegative)
             ? Variant::NonNegative
             : Variant::Unbounded;
}

namespace {

// ----- unbounded building blocks ------------------------------------------

ChainComplex unbounded(const ChainComplex& c) { return with_variant(c, Variant::Unbounded); }

HomotopyKernel kernel_unbounded(const ChainMap& f0) {
  const ChainMap f = as_unbounded(f0);
  const MappingCone mc = mapping_cone(f);
  HomotopyKernel k;
  k.complex = shift(mc.cone, -1);
  k.projection = with_endpoints(shift_map(mc.projection, -1), k.complex, f.source());
  const PathSpace py = path0(f.target());
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : k.complex.ranks()) {
    (void)r;
    comps[n] = block_diag(f.at(n), IntMatrix::identity(f.target().rank(n + 1)));
  }
  k.to_path = ChainMap::trusted(k.complex, py.complex, std::move(comps));
  return k;
}

ChainMap connecting_unbounded(const ChainMap& f0) {
  const ChainMap f = as_unbounded(f0);
  const MappingCone mc = mapping_cone(f);
  return shift_map(mc.inclusion, -1);
}

ChainMap path_to_kernel_unbounded(const ChainMap& f0) {
  const ChainMap f = as_unbounded(f0);
  const PathSpace px = path0(f.source());
  const HomotopyKernel k = kernel_unbounded(f);
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : px.complex.ranks()) {
    (void)r;
    comps[n] = block_diag(IntMatrix::identity(f.source().rank(n)), f.at(n + 1));
  }
  return ChainMap::trusted(px.complex, k.complex, std::move(comps));
}

ChainMap loop_inclusion_unbounded(const ChainComplex& x0) {
  const ChainComplex x = unbounded(x0);
  const ChainComplex lx = shift(x, -1);
  const PathSpace px = path0(x);
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : lx.ranks()) comps[n] = vstack(IntMatrix(x.rank(n), r), IntMatrix::identity(r));
  return ChainMap::trusted(lx, px.complex, std::move(comps));
}

void require(Variant expected, const ChainComplex& c, const char* what) {
  if (c.variant() != expected) {
    throw Error(ErrorCode::WrongVariant, std::string(what) + " expects a " + to_string(expected) + " complex");
  }
}

}  // namespace

// ----- public free functions ----------------------------------------------

PathSpace path0(const ChainComplex& b0) {
  const ChainComplex b = unbounded(b0);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  std::map<int, IntMatrix> proj;
  if (!b.is_zero()) {
    const int lo = b.min_degree() - 1, hi = b.max_degree();
    auto r = [&](int n) { return b.rank(n) + b.rank(n + 1); };
    for (int n = lo; n <= hi; ++n) {
      ranks[n] = r(n);
      proj[n] = hstack(IntMatrix::identity(b.rank(n)), IntMatrix(b.rank(n), b.rank(n + 1)));
    }
    for (int n = lo + 1; n <= hi; ++n) {
      IntMatrix d(r(n - 1), r(n));
      d.set_block(0, 0, b.d(n));
      d.set_block(b.rank(n - 1), 0, -IntMatrix::identity(b.rank(n)));
      d.set_block(b.rank(n - 1), b.rank(n), -b.d(n + 1));
      diffs[n] = std::move(d);
    }
  }
  ChainComplex p(std::move(ranks), std::move(diffs));
  return {p, ChainMap::trusted(p, b0, std::move(proj))};
}

ChainMap path0_map(const ChainMap& f) {
  const PathSpace pa = path0(f.source());
  const PathSpace pb = path0(f.target());
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : pa.complex.ranks()) {
    (void)r;
    comps[n] = block_diag(f.at(n), f.at(n + 1));
  }
  return ChainMap::trusted(pa.complex, pb.complex, std::move(comps));
}

PathSpace trath0(const ChainComplex& b) {
  require(Variant::NonNegative, b, "trath0");
  const PathSpace p = path0(b);
  const Truncation t = truncate_nonnegative(p.complex);
  return {t.complex, compose(p.projection, t.inclusion)};
}

ChainComplex loop(const ChainComplex& b) {
  require(Variant::Unbounded, b, "loop");
  return shift(b, -1);
}

ChainMap loop_map(const ChainMap& f) {
  require(Variant::Unbounded, f.source(), "loop_map");
  require(Variant::Unbounded, f.target(), "loop_map");
  return shift_map(f, -1);
}

ChainComplex loop_nn(const ChainComplex& b) {
  require(Variant::NonNegative, b, "loop_nn");
  return truncate_nonnegative(shift(unbounded(b), -1)).complex;
}

ChainMap loop_nn_map(const ChainMap& f) {
  require(Variant::NonNegative, f.source(), "loop_nn_map");
  require(Variant::NonNegative, f.target(), "loop_nn_map");
  const ChainMap shifted = shift_map(as_unbounded(f), -1);
  return truncate_map(shifted, truncate_nonnegative(shifted.source()), truncate_nonnegative(shifted.target()));
}

HomotopyKernel homotopy_kernel(const ChainMap& f) { return default_path_functor(variant_of(f)).kernel(f); }

ChainMap connecting(const ChainMap& f) { return default_path_functor(variant_of(f)).connecting(f); }

// ----- functor instances ------------------------------------------------------

namespace {

class PointedPathFunctor final : public BasedPathFunctor {
 public:
  std::string name() const override { return "pointed"; }
  Variant variant() const override { return Variant::Unbounded; }
  PathSpace path(const ChainComplex& b) const override { return path0(b); }
  ChainMap path_map(const ChainMap& f) const override { return path0_map(f); }
  ChainComplex loop(const ChainComplex& b) const override { return fibseq::loop(b); }
  ChainMap loop_map(const ChainMap& f) const override { return fibseq::loop_map(f); }
  HomotopyKernel kernel(const ChainMap& f) const override {
    HomotopyKernel k = kernel_unbounded(f);
    k.projection = with_endpoints(k.projection, k.complex, f.source());
    return k;
  }
  ChainMap connecting(const ChainMap& f) const override { return connecting_unbounded(f); }
  ChainMap path_to_kernel(const ChainMap& f) const override { return path_to_kernel_unbounded(f); }
  ChainMap loop_inclusion(const ChainComplex& x) const override { return loop_inclusion_unbounded(x); }
};

class TruncatedPathFunctor final : public BasedPathFunctor {
 public:
  std::string name() const override { return "truncated"; }
  Variant variant() const override { return Variant::NonNegative; }
  PathSpace path(const ChainComplex& b) const override { return trath0(b); }
  ChainMap path_map(const ChainMap& f) const override {
    const ChainMap pf = path0_map(f);
    return truncate_map(pf, truncate_nonnegative(pf.source()), truncate_nonnegative(pf.target()));
  }
  ChainComplex loop(const ChainComplex& b) const override { return loop_nn(b); }
  ChainMap loop_map(const ChainMap& f) const override { return loop_nn_map(f); }
  HomotopyKernel kernel(const ChainMap& f) const override {
    require(Variant::NonNegative, f.source(), "truncated kernel");
    require(Variant::NonNegative, f.target(), "truncated kernel");
    const HomotopyKernel k = kernel_unbounded(f);
    const Truncation tk = truncate_nonnegative(k.complex);
    const Truncation tp = truncate_nonnegative(k.to_path.target());
    HomotopyKernel out;
    out.complex = tk.complex;
    out.projection = with_endpoints(compose(k.projection, tk.inclusion), tk.complex, f.source());
    out.to_path = truncate_map(k.to_path, tk, tp);
    return out;
  }
  ChainMap connecting(const ChainMap& f) const override {
    const ChainMap d = connecting_unbounded(f);
    return truncate_map(d, truncate_nonnegative(d.source()), truncate_nonnegative(d.target()));
  }
  ChainMap path_to_kernel(const ChainMap& f) const override {
    const ChainMap m = path_to_kernel_unbounded(f);
    return truncate_map(m, truncate_nonnegative(m.source()), truncate_nonnegative(m.target()));
  }
  ChainMap loop_inclusion(const ChainComplex& x) const override {
    const ChainMap m = loop_inclusion_unbounded(x);
    return truncate_map(m, truncate_nonnegative(m.source()), truncate_nonnegative(m.target()));
  }
};

}  // namespace

const BasedPathFunctor& pointed_path_functor() {
  static const PointedPathFunctor instance;
  return instance;
}

const BasedPathFunctor& truncated_path_functor() {
  static const TruncatedPathFunctor instance;
  return instance;
}

const BasedPathFunctor& default_path_functor(Variant v) {
  return v == Variant::NonNegative ? truncated_path_functor() : pointed_path_functor();
}

// ----- long sequences ---------------------------------------------------------

namespace {

void check_depth(std::size_t depth) {
  if (depth < 2) throw Error(ErrorCode::DimensionMismatch, "a long fiber sequence needs depth >= 2");
}

ChainMap adapt(const ChainMap& f, const BasedPathFunctor& functor) {
  if (functor.variant() == Variant::Unbounded) return as_unbounded(f);
  if (variant_of(f) != Variant::NonNegative) {
    throw Error(ErrorCode::WrongVariant, functor.name() + " path functor needs a map of nonnegative complexes");
  }
  return f;
}

}  // namespace

LongFiberSequence puppe_sequence(const ChainMap& f0, std::size_t depth, const BasedPathFunctor& functor) {
  check_depth(depth);
  const ChainMap f = adapt(f0, functor);
  LongFiberSequence s;
  s.provenance = Provenance::Puppe;
  s.functor = functor.name();
  const HomotopyKernel k = functor.kernel(f);

  s.nodes = {f.target(), f.source(), k.complex};
  s.arrows = {f, k.projection, functor.connecting(f)};
  const PathSpace py = functor.path(f.target());
  const ChainComplex zero = ChainComplex::zero(functor.variant());
  s.corners = {
      Corner{py.complex, k.to_path, py.projection},
      Corner{zero, zero_map(functor.loop(f.target()), zero), zero_map(zero, f.source())},
      Corner{functor.path(f.source()).complex, functor.loop_inclusion(f.source()), functor.path_to_kernel(f)},
  };

  while (s.nodes.size() < depth) s.nodes.push_back(functor.loop(s.nodes[s.nodes.size() - 3]));
  s.nodes.resize(depth);
  while (s.arrows.size() < depth - 1) s.arrows.push_back(functor.loop_map(s.arrows[s.arrows.size() - 3]));
  s.arrows.resize(depth - 1);
  while (s.corners.size() < depth - 2) {
    const Corner& c = s.corners[s.corners.size() - 3];
    s.corners.push_back(Corner{functor.loop(c.complex), functor.loop_map(c.left), functor.loop_map(c.bottom)});
  }
  s.corners.resize(depth - 2);
  return s;
}

LongFiberSequence puppe_sequence(const ChainMap& f, std::size_t depth) {
  return puppe_sequence(f, depth, default_path_functor(variant_of(f)));
}

LongFiberSequence extend_E(const ChainMap& f0, std::size_t depth, const BasedPathFunctor& functor) {
  check_depth(depth);
  const ChainMap f = adapt(f0, functor);
  LongFiberSequence s;
  s.provenance = Provenance::EFunctor;
  s.functor = functor.name();
  const Factorization fac = factor_we_fib(f);
  s.nodes = {f.target(), fac.pf.complex};
  s.arrows = {fac.p};
  s.link = fac.w;
  for (std::size_t n = 1; n + 1 < depth; ++n) {
    const PathSpace path = functor.path(s.nodes[n - 1]);
    const Pullback pb = pullback(path.projection, s.arrows[n - 1]);
    s.nodes.push_back(pb.complex);
    s.arrows.push_back(pb.to_b);
    s.corners.push_back(Corner{path.complex, pb.to_c, path.projection});
  }
  return s;
}

LongFiberSequence extend_E(const ChainMap& f, std::size_t depth) {
  return extend_E(f, depth, default_path_functor(variant_of(f)));
}

std::vector<bool> verify_triples(const LongFiberSequence& s, bool parallel) {
  std::vector<bool> out(s.triple_count());
  if (!parallel) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = is_homotopy_fiber_sequence(s.triple(k).square());
    return out;
  }
  std::vector<std::future<bool>> jobs;
  for (std::size_t k = 0; k < out.size(); ++k)
    jobs.push_back(std::async(std::launch::async, [&s, k] { return is_homotopy_fiber_sequence(s.triple(k).square()); }));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = jobs[k].get();
  return out;
}

// ----- comparison -------------------------------------------------------------

namespace {

bool same_data(const ChainComplex& a, const ChainComplex& b) {
  return a.ranks() == b.ranks() && a.diffs() == b.diffs();
}

bool same_map(const ChainMap& f, const ChainMap& g) {
  return same_data(f.source(), g.source()) && same_data(f.target(), g.target()) &&
         f.components() == g.components();
}

// t's first arrow agrees with s's, directly or after precomposing t's link.
bool restriction_matches(const LongFiberSequence& s, const LongFiberSequence& t) {
  const ChainMap& fs = s.arrows.front();
  const ChainMap& ft = t.arrows.front();
  if (same_map(fs, ft)) return true;
  if (!t.link || !same_data(t.link->source(), fs.source()) || !is_quasi_iso(*t.link)) return false;
  const ChainMap c = compose(ft, *t.link);
  return c.components() == fs.components() && same_data(c.target(), fs.target());
}

}  // namespace

ComparisonReport compare_extensions(const LongFiberSequence& s, const LongFiberSequence& t) {
  if (s.nodes.empty() || t.nodes.empty() || s.arrows.empty() || t.arrows.empty() ||
      !same_data(s.nodes.front(), t.nodes.front())) {
    throw Error(ErrorCode::IncompatibleRestrictions, "sequences do not share their final node");
  }
  if (!restriction_matches(s, t) && !restriction_matches(t, s)) {
    throw Error(ErrorCode::IncompatibleRestrictions, "sequences do not extend the same map");
  }
  ComparisonReport report;
  report.nodes_compared = std::min(s.nodes.size(), t.nodes.size());
  for (std::size_t k = 0; k < report.nodes_compared; ++k) {
    const auto [lo, hi] = degree_span(s.nodes[k], t.nodes[k]);
    for (int n = lo; n <= hi; ++n) {
      FgAbelianGroup a = homology_group(s.nodes[k], n);
      FgAbelianGroup b = homology_group(t.nodes[k], n);
      if (!is_isomorphic(a, b)) report.mismatches.push_back({k, n, std::move(a), std::move(b)});
    }
  }
  return report;
}

}  // namespace fibseq

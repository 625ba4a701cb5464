#include "fibseq/homset.hpp"

#include "fibseq/error.hpp"

namespace fibseq {

Subquotient hom_set(int n, const ChainComplex& a) { return homology(a, n); }

namespace {

std::string label(const char* object, int n) { return "H_" + std::to_string(n) + "(" + object + ")"; }

void finish(LesReport& r) {
  r.verdicts.assign(r.nodes.size(), std::nullopt);
  for (std::size_t i = 0; i + 1 < r.maps.size() && i < r.nodes.size(); ++i) {
    r.verdicts[i] = is_exact_at(r.maps[i], r.maps[i + 1]);
  }
}

void push(LesReport& r, std::string name, int degree, const SubquotientHom& into) {
  r.nodes.push_back({std::move(name), degree, invariants(into.target)});
  r.maps.push_back(into);
}

}  // namespace

LesReport les_of_map(const ChainMap& f, int low, int high) {
  const Variant variant = variant_of(f);
  const BasedPathFunctor& functor = default_path_functor(variant);
  const ChainMap g = variant == Variant::NonNegative ? f : as_unbounded(f);
  const HomotopyKernel k = functor.kernel(g);
  const ChainMap delta = functor.connecting(g);
  const ChainComplex& x = g.source();
  const ChainComplex& y = g.target();

  LesReport r;
  r.low = variant == Variant::NonNegative ? std::max(low, 0) : low;
  r.high = high;
  if (r.low > r.high) return r;

  // The loop of Y is truncated in degree 0 for nonnegative maps; on that
  // degree the connecting map is extended from the cycles of Y_1.
  IntMatrix loop_basis;
  if (variant == Variant::NonNegative) {
    loop_basis = truncate_nonnegative(shift(with_variant(y, Variant::Unbounded), -1)).degree0_basis;
  }
  auto connecting_at = [&](int n) {
    const IntMatrix d = delta.at(n - 1);
    if (variant == Variant::NonNegative && n == 1) return extend_from_sublattice(loop_basis, d);
    return d;
  };

  for (int n = r.high; n >= r.low; --n) {
    push(r, label("X", n), n, induced(k.projection.at(n), homology(k.complex, n), homology(x, n)));
    push(r, label("Y", n), n, induced(g.at(n), homology(x, n), homology(y, n)));
    if (variant == Variant::NonNegative && n == 0) break;
    push(r, label("K", n - 1), n - 1, induced(connecting_at(n), homology(y, n), homology(k.complex, n - 1)));
  }
  if (!(variant == Variant::NonNegative && r.low == 0)) {
    r.maps.push_back(
        induced(k.projection.at(r.low - 1), homology(k.complex, r.low - 1), homology(x, r.low - 1)));
  }
  finish(r);
  return r;
}

LesReport les_of_fiber_sequence(const FiberTriple& t, int low, int high) {
  const ChainMap& a2 = t.a2;
  const ChainMap& a1 = t.a1;
  const bool nonneg = variant_of(a2) == Variant::NonNegative && variant_of(a1) == Variant::NonNegative;
  t.square().validate();
  if (!is_acyclic(t.corner.complex)) throw Error(ErrorCode::NotFiberSequence, "corner is not acyclic");

  // mu : A2 -> K_g, (a2, -h s c) with s a contraction of the corner.
  const ChainMap g = as_unbounded(a1);
  const HomotopyKernel kg = pointed_path_functor().kernel(g);
  const ChainMap delta = pointed_path_functor().connecting(g);
  const auto s = contracting_homotopy(t.corner.complex);
  const ChainComplex& a2c = a2.source();
  std::map<int, IntMatrix> mu;
  for (const auto& [n, r] : a2c.ranks()) {
    (void)r;
    IntMatrix q(g.target().rank(n + 1), a2c.rank(n));
    auto it = s.find(n);
    if (it != s.end()) q = -(t.corner.bottom.at(n + 1) * it->second * t.corner.left.at(n));
    mu[n] = vstack(a2.at(n), q);
  }
  const ChainMap m(with_variant(a2c, Variant::Unbounded), kg.complex, std::move(mu));
  const bool equivalence =
      nonneg ? is_quasi_iso(corestrict(with_endpoints(m, a2c, kg.complex), truncate_nonnegative(kg.complex)))
             : is_quasi_iso(m);
  if (!equivalence) throw Error(ErrorCode::NotFiberSequence, "source is not the homotopy fiber of the last map");

  const ChainComplex& x = a1.source();
  const ChainComplex& y = a1.target();
  const ChainComplex& w = a2c;
  auto connecting_at = [&](int n) {
    // H_n(Y) -> H_{n-1}(K_g) through delta, then back along H(mu).
    const Subquotient src = homology(y, n);
    const Subquotient fib = homology(w, n - 1);
    const IntMatrix images = delta.at(n - 1) * src.cycles();
    const IntMatrix system = hstack(m.at(n - 1) * fib.cycles(), kg.complex.d(n));
    auto coeffs = solve(system, images);
    if (!coeffs) throw std::logic_error("connecting map: H(mu) is not surjective");
    const IntMatrix lifted = fib.cycles() * coeffs->block(0, 0, fib.cycles().cols(), coeffs->cols());
    return induced(extend_from_sublattice(src.cycles(), lifted), src, fib);
  };

  LesReport r;
  r.low = nonneg ? std::max(low, 0) : low;
  r.high = high;
  if (r.low > r.high) return r;
  for (int n = r.high; n >= r.low; --n) {
    push(r, label("A1", n), n, induced(a2.at(n), homology(w, n), homology(x, n)));
    push(r, label("A0", n), n, induced(a1.at(n), homology(x, n), homology(y, n)));
    if (nonneg && n == 0) break;
    push(r, label("A2", n - 1), n - 1, connecting_at(n));
  }
  if (!(nonneg && r.low == 0)) {
    r.maps.push_back(induced(a2.at(r.low - 1), homology(w, r.low - 1), homology(x, r.low - 1)));
  }
  finish(r);
  return r;
}

bool verify(const LesReport& report) {
  for (std::size_t i = 0; i + 1 < report.maps.size() && i < report.nodes.size(); ++i) {
    if (!is_exact_at(report.maps[i], report.maps[i + 1]).exact()) return false;
  }
  return true;
}

}  // namespace fibseq

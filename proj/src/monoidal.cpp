#include "fibseq/monoidal.hpp"

#include "fibseq/error.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace fibseq {

namespace {

int sign(int n) { return n % 2 == 0 ? 1 : -1; }

std::optional<BlockEntry> find_block(const BlockIndex& index, int n, int mu) {
  auto it = index.find(n);
  if (it == index.end()) return std::nullopt;
  for (const auto& e : it->second)
    if (e.mu == mu) return e;
  return std::nullopt;
}

std::size_t degree_size(const BlockIndex& index, int n) {
  auto it = index.find(n);
  if (it == index.end() || it->second.empty()) return 0;
  return it->second.back().offset + it->second.back().size;
}

Variant joint(const ChainComplex& a, const ChainComplex& b) {
  return a.variant() == Variant::NonNegative && b.variant() == Variant::NonNegative ? Variant::NonNegative
                                                                                    : Variant::Unbounded;
}

}  // namespace

GradedProduct tensor(const ChainComplex& a, const ChainComplex& b) {
  GradedProduct out;
  std::map<int, std::size_t> ranks;
  if (!a.is_zero() && !b.is_zero()) {
    for (int n = a.min_degree() + b.min_degree(); n <= a.max_degree() + b.max_degree(); ++n) {
      std::size_t offset = 0;
      for (const auto& [mu, ra] : a.ranks()) {
        const std::size_t rb = b.rank(n - mu);
        if (rb == 0) continue;
        out.index[n].push_back({mu, offset, ra * rb});
        offset += ra * rb;
      }
      if (offset > 0) ranks[n] = offset;
    }
  }
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, blocks] : out.index) {
    IntMatrix d(degree_size(out.index, n - 1), degree_size(out.index, n));
    for (const auto& src : blocks) {
      const int mu = src.mu, nu = n - mu;
      if (auto t = find_block(out.index, n - 1, mu - 1)) {
        d.set_block(t->offset, src.offset, kron(a.d(mu), IntMatrix::identity(b.rank(nu))));
      }
      if (auto t = find_block(out.index, n - 1, mu)) {
        d.set_block(t->offset, src.offset, kron(IntMatrix::identity(a.rank(mu)), b.d(nu)).scaled(sign(mu)));
      }
    }
    diffs[n] = std::move(d);
  }
  out.complex = ChainComplex(std::move(ranks), std::move(diffs), joint(a, b));
  return out;
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
  const GradedProduct src = tensor(f.source(), g.source());
  const GradedProduct tgt = tensor(f.target(), g.target());
  std::map<int, IntMatrix> comps;
  for (const auto& [n, blocks] : src.index) {
    IntMatrix m(tgt.complex.rank(n), src.complex.rank(n));
    for (const auto& s : blocks) {
      if (auto t = find_block(tgt.index, n, s.mu)) {
        m.set_block(t->offset, s.offset, kron(f.at(s.mu), g.at(n - s.mu)));
      }
    }
    comps[n] = std::move(m);
  }
  return ChainMap::trusted(src.complex, tgt.complex, std::move(comps));
}

GradedProduct internal_hom(const ChainComplex& a, const ChainComplex& b) {
  GradedProduct out;
  std::map<int, std::size_t> ranks;
  if (!a.is_zero() && !b.is_zero()) {
    for (int n = b.min_degree() - a.max_degree(); n <= b.max_degree() - a.min_degree(); ++n) {
      std::size_t offset = 0;
      for (const auto& [mu, ra] : a.ranks()) {
        const std::size_t rb = b.rank(mu + n);
        if (rb == 0) continue;
        out.index[n].push_back({mu, offset, ra * rb});
        offset += ra * rb;
      }
      if (offset > 0) ranks[n] = offset;
    }
  }
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, blocks] : out.index) {
    IntMatrix d(degree_size(out.index, n - 1), degree_size(out.index, n));
    for (const auto& src : blocks) {
      const int mu = src.mu;
      if (auto t = find_block(out.index, n - 1, mu)) {
        d.set_block(t->offset, src.offset, kron(b.d(mu + n), IntMatrix::identity(a.rank(mu))));
      }
      if (auto t = find_block(out.index, n - 1, mu + 1)) {
        d.set_block(t->offset, src.offset,
                    kron(IntMatrix::identity(b.rank(mu + n)), a.d(mu + 1).transpose()).scaled(sign(n + 1)));
      }
    }
    diffs[n] = std::move(d);
  }
  out.complex = ChainComplex(std::move(ranks), std::move(diffs));
  return out;
}

ChainComplex cone_unit() { return disk(1); }

// ---------------------------------------------------------------------------

PathSpace monoidal_path0_direct(const ChainComplex& a0) {
  const ChainComplex a = with_variant(a0, Variant::Unbounded);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs, proj;
  if (!a.is_zero()) {
    auto r = [&](int n) { return a.rank(n) + a.rank(n + 1); };
    for (int n = a.min_degree() - 1; n <= a.max_degree(); ++n) {
      ranks[n] = r(n);
      proj[n] = hstack(IntMatrix::identity(a.rank(n)), IntMatrix(a.rank(n), a.rank(n + 1)));
    }
    for (int n = a.min_degree(); n <= a.max_degree(); ++n) {
      IntMatrix d(r(n - 1), r(n));
      d.set_block(0, 0, a.d(n));
      d.set_block(a.rank(n - 1), 0, IntMatrix::identity(a.rank(n)).scaled(sign(n + 1)));
      d.set_block(a.rank(n - 1), a.rank(n), a.d(n + 1));
      diffs[n] = std::move(d);
    }
  }
  ChainComplex p(std::move(ranks), std::move(diffs));
  return {p, ChainMap::trusted(p, a0, std::move(proj))};
}

PathSpace monoidal_path0_via_hom(const ChainComplex& a0) {
  const ChainComplex a = with_variant(a0, Variant::Unbounded);
  const GradedProduct hom = internal_hom(cone_unit(), a);
  // Hom(i, A) for the inclusion of the unit into degree 0 of the cone keeps
  // the mu = 0 block.
  std::map<int, IntMatrix> proj;
  for (const auto& [n, blocks] : hom.index) {
    IntMatrix m(a.rank(n), hom.complex.rank(n));
    for (const auto& e : blocks)
      if (e.mu == 0) m.set_block(0, e.offset, IntMatrix::identity(e.size));
    proj[n] = std::move(m);
  }
  return {hom.complex, ChainMap::trusted(hom.complex, a0, std::move(proj))};
}

PathSpace monoidal_path0(const ChainComplex& a) {
  PathSpace direct = monoidal_path0_direct(a);
  const PathSpace via_hom = monoidal_path0_via_hom(a);
  if (!(direct.complex == via_hom.complex) || !(direct.projection == via_hom.projection)) {
    throw std::logic_error("monoidal path space: block formula and Hom(Cone, -) disagree");
  }
  return direct;
}

ChainComplex monoidal_loop(const ChainComplex& a0) {
  const ChainComplex a = with_variant(a0, Variant::Unbounded);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (const auto& [n, r] : a.ranks()) ranks[n - 1] = r;
  for (const auto& [n, d] : a.diffs()) diffs[n - 1] = d;
  return ChainComplex(std::move(ranks), std::move(diffs));
}

ChainMap monoidal_loop_map(const ChainMap& f) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, m] : f.components()) comps[n - 1] = m;
  return ChainMap::trusted(monoidal_loop(f.source()), monoidal_loop(f.target()), std::move(comps));
}

HomotopyKernel monoidal_homotopy_kernel(const ChainMap& f) {
  const ChainComplex a = with_variant(f.source(), Variant::Unbounded);
  const ChainComplex b = with_variant(f.target(), Variant::Unbounded);
  HomotopyKernel out;
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs, proj, to_path;
  auto [lo, hi] = degree_span(a, b);
  if (lo <= hi) {
    lo -= 1;
    auto r = [&](int n) { return a.rank(n) + b.rank(n + 1); };
    for (int n = lo; n <= hi; ++n) {
      ranks[n] = r(n);
      proj[n] = hstack(IntMatrix::identity(a.rank(n)), IntMatrix(a.rank(n), b.rank(n + 1)));
      to_path[n] = block_diag(f.at(n), IntMatrix::identity(b.rank(n + 1)));
    }
    for (int n = lo + 1; n <= hi; ++n) {
      IntMatrix d(r(n - 1), r(n));
      d.set_block(0, 0, a.d(n));
      d.set_block(a.rank(n - 1), 0, f.at(n).scaled(sign(n + 1)));
      d.set_block(a.rank(n - 1), a.rank(n), b.d(n + 1));
      diffs[n] = std::move(d);
    }
  }
  out.complex = ChainComplex(std::move(ranks), std::move(diffs));
  out.projection = ChainMap::trusted(out.complex, f.source(), std::move(proj));
  out.to_path = ChainMap::trusted(out.complex, monoidal_path0_direct(b).complex, std::move(to_path));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// The second mapping cone convention: A_{n-1} + B_n with
/// d = [[d_A, 0], [(-1)^n f, d_B]].
ChainComplex alternative_cone(const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  auto [lo, hi] = degree_span(shift(with_variant(a, Variant::Unbounded), 1), b);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int n = lo; n <= hi; ++n) ranks[n] = a.rank(n - 1) + b.rank(n);
  for (int n = lo; n <= hi + 1; ++n) {
    IntMatrix d(a.rank(n - 2) + b.rank(n - 1), a.rank(n - 1) + b.rank(n));
    d.set_block(0, 0, a.d(n - 1));
    d.set_block(a.rank(n - 2), 0, f.at(n - 1).scaled(sign(n)));
    d.set_block(a.rank(n - 2), a.rank(n - 1), b.d(n));
    diffs[n] = std::move(d);
  }
  return ChainComplex(std::move(ranks), std::move(diffs));
}

ChainMap sign_twist(const ChainComplex& source, const ChainComplex& target,
                    const std::function<std::size_t(int)>& first_rank) {
  std::map<int, IntMatrix> comps;
  for (const auto& [n, r] : source.ranks()) {
    const std::size_t k = first_rank(n);
    comps[n] = block_diag(IntMatrix::identity(k), IntMatrix::identity(r - k).scaled(sign(n + 1)));
  }
  return ChainMap(source, target, std::move(comps));
}

void require_same_projection(const ChainMap& phi, const ChainMap& from, const ChainMap& to) {
  const ChainMap lhs = compose(to, phi);
  if (!(lhs.components() == from.components())) {
    throw std::logic_error("comparison map does not commute with the projections");
  }
}

}  // namespace

ChainMap compare_path_functors(const ChainComplex& a0) {
  const ChainComplex a = with_variant(a0, Variant::Unbounded);
  const PathSpace p = path0(a);
  const PathSpace q = monoidal_path0(a);
  ChainMap phi = sign_twist(p.complex, q.complex, [&](int n) { return a.rank(n); });
  require_same_projection(phi, p.projection, q.projection);
  return phi;
}

ChainMap compare_kernels(const ChainMap& f0) {
  const ChainMap f = as_unbounded(f0);
  const HomotopyKernel k = pointed_path_functor().kernel(f);
  const HomotopyKernel m = monoidal_homotopy_kernel(f);
  const ChainComplex alt = alternative_cone(f);
  for (const auto& [n, d] : m.complex.diffs()) {
    if (!(d == alt.d(n + 1))) throw std::logic_error("monoidal kernel is not the shifted alternative cone");
  }
  ChainMap phi = sign_twist(k.complex, m.complex, [&](int n) { return f.source().rank(n); });
  require_same_projection(phi, k.projection, m.projection);
  return phi;
}

ChainMap compare_loops(const ChainComplex& a0) {
  const ChainComplex a = with_variant(a0, Variant::Unbounded);
  return sign_twist(loop(a), monoidal_loop(a), [](int) { return std::size_t{0}; });
}

// ---------------------------------------------------------------------------

namespace {

class MonoidalPathFunctor final : public BasedPathFunctor {
 public:
  std::string name() const override { return "monoidal"; }
  Variant variant() const override { return Variant::Unbounded; }
  PathSpace path(const ChainComplex& b) const override { return monoidal_path0_direct(b); }
  ChainMap path_map(const ChainMap& f) const override {
    const PathSpace pa = monoidal_path0_direct(f.source());
    const PathSpace pb = monoidal_path0_direct(f.target());
    std::map<int, IntMatrix> comps;
    for (const auto& [n, r] : pa.complex.ranks()) {
      (void)r;
      comps[n] = block_diag(f.at(n), f.at(n + 1));
    }
    return ChainMap::trusted(pa.complex, pb.complex, std::move(comps));
  }
  ChainComplex loop(const ChainComplex& b) const override { return monoidal_loop(b); }
  ChainMap loop_map(const ChainMap& f) const override { return monoidal_loop_map(f); }
  HomotopyKernel kernel(const ChainMap& f) const override { return monoidal_homotopy_kernel(f); }
  ChainMap connecting(const ChainMap& f) const override {
    const ChainComplex lb = monoidal_loop(f.target());
    const ChainComplex k = monoidal_homotopy_kernel(f).complex;
    std::map<int, IntMatrix> comps;
    for (const auto& [n, r] : lb.ranks()) comps[n] = vstack(IntMatrix(f.source().rank(n), r), IntMatrix::identity(r));
    return ChainMap::trusted(lb, k, std::move(comps));
  }
  ChainMap path_to_kernel(const ChainMap& f) const override {
    const ChainComplex px = monoidal_path0_direct(f.source()).complex;
    const ChainComplex k = monoidal_homotopy_kernel(f).complex;
    std::map<int, IntMatrix> comps;
    for (const auto& [n, r] : px.ranks()) {
      (void)r;
      comps[n] = block_diag(IntMatrix::identity(f.source().rank(n)), f.at(n + 1));
    }
    return ChainMap::trusted(px, k, std::move(comps));
  }
  ChainMap loop_inclusion(const ChainComplex& x) const override {
    const ChainComplex lx = monoidal_loop(x);
    const ChainComplex px = monoidal_path0_direct(x).complex;
    std::map<int, IntMatrix> comps;
    for (const auto& [n, r] : lx.ranks()) comps[n] = vstack(IntMatrix(x.rank(n), r), IntMatrix::identity(r));
    return ChainMap::trusted(lx, px, std::move(comps));
  }
};

}  // namespace

const BasedPathFunctor& monoidal_path_functor() {
  static const MonoidalPathFunctor instance;
  return instance;
}

// ---------------------------------------------------------------------------

FgAbelianGroup chain_map_group(const ChainComplex& a, const ChainComplex& b) {
  const ChainComplex hom = internal_hom(a, b).complex;
  FgAbelianGroup g;
  g.free_rank = hom.rank(0) - rank(hom.d(0));
  return g;
}

bool adjunction_check(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) {
  return is_isomorphic(chain_map_group(tensor(a, b).complex, c),
                       chain_map_group(a, internal_hom(b, c).complex));
}

}  // namespace fibseq

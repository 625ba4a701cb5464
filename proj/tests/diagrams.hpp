#pragma once

// Random commutative squares with known model-square status.

#include "fibseq/modelcat.hpp"

#include "generators.hpp"

namespace gen {

using fibseq::CommSquare;

/// A fibration into `f`'s target: either a projection off a direct sum or
/// the fibration half of a factorization.
inline ChainMap fibration_into(Generator& g, const ChainComplex& target, const Options& o = {}) {
  if (g.coin()) return fibseq::direct_sum(target, g.complex(o)).project_first;
  return fibseq::factor_we_fib(g.map(g.complex(o), target)).p;
}

/// Strict pullback of a fibration along a random map.
inline CommSquare pullback_square(Generator& g, const Options& o = {}) {
  const ChainComplex d = g.complex(o);
  const ChainMap f = fibration_into(g, d, o);
  const ChainMap bottom = g.map(g.complex(o), d);
  const fibseq::Pullback p = fibseq::pullback(bottom, f);
  return {p.to_b, p.to_c, f, bottom};
}

/// Both vertical arrows quasi-isomorphisms: inclusions into sums with
/// acyclic complements.
inline CommSquare vertical_qiso_square(Generator& g, const Options& o = {}) {
  const ChainMap top = g.map(g.complex(o), g.complex(o));
  const int n = g.uniform(o.min_degree + 1, o.max_degree);
  const ChainComplex e1 = fibseq::disk(n, o.variant), e2 = fibseq::disk(g.uniform(o.min_degree + 1, o.max_degree), o.variant);
  const auto left = fibseq::direct_sum(top.source(), e1);
  const auto right = fibseq::direct_sum(top.target(), e2);
  const ChainMap bottom = fibseq::direct_sum_map(top, g.map(e1, e2));
  return {top, left.inject_first, right.inject_first, bottom};
}

/// Horizontal pasting: `left` then `right` sharing the middle column.
inline CommSquare paste(const CommSquare& left, const CommSquare& right) {
  return {fibseq::compose(right.top, left.top), left.left, right.right, fibseq::compose(right.bottom, left.bottom)};
}

struct PastedDiagram {
  CommSquare left;
  CommSquare right;
};

/// Right square a strict pullback along a fibration; the left square is the
/// pullback along a further map, possibly spoiled by an extra summand or by
/// replacing its corner with 0.
inline PastedDiagram pasted_diagram(Generator& g, const Options& o = {}) {
  const CommSquare right = pullback_square(g, o);
  const ChainMap h = g.map(g.complex(o), right.bottom.source());
  const fibseq::Pullback p = fibseq::pullback(h, right.left);
  CommSquare left{p.to_b, p.to_c, right.left, h};
  const int spoil = g.uniform(0, 2);
  if (spoil == 1) {
    const auto sum = fibseq::direct_sum(p.complex, g.complex(o));
    left.top = fibseq::compose(p.to_b, sum.project_first);
    left.left = fibseq::compose(p.to_c, sum.project_first);
  } else if (spoil == 2) {
    const ChainComplex zero = ChainComplex::zero(o.variant);
    left.top = fibseq::zero_map(zero, p.to_b.target());
    left.left = fibseq::zero_map(zero, p.to_c.target());
  }
  return {left, right};
}

}  // namespace gen

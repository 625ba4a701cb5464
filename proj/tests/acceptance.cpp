// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons,
// fixed seeds (override with --seed N or FIBSEQ_SEED).

#include "fibseq/homset.hpp"
#include "fibseq/monoidal.hpp"

#include "diagrams.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fibseq;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string note;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  void instance() { ++instances_; }
  Outcome outcome(std::string extra = {}) const {
    std::string note = notes_.str();
    if (!extra.empty()) note = note.empty() ? extra : note + "; " + extra;
    return {failures_ == 0, instances_, note};
  }

 private:
  std::size_t failures_ = 0;
  std::size_t instances_ = 0;
  std::ostringstream notes_;
};

// Wide acceptance range: support inside [-6, 6], up to rank 6, entries in [-3, 3].
gen::Options wide(gen::Generator& g) {
  gen::Options o;
  o.min_degree = g.uniform(-6, 3);
  o.max_degree = std::min(6, o.min_degree + g.uniform(1, 3));
  o.max_rank = 6;
  o.max_pieces = 7;
  o.scramble_steps = 20;
  return o;
}

// Narrower range for the sequence-level criteria.
gen::Options moderate(gen::Generator& g, bool nonneg = false) {
  gen::Options o;
  o.min_degree = nonneg ? 0 : g.uniform(-4, 2);
  o.max_degree = o.min_degree + g.uniform(1, 3);
  o.max_rank = 4;
  o.max_pieces = 6;
  o.variant = nonneg ? Variant::NonNegative : Variant::Unbounded;
  return o;
}

ChainMap random_map(gen::Generator& g, const gen::Options& o) {
  const ChainComplex a = g.complex(o);
  switch (g.uniform(0, 7)) {
    case 0:
      return identity_map(a);
    case 1:
      return zero_map(a, g.complex(o));
    case 2:
      return g.map(a, a);
    default:
      return g.map(a, g.complex(o));
  }
}

bool oracle_surjective(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  const auto f = oracle::invariant_factors(m);
  if (f.size() != m.rows()) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

bool oracle_acyclic(const ChainComplex& c) {
  for (int n = c.min_degree(); n <= c.max_degree(); ++n)
    if (!oracle::homology(c, n).is_trivial()) return false;
  return true;
}

bool oracle_fibration(const ChainMap& p) {
  const bool nonneg = p.source().variant() == Variant::NonNegative;
  for (int n = p.target().min_degree(); n <= p.target().max_degree(); ++n) {
    if (nonneg && n < 1) continue;
    if (!oracle_surjective(p.at(n))) return false;
  }
  return true;
}

bool degreewise_iso(const ChainMap& f) {
  const auto [lo, hi] = degree_span(f.source(), f.target());
  for (int n = lo; n <= hi; ++n) {
    const IntMatrix m = f.at(n);
    if (m.rows() != m.cols()) return false;
    if (m.rows() > 0 && abs(oracle::determinant(m)) != 1) return false;
  }
  return true;
}

const BasedPathFunctor& functor_for(const ChainMap& f) { return default_path_functor(variant_of(f)); }

// 1 -------------------------------------------------------------------------
Outcome snf_oracle(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const IntMatrix m = g.matrix(g.uniform(1, 5), g.uniform(1, 5), 3);
    const SnfDecomposition s = snf(m);
    t.instance();
    t.check(s.U * m * s.V == s.D, "UMV != D");
    t.check(abs(oracle::determinant(s.U)) == 1 && abs(oracle::determinant(s.V)) == 1, "U or V not unimodular");
    std::vector<Integer> diag;
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k)
      if (s.D(k, k) != 0) diag.push_back(s.D(k, k));
    t.check(diag == oracle::minors_invariant_factors(m), "diagonal differs from minors oracle");
  }
  return t.outcome();
}

// 2 -------------------------------------------------------------------------
Outcome based_path_contract(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const ChainComplex b = g.complex(wide(g));
    t.instance();
    const PathSpace p = path0(b), m = monoidal_path0(b);
    t.check(oracle_acyclic(p.complex), "Path0 not acyclic");
    t.check(oracle_fibration(p.projection), "Path0 projection not surjective");
    t.check(oracle_acyclic(m.complex), "monoidal Path0 not acyclic");
    t.check(oracle_fibration(m.projection), "monoidal projection not surjective");
    const ChainComplex nn = g.complex(gen::nonnegative(moderate(g, true)));
    const PathSpace tr = trath0(nn);
    t.check(oracle_acyclic(tr.complex), "Trath0 not acyclic");
    t.check(oracle_fibration(tr.projection), "Trath0 projection not surjective in positive degrees");
  }
  return t.outcome();
}

// 3 -------------------------------------------------------------------------
Outcome cone_of_identity(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const ChainComplex b = g.complex(wide(g));
    t.instance();
    const ChainComplex mc = mapping_cone(identity_map(b)).cone;
    for (int n = mc.min_degree() - 1; n <= mc.max_degree() + 1; ++n)
      t.check(oracle::homology(mc, n).is_trivial() && homology_group(mc, n).is_trivial(),
              "H_" + std::to_string(n) + "(Mc(id)) nonzero");
  }
  return t.outcome();
}

// 4 -------------------------------------------------------------------------
Outcome shift_law(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    gen::Options o = wide(g);
    o.min_degree = std::max(o.min_degree, -4);
    o.max_degree = std::min(o.max_degree, 4);
    const ChainComplex a = g.complex(o);
    const int p = g.uniform(-2, 2);
    t.instance();
    const ChainComplex s = shift(a, p);
    for (int n = -8; n <= 8; ++n) {
      const FgAbelianGroup lhs = homology_group(s, n), rhs = oracle::homology(a, n - p);
      t.check(is_isomorphic(lhs, rhs) && lhs == oracle::homology(s, n), "shift law fails");
    }
  }
  return t.outcome();
}

// 5 -------------------------------------------------------------------------
Outcome puppe_verification(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const ChainMap f = random_map(g, moderate(g, i % 4 == 3));
    t.instance();
    const LongFiberSequence s = puppe_sequence(f, 8);
    t.check(s.triple_count() == 6, "expected 6 triples");
    for (std::size_t k = 0; k < s.triple_count(); ++k)
      t.check(is_homotopy_fiber_sequence(s.triple(k).square()), "triple " + std::to_string(k) + " fails");
    for (std::size_t k = 0; k + 3 < s.nodes.size(); ++k)
      t.check(s.nodes[k + 3] == functor_for(f).loop(s.nodes[k]), "node k+3 != loop(node k)");
  }
  return t.outcome();
}

// 6 -------------------------------------------------------------------------
Outcome les_exactness(gen::Generator& g) {
  Tally t;
  for (int variant = 0; variant < 2; ++variant)
    for (int i = 0; i < 200; ++i) {
      const ChainMap f = random_map(g, moderate(g, variant == 1));
      t.instance();
      t.check(verify(les_of_map(f, -4, 4)), "inexact LES");
    }
  // Hand-anchored: 0 -> Z --x2--> Z -> Z/2 -> 0.
  const ChainComplex s = sphere(0);
  const ChainMap two(s, s, {{0, IntMatrix::from_rows({{2}})}});
  const LesReport r = les_of_map(two, -4, 4);
  t.check(verify(r), "x2 LES inexact");
  std::vector<std::pair<std::string, FgAbelianGroup>> expected{
      {"H_1(Y)", {}}, {"H_0(K)", {}}, {"H_0(X)", {1, {}}}, {"H_0(Y)", {1, {}}}, {"H_-1(K)", {0, {2}}}, {"H_-1(X)", {}}};
  for (const auto& [label, group] : expected) {
    bool found = false;
    for (const auto& n : r.nodes)
      if (n.label == label) found = n.group == group;
    t.check(found, "x2 node " + label);
  }
  t.check(oracle::homology(mapping_cone(two).cone, 0) == FgAbelianGroup{0, {2}}, "oracle H_0(Mc(x2)) != Z/2");
  return t.outcome();
}

// 7 -------------------------------------------------------------------------
Outcome model_square_laws(gen::Generator& g) {
  Tally t;
  std::size_t false_left = 0;
  for (int i = 0; i < 100; ++i) {
    const gen::Options o = moderate(g, i % 4 == 3);
    t.instance();
    t.check(is_model_square(gen::pullback_square(g, o)).verdict, "strict pullback along fibration rejected");
    t.check(is_model_square(gen::vertical_qiso_square(g, o)).verdict, "vertical quasi-iso square rejected");
    const auto pd = gen::pasted_diagram(g, o);
    t.check(is_model_square(pd.right).verdict, "right square of pasting not model");
    const bool left = is_model_square(pd.left).verdict;
    const bool total = is_model_square(gen::paste(pd.left, pd.right)).verdict;
    false_left += !left;
    t.check(left == total, "pasting law fails");
  }
  return t.outcome(std::to_string(false_left) + " pasted diagrams with a non-model left square");
}

// 8 -------------------------------------------------------------------------
Outcome loop_preservation(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const ChainMap f = random_map(g, moderate(g, i % 4 == 3));
    const BasedPathFunctor& fun = functor_for(f);
    const LongFiberSequence s = puppe_sequence(f, 6);
    t.instance();
    for (std::size_t k = 0; k < s.triple_count(); ++k) {
      const FiberTriple tr = s.triple(k);
      if (!is_homotopy_fiber_sequence(tr.square())) {
        t.check(false, "Puppe triple not verified");
        continue;
      }
      const FiberTriple looped{fun.loop_map(tr.a2), fun.loop_map(tr.a1),
                               Corner{fun.loop(tr.corner.complex), fun.loop_map(tr.corner.left),
                                      fun.loop_map(tr.corner.bottom)}};
      t.check(is_homotopy_fiber_sequence(looped.square()), "looped triple fails");
    }
  }
  return t.outcome();
}

// 9 -------------------------------------------------------------------------
Outcome functor_comparison(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const ChainComplex a = g.complex(wide(g));
    t.instance();
    const ChainMap phi = compare_path_functors(a);
    t.check(degreewise_iso(phi), "comparison not a degreewise isomorphism");
    t.check(compose(monoidal_path0(a).projection, phi) == path0(a).projection, "comparison not over A");
  }
  for (int i = 0; i < 100; ++i) {
    const ChainMap f = random_map(g, moderate(g));
    t.instance();
    const LongFiberSequence p = puppe_sequence(f, 6, pointed_path_functor());
    const LongFiberSequence m = puppe_sequence(f, 6, monoidal_path_functor());
    for (std::size_t k = 0; k < p.nodes.size(); ++k)
      for (int n = -10; n <= 8; ++n)
        t.check(is_isomorphic(oracle::homology(p.nodes[k], n), oracle::homology(m.nodes[k], n)),
                "node " + std::to_string(k) + " differs");
  }
  return t.outcome();
}

// 10 ------------------------------------------------------------------------
Outcome e_functor_agreement(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const ChainMap f = random_map(g, moderate(g, i % 4 == 3));
    t.instance();
    const LongFiberSequence e = extend_E(f, 6);
    t.check(compare_extensions(puppe_sequence(f, 6), e).all_match(), "homology mismatch");
    for (const auto& a : e.arrows) t.check(oracle_fibration(a), "extend_E arrow not a fibration");
  }
  return t.outcome();
}

// 11 ------------------------------------------------------------------------
Outcome adjunction(gen::Generator& g) {
  Tally t;
  auto small = [&g] {
    gen::Options o;
    o.min_degree = g.uniform(-2, 1);
    o.max_degree = o.min_degree + g.uniform(0, 2);
    o.max_rank = 3;
    o.max_pieces = 3;
    return g.complex(o);
  };
  for (int i = 0; i < 100; ++i) {
    const ChainComplex a = small(), b = small(), c = small();
    t.instance();
    t.check(adjunction_check(a, b, c), "adjunction groups differ");
  }
  return t.outcome();
}

// 12 ------------------------------------------------------------------------
Outcome fiber_sequence_les(gen::Generator& g) {
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const ChainMap f = random_map(g, moderate(g, i % 5 == 4));
    const LongFiberSequence s = puppe_sequence(f, 6);
    const std::size_t k = g.uniform(0, int(s.triple_count()) - 1);
    const FiberTriple tr = s.triple(k);
    t.instance();
    const LesReport a = les_of_fiber_sequence(tr, -4, 4);
    const LesReport b = les_of_map(tr.a1, -4, 4);
    if (a.nodes.size() != b.nodes.size()) {
      t.check(false, "window sizes differ");
      continue;
    }
    t.check(verify(a), "fiber-sequence LES inexact");
    for (std::size_t n = 0; n < a.nodes.size(); ++n) {
      t.check(is_isomorphic(a.nodes[n].group, b.nodes[n].group), "node " + a.nodes[n].label + " differs");
      t.check(a.verdicts[n].has_value() == b.verdicts[n].has_value(), "verdict layout differs");
      if (a.verdicts[n] && b.verdicts[n]) t.check(a.verdicts[n]->exact() == b.verdicts[n]->exact(), "verdicts differ");
    }
  }
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = gen::seed();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  std::cout << "seed " << seed << "\n";

  const std::vector<std::pair<std::string, std::function<Outcome(gen::Generator&)>>> criteria{
      {"SNF oracle equivalence", snf_oracle},
      {"based path contract", based_path_contract},
      {"Mc(id) acyclicity", cone_of_identity},
      {"shift law", shift_law},
      {"Puppe verification", puppe_verification},
      {"LES exactness", les_exactness},
      {"model-square laws", model_square_laws},
      {"loop preservation", loop_preservation},
      {"functor comparison", functor_comparison},
      {"E-functor agreement", e_functor_agreement},
      {"adjunction", adjunction},
      {"fiber-sequence LES", fiber_sequence_les},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    gen::Generator g(seed + 1000 * (i + 1));
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(g);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): "
              << o.instances << " instances, " << std::fixed << std::setprecision(2) << secs << "s";
    if (!o.note.empty()) std::cout << " [" << o.note << "]";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}

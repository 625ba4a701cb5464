#pragma once

// Based path spaces, loop spaces, homotopy kernels, connecting maps and the
// long homotopy fiber sequences built from them.

#include "fibseq/chain.hpp"
#include "fibseq/modelcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibseq {

struct PathSpace {
  ChainComplex complex;
  ChainMap projection;  // Path0 B -> B
};

struct HomotopyKernel {
  ChainComplex complex;
  ChainMap projection;  // pi_f : K_f -> A
  ChainMap to_path;     // K_f -> Path0 B, the corner map over f
};

/// Path0 B_n = B_n + B_{n+1} with d = [[d, 0], [-1, -d]].
PathSpace path0(const ChainComplex& b);
ChainMap path0_map(const ChainMap& f);
/// Truncation of path0 for NonNegative complexes. Throws WrongVariant.
PathSpace trath0(const ChainComplex& b);

/// B[-1]. Throws WrongVariant for NonNegative input.
ChainComplex loop(const ChainComplex& b);
ChainMap loop_map(const ChainMap& f);
/// Truncation of B[-1]. Throws WrongVariant for Unbounded input.
ChainComplex loop_nn(const ChainComplex& b);
ChainMap loop_nn_map(const ChainMap& f);

/// K_f = Mc(f)[-1], truncated when f is a map of NonNegative complexes.
HomotopyKernel homotopy_kernel(const ChainMap& f);
/// Second-block inclusion Omega B -> K_f (truncated likewise).
ChainMap connecting(const ChainMap& f);

/// Unbounded copy of a map; the matrices are unchanged.
ChainMap as_unbounded(const ChainMap& f);
/// Same components between other (data-equal) endpoints.
ChainMap with_endpoints(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

/// A functorial choice of based path spaces together with everything the
/// long fiber sequence of a map needs from it.
class BasedPathFunctor {
 public:
  virtual ~BasedPathFunctor() = default;
  virtual std::string name() const = 0;
  virtual Variant variant() const = 0;
  virtual PathSpace path(const ChainComplex& b) const = 0;
  virtual ChainMap path_map(const ChainMap& f) const = 0;
  virtual ChainComplex loop(const ChainComplex& b) const = 0;
  virtual ChainMap loop_map(const ChainMap& f) const = 0;
  virtual HomotopyKernel kernel(const ChainMap& f) const = 0;
  /// Omega Y -> K_f for f : X -> Y.
  virtual ChainMap connecting(const ChainMap& f) const = 0;
  /// Path0 X -> K_f, (x, x') |-> (x, f x').
  virtual ChainMap path_to_kernel(const ChainMap& f) const = 0;
  /// Omega X -> Path0 X, x' |-> (0, x').
  virtual ChainMap loop_inclusion(const ChainComplex& x) const = 0;
};

const BasedPathFunctor& pointed_path_functor();
const BasedPathFunctor& truncated_path_functor();
const BasedPathFunctor& default_path_functor(Variant v);
Variant variant_of(const ChainMap& f);

struct Corner {
  ChainComplex complex;
  ChainMap left;    // A2 -> C
  ChainMap bottom;  // C -> A0
};

/// A2 --a2--> A1 --a1--> A0 with an explicit corner.
struct FiberTriple {
  ChainMap a2;
  ChainMap a1;
  Corner corner;

  CommSquare square() const { return {a2, corner.left, a1, corner.bottom}; }
};

enum class Provenance { Puppe, EFunctor };

/// nodes[0] = A0; arrows[i] : nodes[i+1] -> nodes[i]; corners[k] belongs to
/// the triple nodes[k+2] -> nodes[k+1] -> nodes[k].
struct LongFiberSequence {
  std::vector<ChainComplex> nodes;
  std::vector<ChainMap> arrows;
  std::vector<Corner> corners;
  Provenance provenance = Provenance::Puppe;
  std::string functor;
  /// For sequences that replace the original source: X -> nodes[1].
  std::optional<ChainMap> link;

  std::size_t triple_count() const { return corners.size(); }
  FiberTriple triple(std::size_t k) const { return {arrows.at(k + 1), arrows.at(k), corners.at(k)}; }
};

LongFiberSequence puppe_sequence(const ChainMap& f, std::size_t depth, const BasedPathFunctor& functor);
LongFiberSequence puppe_sequence(const ChainMap& f, std::size_t depth);

/// Fibration replacement followed by iterated pullbacks of path fibrations.
LongFiberSequence extend_E(const ChainMap& f, std::size_t depth, const BasedPathFunctor& functor);
LongFiberSequence extend_E(const ChainMap& f, std::size_t depth);

/// is_homotopy_fiber_sequence for every triple; optionally in parallel.
std::vector<bool> verify_triples(const LongFiberSequence& s, bool parallel = false);

struct HomologyMismatch {
  std::size_t node;
  int degree;
  FgAbelianGroup left;
  FgAbelianGroup right;
};

struct ComparisonReport {
  std::size_t nodes_compared = 0;
  std::vector<HomologyMismatch> mismatches;
  bool all_match() const { return mismatches.empty(); }
};

/// Node-by-node homology comparison of two extensions of the same map.
/// Throws IncompatibleRestrictions if they do not start from the same map.
ComparisonReport compare_extensions(const LongFiberSequence& s, const LongFiberSequence& t);

}  // namespace fibseq

#pragma once

// The projective model structure on chain complexes: fibrations, pullbacks,
// a path object, the factorization into a weak equivalence followed by a
// fibration, and the model-square decision procedure.

#include "fibseq/chain.hpp"

namespace fibseq {

/// Surjective over Z (all invariant factors 1 and full row rank).
bool is_surjective(const IntMatrix& m);

/// Degreewise surjective; for NonNegative maps only degrees >= 1 count.
bool is_fibration(const ChainMap& f);
bool is_acyclic(const ChainComplex& c);

/// P = B x_D C. P_n has basis `basis.at(n)`, a kernel basis of [f_n | -g_n]
/// inside B_n + C_n.
struct Pullback {
  ChainComplex complex;
  ChainMap to_b;  // prB
  ChainMap to_c;  // prC
  ChainMap f;     // B -> D
  ChainMap g;     // C -> D
  std::map<int, IntMatrix> basis;
};

Pullback pullback(const ChainMap& g, const ChainMap& f);

/// The unique map X -> P with prB u' = u and prC u' = v. Throws NotCommuting
/// unless f u = g v.
ChainMap universal_map(const Pullback& p, const ChainMap& u, const ChainMap& v);

/// PB_n = B_n + B_n + B_{n+1}, d(b, b', c) = (db, db', b - b' - dc). For
/// NonNegative B the complex is truncated to degrees >= 0.
struct PathObject {
  ChainComplex complex;
  ChainMap section;  // s : B -> PB
  ChainMap end0;     // p0
  ChainMap end1;     // p1
};

PathObject path_object(const ChainComplex& b);

struct Factorization {
  ChainMap w;  // A -> Pf, a quasi-isomorphism
  ChainMap p;  // Pf -> B, a fibration
  Pullback pf;
  PathObject path;
};

Factorization factor_we_fib(const ChainMap& f);

/// A --top--> B
/// |          |
/// left     right
/// v          v
/// C --bottom-> D
struct CommSquare {
  ChainMap top;
  ChainMap left;
  ChainMap right;
  ChainMap bottom;

  /// Throws NotCommuting (or Incomposable) if right top != bottom left.
  void validate() const;
};

struct ModelSquareWitness {
  Factorization factorization;
  Pullback pullback;
  ChainMap universal;
  bool verdict = false;
};

ModelSquareWitness is_model_square(const CommSquare& s);
bool is_homotopy_fiber_sequence(const CommSquare& s);

}  // namespace fibseq

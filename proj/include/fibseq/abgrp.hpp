#pragma once

// Finitely generated abelian groups presented as subquotients Z/B of free
// modules, homomorphisms between such presentations, and exactness.

#include "fibseq/exactlin.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fibseq {

/// Invariant factor normal form: Z^free_rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti >= 2.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

std::string to_string(const FgAbelianGroup& g);
std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g);

/// Builds the normal form from arbitrary cyclic orders (0 meaning Z). Orders
/// are combined through their Smith form, so any decomposition is accepted.
FgAbelianGroup make_group(std::size_t free_rank, const std::vector<Integer>& orders);

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// The group span(cycles) / span(boundaries) inside Z^ambient_rank.
class Subquotient {
 public:
  Subquotient() = default;
  /// Throws MalformedSubquotient unless every boundary lies in the cycle span.
  Subquotient(std::size_t ambient_rank, IntMatrix cycles, IntMatrix boundaries);
  /// Skips the containment check; for callers that hold it by construction.
  static Subquotient trusted(std::size_t ambient_rank, IntMatrix cycles, IntMatrix boundaries);

  static Subquotient free(std::size_t rank);
  static Subquotient zero(std::size_t ambient_rank = 0);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntMatrix& cycles() const { return cycles_; }
  const IntMatrix& boundaries() const { return boundaries_; }

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix cycles_{0, 0};
  IntMatrix boundaries_{0, 0};
};

/// Same ambient lattice and equal cycle and boundary spans.
bool same_subquotient(const Subquotient& a, const Subquotient& b);

FgAbelianGroup invariants(const Subquotient& g);

/// A homomorphism of subquotients given by a matrix on the ambient lattices.
struct SubquotientHom {
  Subquotient source;
  Subquotient target;
  IntMatrix ambient_matrix;
};

/// Throws NotWellDefined unless cycles map into cycles and boundaries into
/// boundaries.
SubquotientHom induced(const IntMatrix& f_ambient, const Subquotient& src, const Subquotient& tgt);
SubquotientHom compose(const SubquotientHom& g, const SubquotientHom& f);

/// Cycle combinations (columns, in the source ambient lattice) that generate
/// the kernel modulo source boundaries.
IntMatrix kernel_generators(const SubquotientHom& f);

bool is_injective(const SubquotientHom& f);
bool is_surjective(const SubquotientHom& f);
inline bool is_isomorphism(const SubquotientHom& f) { return is_injective(f) && is_surjective(f); }
/// True iff the map is zero on the quotient groups.
bool is_zero_map(const SubquotientHom& f);

struct ExactnessVerdict {
  bool composite_zero = false;
  bool ker_in_im = false;
  bool exact() const { return composite_zero && ker_in_im; }
};

/// Exactness of source(f) -> target(f) = source(g) -> target(g) at the
/// middle group. Throws Incomposable if the middle presentations differ.
ExactnessVerdict is_exact_at(const SubquotientHom& f, const SubquotientHom& g);

}  // namespace fibseq

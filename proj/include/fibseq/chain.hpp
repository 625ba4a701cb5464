#pragma once

// Bounded chain complexes of finitely generated free Z-modules, chain maps,
// shifts, mapping cones and homology. Homological convention throughout:
// d_n : C_n -> C_{n-1}.

#include "fibseq/abgrp.hpp"
#include "fibseq/exactlin.hpp"

#include <map>
#include <optional>
#include <utility>

namespace fibseq {

enum class Variant { Unbounded, NonNegative };

const char* to_string(Variant v);

class ChainComplex {
 public:
  ChainComplex() = default;
  /// Validates shapes, non-negativity for the NonNegative variant, and
  /// d_{n-1} d_n = 0. Rank-0 degrees and zero differentials are dropped so
  /// that equal complexes compare equal.
  ChainComplex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> diffs,
               Variant variant = Variant::Unbounded);

  static ChainComplex zero(Variant variant = Variant::Unbounded) { return ChainComplex({}, {}, variant); }

  std::size_t rank(int n) const;
  /// d_n with shape rank(n-1) x rank(n); a zero matrix when not stored.
  IntMatrix d(int n) const;
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  const std::map<int, IntMatrix>& diffs() const { return diffs_; }
  Variant variant() const { return variant_; }

  bool is_zero() const { return ranks_.empty(); }
  int min_degree() const;  // 0 for the zero complex
  int max_degree() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.variant_ == b.variant_ && a.ranks_ == b.ranks_ && a.diffs_ == b.diffs_;
  }

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, IntMatrix> diffs_;
  Variant variant_ = Variant::Unbounded;
};

/// Same data regarded in another variant; NonNegative requires support >= 0.
ChainComplex with_variant(const ChainComplex& c, Variant variant);

class ChainMap {
 public:
  ChainMap() = default;
  /// Validates shapes and d f = f d in every degree.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);
  /// For constructions that commute by design; shapes are still checked.
  static ChainMap trusted(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  /// f_n with shape target.rank(n) x source.rank(n).
  IntMatrix at(int n) const;
  const std::map<int, IntMatrix>& components() const { return components_; }

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
  }

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, IntMatrix> components_;
};

/// Degrees where either complex has a nonzero module.
std::pair<int, int> degree_span(const ChainComplex& a, const ChainComplex& b);

ChainComplex shift(const ChainComplex& a, int p);
ChainMap shift_map(const ChainMap& f, int p);

struct MappingCone {
  ChainComplex cone;
  ChainMap inclusion;   // B -> Mc(f)
  ChainMap projection;  // Mc(f) -> A[1]
};

/// Mc(f)_n = A_{n-1} + B_n with d = [[-d_A, 0], [f, d_B]].
MappingCone mapping_cone(const ChainMap& f);

Subquotient homology(const ChainComplex& a, int n);
FgAbelianGroup homology_group(const ChainComplex& a, int n);
/// Homology in every degree of the support, trivial groups omitted.
std::map<int, FgAbelianGroup> homology_table(const ChainComplex& a);
SubquotientHom induced_on_homology(const ChainMap& f, int n);

bool has_vanishing_homology(const ChainComplex& a);
/// Decided through acyclicity of the mapping cone.
bool is_quasi_iso(const ChainMap& f);
/// Independent decision through the induced maps on every homology group.
bool is_quasi_iso_degreewise(const ChainMap& f);

ChainComplex sphere(int n, Variant variant = Variant::Unbounded);
ChainComplex disk(int n, Variant variant = Variant::Unbounded);

struct DirectSum {
  ChainComplex sum;
  ChainMap inject_first, inject_second;
  ChainMap project_first, project_second;
};
DirectSum direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap direct_sum_map(const ChainMap& f, const ChainMap& g);

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const ChainComplex& a);
ChainMap zero_map(const ChainComplex& a, const ChainComplex& b);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

/// Dimension of H_n(A; Z/p) computed with ranks over the field Z/p.
std::size_t homology_dim_mod_p(const ChainComplex& a, int n, unsigned p);
std::map<int, std::size_t> betti_numbers_mod_p(const ChainComplex& a, unsigned p);

long long euler_characteristic(const ChainComplex& a);

/// Good truncation: degrees >= 1 unchanged, degree 0 replaced by ker d_0
/// with the basis `degree0_basis`, negative degrees dropped. The result is a
/// NonNegative complex and `inclusion` maps it into the input.
struct Truncation {
  ChainComplex complex;
  ChainMap inclusion;
  IntMatrix degree0_basis;
};
Truncation truncate_nonnegative(const ChainComplex& c);
/// Restriction of f : A -> B to the truncations (degree 0 via coordinates).
ChainMap truncate_map(const ChainMap& f, const Truncation& src, const Truncation& tgt);
/// f : X -> C with X NonNegative, corestricted through C's truncation.
ChainMap corestrict(const ChainMap& f, const Truncation& tgt);

/// Maps s_n : C_n -> C_{n+1} with d s + s d = id. Throws NotAcyclic.
std::map<int, IntMatrix> contracting_homotopy(const ChainComplex& c);

}  // namespace fibseq

#include "fibseq/abgrp.hpp"

#include "fibseq/error.hpp"

#include <ostream>
#include <sstream>

namespace fibseq {

std::string to_string(const FgAbelianGroup& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) {
  if (g.is_trivial()) return os << "0";
  bool first = true;
  if (g.free_rank > 0) {
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os;
}

FgAbelianGroup make_group(std::size_t free_rank, const std::vector<Integer>& orders) {
  FgAbelianGroup g;
  g.free_rank = free_rank;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (o.is_zero()) {
      ++g.free_rank;
    } else if (abs(o) != 1) {
      finite.push_back(abs(o));
    }
  }
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const auto& f : invariant_factors(diag))
    if (f != 1) g.torsion.push_back(f);
  return g;
}

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) { return g == h; }

// ---------------------------------------------------------------------------

Subquotient::Subquotient(std::size_t ambient_rank, IntMatrix cycles, IntMatrix boundaries)
    : Subquotient(trusted(ambient_rank, std::move(cycles), std::move(boundaries))) {
  if (!span_contains(cycles_, boundaries_)) {
    throw Error(ErrorCode::MalformedSubquotient, "boundaries are not contained in the cycles");
  }
}

Subquotient Subquotient::trusted(std::size_t ambient_rank, IntMatrix cycles, IntMatrix boundaries) {
  if (cycles.rows() != ambient_rank || boundaries.rows() != ambient_rank) {
    throw Error(ErrorCode::DimensionMismatch, "subquotient generators must live in the ambient lattice");
  }
  Subquotient s;
  s.ambient_rank_ = ambient_rank;
  s.cycles_ = std::move(cycles);
  s.boundaries_ = std::move(boundaries);
  return s;
}

Subquotient Subquotient::free(std::size_t rank) {
  return trusted(rank, IntMatrix::identity(rank), IntMatrix(rank, 0));
}

Subquotient Subquotient::zero(std::size_t ambient_rank) {
  return trusted(ambient_rank, IntMatrix(ambient_rank, 0), IntMatrix(ambient_rank, 0));
}

bool same_subquotient(const Subquotient& a, const Subquotient& b) {
  return a.ambient_rank() == b.ambient_rank() && same_span(a.cycles(), b.cycles()) &&
         same_span(a.boundaries(), b.boundaries());
}

FgAbelianGroup invariants(const Subquotient& g) {
  const IntMatrix basis = column_span_basis(g.cycles());
  auto coords = solve(basis, g.boundaries());
  if (!coords) {
    throw Error(ErrorCode::MalformedSubquotient, "boundaries are not contained in the cycles");
  }
  const auto factors = invariant_factors(*coords);
  FgAbelianGroup out;
  out.free_rank = basis.cols() - factors.size();
  for (const auto& f : factors)
    if (f != 1) out.torsion.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------

SubquotientHom induced(const IntMatrix& f_ambient, const Subquotient& src, const Subquotient& tgt) {
  if (f_ambient.rows() != tgt.ambient_rank() || f_ambient.cols() != src.ambient_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "induced map shape does not match the ambient lattices");
  }
  if (!span_contains(tgt.cycles(), f_ambient * src.cycles())) {
    throw Error(ErrorCode::NotWellDefined, "cycles are not carried into cycles");
  }
  if (!span_contains(tgt.boundaries(), f_ambient * src.boundaries())) {
    throw Error(ErrorCode::NotWellDefined, "boundaries are not carried into boundaries");
  }
  return {src, tgt, f_ambient};
}

SubquotientHom compose(const SubquotientHom& g, const SubquotientHom& f) {
  if (g.source.ambient_rank() != f.target.ambient_rank()) {
    throw Error(ErrorCode::Incomposable, "ambient ranks differ");
  }
  return {f.source, g.target, g.ambient_matrix * f.ambient_matrix};
}

IntMatrix kernel_generators(const SubquotientHom& f) {
  const IntMatrix& z = f.source.cycles();
  const IntMatrix stacked = hstack(f.ambient_matrix * z, f.target.boundaries());
  const IntMatrix ker = kernel_basis(stacked);
  return z * ker.block(0, 0, z.cols(), ker.cols());
}

bool is_injective(const SubquotientHom& f) {
  return span_contains(f.source.boundaries(), kernel_generators(f));
}

bool is_surjective(const SubquotientHom& f) {
  const IntMatrix image = hstack(f.ambient_matrix * f.source.cycles(), f.target.boundaries());
  return span_contains(image, f.target.cycles());
}

bool is_zero_map(const SubquotientHom& f) {
  return span_contains(f.target.boundaries(), f.ambient_matrix * f.source.cycles());
}

ExactnessVerdict is_exact_at(const SubquotientHom& f, const SubquotientHom& g) {
  if (!same_subquotient(f.target, g.source)) {
    throw Error(ErrorCode::Incomposable, "middle groups of the exactness check differ");
  }
  ExactnessVerdict v;
  v.composite_zero =
      span_contains(g.target.boundaries(), g.ambient_matrix * (f.ambient_matrix * f.source.cycles()));
  const IntMatrix image = hstack(f.ambient_matrix * f.source.cycles(), f.target.boundaries());
  v.ker_in_im = span_contains(image, kernel_generators(g));
  return v;
}

}  // namespace fibseq

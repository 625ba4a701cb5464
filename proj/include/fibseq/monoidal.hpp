#pragma once

// Tensor product and internal Hom of chain complexes, the cone on the unit,
// the path functor Hom(Cone(Z), -) and its comparison with path0.

#include "fibseq/chain.hpp"
#include "fibseq/puppe.hpp"

#include <map>
#include <vector>

namespace fibseq {

/// One summand of a composite degree: A_mu (x) B_{n-mu} for tensors,
/// Hom(A_mu, B_{mu+n}) for internal Hom. Blocks appear by ascending mu.
struct BlockEntry {
  int mu;
  std::size_t offset;
  std::size_t size;
};
using BlockIndex = std::map<int, std::vector<BlockEntry>>;

struct GradedProduct {
  ChainComplex complex;
  BlockIndex index;
};

/// d(a (x) b) = da (x) b + (-1)^mu a (x) db for a in A_mu. Basis of
/// A_mu (x) B_nu is ordered as in kron.
GradedProduct tensor(const ChainComplex& a, const ChainComplex& b);
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);

/// Hom_n = prod_mu Hom(A_mu, B_{mu+n}), each block a row-major flattened
/// matrix, with (d f)_mu = d_B f_mu + (-1)^{n+1} f_{mu-1} d_A.
GradedProduct internal_hom(const ChainComplex& a, const ChainComplex& b);

/// Z --id--> Z in degrees 1 and 0.
ChainComplex cone_unit();

/// (Path A)_n = A_n + A_{n+1}, d = [[d, 0], [(-1)^{n+1}, d]]; both the
/// internal Hom description and the block formula are computed and must
/// agree.
PathSpace monoidal_path0(const ChainComplex& a);
PathSpace monoidal_path0_direct(const ChainComplex& a);
PathSpace monoidal_path0_via_hom(const ChainComplex& a);

/// (O A)_n = A_{n+1} with d_n = d_{A,n+1}.
ChainComplex monoidal_loop(const ChainComplex& a);
ChainMap monoidal_loop_map(const ChainMap& f);
/// (K_f)_n = A_n + B_{n+1}, d = [[d_A, 0], [(-1)^{n+1} f, d_B]].
HomotopyKernel monoidal_homotopy_kernel(const ChainMap& f);

/// Chain isomorphisms diag(1, (-1)^{n+1}) between the pointed and monoidal
/// constructions; each is checked to be a chain map over A before returning.
ChainMap compare_path_functors(const ChainComplex& a);
ChainMap compare_kernels(const ChainMap& f);
/// (-1)^{n+1} in degree n, from Omega A to O A.
ChainMap compare_loops(const ChainComplex& a);

const BasedPathFunctor& monoidal_path_functor();

/// Degree-0 cycles of Hom(A, B), i.e. the group of chain maps A -> B.
FgAbelianGroup chain_map_group(const ChainComplex& a, const ChainComplex& b);
/// Chain maps A (x) B -> C versus chain maps A -> Hom(B, C).
bool adjunction_check(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);

}  // namespace fibseq

#pragma once

// Hom-sets [R[n], A] = H_n(A) and the long exact sequences they form along
// a map or along a homotopy fiber sequence.

#include "fibseq/abgrp.hpp"
#include "fibseq/chain.hpp"
#include "fibseq/puppe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibseq {

Subquotient hom_set(int n, const ChainComplex& a);

struct LesNode {
  std::string label;
  int degree;  // homological degree of the group in its own complex
  FgAbelianGroup group;
};

/// Nodes run from the top of the window downwards. maps[i] ends at node i
/// and maps[i + 1] starts there, so maps[0] enters from just above the
/// window and, when present, maps.back() leaves below it. A verdict exists
/// for every node with both an incoming and an outgoing map.
struct LesReport {
  int low = 0;
  int high = -1;
  std::vector<LesNode> nodes;
  std::vector<SubquotientHom> maps;
  std::vector<std::optional<ExactnessVerdict>> verdicts;
};

/// ... -> H_n(X) -> H_n(Y) -> H_{n-1}(K_f) -> H_{n-1}(X) -> ... for n from
/// high down to low; nonnegative maps clip the window at degree 0.
LesReport les_of_map(const ChainMap& f, int low, int high);

/// The same layout for A2 -> A1 -> A0: H_n(A1), H_n(A0), H_{n-1}(A2), with
/// the connecting map obtained by comparing A2 with the homotopy kernel of
/// A1 -> A0. Throws NotFiberSequence if the triple is not one.
LesReport les_of_fiber_sequence(const FiberTriple& t, int low, int high);

/// Recomputes exactness at every node that has maps on both sides.
bool verify(const LesReport& report);

}  // namespace fibseq

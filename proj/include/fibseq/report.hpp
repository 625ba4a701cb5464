#pragma once

// JSON and text renderings of engine results. Object keys are emitted in
// sorted order, so identical inputs give byte-identical output.

#include "fibseq/homset.hpp"
#include "fibseq/modelcat.hpp"
#include "fibseq/puppe.hpp"
#include "fibseq/workspace.hpp"

#include <string>
#include <vector>

namespace fibseq {

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_value(const Integer& x);
Json group_to_json(const FgAbelianGroup& g);
/// Degree -> group for every degree of the support.
Json homology_to_json(const ChainComplex& c);
Json snf_to_json(const SnfDecomposition& s);

Json sequence_to_json(const LongFiberSequence& s, const std::vector<bool>& verdicts);
Json les_to_json(const LesReport& r);
std::string les_to_text(const LesReport& r);
Json witness_to_json(const ModelSquareWitness& w, bool corner_acyclic);
Json comparison_to_json(const ComparisonReport& r);

enum class Format { Json, Text };
std::string emit_report(const Json& report, Format format);

}  // namespace fibseq

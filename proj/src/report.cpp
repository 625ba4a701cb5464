#include "fibseq/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fibseq {

Json integer_value(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

Json group_to_json(const FgAbelianGroup& g) {
  Json t = Json::array();
  for (const auto& x : g.torsion) t.push_back(integer_value(x));
  return {{"free_rank", g.free_rank}, {"torsion", t}};
}

Json homology_to_json(const ChainComplex& c) {
  Json j = Json::object();
  for (const auto& [n, r] : c.ranks()) {
    (void)r;
    j[std::to_string(n)] = group_to_json(homology_group(c, n));
  }
  return j;
}

Json snf_to_json(const SnfDecomposition& s) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < s.rank; ++i) factors.push_back(integer_value(s.D(i, i)));
  return {{"rank", s.rank},
          {"invariant_factors", factors},
          {"D", matrix_to_json(s.D)},
          {"U", matrix_to_json(s.U)},
          {"V", matrix_to_json(s.V)}};
}

namespace {

Json ranks_to_json(const ChainComplex& c) {
  Json j = Json::object();
  for (const auto& [n, r] : c.ranks()) j[std::to_string(n)] = r;
  return j;
}

}  // namespace

Json sequence_to_json(const LongFiberSequence& s, const std::vector<bool>& verdicts) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < s.nodes.size(); ++k) {
    nodes.push_back({{"index", k}, {"ranks", ranks_to_json(s.nodes[k])}, {"homology", homology_to_json(s.nodes[k])}});
  }
  Json triples = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < s.triple_count(); ++k) {
    const bool v = k < verdicts.size() && verdicts[k];
    all = all && v;
    triples.push_back({{"index", k},
                       {"nodes", {k + 2, k + 1, k}},
                       {"corner_ranks", ranks_to_json(s.corners[k].complex)},
                       {"homotopy_fiber_sequence", v}});
  }
  return {{"engine", s.provenance == Provenance::Puppe ? "puppe" : "efunctor"},
          {"functor", s.functor},
          {"depth", s.nodes.size()},
          {"nodes", nodes},
          {"triples", triples},
          {"all_verified", all}};
}

Json les_to_json(const LesReport& r) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    Json node = {{"label", r.nodes[i].label}, {"degree", r.nodes[i].degree}, {"group", group_to_json(r.nodes[i].group)}};
    if (r.verdicts[i]) {
      node["composite_zero"] = r.verdicts[i]->composite_zero;
      node["ker_in_im"] = r.verdicts[i]->ker_in_im;
      node["exact"] = r.verdicts[i]->exact();
    } else {
      node["exact"] = nullptr;
    }
    nodes.push_back(std::move(node));
  }
  return {{"window", {r.low, r.high}}, {"nodes", nodes}, {"maps", r.maps.size()}, {"exact", verify(r)}};
}

std::string les_to_text(const LesReport& r) {
  std::size_t label_width = 5, group_width = 5;
  std::vector<std::string> groups;
  for (const auto& n : r.nodes) {
    groups.push_back(to_string(n.group));
    label_width = std::max(label_width, n.label.size());
    group_width = std::max(group_width, groups.back().size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream os;
  os << "    " << pad("node", label_width) << "  " << pad("group", group_width) << "  exactness\n";
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    std::string verdict = "-";
    if (r.verdicts[i]) verdict = r.verdicts[i]->exact() ? "exact" : "NOT exact";
    os << "--> " << pad(r.nodes[i].label, label_width) << "  " << pad(groups[i], group_width) << "  " << verdict
       << "\n";
  }
  if (r.maps.size() > r.nodes.size()) os << "-->\n";
  return os.str();
}

Json witness_to_json(const ModelSquareWitness& w, bool corner_acyclic) {
  return {{"factorization",
           {{"middle_ranks", ranks_to_json(w.factorization.pf.complex)},
            {"p_is_fibration", is_fibration(w.factorization.p)},
            {"w_is_quasi_iso", is_quasi_iso(w.factorization.w)}}},
          {"pullback_ranks", ranks_to_json(w.pullback.complex)},
          {"pullback_homology", homology_to_json(w.pullback.complex)},
          {"universal_is_quasi_iso", w.verdict},
          {"corner_acyclic", corner_acyclic},
          {"model_square", w.verdict},
          {"homotopy_fiber_sequence", w.verdict && corner_acyclic}};
}

Json comparison_to_json(const ComparisonReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(
        {{"node", m.node}, {"degree", m.degree}, {"left", group_to_json(m.left)}, {"right", group_to_json(m.right)}});
  }
  return {{"nodes_compared", r.nodes_compared}, {"mismatches", mismatches}, {"all_match", r.all_match()}};
}

std::string emit_report(const Json& report, Format format) {
  if (format == Format::Json) return report.dump();
  return report.dump(2);
}

}  // namespace fibseq

#include "fibseq/cli.hpp"

#include "fibseq/error.hpp"
#include "fibseq/homset.hpp"
#include "fibseq/monoidal.hpp"
#include "fibseq/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

namespace fibseq {

namespace {

struct Options {
  std::string workspace;
  std::string complex, map, square;
  std::optional<int> degree;
  unsigned mod_p = 0;
  std::size_t depth = 6;
  std::string variant = "unbounded";
  std::string engine;
  std::string functor = "pointed";
  std::string format = "both";
  int from = -4, to = 4;
  std::size_t triple = 0;
  bool parallel = false;
  bool pretty = false;
  bool fiber = false;
};

ChainMap in_variant(const ChainMap& f, const std::string& v) {
  if (v == "unbounded") return as_unbounded(f);
  return ChainMap(with_variant(f.source(), Variant::NonNegative), with_variant(f.target(), Variant::NonNegative),
                  f.components());
}

const BasedPathFunctor& pick_functor(const std::string& name, Variant v) {
  if (v == Variant::NonNegative) {
    if (name == "monoidal") throw Error(ErrorCode::WrongVariant, "the monoidal path functor needs an unbounded map");
    return truncated_path_functor();
  }
  return name == "monoidal" ? monoidal_path_functor() : pointed_path_functor();
}

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), ws_(Workspace::load(o.workspace)) {}

  int homology() {
    const ChainComplex& c = ws_.complex(o_.complex);
    if (o_.mod_p != 0) {
      Json j = Json::object();
      if (o_.degree) {
        j = {{"degree", *o_.degree}, {"p", o_.mod_p}, {"dimension", homology_dim_mod_p(c, *o_.degree, o_.mod_p)}};
      } else {
        for (const auto& [n, b] : betti_numbers_mod_p(c, o_.mod_p)) j[std::to_string(n)] = b;
      }
      return print(j);
    }
    return print(o_.degree ? group_to_json(homology_group(c, *o_.degree)) : homology_to_json(c));
  }

  int snf_command() {
    if (!o_.degree) throw Error(ErrorCode::Parse, "snf needs --degree");
    if (o_.complex.empty() == o_.map.empty()) throw Error(ErrorCode::Parse, "snf needs exactly one of --complex, --map");
    const IntMatrix m = o_.complex.empty() ? ws_.map(o_.map).at(*o_.degree) : ws_.complex(o_.complex).d(*o_.degree);
    return print(snf_to_json(snf(m)));
  }

  int mapping_cone_command() {
    const ChainMap& f = ws_.map(o_.map);
    const MappingCone mc = mapping_cone(f);
    return print({{"cone", complex_to_json(mc.cone)},
                  {"homology", homology_to_json(mc.cone)},
                  {"quasi_isomorphism", is_quasi_iso(f)}});
  }

  int puppe() {
    const ChainMap f = in_variant(ws_.map(o_.map), o_.variant);
    const BasedPathFunctor& functor = pick_functor(o_.functor, variant_of(f));
    const LongFiberSequence s =
        o_.engine == "efunctor" ? extend_E(f, o_.depth, functor) : puppe_sequence(f, o_.depth, functor);
    const std::vector<bool> verdicts = verify_triples(s, o_.parallel);
    print(sequence_to_json(s, verdicts));
    return all_true(verdicts) ? kExitOk : kExitFalse;
  }

  int les() {
    LesReport r;
    if (o_.engine == "triple") {
      r = les_of_fiber_sequence(triple(), o_.from, o_.to);
    } else {
      r = les_of_map(in_variant(ws_.map(o_.map), o_.variant), o_.from, o_.to);
    }
    if (o_.format != "json") out_ << les_to_text(r);
    if (o_.format != "text") print(les_to_json(r));
    return verify(r) ? kExitOk : kExitFalse;
  }

  int check_square() {
    const CommSquare& s = ws_.square(o_.square);
    const ModelSquareWitness w = is_model_square(s);
    const bool acyclic = is_acyclic(s.left.target());
    print(witness_to_json(w, acyclic));
    const bool ok = o_.fiber ? w.verdict && acyclic : w.verdict;
    return ok ? kExitOk : kExitFalse;
  }

  int compare_paths() {
    const ChainMap f = as_unbounded(ws_.map(o_.map));
    const LongFiberSequence a = puppe_sequence(f, o_.depth, pointed_path_functor());
    const LongFiberSequence b = puppe_sequence(f, o_.depth, monoidal_path_functor());
    // Throws if the degreewise comparison fails to be a chain isomorphism.
    for (const auto& node : a.nodes) compare_path_functors(node);
    const ComparisonReport rep = compare_extensions(a, b);
    Json table = Json::array();
    for (std::size_t k = 0; k < a.nodes.size(); ++k) {
      bool iso = true;
      for (const auto& m : rep.mismatches) iso = iso && m.node != k;
      table.push_back({{"node", k}, {"pointed", homology_to_json(a.nodes[k])},
                       {"monoidal", homology_to_json(b.nodes[k])}, {"isomorphic", iso}});
    }
    print({{"nodes", table}, {"path_comparison_verified", true}, {"all_match", rep.all_match()}});
    return rep.all_match() ? kExitOk : kExitFalse;
  }

  int extend_e() {
    const ChainMap f = in_variant(ws_.map(o_.map), o_.variant);
    const BasedPathFunctor& functor = pick_functor(o_.functor, variant_of(f));
    const LongFiberSequence e = extend_E(f, o_.depth, functor);
    const LongFiberSequence p = puppe_sequence(f, o_.depth, functor);
    const std::vector<bool> verdicts = verify_triples(e, o_.parallel);
    bool fibrations = true;
    for (const auto& a : e.arrows) fibrations = fibrations && is_fibration(a);
    const ComparisonReport rep = compare_extensions(p, e);
    print({{"sequence", sequence_to_json(e, verdicts)},
           {"arrows_are_fibrations", fibrations},
           {"comparison", comparison_to_json(rep)}});
    return all_true(verdicts) && fibrations && rep.all_match() ? kExitOk : kExitFalse;
  }

 private:
  FiberTriple triple() {
    if (!o_.square.empty()) {
      const CommSquare& s = ws_.square(o_.square);
      return {s.top, s.right, Corner{s.left.target(), s.left, s.bottom}};
    }
    const ChainMap f = in_variant(ws_.map(o_.map), o_.variant);
    const LongFiberSequence s = puppe_sequence(f, o_.triple + 3, pick_functor(o_.functor, variant_of(f)));
    return s.triple(o_.triple);
  }

  int print(const Json& j) {
    out_ << (o_.pretty ? j.dump(2) : emit_report(j, Format::Json)) << "\n";
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
  Workspace ws_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homotopy fiber sequences of integral chain complexes", "fibseq"};
  app.require_subcommand(1);
  app.add_option("-w,--workspace", o.workspace, "workspace JSON file")->required();
  app.add_flag("--pretty", o.pretty, "indent JSON output");

  auto* homology = app.add_subcommand("homology", "homology groups of a complex");
  homology->add_option("--complex", o.complex)->required();
  homology->add_option("--degree", o.degree);
  homology->add_option("--mod-p", o.mod_p, "dimensions over Z/p instead")->check(CLI::Range(2u, 1u << 30));

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a differential or map component");
  snf_cmd->add_option("--complex", o.complex);
  snf_cmd->add_option("--map", o.map);
  snf_cmd->add_option("--degree", o.degree)->required();

  auto* cone = app.add_subcommand("mapping-cone", "mapping cone of a map");
  cone->add_option("--map", o.map)->required();

  const std::vector<std::string> variants{"unbounded", "nonnegative"};
  auto* puppe = app.add_subcommand("puppe", "Puppe sequence of a map with triple verdicts");
  puppe->add_option("--map", o.map)->required();
  puppe->add_option("--depth", o.depth)->check(CLI::Range(2, 64));
  puppe->add_option("--variant", o.variant)->check(CLI::IsMember(variants));
  puppe->add_option("--engine", o.engine)->check(CLI::IsMember({"puppe", "efunctor"}));
  puppe->add_option("--functor", o.functor)->check(CLI::IsMember({"pointed", "monoidal"}));
  puppe->add_flag("--parallel", o.parallel);

  auto* les = app.add_subcommand("les", "long exact homology sequence");
  les->add_option("--map", o.map);
  les->add_option("--square", o.square, "fiber sequence given as a square (engine triple)");
  les->add_option("--from", o.from);
  les->add_option("--to", o.to);
  les->add_option("--engine", o.engine)->check(CLI::IsMember({"map", "triple"}));
  les->add_option("--triple", o.triple, "index of the Puppe triple used by engine triple");
  les->add_option("--variant", o.variant)->check(CLI::IsMember(variants));
  les->add_option("--functor", o.functor)->check(CLI::IsMember({"pointed", "monoidal"}));
  les->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "both"}));

  auto* square = app.add_subcommand("check-square", "model-square witness for a named square");
  square->add_option("--square", o.square)->required();
  square->add_flag("--fiber", o.fiber, "also require an acyclic lower-left corner");

  auto* compare = app.add_subcommand("compare-paths", "Puppe sequences from the pointed and monoidal path functors");
  compare->add_option("--map", o.map)->required();
  compare->add_option("--depth", o.depth)->check(CLI::Range(2, 64));

  auto* ext = app.add_subcommand("extend-e", "E-functor extension compared with the Puppe sequence");
  ext->add_option("--map", o.map)->required();
  ext->add_option("--depth", o.depth)->check(CLI::Range(2, 64));
  ext->add_option("--variant", o.variant)->check(CLI::IsMember(variants));
  ext->add_option("--functor", o.functor)->check(CLI::IsMember({"pointed", "monoidal"}));
  ext->add_flag("--parallel", o.parallel);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (les->parsed() && o.engine != "triple" && o.map.empty()) {
      throw Error(ErrorCode::Parse, "les needs --map");
    }
    if (les->parsed() && o.engine == "triple" && o.map.empty() && o.square.empty()) {
      throw Error(ErrorCode::Parse, "les --engine triple needs --map or --square");
    }
    Runner r(o, out);
    if (homology->parsed()) return r.homology();
    if (snf_cmd->parsed()) return r.snf_command();
    if (cone->parsed()) return r.mapping_cone_command();
    if (puppe->parsed()) return r.puppe();
    if (les->parsed()) return r.les();
    if (square->parsed()) return r.check_square();
    if (compare->parsed()) return r.compare_paths();
    if (ext->parsed()) return r.extend_e();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace fibseq

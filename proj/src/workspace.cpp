#include "fibseq/workspace.hpp"

#include "fibseq/error.hpp"

#include <fstream>
#include <sstream>

namespace fibseq {

namespace {

int parse_degree(const std::string& key, const std::string& where) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw Error(ErrorCode::Parse, where + ": bad degree key '" + key + "'");
  return n;
}

Integer parse_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw Error(ErrorCode::Parse, where + ": '" + s + "' is not a decimal integer");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw Error(ErrorCode::Parse, where + ": matrix entries must be integers or decimal strings");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw Error(ErrorCode::Parse, where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::map<int, IntMatrix> components_from_json(const Json& j, const ChainComplex& src, const ChainComplex& tgt,
                                              const std::string& where) {
  std::map<int, IntMatrix> comps;
  if (!j.is_object()) throw Error(ErrorCode::Parse, where + ": components must be an object");
  for (const auto& [key, value] : j.items()) {
    const int n = parse_degree(key, where);
    comps[n] = matrix_from_json(value, tgt.rank(n), src.rank(n), where + " component " + key);
  }
  return comps;
}

}  // namespace

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, where + ": matrix must be an array of rows");
  if (j.size() != rows) {
    throw Error(ErrorCode::InvalidComplex, where + ": expected " + std::to_string(rows) + " rows, found " +
                                               std::to_string(j.size()));
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorCode::InvalidComplex, where + ": row " + std::to_string(i) + " must have " +
                                                 std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_integer(j[i][c], where);
  }
  return m;
}

Json integer_to_json(const Integer& x) { return x.str(); }

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ChainComplex complex_from_json(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") && j["name"].is_string()
                               ? j["name"].get<std::string>()
                               : std::string("<unnamed>");
  const std::string where = "complex " + name;
  Variant variant = Variant::Unbounded;
  if (j.contains("variant")) {
    const std::string v = string_field(j, "variant", where);
    if (v == "nonnegative") {
      variant = Variant::NonNegative;
    } else if (v != "unbounded") {
      throw Error(ErrorCode::Parse, where + ": variant must be 'unbounded' or 'nonnegative'");
    }
  }
  std::map<int, std::size_t> ranks;
  const Json& jr = field(j, "ranks", where);
  if (!jr.is_object()) throw Error(ErrorCode::Parse, where + ": ranks must be an object");
  for (const auto& [key, value] : jr.items()) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
      throw Error(ErrorCode::Parse, where + ": rank at degree " + key + " must be a nonnegative integer");
    }
    ranks[parse_degree(key, where)] = value.get<std::size_t>();
  }
  auto rank = [&](int n) {
    auto it = ranks.find(n);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  std::map<int, IntMatrix> diffs;
  if (j.contains("diffs")) {
    const Json& jd = j.at("diffs");
    if (!jd.is_object()) throw Error(ErrorCode::Parse, where + ": diffs must be an object");
    for (const auto& [key, value] : jd.items()) {
      const int n = parse_degree(key, where);
      diffs[n] = matrix_from_json(value, rank(n - 1), rank(n), where + " d_" + key);
    }
  }
  try {
    return ChainComplex(std::move(ranks), std::move(diffs), variant);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.detail());
  }
}

Json complex_to_json(const ChainComplex& c) {
  Json j;
  j["variant"] = to_string(c.variant());
  j["ranks"] = Json::object();
  for (const auto& [n, r] : c.ranks()) j["ranks"][std::to_string(n)] = r;
  j["diffs"] = Json::object();
  for (const auto& [n, m] : c.diffs()) j["diffs"][std::to_string(n)] = matrix_to_json(m);
  return j;
}

// ---------------------------------------------------------------------------

Workspace Workspace::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "workspace must be a JSON object");
  Workspace ws;
  auto entries = [&](const char* key) {
    if (!j.contains(key)) return Json::array();
    if (!j.at(key).is_array()) throw Error(ErrorCode::Parse, std::string(key) + " must be an array");
    return j.at(key);
  };
  for (const auto& jc : entries("complexes")) {
    ws.add_complex(string_field(jc, "name", "complex"), complex_from_json(jc));
  }
  for (const auto& jm : entries("maps")) {
    const std::string name = string_field(jm, "name", "map");
    const std::string where = "map " + name;
    const std::string src = string_field(jm, "source", where);
    const std::string tgt = string_field(jm, "target", where);
    const Json comps = jm.contains("components") ? jm.at("components") : Json::object();
    ws.add_map(name, src, tgt, components_from_json(comps, ws.complex(src), ws.complex(tgt), where));
  }
  for (const auto& js : entries("squares")) {
    const std::string name = string_field(js, "name", "square");
    const std::string where = "square " + name;
    ws.add_square(name, string_field(js, "top", where), string_field(js, "left", where),
                  string_field(js, "right", where), string_field(js, "bottom", where));
  }
  return ws;
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open workspace file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return from_json(j);
}

Json Workspace::to_json() const {
  Json j;
  j["complexes"] = Json::array();
  for (const auto& [name, c] : complexes_) {
    Json jc = complex_to_json(c);
    jc["name"] = name;
    j["complexes"].push_back(std::move(jc));
  }
  j["maps"] = Json::array();
  for (const auto& [name, e] : maps_) {
    Json jm;
    jm["name"] = name;
    jm["source"] = e.source;
    jm["target"] = e.target;
    jm["components"] = Json::object();
    for (const auto& [n, m] : e.map.components()) jm["components"][std::to_string(n)] = matrix_to_json(m);
    j["maps"].push_back(std::move(jm));
  }
  j["squares"] = Json::array();
  for (const auto& [name, e] : squares_) {
    j["squares"].push_back({{"name", name}, {"top", e.top}, {"left", e.left}, {"right", e.right}, {"bottom", e.bottom}});
  }
  return j;
}

void Workspace::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write workspace file " + path);
  out << to_json().dump(2) << "\n";
}

void Workspace::add_complex(const std::string& name, ChainComplex c) {
  if (complexes_.count(name)) throw Error(ErrorCode::Parse, "duplicate complex name " + name);
  complexes_.emplace(name, std::move(c));
}

void Workspace::add_map(const std::string& name, const std::string& source, const std::string& target,
                        std::map<int, IntMatrix> components) {
  if (maps_.count(name)) throw Error(ErrorCode::Parse, "duplicate map name " + name);
  try {
    maps_.emplace(name, MapEntry{source, target, ChainMap(complex(source), complex(target), std::move(components))});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownName) throw;
    throw Error(e.code(), "map " + name + ": " + e.detail());
  }
}

void Workspace::add_square(const std::string& name, const std::string& top, const std::string& left,
                           const std::string& right, const std::string& bottom) {
  if (squares_.count(name)) throw Error(ErrorCode::Parse, "duplicate square name " + name);
  CommSquare s{map(top), map(left), map(right), map(bottom)};
  try {
    s.validate();
  } catch (const Error& e) {
    throw Error(e.code(), "square " + name + ": " + e.detail());
  }
  squares_.emplace(name, SquareEntry{top, left, right, bottom, std::move(s)});
}

const ChainComplex& Workspace::complex(const std::string& name) const {
  auto it = complexes_.find(name);
  if (it == complexes_.end()) throw Error(ErrorCode::UnknownName, "no complex named " + name);
  return it->second;
}

const ChainMap& Workspace::map(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw Error(ErrorCode::UnknownName, "no map named " + name);
  return it->second.map;
}

const CommSquare& Workspace::square(const std::string& name) const {
  auto it = squares_.find(name);
  if (it == squares_.end()) throw Error(ErrorCode::UnknownName, "no square named " + name);
  return it->second.square;
}

}  // namespace fibseq

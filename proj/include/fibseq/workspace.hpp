#pragma once

// A named collection of complexes, maps and squares stored as one JSON file.

#include "fibseq/chain.hpp"
#include "fibseq/modelcat.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace fibseq {

using Json = nlohmann::json;

/// Matrices are arrays of rows; entries may be decimal strings or numbers.
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json matrix_to_json(const IntMatrix& m);
Json integer_to_json(const Integer& x);

ChainComplex complex_from_json(const Json& j);
Json complex_to_json(const ChainComplex& c);

struct MapEntry {
  std::string source;
  std::string target;
  ChainMap map;
};

struct SquareEntry {
  std::string top, left, right, bottom;
  CommSquare square;
};

class Workspace {
 public:
  static Workspace from_json(const Json& j);
  static Workspace load(const std::string& path);
  Json to_json() const;
  void save(const std::string& path) const;

  void add_complex(const std::string& name, ChainComplex c);
  void add_map(const std::string& name, const std::string& source, const std::string& target,
               std::map<int, IntMatrix> components);
  void add_square(const std::string& name, const std::string& top, const std::string& left,
                  const std::string& right, const std::string& bottom);

  /// Throw UnknownName for missing entries.
  const ChainComplex& complex(const std::string& name) const;
  const ChainMap& map(const std::string& name) const;
  const CommSquare& square(const std::string& name) const;

  const std::map<std::string, ChainComplex>& complexes() const { return complexes_; }
  const std::map<std::string, MapEntry>& maps() const { return maps_; }
  const std::map<std::string, SquareEntry>& squares() const { return squares_; }

 private:
  std::map<std::string, ChainComplex> complexes_;
  std::map<std::string, MapEntry> maps_;
  std::map<std::string, SquareEntry> squares_;
};

}  // namespace fibseq

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hklattice/hilbert.hpp"
#include "hklattice/lattice.hpp"
#include "hklattice/mukai.hpp"

namespace hklattice {

/// Write-only JSON tree with exact arbitrary-precision integers (orbit
/// coordinates routinely outgrow int64, which rules out the usual JSON
/// number types on the emit side). Object keys keep insertion order so a
/// command's stdout is byte-identical across runs.
class JsonOut {
 public:
  JsonOut() : kind_(Kind::null) {}
  static JsonOut boolean(bool b);
  static JsonOut integer(Int v);
  static JsonOut real(double v);
  static JsonOut str(std::string s);
  static JsonOut array(std::vector<JsonOut> items = {});
  static JsonOut object();

  JsonOut& push(JsonOut item);                      // array append
  JsonOut& set(const std::string& key, JsonOut v);  // object insert

  /// Compact (no whitespace) or pretty (2-space indent) rendering.
  std::string dump(bool pretty = false) const;

  static JsonOut vec(const Vec& v);
  static JsonOut vec_list(const std::vector<Vec>& vs);
  static JsonOut mukai(const MukaiVector& v);
  static JsonOut hilbert(const HilbertClass& h);

 private:
  enum class Kind { null, boolean, integer, real, string, array, object };
  Kind kind_;
  bool b_ = false;
  Int i_ = 0;
  double r_ = 0;
  std::string s_;
  std::vector<JsonOut> items_;
  std::vector<std::pair<std::string, JsonOut>> fields_;

  void render(std::string& out, bool pretty, int depth) const;
};

/// Exact decimal rendering of a double for display fields; integers stay
/// integral-looking with a trailing ".0" so they cannot be mistaken for
/// exact values.
std::string format_double(double v);

// Parse-side helpers (thin wrappers over the vendored JSON parser). All
// throw ParseError on malformed shape; integer values must fit in int64.
struct ParsedJson;
class JsonIn {
 public:
  static JsonIn parse(const std::string& text);
  static JsonIn parse_file(const std::string& path);  // "-" reads stdin
  ~JsonIn();
  JsonIn(JsonIn&&) noexcept;
  JsonIn& operator=(JsonIn&&) noexcept;

  bool has(const std::string& key) const;
  JsonIn at(const std::string& key) const;
  Int as_int() const;
  Vec as_vec() const;
  std::vector<Vec> as_vec_list() const;
  Mat as_mat() const;

  Lattice as_lattice() const;           // {"rank": n, "gram": [[...]]}
  MukaiVector as_mukai() const;         // {"r":, "ell": [...], "s":}
  K3AlgebraicData as_k3() const;        // {"ns_gram": [[...]], "ell": [...], "ample": [...]}
  HilbertClass as_hilbert(const Lattice& ns) const;  // {"n":, "mu": [...], "xi":}

 private:
  JsonIn();
  std::unique_ptr<ParsedJson> p_;
};

}  // namespace hklattice

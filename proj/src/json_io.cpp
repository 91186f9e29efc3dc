#include "hklattice/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "hklattice/errors.hpp"

namespace hklattice {

JsonOut JsonOut::boolean(bool b) {
  JsonOut j;
  j.kind_ = Kind::boolean;
  j.b_ = b;
  return j;
}

JsonOut JsonOut::integer(Int v) {
  JsonOut j;
  j.kind_ = Kind::integer;
  j.i_ = std::move(v);
  return j;
}

JsonOut JsonOut::real(double v) {
  JsonOut j;
  j.kind_ = Kind::real;
  j.r_ = v;
  return j;
}

JsonOut JsonOut::str(std::string s) {
  JsonOut j;
  j.kind_ = Kind::string;
  j.s_ = std::move(s);
  return j;
}

JsonOut JsonOut::array(std::vector<JsonOut> items) {
  JsonOut j;
  j.kind_ = Kind::array;
  j.items_ = std::move(items);
  return j;
}

JsonOut JsonOut::object() {
  JsonOut j;
  j.kind_ = Kind::object;
  return j;
}

JsonOut& JsonOut::push(JsonOut item) {
  items_.push_back(std::move(item));
  return *this;
}

JsonOut& JsonOut::set(const std::string& key, JsonOut v) {
  fields_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

static void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

void JsonOut::render(std::string& out, bool pretty, int depth) const {
  auto indent = [&](int d) {
    if (pretty) {
      out += '\n';
      out.append(static_cast<std::size_t>(d) * 2, ' ');
    }
  };
  switch (kind_) {
    case Kind::null: out += "null"; break;
    case Kind::boolean: out += b_ ? "true" : "false"; break;
    case Kind::integer: out += i_.str(); break;
    case Kind::real: out += format_double(r_); break;
    case Kind::string: append_escaped(out, s_); break;
    case Kind::array: {
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        indent(depth + 1);
        items_[i].render(out, pretty, depth + 1);
      }
      if (!items_.empty()) indent(depth);
      out += ']';
      break;
    }
    case Kind::object: {
      out += '{';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ',';
        indent(depth + 1);
        append_escaped(out, fields_[i].first);
        out += pretty ? ": " : ":";
        fields_[i].second.render(out, pretty, depth + 1);
      }
      if (!fields_.empty()) indent(depth);
      out += '}';
      break;
    }
  }
}

std::string JsonOut::dump(bool pretty) const {
  std::string out;
  render(out, pretty, 0);
  return out;
}

JsonOut JsonOut::vec(const Vec& v) {
  JsonOut a = array();
  for (const auto& c : v) a.push(integer(c));
  return a;
}

JsonOut JsonOut::vec_list(const std::vector<Vec>& vs) {
  JsonOut a = array();
  for (const auto& v : vs) a.push(vec(v));
  return a;
}

JsonOut JsonOut::mukai(const MukaiVector& v) {
  JsonOut o = object();
  o.set("r", integer(v.r));
  o.set("ell", vec(v.ell_part));
  o.set("s", integer(v.s));
  return o;
}

JsonOut JsonOut::hilbert(const HilbertClass& h) {
  JsonOut o = object();
  o.set("n", integer(h.n));
  o.set("mu", vec(h.mu_part));
  o.set("xi", integer(h.xi_coeff));
  return o;
}

// ---------------------------------------------------------------------------

struct ParsedJson {
  nlohmann::json j;
};

JsonIn::JsonIn() : p_(new ParsedJson) {}
JsonIn::~JsonIn() = default;
JsonIn::JsonIn(JsonIn&&) noexcept = default;
JsonIn& JsonIn::operator=(JsonIn&&) noexcept = default;

JsonIn JsonIn::parse(const std::string& text) {
  JsonIn in;
  try {
    in.p_->j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return in;
}

JsonIn JsonIn::parse_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse(ss.str());
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

bool JsonIn::has(const std::string& key) const {
  return p_->j.is_object() && p_->j.contains(key);
}

JsonIn JsonIn::at(const std::string& key) const {
  if (!has(key)) throw ParseError("missing JSON key \"" + key + "\"");
  JsonIn in;
  in.p_->j = p_->j.at(key);
  return in;
}

static Int int_of(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  throw ParseError(std::string(what) + " must be a JSON integer");
}

Int JsonIn::as_int() const { return int_of(p_->j, "value"); }

Vec JsonIn::as_vec() const {
  if (!p_->j.is_array()) throw ParseError("expected a JSON array of integers");
  Vec v;
  for (const auto& e : p_->j) v.push_back(int_of(e, "vector entry"));
  return v;
}

Mat JsonIn::as_mat() const {
  if (!p_->j.is_array()) throw ParseError("expected a JSON array of rows");
  Mat m;
  for (const auto& row : p_->j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    Vec r;
    for (const auto& e : row) r.push_back(int_of(e, "matrix entry"));
    m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) throw ParseError("matrix must be square");
  return m;
}

std::vector<Vec> JsonIn::as_vec_list() const {
  if (!p_->j.is_array()) throw ParseError("expected a JSON array of vectors");
  std::vector<Vec> vs;
  for (const auto& e : p_->j) {
    JsonIn in;
    in.p_->j = e;
    vs.push_back(in.as_vec());
  }
  return vs;
}

Lattice JsonIn::as_lattice() const {
  Mat g = at("gram").as_mat();
  if (has("rank")) {
    Int r = at("rank").as_int();
    if (r != g.size()) throw ParseError("rank does not match gram size");
  }
  try {
    return Lattice(std::move(g));
  } catch (const NotSymmetric& e) {
    throw ParseError(e.what());
  }
}

MukaiVector JsonIn::as_mukai() const {
  return MukaiVector{at("r").as_int(), at("ell").as_vec(), at("s").as_int()};
}

K3AlgebraicData JsonIn::as_k3() const {
  Lattice ns{at("ns_gram").as_mat()};
  return K3AlgebraicData(std::move(ns), at("ell").as_vec(), at("ample").as_vec());
}

HilbertClass JsonIn::as_hilbert(const Lattice& ns) const {
  Int n = at("n").as_int();
  return HilbertClass(ns, at("mu").as_vec(), at("xi").as_int(),
                      static_cast<int>(n.convert_to<long>()));
}

}  // namespace hklattice

#include "dehn/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

using json = nlohmann::json;

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key)) throw ParseError(where + ": unknown key \"" + key + "\"");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(where + "." + key + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

const json& get_array(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_array()) throw ParseError(where + "." + key + ": expected an array");
  return v;
}

Rational get_rational(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
  } catch (const InvalidInput& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational written as a string \"p/q\"");
}

void line_column(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

GradedLieAlgebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line, column;
    line_column(text, e.byte, line, column);
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, column);
  }
  const std::string top = "algebra";
  check_keys(doc, top, {"name", "weight_dim", "a_rank", "fields", "basis", "brackets"}, {"a_nonabelian"});
  std::string name = get_string(doc, "name", top);
  std::size_t weight_dim = get_count(doc, "weight_dim", top);
  std::size_t a_rank = get_count(doc, "a_rank", top);
  bool nonabelian = false;
  if (doc.contains("a_nonabelian")) {
    if (!doc["a_nonabelian"].is_boolean()) throw ParseError(top + ".a_nonabelian: expected a boolean");
    nonabelian = doc["a_nonabelian"].get<bool>();
  }

  std::vector<FieldComponent> fields;
  const json& jf = get_array(doc, "fields", top);
  for (std::size_t i = 0; i < jf.size(); ++i) {
    std::string where = "fields[" + std::to_string(i) + "]";
    check_keys(jf[i], where, {"id", "kind"}, {"residue_prime"});
    FieldComponent f;
    f.id = get_string(jf[i], "id", where);
    std::string kind = get_string(jf[i], "kind", where);
    if (kind == "archimedean") f.kind = FieldKind::archimedean;
    else if (kind == "non-archimedean") f.kind = FieldKind::non_archimedean;
    else throw ParseError(where + ".kind: expected \"archimedean\" or \"non-archimedean\"");
    if (jf[i].contains("residue_prime")) f.residue_prime = static_cast<long>(get_count(jf[i], "residue_prime", where));
    fields.push_back(std::move(f));
  }

  std::vector<BasisElement> basis;
  const json& jb = get_array(doc, "basis", top);
  for (std::size_t i = 0; i < jb.size(); ++i) {
    std::string where = "basis[" + std::to_string(i) + "]";
    check_keys(jb[i], where, {"name", "field", "weight"});
    BasisElement b;
    b.name = get_string(jb[i], "name", where);
    b.field = get_string(jb[i], "field", where);
    const json& w = get_array(jb[i], "weight", where);
    for (std::size_t k = 0; k < w.size(); ++k)
      b.weight.coords.push_back(get_rational(w[k], where + ".weight[" + std::to_string(k) + "]"));
    basis.push_back(std::move(b));
  }

  GradedLieAlgebra g;
  try {
    g = GradedLieAlgebra(name, weight_dim, a_rank, fields, basis);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  g.set_a_nonabelian(nonabelian);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json& jk = get_array(doc, "brackets", top);
  for (std::size_t i = 0; i < jk.size(); ++i) {
    std::string where = "brackets[" + std::to_string(i) + "]";
    check_keys(jk[i], where, {"left", "right", "terms"});
    std::string left = get_string(jk[i], "left", where), right = get_string(jk[i], "right", where);
    auto a = g.index_of(left), b = g.index_of(right);
    if (!a) throw ParseError(where + ".left: unknown basis element \"" + left + "\"");
    if (!b) throw ParseError(where + ".right: unknown basis element \"" + right + "\"");
    if (*a == *b) throw ParseError(where + ": bracket of \"" + left + "\" with itself");
    if (!seen.insert({std::min(*a, *b), std::max(*a, *b)}).second)
      throw ParseError(where + ": pair {" + left + ", " + right + "} listed twice");
    Vector v = zero_vector(g.dim());
    const json& terms = get_array(jk[i], "terms", where);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::string tw = where + ".terms[" + std::to_string(t) + "]";
      check_keys(terms[t], tw, {"basis", "coeff"});
      std::string bn = get_string(terms[t], "basis", tw);
      auto k = g.index_of(bn);
      if (!k) throw ParseError(tw + ".basis: unknown basis element \"" + bn + "\"");
      v[*k] += get_rational(terms[t].at("coeff"), tw + ".coeff");
    }
    g.set_bracket(*a, *b, v);
  }
  return g;
}

GradedLieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string serialize_algebra(const GradedLieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["weight_dim"] = g.weight_dim();
  doc["a_rank"] = g.a_rank();
  if (g.a_nonabelian()) doc["a_nonabelian"] = true;
  json fields = json::array();
  for (const auto& f : g.fields()) {
    json jf;
    jf["id"] = f.id;
    jf["kind"] = f.kind == FieldKind::archimedean ? "archimedean" : "non-archimedean";
    if (f.residue_prime) jf["residue_prime"] = *f.residue_prime;
    fields.push_back(jf);
  }
  doc["fields"] = fields;
  json basis = json::array();
  for (const auto& b : g.basis()) {
    json w = json::array();
    for (const auto& c : b.weight.coords) w.push_back(to_string(c));
    basis.push_back({{"name", b.name}, {"field", b.field}, {"weight", w}});
  }
  doc["basis"] = basis;
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto& terms = g.bracket_terms(i, j);
      if (terms.empty()) continue;
      json jt = json::array();
      for (const auto& [k, c] : terms) jt.push_back({{"basis", g.basis()[k].name}, {"coeff", to_string(c)}});
      brackets.push_back({{"left", g.basis()[i].name}, {"right", g.basis()[j].name}, {"terms", jt}});
    }
  doc["brackets"] = brackets;
  return doc.dump(2) + "\n";
}

}  // namespace dehn

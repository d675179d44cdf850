#include "p23/io.hpp"

#include <set>
#include <unordered_set>

namespace p23 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) fail("unknown key '" + key + "' in " + where);
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::size_t read_count(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

// 1-based index in [1, n], returned 0-based.
std::size_t read_index(const Json& v, std::size_t n, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  auto i = v.get<std::int64_t>();
  if (i < 1 || std::uint64_t(i) > n) fail(what + " = " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return std::size_t(i - 1);
}

Vec read_coords(const Json& v, std::size_t n, const Field& f, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of scalar strings");
  if (v.size() != n) fail(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  Vec out;
  out.reserve(n);
  for (const auto& s : v) {
    if (!s.is_string()) fail(what + " entries must be strings");
    out.push_back(f.parse(s.get<std::string>()));
  }
  return out;
}

Field read_field(const Json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() != "Q") fail("field must be \"Q\" or {\"Fp\": p}");
    return Field::rationals();
  }
  require_keys(v, "field", {"Fp"});
  const Json& p = member(v, "Fp", "field");
  if (!p.is_number_unsigned()) fail("field modulus must be a positive integer");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  Json out = Json::object();
  out["Fp"] = f.characteristic();
  return out;
}

const std::unordered_set<std::string>& derived_identity_names() {
  static const std::unordered_set<std::string> names = {kBracketSymmetry,  kDerivationMiddle, kDerivationLast,
                                                        kProductRuleFirst, kProductRuleMiddle, kProductRuleLast,
                                                        kProductRuleAll,   kPowerRule};
  return names;
}

bool is_flat(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump_to(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * std::size_t(depth + 1), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      dump_to(out, value, depth + 1);
    }
    out += "\n" + std::string(2 * std::size_t(depth), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_to(out, j[i], depth + 1);
    }
    out += "\n" + std::string(2 * std::size_t(depth), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(out, j, 0);
  return out + "\n";
}

AlgebraPtr parse_algebra_file(std::string_view text) {
  const Json doc = parse_json(text);
  const std::string where = "algebra file";
  require_keys(doc, where, {"format_version", "field", "dim", "labels", "identity", "product", "bracket"});
  const Json& version = member(doc, "format_version", where);
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    fail("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  const Field f = read_field(member(doc, "field", where));
  const std::size_t n = read_count(member(doc, "dim", where), "dim");

  AlgebraBuilder b(n, f);
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) fail("labels must be an array of " + std::to_string(n) + " strings");
    std::vector<std::string> labels;
    for (const auto& l : *it) {
      if (!l.is_string()) fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    b.set_labels(std::move(labels));
  }
  if (auto it = doc.find("identity"); it != doc.end()) b.set_identity(read_coords(*it, n, f, "identity"));

  if (auto it = doc.find("product"); it != doc.end()) {
    if (!it->is_array()) fail("product must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : *it) {
      require_keys(e, "product entry", {"i", "j", "coords"});
      std::size_t i = read_index(member(e, "i", "product entry"), n, "product index i");
      std::size_t j = read_index(member(e, "j", "product entry"), n, "product index j");
      if (i > j) fail("product entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") violates i <= j");
      if (!seen.emplace(i, j).second)
        fail("duplicate product entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      b.set_product(i, j, read_coords(member(e, "coords", "product entry"), n, f, "product coords"));
    }
  }
  if (auto it = doc.find("bracket"); it != doc.end()) {
    if (!it->is_array()) fail("bracket must be an array");
    std::set<std::array<std::size_t, 3>> seen;
    for (const auto& e : *it) {
      require_keys(e, "bracket entry", {"i", "j", "k", "coords"});
      std::size_t i = read_index(member(e, "i", "bracket entry"), n, "bracket index i");
      std::size_t j = read_index(member(e, "j", "bracket entry"), n, "bracket index j");
      std::size_t k = read_index(member(e, "k", "bracket entry"), n, "bracket index k");
      std::string tuple = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
      if (!(i < j && j < k)) fail("bracket entry " + tuple + " violates i < j < k");
      if (!seen.insert({i, j, k}).second) fail("duplicate bracket entry " + tuple);
      b.set_bracket(i, j, k, read_coords(member(e, "coords", "bracket entry"), n, f, "bracket coords"));
    }
  }
  return b.build();
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json to_json(const Algebra& a) {
  Json out = Json::object();
  out["format_version"] = kFormatVersion;
  out["field"] = field_json(a.field());
  out["dim"] = a.dim();
  if (!a.labels().empty()) out["labels"] = a.labels();
  if (a.identity()) out["identity"] = to_json(*a.identity());
  Json product = Json::array();
  for (const auto& e : a.product_entries()) {
    Json entry = Json::object();
    entry["i"] = e.i + 1;
    entry["j"] = e.j + 1;
    entry["coords"] = to_json(e.coords);
    product.push_back(std::move(entry));
  }
  out["product"] = std::move(product);
  Json bracket = Json::array();
  for (const auto& e : a.bracket_entries()) {
    Json entry = Json::object();
    entry["i"] = e.i + 1;
    entry["j"] = e.j + 1;
    entry["k"] = e.k + 1;
    entry["coords"] = to_json(e.coords);
    bracket.push_back(std::move(entry));
  }
  out["bracket"] = std::move(bracket);
  return out;
}

std::string write_algebra_file(const Algebra& a) { return dump(to_json(a)); }

Matrix parse_generator_file(std::string_view text, const Algebra& a) {
  const Json doc = parse_json(text);
  const std::string where = "generator file";
  require_keys(doc, where, {"format_version", "dim", "generators"});
  const Json& version = member(doc, "format_version", where);
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    fail("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  std::size_t n = read_count(member(doc, "dim", where), "dim");
  if (n != a.dim()) fail("generator file dim " + std::to_string(n) + " does not match algebra dim " + std::to_string(a.dim()));
  const Json& gens = member(doc, "generators", where);
  if (!gens.is_array()) fail("generators must be an array");
  Matrix out;
  for (const auto& g : gens) out.push_back(read_coords(g, n, a.field(), "generator"));
  return out;
}

std::string write_generator_file(const Subspace& s) {
  Json out = Json::object();
  out["format_version"] = kFormatVersion;
  out["dim"] = s.ambient_dim();
  Json gens = Json::array();
  for (const auto& row : s.basis()) gens.push_back(to_json(row));
  out["generators"] = std::move(gens);
  return dump(out);
}

Json to_json(const Subspace& s) {
  Json out = Json::object();
  out["dim"] = s.dim();
  Json basis = Json::array();
  for (const auto& row : s.basis()) basis.push_back(to_json(row));
  out["basis"] = std::move(basis);
  return out;
}

Json to_json(const Violation& v) {
  Json out = Json::object();
  out["axiom"] = v.axiom;
  if (derived_identity_names().count(v.axiom) != 0) {
    out["trial"] = v.witness.empty() ? 0 : v.witness.front();
    Json params = Json::array();
    for (std::size_t i = 1; i < v.witness.size(); ++i) params.push_back(v.witness[i]);
    out["params"] = std::move(params);
  } else {
    Json witness = Json::array();
    for (auto i : v.witness) witness.push_back(i + 1);
    out["witness"] = std::move(witness);
  }
  out["lhs"] = to_json(v.lhs);
  out["rhs"] = to_json(v.rhs);
  return out;
}

Json to_json(const AxiomReport& r) {
  Json out = Json::object();
  out["passed"] = r.passed();
  out["checks"] = r.checks;
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  out["violations"] = std::move(violations);
  return out;
}

Json to_json(const SchurReport& r) {
  Json out = Json::object();
  out["center"] = to_json(r.center);
  out["codim_d"] = r.codim_d;
  out["derived"] = to_json(r.derived);
  out["K"] = to_json(r.K);
  out["dim_K"] = r.dim_K;
  out["bound"] = r.bound;
  out["bound_ok"] = r.bound_ok;
  out["K_is_lie_ideal"] = r.K_is_lie_ideal;
  out["K_is_ideal"] = r.K_is_ideal;
  out["quotient_abelian"] = r.quotient_abelian;
  out["generator_count_check"] = r.generator_count_check;
  out["single_round"] = r.single_round;
  out["proof_generators_agree"] = r.proof_generators_agree;
  out["passed"] = r.passed();
  return out;
}

}  // namespace p23

#include "p23/generators.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

namespace p23 {

namespace {

void add_truncated_polynomial(AlgebraBuilder& b, std::size_t n, const Field& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; i + j < n; ++j) b.set_product(i, j, unit_vector(n, i + j, f));
}

int levi_civita(const std::array<std::size_t, 4>& p) {
  int inversions = 0;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x + 1; y < 4; ++y) inversions += int(p[x] > p[y]);
  return inversions % 2 == 0 ? 1 : -1;
}

// Brackets of nambu4 for i < j < k, optionally skipping one triple.
void add_nambu_brackets(AlgebraBuilder& b, const Field& f, bool skip_first = false) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k) {
        if (skip_first && i == 0 && j == 1 && k == 2) continue;
        std::size_t l = 6 - i - j - k;
        b.set_bracket(i, j, k, scaled(unit_vector(4, l, f), f.from_int(levi_civita({i, j, k, l}))));
      }
}

std::vector<std::string> truncated_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i == 0 ? "1" : i == 1 ? "u" : "u^" + std::to_string(i));
  return out;
}

Vec pad(const Vec& v, std::size_t before, std::size_t after, const Field& f) {
  Vec out = zero_vector(before, f);
  out.insert(out.end(), v.begin(), v.end());
  Vec tail = zero_vector(after, f);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

AlgebraPtr make_abelian(std::size_t n, Field field, AbelianProduct product) {
  AlgebraBuilder b(n, field);
  if (product == AbelianProduct::truncated_polynomial) {
    add_truncated_polynomial(b, n, field);
    b.set_identity(n == 0 ? Vec{} : unit_vector(n, 0, field));
    b.set_labels(truncated_labels(n));
  }
  return b.build();
}

AlgebraPtr make_nambu4(Field field) {
  AlgebraBuilder b(4, field);
  add_nambu_brackets(b, field);
  return b.build();
}

AlgebraPtr direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  const Field& f = a.field();
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  AlgebraBuilder out(na + nb, f);
  for (const auto& e : a.product_entries()) out.set_product(e.i, e.j, pad(e.coords, 0, nb, f));
  for (const auto& e : b.product_entries()) out.set_product(na + e.i, na + e.j, pad(e.coords, na, 0, f));
  for (const auto& e : a.bracket_entries()) out.set_bracket(e.i, e.j, e.k, pad(e.coords, 0, nb, f));
  for (const auto& e : b.bracket_entries()) out.set_bracket(na + e.i, na + e.j, na + e.k, pad(e.coords, na, 0, f));

  bool a_unital = a.identity() || na == 0;
  bool b_unital = b.identity() || nb == 0;
  if (a_unital && b_unital && (a.identity() || b.identity())) {
    Vec id = a.identity() ? *a.identity() : Vec{};
    Vec idb = b.identity() ? *b.identity() : Vec{};
    id.insert(id.end(), idb.begin(), idb.end());
    out.set_identity(std::move(id));
  }
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i) labels.push_back(a.label(i));
    for (std::size_t i = 0; i < nb; ++i) {
      // Positional names follow the summand into its new position.
      std::string positional = "e" + std::to_string(i + 1);
      labels.push_back(b.label(i) == positional ? "e" + std::to_string(na + i + 1) : b.label(i));
    }
    out.set_labels(std::move(labels));
  }
  return out.build();
}

AlgebraPtr make_rotated(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = a.basis(i);
    if (i > 0) r[i - 1] = a.field().one();
    rows.push_back(std::move(r));
  }
  return change_basis(a, rows);
}

// ---------------------------------------------------------------- mutations

std::string to_string(AxiomFamily family) {
  switch (family) {
    case AxiomFamily::commutativity: return "commutativity";
    case AxiomFamily::associativity: return "associativity";
    case AxiomFamily::alternating: return "alternating";
    case AxiomFamily::filippov: return "filippov";
    case AxiomFamily::leibniz: return "leibniz";
    case AxiomFamily::identity: return "identity";
  }
  throw std::invalid_argument("unknown axiom family");
}

std::vector<AxiomFamily> all_axiom_families() {
  return {AxiomFamily::commutativity, AxiomFamily::associativity, AxiomFamily::alternating,
          AxiomFamily::filippov,      AxiomFamily::leibniz,       AxiomFamily::identity};
}

AlgebraPtr make_mutation(AxiomFamily family, Field f) {
  // T3 basis: 0 = 1, 1 = u, 2 = u^2.
  auto t3 = [&] {
    AlgebraBuilder b(3, f);
    b.set_labels(truncated_labels(3));
    return b;
  };
  switch (family) {
    case AxiomFamily::commutativity: {
      // u * u^2 = 0 but u^2 * u = 1.
      AlgebraBuilder b = t3();
      add_truncated_polynomial(b, 3, f);
      b.set_identity(unit_vector(3, 0, f));
      b.set_product(1, 2, zero_vector(3, f));
      b.set_product(2, 1, unit_vector(3, 0, f));
      return b.build();
    }
    case AxiomFamily::associativity: {
      // u * u^2 = 1: (u^2 u) u = u but u^2 (u u) = u^2 u^2 = 0.
      AlgebraBuilder b = t3();
      b.set_product(0, 0, unit_vector(3, 0, f));
      b.set_product(0, 1, unit_vector(3, 1, f));
      b.set_product(0, 2, unit_vector(3, 2, f));
      b.set_product(1, 1, unit_vector(3, 2, f));
      b.set_product(1, 2, unit_vector(3, 0, f));
      b.set_identity(unit_vector(3, 0, f));
      return b.build();
    }
    case AxiomFamily::alternating: {
      // [e1, e1, e2] supplied as e3.
      AlgebraBuilder b(4, f);
      add_nambu_brackets(b, f);
      b.set_bracket(0, 0, 1, unit_vector(4, 2, f));
      return b.build();
    }
    case AxiomFamily::filippov: {
      // [e1, e2, e3] = e4 + e1 instead of e4.
      AlgebraBuilder b(4, f);
      add_nambu_brackets(b, f, /*skip_first=*/true);
      b.set_bracket(0, 1, 2, unit_vector(4, 3, f) + unit_vector(4, 0, f));
      return b.build();
    }
    case AxiomFamily::leibniz: {
      // T3 with [1, u, u^2] = u^2.
      AlgebraBuilder b = t3();
      add_truncated_polynomial(b, 3, f);
      b.set_identity(unit_vector(3, 0, f));
      b.set_bracket(0, 1, 2, unit_vector(3, 2, f));
      return b.build();
    }
    case AxiomFamily::identity: {
      // Declared identity 1 + u.
      AlgebraBuilder b = t3();
      add_truncated_polynomial(b, 3, f);
      b.set_identity(unit_vector(3, 0, f) + unit_vector(3, 1, f));
      return b.build();
    }
  }
  throw std::invalid_argument("unknown axiom family");
}

// ---------------------------------------------------------------- registry

namespace {

using Factory = std::function<AlgebraPtr(Field)>;

const std::vector<std::pair<std::string, Factory>>& corpus_table() {
  static const std::vector<std::pair<std::string, Factory>> table = {
      {"zero0", [](Field f) { return make_abelian(0, f, AbelianProduct::zero); }},
      {"abelian2", [](Field f) { return make_abelian(2, f, AbelianProduct::zero); }},
      {"t3", [](Field f) { return make_abelian(3, f, AbelianProduct::truncated_polynomial); }},
      {"nambu4", [](Field f) { return make_nambu4(f); }},
      {"unit-zero0", [](Field f) { return unitalize(make_abelian(0, f, AbelianProduct::zero)).algebra; }},
      {"unit-t3", [](Field f) { return unitalize(make_abelian(3, f, AbelianProduct::truncated_polynomial)).algebra; }},
      {"unit-nambu4", [](Field f) { return unitalize(make_nambu4(f)).algebra; }},
      {"rot-unit-nambu4", [](Field f) { return make_rotated(*unitalize(make_nambu4(f)).algebra); }},
      {"nambu4+abelian2",
       [](Field f) { return direct_sum(*make_nambu4(f), *make_abelian(2, f, AbelianProduct::zero)); }},
      {"nambu4+t3",
       [](Field f) { return direct_sum(*make_nambu4(f), *make_abelian(3, f, AbelianProduct::truncated_polynomial)); }},
      {"unit-nambu4+abelian2",
       [](Field f) {
         return unitalize(direct_sum(*make_nambu4(f), *make_abelian(2, f, AbelianProduct::zero))).algebra;
       }},
  };
  return table;
}

const std::vector<AxiomFamily>& file_mutations() {
  static const std::vector<AxiomFamily> families = {AxiomFamily::associativity, AxiomFamily::filippov,
                                                    AxiomFamily::leibniz, AxiomFamily::identity};
  return families;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, factory] : corpus_table()) out.push_back(name);
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out = corpus_names();
  for (auto family : file_mutations()) out.push_back("mut-" + to_string(family));
  return out;
}

AlgebraPtr make_fixture(const std::string& name, Field field) {
  for (const auto& [fixture, factory] : corpus_table())
    if (fixture == name) return factory(field);
  for (auto family : file_mutations())
    if (name == "mut-" + to_string(family)) return make_mutation(family, field);
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace p23

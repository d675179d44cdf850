#include <doctest.h>

#include "oracles.hpp"
#include "p23/generators.hpp"
#include "p23/sampling.hpp"

using namespace p23;

namespace {

const Field Q = Field::rationals();

// Dense trilinear sum over all basis triples, as a reference for the
// minor-based evaluation.
Vec dense_bracket(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar c = x[i] * y[j] * z[k];
        if (!c.is_zero()) axpy(out, c, a.basis_bracket(i, j, k));
      }
  return out;
}

Vec dense_product(const Algebra& a, const Vec& x, const Vec& y) {
  Vec out = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(out, x[i] * y[j], a.basis_product(i, j));
  return out;
}

}  // namespace

TEST_CASE("T3 product") {
  AlgebraPtr t3 = make_abelian(3, Q, AbelianProduct::truncated_polynomial);
  Element u = Element::basis(t3, 1), u2 = Element::basis(t3, 2);
  CHECK(eval_product(u, u) == u2);
  CHECK(eval_product(u, u2).is_zero());
  Element y = random_element(t3, 4);
  CHECK(eval_product(Element::zero(t3), y).is_zero());
  CHECK(eval_product(Element::identity(t3), y) == y);
  CHECK(eval_product(y, Element::identity(t3)) == y);
}

TEST_CASE("nambu4 bracket") {
  AlgebraPtr n4 = make_nambu4(Q);
  auto e = [&](std::size_t i) { return Element::basis(n4, i); };
  CHECK(eval_bracket(e(0), e(1), e(2)) == e(3));
  CHECK(eval_bracket(e(1), e(0), e(2)) == Q.from_int(-1) * e(3));
  ElementSampler s(21);
  for (int t = 0; t < 50; ++t) {
    Element x = s.next(n4), z = s.next(n4);
    CHECK(eval_bracket(x, x, z).is_zero());
    CHECK(eval_bracket(x, z, x).is_zero());
    CHECK(eval_bracket(z, x, x).is_zero());
  }
}

TEST_CASE("evaluation agrees with dense tensor sums") {
  for (const auto& name : corpus_names()) {
    for (Field f : {Q, Field::prime(5)}) {
      AlgebraPtr a = make_fixture(name, f);
      ElementSampler s(99);
      for (int t = 0; t < 20; ++t) {
        Vec x = s.next_coords(*a), y = s.next_coords(*a), z = s.next_coords(*a);
        CHECK(a->bracket(x, y, z) == dense_bracket(*a, x, y, z));
        CHECK(a->product(x, y) == dense_product(*a, x, y));
      }
    }
  }
}

TEST_CASE("bracket tensor is fully antisymmetric from canonical entries") {
  AlgebraPtr a = oracle::random_structure(5, Q, 17, 1);
  const std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> idx{i, j, k};
        std::vector<std::size_t> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
          CHECK(is_zero(a->basis_bracket(i, j, k)));
          continue;
        }
        std::vector<std::size_t> perm;
        for (auto v : idx) perm.push_back(std::size_t(std::find(sorted.begin(), sorted.end(), v) - sorted.begin()));
        Vec expect = scaled(a->basis_bracket(sorted[0], sorted[1], sorted[2]), Q.from_int(oracle::permutation_sign(perm)));
        CHECK(a->basis_bracket(i, j, k) == expect);
      }
}

TEST_CASE("builder validation") {
  AlgebraBuilder b(2, Q);
  CHECK_THROWS_AS(b.set_product(0, 2, Vec{Q.one(), Q.one()}), std::invalid_argument);
  CHECK_THROWS_AS(b.set_product(0, 1, Vec{Q.one()}), std::invalid_argument);
  CHECK_THROWS_AS(b.set_product(0, 1, Vec{Field::prime(5).one(), Q.one()}), FieldMismatch);
  b.set_product(0, 1, Vec{Q.one(), Q.zero()});
  CHECK_THROWS_AS(b.set_product(0, 1, Vec{Q.one(), Q.zero()}), std::invalid_argument);
  CHECK_THROWS_AS(b.set_labels({"a"}), std::invalid_argument);
  CHECK_THROWS_AS(b.set_identity(Vec{Q.one()}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraBuilder(3, Q).set_bracket(0, 1, 3, Vec(3, Q.one())), std::invalid_argument);
}

TEST_CASE("redundant entries are kept aside, the canonical one is stored") {
  AlgebraBuilder b(3, Q);
  b.set_product(2, 1, unit_vector(3, 0, Q));
  b.set_bracket(2, 0, 1, unit_vector(3, 0, Q));
  AlgebraPtr a = b.build();
  // Only non-increasing orders were supplied, so they become canonical.
  CHECK(a->basis_product(1, 2) == unit_vector(3, 0, Q));
  CHECK(a->basis_bracket(0, 1, 2) == unit_vector(3, 0, Q));  // (2,0,1) is an even permutation
  CHECK(a->redundant_products().empty());

  AlgebraBuilder c(3, Q);
  c.set_product(1, 2, unit_vector(3, 0, Q));
  c.set_product(2, 1, unit_vector(3, 1, Q));
  c.set_bracket(0, 0, 1, unit_vector(3, 2, Q));
  AlgebraPtr d = c.build();
  CHECK(d->basis_product(1, 2) == unit_vector(3, 0, Q));
  CHECK(d->basis_product(2, 1) == unit_vector(3, 0, Q));
  REQUIRE(d->redundant_products().size() == 1);
  CHECK(d->redundant_products()[0].coords == unit_vector(3, 1, Q));
  REQUIRE(d->redundant_brackets().size() == 1);
  CHECK(is_zero(d->basis_bracket(0, 0, 1)));
}

TEST_CASE("elements from different algebras do not mix") {
  AlgebraPtr a = make_nambu4(Q), b = make_nambu4(Q);
  CHECK_THROWS_AS(Element::basis(a, 0) + Element::basis(b, 0), AlgebraMismatch);
  CHECK_THROWS_AS(eval_product(Element::basis(a, 0), Element::basis(b, 0)), AlgebraMismatch);
  CHECK_THROWS_AS(Element::identity(a), std::invalid_argument);
  CHECK_THROWS_AS(Element(a, Vec(3, Q.zero())), std::invalid_argument);
}

TEST_CASE("unitalize examples") {
  AlgebraPtr n4 = make_nambu4(Q);
  Unitalization u = unitalize(n4);
  REQUIRE(u.algebra->dim() == 5);
  Element e1 = u.apply(Element::basis(n4, 0));
  Element one = Element::identity(u.algebra);
  CHECK(one.coords() == unit_vector(5, 4, Q));
  CHECK(eval_product(e1, one) == e1);
  ElementSampler s(8);
  for (int t = 0; t < 30; ++t) {
    Element x = s.next(u.algebra), y = s.next(u.algebra);
    CHECK(eval_bracket(one, x, y).is_zero());
    CHECK(eval_bracket(x, one, y).is_zero());
    CHECK(eval_bracket(x, y, one).is_zero());
  }

  Unitalization z = unitalize(make_abelian(0, Q, AbelianProduct::zero));
  REQUIRE(z.algebra->dim() == 1);
  CHECK(z.algebra->basis_product(0, 0) == Vec{Q.one()});
  CHECK(*z.algebra->identity() == Vec{Q.one()});
}

TEST_CASE("unitalize: embedding is injective, multiplicative and bracket-preserving") {
  for (const auto& name : corpus_names()) {
    AlgebraPtr a = make_fixture(name, Q);
    Unitalization u = unitalize(a);
    CHECK(u.embed.size() == a->dim());
    CHECK(rref(u.embed, a->dim() + 1).rank() == a->dim());
    ElementSampler s(31);
    for (int t = 0; t < 20; ++t) {
      Element x = s.next(a), y = s.next(a), z = s.next(a);
      CHECK(u.apply(eval_product(x, y)) == eval_product(u.apply(x), u.apply(y)));
      CHECK(u.apply(eval_bracket(x, y, z)) == eval_bracket(u.apply(x), u.apply(y), u.apply(z)));
      CHECK(u.apply(x + y) == u.apply(x) + u.apply(y));
    }
  }
}

TEST_CASE("change_basis preserves the structure") {
  AlgebraPtr a = make_fixture("unit-nambu4", Q);
  AlgebraPtr r = make_rotated(*a);
  // f_i = e_(i-1) + e_i: map coordinates in f to coordinates in e.
  auto to_e = [&](const Vec& c) {
    Vec out = a->zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[i] += c[i];
      if (i > 0) out[i - 1] += c[i];
    }
    return out;
  };
  ElementSampler s(2);
  for (int t = 0; t < 30; ++t) {
    Vec x = s.next_coords(*r), y = s.next_coords(*r), z = s.next_coords(*r);
    CHECK(to_e(r->product(x, y)) == a->product(to_e(x), to_e(y)));
    CHECK(to_e(r->bracket(x, y, z)) == a->bracket(to_e(x), to_e(y), to_e(z)));
  }
  CHECK(to_e(*r->identity()) == *a->identity());
  Matrix dependent(5, a->basis(0));
  CHECK_THROWS_AS(change_basis(*a, dependent), std::invalid_argument);
}

TEST_CASE("equality ignores construction order") {
  AlgebraBuilder b1(3, Q), b2(3, Q);
  b1.set_bracket(0, 1, 2, unit_vector(3, 0, Q));
  b2.set_bracket(1, 0, 2, scaled(unit_vector(3, 0, Q), Q.from_int(-1)));
  CHECK(*b1.build() == *b2.build());
  CHECK_FALSE(*make_nambu4(Q) == *make_nambu4(Field::prime(5)));
}

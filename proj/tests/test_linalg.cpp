#include <doctest.h>

#include <algorithm>
#include <random>

#include "p23/linalg.hpp"

using namespace p23;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, std::mt19937_64& rng, int zero_bias) {
  Matrix m(rows, zero_vector(cols, f));
  for (auto& r : m)
    for (auto& x : r)
      if (int(rng() % 10) >= zero_bias) x = f.from_int(std::int64_t(rng() % 9) - 4);
  return m;
}

Vec times(const Matrix& a, const Vec& x, const Field& f) {
  Vec out;
  for (const auto& row : a) {
    Scalar s = f.zero();
    for (std::size_t j = 0; j < x.size(); ++j) s.add_mul(row[j], x[j]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("rref shape and canonicity") {
  std::mt19937_64 rng(5);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int t = 0; t < 100; ++t) {
      std::size_t rows = rng() % 6, cols = 1 + rng() % 6;
      Matrix m = random_matrix(rows, cols, f, rng, 4);
      Echelon e = rref(m, cols);
      for (std::size_t r = 0; r < e.rank(); ++r) {
        CHECK(e.rows[r][e.pivots[r]].is_one());
        if (r) CHECK(e.pivots[r - 1] < e.pivots[r]);
        for (std::size_t q = 0; q < e.rank(); ++q)
          if (q != r) CHECK(e.rows[q][e.pivots[r]].is_zero());
        for (std::size_t c = 0; c < e.pivots[r]; ++c) CHECK(e.rows[r][c].is_zero());
      }
      // Every input row reduces to zero and the reduced rows are in the input span.
      for (const auto& row : m) CHECK(is_zero(reduce(e, row)));
      Matrix shuffled = m;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(rref(shuffled, cols).rows == e.rows);
      Matrix both = m;
      both.insert(both.end(), e.rows.begin(), e.rows.end());
      CHECK(rref(both, cols).rank() == e.rank());
    }
  }
}

TEST_CASE("nullspace solves the system and has the right dimension") {
  std::mt19937_64 rng(9);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 100; ++t) {
      std::size_t rows = rng() % 5, cols = 1 + rng() % 6;
      Matrix a = random_matrix(rows, cols, f, rng, 5);
      Matrix k = nullspace(a, cols, f);
      CHECK(k.size() + rref(a, cols).rank() == cols);
      for (const auto& x : k) CHECK(is_zero(times(a, x, f)));
      CHECK(rref(k, cols).rank() == k.size());
    }
  }
}

TEST_CASE("inverse") {
  const Field q = Field::rationals();
  Matrix m = {{q.from_int(2), q.from_int(1)}, {q.from_int(1), q.from_int(1)}};
  auto inv = inverse(m, q);
  REQUIRE(inv);
  CHECK((*inv)[0] == Vec{q.from_int(1), q.from_int(-1)});
  CHECK((*inv)[1] == Vec{q.from_int(-1), q.from_int(2)});
  Matrix singular = {{q.from_int(1), q.from_int(2)}, {q.from_int(2), q.from_int(4)}};
  CHECK_FALSE(inverse(singular, q));
  CHECK(inverse(Matrix{}, q)->empty());
}

TEST_CASE("row_times") {
  const Field q = Field::rationals();
  Matrix m = {{q.from_int(1), q.from_int(2)}, {q.from_int(3), q.from_int(4)}};
  CHECK(row_times(Vec{q.from_int(1), q.from_int(-1)}, m, 2, q) == Vec{q.from_int(-2), q.from_int(-2)});
}

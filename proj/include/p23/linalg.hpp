#pragma once

// Dense exact linear algebra over a Field: vectors, RREF, kernels, inverses.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "p23/scalar.hpp"

namespace p23 {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;

Vec zero_vector(std::size_t n, const Field& field);
Vec unit_vector(std::size_t n, std::size_t i, const Field& field);
bool is_zero(std::span<const Scalar> v);

/// y += c * x
void axpy(Vec& y, const Scalar& c, std::span<const Scalar> x);
Vec scaled(std::span<const Scalar> x, const Scalar& c);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

/// Row-reduced form: nonzero rows only, pivots strictly increasing, pivot
/// entries 1, pivot columns zero elsewhere.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

/// Pivots on the first nonzero column; rows must all have length ncols.
Echelon rref(Matrix rows, std::size_t ncols);

/// Residual of v after eliminating the pivot columns of e.
Vec reduce(const Echelon& e, Vec v);

/// Basis (in RREF) of { x : a x = 0 } where a has ncols columns.
Matrix nullspace(const Matrix& a, std::size_t ncols, const Field& field);

/// Row vector times matrix: (v M)_j = sum_i v_i M[i][j].
Vec row_times(std::span<const Scalar> v, const Matrix& m, std::size_t ncols, const Field& field);

std::optional<Matrix> inverse(const Matrix& m, const Field& field);

}  // namespace p23

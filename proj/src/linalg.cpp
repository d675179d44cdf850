#include "p23/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace p23 {

Vec zero_vector(std::size_t n, const Field& field) { return Vec(n, field.zero()); }

Vec unit_vector(std::size_t n, std::size_t i, const Field& field) {
  Vec v = zero_vector(n, field);
  v.at(i) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& c, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(c, x[i]);
}

Vec scaled(std::span<const Scalar> x, const Scalar& c) {
  Vec out(x.begin(), x.end());
  for (auto& s : out) s *= c;
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Echelon rref(Matrix rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("rref: ragged matrix");

  Echelon out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);

    Scalar inv = rows[rank][col].inverse();
    for (auto& s : rows[rank]) s *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar factor = -rows[r][col];
      axpy(rows[r], factor, rows[rank]);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

Vec reduce(const Echelon& e, Vec v) {
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const Scalar& lead = v[e.pivots[r]];
    if (lead.is_zero()) continue;
    Scalar factor = -lead;
    axpy(v, factor, e.rows[r]);
  }
  return v;
}

Matrix nullspace(const Matrix& a, std::size_t ncols, const Field& field) {
  Echelon e = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x = unit_vector(ncols, free, field);
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(x));
  }
  return rref(std::move(basis), ncols).rows;
}

Vec row_times(std::span<const Scalar> v, const Matrix& m, std::size_t ncols, const Field& field) {
  if (v.size() != m.size()) throw std::invalid_argument("row_times: length mismatch");
  Vec out = zero_vector(ncols, field);
  for (std::size_t i = 0; i < v.size(); ++i) axpy(out, v[i], m[i]);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m, const Field& field) {
  const std::size_t n = m.size();
  Matrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    Vec row = m[i];
    Vec id = unit_vector(n, i, field);
    row.insert(row.end(), id.begin(), id.end());
    aug.push_back(std::move(row));
  }
  Echelon e = rref(std::move(aug), 2 * n);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv;
  inv.reserve(n);
  for (auto& row : e.rows) inv.emplace_back(row.begin() + std::ptrdiff_t(n), row.end());
  return inv;
}

}  // namespace p23

#include "p23/subspace.hpp"

#include <stdexcept>

namespace p23 {

Subspace::Subspace(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("subspace without algebra");
}

Subspace::Subspace(AlgebraPtr algebra, Matrix vectors) : Subspace(std::move(algebra)) {
  echelon_ = rref(std::move(vectors), algebra_->dim());
}

Subspace Subspace::full(const AlgebraPtr& algebra) {
  Matrix rows;
  for (std::size_t i = 0; i < algebra->dim(); ++i) rows.push_back(algebra->basis(i));
  return Subspace(algebra, std::move(rows));
}

std::size_t Subspace::ambient_dim() const noexcept { return algebra_->dim(); }

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (next_pivot < pivots().size() && pivots()[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(residual(v)); }

bool Subspace::contains(const Element& x) const {
  if (x.algebra() != algebra_) throw AlgebraMismatch("element is not from the subspace's algebra");
  return contains(x.coords());
}

bool Subspace::contains(const Subspace& other) const {
  require_same_algebra(*this, other);
  for (const auto& row : other.basis())
    if (!contains(row)) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.algebra_ == b.algebra_ && a.echelon_.rows == b.echelon_.rows;
}

void require_same_algebra(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("subspaces belong to different algebras");
}

Subspace span(const AlgebraPtr& algebra, const std::vector<Element>& vectors) {
  Matrix rows;
  for (const auto& v : vectors) {
    if (v.algebra() != algebra) throw AlgebraMismatch("span of elements from different algebras");
    rows.push_back(v.coords());
  }
  return Subspace(algebra, std::move(rows));
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_algebra(s, t);
  Matrix rows = s.basis();
  rows.insert(rows.end(), t.basis().begin(), t.basis().end());
  return Subspace(s.algebra(), std::move(rows));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_algebra(s, t);
  // Kernel of the map (alpha, beta) -> alpha S - beta T; the intersection
  // is the image of the alpha part.
  const std::size_t n = s.ambient_dim();
  const std::size_t r = s.dim();
  const std::size_t q = t.dim();
  const Field& f = s.algebra()->field();
  Matrix system(n, zero_vector(r + q, f));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < r; ++i) system[col][i] = s.basis()[i][col];
    for (std::size_t j = 0; j < q; ++j) system[col][r + j] = -t.basis()[j][col];
  }
  Matrix kernel = nullspace(system, r + q, f);
  Matrix rows;
  for (const auto& k : kernel) {
    Vec v = zero_vector(n, f);
    for (std::size_t i = 0; i < r; ++i) axpy(v, k[i], s.basis()[i]);
    rows.push_back(std::move(v));
  }
  return Subspace(s.algebra(), std::move(rows));
}

Subspace product_span(const Subspace& a, const Subspace& b) {
  require_same_algebra(a, b);
  const Algebra& alg = *a.algebra();
  const bool same = a == b;
  Matrix rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = same ? i : 0; j < b.dim(); ++j) rows.push_back(alg.product(a.basis()[i], b.basis()[j]));
  return Subspace(a.algebra(), std::move(rows));
}

Subspace bracket_span(const Subspace& a, const Subspace& b, const Subspace& c) {
  require_same_algebra(a, b);
  require_same_algebra(a, c);
  const Algebra& alg = *a.algebra();
  // With equal arguments alternation makes the ordered triples redundant.
  const bool ab = a == b;
  const bool bc = b == c;
  Matrix rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = ab ? i + 1 : 0; j < b.dim(); ++j)
      for (std::size_t k = bc ? j + 1 : 0; k < c.dim(); ++k)
        rows.push_back(alg.bracket(a.basis()[i], b.basis()[j], c.basis()[k]));
  return Subspace(a.algebra(), std::move(rows));
}

namespace {

// Worklist closure: images of the newly added vectors only, each round.
template <typename Images>
Subspace close_under(const Subspace& s, Images images) {
  const AlgebraPtr& alg = s.algebra();
  Matrix current = s.basis();
  Subspace closed(alg, current);
  Matrix fresh = closed.basis();
  while (!fresh.empty()) {
    Matrix added;
    for (const auto& v : fresh)
      for (Vec& w : images(v)) {
        Vec r = closed.residual(w);
        if (is_zero(r)) continue;
        current.push_back(r);
        closed = Subspace(alg, current);
        added.push_back(std::move(r));
      }
    fresh = std::move(added);
  }
  return closed;
}

}  // namespace

Subspace associative_ideal_closure(const Subspace& s) {
  const Algebra& alg = *s.algebra();
  return close_under(s, [&](const Vec& v) {
    Matrix out;
    for (std::size_t j = 0; j < alg.dim(); ++j) out.push_back(alg.product(v, alg.basis(j)));
    return out;
  });
}

Subspace poisson_ideal_closure(const Subspace& s) {
  const Algebra& alg = *s.algebra();
  const std::size_t n = alg.dim();
  return close_under(s, [&](const Vec& v) {
    Matrix out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(alg.product(v, alg.basis(j)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back(alg.bracket(v, alg.basis(j), alg.basis(k)));
    return out;
  });
}

Subspace subalgebra_closure(const Subspace& s) {
  Subspace t = s;
  while (true) {
    Subspace next = sum(t, sum(product_span(t, t), bracket_span(t, t, t)));
    if (next.dim() == t.dim()) return t;
    t = std::move(next);
  }
}

bool is_subalgebra(const Subspace& s) {
  return s.contains(product_span(s, s)) && s.contains(bracket_span(s, s, s));
}

bool is_associative_ideal(const Subspace& s) {
  return s.contains(product_span(s, Subspace::full(s.algebra())));
}

bool is_ideal(const Subspace& s) {
  Subspace full = Subspace::full(s.algebra());
  return is_associative_ideal(s) && s.contains(bracket_span(s, full, full));
}

Subspace principal_span(const Element& a) {
  const Algebra& alg = *a.algebra();
  Matrix rows;
  for (std::size_t j = 0; j < alg.dim(); ++j) rows.push_back(alg.product(a.coords(), alg.basis(j)));
  return Subspace(a.algebra(), std::move(rows));
}

}  // namespace p23

#pragma once

// Subspaces of an algebra in canonical RREF, the spans AB and [A,B,C], and
// the closures that produce subalgebras and ideals.
//
// Every predicate and span below works on basis vectors only. That is
// enough because the product is bilinear and the bracket trilinear: a
// subspace is closed under an operation iff the operation maps basis
// tuples into it.

#include <cstddef>
#include <vector>

#include "p23/algebra.hpp"
#include "p23/linalg.hpp"

namespace p23 {

class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(AlgebraPtr algebra);
  /// Span of arbitrary coordinate vectors of the algebra.
  Subspace(AlgebraPtr algebra, Matrix vectors);

  static Subspace full(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return echelon_.rank(); }
  std::size_t codim() const noexcept { return ambient_dim() - dim(); }
  std::size_t ambient_dim() const noexcept;
  /// RREF rows.
  const Matrix& basis() const noexcept { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }
  /// Non-pivot columns, increasing: the unit vectors there span a complement.
  std::vector<std::size_t> complement_indices() const;

  bool contains(const Vec& v) const;
  bool contains(const Element& x) const;
  /// this ⊇ other
  bool contains(const Subspace& other) const;
  /// v with the pivot columns eliminated; zero iff v is in the subspace.
  Vec residual(const Vec& v) const { return reduce(echelon_, v); }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  AlgebraPtr algebra_;
  Echelon echelon_;
};

/// Throws AlgebraMismatch unless both live in the same algebra.
void require_same_algebra(const Subspace& a, const Subspace& b);

/// Throws AlgebraMismatch if any element is from another algebra.
Subspace span(const AlgebraPtr& algebra, const std::vector<Element>& vectors);
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

/// Span of { ab : a in A, b in B }.
Subspace product_span(const Subspace& a, const Subspace& b);
/// Span of { [a,b,c] : a in A, b in B, c in C }.
Subspace bracket_span(const Subspace& a, const Subspace& b, const Subspace& c);

/// Least subspace containing S closed under x -> x e_j.
Subspace associative_ideal_closure(const Subspace& s);
/// Least subspace containing S closed under x -> x e_j and x -> [x, e_j, e_k].
Subspace poisson_ideal_closure(const Subspace& s);
/// Least subspace containing S closed under the product and the bracket.
Subspace subalgebra_closure(const Subspace& s);

bool is_subalgebra(const Subspace& s);
/// Closed under multiplication and bracket by arbitrary elements.
bool is_ideal(const Subspace& s);
/// Ideal of the associative algebra only (multiplication).
bool is_associative_ideal(const Subspace& s);

/// aP = span of { a e_j }.
Subspace principal_span(const Element& a);

}  // namespace p23

#pragma once

// Finite-dimensional Poisson (2-3)-algebras given by structure constants:
// a commutative associative product and an alternating ternary bracket.

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p23/linalg.hpp"
#include "p23/scalar.hpp"

namespace p23 {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Raised when elements or subspaces of different algebras are combined.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinates of e_i e_j (0-based indices).
struct ProductEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec coords;
};

/// Coordinates of [e_i, e_j, e_k] (0-based indices).
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vec coords;
};

/// Collects structure constants and produces an immutable Algebra.
///
/// Entries may be given in any index order. For each unordered pair (triple)
/// the canonical value comes from the entry in increasing order when present,
/// otherwise from the first one supplied. Every other entry for the same
/// pair/triple, and every bracket entry with a repeated index, is kept as a
/// redundant entry; check_axioms compares those against the canonical
/// tensors instead of silently overwriting one with the other.
class AlgebraBuilder {
 public:
  AlgebraBuilder(std::size_t dim, Field field);

  /// Throws std::invalid_argument on bad indices, wrong length, wrong field
  /// or an exact duplicate (same ordered index tuple given twice).
  AlgebraBuilder& set_product(std::size_t i, std::size_t j, Vec coords);
  AlgebraBuilder& set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec coords);
  AlgebraBuilder& set_identity(Vec coords);
  AlgebraBuilder& set_labels(std::vector<std::string> labels);

  AlgebraPtr build() const;

 private:
  void check_coords(const Vec& coords) const;

  std::size_t dim_;
  Field field_;
  std::vector<ProductEntry> products_;
  std::vector<BracketEntry> brackets_;
  std::optional<Vec> identity_;
  std::vector<std::string> labels_;
};

class Algebra {
 public:
  std::size_t dim() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const std::optional<Vec>& identity() const noexcept { return identity_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Declared label, or "e<i+1>".
  std::string label(std::size_t i) const;

  /// e_i e_j for any i, j.
  const Vec& basis_product(std::size_t i, std::size_t j) const { return product_[i * n_ + j]; }
  /// [e_i, e_j, e_k] for any i, j, k (sign-resolved, zero on repeats).
  const Vec& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_[(i * n_ + j) * n_ + k];
  }

  /// Bilinear extension of the product table.
  Vec product(const Vec& x, const Vec& y) const;
  /// Trilinear extension of the bracket table.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  Vec zero() const { return zero_vector(n_, field_); }
  Vec basis(std::size_t i) const { return unit_vector(n_, i, field_); }

  /// Nonzero canonical entries, sorted, i <= j.
  std::vector<ProductEntry> product_entries() const;
  /// Nonzero canonical entries, sorted, i < j < k.
  std::vector<BracketEntry> bracket_entries() const;

  const std::vector<ProductEntry>& redundant_products() const noexcept { return redundant_products_; }
  const std::vector<BracketEntry>& redundant_brackets() const noexcept { return redundant_brackets_; }

  /// Same field, dimension, canonical tensors, identity and labels.
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  friend class AlgebraBuilder;
  Algebra(std::size_t n, Field field) : n_(n), field_(field) {}
  void index_nonzeros();

  struct SparseTerm {
    std::array<std::size_t, 3> idx;  // (i, j, unused) or (i, j, k)
    std::vector<std::pair<std::size_t, Scalar>> values;
  };

  std::size_t n_;
  Field field_;
  std::vector<Vec> product_;  // n*n, symmetric
  std::vector<Vec> bracket_;  // n*n*n, alternating
  std::optional<Vec> identity_;
  std::vector<std::string> labels_;
  std::vector<ProductEntry> redundant_products_;
  std::vector<BracketEntry> redundant_brackets_;
  std::vector<SparseTerm> product_terms_;  // i <= j, nonzero
  std::vector<SparseTerm> bracket_terms_;  // i < j < k, nonzero
};

/// A vector of the algebra, tied to it by pointer identity.
class Element {
 public:
  /// Throws std::invalid_argument on a length or field mismatch.
  Element(AlgebraPtr algebra, Vec coords);

  static Element zero(const AlgebraPtr& algebra);
  static Element basis(const AlgebraPtr& algebra, std::size_t i);
  /// Throws std::invalid_argument if the algebra declares no identity.
  static Element identity(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vec& coords() const noexcept { return coords_; }
  bool is_zero() const { return p23::is_zero(coords_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr algebra_;
  Vec coords_;
};

/// Throws AlgebraMismatch unless all elements share one algebra.
void require_same_algebra(const Element& a, const Element& b);

Element eval_product(const Element& x, const Element& y);
Element eval_bracket(const Element& x, const Element& y, const Element& z);

/// The algebra A x F with (a,s)(b,t) = (ab + s b + t a, st) and
/// [(a,s),(b,t),(c,u)] = ([a,b,c], 0); identity (0, 1).
struct Unitalization {
  AlgebraPtr source;
  AlgebraPtr algebra;
  /// n rows, n+1 columns: row i holds the coordinates of (e_i, 0).
  Matrix embed;

  Element apply(const Element& a) const;
};

Unitalization unitalize(const AlgebraPtr& a);

/// Re-expresses the algebra in the basis f_i = sum_j rows[i][j] e_j.
/// Throws std::invalid_argument if the rows are not a basis.
AlgebraPtr change_basis(const Algebra& a, const Matrix& rows);

}  // namespace p23

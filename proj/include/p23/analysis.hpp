#pragma once

// Center, derived subspace, the Schur-type ideal K with its dimension bound,
// and quotient algebras.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "p23/algebra.hpp"
#include "p23/subspace.hpp"

namespace p23 {

class NotIdempotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// { x : [x, b, c] = 0 for all b, c }, as the kernel of the linear system
/// [x, e_j, e_k] = 0 over pairs j < k.
Subspace center(const AlgebraPtr& a);

bool center_is_subalgebra(const AlgebraPtr& a);

/// True iff e lies in the center. Throws NotIdempotent unless e e = e.
bool check_idempotent_central(const AlgebraPtr& a, const Element& e);

/// [P,P,P] from basis triples i < j < k.
Subspace derived_subspace(const AlgebraPtr& a);

struct TransversalSpan {
  /// Unit vectors on the non-pivot columns of the center: a complement of it.
  Matrix transversal;
  /// Span of [f_i, f_j, f_k], i < j < k, over the transversal.
  Subspace subspace;
  /// subspace == derived_subspace(a)
  bool agrees;
};

TransversalSpan derived_from_transversal(const AlgebraPtr& a);

/// d (d^2 - 1) (d - 2) / 6; zero for d <= 2.
std::int64_t schur_bound(std::size_t d);

struct SchurReport {
  Subspace center;
  std::size_t codim_d = 0;
  Subspace derived;
  /// Ideal of the associative algebra generated by the derived subspace.
  Subspace K;
  std::size_t dim_K = 0;
  std::int64_t bound = 0;
  bool bound_ok = false;
  bool K_is_lie_ideal = false;  // [K, P, P] ⊆ K
  bool K_is_ideal = false;      // ideal for both operations
  bool quotient_abelian = false;  // derived ⊆ K
  bool generator_count_check = false;  // transversal brackets span the derived subspace
  /// K = D + D P, i.e. the closure stopped after one multiplication round.
  bool single_round = false;
  /// K is spanned by [f_i,f_j,f_k] and f_s [f_i,f_j,f_k] over the transversal.
  bool proof_generators_agree = false;

  bool passed() const noexcept {
    return bound_ok && K_is_lie_ideal && K_is_ideal && quotient_abelian && generator_count_check && single_round &&
           proof_generators_agree;
  }
};

SchurReport schur_analysis(const AlgebraPtr& a);

struct QuotientResult {
  AlgebraPtr ambient;
  AlgebraPtr quotient;
  /// (n - r) x n: column j holds the quotient coordinates of e_j + I.
  Matrix projection;
  /// Ambient basis indices whose cosets form the quotient basis.
  std::vector<std::size_t> section;

  Element project(const Element& x) const;
  /// Coset representative built from the section.
  Element lift(const Element& y) const;
};

/// Throws NotAnIdeal unless is_ideal(ideal), AlgebraMismatch if the ideal
/// lives in another algebra.
QuotientResult quotient(const AlgebraPtr& a, const Subspace& ideal);

}  // namespace p23

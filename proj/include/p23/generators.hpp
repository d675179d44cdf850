#pragma once

// Canonical example algebras, direct sums and single-constant mutations.

#include <cstddef>
#include <string>
#include <vector>

#include "p23/algebra.hpp"
#include "p23/sampling.hpp"

namespace p23 {

enum class AbelianProduct { zero, truncated_polynomial };

/// Zero bracket; product zero, or F[u]/(u^n) on {1, u, ..., u^(n-1)} with
/// identity 1.
AlgebraPtr make_abelian(std::size_t n, Field field, AbelianProduct product);

/// Zero product, [e_i, e_j, e_k] = sum_l eps_{ijkl} e_l.
AlgebraPtr make_nambu4(Field field);

/// Block-diagonal sum. The identity is (1_A, 1_B) when both summands have
/// one; a zero-dimensional summand counts as unital. Labels of the form
/// e<i> are renumbered to the new position. Throws FieldMismatch.
AlgebraPtr direct_sum(const Algebra& a, const Algebra& b);

/// The same algebra in the basis f_1 = e_1, f_i = e_(i-1) + e_i, which
/// moves basis-aligned subspaces (e.g. a center spanned by e_n) off the axes.
AlgebraPtr make_rotated(const Algebra& a);

/// Axiom families for single-constant mutations.
enum class AxiomFamily { commutativity, associativity, alternating, filippov, leibniz, identity };

std::string to_string(AxiomFamily family);
std::vector<AxiomFamily> all_axiom_families();

/// An otherwise valid fixture with one structure constant (or identity
/// coordinate) changed so that the given family fails. The commutativity
/// and alternating mutations carry a contradicting redundant entry and so
/// exist only in memory; the algebra file format cannot express them.
AlgebraPtr make_mutation(AxiomFamily family, Field field);

/// Named fixtures: the corpus of axiom-passing algebras plus the
/// file-representable mutations ("mut-<family>").
std::vector<std::string> fixture_names();
/// Axiom-passing fixtures only.
std::vector<std::string> corpus_names();
/// Throws std::invalid_argument for an unknown name.
AlgebraPtr make_fixture(const std::string& name, Field field = Field::rationals());

}  // namespace p23

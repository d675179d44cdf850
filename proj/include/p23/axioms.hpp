#pragma once

// Verification of the defining identities on basis tuples, and of the
// identities that follow from them on random elements.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "p23/algebra.hpp"

namespace p23 {

/// One failed identity. `witness` holds 0-based basis indices for the axiom
/// families, or (trial, ...) parameters for the derived identities.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  Vec lhs;
  Vec rhs;
};

struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t checks = 0;  // identities evaluated

  bool passed() const noexcept { return violations.empty(); }
  std::size_t count(const std::string& axiom) const;
};

class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AxiomOptions {
  /// Algebras above this dimension are refused (the Filippov scan is O(n^5)).
  std::size_t max_dim = 12;
};

// Axiom family names used in Violation::axiom.
inline constexpr const char* kCommutativity = "commutativity";
inline constexpr const char* kAssociativity = "associativity";
inline constexpr const char* kAlternating = "alternating";
inline constexpr const char* kFilippov = "filippov";
inline constexpr const char* kLeibniz = "leibniz";
inline constexpr const char* kIdentity = "identity";

/// Checks, on basis tuples:
///  - commutativity of every redundantly supplied product entry;
///  - associativity (e_i e_j) e_k = e_i (e_j e_k);
///  - alternation: redundant bracket entries agree with the canonical
///    tensor (zero on repeated indices), sign flips under adjacent
///    transpositions, and in characteristic 2 also [x,x,z] = 0 for
///    x = e_i + e_j in every slot pair;
///  - the Filippov identity on all n^5 basis 5-tuples;
///  - the Leibniz rule [a1 a2, b, c] = a2[a1,b,c] + a1[a2,b,c] on all n^4 tuples;
///  - the declared identity acting as identity on every basis vector.
/// Multilinearity makes basis tuples sufficient. Violations are ordered by
/// family, then lexicographically by witness.
/// Throws DimensionCapExceeded when dim() > options.max_dim.
AxiomReport check_axioms(const Algebra& a, const AxiomOptions& options = {});

// Derived identity names used in Violation::axiom.
inline constexpr const char* kBracketSymmetry = "bracket_symmetry";
inline constexpr const char* kDerivationMiddle = "derivation_middle";
inline constexpr const char* kDerivationLast = "derivation_last";
inline constexpr const char* kProductRuleFirst = "product_rule_first";
inline constexpr const char* kProductRuleMiddle = "product_rule_middle";
inline constexpr const char* kProductRuleLast = "product_rule_last";
inline constexpr const char* kProductRuleAll = "product_rule_all";
inline constexpr const char* kPowerRule = "power_rule";

/// Evaluates, on `trials` seeded random tuples, the identities that hold in
/// every Poisson (2-3)-algebra: the six sign relations of the bracket under
/// S3, the derivation rule in the middle and last slots, the expansion of
/// [a1...ak, b1...bs, c1...ct] for k, s, t in {1,2,3} (each slot alone and
/// all three together), and [a^k, b^s, c^t] = kst a^(k-1) b^(s-1) c^(t-1) [a,b,c]
/// with kst reduced into the field. Exponent 0 is never formed: an empty
/// product factor is omitted, so no identity element is required.
/// Throws std::invalid_argument when trials == 0.
AxiomReport verify_derived_identities(const Algebra& a, std::size_t trials, std::uint64_t seed);

}  // namespace p23

#pragma once

// Algebra definition files, ideal generator files and JSON reports.
//
// Algebra file (JSON, indices 1-based, scalars as strings):
//   {
//     "format_version": 1,
//     "field": "Q" | {"Fp": p},
//     "dim": n,
//     "labels":   [n strings],                         (optional)
//     "identity": [n scalars],                         (optional)
//     "product":  [{"i": i, "j": j, "coords": [n scalars]}, ...]         1 <= i <= j <= n
//     "bracket":  [{"i": i, "j": j, "k": k, "coords": [n scalars]}, ...] 1 <= i < j < k <= n
//   }
// Omitted entries are zero. Generator file:
//   {"format_version": 1, "dim": n, "generators": [[n scalars], ...]}

#include <string>
#include <string_view>

#include <json.hpp>

#include "p23/algebra.hpp"
#include "p23/analysis.hpp"
#include "p23/axioms.hpp"
#include "p23/subspace.hpp"

namespace p23 {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Two-space indented JSON with arrays of scalars kept on one line, plus a
/// trailing newline. Used for files and reports.
std::string dump(const Json& j);

/// Throws ParseError on malformed syntax, bad or duplicate indices, a
/// composite modulus or a coordinate count that does not match dim.
AlgebraPtr parse_algebra_file(std::string_view text);
/// Canonical form: sorted sparse entries, canonical scalar strings, fixed
/// key order, the layout of dump().
std::string write_algebra_file(const Algebra& a);

/// Generator vectors for `a`. Throws ParseError.
Matrix parse_generator_file(std::string_view text, const Algebra& a);
std::string write_generator_file(const Subspace& s);

Json to_json(const Algebra& a);
Json to_json(const Vec& v);
/// {"dim": r, "basis": [RREF rows]}
Json to_json(const Subspace& s);
/// Basis-tuple families get 1-based "witness" indices; derived identities
/// get "trial" and "params".
Json to_json(const Violation& v);
Json to_json(const AxiomReport& r);
Json to_json(const SchurReport& r);

}  // namespace p23

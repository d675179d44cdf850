#include "p23/analysis.hpp"

#include <algorithm>

namespace p23 {

Subspace center(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  // Row (j, k, l): sum_i x_i [e_i, e_j, e_k]_l = 0.
  Matrix system;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        Vec row;
        row.reserve(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
          row.push_back(a->basis_bracket(i, j, k)[l]);
          nonzero = nonzero || !row.back().is_zero();
        }
        if (nonzero) system.push_back(std::move(row));
      }
  return Subspace(a, nullspace(system, n, a->field()));
}

bool center_is_subalgebra(const AlgebraPtr& a) { return is_subalgebra(center(a)); }

bool check_idempotent_central(const AlgebraPtr& a, const Element& e) {
  if (e.algebra() != a) throw AlgebraMismatch("element is not from this algebra");
  if (eval_product(e, e) != e) throw NotIdempotent("element is not idempotent");
  return center(a).contains(e);
}

Subspace derived_subspace(const AlgebraPtr& a) {
  Matrix rows;
  for (const auto& e : a->bracket_entries()) rows.push_back(e.coords);
  return Subspace(a, std::move(rows));
}

namespace {

Matrix transversal_of(const AlgebraPtr& a, const Subspace& z) {
  Matrix out;
  for (std::size_t c : z.complement_indices()) out.push_back(a->basis(c));
  return out;
}

}  // namespace

TransversalSpan derived_from_transversal(const AlgebraPtr& a) {
  Matrix f = transversal_of(a, center(a));
  Matrix rows;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (std::size_t k = j + 1; k < f.size(); ++k) rows.push_back(a->bracket(f[i], f[j], f[k]));
  Subspace s(a, std::move(rows));
  bool agrees = s == derived_subspace(a);
  return {std::move(f), std::move(s), agrees};
}

std::int64_t schur_bound(std::size_t d) {
  const auto v = std::int64_t(d);
  // The product of four consecutive integers (d-2)(d-1)d(d+1) is divisible by 6.
  return std::max<std::int64_t>(v * (v * v - 1) * (v - 2) / 6, 0);
}

SchurReport schur_analysis(const AlgebraPtr& a) {
  Subspace full = Subspace::full(a);
  SchurReport r{.center = center(a), .derived = derived_subspace(a), .K = Subspace(a)};
  r.codim_d = r.center.codim();
  r.K = associative_ideal_closure(r.derived);
  r.dim_K = r.K.dim();
  r.bound = schur_bound(r.codim_d);
  r.bound_ok = std::int64_t(r.dim_K) <= r.bound;
  r.K_is_lie_ideal = r.K.contains(bracket_span(r.K, full, full));
  r.K_is_ideal = is_ideal(r.K);
  r.quotient_abelian = r.K.contains(r.derived);

  TransversalSpan t = derived_from_transversal(a);
  r.generator_count_check = t.agrees;

  r.single_round = sum(r.derived, product_span(r.derived, full)) == r.K;

  Matrix gens;
  const Matrix& f = t.transversal;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (std::size_t k = j + 1; k < f.size(); ++k) {
        Vec b = a->bracket(f[i], f[j], f[k]);
        for (const auto& fs : f) gens.push_back(a->product(fs, b));
        gens.push_back(std::move(b));
      }
  r.proof_generators_agree = Subspace(a, std::move(gens)) == r.K;
  return r;
}

// ---------------------------------------------------------------- quotient

Element QuotientResult::project(const Element& x) const {
  if (x.algebra() != ambient) throw AlgebraMismatch("element is not from the ambient algebra");
  const std::size_t q = quotient->dim();
  Vec out = quotient->zero();
  for (std::size_t row = 0; row < q; ++row)
    for (std::size_t j = 0; j < x.coords().size(); ++j) out[row].add_mul(projection[row][j], x.coords()[j]);
  return Element(quotient, std::move(out));
}

Element QuotientResult::lift(const Element& y) const {
  if (y.algebra() != quotient) throw AlgebraMismatch("element is not from the quotient algebra");
  Vec out = ambient->zero();
  for (std::size_t a = 0; a < section.size(); ++a) out[section[a]] = y.coords()[a];
  return Element(ambient, std::move(out));
}

QuotientResult quotient(const AlgebraPtr& a, const Subspace& ideal) {
  if (ideal.algebra() != a) throw AlgebraMismatch("ideal is not a subspace of this algebra");
  if (!is_ideal(ideal)) throw NotAnIdeal("subspace is not an ideal; the quotient operations are not well defined");

  const std::size_t n = a->dim();
  const Field& f = a->field();
  QuotientResult out;
  out.ambient = a;
  out.section = ideal.complement_indices();
  const std::size_t q = out.section.size();

  // Coordinates of v + I: eliminate the pivot columns, read the rest.
  auto project = [&](const Vec& v) {
    Vec r = ideal.residual(v);
    Vec coords;
    coords.reserve(q);
    for (std::size_t c : out.section) coords.push_back(r[c]);
    return coords;
  };

  out.projection.assign(q, zero_vector(n, f));
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = project(a->basis(j));
    for (std::size_t row = 0; row < q; ++row) out.projection[row][j] = col[row];
  }

  AlgebraBuilder b(q, f);
  const auto& s = out.section;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i; j < q; ++j) {
      Vec c = project(a->basis_product(s[i], s[j]));
      if (!is_zero(c)) b.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = j + 1; k < q; ++k) {
        Vec c = project(a->basis_bracket(s[i], s[j], s[k]));
        if (!is_zero(c)) b.set_bracket(i, j, k, std::move(c));
      }
  if (a->identity() && !ideal.contains(*a->identity())) b.set_identity(project(*a->identity()));
  if (!a->labels().empty()) {
    std::vector<std::string> labels;
    for (std::size_t c : s) labels.push_back(a->labels()[c]);
    b.set_labels(std::move(labels));
  }
  out.quotient = b.build();
  return out;
}

}  // namespace p23

#include "p23/axioms.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>

#include "p23/sampling.hpp"

namespace p23 {

std::size_t AxiomReport::count(const std::string& axiom) const {
  return std::size_t(std::count_if(violations.begin(), violations.end(),
                                   [&](const Violation& v) { return v.axiom == axiom; }));
}

namespace {

class BasisScan {
 public:
  explicit BasisScan(const Algebra& a) : a_(a), n_(a.dim()) {}

  // sum_l v_l e_l e_k
  Vec times_basis(const Vec& v, std::size_t k) const {
    Vec out = a_.zero();
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero()) axpy(out, v[l], a_.basis_product(l, k));
    return out;
  }

  // [v, e_b, e_c], [e_b, v, e_c], [e_b, e_c, v]
  Vec bracket_first(const Vec& v, std::size_t b, std::size_t c) const {
    Vec out = a_.zero();
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero()) axpy(out, v[l], a_.basis_bracket(l, b, c));
    return out;
  }
  Vec bracket_middle(std::size_t b, const Vec& v, std::size_t c) const {
    Vec out = a_.zero();
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero()) axpy(out, v[l], a_.basis_bracket(b, l, c));
    return out;
  }
  Vec bracket_last(std::size_t b, std::size_t c, const Vec& v) const {
    Vec out = a_.zero();
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero()) axpy(out, v[l], a_.basis_bracket(b, c, l));
    return out;
  }

 private:
  const Algebra& a_;
  std::size_t n_;
};

void record(AxiomReport& report, const char* axiom, std::vector<std::size_t> witness, Vec lhs, Vec rhs) {
  ++report.checks;
  if (lhs != rhs) report.violations.push_back({axiom, std::move(witness), std::move(lhs), std::move(rhs)});
}

void check_commutativity(const Algebra& a, AxiomReport& report) {
  std::vector<ProductEntry> redundant = a.redundant_products();
  std::sort(redundant.begin(), redundant.end(),
            [](const ProductEntry& x, const ProductEntry& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  for (const auto& e : redundant) record(report, kCommutativity, {e.i, e.j}, e.coords, a.basis_product(e.j, e.i));
}

void check_associativity(const Algebra& a, const BasisScan& scan, AxiomReport& report) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k versus e_i (e_j e_k) = (e_j e_k) e_i
        record(report, kAssociativity, {i, j, k}, scan.times_basis(a.basis_product(i, j), k),
               scan.times_basis(a.basis_product(j, k), i));
      }
}

void check_alternating(const Algebra& a, AxiomReport& report) {
  const std::size_t n = a.dim();
  const Field& f = a.field();

  std::vector<BracketEntry> redundant = a.redundant_brackets();
  std::sort(redundant.begin(), redundant.end(), [](const BracketEntry& x, const BracketEntry& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  for (const auto& e : redundant) {
    bool repeated = e.i == e.j || e.i == e.k || e.j == e.k;
    Vec expected = repeated ? a.zero() : a.basis_bracket(e.i, e.j, e.k);
    record(report, kAlternating, {e.i, e.j, e.k}, e.coords, expected);
  }

  // Adjacent transpositions, evaluated through the multilinear extension.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
        Vec base = a.bracket(ei, ej, ek);
        Vec neg = scaled(base, -f.one());
        record(report, kAlternating, {j, i, k}, a.bracket(ej, ei, ek), neg);
        record(report, kAlternating, {i, k, j}, a.bracket(ei, ek, ej), neg);
      }

  if (f.characteristic() != 2) return;
  // Antisymmetry does not imply alternation in characteristic 2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vec ei = a.basis(i), ek = a.basis(k);
      record(report, kAlternating, {i, i, k}, a.bracket(ei, ei, ek), a.zero());
      record(report, kAlternating, {i, k, i}, a.bracket(ei, ek, ei), a.zero());
      record(report, kAlternating, {k, i, i}, a.bracket(ek, ei, ei), a.zero());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = a.basis(i) + a.basis(j);
        Vec z = a.basis(k);
        record(report, kAlternating, {i, j, k}, a.bracket(x, x, z), a.zero());
        record(report, kAlternating, {i, j, k}, a.bracket(x, z, x), a.zero());
        record(report, kAlternating, {i, j, k}, a.bracket(z, x, x), a.zero());
      }
}

void check_filippov(const Algebra& a, const BasisScan& scan, AxiomReport& report) {
  const std::size_t n = a.dim();
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3) {
        const Vec& inner = a.basis_bracket(a1, a2, a3);
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            const Vec& d1 = a.basis_bracket(a1, b, c);
            const Vec& d2 = a.basis_bracket(a2, b, c);
            const Vec& d3 = a.basis_bracket(a3, b, c);
            if (is_zero(inner) && is_zero(d1) && is_zero(d2) && is_zero(d3)) {
              ++report.checks;
              continue;
            }
            // [[a1,a2,a3],b,c] = [[a1,b,c],a2,a3] + [a1,[a2,b,c],a3] + [a1,a2,[a3,b,c]]
            Vec lhs = scan.bracket_first(inner, b, c);
            Vec rhs = scan.bracket_first(d1, a2, a3);
            Vec t2 = scan.bracket_middle(a1, d2, a3);
            Vec t3 = scan.bracket_last(a1, a2, d3);
            for (std::size_t l = 0; l < n; ++l) rhs[l] += t2[l] + t3[l];
            record(report, kFilippov, {a1, a2, a3, b, c}, std::move(lhs), std::move(rhs));
          }
      }
}

void check_leibniz(const Algebra& a, const BasisScan& scan, AxiomReport& report) {
  const std::size_t n = a.dim();
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          // [a1 a2, b, c] = a2 [a1,b,c] + a1 [a2,b,c]
          Vec lhs = scan.bracket_first(a.basis_product(a1, a2), b, c);
          Vec rhs = scan.times_basis(a.basis_bracket(a1, b, c), a2) + scan.times_basis(a.basis_bracket(a2, b, c), a1);
          record(report, kLeibniz, {a1, a2, b, c}, std::move(lhs), std::move(rhs));
        }
}

void check_identity(const Algebra& a, AxiomReport& report) {
  if (!a.identity()) return;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec ei = a.basis(i);
    record(report, kIdentity, {i}, a.product(*a.identity(), ei), ei);
  }
}

}  // namespace

AxiomReport check_axioms(const Algebra& a, const AxiomOptions& options) {
  if (a.dim() > options.max_dim)
    throw DimensionCapExceeded("dimension " + std::to_string(a.dim()) + " exceeds the axiom-scan cap of " +
                               std::to_string(options.max_dim));
  AxiomReport report;
  BasisScan scan(a);
  check_commutativity(a, report);
  check_associativity(a, scan, report);
  check_alternating(a, report);
  check_filippov(a, scan, report);
  check_leibniz(a, scan, report);
  check_identity(a, report);
  return report;
}

// ---------------------------------------------------------------- derived identities

namespace {

constexpr std::size_t kMaxFactors = 3;

// Product of the factors; nullopt stands for the empty product.
using Factor = std::optional<Vec>;

class Expander {
 public:
  explicit Expander(const Algebra& a) : a_(a) {}

  Factor times(const Factor& x, const Factor& y) const {
    if (!x) return y;
    if (!y) return x;
    return a_.product(*x, *y);
  }

  Vec apply(const Factor& coefficient, const Vec& v) const { return coefficient ? a_.product(*coefficient, v) : v; }

  // Product of fs[0..count) skipping index `skip` (skip == count skips none).
  Factor product_of(const std::array<Vec, kMaxFactors>& fs, std::size_t count, std::size_t skip) const {
    Factor out;
    for (std::size_t i = 0; i < count; ++i)
      if (i != skip) out = times(out, fs[i]);
    return out;
  }

 private:
  const Algebra& a_;
};

}  // namespace

AxiomReport verify_derived_identities(const Algebra& a, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  AxiomReport report;
  const Field& f = a.field();
  const Scalar minus_one = -f.one();
  Expander ex(a);
  ElementSampler sampler(seed);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::array<Vec, kMaxFactors> as, bs, cs;
    for (auto& v : as) v = sampler.next_coords(a);
    for (auto& v : bs) v = sampler.next_coords(a);
    for (auto& v : cs) v = sampler.next_coords(a);
    const Vec& x = as[0];
    const Vec& y = bs[0];
    const Vec& z = cs[0];

    // Sign relations under S3.
    Vec base = a.bracket(x, y, z);
    record(report, kBracketSymmetry, {trial, 0}, base, a.bracket(y, z, x));
    record(report, kBracketSymmetry, {trial, 1}, base, a.bracket(z, x, y));
    record(report, kBracketSymmetry, {trial, 2}, base, scaled(a.bracket(x, z, y), minus_one));
    record(report, kBracketSymmetry, {trial, 3}, base, scaled(a.bracket(y, x, z), minus_one));
    record(report, kBracketSymmetry, {trial, 4}, base, scaled(a.bracket(z, y, x), minus_one));

    // Derivation in the middle and last slots.
    record(report, kDerivationMiddle, {trial}, a.bracket(x, a.product(bs[0], bs[1]), z),
           a.product(bs[1], a.bracket(x, bs[0], z)) + a.product(bs[0], a.bracket(x, bs[1], z)));
    record(report, kDerivationLast, {trial}, a.bracket(x, y, a.product(cs[0], cs[1])),
           a.product(cs[1], a.bracket(x, y, cs[0])) + a.product(cs[0], a.bracket(x, y, cs[1])));

    // Brackets of single factors, shared by every expansion below.
    std::array<std::array<std::array<Vec, kMaxFactors>, kMaxFactors>, kMaxFactors> br;
    for (std::size_t i = 0; i < kMaxFactors; ++i)
      for (std::size_t j = 0; j < kMaxFactors; ++j)
        for (std::size_t r = 0; r < kMaxFactors; ++r) br[i][j][r] = a.bracket(as[i], bs[j], cs[r]);

    // full[k] = product of the first k factors, without[k][i] = the same
    // product with factor i left out.
    std::array<Vec, kMaxFactors + 1> full_a, full_b, full_c;
    std::array<std::array<Factor, kMaxFactors>, kMaxFactors + 1> without_a, without_b, without_c;
    for (std::size_t k = 1; k <= kMaxFactors; ++k) {
      full_a[k] = *ex.product_of(as, k, k);
      full_b[k] = *ex.product_of(bs, k, k);
      full_c[k] = *ex.product_of(cs, k, k);
      for (std::size_t i = 0; i < k; ++i) {
        without_a[k][i] = ex.product_of(as, k, i);
        without_b[k][i] = ex.product_of(bs, k, i);
        without_c[k][i] = ex.product_of(cs, k, i);
      }
    }

    for (std::size_t k = 1; k <= kMaxFactors; ++k) {
      Vec rhs_first = a.zero(), rhs_middle = a.zero(), rhs_last = a.zero();
      for (std::size_t i = 0; i < k; ++i) {
        rhs_first = rhs_first + ex.apply(without_a[k][i], br[i][0][0]);
        rhs_middle = rhs_middle + ex.apply(without_b[k][i], br[0][i][0]);
        rhs_last = rhs_last + ex.apply(without_c[k][i], br[0][0][i]);
      }
      record(report, kProductRuleFirst, {trial, k}, a.bracket(full_a[k], y, z), std::move(rhs_first));
      record(report, kProductRuleMiddle, {trial, k}, a.bracket(x, full_b[k], z), std::move(rhs_middle));
      record(report, kProductRuleLast, {trial, k}, a.bracket(x, y, full_c[k]), std::move(rhs_last));
    }

    for (std::size_t k = 1; k <= kMaxFactors; ++k)
      for (std::size_t s = 1; s <= kMaxFactors; ++s)
        for (std::size_t t = 1; t <= kMaxFactors; ++t) {
          Vec rhs = a.zero();
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < s; ++j) {
              Factor ab = ex.times(without_a[k][i], without_b[s][j]);
              for (std::size_t r = 0; r < t; ++r) rhs = rhs + ex.apply(ex.times(ab, without_c[t][r]), br[i][j][r]);
            }
          record(report, kProductRuleAll, {trial, k, s, t}, a.bracket(full_a[k], full_b[s], full_c[t]), std::move(rhs));
        }

    // Powers of the first factor in each slot.
    std::array<Factor, kMaxFactors + 1> pow_x, pow_y, pow_z;  // pow[e] = x^e, pow[0] empty
    for (std::size_t e = 1; e <= kMaxFactors; ++e) {
      pow_x[e] = ex.times(pow_x[e - 1], x);
      pow_y[e] = ex.times(pow_y[e - 1], y);
      pow_z[e] = ex.times(pow_z[e - 1], z);
    }
    for (std::size_t k = 1; k <= kMaxFactors; ++k)
      for (std::size_t s = 1; s <= kMaxFactors; ++s)
        for (std::size_t t = 1; t <= kMaxFactors; ++t) {
          Vec lhs = a.bracket(*pow_x[k], *pow_y[s], *pow_z[t]);
          Factor coefficient = ex.times(ex.times(pow_x[k - 1], pow_y[s - 1]), pow_z[t - 1]);
          Vec rhs = scaled(ex.apply(coefficient, base), f.from_int(std::int64_t(k * s * t)));
          record(report, kPowerRule, {trial, k, s, t}, std::move(lhs), std::move(rhs));
        }
  }
  return report;
}

}  // namespace p23

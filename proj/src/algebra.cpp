#include "p23/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace p23 {

namespace {

// Sign of the permutation that sorts three distinct indices.
int sort_sign(std::size_t i, std::size_t j, std::size_t k) {
  int inversions = int(i > j) + int(i > k) + int(j > k);
  return inversions % 2 == 0 ? 1 : -1;
}

Vec signed_copy(const Vec& v, int sign) {
  if (sign > 0) return v;
  Vec out = v;
  for (auto& s : out) s = -s;
  return out;
}

void require_length(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " coordinates, got " +
                                std::to_string(v.size()));
}

}  // namespace

// ---------------------------------------------------------------- builder

AlgebraBuilder::AlgebraBuilder(std::size_t dim, Field field) : dim_(dim), field_(field) {}

void AlgebraBuilder::check_coords(const Vec& coords) const {
  require_length(coords, dim_, "structure constants");
  for (const auto& s : coords)
    if (s.field() != field_) throw FieldMismatch("structure constant over " + s.field().name() + ", algebra over " + field_.name());
}

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t i, std::size_t j, Vec coords) {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("product index out of range");
  check_coords(coords);
  for (const auto& e : products_)
    if (e.i == i && e.j == j) throw std::invalid_argument("duplicate product entry");
  products_.push_back({i, j, std::move(coords)});
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec coords) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::invalid_argument("bracket index out of range");
  check_coords(coords);
  for (const auto& e : brackets_)
    if (e.i == i && e.j == j && e.k == k) throw std::invalid_argument("duplicate bracket entry");
  brackets_.push_back({i, j, k, std::move(coords)});
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_identity(Vec coords) {
  check_coords(coords);
  identity_ = std::move(coords);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_) throw std::invalid_argument("label count does not match dimension");
  labels_ = std::move(labels);
  return *this;
}

AlgebraPtr AlgebraBuilder::build() const {
  const std::size_t n = dim_;
  auto alg = std::shared_ptr<Algebra>(new Algebra(n, field_));
  const Vec zero = zero_vector(n, field_);
  alg->product_.assign(n * n, zero);
  alg->bracket_.assign(n * n * n, zero);

  // Product: canonical entry per unordered pair.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_owner;
  for (std::size_t e = 0; e < products_.size(); ++e) {
    const auto& p = products_[e];
    auto key = std::minmax(p.i, p.j);
    auto [it, inserted] = product_owner.emplace(key, e);
    if (!inserted && p.i <= p.j && products_[it->second].i > products_[it->second].j) it->second = e;
  }
  for (std::size_t e = 0; e < products_.size(); ++e) {
    const auto& p = products_[e];
    if (product_owner.at(std::minmax(p.i, p.j)) != e) {
      alg->redundant_products_.push_back(p);
      continue;
    }
    alg->product_[p.i * n + p.j] = p.coords;
    alg->product_[p.j * n + p.i] = p.coords;
  }

  // Bracket: canonical entry per set of three distinct indices.
  using Triple = std::array<std::size_t, 3>;
  std::map<Triple, std::size_t> bracket_owner;
  for (std::size_t e = 0; e < brackets_.size(); ++e) {
    const auto& b = brackets_[e];
    if (b.i == b.j || b.i == b.k || b.j == b.k) continue;
    Triple key{b.i, b.j, b.k};
    std::sort(key.begin(), key.end());
    auto [it, inserted] = bracket_owner.emplace(key, e);
    const auto& owner = brackets_[it->second];
    bool owner_sorted = owner.i < owner.j && owner.j < owner.k;
    if (!inserted && !owner_sorted && b.i < b.j && b.j < b.k) it->second = e;
  }
  for (std::size_t e = 0; e < brackets_.size(); ++e) {
    const auto& b = brackets_[e];
    if (b.i == b.j || b.i == b.k || b.j == b.k) {
      alg->redundant_brackets_.push_back(b);
      continue;
    }
    Triple key{b.i, b.j, b.k};
    std::sort(key.begin(), key.end());
    if (bracket_owner.at(key) != e) {
      alg->redundant_brackets_.push_back(b);
      continue;
    }
    Vec sorted_value = signed_copy(b.coords, sort_sign(b.i, b.j, b.k));
    Triple perm = key;
    do {
      auto [x, y, z] = perm;
      alg->bracket_[(x * n + y) * n + z] = signed_copy(sorted_value, sort_sign(x, y, z));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  alg->identity_ = identity_;
  alg->labels_ = labels_;
  alg->index_nonzeros();
  return alg;
}

// ---------------------------------------------------------------- Algebra

void Algebra::index_nonzeros() {
  auto sparse = [](const Vec& v) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t l = 0; l < v.size(); ++l)
      if (!v[l].is_zero()) out.emplace_back(l, v[l]);
    return out;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      auto values = sparse(basis_product(i, j));
      if (!values.empty()) product_terms_.push_back({{i, j, 0}, std::move(values)});
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        auto values = sparse(basis_bracket(i, j, k));
        if (!values.empty()) bracket_terms_.push_back({{i, j, k}, std::move(values)});
      }
}

std::string Algebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
  require_length(x, n_, "product operand");
  require_length(y, n_, "product operand");
  Vec out = zero();
  for (const auto& term : product_terms_) {
    auto [i, j, unused] = term.idx;
    Scalar c = x[i] * y[j];
    if (i != j) c.add_mul(x[j], y[i]);
    if (c.is_zero()) continue;
    for (const auto& [l, v] : term.values) out[l].add_mul(c, v);
  }
  return out;
}

Vec Algebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  require_length(x, n_, "bracket operand");
  require_length(y, n_, "bracket operand");
  require_length(z, n_, "bracket operand");
  Vec out = zero();
  for (const auto& term : bracket_terms_) {
    auto [i, j, k] = term.idx;
    // 3x3 minor of the coordinate rows x, y, z on columns i, j, k.
    Scalar minor = x[i] * (y[j] * z[k] - y[k] * z[j]);
    minor -= x[j] * (y[i] * z[k] - y[k] * z[i]);
    minor += x[k] * (y[i] * z[j] - y[j] * z[i]);
    if (minor.is_zero()) continue;
    for (const auto& [l, v] : term.values) out[l].add_mul(minor, v);
  }
  return out;
}

std::vector<ProductEntry> Algebra::product_entries() const {
  std::vector<ProductEntry> out;
  for (const auto& term : product_terms_) out.push_back({term.idx[0], term.idx[1], basis_product(term.idx[0], term.idx[1])});
  return out;
}

std::vector<BracketEntry> Algebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (const auto& term : bracket_terms_) {
    auto [i, j, k] = term.idx;
    out.push_back({i, j, k, basis_bracket(i, j, k)});
  }
  return out;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.product_ == b.product_ && a.bracket_ == b.bracket_ &&
         a.identity_ == b.identity_ && a.labels_ == b.labels_;
}

// ---------------------------------------------------------------- Element

Element::Element(AlgebraPtr algebra, Vec coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw std::invalid_argument("element without algebra");
  require_length(coords_, algebra_->dim(), "element");
  for (const auto& s : coords_)
    if (s.field() != algebra_->field()) throw FieldMismatch("element coordinate outside the algebra's field");
}

Element Element::zero(const AlgebraPtr& algebra) { return Element(algebra, algebra->zero()); }

Element Element::basis(const AlgebraPtr& algebra, std::size_t i) { return Element(algebra, algebra->basis(i)); }

Element Element::identity(const AlgebraPtr& algebra) {
  if (!algebra->identity()) throw std::invalid_argument("algebra declares no identity element");
  return Element(algebra, *algebra->identity());
}

void require_same_algebra(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("elements belong to different algebras");
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return Element(a.algebra_, a.coords_ + b.coords_);
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return Element(a.algebra_, a.coords_ - b.coords_);
}

Element operator*(const Scalar& c, const Element& a) { return Element(a.algebra_, scaled(a.coords_, c)); }

bool operator==(const Element& a, const Element& b) { return a.algebra_ == b.algebra_ && a.coords_ == b.coords_; }

Element eval_product(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element(x.algebra(), x.algebra()->product(x.coords(), y.coords()));
}

Element eval_bracket(const Element& x, const Element& y, const Element& z) {
  require_same_algebra(x, y);
  require_same_algebra(x, z);
  return Element(x.algebra(), x.algebra()->bracket(x.coords(), y.coords(), z.coords()));
}

// ---------------------------------------------------------------- constructions

Unitalization unitalize(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  auto lift = [&](const Vec& v) {
    Vec out = v;
    out.push_back(f.zero());
    return out;
  };

  AlgebraBuilder b(n + 1, f);
  for (const auto& e : a->product_entries()) b.set_product(e.i, e.j, lift(e.coords));
  for (std::size_t i = 0; i < n; ++i) b.set_product(i, n, unit_vector(n + 1, i, f));
  b.set_product(n, n, unit_vector(n + 1, n, f));
  for (const auto& e : a->bracket_entries()) b.set_bracket(e.i, e.j, e.k, lift(e.coords));
  b.set_identity(unit_vector(n + 1, n, f));

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(a->label(i));
  labels.emplace_back("1_P");
  b.set_labels(std::move(labels));

  Unitalization u;
  u.source = a;
  u.algebra = b.build();
  for (std::size_t i = 0; i < n; ++i) u.embed.push_back(unit_vector(n + 1, i, f));
  return u;
}

Element Unitalization::apply(const Element& a) const {
  if (a.algebra() != source) throw AlgebraMismatch("element is not from the unitalized algebra's source");
  return Element(algebra, row_times(a.coords(), embed, algebra->dim(), algebra->field()));
}

AlgebraPtr change_basis(const Algebra& a, const Matrix& rows) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (rows.size() != n) throw std::invalid_argument("change_basis: need one row per basis vector");
  auto inv = inverse(rows, f);
  if (!inv) throw std::invalid_argument("change_basis: rows are linearly dependent");
  auto to_new = [&](const Vec& old_coords) { return row_times(old_coords, *inv, n, f); };

  AlgebraBuilder b(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec c = to_new(a.product(rows[i], rows[j]));
      if (!is_zero(c)) b.set_product(i, j, std::move(c));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec c = to_new(a.bracket(rows[i], rows[j], rows[k]));
        if (!is_zero(c)) b.set_bracket(i, j, k, std::move(c));
      }
  if (a.identity()) b.set_identity(to_new(*a.identity()));
  return b.build();
}

}  // namespace p23

#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: F_5 oracles work on explicit finite vector sets,
// permutation signs come from cycle decomposition.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "p23/algebra.hpp"

namespace oracle {

/// Sign of a permutation of {0..n-1} from its cycle lengths.
inline int permutation_sign(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Levi-Civita symbol on four indices: 0 on repeats, else the permutation sign.
inline int levi_civita(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  std::vector<std::size_t> p{i, j, k, l};
  std::set<std::size_t> distinct(p.begin(), p.end());
  if (distinct.size() != 4) return 0;
  return permutation_sign(p);
}

// ---------------------------------------------------------------- F_5

constexpr int kP = 5;

using Word = std::uint32_t;  // base-5 encoding of a coordinate vector

/// Structure tensors of an algebra over F_5 as plain integers.
struct F5Tables {
  std::size_t n = 0;
  std::vector<int> product;  // [(i*n + j)*n + l]
  std::vector<int> bracket;  // [((i*n + j)*n + k)*n + l]

  explicit F5Tables(const p23::Algebra& a) : n(a.dim()) {
    product.resize(n * n * n);
    bracket.resize(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          product[(i * n + j) * n + l] = int(a.basis_product(i, j)[l].numerator().get_si());
          for (std::size_t k = 0; k < n; ++k)
            bracket[((i * n + j) * n + k) * n + l] = int(a.basis_bracket(i, j, k)[l].numerator().get_si());
        }
    tabulate();
  }

  Word size() const {
    Word s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= kP;
    return s;
  }

  std::vector<int> decode(Word w) const {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i, w /= kP) v[i] = int(w % kP);
    return v;
  }

  Word encode(const std::vector<int>& v) const {
    Word w = 0;
    for (std::size_t i = n; i-- > 0;) w = w * kP + Word(((v[i] % kP) + kP) % kP);
    return w;
  }

  Word add(Word a, Word b, int c = 1) const {
    return sums[std::size_t(a) * size() + multiples[std::size_t(((c % kP) + kP) % kP) * size() + b]];
  }

  // x * e_j
  Word times_basis(Word x, std::size_t j) const { return times[j * size() + x]; }

  // [x, e_j, e_k]
  Word bracket_basis(Word x, std::size_t j, std::size_t k) const { return brackets[(j * n + k) * size() + x]; }

  std::vector<Word> sums, multiples, times, brackets;

  // Lookup tables over all vectors, filled from the integer tensors.
  void tabulate() {
    const Word size = this->size();
    sums.resize(std::size_t(size) * size);
    multiples.resize(std::size_t(kP) * size);
    times.resize(n * size);
    brackets.resize(n * n * size);
    for (Word a = 0; a < size; ++a) {
      auto x = decode(a);
      for (Word b = 0; b < size; ++b) {
        auto y = decode(b);
        for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
        sums[std::size_t(a) * size + b] = encode(y);
      }
      for (int c = 0; c < kP; ++c) {
        auto y = x;
        for (auto& v : y) v *= c;
        multiples[std::size_t(c) * size + a] = encode(y);
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> out(n, 0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * product[(i * n + j) * n + l];
        times[j * size + a] = encode(out);
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<int> br(n, 0);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) br[l] += x[i] * bracket[((i * n + j) * n + k) * n + l];
          brackets[(j * n + k) * size + a] = encode(br);
        }
      }
    }
  }
};

/// A subspace of F_5^n as the sorted list of all its vectors.
using VecSet = std::vector<Word>;

/// Every subspace of F_5^n, each as its full element set.
inline std::vector<VecSet> all_subspaces(const F5Tables& t) {
  const Word size = t.size();
  std::set<VecSet> seen{VecSet{0}};
  std::vector<VecSet> frontier{VecSet{0}};
  while (!frontier.empty()) {
    std::vector<VecSet> next;
    for (const auto& v : frontier) {
      std::vector<bool> member(size, false);
      for (Word w : v) member[w] = true;
      // Each one-step extension is built once per v: its new vectors are
      // marked so that other generators of it are skipped.
      for (Word x = 1; x < size; ++x) {
        if (member[x]) continue;
        VecSet grown;
        grown.reserve(v.size() * kP);
        for (Word w : v)
          for (int c = 0; c < kP; ++c) grown.push_back(t.add(w, x, c));
        for (Word w : grown) member[w] = true;
        std::sort(grown.begin(), grown.end());
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool contains_all(const VecSet& big, const VecSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

enum class Closure { associative_ideal, poisson_ideal };

inline bool is_closed(const F5Tables& t, const VecSet& v, Closure kind) {
  std::vector<bool> member(t.size(), false);
  for (Word w : v) member[w] = true;
  for (Word x : v)
    for (std::size_t j = 0; j < t.n; ++j) {
      if (!member[t.times_basis(x, j)]) return false;
      if (kind == Closure::poisson_ideal)
        for (std::size_t k = 0; k < t.n; ++k)
          if (!member[t.bracket_basis(x, j, k)]) return false;
    }
  return true;
}

/// The least closed subspace containing `seed` among all subspaces, found
/// by scanning them; also asserts that it lies inside every other closed
/// subspace containing the seed.
inline VecSet minimal_closed(const F5Tables& t, const std::vector<VecSet>& subspaces, const VecSet& seed,
                             Closure kind, bool* unique_minimum = nullptr) {
  std::vector<const VecSet*> closed;
  for (const auto& v : subspaces)
    if (contains_all(v, seed) && is_closed(t, v, kind)) closed.push_back(&v);
  const VecSet* best = *std::min_element(closed.begin(), closed.end(),
                                         [](const VecSet* a, const VecSet* b) { return a->size() < b->size(); });
  if (unique_minimum) {
    *unique_minimum = true;
    for (const VecSet* v : closed) *unique_minimum = *unique_minimum && contains_all(*v, *best);
  }
  return *best;
}

/// Smallest subspace (element set) containing the given vectors.
inline VecSet span_set(const F5Tables& t, const std::vector<Word>& gens) {
  std::set<Word> s{0};
  for (Word g : gens) {
    std::set<Word> grown;
    for (Word w : s)
      for (int c = 0; c < kP; ++c) grown.insert(t.add(w, g, c));
    s = std::move(grown);
  }
  return {s.begin(), s.end()};
}

inline VecSet intersect_sets(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Random structure constants over F_p (no axioms), for algorithms that do
/// not depend on them.
inline p23::AlgebraPtr random_structure(std::size_t n, const p23::Field& f, std::uint64_t seed, int density = 3) {
  std::mt19937_64 rng(seed);
  auto coords = [&] {
    p23::Vec v;
    for (std::size_t l = 0; l < n; ++l)
      v.push_back(rng() % density == 0 ? f.from_int(std::int64_t(rng() % 5)) : f.zero());
    return v;
  };
  p23::AlgebraBuilder b(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b.set_product(i, j, coords());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) b.set_bracket(i, j, k, coords());
  return b.build();
}

}  // namespace oracle

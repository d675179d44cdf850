#pragma once

#include <cstdint>
#include <random>

#include "p23/algebra.hpp"

namespace p23 {

/// Deterministic stream of pseudo-random elements with coordinates in
/// {-3, ..., 3}. The mapping from the mt19937_64 output is fixed, so streams
/// agree across standard libraries.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}

  Vec next_coords(const Algebra& a);
  Element next(const AlgebraPtr& a) { return Element(a, next_coords(*a)); }
  /// Uniform index in [0, bound); bound > 0.
  std::size_t next_index(std::size_t bound) { return std::size_t(rng_() % bound); }

 private:
  std::mt19937_64 rng_;
};

/// The first element of the stream for `seed`.
Element random_element(const AlgebraPtr& a, std::uint64_t seed);

}  // namespace p23

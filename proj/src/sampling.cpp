#include "p23/sampling.hpp"

namespace p23 {

Vec ElementSampler::next_coords(const Algebra& a) {
  Vec out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.field().from_int(std::int64_t(rng_() % 7) - 3));
  return out;
}

Element random_element(const AlgebraPtr& a, std::uint64_t seed) {
  ElementSampler sampler(seed);
  return sampler.next(a);
}

}  // namespace p23

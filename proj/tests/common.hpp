#pragma once

#include <string>

#include "gvec/gvec.hpp"
#include "gvec/io.hpp"

namespace testing_support {

inline gvec::BoundQuiverAlgebra fixture(const std::string& name, std::uint64_t p = gvec::kDefaultPrime) {
  return gvec::buildAlgebra(gvec::loadAlgebraSpec(std::string(GVEC_FIXTURES) + "/" + name + ".json"),
                            gvec::PrimeField(p));
}

inline gvec::SampleConfig config(std::uint64_t seed = 2024, std::size_t samples = 7) {
  gvec::SampleConfig c;
  c.seed = seed;
  c.samples = samples;
  return c;
}

/// Cokernel of a uniformly random presentation with the given g-vector.
inline gvec::Representation randomCokernel(const gvec::BoundQuiverAlgebra& alg, const gvec::GVector& g,
                                           gvec::Rng& rng) {
  const auto s = gvec::split(g);
  return gvec::cokernel(gvec::realize(gvec::ProjMap::random(alg, gvec::detail::expand(s.minus),
                                                            gvec::detail::expand(s.plus), rng)));
}

inline gvec::GVector randomGVector(std::size_t n, std::int64_t bound, gvec::Rng& rng) {
  gvec::GVector g(n);
  for (auto& x : g.c) x = std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
  return g;
}

}  // namespace testing_support

#pragma once

#include <cstdint>
#include <string_view>

#include "ineqforge/sampling.hpp"
#include "ineqforge/space.hpp"

namespace fixtures {

using ineqforge::Field;
using ineqforge::Rng;
using ineqforge::Space;
using ineqforge::Vector;

inline Rng rng(std::string_view stream, std::uint64_t i, std::uint64_t seed = 11) {
  return Rng::for_trial(seed, stream, i);
}

/// Dimension in [1, 8], identity or random Gram by index parity.
inline Space<double> space(Field field, Rng& r, std::uint64_t i) {
  const int dim = r.uniform_int(1, 8);
  if (i % 2 == 0) return Space<double>::standard(field, dim);
  return ineqforge::sample_random_space(field, dim, r);
}

inline Field field_of(std::uint64_t i) { return (i / 2) % 2 == 0 ? Field::Real : Field::Complex; }

inline double rel(double a, double b, double scale) {
  return std::abs(a - b) / std::max(scale, 1e-300);
}

}  // namespace fixtures

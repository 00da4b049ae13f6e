#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ineqforge/orthonormal.hpp"
#include "ineqforge/space.hpp"

namespace ineqforge {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-trial random stream. The state depends only on (seed, stream name,
/// index), so trials can be generated in any order or in parallel.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : engine_(state) {}

  static Rng for_trial(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  double normal() { return normal_(engine_); }
  /// Uniform on [0, 1).
  double uniform() { return uniform_(engine_); }
  /// Uniform on [lo, hi].
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform() < 0.5; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Independent standard-normal coordinates (real and imaginary parts
/// independently in a complex space).
Vector<double> sample_normal_vector(const Space<double>& space, Rng& rng);

/// Resamples until the norm clears the space's zero threshold.
Vector<double> sample_nonzero_vector(const Space<double>& space, Rng& rng);

/// A^H A + 1e-3 I with A standard normal (complex entries for complex fields).
Space<double> sample_random_space(Field field, int dim, Rng& rng);

/// Gram-Schmidt over `size` sampled vectors, resampling on rank deficiency.
OrthonormalFamily<double> sample_family(const Space<double>& space, int size, Rng& rng);

/// s * x + sigma * ||x|| * g / sqrt(dim) with g standard normal, sigma
/// log-uniform on [1e-3, 1] and s a random unit scalar (sign, or phase in a
/// complex space). With `positive` the unit scalar is +1.
Vector<double> sample_near_parallel(const Space<double>& space, const Vector<double>& x,
                                    Rng& rng, bool positive);

/// Complex Gaussian vector conditioned on |cos(x, v)| >= min_abs_cos.
///
/// For a standard complex Gaussian in C^d, |<v, x^>|^2 / ||v||^2 follows
/// Beta(1, d - 1); the conditioned draw keeps the phase, the orthogonal
/// direction and the norm of an unconditioned draw and resamples the squared
/// cosine from the truncated law by inverse CDF. Exact for the identity
/// Gram; always lands inside the conditioned region.
Vector<double> sample_with_min_cosine(const Space<double>& space, const Vector<double>& x,
                                      double min_abs_cos, Rng& rng);

}  // namespace ineqforge

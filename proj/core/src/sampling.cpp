#include "ineqforge/sampling.hpp"

#include <cmath>
#include <vector>

#include "ineqforge/digest.hpp"

namespace ineqforge {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ fnv1a(stream));
  s = splitmix64(s ^ index);
  return Rng(s);
}

Vector<double> sample_normal_vector(const Space<double>& space, Rng& rng) {
  Vector<double>::Coords c(space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    const double re = rng.normal();
    const double im = space.is_real() ? 0.0 : rng.normal();
    c[i] = {re, im};
  }
  return Vector<double>(std::move(c));
}

Vector<double> sample_nonzero_vector(const Space<double>& space, Rng& rng) {
  for (;;) {
    Vector<double> v = sample_normal_vector(space, rng);
    if (norm(space, v) >= space.zero_threshold()) return v;
  }
}

Space<double> sample_random_space(Field field, int dim, Rng& rng) {
  Space<double>::Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = rng.normal();
      const double im = field == Field::Real ? 0.0 : rng.normal();
      a(i, j) = {re, im};
    }
  }
  return Space<double>(field, gram_from_factor<double>(a, 1e-3));
}

OrthonormalFamily<double> sample_family(const Space<double>& space, int size, Rng& rng) {
  if (size <= 0) return OrthonormalFamily<double>(space);
  for (;;) {
    std::vector<Vector<double>> raw;
    raw.reserve(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) raw.push_back(sample_normal_vector(space, rng));
    try {
      return gram_schmidt(space, std::span<const Vector<double>>(raw));
    } catch (const RankDeficient&) {
      // Gaussian draws are almost surely independent; draw again.
    }
  }
}

namespace {

std::complex<double> random_unit(const Space<double>& space, Rng& rng, bool positive) {
  if (positive) return {1.0, 0.0};
  if (space.is_real()) return {rng.coin() ? 1.0 : -1.0, 0.0};
  const double phase = 2.0 * M_PI * rng.uniform();
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace

Vector<double> sample_near_parallel(const Space<double>& space, const Vector<double>& x,
                                    Rng& rng, bool positive) {
  const double sigma = std::pow(10.0, -3.0 + 3.0 * rng.uniform());
  const double nx = norm(space, x);
  const std::complex<double> s = random_unit(space, rng, positive);
  for (;;) {
    const Vector<double> g = sample_normal_vector(space, rng);
    const Vector<double> v =
        s * x + (sigma * nx / std::sqrt(static_cast<double>(space.dim()))) * g;
    if (norm(space, v) >= space.zero_threshold()) return v;
  }
}

Vector<double> sample_with_min_cosine(const Space<double>& space, const Vector<double>& x,
                                      double min_abs_cos, Rng& rng) {
  if (space.is_real()) throw DomainError("conditioned sampler is defined for complex spaces");
  if (!(min_abs_cos >= 0.0 && min_abs_cos <= 1.0)) {
    throw UsageError("minimum cosine must lie in [0, 1]");
  }
  require_nonzero(space, x, "x");
  const Vector<double> xhat = (1.0 / norm(space, x)) * x;
  const int d = space.dim();
  for (;;) {
    const Vector<double> g = sample_nonzero_vector(space, rng);
    const double u = 1.0 - rng.uniform();  // (0, 1]
    if (d == 1) return g;
    const std::complex<double> beta = inner(space, g, xhat);
    const Vector<double> perp = g - beta * xhat;
    const double np = norm(space, perp);
    if (std::abs(beta) == 0.0 || np < space.zero_threshold()) continue;
    const std::complex<double> phase = beta / std::abs(beta);
    // 1 - t ~ Beta(d - 1, 1) restricted to [0, 1 - t0]: CDF (s / s0)^(d - 1).
    const double s0 = 1.0 - min_abs_cos * min_abs_cos;
    const double s = s0 * std::pow(u, 1.0 / static_cast<double>(d - 1));
    const double c = std::sqrt(1.0 - s);
    const double ng = norm(space, g);
    const Vector<double> v = (ng * c) * (phase * xhat) + (ng * std::sqrt(s) / np) * perp;
    if (std::abs(inner(space, v, xhat)) >= min_abs_cos * norm(space, v)) return v;
  }
}

}  // namespace ineqforge

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fixtures.hpp"
#include "ineqforge/equality.hpp"
#include "ineqforge/falsifier.hpp"

namespace {

using namespace ineqforge;
using V = Vector<double>;

// Digest of sample_instance(seed 42, generalized-2.1, index 0, dims 2..2).
constexpr const char* kGoldenDigest = "1578675e3bbacfcb";

TEST(Config, Validation) {
  SearchConfig c;
  EXPECT_NO_THROW(c.validate());
  c.dim_lo = 0;
  EXPECT_THROW(c.validate(), UsageError);
  c = SearchConfig{};
  c.dim_lo = 5;
  c.dim_hi = 4;
  EXPECT_THROW(c.validate(), UsageError);
  c = SearchConfig{};
  c.step_size = 1;
  EXPECT_THROW(c.validate(), UsageError);
  c = SearchConfig{};
  c.fd_eps = 0;
  EXPECT_THROW(c.validate(), UsageError);
  EXPECT_EQ(to_string(FieldMode::Both), "both");
  EXPECT_EQ(to_string(GramMode::Random), "random");
}

TEST(Histogram, Buckets) {
  EXPECT_EQ(histogram_bucket(0), 0);
  EXPECT_EQ(histogram_bucket(-1), 0);
  EXPECT_EQ(histogram_bucket(std::nan("")), 0);
  EXPECT_EQ(histogram_bucket(1e-16), 1);
  EXPECT_EQ(histogram_bucket(1e-30), 1);
  EXPECT_EQ(histogram_bucket(0.5), 16);
  EXPECT_EQ(histogram_bucket(1.0), 17);
  EXPECT_EQ(histogram_bucket(1e40), kHistogramBuckets - 1);
  EXPECT_EQ(histogram_bucket(HUGE_VAL), kHistogramBuckets - 1);
}

TEST(SampleInstance, DeterministicAndGolden) {
  SearchConfig cfg;
  cfg.seed = 42;
  cfg.dim_lo = cfg.dim_hi = 2;
  const auto a = sample_instance(cfg, names::kGeneralized, 0);
  const auto b = sample_instance(cfg, names::kGeneralized, 0);
  EXPECT_EQ(instance_digest(a), instance_digest(b));
  EXPECT_EQ(flatten(a), flatten(b));
  EXPECT_EQ(instance_digest(a), kGoldenDigest);
  EXPECT_NE(instance_digest(sample_instance(cfg, names::kGeneralized, 1)), instance_digest(a));
}

TEST(SampleInstance, RespectsConfig) {
  SearchConfig cfg;
  cfg.dim_lo = 3;
  cfg.dim_hi = 5;
  for (auto name : kCatalogNames) {
    bool saw_real = false, saw_complex = false;
    for (std::uint64_t i = 0; i < 40; ++i) {
      const auto inst = sample_instance(cfg, name, i);
      EXPECT_GE(inst.space.dim(), 3);
      EXPECT_LE(inst.space.dim(), 5);
      EXPECT_TRUE(inst.space.identity_gram());
      (inst.space.is_real() ? saw_real : saw_complex) = true;
    }
    EXPECT_TRUE(saw_real);
    EXPECT_EQ(saw_complex, entry_info(name).permits_complex) << name;
  }
  cfg.field = FieldMode::Complex;
  cfg.gram = GramMode::Random;
  const auto c = sample_instance(cfg, names::kBuzano, 0);
  EXPECT_FALSE(c.space.is_real());
  EXPECT_FALSE(c.space.identity_gram());
  EXPECT_THROW(sample_instance(cfg, "nonsense", 0), UsageError);
}

TEST(Falsify, ZeroTrialsIsEmpty) {
  SearchConfig cfg;
  cfg.trials = 0;
  const auto r = falsify(names::kSchwarz, cfg).report;
  EXPECT_EQ(r.trials_run, 0u);
  EXPECT_EQ(r.violation_count, 0u);
  EXPECT_EQ(r.near_equality_count, 0u);
  EXPECT_TRUE(std::isinf(r.worst_margin));
  EXPECT_TRUE(r.worst_instance_digest.empty());
  for (auto h : r.margin_histogram) EXPECT_EQ(h, 0u);
}

TEST(Falsify, NoViolationsAcrossCatalog) {
  SearchConfig cfg;
  cfg.seed = 1;
  cfg.trials = 400;
  cfg.dim_lo = 1;
  cfg.dim_hi = 8;
  cfg.gram = GramMode::Random;
  for (auto name : kCatalogNames) {
    const auto r = falsify(name, cfg).report;
    EXPECT_EQ(r.trials_run, 400u) << name;
    EXPECT_EQ(r.violation_count, 0u) << name;
    std::uint64_t counted = 0;
    for (auto h : r.margin_histogram) counted += h;
    EXPECT_EQ(counted + r.vacuous_count, r.trials_run) << name;
    EXPECT_LT(r.vacuous_count, r.trials_run) << name;
  }
}

TEST(Falsify, DeterministicAcrossThreadCounts) {
  SearchConfig cfg;
  cfg.seed = 8;
  cfg.trials = 300;
  for (auto name : {names::kBuzanoMoore, names::kChain, names::kKurepaRefined}) {
    const auto a = falsify(name, cfg, {1, true});
    const auto b = falsify(name, cfg, {5, true});
    EXPECT_EQ(a.report.worst_margin, b.report.worst_margin);
    EXPECT_EQ(a.report.worst_instance_digest, b.report.worst_instance_digest);
    EXPECT_EQ(a.report.margin_histogram, b.report.margin_histogram);
    EXPECT_EQ(a.report.near_equality_count, b.report.near_equality_count);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].outcome.digest, b.records[i].outcome.digest);
    }
  }
}

TEST(Gradient, MatchesAnalyticSchwarzMargin) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto r = fixtures::rng("fd", i);
    const int dim = r.uniform_int(2, 6);
    const auto s = i % 2 ? sample_random_space(Field::Real, dim, r)
                         : Space<double>::standard(Field::Real, dim);
    const V y = sample_nonzero_vector(s, r);
    const V x = sample_nonzero_vector(s, r);
    const auto to_vec = [&](std::span<const double> t) {
      V::Coords c(dim);
      for (int k = 0; k < dim; ++k) c[k] = t[k];
      return V(c);
    };
    const Objective f = [&](std::span<const double> t) {
      const V u = to_vec(t);
      return norm(s, u) * norm(s, y) - std::abs(inner(s, u, y));
    };
    std::vector<double> theta(dim);
    for (int k = 0; k < dim; ++k) theta[k] = x[k].real();
    const auto g = finite_difference_gradient(f, theta, 1e-6);
    // grad ||x|| ||y|| - |<x,y>| = ||y|| G x / ||x|| - sign(<x,y>) G y
    const double nx = norm(s, x), ny = norm(s, y);
    const double sgn = inner(s, x, y).real() >= 0 ? 1 : -1;
    const auto gx = (s.gram() * x.coords()).eval();
    const auto gy = (s.gram() * y.coords()).eval();
    double err = 0, mag = 0;
    for (int k = 0; k < dim; ++k) {
      const double a = ny * gx[k].real() / nx - sgn * gy[k].real();
      err = std::max(err, std::abs(g[k] - a));
      mag = std::max(mag, std::abs(a));
    }
    EXPECT_LE(err, 1e-5 * mag) << i;
  }
}

TEST(Gradient, NonFiniteComponentsZeroed) {
  const Objective f = [](std::span<const double> t) {
    return t[0] > 0 ? t[0] * t[0] : std::numeric_limits<double>::infinity();
  };
  const std::vector<double> at{0.0, 1.0};
  const auto g = finite_difference_gradient(f, at, 1e-3);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[1], 0.0);
}

TEST(Descent, QuadraticConverges) {
  const Objective f = [](std::span<const double> t) {
    return (t[0] - 1) * (t[0] - 1) + 4 * (t[1] + 2) * (t[1] + 2);
  };
  const auto keep = [](std::vector<double>&) { return true; };
  const auto res = projected_descent({5, 5}, f, keep, 500, 1e-2, 1e-6, 1e-12);
  EXPECT_LE(res.value, 1e-9);
  for (std::size_t i = 1; i < res.trace.size(); ++i) EXPECT_LE(res.trace[i], res.trace[i - 1]);
}

TEST(Descent, RejectingProjectionStops) {
  const Objective f = [](std::span<const double> t) { return t[0] * t[0]; };
  const auto reject = [](std::vector<double>&) { return false; };
  const auto res = projected_descent({1}, f, reject, 50, 1e-2, 1e-6, 0);
  EXPECT_EQ(res.trace.size(), 1u);
  EXPECT_EQ(res.theta[0], 1);
}

TEST(Ascent, SchwarzConvergesToCollinear) {
  SearchConfig cfg;
  cfg.field = FieldMode::Real;
  cfg.step_size = 1e-2;
  cfg.ascent_steps = 500;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto inst = sample_instance(cfg, names::kSchwarz, i);
    const auto res = local_ascent(names::kSchwarz, inst, cfg);
    const auto& v = res.refined.vectors;
    EXPECT_GE(std::abs(cosine(res.refined.space, v[0], v[1])), 0.999) << i;
  }
}

TEST(Ascent, BuzanoDoesNotIncreaseMargin) {
  SearchConfig cfg;
  cfg.field = FieldMode::Real;
  cfg.dim_lo = cfg.dim_hi = 2;
  cfg.ascent_steps = 100;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto inst = sample_instance(cfg, names::kBuzano, i);
    const double initial = evaluate(inst).relative_margin();
    const auto res = local_ascent(names::kBuzano, inst, cfg);
    EXPECT_LE(res.final_margin, initial);
    ASSERT_FALSE(res.trace.empty());
    EXPECT_EQ(res.trace.front(), initial);
    for (std::size_t k = 1; k < res.trace.size(); ++k) EXPECT_LE(res.trace[k], res.trace[k - 1]);
  }
}

TEST(Ascent, EqualityStartTerminatesImmediately) {
  const auto s = Space<double>::standard(Field::Real, 3);
  Instance<double> inst(std::string(names::kSchwarz), s);
  inst.vectors = {V::real({1, 2, 3}), V::real({2, 4, 6})};
  SearchConfig cfg;
  cfg.ascent_steps = 100;
  const auto res = local_ascent(names::kSchwarz, inst, cfg);
  EXPECT_EQ(res.trace.size(), 1u);
  EXPECT_LE(res.final_margin, 1e-9);
}

TEST(Ascent, FalsifyReachesNearEquality) {
  SearchConfig cfg;
  cfg.seed = 2;
  cfg.trials = 30;
  cfg.ascent_steps = 100;
  EXPECT_GT(falsify(names::kSchwarz, cfg).report.near_equality_count, 0u);
}

TEST(Threads, ResolveAndParallelFor) {
  EXPECT_EQ(resolve_threads(3), 3u);
  ::setenv("INEQ_FORGE_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2u);
  ::setenv("INEQ_FORGE_THREADS", "0", 1);
  EXPECT_GE(resolve_threads(0), 1u);
  ::unsetenv("INEQ_FORGE_THREADS");
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::uint64_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::uint64_t i) {
                              if (i == 57) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(MooreComplex, FloorAndBounds) {
  SearchConfig cfg;
  cfg.seed = 7;
  cfg.trials = 3000;
  cfg.field = FieldMode::Complex;
  cfg.ascent_steps = 20;
  const auto rep = moore_complex_experiment(0.05, cfg);
  EXPECT_EQ(rep.samples_satisfying_premises, 3000u);
  EXPECT_NEAR(rep.second_bound, 0.805, 1e-15);
  EXPECT_NEAR(rep.first_bound, 1 - 0.05 - std::sqrt(0.1), 1e-15);
  EXPECT_FALSE(rep.first_bound_vacuous);
  EXPECT_GE(rep.min_observed_ratio, 0.805 - 1e-9);
  EXPECT_TRUE(rep.second_bound_respected);
  EXPECT_EQ(rep.min_ratio_digest.size(), 16u);
  EXPECT_EQ(rep.verdict == MooreVerdict::CounterexampleFound, rep.witness_digest.has_value());
}

TEST(MooreComplex, VacuousAndErrors) {
  SearchConfig cfg;
  cfg.trials = 200;
  cfg.field = FieldMode::Complex;
  const auto rep = moore_complex_experiment(0.6, cfg);
  EXPECT_TRUE(rep.first_bound_vacuous);
  EXPECT_EQ(rep.verdict, MooreVerdict::NoCounterexampleFound);
  EXPECT_EQ(to_string(rep.verdict), "NoCounterexampleFound");
  EXPECT_THROW(moore_complex_experiment(1.5, cfg), UsageError);
  EXPECT_THROW(moore_complex_experiment(0.0, cfg), UsageError);
  cfg.field = FieldMode::Real;
  EXPECT_THROW(moore_complex_experiment(0.05, cfg), UsageError);
}

TEST(MooreComplex, Deterministic) {
  SearchConfig cfg;
  cfg.seed = 3;
  cfg.trials = 1000;
  cfg.field = FieldMode::Complex;
  cfg.ascent_steps = 10;
  const auto a = moore_complex_experiment(0.1, cfg, {1, false});
  const auto b = moore_complex_experiment(0.1, cfg, {4, false});
  EXPECT_EQ(a.min_observed_ratio, b.min_observed_ratio);
  EXPECT_EQ(a.min_ratio_digest, b.min_ratio_digest);
}

}  // namespace

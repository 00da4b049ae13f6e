#include "ineqforge/falsifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "ineqforge/digest.hpp"
#include "ineqforge/sampling.hpp"

namespace ineqforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxHalvings = 20;

struct TrialDraw {
  int dim;
  Field field;
};

TrialDraw draw_shape(const SearchConfig& config, bool permits_complex, Rng& rng) {
  const int dim = rng.uniform_int(config.dim_lo, config.dim_hi);
  Field field = Field::Real;
  if (permits_complex) {
    switch (config.field) {
      case FieldMode::Real: field = Field::Real; break;
      case FieldMode::Complex: field = Field::Complex; break;
      case FieldMode::Both: field = rng.coin() ? Field::Complex : Field::Real; break;
    }
  }
  return {dim, field};
}

Space<double> draw_space(const SearchConfig& config, const TrialDraw& shape, Rng& rng) {
  if (config.gram == GramMode::Identity) return Space<double>::standard(shape.field, shape.dim);
  return sample_random_space(shape.field, shape.dim, rng);
}

}  // namespace

std::string_view to_string(FieldMode mode) noexcept {
  switch (mode) {
    case FieldMode::Real: return "real";
    case FieldMode::Complex: return "complex";
    case FieldMode::Both: return "both";
  }
  return "both";
}

std::string_view to_string(GramMode mode) noexcept {
  return mode == GramMode::Identity ? "identity" : "random";
}

std::string_view to_string(MooreVerdict verdict) noexcept {
  return verdict == MooreVerdict::CounterexampleFound ? "CounterexampleFound"
                                                      : "NoCounterexampleFound";
}

void SearchConfig::validate() const {
  if (dim_lo < 1) throw UsageError("dims lower bound must be >= 1");
  if (dim_hi < dim_lo) throw UsageError("dims range is empty");
  if (ascent_steps < 0) throw UsageError("ascent steps must be nonnegative");
  if (!(step_size > 0 && step_size < 1)) throw UsageError("step size must lie in (0, 1)");
  if (!(fd_eps > 0 && fd_eps < 1)) throw UsageError("fd-eps must lie in (0, 1)");
}

int histogram_bucket(double m) noexcept {
  if (!(m > 0)) return 0;
  if (std::isinf(m)) return kHistogramBuckets - 1;
  const int k = static_cast<int>(std::floor(std::log10(m))) + 17;
  return std::clamp(k, 1, kHistogramBuckets - 1);
}

SearchReport::SearchReport() : worst_margin(kInf) {}

Instance<double> sample_instance(const SearchConfig& config, std::string_view ineq,
                                 std::uint64_t trial_index) {
  const EntryInfo& info = entry_info(ineq);
  config.validate();
  Rng rng = Rng::for_trial(config.seed, ineq, trial_index);
  const TrialDraw shape = draw_shape(config, info.permits_complex, rng);
  Instance<double> inst(std::string(ineq), draw_space(config, shape, rng));
  if (info.uses_families) {
    const int ke = rng.uniform_int(0, shape.dim);
    const int kf = rng.uniform_int(0, shape.dim);
    inst.family_e = sample_family(inst.space, ke, rng);
    inst.family_f = sample_family(inst.space, kf, rng);
  }
  const bool near = info.anchor >= 0 && rng.coin();
  const std::size_t count = info.vectors.size();
  inst.vectors.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (near && info.is_anchored(i)) continue;
    inst.vectors[i] = sample_nonzero_vector(inst.space, rng);
  }
  if (near) {
    const auto& anchor = inst.vectors[static_cast<std::size_t>(info.anchor)];
    for (std::size_t i = 0; i < count; ++i) {
      if (info.is_anchored(i)) {
        inst.vectors[i] = sample_near_parallel(inst.space, anchor, rng, info.positive_orientation);
      }
    }
  }
  return inst;
}

std::vector<double> finite_difference_gradient(const Objective& f, std::span<const double> x,
                                               double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> g(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    const double d = (up - down) / (2 * h);
    g[i] = std::isfinite(d) ? d : 0.0;
  }
  return g;
}

DescentResult projected_descent(std::vector<double> theta, const Objective& objective,
                                const std::function<bool(std::vector<double>&)>& project,
                                int steps, double step_size, double fd_eps, double target) {
  DescentResult out;
  out.value = objective(theta);
  out.trace.push_back(out.value);
  const double max_step = step_size * 1e6;
  double step = step_size;
  for (int k = 0; k < steps && out.value > target; ++k) {
    const std::vector<double> g = finite_difference_gradient(objective, theta, fd_eps);
    if (std::all_of(g.begin(), g.end(), [](double v) { return v == 0.0; })) break;
    bool accepted = false;
    for (int h = 0; h <= kMaxHalvings; ++h) {
      std::vector<double> cand(theta.size());
      for (std::size_t i = 0; i < theta.size(); ++i) cand[i] = theta[i] - step * g[i];
      if (project(cand)) {
        const double fc = objective(cand);
        if (fc < out.value) {
          theta = std::move(cand);
          out.value = fc;
          out.trace.push_back(fc);
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step = std::min(step * 2, max_step);
  }
  out.theta = std::move(theta);
  return out;
}

AscentResult local_ascent(std::string_view ineq, const Instance<double>& inputs,
                          const SearchConfig& config) {
  const EntryInfo& info = entry_info(ineq);
  if (inputs.ineq != ineq) throw UsageError("instance belongs to " + inputs.ineq);
  const Outcome<double> start = evaluate(inputs);  // validates the inputs
  std::vector<double> norms;
  for (const auto& v : inputs.vectors) norms.push_back(norm(inputs.space, v));

  const Objective objective = [&](std::span<const double> theta) {
    try {
      const Outcome<double> o = evaluate(unflatten(inputs, theta));
      return o.premises_hold ? static_cast<double>(o.relative_margin()) : kInf;
    } catch (const Error&) {
      return kInf;
    }
  };
  const auto project = [&](std::vector<double>& theta) {
    try {
      Instance<double> inst = unflatten(inputs, theta);
      for (std::size_t i = 0; i < inst.vectors.size(); ++i) {
        if (!info.requires_nonzero(i)) continue;
        const double n = norm(inst.space, inst.vectors[i]);
        if (!(n >= inst.space.zero_threshold())) return false;
        inst.vectors[i] = (norms[i] / n) * inst.vectors[i];
      }
      theta = flatten(inst);
      return true;
    } catch (const Error&) {
      return false;
    }
  };

  AscentResult out{inputs, 0.0, {}};
  if (start.vacuous()) {
    out.final_margin = kInf;
    out.trace.push_back(kInf);
    return out;
  }
  DescentResult d = projected_descent(flatten(inputs), objective, project, config.ascent_steps,
                                      config.step_size, config.fd_eps, Tolerance::kRel);
  out.refined = unflatten(inputs, d.theta);
  out.final_margin = d.value;
  out.trace = std::move(d.trace);
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("INEQ_FORGE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024UL));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t n, unsigned threads,
                  const std::function<void(std::uint64_t)>& body) {
  const std::uint64_t workers = std::min<std::uint64_t>(std::max(1U, threads), n);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = n * w / workers;
      const std::uint64_t hi = n * (w + 1) / workers;
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

FalsifyResult falsify(std::string_view ineq, const SearchConfig& config,
                      const RunOptions& options) {
  entry_info(ineq);
  config.validate();
  std::vector<TrialRecord> records(config.trials);
  parallel_for(config.trials, resolve_threads(options.threads), [&](std::uint64_t i) {
    Instance<double> inst = sample_instance(config, ineq, i);
    if (config.ascent_steps > 0) inst = local_ascent(ineq, inst, config).refined;
    TrialRecord& r = records[i];
    r.index = i;
    r.dim = inst.space.dim();
    r.field = inst.space.field();
    r.outcome = evaluate(inst);
    if (!r.outcome.holds()) {
      const Outcome<long double> wide = evaluate(convert<long double>(inst));
      r.violation = !wide.holds();
      r.roundoff = !r.violation;
    }
  });

  FalsifyResult out;
  SearchReport& rep = out.report;
  rep.ineq = std::string(ineq);
  for (const TrialRecord& r : records) {
    ++rep.trials_run;
    if (r.outcome.vacuous()) {
      ++rep.vacuous_count;
      continue;
    }
    const double m = r.outcome.relative_margin();
    ++rep.margin_histogram[static_cast<std::size_t>(histogram_bucket(m))];
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.worst_instance_digest = r.outcome.digest;
    }
    if (r.outcome.near_equality()) ++rep.near_equality_count;
    if (r.violation) ++rep.violation_count;
    if (r.roundoff) ++rep.roundoff_reclassified;
  }
  if (options.keep_records) out.records = std::move(records);
  return out;
}

// --- complex Moore experiment --------------------------------------------------

namespace {

constexpr std::string_view kMooreStream = "moore-complex";
constexpr std::size_t kRefineCandidates = 16;

struct Triple {
  Space<double> space;
  Vector<double> x, y, z;
};

template <typename Real>
bool moore_premises(const Space<Real>& s, const Vector<Real>& x, const Vector<Real>& y,
                    const Vector<Real>& z, Real eps) {
  const Real c = 1 - eps;
  const Real nx = norm(s, x);
  return std::abs(inner(s, x, y)) >= c * nx * norm(s, y) &&
         std::abs(inner(s, x, z)) >= c * nx * norm(s, z);
}

template <typename Real>
Real moore_ratio(const Space<Real>& s, const Vector<Real>& y, const Vector<Real>& z) {
  return std::abs(inner(s, y, z)) / (norm(s, y) * norm(s, z));
}

Triple sample_triple(const SearchConfig& config, double eps, std::uint64_t index) {
  Rng rng = Rng::for_trial(config.seed, kMooreStream, index);
  const TrialDraw shape = draw_shape(config, true, rng);
  Space<double> space = draw_space(config, shape, rng);
  const Vector<double> x = sample_nonzero_vector(space, rng);
  for (;;) {
    Vector<double> y = sample_with_min_cosine(space, x, 1 - eps, rng);
    Vector<double> z = sample_with_min_cosine(space, x, 1 - eps, rng);
    if (moore_premises(space, x, y, z, eps)) return {space, x, std::move(y), std::move(z)};
  }
}

Vector<double> read_vector(std::span<const double> theta, std::size_t offset, int dim) {
  Vector<double>::Coords c(dim);
  for (int i = 0; i < dim; ++i) c[i] = {theta[offset + i], theta[offset + dim + i]};
  return Vector<double>(std::move(c));
}

void write_vector(std::vector<double>& theta, const Vector<double>& v) {
  for (int i = 0; i < v.dim(); ++i) theta.push_back(v[i].real());
  for (int i = 0; i < v.dim(); ++i) theta.push_back(v[i].imag());
}

}  // namespace

MooreComplexReport moore_complex_experiment(double eps, const SearchConfig& config,
                                            const RunOptions& options) {
  if (!(eps > 0 && eps < 1)) throw UsageError("moore-complex needs eps in (0, 1)");
  if (config.field != FieldMode::Complex) throw UsageError("moore-complex runs over complex spaces");
  config.validate();

  MooreComplexReport rep;
  rep.eps = eps;
  rep.first_bound = 1 - eps - std::sqrt(2 * eps);
  rep.second_bound = buzano_moore_coefficient(eps);
  rep.first_bound_vacuous = rep.first_bound <= 0;
  rep.min_observed_ratio = kInf;

  std::vector<double> ratios(config.trials);
  parallel_for(config.trials, resolve_threads(options.threads), [&](std::uint64_t i) {
    const Triple t = sample_triple(config, eps, i);
    ratios[i] = moore_ratio(t.space, t.y, t.z);
  });
  rep.samples_satisfying_premises = config.trials;

  std::vector<std::uint64_t> order(config.trials);
  for (std::uint64_t i = 0; i < config.trials; ++i) order[i] = i;
  const std::size_t keep = std::min<std::size_t>(kRefineCandidates, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::uint64_t a, std::uint64_t b) {
                      return ratios[a] != ratios[b] ? ratios[a] < ratios[b] : a < b;
                    });

  struct Candidate {
    Triple triple;
    double ratio;
  };
  std::vector<std::optional<Candidate>> refined(keep);
  const std::size_t refine_count = config.ascent_steps > 0 ? keep : 0;
  parallel_for(keep, resolve_threads(options.threads), [&](std::uint64_t k) {
    Triple t = sample_triple(config, eps, order[k]);
    if (k >= refine_count) {
      refined[k] = Candidate{t, ratios[order[k]]};
      return;
    }
    const int d = t.space.dim();
    const double ny = norm(t.space, t.y), nz = norm(t.space, t.z), nx = norm(t.space, t.x);
    const auto unpack = [&](std::span<const double> th) {
      return std::array<Vector<double>, 3>{read_vector(th, 0, d), read_vector(th, 2 * d, d),
                                           read_vector(th, 4 * d, d)};
    };
    const Objective objective = [&](std::span<const double> th) {
      const auto v = unpack(th);
      const double n0 = norm(t.space, v[0]), n1 = norm(t.space, v[1]), n2 = norm(t.space, v[2]);
      const double tz = t.space.zero_threshold();
      if (n0 < tz || n1 < tz || n2 < tz) return kInf;
      if (!moore_premises(t.space, v[0], v[1], v[2], eps)) return kInf;
      return moore_ratio(t.space, v[1], v[2]);
    };
    const auto project = [&](std::vector<double>& th) {
      const auto v = unpack(th);
      const double n[3] = {norm(t.space, v[0]), norm(t.space, v[1]), norm(t.space, v[2])};
      const double target[3] = {nx, ny, nz};
      th.clear();
      for (int j = 0; j < 3; ++j) {
        if (!(n[j] >= t.space.zero_threshold())) return false;
        write_vector(th, (target[j] / n[j]) * v[j]);
      }
      return true;
    };
    std::vector<double> theta;
    write_vector(theta, t.x);
    write_vector(theta, t.y);
    write_vector(theta, t.z);
    const DescentResult r = projected_descent(std::move(theta), objective, project,
                                              config.ascent_steps, config.step_size,
                                              config.fd_eps, -kInf);
    const auto v = unpack(r.theta);
    refined[k] = Candidate{Triple{t.space, v[0], v[1], v[2]}, r.value};
  });
  rep.refined_candidates = static_cast<int>(refine_count);

  std::optional<Candidate> best;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    if (ratios[i] < rep.min_observed_ratio) rep.min_observed_ratio = ratios[i];
  }
  for (auto& c : refined) {
    if (!best || c->ratio < best->ratio) best = c;
  }
  if (best) {
    rep.min_observed_ratio = std::min(rep.min_observed_ratio, best->ratio);
    const Triple& t = best->triple;
    rep.min_ratio_digest = digest_of(t.space, t.x, t.y, t.z);
    const double tol = Tolerance::slack(1.0);
    rep.second_bound_respected = rep.min_observed_ratio >= rep.second_bound - tol;
    if (!rep.first_bound_vacuous && best->ratio < rep.first_bound - tol) {
      // Confirm at extended precision before reporting.
      const auto s = convert<long double>(t.space);
      const auto x = convert<long double>(t.x), y = convert<long double>(t.y),
                 z = convert<long double>(t.z);
      if (moore_premises(s, x, y, z, static_cast<long double>(eps)) &&
          moore_ratio(s, y, z) < static_cast<long double>(rep.first_bound - tol)) {
        rep.verdict = MooreVerdict::CounterexampleFound;
        rep.witness_digest = rep.min_ratio_digest;
      }
    }
  }
  return rep;
}

}  // namespace ineqforge

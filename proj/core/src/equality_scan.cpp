#include "ineqforge/equality_scan.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ineqforge/equality.hpp"
#include "ineqforge/sampling.hpp"

namespace ineqforge {

namespace {

constexpr double kLambdaTol = 1e-8;

using C = std::complex<double>;

struct Sample {
  bool pass = false;
  double margin = 0;
  double lambda_error = 0;
  std::string digest;
};

Field pick_field(const SearchConfig& config, bool permits_complex, Rng& rng) {
  if (!permits_complex) return Field::Real;
  switch (config.field) {
    case FieldMode::Real: return Field::Real;
    case FieldMode::Complex: return Field::Complex;
    case FieldMode::Both: break;
  }
  return rng.coin() ? Field::Complex : Field::Real;
}

Space<double> pick_space(const SearchConfig& config, Field field, int dim, Rng& rng) {
  if (config.gram == GramMode::Identity) return Space<double>::standard(field, dim);
  return sample_random_space(field, dim, rng);
}

/// Nonzero scalar with magnitude log-uniform on [0.1, 10]; random phase in
/// complex spaces.
C pick_lambda(Field field, Rng& rng) {
  const double mag = std::pow(10.0, 2 * rng.uniform() - 1);
  if (field == Field::Real) return {rng.coin() ? mag : -mag, 0.0};
  const double phase = 2 * M_PI * rng.uniform();
  return std::polar(mag, phase);
}

OrthonormalFamily<double> line(const Space<double>& s, const Vector<double>& v) {
  return OrthonormalFamily<double>(s, {(1.0 / norm(s, v)) * v});
}

double lambda_error(std::optional<C> recovered, C lambda) {
  if (!recovered) return std::numeric_limits<double>::infinity();
  return std::abs(*recovered - lambda) / (1 + std::abs(lambda));
}

Sample finish(const Instance<double>& inst, bool attained, double err) {
  const Outcome<double> out = evaluate(inst);
  Sample s;
  s.margin = std::abs(out.relative_margin());
  s.lambda_error = err;
  s.digest = out.digest;
  s.pass = out.holds() && out.near_equality() && s.margin <= Tolerance::kRel && attained &&
           err <= kLambdaTol;
  return s;
}

Sample run_one(std::string_view ineq, const SearchConfig& config, std::uint64_t index) {
  const EntryInfo& info = entry_info(ineq);
  Rng rng = Rng::for_trial(config.seed, std::string("equality/") + std::string(ineq), index);
  const bool kurepa = ineq == names::kKurepa;
  const int dim = kurepa ? 1 : rng.uniform_int(config.dim_lo, config.dim_hi);
  const Field field = pick_field(config, info.permits_complex, rng);
  const Space<double> space = pick_space(config, field, dim, rng);
  Instance<double> inst{std::string(ineq), space};

  if (ineq == names::kGeneralized) {
    inst.family_e = sample_family(space, rng.uniform_int(0, dim), rng);
    inst.family_f = sample_family(space, rng.uniform_int(0, dim), rng);
    const Vector<double> y = sample_nonzero_vector(space, rng);
    const C lambda = pick_lambda(field, rng);
    const auto x = construct_equality_instance(space, inst.family_e, inst.family_f, lambda, y);
    if (x.degenerate) return {};
    inst.vectors = {x.x, y};
    const auto cert = solve_equality_2_2(space, inst.family_e, inst.family_f, x.x, y);
    return finish(inst, cert.attained, lambda_error(cert.lambda, lambda));
  }
  if (ineq == names::kSchwarz) {
    const Vector<double> y = sample_nonzero_vector(space, rng);
    const C lambda = pick_lambda(field, rng);
    inst.vectors = {lambda * y, y};
    const OrthonormalFamily<double> empty(space);
    const auto cert = solve_equality_2_2(space, empty, empty, inst.vectors[0], y);
    return finish(inst, cert.attained, lambda_error(cert.lambda, lambda));
  }
  if (ineq == names::kRichard) {
    const Vector<double> x = sample_nonzero_vector(space, rng);
    const Vector<double> b = sample_nonzero_vector(space, rng);
    const C lambda = pick_lambda(field, rng);
    inst.vectors = {richard_equality_partner(space, x, b, lambda), b, x};
    const auto cert = solve_equality_1_4(space, inst.vectors[0], b, x);
    std::optional<C> rec;
    if (cert.lambda && cert.mu && *cert.lambda != C(0)) rec = -*cert.mu / *cert.lambda;
    return finish(inst, cert.attained, lambda_error(rec, lambda));
  }
  if (ineq == names::kBuzano) {
    const Vector<double> x = sample_nonzero_vector(space, rng);
    const Vector<double> xhat = (1.0 / norm(space, x)) * x;
    // Shrink the part of b orthogonal to x until |<b, x^>| >= ||b_perp||.
    Vector<double> b = sample_nonzero_vector(space, rng);
    const C beta = inner(space, b, xhat);
    const Vector<double> perp = b - beta * xhat;
    const double np = norm(space, perp);
    if (np > std::abs(beta)) b = beta * xhat + (std::abs(beta) / np) * perp;
    if (norm(space, b) < space.zero_threshold()) return {};
    const C lambda = pick_lambda(field, rng);
    inst.vectors = {richard_equality_partner(space, x, b, lambda), b, x};
    const OrthonormalFamily<double> empty(space);
    const auto cert = solve_equality_2_2(space, line(space, x), empty, inst.vectors[0], b);
    return finish(inst, cert.attained, lambda_error(cert.lambda, lambda));
  }
  if (ineq == names::kKurepa) {
    const double radius = std::pow(10.0, 2 * rng.uniform() - 1);
    const C lambda = std::polar(1.0, 2 * M_PI * rng.uniform());
    const auto z = kurepa_equality_instance(radius, lambda);
    inst.vectors = {sample_nonzero_vector(space, rng), z.re, z.im};
    // z = -lambda conj(z) read as u = lambda v in the complexification with
    // E the full basis (u = z) and F empty (v = -conj(z)).
    const Space<double> cs = space.complexification();
    const auto full = lift_to_complexification(line(space, Vector<double>::real({1.0})));
    const auto cert = solve_equality_2_2(cs, full, OrthonormalFamily<double>(cs),
                                         to_complex_coords(z), to_complex_coords(conjugate(z)));
    return finish(inst, cert.attained, lambda_error(cert.lambda, lambda));
  }
  if (ineq == names::kPrecupanu) {
    const Vector<double> x = sample_nonzero_vector(space, rng);
    const Vector<double> y = sample_nonzero_vector(space, rng);
    const Vector<double> b = sample_nonzero_vector(space, rng);
    const C lambda = pick_lambda(field, rng);
    const Vector<double> a = precupanu_equality_partner(space, x, y, b, lambda.real());
    inst.vectors = {a, b, x, y};
    const auto cert = solve_equality_1_2(space, a, b, x, y);
    std::optional<C> rec;
    if (cert.lambda && cert.mu && *cert.lambda != C(0)) rec = -*cert.mu / *cert.lambda;
    return finish(inst, cert.attained, lambda_error(rec, lambda));
  }
  throw UsageError("no equality construction for " + std::string(ineq));
}

}  // namespace

bool has_equality_scan(std::string_view name) noexcept {
  return std::find(kEqualityScanNames.begin(), kEqualityScanNames.end(), name) !=
         kEqualityScanNames.end();
}

EqualityScanReport scan_equality(std::string_view ineq, const SearchConfig& config,
                                 const RunOptions& options) {
  if (!has_equality_scan(ineq)) {
    throw UsageError("no equality construction for " + std::string(ineq));
  }
  config.validate();
  if (config.field == FieldMode::Complex && !entry_info(ineq).permits_complex) {
    throw UsageError(std::string(ineq) + " is stated over real spaces");
  }
  std::vector<Sample> samples(config.trials);
  parallel_for(config.trials, resolve_threads(options.threads),
               [&](std::uint64_t i) { samples[i] = run_one(ineq, config, i); });
  EqualityScanReport rep;
  rep.ineq = std::string(ineq);
  for (const Sample& s : samples) {
    ++rep.samples;
    if (s.pass) {
      ++rep.passed;
    } else {
      ++rep.failed;
      if (rep.first_failure_digest.empty()) rep.first_failure_digest = s.digest;
    }
    rep.max_relative_margin = std::max(rep.max_relative_margin, s.margin);
    rep.max_lambda_error = std::max(rep.max_lambda_error, s.lambda_error);
  }
  return rep;
}

}  // namespace ineqforge

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ineqforge/instance.hpp"

namespace ineqforge {

enum class FieldMode { Real, Complex, Both };
enum class GramMode { Identity, Random };

std::string_view to_string(FieldMode mode) noexcept;
std::string_view to_string(GramMode mode) noexcept;

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  int dim_lo = 2;
  int dim_hi = 6;
  int ascent_steps = 0;
  double step_size = 1e-2;
  double fd_eps = 1e-6;
  FieldMode field = FieldMode::Both;
  GramMode gram = GramMode::Identity;

  /// Throws UsageError.
  void validate() const;
};

inline constexpr int kHistogramBuckets = 32;

/// Bucket 0 holds nonpositive relative margins; bucket k >= 1 holds margins
/// in [10^(k-17), 10^(k-16)), with the end buckets absorbing the tails.
int histogram_bucket(double relative_margin) noexcept;

struct SearchReport {
  std::string ineq;
  std::uint64_t trials_run = 0;
  /// Smallest relative margin (margin / scale) over non-vacuous trials;
  /// +inf when there are none.
  double worst_margin = 0;
  std::string worst_instance_digest;
  std::uint64_t near_equality_count = 0;
  std::uint64_t violation_count = 0;
  /// Double-precision violations that vanished at extended precision.
  std::uint64_t roundoff_reclassified = 0;
  std::uint64_t vacuous_count = 0;
  std::array<std::uint64_t, kHistogramBuckets> margin_histogram{};

  SearchReport();
};

/// Per-trial result, kept when instance output is requested.
struct TrialRecord {
  std::uint64_t index = 0;
  int dim = 0;
  Field field = Field::Real;
  Outcome<double> outcome;
  bool violation = false;
  bool roundoff = false;
};

/// Dimension uniform over the configured range; field fixed by the mode or
/// drawn per trial for Both (real-only entries always use Real); conditional
/// entries draw their anchored arguments near the anchor half of the time.
Instance<double> sample_instance(const SearchConfig& config, std::string_view ineq,
                                 std::uint64_t trial_index);

using Objective = std::function<double(std::span<const double>)>;

/// Central differences with step h.
std::vector<double> finite_difference_gradient(const Objective& f, std::span<const double> x,
                                               double h);

struct DescentResult {
  std::vector<double> theta;
  double value = 0;
  /// Objective at the start, then after each accepted step.
  std::vector<double> trace;
};

/// Backtracking gradient descent. `project` maps a trial point back into the
/// feasible set (returning false rejects it). The step doubles after an
/// accepted move and halves on a rejected one; after 20 consecutive halvings
/// the descent stops. Also stops once the objective reaches `target`.
DescentResult projected_descent(std::vector<double> theta, const Objective& objective,
                                const std::function<bool(std::vector<double>&)>& project,
                                int steps, double step_size, double fd_eps, double target);

struct AscentResult {
  Instance<double> refined;
  double final_margin = 0;
  std::vector<double> trace;
};

/// Minimizes the relative margin of `inputs` over their flattened
/// coordinates. Vectors the entry requires nonzero keep their norms and
/// families are re-orthonormalized after every step.
AscentResult local_ascent(std::string_view ineq, const Instance<double>& inputs,
                          const SearchConfig& config);

struct RunOptions {
  /// 0: INEQ_FORGE_THREADS, else hardware concurrency.
  unsigned threads = 0;
  bool keep_records = false;
};

/// INEQ_FORGE_THREADS when set and nonzero, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, n) over `threads` workers with a static
/// partition. The first exception thrown is rethrown.
void parallel_for(std::uint64_t n, unsigned threads,
                  const std::function<void(std::uint64_t)>& body);

struct FalsifyResult {
  SearchReport report;
  std::vector<TrialRecord> records;
};

FalsifyResult falsify(std::string_view ineq, const SearchConfig& config,
                      const RunOptions& options = {});

enum class MooreVerdict { NoCounterexampleFound, CounterexampleFound };

std::string_view to_string(MooreVerdict verdict) noexcept;

struct MooreComplexReport {
  double eps = 0;
  std::uint64_t samples_satisfying_premises = 0;
  double min_observed_ratio = 0;
  std::string min_ratio_digest;
  double first_bound = 0;
  double second_bound = 0;
  bool first_bound_vacuous = false;
  bool second_bound_respected = true;
  int refined_candidates = 0;
  MooreVerdict verdict = MooreVerdict::NoCounterexampleFound;
  std::optional<std::string> witness_digest;
};

/// Samples complex triples (x, y, z) with |cos(x, y)|, |cos(x, z)| >= 1 - eps
/// and records the smallest |<y,z>| / (||y|| ||z||). `config.trials` is the
/// number of premise-satisfying samples; `config.ascent_steps` > 0 refines
/// the most promising candidates.
MooreComplexReport moore_complex_experiment(double eps, const SearchConfig& config,
                                            const RunOptions& options = {});

}  // namespace ineqforge

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "ineqforge/catalog.hpp"
#include "ineqforge/falsifier.hpp"

namespace ineqforge {

/// Entries with a constructive equality witness.
inline constexpr std::array<std::string_view, 6> kEqualityScanNames = {
    names::kGeneralized, names::kSchwarz, names::kRichard,
    names::kBuzano,      names::kKurepa,  names::kPrecupanu};

bool has_equality_scan(std::string_view name) noexcept;

struct EqualityScanReport {
  std::string ineq;
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Largest |relative margin| of the tightest link.
  double max_relative_margin = 0;
  /// Largest |lambda_recovered - lambda| / (1 + |lambda|).
  double max_lambda_error = 0;
  std::string first_failure_digest;
};

/// Builds `config.trials` equality instances, evaluates them through the
/// catalog and recovers the scalar from the matching certificate. A sample
/// passes when the tightest link is a near-equality, the certificate is
/// attained and the scalar is recovered to 1e-8 * (1 + |lambda|).
/// kurepa-3.2 is built in dimension 1 regardless of `config.dim_*`.
EqualityScanReport scan_equality(std::string_view ineq, const SearchConfig& config,
                                 const RunOptions& options = {});

}  // namespace ineqforge

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ineqforge/catalog.hpp"
#include "ineqforge/orthonormal.hpp"
#include "ineqforge/space.hpp"

namespace ineqforge {

/// How the falsifier draws the vector arguments of an entry.
enum class Layout {
  Plain,
  /// Arguments listed in `anchored` are perturbations of `anchor`.
  NearParallel,
};

/// Static description of a catalog entry's argument list.
struct EntryInfo {
  std::string_view name;
  bool permits_complex = false;
  /// Argument names in digest order. Complexified arguments appear as
  /// consecutive ".re" / ".im" pairs.
  std::vector<std::string_view> vectors;
  /// Bit i set: argument i must be nonzero.
  std::uint32_t nonzero_mask = 0;
  bool uses_families = false;
  /// Conditional results: perturbation anchor and anchored arguments.
  int anchor = -1;
  std::uint32_t anchored_mask = 0;
  /// Anchored arguments keep a positive orientation (real cosines > 0).
  bool positive_orientation = false;

  bool requires_nonzero(std::size_t i) const noexcept { return (nonzero_mask >> i) & 1U; }
  bool is_anchored(std::size_t i) const noexcept { return (anchored_mask >> i) & 1U; }
};

/// Throws UsageError for unknown names.
const EntryInfo& entry_info(std::string_view name);

/// A concrete input for one catalog entry.
template <typename Real>
struct Instance {
  std::string ineq;
  Space<Real> space;
  std::vector<Vector<Real>> vectors;
  OrthonormalFamily<Real> family_e;
  OrthonormalFamily<Real> family_f;

  Instance(std::string name, Space<Real> s)
      : ineq(std::move(name)), space(s), family_e(s), family_f(s) {}
};

template <typename To, typename From>
Instance<To> convert(const Instance<From>& inst) {
  Instance<To> out(inst.ineq, convert<To>(inst.space));
  for (const auto& v : inst.vectors) out.vectors.push_back(convert<To>(v));
  if (!inst.family_e.empty()) out.family_e = convert<To>(inst.family_e);
  if (!inst.family_f.empty()) out.family_f = convert<To>(inst.family_f);
  return out;
}

/// The links of one evaluated instance.
///
/// Conditional results evaluate their conclusion with the tightest parameters
/// the instance admits (for example eps = 1 - min |cos| for the Moore bound).
/// When no admissible parameter exists the instance is vacuous: premises fail
/// and it can never count as a violation.
template <typename Real>
struct Outcome {
  bool premises_hold = true;
  std::string digest;
  std::vector<IneqEvaluation<Real>> links;

  bool vacuous() const noexcept { return !premises_hold; }
  /// True for vacuous instances.
  bool holds() const;
  bool near_equality() const;
  /// Smallest relative margin over links; +inf if there are none.
  Real relative_margin() const;
  /// Index of the link attaining relative_margin (0 when empty).
  std::size_t worst_link() const;
};

template <typename Real>
Outcome<Real> evaluate(const Instance<Real>& inst);

template <typename Real>
std::string instance_digest(const Instance<Real>& inst);

/// Flattened coordinates: every vector argument, then the members of E and F,
/// each as real parts followed (in complex spaces) by imaginary parts.
template <typename Real>
std::vector<double> flatten(const Instance<Real>& inst);

/// Inverse of flatten over a template instance. Family members are
/// re-orthonormalized; throws RankDeficient if they have collapsed.
Instance<double> unflatten(const Instance<double>& shape, std::span<const double> theta);

}  // namespace ineqforge

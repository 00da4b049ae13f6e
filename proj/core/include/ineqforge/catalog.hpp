#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "ineqforge/orthonormal.hpp"
#include "ineqforge/space.hpp"

namespace ineqforge {

/// Stable public identifiers of the catalog entries.
namespace names {
inline constexpr std::string_view kSchwarz = "schwarz";
inline constexpr std::string_view kPrecupanu = "precupanu-1.1";
inline constexpr std::string_view kRichard = "richard-1.3";
inline constexpr std::string_view kPrecupanuSelf = "precupanu-self-1.5";
inline constexpr std::string_view kAngle = "angle-1.6";
inline constexpr std::string_view kMoore = "moore-1.9";
inline constexpr std::string_view kPrecupanuMoore = "precupanu-moore-1.12";
inline constexpr std::string_view kBuzano = "buzano-1.14";
inline constexpr std::string_view kBuzanoMoore = "buzano-moore-1.16";
inline constexpr std::string_view kT15i = "t1.5-i";
inline constexpr std::string_view kT15ii = "t1.5-ii";
inline constexpr std::string_view kGeneralized = "generalized-2.1";
inline constexpr std::string_view kChain = "chain-2.10";
inline constexpr std::string_view kRealDouble = "real-double-2.14";
inline constexpr std::string_view kKurepa = "kurepa-3.2";
inline constexpr std::string_view kKurepaRefined = "kurepa-refined-3.3";
}  // namespace names

inline constexpr std::array<std::string_view, 16> kCatalogNames = {
    names::kSchwarz,      names::kPrecupanu,   names::kRichard,
    names::kPrecupanuSelf, names::kAngle,      names::kMoore,
    names::kPrecupanuMoore, names::kBuzano,    names::kBuzanoMoore,
    names::kT15i,         names::kT15ii,       names::kGeneralized,
    names::kChain,        names::kRealDouble,  names::kKurepa,
    names::kKurepaRefined};

inline constexpr std::string_view kCatalogVersion = "1.0.0";

bool is_catalog_name(std::string_view name) noexcept;

/// An inequality "holds" when every margin is >= -(kAbs + kRel * scale);
/// it is a near-equality when its smallest margin is <= kRel * scale.
struct Tolerance {
  static constexpr double kAbs = 1e-12;
  static constexpr double kRel = 1e-9;

  template <typename Real>
  static Real slack(Real scale) {
    return Real(kAbs) + Real(kRel) * scale;
  }
};

/// One evaluated inequality instance. One-sided instances read lhs <= rhs;
/// two-sided ones read lhs <= center <= rhs.
template <typename Real>
struct IneqEvaluation {
  std::string name;
  std::string inputs_digest;
  Real lhs = 0;
  std::optional<Real> center;
  Real rhs = 0;
  std::optional<Real> margin_lower;
  Real margin_upper = 0;
  /// Product of the norm factors on the bound side.
  Real scale = 1;
  bool holds = true;
  bool near_equality = false;

  Real min_margin() const {
    return margin_lower ? std::min(*margin_lower, margin_upper) : margin_upper;
  }
  /// min_margin / scale (scale floored at the smallest normal number).
  Real relative_margin() const;

  static IneqEvaluation one_sided(std::string_view name, std::string digest,
                                  Real lhs, Real rhs, Real scale);
  static IneqEvaluation two_sided(std::string_view name, std::string digest,
                                  Real lhs, Real center, Real rhs, Real scale);
};

/// Parameters of the Moore-type results; each theorem reads the ones it needs.
template <typename Real>
struct MooreParams {
  std::optional<Real> eps;
  std::optional<Real> eps1;
  std::optional<Real> eps2;
  std::optional<Real> delta1;
  std::optional<Real> delta2;
  std::optional<Real> mu1;
  std::optional<Real> mu2;
};

/// A conditional result: the conclusion is evaluated even when the premises
/// fail, in which case the instance is vacuous.
template <typename Real>
struct PremiseCheck {
  bool premises_hold = false;
  IneqEvaluation<Real> conclusion;

  bool vacuous() const noexcept { return !premises_hold; }
};

template <typename Real>
struct PrecupanuMooreCheck {
  bool premises_hold = false;
  IneqEvaluation<Real> conclusion;
  /// -||a|| ||b|| <= (2 eps1^2 - 1) ||a|| ||b|| <= <a,b>, reported when eps1 <= 1.
  std::optional<IneqEvaluation<Real>> refinement;
};

template <typename Real>
struct BuzanoMooreCheck {
  bool premises_hold = false;
  IneqEvaluation<Real> conclusion;
  /// eps <= 1 - sqrt(2)/2, where the coefficient is nonnegative.
  bool useful = false;
};

template <typename Real>
struct Theorem15iiCheck {
  std::optional<PremiseCheck<Real>> lower;
  std::optional<PremiseCheck<Real>> upper;
};

template <typename Real>
struct ChainEvaluation {
  IneqEvaluation<Real> eval1;
  IneqEvaluation<Real> eval2;
};

template <typename Real>
struct KurepaEvaluation {
  IneqEvaluation<Real> eval1;
  IneqEvaluation<Real> eval2;
};

template <typename Real>
struct KurepaRefinedEvaluation {
  IneqEvaluation<Real> eval1;
  IneqEvaluation<Real> eval2;
  IneqEvaluation<Real> eval3;
};

template <typename Real>
struct Bounds {
  Real lower;
  Real upper;
};

// --- Section 1: single-vector results ---------------------------------------

template <typename Real>
IneqEvaluation<Real> eval_schwarz(const Space<Real>& space, const Vector<Real>& x,
                                  const Vector<Real>& y);

template <typename Real>
IneqEvaluation<Real> eval_precupanu_real(const Space<Real>& space,
                                         const Vector<Real>& a, const Vector<Real>& b,
                                         const Vector<Real>& x, const Vector<Real>& y);

/// Two-sided bound on <x,a><x,b>. The equivalent form with <a,b> in the
/// middle is the same statement after dividing by ||x||^2 and rearranging.
template <typename Real>
IneqEvaluation<Real> eval_richard(const Space<Real>& space, const Vector<Real>& a,
                                  const Vector<Real>& b, const Vector<Real>& x);

template <typename Real>
IneqEvaluation<Real> eval_precupanu_self(const Space<Real>& space,
                                         const Vector<Real>& a, const Vector<Real>& x,
                                         const Vector<Real>& y);

/// Lower bound on cos(x, y) from the cosines of x and y against a. The cosine
/// sits in `center`; `rhs` is the trivial upper bound 1.
template <typename Real>
IneqEvaluation<Real> eval_angle_bound(const Space<Real>& space, const Vector<Real>& a,
                                      const Vector<Real>& x, const Vector<Real>& y);

/// max{1 - eps - sqrt(2 eps), 1 - 4 eps, 0}.
template <typename Real>
Real moore_coefficient(Real eps);

template <typename Real>
PremiseCheck<Real> verify_moore(const Space<Real>& space, const Vector<Real>& x,
                                const Vector<Real>& y, const Vector<Real>& z, Real eps);

/// (2 eps1^2 - 1, 2 eps1^2 + 1).
template <typename Real>
Bounds<Real> precupanu_moore_bounds(Real eps1);

template <typename Real>
PrecupanuMooreCheck<Real> verify_precupanu_moore(const Space<Real>& space,
                                                 const Vector<Real>& a,
                                                 const Vector<Real>& b,
                                                 const Vector<Real>& x,
                                                 const MooreParams<Real>& params);

template <typename Real>
IneqEvaluation<Real> eval_buzano(const Space<Real>& space, const Vector<Real>& a,
                                 const Vector<Real>& b, const Vector<Real>& x);

/// 1 - 4 eps + 2 eps^2.
template <typename Real>
Real buzano_moore_coefficient(Real eps);

template <typename Real>
BuzanoMooreCheck<Real> verify_buzano_moore(const Space<Real>& space,
                                           const Vector<Real>& x, const Vector<Real>& a,
                                           const Vector<Real>& b, Real eps);

template <typename Real>
PremiseCheck<Real> eval_theorem_1_5_i(const Space<Real>& space, const Vector<Real>& a,
                                      const Vector<Real>& x, const Vector<Real>& y,
                                      Real delta1, Real delta2);

/// Either branch may be omitted; at least one must be given.
template <typename Real>
Theorem15iiCheck<Real> eval_theorem_1_5_ii(const Space<Real>& space,
                                           const Vector<Real>& a, const Vector<Real>& b,
                                           const Vector<Real>& x, std::optional<Real> mu1,
                                           std::optional<Real> mu2);

// --- Section 2: orthonormal families -----------------------------------------

/// S(x,y) = sum_i <x,e_i><e_i,y> + sum_j <x,f_j><f_j,y>
///          - 2 sum_{i,j} <x,e_i><f_j,y><e_i,f_j>, by direct summation.
template <typename Real>
std::complex<Real> generalized_sum(const OrthonormalFamily<Real>& e,
                                   const OrthonormalFamily<Real>& f,
                                   const Vector<Real>& x, const Vector<Real>& y);

/// S(x,y) - <x,y>/2 computed as -<u,v>/2 with u, v the reflections of x
/// through E and y through F.
template <typename Real>
std::complex<Real> generalized_deviation_by_reflection(const OrthonormalFamily<Real>& e,
                                                       const OrthonormalFamily<Real>& f,
                                                       const Vector<Real>& x,
                                                       const Vector<Real>& y);

/// |S(x,y) - <x,y>/2| <= ||x|| ||y|| / 2. Both routes are computed and must
/// agree to 1e-10 relative to ||x|| ||y||, otherwise ConsistencyError.
template <typename Real>
IneqEvaluation<Real> eval_generalized(const Space<Real>& space,
                                      const OrthonormalFamily<Real>& e,
                                      const OrthonormalFamily<Real>& f,
                                      const Vector<Real>& x, const Vector<Real>& y);

/// |S| <= |<x,y>|/2 + |S - <x,y>/2| <= (|<x,y>| + ||x|| ||y||)/2.
template <typename Real>
ChainEvaluation<Real> eval_chain(const Space<Real>& space, const OrthonormalFamily<Real>& e,
                                 const OrthonormalFamily<Real>& f, const Vector<Real>& x,
                                 const Vector<Real>& y);

/// (<x,y> - ||x|| ||y||)/2 <= S(x,y) <= (<x,y> + ||x|| ||y||)/2 over a real space.
template <typename Real>
IneqEvaluation<Real> eval_real_family_double(const Space<Real>& space,
                                             const OrthonormalFamily<Real>& e,
                                             const OrthonormalFamily<Real>& f,
                                             const Vector<Real>& x, const Vector<Real>& y);

// --- Section 3: complexification ----------------------------------------------

template <typename Real>
KurepaEvaluation<Real> eval_kurepa(const Space<Real>& space, const Vector<Real>& a,
                                   const ComplexifiedVector<Real>& z);

/// Three-link chain built from complex squares <w,e_i>_C^2 (the modulus is
/// taken only of assembled sums).
template <typename Real>
KurepaRefinedEvaluation<Real> eval_kurepa_refined(const Space<Real>& space,
                                                  const OrthonormalFamily<Real>& e,
                                                  const OrthonormalFamily<Real>& f,
                                                  const ComplexifiedVector<Real>& w);

/// <x,y>/(||x|| ||y||), real part.
template <typename Real>
Real cosine(const Space<Real>& space, const Vector<Real>& x, const Vector<Real>& y);

}  // namespace ineqforge

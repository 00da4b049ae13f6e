#pragma once

#include <complex>
#include <optional>

#include "ineqforge/orthonormal.hpp"
#include "ineqforge/space.hpp"

namespace ineqforge {

enum class EqualityKind { Cond_1_2, Cond_1_4, Cond_2_2 };

/// Witness (or refutation) of an equality condition.
///
/// For Cond_2_2 the residual is ||u - lambda v|| and attainment means
/// residual <= 1e-9 * ||x||. For the two-coefficient conditions the residual
/// is the normalized Gram determinant of the two vectors that must be
/// linearly dependent, and attainment means residual <= 1e-12.
template <typename Real>
struct EqualityCertificate {
  EqualityKind kind = EqualityKind::Cond_2_2;
  std::optional<std::complex<Real>> lambda;
  std::optional<std::complex<Real>> mu;
  Real residual = 0;
  bool attained = false;
};

inline constexpr double kDependenceThreshold = 1e-12;
inline constexpr double kAttainmentThreshold = 1e-9;

/// x - lambda y = 2 (sum <x,e_i> e_i - lambda sum <y,f_j> f_j), solved as
/// reflection(E, x) = lambda * reflection(F, y).
template <typename Real>
EqualityCertificate<Real> solve_equality_2_2(const Space<Real>& space,
                                             const OrthonormalFamily<Real>& e,
                                             const OrthonormalFamily<Real>& f,
                                             const Vector<Real>& x, const Vector<Real>& y);

/// lambda p + mu q = 0 with p = <x,a> x/||x||^2 - a/2, q = <y,b> y/||y||^2 - b/2.
template <typename Real>
EqualityCertificate<Real> solve_equality_1_2(const Space<Real>& space,
                                             const Vector<Real>& a, const Vector<Real>& b,
                                             const Vector<Real>& x, const Vector<Real>& y);

/// 2 lambda <x,a> x = (lambda a + mu b) ||x||^2, i.e. lambda r = mu b with
/// r = 2 <x,a> x/||x||^2 - a.
template <typename Real>
EqualityCertificate<Real> solve_equality_1_4(const Space<Real>& space,
                                             const Vector<Real>& a, const Vector<Real>& b,
                                             const Vector<Real>& x);

template <typename Real>
struct EqualityInstance {
  Vector<Real> x;
  /// lambda = 0 collapses x to the zero vector, which the catalog rejects.
  bool degenerate = false;
};

/// x = reflection(E, lambda * reflection(F, y)); (x, y) attains equality in
/// the orthonormal-family bound.
template <typename Real>
EqualityInstance<Real> construct_equality_instance(const Space<Real>& space,
                                                   const OrthonormalFamily<Real>& e,
                                                   const OrthonormalFamily<Real>& f,
                                                   std::complex<Real> lambda,
                                                   const Vector<Real>& y);

/// Richard / Buzano equality witness: returns a with a = reflection({x/||x||},
/// -lambda b). For real lambda this is a Richard equality (left side for
/// lambda > 0, right side for lambda < 0). It is a Buzano equality for any
/// lambda when |<b, x>| >= ||b - proj_x b|| * ||x||.
template <typename Real>
Vector<Real> richard_equality_partner(const Space<Real>& space, const Vector<Real>& x,
                                      const Vector<Real>& b, std::complex<Real> lambda);

/// Precupanu equality witness over a real space: a = R_x(lambda R_y b), with
/// R_v the reflection through span{v}.
template <typename Real>
Vector<Real> precupanu_equality_partner(const Space<Real>& space, const Vector<Real>& x,
                                        const Vector<Real>& y, const Vector<Real>& b,
                                        Real lambda);

/// One-dimensional complexification: z with z = -lambda conj(z), where
/// |lambda| = 1. Returned as (re, im) coordinates of the real line.
template <typename Real>
ComplexifiedVector<Real> kurepa_equality_instance(Real radius, std::complex<Real> lambda);

}  // namespace ineqforge

#pragma once

#include <span>
#include <vector>

#include "ineqforge/space.hpp"

namespace ineqforge {

struct OrthonormalityReport {
  double max_deviation = 0.0;
  bool ok = true;
};

/// Max over pairs of |<v_i, v_j> - delta_ij|, compared against tol.
template <typename Real>
OrthonormalityReport verify_orthonormal(const Space<Real>& space,
                                        std::span<const Vector<Real>> vectors,
                                        Real tol);

/// Validated finite orthonormal family in a space. Members are an ordered
/// list; positions play the role of the index set.
template <typename Real>
class OrthonormalFamily {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Empty family.
  explicit OrthonormalFamily(Space<Real> space);
  /// Throws DomainError if the members are not orthonormal within tol or
  /// outnumber the space dimension.
  OrthonormalFamily(Space<Real> space, std::vector<Vector<Real>> members,
                    Real tol = Real(kDefaultTol));

  const Space<Real>& space() const noexcept { return space_; }
  const std::vector<Vector<Real>>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Real tol() const noexcept { return tol_; }

 private:
  Space<Real> space_;
  std::vector<Vector<Real>> members_;
  Real tol_;
};

template <typename Real>
OrthonormalityReport verify_orthonormal(const OrthonormalFamily<Real>& family,
                                        Real tol) {
  return verify_orthonormal(family.space(),
                            std::span<const Vector<Real>>(family.members()), tol);
}

/// Two-pass modified Gram-Schmidt. Throws RankDeficient naming the first
/// input whose residual falls below 1e-10 times the running input scale.
template <typename Real>
OrthonormalFamily<Real> gram_schmidt(const Space<Real>& space,
                                     std::span<const Vector<Real>> vectors);

/// Projection sum_i <x, e_i> e_i onto the span of the family.
template <typename Real>
Vector<Real> project(const OrthonormalFamily<Real>& family, const Vector<Real>& x);

/// 2 * sum_i <x, e_i> e_i - x. An involutive isometry.
template <typename Real>
Vector<Real> reflection(const OrthonormalFamily<Real>& family, const Vector<Real>& x);

/// Members e_j mapped to (e_j, 0) in the complexification. Throws DomainError
/// for a family over a complex space.
template <typename Real>
OrthonormalFamily<Real> lift_to_complexification(const OrthonormalFamily<Real>& family);

template <typename To, typename From>
OrthonormalFamily<To> convert(const OrthonormalFamily<From>& family) {
  std::vector<Vector<To>> members;
  members.reserve(family.size());
  for (const auto& m : family.members()) members.push_back(convert<To>(m));
  return OrthonormalFamily<To>(convert<To>(family.space()), std::move(members),
                               static_cast<To>(family.tol()));
}

}  // namespace ineqforge

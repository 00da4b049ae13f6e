#include "ineqforge/orthonormal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ineqforge {

template <typename Real>
OrthonormalityReport verify_orthonormal(const Space<Real>& space,
                                        std::span<const Vector<Real>> vectors,
                                        Real tol) {
  Real worst = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const std::complex<Real> g = inner(space, vectors[i], vectors[j]);
      const Real target = i == j ? Real(1) : Real(0);
      worst = std::max(worst, std::abs(g - target));
    }
  }
  return {static_cast<double>(worst), worst <= tol};
}

template <typename Real>
OrthonormalFamily<Real>::OrthonormalFamily(Space<Real> space)
    : space_(std::move(space)), tol_(Real(kDefaultTol)) {}

template <typename Real>
OrthonormalFamily<Real>::OrthonormalFamily(Space<Real> space,
                                           std::vector<Vector<Real>> members,
                                           Real tol)
    : space_(std::move(space)), members_(std::move(members)), tol_(tol) {
  if (members_.size() > static_cast<std::size_t>(space_.dim())) {
    throw DomainError("orthonormal family larger than the space dimension");
  }
  for (const auto& m : members_) space_.check(m);
  const auto report =
      verify_orthonormal(space_, std::span<const Vector<Real>>(members_), tol_);
  if (!report.ok) {
    throw DomainError("family is not orthonormal (max deviation " +
                      std::to_string(report.max_deviation) + ")");
  }
}

template <typename Real>
OrthonormalFamily<Real> gram_schmidt(const Space<Real>& space,
                                     std::span<const Vector<Real>> vectors) {
  if (vectors.empty()) throw UsageError("gram_schmidt needs at least one vector");
  std::vector<Vector<Real>> basis;
  basis.reserve(vectors.size());
  Real scale = 0;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    space.check(vectors[k]);
    scale = std::max(scale, norm(space, vectors[k]));
    Vector<Real> r = vectors[k];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) r = r - inner(space, r, q) * q;
    }
    const Real rn = norm(space, r);
    if (!(rn >= Real(1e-10) * scale) || rn == Real(0)) {
      throw RankDeficient(k, "rank deficient input at index " + std::to_string(k));
    }
    basis.push_back((Real(1) / rn) * r);
  }
  return OrthonormalFamily<Real>(space, std::move(basis), Real(1e-10));
}

template <typename Real>
Vector<Real> project(const OrthonormalFamily<Real>& family, const Vector<Real>& x) {
  const auto& space = family.space();
  space.check(x);
  typename Vector<Real>::Coords acc = Vector<Real>::Coords::Zero(space.dim());
  for (const auto& e : family.members()) acc += inner(space, x, e) * e.coords();
  return Vector<Real>(std::move(acc));
}

template <typename Real>
Vector<Real> reflection(const OrthonormalFamily<Real>& family, const Vector<Real>& x) {
  return Real(2) * project(family, x) - x;
}

template <typename Real>
OrthonormalFamily<Real> lift_to_complexification(const OrthonormalFamily<Real>& family) {
  if (!family.space().is_real()) {
    throw DomainError("only families of a real space can be lifted");
  }
  // (e_j, 0) has coordinates e_j + i*0 in the complexified space.
  return OrthonormalFamily<Real>(family.space().complexification(), family.members(),
                                 family.tol());
}

#define INEQFORGE_INSTANTIATE(R)                                                  \
  template class OrthonormalFamily<R>;                                            \
  template OrthonormalityReport verify_orthonormal(                               \
      const Space<R>&, std::span<const Vector<R>>, R);                            \
  template OrthonormalFamily<R> gram_schmidt(const Space<R>&,                     \
                                             std::span<const Vector<R>>);         \
  template Vector<R> project(const OrthonormalFamily<R>&, const Vector<R>&);      \
  template Vector<R> reflection(const OrthonormalFamily<R>&, const Vector<R>&);   \
  template OrthonormalFamily<R> lift_to_complexification(const OrthonormalFamily<R>&);

INEQFORGE_INSTANTIATE(double)
INEQFORGE_INSTANTIATE(long double)

#undef INEQFORGE_INSTANTIATE

}  // namespace ineqforge

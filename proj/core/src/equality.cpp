#include "ineqforge/equality.hpp"

#include <cmath>

namespace ineqforge {

namespace {

template <typename Real>
OrthonormalFamily<Real> line_through(const Space<Real>& space, const Vector<Real>& v) {
  const Real n = norm(space, v);
  return OrthonormalFamily<Real>(space, {(Real(1) / n) * v});
}

/// (||p||^2 ||q||^2 - |<p,q>|^2) / (||p||^2 ||q||^2), clamped at 0.
template <typename Real>
Real normalized_gram_det(const Space<Real>& space, const Vector<Real>& p,
                         const Vector<Real>& q) {
  const Real pp = norm(space, p);
  const Real qq = norm(space, q);
  const Real pq = std::abs(inner(space, p, q));
  const Real c = pq / (pp * qq);
  return std::max(Real(0), (Real(1) - c) * (Real(1) + c));
}

/// Dependence of p and q with coefficients (lambda, mu) so that
/// lambda p + mu q = 0. `scale` sets the zero test for p and q.
template <typename Real>
EqualityCertificate<Real> dependence(const Space<Real>& space, EqualityKind kind,
                                     const Vector<Real>& p, const Vector<Real>& q,
                                     Real p_scale, Real q_scale) {
  EqualityCertificate<Real> cert;
  cert.kind = kind;
  const Real np = norm(space, p);
  const Real nq = norm(space, q);
  const auto tiny = [](Real n, Real s) {
    return n <= Real(kAttainmentThreshold) * s || n == Real(0);
  };
  if (tiny(np, p_scale)) {
    cert.lambda = 1;
    cert.mu = 0;
    cert.residual = 0;
    cert.attained = true;
    return cert;
  }
  if (tiny(nq, q_scale)) {
    cert.lambda = 0;
    cert.mu = 1;
    cert.residual = 0;
    cert.attained = true;
    return cert;
  }
  cert.residual = normalized_gram_det(space, p, q);
  cert.lambda = 1;
  cert.mu = -inner(space, p, q) / (nq * nq);
  cert.attained = cert.residual <= Real(kDependenceThreshold);
  return cert;
}

}  // namespace

template <typename Real>
EqualityCertificate<Real> solve_equality_2_2(const Space<Real>& space,
                                             const OrthonormalFamily<Real>& e,
                                             const OrthonormalFamily<Real>& f,
                                             const Vector<Real>& x, const Vector<Real>& y) {
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  if (!(e.space() == space) || !(f.space() == space)) throw UsageError("family space mismatch");
  const Vector<Real> u = reflection(e, x);
  const Vector<Real> v = reflection(f, y);
  EqualityCertificate<Real> cert;
  cert.kind = EqualityKind::Cond_2_2;
  const Real nv = norm(space, v);
  const Real scale = norm(space, x);
  if (nv >= space.zero_threshold()) {
    const std::complex<Real> lambda = inner(space, u, v) / (nv * nv);
    cert.lambda = lambda;
    cert.residual = norm(space, u - lambda * v);
  } else {
    cert.residual = norm(space, u);
  }
  cert.attained = cert.residual <= Real(kAttainmentThreshold) * scale;
  return cert;
}

template <typename Real>
EqualityCertificate<Real> solve_equality_1_2(const Space<Real>& space,
                                             const Vector<Real>& a, const Vector<Real>& b,
                                             const Vector<Real>& x, const Vector<Real>& y) {
  if (!space.is_real()) throw DomainError("Cond_1_2 is stated over a real space");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  const Real nx2 = inner(space, x, x).real();
  const Real ny2 = inner(space, y, y).real();
  const Vector<Real> p = (inner(space, x, a).real() / nx2) * x - Real(0.5) * a;
  const Vector<Real> q = (inner(space, y, b).real() / ny2) * y - Real(0.5) * b;
  return dependence(space, EqualityKind::Cond_1_2, p, q, norm(space, a), norm(space, b));
}

template <typename Real>
EqualityCertificate<Real> solve_equality_1_4(const Space<Real>& space,
                                             const Vector<Real>& a, const Vector<Real>& b,
                                             const Vector<Real>& x) {
  if (!space.is_real()) throw DomainError("Cond_1_4 is stated over a real space");
  require_nonzero(space, x, "x");
  const Real nx2 = inner(space, x, x).real();
  const Vector<Real> r = (2 * inner(space, x, a).real() / nx2) * x - a;
  // lambda r = mu b  <=>  lambda r + (-mu) b = 0.
  auto cert = dependence(space, EqualityKind::Cond_1_4, r, b, norm(space, a), norm(space, b));
  if (cert.mu) cert.mu = -*cert.mu;
  return cert;
}

template <typename Real>
EqualityInstance<Real> construct_equality_instance(const Space<Real>& space,
                                                   const OrthonormalFamily<Real>& e,
                                                   const OrthonormalFamily<Real>& f,
                                                   std::complex<Real> lambda,
                                                   const Vector<Real>& y) {
  require_nonzero(space, y, "y");
  if (!(e.space() == space) || !(f.space() == space)) throw UsageError("family space mismatch");
  if (space.is_real() && lambda.imag() != Real(0)) {
    throw DomainError("lambda must be real in a real space");
  }
  EqualityInstance<Real> out{reflection(e, lambda * reflection(f, y)), false};
  out.degenerate = norm(space, out.x) < space.zero_threshold();
  return out;
}

template <typename Real>
Vector<Real> richard_equality_partner(const Space<Real>& space, const Vector<Real>& x,
                                      const Vector<Real>& b, std::complex<Real> lambda) {
  require_nonzero(space, x, "x");
  const OrthonormalFamily<Real> empty(space);
  const auto inst = construct_equality_instance(space, line_through(space, x), empty,
                                                lambda, b);
  return inst.x;
}

template <typename Real>
Vector<Real> precupanu_equality_partner(const Space<Real>& space, const Vector<Real>& x,
                                        const Vector<Real>& y, const Vector<Real>& b,
                                        Real lambda) {
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  return construct_equality_instance(space, line_through(space, x), line_through(space, y),
                                     std::complex<Real>(lambda, 0), b)
      .x;
}

template <typename Real>
ComplexifiedVector<Real> kurepa_equality_instance(Real radius, std::complex<Real> lambda) {
  if (!(radius > Real(0))) throw UsageError("radius must be positive");
  if (std::abs(std::abs(lambda) - Real(1)) > Real(1e-12)) {
    throw DomainError("a one-dimensional equality needs |lambda| = 1");
  }
  // z / conj(z) = exp(2 i phi) = -lambda.
  const Real phi = std::arg(-lambda) / 2;
  return {Vector<Real>::real({radius * std::cos(phi)}),
          Vector<Real>::real({radius * std::sin(phi)})};
}

#define INEQFORGE_INSTANTIATE(R)                                                        \
  template EqualityCertificate<R> solve_equality_2_2(const Space<R>&,                  \
                                                     const OrthonormalFamily<R>&,      \
                                                     const OrthonormalFamily<R>&,      \
                                                     const Vector<R>&, const Vector<R>&);\
  template EqualityCertificate<R> solve_equality_1_2(const Space<R>&, const Vector<R>&, \
                                                     const Vector<R>&, const Vector<R>&,\
                                                     const Vector<R>&);                 \
  template EqualityCertificate<R> solve_equality_1_4(const Space<R>&, const Vector<R>&, \
                                                     const Vector<R>&, const Vector<R>&);\
  template EqualityInstance<R> construct_equality_instance(                            \
      const Space<R>&, const OrthonormalFamily<R>&, const OrthonormalFamily<R>&,        \
      std::complex<R>, const Vector<R>&);                                               \
  template Vector<R> richard_equality_partner(const Space<R>&, const Vector<R>&,        \
                                              const Vector<R>&, std::complex<R>);       \
  template Vector<R> precupanu_equality_partner(const Space<R>&, const Vector<R>&,      \
                                                const Vector<R>&, const Vector<R>&, R); \
  template ComplexifiedVector<R> kurepa_equality_instance(R, std::complex<R>);

INEQFORGE_INSTANTIATE(double)
INEQFORGE_INSTANTIATE(long double)

#undef INEQFORGE_INSTANTIATE

}  // namespace ineqforge

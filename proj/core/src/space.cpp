#include "ineqforge/space.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>

namespace ineqforge {

std::string_view to_string(Field field) noexcept {
  return field == Field::Real ? "real" : "complex";
}

// ---------------------------------------------------------------------------
// Vector

template <typename Real>
Vector<Real>::Vector(Coords coords) : coords_(std::move(coords)) {
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i].real()) || !std::isfinite(coords_[i].imag())) {
      throw DomainError("vector coordinate " + std::to_string(i) +
                        " is not finite");
    }
  }
}

template <typename Real>
Vector<Real> Vector<Real>::zero(int dim) {
  return Vector(Coords::Zero(dim));
}

template <typename Real>
Vector<Real> Vector<Real>::real(std::initializer_list<Real> coords) {
  Coords c(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Real x : coords) c[i++] = Scalar(x, 0);
  return Vector(std::move(c));
}

template <typename Real>
Vector<Real> Vector<Real>::complex(std::initializer_list<Scalar> coords) {
  Coords c(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Scalar x : coords) c[i++] = x;
  return Vector(std::move(c));
}

template <typename Real>
bool Vector<Real>::is_real() const noexcept {
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (coords_[i].imag() != Real(0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Space

template <typename Real>
Space<Real>::Space(Field field, Matrix gram) : field_(field), gram_(std::move(gram)) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols()) {
    throw UsageError("gram matrix must be square with dim >= 1");
  }
  const Eigen::Index n = gram_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar g = gram_(i, j);
      if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
        throw DomainError("gram matrix has a non-finite entry");
      }
      if (field_ == Field::Real && g.imag() != Real(0)) {
        throw DomainError("gram matrix of a real space must be real");
      }
      if (std::abs(g - std::conj(gram_(j, i))) > Real(1e-12)) {
        throw DomainError("gram matrix is not (conjugate) symmetric");
      }
    }
  }
  Eigen::LLT<Matrix> llt(gram_);
  if (llt.info() != Eigen::Success) {
    throw DomainError("gram matrix is not positive definite");
  }
  identity_ = gram_.isIdentity(Real(0));
}

template <typename Real>
Space<Real> Space<Real>::standard(Field field, int dim) {
  if (dim < 1) throw UsageError("space dimension must be >= 1");
  return Space(field, Matrix::Identity(dim, dim));
}

template <typename Real>
Space<Real> Space<Real>::complexification() const {
  if (field_ != Field::Real) {
    throw DomainError("complexification is defined for real spaces only");
  }
  return Space(Field::Complex, gram_);
}

template <typename Real>
void Space<Real>::check(const Vector<Real>& v) const {
  if (v.dim() != dim()) {
    throw UsageError("dimension mismatch: vector has " + std::to_string(v.dim()) +
                     " coordinates, space has dim " + std::to_string(dim()));
  }
  if (field_ == Field::Real && !v.is_real()) {
    throw UsageError("complex vector passed to a real space");
  }
}

template <typename Real>
Real Space<Real>::zero_threshold() const noexcept {
  return Real(1e-13) * std::sqrt(static_cast<Real>(dim()));
}

// ---------------------------------------------------------------------------
// Forms

template <typename Real>
std::complex<Real> inner(const Space<Real>& space, const Vector<Real>& u,
                         const Vector<Real>& v) {
  space.check(u);
  space.check(v);
  const auto& a = u.coords();
  const auto& b = v.coords();
  std::complex<Real> sum(0, 0);
  if (space.identity_gram()) {
    for (Eigen::Index i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
  } else {
    const auto& g = space.gram();
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      std::complex<Real> col(0, 0);
      for (Eigen::Index i = 0; i < a.size(); ++i) col += a[i] * g(i, j);
      sum += col * std::conj(b[j]);
    }
  }
  if (space.is_real()) sum.imag(Real(0));
  return sum;
}

template <typename Real>
Real norm(const Space<Real>& space, const Vector<Real>& u) {
  const std::complex<Real> uu = inner(space, u, u);
  const Real sq = uu.real();
  if (std::abs(uu.imag()) > Real(1e-12) * std::abs(sq)) {
    throw ConsistencyError("self inner product has a non-negligible imaginary part");
  }
  return std::sqrt(std::max(sq, Real(0)));
}

template <typename Real>
void require_nonzero(const Space<Real>& space, const Vector<Real>& v,
                     std::string_view what) {
  if (norm(space, v) < space.zero_threshold()) {
    throw DomainError(std::string(what) + " must be nonzero");
  }
}

template <typename Real>
std::complex<Real> complexify_inner(const Space<Real>& space,
                                    const ComplexifiedVector<Real>& z,
                                    const ComplexifiedVector<Real>& z2) {
  if (!space.is_real()) {
    throw DomainError("complexified scalar product needs a real base space");
  }
  const Real xx = inner(space, z.re, z2.re).real();
  const Real yy = inner(space, z.im, z2.im).real();
  const Real x2y = inner(space, z2.re, z.im).real();
  const Real xy2 = inner(space, z.re, z2.im).real();
  return {xx + yy, x2y - xy2};
}

template <typename Real>
Real complexified_norm(const Space<Real>& space,
                       const ComplexifiedVector<Real>& z) {
  const Real x = norm(space, z.re);
  const Real y = norm(space, z.im);
  return std::sqrt(x * x + y * y);
}

template <typename Real>
ComplexifiedVector<Real> conjugate(const ComplexifiedVector<Real>& z) {
  return {z.re, -z.im};
}

template <typename Real>
Vector<Real> to_complex_coords(const ComplexifiedVector<Real>& z) {
  if (z.re.dim() != z.im.dim()) throw UsageError("dimension mismatch in complexified vector");
  using Coords = typename Vector<Real>::Coords;
  Coords c(z.re.dim());
  for (int i = 0; i < z.re.dim(); ++i) {
    c[i] = std::complex<Real>(z.re[i].real(), z.im[i].real());
  }
  return Vector<Real>(std::move(c));
}

template <typename Real>
typename Space<Real>::Matrix gram_from_factor(
    const typename Space<Real>::Matrix& factor, Real delta) {
  if (factor.rows() != factor.cols()) throw UsageError("gram factor must be square");
  if (!(delta > Real(0))) throw UsageError("gram regularizer delta must be positive");
  using Matrix = typename Space<Real>::Matrix;
  Matrix g = factor.adjoint() * factor;
  g += delta * Matrix::Identity(factor.rows(), factor.cols());
  // Symmetrize exactly so roundoff never trips the Hermitian check.
  Matrix sym = (g + g.adjoint()) * Real(0.5);
  for (Eigen::Index i = 0; i < sym.rows(); ++i) sym(i, i).imag(Real(0));
  return sym;
}

#define INEQFORGE_INSTANTIATE(R)                                                 \
  template class Vector<R>;                                                      \
  template class Space<R>;                                                       \
  template std::complex<R> inner(const Space<R>&, const Vector<R>&,              \
                                 const Vector<R>&);                              \
  template R norm(const Space<R>&, const Vector<R>&);                            \
  template void require_nonzero(const Space<R>&, const Vector<R>&,               \
                                std::string_view);                               \
  template std::complex<R> complexify_inner(const Space<R>&,                     \
                                            const ComplexifiedVector<R>&,        \
                                            const ComplexifiedVector<R>&);       \
  template R complexified_norm(const Space<R>&, const ComplexifiedVector<R>&);   \
  template ComplexifiedVector<R> conjugate(const ComplexifiedVector<R>&);        \
  template Vector<R> to_complex_coords(const ComplexifiedVector<R>&);            \
  template Space<R>::Matrix gram_from_factor<R>(const Space<R>::Matrix&, R);

INEQFORGE_INSTANTIATE(double)
INEQFORGE_INSTANTIATE(long double)

#undef INEQFORGE_INSTANTIATE

}  // namespace ineqforge

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ineqforge/error.hpp"

namespace ineqforge {

enum class Field { Real, Complex };

std::string_view to_string(Field field) noexcept;

/// Coordinate vector over the field of its owning space. Real-field vectors
/// carry zero imaginary parts.
template <typename Real>
class Vector {
 public:
  using Scalar = std::complex<Real>;
  using Coords = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Vector() = default;
  /// Throws DomainError on a non-finite coordinate.
  explicit Vector(Coords coords);

  static Vector zero(int dim);
  static Vector real(std::initializer_list<Real> coords);
  static Vector complex(std::initializer_list<Scalar> coords);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  const Coords& coords() const noexcept { return coords_; }
  Scalar operator[](int i) const { return coords_[i]; }

  /// True when every imaginary part is exactly zero.
  bool is_real() const noexcept;

  friend Vector operator+(const Vector& u, const Vector& v) {
    return Vector(Coords(u.coords_ + v.coords_));
  }
  friend Vector operator-(const Vector& u, const Vector& v) {
    return Vector(Coords(u.coords_ - v.coords_));
  }
  friend Vector operator-(const Vector& u) { return Vector(Coords(-u.coords_)); }
  friend Vector operator*(Scalar s, const Vector& u) {
    return Vector(Coords(s * u.coords_));
  }
  friend Vector operator*(Real s, const Vector& u) {
    return Vector(Coords(s * u.coords_));
  }
  friend bool operator==(const Vector& u, const Vector& v) {
    return u.coords_ == v.coords_;
  }

 private:
  Coords coords_;
};

/// Finite-dimensional inner product space (K^dim, <u,v> = u^T G conj(v)).
///
/// The form is linear in the first argument and conjugate-linear in the
/// second. The Gram matrix is validated at construction: (conjugate)
/// symmetric to 1e-12 elementwise and positive definite (Cholesky succeeds).
template <typename Real>
class Space {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Space(Field field, Matrix gram);

  static Space standard(Field field, int dim);

  int dim() const noexcept { return static_cast<int>(gram_.rows()); }
  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::Real; }
  const Matrix& gram() const noexcept { return gram_; }
  bool identity_gram() const noexcept { return identity_; }

  /// The complex space carrying the complexification of a real space: the
  /// pair (x, y) is stored as the coordinate vector x + iy, and the same Gram
  /// matrix reproduces the canonical scalar product on pairs.
  Space complexification() const;

  /// Throws UsageError unless v has this space's dimension (and is real when
  /// the field is real).
  void check(const Vector<Real>& v) const;

  /// Norm below which a vector counts as zero: 1e-13 * sqrt(dim).
  Real zero_threshold() const noexcept;

  friend bool operator==(const Space& a, const Space& b) {
    return a.field_ == b.field_ && a.gram_ == b.gram_;
  }

 private:
  Field field_;
  Matrix gram_;
  bool identity_ = false;
};

/// Complexified vector z = x + iy of a real space, stored as the pair (x, y).
template <typename Real>
struct ComplexifiedVector {
  Vector<Real> re;
  Vector<Real> im;

  /// Real vector a embedded as (a, 0).
  static ComplexifiedVector embed(const Vector<Real>& a) {
    return {a, Vector<Real>::zero(a.dim())};
  }
};

template <typename Real>
std::complex<Real> inner(const Space<Real>& space, const Vector<Real>& u,
                         const Vector<Real>& v);

template <typename Real>
Real norm(const Space<Real>& space, const Vector<Real>& u);

/// Throws DomainError if ||v|| falls below the space's zero threshold.
template <typename Real>
void require_nonzero(const Space<Real>& space, const Vector<Real>& v,
                     std::string_view what);

/// Scalar product on the complexification of a real space, assembled from
/// real inner products: <x,x'> + <y,y'> + i(<x',y> - <x,y'>).
template <typename Real>
std::complex<Real> complexify_inner(const Space<Real>& space,
                                    const ComplexifiedVector<Real>& z,
                                    const ComplexifiedVector<Real>& z2);

/// ||z||_C = sqrt(||x||^2 + ||y||^2).
template <typename Real>
Real complexified_norm(const Space<Real>& space,
                       const ComplexifiedVector<Real>& z);

template <typename Real>
ComplexifiedVector<Real> conjugate(const ComplexifiedVector<Real>& z);

/// x + iy as a coordinate vector of space.complexification().
template <typename Real>
Vector<Real> to_complex_coords(const ComplexifiedVector<Real>& z);

/// A^H A + delta I. Throws UsageError for non-square A or delta <= 0.
template <typename Real>
typename Space<Real>::Matrix gram_from_factor(
    const typename Space<Real>::Matrix& factor, Real delta);

/// Precision conversion, used to build the extended-precision mirror of an
/// instance.
template <typename To, typename From>
Vector<To> convert(const Vector<From>& v) {
  return Vector<To>(v.coords().template cast<std::complex<To>>());
}

template <typename To, typename From>
Space<To> convert(const Space<From>& s) {
  return Space<To>(s.field(), s.gram().template cast<std::complex<To>>());
}

}  // namespace ineqforge

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ineqforge/orthonormal.hpp"
#include "ineqforge/space.hpp"

namespace ineqforge {

/// 64-bit FNV-1a over a canonical byte serialization of an instance:
/// field tag (one byte, 0 real / 1 complex), dim as big-endian u64, then the
/// coordinates of each argument vector in order as big-endian IEEE-754
/// binary64 bit patterns (real part, plus imaginary part in complex spaces).
/// Extended-precision coordinates are rounded to binary64 first, so both
/// precisions of one instance share a digest.
class Digest {
 public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  Digest(Field field, int dim);

  void add_bytes(std::string_view bytes);
  void add_u64(std::uint64_t v);
  void add_double(double v);

  template <typename Real>
  Digest& add(const Vector<Real>& v) {
    for (int i = 0; i < v.dim(); ++i) {
      add_double(static_cast<double>(v[i].real()));
      if (field_ == Field::Complex) add_double(static_cast<double>(v[i].imag()));
    }
    return *this;
  }

  template <typename Real>
  Digest& add(const ComplexifiedVector<Real>& z) {
    return add(z.re).add(z.im);
  }

  template <typename Real>
  Digest& add(const OrthonormalFamily<Real>& f) {
    for (const auto& m : f.members()) add(m);
    return *this;
  }

  std::uint64_t value() const noexcept { return state_; }
  /// 16 lowercase hex digits.
  std::string hex() const;

 private:
  Field field_;
  std::uint64_t state_ = kOffset;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string to_hex(std::uint64_t v);

/// Digest of a heterogeneous argument list.
template <typename Real, typename... Args>
std::string digest_of(const Space<Real>& space, const Args&... args) {
  Digest d(space.field(), space.dim());
  (d.add(args), ...);
  return d.hex();
}

}  // namespace ineqforge

#include "ineqforge/digest.hpp"

#include <bit>
#include <cstdio>

namespace ineqforge {

Digest::Digest(Field field, int dim) : field_(field) {
  const char tag = field == Field::Real ? 0 : 1;
  add_bytes(std::string_view(&tag, 1));
  add_u64(static_cast<std::uint64_t>(dim));
}

void Digest::add_bytes(std::string_view bytes) {
  for (unsigned char c : bytes) {
    state_ ^= c;
    state_ *= kPrime;
  }
}

void Digest::add_u64(std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (56 - 8 * i)) & 0xff);
  add_bytes(std::string_view(buf, 8));
}

void Digest::add_double(double v) { add_u64(std::bit_cast<std::uint64_t>(v)); }

std::string Digest::hex() const { return to_hex(state_); }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = Digest::kOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= Digest::kPrime;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace ineqforge

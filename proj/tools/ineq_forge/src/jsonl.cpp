#include "ineqforge_cli/jsonl.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ineqforge::cli {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void JsonObject::key(std::string_view k) {
  if (!first_) body_ += ',';
  first_ = false;
  body_ += quote(k);
  body_ += ':';
}

JsonObject& JsonObject::field(std::string_view k, std::string_view value) {
  key(k);
  body_ += quote(value);
  return *this;
}

JsonObject& JsonObject::field(std::string_view k, double value) {
  key(k);
  body_ += format_double(value);
  return *this;
}

JsonObject& JsonObject::field(std::string_view k, std::optional<double> value) {
  return value ? field(k, *value) : null_field(k);
}

JsonObject& JsonObject::field(std::string_view k, std::uint64_t value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonObject& JsonObject::field(std::string_view k, int value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonObject& JsonObject::field(std::string_view k, bool value) {
  key(k);
  body_ += value ? "true" : "false";
  return *this;
}

JsonObject& JsonObject::null_field(std::string_view k) {
  key(k);
  body_ += "null";
  return *this;
}

JsonObject& JsonObject::raw(std::string_view k, std::string_view json) {
  key(k);
  body_ += json;
  return *this;
}

}  // namespace ineqforge::cli

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ineqforge::cli {

/// Round-trip decimal form (17 significant digits); "null" if not finite.
std::string format_double(double v);

/// Builds one JSON object with keys in insertion order.
class JsonObject {
 public:
  JsonObject& field(std::string_view key, std::string_view value);
  JsonObject& field(std::string_view key, const char* value) {
    return field(key, std::string_view(value));
  }
  JsonObject& field(std::string_view key, double value);
  JsonObject& field(std::string_view key, std::optional<double> value);
  JsonObject& field(std::string_view key, std::uint64_t value);
  JsonObject& field(std::string_view key, int value);
  JsonObject& field(std::string_view key, bool value);
  JsonObject& null_field(std::string_view key);
  /// `json` is inserted verbatim.
  JsonObject& raw(std::string_view key, std::string_view json);

  std::string str() const { return body_ + "}"; }

 private:
  void key(std::string_view k);
  std::string body_ = "{";
  bool first_ = true;
};

std::string quote(std::string_view s);

}  // namespace ineqforge::cli

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace onecob {

// A finite ordered sequence of orientation signs — an object of the
// cobordism category. Immutable once built.
class SignedObject {
 public:
  SignedObject() = default;  // the empty object

  // Accepts '+', '-', and the typographic minus U+2212.
  explicit SignedObject(std::string_view text);

  // Entries must be +1 or -1.
  static SignedObject from_signs(const std::vector<int>& signs);

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  int sign(std::size_t i) const { return signs_[i]; }

  // Always renders with ASCII '+'/'-'.
  std::string to_string() const;

  friend SignedObject operator+(const SignedObject& a, const SignedObject& b);
  friend auto operator<=>(const SignedObject&, const SignedObject&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

}  // namespace onecob

#include "onecob/signed_object.hpp"

#include "onecob/errors.hpp"

namespace onecob {

SignedObject::SignedObject(std::string_view text) {
  signs_.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == '+') {
      signs_.push_back(+1);
      ++i;
    } else if (ch == '-') {
      signs_.push_back(-1);
      ++i;
    } else if (ch == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x92) {
      // U+2212 MINUS SIGN
      signs_.push_back(-1);
      i += 3;
    } else {
      throw ValidationError("invalid sign character at position " + std::to_string(i) +
                            " in \"" + std::string(text) + "\"; expected '+' or '-'");
    }
  }
}

SignedObject SignedObject::from_signs(const std::vector<int>& signs) {
  SignedObject out;
  out.signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw ValidationError("sign entries must be +1 or -1, got " + std::to_string(s));
    }
    out.signs_.push_back(static_cast<std::int8_t>(s));
  }
  return out;
}

std::string SignedObject::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (std::int8_t s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

SignedObject operator+(const SignedObject& a, const SignedObject& b) {
  SignedObject out = a;
  out.signs_.insert(out.signs_.end(), b.signs_.begin(), b.signs_.end());
  return out;
}

}  // namespace onecob

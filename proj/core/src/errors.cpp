#include "onecob/errors.hpp"

#include <string>

namespace onecob {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) {
    throw SizeCapError("requested size " + std::to_string(a) + "*" + std::to_string(b) +
                       " exceeds the cap of " + std::to_string(cap) + " cells");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) {
      throw SizeCapError("requested size " + std::to_string(base) + "^" + std::to_string(exp) +
                         " exceeds the cap of " + std::to_string(cap) + " cells");
    }
    out *= base;
  }
  if (out > cap) {
    throw SizeCapError("requested size exceeds the cap of " + std::to_string(cap) + " cells");
  }
  return out;
}

}  // namespace onecob

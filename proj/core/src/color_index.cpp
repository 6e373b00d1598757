#include "onecob/color_index.hpp"

#include <limits>
#include <string>

#include "onecob/errors.hpp"

namespace onecob {

ColorIndex encode(const std::vector<unsigned>& values, unsigned base) {
  if (base < 2) {
    throw ValidationError("color base must be at least 2, got " + std::to_string(base));
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  ColorIndex out{base, values.size(), 0};
  for (unsigned v : values) {
    if (v >= base) {
      throw ValidationError("color value " + std::to_string(v) + " is outside base " +
                            std::to_string(base));
    }
    out.code = checked_mul(out.code, base, kMax) + v;
  }
  return out;
}

std::vector<unsigned> decode(const ColorIndex& index) {
  if (index.base < 2) {
    throw ValidationError("color base must be at least 2, got " + std::to_string(index.base));
  }
  std::vector<unsigned> values(index.arity, 0);
  std::uint64_t rest = index.code;
  for (std::size_t t = 0; t < index.arity; ++t) {
    values[index.arity - 1 - t] = static_cast<unsigned>(rest % index.base);
    rest /= index.base;
  }
  if (rest != 0) {
    throw ValidationError("code " + std::to_string(index.code) + " does not fit in " +
                          std::to_string(index.arity) + " base-" + std::to_string(index.base) +
                          " digits");
  }
  return values;
}

}  // namespace onecob

#pragma once

#include <cstdint>
#include <vector>

namespace onecob {

// A fixed-length base-p digit string identified with its rank in the
// lexicographic order of all such strings (most significant digit first).
// Rows and columns of coloring matrices are indexed this way.
struct ColorIndex {
  unsigned base = 2;
  std::size_t arity = 0;
  std::uint64_t code = 0;
  friend bool operator==(const ColorIndex&, const ColorIndex&) = default;
};

// values[0] is the most significant digit.
ColorIndex encode(const std::vector<unsigned>& values, unsigned base);
std::vector<unsigned> decode(const ColorIndex& index);

}  // namespace onecob

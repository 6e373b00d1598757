#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "onecob/cobordism.hpp"
#include "onecob/errors.hpp"
#include "onecob/exact_matrix.hpp"
#include "onecob/report.hpp"

namespace onecob {

// The 0/1 support of a coloring matrix: sorted (row, col) positions that
// carry a 1, plus the matrix dimensions. One entry per coloring of the
// arcs, so the support always has p^{#arcs} positions.
struct ColoringSupport {
  std::uint64_t rows = 1;
  std::uint64_t cols = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ones;
};

ColoringSupport coloring_support(const Cobordism& k, unsigned p,
                                 std::uint64_t max_cells = kDefaultMaxCells);

// The p^{|target|} x p^{|source|} 0/1 matrix whose (i, j) entry is 1 iff
// the boundary coloring read off from (row i, column j) is constant on
// every arc of k.
ExactMatrix coloring_matrix(const Cobordism& k, unsigned p,
                            std::uint64_t max_cells = kDefaultMaxCells);

// p^{circles} times the coloring matrix: the matrix image of k.
ExactMatrix brauer_image(const Cobordism& k, unsigned p,
                         std::uint64_t max_cells = kDefaultMaxCells);

// Image of an object: the dimension p^{|a|}.
std::uint64_t brauer_object(const SignedObject& a, unsigned p);

struct ExhaustiveMode {};
struct RandomMode {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};
using VerifyMode = std::variant<ExhaustiveMode, RandomMode>;

// Checks, over hom(a,b) x hom(b,c) (all pairs or sampled ones), that the
// matrix image respects composition and tensoring, sends identities to
// identity matrices, and sends the block swap of (a, b) to the matching
// commutation matrix. All comparisons are exact.
VerifyReport verify_functoriality(unsigned p, const SignedObject& a, const SignedObject& b,
                                  const SignedObject& c, const VerifyMode& mode,
                                  std::uint32_t max_circles = 1,
                                  std::uint64_t max_cells = kDefaultMaxCells);

// Checks that distinct morphisms in hom(a,b) (up to max_circles) have
// distinct matrix images. `checked` reports the hom-set size.
VerifyReport verify_faithfulness(unsigned p, const SignedObject& a, const SignedObject& b,
                                 std::uint32_t max_circles,
                                 std::uint64_t max_cells = kDefaultMaxCells);

}  // namespace onecob

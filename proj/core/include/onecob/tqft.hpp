#pragma once

#include <cstdint>
#include <random>

#include "onecob/brauer.hpp"
#include "onecob/cobordism.hpp"
#include "onecob/errors.hpp"
#include "onecob/exact_matrix.hpp"
#include "onecob/generator_word.hpp"
#include "onecob/report.hpp"

namespace onecob {

// A strict one-dimensional TQFT over the rationals, determined by an
// invertible p x p matrix X (p >= 2). Objects go to tensor powers of a
// p-dimensional space; the generator images are fixed at construction:
//
//   cap "+-"  ->  row flattening of X           (1 x p^2)
//   cap "-+"  ->  row flattening of X^T
//   cup "-+"  ->  column flattening of X^-1     (p^2 x 1)
//   cup "+-"  ->  column flattening of (X^-1)^T
//   circle    ->  [[p]]
//   swap      ->  the p,p commutation matrix
//
// The defining identities (both snakes, the circle value, and the two
// swap-twisted cap/cup relations) are re-checked at construction.
class StrictTqft {
 public:
  explicit StrictTqft(ExactMatrix x);

  unsigned p() const { return p_; }
  const ExactMatrix& x() const { return x_; }
  const ExactMatrix& x_inverse() const { return x_inv_; }

  const ExactMatrix& image_identity() const { return id_; }          // E_p
  const ExactMatrix& image_cap_pm() const { return cap_pm_; }
  const ExactMatrix& image_cap_mp() const { return cap_mp_; }
  const ExactMatrix& image_cup_mp() const { return cup_mp_; }
  const ExactMatrix& image_cup_pm() const { return cup_pm_; }
  const ExactMatrix& image_circle() const { return circle_; }
  const ExactMatrix& image_swap() const { return swap_; }

 private:
  unsigned p_ = 0;
  ExactMatrix x_, x_inv_;
  ExactMatrix id_, cap_pm_, cap_mp_, cup_mp_, cup_pm_, circle_, swap_;
};

// Functorial evaluation: decompose k into layers and multiply the layer
// images (boundary permutations are applied as exact index permutations).
ExactMatrix tqft_eval(const StrictTqft& t, const Cobordism& k,
                      std::uint64_t max_cells = kDefaultMaxCells);

// The natural isomorphism from the matrix representation to t: a Kronecker
// product over the signs of `a` with E_p at '+' and X^-1 at '-'.
ExactMatrix theta(const StrictTqft& t, const SignedObject& a);
ExactMatrix theta_inverse(const StrictTqft& t, const SignedObject& a);

// Evaluate k through the matrix representation and the natural isomorphism:
// theta(target) * (p^circles A(k)) * theta_inverse(source). Agrees with
// tqft_eval on everything; computed independently of it.
ExactMatrix eval_via_theta(const StrictTqft& t, const Cobordism& k,
                           std::uint64_t max_cells = kDefaultMaxCells);

// The defining identities as a report (same checks the constructor runs).
VerifyReport check_axioms(const StrictTqft& t);

// Randomized agreement sweep of tqft_eval against eval_via_theta: the seven
// generating cobordisms under three theories, then `trials` random morphisms
// under fresh random theories. Deterministic for a fixed seed.
VerifyReport verify_theta(unsigned p, std::size_t max_points, std::uint32_t max_circles,
                          std::uint64_t trials, std::uint64_t seed,
                          std::uint64_t max_cells = kDefaultMaxCells);

// Test helpers: small random exact matrices (entries with denominators in
// {1, 2, 3}), and a rejection-sampled invertible one.
ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);
ExactMatrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n);

}  // namespace onecob

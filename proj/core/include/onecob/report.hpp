#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onecob/cobordism.hpp"
#include "onecob/exact_matrix.hpp"

namespace onecob {

// A check that came out false, with the morphism(s) involved (when there
// are any) and the two matrices that should have agreed.
struct Counterexample {
  std::optional<Cobordism> k;
  std::optional<Cobordism> l;
  ExactMatrix lhs;
  ExactMatrix rhs;
};

// Outcome of a verification sweep; failed == 0 means everything passed.
struct VerifyReport {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<Counterexample> counterexamples;  // capped at kMaxCounterexamples

  static constexpr std::size_t kMaxCounterexamples = 8;

  void tally(bool ok) {
    ++checked;
    ok ? ++passed : ++failed;
  }
  bool want_counterexample() const {
    return counterexamples.size() < kMaxCounterexamples;
  }
  void merge(const VerifyReport& other);
};

}  // namespace onecob

#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "onecob/signed_object.hpp"

namespace onecob {

enum class Side : std::uint8_t { In = 0, Out = 1 };

// One boundary point of a cobordism: position `index` of the source (In)
// or of the target (Out).
struct Endpoint {
  Side side{};
  std::size_t index{};
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// An unordered pair of matched boundary points, stored with the smaller
// endpoint first (In before Out, then by index).
using Arc = std::pair<Endpoint, Endpoint>;

enum class GeneratorKind : std::uint8_t {
  CapPM,   // "+-" -> empty
  CapMP,   // "-+" -> empty
  CupMP,   // empty -> "-+"
  CupPM,   // empty -> "+-"
  Circle,  // empty -> empty, one closed component
};

// A morphism of oriented 1-dimensional cobordisms, stored as its complete
// combinatorial invariant: the perfect matching of boundary points (arcs)
// plus the number of closed components. Two cobordisms are equal in the
// category iff these data agree, so operator== decides equivalence.
//
// Matching rules, enforced at construction:
//   In-In arcs join opposite source signs, Out-Out arcs join opposite
//   target signs, In-Out arcs join equal signs.
class Cobordism {
 public:
  Cobordism(SignedObject source, SignedObject target, std::vector<Arc> arcs,
            std::uint32_t circles);

  const SignedObject& source() const { return source_; }
  const SignedObject& target() const { return target_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // canonically sorted
  std::uint32_t circles() const { return circles_; }

  friend bool operator==(const Cobordism&, const Cobordism&) = default;

 private:
  SignedObject source_;
  SignedObject target_;
  std::vector<Arc> arcs_;
  std::uint32_t circles_ = 0;
};

Cobordism identity(const SignedObject& a);
Cobordism generator(GeneratorKind kind);

// Block transposition a (x) b -> b (x) a.
Cobordism tau(const SignedObject& a, const SignedObject& b);

// Glue k's target to l's source; closed loops created by the gluing
// become circles. Result: l o k : source(k) -> target(l).
Cobordism compose(const Cobordism& k, const Cobordism& l);

// Side-by-side disjoint union; circles add.
Cobordism tensor(const Cobordism& k, const Cobordism& l);

// Same morphism of the category? (Equality of the stored invariant.)
bool equivalent(const Cobordism& k, const Cobordism& l);

// The permutation cobordism on `a` where point i of the source moves to
// position perm[i] of the target.
Cobordism permutation_cobordism(const std::vector<std::size_t>& perm,
                                const SignedObject& a);

// All morphisms a -> b with at most max_circles closed components, in a
// deterministic order. Empty when no perfect matching exists.
std::vector<Cobordism> enumerate_homset(const SignedObject& a,
                                        const SignedObject& b,
                                        std::uint32_t max_circles);

}  // namespace onecob

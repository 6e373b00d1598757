#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "onecob/cobordism.hpp"

namespace onecob {

// The connected pieces a single layer can tensor together.
enum class Atom : std::uint8_t {
  IdPlus,   // "+" -> "+"
  IdMinus,  // "-" -> "-"
  CapPM,    // "+-" -> empty
  CupMP,    // empty -> "-+"
};

struct PermutationLayer {
  SignedObject source;
  std::vector<std::size_t> perm;  // point i of the source moves to position perm[i]
  friend bool operator==(const PermutationLayer&, const PermutationLayer&) = default;
};

struct AtomLayer {
  std::vector<Atom> atoms;
  friend bool operator==(const AtomLayer&, const AtomLayer&) = default;
};

using Layer = std::variant<PermutationLayer, AtomLayer>;

// A layered presentation of a cobordism: composable layers listed from the
// source side outward, plus free circles tensored alongside.
struct GeneratorWord {
  std::uint32_t scalar_circles = 0;
  std::vector<Layer> layers;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

SignedObject atom_source(Atom a);
SignedObject atom_target(Atom a);
Cobordism atom_cobordism(Atom a);

SignedObject layer_source(const Layer& layer);
SignedObject layer_target(const Layer& layer);
Cobordism layer_cobordism(const Layer& layer);

// Canonical four-layer word [pi_in; caps; cups; pi_out] evaluating back to k:
// a permutation grouping cap mates and through-strands, a layer of caps,
// a layer of cups, and a permutation onto the target, plus k's circles.
GeneratorWord decompose(const Cobordism& k);

// Evaluate a word back to a cobordism; layers must be composable.
Cobordism recompose(const GeneratorWord& word);

}  // namespace onecob

#include "onecob/generator_word.hpp"

#include <optional>
#include <string>
#include <utility>

#include "onecob/errors.hpp"

namespace onecob {

SignedObject atom_source(Atom a) {
  switch (a) {
    case Atom::IdPlus: return SignedObject("+");
    case Atom::IdMinus: return SignedObject("-");
    case Atom::CapPM: return SignedObject("+-");
    case Atom::CupMP: return SignedObject();
  }
  throw ValidationError("unknown atom");
}

SignedObject atom_target(Atom a) {
  switch (a) {
    case Atom::IdPlus: return SignedObject("+");
    case Atom::IdMinus: return SignedObject("-");
    case Atom::CapPM: return SignedObject();
    case Atom::CupMP: return SignedObject("-+");
  }
  throw ValidationError("unknown atom");
}

Cobordism atom_cobordism(Atom a) {
  switch (a) {
    case Atom::IdPlus: return identity(SignedObject("+"));
    case Atom::IdMinus: return identity(SignedObject("-"));
    case Atom::CapPM: return generator(GeneratorKind::CapPM);
    case Atom::CupMP: return generator(GeneratorKind::CupMP);
  }
  throw ValidationError("unknown atom");
}

SignedObject layer_source(const Layer& layer) {
  if (const auto* p = std::get_if<PermutationLayer>(&layer)) return p->source;
  SignedObject out;
  for (Atom a : std::get<AtomLayer>(layer).atoms) out = out + atom_source(a);
  return out;
}

SignedObject layer_target(const Layer& layer) {
  if (const auto* p = std::get_if<PermutationLayer>(&layer)) {
    return permutation_cobordism(p->perm, p->source).target();
  }
  SignedObject out;
  for (Atom a : std::get<AtomLayer>(layer).atoms) out = out + atom_target(a);
  return out;
}

Cobordism layer_cobordism(const Layer& layer) {
  if (const auto* p = std::get_if<PermutationLayer>(&layer)) {
    return permutation_cobordism(p->perm, p->source);
  }
  Cobordism out = identity(SignedObject());
  for (Atom a : std::get<AtomLayer>(layer).atoms) out = tensor(out, atom_cobordism(a));
  return out;
}

GeneratorWord decompose(const Cobordism& k) {
  const SignedObject& a = k.source();
  const SignedObject& b = k.target();

  struct Cap {
    std::size_t plus, minus;  // source indices
  };
  struct Cup {
    std::size_t minus, plus;  // target indices
  };
  struct Through {
    std::size_t in, out;
  };
  std::vector<Cap> caps;
  std::vector<Cup> cups;
  std::vector<Through> throughs;

  // Arcs are canonically sorted, so each family comes out ordered by its
  // smaller In (caps, throughs) or smaller Out (cups) index.
  for (const auto& arc : k.arcs()) {
    if (arc.first.side == Side::In && arc.second.side == Side::In) {
      const bool first_plus = a.sign(arc.first.index) > 0;
      caps.push_back(first_plus ? Cap{arc.first.index, arc.second.index}
                                : Cap{arc.second.index, arc.first.index});
    } else if (arc.first.side == Side::Out) {
      const bool first_minus = b.sign(arc.first.index) < 0;
      cups.push_back(first_minus ? Cup{arc.first.index, arc.second.index}
                                 : Cup{arc.second.index, arc.first.index});
    } else {
      throughs.push_back(Through{arc.first.index, arc.second.index});
    }
  }

  // pi_in: bring each cap's endpoints together as "+-" pairs, then the
  // through-strands in source order.
  std::vector<std::size_t> perm_in(a.size());
  std::size_t pos = 0;
  std::vector<Atom> caps_atoms;
  caps_atoms.reserve(caps.size() + throughs.size());
  for (const auto& cap : caps) {
    perm_in[cap.plus] = pos++;
    perm_in[cap.minus] = pos++;
    caps_atoms.push_back(Atom::CapPM);
  }
  std::vector<int> mid_signs;
  mid_signs.reserve(throughs.size());
  for (const auto& t : throughs) {
    perm_in[t.in] = pos++;
    mid_signs.push_back(a.sign(t.in));
    caps_atoms.push_back(a.sign(t.in) > 0 ? Atom::IdPlus : Atom::IdMinus);
  }

  // Cups appear after the through-strands as "-+" pairs.
  std::vector<Atom> cups_atoms;
  cups_atoms.reserve(throughs.size() + cups.size());
  std::vector<int> a3_signs = mid_signs;
  for (int s : mid_signs) cups_atoms.push_back(s > 0 ? Atom::IdPlus : Atom::IdMinus);
  for (std::size_t u = 0; u < cups.size(); ++u) {
    cups_atoms.push_back(Atom::CupMP);
    a3_signs.push_back(-1);
    a3_signs.push_back(+1);
  }

  // pi_out: route through-strands and cup endpoints to their target slots.
  std::vector<std::size_t> perm_out(b.size());
  pos = 0;
  for (const auto& t : throughs) perm_out[pos++] = t.out;
  for (const auto& cup : cups) {
    perm_out[pos++] = cup.minus;
    perm_out[pos++] = cup.plus;
  }

  GeneratorWord word;
  word.scalar_circles = k.circles();
  word.layers.push_back(PermutationLayer{a, std::move(perm_in)});
  word.layers.push_back(AtomLayer{std::move(caps_atoms)});
  word.layers.push_back(AtomLayer{std::move(cups_atoms)});
  word.layers.push_back(PermutationLayer{SignedObject::from_signs(a3_signs), std::move(perm_out)});
  return word;
}

Cobordism recompose(const GeneratorWord& word) {
  std::optional<Cobordism> acc;
  for (std::size_t i = 0; i < word.layers.size(); ++i) {
    Cobordism layer = layer_cobordism(word.layers[i]);
    if (!acc) {
      acc = std::move(layer);
      continue;
    }
    if (!(acc->target() == layer.source())) {
      throw ValidationError("recompose: layer " + std::to_string(i) + " expects source \"" +
                            layer.source().to_string() + "\" but the preceding layers end at \"" +
                            acc->target().to_string() + "\"");
    }
    acc = compose(*acc, layer);
  }
  Cobordism out = acc ? std::move(*acc) : identity(SignedObject());
  if (word.scalar_circles > 0) {
    out = tensor(out, Cobordism(SignedObject(), SignedObject(), {}, word.scalar_circles));
  }
  return out;
}

}  // namespace onecob

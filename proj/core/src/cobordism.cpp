#include "onecob/cobordism.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "onecob/errors.hpp"

namespace onecob {

namespace {

std::string endpoint_str(const Endpoint& e) {
  return (e.side == Side::In ? "in" : "out") + std::to_string(e.index);
}

std::string arc_str(const Arc& a) {
  return "{" + endpoint_str(a.first) + "," + endpoint_str(a.second) + "}";
}

}  // namespace

Cobordism::Cobordism(SignedObject source, SignedObject target, std::vector<Arc> arcs,
                     std::uint32_t circles)
    : source_(std::move(source)),
      target_(std::move(target)),
      arcs_(std::move(arcs)),
      circles_(circles) {
  const std::size_t n = source_.size();
  const std::size_t m = target_.size();

  for (auto& arc : arcs_) {
    if (arc.second < arc.first) std::swap(arc.first, arc.second);
  }
  std::sort(arcs_.begin(), arcs_.end());

  std::vector<char> seen_in(n, 0), seen_out(m, 0);
  auto sign_at = [&](const Endpoint& e) {
    return e.side == Side::In ? source_.sign(e.index) : target_.sign(e.index);
  };
  auto touch = [&](const Endpoint& e, const Arc& arc) {
    const std::size_t len = e.side == Side::In ? n : m;
    if (e.index >= len) {
      throw ValidationError("arc " + arc_str(arc) + ": endpoint " + endpoint_str(e) +
                            " is out of range for boundary of size " + std::to_string(len));
    }
    auto& seen = e.side == Side::In ? seen_in : seen_out;
    if (seen[e.index]) {
      throw ValidationError("endpoint " + endpoint_str(e) + " occurs in more than one arc");
    }
    seen[e.index] = 1;
  };

  for (const auto& arc : arcs_) {
    if (arc.first == arc.second) {
      throw ValidationError("arc " + arc_str(arc) + " joins a point to itself");
    }
    touch(arc.first, arc);
    touch(arc.second, arc);
    const int s1 = sign_at(arc.first);
    const int s2 = sign_at(arc.second);
    const bool same_side = arc.first.side == arc.second.side;
    // Orientation: an arc between two points of the same boundary reverses
    // direction (needs opposite signs); a through-strand keeps it.
    const bool ok = same_side ? (s1 == -s2) : (s1 == s2);
    if (!ok) {
      throw ValidationError("arc " + arc_str(arc) + " violates the orientation rule (signs " +
                            (s1 > 0 ? "+" : "-") + " and " + (s2 > 0 ? "+" : "-") + ")");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!seen_in[i]) {
      throw ValidationError("endpoint in" + std::to_string(i) +
                            " is not covered by any arc (not a perfect matching)");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!seen_out[j]) {
      throw ValidationError("endpoint out" + std::to_string(j) +
                            " is not covered by any arc (not a perfect matching)");
    }
  }
}

Cobordism identity(const SignedObject& a) {
  std::vector<Arc> arcs;
  arcs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    arcs.push_back({Endpoint{Side::In, i}, Endpoint{Side::Out, i}});
  }
  return Cobordism(a, a, std::move(arcs), 0);
}

Cobordism generator(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::CapPM:
      return Cobordism(SignedObject("+-"), SignedObject(),
                       {{Endpoint{Side::In, 0}, Endpoint{Side::In, 1}}}, 0);
    case GeneratorKind::CapMP:
      return Cobordism(SignedObject("-+"), SignedObject(),
                       {{Endpoint{Side::In, 0}, Endpoint{Side::In, 1}}}, 0);
    case GeneratorKind::CupMP:
      return Cobordism(SignedObject(), SignedObject("-+"),
                       {{Endpoint{Side::Out, 0}, Endpoint{Side::Out, 1}}}, 0);
    case GeneratorKind::CupPM:
      return Cobordism(SignedObject(), SignedObject("+-"),
                       {{Endpoint{Side::Out, 0}, Endpoint{Side::Out, 1}}}, 0);
    case GeneratorKind::Circle:
      return Cobordism(SignedObject(), SignedObject(), {}, 1);
  }
  throw ValidationError("unknown generator kind");
}

Cobordism permutation_cobordism(const std::vector<std::size_t>& perm, const SignedObject& a) {
  const std::size_t k = a.size();
  if (perm.size() != k) {
    throw ValidationError("permutation has " + std::to_string(perm.size()) +
                          " entries but the object has " + std::to_string(k) + " points");
  }
  std::vector<char> hit(k, 0);
  for (std::size_t v : perm) {
    if (v >= k || hit[v]) {
      throw ValidationError("permutation is not a bijection on {0..." +
                            std::to_string(k ? k - 1 : 0) + "}");
    }
    hit[v] = 1;
  }
  std::vector<int> target_signs(k, 1);
  std::vector<Arc> arcs;
  arcs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    target_signs[perm[i]] = a.sign(i);
    arcs.push_back({Endpoint{Side::In, i}, Endpoint{Side::Out, perm[i]}});
  }
  return Cobordism(a, SignedObject::from_signs(target_signs), std::move(arcs), 0);
}

Cobordism tau(const SignedObject& a, const SignedObject& b) {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  std::vector<std::size_t> perm(la + lb);
  for (std::size_t i = 0; i < la; ++i) perm[i] = lb + i;
  for (std::size_t j = 0; j < lb; ++j) perm[la + j] = j;
  return permutation_cobordism(perm, a + b);
}

Cobordism compose(const Cobordism& k, const Cobordism& l) {
  if (!(k.target() == l.source())) {
    throw ValidationError("compose: target \"" + k.target().to_string() +
                          "\" does not match source \"" + l.source().to_string() + "\"");
  }
  const std::size_t n = k.source().size();
  const std::size_t b = k.target().size();
  const std::size_t m = l.target().size();

  // Partner tables: endpoint -> the other end of its arc, per diagram.
  auto enc = [](const Endpoint& e, std::size_t nsrc) {
    return e.side == Side::In ? e.index : nsrc + e.index;
  };
  std::vector<Endpoint> pk(n + b), pl(b + m);
  for (const auto& arc : k.arcs()) {
    pk[enc(arc.first, n)] = arc.second;
    pk[enc(arc.second, n)] = arc.first;
  }
  for (const auto& arc : l.arcs()) {
    pl[enc(arc.first, b)] = arc.second;
    pl[enc(arc.second, b)] = arc.first;
  }

  std::vector<char> visited(b, 0);

  // Follow arcs alternately through k and l until a free endpoint
  // (source of k / target of l) is reached.
  auto walk = [&](bool in_k, Endpoint e) -> std::pair<bool, Endpoint> {
    for (;;) {
      if (in_k) {
        const Endpoint p = pk[enc(e, n)];
        if (p.side == Side::In) return {true, p};
        visited[p.index] = 1;
        in_k = false;
        e = Endpoint{Side::In, p.index};
      } else {
        const Endpoint p = pl[enc(e, b)];
        if (p.side == Side::Out) return {false, p};
        visited[p.index] = 1;
        in_k = true;
        e = Endpoint{Side::Out, p.index};
      }
    }
  };

  std::vector<Arc> arcs;
  arcs.reserve((n + m) / 2);
  std::vector<char> used_in(n, 0), used_out(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (used_in[i]) continue;
    used_in[i] = 1;
    const auto [in_k, f] = walk(true, Endpoint{Side::In, i});
    Endpoint other;
    if (in_k) {
      used_in[f.index] = 1;
      other = Endpoint{Side::In, f.index};
    } else {
      used_out[f.index] = 1;
      other = Endpoint{Side::Out, f.index};
    }
    arcs.push_back({Endpoint{Side::In, i}, other});
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (used_out[j]) continue;
    used_out[j] = 1;
    const auto [in_k, f] = walk(false, Endpoint{Side::Out, j});
    assert(!in_k);  // walks from k's source already consumed those paths
    used_out[f.index] = 1;
    arcs.push_back({Endpoint{Side::Out, j}, Endpoint{Side::Out, f.index}});
  }

  // Boundary points not on any free path close up into circles.
  std::uint32_t cycles = 0;
  for (std::size_t x = 0; x < b; ++x) {
    if (visited[x]) continue;
    ++cycles;
    std::size_t cur = x;
    while (!visited[cur]) {
      visited[cur] = 1;
      const Endpoint p = pk[enc(Endpoint{Side::Out, cur}, n)];
      assert(p.side == Side::Out);
      visited[p.index] = 1;
      const Endpoint q = pl[enc(Endpoint{Side::In, p.index}, b)];
      assert(q.side == Side::In);
      cur = q.index;
    }
  }

  return Cobordism(k.source(), l.target(), std::move(arcs),
                   k.circles() + l.circles() + cycles);
}

Cobordism tensor(const Cobordism& k, const Cobordism& l) {
  const std::size_t n1 = k.source().size();
  const std::size_t m1 = k.target().size();
  std::vector<Arc> arcs = k.arcs();
  arcs.reserve(arcs.size() + l.arcs().size());
  auto shift = [&](Endpoint e) {
    e.index += e.side == Side::In ? n1 : m1;
    return e;
  };
  for (const auto& arc : l.arcs()) {
    arcs.push_back({shift(arc.first), shift(arc.second)});
  }
  return Cobordism(k.source() + l.source(), k.target() + l.target(), std::move(arcs),
                   k.circles() + l.circles());
}

bool equivalent(const Cobordism& k, const Cobordism& l) { return k == l; }

namespace {

void enumerate_matchings(const std::vector<int>& signs, const std::vector<Side>& sides,
                         std::vector<char>& used, std::vector<Arc>& current,
                         std::size_t in_count,
                         std::vector<std::vector<Arc>>& out) {
  const std::size_t total = signs.size();
  std::size_t u = 0;
  while (u < total && used[u]) ++u;
  if (u == total) {
    out.push_back(current);
    return;
  }
  used[u] = 1;
  for (std::size_t v = u + 1; v < total; ++v) {
    if (used[v]) continue;
    const bool same_side = sides[u] == sides[v];
    const bool ok = same_side ? (signs[u] == -signs[v]) : (signs[u] == signs[v]);
    if (!ok) continue;
    used[v] = 1;
    auto ep = [&](std::size_t t) {
      return sides[t] == Side::In ? Endpoint{Side::In, t}
                                  : Endpoint{Side::Out, t - in_count};
    };
    current.push_back({ep(u), ep(v)});
    enumerate_matchings(signs, sides, used, current, in_count, out);
    current.pop_back();
    used[v] = 0;
  }
  used[u] = 0;
}

}  // namespace

std::vector<Cobordism> enumerate_homset(const SignedObject& a, const SignedObject& b,
                                        std::uint32_t max_circles) {
  std::vector<Cobordism> result;
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if ((n + m) % 2 != 0) return result;

  std::vector<int> signs;
  std::vector<Side> sides;
  signs.reserve(n + m);
  sides.reserve(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    signs.push_back(a.sign(i));
    sides.push_back(Side::In);
  }
  for (std::size_t j = 0; j < m; ++j) {
    signs.push_back(b.sign(j));
    sides.push_back(Side::Out);
  }

  std::vector<std::vector<Arc>> matchings;
  std::vector<char> used(n + m, 0);
  std::vector<Arc> current;
  enumerate_matchings(signs, sides, used, current, n, matchings);

  result.reserve(matchings.size() * (max_circles + 1));
  for (const auto& matching : matchings) {
    for (std::uint32_t c = 0; c <= max_circles; ++c) {
      result.emplace_back(a, b, matching, c);
    }
  }
  return result;
}

}  // namespace onecob

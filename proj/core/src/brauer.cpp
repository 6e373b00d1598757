#include "onecob/brauer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "onecob/rational.hpp"

namespace onecob {

ColoringSupport coloring_support(const Cobordism& k, unsigned p, std::uint64_t max_cells) {
  if (p < 2) {
    throw ValidationError("p must be at least 2, got " + std::to_string(p));
  }
  const std::size_t n = k.source().size();
  const std::size_t m = k.target().size();
  checked_pow(p, n + m, max_cells);

  ColoringSupport s;
  s.rows = checked_pow(p, m, max_cells);
  s.cols = checked_pow(p, n, max_cells);

  // Place values for most-significant-first digit positions.
  std::vector<std::uint64_t> src_place(n, 1), tgt_place(m, 1);
  for (std::size_t j = n; j-- > 0;) {
    if (j + 1 < n) src_place[j] = src_place[j + 1] * p;
  }
  for (std::size_t j = m; j-- > 0;) {
    if (j + 1 < m) tgt_place[j] = tgt_place[j + 1] * p;
  }

  const auto& arcs = k.arcs();
  const std::size_t na = arcs.size();
  s.ones.reserve(checked_pow(p, na, max_cells));

  // One matrix entry per way of coloring each arc with one of p colors.
  std::vector<unsigned> color(na, 0);
  for (;;) {
    std::uint64_t row = 0, col = 0;
    for (std::size_t i = 0; i < na; ++i) {
      for (const Endpoint& e : {arcs[i].first, arcs[i].second}) {
        if (e.side == Side::In) {
          col += color[i] * src_place[e.index];
        } else {
          row += color[i] * tgt_place[e.index];
        }
      }
    }
    s.ones.push_back({row, col});
    std::size_t d = na;
    while (d > 0 && ++color[d - 1] == p) {
      color[d - 1] = 0;
      --d;
    }
    if (d == 0) break;
  }
  std::sort(s.ones.begin(), s.ones.end());
  return s;
}

ExactMatrix coloring_matrix(const Cobordism& k, unsigned p, std::uint64_t max_cells) {
  const ColoringSupport s = coloring_support(k, p, max_cells);
  ExactMatrix m(s.rows, s.cols);
  for (const auto& [row, col] : s.ones) m(row, col) = 1;
  return m;
}

ExactMatrix brauer_image(const Cobordism& k, unsigned p, std::uint64_t max_cells) {
  ExactMatrix m = coloring_matrix(k, p, max_cells);
  if (k.circles() > 0) {
    m = Rational(integer_pow(p, k.circles())) * m;
  }
  return m;
}

std::uint64_t brauer_object(const SignedObject& a, unsigned p) {
  if (p < 2) {
    throw ValidationError("p must be at least 2, got " + std::to_string(p));
  }
  return checked_pow(p, a.size(), std::numeric_limits<std::uint64_t>::max());
}

namespace {

// Hom-set members with both the dense image and the sparse support cached.
struct HomImages {
  std::vector<Cobordism> hom;
  std::vector<ExactMatrix> dense;
  std::vector<ColoringSupport> support;
};

HomImages hom_images(unsigned p, const SignedObject& a, const SignedObject& b,
                     std::uint32_t max_circles, std::uint64_t max_cells) {
  HomImages out;
  out.hom = enumerate_homset(a, b, max_circles);
  out.dense.reserve(out.hom.size());
  out.support.reserve(out.hom.size());
  for (const auto& k : out.hom) {
    out.dense.push_back(brauer_image(k, p, max_cells));
    out.support.push_back(coloring_support(k, p, max_cells));
  }
  return out;
}

void check_composition(VerifyReport& rep, unsigned p, const Cobordism& k, const Cobordism& l,
                       const ExactMatrix& bk, const ExactMatrix& bl, std::uint64_t max_cells) {
  const Cobordism kl = compose(k, l);
  const ExactMatrix lhs = brauer_image(kl, p, max_cells);
  const ExactMatrix rhs = matmul(bl, bk);
  const bool ok = lhs == rhs;
  rep.tally(ok);
  if (!ok && rep.want_counterexample()) {
    rep.counterexamples.push_back({k, l, lhs, rhs});
  }
}

void check_tensor(VerifyReport& rep, unsigned p, const Cobordism& k, const Cobordism& l,
                  const ColoringSupport& sk, const ColoringSupport& sl,
                  std::uint64_t max_cells) {
  const Cobordism tkl = tensor(k, l);
  const ColoringSupport st = coloring_support(tkl, p, max_cells);

  // The tensor law p^{c} A(K (x) L) = p^{c_K} A(K) (x) p^{c_L} A(L) holds iff
  // the circle counts add and the 0/1 supports combine as a Kronecker grid.
  bool ok = tkl.circles() == k.circles() + l.circles() &&
            st.rows == sk.rows * sl.rows && st.cols == sk.cols * sl.cols &&
            st.ones.size() == sk.ones.size() * sl.ones.size();
  if (ok) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> combined;
    combined.reserve(st.ones.size());
    for (const auto& [rk, ck] : sk.ones) {
      for (const auto& [rl, cl] : sl.ones) {
        combined.push_back({rk * sl.rows + rl, ck * sl.cols + cl});
      }
    }
    std::sort(combined.begin(), combined.end());
    ok = combined == st.ones;
  }
  rep.tally(ok);
  if (!ok && rep.want_counterexample()) {
    Counterexample cex{k, l, ExactMatrix(), ExactMatrix()};
    try {
      cex.lhs = brauer_image(tkl, p, max_cells);
      cex.rhs = kron(brauer_image(k, p, max_cells), brauer_image(l, p, max_cells));
    } catch (const SizeCapError&) {
      // too large to materialize; record the morphisms alone
    }
    rep.counterexamples.push_back(std::move(cex));
  }
}

void check_matrix_equal(VerifyReport& rep, const Cobordism& k, const ExactMatrix& lhs,
                        const ExactMatrix& rhs) {
  const bool ok = lhs == rhs;
  rep.tally(ok);
  if (!ok && rep.want_counterexample()) {
    rep.counterexamples.push_back({k, std::nullopt, lhs, rhs});
  }
}

}  // namespace

VerifyReport verify_functoriality(unsigned p, const SignedObject& a, const SignedObject& b,
                                  const SignedObject& c, const VerifyMode& mode,
                                  std::uint32_t max_circles, std::uint64_t max_cells) {
  VerifyReport rep;
  const HomImages ab = hom_images(p, a, b, max_circles, max_cells);
  const HomImages bc = hom_images(p, b, c, max_circles, max_cells);

  if (std::holds_alternative<ExhaustiveMode>(mode)) {
    for (std::size_t i = 0; i < ab.hom.size(); ++i) {
      for (std::size_t j = 0; j < bc.hom.size(); ++j) {
        check_composition(rep, p, ab.hom[i], bc.hom[j], ab.dense[i], bc.dense[j], max_cells);
        check_tensor(rep, p, ab.hom[i], bc.hom[j], ab.support[i], bc.support[j], max_cells);
      }
    }
  } else {
    const auto& rm = std::get<RandomMode>(mode);
    if (!ab.hom.empty() && !bc.hom.empty()) {
      std::mt19937_64 rng(rm.seed);
      for (std::uint64_t t = 0; t < rm.trials; ++t) {
        const std::size_t i = static_cast<std::size_t>(rng() % ab.hom.size());
        const std::size_t j = static_cast<std::size_t>(rng() % bc.hom.size());
        check_composition(rep, p, ab.hom[i], bc.hom[j], ab.dense[i], bc.dense[j], max_cells);
        check_tensor(rep, p, ab.hom[i], bc.hom[j], ab.support[i], bc.support[j], max_cells);
      }
    }
  }

  for (const SignedObject& obj : {a, b, c}) {
    const Cobordism id = identity(obj);
    check_matrix_equal(rep, id, brauer_image(id, p, max_cells),
                       ExactMatrix::identity(checked_pow(p, obj.size(), max_cells)));
  }

  const Cobordism swap_ab = tau(a, b);
  checked_pow(p, 2 * (a.size() + b.size()), max_cells);
  check_matrix_equal(rep, swap_ab, brauer_image(swap_ab, p, max_cells),
                     commutation_matrix(checked_pow(p, a.size(), max_cells),
                                        checked_pow(p, b.size(), max_cells)));
  return rep;
}

VerifyReport verify_faithfulness(unsigned p, const SignedObject& a, const SignedObject& b,
                                 std::uint32_t max_circles, std::uint64_t max_cells) {
  VerifyReport rep;
  const std::vector<Cobordism> hom = enumerate_homset(a, b, max_circles);
  rep.checked = hom.size();
  rep.passed = hom.size();

  std::map<std::string, std::size_t> seen;  // serialized image -> first index
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const ExactMatrix img = brauer_image(hom[i], p, max_cells);
    std::string key = std::to_string(img.rows()) + "x" + std::to_string(img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r) {
      for (std::size_t c = 0; c < img.cols(); ++c) {
        key += ',';
        key += format_rational(img(r, c));
      }
    }
    const auto [it, inserted] = seen.insert({std::move(key), i});
    if (!inserted) {
      --rep.passed;
      ++rep.failed;
      if (rep.want_counterexample()) {
        rep.counterexamples.push_back({hom[it->second], hom[i], img, img});
      }
    }
  }
  return rep;
}

}  // namespace onecob

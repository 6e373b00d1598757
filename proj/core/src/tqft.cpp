#include "onecob/tqft.hpp"

#include <string>
#include <utility>
#include <vector>

#include "onecob/rational.hpp"

namespace onecob {

StrictTqft::StrictTqft(ExactMatrix x) : x_(std::move(x)) {
  if (x_.rows() != x_.cols()) {
    throw ValidationError("theory matrix must be square, got " + std::to_string(x_.rows()) +
                          "x" + std::to_string(x_.cols()));
  }
  if (x_.rows() < 2) {
    throw ValidationError("theory dimension p must be at least 2, got " +
                          std::to_string(x_.rows()));
  }
  p_ = static_cast<unsigned>(x_.rows());
  try {
    x_inv_ = inverse(x_);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("theory matrix is singular; a strict theory needs an invertible matrix");
  }
  id_ = ExactMatrix::identity(p_);
  cap_pm_ = vec_row(x_);
  cap_mp_ = vec_row(transpose(x_));
  cup_mp_ = vec_col(x_inv_);
  cup_pm_ = vec_col(transpose(x_inv_));
  circle_ = ExactMatrix{{Rational(p_)}};
  swap_ = commutation_matrix(p_, p_);

  const VerifyReport sanity = check_axioms(*this);
  if (sanity.failed != 0) {
    throw Error("generator images violate the defining identities (internal error)");
  }
}

VerifyReport check_axioms(const StrictTqft& t) {
  VerifyReport rep;
  const ExactMatrix& ep = t.image_identity();
  auto check = [&rep](const ExactMatrix& lhs, const ExactMatrix& rhs) {
    const bool ok = lhs == rhs;
    rep.tally(ok);
    if (!ok && rep.want_counterexample()) {
      rep.counterexamples.push_back({std::nullopt, std::nullopt, lhs, rhs});
    }
  };
  // Snakes: (cap (x) E) * (E (x) cup) = E for the +- pair and its mirror.
  check(matmul(kron(t.image_cap_pm(), ep), kron(ep, t.image_cup_mp())), ep);
  check(matmul(kron(t.image_cap_mp(), ep), kron(ep, t.image_cup_pm())), ep);
  // Closing a strand gives the circle value p.
  check(matmul(matmul(t.image_cap_pm(), t.image_swap()), t.image_cup_mp()), t.image_circle());
  // The mirrored cap/cup are the swap-twisted ones.
  check(t.image_cap_mp(), matmul(t.image_cap_pm(), t.image_swap()));
  check(t.image_cup_pm(), matmul(t.image_swap(), t.image_cup_mp()));
  return rep;
}

namespace {

bool all_identities(const std::vector<Atom>& atoms) {
  for (Atom a : atoms) {
    if (a == Atom::CapPM || a == Atom::CupMP) return false;
  }
  return true;
}

ExactMatrix atoms_image(const StrictTqft& t, const std::vector<Atom>& atoms) {
  ExactMatrix out{{Rational(1)}};
  for (Atom a : atoms) {
    switch (a) {
      case Atom::IdPlus:
      case Atom::IdMinus:
        out = kron(out, t.image_identity());
        break;
      case Atom::CapPM:
        out = kron(out, t.image_cap_pm());
        break;
      case Atom::CupMP:
        out = kron(out, t.image_cup_mp());
        break;
    }
  }
  return out;
}

// Index map of the tensor-permutation matrix for sigma: row r of the matrix
// picks out column source_of_row(r).
std::vector<std::size_t> digit_permutation_map(const std::vector<std::size_t>& perm, unsigned p,
                                               bool rows_from_cols) {
  const std::size_t k = perm.size();
  std::vector<std::size_t> place(k, 1);  // p^{k-1-j}
  for (std::size_t j = k; j-- > 0;) {
    if (j + 1 < k) place[j] = place[j + 1] * p;
  }
  std::size_t dim = 1;
  for (std::size_t j = 0; j < k; ++j) dim *= p;
  std::vector<std::size_t> map(dim, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t other = 0;
    for (std::size_t j = 0; j < k; ++j) {
      // rows_from_cols: idx is a row r and other the column carrying its 1,
      // so digit j of the column is digit perm[j] of the row. Otherwise idx
      // is a column c and the 1 sits at the row with digit perm[j] = digit j.
      if (rows_from_cols) {
        other += ((idx / place[perm[j]]) % p) * place[j];
      } else {
        other += ((idx / place[j]) % p) * place[perm[j]];
      }
    }
    map[idx] = other;
  }
  return map;
}

ExactMatrix permute_result_rows(const ExactMatrix& m, const std::vector<std::size_t>& perm,
                                unsigned p) {
  if (perm.empty()) return m;
  const auto src_of = digit_permutation_map(perm, p, /*rows_from_cols=*/true);
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(src_of[r], c);
  }
  return out;
}

ExactMatrix permute_result_cols(const ExactMatrix& m, const std::vector<std::size_t>& perm,
                                unsigned p) {
  if (perm.empty()) return m;
  const auto src_of = digit_permutation_map(perm, p, /*rows_from_cols=*/false);
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, src_of[c]);
  }
  return out;
}

}  // namespace

ExactMatrix tqft_eval(const StrictTqft& t, const Cobordism& k, std::uint64_t max_cells) {
  const unsigned p = t.p();
  checked_pow(p, k.source().size() + k.target().size(), max_cells);

  const GeneratorWord word = decompose(k);
  const auto& pin = std::get<PermutationLayer>(word.layers[0]);
  const auto& caps = std::get<AtomLayer>(word.layers[1]);
  const auto& cups = std::get<AtomLayer>(word.layers[2]);
  const auto& pout = std::get<PermutationLayer>(word.layers[3]);

  ExactMatrix m;
  const bool caps_trivial = all_identities(caps.atoms);
  const bool cups_trivial = all_identities(cups.atoms);
  if (caps_trivial && cups_trivial) {
    m = ExactMatrix::identity(checked_pow(p, cups.atoms.size(), max_cells));
  } else if (caps_trivial) {
    m = atoms_image(t, cups.atoms);
  } else if (cups_trivial) {
    m = atoms_image(t, caps.atoms);
  } else {
    m = matmul(atoms_image(t, cups.atoms), atoms_image(t, caps.atoms));
  }

  m = permute_result_rows(m, pout.perm, p);
  m = permute_result_cols(m, pin.perm, p);

  if (word.scalar_circles > 0) {
    m = Rational(integer_pow(p, word.scalar_circles)) * m;
  }
  return m;
}

ExactMatrix theta(const StrictTqft& t, const SignedObject& a) {
  ExactMatrix out{{Rational(1)}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = kron(out, a.sign(i) > 0 ? t.image_identity() : t.x_inverse());
  }
  return out;
}

ExactMatrix theta_inverse(const StrictTqft& t, const SignedObject& a) {
  ExactMatrix out{{Rational(1)}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = kron(out, a.sign(i) > 0 ? t.image_identity() : t.x());
  }
  return out;
}

ExactMatrix eval_via_theta(const StrictTqft& t, const Cobordism& k, std::uint64_t max_cells) {
  // The theta factors are square on each boundary, so they are the biggest
  // intermediates here.
  checked_pow(t.p(), 2 * k.source().size(), max_cells);
  checked_pow(t.p(), 2 * k.target().size(), max_cells);
  const ExactMatrix b = brauer_image(k, t.p(), max_cells);
  return matmul(matmul(theta(t, k.target()), b), theta_inverse(t, k.source()));
}

ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;  // -9..9
      const std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;   // 1..3
      m(i, j) = Rational(num) / Rational(den);
    }
  }
  return m;
}

ExactMatrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 9) - 4;  // -4..4
        const std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;  // 1..3
        m(i, j) = Rational(num) / Rational(den);
      }
    }
    try {
      (void)inverse(m);
      return m;
    } catch (const SingularMatrixError&) {
      // resample
    }
  }
  throw Error("could not sample an invertible matrix (internal error)");
}

VerifyReport verify_theta(unsigned p, std::size_t max_points, std::uint32_t max_circles,
                          std::uint64_t trials, std::uint64_t seed, std::uint64_t max_cells) {
  if (p < 2) {
    throw ValidationError("p must be at least 2, got " + std::to_string(p));
  }
  VerifyReport rep;
  std::mt19937_64 rng(seed);

  auto check = [&](const StrictTqft& t, const Cobordism& k) {
    const ExactMatrix via_layers = tqft_eval(t, k, max_cells);
    const ExactMatrix via_nat = eval_via_theta(t, k, max_cells);
    const bool ok = via_layers == via_nat;
    rep.tally(ok);
    if (!ok && rep.want_counterexample()) {
      rep.counterexamples.push_back({k, std::nullopt, via_layers, via_nat});
    }
  };

  const std::vector<Cobordism> gens = {
      identity(SignedObject("+")),      identity(SignedObject("-")),
      generator(GeneratorKind::CapPM),  generator(GeneratorKind::CapMP),
      generator(GeneratorKind::CupMP),  generator(GeneratorKind::CupPM),
      generator(GeneratorKind::Circle),
  };
  for (int round = 0; round < 3; ++round) {
    const StrictTqft t(round == 0 ? ExactMatrix::identity(p)
                                  : random_invertible_matrix(rng, p));
    for (const auto& g : gens) check(t, g);
  }

  std::uint64_t done = 0;
  std::uint64_t dry_runs = 0;
  while (done < trials && dry_runs < 1000 + 10 * trials) {
    const std::size_t total = max_points ? rng() % (max_points + 1) : 0;
    const std::size_t la = total ? rng() % (total + 1) : 0;
    const std::size_t lb = total - la;
    if ((la + lb) % 2 != 0) {
      ++dry_runs;
      continue;
    }
    std::vector<int> sa(la), sb(lb);
    for (auto& s : sa) s = (rng() % 2) ? 1 : -1;
    for (auto& s : sb) s = (rng() % 2) ? 1 : -1;
    const SignedObject a = SignedObject::from_signs(sa);
    const SignedObject b = SignedObject::from_signs(sb);
    const auto hom = enumerate_homset(a, b, max_circles);
    if (hom.empty()) {
      ++dry_runs;
      continue;
    }
    const Cobordism& k = hom[rng() % hom.size()];
    const StrictTqft t(random_invertible_matrix(rng, p));
    check(t, k);
    ++done;
  }
  return rep;
}

}  // namespace onecob

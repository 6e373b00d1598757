#include "onecob/exact_matrix.hpp"

#include <limits>
#include <string>
#include <utility>

namespace onecob {

namespace {

std::string dims_str(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  entries_.resize(checked_mul(rows, cols, kNoCap));
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw ValidationError("ragged matrix literal: expected " + std::to_string(cols_) +
                            " columns, got " + std::to_string(row.size()));
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = 1;
  return e;
}

ExactMatrix ExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                       const std::vector<Triplet>& triplets) {
  ExactMatrix m(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw ValidationError("triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                            ") is outside a " + dims_str(m) + " matrix");
    }
    m(t.row, t.col) += t.value;
  }
  return m;
}

void ExactMatrix::swap_rows(std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap(entries_[r1 * cols_ + j], entries_[r2 * cols_ + j]);
  }
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("matmul: inner dimensions differ (" + dims_str(a) + " times " +
                          dims_str(b) + ")");
  }
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;  // images of cobordisms are mostly zeros
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(checked_mul(a.rows(), b.rows(), kNoCap),
                checked_mul(a.cols(), b.cols(), kNoCap));
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Rational& aij = a(i1, j1);
      if (aij.is_zero()) continue;
      const std::size_t row0 = i1 * b.rows();
      const std::size_t col0 = j1 * b.cols();
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Rational& bij = b(i2, j2);
          if (!bij.is_zero()) c(row0 + i2, col0 + j2) = aij * bij;
        }
      }
    }
  }
  return c;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

ExactMatrix inverse(const ExactMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("inverse: matrix is " + dims_str(a) + ", not square");
  }
  const std::size_t n = a.rows();
  ExactMatrix work = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    work.swap_rows(col, piv);
    inv.swap_rows(col, piv);
    const Rational d = work(col, col);
    if (d != 1) {
      for (std::size_t j = 0; j < n; ++j) {
        work(col, j) /= d;
        inv(col, j) /= d;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = work(r, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

ExactMatrix commutation_matrix(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) {
    throw ValidationError("commutation matrix needs positive dimensions, got " +
                          std::to_string(n) + " and " + std::to_string(m));
  }
  const std::size_t nm = checked_mul(n, m, kNoCap);
  ExactMatrix s(nm, nm);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      s(j * n + i, i * m + j) = 1;
    }
  }
  return s;
}

ExactMatrix vec_row(const ExactMatrix& a) {
  ExactMatrix out(1, checked_mul(a.rows(), a.cols(), kNoCap));
  std::size_t pos = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(0, pos++) = a(i, j);
  }
  return out;
}

ExactMatrix vec_col(const ExactMatrix& a) {
  ExactMatrix out(checked_mul(a.rows(), a.cols(), kNoCap), 1);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(pos++, 0) = a(i, j);
  }
  return out;
}

ExactMatrix tensor_permutation_matrix(const std::vector<std::size_t>& perm, unsigned p) {
  if (p < 1) throw ValidationError("tensor permutation matrix needs p >= 1");
  const std::size_t k = perm.size();
  std::vector<char> hit(k, 0);
  for (std::size_t v : perm) {
    if (v >= k || hit[v]) {
      throw ValidationError("tensor permutation matrix: not a bijection on {0..." +
                            std::to_string(k ? k - 1 : 0) + "}");
    }
    hit[v] = 1;
  }
  checked_pow(p, 2 * k, kDefaultMaxCells);
  const std::uint64_t dim = checked_pow(p, k, kDefaultMaxCells);
  std::vector<std::uint64_t> place(k, 1);  // place[j] = p^{k-1-j}
  for (std::size_t j = k; j-- > 0;) {
    if (j + 1 < k) place[j] = place[j + 1] * p;
  }
  ExactMatrix s(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c) {
    std::uint64_t r = 0;
    std::uint64_t rest = c;
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t j = k - 1 - t;  // digit position, most significant first
      const std::uint64_t digit = rest % p;
      rest /= p;
      r += digit * place[perm[j]];
    }
    s(r, c) = 1;
  }
  return s;
}

ExactMatrix operator*(const Rational& scale, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (!out(i, j).is_zero()) out(i, j) *= scale;
    }
  }
  return out;
}

}  // namespace onecob

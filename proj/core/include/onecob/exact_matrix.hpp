#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "onecob/errors.hpp"
#include "onecob/rational.hpp"

namespace onecob {

// Dense row-major matrix over exact rationals. 1x1 matrices double as
// scalars; 0-row or 0-column shapes are legal and behave as expected.
class ExactMatrix {
 public:
  ExactMatrix() = default;  // 0x0
  ExactMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);

  struct Triplet {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    Rational value;
  };
  // Duplicate coordinates accumulate.
  static ExactMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   const std::vector<Triplet>& triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t r1, std::size_t r2);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& a);

// Exact Gauss-Jordan over the rationals; throws SingularMatrixError.
ExactMatrix inverse(const ExactMatrix& a);

// The nm x nm permutation matrix S with S[j*n+i, i*m+j] = 1: it sends the
// (i,j)-th vector of one tensor order to the (j,i)-th of the other.
ExactMatrix commutation_matrix(std::size_t n, std::size_t m);

// Row-major flattening of a p x q matrix into a 1 x pq row.
ExactMatrix vec_row(const ExactMatrix& a);

// Row-major flattening of a q x p matrix into a qp x 1 column.
ExactMatrix vec_col(const ExactMatrix& a);

// Permutation matrix on p^k basis indices (digits most significant first)
// moving tensor factor j to position perm[j]:
// entry (r, c) is 1 iff digit_{perm[j]}(r) = digit_j(c) for every j.
ExactMatrix tensor_permutation_matrix(const std::vector<std::size_t>& perm, unsigned p);

ExactMatrix operator*(const Rational& scale, const ExactMatrix& a);

}  // namespace onecob

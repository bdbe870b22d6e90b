#pragma once

// Dense linear algebra over a prime field F_p on Eigen storage. Entries are
// kept reduced in [0, p); p < 2^32 so products fit in 64 bits.

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

namespace lange::fp {

using Scalar = std::uint64_t;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

bool is_prime(std::uint64_t p);

/// Throws std::invalid_argument unless p is a prime below 2^32.
void require_prime(std::uint64_t p);

inline Scalar add(Scalar a, Scalar b, Scalar p) { return (a + b) % p; }
inline Scalar sub(Scalar a, Scalar b, Scalar p) { return (a + p - b) % p; }
inline Scalar mul(Scalar a, Scalar b, Scalar p) { return (a * b) % p; }
Scalar inv(Scalar a, Scalar p);

/// Matrix product with reduction after every multiply-add.
Matrix multiply(const Matrix& a, const Matrix& b, Scalar p);

struct Echelon {
  Matrix rref;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over F_p.
Echelon row_reduce(Matrix m, Scalar p);

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m, Scalar p) {
  return static_cast<Index>(row_reduce(Matrix(m), p).pivots.size());
}

/// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m, Scalar p);

/// Rows form a basis of {w : w v = 0}, the annihilator of the column span of v.
inline Matrix left_annihilator(const Matrix& v, Scalar p) {
  return nullspace(Matrix(v.transpose()), p).transpose();
}

template <typename Rng>
Matrix random_matrix(Index rows, Index cols, Scalar p, Rng& rng) {
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
  }
  return m;
}

}  // namespace lange::fp

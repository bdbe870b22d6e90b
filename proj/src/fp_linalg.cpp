#include "lange/fp_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lange::fp {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be a prime below 2^32, got " + std::to_string(p));
  }
}

Scalar inv(Scalar a, Scalar p) {
  // Fermat: a^(p-2).
  if (a % p == 0) throw std::domain_error("zero has no inverse");
  Scalar result = 1;
  Scalar base = a % p;
  for (Scalar e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
  }
  return result;
}

Matrix multiply(const Matrix& a, const Matrix& b, Scalar p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar bkj = b(k, j);
      if (bkj == 0) continue;
      for (Index i = 0; i < a.rows(); ++i) out(i, j) = add(out(i, j), mul(a(i, k), bkj, p), p);
    }
  }
  return out;
}

Echelon row_reduce(Matrix m, Scalar p) {
  Echelon e;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) % p == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));

    const Scalar scale = inv(m(row, col), p);
    for (Index j = 0; j < m.cols(); ++j) m(row, j) = mul(m(row, j), scale, p);
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = sub(m(i, j), mul(f, m(row, j), p), p);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

Matrix nullspace(const Matrix& m, Scalar p) {
  const Echelon e = row_reduce(m, p);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix basis = Matrix::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = sub(0, e.rref(static_cast<Index>(r), free), p);
    }
    ++k;
  }
  return basis;
}

}  // namespace lange::fp

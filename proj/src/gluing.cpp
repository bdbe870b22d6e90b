#include "lange/gluing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>
#include <vector>

namespace lange {
namespace {

using fp::Index;
using fp::Matrix;
using Key = std::vector<fp::Scalar>;

void require_ranks(Int n, Int nprime) {
  if (!(0 < nprime && nprime < n)) throw std::invalid_argument("need 0 < nprime < n");
}

template <typename Rng>
Matrix full_rank_columns(Index rows, Index cols, fp::Scalar p, Rng& rng) {
  for (;;) {
    Matrix m = fp::random_matrix(rows, cols, p, rng);
    if (fp::rank(m, p) == cols) return m;
  }
}

// Row-reduced basis of the column span of `cols`, flattened row-major.
Key span_key(const Matrix& cols, fp::Scalar p) {
  const fp::Echelon e = fp::row_reduce(Matrix(cols.transpose()), p);
  Key key;
  key.reserve(static_cast<std::size_t>(e.rref.size()));
  for (Index i = 0; i < e.rref.rows(); ++i) {
    for (Index j = 0; j < e.rref.cols(); ++j) key.push_back(e.rref(i, j));
  }
  return key;
}

// Every k-dimensional subspace of F_p^n, as an n x k basis matrix, via its
// reduced echelon form: pick k pivot columns, fill the non-pivot entries to
// the right of each pivot freely.
std::vector<Matrix> all_subspaces(fp::Scalar p, Index n, Index k) {
  std::vector<Matrix> out;
  std::vector<Index> pivots(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;

  for (;;) {
    std::vector<std::pair<Index, Index>> free_slots;
    for (Index r = 0; r < k; ++r) {
      for (Index c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(r, c);
      }
    }
    std::vector<fp::Scalar> digits(free_slots.size(), 0);
    for (;;) {
      Matrix rows = Matrix::Zero(k, n);
      for (Index r = 0; r < k; ++r) rows(r, pivots[static_cast<std::size_t>(r)]) = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) rows(free_slots[s].first, free_slots[s].second) = digits[s];
      out.push_back(rows.transpose());

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }

    // Next k-combination of {0, ..., n-1}.
    Index i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

IncidenceInstance random_instance(std::uint64_t p, Int n, Int nprime, std::uint64_t seed) {
  fp::require_prime(p);
  require_ranks(n, nprime);
  std::mt19937_64 rng(seed);
  IncidenceInstance inst;
  inst.p = p;
  inst.n = n;
  inst.nprime = nprime;
  inst.seed = seed;
  inst.V1sub = full_rank_columns(n, nprime, p, rng);
  inst.V2sub = full_rank_columns(n, nprime, p, rng);
  return inst;
}

Matrix incidence_system(const IncidenceInstance& inst) {
  const Index n = inst.n;
  const Index k = inst.nprime;
  const fp::Scalar p = inst.p;
  const Matrix w = fp::left_annihilator(inst.V2sub, p);  // (n - k) x n
  const Index q = w.rows();

  // (W phi V1)_{ab} = sum_{i,j} W_{ai} phi_{ij} V1_{jb}
  Matrix sys = Matrix::Zero(q * k, n * n);
  for (Index b = 0; b < k; ++b) {
    for (Index a = 0; a < q; ++a) {
      const Index row = b * q + a;
      for (Index j = 0; j < n; ++j) {
        const fp::Scalar v = inst.V1sub(j, b);
        if (v == 0) continue;
        for (Index i = 0; i < n; ++i) sys(row, j * n + i) = fp::mul(w(a, i), v, p);
      }
    }
  }
  return sys;
}

Int incidence_dim(const IncidenceInstance& inst) {
  const Int conditions = inst.nprime * (inst.n - inst.nprime);
  const Int r = fp::rank(incidence_system(inst), inst.p);
  if (r < conditions) throw DegenerateInstance("incidence system has rank " + std::to_string(r) +
                                               " < " + std::to_string(conditions));
  return inst.n * inst.n - r;
}

Int graph_count(std::uint64_t p, Int n, Int nprime, const Matrix& phi) {
  if (p != 2 && p != 3) throw std::invalid_argument("graph_count enumerates only over F_2 and F_3");
  if (n > 4) throw std::invalid_argument("graph_count enumerates only n <= 4");
  require_ranks(n, nprime);
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("phi must be n x n");
  if (fp::rank(phi, p) != n) throw std::invalid_argument("phi must be invertible");

  std::set<std::pair<Key, Key>> graph;
  std::set<Key> images;
  for (const Matrix& basis : all_subspaces(p, n, nprime)) {
    const Key image = span_key(fp::multiply(phi, basis, p), p);
    graph.emplace(span_key(basis, p), image);
    images.insert(image);
  }
  if (images.size() != graph.size()) throw std::logic_error("phi is not a bijection on subspaces");
  return static_cast<Int>(graph.size());
}

Int gaussian_binomial(Int n, Int k, Int q) {
  if (k < 0 || k > n) return 0;
  Int num = 1;
  Int den = 1;
  Int qn = 1;
  for (Int i = 0; i < n - k; ++i) qn *= q;  // q^(n-k)
  Int qk = 1;
  for (Int i = 0; i < k; ++i) {
    qn *= q;
    qk *= q;
    num *= qn - 1;  // q^(n-k+i+1) - 1
    den *= qk - 1;  // q^(i+1) - 1
  }
  return num / den;
}

Rational invertibility_rate(std::uint64_t p, Int n, Int nprime, Int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const IncidenceInstance inst = random_instance(p, n, nprime, seed);
  const Matrix basis = fp::nullspace(incidence_system(inst), p);

  auto run = [&](Int begin, Int end) {
    Int invertible = 0;
    for (Int t = begin; t < end; ++t) {
      std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
      std::mt19937_64 rng(sseq);
      const Matrix coeffs = fp::random_matrix(basis.cols(), 1, p, rng);
      const Matrix x = fp::multiply(basis, coeffs, p);
      const Matrix phi = Eigen::Map<const Matrix>(x.data(), n, n);
      if (fp::rank(phi, p) == n) ++invertible;
    }
    return invertible;
  };

  const Int workers = std::clamp<Int>(static_cast<Int>(std::thread::hardware_concurrency()), 1, 8);
  const Int chunk = (trials + workers - 1) / workers;
  std::vector<Int> counts(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  for (Int w = 0; w < workers; ++w) {
    const Int begin = w * chunk;
    const Int end = std::min(trials, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] { counts[static_cast<std::size_t>(w)] = run(begin, end); });
  }
  for (auto& th : pool) th.join();

  Int invertible = 0;
  for (Int c : counts) invertible += c;
  return Rational(invertible, trials);
}

}  // namespace lange

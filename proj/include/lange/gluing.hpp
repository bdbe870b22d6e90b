#pragma once

// Finite-field certification of the Grassmannian incidence counts used when
// gluing bundles at a node: the linear maps phi: V1 -> V2 carrying a fixed
// n'-plane V1' into a fixed n'-plane V2' form a space of dimension
// n^2 - n'(n - n').

#include "lange/fp_linalg.hpp"
#include "lange/types.hpp"

#include <cstdint>
#include <stdexcept>

namespace lange {

struct IncidenceInstance {
  std::uint64_t p = 0;
  Int n = 0;
  Int nprime = 0;
  fp::Matrix V1sub;  // n x n', full column rank
  fp::Matrix V2sub;  // n x n', full column rank
  std::uint64_t seed = 0;
};

/// Raised when a sampled system has fewer than n'(n - n') independent
/// conditions. Callers resample.
class DegenerateInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IncidenceInstance random_instance(std::uint64_t p, Int n, Int nprime, std::uint64_t seed);

/// The n'(n - n') x n^2 system W phi V1sub = 0, W a basis of the annihilator
/// of span(V2sub); phi is vectorised column-major.
fp::Matrix incidence_system(const IncidenceInstance& inst);

/// n^2 - rank of the incidence system.
Int incidence_dim(const IncidenceInstance& inst);

/// Counts pairs (V', phi V') over all n'-dimensional V' in F_p^n by explicit
/// enumeration. Requires p in {2, 3}, n <= 4 and phi invertible.
Int graph_count(std::uint64_t p, Int n, Int nprime, const fp::Matrix& phi);

/// Number of k-dimensional subspaces of F_q^n.
Int gaussian_binomial(Int n, Int k, Int q);

/// Fraction of `trials` uniformly random solutions of the incidence system of
/// random_instance(p, n, nprime, seed) that are invertible. Trial t draws from
/// its own stream seeded by (seed, t).
Rational invertibility_rate(std::uint64_t p, Int n, Int nprime, Int trials, std::uint64_t seed);

}  // namespace lange

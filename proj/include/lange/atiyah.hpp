#pragma once

// Bundle calculus on an elliptic curve: every indecomposable bundle is
// E(n, d) tensor L with E(n, d) the canonical indecomposable of rank n and
// degree d and L of degree zero. Everything here is exact integer/rational
// arithmetic on those labels.

#include "lange/twist.hpp"
#include "lange/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lange {

struct IndecomposableBundle {
  Int rank = 1;
  Int degree = 0;
  TwistClass twist;

  IndecomposableBundle(Int rank, Int degree, TwistClass twist = {});

  friend bool operator==(const IndecomposableBundle&, const IndecomposableBundle&) = default;

  std::string to_string() const;
};

/// Formal direct sum of indecomposables.
class BundleSum {
 public:
  /// `generic_twists` asserts that the summands sit at pairwise distinct generic
  /// points of Pic^0; it is checked against the stored free parts.
  BundleSum(std::vector<IndecomposableBundle> summands, bool generic_twists);

  /// Sum of E(n_j, d_j) twisted by fresh generators t1, t2, ...
  static BundleSum generic(const std::vector<std::pair<Int, Int>>& parts);

  const std::vector<IndecomposableBundle>& summands() const { return summands_; }
  bool generic_twists() const { return generic_twists_; }
  Int rank() const;
  Int degree() const;

 private:
  std::vector<IndecomposableBundle> summands_;
  bool generic_twists_;
};

struct GcdFactor {
  Int h;     // gcd(rank, degree)
  Int nbar;  // rank / h
  Int dbar;  // degree / h

  friend bool operator==(const GcdFactor&, const GcdFactor&) = default;
};

/// Rank and degree of a tensor product.
struct RankDegree {
  Int rank;
  Int degree;

  friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

Rational slope(const IndecomposableBundle& b);
Rational slope(const BundleSum& b);

/// E(n, d)^* = E(n, -d); the twist is inverted.
IndecomposableBundle dual(const IndecomposableBundle& b);

/// E(n, d) tensor L'.
IndecomposableBundle twisted(const IndecomposableBundle& b, const TwistClass& by);

/// E(n, d) = E(h, 0) tensor E(nbar, dbar) with gcd(nbar, dbar) = 1.
GcdFactor gcd_factor(const IndecomposableBundle& b);

/// Ranks of the degree-zero indecomposables in E(h, 0) tensor E(h2, 0):
/// |h - h2| + 1, |h - h2| + 3, ..., h + h2 - 1.
std::vector<Int> deg0_tensor_decompose(Int h, Int h2);

RankDegree tensor_invariants(const IndecomposableBundle& a, const IndecomposableBundle& b);

/// n_j d - n d_j for source (n_j, d_j) and target (n, d).
Int hom_delta(const IndecomposableBundle& source, const IndecomposableBundle& target);

/// dim Hom(source, target) = h^0(source^* tensor target).
///
/// Positive delta gives delta. Negative delta gives 0. At delta = 0 the map
/// space is nonzero only when the twist difference is torsion of order
/// dividing the coprime rank of the target, and then has dimension
/// min(gcd(n, d), gcd(n_j, d_j)).
Int hom_dim(const IndecomposableBundle& source, const IndecomposableBundle& target);

/// Common slope of the summands of source^* tensor target.
Rational hom_slope(const IndecomposableBundle& source, const IndecomposableBundle& target);

/// h^0(End E) for a sum at generic twists. Throws std::invalid_argument when
/// the sum does not carry the generic-twists flag.
Int end_h0(const BundleSum& e);

Int h0(const IndecomposableBundle& b);

/// Sufficient criterion (slope >= 1). Returns false below slope 1, where the
/// criterion is silent.
bool generically_globally_generated(const IndecomposableBundle& b);

}  // namespace lange

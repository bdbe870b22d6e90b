#pragma once

// Decomposition types of a rank-n', degree-d' bundle mapping to a fixed
// indecomposable E(n, d) on an elliptic curve, with the dimension count
// dim X + rk Hom <= (n'd - nd') + h^0(End E').

#include "lange/types.hpp"

#include <vector>

namespace lange {

struct Part {
  Int rank;
  Int degree;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Canonical order is rank descending, then degree descending.
inline bool canonical_before(const Part& a, const Part& b) {
  return a.rank != b.rank ? a.rank > b.rank : a.degree > b.degree;
}

struct SplittingType {
  std::vector<Part> parts;  // canonical order
  std::vector<bool> eps;    // part has the same slope as the ambient bundle
  Int dim_X = 0;
  Int rk_Hom = 0;
  Int h0_end = 0;
  bool balanced = false;

  Int k() const { return static_cast<Int>(parts.size()); }
};

struct BoundCheck {
  Int lhs;  // dim_X + rk_Hom
  Int rhs;  // (n'd - nd') + h0_end
  bool equality;
};

/// All decomposition types {(n_j, d_j)} with sum n_j = nprime, sum d_j = dprime
/// and n_j d - n d_j >= 0. Order is deterministic: larger leading parts first.
/// Requires 0 < nprime < n.
std::vector<SplittingType> enumerate_types(Int n, Int d, Int nprime, Int dprime);

/// Metrics for one part list against E(n, d); parts need not be canonical.
SplittingType make_type(Int n, Int d, std::vector<Part> parts);

/// Evaluates both sides of the dimension bound. Throws std::logic_error if the
/// bound fails, which would mean an inconsistent type.
BoundCheck type_bound_check(const SplittingType& t, Int n, Int d, Int nprime, Int dprime);

/// gcd(nprime, dprime) copies of the coprime part (nprime / h', dprime / h').
std::vector<Part> balanced_type(Int nprime, Int dprime);

}  // namespace lange

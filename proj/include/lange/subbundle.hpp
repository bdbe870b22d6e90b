#pragma once

// Subbundles of rank n' and degree d' of the generic polystable bundle
// E = E_1 + ... + E_h on an elliptic curve, h = gcd(n, d), each E_i generic
// indecomposable of rank n/h and degree d/h.

#include "lange/types.hpp"

#include <optional>

namespace lange {

/// n'd - nd'.
inline Int segre_gap(Int n, Int d, Int nprime, Int dprime) { return nprime * d - n * dprime; }

/// Dimension of the subbundle variety A(n', d', E); nullopt when it is empty.
std::optional<Int> dim_A(Int n, Int d, Int nprime, Int dprime);

/// When n'd - nd' = 0 every subbundle is a sum of h' = gcd(n', d') of the h
/// summands, so there are C(h, h') of them. nullopt otherwise.
std::optional<Int> equal_slope_subbundle_count(Int n, Int d, Int nprime, Int dprime);

struct QuotientProfile {
  Int rank;
  Int degree;
  Rational slope;
  bool equal_slope_summands;  // only the common slope is certified, not the ranks
};

QuotientProfile quotient_profile(Int n, Int d, Int nprime, Int dprime);

/// Behaviour of the evaluation maps pi_P: A -> G(n', E_P) and pi_P x pi_Q.
///
/// With s1 = n'd - nd' and c = n'(n - n'):
///   pi_P has finite fibres on the dominant component when s1 <= c,
///   pi_P is onto when s1 >= c, with fibres of dimension s1 - c,
///   pi_P x pi_Q has generic finite fibres when s1 <= 2c,
///   pi_P x pi_Q is onto when s1 >= 2c.
/// At s1 = c (and s1 = 2c) both neighbouring flags are set.
struct RegimeDescriptor {
  Int s1;
  Int c;
  bool finite_fibers_piP;
  bool surjective_piP;
  bool finite_fibers_piPQ;
  bool surjective_piPQ;
  std::optional<Int> fiber_dim_piP;  // set when surjective_piP
  Int image_dim_piP;
};

/// Throws std::invalid_argument when s1 < 0.
RegimeDescriptor regime(Int n, Int d, Int nprime, Int dprime);

/// Evaluates the three slope inequalities a non-injective generic map
/// E' -> E with kernel of rank n2, degree d2 would need:
///   (d - d')/(n - n') <= d2/n2 <= d'/n' < (d - d')/(n - n').
/// They are never simultaneously true. Requires 0 < n2 < nprime < n.
bool kernel_obstruction(Int n, Int d, Int nprime, Int dprime, Int n2, Int d2);

}  // namespace lange

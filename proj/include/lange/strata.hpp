#pragma once

// Segre-invariant numerology for stable bundles on a generic curve of genus g.
//
// s_{n'}(E) = n'd - n * max deg E' over rank-n' subbundles. For generic E,
// n'(n-n')(g-1) <= s_{n'}(E) <= n'(n-n')g. The expected dimension of the
// stratum {s_{n'} <= s} is d_{s,n'} = n^2(g-1) + 1 + s - n'(n-n')(g-1).

#include "lange/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lange {

struct StratumBounds {
  Int lower;  // n'(n-n')(g-1)
  Int upper;  // n'(n-n')g
};

enum class StratumStatus {
  infeasible_congruence,
  semistable_boundary,
  stratum_nonempty,
  generic_locus,
  above_upper_bound,
};

std::string to_string(StratumStatus s);

struct StratumReport {
  Int g = 0;
  Int n = 0;
  Int d = 0;
  Int nprime = 0;
  Int s = 0;
  std::optional<Int> dprime;  // (n'd - s)/n; absent on infeasible_congruence
  StratumStatus status = StratumStatus::infeasible_congruence;
  Int expected_dim = 0;         // d_{s,n'} as given by the formula
  Int expected_dim_capped = 0;  // min(d_{s,n'}, dim U(n,d))
  bool full = false;            // s >= lower bound: the stratum is all of U(n,d)
  bool boundary = false;        // s == lower bound: nonemptiness and generic facts both apply
  std::optional<Int> dim_A_generic;  // s - lower for s >= lower
  std::string regime_note;
};

Int segre(Int n, Int d, Int nprime, Int dprime_max);

StratumBounds stratum_bounds(Int g, Int n, Int nprime);

/// n^2(g-1) + 1.
Int moduli_dim(Int g, Int n);

Int expected_dim(Int g, Int n, Int s, Int nprime);

/// Rank of the bundle of extension classes, n'(n-n')(g-1) + n'd - nd'.
Int ext_space_rank(Int g, Int n, Int d, Int nprime, Int dprime);

struct CountIdentity {
  Int lhs;  // dim M' + dim M'' + rank of extensions - 1
  Int rhs;  // d_{s,n'}
};

/// Throws std::logic_error if the two sides disagree.
CountIdentity extension_count_identity(Int g, Int n, Int s, Int nprime);

/// One row for every s = n'd (mod n) with 0 <= s <= n'(n-n')g.
/// Throws std::invalid_argument for g < 2.
std::vector<StratumReport> strata_table(Int g, Int n, Int d, Int nprime);

/// Classifies a single s, including the infeasible_congruence and
/// above_upper_bound cases that strata_table never emits.
StratumReport classify_stratum(Int g, Int n, Int d, Int nprime, Int s);

enum class GluingVerdict { no_gluing, finite, positive_dim };

std::string to_string(GluingVerdict v);

/// Integer bookkeeping for gluing a genus-g bundle E_g with an elliptic tail
/// E_1 at one node, for a candidate rank-n' subbundle with degree dg on the
/// genus-g side and d1 on the elliptic side.
///
/// E_1 has degree `elliptic_degree` (0: a sum of n generic degree-zero line
/// bundles) and E_g has degree d - elliptic_degree. The images of the two
/// subbundle varieties in the Grassmannian at the node have dimensions
/// image_g and a_1; gluings identifying a pair form a set of dimension
/// dim_X = image_g + a_1 + n^2 - n'(n-n') inside the n^2-dimensional space of
/// gluings.
struct LedgerRecord {
  Int g, n, d, nprime, s, dprime;
  Int dg, d1, elliptic_degree;
  Int s_g;      // n' deg E_g - n dg
  Int a_g;      // dim A_g = s_g - n'(n-n')(g-1)
  Int image_g;  // min(a_g, n'(n-n'))
  Int s_1;      // n' deg E_1 - n d1
  Int a_1;      // image dimension on the elliptic side
  Int dim_X;
  Int dim_Is;   // n^2
  Int excess;   // dim_X - dim_Is; fibre dimension of a generic gluing when >= 0
  GluingVerdict verdict;
};

/// Rejects (std::invalid_argument) g < 2, s not congruent to n'd mod n,
/// dg + d1 < d', splits with s_g below the genus-g genericity bound
/// n'(n-n')(g-1), and splits where the elliptic side has no subbundles.
LedgerRecord degeneration_ledger(Int g, Int n, Int d, Int nprime, Int s, Int dg, Int d1,
                                 Int elliptic_degree = 0);

}  // namespace lange

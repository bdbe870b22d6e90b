#include "lange/strata.hpp"

#include "lange/subbundle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lange {
namespace {

void require_ranks(Int n, Int nprime) {
  if (!(0 < nprime && nprime < n)) throw std::invalid_argument("need 0 < nprime < n");
}

void require_genus_two(Int g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2 (use the elliptic-curve operations for g = 1)");
}

Int mod(Int a, Int m) { return a - m * floor_div(a, m); }

std::string generic_note(Int dim_a, Int c) {
  std::ostringstream os;
  if (dim_a == 0) {
    os << "finite number of subbundles";
  } else if (dim_a < c) {
    os << "pi_Q has generic finite fibers, image dim " << dim_a << " < " << c;
  } else if (dim_a == c) {
    os << "pi_Q onto G(n',E_Q) with finite fibers";
  } else {
    os << "pi_Q onto G(n',E_Q), fiber dim " << dim_a - c;
  }
  return os.str();
}

}  // namespace

std::string to_string(StratumStatus s) {
  switch (s) {
    case StratumStatus::infeasible_congruence: return "infeasible_congruence";
    case StratumStatus::semistable_boundary: return "semistable_boundary";
    case StratumStatus::stratum_nonempty: return "stratum_nonempty";
    case StratumStatus::generic_locus: return "generic_locus";
    case StratumStatus::above_upper_bound: return "above_upper_bound";
  }
  return "?";
}

std::string to_string(GluingVerdict v) {
  switch (v) {
    case GluingVerdict::no_gluing: return "no_gluing";
    case GluingVerdict::finite: return "finite";
    case GluingVerdict::positive_dim: return "positive_dim";
  }
  return "?";
}

Int segre(Int n, Int d, Int nprime, Int dprime_max) {
  require_ranks(n, nprime);
  return nprime * d - n * dprime_max;
}

StratumBounds stratum_bounds(Int g, Int n, Int nprime) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  require_ranks(n, nprime);
  const Int c = nprime * (n - nprime);
  return {c * (g - 1), c * g};
}

Int moduli_dim(Int g, Int n) { return n * n * (g - 1) + 1; }

Int expected_dim(Int g, Int n, Int s, Int nprime) {
  require_genus_two(g);
  require_ranks(n, nprime);
  return moduli_dim(g, n) + s - nprime * (n - nprime) * (g - 1);
}

Int ext_space_rank(Int g, Int n, Int d, Int nprime, Int dprime) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  require_ranks(n, nprime);
  return nprime * (n - nprime) * (g - 1) + (nprime * d - n * dprime);
}

CountIdentity extension_count_identity(Int g, Int n, Int s, Int nprime) {
  require_genus_two(g);
  require_ranks(n, nprime);
  const Int q = n - nprime;
  const Int sub_moduli = nprime * nprime * (g - 1) + 1;
  const Int quotient_moduli = q * q * (g - 1) + 1;
  const Int extensions = nprime * q * (g - 1) + s;  // projectivised below
  const CountIdentity out{sub_moduli + quotient_moduli + extensions - 1,
                          expected_dim(g, n, s, nprime)};
  if (out.lhs != out.rhs) throw std::logic_error("extension count identity failed");
  return out;
}

StratumReport classify_stratum(Int g, Int n, Int d, Int nprime, Int s) {
  require_genus_two(g);
  const StratumBounds b = stratum_bounds(g, n, nprime);
  const Int c = nprime * (n - nprime);

  StratumReport r;
  r.g = g;
  r.n = n;
  r.d = d;
  r.nprime = nprime;
  r.s = s;
  r.expected_dim = expected_dim(g, n, s, nprime);
  r.expected_dim_capped = std::min(r.expected_dim, moduli_dim(g, n));
  r.full = s >= b.lower;

  if (s < 0 || mod(nprime * d - s, n) != 0) {
    r.status = StratumStatus::infeasible_congruence;
    r.regime_note = "s must be >= 0 and congruent to n'd mod n";
    return r;
  }
  r.dprime = (nprime * d - s) / n;

  if (s > b.upper) {
    r.status = StratumStatus::above_upper_bound;
    r.regime_note = "every E has s_{n'}(E) <= n'(n-n')g";
    return r;
  }
  if (s >= b.lower) r.dim_A_generic = s - b.lower;

  if (s == 0) {
    r.status = StratumStatus::semistable_boundary;
    r.regime_note = "s = 0: strictly semistable boundary";
  } else if (s <= b.lower) {
    r.status = StratumStatus::stratum_nonempty;
    r.boundary = (s == b.lower);
    r.regime_note = "nonempty; some E has finitely many maximal subbundles";
    if (r.boundary) r.regime_note += "; generic E: " + generic_note(*r.dim_A_generic, c);
  } else {
    r.status = StratumStatus::generic_locus;
    r.regime_note = "generic E: " + generic_note(*r.dim_A_generic, c);
  }
  return r;
}

std::vector<StratumReport> strata_table(Int g, Int n, Int d, Int nprime) {
  require_genus_two(g);
  const StratumBounds b = stratum_bounds(g, n, nprime);
  std::vector<StratumReport> rows;
  for (Int s = mod(nprime * d, n); s <= b.upper; s += n) {
    rows.push_back(classify_stratum(g, n, d, nprime, s));
  }
  return rows;
}

LedgerRecord degeneration_ledger(Int g, Int n, Int d, Int nprime, Int s, Int dg, Int d1,
                                 Int elliptic_degree) {
  require_genus_two(g);
  require_ranks(n, nprime);
  if (s < 0 || mod(nprime * d - s, n) != 0) {
    throw std::invalid_argument("s must be >= 0 and congruent to n'd mod n");
  }
  const Int c = nprime * (n - nprime);
  const Int dprime = (nprime * d - s) / n;
  if (dg + d1 < dprime) throw std::invalid_argument("split degree dg + d1 is below d'");

  LedgerRecord r{};
  r.g = g;
  r.n = n;
  r.d = d;
  r.nprime = nprime;
  r.s = s;
  r.dprime = dprime;
  r.dg = dg;
  r.d1 = d1;
  r.elliptic_degree = elliptic_degree;

  r.s_g = nprime * (d - elliptic_degree) - n * dg;
  if (r.s_g < c * (g - 1)) {
    throw std::invalid_argument("split violates the genus-g genericity bound s_g >= n'(n-n')(g-1)");
  }
  r.a_g = r.s_g - c * (g - 1);
  r.image_g = std::min(r.a_g, c);

  r.s_1 = nprime * elliptic_degree - n * d1;
  if (r.s_1 < 0) throw std::invalid_argument("elliptic side has no subbundles of degree d1");
  r.a_1 = regime(n, elliptic_degree, nprime, d1).image_dim_piP;

  r.dim_Is = n * n;
  r.dim_X = r.image_g + r.a_1 + n * n - c;
  r.excess = r.dim_X - r.dim_Is;
  r.verdict = r.excess < 0    ? GluingVerdict::no_gluing
              : r.excess == 0 ? GluingVerdict::finite
                              : GluingVerdict::positive_dim;
  return r;
}

}  // namespace lange

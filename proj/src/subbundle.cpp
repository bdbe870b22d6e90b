#include "lange/subbundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lange {
namespace {

void require_ranks(Int n, Int nprime) {
  if (!(0 < nprime && nprime < n)) throw std::invalid_argument("need 0 < nprime < n");
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::optional<Int> dim_A(Int n, Int d, Int nprime, Int dprime) {
  require_ranks(n, nprime);
  const Int s1 = segre_gap(n, d, nprime, dprime);
  if (s1 < 0) return std::nullopt;
  return s1;
}

std::optional<Int> equal_slope_subbundle_count(Int n, Int d, Int nprime, Int dprime) {
  require_ranks(n, nprime);
  if (segre_gap(n, d, nprime, dprime) != 0) return std::nullopt;
  return binomial(gcd(n, d), gcd(nprime, dprime));
}

QuotientProfile quotient_profile(Int n, Int d, Int nprime, Int dprime) {
  if (!dim_A(n, d, nprime, dprime)) {
    throw std::invalid_argument("no subbundles of this rank and degree (n'd - nd' < 0)");
  }
  return {n - nprime, d - dprime, Rational(d - dprime, n - nprime), true};
}

RegimeDescriptor regime(Int n, Int d, Int nprime, Int dprime) {
  require_ranks(n, nprime);
  const Int s1 = segre_gap(n, d, nprime, dprime);
  if (s1 < 0) throw std::invalid_argument("regime needs n'd - nd' >= 0");
  const Int c = nprime * (n - nprime);

  RegimeDescriptor r{};
  r.s1 = s1;
  r.c = c;
  r.finite_fibers_piP = s1 <= c;
  r.surjective_piP = s1 >= c;
  r.finite_fibers_piPQ = s1 <= 2 * c;
  r.surjective_piPQ = s1 >= 2 * c;
  if (r.surjective_piP) r.fiber_dim_piP = s1 - c;
  r.image_dim_piP = std::min(s1, c);
  return r;
}

bool kernel_obstruction(Int n, Int d, Int nprime, Int dprime, Int n2, Int d2) {
  require_ranks(n, nprime);
  if (!(0 < n2 && n2 < nprime)) throw std::invalid_argument("need 0 < n2 < nprime");
  const Rational quotient_slope(d - dprime, n - nprime);
  const Rational kernel_slope(d2, n2);
  const Rational sub_slope(dprime, nprime);
  const bool quotient_below_kernel = quotient_slope <= kernel_slope;
  const bool kernel_below_sub = kernel_slope <= sub_slope;
  const bool sub_below_quotient = sub_slope < quotient_slope;
  return quotient_below_kernel && kernel_below_sub && sub_below_quotient;
}

}  // namespace lange

#include "lange/splitting.hpp"

#include "lange/atiyah.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lange {
namespace {

void require_ranks(Int n, Int nprime) {
  if (!(0 < nprime && nprime < n)) throw std::invalid_argument("need 0 < nprime < n");
}

// Largest degree a rank-m part can have while still mapping to E(n, d).
Int max_part_degree(Int m, Int n, Int d) { return floor_div(m * d, n); }

// Parts are emitted in canonical order: each part is not canonically before
// the previous one, so every multiset is produced exactly once.
void extend(Int n, Int d, Int rank_left, Int degree_left, std::optional<Part> prev,
            std::vector<Part>& current, std::vector<std::vector<Part>>& out) {
  if (rank_left == 0) {
    if (degree_left == 0) out.push_back(current);
    return;
  }
  const Int max_rank = prev ? std::min(prev->rank, rank_left) : rank_left;
  for (Int m = max_rank; m >= 1; --m) {
    Int hi = max_part_degree(m, n, d);
    if (prev && m == prev->rank) hi = std::min(hi, prev->degree);
    // The remaining rank can absorb at most floor((rank_left - m) d / n).
    const Int lo = degree_left - max_part_degree(rank_left - m, n, d);
    for (Int e = hi; e >= lo; --e) {
      current.push_back({m, e});
      extend(n, d, rank_left - m, degree_left - e, Part{m, e}, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

SplittingType make_type(Int n, Int d, std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), canonical_before);
  const IndecomposableBundle ambient(n, d);

  SplittingType t;
  t.parts = std::move(parts);
  std::vector<std::pair<Int, Int>> pairs;
  Int nprime = 0;
  Int dprime = 0;
  for (const Part& p : t.parts) {
    // The identity twist on each part is one of the admissible torsion
    // choices at delta = 0 and irrelevant at delta > 0.
    const IndecomposableBundle source(p.rank, p.degree);
    const Int delta = hom_delta(source, ambient);
    if (delta < 0) throw std::invalid_argument("part does not map to the ambient bundle");
    t.eps.push_back(delta == 0);
    t.rk_Hom += hom_dim(source, ambient);
    pairs.emplace_back(p.rank, p.degree);
    nprime += p.rank;
    dprime += p.degree;
  }
  const Int eps_count = std::count(t.eps.begin(), t.eps.end(), true);
  t.dim_X = t.k() - eps_count;
  t.h0_end = end_h0(BundleSum::generic(pairs));
  t.balanced = (t.parts == balanced_type(nprime, dprime));
  return t;
}

std::vector<SplittingType> enumerate_types(Int n, Int d, Int nprime, Int dprime) {
  require_ranks(n, nprime);
  std::vector<std::vector<Part>> lists;
  std::vector<Part> current;
  current.reserve(static_cast<std::size_t>(nprime));
  extend(n, d, nprime, dprime, std::nullopt, current, lists);

  std::vector<SplittingType> out;
  out.reserve(lists.size());
  for (auto& parts : lists) out.push_back(make_type(n, d, std::move(parts)));
  return out;
}

BoundCheck type_bound_check(const SplittingType& t, Int n, Int d, Int nprime, Int dprime) {
  require_ranks(n, nprime);
  const BoundCheck c{t.dim_X + t.rk_Hom, (nprime * d - n * dprime) + t.h0_end, false};
  if (c.lhs > c.rhs) throw std::logic_error("dimension bound violated by splitting type");
  return {c.lhs, c.rhs, c.lhs == c.rhs};
}

std::vector<Part> balanced_type(Int nprime, Int dprime) {
  if (nprime < 1) throw std::invalid_argument("nprime must be >= 1");
  const Int h = gcd(nprime, dprime);
  return std::vector<Part>(static_cast<std::size_t>(h), Part{nprime / h, dprime / h});
}

}  // namespace lange

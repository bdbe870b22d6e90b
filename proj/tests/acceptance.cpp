// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "lange/atiyah.hpp"
#include "lange/cli.hpp"
#include "lange/gluing.hpp"
#include "lange/splitting.hpp"
#include "lange/strata.hpp"
#include "lange/subbundle.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace lange;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome tensor_conservation() {
  Outcome o;
  Int checked = 0;
  for (Int h = 1; h <= 30; ++h) {
    for (Int h2 = 1; h2 <= 30; ++h2) {
      const auto parts = deg0_tensor_decompose(h, h2);
      if (static_cast<Int>(parts.size()) != std::min(h, h2)) o.fail("summand count at " + std::to_string(h) + "," + std::to_string(h2));
      if (std::accumulate(parts.begin(), parts.end(), Int{0}) != h * h2) o.fail("rank sum at " + std::to_string(h) + "," + std::to_string(h2));
      if (parts != deg0_tensor_decompose(h2, h)) o.fail("asymmetry at " + std::to_string(h) + "," + std::to_string(h2));
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " pairs";
  return o;
}

Outcome hom_riemann_roch() {
  Outcome o;
  std::mt19937_64 rng(20240);
  std::uniform_int_distribution<Int> rank(1, 8), degree(-12, 12);
  int pairs = 0;
  while (pairs < 500) {
    const IndecomposableBundle src(rank(rng), degree(rng), TwistClass::generic("a"));
    const IndecomposableBundle tgt(rank(rng), degree(rng), TwistClass::generic("b"));
    const Int delta = hom_delta(src, tgt);
    if (delta <= 0) continue;
    ++pairs;
    const RankDegree hom = tensor_invariants(dual(src), tgt);
    if (hom_dim(src, tgt) != hom.degree) o.fail("hom_dim vs degree for " + src.to_string() + " -> " + tgt.to_string());
    if (hom_slope(src, tgt) * Rational(src.rank * tgt.rank) != Rational(delta)) o.fail("slope for " + src.to_string());
  }
  if (o.ok) o.detail = "500 pairs";
  return o;
}

// d' from the slope ceiling down through s1 = 2c + n, plus two empty rows above.
template <typename F>
void for_grid(F&& f) {
  for (Int n = 2; n <= 6; ++n) {
    for (Int d = -6; d <= 6; ++d) {
      for (Int np = 1; np < n; ++np) {
        const Int top = floor_div(np * d, n);
        const Int c = np * (n - np);
        for (Int dp = top + 2; np * d - n * dp <= 2 * c + n; --dp) f(n, d, np, dp);
      }
    }
  }
}

Outcome splitting_bound() {
  Outcome o;
  Int types = 0;
  for_grid([&](Int n, Int d, Int np, Int dp) {
    const Int s1 = np * d - n * dp;
    bool balanced_seen = false;
    for (const auto& t : enumerate_types(n, d, np, dp)) {
      ++types;
      BoundCheck b{};
      try {
        b = type_bound_check(t, n, d, np, dp);
      } catch (const std::logic_error&) {
        o.fail("bound violated");
        continue;
      }
      if (t.balanced) {
        balanced_seen = true;
        if (s1 > 0 && !b.equality) o.fail("no equality at balanced type");
      }
      if (b.equality) {
        for (const auto& p : t.parts) {
          if (Rational(p.degree, p.rank) != Rational(t.parts[0].degree, t.parts[0].rank)) o.fail("equality with unequal slopes");
        }
      }
    }
    if (s1 >= 0 && !balanced_seen) o.fail("balanced type missing");
  });
  if (o.ok) o.detail = std::to_string(types) + " splitting types";
  return o;
}

Outcome dim_and_regimes() {
  Outcome o;
  Int points = 0;
  for_grid([&](Int n, Int d, Int np, Int dp) {
    ++points;
    const Int s1 = np * d - n * dp;
    const auto a = dim_A(n, d, np, dp);
    if (a.has_value() != (s1 >= 0) || (a && *a != s1)) o.fail("dim_A");
    if (s1 < 0) return;
    const auto r = regime(n, d, np, dp);
    const Int c = np * (n - np);
    if (r.finite_fibers_piP != (s1 <= c) || r.surjective_piP != (s1 >= c) || r.finite_fibers_piPQ != (s1 <= 2 * c) ||
        r.surjective_piPQ != (s1 >= 2 * c))
      o.fail("threshold");
    if (s1 == c && !(r.finite_fibers_piP && r.surjective_piP)) o.fail("overlap at s1 = c");
    if (r.image_dim_piP != std::min(s1, c)) o.fail("image dimension");
    // Next d' down raises s1 by n: surjectivity stays, finiteness never returns.
    const auto next = regime(n, d, np, dp - 1);
    if ((r.surjective_piP && !next.surjective_piP) || (r.surjective_piPQ && !next.surjective_piPQ) ||
        (!r.finite_fibers_piP && next.finite_fibers_piP) || (!r.finite_fibers_piPQ && next.finite_fibers_piPQ))
      o.fail("monotonicity");
  });
  if (o.ok) o.detail = std::to_string(points) + " grid points";
  return o;
}

Outcome kernel_incompatibility() {
  Outcome o;
  Int tuples = 0;
  for_grid([&](Int n, Int d, Int np, Int dp) {
    if (np * d - n * dp <= 0) return;
    for (Int n2 = 1; n2 < np; ++n2) {
      for (Int d2 = -6; d2 <= 6; ++d2) {
        ++tuples;
        if (kernel_obstruction(n, d, np, dp, n2, d2)) o.fail("satisfiable");
      }
    }
  });
  if (o.ok) o.detail = std::to_string(tuples) + " tuples";
  return o;
}

Outcome count_identity() {
  Outcome o;
  Int checked = 0;
  for (Int g = 2; g <= 10; ++g) {
    for (Int n = 2; n <= 8; ++n) {
      for (Int np = 1; np < n; ++np) {
        for (Int s = 0; s <= n * n; ++s) {
          try {
            const auto r = extension_count_identity(g, n, s, np);
            if (r.lhs != r.rhs) o.fail("mismatch");
          } catch (const std::logic_error&) {
            o.fail("mismatch");
          }
          ++checked;
        }
      }
    }
  }
  const auto ex = extension_count_identity(2, 2, 1, 1);
  if (ex.lhs != 5 || ex.rhs != 5) o.fail("(2,2,1,1) is not 5 = 5");
  if (o.ok) o.detail = std::to_string(checked) + " cases";
  return o;
}

Outcome strata_spot_checks() {
  Outcome o;
  const auto a = strata_table(2, 2, 1, 1);
  if (a.size() != 1 || a[0].s != 1 || a[0].expected_dim != 5 || moduli_dim(2, 2) != 5 || a[0].dim_A_generic != 0 ||
      a[0].regime_note.find("finite number of subbundles") == std::string::npos)
    o.fail("(2,2,1,1)");
  const auto b = strata_table(2, 2, 0, 1);
  bool found = false;
  for (const auto& row : b) {
    if (row.s == 2 && row.dim_A_generic == 1) found = true;
  }
  if (!found) o.fail("(2,2,0,1)");
  if (o.ok) o.detail = "(2,2,1,1) and (2,2,0,1)";
  return o;
}

Outcome incidence_oracle() {
  Outcome o;
  const std::uint64_t p = 10007;
  int instances = 0, degenerate = 0;
  for (Int n = 2; n <= 6; ++n) {
    for (Int np = 1; np < n; ++np) {
      int good = 0;
      for (std::uint64_t seed = 0; good < 20; ++seed) {
        try {
          const Int dim = incidence_dim(random_instance(p, n, np, seed));
          ++good;
          ++instances;
          if (dim != n * n - np * (n - np)) o.fail("incidence dim at n=" + std::to_string(n));
        } catch (const DegenerateInstance&) {
          ++degenerate;
        }
      }
    }
  }

  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2ull, 3ull}) {
    for (Int n = 2; n <= 4; ++n) {
      for (Int np = 1; np < n; ++np) {
        fp::Matrix phi;
        do {
          phi = fp::random_matrix(n, n, q, rng);
        } while (fp::rank(phi, q) < n);
        if (graph_count(q, n, np, phi) != gaussian_binomial(n, np, static_cast<Int>(q))) o.fail("graph count");
      }
    }
  }

  Rational worst(1);
  for (Int n = 2; n <= 6; ++n) {
    for (Int np = 1; np < n; ++np) worst = std::min(worst, invertibility_rate(p, n, np, 1000, 7));
  }
  if (worst < Rational(99, 100)) o.fail("invertibility rate " + to_string(worst));
  if (o.ok) {
    o.detail = std::to_string(instances) + " instances, " + std::to_string(degenerate) +
               " resampled, min rate " + to_string(worst);
  }
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> cases = {
      {"--seed", "17", "verify-gluing", "--n", "5", "--nprime", "2"},
      {"--seed", "4", "graph-count", "--n", "4", "--nprime", "2", "--p", "3"},
      {"strata", "--g", "3", "--n", "4", "--d", "1", "--nprime", "2"},
      {"splittings", "--n", "6", "--d", "4", "--nprime", "4", "--dprime", "2"},
      {"ledger", "--g", "2", "--n", "2", "--d", "0", "--nprime", "1", "--s", "2", "--dg", "-1", "--d1", "0"},
  };
  int runs = 0;
  for (const auto& base : cases) {
    for (const char* f : {"json", "csv", "md"}) {
      auto args = base;
      args.push_back("--format");
      args.push_back(f);
      std::ostringstream first, second, err;
      const int c1 = cli::run(args, first, err);
      const int c2 = cli::run(args, second, err);
      runs += 2;
      if (c1 != 0 || c2 != 0) o.fail("nonzero exit");
      if (first.str() != second.str() || first.str().empty()) o.fail("output differs");
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"degree-zero tensor decomposition conservation", tensor_conservation},
      {"hom dimension matches Riemann-Roch", hom_riemann_roch},
      {"splitting-type dimension bound", splitting_bound},
      {"subbundle dimension and regime thresholds", dim_and_regimes},
      {"slope inequalities incompatible for s1 > 0", kernel_incompatibility},
      {"extension count identity", count_identity},
      {"strata table spot checks", strata_spot_checks},
      {"incidence dimension oracle over F_p", incidence_oracle},
      {"CLI determinism", cli_determinism},
  };

  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << index << ". " << c.name << " (" << r.detail << ", " << ms << " ms)\n";
    if (!r.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}

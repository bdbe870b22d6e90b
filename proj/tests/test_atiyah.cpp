#include "lange/atiyah.hpp"

#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

using namespace lange;

namespace {

TwistClass random_twist(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<Int> den(1, 7);
  TwistClass t;
  if (coin(rng) == 0) t = t + TwistClass::generic("a");
  if (coin(rng) == 0) t = t - TwistClass::generic("b");
  const Int q = den(rng);
  std::uniform_int_distribution<Int> num(-20, 20);
  return t + TwistClass::torsion(Rational(num(rng), q), Rational(num(rng), q));
}

IndecomposableBundle random_bundle(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> rank(1, 8);
  std::uniform_int_distribution<Int> degree(-12, 12);
  const Int n = rank(rng);
  return IndecomposableBundle(n, degree(rng), random_twist(rng));
}

}  // namespace

TEST_CASE("twist group laws") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const TwistClass a = random_twist(rng);
    const TwistClass b = random_twist(rng);
    const TwistClass c = random_twist(rng);
    CHECK((a + (-a)).is_identity());
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + TwistClass::identity() == a);
    const TwistClass sum = a + b;
    for (const auto& [sym, coeff] : sum.free_part()) CHECK(coeff != 0);
    for (const auto& r : a.torsion_part()) {
      CHECK(r >= 0);
      CHECK(r < 1);
    }
  }
}

TEST_CASE("torsion components are reduced into [0,1)") {
  const TwistClass t = TwistClass::torsion(Rational(-1, 3), Rational(7, 2));
  CHECK(t.torsion_part()[0] == Rational(2, 3));
  CHECK(t.torsion_part()[1] == Rational(1, 2));
  CHECK(TwistClass::torsion(Rational(1), Rational(-2)).is_identity());
}

TEST_CASE("torsion of order dividing m") {
  for (Int m = 1; m <= 6; ++m) {
    const auto classes = torsion_classes(m);
    CHECK(classes.size() == static_cast<std::size_t>(m * m));
    // Count the m-torsion inside the (m*k)-torsion.
    for (Int k = 1; k <= 3; ++k) {
      Int count = 0;
      for (const auto& t : torsion_classes(m * k)) count += is_torsion_of_order_dividing(t, m) ? 1 : 0;
      CHECK(count == m * m);
    }
  }
  CHECK_FALSE(is_torsion_of_order_dividing(TwistClass::generic("x"), 5));
  CHECK(is_torsion_of_order_dividing(TwistClass::torsion(Rational(1, 2), Rational(0)), 4));
  CHECK_FALSE(is_torsion_of_order_dividing(TwistClass::torsion(Rational(1, 3), Rational(0)), 4));
}

TEST_CASE("bundle construction rejects rank < 1") {
  CHECK_THROWS_AS(IndecomposableBundle(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(BundleSum({}, false), std::invalid_argument);
}

TEST_CASE("slope") {
  CHECK(slope(IndecomposableBundle(2, 1)) == Rational(1, 2));
  CHECK(slope(IndecomposableBundle(3, 0)) == 0);
  CHECK(slope(BundleSum::generic({{1, 2}, {1, 0}})) == 1);
}

TEST_CASE("dual") {
  const TwistClass l = TwistClass::generic("L");
  const auto d = dual(IndecomposableBundle(2, 1, l));
  CHECK(d == IndecomposableBundle(2, -1, -l));
  CHECK(dual(IndecomposableBundle(1, 0)) == IndecomposableBundle(1, 0));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_bundle(rng);
    CHECK(dual(dual(b)) == b);
  }
}

TEST_CASE("gcd_factor") {
  CHECK(gcd_factor(IndecomposableBundle(4, 2)) == GcdFactor{2, 2, 1});
  CHECK(gcd_factor(IndecomposableBundle(3, 0)) == GcdFactor{3, 1, 0});
  CHECK(gcd_factor(IndecomposableBundle(5, 3)) == GcdFactor{1, 5, 3});
  CHECK(gcd_factor(IndecomposableBundle(4, -6)) == GcdFactor{2, 2, -3});
}

TEST_CASE("degree-zero tensor decomposition") {
  CHECK(deg0_tensor_decompose(2, 2) == std::vector<Int>{1, 3});
  CHECK(deg0_tensor_decompose(1, 5) == std::vector<Int>{5});
  CHECK(deg0_tensor_decompose(3, 2) == std::vector<Int>{2, 4});
  CHECK_THROWS_AS(deg0_tensor_decompose(0, 2), std::invalid_argument);
}

TEST_CASE("hom_dim cases") {
  const TwistClass l = TwistClass::generic("L");
  const TwistClass m = TwistClass::generic("M");
  // delta > 0
  CHECK(hom_dim(IndecomposableBundle(1, 0, m), IndecomposableBundle(2, 1, l)) == 1);
  // delta = 0, same twist; and generic distinct twists
  CHECK(hom_dim(IndecomposableBundle(1, 0, l), IndecomposableBundle(2, 0, l)) == 1);
  CHECK(hom_dim(IndecomposableBundle(1, 0, m), IndecomposableBundle(2, 0, l)) == 0);
  // delta < 0
  CHECK(hom_dim(IndecomposableBundle(1, 1), IndecomposableBundle(2, 1)) == 0);
}

TEST_CASE("hom_dim at equal slope sees exactly the nbar-torsion") {
  // Target E(2,1): coprime, nbar = 2. Four torsion twists give a nonzero map space.
  const IndecomposableBundle target(2, 1);
  Int nonzero = 0;
  for (const auto& t : torsion_classes(6)) nonzero += hom_dim(IndecomposableBundle(2, 1, t), target) > 0 ? 1 : 0;
  CHECK(nonzero == 4);

  // Target E(6,3) = E(3,0) x E(2,1): h = 3, nbar = 2; source E(4,2): h = 2.
  const IndecomposableBundle big(6, 3);
  CHECK(hom_dim(IndecomposableBundle(4, 2, TwistClass::torsion(Rational(1, 2), Rational(1, 2))), big) == 2);
  CHECK(hom_dim(IndecomposableBundle(4, 2, TwistClass::torsion(Rational(1, 3), Rational(0))), big) == 0);
  CHECK(hom_dim(IndecomposableBundle(4, 2, TwistClass::generic("z")), big) == 0);
}

TEST_CASE("hom_slope") {
  CHECK(hom_slope(IndecomposableBundle(1, 0), IndecomposableBundle(2, 1)) == Rational(1, 2));
  CHECK(hom_slope(IndecomposableBundle(3, 2), IndecomposableBundle(3, 2)) == 0);
  CHECK(hom_slope(IndecomposableBundle(2, 1), IndecomposableBundle(3, 2)) == Rational(1, 6));
}

TEST_CASE("hom_dim equals degree of the hom bundle when delta > 0") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 300) {
    const auto src = random_bundle(rng);
    const auto tgt = random_bundle(rng);
    const Int delta = hom_delta(src, tgt);
    if (delta <= 0) continue;
    const RankDegree hb = tensor_invariants(dual(src), tgt);
    CHECK(hom_dim(src, tgt) == hb.degree);
    CHECK(hb.rank == src.rank * tgt.rank);
    CHECK(hom_slope(src, tgt) == Rational(hb.degree, hb.rank));
    ++checked;
  }
}

TEST_CASE("hom to a generic non-torsion twist of itself vanishes") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto b = random_bundle(rng);
    CHECK(hom_dim(b, twisted(b, TwistClass::generic("fresh"))) == 0);
    CHECK(hom_dim(b, b) == gcd_factor(b).h);
  }
}

TEST_CASE("end_h0") {
  CHECK(end_h0(BundleSum::generic({{4, 2}})) == 2);
  CHECK(end_h0(BundleSum::generic({{6, 0}})) == 6);
  CHECK(end_h0(BundleSum::generic({{1, 0}, {1, 1}})) == 3);
  CHECK(end_h0(BundleSum::generic({{3, 2}, {3, 2}})) == 2);
  // Cross-term sum matches the pairwise |n2 d1 - n1 d2| formula.
  CHECK(end_h0(BundleSum::generic({{2, 1}, {1, 0}, {1, 3}})) == 1 + 1 + 1 + 1 + 5 + 3);

  const BundleSum special({IndecomposableBundle(1, 0), IndecomposableBundle(1, 0)}, false);
  CHECK_THROWS_AS(end_h0(special), std::invalid_argument);
  CHECK_THROWS_AS(BundleSum({IndecomposableBundle(1, 0), IndecomposableBundle(1, 0)}, true),
                  std::invalid_argument);
}

TEST_CASE("end_h0 of a single indecomposable is gcd(rank, degree)") {
  for (Int n = 1; n <= 10; ++n) {
    for (Int d = -10; d <= 10; ++d) CHECK(end_h0(BundleSum::generic({{n, d}})) == std::gcd(n, d));
  }
}

TEST_CASE("h0") {
  CHECK(h0(IndecomposableBundle(3, 2, TwistClass::generic("L"))) == 2);
  CHECK(h0(IndecomposableBundle(4, 0)) == 1);
  CHECK(h0(IndecomposableBundle(4, 0, TwistClass::generic("L"))) == 0);
  CHECK(h0(IndecomposableBundle(4, 0, TwistClass::torsion(Rational(1, 2), Rational(0)))) == 0);
  CHECK(h0(IndecomposableBundle(2, -1)) == 0);
  // Agrees with Hom from the trivial line bundle.
  for (Int n = 1; n <= 6; ++n) {
    for (Int d = -6; d <= 6; ++d) {
      const IndecomposableBundle b(n, d);
      CHECK(h0(b) == hom_dim(IndecomposableBundle(1, 0), b));
    }
  }
}

TEST_CASE("generically globally generated") {
  CHECK(generically_globally_generated(IndecomposableBundle(3, 3)));
  CHECK_FALSE(generically_globally_generated(IndecomposableBundle(3, 2)));
  CHECK(generically_globally_generated(IndecomposableBundle(1, 1)));
}

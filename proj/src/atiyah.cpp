#include "lange/atiyah.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lange {

IndecomposableBundle::IndecomposableBundle(Int rank_, Int degree_, TwistClass twist_)
    : rank(rank_), degree(degree_), twist(std::move(twist_)) {
  if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
}

std::string IndecomposableBundle::to_string() const {
  std::ostringstream os;
  os << "E(" << rank << "," << degree << ")";
  if (!twist.is_identity()) os << "*" << twist.to_string();
  return os.str();
}

BundleSum::BundleSum(std::vector<IndecomposableBundle> summands, bool generic_twists)
    : summands_(std::move(summands)), generic_twists_(generic_twists) {
  if (summands_.empty()) throw std::invalid_argument("bundle sum needs at least one summand");
  if (generic_twists_ && summands_.size() > 1) {
    std::set<std::map<std::string, Int>> seen;
    for (const auto& b : summands_) {
      if (b.twist.free_part().empty() || !seen.insert(b.twist.free_part()).second) {
        throw std::invalid_argument("generic_twists requires pairwise distinct generic free parts");
      }
    }
  }
}

BundleSum BundleSum::generic(const std::vector<std::pair<Int, Int>>& parts) {
  std::vector<IndecomposableBundle> summands;
  summands.reserve(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    summands.emplace_back(parts[j].first, parts[j].second,
                          TwistClass::generic("t" + std::to_string(j + 1)));
  }
  return BundleSum(std::move(summands), true);
}

Int BundleSum::rank() const {
  Int r = 0;
  for (const auto& b : summands_) r += b.rank;
  return r;
}

Int BundleSum::degree() const {
  Int d = 0;
  for (const auto& b : summands_) d += b.degree;
  return d;
}

Rational slope(const IndecomposableBundle& b) { return Rational(b.degree, b.rank); }

Rational slope(const BundleSum& b) { return Rational(b.degree(), b.rank()); }

IndecomposableBundle dual(const IndecomposableBundle& b) {
  return IndecomposableBundle(b.rank, -b.degree, -b.twist);
}

IndecomposableBundle twisted(const IndecomposableBundle& b, const TwistClass& by) {
  return IndecomposableBundle(b.rank, b.degree, b.twist + by);
}

GcdFactor gcd_factor(const IndecomposableBundle& b) {
  const Int h = gcd(b.rank, b.degree);
  return {h, b.rank / h, b.degree / h};
}

std::vector<Int> deg0_tensor_decompose(Int h, Int h2) {
  if (h < 1 || h2 < 1) throw std::invalid_argument("degree-zero tensor ranks must be >= 1");
  std::vector<Int> ranks;
  for (Int r = (h > h2 ? h - h2 : h2 - h) + 1; r <= h + h2 - 1; r += 2) ranks.push_back(r);
  return ranks;
}

RankDegree tensor_invariants(const IndecomposableBundle& a, const IndecomposableBundle& b) {
  return {a.rank * b.rank, a.rank * b.degree + b.rank * a.degree};
}

Int hom_delta(const IndecomposableBundle& source, const IndecomposableBundle& target) {
  return source.rank * target.degree - target.rank * source.degree;
}

Int hom_dim(const IndecomposableBundle& source, const IndecomposableBundle& target) {
  const Int delta = hom_delta(source, target);
  if (delta < 0) return 0;
  if (delta > 0) return delta;
  const GcdFactor t = gcd_factor(target);
  const GcdFactor s = gcd_factor(source);
  if (!is_torsion_of_order_dividing(source.twist - target.twist, t.nbar)) return 0;
  return std::min(t.h, s.h);
}

Rational hom_slope(const IndecomposableBundle& source, const IndecomposableBundle& target) {
  return Rational(hom_delta(source, target), source.rank * target.rank);
}

Int end_h0(const BundleSum& e) {
  if (!e.generic_twists()) {
    throw std::invalid_argument("end_h0 is only determined at generic twists");
  }
  const auto& parts = e.summands();
  Int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) total += hom_dim(parts[i], parts[j]);
  }
  return total;
}

Int h0(const IndecomposableBundle& b) {
  if (b.degree > 0) return b.degree;
  if (b.degree == 0) return b.twist.is_identity() ? 1 : 0;
  return 0;
}

bool generically_globally_generated(const IndecomposableBundle& b) { return slope(b) >= 1; }

}  // namespace lange

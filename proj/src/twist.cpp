#include "lange/twist.hpp"

#include <sstream>
#include <stdexcept>

namespace lange {

TwistClass TwistClass::generic(const std::string& symbol) {
  TwistClass t;
  t.free_[symbol] = 1;
  return t;
}

TwistClass TwistClass::torsion(const Rational& a, const Rational& b) {
  TwistClass t;
  t.torsion_ = {frac(a), frac(b)};
  return t;
}

bool TwistClass::is_identity() const {
  return free_.empty() && torsion_[0] == 0 && torsion_[1] == 0;
}

TwistClass TwistClass::operator+(const TwistClass& other) const {
  TwistClass out = *this;
  for (const auto& [symbol, coeff] : other.free_) {
    Int& slot = out.free_[symbol];
    slot += coeff;
    if (slot == 0) out.free_.erase(symbol);
  }
  out.torsion_ = {frac(torsion_[0] + other.torsion_[0]), frac(torsion_[1] + other.torsion_[1])};
  return out;
}

TwistClass TwistClass::operator-() const {
  TwistClass out;
  for (const auto& [symbol, coeff] : free_) out.free_[symbol] = -coeff;
  out.torsion_ = {frac(-torsion_[0]), frac(-torsion_[1])};
  return out;
}

std::string TwistClass::to_string() const {
  if (is_identity()) return "O";
  std::ostringstream os;
  bool first = true;
  for (const auto& [symbol, coeff] : free_) {
    if (!first) os << "+";
    first = false;
    if (coeff != 1) os << coeff << "*";
    os << symbol;
  }
  if (torsion_[0] != 0 || torsion_[1] != 0) {
    if (!first) os << "+";
    os << "(" << lange::to_string(torsion_[0]) << "," << lange::to_string(torsion_[1]) << ")";
  }
  return os.str();
}

bool is_torsion_of_order_dividing(const TwistClass& t, Int m) {
  if (m < 1) throw std::invalid_argument("torsion order must be positive");
  if (!t.is_torsion()) return false;
  for (const auto& c : t.torsion_part()) {
    if ((c * m).denominator() != 1) return false;
  }
  return true;
}

std::vector<TwistClass> torsion_classes(Int m) {
  if (m < 1) throw std::invalid_argument("torsion order must be positive");
  std::vector<TwistClass> out;
  out.reserve(static_cast<std::size_t>(m * m));
  for (Int a = 0; a < m; ++a) {
    for (Int b = 0; b < m; ++b) out.push_back(TwistClass::torsion(Rational(a, m), Rational(b, m)));
  }
  return out;
}

}  // namespace lange

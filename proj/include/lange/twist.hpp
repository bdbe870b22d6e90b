#pragma once

#include "lange/types.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace lange {

/// A degree-zero line bundle class on an elliptic curve.
///
/// Pic^0 is modelled as a free abelian group on named generic points plus the
/// torsion group (Q/Z)^2. The two questions the bundle calculus asks of a twist
/// ("same free part?" and "torsion of order dividing m?") are decidable here.
class TwistClass {
 public:
  TwistClass() = default;

  static TwistClass identity() { return {}; }
  /// A fresh generic point, i.e. a free generator with coefficient one.
  static TwistClass generic(const std::string& symbol);
  /// The torsion point (a, b) of (Q/Z)^2; components are reduced into [0, 1).
  static TwistClass torsion(const Rational& a, const Rational& b);

  const std::map<std::string, Int>& free_part() const { return free_; }
  const std::array<Rational, 2>& torsion_part() const { return torsion_; }

  bool is_identity() const;
  bool is_torsion() const { return free_.empty(); }

  TwistClass operator+(const TwistClass& other) const;
  TwistClass operator-() const;
  TwistClass operator-(const TwistClass& other) const { return *this + (-other); }

  friend bool operator==(const TwistClass&, const TwistClass&) = default;

  std::string to_string() const;

 private:
  std::map<std::string, Int> free_;
  std::array<Rational, 2> torsion_{};
};

/// True iff `t` is torsion and m * t = 0.
bool is_torsion_of_order_dividing(const TwistClass& t, Int m);

/// All m^2 torsion classes killed by m.
std::vector<TwistClass> torsion_classes(Int m);

}  // namespace lange

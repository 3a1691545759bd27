#pragma once

// Short Weierstrass curves Y^2 = X^3 + A X + B over Q, with points over Q or
// over a quadratic field Q(sqrt d). All arithmetic is affine and exact.

#include "sumprod/exact.hpp"
#include "sumprod/quad.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumprod {

class Curve {
 public:
  /// Throws std::invalid_argument for a singular curve (4A^3 + 27B^2 = 0).
  Curve(const Rat& a, const Rat& b);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_integral() const { return is_integer(a_) && is_integer(b_); }

  /// x^3 + A x + B
  QuadElem rhs(const QuadElem& x) const;

  friend bool operator==(const Curve& l, const Curve& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

 private:
  Rat a_;
  Rat b_;
};

/// -16 (4 A^3 + 27 B^2)
Rat curve_discriminant(const Rat& a, const Rat& b);
inline Rat curve_discriminant(const Curve& c) { return curve_discriminant(c.a(), c.b()); }

class Point {
 public:
  /// The point at infinity.
  Point() = default;
  Point(QuadElem x, QuadElem y);

  static Point infinity() { return {}; }

  bool is_infinity() const { return infinity_; }
  /// Both throw std::logic_error on the point at infinity.
  const QuadElem& x() const;
  const QuadElem& y() const;

  /// Shared field of both coordinates, 0 when both are rational.
  Int field() const;
  bool is_rational() const { return infinity_ || (x_.is_rational() && y_.is_rational()); }

  friend bool operator==(const Point& p, const Point& q);

 private:
  bool infinity_ = true;
  QuadElem x_;
  QuadElem y_;
};

/// Infinity first, then by x, then by y.
bool point_less(const Point& p, const Point& q);

std::string to_string(const Point& p);

bool on_curve(const Curve& c, const Point& p);

// Group law. Inputs that are not on the curve raise std::invalid_argument.
Point ec_neg(const Curve& c, const Point& p);
Point ec_add(const Curve& c, const Point& p, const Point& q);
Point ec_double(const Curve& c, const Point& p);
Point ec_scalar_mul(const Curve& c, const Point& p, long k);

/// Galois conjugate (x', y').
Point conj(const Point& p);

/// sigma(P) = P + P'. The result is rational or infinity.
Point trace_map(const Curve& c, const Point& p);

/// Y^2 = X^3 + A d^2 X + B d^3. Throws unless d is square-free and nonzero;
/// d = 1 returns the curve unchanged.
Curve quadratic_twist(const Curve& c, const Int& d);

/// (x, l*sqrt d) on c over Q(sqrt d)  ->  (d x, d^2 l) on the twist by d.
/// For d = 1 the point must be rational. Throws on precondition violation.
Point twist_point_map(const Curve& c, const Point& p, const Int& d);

/// Inverse of twist_point_map: (X, Y) on the twist -> (X / d, (Y / d^2) sqrt d).
Point untwist_point(const Curve& c, const Point& twisted, const Int& d);

/// Smallest k in [1, 12] with kP = O, if any. Rational points only.
std::optional<int> torsion_order(const Curve& c, const Point& p);
bool is_torsion(const Curve& c, const Point& p);

/// Rational torsion subgroup via Nagell-Lutz candidates, sorted with the
/// point at infinity first. Requires an integral model.
std::vector<Point> nagell_lutz_torsion(const Curve& c);

/// "Z/N" or "Z/2 x Z/M" for a finite subgroup given as its full point list.
std::string torsion_structure(const Curve& c, const std::vector<Point>& group);

/// 3x^4 + 6A x^2 + 12B x - A^2, whose roots are the x-coordinates of the
/// points of order 3.
Rat division_polynomial3(const Curve& c, const Rat& x);

struct SearchBounds {
  Int num_bound = 10000;
  Int den_bound = 8;
};

/// Every rational point (p/e^2, q/e^3) with |p| <= num_bound, 1 <= e <=
/// den_bound, gcd(p, e) = 1, ascending in x then y.
std::vector<Point> search_points(const Curve& c, const SearchBounds& bounds);

}  // namespace sumprod

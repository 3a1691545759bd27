#pragma once

// Birational correspondence between r + s + t = rst = n and a short
// Weierstrass curve.
//
// Substituting r = -n/x, s = -y/x turns the system into the long model
//   y^2 + n x y + n y = x^3,
// which long_to_short reduces with the b/c-invariants:
//   X = u^2 x + shift,  Y = u^3 (y + shear_x x + shear_c).

#include "sumprod/elliptic.hpp"
#include "sumprod/quad.hpp"

#include <string>
#include <vector>

namespace sumprod {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct LongCurve {
  Rat a1, a2, a3, a4, a6;

  Rat b2() const { return a1 * a1 + 4 * a2; }
  Rat b4() const { return 2 * a4 + a1 * a3; }
  Rat b6() const { return a3 * a3 + 4 * a6; }
  Rat b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  Rat c4() const { return b2() * b2() - 24 * b4(); }
  Rat c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  Rat discriminant() const;

  bool contains(const QuadElem& x, const QuadElem& y) const;

  friend bool operator==(const LongCurve&, const LongCurve&) = default;
};

/// X = u^2 x + shift,  Y = u^3 (y + shear_x x + shear_c).
struct ChangeOfVars {
  Rat u{1};
  Rat shift{0};
  Rat shear_x{0};
  Rat shear_c{0};

  /// Long-model point to short-model point.
  Point apply(const QuadElem& x, const QuadElem& y) const;
  /// Short-model point back to long-model (x, y); throws on infinity.
  std::pair<QuadElem, QuadElem> invert(const Point& p) const;
};

struct ShortModel {
  Curve curve;
  ChangeOfVars vars;
};

/// One model in the completing-the-square chain
///   lhs^2 = c3 X^3 + c2 X^2 + c1 X + c0.
struct ChainStep {
  std::string name;
  std::string substitution;
  Rat c3, c2, c1, c0;
};

/// (n, 0, n, 0, 0). Throws std::invalid_argument for n = 0.
LongCurve system_to_long(const Int& n);

/// b/c-invariant reduction to Y^2 = X^3 - 27 c4 X - 54 c6, then X -> X/4,
/// Y -> Y/8 for as long as 16 | A and 64 | B. Throws for a singular model.
ShortModel long_to_short(const LongCurve& l);

/// The same reduction traced as completing the square, depressing the cubic
/// and rescaling by the final u; the last step is the short model itself.
/// Throws std::logic_error if the two routes disagree.
std::vector<ChainStep> weierstrass_chain(const LongCurve& l, const ShortModel& m);

/// r, s, t with r + s + t = rst = n.
struct Triple {
  QuadElem r, s, t;
};

/// Thrown by inverse_map for points without a preimage in the system.
class DegeneratePoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SumProductSystem {
 public:
  /// Throws std::invalid_argument for n = 0.
  explicit SumProductSystem(const Int& n);

  const Int& n() const { return n_; }
  const LongCurve& long_curve() const { return long_; }
  const ShortModel& model() const { return model_; }
  const Curve& curve() const { return model_.curve; }

  /// X-coordinate whose long-model preimage has x = 0.
  const Rat& degenerate_x() const { return model_.vars.shift; }
  bool is_degenerate(const Point& p) const;

  /// (x, y) = (-n/r, -s x) pushed through the change of variables. Throws
  /// std::invalid_argument for r = 0 or when (r, s) does not extend to a
  /// solution (the image would be off the curve).
  Point forward_map(const QuadElem& r, const QuadElem& s) const;

  /// r = -n/x, s = -y/x, t = n - r - s. Throws DegeneratePoint for infinity
  /// and for x = 0.
  Triple inverse_map(const Point& p) const;

 private:
  Int n_;
  LongCurve long_;
  ShortModel model_;
};

}  // namespace sumprod

#include "sumprod/transform.hpp"

#include <array>
#include <stdexcept>

namespace sumprod {

Rat LongCurve::discriminant() const {
  const Rat b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
}

bool LongCurve::contains(const QuadElem& x, const QuadElem& y) const {
  const QuadElem lhs = y * y + QuadElem(a1) * x * y + QuadElem(a3) * y;
  const QuadElem rhs = x * x * x + QuadElem(a2) * x * x + QuadElem(a4) * x + QuadElem(a6);
  return lhs == rhs;
}

Point ChangeOfVars::apply(const QuadElem& x, const QuadElem& y) const {
  const Rat u2 = u * u;
  return {QuadElem(u2) * x + QuadElem(shift),
          QuadElem(u2 * u) * (y + QuadElem(shear_x) * x + QuadElem(shear_c))};
}

std::pair<QuadElem, QuadElem> ChangeOfVars::invert(const Point& p) const {
  if (p.is_infinity()) throw std::domain_error("point at infinity has no affine preimage");
  const Rat u2 = u * u;
  const QuadElem x = (p.x() - QuadElem(shift)) / QuadElem(u2);
  const QuadElem y = p.y() / QuadElem(u2 * u) - QuadElem(shear_x) * x - QuadElem(shear_c);
  return {x, y};
}

LongCurve system_to_long(const Int& n) {
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  return {Rat(n), Rat(0), Rat(n), Rat(0), Rat(0)};
}

ShortModel long_to_short(const LongCurve& l) {
  if (sgn(l.discriminant()) == 0) throw std::invalid_argument("singular long Weierstrass model");
  Rat a = -27 * l.c4();
  Rat b = -54 * l.c6();
  ChangeOfVars vars{Rat(6), 3 * l.b2(), l.a1 / 2, l.a3 / 2};
  auto divisible = [](const Rat& q, long m) {
    return is_integer(q) && mpz_divisible_ui_p(q.get_num().get_mpz_t(), m) != 0;
  };
  while (sgn(a) != 0 || sgn(b) != 0) {
    if (!divisible(a, 16) || !divisible(b, 64)) break;
    a /= 16;
    b /= 64;
    vars.u /= 2;
    vars.shift /= 4;
  }
  return {Curve(a, b), vars};
}

namespace {

// Coefficients (c0, c1, c2, c3) of p(x - h).
std::array<Rat, 4> shift_cubic(const std::array<Rat, 4>& c, const Rat& h) {
  return {c[0] - c[1] * h + c[2] * h * h - c[3] * h * h * h,
          c[1] - 2 * c[2] * h + 3 * c[3] * h * h,
          c[2] - 3 * c[3] * h,
          c[3]};
}

std::string q(const Rat& v) { return v.get_str(); }

}  // namespace

std::vector<ChainStep> weierstrass_chain(const LongCurve& l, const ShortModel& m) {
  std::vector<ChainStep> steps;
  std::array<Rat, 4> cubic{l.b6(), 2 * l.b4(), l.b2(), Rat(4)};
  steps.push_back({"complete_square", "y1 = 2*y + " + q(l.a1) + "*x + " + q(l.a3),
                   cubic[3], cubic[2], cubic[1], cubic[0]});

  const Rat h = l.b2() / 12;
  cubic = shift_cubic(cubic, h);
  steps.push_back({"depress_cubic", "x2 = x + " + q(h), cubic[3], cubic[2], cubic[1], cubic[0]});

  const Rat& u = m.vars.u;
  const Rat u2 = u * u;
  const Rat u4 = u2 * u2;
  const Rat u6 = u4 * u2;
  steps.push_back({"rescale", "X1 = " + q(u2) + "*x2, Y1 = " + q(u2 * u) + "*y1",
                   Rat(4), Rat(0), u4 * cubic[1], u6 * cubic[0]});

  steps.push_back({"halve", "X = X1, Y = Y1/2", Rat(1), Rat(0), u4 * cubic[1] / 4, u6 * cubic[0] / 4});

  const ChainStep& last = steps.back();
  if (last.c1 != m.curve.a() || last.c0 != m.curve.b() || u2 * h != m.vars.shift ||
      l.a1 / 2 != m.vars.shear_x || l.a3 / 2 != m.vars.shear_c)
    throw std::logic_error("completing-the-square chain disagrees with the invariant reduction");
  return steps;
}

SumProductSystem::SumProductSystem(const Int& n)
    : n_(n), long_(system_to_long(n)), model_(long_to_short(long_)) {}

bool SumProductSystem::is_degenerate(const Point& p) const {
  return p.is_infinity() || model_.vars.invert(p).first.is_zero();
}

Point SumProductSystem::forward_map(const QuadElem& r, const QuadElem& s) const {
  if (r.is_zero()) throw std::invalid_argument("forward_map: r must be nonzero");
  const QuadElem x = QuadElem(Rat(-n_)) / r;
  const QuadElem y = -s * x;
  if (!long_.contains(x, y))
    throw std::invalid_argument("forward_map: (r, s) = (" + to_wire(r) + ", " + to_wire(s) +
                                ") does not extend to a solution for n = " + n_.get_str());
  return model_.vars.apply(x, y);
}

Triple SumProductSystem::inverse_map(const Point& p) const {
  if (p.is_infinity()) throw DegeneratePoint("inverse_map: point at infinity");
  if (!on_curve(curve(), p)) throw std::invalid_argument("inverse_map: " + to_string(p) + " is off the curve");
  const auto [x, y] = model_.vars.invert(p);
  if (x.is_zero())
    throw DegeneratePoint("inverse_map: " + to_string(p) + " has X = " + degenerate_x().get_str() +
                          " (long-model x = 0)");
  const QuadElem nq{Rat(n_)};
  const QuadElem r = -nq / x;
  const QuadElem s = -y / x;
  Triple out{r, s, nq - r - s};
  if (!(out.r * out.s * out.t == nq)) throw std::logic_error("inverse_map produced rst != n");
  return out;
}

}  // namespace sumprod

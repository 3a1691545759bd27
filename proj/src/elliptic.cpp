#include "sumprod/elliptic.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumprod {

Rat curve_discriminant(const Rat& a, const Rat& b) {
  return Rat(-16) * (4 * a * a * a + 27 * b * b);
}

Curve::Curve(const Rat& a, const Rat& b) : a_(a), b_(b) {
  if (sgn(curve_discriminant(a, b)) == 0)
    throw std::invalid_argument("singular curve: A = " + a.get_str() + ", B = " + b.get_str());
}

QuadElem Curve::rhs(const QuadElem& x) const {
  return x * x * x + QuadElem(a_) * x + QuadElem(b_);
}

Point::Point(QuadElem x, QuadElem y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
  common_field(x_, y_);
}

const QuadElem& Point::x() const {
  if (infinity_) throw std::logic_error("point at infinity has no x-coordinate");
  return x_;
}

const QuadElem& Point::y() const {
  if (infinity_) throw std::logic_error("point at infinity has no y-coordinate");
  return y_;
}

Int Point::field() const { return infinity_ ? Int(0) : common_field(x_, y_); }

bool operator==(const Point& p, const Point& q) {
  if (p.infinity_ || q.infinity_) return p.infinity_ == q.infinity_;
  return p.x_ == q.x_ && p.y_ == q.y_;
}

bool point_less(const Point& p, const Point& q) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && !q.is_infinity();
  if (!(p.x() == q.x())) return value_less(p.x(), q.x());
  return value_less(p.y(), q.y());
}

std::string to_string(const Point& p) {
  if (p.is_infinity()) return "O";
  return "(" + to_wire(p.x()) + ", " + to_wire(p.y()) + ")";
}

bool on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity()) return true;
  return p.y() * p.y() == c.rhs(p.x());
}

namespace {

void require_on_curve(const Curve& c, const Point& p) {
  if (!on_curve(c, p)) throw std::invalid_argument("point " + to_string(p) + " is not on the curve");
}

}  // namespace

Point ec_neg(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  if (p.is_infinity()) return p;
  return {p.x(), -p.y()};
}

Point ec_double(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  if (p.is_infinity() || p.y().is_zero()) return Point::infinity();
  const QuadElem& x = p.x();
  const QuadElem& y = p.y();
  const QuadElem slope = (QuadElem(3) * x * x + QuadElem(c.a())) / (QuadElem(2) * y);
  const QuadElem x3 = slope * slope - x - x;
  return {x3, slope * (x - x3) - y};
}

Point ec_add(const Curve& c, const Point& p, const Point& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return Point::infinity();
    return ec_double(c, p);
  }
  const QuadElem slope = (q.y() - p.y()) / (q.x() - p.x());
  const QuadElem x3 = slope * slope - p.x() - q.x();
  return {x3, slope * (p.x() - x3) - p.y()};
}

Point ec_scalar_mul(const Curve& c, const Point& p, long k) {
  require_on_curve(c, p);
  Point base = k < 0 ? ec_neg(c, p) : p;
  unsigned long n = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Point acc;
  while (n != 0) {
    if (n & 1UL) acc = ec_add(c, acc, base);
    n >>= 1;
    if (n != 0) base = ec_double(c, base);
  }
  return acc;
}

Point conj(const Point& p) {
  if (p.is_infinity()) return p;
  return {conj(p.x()), conj(p.y())};
}

Point trace_map(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  return ec_add(c, p, conj(p));
}

Curve quadratic_twist(const Curve& c, const Int& d) {
  if (!is_squarefree(d)) throw std::invalid_argument("twist: d = " + d.get_str() + " must be square-free and nonzero");
  const Rat dq(d);
  return Curve(c.a() * dq * dq, c.b() * dq * dq * dq);
}

Point twist_point_map(const Curve& c, const Point& p, const Int& d) {
  require_on_curve(c, p);
  const Curve twisted = quadratic_twist(c, d);
  if (p.is_infinity()) return p;
  if (d == 1) {
    if (!p.is_rational()) throw std::invalid_argument("twist by 1 needs a rational point");
    return p;
  }
  const QuadElem& y = p.y();
  if (!p.x().is_rational() || sgn(y.a()) != 0 || (!y.is_rational() && y.d() != d))
    throw std::invalid_argument("twist_point_map: need x rational and y a multiple of sqrt(" +
                                d.get_str() + "), got " + to_string(p));
  const Rat dq(d);
  Point out(QuadElem(dq * p.x().a()), QuadElem(dq * dq * y.b()));
  if (!on_curve(twisted, out)) throw std::logic_error("twist image off the twisted curve");
  return out;
}

Point untwist_point(const Curve& c, const Point& twisted, const Int& d) {
  const Curve t = quadratic_twist(c, d);
  require_on_curve(t, twisted);
  if (twisted.is_infinity() || d == 1) return twisted;
  if (!twisted.is_rational()) throw std::invalid_argument("untwist_point: twist point must be rational");
  const Rat dq(d);
  Point out(QuadElem(twisted.x().a() / dq), QuadElem(0, twisted.y().a() / (dq * dq), d));
  if (!on_curve(c, out)) throw std::logic_error("untwisted point off the curve");
  return out;
}

std::optional<int> torsion_order(const Curve& c, const Point& p) {
  require_on_curve(c, p);
  if (!p.is_rational()) throw std::invalid_argument("torsion_order: rational points only");
  // Mazur: a rational torsion point has order at most 12.
  Point multiple = p;
  for (int k = 1; k <= 12; ++k) {
    if (multiple.is_infinity()) return k;
    multiple = ec_add(c, multiple, p);
  }
  return std::nullopt;
}

bool is_torsion(const Curve& c, const Point& p) { return torsion_order(c, p).has_value(); }

namespace {

// f(x) = x^3 + a x + k on integers.
Int cubic(const Int& a, const Int& k, const Int& x) { return x * x * x + a * x + k; }

void bisect_root(const Int& a, const Int& k, Int lo, Int hi, bool increasing, std::vector<Int>& roots) {
  if (lo > hi) return;
  auto sign_at = [&](const Int& x) { return sgn(cubic(a, k, x)) * (increasing ? 1 : -1); };
  if (sign_at(lo) > 0 || sign_at(hi) < 0) return;
  while (lo < hi) {
    Int mid = lo + (hi - lo) / 2;
    if (sign_at(mid) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (cubic(a, k, lo) == 0) roots.push_back(lo);
}

// Integer roots of x^3 + a x + k via bisection on its monotone pieces.
std::vector<Int> integer_roots(const Int& a, const Int& k) {
  const Int bound = 1 + std::max(abs(a), abs(k));
  std::vector<Int> roots;
  if (sgn(a) >= 0) {
    bisect_root(a, k, -bound, bound, true, roots);
  } else {
    const Int s_lo = isqrt(-a / 3);  // floor of the critical point
    const Int s_hi = s_lo + 1;
    bisect_root(a, k, -bound, -s_hi, true, roots);
    bisect_root(a, k, -s_lo, s_lo, false, roots);
    bisect_root(a, k, s_hi, bound, true, roots);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<Point> nagell_lutz_torsion(const Curve& c) {
  if (!c.is_integral()) throw std::invalid_argument("nagell_lutz_torsion: model must be integral");
  const Int a = c.a().get_num();
  const Int b = c.b().get_num();
  const Int disc = curve_discriminant(c).get_num();

  // Candidate y >= 0: zero and every y with y^2 | disc.
  std::vector<Int> ys{Int(0)};
  std::vector<Int> partial{Int(1)};
  for (const auto& [p, e] : factor(disc)) {
    const std::size_t base = partial.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e / 2; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) partial.push_back(partial[j] * pk);
    }
  }
  ys.insert(ys.end(), partial.begin(), partial.end());

  std::vector<Point> group{Point::infinity()};
  for (const Int& y : ys) {
    for (const Int& x : integer_roots(a, b - y * y)) {
      const Point p{QuadElem(x), QuadElem(y)};
      if (!is_torsion(c, p)) continue;
      group.push_back(p);
      if (y != 0) group.emplace_back(QuadElem(x), QuadElem(Int(-y)));
    }
  }
  std::sort(group.begin(), group.end(), point_less);
  return group;
}

std::string torsion_structure(const Curve& c, const std::vector<Point>& group) {
  const int n = static_cast<int>(group.size());
  if (n == 1) return "trivial";
  for (const Point& p : group)
    if (p.is_rational() && torsion_order(c, p) == n) return "Z/" + std::to_string(n);
  return "Z/2 x Z/" + std::to_string(n / 2);
}

Rat division_polynomial3(const Curve& c, const Rat& x) {
  const Rat x2 = x * x;
  return 3 * x2 * x2 + 6 * c.a() * x2 + 12 * c.b() * x - c.a() * c.a();
}

std::vector<Point> search_points(const Curve& c, const SearchBounds& bounds) {
  if (bounds.num_bound < 1 || bounds.den_bound < 1)
    throw std::invalid_argument("search bounds must be >= 1");
  std::vector<Point> found;
  Int g;
  for (Int e = 1; e <= bounds.den_bound; ++e) {
    const Int e2 = e * e;
    for (Int p = -bounds.num_bound; p <= bounds.num_bound; ++p) {
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), e.get_mpz_t());
      if (g != 1) continue;
      const Rat x = make_rat(p, e2);
      const Rat value = x * x * x + c.a() * x + c.b();
      const auto root = square_root_exact(value);
      if (!root) continue;
      found.emplace_back(QuadElem(x), QuadElem(*root));
      if (sgn(*root) != 0) found.emplace_back(QuadElem(x), QuadElem(Rat(-*root)));
    }
  }
  std::sort(found.begin(), found.end(), point_less);
  return found;
}

}  // namespace sumprod

#pragma once

// Elements a + b*sqrt(d) of a quadratic field Q(sqrt(d)).
//
// A QuadElem carries the field it lives in (square-free d, d not in {0, 1})
// or no field at all (d == 0), which marks a plain rational. Rationals mix
// freely with elements of any field; elements of two different fields do not.
// Membership in the ring of integers is a predicate, not a type constraint,
// since the curve transformation produces non-integral intermediates.

#include "sumprod/exact.hpp"

#include <optional>
#include <string>

namespace sumprod {

class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(const Rat& a);  // NOLINT: rationals embed implicitly
  QuadElem(const Int& a) : QuadElem(Rat(a)) {}  // NOLINT
  QuadElem(long a) : QuadElem(Rat(a)) {}        // NOLINT
  /// Throws std::invalid_argument unless d is square-free and d not in {0, 1}.
  QuadElem(const Rat& a, const Rat& b, const Int& d);

  /// sqrt(d) itself.
  static QuadElem sqrt_of(const Int& d) { return QuadElem(Rat(0), Rat(1), d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  /// The field discriminant, or 0 for an element with no field context.
  const Int& d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  /// Throws std::domain_error on a zero divisor.
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  /// Value equality; the field tag only matters when both sides are irrational.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

 private:
  Rat a_{0};
  Rat b_{0};
  Int d_{0};
};

/// Total order on values (a first, then b) used for canonical output order.
bool value_less(const QuadElem& x, const QuadElem& y);

/// The field shared by x and y (0 when both are rational). Throws
/// std::invalid_argument when they live in different fields.
Int common_field(const QuadElem& x, const QuadElem& y);

QuadElem conj(const QuadElem& x);
Rat norm(const QuadElem& x);
Rat trace(const QuadElem& x);

/// Ring-of-integers membership from coordinates: a, b in Z, or d = 1 mod 4
/// with 2a, 2b in Z of equal parity.
bool is_ok_integer(const QuadElem& x);

/// A square root inside the element's own field (or Q for rationals, where
/// a negative or non-square rational q yields sqrt(q) only if a field d is
/// supplied through `field`).
std::optional<QuadElem> square_root_exact(const QuadElem& x, const Int& field = 0);

/// Wire format: "p", "p/q", "p + q*sqrt(d)" or "(p + q*sqrt(d))/k" with the
/// smallest integer k > 1 clearing both denominators.
std::string to_wire(const QuadElem& x);

/// Inverse of to_wire. Also accepts surrounding/internal whitespace, a bare
/// "sqrt(d)", rational coefficients, and non-square-free radicands (sqrt(20)
/// becomes 2*sqrt(5)). Throws std::invalid_argument on malformed text.
QuadElem parse_quad(const std::string& text);

}  // namespace sumprod

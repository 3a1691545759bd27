#pragma once

// Exact integer and rational kernel. Everything above this layer is exact;
// there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sumprod {

using Int = mpz_class;
using Rat = mpq_class;

/// m = d * f^2 with d square-free (carrying the sign of m) and f >= 1.
struct SquarefreeKernel {
  Int d;
  Int f;
};

/// floor(sqrt(n)). Throws std::domain_error for n < 0.
Int isqrt(const Int& n);

/// Exact square test on integers; negative numbers are never squares.
bool is_square(const Int& n);

/// Non-negative rational square root of q, if q is a perfect square in Q.
std::optional<Rat> square_root_exact(const Rat& q);

/// Trial-division square-free decomposition. Throws std::domain_error for 0.
SquarefreeKernel squarefree_kernel(const Int& m);

bool is_squarefree(const Int& m);

/// Prime factorisation of |m| by trial division, primes ascending.
std::vector<std::pair<Int, unsigned>> factor(const Int& m);

/// All positive divisors of |m|, ascending. Throws for m = 0.
std::vector<Int> divisors(const Int& m);

bool is_integer(const Rat& q);

/// Canonicalised rational; throws std::domain_error on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

Int lcm(const Int& a, const Int& b);

/// Euclidean remainder in [0, |m|).
Int mod(const Int& a, const Int& m);

/// Decimal "p" or "p/q".
std::string to_string(const Int& n);
std::string to_string(const Rat& q);

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws
/// std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace sumprod

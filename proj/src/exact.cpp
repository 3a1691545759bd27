#include "sumprod/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sumprod {

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative input " + n.get_str());
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> square_root_exact(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!is_square(num) || !is_square(den)) return std::nullopt;
  return make_rat(isqrt(num), isqrt(den));
}

std::vector<std::pair<Int, unsigned>> factor(const Int& m) {
  Int rest = abs(m);
  std::vector<std::pair<Int, unsigned>> out;
  if (rest == 0) throw std::domain_error("factor: zero input");
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(Int(2));
  for (Int p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) out.emplace_back(rest, 1U);
  return out;
}

SquarefreeKernel squarefree_kernel(const Int& m) {
  if (m == 0) throw std::domain_error("squarefree_kernel: zero input");
  Int d = sgn(m) < 0 ? Int(-1) : Int(1);
  Int f = 1;
  for (const auto& [p, e] : factor(m)) {
    for (unsigned i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) d *= p;
  }
  return {d, f};
}

bool is_squarefree(const Int& m) {
  if (m == 0) return false;
  for (const auto& pe : factor(m))
    if (pe.second > 1) return false;
  return true;
}

std::vector<Int> divisors(const Int& m) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factor(m)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int mod(const Int& a, const Int& m) {
  Int out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int decimal(const std::string& s) {
  return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!is_decimal(text)) throw std::invalid_argument("not an integer: '" + text + "'");
  return decimal(text);
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const std::string den = text.substr(slash + 1);
  if (den.empty() || den[0] == '-' || den[0] == '+' || !is_decimal(den))
    throw std::invalid_argument("not a rational: '" + text + "'");
  return make_rat(parse_int(text.substr(0, slash)), decimal(den));
}

}  // namespace sumprod

#include "sumprod/quad.hpp"

#include <cctype>
#include <stdexcept>

namespace sumprod {

QuadElem::QuadElem(const Rat& a) : a_(a) {}

QuadElem::QuadElem(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
  if (d == 0 || d == 1) throw std::invalid_argument("QuadElem: d must not be 0 or 1");
  if (!is_squarefree(d))
    throw std::invalid_argument("QuadElem: d = " + d.get_str() + " is not square-free");
}

Int common_field(const QuadElem& x, const QuadElem& y) {
  if (x.d() == 0 || x.is_rational()) return y.d() != 0 ? y.d() : x.d();
  if (y.d() == 0 || y.is_rational()) return x.d();
  if (x.d() != y.d())
    throw std::invalid_argument("mismatched quadratic fields: d = " + x.d().get_str() +
                                " and d = " + y.d().get_str());
  return x.d();
}

QuadElem QuadElem::operator-() const {
  QuadElem out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  d_ = common_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  d_ = common_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  d_ = common_field(*this, o);
  const Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d_);
  const Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  if (o.is_zero()) throw std::domain_error("QuadElem: division by zero");
  d_ = common_field(*this, o);
  const Rat n = norm(o);
  QuadElem inv = conj(o);
  inv.a_ /= n;
  inv.b_ /= n;
  return *this *= inv;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.is_rational() || x.d_ == y.d_;
}

bool value_less(const QuadElem& x, const QuadElem& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

QuadElem conj(const QuadElem& x) {
  if (x.d() == 0) return x;
  return QuadElem(x.a(), -x.b(), x.d());
}

Rat norm(const QuadElem& x) { return x.a() * x.a() - x.b() * x.b() * Rat(x.d()); }

Rat trace(const QuadElem& x) { return 2 * x.a(); }

bool is_ok_integer(const QuadElem& x) {
  if (is_integer(x.a()) && is_integer(x.b())) return true;
  if (x.d() == 0 || mod(x.d(), 4) != 1) return false;
  const Rat two_a = 2 * x.a();
  const Rat two_b = 2 * x.b();
  if (!is_integer(two_a) || !is_integer(two_b)) return false;
  return mod(two_a.get_num() - two_b.get_num(), 2) == 0;
}

std::optional<QuadElem> square_root_exact(const QuadElem& x, const Int& field) {
  const Int d = x.d() != 0 ? x.d() : field;
  if (x.is_rational()) {
    if (auto r = square_root_exact(x.a())) return d == 0 ? QuadElem(*r) : QuadElem(*r, 0, d);
    if (d == 0) return std::nullopt;
    if (auto r = square_root_exact(x.a() / Rat(d))) return QuadElem(0, *r, d);
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 = (a +- sqrt(norm)) / 2, v = b / 2u.
  const auto root_norm = square_root_exact(norm(x));
  if (!root_norm) return std::nullopt;
  for (const Rat& sn : {*root_norm, Rat(-*root_norm)}) {
    const auto u = square_root_exact((x.a() + sn) / 2);
    if (!u || sgn(*u) == 0) continue;
    const QuadElem root(*u, x.b() / (2 * *u), d);
    if (root * root == x) return root;
  }
  return std::nullopt;
}

namespace {

std::string signed_term(const Int& q, const Int& d, bool leading) {
  std::string out;
  Int mag = q;
  if (!leading) {
    out = sgn(q) < 0 ? " - " : " + ";
    mag = abs(q);
  }
  return out + mag.get_str() + "*sqrt(" + d.get_str() + ")";
}

}  // namespace

std::string to_wire(const QuadElem& x) {
  if (x.is_rational()) return to_string(x.a());
  const Int k = lcm(x.a().get_den(), x.b().get_den());
  const Int p = x.a().get_num() * (k / x.a().get_den());
  const Int q = x.b().get_num() * (k / x.b().get_den());
  const std::string inner = p.get_str() + signed_term(q, x.d(), false);
  if (k == 1) return inner;
  return "(" + inner + ")/" + k.get_str();
}

namespace {

// Recursive-descent parser over the whitespace-stripped text.
class WireParser {
 public:
  explicit WireParser(std::string text) : s_(std::move(text)) {}

  QuadElem parse() {
    QuadElem value;
    if (peek() == '(') {
      const std::size_t close = s_.rfind(')');
      if (close == std::string::npos || close + 1 >= s_.size() || s_[close + 1] != '/')
        value = sum();
      else {
        ++pos_;
        value = sum();
        expect(')');
        expect('/');
        const Int k = integer();
        if (k <= 0) fail("denominator must be positive");
        value /= QuadElem(k);
      }
    } else {
      value = sum();
    }
    if (pos_ != s_.size()) fail("trailing characters");
    return value;
  }

 private:
  QuadElem sum() {
    QuadElem total;
    bool seen_rational = false;
    bool seen_radical = false;
    bool first = true;
    while (pos_ < s_.size() && peek() != ')') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      QuadElem term = this->term();
      if (term.is_rational() && !radical_) {
        if (seen_rational) fail("two rational terms");
        seen_rational = true;
      } else {
        if (seen_radical) fail("two radical terms");
        seen_radical = true;
      }
      total += sign < 0 ? -term : term;
      first = false;
    }
    if (first) fail("empty expression");
    return total;
  }

  // coefficient [ '*' sqrt(m) ] | sqrt(m)
  QuadElem term() {
    radical_ = false;
    if (starts_with("sqrt(")) return radical();
    Rat coef(integer());
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      const Int den = integer();
      if (den == 0) fail("zero denominator");
      coef = make_rat(coef.get_num(), den);
    }
    if (peek() == '*') {
      ++pos_;
      if (!starts_with("sqrt(")) fail("expected sqrt(");
      return QuadElem(coef) * radical();
    }
    return QuadElem(coef);
  }

  QuadElem radical() {
    pos_ += 5;
    const bool neg = peek() == '-';
    if (neg) ++pos_;
    Int m = integer();
    if (neg) m = -m;
    expect(')');
    radical_ = true;
    if (m == 0) return QuadElem();
    const SquarefreeKernel k = squarefree_kernel(m);
    if (k.d == 1) return QuadElem(Rat(k.f));
    return QuadElem(0, Rat(k.f), k.d);
  }

  Int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Int(s_.substr(start, pos_ - start), 10);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool starts_with(const char* lit) const { return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed quadratic element '" + s_ + "': " + why +
                                " at offset " + std::to_string(pos_));
  }

  std::string s_;
  std::size_t pos_ = 0;
  bool radical_ = false;
};

}  // namespace

QuadElem parse_quad(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  return WireParser(std::move(compact)).parse();
}

}  // namespace sumprod

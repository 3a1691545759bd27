#include "sumprod/solver.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sumprod {

std::string to_string(PointClass c) {
  return c == PointClass::exceptional ? "exceptional" : "non-exceptional";
}

Rat discriminant_of_r(const Int& n, const Int& r) {
  if (r == 0) throw std::invalid_argument("discriminant_of_r: r must be nonzero");
  const Rat m(n - r);
  return m * m - Rat(4) * make_rat(n, r);
}

std::vector<Int> candidate_rs(const Int& n) {
  if (n == 0) throw std::invalid_argument("candidate_rs: n must be nonzero");
  std::vector<Int> out;
  for (const Int& k : divisors(n)) {
    out.push_back(k);
    out.push_back(-k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string integrality_failure(const char* name, const QuadElem& x) {
  const Rat nm = norm(x);
  if (!is_integer(nm)) return std::string(name) + " not an algebraic integer: norm = " + nm.get_str() + " not in Z";
  return std::string(name) + " not an algebraic integer: trace = " + trace(x).get_str() + " not in Z";
}

}  // namespace

Verdict verify_triple(const Int& n, const QuadElem& r, const QuadElem& s, const QuadElem& t) {
  try {
    common_field(r, s);
    common_field(s, t);
    common_field(r, t);
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  const QuadElem nq{Rat(n)};
  const QuadElem sum = r + s + t;
  if (!(sum == nq)) return {false, "r + s + t = " + to_wire(sum) + " != " + n.get_str()};
  const QuadElem product = r * s * t;
  if (!(product == nq)) return {false, "rst = " + to_wire(product) + " != " + n.get_str()};
  if (!is_ok_integer(r)) return {false, integrality_failure("r", r)};
  if (!is_ok_integer(s)) return {false, integrality_failure("s", s)};
  if (!is_ok_integer(t)) return {false, integrality_failure("t", t)};
  return {true, "ok"};
}

std::vector<SolutionRecord> solve_in_ok(const Int& n) {
  std::vector<SolutionRecord> out;
  for (const Int& r : candidate_rs(n)) {
    SolutionRecord rec;
    rec.n = n;
    rec.r = r;
    const Int delta = discriminant_of_r(n, r).get_num();  // r | n, so delta is an integer
    const Rat half_sum = Rat(n - r) / 2;
    if (is_square(delta)) {
      rec.f = isqrt(delta);
      const Rat half_root = Rat(rec.f) / 2;
      rec.s = QuadElem(half_sum + half_root);
      rec.t = QuadElem(half_sum - half_root);
    } else {
      const SquarefreeKernel k = squarefree_kernel(delta);
      rec.d = k.d;
      rec.f = k.f;
      const Rat half_root = Rat(k.f) / 2;
      rec.s = QuadElem(half_sum, half_root, k.d);
      rec.t = QuadElem(half_sum, -half_root, k.d);
    }
    const Verdict v = verify_triple(n, QuadElem(r), rec.s, rec.t);
    rec.verified = v.ok;
    rec.reason = v.reason;
    out.push_back(std::move(rec));
  }
  return out;
}

PointClass classify_point(const Point& p) {
  if (p.is_infinity()) throw std::invalid_argument("classify_point: point at infinity");
  return p.x().is_rational() ? PointClass::non_exceptional : PointClass::exceptional;
}

std::vector<CandidateReport> scan_beyond_divisors(const Int& n, const Int& bound) {
  if (bound < 1) throw std::invalid_argument("scan bound must be >= 1");
  std::vector<CandidateReport> out;
  for (Int r = -bound; r <= bound; ++r) {
    if (r == 0 || mpz_divisible_p(n.get_mpz_t(), r.get_mpz_t())) continue;
    CandidateReport rep;
    rep.r = r;
    rep.delta = discriminant_of_r(n, r);
    const Rat half_sum = Rat(n - r) / 2;
    QuadElem s{half_sum}, t{half_sum};
    if (sgn(rep.delta) != 0) {
      const Int& den = rep.delta.get_den();
      const SquarefreeKernel k = squarefree_kernel(rep.delta.get_num() * den);
      rep.d = k.d;
      rep.f = k.f;
      const Rat half_root = make_rat(k.f, 2 * den);
      if (k.d == 1) {
        s = QuadElem(half_sum + half_root);
        t = QuadElem(half_sum - half_root);
      } else {
        s = QuadElem(half_sum, half_root, k.d);
        t = QuadElem(half_sum, -half_root, k.d);
      }
    }
    rep.integral = is_ok_integer(s) && is_ok_integer(t);
    const Rat st = make_rat(n, r);
    rep.reason = rep.integral ? "integral" : "st = " + st.get_str() + " not in Z";
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

bool triple_less(const Triple& x, const Triple& y) {
  if (!(x.r == y.r)) return value_less(x.r, y.r);
  if (!(x.s == y.s)) return value_less(x.s, y.s);
  return value_less(x.t, y.t);
}

bool triple_equal(const Triple& x, const Triple& y) { return x.r == y.r && x.s == y.s && x.t == y.t; }

Triple sorted(Triple t) {
  std::array<QuadElem, 3> v{t.r, t.s, t.t};
  std::sort(v.begin(), v.end(), value_less);
  return {v[0], v[1], v[2]};
}

}  // namespace

ExceptionalProbe probe_exceptional(const Int& n, const std::vector<Int>& fields, const Int& coeff_bound) {
  ExceptionalProbe probe{fields, coeff_bound, {}};
  const QuadElem nq{Rat(n)};
  for (const Int& d : fields) {
    if (d == 0 || d == 1 || !is_squarefree(d)) continue;
    const bool half = mod(d, 4) == 1;
    const QuadElem omega = half ? QuadElem(Rat(1, 2), Rat(1, 2), d) : QuadElem::sqrt_of(d);
    std::vector<Triple> hits;
    for (Int a = -coeff_bound; a <= coeff_bound; ++a) {
      for (Int b = -coeff_bound; b <= coeff_bound; ++b) {
        if (b == 0) continue;
        const QuadElem r = QuadElem(a) + QuadElem(b) * omega;
        const QuadElem st = nq / r;
        if (!is_ok_integer(st)) continue;
        const QuadElem m = nq - r;
        const auto root = square_root_exact(m * m - QuadElem(4) * st, d);
        if (!root) continue;
        const QuadElem s = (m + *root) / QuadElem(2);
        const QuadElem t = m - s;
        if (s.is_rational() || t.is_rational()) continue;
        if (!verify_triple(n, r, s, t).ok) continue;
        hits.push_back(sorted({r, s, t}));
      }
    }
    std::sort(hits.begin(), hits.end(), triple_less);
    hits.erase(std::unique(hits.begin(), hits.end(), triple_equal), hits.end());
    for (Triple& t : hits) probe.found.push_back({d, std::move(t)});
  }
  return probe;
}

Certificate completeness_certificate(const Int& n, const SearchBounds& bounds,
                                     std::optional<std::vector<Int>> probe_fields, const Int& probe_bound) {
  const SumProductSystem system(n);
  Certificate cert{n, system.curve(), {}, {}, bounds, {}, {}, true, true, {}, false, {}};

  const std::vector<Point> group = nagell_lutz_torsion(system.curve());
  cert.structure = torsion_structure(system.curve(), group);
  for (const Point& p : group) {
    const bool degenerate = system.is_degenerate(p);
    cert.torsion.push_back({p, *torsion_order(system.curve(), p), degenerate});
    cert.all_torsion_degenerate = cert.all_torsion_degenerate && degenerate;
  }

  cert.search_hits = search_points(system.curve(), bounds);
  for (const Point& p : cert.search_hits)
    if (!is_torsion(system.curve(), p)) cert.non_torsion.push_back(p);
  cert.all_found_torsion = cert.non_torsion.empty();

  if (!probe_fields) {
    probe_fields.emplace();
    for (const SolutionRecord& rec : solve_in_ok(n))
      if (rec.d && std::find(probe_fields->begin(), probe_fields->end(), *rec.d) == probe_fields->end())
        probe_fields->push_back(*rec.d);
  }
  std::sort(probe_fields->begin(), probe_fields->end());
  cert.probe = probe_exceptional(n, *probe_fields, probe_bound);

  cert.holds = cert.all_found_torsion && cert.all_torsion_degenerate && cert.probe.found.empty();
  if (cert.holds) {
    cert.statement =
        "divisor enumeration is complete unless a rational point of height above the search bound exists "
        "or an exceptional solution lies outside the probe range";
  } else {
    std::string why;
    if (!cert.all_found_torsion) why += "non-torsion rational points found; ";
    if (!cert.all_torsion_degenerate) why += "a torsion point has a non-degenerate preimage; ";
    if (!cert.probe.found.empty()) why += "exceptional solutions found; ";
    why.resize(why.size() - 2);
    cert.statement = "certificate fails: " + why;
  }
  return cert;
}

}  // namespace sumprod

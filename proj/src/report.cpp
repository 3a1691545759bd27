#include "sumprod/report.hpp"

#include "sumprod/transform.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumprod {

namespace detail {
extern const char* const kBuiltinClaims;
}

const Json& builtin_claims() {
  static const Json claims = Json::parse(detail::kBuiltinClaims);
  return claims;
}

Json load_claims(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open claims file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("claims file '" + path + "': " + e.what());
  }
}

Json to_json(const QuadElem& x) { return to_wire(x); }

Json to_json(const Point& p) {
  if (p.is_infinity()) return Json{{"infinity", true}};
  return Json{{"x", to_wire(p.x())}, {"y", to_wire(p.y())}};
}

Json to_json(const Curve& c) { return Json{{"a", c.a().get_str()}, {"b", c.b().get_str()}}; }

Json to_json(const SolutionRecord& rec) {
  Json j{{"n", rec.n.get_str()},
         {"r", rec.r.get_str()},
         {"f", rec.f.get_str()},
         {"s", to_wire(rec.s)},
         {"t", to_wire(rec.t)},
         {"verified", rec.verified},
         {"reason", rec.reason}};
  j["d"] = rec.d ? Json(rec.d->get_str()) : Json(nullptr);
  j["rational"] = !rec.d.has_value();
  return j;
}

Json to_json(const CandidateReport& rep) {
  return Json{{"r", rep.r.get_str()},       {"delta", rep.delta.get_str()}, {"d", rep.d.get_str()},
              {"f", rep.f.get_str()},       {"integral", rep.integral},     {"reason", rep.reason}};
}

namespace {

Json triple_json(const Triple& t) {
  return Json{{"r", to_wire(t.r)}, {"s", to_wire(t.s)}, {"t", to_wire(t.t)}};
}

Json points_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(to_json(p));
  return arr;
}

Json ints_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

Json to_json(const Certificate& cert) {
  Json torsion = Json::array();
  for (const TorsionAudit& t : cert.torsion)
    torsion.push_back({{"point", to_json(t.point)}, {"order", t.order}, {"degenerate", t.degenerate}});
  Json found = Json::array();
  for (const ExceptionalSolution& e : cert.probe.found)
    found.push_back({{"d", e.d.get_str()}, {"triple", triple_json(e.triple)}});
  return Json{{"n", cert.n.get_str()},
              {"curve", to_json(cert.curve)},
              {"torsion", torsion},
              {"structure", cert.structure},
              {"bounds", {{"num_bound", cert.bounds.num_bound.get_str()}, {"den_bound", cert.bounds.den_bound.get_str()}}},
              {"search_hits", points_json(cert.search_hits)},
              {"non_torsion", points_json(cert.non_torsion)},
              {"all_found_torsion", cert.all_found_torsion},
              {"all_torsion_degenerate", cert.all_torsion_degenerate},
              {"probe",
               {{"fields", ints_json(cert.probe.fields)},
                {"coeff_bound", cert.probe.coeff_bound.get_str()},
                {"found", found}}},
              {"holds", cert.holds},
              {"statement", cert.statement}};
}

namespace {

Json envelope(const std::string& command, Json inputs) {
  return Json{{"schema_version", 1},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", Json::object()},
              {"comparison", nullptr},
              {"summary", Json::array()}};
}

void finish(Json& doc, int code, const std::string& message) {
  doc["status"] = {{"exit_code", code}, {"message", message}};
}

void say(Json& doc, const std::string& line) { doc["summary"].push_back(line); }

const Json* system_claims(const Json& claims, const Int& n) {
  if (!claims.contains("systems")) return nullptr;
  const Json& systems = claims["systems"];
  const std::string key = n.get_str();
  return systems.contains(key) ? &systems[key] : nullptr;
}

// The system whose claimed curve is (a, b), if any.
const Json* curve_claims(const Json& claims, const Rat& a, const Rat& b) {
  if (!claims.contains("systems")) return nullptr;
  for (const auto& [key, sys] : claims["systems"].items()) {
    if (!sys.contains("curve")) continue;
    if (parse_rat(sys["curve"]["a"].get<std::string>()) == a && parse_rat(sys["curve"]["b"].get<std::string>()) == b)
      return &sys;
  }
  return nullptr;
}

std::vector<Int> claimed_ints(const Json& sys, const char* key) {
  std::vector<Int> out;
  if (sys.contains(key))
    for (const Json& v : sys[key]) out.push_back(v.is_string() ? parse_int(v.get<std::string>()) : Int(v.get<long>()));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<Int>& v, const Int& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// c * var, with sign folded into the joining operator.
void append_term(std::string& out, const Rat& c, const std::string& var) {
  if (sgn(c) == 0) return;
  const Rat mag = abs(c);
  std::string body = var.empty() ? mag.get_str() : (mag == 1 ? var : mag.get_str() + "*" + var);
  if (out.empty())
    out = (sgn(c) < 0 ? "-" : "") + body;
  else
    out += (sgn(c) < 0 ? " - " : " + ") + body;
}

std::string cubic_str(const std::string& lhs, const std::string& x, const Rat& c3, const Rat& c2, const Rat& c1,
                      const Rat& c0) {
  std::string rhs;
  append_term(rhs, c3, x + "^3");
  append_term(rhs, c2, x + "^2");
  append_term(rhs, c1, x);
  append_term(rhs, c0, "");
  return lhs + "^2 = " + (rhs.empty() ? "0" : rhs);
}

std::string long_str(const LongCurve& l) {
  std::string lhs = "y^2";
  append_term(lhs, l.a1, "x*y");
  append_term(lhs, l.a3, "y");
  std::string rhs = "x^3";
  append_term(rhs, l.a2, "x^2");
  append_term(rhs, l.a4, "x");
  append_term(rhs, l.a6, "");
  return lhs + " = " + rhs;
}

std::string points_str(const std::vector<Point>& pts) {
  std::string out;
  for (const Point& p : pts) out += (out.empty() ? "" : ", ") + to_string(p);
  return out.empty() ? "none" : out;
}

std::string triple_str(const QuadElem& r, const QuadElem& s, const QuadElem& t) {
  return "(" + to_wire(r) + ", " + to_wire(s) + ", " + to_wire(t) + ")";
}

bool same_pair(const QuadElem& s1, const QuadElem& t1, const QuadElem& s2, const QuadElem& t2) {
  return (s1 == s2 && t1 == t2) || (s1 == t2 && t1 == s2);
}

}  // namespace

Json curve_report(const Int& n, const Json& claims) {
  Json doc = envelope("curve", {{"n", n.get_str()}});
  const SumProductSystem sys(n);
  const LongCurve& l = sys.long_curve();
  const ShortModel& m = sys.model();
  const std::vector<ChainStep> chain = weierstrass_chain(l, m);

  Json& res = doc["results"];
  res["long"] = {{"a1", l.a1.get_str()}, {"a2", l.a2.get_str()}, {"a3", l.a3.get_str()},
                 {"a4", l.a4.get_str()}, {"a6", l.a6.get_str()}};
  res["long_discriminant"] = l.discriminant().get_str();
  res["invariants"] = {{"b2", l.b2().get_str()}, {"b4", l.b4().get_str()}, {"b6", l.b6().get_str()},
                       {"c4", l.c4().get_str()}, {"c6", l.c6().get_str()}};
  res["short"] = to_json(m.curve);
  res["discriminant"] = curve_discriminant(m.curve).get_str();
  res["change_of_vars"] = {{"u", m.vars.u.get_str()}, {"shift", m.vars.shift.get_str()},
                           {"shear_x", m.vars.shear_x.get_str()}, {"shear_c", m.vars.shear_c.get_str()}};
  res["degenerate_x"] = sys.degenerate_x().get_str();
  Json steps = Json::array();
  for (const ChainStep& s : chain)
    steps.push_back({{"name", s.name}, {"substitution", s.substitution}, {"c3", s.c3.get_str()},
                     {"c2", s.c2.get_str()}, {"c1", s.c1.get_str()}, {"c0", s.c0.get_str()}});
  res["chain"] = steps;

  say(doc, "long model: " + long_str(l));
  say(doc, "short model: " + cubic_str("Y", "X", 1, 0, m.curve.a(), m.curve.b()));
  say(doc, "A=" + m.curve.a().get_str() + " B=" + m.curve.b().get_str());
  say(doc, "change of variables: X = " + Rat(m.vars.u * m.vars.u).get_str() + "*x + " + m.vars.shift.get_str() +
               ", Y = " + Rat(m.vars.u * m.vars.u * m.vars.u).get_str() + "*(y + " + m.vars.shear_x.get_str() +
               "*x + " + m.vars.shear_c.get_str() + ")");
  const char* lhs[] = {"y1", "y1", "Y1", "Y"};
  const char* var[] = {"x", "x2", "X1", "X"};
  for (std::size_t i = 0; i < chain.size(); ++i)
    say(doc, "chain " + chain[i].name + " [" + chain[i].substitution + "]: " +
                 cubic_str(lhs[i], var[i], chain[i].c3, chain[i].c2, chain[i].c1, chain[i].c0));

  int code = kExitOk;
  std::string message = "ok";
  if (const Json* sc = system_claims(claims, n)) {
    Json cmp = Json::object();
    bool agree = true;
    if (sc->contains("curve")) {
      const Rat ca = parse_rat((*sc)["curve"]["a"].get<std::string>());
      const Rat cb = parse_rat((*sc)["curve"]["b"].get<std::string>());
      const bool ok = ca == m.curve.a() && cb == m.curve.b();
      cmp["curve"] = {{"claimed", (*sc)["curve"]}, {"computed", to_json(m.curve)}, {"agree", ok}};
      agree = agree && ok;
      say(doc, std::string(ok ? "[agree] " : "[differs] ") + "claimed A=" + ca.get_str() + " B=" + cb.get_str());
    }
    if (sc->contains("chain")) {
      Json rows = Json::array();
      for (const auto& [name, coeffs] : (*sc)["chain"].items()) {
        const auto it = std::find_if(chain.begin(), chain.end(), [&](const ChainStep& s) { return s.name == name; });
        const bool ok = it != chain.end() && parse_rat(coeffs[0].get<std::string>()) == it->c1 &&
                        parse_rat(coeffs[1].get<std::string>()) == it->c0;
        Json computed = it == chain.end() ? Json(nullptr) : Json::array({it->c1.get_str(), it->c0.get_str()});
        rows.push_back({{"step", name}, {"claimed", coeffs}, {"computed", computed}, {"agree", ok}});
        agree = agree && ok;
        say(doc, std::string(ok ? "[agree] " : "[differs] ") + "claimed " + name + " coefficients (" +
                     coeffs[0].get<std::string>() + ", " + coeffs[1].get<std::string>() + ")");
      }
      cmp["chain"] = rows;
    }
    cmp["agree"] = agree;
    doc["comparison"] = cmp;
    if (!agree) {
      code = kExitFailure;
      message = "computed model differs from the claimed model";
    }
  }
  finish(doc, code, message);
  return doc;
}

Json torsion_report(const Rat& a, const Rat& b, const Json& claims) {
  Json doc = envelope("torsion", {{"a", a.get_str()}, {"b", b.get_str()}});
  const Curve c(a, b);
  const std::vector<Point> group = nagell_lutz_torsion(c);
  const std::string structure = torsion_structure(c, group);
  Json pts = Json::array();
  Json div3 = Json::array();
  for (const Point& p : group) {
    const int order = *torsion_order(c, p);
    pts.push_back({{"point", to_json(p)}, {"order", order}});
    if (order == 3) div3.push_back({{"x", p.x().a().get_str()}, {"value", division_polynomial3(c, p.x().a()).get_str()}});
  }
  Json& res = doc["results"];
  res["curve"] = to_json(c);
  res["discriminant"] = curve_discriminant(c).get_str();
  res["points"] = pts;
  res["structure"] = structure;
  res["order"] = group.size();
  res["division_polynomial3"] = div3;
  say(doc, "torsion: " + structure);
  say(doc, "points: " + points_str(group));

  int code = kExitOk;
  std::string message = "ok";
  if (const Json* sc = curve_claims(claims, a, b); sc && sc->contains("torsion")) {
    const Json& ct = (*sc)["torsion"];
    bool agree = ct["structure"].get<std::string>() == structure;
    if (ct.contains("points")) {
      std::vector<Point> claimed{Point::infinity()};
      for (const Json& xy : ct["points"])
        claimed.emplace_back(QuadElem(parse_rat(xy[0].get<std::string>())), QuadElem(parse_rat(xy[1].get<std::string>())));
      std::sort(claimed.begin(), claimed.end(), point_less);
      agree = agree && claimed == group;
    }
    doc["comparison"] = {{"claimed", ct}, {"computed", {{"structure", structure}}}, {"agree", agree}};
    say(doc, std::string(agree ? "[agree] " : "[differs] ") + "claimed torsion " + ct["structure"].get<std::string>());
    if (!agree) {
      code = kExitFailure;
      message = "computed torsion differs from the claim";
    }
  }
  finish(doc, code, message);
  return doc;
}

namespace {

Json bounds_json(const SearchBounds& bounds) {
  return {{"num_bound", bounds.num_bound.get_str()}, {"den_bound", bounds.den_bound.get_str()}};
}

}  // namespace

Json search_report(const Rat& a, const Rat& b, const SearchBounds& bounds) {
  Json doc = envelope("search", {{"a", a.get_str()}, {"b", b.get_str()}, {"bounds", bounds_json(bounds)}});
  const Curve c(a, b);
  const std::vector<Point> hits = search_points(c, bounds);
  Json pts = Json::array();
  std::vector<Point> free;
  for (const Point& p : hits) {
    const auto order = torsion_order(c, p);
    pts.push_back({{"point", to_json(p)}, {"torsion", order.has_value()}, {"order", order ? Json(*order) : Json(nullptr)}});
    if (!order) free.push_back(p);
  }
  doc["results"] = {{"curve", to_json(c)}, {"points", pts}, {"non_torsion_count", free.size()},
                    {"rank_lower_bound", free.empty() ? 0 : 1}};
  say(doc, "points found: " + std::to_string(hits.size()) + " (" + std::to_string(free.size()) + " non-torsion)");
  say(doc, "points: " + points_str(hits));
  finish(doc, kExitOk, "ok");
  return doc;
}

Json twist_report(const Rat& a, const Rat& b, const Int& d, const SearchBounds& bounds, const Json& claims) {
  Json doc = envelope("twist", {{"a", a.get_str()}, {"b", b.get_str()}, {"d", d.get_str()}, {"bounds", bounds_json(bounds)}});
  const Curve base(a, b);
  const Curve tw = quadratic_twist(base, d);
  const std::vector<Point> hits = search_points(tw, bounds);
  Json pts = Json::array();
  std::vector<Point> free;
  for (const Point& p : hits) {
    const auto order = torsion_order(tw, p);
    Json row{{"point", to_json(p)}, {"torsion", order.has_value()}, {"order", order ? Json(*order) : Json(nullptr)}};
    if (!order) {
      free.push_back(p);
      const Point back = untwist_point(base, p, d);
      row["pullback"] = to_json(back);
      row["pullback_on_curve"] = on_curve(base, back);
      row["pullback_trace"] = to_json(trace_map(base, back));
    }
    pts.push_back(row);
  }
  std::size_t base_free = 0;
  for (const Point& p : search_points(base, bounds))
    if (!is_torsion(base, p)) ++base_free;
  const int twist_lb = free.empty() ? 0 : 1;
  const int base_lb = base_free == 0 ? 0 : 1;
  const int field_lb = twist_lb + base_lb;
  doc["results"] = {{"curve", to_json(base)},
                    {"twist", to_json(tw)},
                    {"points", pts},
                    {"non_torsion_count", free.size()},
                    {"rank_lower_bound_twist", twist_lb},
                    {"rank_lower_bound_base", base_lb},
                    {"rank_lower_bound_field", field_lb}};
  say(doc, "twist by d=" + d.get_str() + ": " + cubic_str("Y", "X", 1, 0, tw.a(), tw.b()));
  say(doc, "non-torsion points: " + points_str(free));
  say(doc, "rank E(Q(sqrt(" + d.get_str() + "))) = rank E(Q) + rank E_d(Q) >= " + std::to_string(field_lb));

  int code = kExitOk;
  std::string message = "ok";
  if (const Json* sc = curve_claims(claims, a, b); sc && sc->contains("twist_ranks") && (*sc)["twist_ranks"].contains(d.get_str())) {
    const int claimed = (*sc)["twist_ranks"][d.get_str()].get<int>();
    const bool consistent = field_lb <= claimed;
    doc["comparison"] = {{"claimed_rank", claimed}, {"rank_lower_bound", field_lb},
                         {"consistent", consistent}, {"attained", field_lb == claimed}, {"agree", consistent}};
    say(doc, std::string(consistent ? "[consistent] " : "[contradicts] ") + "claimed rank " + std::to_string(claimed) +
                 ", lower bound " + std::to_string(field_lb));
    if (!consistent) {
      code = kExitFailure;
      message = "lower bound exceeds the claimed rank";
    }
  }
  finish(doc, code, message);
  return doc;
}

Json verify_report(const Int& n, const QuadElem& r, const QuadElem& s, const QuadElem& t) {
  Json doc = envelope("verify", {{"n", n.get_str()}, {"r", to_wire(r)}, {"s", to_wire(s)}, {"t", to_wire(t)}});
  const Verdict v = verify_triple(n, r, s, t);
  Json& res = doc["results"];
  res["ok"] = v.ok;
  res["reason"] = v.reason;
  res["norms"] = {{"r", norm(r).get_str()}, {"s", norm(s).get_str()}, {"t", norm(t).get_str()}};
  res["traces"] = {{"r", trace(r).get_str()}, {"s", trace(s).get_str()}, {"t", trace(t).get_str()}};
  res["point"] = nullptr;
  if (n != 0 && !r.is_zero()) {
    try {
      const SumProductSystem sys(n);
      const Point p = sys.forward_map(r, s);
      res["point"] = to_json(p);
      res["class"] = to_string(classify_point(p));
    } catch (const std::invalid_argument&) {
      // not a solution of the system; no curve point to report
    }
  }
  say(doc, std::string(v.ok ? "PASS " : "FAIL ") + triple_str(r, s, t) + ": " + v.reason);
  finish(doc, v.ok ? kExitOk : kExitFailure, v.ok ? "verified" : v.reason);
  return doc;
}

Json solve_report(const Int& n, const SolveOptions& options, const Json& claims) {
  Json doc = envelope("solve", {{"n", n.get_str()},
                                {"bounds", bounds_json(options.bounds)},
                                {"scan_bound", options.scan_bound.get_str()},
                                {"probe_bound", options.probe_bound.get_str()}});
  const SumProductSystem sys(n);
  const std::vector<SolutionRecord> records = solve_in_ok(n);
  const Json* sc = system_claims(claims, n);

  std::vector<Int> computed_fields;
  std::vector<Int> computed_rs;
  bool all_verified = true;
  Json recs = Json::array();
  Json audit = Json::array();
  for (const SolutionRecord& rec : records) {
    Json j = to_json(rec);
    const Point p = sys.forward_map(QuadElem(rec.r), rec.s);
    j["point"] = to_json(p);
    j["on_curve"] = on_curve(sys.curve(), p);
    j["class"] = to_string(classify_point(p));
    recs.push_back(j);
    all_verified = all_verified && rec.verified;
    if (rec.d && rec.verified) computed_fields.push_back(*rec.d);
    if (rec.verified) computed_rs.push_back(rec.r);
    audit.push_back({{"r", rec.r.get_str()}, {"delta", discriminant_of_r(n, rec.r).get_str()},
                     {"d", rec.d ? rec.d->get_str() : "1"}, {"f", rec.f.get_str()}, {"verified", rec.verified}});
    say(doc, std::string(rec.verified ? "record " : "UNVERIFIED ") + "r=" + rec.r.get_str() +
                 " d=" + (rec.d ? rec.d->get_str() : "rational") + " " +
                 triple_str(QuadElem(rec.r), rec.s, rec.t) + " point " + to_string(p) + " " +
                 to_string(classify_point(p)));
  }
  std::sort(computed_fields.begin(), computed_fields.end());
  computed_fields.erase(std::unique(computed_fields.begin(), computed_fields.end()), computed_fields.end());

  const std::vector<Int> claimed_fields = sc ? claimed_ints(*sc, "fields") : std::vector<Int>{};
  std::vector<Int> probe_fields = computed_fields;
  for (const Int& d : claimed_fields)
    if (!contains(probe_fields, d)) probe_fields.push_back(d);
  const Certificate cert = completeness_certificate(n, options.bounds, probe_fields, options.probe_bound);

  const std::vector<CandidateReport> scan = scan_beyond_divisors(n, options.scan_bound);
  std::vector<Int> unreproduced;
  for (const Int& d : claimed_fields)
    if (!contains(computed_fields, d)) unreproduced.push_back(d);
  Json integral = Json::array();
  Json flagged = Json::array();
  for (const CandidateReport& rep : scan) {
    if (rep.integral) integral.push_back(to_json(rep));
    if (contains(unreproduced, rep.d)) flagged.push_back(to_json(rep));
  }

  Json& res = doc["results"];
  res["curve"] = to_json(sys.curve());
  res["records"] = recs;
  res["all_verified"] = all_verified;
  res["fields"] = ints_json(computed_fields);
  res["divisor_audit"] = audit;
  res["certificate"] = to_json(cert);
  res["scan"] = {{"bound", options.scan_bound.get_str()}, {"checked", scan.size()},
                 {"integral", integral}, {"flagged", flagged}};
  say(doc, "fields: " + [&] {
    std::string s;
    for (const Int& d : computed_fields) s += (s.empty() ? "" : ", ") + d.get_str();
    return s.empty() ? std::string("none") : s;
  }());
  say(doc, "torsion " + cert.structure + ": " + [&] {
    std::string s;
    for (const TorsionAudit& t : cert.torsion)
      s += (s.empty() ? "" : ", ") + to_string(t.point) + (t.degenerate ? " degenerate" : " NON-DEGENERATE");
    return s;
  }());
  say(doc, "search (" + options.bounds.num_bound.get_str() + ", " + options.bounds.den_bound.get_str() +
               "): " + std::to_string(cert.search_hits.size()) + " points, " +
               std::to_string(cert.non_torsion.size()) + " non-torsion");
  say(doc, "exceptional probe over " + std::to_string(cert.probe.fields.size()) + " fields (coefficients <= " +
               cert.probe.coeff_bound.get_str() + "): " + std::to_string(cert.probe.found.size()) + " found");
  say(doc, std::string(cert.holds ? "certificate holds: " : "") + cert.statement);
  say(doc, "scan of non-divisors |r| <= " + options.scan_bound.get_str() + ": " + std::to_string(scan.size()) +
               " checked, " + std::to_string(integral.size()) + " integral");

  bool agree = true;
  if (sc) {
    Json cmp = Json::object();
    Json reproduced = Json::array();
    Json missing = Json::array();
    Json extra = Json::array();
    for (const Int& d : claimed_fields)
      if (contains(computed_fields, d)) reproduced.push_back(d.get_str());

    // Claimed triples, each matched against records and re-audited.
    std::vector<std::pair<Int, Json>> triple_audits;
    Json triples = Json::array();
    if (sc->contains("triples")) {
      for (const Json& ct : (*sc)["triples"]) {
        const QuadElem r = parse_quad(ct["r"].get<std::string>());
        const QuadElem s = parse_quad(ct["s"].get<std::string>());
        const QuadElem t = parse_quad(ct["t"].get<std::string>());
        const Verdict v = verify_triple(n, r, s, t);
        bool found = false;
        for (const SolutionRecord& rec : records)
          found = found || (rec.verified && QuadElem(rec.r) == r && same_pair(rec.s, rec.t, s, t));
        Json row{{"claimed", ct}, {"reproduced", found}, {"verified", v.ok}, {"reason", v.reason}};
        triples.push_back(row);
        agree = agree && found;
        Int field = 0;
        try {
          field = common_field(s, t);
        } catch (const std::invalid_argument&) {
        }
        triple_audits.emplace_back(field, row);
      }
      cmp["triples"] = triples;
    }

    for (const Int& d : unreproduced) {
      Json entry{{"d", d.get_str()}};
      Json tr = Json::array();
      for (const auto& [field, row] : triple_audits)
        if (field == d) tr.push_back(row);
      Json sc_rows = Json::array();
      for (const Json& f : flagged)
        if (f["d"] == d.get_str()) sc_rows.push_back(f);
      Json probe_hits = Json::array();
      for (const ExceptionalSolution& e : cert.probe.found)
        if (e.d == d) probe_hits.push_back(triple_json(e.triple));
      entry["claimed_triples"] = tr;
      entry["scan_entries"] = sc_rows;
      entry["probe_solutions"] = probe_hits;
      entry["divisor_audit"] = audit;
      missing.push_back(entry);
      std::string why = "no divisor r of n yields this field";
      for (const Json& row : tr) why = row["claimed"]["r"].get<std::string>() + ": " + row["reason"].get<std::string>();
      if (tr.empty() && !sc_rows.empty())
        why += "; non-divisor r = " + sc_rows[0]["r"].get<std::string>() + " gives it but " +
               sc_rows[0]["reason"].get<std::string>();
      say(doc, "[claimed] d=" + d.get_str() + " unreproduced: " + why);
    }
    for (const Int& d : computed_fields) {
      if (contains(claimed_fields, d)) continue;
      Json rows = Json::array();
      for (const SolutionRecord& rec : records)
        if (rec.d == d) {
          rows.push_back(to_json(rec));
          say(doc, "[computed] d=" + d.get_str() + " not claimed: " + triple_str(QuadElem(rec.r), rec.s, rec.t) +
                       " " + (rec.verified ? "verified" : rec.reason));
        }
      extra.push_back({{"d", d.get_str()}, {"records", rows}});
    }

    const std::vector<Int> claimed_rs = claimed_ints(*sc, "r_values");
    if (sc->contains("r_values")) {
      std::vector<Int> sorted_rs = computed_rs;
      std::sort(sorted_rs.begin(), sorted_rs.end());
      const bool same = sorted_rs == claimed_rs;
      cmp["r_values"] = {{"claimed", ints_json(claimed_rs)}, {"computed", ints_json(sorted_rs)}, {"agree", same}};
      agree = agree && same;
    }
    cmp["claimed_fields"] = ints_json(claimed_fields);
    cmp["computed_fields"] = ints_json(computed_fields);
    cmp["reproduced"] = reproduced;
    cmp["unreproduced"] = missing;
    cmp["extra"] = extra;
    agree = agree && missing.empty() && extra.empty();
    cmp["agree"] = agree;
    doc["comparison"] = cmp;
    if (missing.empty() && extra.empty())
      say(doc, "[agree] claimed field list reproduced exactly");
  }

  int code = kExitOk;
  std::string message = "all records verified, certificate holds, claims reproduced";
  if (!all_verified) {
    code = kExitFailure;
    message = "unverified records";
  } else if (!cert.holds) {
    code = kExitFailure;
    message = cert.statement;
  } else if (!agree) {
    code = kExitFailure;
    message = "computed solutions differ from the claimed list";
  }
  finish(doc, code, message);
  return doc;
}

Json full_report(const std::vector<Int>& ns, const SolveOptions& options, const Json& claims) {
  Json inputs{{"n", ints_json(ns)}, {"bounds", bounds_json(options.bounds)},
              {"scan_bound", options.scan_bound.get_str()}, {"probe_bound", options.probe_bound.get_str()}};
  Json doc = envelope("report", inputs);
  int code = kExitOk;
  Json systems = Json::array();
  auto absorb = [&](const Json& sub) {
    code = std::max(code, sub["status"]["exit_code"].get<int>());
    for (const Json& line : sub["summary"]) say(doc, "  " + line.get<std::string>());
    return Json{{"results", sub["results"]}, {"comparison", sub["comparison"]}, {"status", sub["status"]}};
  };
  for (const Int& n : ns) {
    say(doc, "n = " + n.get_str());
    const SumProductSystem sys(n);
    Json entry{{"n", n.get_str()}};
    entry["curve"] = absorb(curve_report(n, claims));
    entry["torsion"] = absorb(torsion_report(sys.curve().a(), sys.curve().b(), claims));
    entry["solve"] = absorb(solve_report(n, options, claims));
    systems.push_back(entry);
  }
  Json twists = Json::array();
  if (claims.contains("systems")) {
    for (const auto& [key, sc] : claims["systems"].items()) {
      if (!sc.contains("twist_ranks") || !sc.contains("curve")) continue;
      if (!contains(ns, parse_int(key))) continue;
      const Rat a = parse_rat(sc["curve"]["a"].get<std::string>());
      const Rat b = parse_rat(sc["curve"]["b"].get<std::string>());
      std::vector<Int> ds;
      for (const auto& [d, rank] : sc["twist_ranks"].items()) ds.push_back(parse_int(d));
      std::sort(ds.begin(), ds.end());
      for (const Int& d : ds) {
        say(doc, "n = " + key + ", twist d = " + d.get_str());
        Json entry = absorb(twist_report(a, b, d, options.bounds, claims));
        entry["n"] = key;
        entry["d"] = d.get_str();
        twists.push_back(entry);
      }
    }
  }
  doc["results"] = {{"systems", systems}, {"twists", twists}};
  finish(doc, code, code == kExitOk ? "all claims reproduced" : "discrepancies found; see per-system comparisons");
  return doc;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const Json& line : report["summary"]) out << line.get<std::string>() << '\n';
  out << "status: " << report["status"]["message"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace sumprod

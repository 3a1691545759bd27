// sumprod: solve r + s + t = rst = n in rings of integers of quadratic fields.
//
// Exit codes: 0 success, 1 verification or comparison failure, 2 usage error.

#include "sumprod/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using sumprod::Int;
using sumprod::Json;

struct Flags {
  std::string n, a, b, d, r, s, t;
  std::vector<std::string> ns{"1", "2", "3"};
  std::optional<std::string> bound;
  std::string den_bound = "8";
  std::string scan_bound = "1000";
  std::string probe_bound = "30";
  std::string format = "text";
  std::string claims_path;
};

sumprod::SearchBounds search_bounds(const Flags& f) {
  sumprod::SearchBounds b;
  if (f.bound)
    b.num_bound = sumprod::parse_int(*f.bound);
  else if (const char* env = std::getenv("SUMPROD_SEARCH_BOUND"); env && *env)
    b.num_bound = sumprod::parse_int(env);
  b.den_bound = sumprod::parse_int(f.den_bound);
  if (b.num_bound < 1 || b.den_bound < 1) throw std::invalid_argument("search bounds must be >= 1");
  return b;
}

sumprod::QuadElem element(const std::string& text, const std::string& field) {
  sumprod::QuadElem x = sumprod::parse_quad(text);
  if (!field.empty() && !x.is_rational() && x.d() != sumprod::parse_int(field))
    throw std::invalid_argument("'" + text + "' is not in Q(sqrt(" + field + "))");
  return x;
}

int emit(Json doc, const Flags& f, std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (f.format == "json") {
    doc["timings"] = {{"elapsed_ms", elapsed.count()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << sumprod::render_text(doc);
  }
  return doc["status"]["exit_code"].get<int>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve r + s + t = rst = n in rings of integers of quadratic fields"};
  app.require_subcommand(1);
  Flags f;

  auto* curve = app.add_subcommand("curve", "Print the Weierstrass models for n");
  curve->add_option("--n", f.n, "Sum and product")->required();

  auto* solve = app.add_subcommand("solve", "Enumerate and verify all solutions for n");
  solve->add_option("--n", f.n, "Sum and product")->required();

  auto* torsion = app.add_subcommand("torsion", "Rational torsion of Y^2 = X^3 + A X + B");
  auto* search = app.add_subcommand("search", "Bounded rational point search");
  auto* twist = app.add_subcommand("twist", "Quadratic twist and rank lower bound");
  for (auto* sub : {torsion, search, twist}) {
    sub->add_option("--a", f.a, "Coefficient A")->required();
    sub->add_option("--b", f.b, "Coefficient B")->required();
  }
  twist->add_option("--d", f.d, "Square-free twist parameter")->required();

  auto* verify = app.add_subcommand("verify", "Audit one triple r, s, t");
  verify->add_option("--n", f.n, "Sum and product")->required();
  verify->add_option("--r", f.r, "r")->required();
  verify->add_option("--s", f.s, "s, e.g. \"(10 + 1*sqrt(101))/2\"")->required();
  verify->add_option("--t", f.t, "t")->required();
  verify->add_option("--d", f.d, "Field of s and t (optional)");

  auto* report = app.add_subcommand("report", "Full comparison against the shipped claims");
  report->add_option("--n", f.ns, "Systems to include")->delimiter(',');

  for (auto* sub : {solve, search, twist, report}) {
    sub->add_option("--bound", f.bound, "Search numerator bound (default 10000 or $SUMPROD_SEARCH_BOUND)");
    sub->add_option("--den-bound", f.den_bound, "Search denominator scale bound");
  }
  for (auto* sub : {solve, report}) {
    sub->add_option("--scan-bound", f.scan_bound, "Non-divisor scan bound");
    sub->add_option("--probe-bound", f.probe_bound, "Exceptional probe coefficient bound");
  }
  for (auto* sub : {curve, solve, torsion, search, twist, verify, report}) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--claims", f.claims_path, "Claims file to compare against");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sumprod::kExitOk : sumprod::kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Json claims = f.claims_path.empty() ? sumprod::builtin_claims() : sumprod::load_claims(f.claims_path);
    sumprod::SolveOptions opts;
    if (*solve || *search || *twist || *report) {
      opts.bounds = search_bounds(f);
    }
    if (*solve || *report) {
      opts.scan_bound = sumprod::parse_int(f.scan_bound);
      opts.probe_bound = sumprod::parse_int(f.probe_bound);
    }

    if (*curve) return emit(sumprod::curve_report(sumprod::parse_int(f.n), claims), f, start);
    if (*solve) return emit(sumprod::solve_report(sumprod::parse_int(f.n), opts, claims), f, start);
    if (*torsion)
      return emit(sumprod::torsion_report(sumprod::parse_rat(f.a), sumprod::parse_rat(f.b), claims), f, start);
    if (*search)
      return emit(sumprod::search_report(sumprod::parse_rat(f.a), sumprod::parse_rat(f.b), opts.bounds), f, start);
    if (*twist)
      return emit(sumprod::twist_report(sumprod::parse_rat(f.a), sumprod::parse_rat(f.b), sumprod::parse_int(f.d),
                                        opts.bounds, claims),
                  f, start);
    if (*verify)
      return emit(sumprod::verify_report(sumprod::parse_int(f.n), element(f.r, f.d), element(f.s, f.d),
                                         element(f.t, f.d)),
                  f, start);
    std::vector<Int> ns;
    for (const std::string& s : f.ns) ns.push_back(sumprod::parse_int(s));
    return emit(sumprod::full_report(ns, opts, claims), f, start);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sumprod::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sumprod::kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sumprod::kExitUsage;
  }
}

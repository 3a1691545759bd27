#pragma once

// Solutions of r + s + t = rst = n in rings of integers of quadratic fields.
//
// If one of r, s, t is rational it is an integer r, and s t = n / r lies in
// O_K cap Q = Z, so r | n. For each divisor r the remaining pair are the roots
// of the monic integer quadratic z^2 - (n - r) z + n / r, hence algebraic
// integers, and the field is fixed by their discriminant. The algebra behind
// "one of them is rational" only holds under curve-specific facts, so
// completeness is reported as a certificate, never asserted.

#include "sumprod/elliptic.hpp"
#include "sumprod/quad.hpp"
#include "sumprod/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumprod {

struct SolutionRecord {
  Int n;
  Int r;
  /// Square-free field discriminant; empty when s and t are rational.
  std::optional<Int> d;
  /// (n - r)^2 - 4n/r = d f^2.
  Int f;
  /// Canonical order: positive sqrt(d) coefficient (or the larger rational) first.
  QuadElem s;
  QuadElem t;
  bool verified = false;
  std::string reason;
};

struct Verdict {
  bool ok = false;
  std::string reason;
};

struct CandidateReport {
  Int r;
  Rat delta;
  /// sqrt(delta) = f sqrt(d) / den(delta); d = f = 0 when delta = 0.
  Int d;
  Int f;
  bool integral = false;
  std::string reason;
};

enum class PointClass { exceptional, non_exceptional };

std::string to_string(PointClass c);

/// (n - r)^2 - 4n/r. Throws std::invalid_argument for r = 0.
Rat discriminant_of_r(const Int& n, const Int& r);

/// Every r with r | n, both signs, ascending.
std::vector<Int> candidate_rs(const Int& n);

/// True iff r + s + t = n, r s t = n and all three lie in O_K; the reason
/// names the first failing check ("ok" otherwise).
Verdict verify_triple(const Int& n, const QuadElem& r, const QuadElem& s, const QuadElem& t);

/// One record per divisor r, sorted by r, each re-checked by verify_triple.
std::vector<SolutionRecord> solve_in_ok(const Int& n);

/// Exceptional iff the x-coordinate is not fixed by conjugation. Throws
/// std::invalid_argument for the point at infinity.
PointClass classify_point(const Point& p);

/// Every nonzero |r| <= bound that does not divide n, with the would-be pair
/// s, t and why it is not integral.
std::vector<CandidateReport> scan_beyond_divisors(const Int& n, const Int& bound);

struct TorsionAudit {
  Point point;
  int order = 1;
  bool degenerate = false;
};

/// A solution with none of r, s, t rational. Its curve point is exceptional
/// and invisible to the divisor enumeration.
struct ExceptionalSolution {
  Int d;
  Triple triple;
};

struct ExceptionalProbe {
  std::vector<Int> fields;
  /// |a|, |b| <= coeff_bound for r = a + b w over the integral basis {1, w}.
  Int coeff_bound;
  std::vector<ExceptionalSolution> found;
};

/// Exhaustive bounded search for exceptional solutions in the given fields.
ExceptionalProbe probe_exceptional(const Int& n, const std::vector<Int>& fields, const Int& coeff_bound);

struct Certificate {
  Int n;
  Curve curve;
  std::vector<TorsionAudit> torsion;
  std::string structure;
  SearchBounds bounds;
  std::vector<Point> search_hits;
  std::vector<Point> non_torsion;
  bool all_found_torsion = false;
  bool all_torsion_degenerate = false;
  ExceptionalProbe probe;
  bool holds = false;
  std::string statement;
};

/// Evidence that the divisor enumeration is complete. `probe_fields` defaults
/// to the fields produced by solve_in_ok.
Certificate completeness_certificate(const Int& n, const SearchBounds& bounds,
                                     std::optional<std::vector<Int>> probe_fields = std::nullopt,
                                     const Int& probe_bound = 30);

}  // namespace sumprod

#pragma once

// Machine-readable reports behind the command-line tool and the Python
// module. Every report has the same envelope:
//
//   { "schema_version", "command", "inputs", "results", "comparison",
//     "status": {"exit_code", "message"}, "summary": [lines] }
//
// Exact numbers are always decimal strings. Timings are added by the caller
// outside this envelope so that results stay byte-for-byte reproducible.

#include "sumprod/elliptic.hpp"
#include "sumprod/solver.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sumprod {

using Json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Published claims shipped with the library (data/claims.json).
const Json& builtin_claims();
/// Parses a claims file; throws std::runtime_error on I/O or parse errors.
Json load_claims(const std::string& path);

struct SolveOptions {
  SearchBounds bounds;
  Int scan_bound = 1000;
  Int probe_bound = 30;
};

Json curve_report(const Int& n, const Json& claims = builtin_claims());
Json torsion_report(const Rat& a, const Rat& b, const Json& claims = builtin_claims());
Json search_report(const Rat& a, const Rat& b, const SearchBounds& bounds);
Json twist_report(const Rat& a, const Rat& b, const Int& d, const SearchBounds& bounds,
                  const Json& claims = builtin_claims());
Json solve_report(const Int& n, const SolveOptions& options = {}, const Json& claims = builtin_claims());
Json verify_report(const Int& n, const QuadElem& r, const QuadElem& s, const QuadElem& t);
/// All systems in `ns` plus the claimed twist ranks.
Json full_report(const std::vector<Int>& ns, const SolveOptions& options = {},
                 const Json& claims = builtin_claims());

/// Summary lines joined with newlines.
std::string render_text(const Json& report);

// JSON encodings shared with the bindings.
Json to_json(const QuadElem& x);
Json to_json(const Point& p);
Json to_json(const Curve& c);
Json to_json(const SolutionRecord& rec);
Json to_json(const Certificate& cert);
Json to_json(const CandidateReport& rep);

}  // namespace sumprod

"""Exact arithmetic for r + s + t = rst = n over quadratic fields.

Exact numbers are strings in the wire format ("p", "p/q",
"p + q*sqrt(d)", "(p + q*sqrt(d))/k"); reports are plain dicts with the
same layout as the CLI's JSON output.
"""

import json

from . import _core
from ._core import QuadElem, candidate_rs, squarefree_kernel, verify_triple

__all__ = [
    "QuadElem",
    "candidate_rs",
    "curve",
    "full_report",
    "render_text",
    "search",
    "solve",
    "solve_in_ok",
    "squarefree_kernel",
    "torsion",
    "twist",
    "verify",
    "verify_triple",
]


def solve_in_ok(n):
    """One record per divisor r of n."""
    return json.loads(_core._solve_in_ok(n))


def curve(n, claims=None):
    return json.loads(_core._curve_report(n, claims))


def torsion(a, b, claims=None):
    return json.loads(_core._torsion_report(a, b, claims))


def search(a, b, bound=None, den_bound=None):
    return json.loads(_core._search_report(a, b, bound, den_bound))


def twist(a, b, d, bound=None, den_bound=None, claims=None):
    return json.loads(_core._twist_report(a, b, d, bound, den_bound, claims))


def solve(n, bound=None, den_bound=None, scan_bound=None, probe_bound=None, claims=None):
    return json.loads(_core._solve_report(n, bound, den_bound, scan_bound, probe_bound, claims))


def verify(n, r, s, t):
    return json.loads(_core._verify_report(n, r, s, t))


def full_report(ns=(1, 2, 3), bound=None, den_bound=None, scan_bound=None, claims=None):
    return json.loads(_core._full_report(list(ns), bound, den_bound, scan_bound, claims))


def render_text(report):
    return _core.render_text(json.dumps(report))

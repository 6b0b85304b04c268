"""Universal Diophantine pairs over the integers.

Thin wrappers over the C++ core. Integers are exact Python ints.
"""

import json

from . import _core
from ._core import ParseError, ResourceError

__all__ = [
    "ParseError",
    "ResourceError",
    "parse_poly",
    "poly_terms",
    "eta",
    "universal_pair",
    "three_squares",
    "degree_report",
    "construct",
    "degree_q_tilde",
    "eval_q_tilde",
    "m_q_eval",
    "suite_names",
    "verify",
]


def parse_poly(text):
    """Canonical printed form of the polynomial in a, z1..z99."""
    return _core.parse_poly(text)


def poly_terms(text):
    """Terms as a list of (exponents dict, coefficient) pairs."""
    doc = json.loads(_core.poly_json(text))
    return [(t["exp"], int(t["coef"])) for t in doc["terms"]]


def eta(nu, delta):
    return int(_core.eta(nu, delta))


def universal_pair(nu, delta):
    return (11, eta(nu, delta))


def three_squares(n):
    """(x, y, z) >= 0 with n = x^2 + y^2 + z^2 + z."""
    return tuple(int(v) for v in _core.three_squares(str(n)))


def degree_report(text):
    return json.loads(_core.degree_report(text))


def construct(text):
    """The eleven-unknown polynomial as a DAG (parsed JSON)."""
    return json.loads(_core.construct(text))


def degree_q_tilde(text):
    return int(_core.degree_q_tilde(text))


def eval_q_tilde(text, point):
    """Exact value at a dict binding a, f, g, h, k, l, w, x, y, z9, z10, z11."""
    return int(_core.eval_q_tilde(text, {k: str(int(v)) for k, v in point.items()}), 16)


def m_q_eval(q, A, S, T, R, n):
    return int(_core.m_q_eval(q, [str(a) for a in A], str(S), str(T), str(R), str(n)), 16)


def suite_names():
    return list(_core.suite_names())


def verify(suite, seed=1, max=None):
    """Run a verification suite ("all" for every suite); returns the report dict."""
    return json.loads(_core.verify(suite, seed, max))

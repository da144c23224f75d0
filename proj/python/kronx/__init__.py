"""Python access to the kronx library.

Matrices use the same JSON form as the command line tool:
``{"order": n, "field": ..., "terms": [[i, j, ...], ...]}`` with 1-based indices.
"""

import json

from . import _kronx
from ._kronx import KronxError, run, suite_names

__all__ = [
    "KronxError",
    "cg_coefficient",
    "cg_matrix",
    "couple",
    "eigenvalues",
    "heisenberg",
    "jc_evolution",
    "kron",
    "run",
    "su2",
    "suite_names",
    "to_dense",
    "verify",
]


def su2(twoj, op="jplus"):
    return json.loads(_kronx.su2(twoj, op))


def couple(twoj1, twoj2, op="jplus", block=False):
    return json.loads(_kronx.couple(twoj1, twoj2, op, block))


def cg_matrix(twoj1, twoj2):
    return json.loads(_kronx.cg_matrix(twoj1, twoj2))


def cg_coefficient(twoj1, twom1, twoj2, twom2, twoj, twom):
    """<j1 m1; j2 m2 | J M> as (sign, radicand numerator, radicand denominator, float)."""
    sign, num, den, value = _kronx.cg_coefficient(twoj1, twom1, twoj2, twom2, twoj, twom)
    return sign, int(num), int(den), value


def kron(*matrices):
    return json.loads(_kronx.kron([json.dumps(m) for m in matrices]))


def eigenvalues(matrix, tol=1e-12):
    return _kronx.eigenvalues(json.dumps(matrix), tol)


def heisenberg(sites, jx="1", jy="1", jz="1", periodic=True):
    return json.loads(_kronx.heisenberg(sites, str(jx), str(jy), str(jz), periodic))


def jc_evolution(gamma, cutoff, time):
    return json.loads(_kronx.jc_evolution(gamma, cutoff, time))


def verify(suite, max_twoj=5, tol=1e-10, seed=20240601):
    return _kronx.verify(suite, max_twoj, tol, seed)


def _value(field, term):
    if field == "rational":
        return int(term[2]) / int(term[3])
    if field == "sqrt_rational":
        return term[2] * (int(term[3]) / int(term[4])) ** 0.5
    return complex(term[2], term[3])


def to_dense(matrix):
    """Nested lists of floats (or complex numbers)."""
    n = matrix["order"]
    field = matrix.get("field", "rational")
    zero = 0j if field == "complex" else 0.0
    rows = [[zero] * n for _ in range(n)]
    for t in matrix["terms"]:
        rows[t[0] - 1][t[1] - 1] = _value(field, t)
    return rows

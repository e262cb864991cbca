"""Exact computations in multiset partition algebras.

Diagrams and algebra elements are plain JSON-shaped values, e.g.
``{"lambda": [2], "edges": [[[0], [1]], [[1], [0]], [[1], [1]]]}``.
Rationals are strings such as ``"-1/2"``; polynomials in xi are lists of them,
constant term first.
"""

import json as _json
from fractions import Fraction

from . import _mpa
from ._mpa import (
    Error,
    InvalidArgument,
    MalformedDiagram,
    ParseError,
    ResourceError,
    a_coeff,
    centralizer_dimension,
    lambda_set,
    r_coeff,
    r_coeff_oracle,
    set_threads,
    verify,
)

__all__ = [
    "Error", "InvalidArgument", "MalformedDiagram", "ParseError", "ResourceError",
    "basis", "multiply", "structure_poly", "brute_force_count", "embed", "idempotent", "phi",
    "centralizer_dimension", "a_coeff", "lambda_set", "r_coeff", "r_coeff_oracle",
    "rsk", "inverse_rsk", "verify", "set_threads", "poly_value",
]


def _enc(x):
    return x if isinstance(x, str) else _json.dumps(x)


def basis(lam):
    return _json.loads(_mpa.basis(list(lam)))


def multiply(a, b, lam=None):
    """Product of two multiset partition algebra elements, or of two partition algebra elements (objects with "k")."""
    return _json.loads(_mpa.multiply(_enc(a), _enc(b), None if lam is None else list(lam)))


def structure_poly(g1, g2, g):
    """Coefficient of [g] in [g1][g2] as a list of rational strings."""
    return _json.loads(_mpa.structure_poly(_enc(g1), _enc(g2), _enc(g)))


def brute_force_count(g1, g2, g, n):
    return _mpa.brute_force_count(_enc(g1), _enc(g2), _enc(g), n)


def embed(a, lam=None):
    return _json.loads(_mpa.embed(_enc(a), None if lam is None else list(lam)))


def idempotent(lam):
    return _json.loads(_mpa.idempotent(list(lam)))


def phi(a, n, lam=None):
    return _json.loads(_mpa.phi(_enc(a), n, None if lam is None else list(lam)))


def rsk(partition, n):
    return _json.loads(_mpa.rsk(_enc(partition), n))


def inverse_rsk(pair, lam):
    return _json.loads(_mpa.inverse_rsk(_enc(pair), list(lam)))


def poly_value(coeffs, xi):
    """Evaluates a coefficient list at xi exactly."""
    return sum(Fraction(c) * Fraction(xi) ** i for i, c in enumerate(coeffs))

"""Exact computational engine for the symplectic fermion quasi-Hopf algebras.

Thin convenience layer over the compiled module: check-runner functions
return lists of dicts (parsed from the JSON the core emits), matrices come
back as nested lists of exact scalar strings.
"""

import json as _json

from _qsf import (  # noqa: F401
    Cyc,
    center_dimension,
    dimension,
    s_matrix,
    t_matrix,
)
import _qsf as _core

__all__ = [
    "Cyc",
    "dimension",
    "center_dimension",
    "s_matrix",
    "t_matrix",
    "verify",
    "center_checks",
    "module_checks",
    "sl2z_checks",
    "qhat_checks",
    "double_checks",
    "compare_checks",
]


def _parsed(raw):
    return _json.loads(raw)


def verify(n, beta_exp, nu=1, suite="all", max_seconds=0.0):
    """Run the quasi-Hopf axiom suite; returns a list of check dicts."""
    return _parsed(_core.verify(n, beta_exp, nu, suite, max_seconds))


def center_checks(n, beta_exp, nu=1):
    return _parsed(_core.center_checks(n, beta_exp, nu))


def module_checks(n, beta_exp, nu=1):
    return _parsed(_core.module_checks(n, beta_exp, nu))


def sl2z_checks(n, beta_exp, nu=1):
    return _parsed(_core.sl2z_checks(n, beta_exp, nu))


def qhat_checks(n, beta_exp, max_seconds=0.0):
    return _parsed(_core.qhat_checks(n, beta_exp, max_seconds))


def double_checks(n, beta_exp):
    return _parsed(_core.double_checks(n, beta_exp))


def compare_checks(n):
    return _parsed(_core.compare_checks(n))

"""Python interface to the sympal core.

Groups, verdicts, profiles and sweep reports are plain dicts in the same JSON
layout the ``sympal`` command line tool uses.
"""

import json

from . import _core
from ._core import DEFAULT_CAP, SympalError, find_np_primes, fixture_groups, sp_order

__all__ = [
    "DEFAULT_CAP",
    "SympalError",
    "check_npower_distinct",
    "classify",
    "find_np_primes",
    "fixture_groups",
    "group_order",
    "is_irreducible",
    "np_group",
    "run_cli",
    "sp_order",
    "sweep",
    "twist_by_cyclotomic",
]


def _enc(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def group_order(group, cap=DEFAULT_CAP):
    return _core.group_order(_enc(group), cap)


def is_irreducible(group):
    """'irreducible', 'reducible' or 'unverified'."""
    return _core.is_irreducible(_enc(group))


def classify(group, cap=DEFAULT_CAP):
    return json.loads(_core.classify(_enc(group), cap))


def np_group(n, q, p, ell, alpha=None):
    """The (n,p)-group as a group document with 'form', 'params' and 'irreducibility'."""
    return json.loads(_core.np_group(n, q, p, ell, alpha))


def check_npower_distinct(profile):
    return json.loads(_core.check_npower_distinct(_enc(profile)))


def twist_by_cyclotomic(profile, a):
    return json.loads(_core.twist_by_cyclotomic(_enc(profile), a))


def sweep(group, kind, normal=None, p=None):
    """kind is 'proposition', 'restriction', 'mackey' or 'frobenius'."""
    return json.loads(_core.sweep(_enc(group), kind, None if normal is None else _enc(normal), p))


def run_cli(*args):
    return _core.run_cli([str(a) for a in args])

"""Directed loops on directed suspensions of cubical complexes.

Complexes, paths and words are plain dicts in the same JSON layout the
command-line tool reads; results come back as dicts or lists.
"""

import json

from . import _core
from ._core import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "contract",
    "evaluate",
    "homology",
    "j_beta_prime",
    "loop_homology",
    "make_increasing",
    "sec",
    "selftest",
    "straighten",
    "suspension",
    "validate",
]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def validate(complex):
    return json.loads(_core.validate(_dump(complex)))


def homology(complex, field="q", reduced=False):
    return json.loads(_core.homology(_dump(complex), field, reduced))


def loop_homology(complex, field="q", degree=10):
    return json.loads(_core.loop_homology(_dump(complex), field, degree))


def suspension(complex):
    return json.loads(_core.suspension(_dump(complex)))


def sec(path, complex):
    return json.loads(_core.sec(_dump(path), _dump(complex)))


def evaluate(path, complex, time):
    return json.loads(_core.evaluate(_dump(path), _dump(complex), str(time)))


def make_increasing(path, complex, epsilon="1/4"):
    return json.loads(_core.make_increasing(_dump(path), _dump(complex), str(epsilon)))


def j_beta_prime(word, complex):
    return json.loads(_core.j_beta_prime(_dump(word), _dump(complex)))


def straighten(path, complex, samples=5):
    return json.loads(_core.straighten(_dump(path), _dump(complex), samples))


def contract(path, complex):
    return json.loads(_core.contract(_dump(path), _dump(complex)))


def selftest(seed=None):
    return _core.selftest() if seed is None else _core.selftest(seed)

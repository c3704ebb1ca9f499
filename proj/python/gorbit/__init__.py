"""Python access to the gorbit library.

Algebra files and reports are JSON documents; the helpers below parse them
into plain Python objects. Rationals stay exact as strings such as "-4/3".
"""

import json
from fractions import Fraction

from . import _core
from ._core import GorbitError, __version__, construction_kinds

__all__ = [
    "GorbitError",
    "__version__",
    "construct",
    "construction_kinds",
    "go_check",
    "killing_form",
    "nilradical",
    "radical",
    "run",
    "to_fractions",
]


def _text(algebra):
    return algebra if isinstance(algebra, str) else json.dumps(algebra)


def construct(kind, alpha="2", n=2, c_scale="1", copies=3, variant="killing_orthogonal"):
    return json.loads(_core.construct(kind, str(alpha), n, str(c_scale), copies, variant))


def nilradical(algebra):
    return json.loads(_core.nilradical(_text(algebra)))


def radical(algebra):
    return json.loads(_core.radical(_text(algebra)))


def killing_form(algebra):
    return json.loads(_core.killing_form(_text(algebra)))


def go_check(algebra, samples=64, seed=0):
    return json.loads(_core.go_check(_text(algebra), samples, seed))


def run(*args):
    """Runs a CLI command in-process and returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]

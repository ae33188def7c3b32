"""Parsing of the symbolic subscript notation used by the transcribed tables.

A display is a string such as ``"M_{a,b,c|c} + 2M_{a,b,c+1|c+1}"``; each
subscript entry is an affine expression in the parameters ``a, b, c``.
Guards are comma-separated comparisons (``"b<c, a=c+1"``), read as a
conjunction.  Nothing here evaluates arbitrary Python.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from typing import Optional

from ..lattice import Shape, Weight

_ATOM = re.compile(r"([+-]?)(\d+|[a-z])")
_AFFINE = re.compile(r"[+-]?(\d+|[a-z])([+-](\d+|[a-z]))*")
_TERM = re.compile(r"(\d*)\s*([ML])_?\{([^{}]*)\}")
_CMP = re.compile(r"^(.+?)(<=|>=|<|>|=)(.+)$")
_OPS = {
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
    "=": operator.eq,
}


class NotationError(ValueError):
    pass


def eval_affine(expr: str, env: dict) -> int:
    expr = expr.replace(" ", "")
    if not _AFFINE.fullmatch(expr):
        raise NotationError(f"not an affine expression: {expr!r}")
    total = 0
    for sign, atom in _ATOM.findall(expr):
        value = int(atom) if atom.isdigit() else env[atom]
        total += -value if sign == "-" else value
    return total


def guard_holds(guard: str, env: dict) -> bool:
    for clause in guard.split(","):
        match = _CMP.match(clause.replace(" ", ""))
        if not match:
            raise NotationError(f"bad guard clause {clause!r}")
        lhs, op, rhs = match.groups()
        if not _OPS[op](eval_affine(lhs, env), eval_affine(rhs, env)):
            return False
    return True


@dataclass(frozen=True)
class Term:
    coeff: int
    symbol: str  # "M" or "L"
    subscript: str
    weight: Optional[Weight]  # None when the subscript is malformed
    problem: str = ""


def instantiate(subscript: str, env: dict, shape: Shape) -> Weight:
    if subscript.count("|") != 1:
        raise NotationError(f"subscript {{{subscript}}} needs exactly one '|'")
    left, right = subscript.split("|")
    q = [eval_affine(x, env) for x in left.split(",")]
    r = [eval_affine(x, env) for x in right.split(",")]
    if len(q) != shape.m or len(r) != shape.n:
        raise NotationError(f"subscript {{{subscript}}} does not fit {shape}")
    return Weight(q, r)


def parse_display(display: str, env: dict, shape: Shape) -> list:
    terms = []
    for coeff, symbol, sub in _TERM.findall(display):
        k = int(coeff) if coeff else 1
        try:
            terms.append(Term(k, symbol, sub, instantiate(sub, env, shape)))
        except NotationError as exc:
            terms.append(Term(k, symbol, sub, None, str(exc)))
    return terms


def repeated_subscripts(display: str) -> list:
    """Subscripts written out more than once (without a coefficient)."""
    subs = [sub.replace(" ", "") for _, _, sub in _TERM.findall(display)]
    return sorted({s for s in subs if subs.count(s) > 1})


def bind_pattern(pattern: str, lam: Weight) -> Optional[dict]:
    """Solve ``pattern`` (e.g. ``"b,a,c|c"``) for the single-letter symbols."""
    left, right = pattern.split("|")
    symbols = left.split(",") + right.split(",")
    coords = lam.coords()
    if len(symbols) != len(coords):
        return None
    env = {}
    for s, v in zip(symbols, coords):
        if env.setdefault(s, v) != v:
            return None
    return env

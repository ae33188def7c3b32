"""Integer weight lattice of gl(m|n) in rho-shifted tuple coordinates.

A weight is stored as ``(q_1..q_m | r_1..r_n)`` and stands for
``sum q_i delta_i - sum r_j eps_j``.  The Verma module labelled by a tuple
has highest weight ``tuple - rho``; nothing in this package ever subtracts
rho, every formula works directly on the tuples.

Consequences of the sign convention that are easy to get wrong:

* ``eps_j`` as a displacement is ``r_j -= 1`` (``-eps_j`` is ``r_j += 1``);
* ``form(a, b) = sum q q' - sum r r'``;
* the odd root ``delta_i - eps_j`` is ``+1`` on ``q_i`` and ``+1`` on ``r_j``;
* ``eps_i - eps_j`` is ``-1`` on ``r_i`` and ``+1`` on ``r_j``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

MAX_RANK = 3


class ShapeError(ValueError):
    """Weights of different algebras were mixed, or the algebra is unsupported."""


@dataclass(frozen=True, order=True)
class Shape:
    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m <= MAX_RANK and 1 <= self.n <= MAX_RANK):
            raise ShapeError(f"gl({self.m}|{self.n}) is outside 1 <= m, n <= {MAX_RANK}")

    def __str__(self):
        return f"gl({self.m}|{self.n})"

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse ``"3x1"`` or ``"3|1"``."""
        match = re.fullmatch(r"\s*(\d+)\s*[xX|,]\s*(\d+)\s*", text)
        if not match:
            raise ShapeError(f"cannot parse algebra shape {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))


@dataclass(frozen=True, order=True)
class Weight:
    """An integral weight (or a displacement between weights)."""

    q: tuple
    r: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))

    @property
    def shape(self) -> Shape:
        return Shape(len(self.q), len(self.r))

    @classmethod
    def parse(cls, text: str, shape: Optional[Shape] = None) -> "Weight":
        """Parse ``"q1,q2,...|r1,...,rn"``; spaces are ignored."""
        if text.count("|") != 1:
            raise ValueError(f"weight {text!r} must contain exactly one '|'")
        left, right = text.split("|")
        try:
            q = [int(x) for x in left.replace(" ", "").split(",")]
            r = [int(x) for x in right.replace(" ", "").split(",")]
        except ValueError as exc:
            raise ValueError(f"weight {text!r} has a non-integer entry") from exc
        w = cls(q, r)
        w.shape  # validates the rank bounds
        if shape is not None and w.shape != shape:
            raise ShapeError(f"weight {text!r} does not belong to {shape}")
        return w

    @classmethod
    def zero(cls, shape: Shape) -> "Weight":
        return cls((0,) * shape.m, (0,) * shape.n)

    def __str__(self):
        return ",".join(map(str, self.q)) + "|" + ",".join(map(str, self.r))

    def __repr__(self):
        return f"Weight({self})"

    def _check(self, other: "Weight"):
        if len(self.q) != len(other.q) or len(self.r) != len(other.r):
            raise ShapeError(f"shape mismatch: {self} vs {other}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            tuple(x + y for x, y in zip(self.q, other.q)),
            tuple(x + y for x, y in zip(self.r, other.r)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            tuple(x - y for x, y in zip(self.q, other.q)),
            tuple(x - y for x, y in zip(self.r, other.r)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.q), tuple(-x for x in self.r))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * x for x in self.q), tuple(k * x for x in self.r))

    __rmul__ = __mul__

    def coords(self) -> tuple:
        return self.q + self.r


def delta(shape: Shape, i: int) -> Weight:
    """``delta_i`` (1-based) as a displacement."""
    q = [0] * shape.m
    q[i - 1] = 1
    return Weight(q, (0,) * shape.n)


def eps(shape: Shape, j: int) -> Weight:
    """``eps_j`` (1-based) as a displacement: lowers ``r_j`` by one."""
    r = [0] * shape.n
    r[j - 1] = -1
    return Weight((0,) * shape.m, r)


# --------------------------------------------------------------------- roots

EVEN_DD = "dd"
EVEN_EE = "ee"
ODD = "odd"


@dataclass(frozen=True, order=True)
class Root:
    """A positive root.  Indices are 1-based as in ``delta_i - eps_j``."""

    shape: Shape
    kind: str
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in (EVEN_DD, EVEN_EE, ODD):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind != ODD and not self.i < self.j:
            raise ValueError("even roots need i < j")

    @property
    def is_even(self) -> bool:
        return self.kind != ODD

    @property
    def is_odd(self) -> bool:
        return self.kind == ODD

    @property
    def vector(self) -> Weight:
        s = self.shape
        if self.kind == EVEN_DD:
            return delta(s, self.i) - delta(s, self.j)
        if self.kind == EVEN_EE:
            return eps(s, self.i) - eps(s, self.j)
        return delta(s, self.i) - eps(s, self.j)

    def __str__(self):
        if self.kind == EVEN_DD:
            return f"d{self.i}-d{self.j}"
        if self.kind == EVEN_EE:
            return f"e{self.i}-e{self.j}"
        return f"d{self.i}-e{self.j}"


@lru_cache(maxsize=None)
def even_positive_roots(shape: Shape) -> tuple:
    dd = [Root(shape, EVEN_DD, i, j) for i, j in itertools.combinations(range(1, shape.m + 1), 2)]
    ee = [Root(shape, EVEN_EE, i, j) for i, j in itertools.combinations(range(1, shape.n + 1), 2)]
    return tuple(dd + ee)


@lru_cache(maxsize=None)
def odd_positive_roots(shape: Shape) -> tuple:
    return tuple(
        Root(shape, ODD, i, j) for i in range(1, shape.m + 1) for j in range(1, shape.n + 1)
    )


def positive_roots(shape: Shape) -> tuple:
    return even_positive_roots(shape) + odd_positive_roots(shape)


@lru_cache(maxsize=None)
def simple_roots(shape: Shape) -> tuple:
    m, n = shape.m, shape.n
    return (
        tuple(Root(shape, EVEN_DD, i, i + 1) for i in range(1, m))
        + (Root(shape, ODD, m, 1),)
        + tuple(Root(shape, EVEN_EE, j, j + 1) for j in range(1, n))
    )


# ------------------------------------------------------------ form and rho

def rho(shape: Shape) -> Weight:
    return Weight(tuple(range(shape.m, 0, -1)), tuple(range(1, shape.n + 1)))


def form(a: Weight, b: Weight) -> int:
    """Supertrace form: ``(delta_i, delta_i) = 1``, ``(eps_j, eps_j) = -1``."""
    a._check(b)
    return sum(x * y for x, y in zip(a.q, b.q)) - sum(x * y for x, y in zip(a.r, b.r))


def coroot_pairing(lam: Weight, alpha: Root) -> int:
    if not alpha.is_even:
        raise ValueError(f"odd root {alpha} is isotropic and has no coroot")
    v = alpha.vector
    num, den = 2 * form(lam, v), form(v, v)
    assert num % den == 0
    return num // den


def reflect(alpha: Root, lam: Weight) -> Weight:
    """``s_alpha(lam) = lam - <lam, alpha^vee> alpha``; a transposition of coordinates."""
    return lam - coroot_pairing(lam, alpha) * alpha.vector


def simple_root_coefficients(diff: Weight) -> Optional[tuple]:
    """Coefficients of ``diff`` in the simple-root basis, or None off the root lattice.

    Ordered as :func:`simple_roots`: ``d1-d2, ..., d_m-e1, e1-e2, ...``.
    """
    if sum(diff.q) != sum(diff.r):
        return None
    coeffs = list(itertools.accumulate(diff.q))
    top = coeffs[-1]
    for partial in itertools.accumulate(diff.r[:-1]):
        coeffs.append(top - partial)
    return tuple(coeffs)


def root_height(alpha: Root) -> int:
    coeffs = simple_root_coefficients(alpha.vector)
    assert coeffs is not None
    return sum(coeffs)


# --------------------------------------------------------------------- Weyl

@dataclass(frozen=True, order=True)
class WeylElement:
    """A pair of permutations (0-based images) acting on the q- and r-blocks."""

    sigma: tuple
    tau: tuple

    @classmethod
    def identity(cls, shape: Shape) -> "WeylElement":
        return cls(tuple(range(shape.m)), tuple(range(shape.n)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """``(self * other)`` acts as ``self`` after ``other``."""
        return WeylElement(
            tuple(other.sigma[i] for i in self.sigma),
            tuple(other.tau[j] for j in self.tau),
        )


@lru_cache(maxsize=None)
def weyl_elements(shape: Shape) -> tuple:
    return tuple(
        WeylElement(s, t)
        for s in itertools.permutations(range(shape.m))
        for t in itertools.permutations(range(shape.n))
    )


def act(w: WeylElement, lam: Weight) -> Weight:
    return Weight(tuple(lam.q[i] for i in w.sigma), tuple(lam.r[j] for j in w.tau))


def weyl_orbit(lam: Weight) -> list:
    """Distinct Weyl images, in enumeration order."""
    seen = {}
    for w in weyl_elements(lam.shape):
        seen.setdefault(act(w, lam), None)
    return list(seen)


def is_dominant(lam: Weight) -> bool:
    return all(coroot_pairing(lam, a) >= 0 for a in even_positive_roots(lam.shape))


def sum_weights(weights: Iterable[Weight], shape: Shape) -> Weight:
    total = Weight.zero(shape)
    for w in weights:
        total = total + w
    return total


def as_weight(value, shape: Optional[Shape] = None) -> Weight:
    """Accept a :class:`Weight`, its text form, or a flat coordinate sequence."""
    if isinstance(value, Weight):
        return value
    if isinstance(value, str):
        return Weight.parse(value, shape)
    if shape is None:
        raise ShapeError("a flat coordinate list needs an explicit shape")
    coords: Sequence[int] = list(value)
    if len(coords) != shape.m + shape.n:
        raise ShapeError(f"{coords} has the wrong length for {shape}")
    return Weight(coords[: shape.m], coords[shape.m:])

"""Weights of the natural and dual representations and their super exterior powers."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .lattice import Shape, Weight, delta, eps, sum_weights

NATURAL = "V"
DUAL = "V*"


@dataclass(frozen=True, order=True)
class RepKind:
    base: str
    power: int = 1

    def __post_init__(self):
        if self.base not in (NATURAL, DUAL):
            raise ValueError(f"unknown base representation {self.base!r}")
        if self.power < 1:
            raise ValueError("exterior power must be >= 1")

    @property
    def name(self) -> str:
        return self.base if self.power == 1 else f"L{self.power}{self.base}"

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, text: str) -> "RepKind":
        """``V``, ``V*``, ``L2V``, ``L3V*``, ..."""
        match = re.fullmatch(r"\s*(?:L(\d+))?(V\*?)\s*", text)
        if not match:
            raise ValueError(f"unknown representation {text!r}")
        return cls(match.group(2), int(match.group(1) or 1))


# candidate order used by the engine
ENGINE_REPS = tuple(
    RepKind(base, k) for k in (1, 2, 3) for base in (NATURAL, DUAL)
)


@lru_cache(maxsize=None)
def rep_weight_list(shape: Shape, kind: RepKind) -> tuple:
    """Weights in generation order: ``i`` distinct deltas (``i`` descending) times a
    ``j``-multiset of epsilons, ``i + j = k``.  Repeats encode multiplicity."""
    k = kind.power
    out = []
    for i in range(min(k, shape.m), -1, -1):
        j = k - i
        for ds in itertools.combinations(range(1, shape.m + 1), i):
            for es in itertools.combinations_with_replacement(range(1, shape.n + 1), j):
                w = sum_weights(
                    [delta(shape, d) for d in ds] + [eps(shape, e) for e in es], shape
                )
                out.append(w if kind.base == NATURAL else -w)
    return tuple(out)


def rep_weights(shape: Shape, kind: RepKind) -> Counter:
    return Counter(rep_weight_list(shape, kind))


def rep_dim(shape: Shape, kind: RepKind) -> int:
    k = kind.power
    return sum(comb(shape.m, i) * comb(shape.n + (k - i) - 1, k - i) for i in range(0, k + 1))

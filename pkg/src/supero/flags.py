"""Verma flags as weight multisets, and the operations that move them around."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping, Optional

from .lattice import Shape, ShapeError, Weight, as_weight, weyl_orbit
from .linkage import BlockId, block_id, bruhat_leq, bruhat_lt, is_typical
from .reps import RepKind, rep_weight_list


class VermaFlag:
    """An immutable multiset of weights with positive multiplicities.

    Iteration, text and JSON output all follow the lexicographic order of
    ``(q, r)`` so that equal flags always serialize identically.
    """

    __slots__ = ("_items", "_shape")

    def __init__(self, entries=(), shape: Optional[Shape] = None):
        counts = Counter()
        if isinstance(entries, Mapping):
            for w, k in entries.items():
                counts[w] += k
        else:
            for w in entries:
                counts[w] += 1
        for w, k in counts.items():
            if k < 0:
                raise ValueError(f"negative multiplicity {k} for {w}")
            if shape is None:
                shape = w.shape
            elif w.shape != shape:
                raise ShapeError(f"{w} does not belong to {shape}")
        self._items = tuple(sorted((w, k) for w, k in counts.items() if k > 0))
        self._shape = shape

    # -- mapping-ish protocol
    @property
    def shape(self) -> Optional[Shape]:
        return self._shape

    def items(self):
        return self._items

    def weights(self) -> list:
        return [w for w, _ in self._items]

    def __iter__(self):
        return iter(self.weights())

    def __len__(self):
        return len(self._items)

    def __contains__(self, w):
        return self.mult(w) > 0

    def mult(self, w: Weight) -> int:
        for v, k in self._items:
            if v == w:
                return k
        return 0

    def __getitem__(self, w):
        return self.mult(w)

    def total(self) -> int:
        return sum(k for _, k in self._items)

    def counter(self) -> Counter:
        return Counter(dict(self._items))

    def __eq__(self, other):
        if isinstance(other, VermaFlag):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __bool__(self):
        return bool(self._items)

    # -- multiset algebra
    def __add__(self, other: "VermaFlag") -> "VermaFlag":
        return VermaFlag(self.counter() + other.counter(), self._shape or other._shape)

    def __sub__(self, other: "VermaFlag") -> "VermaFlag":
        """Multiset difference; ``other`` must be contained in ``self``."""
        if not other <= self:
            raise ValueError("cannot subtract a flag that is not contained")
        c = self.counter()
        c.subtract(other.counter())
        return VermaFlag(+c, self._shape)

    def __and__(self, other: "VermaFlag") -> "VermaFlag":
        return VermaFlag(self.counter() & other.counter(), self._shape or other._shape)

    def __le__(self, other: "VermaFlag") -> bool:
        return all(other.mult(w) >= k for w, k in self._items)

    def __ge__(self, other: "VermaFlag") -> bool:
        return other <= self

    def scale(self, k: int) -> "VermaFlag":
        return VermaFlag({w: k * c for w, c in self._items}, self._shape)

    def floor_div(self, k: int) -> "VermaFlag":
        return VermaFlag({w: c // k for w, c in self._items}, self._shape)

    def support(self) -> "VermaFlag":
        return VermaFlag({w: 1 for w, _ in self._items}, self._shape)

    # -- output
    def __repr__(self):
        return f"VermaFlag({self.text()})"

    def text(self, symbol: str = "M") -> str:
        if not self._items:
            return "0"
        parts = []
        for w, k in self._items:
            coeff = "" if k == 1 else str(k)
            parts.append(f"{coeff}{symbol}[{w}]")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"weight": list(w.coords()), "mult": k} for w, k in self._items]

    @classmethod
    def from_json(cls, data: Iterable[dict], shape: Shape) -> "VermaFlag":
        return cls({as_weight(e["weight"], shape): int(e["mult"]) for e in data}, shape)


class CompositionSeries(VermaFlag):
    """Jordan-Hoelder multiplicities ``[M_mu : L_lam]``; same multiset, ``L`` labels."""

    __slots__ = ()

    def __repr__(self):
        return f"CompositionSeries({self.text()})"

    def text(self, symbol: str = "L") -> str:
        return super().text(symbol)

    def to_json(self) -> list:
        return [{"label": "L", "weight": list(w.coords()), "mult": k} for w, k in self.items()]


class AtypicalWeightError(ValueError):
    """A typical-only construction was asked for an atypical weight."""


def typical_projective(lam: Weight) -> VermaFlag:
    """Flag of ``P_lam`` for typical ``lam``: its Weyl images that are Bruhat-above it."""
    if not is_typical(lam):
        raise AtypicalWeightError(f"{lam} is atypical")
    return VermaFlag([v for v in weyl_orbit(lam) if bruhat_leq(lam, v)], lam.shape)


def tensor_flag(flag: VermaFlag, kind: RepKind) -> VermaFlag:
    """Flag of ``P (x) N``: every entry shifted by every weight of ``N``."""
    out = Counter()
    for nu, k in flag.items():
        for shift in rep_weight_list(nu.shape, kind):
            out[nu + shift] += k
    return VermaFlag(out, flag.shape)


def project_block(flag: VermaFlag, target: BlockId) -> VermaFlag:
    return VermaFlag({w: k for w, k in flag.items() if block_id(w) == target}, flag.shape)


def translate(flag: VermaFlag, kind: RepKind, lam: Weight) -> VermaFlag:
    """``Pr_lam(P (x) N)``."""
    return project_block(tensor_flag(flag, kind), block_id(lam))


def is_minimal(flag: VermaFlag, lam: Weight) -> bool:
    """``lam`` occurs and no other entry lies strictly below it."""
    if lam not in flag:
        return False
    return not any(bruhat_lt(v, lam) for v in flag if v != lam)


def unique_minimum(flag: VermaFlag, lam: Weight) -> bool:
    if lam not in flag:
        raise KeyError(f"{lam} does not occur in the flag")
    return flag.mult(lam) == 1 and is_minimal(flag, lam)

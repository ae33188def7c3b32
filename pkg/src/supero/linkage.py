"""Atypicality, blocks, Bruhat order, and a breadth-first linkage oracle."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .lattice import (
    Shape,
    ShapeError,
    Weight,
    act,
    simple_root_coefficients,
    weyl_elements,
)


@dataclass(frozen=True)
class AtypicalityData:
    degree: int
    pairs: tuple  # (q-index, r-index), 1-based


@dataclass(frozen=True, order=True)
class BlockId:
    shape: Shape
    degree: int
    core_q: tuple
    core_r: tuple

    def to_json(self) -> dict:
        return {"degree": self.degree, "core_q": list(self.core_q), "core_r": list(self.core_r)}

    @classmethod
    def from_json(cls, data: dict, shape: Shape) -> "BlockId":
        return cls(shape, int(data["degree"]), tuple(data["core_q"]), tuple(data["core_r"]))


def atypicality(lam: Weight) -> AtypicalityData:
    """Match equal q/r values greedily, lowest indices first; no index is reused."""
    used = set()
    pairs = []
    for i, qi in enumerate(lam.q):
        for j, rj in enumerate(lam.r):
            if j not in used and rj == qi:
                used.add(j)
                pairs.append((i + 1, j + 1))
                break
    return AtypicalityData(len(pairs), tuple(pairs))


def block_id(lam: Weight) -> BlockId:
    data = atypicality(lam)
    qs = {i - 1 for i, _ in data.pairs}
    rs = {j - 1 for _, j in data.pairs}
    core_q = tuple(sorted(x for i, x in enumerate(lam.q) if i not in qs))
    core_r = tuple(sorted(x for j, x in enumerate(lam.r) if j not in rs))
    return BlockId(lam.shape, data.degree, core_q, core_r)


def is_typical(lam: Weight) -> bool:
    return atypicality(lam).degree == 0


def is_linked(a: Weight, b: Weight) -> bool:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a} vs {b}")
    return block_id(a) == block_id(b)


def bruhat_leq(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam``: linked, and ``lam - mu`` is a nonnegative sum of simple roots."""
    if mu.shape != lam.shape:
        raise ShapeError(f"shape mismatch: {mu} vs {lam}")
    coeffs = simple_root_coefficients(lam - mu)
    if coeffs is None or min(coeffs) < 0:
        return False
    return is_linked(mu, lam)


def bruhat_lt(mu: Weight, lam: Weight) -> bool:
    return mu != lam and bruhat_leq(mu, lam)


# ------------------------------------------------------------------ oracle

def _neighbours(lam: Weight, lo: int, hi: int):
    for w in weyl_elements(lam.shape):
        yield act(w, lam)
    for i, qi in enumerate(lam.q):
        for j, rj in enumerate(lam.r):
            if qi != rj:
                continue
            for step in (1, -1):
                if lo <= qi + step <= hi:
                    q = list(lam.q)
                    r = list(lam.r)
                    q[i] += step
                    r[j] += step
                    yield Weight(q, r)


def _box(a: Weight, b: Weight, window: int) -> tuple:
    coords = a.coords() + b.coords()
    return min(coords) - window, max(coords) + window


def linkage_oracle(a: Weight, b: Weight, window: int = 2) -> bool:
    """Decide linkage by exploring Weyl moves and unit steps along orthogonal odd roots.

    Independent of :func:`block_id`; every coordinate stays inside
    ``[min - window, max + window]`` of the two inputs.
    """
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a} vs {b}")
    lo, hi = _box(a, b, window)
    seen = {a}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            return True
        for nxt in _neighbours(cur, lo, hi):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def oracle_classes(shape: Shape, lo: int, hi: int, window: int = 2) -> dict:
    """Label every weight with coordinates in ``[lo, hi]`` by its oracle component.

    The search runs in the enlarged box ``[lo - window, hi + window]``.
    """
    blo, bhi = lo - window, hi + window
    label = {}
    count = 0
    for coords in itertools.product(range(blo, bhi + 1), repeat=shape.m + shape.n):
        start = Weight(coords[: shape.m], coords[shape.m:])
        if start in label:
            continue
        label[start] = count
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in _neighbours(cur, blo, bhi):
                if nxt not in label:
                    label[nxt] = count
                    queue.append(nxt)
        count += 1
    return {
        w: c for w, c in label.items() if all(lo <= x <= hi for x in w.coords())
    }


def weights_in_block(block: BlockId, lo: int, hi: int):
    """All weights of ``block`` whose coordinates lie in ``[lo, hi]``.

    A weight of the block is its core plus ``degree`` matched values placed on
    both sides, in any arrangement.
    """
    shape = block.shape
    out = set()
    for shared in itertools.combinations_with_replacement(range(lo, hi + 1), block.degree):
        qs = set(itertools.permutations(block.core_q + shared))
        rs = set(itertools.permutations(block.core_r + shared))
        for q in qs:
            for r in rs:
                if all(lo <= x <= hi for x in q + r):
                    w = Weight(q, r)
                    if block_id(w) == block:
                        out.add(w)
    return sorted(out)

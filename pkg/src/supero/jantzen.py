"""Sufficient conditions for a Verma module to occur in the flag of ``P_lam``.

Six conditions, tagged C1..C6:

C1/C2  ``w lam`` for a chain of even reflections, each with negative pairing
C3     ``lam + beta`` for a positive odd ``beta`` with ``(lam, beta) = 0``
C4     chain images of a C3 weight
C5     ``lam + beta + gamma`` with ``(lam, beta) = (lam + beta, gamma) = 0``
       and ``ht(beta) < ht(gamma)``
C6     chain images of a C5 weight

The result is a lower bound with multiplicity one per weight; it says nothing
about weights it does not list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .flags import VermaFlag
from .lattice import (
    Weight,
    coroot_pairing,
    even_positive_roots,
    form,
    odd_positive_roots,
    reflect,
    root_height,
    weyl_elements,
)

SELF = "SELF"
TAG_ORDER = (SELF, "C1", "C2", "C3", "C4", "C5", "C6")


@dataclass(frozen=True)
class CertifiedSet:
    lam: Weight
    tags: tuple  # ((weight, tag), ...) sorted by weight

    @property
    def flag(self) -> VermaFlag:
        return VermaFlag([w for w, _ in self.tags], self.lam.shape)

    def tag(self, w: Weight) -> str:
        return dict(self.tags)[w]

    def __len__(self):
        return len(self.tags)

    def __contains__(self, w):
        return any(v == w for v, _ in self.tags)

    def to_json(self) -> list:
        return [{"weight": list(w.coords()), "tag": t} for w, t in self.tags]


def negative_chains(start: Weight) -> dict:
    """Weights reached from ``start`` by chains of positive even reflections whose
    pairing is negative at every step, with the shortest chain length.

    Chains are cut at length ``|W|``; the start itself is not included.
    """
    limit = len(weyl_elements(start.shape))
    roots = even_positive_roots(start.shape)
    found = {}
    frontier = [start]
    for length in range(1, limit + 1):
        nxt = []
        for lam in frontier:
            for alpha in roots:
                if coroot_pairing(lam, alpha) < 0:
                    image = reflect(alpha, lam)
                    if image != start and image not in found:
                        found[image] = length
                        nxt.append(image)
        if not nxt:
            break
        frontier = nxt
    return found


def _odd_orthogonal(lam: Weight):
    return [beta for beta in odd_positive_roots(lam.shape) if form(lam, beta.vector) == 0]


@lru_cache(maxsize=4096)
def certified_weights(lam: Weight) -> CertifiedSet:
    tags = {lam: SELF}

    def add(w, tag):
        if w not in tags:
            tags[w] = tag

    for w, length in negative_chains(lam).items():
        add(w, "C1" if length == 1 else "C2")

    shifted = []
    for beta in _odd_orthogonal(lam):
        lb = lam + beta.vector
        add(lb, "C3")
        shifted.append((beta, lb))
    for _, lb in shifted:
        for w in negative_chains(lb):
            add(w, "C4")

    doubles = []
    for beta, lb in shifted:
        hb = root_height(beta)
        for gamma in _odd_orthogonal(lb):
            if hb < root_height(gamma):
                doubles.append(lb + gamma.vector)
    for w in doubles:
        add(w, "C5")
    for w0 in doubles:
        for w in negative_chains(w0):
            add(w, "C6")

    return CertifiedSet(lam, tuple(sorted(tags.items())))


def min_flag_length(lam: Weight) -> int:
    return len(certified_weights(lam))

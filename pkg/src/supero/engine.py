"""Automatic translation-functor deduction of Verma flags of projective covers.

For an atypical ``lam`` the engine walks a fixed list of candidates
``(mu = lam - nu, N)`` with ``nu`` a weight of ``N``, builds
``F = Pr_lam(P_mu (x) N)`` and keeps ``F`` when ``lam`` is Bruhat-minimal in
it.  If ``lam`` occurs ``k`` times then ``P_lam`` occurs ``k`` times as a
summand, so ``floor(F / k)`` bounds ``P_lam`` from above, while
:func:`~supero.jantzen.certified_weights` bounds it from below.  A case is
closed by one of three tactics:

T1_ALL_CERTIFIED        ``F`` (with ``k = 1``) equals the certified set.
T2_REMAINDER_EXCLUSION  ``k = 1`` and no weight ``theta`` of the remainder
                        ``R = F - certified`` has its own certified set inside
                        ``R``, so no second summand ``P_theta`` fits.
T3_CROSS_PROJECTION     the intersection of all upper bounds collapses onto
                        the certified set (needs some ``k >= 2``).

Otherwise an :class:`AmbiguousResult` carries both bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .flags import VermaFlag, is_minimal, translate, typical_projective
from .jantzen import certified_weights
from .lattice import Weight
from .linkage import atypicality
from .reps import ENGINE_REPS, RepKind, rep_weight_list

T1 = "T1_ALL_CERTIFIED"
T2 = "T2_REMAINDER_EXCLUSION"
T3 = "T3_CROSS_PROJECTION"

MAX_DEPTH = 2


class EngineError(RuntimeError):
    pass


class TypicalWeightError(EngineError, ValueError):
    """The engine only deduces atypical weights; use ``typical_projective``."""


class CertificationConflict(EngineError):
    """A projection failed to contain the certified lower bound.

    This can only happen if the membership conditions were applied wrongly,
    so it is raised rather than silently skipped.
    """


@dataclass(frozen=True)
class Step:
    mu: Weight
    rep: RepKind
    projection: VermaFlag
    tactic: str
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "mu": str(self.mu),
            "rep": self.rep.name,
            "projection": self.projection.to_json(),
            "tactic": self.tactic,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class DeductionResult:
    lam: Weight
    flag: VermaFlag
    trace: tuple = ()
    closed: bool = field(default=True, init=False)

    @property
    def tactic(self) -> str:
        return self.trace[-1].tactic

    def to_json(self) -> dict:
        return {
            "weight": str(self.lam),
            "status": "closed",
            "flag": self.flag.to_json(),
            "trace": [s.to_json() for s in self.trace],
        }


@dataclass(frozen=True)
class AmbiguousResult:
    lam: Weight
    lower: VermaFlag
    upper: Optional[VermaFlag]
    tried: int
    trace: tuple = ()
    closed: bool = field(default=False, init=False)

    def to_json(self) -> dict:
        return {
            "weight": str(self.lam),
            "status": "ambiguous",
            "lower": self.lower.to_json(),
            "upper": None if self.upper is None else self.upper.to_json(),
            "candidates_tried": self.tried,
            "trace": [s.to_json() for s in self.trace],
        }


Result = Union[DeductionResult, AmbiguousResult]


def candidates(lam: Weight):
    """``(mu, rep)`` pairs in the fixed engine order, without repeats."""
    seen = set()
    for rep in ENGINE_REPS:
        for nu in rep_weight_list(lam.shape, rep):
            mu = lam - nu
            if (mu, rep) not in seen:
                seen.add((mu, rep))
                yield mu, rep


def _source(mu: Weight, lam_degree: int, depth: int):
    """Known flag of ``P_mu`` and how it was obtained, or ``(None, reason)``."""
    degree = atypicality(mu).degree
    if degree == 0:
        return typical_projective(mu), "typical"
    if degree > lam_degree:
        return None, "intermediate more atypical than target"
    if depth >= MAX_DEPTH:
        return None, "recursion depth exhausted"
    sub = _deduce(mu, depth + 1, False)
    if not sub.closed:
        return None, "intermediate ambiguous"
    return sub.flag, f"atypical intermediate closed by {sub.tactic}"


def _remainder_excluded(rest: VermaFlag) -> bool:
    for theta in rest.weights():
        if certified_weights(theta).flag <= rest:
            return False
    return True


@lru_cache(maxsize=None)
def _deduce(lam: Weight, depth: int, allow_cross: bool) -> Result:
    degree = atypicality(lam).degree
    lower = certified_weights(lam).flag
    upper = None
    bounding = []
    tried = 0
    for mu, rep in candidates(lam):
        pmu, how = _source(mu, degree, depth)
        if pmu is None:
            continue
        tried += 1
        proj = translate(pmu, rep, lam)
        k = proj.mult(lam)
        if k == 0 or not is_minimal(proj, lam):
            continue
        bound = proj.floor_div(k)
        if not lower <= bound:
            raise CertificationConflict(
                f"Pr_{lam}(P_{mu} (x) {rep}) = {proj.text()} misses certified weights"
            )
        note = f"P_mu {how}; lam occurs {k}x"
        if k == 1:
            rest = proj - lower
            if not rest:
                return DeductionResult(lam, proj, (Step(mu, rep, proj, T1, note),))
            if _remainder_excluded(rest):
                return DeductionResult(lam, proj, (Step(mu, rep, proj, T2, note),))
        upper = bound if upper is None else upper & bound
        bounding.append(Step(mu, rep, proj, "BOUND", note))
    if allow_cross and upper is not None and upper == lower:
        if any(s.projection.mult(lam) >= 2 for s in bounding):
            steps = tuple(s for s in bounding)
            last = steps[-1]
            steps = steps[:-1] + (Step(last.mu, last.rep, last.projection, T3, last.notes),)
            return DeductionResult(lam, lower, steps)
    return AmbiguousResult(lam, lower, upper, tried, tuple(bounding))


def deduce_projective(lam: Weight) -> Result:
    if atypicality(lam).degree == 0:
        raise TypicalWeightError(f"{lam} is typical; use typical_projective")
    return _deduce(lam, 0, True)


def projective_flag(lam: Weight) -> VermaFlag:
    """Flag of ``P_lam`` for any weight the engine can close."""
    if atypicality(lam).degree == 0:
        return typical_projective(lam)
    res = deduce_projective(lam)
    if not res.closed:
        raise EngineError(f"P_{lam} is ambiguous: {res.lower.text()} <= P <= {res.upper}")
    return res.flag


def deduce_with_hint(lam: Weight, mu: Weight, rep: RepKind) -> VermaFlag:
    """Raw projection ``Pr_lam(P_mu (x) rep)`` with ``P_mu`` from the engine."""
    proj = translate(projective_flag(mu), rep, lam)
    if lam not in proj:
        raise ValueError(f"M_{lam} does not occur in Pr_lam(P_{mu} (x) {rep})")
    return proj


def cross_projection(lam: Weight, hints) -> Result:
    """Replay the cross-projection tactic on chosen ``(mu, rep)`` pairs.

    Each projection must have ``lam`` minimal; the bounds ``floor(F / k)``
    are intersected and the case closes when they meet the certified set.
    """
    lower = certified_weights(lam).flag
    upper = None
    steps = []
    for mu, rep in hints:
        proj = translate(projective_flag(mu), rep, lam)
        k = proj.mult(lam)
        if k == 0 or not is_minimal(proj, lam):
            raise ValueError(f"M_{lam} is not minimal in Pr_lam(P_{mu} (x) {rep})")
        bound = proj.floor_div(k)
        if not lower <= bound:
            raise CertificationConflict(
                f"Pr_{lam}(P_{mu} (x) {rep}) = {proj.text()} misses certified weights"
            )
        upper = bound if upper is None else upper & bound
        steps.append(Step(mu, rep, proj, "BOUND", f"lam occurs {k}x"))
    if upper == lower and any(s.projection.mult(lam) >= 2 for s in steps):
        last = steps[-1]
        steps[-1] = Step(last.mu, last.rep, last.projection, T3, last.notes)
        return DeductionResult(lam, lower, tuple(steps))
    return AmbiguousResult(lam, lower, upper, len(steps), tuple(steps))


def trace_json(res: Result) -> str:
    return json.dumps(res.to_json(), indent=2)

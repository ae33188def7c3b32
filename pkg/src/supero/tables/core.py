"""Families, guarded branches and lookup for the transcribed tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from ..flags import VermaFlag
from ..lattice import Shape, Weight
from .notation import bind_pattern, guard_holds, parse_display, repeated_subscripts


class TableError(LookupError):
    pass


class TableDomainError(TableError, ValueError):
    """The weight is outside what the tables describe (wrong shape or degree)."""


class NoBranchError(TableError):
    """No family/branch guard accepts the weight: a transcription gap."""


class MalformedEntryError(TableError):
    """The selected display contains a term that cannot be read as a weight."""

    def __init__(self, case_id: str, problems: list):
        self.case_id = case_id
        self.problems = problems
        super().__init__(f"{case_id}: " + "; ".join(problems))


@dataclass(frozen=True)
class Branch:
    family: str  # pattern such as "b,c,a|c"
    guard: str  # comma separated conjunction
    display: str  # verbatim right-hand side

    @property
    def case_id(self) -> str:
        return f"{{{self.family}}} [{self.guard}]"

    def holds(self, env: dict) -> bool:
        return env["a"] >= env["b"] and guard_holds(self.guard, env)

    def terms(self, env: dict, shape: Shape) -> list:
        return parse_display(self.display, env, shape)

    def repeated(self) -> list:
        return repeated_subscripts(self.display)


@dataclass(frozen=True)
class Match:
    branch: Branch
    env: dict

    @property
    def case_id(self) -> str:
        return self.branch.case_id


@dataclass(frozen=True)
class Table:
    name: str
    shape: Shape
    degree: int
    symbol: str  # "M" for projective flags, "L" for composition series
    branches: tuple  # in the order the results are stated

    def families(self) -> list:
        seen = []
        for br in self.branches:
            if br.family not in seen:
                seen.append(br.family)
        return seen

    def instantiate(self, family: str, env: dict) -> Weight:
        from .notation import instantiate

        return instantiate(family, env, self.shape)

    def matches(self, lam: Weight) -> list:
        """Every branch whose family pattern and guard accept ``lam``."""
        out = []
        for br in self.branches:
            env = bind_pattern(br.family, lam)
            if env is not None and br.holds(env):
                out.append(Match(br, env))
        return out

    def lookup(self, lam: Weight) -> Match:
        from ..linkage import atypicality

        if lam.shape != self.shape:
            raise TableDomainError(f"{self.name} covers {self.shape}, not {lam.shape}")
        if atypicality(lam).degree != self.degree:
            raise TableDomainError(
                f"{self.name} covers atypicality degree {self.degree}; {lam} is not"
            )
        found = self.matches(lam)
        if not found:
            raise NoBranchError(f"no branch of {self.name} accepts {lam}")
        return found[0]

    def evaluate(self, match: Match) -> VermaFlag:
        """Verbatim multiset of the display; repeated terms add up."""
        counts = Counter()
        problems = []
        for term in match.branch.terms(match.env, self.shape):
            if term.weight is None:
                problems.append(term.problem)
            elif term.symbol != self.symbol:
                problems.append(f"unexpected symbol {term.symbol} in {term.subscript}")
            else:
                counts[term.weight] += term.coeff
        if problems:
            raise MalformedEntryError(match.case_id, problems)
        return VermaFlag(counts, self.shape)

    def partial(self, match: Match) -> tuple:
        """Readable terms and the list of unreadable ones, without raising."""
        counts = Counter()
        bad = []
        for term in match.branch.terms(match.env, self.shape):
            if term.weight is None:
                bad.append(term.subscript)
            else:
                counts[term.weight] += term.coeff
        return VermaFlag(counts, self.shape), bad

    def __call__(self, lam: Weight) -> VermaFlag:
        return self.evaluate(self.lookup(lam))


def find_branch(table: Table, case_id: str) -> Optional[Branch]:
    for br in table.branches:
        if br.case_id == case_id:
            return br
    return None

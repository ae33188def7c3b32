"""Property suites that run without a test framework, for ``verify`` and the tests.

Each suite returns a :class:`CheckResult`; ``failures`` lists concrete
counterexamples (capped) so a failing run says what broke.
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter
from dataclasses import dataclass, field

from .engine import deduce_projective
from .jantzen import certified_weights
from .lattice import Shape, Weight, act, delta, eps, sum_weights, weyl_elements
from .linkage import atypicality, block_id, bruhat_leq, oracle_classes
from .reps import DUAL, NATURAL, RepKind, rep_dim, rep_weights

MAX_REPORTED = 10

GL31 = Shape(3, 1)
GL22 = Shape(2, 2)

# exterior-power weight lists as printed for the two algebras;
# dN is delta_N, eN is epsilon_N and a bare e is the only epsilon of gl(3|1)
PRINTED_REP_WEIGHTS = {
    (GL31, "L2V"): "d1+d2, d2+d3, d1+d3, d1+e, d2+e, d3+e, 2e",
    (GL31, "L3V"): "d1+d2+d3, d1+d2+e, d2+d3+e, d1+d3+e, d1+2e, d2+2e, d3+2e, 3e",
    (GL31, "L2V*"): "-d1-d2, -d2-d3, -d1-d3, -d1-e, -d2-e, -d3-e, -2e",
    (GL22, "L2V"): "d1+d2, d1+e1, d1+e2, d2+e1, d2+e2, 2e1, e1+e2, 2e2",
    (GL22, "L2V*"): "-d1-d2, -d1-e1, -d1-e2, -d2-e1, -d2-e2, -2e1, -e1-e2, -2e2",
    (GL22, "L3V"): (
        "d1+d2+e1, d1+d2+e2, d1+2e1, d1+e1+e2, d1+2e2, d2+2e1, d2+e1+e2, "
        "d2+2e2, 3e1, 2e1+e2, e1+2e2, 3e2"
    ),
}

_SYMBOL = re.compile(r"([+-]?)(\d*)([de])(\d*)")


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failing"


def parse_rep_weight(text: str, shape: Shape) -> Weight:
    """``"d1+2e2"`` as a displacement."""
    parts = []
    text = text.replace(" ", "")
    pos = 0
    for match in _SYMBOL.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot read {text!r}")
        pos = match.end()
        sign, coeff, kind, index = match.groups()
        k = int(coeff or 1) * (-1 if sign == "-" else 1)
        i = int(index or 1)
        unit = delta(shape, i) if kind == "d" else eps(shape, i)
        parts.append(unit * k)
    if pos != len(text) or not parts:
        raise ValueError(f"cannot read {text!r}")
    return sum_weights(parts, shape)


def linkage_matches_oracle(lo: int = 0, hi: int = 3) -> CheckResult:
    res = CheckResult("linkage classifier equals BFS oracle")
    for shape in (GL31, GL22):
        labels = oracle_classes(shape, lo, hi)
        by_label = {}
        by_block = {}
        for w, label in labels.items():
            res.checked += 1
            b = block_id(w)
            by_label.setdefault(label, set()).add(b)
            by_block.setdefault(b, set()).add(label)
        for label, blocks in by_label.items():
            if len(blocks) > 1:
                res.fail(f"{shape}: one oracle class spans blocks {sorted(blocks)}")
        for b, ls in by_block.items():
            if len(ls) > 1:
                res.fail(f"{shape}: block {b} splits into {len(ls)} oracle classes")
    return res


def engine_grid() -> list:
    """Atypical weights near the origin of both algebras, for flag checks."""
    out = []
    for c in (0,):
        for a, b in itertools.product(range(-3, 5), repeat=2):
            for q in set(itertools.permutations((a, b, c))):
                lam = Weight(q, (c,))
                if atypicality(lam).degree == 1:
                    out.append(lam)
    for a in (0, 5):
        for b in range(a - 3, a + 1):
            for q, r in itertools.product(((a, b), (b, a)), repeat=2):
                out.append(Weight(q, r))
    return sorted(set(out))


def flag_invariants(weights=None) -> tuple:
    """Suites (b) and (c): head and order invariants, and the bound sandwich."""
    heads = CheckResult("flags have head multiplicity 1 and lie Bruhat-above the head")
    sandwich = CheckResult("certified <= flag <= projection for every trace step")
    for lam in weights if weights is not None else engine_grid():
        res = deduce_projective(lam)
        if not res.closed:
            heads.fail(f"P_{lam} did not close")
            continue
        heads.checked += 1
        flag = res.flag
        if flag.mult(lam) != 1:
            heads.fail(f"P_{lam}: head multiplicity {flag.mult(lam)}")
        low = [w for w in flag if not bruhat_leq(lam, w)]
        if low:
            heads.fail(f"P_{lam}: {low} not above the head")
        sandwich.checked += 1
        if not certified_weights(lam).flag <= flag:
            sandwich.fail(f"P_{lam}: certified set not contained in the flag")
        for step in res.trace:
            if not flag <= step.projection:
                sandwich.fail(f"P_{lam}: flag exceeds projection from P_{step.mu} x {step.rep}")
    return heads, sandwich


def rep_weights_match() -> CheckResult:
    res = CheckResult("exterior powers: counts and printed weight lists")
    for m, n in itertools.product((1, 2, 3), repeat=2):
        shape = Shape(m, n)
        for base, k in itertools.product((NATURAL, DUAL), (1, 2, 3)):
            kind = RepKind(base, k)
            res.checked += 1
            got = sum(rep_weights(shape, kind).values())
            if got != rep_dim(shape, kind):
                res.fail(f"{shape} {kind}: {got} weights, dimension {rep_dim(shape, kind)}")
    for (shape, name), text in PRINTED_REP_WEIGHTS.items():
        res.checked += 1
        printed = Counter(parse_rep_weight(t, shape) for t in text.split(","))
        if printed != rep_weights(shape, RepKind.parse(name)):
            res.fail(f"{shape} {name}: generated weights differ from the printed list")
    return res


def atypicality_weyl_invariant(samples: int = 1000, seed: int = 0) -> CheckResult:
    res = CheckResult("atypicality degree is Weyl invariant")
    rng = random.Random(seed)
    shapes = [Shape(m, n) for m, n in itertools.product((1, 2, 3), repeat=2)]
    for _ in range(samples):
        shape = rng.choice(shapes)
        coords = [rng.randint(-3, 3) for _ in range(shape.m + shape.n)]
        lam = Weight(coords[: shape.m], coords[shape.m :])
        d = atypicality(lam).degree
        res.checked += 1
        for w in weyl_elements(shape):
            if atypicality(act(w, lam)).degree != d:
                res.fail(f"{lam} and {act(w, lam)} differ in degree")
                break
    return res


def run_all() -> list:
    heads, sandwich = flag_invariants()
    return [
        linkage_matches_oracle(),
        heads,
        sandwich,
        rep_weights_match(),
        atypicality_weyl_invariant(),
    ]

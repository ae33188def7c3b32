"""Cross-check of every transcribed display against independent derivations.

Projective branches are compared with the engine, composition branches with
the BGG transpose of the projective flags, and proof steps with the engine's
projection for the printed ``(mu, rep)``.  Each disagreement becomes one
ledger entry per display, classified by mechanical witnesses:

malformed-term        a term cannot be read as a weight of the algebra
out-of-block-term     a term is not linked to the weight being described
repeated-term         a subscript written twice where the derivation has it once
extra-term            a linked term the derivation does not produce
missing-term          a term the derivation produces that the display lacks
rep-mismatch          ``lam - mu`` is not a weight of the printed representation
printed-pmu-*         the same classification applied to a printed ``P_mu``
pmu-inconsistent      the display is not the projection of the printed ``P_mu``

Anything else that goes wrong (an uncovered weight, a derivation failing its
own invariants, overlapping branches that disagree) is a hard failure.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from ..bgg import WindowInstabilityError, composition_series
from ..engine import EngineError, projective_flag
from ..flags import VermaFlag, is_minimal, translate
from ..jantzen import certified_weights
from ..lattice import Shape, Weight
from ..linkage import atypicality, bruhat_leq, is_linked
from ..reps import ENGINE_REPS, RepKind, rep_weights
from . import GL22, GL22_JH, GL31
from .core import Match
from .defects import KNOWN
from .notation import guard_holds, instantiate, parse_display
from .steps import STEPS

STEP_SOURCE = "proof steps"
SAMPLES_PER_CASE = 4


@dataclass(frozen=True)
class LedgerEntry:
    source: str
    case_id: str
    kinds: tuple
    detail: str
    printed: str
    derived: str  # symbolic rendering of the derivation
    derived_by: str
    invariants_ok: bool
    samples: tuple = ()

    @property
    def key(self) -> tuple:
        return (self.source, self.case_id)

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "case": self.case_id,
            "kinds": list(self.kinds),
            "detail": self.detail,
            "printed": self.printed,
            "derived": self.derived,
            "derived_by": self.derived_by,
            "derived_passes_invariants": self.invariants_ok,
            "samples": list(self.samples),
        }


@dataclass
class Report:
    entries: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    checked: Counter = field(default_factory=Counter)

    def by_key(self) -> dict:
        return {e.key: e for e in self.entries}

    @property
    def unexpected(self) -> list:
        """Entries the reviewed registry does not list with the same kinds."""
        out = []
        for e in self.entries:
            known = KNOWN.get(e.key)
            if known is None or frozenset(known.kinds) != frozenset(e.kinds):
                out.append(e)
        return out

    @property
    def stale(self) -> list:
        """Registry keys that no longer produce an entry."""
        found = self.by_key()
        return sorted(k for k in KNOWN if k not in found)

    @property
    def ok(self) -> bool:
        return not (self.failures or self.unexpected or self.stale)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": dict(self.checked),
            "ledger": [dict(e.to_json(), reviewed=e.key in KNOWN) for e in self.entries],
            "unexpected": [list(e.key) for e in self.unexpected],
            "stale": [list(k) for k in self.stale],
            "failures": list(self.failures),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# -- symbolic rendering


def _candidates(value: int, env: dict, params: tuple) -> list:
    out = []
    for p in params:
        k = value - env[p]
        if abs(k) <= 4:
            out.append((p, k))
    out.sort(key=lambda t: (params.index(t[0]), abs(t[1])))
    out.append((None, value))
    return out


def _expr(p: Optional[str], k: int) -> str:
    if p is None:
        return str(k)
    if k == 0:
        return p
    return f"{p}{k:+d}"


def _eval(p: Optional[str], k: int, env: dict) -> int:
    return k if p is None else env[p] + k


def render(samples: list, params: tuple, symbol: str = "M") -> str:
    """Write a flag known at several parameter points in terms of the parameters.

    ``samples`` is a list of ``(env, flag)``.  Each weight of the first flag
    gets the first affine subscript (parameters in ``params`` order, small
    offsets first) that names a weight of equal multiplicity in every
    sample.  Falls back to the first sample's numbers if nothing fits.
    """
    env0, flag0 = samples[0]
    parts = []
    for w, k in flag0.items():
        coords = w.coords()
        options = [_candidates(v, env0, params) for v in coords]
        chosen = None
        for combo in itertools.product(*options):
            fits = True
            for env, flag in samples[1:]:
                vals = [_eval(p, c, env) for p, c in combo]
                other = Weight(vals[: w.shape.m], vals[w.shape.m :])
                if flag.mult(other) != k:
                    fits = False
                    break
            if fits:
                chosen = combo
                break
        if chosen is None:
            return flag0.text(symbol) + f" (at {env0})"
        q = ",".join(_expr(p, c) for p, c in chosen[: w.shape.m])
        r = ",".join(_expr(p, c) for p, c in chosen[w.shape.m :])
        coeff = "" if k == 1 else str(k)
        parts.append(f"{coeff}{symbol}_{{{q}|{r}}}")
    return " + ".join(parts) if parts else "0"


# -- classification


def _read(display: str, env: dict, shape: Shape) -> tuple:
    """Readable multiset, unreadable subscripts, subscripts written twice."""
    counts = Counter()
    bad = []
    seen = Counter()
    for term in parse_display(display, env, shape):
        seen[term.subscript.replace(" ", "")] += 1
        if term.weight is None:
            bad.append(term.subscript)
        else:
            counts[term.weight] += term.coeff
    repeated = {s for s, n in seen.items() if n > 1}
    twice = set()
    for term in parse_display(display, env, shape):
        if term.weight is not None and term.subscript.replace(" ", "") in repeated:
            twice.add(term.weight)
    return counts, bad, twice


def classify(display: str, env: dict, shape: Shape, derived: Counter, anchor: Weight) -> set:
    """Kinds of disagreement between a display and a derived multiset."""
    printed, bad, twice = _read(display, env, shape)
    kinds = set()
    if bad:
        kinds.add("malformed-term")
    for w in printed - derived:
        if not is_linked(w, anchor):
            kinds.add("out-of-block-term")
        elif w in twice and derived[w] >= 1:
            kinds.add("repeated-term")
        else:
            kinds.add("extra-term")
    if derived - printed:
        kinds.add("missing-term")
    return kinds


def _grid(guard: str, params: tuple, fixed: dict, span: range) -> list:
    envs = []
    free = [p for p in params if p not in fixed]
    for values in itertools.product(span, repeat=len(free)):
        env = dict(fixed, **dict(zip(free, values)))
        if env["a"] >= env["b"] and guard_holds(guard, env):
            envs.append(env)
    return envs


def _spread(envs: list, n: int) -> list:
    if len(envs) <= n:
        return envs
    step = (len(envs) - 1) / (n - 1)
    return [envs[round(i * step)] for i in range(n)]


def projective_invariants(lam: Weight, flag: VermaFlag) -> bool:
    return (
        flag.mult(lam) == 1
        and all(bruhat_leq(lam, w) for w in flag)
        and certified_weights(lam).flag <= flag
    )


def composition_invariants(mu: Weight, series: VermaFlag) -> bool:
    return series.mult(mu) == 1 and all(bruhat_leq(w, mu) for w in series)


def projection_invariants(lam: Weight, proj: VermaFlag) -> bool:
    return lam in proj and is_minimal(proj, lam) and certified_weights(lam).flag <= proj


def _sample_json(env: dict, printed: str, derived: VermaFlag, symbol: str) -> dict:
    return {"params": dict(env), "printed": printed, "derived": derived.text(symbol)}


# -- projective tables


def _check_projectives(table, grids: list, report: Report) -> None:
    params = ("c", "a", "b") if table.shape == Shape(3, 1) else ("a", "b")
    for br in table.branches:
        envs = [e for fixed, span in grids for e in _grid(br.guard, params, fixed, span)]
        if not envs:
            report.failures.append(f"{table.name} {br.case_id}: no grid point satisfies the guard")
            continue
        kinds = set()
        inv_ok = True
        derived_samples = []
        bad_samples = []
        for env in envs:
            lam = instantiate(br.family, env, table.shape)
            if atypicality(lam).degree != table.degree:
                continue
            report.checked[table.name] += 1
            try:
                eng = projective_flag(lam)
            except EngineError as exc:
                report.failures.append(f"{table.name} {br.case_id} at {env}: {exc}")
                continue
            found = classify(br.display, env, table.shape, eng.counter(), lam)
            derived_samples.append((env, eng))
            if found:
                kinds |= found
                inv_ok &= projective_invariants(lam, eng)
                if len(bad_samples) < SAMPLES_PER_CASE:
                    printed = table.partial(Match(br, env))[0].text()
                    bad_samples.append(_sample_json(env, printed, eng, "M"))
        if kinds:
            report.entries.append(
                LedgerEntry(
                    source=table.name,
                    case_id=br.case_id,
                    kinds=tuple(sorted(kinds)),
                    detail=_detail(kinds),
                    printed=br.display,
                    derived=render(_spread(derived_samples, 6), params),
                    derived_by="engine",
                    invariants_ok=inv_ok,
                    samples=tuple(bad_samples),
                )
            )


def _check_overlaps(table, weights, report: Report) -> None:
    """Branches that accept the same weight must agree unless ledgered."""
    ledgered = {e.case_id for e in report.entries if e.source == table.name}
    for lam in weights:
        values = {}
        for m in table.matches(lam):
            if m.case_id not in ledgered:
                values[m.case_id] = table.evaluate(m)
        if len(set(values.values())) > 1:
            report.failures.append(f"{table.name}: branches disagree at {lam}: {sorted(values)}")


def _check_coverage(table, lo: int, hi: int, report: Report) -> list:
    covered = []
    shape = table.shape
    for xs in itertools.product(range(lo, hi + 1), repeat=shape.m + shape.n):
        lam = Weight(xs[: shape.m], xs[shape.m :])
        if atypicality(lam).degree != table.degree:
            continue
        report.checked[f"{table.name} coverage"] += 1
        if not table.matches(lam):
            report.failures.append(f"{table.name}: no branch accepts {lam}")
        else:
            covered.append(lam)
    return covered


# -- composition series


def _check_compositions(report: Report, a_values=(0, 1, 5), per_a: int = 2) -> None:
    table = GL22_JH
    for br in table.branches:
        kinds = set()
        inv_ok = True
        derived_samples = []
        bad_samples = []
        for a in a_values:
            envs = _spread(_grid(br.guard, ("a", "b"), {"a": a}, range(a - 5, a + 1)), per_a)
            for env in envs:
                mu = instantiate(br.family, env, table.shape)
                report.checked[table.name] += 1
                try:
                    series = composition_series(mu)
                    check = composition_series(mu, source=projective_flag)
                except (WindowInstabilityError, EngineError) as exc:
                    report.failures.append(f"{table.name} {br.case_id} at {env}: {exc}")
                    continue
                if series != check:
                    report.failures.append(
                        f"{table.name} {br.case_id} at {env}: transpose of the projective "
                        "table differs from transpose of the engine"
                    )
                derived_samples.append((env, series))
                found = classify(br.display, env, table.shape, series.counter(), mu)
                if found:
                    kinds |= found
                    inv_ok &= composition_invariants(mu, series)
                    if len(bad_samples) < SAMPLES_PER_CASE:
                        printed = table.partial(Match(br, env))[0].text("L")
                        bad_samples.append(_sample_json(env, printed, series, "L"))
        if kinds:
            report.entries.append(
                LedgerEntry(
                    source=table.name,
                    case_id=br.case_id,
                    kinds=tuple(sorted(kinds)),
                    detail=_detail(kinds) + _reciprocity_witness(br, derived_samples),
                    printed=br.display,
                    derived=render(_spread(derived_samples, 6), ("a", "b"), "L"),
                    derived_by="BGG transpose of the projective flags",
                    invariants_ok=inv_ok,
                    samples=tuple(bad_samples),
                )
            )


def _reciprocity_witness(br, derived_samples: list) -> str:
    """Name the projective flags that force each missing composition factor."""
    if not derived_samples:
        return ""
    env, series = derived_samples[0]
    mu = instantiate(br.family, env, GL22.shape)
    printed, _, _ = _read(br.display, env, GL22.shape)
    notes = []
    for lam in sorted(series.counter() - printed):
        match = GL22.lookup(lam)
        k = GL22.evaluate(match).mult(mu)
        notes.append(f"P_{lam} from {match.case_id} contains M_{mu} {k}x")
    return ("; at " + str(env) + ": " + "; ".join(notes)) if notes else ""


# -- proof steps


def _step_envs(step) -> list:
    params = ("c", "a", "b") if step.shape == "3x1" else ("a", "b")
    fixed = {"c": 0} if step.shape == "3x1" else {"a": 0}
    envs = _grid(step.guard, params, fixed, range(-5, 7))
    return _spread(envs, 3)


def _check_step(step, report: Report) -> None:
    shape = Shape.parse(step.shape)
    rep = RepKind.parse(step.rep)
    kinds = set()
    inv_ok = True
    notes = []
    bad_samples = []
    for env in _step_envs(step):
        report.checked[STEP_SOURCE] += 1
        lam = instantiate(step.target, env, shape)
        mu = instantiate(step.mu, env, shape)
        pmu = projective_flag(mu)
        proj = translate(pmu, rep, lam)
        inv_ok &= projection_invariants(lam, proj) or lam not in proj
        found = classify(step.display, env, shape, proj.counter(), lam)
        if lam - mu not in rep_weights(shape, rep):
            found.add("rep-mismatch")
            printed, _, _ = _read(step.display, env, shape)
            alt = [r.name for r in ENGINE_REPS if translate(pmu, r, lam).counter() == printed]
            if alt:
                notes.append(f"{'/'.join(alt)} reproduces the display")
        pkinds = classify(step.printed_pmu, env, shape, pmu.counter(), mu)
        found |= {f"printed-pmu-{k}" for k in pkinds}
        pprinted, pbad, _ = _read(step.printed_pmu, env, shape)
        dprinted, dbad, _ = _read(step.display, env, shape)
        if not pbad and not dbad:
            from_printed = translate(VermaFlag(pprinted, shape), rep, lam).counter()
            if from_printed != dprinted:
                found.add("pmu-inconsistent")
        if found:
            kinds |= found
            if len(bad_samples) < SAMPLES_PER_CASE:
                bad_samples.append(_sample_json(env, VermaFlag(dprinted, shape).text(), proj, "M"))
    if not kinds:
        return
    params = ("c", "a", "b") if step.shape == "3x1" else ("a", "b")
    derived = [
        (env, translate(projective_flag(instantiate(step.mu, env, shape)), rep,
                        instantiate(step.target, env, shape)))
        for env in _step_envs(step)
    ]
    detail = _detail(kinds)
    if notes:
        detail += "; " + notes[0]
    report.entries.append(
        LedgerEntry(
            source=STEP_SOURCE,
            case_id=step.case_id,
            kinds=tuple(sorted(kinds)),
            detail=detail,
            printed=step.display,
            derived=render(derived, params),
            derived_by="engine projection for the printed (mu, rep)",
            invariants_ok=inv_ok,
            samples=tuple(bad_samples),
        )
    )


_WHY = {
    "malformed-term": "a term cannot be read as a weight",
    "out-of-block-term": "a term lies outside the block",
    "repeated-term": "a subscript is written twice",
    "extra-term": "a linked term is not derived",
    "missing-term": "a derived term is absent",
    "rep-mismatch": "lam - mu is not a weight of the printed representation",
    "pmu-inconsistent": "the display is not the projection of the printed P_mu",
}


def _detail(kinds: set) -> str:
    out = []
    for k in sorted(kinds):
        if k.startswith("printed-pmu-"):
            out.append("printed P_mu: " + _WHY[k[len("printed-pmu-"):]])
        else:
            out.append(_WHY[k])
    return "; ".join(out)


def validate_tables(steps: bool = True, compositions: bool = True) -> Report:
    report = Report()
    _check_projectives(GL31, [({"c": 0}, range(-4, 6)), ({"c": 3}, range(-1, 9))], report)
    _check_projectives(GL22, [({"a": 0}, range(-4, 1)), ({"a": 5}, range(1, 6))], report)
    for table, lo, hi in ((GL31, -2, 3), (GL22, -2, 2)):
        _check_overlaps(table, _check_coverage(table, lo, hi, report), report)
    if compositions:
        _check_compositions(report)
    if steps:
        for step in STEPS:
            _check_step(step, report)
    return report

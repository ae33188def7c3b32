"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input or a weight
outside what a command handles, 3 the engine could not close a case.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional

from . import __version__
from .bgg import DEFAULT_WINDOW, WindowInstabilityError, composition_series, preferred_source
from .engine import EngineError, deduce_projective
from .flags import VermaFlag, project_block, tensor_flag, typical_projective
from .jantzen import certified_weights
from .lattice import Shape, ShapeError, Weight
from .linkage import atypicality, block_id, is_linked, is_typical
from .reps import RepKind

log = logging.getLogger("supero")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_AMBIGUOUS = 3

CACHE_FORMAT = "supero-flag-cache"
CACHE_VERSION = 1
CACHE_ENV = "SUPERO_CACHE"


class InputError(Exception):
    """Bad user input; reported with exit code 2."""


class Ambiguous(Exception):
    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__(payload["weight"])


# -- cache


class FlagCache:
    """JSON file mapping ``"MxN:weight"`` to a serialized flag and its source.

    Unreadable files and other versions are ignored with a warning; writes go
    through a temporary file and an atomic rename.
    """

    def __init__(self, path: Optional[str]):
        self.path = Path(path) if path else None
        self.entries = {}
        self.dirty = False
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache %s: %s", self.path, exc)
            return
        if not isinstance(data, dict) or data.get("format") != CACHE_FORMAT:
            log.warning("ignoring cache %s: not a flag cache", self.path)
            return
        if data.get("version") != CACHE_VERSION:
            log.warning("ignoring cache %s: version %r", self.path, data.get("version"))
            return
        entries = data.get("flags")
        if not isinstance(entries, dict):
            log.warning("ignoring cache %s: no flag table", self.path)
            return
        self.entries = entries

    @staticmethod
    def key(lam: Weight) -> str:
        return f"{lam.shape.m}x{lam.shape.n}:{lam}"

    def get(self, lam: Weight) -> Optional[tuple]:
        entry = self.entries.get(self.key(lam))
        if entry is None:
            return None
        try:
            return VermaFlag.from_json(entry["flag"], lam.shape), str(entry["source"])
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("ignoring corrupt cache entry for %s: %s", lam, exc)
            return None

    def put(self, lam: Weight, flag: VermaFlag, source: str) -> None:
        if self.path is None:
            return
        self.entries[self.key(lam)] = {"flag": flag.to_json(), "source": source}
        self.dirty = True

    def save(self) -> None:
        if self.path is None or not self.dirty:
            return
        data = {"format": CACHE_FORMAT, "version": CACHE_VERSION, "flags": self.entries}
        directory = self.path.parent if str(self.path.parent) else Path(".")
        fd, tmp = tempfile.mkstemp(prefix=self.path.name, suffix=".tmp", dir=directory)
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(data, fh, indent=1, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self.dirty = False


# -- helpers


def parse_weight(text: str, algebra: Optional[str]) -> Weight:
    try:
        shape = Shape.parse(algebra) if algebra else None
        return Weight.parse(text, shape)
    except (ValueError, ShapeError) as exc:
        raise InputError(str(exc)) from exc


def parse_rep(text: str) -> RepKind:
    try:
        return RepKind.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def algebra_name(shape: Shape) -> str:
    return f"{shape.m}x{shape.n}"


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands


def cmd_atyp(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    data = atypicality(lam)
    payload = {"weight": str(lam), "degree": data.degree, "pairs": [list(p) for p in data.pairs]}
    pairs = ", ".join(f"(q{i},r{j})" for i, j in data.pairs) or "none"
    emit(args, payload, f"degree {data.degree}; matched pairs {pairs}")
    return EXIT_OK


def cmd_linked(args) -> int:
    a = parse_weight(args.w1, args.algebra)
    b = parse_weight(args.w2, args.algebra)
    if a.shape != b.shape:
        raise InputError(f"{a} and {b} belong to different algebras")
    result = is_linked(a, b)
    emit(args, {"w1": str(a), "w2": str(b), "linked": result}, "true" if result else "false")
    return EXIT_OK


def cmd_block(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    b = block_id(lam)
    payload = dict(b.to_json(), algebra=algebra_name(lam.shape))
    emit(args, payload, json.dumps(b.to_json()))
    return EXIT_OK


def resolve_projective(lam: Weight, cache: FlagCache, explain: bool) -> dict:
    payload = {"weight": str(lam), "algebra": algebra_name(lam.shape)}
    hit = cache.get(lam)
    if hit is not None and not explain:
        flag, source = hit
        payload.update(flag=flag.to_json(), source=source, cached=True)
        return payload
    if explain and not is_typical(lam):
        res = deduce_projective(lam)
        payload["trace"] = res.to_json()["trace"]
        if not res.closed:
            raise Ambiguous(dict(payload, **res.to_json()))
    try:
        flag, source = preferred_source(lam)
    except EngineError:
        raise Ambiguous(dict(payload, **deduce_projective(lam).to_json()))
    if explain and is_typical(lam):
        payload["trace"] = []
    cache.put(lam, flag, source)
    payload.update(flag=flag.to_json(), source=source, cached=False)
    return payload


def cmd_projective(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    cache = FlagCache(args.cache or os.environ.get(CACHE_ENV))
    payload = resolve_projective(lam, cache, args.explain)
    cache.save()
    flag = VermaFlag.from_json(payload["flag"], lam.shape)
    lines = [f"P[{lam}] = {flag.text()}", f"source: {payload['source']}"]
    for step in payload.get("trace", []):
        proj = VermaFlag.from_json(step["projection"], lam.shape)
        lines.append(f"  {step['tactic']}: Pr(P[{step['mu']}] x {step['rep']}) = {proj.text()}")
        if step["notes"]:
            lines.append(f"    {step['notes']}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_composition(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    if lam.shape != Shape(2, 2) or atypicality(lam).degree != 2:
        raise InputError("composition series are available for degree 2 weights of gl(2|2)")
    if args.window < 1:
        raise InputError("--window must be positive")
    try:
        series = composition_series(lam, window=args.window)
    except WindowInstabilityError as exc:
        raise InputError(str(exc)) from exc
    payload = {"weight": str(lam), "window": args.window, "series": series.to_json()}
    emit(args, payload, f"M[{lam}] : {series.text('L')}")
    return EXIT_OK


def cmd_certify(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    cert = certified_weights(lam)
    payload = {"weight": str(lam), "certified": cert.to_json()}
    text = "\n".join(f"{tag:4} M[{w}]" for w, tag in cert.tags)
    emit(args, payload, text)
    return EXIT_OK


def cmd_tensor(args) -> int:
    lam = parse_weight(args.weight, args.algebra)
    rep = parse_rep(args.rep)
    if args.verma:
        start, label = VermaFlag([lam], lam.shape), f"M[{lam}]"
    elif is_typical(lam):
        start, label = typical_projective(lam), f"P[{lam}]"
    else:
        try:
            start, _ = preferred_source(lam)
        except EngineError:
            raise Ambiguous(dict({"weight": str(lam)}, **deduce_projective(lam).to_json()))
        label = f"P[{lam}]"
    expanded = tensor_flag(start, rep)
    payload = {"weight": str(lam), "rep": rep.name, "flag": start.to_json(),
               "tensor": expanded.to_json()}
    lines = [f"{label} x {rep.name} = {expanded.text()}"]
    if args.project:
        target = parse_weight(args.project, algebra_name(lam.shape))
        projected = project_block(expanded, block_id(target))
        payload["project"] = str(target)
        payload["projection"] = projected.to_json()
        lines.append(f"Pr[{target}] = {projected.text()}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .checks import run_all
    from .tables.validate import validate_tables

    report = validate_tables()
    checks = run_all()
    ok = report.ok and all(c.ok for c in checks)
    payload = report.to_json()
    payload["properties"] = [
        {"name": c.name, "ok": c.ok, "checked": c.checked, "failures": c.failures}
        for c in checks
    ]
    payload["ok"] = ok
    lines = []
    unexpected = report.unexpected
    for e in report.entries:
        mark = "UNEXPECTED" if e in unexpected else "ledgered"
        lines.append(f"[{mark}] {e.source}: {e.case_id}")
        lines.append(f"    kinds: {', '.join(e.kinds)}")
        lines.append(f"    printed: {e.printed}")
        lines.append(f"    derived ({e.derived_by}): {e.derived}")
        lines.append(f"    derived flag passes invariants: {e.invariants_ok}")
    for key in report.stale:
        lines.append(f"[STALE] {key[0]}: {key[1]} no longer disagrees")
    for f in report.failures:
        lines.append(f"[FAILURE] {f}")
    for c in checks:
        lines.append(c.line())
        lines.extend(f"    {f}" for f in c.failures)
    checked = ", ".join(f"{k} {v}" for k, v in sorted(report.checked.items()))
    lines.append(f"checked: {checked}")
    lines.append(f"ledger entries: {len(report.entries)}; verdict: {'OK' if ok else 'FAILED'}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supero",
        description="Verma flags of projectives and composition series in category O "
        "for gl(3|1) and gl(2|2).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, weight=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--algebra", help="MxN, e.g. 3x1 or 2x2 (default: from the weight)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if weight:
            p.add_argument("--weight", required=True, help='e.g. "5,3,1|1"')
        p.set_defaults(func=func)
        return p

    add("atyp", cmd_atyp, "atypicality degree and matched pairs")
    p = add("linked", cmd_linked, "whether two weights are linked", weight=False)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    add("block", cmd_block, "block identifier")
    p = add("projective", cmd_projective, "Verma flag of a projective cover")
    p.add_argument("--explain", action="store_true", help="include the deduction trace")
    p.add_argument("--cache", help=f"JSON cache file (default: ${CACHE_ENV})")
    p = add("composition", cmd_composition, "composition series of a Verma module")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    add("certify", cmd_certify, "weights certified by the membership conditions")
    p = add("tensor", cmd_tensor, "tensor a flag with a representation")
    p.add_argument("--rep", required=True, help="V, V*, L2V, L2V*, L3V or L3V*")
    p.add_argument("--project", metavar="WEIGHT", help="project onto the block of WEIGHT")
    p.add_argument("--verma", action="store_true", help="start from M_weight, not P_weight")
    p = add("verify", cmd_verify, "check the tables and run the property suites",
            weight=False)
    p.add_argument("--suite", choices=("paper",), default="paper")
    return parser


VALUE_OPTIONS = ("--weight", "--w1", "--w2", "--project")


def _attach_negative_values(argv: list) -> list:
    """Glue ``--weight -1,0|0,-1`` into ``--weight=-1,0|0,-1`` for argparse."""
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if arg in VALUE_OPTIONS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{arg}={nxt}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Ambiguous as exc:
        payload = exc.payload
        if args.format == "json":
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(f"P[{payload['weight']}] is ambiguous", file=sys.stderr)
        return EXIT_AMBIGUOUS


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

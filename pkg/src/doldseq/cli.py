"""Command-line front end: ingestion, subcommand dispatch, report emission.

Reports are JSON by default, with every integer rendered as a decimal
string so that arbitrary-precision terms survive any consumer.  Exit
codes: 0 analysis completed (whatever the verdict), 1 input error,
2 resource-guard stop.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from . import dold, factorint, recurrence
from .factorint import root_density
from .numth import UnsupportedSizeError
from .polyring import normalize, poly_to_string
from .recurrence import TermSizeExceeded

SCHEMA_VERSION = "1"


class InputError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BFile:
    """Parsed OEIS-style b-file: (index, value) entries."""

    entries: tuple[tuple[int, int], ...]
    contiguous: bool
    offset: int


def parse_bfile(text: str) -> BFile:
    entries: list[tuple[int, int]] = []
    seen: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer field in {line!r}") from None
        if n in seen:
            raise InputError(f"line {lineno}: duplicate index {n}")
        if entries and n <= entries[-1][0]:
            raise InputError(f"line {lineno}: indices must be strictly increasing")
        seen.add(n)
        entries.append((n, value))
    if not entries:
        raise InputError("b-file contains no entries")
    offset = entries[0][0]
    contiguous = all(b[0] - a[0] == 1 for a, b in zip(entries, entries[1:]))
    return BFile(tuple(entries), contiguous, offset)


# -- serialization -----------------------------------------------------------


def _encode(obj):
    """Recursively convert a result object to JSON-safe data; ints become decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return {"numerator": str(obj.numerator), "denominator": str(obj.denominator)}
    if isinstance(obj, float):
        return obj
    if dataclasses.is_dataclass(obj):
        return {k: _encode(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _maybe_int(value):
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            return value
    return value


# Fields whose values are genuine strings, never encoded integers.
_STRING_FIELDS = frozenset(
    {
        "schema_version",
        "command",
        "verdict",
        "label",
        "row",
        "condition",
        "status",
        "error",
        "factor",
        "poly",
        "convenient",
        "exactness_source",
        "bound_note",
    }
)


def _decode(obj, key=None):
    """Inverse of _encode for round-tripping reports: decimal strings become ints."""
    if isinstance(obj, dict):
        return {k: _decode(v, k) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v, key) for v in obj]
    if key in _STRING_FIELDS:
        return obj
    return _maybe_int(obj)


def dumps_report(doc: dict) -> str:
    return json.dumps(_encode(doc), indent=2)


def loads_report(text: str) -> dict:
    return _decode(json.loads(text))


def _structure_doc(verdict):
    if verdict.almost:
        return {
            "almost": True,
            "coefficients": [
                {"factor": poly_to_string(list(f)), "factor_coeffs": list(f), "value": l}
                for f, l in verdict.coefficients
            ],
        }
    return {"almost": False, "refutation_index": verdict.refutation_index}


def _violations_doc(violations):
    return [{"n": v.n, "mobius_sum": v.mobius_sum, "deficiency": v.deficiency} for v in violations]


def _fail_doc(report: dold.FailReport) -> dict:
    doc = {
        "verdict": report.verdict,
        "horizon": report.horizon,
        "empirical_lower": report.empirical_lower,
        "fail": "infinity" if report.infinite else (report.exact if report.exact is not None else None),
        "exact": report.exact,
        "upper_bounds": [{"label": label, "value": value} for label, value in report.upper_bounds],
        "violations": _violations_doc(report.violations),
        "per_prime": [{"prime": p, "min_exponent": lo, "max_exponent": hi} for p, lo, hi in report.per_prime],
    }
    if report.structure is not None:
        doc["structure"] = _structure_doc(report.structure)
    if report.classification is not None:
        doc["classification"] = {
            "row": report.classification.row_id,
            "condition": report.classification.condition,
            "details": report.classification.details,
        }
    return doc


# -- argument handling -------------------------------------------------------


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from None


def _load_spec(args) -> recurrence.RecurrenceSpec:
    if args.spec:
        try:
            with open(args.spec) as fh:
                doc = json.load(fh)
            coeffs = [int(c) for c in doc["coeffs"]]
            initial = [int(c) for c in doc["initial"]]
        except (OSError, KeyError, ValueError, TypeError) as exc:
            raise InputError(f"malformed recurrence document: {exc}") from None
    else:
        if not args.coeffs or not args.initial:
            raise InputError("provide --coeffs and --initial, or --spec FILE")
        coeffs = _parse_int_list(args.coeffs)
        initial = _parse_int_list(args.initial)
    try:
        return recurrence.make_recurrence(coeffs, initial)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _view(args, spec) -> recurrence.SequenceView:
    return recurrence.sequence_view(spec, max_bits=args.max_bits)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doldseq", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=True, help="machine-readable output (default)")
    common.add_argument("--human", action="store_true", help="line-oriented human output")
    common.add_argument("--horizon", type=int, default=dold.DEFAULT_HORIZON, help="scan horizon N")
    common.add_argument("--max-bits", type=int, default=recurrence.DEFAULT_MAX_BITS, help="per-term bit budget")
    common.add_argument("--prime-bound", type=int, default=1000, help="prime search bound X")
    common.add_argument("--seed", type=int, default=None, help="factorization determinism override")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def with_spec(p):
        p.add_argument("--coeffs", help="recursion coefficients r1,...,rd")
        p.add_argument("--initial", help="initial terms U1,...,Ud")
        p.add_argument("--spec", help="JSON recurrence document {\"coeffs\": [...], \"initial\": [...]}")
        return p

    with_spec(add_parser("gen", help="generate exact terms"))
    with_spec(add_parser("check", help="Dold and sign condition scan"))
    with_spec(add_parser("fail", help="full fail-factor report"))
    with_spec(add_parser("classify", help="case-table classification"))
    power = with_spec(add_parser("power", help="analysis of the subsequence at indices n**t"))
    power.add_argument("--t", type=int, required=True)
    family = add_parser("family", help="order-2 family with square discriminant delta**2")
    family.add_argument("--delta", type=int, required=True)
    with_spec(add_parser("witness", help="irreducibility-witness (convenient) check"))
    density = add_parser("density", help="mod-p root density diagnostic")
    density.add_argument("--poly", required=True, help="monic polynomial coefficients c0,c1,...,1 ascending")
    bfile = add_parser("bfile-check", help="Dold and sign scan of an OEIS-style b-file")
    bfile.add_argument("file")
    return parser


# -- subcommand bodies -------------------------------------------------------


def _echo(spec) -> dict:
    return {"coeffs": list(spec.coefficients), "initial": list(spec.initial)}


def _cmd_gen(args) -> dict:
    spec = _load_spec(args)
    view = _view(args, spec)
    return {"input": _echo(spec), "terms": [view.term(n) for n in range(1, args.horizon + 1)]}


def _cmd_check(args) -> dict:
    spec = _load_spec(args)
    view = _view(args, spec)
    return {
        "input": _echo(spec),
        "horizon": args.horizon,
        "dold_violations": _violations_doc(dold.dold_violations(view, args.horizon)),
        "sign_violations": dold.sign_violations(view, args.horizon),
    }


def _cmd_fail(args) -> dict:
    spec = _load_spec(args)
    report = dold.fail_report(spec, horizon=args.horizon, max_bits=args.max_bits)
    return {"input": _echo(spec), **_fail_doc(report)}


def _cmd_classify(args) -> dict:
    spec = _load_spec(args)
    row = dold.classify(spec, prime_bound=args.prime_bound)
    return {"input": _echo(spec), "row": row.row_id, "condition": row.condition, "details": row.details}


def _cmd_power(args) -> dict:
    spec = _load_spec(args)
    base = _view(args, spec)
    sub_view = recurrence.power_subsequence(base, args.t)
    verdict = recurrence.structure_test(spec)
    violations = dold.dold_violations(sub_view, args.horizon)
    lower = dold.empirical_fail_lower(sub_view, args.horizon)
    doc: dict = {
        "input": _echo(spec),
        "t": args.t,
        "horizon": args.horizon,
        "row": "power-subsequence",
        "base_structure": _structure_doc(verdict),
        "dold_violations": _violations_doc(violations),
        "empirical_lower": lower,
    }
    try:
        bound = dold.power_fail_bound(spec, args.t)
    except ValueError as exc:
        doc["bound"] = None
        doc["bound_note"] = str(exc)
        return doc
    if bound is None:
        doc["bound"] = None
        doc["bound_note"] = "exponent is not a multiple of the splitting-field degree"
        return doc
    doc["bound"] = {
        "value": bound.bound,
        "radical": bound.radical,
        "degree_multiple": bound.degree_multiple,
        "heuristic": bound.heuristic,
    }
    if lower == bound.radical or lower == bound.bound:
        doc["fail"] = lower
        doc["exactness_source"] = "empirical lower bound meets the splitting-field radical multiplier"
    else:
        doc["fail"] = None
    return doc


def _cmd_family(args) -> dict:
    try:
        spec = recurrence.square_disc_family(args.delta)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = dold.fail_report(spec, horizon=min(args.horizon, 50), max_bits=args.max_bits)
    return {
        "delta": args.delta,
        "coeffs": list(spec.coefficients),
        "initial": list(spec.initial),
        "report": _fail_doc(report),
    }


def _cmd_witness(args) -> dict:
    spec = _load_spec(args)
    status, payload = recurrence.convenient_check(spec, args.prime_bound)
    doc = {"input": _echo(spec), "status": status}
    if status == "certified":
        doc["witness"] = payload
    elif status == "no-witness":
        doc["searched_up_to"] = payload
    return doc


def _cmd_density(args) -> dict:
    coeffs = _parse_int_list(args.poly)
    poly = normalize(coeffs)
    if not poly or poly[-1] != 1:
        raise InputError("--poly must be monic (last coefficient 1)")
    bound = max(args.prime_bound, 100)
    density = root_density(poly, bound)
    return {
        "poly": poly_to_string(poly),
        "prime_bound": bound,
        "density": density,
        "value": float(density),
    }


def _cmd_bfile(args) -> dict:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    bfile = parse_bfile(text)
    warnings = []
    if bfile.offset != 1:
        warnings.append(
            f"b-file offset is {bfile.offset}; terms re-based to start at index 1 "
            "(the Dold condition is index-sensitive)"
        )
    terms = []
    expected = bfile.offset
    for n, value in bfile.entries:
        if n != expected:
            warnings.append(f"non-contiguous at index {n}; analysis limited to the first {len(terms)} terms")
            break
        terms.append(value)
        expected += 1
    horizon = min(args.horizon, len(terms))
    view = recurrence.raw_view(terms, max_bits=args.max_bits)
    report = dold.raw_report(view, horizon)
    return {
        "entries": len(bfile.entries),
        "contiguous": bfile.contiguous,
        "offset": bfile.offset,
        "warnings": warnings,
        "horizon": horizon,
        "verdict": report.verdict,
        "empirical_lower": report.empirical_lower,
        "dold_violations": _violations_doc(report.violations),
        "sign_violations": dold.sign_violations(view, horizon),
    }


_COMMANDS = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "fail": _cmd_fail,
    "classify": _cmd_classify,
    "power": _cmd_power,
    "family": _cmd_family,
    "witness": _cmd_witness,
    "density": _cmd_density,
    "bfile-check": _cmd_bfile,
}


def _humanize(doc: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_humanize(value, indent + 1))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(str(_encode(v)) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if getattr(args, "seed", None) is not None:
        factorint.DEFAULT_SEED = args.seed
    try:
        body = _COMMANDS[args.command](args)
    except InputError as exc:
        print(dumps_report({"schema_version": SCHEMA_VERSION, "command": args.command, "error": str(exc)}))
        return 1
    except (TermSizeExceeded, UnsupportedSizeError) as exc:
        print(
            dumps_report(
                {"schema_version": SCHEMA_VERSION, "command": args.command, "error": str(exc), "guard": True}
            )
        )
        return 2
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, **body}
    if args.human:
        print(_humanize(_encode(doc)))
    else:
        print(dumps_report(doc))
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""
Command-line front end.

Every command builds an output record ``{"schema", "command", "parameters",
"rows", "notes", ...}`` and prints it as JSON (sorted keys, stable bytes) or
as an aligned plain-text table.  Exit codes: 0 success, 2 verification
mismatch, 1 usage or input error.

    schubert-smooth classify --max-rank 6 --coord-bound 4 --format json
    schubert-smooth kumar --case B --l 1
    schubert-smooth triality --check all
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .rootsys import RootSystemError, Weight, build, is_minuscule, is_quasi_minuscule

SCHEMA = "schubert-smooth/1"
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

__all__ = ["main", "run", "build_parser", "to_jsonable", "render_table", "SCHEMA", "UsageError"]


class UsageError(Exception):
    """Bad command line or input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_jsonable(obj: Any) -> Any:
    """Exact values only: ints stay ints, fractions become ``"p/q"`` strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Weight):
        return list(obj.coords)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(record: dict) -> str:
    return json.dumps(to_jsonable(record), sort_keys=True, indent=2)


def _cell(v: Any) -> str:
    v = to_jsonable(v)
    if isinstance(v, list):
        return "(" + ",".join(_cell(x) for x in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(rows: Sequence[dict]) -> str:
    if not rows:
        return "(no rows)"
    cols = list(rows[0])
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    return "\n".join(lines)


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(record)
    parts = [f"# {record['command']}  " + " ".join(f"{k}={_cell(v)}" for k, v in record["parameters"].items())]
    for name, value in record.items():
        if name in ("schema", "command", "parameters", "rows", "notes") or not isinstance(value, list):
            continue
        if value and isinstance(value[0], dict):
            parts += ["", f"[{name}]", render_table(value)]
    if "rows" in record:
        parts += ["", render_table(record["rows"])]
    scalars = {k: v for k, v in record.items()
               if k not in ("schema", "command", "parameters", "notes") and not isinstance(v, dict)
               and not (isinstance(v, list) and v and isinstance(v[0], dict))}
    if scalars:
        parts += [""] + [f"{k}: {_cell(v)}" for k, v in sorted(scalars.items())]
    for note in record.get("notes", []):
        parts.append(f"note: {note}")
    return "\n".join(parts)


def _record(command: str, parameters: dict, **fields) -> dict:
    return {"schema": SCHEMA, "command": command, "parameters": parameters, **fields}


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def _weight(text: str | None, rank: int) -> Weight:
    if text is None:
        raise UsageError("--weight is required")
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--weight must be comma-separated integers, got {text!r}") from None
    if len(coords) != rank:
        raise UsageError(f"--weight has {len(coords)} coordinates but rank is {rank}")
    return Weight(coords)


def _root_system(args):
    if args.type is None or args.rank is None:
        raise UsageError("--type and --rank are required")
    try:
        return build(args.type, args.rank)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_classify(args) -> tuple[dict, bool]:
    from .classify import bound_annotation, rationally_smooth_table, smooth_table, table_mismatches

    rational = rationally_smooth_table(args.max_rank, args.coord_bound, args.a_family_bound)
    smooth = smooth_table(args.max_rank, args.coord_bound, args.a_family_bound, rational=rational)
    bad = table_mismatches(rational, smooth)

    def rrow(r):
        return {"case": r.case.key, "group": r.case.group_name, "dual": _dual_name(r.case),
                "weight": r.weight, "minuscule": r.minuscule, "quasi_minuscule": r.quasi_minuscule,
                "rationally_smooth": r.rationally_smooth}

    def srow(s):
        return {"case": s.case.key, "group": s.case.group_name, "weight": s.weight, "vertex": s.vertex_type,
                "smooth": s.smooth, "exotic": s.exotic, "conjecture_relevant": s.conjecture_relevant}

    rrows = [rrow(r) for r in rational if args.all_rows or r.rationally_smooth]
    srows = [srow(s) for s in smooth if args.all_rows or s.smooth]
    params = {"max_rank": args.max_rank, "coord_bound": args.coord_bound,
              "a_family_bound": args.a_family_bound, "all_rows": args.all_rows}
    rec = _record("classify", params, rationally_smooth=rrows, smooth=srows, mismatches=bad,
                  notes=[bound_annotation(args.coord_bound, args.a_family_bound),
                         "rationally smooth rows: weight-multiplicity-free representations of the fixed-point dual group",
                         "smooth rows: minuscule weights and the exotic odd unitary quasi-minuscule case",
                         "weights are fundamental coordinates in the labels of the identified fixed-point type"])
    return rec, not bad


def _dual_name(case) -> str:
    from .fold import dual_fixed_group

    t, n, iso = dual_fixed_group(case)
    return f"{t}{n} {iso}"


def cmd_wmf(args) -> tuple[dict, bool]:
    from .mult import is_wmf

    rs = _root_system(args)
    mu = _weight(args.weight, rs.rank)
    if not mu.is_dominant():
        raise UsageError(f"{mu} is not dominant")
    params = {"type": rs.type_label, "rank": rs.rank, "weight": mu}
    zero = mu.is_zero()
    return _record("wmf", params, wmf=is_wmf(rs, mu),
                   minuscule=False if zero else is_minuscule(rs, mu),
                   quasi_minuscule=False if zero else is_quasi_minuscule(rs, mu)), True


def cmd_mult(args) -> tuple[dict, bool]:
    from .mult import BruteForceBoundError, dim_irrep, multiplicity_table, weight_multiplicity_bruteforce

    rs = _root_system(args)
    mu = _weight(args.weight, rs.rank)
    if not mu.is_dominant():
        raise UsageError(f"{mu} is not dominant")
    table = multiplicity_table(rs, mu)
    rows = []
    ok = table.dimension() == dim_irrep(rs, mu)
    for lam, m in table.entries:
        row = {"weight": lam, "multiplicity": m, "orbit_size": rs.orbit_size(lam)}
        if args.check:
            try:
                k = weight_multiplicity_bruteforce(rs, mu, lam)
            except BruteForceBoundError:
                k = None
            row["kostant"] = k
            ok &= k is None or k == m
        rows.append(row)
    params = {"type": rs.type_label, "rank": rs.rank, "weight": mu, "check": args.check}
    return _record("mult", params, rows=rows, dimension=table.dimension(), weyl_dimension=dim_irrep(rs, mu)), ok


def cmd_fold(args) -> tuple[dict, bool]:
    from .fold import (
        CaseError, FoldError, coinvariant_index, enumerate_cases, fold, get_case, make_spec,
        simply_connected_check,
    )

    def describe(spec):
        data = fold(spec)
        return {"source": spec.source.name, "permutation": list(spec.node_permutation),
                "fixed": data.fixed_system.name,
                "isogeny": "simply_connected" if simply_connected_check(spec) else "adjoint",
                "echelonnage": data.echelonnage_system.name,
                "coroot_index": data.coroot_index, "components": coinvariant_index(spec)}

    rows, ok = [], True
    if args.case is not None:
        try:
            cases = [get_case(args.case)]
        except CaseError as exc:
            raise UsageError(str(exc.args[0])) from None
    elif args.type is not None:
        try:
            spec = make_spec(args.type, args.rank or 0, args.automorphism)
        except (FoldError, RootSystemError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        return _record("fold", {"type": args.type, "rank": args.rank, "automorphism": args.automorphism},
                       rows=[describe(spec)]), True
    else:
        cases = enumerate_cases(args.max_rank)
    for c in cases:
        row = {"case": c.key, "group": c.group_name, **describe(c.fold_spec)}
        t, n, iso = c.expected_dual
        got = (row["fixed"], row["isogeny"])
        row["expected"] = f"{t}{n} {iso}"
        row["components_expected"] = c.expected_components
        row["match"] = _same_type(got[0], f"{t}{n}") and got[1] == iso and (
            c.expected_components is None or c.expected_components == row["components"])
        ok &= row["match"]
        rows.append(row)
    params = {"case": args.case, "max_rank": args.max_rank}
    return _record("fold", params, rows=rows, notes=["type coincidences B1=A1, C2=B2, D3=A3 are identified"]), ok


_COINCIDENT = {"B1": "A1", "C1": "A1", "C2": "B2", "D3": "A3"}


def _same_type(a: str, b: str) -> bool:
    return _COINCIDENT.get(a, a) == _COINCIDENT.get(b, b)


def cmd_kumar(args) -> tuple[dict, bool]:
    from .affine import AffineError, case_words
    from .kumar import smooth_at, smoothness_ratio

    if args.case is None or args.l is None:
        raise UsageError("--case A|B and --l N are required")
    case = args.case.upper()
    if case not in ("A", "B") or args.l < 1:
        raise UsageError("--case must be A or B and --l positive")
    try:
        w, v = case_words(case, args.l)
    except AffineError as exc:
        raise UsageError(str(exc)) from None
    smooth = smooth_at(w, v)
    ratio = smoothness_ratio(w, v)
    want_smooth = case == "B" and args.l == 1
    want_ratio = Fraction(4 * args.l if case == "A" else args.l)
    ok = smooth == want_smooth and ratio == want_ratio
    rec = _record("kumar", {"case": case, "l": args.l}, w=list(w.letters), v=list(v.letters),
                  smooth=smooth, ratio=ratio, expected_smooth=want_smooth, expected_ratio=want_ratio)
    return rec, ok


_TRIALITY_CHECKS = ("all", "smith", "orthogonal", "entry", "sigma", "dimension", "commute", "probe", "tangent")


def cmd_triality(args) -> tuple[dict, bool]:
    from . import triality as tr

    which = args.check or "all"
    if which not in _TRIALITY_CHECKS:
        raise UsageError(f"--check must be one of {', '.join(_TRIALITY_CHECKS)}")
    x = tr.Cyclo3(1)
    v = tr.build_v_max(x)
    a = tr.exp_matrix(v)
    rows = []

    def add(name, value, expected):
        rows.append({"check": name, "value": value, "expected": expected, "pass": value == expected})

    if which in ("all", "smith"):
        add("smith_valuations", list(tr.smith_valuations(a).valuations), [-2, -1, -1, 0, 0, 1, 1, 2])
    if which in ("all", "orthogonal"):
        add("A J A^t J = 1", a.is_orthogonal(), True)
    if which in ("all", "entry"):
        add("entry (1,8) = -u^-2 zeta^-2 x^2", a[0, 7] == tr.LaurentPoly.monomial(-(tr.ZETA ** -2), -2), True)
    if which in ("all", "sigma"):
        add("v_max sigma-fixed", v.is_sigma_fixed(), True)
        add("sigma_fixed_dimension", tr.sigma_fixed_dimension(), 7)
    if which in ("all", "dimension"):
        add("schubert_dimension", tr.schubert_dimension_check(), 6)
    if which in ("all", "commute"):
        f = tr.v_max_factors(x)
        add("root groups commute", all(p @ q == q @ p for p in f for q in f), True)
    if which in ("all", "probe"):
        rng = random.Random(args.seed)
        agree = True
        for _ in range(args.samples):
            v1 = tr.random_sigma_fixed_vector(rng)
            v2 = v1 if rng.random() < 0.2 else tr.random_sigma_fixed_vector(rng)
            agree &= tr.exp_injectivity_probe(v1, v2) == (v1 != v2)
        add(f"exp injectivity probe ({args.samples} pairs)", agree, True)
    if which in ("all", "tangent"):
        t = tr.tangent_space_report()
        add("dimension pair (orbit closure, tangent)", [t["orbit_closure_dim"], t["tangent_dim"]], [6, 7])
    notes = ["tangent check is partial: six extreme lines are exhibited, the seventh direction is not"]
    return _record("triality", {"check": which, "seed": args.seed, "samples": args.samples},
                   rows=rows, notes=notes), all(r["pass"] for r in rows)


def cmd_smith(args) -> tuple[dict, bool]:
    from . import triality as tr

    if args.input is None:
        m = tr.exp_matrix(tr.build_v_max(tr.Cyclo3(1)))
        source = "exp(v_max)"
    else:
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
            m = tr.LaurentMatrix.loads(text)
        except (OSError, json.JSONDecodeError, tr.TrialityError) as exc:
            raise UsageError(f"cannot read LaurentMatrix from {args.input}: {exc}") from None
        source = args.input
    try:
        vals = tr.smith_valuations(m).valuations
    except tr.TrialityError as exc:
        raise UsageError(str(exc)) from None
    return _record("smith", {"input": source, "size": m.size}, valuations=list(vals)), True


COMMANDS = {
    "classify": cmd_classify, "wmf": cmd_wmf, "mult": cmd_mult, "fold": cmd_fold,
    "kumar": cmd_kumar, "triality": cmd_triality, "smith": cmd_smith,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubert-smooth", description="Exact checks for smooth Schubert varieties.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "table"), default="table")

    sp = sub.add_parser("classify", help="rational smoothness and smoothness tables")
    sp.add_argument("--max-rank", type=int, default=6)
    sp.add_argument("--coord-bound", type=int, default=4)
    sp.add_argument("--a-family-bound", type=int, default=6)
    sp.add_argument("--all-rows", action="store_true", help="include negative rows")
    common(sp)

    for name, help_ in (("wmf", "is V_mu weight-multiplicity-free"), ("mult", "dominant weight multiplicities")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--type", required=True)
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--weight", required=True, help="fundamental coordinates, e.g. 1,0,2")
        if name == "mult":
            sp.add_argument("--check", action="store_true", help="compare with Kostant's formula")
        common(sp)

    sp = sub.add_parser("fold", help="fixed-point dual group of a case or diagram automorphism")
    sp.add_argument("--case", help="Tits name or group name, e.g. C-BC_2 or PU_5")
    sp.add_argument("--type")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--automorphism", choices=("identity", "flip", "triality"), default="flip")
    sp.add_argument("--max-rank", type=int, default=8)
    common(sp)

    sp = sub.add_parser("kumar", help="Kumar's criterion for the odd unitary tower")
    sp.add_argument("--case", required=True, help="A (absolutely special) or B")
    sp.add_argument("--l", type=int, required=True)
    common(sp)

    sp = sub.add_parser("triality", help="exact checks for the ramified triality")
    sp.add_argument("--check", default="all", help="|".join(_TRIALITY_CHECKS))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=100)
    common(sp)

    sp = sub.add_parser("smith", help="Smith valuations of a LaurentMatrix")
    sp.add_argument("--input", help="LaurentMatrix JSON file, '-' for stdin; default exp(v_max)")
    common(sp)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        record, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    print(render(record, args.format), file=out)
    if not ok:
        print(f"verification mismatch in {args.command}", file=err)
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

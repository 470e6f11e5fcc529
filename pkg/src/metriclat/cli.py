"""Command line front end.

Lattice and metric descriptions are JSON files; exact rationals travel as
integers or "p/q" strings (floats are rejected: law checks are exact).
Output is byte-deterministic; --json switches to a machine-readable form.

Exit codes: 0 ok, 1 parse or format error, 2 invalid lattice,
3 lattice/metric mismatch, 4 law violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analysis import (
    discrete_metric,
    irreducibility_report,
    minimal_zero_base,
    mli,
    puzzle_report,
    r_base_check,
)
from .errors import MetricLatticeError, NoBasepoint, ReconstructionMismatch
from .function_lattices import (
    INNER,
    OUTER,
    FiniteMetricSpace,
    GridLipschitzLattice,
    basepoint_metric,
    build_lipschitz_lattice,
    l1_metric,
    lp_metric,
    peak_metric,
    sup_metric,
)
from .generators import (
    SetLattice,
    divisor_lattice,
    product_chain_lattice,
    sublattice,
    subset_lattice,
    subspace_lattice,
)
from .intervaluation import (
    ADD,
    LP,
    MAX,
    Intervaluation,
    check_intervaluation,
    check_prop_intervaluation,
    metric_from_intervaluation,
    pointwise_sup_intervaluation,
)
from .lattice import FiniteLattice, build_from_leq
from .rational import parse_rational, rat_str
from .ultravaluation import (
    check_ultravaluation,
    extract_kappa,
    from_kappa,
    metric_from_ultravaluation,
)
from .valuation import (
    check_cut_law,
    check_metric_axioms,
    check_modular_law,
    classify_valuation,
    metric_from_valuation,
)

OK, PARSE_ERROR, INVALID_LATTICE, MISMATCH, LAW_VIOLATION = 0, 1, 2, 3, 4

_BUILTIN_NAMES = (
    "sup", "l1", "lp", "peak", "basepoint-outer", "basepoint-inner", "discrete",
)
_OPS = {"add": ADD, "max": MAX, "lp2": LP(2), "lp3": LP(3)}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


# -- file loading -------------------------------------------------------------


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise CliError(PARSE_ERROR, f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise CliError(
            PARSE_ERROR, f"{path}:{e.lineno}:{e.colno}: {e.msg}"
        ) from None


def _fields(doc, where: str, required, optional=()):
    if not isinstance(doc, dict):
        raise CliError(PARSE_ERROR, f"{where}: expected a JSON object")
    missing = sorted(k for k in required if k not in doc)
    if missing:
        raise CliError(PARSE_ERROR, f"{where}: missing fields: {', '.join(missing)}")
    unknown = sorted(k for k in doc if k not in required and k not in optional)
    if unknown:
        raise CliError(PARSE_ERROR, f"{where}: unknown fields: {', '.join(unknown)}")


def _rat(value, where: str) -> Fraction:
    try:
        return parse_rational(value)
    except (ValueError, TypeError) as e:
        raise CliError(PARSE_ERROR, f"{where}: {e}") from None


def _int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise CliError(PARSE_ERROR, f"{where}: expected an integer")
    return value


# -- lattice files -------------------------------------------------------------


def _build_lattice(doc, where: str):
    """Returns the builder's object: SetLattice, DivisorLattice,
    SubspaceLattice, GridLipschitzLattice, or a bare FiniteLattice."""
    _fields(doc, where, ("kind",), optional=_LATTICE_FIELDS_ANY)
    kind = doc.get("kind")
    if kind not in _LATTICE_KINDS:
        raise CliError(
            PARSE_ERROR,
            f"{where}: unknown lattice kind {kind!r} "
            f"(expected one of {', '.join(sorted(_LATTICE_KINDS))})",
        )
    _fields(doc, where, ("kind",) + _LATTICE_KINDS[kind][0], _LATTICE_KINDS[kind][1])
    try:
        return _LATTICE_BUILDERS[kind](doc, where)
    except MetricLatticeError as e:
        raise CliError(INVALID_LATTICE, f"{where}: {e}") from None
    except ValueError as e:
        raise CliError(INVALID_LATTICE, f"{where}: {e}") from None


def _build_explicit(doc, where):
    n = _int(doc["n"], f"{where}: n")
    pairs = doc["leq"]
    if not isinstance(pairs, list) or any(
        not isinstance(p, list) or len(p) != 2 for p in pairs
    ):
        raise CliError(PARSE_ERROR, f"{where}: leq must be a list of [i, j] pairs")
    return build_from_leq(
        n, [(_int(a, f"{where}: leq"), _int(b, f"{where}: leq")) for a, b in pairs]
    )


def _build_subsets(doc, where):
    gens = doc["generators"]
    if not isinstance(gens, list) or any(not isinstance(g, list) for g in gens):
        raise CliError(PARSE_ERROR, f"{where}: generators must be a list of lists")
    include = doc.get("include_ground", True)
    if not isinstance(include, bool):
        raise CliError(PARSE_ERROR, f"{where}: include_ground must be a boolean")
    return subset_lattice(doc["ground"], gens, include_ground=include)


def _build_sublattice(doc, where):
    inner = _build_lattice(doc["of"], f"{where}: of")
    ids = doc["elements"]
    if not isinstance(ids, list):
        raise CliError(PARSE_ERROR, f"{where}: elements must be a list of indices")
    return sublattice(
        _lattice_of(inner), [_int(i, f"{where}: elements") for i in ids]
    )


def _build_lipschitz(doc, where):
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise CliError(PARSE_ERROR, f"{where}: points must be a nonempty list")
    dist = doc["dist"]
    if not isinstance(dist, list) or any(not isinstance(r, list) for r in dist):
        raise CliError(PARSE_ERROR, f"{where}: dist must be a square table")
    dist = [[_rat(x, f"{where}: dist") for x in row] for row in dist]
    basepoint = None
    if "basepoint" in doc:
        want = str(doc["basepoint"])
        labels = [str(p) for p in points]
        if want not in labels:
            raise CliError(PARSE_ERROR, f"{where}: basepoint {want!r} is not a point")
        basepoint = labels.index(want)
    space = FiniteMetricSpace(tuple(points), dist, basepoint)
    weights = None
    if "weights" in doc:
        if not isinstance(doc["weights"], list):
            raise CliError(PARSE_ERROR, f"{where}: weights must be a list")
        weights = [_rat(x, f"{where}: weights") for x in doc["weights"]]
    return build_lipschitz_lattice(
        space, _rat(doc["step"], f"{where}: step"),
        _rat(doc["max"], f"{where}: max"), weights,
    )


_LATTICE_KINDS = {
    # kind -> (required fields, optional fields) besides "kind"
    "explicit": (("n", "leq"), ()),
    "subsets": (("ground", "generators"), ("include_ground",)),
    "divisors": (("n",), ()),
    "grid": (("heights",), ()),
    "sublattice": (("of", "elements"), ()),
    "subspaces": (("q", "n"), ()),
    "lipschitz": (("points", "dist", "step", "max"), ("weights", "basepoint")),
}
_LATTICE_FIELDS_ANY = tuple(
    {f for req, opt in _LATTICE_KINDS.values() for f in req + opt}
)
_LATTICE_BUILDERS = {
    "explicit": _build_explicit,
    "subsets": _build_subsets,
    "divisors": lambda doc, where: divisor_lattice(_int(doc["n"], f"{where}: n")),
    "grid": lambda doc, where: product_chain_lattice(
        [_int(h, f"{where}: heights") for h in doc["heights"]]
    ),
    "sublattice": _build_sublattice,
    "subspaces": lambda doc, where: subspace_lattice(
        _int(doc["q"], f"{where}: q"), _int(doc["n"], f"{where}: n")
    ),
    "lipschitz": _build_lipschitz,
}


def _lattice_of(holder) -> FiniteLattice:
    return holder if isinstance(holder, FiniteLattice) else holder.lattice


# -- metric files ----------------------------------------------------------------


def _parse_metric(doc, holder, L: FiniteLattice, where: str):
    """Returns (kind, payload): values list for "valuation", (SetLattice,
    kappa) for "ultravaluation", Intervaluation for "intervaluation", and
    a finished MetricTable for "builtin"."""
    _fields(doc, where, ("kind",), ("values", "kappa", "op", "w", "name", "p"))
    kind = doc.get("kind")
    if kind == "valuation":
        _fields(doc, where, ("kind", "values"))
        vals = doc["values"]
        if not isinstance(vals, dict):
            raise CliError(PARSE_ERROR, f"{where}: values must map labels to rationals")
        want = set(L.labels)
        have = set(vals)
        if have != want:
            missing = sorted(want - have)[:3]
            extra = sorted(have - want)[:3]
            raise CliError(
                MISMATCH,
                f"{where}: values keys do not match the lattice labels "
                f"(missing {missing}, unknown {extra})",
            )
        return kind, [_rat(vals[lbl], f"{where}: values[{lbl}]") for lbl in L.labels]
    if kind == "ultravaluation":
        _fields(doc, where, ("kind", "kappa"))
        if not isinstance(holder, SetLattice):
            raise CliError(
                MISMATCH, f"{where}: atom weights need a subsets lattice"
            )
        table = doc["kappa"]
        if not isinstance(table, dict):
            raise CliError(PARSE_ERROR, f"{where}: kappa must map atoms to rationals")
        want = {str(a): a for a in holder.ground}
        if set(table) != set(want):
            raise CliError(
                MISMATCH,
                f"{where}: kappa keys must be exactly the ground atoms "
                f"{sorted(want)}",
            )
        kappa = {
            want[k]: _rat(v, f"{where}: kappa[{k}]") for k, v in table.items()
        }
        if any(x < 0 for x in kappa.values()):
            raise CliError(MISMATCH, f"{where}: kappa weights must be nonnegative")
        return kind, (holder, kappa)
    if kind == "intervaluation":
        _fields(doc, where, ("kind", "op", "w"))
        op = _OPS.get(doc["op"])
        if op is None:
            raise CliError(
                PARSE_ERROR,
                f"{where}: unknown op {doc['op']!r} "
                f"(expected one of {', '.join(sorted(_OPS))}); "
                f"lp2/lp3 tables hold the p-th powers of w",
            )
        w = doc["w"]
        if (
            not isinstance(w, list)
            or len(w) != L.n
            or any(not isinstance(r, list) or len(r) != L.n for r in w)
        ):
            raise CliError(
                MISMATCH, f"{where}: w must be a {L.n}x{L.n} table for this lattice"
            )
        w = [[_rat(x, f"{where}: w") for x in row] for row in w]
        return kind, Intervaluation(w, op)
    if kind == "builtin":
        _fields(doc, where, ("kind", "name"), ("p",))
        return kind, _builtin_metric(doc, holder, L, where)
    raise CliError(
        PARSE_ERROR,
        f"{where}: unknown metric kind {kind!r} (expected valuation, "
        f"ultravaluation, intervaluation or builtin)",
    )


def _builtin_metric(doc, holder, L: FiniteLattice, where: str):
    name = doc.get("name")
    if name not in _BUILTIN_NAMES:
        raise CliError(
            PARSE_ERROR,
            f"{where}: unknown builtin {name!r} "
            f"(expected one of {', '.join(_BUILTIN_NAMES)})",
        )
    if name != "lp" and "p" in doc:
        raise CliError(PARSE_ERROR, f"{where}: p only applies to the lp builtin")
    if name == "discrete":
        return discrete_metric(L)
    if name == "sup":
        if isinstance(holder, GridLipschitzLattice):
            return sup_metric(holder)
        if L.point_values is None:
            raise CliError(
                MISMATCH,
                f"{where}: sup needs per-element value tuples "
                f"(grid, sublattice of a grid, or lipschitz lattice)",
            )
        return metric_from_intervaluation(L, pointwise_sup_intervaluation(L))
    if not isinstance(holder, GridLipschitzLattice):
        raise CliError(MISMATCH, f"{where}: {name} needs a lipschitz lattice")
    if name == "l1":
        return l1_metric(holder)
    if name == "lp":
        if "p" not in doc:
            raise CliError(PARSE_ERROR, f"{where}: lp needs a field p (2 or 3)")
        p = _int(doc["p"], f"{where}: p")
        if p not in (2, 3):
            raise CliError(PARSE_ERROR, f"{where}: lp supports p = 2 or 3 only")
        return lp_metric(holder, p)
    if name == "peak":
        return peak_metric(holder)
    try:
        return basepoint_metric(holder, OUTER if name == "basepoint-outer" else INNER)
    except NoBasepoint as e:
        raise CliError(MISMATCH, f"{where}: {e}") from None


def _metric_table(kind, payload, L: FiniteLattice):
    """Finished distance table; law failures surface as exit 4."""
    try:
        if kind == "valuation":
            return metric_from_valuation(L, payload)
        if kind == "ultravaluation":
            S, kappa = payload
            return metric_from_ultravaluation(L, from_kappa(S, kappa))
        if kind == "intervaluation":
            return metric_from_intervaluation(L, payload)
        return payload
    except MetricLatticeError as e:
        raise CliError(LAW_VIOLATION, str(e)) from None


# -- rendering -------------------------------------------------------------------


def _name_of(x, L: FiniteLattice) -> str:
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return L.labels[x] if 0 <= x < L.n else str(x)
    if isinstance(x, Fraction):
        return rat_str(x)
    return str(x)


def _witness_str(item, L: FiniteLattice) -> str:
    if not isinstance(item, tuple):
        item = (item,)
    return "(" + ", ".join(_name_of(x, L) for x in item) + ")"


def _emit(args, lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# -- commands ----------------------------------------------------------------------


def cmd_validate(args) -> int:
    holder = _build_lattice(_load(args.lattice), args.lattice)
    L = _lattice_of(holder)
    distributive = L.is_distributive()
    _emit(
        args,
        [f"lattice: ok, distributive: {_yn(distributive)}, {L.n} elements"],
        {"ok": True, "distributive": distributive, "elements": L.n},
    )
    return OK


def cmd_check(args) -> int:
    holder = _build_lattice(_load(args.lattice), args.lattice)
    L = _lattice_of(holder)
    kind, payload = _parse_metric(_load(args.metric), holder, L, args.metric)

    checks = []  # (law name, violation tuples)
    separating = None
    if kind == "valuation":
        values = payload
        checks.append(("modular law", check_modular_law(L, values)))
        cls = classify_valuation(L, values)
        checks.append(
            ("isotone", [] if cls.isotone else [("value decreases along the order",)])
        )
        # the difference table's additive cut law can fail off distributive
        # lattices even when the modular law holds
        w = [
            [values[f] - values[L.meet(f, g)] for g in range(L.n)]
            for f in range(L.n)
        ]
        checks.append(("additive cut law", check_cut_law(L, w)))
        if not checks[0][1] and cls.isotone:
            m = metric_from_valuation(L, values)
            checks.append(("metric axioms", check_metric_axioms(m)))
            separating = m.is_metric
    elif kind == "ultravaluation":
        S, kappa = payload
        w = from_kappa(S, kappa)
        checks.append(("ultravaluation axioms", check_ultravaluation(L, w)))
        m = metric_from_ultravaluation(L, w)
        checks.append(("strong triangle", check_metric_axioms(m, strong=True)))
        try:
            extract_kappa(S, w)
            checks.append(("weight-extraction round trip", []))
        except ReconstructionMismatch as e:
            checks.append(("weight-extraction round trip", [(str(e),)]))
        separating = m.is_metric
    elif kind == "intervaluation":
        iv = payload
        chk = check_intervaluation(L, iv)
        tags = {"negative": [], "leq-zero": [], "cut-lower": [], "cut-upper": []}
        for item in chk.violations:
            tags[item[0]].append(item[1:])
        checks.append(("nonnegative", tags["negative"]))
        checks.append(("zero on comparable pairs", tags["leq-zero"]))
        checks.append(("left cut law (lower bound)", tags["cut-lower"]))
        checks.append(("right cut law (upper bound)", tags["cut-upper"]))
        separating = chk.positive
        if not chk.violations:
            checks.append(
                ("derived-table identities", check_prop_intervaluation(L, iv))
            )
            m = metric_from_intervaluation(L, iv)
            checks.append(("metric axioms", check_metric_axioms(m)))
    else:
        m = payload
        label = m.note or args.metric
        checks.append((f"construction [{label}]", []))
        checks.append(
            ("metric axioms", check_metric_axioms(m, strong=m.kind == "ultravaluation"))
        )
        separating = m.is_metric

    lines = []
    rows = []
    bad = False
    for name, violations in checks:
        ok = not violations
        bad = bad or not ok
        if ok:
            lines.append(f"{name}: PASS")
        else:
            plural = "" if len(violations) == 1 else "es"
            lines.append(f"{name}: FAIL ({len(violations)} witness{plural})")
            for item in violations[:3]:
                lines.append(f"  {_witness_str(item, L)}")
        rows.append(
            {
                "name": name,
                "ok": ok,
                "count": len(violations),
                "witnesses": [_witness_str(v, L) for v in violations[:50]],
            }
        )
    if separating is not None:
        lines.append(f"separating: {_yn(separating)}")
    _emit(args, lines, {"checks": rows, "separating": separating})
    return LAW_VIOLATION if bad else OK


def cmd_analyze(args) -> int:
    holder = _build_lattice(_load(args.lattice), args.lattice)
    L = _lattice_of(holder)
    kind, payload = _parse_metric(_load(args.metric), holder, L, args.metric)
    m = _metric_table(kind, payload, L)
    rep = irreducibility_report(L, m)

    width = max(len("element"), max(len(lbl) for lbl in L.labels))
    head = f"{'element':<{width}}  join-irred  d-irred  chain-downset  witness"
    lines = [
        f"elements: {L.n}",
        f"metric: {m.kind}" + (f" [{m.note}]" if m.note else "")
        + f", separating: {_yn(m.is_metric)}"
        + (f", entries are {m.power}th powers" if m.power != 1 else ""),
        head,
    ]
    elems = []
    for p in range(L.n):
        wit = rep.witnesses.get(p)
        lines.append(
            f"{L.labels[p]:<{width}}  "
            f"{_yn(rep.join_irreducible[p]):<10}  "
            f"{_yn(rep.d_irreducible[p]):<7}  "
            f"{_yn(rep.downset_chain[p]):<13}  "
            + (_witness_str(wit, L) if wit else "-")
        )
        elems.append(
            {
                "label": L.labels[p],
                "join_irreducible": rep.join_irreducible[p],
                "d_irreducible": rep.d_irreducible[p],
                "downset_chain": rep.downset_chain[p],
                "witness": [L.labels[wit[0]], L.labels[wit[1]]] if wit else None,
            }
        )
    in_mli = sorted(rep.mli)
    full = sum(rep.join_irreducible)
    lines.append(f"mli ({len(in_mli)}): " + ", ".join(L.labels[p] for p in in_mli))
    lines.append(f"join-irreducibles: {full} ({full - 1} above bottom)")
    _emit(
        args,
        lines,
        {
            "elements": elems,
            "mli": [L.labels[p] for p in in_mli],
            "join_irreducibles": full,
            "join_irreducibles_above_bottom": full - 1,
            "metric": {
                "kind": m.kind,
                "note": m.note,
                "separating": m.is_metric,
                "power": m.power,
            },
        },
    )
    return OK


def cmd_bases(args) -> int:
    holder = _build_lattice(_load(args.lattice), args.lattice)
    L = _lattice_of(holder)
    kind, payload = _parse_metric(_load(args.metric), holder, L, args.metric)
    m = _metric_table(kind, payload, L)
    radius = _rat(args.r, "--r")
    if radius < 0:
        raise CliError(PARSE_ERROR, "--r: radius must be nonnegative")

    base = minimal_zero_base(L, m)
    rep = r_base_check(L, m, base, radius)
    irr = mli(L, m)
    members = sorted(base)
    lines = [f"minimal 0-base ({len(members)}):"]
    for p in members:
        lines.append(f"  {L.labels[p]}" + ("  [mli]" if p in irr else ""))
    lines.append(f"covered at radius {rat_str(radius)}: {_yn(rep.covered)}")
    if not rep.covered:
        for p in rep.uncovered[:3]:
            lines.append(f"  uncovered: {L.labels[p]}")
    suffix = f" ({m.power}th powers)" if m.power != 1 else ""
    lines.append(f"distances from irreducibles to the base{suffix}:")
    dist_rows = {}
    for p in sorted(rep.mli_distances):
        value = rep.mli_distances[p]
        text = rat_str(value) if value is not None else "unreachable"
        lines.append(f"  {L.labels[p]}: {text}")
        dist_rows[L.labels[p]] = text
    _emit(
        args,
        lines,
        {
            "base": [L.labels[p] for p in members],
            "base_in_mli": [L.labels[p] for p in members if p in irr],
            "radius": rat_str(radius),
            "covered": rep.covered,
            "uncovered": [L.labels[p] for p in rep.uncovered],
            "mli_distances": dist_rows,
            "power": m.power,
        },
    )
    return OK


def cmd_puzzle(args) -> int:
    holder = _build_lattice(_load(args.lattice), args.lattice)
    if not isinstance(holder, SetLattice):
        raise CliError(MISMATCH, f"{args.lattice}: the puzzle needs a subsets lattice")
    try:
        rep = puzzle_report(holder)
    except ValueError as e:
        raise CliError(MISMATCH, f"{args.lattice}: {e}") from None
    L = holder.lattice

    width = max(len("member"), max(len(lbl) for lbl in L.labels))
    lines = [f"{'member':<{width}}  predicted  actual  agree  witness"]
    rows = []
    for i, predicted, actual, wit in rep.rows:
        agree = predicted == actual
        lines.append(
            f"{L.labels[i]:<{width}}  "
            f"{_yn(predicted):<9}  {_yn(actual):<6}  "
            + (f"{_yn(agree):<5}  " if agree else "NO     ")
            + (_witness_str(wit, L) if wit else "-")
        )
        rows.append(
            {
                "member": L.labels[i],
                "predicted": predicted,
                "actual": actual,
                "agree": agree,
                "witness": [L.labels[wit[0]], L.labels[wit[1]]] if wit else None,
            }
        )
    lines.append(f"agreement: {rep.agree}/{rep.total}")
    _emit(
        args,
        lines,
        {"rows": rows, "agree": rep.agree, "total": rep.total},
    )
    return OK


# -- wiring ------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit machine-readable JSON instead of text",
    )
    shared.add_argument(
        "--seed", type=int, metavar="N", default=argparse.SUPPRESS,
        help="seed for randomized commands; the current commands are all "
             "deterministic, the flag is accepted so scripts can pass it "
             "unconditionally",
    )
    shared.add_argument(
        "--threads", type=int, metavar="N", default=argparse.SUPPRESS,
        help="worker-count hint; law checks currently run in-process",
    )
    ap = argparse.ArgumentParser(
        prog="metriclat",
        parents=[shared],
        description="Exact lattice-metric toolbox: validate lattice files, "
                    "check valuation/ultravaluation/intervaluation laws, "
                    "analyze d-irreducibility, compute approximation bases.",
    )
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "validate", parents=[shared],
        help="check that a lattice file describes a lattice",
    )
    p.add_argument("lattice", help="lattice description (JSON)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "check", parents=[shared],
        help="run every applicable law checker on a metric description",
    )
    p.add_argument("lattice", help="lattice description (JSON)")
    p.add_argument("metric", help="metric description (JSON)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "analyze", parents=[shared],
        help="per-element irreducibility report and mli",
    )
    p.add_argument("lattice", help="lattice description (JSON)")
    p.add_argument("metric", help="metric description (JSON)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "bases", parents=[shared],
        help="minimal 0-base and coverage at a given radius",
    )
    p.add_argument("lattice", help="lattice description (JSON)")
    p.add_argument("metric", help="metric description (JSON)")
    p.add_argument("--r", default="0", metavar="R",
                   help="coverage radius, a nonnegative rational (default 0)")
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser(
        "puzzle", parents=[shared],
        help="caption-criterion verdicts vs the brute-force oracle "
             "(natural-number subsets lattices, atom weight = the number)",
    )
    p.add_argument("lattice", help="lattice description (JSON)")
    p.set_defaults(func=cmd_puzzle)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    # the shared flags keep SUPPRESS defaults so a subcommand's namespace
    # never clobbers a flag given before the command name (the parent
    # actions are shared objects; set_defaults would overwrite SUPPRESS
    # on them); absent flags are filled in here instead
    for name, default in (("json", False), ("seed", None), ("threads", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.code
    except MetricLatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return LAW_VIOLATION


if __name__ == "__main__":
    sys.exit(main())

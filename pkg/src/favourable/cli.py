"""Command line driver.

Every subcommand prints one JSON document on stdout (or a table with
``--text``).  Exit status: 0 on success, 1 when a verification fails (the
report carries a witness), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import __version__
from .essential import compare_es_vs_S, essential_set, highest_weight_module
from .jsonio import (
    emit_json,
    essential_to_json,
    lattice_set_to_json,
    polytope_to_json,
    ray_to_json,
)
from .polytope import (
    build_polytope,
    check_minkowski_decomposition,
    check_normality,
    gob_generators,
    lattice_points,
    minkowski_sum,
)
from .repmod import wedge_rep_sl
from .rootsys import (
    Family,
    LieType,
    check_weight,
    default_good_ordering,
    exponent_label,
    weyl_dim,
)
from .toric import (
    automorphism_summary,
    demazure_count_formula,
    demazure_roots,
    fan_rays_A_regular,
    hilbert_function,
    newton_okounkov_check,
    valuation_semigroup_layer,
)

COMMANDS = (
    "polytope", "lattice", "essential", "verify-favourable", "minkowski",
    "normality", "hilbert", "valuation", "demazure", "gob",
)
THREADS_ENV = "FAVOURABLE_THREADS"


class UsageError(Exception):
    def __init__(self, flag, message):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass
class JobSpec:
    command: str
    lie_type: LieType | None = None
    weight: tuple[int, ...] | None = None
    flags: dict = field(default_factory=dict)


def _parse_weight(text, lie_type, flag="--weight"):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(flag, f"expected comma-separated integers, got {text!r}") from None
    try:
        return check_weight(lie_type, values)
    except ValueError as exc:
        raise UsageError(flag, str(exc)) from None


def _parse_type(args):
    if args.type is None:
        return None
    try:
        return LieType.parse(args.type, args.rank)
    except ValueError as exc:
        raise UsageError("--type/--rank", str(exc)) from None


def job_from_args(args) -> JobSpec:
    lie_type = _parse_type(args)
    weight = None
    if getattr(args, "weight", None) is not None:
        if lie_type is None:
            raise UsageError("--type", "a weight needs a type")
        weight = _parse_weight(args.weight, lie_type)
    flags = {k: v for k, v in vars(args).items()
             if k not in ("command", "type", "rank", "weight") and v is not None}
    for name in ("n_max", "box_bound", "degree_cap", "max_coeff"):
        if name in flags and flags[name] < 1:
            raise UsageError("--" + name.replace("_", "-"), "must be positive")
    if "weight2" in flags:
        flags["weight2"] = _parse_weight(flags["weight2"], lie_type, "--weight2")
    return JobSpec(args.command, lie_type, weight, flags)


def _need(job, what):
    if what == "type" and job.lie_type is None:
        raise UsageError("--type", f"{job.command} needs --type")
    if what == "weight" and job.weight is None:
        raise UsageError("--weight", f"{job.command} needs --weight")


def _labels(lie_type):
    return default_good_ordering(lie_type).labels


# -- commands ---------------------------------------------------------------


def _cmd_polytope(job):
    _need(job, "weight")
    poly = build_polytope(job.lie_type, job.weight)
    if job.flags.get("format") == "ieqs":
        return {"ieqs": poly.to_ieqs()}, True
    return {"polytope": polytope_to_json(poly)}, True


def _cmd_lattice(job):
    _need(job, "weight")
    s = lattice_points(build_polytope(job.lie_type, job.weight))
    return {"count": len(s), "weyl_dim": weyl_dim(job.lie_type, job.weight),
            "S": lattice_set_to_json(s, _labels(job.lie_type))}, True


def _cmd_essential(job):
    _need(job, "weight")
    t, w = job.lie_type, job.weight
    if job.flags.get("radical"):
        if t.family is not Family.A or sum(w) != 1:
            raise UsageError("--radical", "needs a fundamental weight of type A")
        module = wedge_rep_sl(t.rank, w.index(1) + 1, radical=True)
    else:
        try:
            module = highest_weight_module(t, w)
        except ValueError as exc:
            raise UsageError("--type", str(exc)) from None
    result = essential_set(module, max_degree=job.flags.get("degree_cap"))
    return {"essential": essential_to_json(result, module.root_labels)}, True


def _favourable_checks(lie_type, weight, n_max):
    """All checks for one weight; runs in worker processes."""
    s = lattice_points(build_polytope(lie_type, weight))
    dim = weyl_dim(lie_type, weight)
    out = {"weight": list(weight), "count": len(s), "weyl_dim": dim, "dimension_law": len(s) == dim}
    mink = check_minkowski_decomposition(lie_type, weight)
    out["minkowski"] = mink.ok
    if any(weight):
        norm = check_normality(build_polytope(lie_type, weight), n_max)
        out["normality"] = norm.ok
        if not norm.ok:
            out["normality_witness"] = list(norm.witness)
    if lie_type.family is Family.G2:
        out["es_equals_S"] = None  # no G2 modules are constructed
    else:
        try:
            cmp = compare_es_vs_S(lie_type, weight)
        except ValueError:
            out["es_equals_S"] = None
        else:
            out["es_equals_S"] = cmp.equal
            if not cmp.equal:
                out["only_in_es"] = [list(p) for p in cmp.only_in_es]
                out["only_in_S"] = [list(p) for p in cmp.only_in_S]
    out["ok"] = all(v is not False for k, v in out.items()
                    if k in ("dimension_law", "minkowski", "normality", "es_equals_S"))
    return out


def _cmd_verify(job):
    _need(job, "type")
    n_max = job.flags.get("n_max", 2)
    if job.weight is not None:
        weights = [job.weight]
    else:
        k = job.flags.get("max_coeff", 1)
        weights = sorted(product(range(k + 1), repeat=job.lie_type.rank), key=lambda w: (sum(w), w))
    threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    args = [(job.lie_type, w, n_max) for w in weights]
    if threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(threads) as pool:
            rows = list(pool.map(_favourable_checks, *zip(*args)))
    else:
        rows = []
        for a in args:
            print(f"checking {job.lie_type} weight {a[1]}", file=sys.stderr)
            rows.append(_favourable_checks(*a))
    ok = all(r["ok"] for r in rows)
    return {"n_max": n_max, "weights": rows, "all_ok": ok}, ok


def _cmd_minkowski(job):
    _need(job, "weight")
    labels = _labels(job.lie_type)
    if "weight2" in job.flags:
        mu = job.flags["weight2"]
        total = tuple(a + b for a, b in zip(job.weight, mu))
        lhs = minkowski_sum(lattice_points(build_polytope(job.lie_type, job.weight)),
                            lattice_points(build_polytope(job.lie_type, mu)))
        rhs = lattice_points(build_polytope(job.lie_type, total))
        ok = lhs == rhs
        res = {"sum": len(lhs), "target": len(rhs), "equal": ok}
        if not ok:
            res["witness"] = list(((rhs - lhs) or (lhs - rhs)).points[0])
        return res, ok
    check = check_minkowski_decomposition(job.lie_type, job.weight)
    res = {"decomposition": check.ok, **check.info, "labels": labels}
    if not check.ok:
        res["witness"] = list(check.witness)
    return res, check.ok


def _cmd_normality(job):
    _need(job, "weight")
    check = check_normality(build_polytope(job.lie_type, job.weight), job.flags.get("n_max", 3))
    res = {"normal": check.ok, **check.info}
    if not check.ok:
        res["witness"] = list(check.witness)
    return res, check.ok


def _cmd_hilbert(job):
    _need(job, "weight")
    s = lattice_points(build_polytope(job.lie_type, job.weight))
    upto = job.flags.get("n_max", 3)
    values = [hilbert_function(s, n) for n in range(upto + 1)]
    dims = [weyl_dim(job.lie_type, tuple(n * m for m in job.weight)) for n in range(upto + 1)]
    return {"hilbert": values, "weyl_dims": dims, "equal": values == dims}, values == dims


def _cmd_valuation(job):
    _need(job, "weight")
    try:
        module = highest_weight_module(job.lie_type, job.weight)
    except ValueError as exc:
        raise UsageError("--type", str(exc)) from None
    n_max = job.flags.get("n_max", 2)
    labels = _labels(job.lie_type)
    layers = {}
    for n in range(1, n_max + 1):
        layers[str(n)] = lattice_set_to_json(valuation_semigroup_layer(module, n))["points"]
    check = newton_okounkov_check(job.lie_type, job.weight, n_max)
    res = {"labels": labels, "layers": layers, "inside_polytope": check.ok}
    if not check.ok:
        res["witness"] = list(check.witness)
    return res, check.ok


def _cmd_demazure(job):
    if job.lie_type.family is not Family.A:
        raise UsageError("--type", "Demazure roots are computed for type A only")
    n = job.lie_type.rank
    box = job.flags.get("box_bound", 2)
    rays = fan_rays_A_regular(n)
    labels = _labels(LieType(Family.A, n))
    roots = demazure_roots(rays, box)
    ok = len(roots) == demazure_count_formula(n)
    return {
        "rank": n,
        "box_bound": box,
        "labels": labels,
        "rays": [ray_to_json(r, labels) for r in rays],
        "roots": [{"m": list(r.m), "ray": list(r.ray.vector)} for r in roots],
        "count": len(roots),
        "formula": demazure_count_formula(n),
        "summary": automorphism_summary(n, box),
    }, ok


def _cmd_gob(job):
    _need(job, "type")
    gens = gob_generators(job.lie_type)
    return {"labels": _labels(job.lie_type),
            "generators": [{"vertex": list(v), "omega": i} for v, i in gens]}, True


_DISPATCH = {
    "polytope": _cmd_polytope,
    "lattice": _cmd_lattice,
    "essential": _cmd_essential,
    "verify-favourable": _cmd_verify,
    "minkowski": _cmd_minkowski,
    "normality": _cmd_normality,
    "hilbert": _cmd_hilbert,
    "valuation": _cmd_valuation,
    "demazure": _cmd_demazure,
    "gob": _cmd_gob,
}


def run(job: JobSpec) -> tuple[dict, int]:
    """Dispatch a job; returns (report, exit code)."""
    start = time.perf_counter()
    results, ok = _DISPATCH[job.command](job)
    inputs = {"type": str(job.lie_type) if job.lie_type else None,
              "weight": list(job.weight) if job.weight is not None else None}
    inputs.update({k: v for k, v in sorted(job.flags.items())
                   if k not in ("text", "timing", "expect")})
    report = {"command": job.command, "inputs": inputs, "results": results,
              "version": __version__}
    expect = job.flags.get("expect")
    if expect:
        with open(expect) as fh:
            golden = json.load(fh)
        # round trip through JSON so tuples compare like lists
        matches = json.loads(emit_json(results)) == golden.get("results", golden)
        report["golden"] = {"file": os.path.basename(expect), "match": matches}
        ok = ok and matches
    elapsed = time.perf_counter() - start
    if job.flags.get("timing"):
        report["timing"] = round(elapsed, 6)
    print(f"{job.command}: {elapsed:.3f}s", file=sys.stderr)
    return report, 0 if ok else 1


# -- text rendering ---------------------------------------------------------


def render_text(report: dict) -> str:
    res = report["results"]
    lines = [f"{report['command']}  {report['inputs'].get('type') or ''} "
             f"{report['inputs'].get('weight') or ''}".rstrip()]
    if "essential" in res:
        e = res["essential"]
        lines.append(f"essential monomials ({e['dimension']}):")
        lines += [f"  {list(p)}  {m}" for p, m in zip(e["es"], e["es_monomials"])]
        lines.append("annihilator generators:")
        lines += [f"  {list(p)}  {m}" for p, m in zip(e["annihilator_generators"], e["annihilator_monomials"])]
        lines.append(f"PBW Hilbert vector: {e['pbw_hilbert']}")
    elif "S" in res:
        labels = res["S"]["labels"]
        lines.append("  " + "  ".join(labels))
        lines += ["  " + "  ".join(str(x).rjust(len(l)) for x, l in zip(p, labels))
                  for p in res["S"]["points"]]
        lines.append(f"count {res['count']}, Weyl dimension {res['weyl_dim']}")
    elif "weights" in res:
        for row in res["weights"]:
            lines.append(f"  {row['weight']}: #S={row['count']} dim={row['weyl_dim']} "
                         f"minkowski={row['minkowski']} normal={row.get('normality')} "
                         f"es=S={row['es_equals_S']}")
        lines.append("all checks pass" if res["all_ok"] else "FAILED")
    elif "roots" in res:
        labels = res["labels"]
        for r in res["roots"]:
            lines.append(f"  m={r['m']}  tau={r['ray']}  "
                         f"{exponent_label([max(x, 0) for x in r['m']], labels)}")
        lines.append(f"{res['count']} roots, formula {res['formula']}")
    else:
        for key, value in res.items():
            lines.append(f"  {key}: {value if isinstance(value, (int, bool, str)) else emit_json(value)}")
    if "golden" in report:
        lines.append(f"golden {report['golden']['file']}: "
                     f"{'match' if report['golden']['match'] else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="favourable", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, weight=True, type_required=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--type", required=type_required, help="A, C or G2")
        p.add_argument("--rank", type=int)
        if weight:
            p.add_argument("--weight", help="comma separated, e.g. 1,0,1 (G2: k,l)")
        p.add_argument("--text", action="store_true", help="human readable output")
        p.add_argument("--timing", action="store_true", help="include elapsed time in the JSON")
        return p

    p = add("polytope", "inequality system of P(lambda)")
    p.add_argument("--format", choices=("json", "ieqs"), default="json")
    add("lattice", "lattice points S(lambda)")
    p = add("essential", "essential monomials of V(lambda)")
    p.add_argument("--radical", action="store_true",
                   help="use only the abelian radical (fundamental type-A weights)")
    p.add_argument("--degree-cap", type=int)
    p.add_argument("--expect", help="golden JSON file to compare against")
    p = add("verify-favourable", "run every check on a grid of weights")
    p.add_argument("--max-coeff", type=int)
    p.add_argument("--n-max", type=int)
    p = add("minkowski", "Minkowski decomposition of S(lambda)")
    p.add_argument("--weight2", help="check S(weight)+S(weight2) = S(weight+weight2)")
    p = add("normality", "normality of P(lambda)")
    p.add_argument("--n-max", type=int)
    p = add("hilbert", "Hilbert function #nS(lambda) against dim V(n lambda)")
    p.add_argument("--n-max", type=int)
    p = add("valuation", "valuation semigroup layers and the Newton-Okounkov shadow")
    p.add_argument("--n-max", type=int)
    p = add("demazure", "Demazure roots of the regular type-A toric variety",
            weight=False, type_required=False)
    p.add_argument("--box-bound", type=int)
    add("gob", "generators of the global cone", weight=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "demazure" and args.type is None:
        args.type = "A"
    try:
        job = job_from_args(args)
        report, code = run(job)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # inputs outside what the library supports (size guards, ranks)
        print(f"unsupported input: {exc}", file=sys.stderr)
        return 2
    if job.flags.get("text"):
        sys.stdout.write(render_text(report))
    else:
        sys.stdout.write(emit_json(report) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

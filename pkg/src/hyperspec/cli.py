"""Command-line interface: ``hyperspec {info,eig,bounds,gen,verify}``.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 eigensolver
did not converge.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from hyperspec import io
from hyperspec.bounds import LOWER, MU, RHO, full_report
from hyperspec.core import (
    Hypergraph,
    connected_components,
    degree_profile,
    has_equal_avg2_degrees,
    is_blowup_of_regular,
    is_regular,
)
from hyperspec.errors import HypergraphError, NonPositiveIterate, NotConverged
from hyperspec.generators import (
    FIXTURES,
    blow_up,
    complete_uniform,
    cycle,
    fixture_text,
    hyperstar,
    star_extremal,
    two_heart_graph,
)
from hyperspec.tensorops import (
    ADJACENCY,
    DEFAULT_MAX_ITER,
    DEFAULT_SHIFT,
    DEFAULT_TOL,
    SIGNLESS_LAPLACIAN,
    brute_force_oracle,
    signless_laplacian_radius,
    spectral_radius,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class InputError(Exception):
    def __init__(self, name, message):
        super().__init__(message)
        self.name = name


def _load(path) -> Hypergraph:
    try:
        return io.read(path)
    except HypergraphError as exc:
        raise InputError(type(exc).__name__, str(exc)) from exc
    except OSError as exc:
        raise InputError(type(exc).__name__, str(exc)) from exc


def _document(G: Hypergraph, **sections) -> dict:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "input": {"n": G.n, "k": G.k, "numEdges": G.num_edges},
    }
    doc.update(sections)
    return doc


def profile_section(G: Hypergraph) -> dict:
    p = degree_profile(G)
    comps = connected_components(G)
    reg = is_regular(G)
    blow = is_blowup_of_regular(G)
    return {
        "degrees": list(p.degrees),
        "avg2": list(p.avg2) if p.avg2 is not None else None,
        "avg2Exact": [str(q) for q in p.avg2_exact] if p.avg2_exact is not None else None,
        "connected": comps.is_connected,
        "components": len(comps.components),
        "isolatedVertices": sorted(comps.isolated_vertices),
        "regular": reg.regular,
        "regularDegree": reg.degree,
        "blowupOfRegular": blow.blowup,
        "blowupApex": blow.apex,
        "equalAvg2": has_equal_avg2_degrees(G) if p.avg2 is not None else None,
    }


def _emit(doc: dict, as_json: bool, human) -> None:
    if as_json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        human(doc)


def _table(rows, header) -> str:
    rows = [[("-" if c is None else (f"{c:.12g}" if isinstance(c, float) else str(c))) for c in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def _print_profile(doc):
    inp, prof = doc["input"], doc["profile"]
    print(f"k={inp['k']}  n={inp['n']}  |E|={inp['numEdges']}")
    print(f"connected={prof['connected']}  components={prof['components']}  "
          f"regular={prof['regular']}  blowupOfRegular={prof['blowupOfRegular']}  "
          f"equalAvg2={prof['equalAvg2']}")
    m = prof["avg2Exact"] or [None] * len(prof["degrees"])
    print(_table([(v, d, mv) for v, (d, mv) in enumerate(zip(prof["degrees"], m), start=1)],
                 ["vertex", "degree", "m"]))


def cmd_info(args) -> int:
    G = _load(args.path)
    _emit(_document(G, profile=profile_section(G)), args.json, _print_profile)
    return EXIT_OK


def _solve(G, kind, args):
    fn = spectral_radius if kind == ADJACENCY else signless_laplacian_radius
    return fn(G, shift=args.shift, tol=args.tol, max_iter=args.max_iter)


def _print_eigen(doc):
    rows = [(t, e["lambda"], e["lo"], e["hi"], e["iterations"], e["converged"]) for t, e in doc["eigen"].items()]
    print(_table(rows, ["target", "lambda", "lo", "hi", "iterations", "converged"]))
    for t, e in doc["eigen"].items():
        if "oracle" in e:
            print(f"{t} oracle: {e['oracle']['value']:.12g} (seed {e['oracle']['seed']})")


def _oracle_seed() -> int:
    return int(os.environ.get("HYPERSPEC_SEED", "0"))


def cmd_eig(args) -> int:
    G = _load(args.path)
    kind = ADJACENCY if args.operator == "adjacency" else SIGNLESS_LAPLACIAN
    target = RHO if kind == ADJACENCY else MU
    code = EXIT_OK
    try:
        est = _solve(G, kind, args)
    except NotConverged as exc:
        est, code = exc.estimate, EXIT_NUMERIC
        print(f"error: NotConverged: {exc}", file=sys.stderr)
    entry = est.as_dict()
    if args.oracle:
        res = brute_force_oracle(G, kind, seed=_oracle_seed())
        entry["oracle"] = {"value": res.value, "seed": res.seed, "restarts": res.restarts}
    _emit(_document(G, eigen={target: entry}), args.json, _print_eigen)
    return code


def _print_bounds(doc):
    rows = [
        (b["boundId"], b["target"], b["kind"], b["value"] if b["value"] is not None else b["inapplicable"], b["sharp"])
        for b in doc["bounds"]
    ]
    print(_table(rows, ["bound", "target", "kind", "value", "sharp"]))


def cmd_bounds(args) -> int:
    G = _load(args.path)
    _emit(_document(G, bounds=full_report(G).as_list()), args.json, _print_bounds)
    return EXIT_OK


def verify(G: Hypergraph, tol: float = 1e-6, solver_tol: float = DEFAULT_TOL,
           max_iter: int = DEFAULT_MAX_ITER, shift: float = DEFAULT_SHIFT) -> dict:
    """Check every applicable bound against the certified interval of its target.

    A lower bound passes if it is <= lo + tol, an upper bound if it is >= hi - tol.
    Raises NotConverged if either eigensolve fails.
    """
    rho = spectral_radius(G, shift, solver_tol, max_iter)
    mu = signless_laplacian_radius(G, shift, solver_tol, max_iter)
    est = {RHO: rho, MU: mu}
    checks = []
    for e in full_report(G).entries:
        row = {"boundId": e.bound_id, "target": e.target, "kind": e.kind, "value": e.value, "sharp": e.sharp}
        if not e.applicable:
            row.update(status="skipped", reason=e.inapplicable)
        else:
            lo, hi = est[e.target].lo, est[e.target].hi
            ok = e.value <= lo + tol if e.kind == LOWER else e.value >= hi - tol
            row["status"] = "ok" if ok else "violation"
        checks.append(row)
    return {
        "eigen": {RHO: rho.as_dict(), MU: mu.as_dict()},
        "checks": checks,
        "violations": [c["boundId"] for c in checks if c["status"] == "violation"],
        "skipped": [c["boundId"] for c in checks if c["status"] == "skipped"],
        "sharp": [c["boundId"] for c in checks if c["sharp"]],
        "tol": tol,
    }


def _print_verify(doc):
    _print_eigen(doc)
    print()
    v = doc["verification"]
    rows = [(c["boundId"], c["target"], c["kind"], c["value"], c["status"], c["sharp"]) for c in v["checks"]]
    print(_table(rows, ["bound", "target", "kind", "value", "status", "sharp"]))
    for bid in v["sharp"]:
        print(f"{bid} sharp")
    if v["skipped"]:
        print("skipped: " + ", ".join(v["skipped"]))
    print("violations: " + (", ".join(v["violations"]) if v["violations"] else "none"))


def cmd_verify(args) -> int:
    G = _load(args.path)
    try:
        res = verify(G, tol=args.tol, solver_tol=args.solver_tol, max_iter=args.max_iter)
    except (NotConverged, NonPositiveIterate) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    eigen = res.pop("eigen")
    _emit(_document(G, eigen=eigen, verification=res), args.json, _print_verify)
    return EXIT_VIOLATION if res["violations"] else EXIT_OK


def _generate(args) -> tuple[str, Hypergraph | None]:
    fam = args.family
    if fam == "fixture":
        text = fixture_text(args.name)
        return text, io.parse(text)
    if fam == "hyperstar":
        G = hyperstar(args.k, args.d)
    elif fam == "gddg":
        if args.final_degrees:
            G = star_extremal(args.k, args.d1, args.d2, args.gamma)
        else:
            G = two_heart_graph(args.k, args.d1, args.d2, args.gamma)
    elif fam == "complete":
        G = complete_uniform(args.n, args.k)
    elif fam == "cycle":
        G = cycle(args.m)
    elif fam == "blowup":
        G = blow_up(_load(args.base))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError("BadParams", f"unknown family {fam}")
    return io.serialize(G), G


def cmd_gen(args) -> int:
    try:
        text, G = _generate(args)
    except HypergraphError as exc:
        raise InputError(type(exc).__name__, str(exc)) from exc
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"wrote {args.output}: k={G.k} n={G.n} |E|={G.num_edges}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_path(p):
        p.add_argument("path", help="hypergraph file (text 'k n' + edges, or JSON)")
        p.add_argument("--json", action="store_true", help="print the JSON report document")

    def add_solver(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
        p.add_argument("--shift", type=float, default=DEFAULT_SHIFT)

    p = sub.add_parser("info", help="degrees, average 2-degrees and structure")
    add_path(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("eig", help="certified spectral radius")
    add_path(p)
    add_solver(p)
    p.add_argument("--operator", choices=["adjacency", "qlap"], default="adjacency")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the variational oracle (n <= 12; seed from HYPERSPEC_SEED)")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("bounds", help="evaluate every bound")
    add_path(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check every bound against certified rho and mu")
    add_path(p)
    p.add_argument("--tol", type=float, default=1e-6, help="slack for bound checks")
    p.add_argument("--solver-tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.set_defaults(func=cmd_verify)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write here instead of standard output")
    p = sub.add_parser("gen", help="generate a family member or fixture")
    fams = p.add_subparsers(dest="family", required=True)
    f = fams.add_parser("hyperstar", parents=[out])
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--d", type=int, required=True)
    f = fams.add_parser("gddg", parents=[out], help="two hyperstars joined by gamma bridge edges")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--d1", type=int, required=True)
    f.add_argument("--d2", type=int, required=True)
    f.add_argument("--gamma", type=int, required=True)
    f.add_argument("--final-degrees", action="store_true",
                   help="read d1, d2 as the final degrees of the two hearts")
    f = fams.add_parser("complete", parents=[out])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f = fams.add_parser("cycle", parents=[out])
    f.add_argument("--m", type=int, required=True)
    f = fams.add_parser("blowup", parents=[out])
    f.add_argument("--base", required=True, help="(k-1)-uniform hypergraph file")
    f = fams.add_parser("fixture", parents=[out])
    f.add_argument("name", choices=FIXTURES)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypergraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

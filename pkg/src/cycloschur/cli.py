"""Command-line front end.

``cycloschur verify`` runs the machine-verification suites and emits a JSON
report (schema 1); ``cycloschur compute`` evaluates characters, LR data,
symmetric polynomials, tableaux, and Lie structure constants as JSON.

Exit codes: 0 all selected checks pass, 1 verification failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import combinatorics as comb
from . import hecke, liealg, schurops, symfun
from .coeff import LaurentRing, ml_to_json
from .combinatorics import Shape
from .reporting import all_ok


SUITES = ("hecke", "schur", "lie", "symfun", "q1")


class ParseError(ValueError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position


@dataclass
class RunConfig:
    n: int = 2
    r: int = 2
    m: tuple = (2, 2)
    suites: tuple = SUITES
    deg: int = 2
    dmax: int = 3
    seed: int = 0
    points: int = 3
    out: str | None = None
    q1: bool = False

    @property
    def shape(self):
        return Shape(self.m)

    def as_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "m": list(self.m),
            "suites": list(self.suites),
            "deg": self.deg,
            "dmax": self.dmax,
            "seed": self.seed,
            "points": self.points,
            "q1": self.q1,
        }


def parse_multipartition(text):
    """Parse a parenthesized multipartition literal.

    Grammar (whitespace-insensitive):
        multipartition := '(' partition (',' partition)* ')'
        partition      := '(' [ int (',' int)* ] ')'
    Example: ``((2,1),())`` is the 2-component multipartition with first
    component (2,1) and empty second component.
    """
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            found = text[pos] if pos < len(text) else "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", text, pos)
        pos += 1

    def parse_int():
        nonlocal pos
        skip_ws()
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            found = text[pos] if pos < len(text) else "end of input"
            raise ParseError(f"expected integer, found {found!r}", text, pos)
        return int(text[start:pos])

    def parse_partition():
        nonlocal pos
        expect("(")
        skip_ws()
        parts = []
        if pos < len(text) and text[pos] == ")":
            pos += 1
            return ()
        while True:
            parts.append(parse_int())
            skip_ws()
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            expect(")")
            break
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ParseError("partition parts must be weakly decreasing", text, pos)
        return comb.strip(tuple(parts))

    expect("(")
    components = [parse_partition()]
    skip_ws()
    while pos < len(text) and text[pos] == ",":
        pos += 1
        components.append(parse_partition())
        skip_ws()
    expect(")")
    skip_ws()
    if pos != len(text):
        raise ParseError("trailing input", text, pos)
    return tuple(components)


def _suite_hecke(config):
    ctx = hecke.HeckeContext(config.n, config.r, q_one=config.q1)
    return hecke.verify_hecke(ctx, config.shape, dmax=config.dmax)


def _suite_schur(config):
    sctx = schurops.SchurContext(config.n, config.shape, q_one=config.q1)
    checks = schurops.verify_relations(
        sctx,
        smax=config.deg,
        tmax=config.deg,
        umax=config.deg,
        points=config.points,
        seed=config.seed,
    )
    checks += schurops.verify_divided_powers(sctx, dmax=config.dmax, tmax=1)
    checks += schurops.verify_hw_eigenvalues(sctx.ring, lam_max=4, j_max=2, t_max=3)
    return checks


def _suite_q1(config):
    sctx = schurops.SchurContext(config.n, config.shape, q_one=True)
    checks = schurops.verify_q1(
        sctx,
        smax=config.deg,
        tmax=config.deg,
        umax=config.deg,
        points=config.points,
        seed=config.seed,
    )
    checks += schurops.verify_hw_eigenvalues(sctx.ring, lam_max=4, j_max=2, t_max=3)
    return checks


def _suite_lie(config):
    lctx = liealg.LieContext(config.shape)
    checks = liealg.verify_antisymmetry(lctx, deg_cap=config.deg)
    exhaustive = config.shape.total <= 4
    checks += liealg.verify_jacobi(
        lctx,
        deg_cap=config.deg,
        sample=None if exhaustive else 500,
        seed=config.seed,
    )
    checks += liealg.verify_vtau(lctx, deg_cap=min(config.deg + 1, 3))
    checks += liealg.verify_gr(lctx, deg_cap=config.deg)
    checks += liealg.verify_eval_map(lctx, deg_cap=config.deg)
    return checks


def _suite_symfun(config):
    ring = LaurentRing(config.r, q_one=config.q1)
    checks = symfun.verify_phi_recursions(4, 4, ring)
    checks += symfun.verify_phi_q1(4, 4, LaurentRing(config.r, q_one=True))
    checks += symfun.verify_characters(config.shape, min(config.n, 3), ring)
    checks += symfun.verify_char_products(config.shape, min(config.n, 3), ring)
    return checks


_SUITE_RUNNERS = {
    "hecke": _suite_hecke,
    "schur": _suite_schur,
    "lie": _suite_lie,
    "symfun": _suite_symfun,
    "q1": _suite_q1,
}


def cmd_verify(config):
    suites = {}
    passed = True
    for name in config.suites:
        checks = _SUITE_RUNNERS[name](config)
        ok = all_ok(checks)
        passed = passed and ok
        suites[name] = {
            "passed": ok,
            "total": len(checks),
            "failed": [c for c in checks if not c["ok"]],
            "checks": checks,
        }
    report = {
        "schema": 1,
        "config": config.as_json(),
        "suites": suites,
        "passed": passed,
    }
    payload = json.dumps(report, sort_keys=True, indent=1) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(payload)
        for name in config.suites:
            info = suites[name]
            print(f"{name}: {'pass' if info['passed'] else 'FAIL'} ({info['total']} checks)")
        print(f"report written to {config.out}")
    else:
        sys.stdout.write(payload)
    return 0 if passed else 1


def cmd_compute(args):
    r = args.r
    out = None
    if args.query == "character":
        shape = Shape(tuple(args.m))
        lam = parse_multipartition(args.args[0])
        if len(lam) != shape.r:
            raise ParseError("component count does not match r", args.args[0], 0)
        ring = LaurentRing(shape.r)
        poly = symfun.weyl_character(lam, shape, ring)
        out = {
            "query": "character",
            "lambda": [list(p) for p in lam],
            "m": list(shape.m),
            "terms": symfun.sympoly_to_json(poly),
        }
    elif args.query == "lr":
        lam = parse_multipartition(args.args[0])
        mu = parse_multipartition(args.args[1])
        if len(lam) != len(mu):
            raise ParseError("component count mismatch", args.args[1], 0)
        sizes = [sum(lk) + sum(mk) for lk, mk in zip(lam, mu)]
        terms = []
        pools = [comb.partitions_of(nk) for nk in sizes]
        import itertools

        for nu in itertools.product(*pools):
            c = comb.lr_coefficient(lam, mu, nu)
            if c:
                terms.append({"nu": [list(p) for p in nu], "coeff": c})
        out = {
            "query": "lr",
            "lambda": [list(p) for p in lam],
            "mu": [list(p) for p in mu],
            "terms": sorted(terms, key=lambda item: item["nu"]),
        }
    elif args.query == "phi":
        t, k, sign_txt = int(args.args[0]), int(args.args[1]), args.args[2]
        if sign_txt not in ("+", "-"):
            raise ParseError("sign must be + or -", sign_txt, 0)
        ring = LaurentRing(r)
        poly = symfun.phi(t, k, +1 if sign_txt == "+" else -1, ring)
        out = {"query": "phi", "t": t, "k": k, "sign": sign_txt,
               "terms": symfun.sympoly_to_json(poly)}
    elif args.query == "tableaux":
        shape = Shape(tuple(args.m))
        lam = parse_multipartition(args.args[0])
        mu_part = parse_multipartition(args.args[1])
        for k, p in enumerate(mu_part):
            if len(p) > shape.m[k]:
                raise ParseError(
                    f"weight component {k + 1} longer than m_{k + 1}", args.args[1], 0
                )
        mu = tuple(
            tuple(list(p) + [0] * (shape.m[k] - len(p)))
            for k, p in enumerate(mu_part)
        )
        tabs = comb.semistandard_tableaux(lam, shape, weight=mu)
        out = {
            "query": "tableaux",
            "lambda": [list(p) for p in lam],
            "mu": [list(p) for p in mu],
            "count": len(tabs),
            "tableaux": [comb.tableau_to_json(lam, tab) for tab in tabs],
        }
    elif args.query == "structure-constants":
        shape = Shape(tuple(args.m))
        lctx = liealg.LieContext(shape)
        deg = args.deg
        table = []
        for a in liealg.all_basis_labels(lctx, deg):
            for b in liealg.all_basis_labels(lctx, deg):
                br = lctx.bracket_basis(a, b)
                if not br.is_zero:
                    table.append(
                        {
                            "a": list(a),
                            "b": list(b),
                            "bracket": liealg.elem_to_json(br),
                        }
                    )
        out = {"query": "structure-constants", "m": list(shape.m), "deg": deg,
               "table": table}
    else:
        raise ParseError(f"unknown query {args.query!r}", args.query, 0)
    payload = json.dumps(out, sort_keys=True, indent=1) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycloschur",
        description="Exact verification and computation for cyclotomic q-Schur "
        "generators, deformed current Lie algebras, and Weyl characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run verification suites, emit a JSON report")
    pv.add_argument("--suite", default="all", help="hecke, schur, lie, symfun, q1, or all")
    pv.add_argument("-n", type=int, default=2)
    pv.add_argument("-r", type=int, default=2)
    pv.add_argument("-m", default="2,2", help="comma-separated block sizes")
    pv.add_argument("--deg", type=int, default=2, help="degree cap for s, t, u")
    pv.add_argument("--dmax", type=int, default=3, help="divided-power cap")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--points", type=int, default=3,
                    help="specialization points for the equality cross-check")
    pv.add_argument("--out", default=None)
    pv.add_argument("--q1", action="store_true", help="run at q = 1")

    pc = sub.add_parser("compute", help="compute one object as JSON")
    pc.add_argument("query", choices=["character", "lr", "phi", "tableaux",
                                      "structure-constants"])
    pc.add_argument("args", nargs="*",
                    help="query arguments, e.g. multipartition literals '((2,1),())'")
    pc.add_argument("-n", type=int, default=2)
    pc.add_argument("-r", type=int, default=1)
    pc.add_argument("-m", default="2,2")
    pc.add_argument("--deg", type=int, default=1)
    pc.add_argument("--out", default=None)
    return parser


_N_QUERY_ARGS = {"character": 1, "lr": 2, "phi": 3, "tableaux": 2,
                 "structure-constants": 0}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            if args.suite == "all":
                suites = SUITES
            else:
                suites = tuple(s.strip() for s in args.suite.split(","))
                for s in suites:
                    if s not in SUITES:
                        raise ParseError(f"unknown suite {s!r}", args.suite, 0)
            m = tuple(int(x) for x in args.m.split(","))
            if len(m) != args.r:
                raise ParseError("m must list exactly r block sizes", args.m, 0)
            config = RunConfig(
                n=args.n,
                r=args.r,
                m=m,
                suites=suites,
                deg=args.deg,
                dmax=args.dmax,
                seed=args.seed,
                points=args.points,
                out=args.out,
                q1=args.q1,
            )
            return cmd_verify(config)
        if args.command == "compute":
            expected = _N_QUERY_ARGS[args.query]
            if len(args.args) != expected:
                raise ParseError(
                    f"{args.query} needs {expected} argument(s)",
                    " ".join(args.args),
                    0,
                )
            args.m = tuple(int(x) for x in str(args.m).split(","))
            return cmd_compute(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

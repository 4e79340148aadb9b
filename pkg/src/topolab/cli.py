"""``topolab`` command-line interface.

Exit codes: 0 success, 1 domain error, 2 refutation (verify), 3 discrepancy
only (verify), 64 usage error, 65 unreadable or malformed input file.
"""
from __future__ import annotations

import argparse
import gzip
import json
import math
import sys
from pathlib import Path

from . import families as fam
from . import polyprops as pp
from . import verify as ver
from .enumeration import STRATEGIES, EnumConfig, enumerate_topologies
from .errors import TopolabError
from .topology import (
    PartitionType,
    Topology,
    is_partition_induced,
    is_t0,
    minimal_open_sets,
    open_polynomial,
    render_mask,
)

EX_USAGE = 64
EX_DATAERR = 65

PROPS = ("unimodal", "log-concave", "slc", "niz", "newton", "real-rooted", "dmax", "t0", "minimal", "partition")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="topolab", description="Open-set polynomials of finite topologies.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="validate and normalize a topology file")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--pretty", action="store_true")

    s = sub.add_parser("poly", help="print the open-set polynomial")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--format", choices=("json", "text"), default="json")

    s = sub.add_parser("check", help="evaluate polynomial and topology properties")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--props", default=",".join(PROPS))
    s.add_argument("--format", choices=("json", "text"), default="json")

    s = sub.add_parser("construct", help="build a catalog family instance")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", choices=fam.catalog_keys())
    g.add_argument("--partition", help="block counts alpha_1,alpha_2,..., e.g. 1,2")
    s.add_argument("--n", type=int)
    for name in ("l", "j", "i"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--out")
    s.add_argument("--pretty", action="store_true")

    s = sub.add_parser("enumerate", help="stream every topology on n points as JSONL")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--min-card", type=int)
    s.add_argument("--t0", action="store_true")
    s.add_argument("--iso", action="store_true")
    s.add_argument("--strategy", choices=STRATEGIES, default="preorder")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--stats")

    s = sub.add_parser("verify", help="run theorem checks")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem", choices=ver.REGISTRY)
    g.add_argument("--all", action="store_true")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--json", dest="json_path")
    return p


def load_topology(path: str) -> Topology:
    """Read a topology JSON file; ``construct`` output is accepted as well."""
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if isinstance(obj, dict) and "topology" in obj:
        obj = obj["topology"]
    if not isinstance(obj, dict) or "n" not in obj or not isinstance(obj.get("opens"), list):
        raise InputError(f"{path}: expected an object with 'n' and 'opens'")
    if not all(type(v) is int for v in [obj["n"], *obj["opens"]]):
        raise InputError(f"{path}: 'n' and every mask must be integers")
    return Topology.from_json(obj)


def _emit(obj, out=None) -> None:
    text = json.dumps(obj) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _pretty(t: Topology) -> str:
    return "\n".join(render_mask(m) if m else "{}" for m in t.opens)


def poly_text(poly) -> str:
    terms = []
    for k, c in enumerate(poly):
        if c == 0:
            continue
        coef = "" if c == 1 and k else str(c)
        var = "" if k == 0 else "x" if k == 1 else f"x^{k}"
        terms.append(coef + var)
    return " + ".join(terms) or "0"


def property_values(t: Topology, props) -> dict:
    poly = open_polynomial(t)
    out = {}
    for prop in props:
        if prop == "unimodal":
            out[prop] = pp.is_unimodal(poly)
        elif prop == "log-concave":
            out[prop] = pp.is_log_concave(poly)
        elif prop == "slc":
            out[prop] = pp.is_slc(poly)
        elif prop == "niz":
            out[prop] = not pp.has_internal_zeros(poly)
        elif prop == "newton":
            out[prop] = pp.newton_check(poly) if t.n >= 2 else None
        elif prop == "real-rooted":
            out[prop] = pp.is_real_rooted(poly)
        elif prop == "dmax":
            d = pp.max_lc_ratio(poly)
            out[prop] = "inf" if d == math.inf else str(d)
        elif prop == "t0":
            out[prop] = is_t0(t)
        elif prop == "minimal":
            out[prop] = minimal_open_sets(t)
        elif prop == "partition":
            alpha = is_partition_induced(t)
            out[prop] = None if alpha is None else list(alpha.alpha)
    return out


def cmd_validate(args) -> int:
    t = load_topology(args.inp)
    if args.pretty:
        print(_pretty(t))
    else:
        _emit({"valid": True, **t.to_json(), "cardinality": len(t)})
    return 0


def cmd_poly(args) -> int:
    poly = open_polynomial(load_topology(args.inp))
    if args.format == "text":
        print(poly_text(poly))
    else:
        _emit(pp.to_json(poly))
    return 0


def cmd_check(args) -> int:
    props = [p.strip() for p in args.props.split(",") if p.strip()]
    unknown = [p for p in props if p not in PROPS]
    if unknown:
        raise UsageError(f"unknown properties: {', '.join(unknown)}")
    values = property_values(load_topology(args.inp), props)
    if args.format == "text":
        for k, v in values.items():
            print(f"{k}: {json.dumps(v)}")
    else:
        _emit(values)
    return 0


def cmd_construct(args) -> int:
    if args.partition:
        try:
            alpha = PartitionType(tuple(int(x) for x in args.partition.split(",")))
        except ValueError as exc:
            raise UsageError(f"bad --partition {args.partition!r}: {exc}") from exc
        inst = fam.instantiate("partition", args.n, alpha=alpha)
    else:
        if args.n is None:
            raise UsageError("construct --family needs --n")
        params = {k: getattr(args, k) for k in ("l", "j", "i") if getattr(args, k) is not None}
        inst = fam.instantiate(args.family, args.n, **params)
    report = fam.check(inst)
    if args.pretty:
        print(_pretty(inst.topology))
        print("claimed: " + poly_text(report.claimed))
        print("computed: " + poly_text(report.computed))
        return 0
    _emit({"topology": inst.topology.to_json(), "report": report.to_json()}, args.out)
    return 0


def cmd_enumerate(args) -> int:
    cfg = EnumConfig(
        n=args.n,
        min_card=args.min_card,
        require_t0=args.t0,
        up_to_iso=args.iso,
        strategy=args.strategy,
        threads=args.threads,
    )
    if args.out:
        opener = gzip.open if args.out.endswith(".gz") else open
        stream = opener(args.out, "wt")
    else:
        stream = sys.stdout
    try:
        stats = enumerate_topologies(cfg, lambda t: stream.write(json.dumps(t.to_json()) + "\n"))
    finally:
        if stream is not sys.stdout:
            stream.close()
    if args.stats:
        Path(args.stats).write_text(json.dumps(stats.to_json()) + "\n")
    sys.stderr.write(json.dumps(stats.to_json()) + "\n")
    return 0


def cmd_verify(args) -> int:
    keys = ver.REGISTRY if args.all else [args.theorem]
    reports = ver.run_many(keys, args.n_max, seed=args.seed, threads=args.threads)
    for r in reports:
        print(f"{r.id}: {r.verdict} (checked {r.checked_count}, {r.elapsed:.2f}s)")
    if args.json_path:
        Path(args.json_path).write_text(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    return ver.exit_code(reports)


COMMANDS = {
    "validate": cmd_validate,
    "poly": cmd_poly,
    "check": cmd_check,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    except InputError as exc:
        print(f"topolab: {exc}", file=sys.stderr)
        return EX_DATAERR
    except TopolabError as exc:
        print(f"topolab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

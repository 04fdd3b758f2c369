"""
Command-line front end.

    covertrees kappa --family theta --n 5
    covertrees kappa --file g.edges --json
    covertrees cube-verify --n 6 --json out.json --deterministic
    covertrees census --n 5
    covertrees eq1-verify --file tower.volt
    covertrees lvalue --file tower.volt --chi 10

Exit status: 0 when every check passes, 1 when a check fails, 2 for
usage, parse or parameter errors.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import identities, spanning
from .covers import (Character, intermediate_double_cover, l_special_value,
                     parse_voltage_graph, twisted_laplacian)
from .errors import CoverTreesError, SizeLimitError
from .identities import VerificationReport
from .multigraph import b_graph, hypercube, parse_edge_list, theta

DEFAULT_MAX_VERTICES = 4096


@dataclass
class RunConfig:
    subcommand: str
    family: str = None
    n: int = None
    a: int = None
    b: int = None
    input_path: str = None
    output_path: str = None
    output_format: str = "human"
    chi: str = None
    skip_direct: bool = False
    deterministic: bool = False

    @classmethod
    def from_args(cls, args):
        json_dest = getattr(args, "json", None)
        return cls(
            subcommand=args.command,
            family=getattr(args, "family", None),
            n=getattr(args, "n", None),
            a=getattr(args, "a", None),
            b=getattr(args, "b", None),
            input_path=getattr(args, "file", None),
            output_path=json_dest,
            output_format="json" if json_dest else "human",
            chi=getattr(args, "chi", None),
            skip_direct=getattr(args, "skip_direct", False),
            deterministic=getattr(args, "deterministic", False),
        )


def max_vertices():
    raw = os.environ.get("COVERTREES_MAX_VERTICES")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise SizeLimitError("COVERTREES_MAX_VERTICES must be an integer, got %r" % raw)


def _check_size(count, what):
    cap = max_vertices()
    if count > cap:
        raise SizeLimitError("%s has %d vertices, above COVERTREES_MAX_VERTICES=%d"
                             % (what, count, cap))


def _read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def _emit_json(payload, config, out):
    if not config.deterministic:
        payload["generated_at"] = datetime.now(timezone.utc).isoformat()
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if config.output_path == "-":
        out.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8") as f:
            f.write(text)


def _emit_report(report, config, out):
    if config.output_path != "-":
        print_report(report, out)
    if config.output_format == "json":
        _emit_json(report.to_dict(), config, out)
    return 0 if report.passed else 1


def print_report(report, out):
    params = " ".join("%s=%s" % kv for kv in report.params.items())
    print("%s %s" % (report.run, params), file=out)
    if report.kappa:
        print("", file=out)
        width = max(len(k) for k in report.kappa)
        for k, v in report.kappa.items():
            print("  kappa[%s]%s  %s" % (k, " " * (width - len(k)), v), file=out)
    if report.census:
        print("", file=out)
        print("  %4s %12s  %s" % ("a", "multiplicity", "kappa"), file=out)
        for r in report.census:
            print("  %4d %12d  %d" % (r.a, r.multiplicity, r.kappa), file=out)
        print("  total %d" % sum(r.multiplicity for r in report.census), file=out)
    print("", file=out)
    for c in report.checks:
        line = "  [%s] %s" % ("PASS" if c.passed else "FAIL", c.name)
        if not c.passed:
            line += ": lhs=%s rhs=%s" % (c.lhs, c.rhs)
        print(line, file=out)
    for note in report.notes:
        print("  note: %s" % note, file=out)
    print("", file=out)
    print("%s: %d/%d checks passed" % ("PASS" if report.passed else "FAIL",
                                       len(report.checks) - len(report.failed()),
                                       len(report.checks)), file=out)


def build_graph(config):
    if config.input_path:
        return parse_edge_list(_read(config.input_path))
    fam = config.family
    if fam == "theta":
        return theta(_need(config.n, "--n"))
    if fam == "b":
        return b_graph(_need(config.a, "--a"), _need(config.b, "--b"))
    if fam == "hypercube":
        n = _need(config.n, "--n")
        if n >= 1:
            _check_size(1 << min(n, 64), "hypercube(%d)" % n)
        return hypercube(n)
    raise CoverTreesError("unknown family %r" % fam)


def _need(value, flag):
    if value is None:
        raise CoverTreesError("%s is required for this family" % flag)
    return value


def cmd_kappa(config, out):
    G = build_graph(config)
    k = spanning.kappa(G)
    if config.output_path != "-":
        print(k, file=out)
    if config.output_format == "json":
        _emit_json({"kappa": str(k)}, config, out)
    return 0


def cmd_cube_verify(config, out):
    n = config.n
    if n is not None and n >= 1:
        _check_size(1 << min(n, 64), "C_%d" % n)
    report = identities.verify_cube(n, skip_direct=config.skip_direct)
    return _emit_report(report, config, out)


def cmd_census(config, out):
    return _emit_report(identities.census(config.n), config, out)


def _load_voltage_graph(config):
    VG = parse_voltage_graph(_read(config.input_path))
    _check_size(VG.cover_vertex_count, "derived graph")
    return VG


def cmd_eq1_verify(config, out):
    VG = _load_voltage_graph(config)
    report = identities.verify_eq1(VG)
    report.merge(identities.verify_divisibility(VG), "divisibility")
    return _emit_report(report, config, out)


def cmd_lvalue(config, out):
    VG = _load_voltage_graph(config)
    chi = Character.from_bits(config.chi, VG.rank)
    value = l_special_value(VG, chi)
    report = VerificationReport("lvalue", {"rank": VG.rank, "chi": str(chi)})
    report.kappa["lvalue"] = value
    kH = spanning.kappa(VG.base)
    kD = spanning.kappa(intermediate_double_cover(VG, chi))
    report.kappa.update(base=kH, double_cover=kD)
    report.check("kappa(H) * L(1, chi) == 2 kappa(H_chi)", kH * value, 2 * kD)
    report.check("L(1, chi) >= 0", value >= 0, True)
    if config.output_path != "-":
        print(value, file=out)
        L = twisted_laplacian(VG, chi)
        for r in L.to_rows():
            print("  " + " ".join("%3d" % x for x in r), file=out)
    if config.output_format == "json":
        _emit_json(report.to_dict(), config, out)
    return 0 if report.passed else 1


COMMANDS = {
    "kappa": cmd_kappa,
    "cube-verify": cmd_cube_verify,
    "census": cmd_census,
    "eq1-verify": cmd_eq1_verify,
    "lvalue": cmd_lvalue,
}


def make_parser():
    parser = argparse.ArgumentParser(
        prog="covertrees",
        description="Exact spanning-tree counts for (Z/2Z)^m graph covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--json", nargs="?", const="-", metavar="PATH",
                       help="write a JSON report to PATH (stdout if omitted)")
        p.add_argument("--deterministic", action="store_true",
                       help="omit the generated_at timestamp from JSON")

    p = sub.add_parser("kappa", help="count spanning trees of one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["theta", "b", "hypercube"])
    src.add_argument("--file", help="edge-list file")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    output_flags(p)

    p = sub.add_parser("cube-verify", help="count trees of the n-cube four ways")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--skip-direct", action="store_true",
                   help="skip the Matrix-Tree legs (needed for n > 8)")
    output_flags(p)

    p = sub.add_parser("census", help="classify the double covers of the n-cube")
    p.add_argument("--n", type=int, required=True)
    output_flags(p)

    p = sub.add_parser("eq1-verify", help="check the cover-product formula on a voltage file")
    p.add_argument("--file", required=True, help="voltage-graph file")
    output_flags(p)

    p = sub.add_parser("lvalue", help="L-function value at u = 1 for one character")
    p.add_argument("--file", required=True, help="voltage-graph file")
    p.add_argument("--chi", required=True, help="character mask as a binary string")
    output_flags(p)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = make_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    try:
        return COMMANDS[config.subcommand](config, out)
    except (CoverTreesError, OSError) as e:
        print("covertrees: error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

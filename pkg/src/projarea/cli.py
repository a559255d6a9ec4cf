"""Command-line front end.

Exit codes: 0 for a positive answer (or success), 1 for a negative answer,
2 for unparseable or invalid input, 3 when a witness fails its own check.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import serialize
from .errors import CertificateError, ParseError, ProjAreaError
from .exact import SymMatrix, as_rational, format_rational, inertia, is_lorentzian
from .homology import PmClass, ci_certificate, grass_realizable, grass_witness_check, q_realizable_pm
from .membership import STRATA, Status, classify_zero_orbit, lorentz_matrix, sample_t2, t1_membership, t2_membership
from .realize import realize_pair, realize_self_boundary, realize_self_interior
from .wedge import Polytope4, WedgeVector, equivalent_over_q, equivalent_over_r, wedge

EXIT_YES, EXIT_NO, EXIT_INPUT = 0, 1, 2


class Output:
    """Collects rows and prints them as JSON lines or TSV, in input order."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.header_done = False

    def row(self, record: dict) -> None:
        if self.fmt == "json":
            print(json.dumps(record, sort_keys=True), file=self.stream)
            return
        if not self.header_done:
            print("\t".join(record), file=self.stream)
            self.header_done = True
        print("\t".join(_cell(v) for v in record.values()), file=self.stream)


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return str(v)


def _vec_str(v) -> str:
    return ",".join(format_rational(x) for x in v)


def _read_lines(path: str) -> list[str]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _vectors(args) -> list[WedgeVector]:
    items = list(args.vectors or [])
    if getattr(args, "input", None):
        items.extend(_read_lines(args.input))
    if not items:
        raise ParseError("no input vectors given")
    return [WedgeVector.of(s) for s in items]


def _polytope(source: str) -> Polytope4:
    """Inline ``"x,y,z,w;x,y,z,w;..."`` or a path to a JSON polytope/vertex list."""
    path = Path(source)
    if path.suffix == ".json" and path.exists():
        data = json.loads(path.read_text())
        if isinstance(data, dict):
            obj = serialize.from_json(data)
            if not isinstance(obj, Polytope4):
                raise ParseError(f"{source} does not hold a polytope")
            return obj
        return serialize.polytope_from_json(data)
    points = []
    for chunk in source.split(";"):
        if chunk.strip():
            coords = [as_rational(x) for x in chunk.split(",")]
            if len(coords) != 4:
                raise ParseError(f"points need 4 coordinates: {chunk!r}")
            points.append(coords)
    return Polytope4(points)


# --- commands -----------------------------------------------------------------

def cmd_check(args, out: Output) -> int:
    code = EXIT_YES
    for p in _vectors(args):
        if args.region == "lorentzian":
            m = lorentz_matrix(p)
            ok = is_lorentzian(m)
            out.row({"vector": _vec_str(p), "lorentzian": ok, "inertia": list(inertia(m))})
        else:
            verdict = (t2_membership if args.region == "t2" else t1_membership)(p)
            ok = verdict.status != Status.OUTSIDE
            out.row({"vector": _vec_str(p), "region": verdict.region.value,
                     "status": verdict.status.value, "witness": verdict.witness})
        if not ok:
            code = EXIT_NO
    return code


def cmd_wedge(args, out: Output) -> int:
    a = _polytope(args.a)
    b = _polytope(args.b) if args.b else a
    out.row({"wedge": _vec_str(wedge(a, b))})
    return EXIT_YES


def _write_certificate(cert, args, index: int, total: int) -> str | None:
    if not args.out:
        return None
    target = Path(args.out)
    if total > 1:
        target.mkdir(parents=True, exist_ok=True)
        target = target / f"certificate-{index:04d}.json"
    target.write_text(serialize.dumps(cert) + "\n")
    return str(target)


def cmd_realize(args, out: Output) -> int:
    tol = as_rational(args.tolerance)
    if args.kind == "self-boundary":
        items = list(args.vectors or [])
        if getattr(args, "input", None):
            items.extend(_read_lines(args.input))
        targets = [as_rational(s) for s in items]
        if not targets:
            raise ParseError("no values of s given")
    else:
        targets = _vectors(args)
    for n, t in enumerate(targets):
        if args.kind == "pair":
            cert = realize_pair(t)
            record = {"target": _vec_str(t), "path": cert.path, "exact": True,
                      "recomputed": _vec_str(cert.recomputed)}
        elif args.kind == "self-interior":
            cert = realize_self_interior(t, tol)
            record = {"target": _vec_str(t), "residual": float(cert.residual), "bits": cert.bits}
        else:
            cert = realize_self_boundary(t, tol, rescale=args.rescale)
            record = {"s": format_rational(t), "exact": cert.exact,
                      "proportionality": None if cert.proportionality is None
                      else format_rational(cert.proportionality),
                      "residual": float(cert.residual), "recomputed": _vec_str(cert.recomputed)}
        written = _write_certificate(cert, args, n, len(targets))
        if written:
            record["file"] = written
        out.row(record)
    return EXIT_YES


def cmd_classify(args, out: Output) -> int:
    for p in _vectors(args):
        cls = classify_zero_orbit(p)
        out.row({"vector": _vec_str(p), "representative": _vec_str(cls.representative),
                 "witness": serialize.group_to_json(cls.witness)})
    return EXIT_YES


def cmd_equiv(args, out: Output) -> int:
    p, q = WedgeVector.of(args.p), WedgeVector.of(args.q)
    if args.over == "q":
        g = equivalent_over_q(p, q)
        out.row({"over": "Q", "equivalent": g is not None,
                 "witness": None if g is None else serialize.group_to_json(g)})
        return EXIT_YES if g is not None else EXIT_NO
    ok = equivalent_over_r(p, q)
    out.row({"over": "R", "equivalent": ok})
    return EXIT_YES if ok else EXIT_NO


def cmd_ci(args, out: Output) -> int:
    code = EXIT_YES
    for p in _vectors(args):
        cert = ci_certificate(p)
        if cert is None:
            code = EXIT_NO
            out.row({"vector": _vec_str(p), "complete_intersection": False,
                     "mu": None, "a": None, "b": None})
        else:
            out.row({"vector": _vec_str(p), "complete_intersection": True,
                     "mu": format_rational(cert.mu), "a": _vec_str(cert.a), "b": _vec_str(cert.b)})
    return code


def cmd_steenrod(args, out: Output) -> int:
    if args.input:
        cls = serialize.from_json(json.loads(Path(args.input).read_text()))
        if not isinstance(cls, PmClass):
            raise ParseError("input file does not hold a pm_class")
    else:
        if not (args.dims and args.matrix):
            raise ParseError("give --dims and --matrix, or --input")
        dims = [int(x) for x in args.dims.split(",")]
        rows = [[as_rational(x) for x in r.split(",")] for r in args.matrix.split(";")]
        cls = PmClass(dims, SymMatrix(rows))
    verdict = q_realizable_pm(cls)
    out.row({"dims": list(cls.dims), "realizable": verdict.realizable, "detail": verdict.detail})
    return EXIT_YES if verdict.realizable else EXIT_NO


def cmd_grass(args, out: Output) -> int:
    ok = grass_realizable(args.k, args.n, args.a1, args.a2)
    record = {"k": args.k, "n": args.n, "a1": args.a1, "a2": args.a2, "realizable": ok}
    if args.witness_trials:
        a1, a2 = max(args.a1, args.a2), min(args.a1, args.a2)
        record["witness_check"] = grass_witness_check(a1, a2, args.witness_trials, args.seed)
    out.row(record)
    return EXIT_YES if ok else EXIT_NO


def cmd_sample(args, out: Output) -> int:
    for p in sample_t2(args.seed, args.count, args.stratum, as_rational(args.bound)):
        out.row({"vector": _vec_str(p)})
    return EXIT_YES


# --- parser -------------------------------------------------------------------

def _add_vectors(p: argparse.ArgumentParser) -> None:
    p.add_argument("vectors", nargs="*", help="comma-separated p12,p13,p14,p23,p24,p34")
    p.add_argument("--input", help="file with one vector per line ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projarea",
                                     description="Projection mixed-area vectors of 4D polytopes.")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="membership in T2 / T1, or Lorentzian test")
    p.add_argument("region", choices=("t2", "t1", "lorentzian"))
    _add_vectors(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("wedge", help="mixed areas of the six coordinate projections")
    p.add_argument("--a", required=True, help="'x,y,z,w;...' or a .json file")
    p.add_argument("--b", help="second body (defaults to A)")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("realize", help="explicit polytope witnesses")
    p.add_argument("kind", choices=("pair", "self-interior", "self-boundary"))
    _add_vectors(p)
    p.add_argument("--out", help="certificate file (a directory for several targets)")
    p.add_argument("--tolerance", default="1/1000000000")
    p.add_argument("--rescale", action="store_true", help="self-boundary: compare with the target itself")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("classify", help="canonical form of a degenerate vector")
    p.add_argument("what", choices=("zero-orbit",))
    _add_vectors(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", help="equivalence under scalings and permutations")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--over", choices=("q", "r"), default="q")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("ci", help="complete-intersection certificate")
    _add_vectors(p)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("steenrod", help="rational realizability in a product of projective spaces")
    p.add_argument("--dims", help="comma-separated dimensions m_i")
    p.add_argument("--matrix", help="rows separated by ';', entries by ','")
    p.add_argument("--input", help="JSON pm_class file")
    p.set_defaults(func=cmd_steenrod)

    p = sub.add_parser("grass", help="surface classes in Gr(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--witness-trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_grass)

    p = sub.add_parser("sample", help="seeded rational points of T2")
    p.add_argument("--stratum", choices=STRATA, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", default="10")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        return args.func(args, out)
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ProjAreaError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

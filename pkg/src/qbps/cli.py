"""Command-line client for the window-combinatorics service.

Every subcommand builds the same pydantic request models the HTTP service
uses and calls the handlers in-process, so outputs are byte-identical to
the service payloads.  Rationals are always "p/q" strings; generic reals
are "q", "q:+1" or "q:-1".

Exit codes: 0 success, 2 validation error, 3 unmet precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from pydantic import ValidationError

from .bps import PreconditionError
from .service import handlers
from .service import models as m

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_json_arg(text: str, what: str) -> dict:
    """Accept inline JSON or a path to a JSON file."""
    candidate = text.strip()
    if not candidate.startswith("{") and os.path.exists(candidate):
        with open(candidate, "r", encoding="utf-8") as fh:
            candidate = fh.read()
    try:
        data = json.loads(candidate)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed {what} JSON: {exc}", EXIT_VALIDATION) from exc
    if not isinstance(data, dict):
        raise CliError(f"{what} must be a JSON object", EXIT_VALIDATION)
    return data


def _quiver_model(args) -> m.QuiverModel:
    data = _read_json_arg(args.quiver, "quiver")
    try:
        return m.QuiverModel(**data)
    except ValidationError as exc:
        raise CliError(f"invalid quiver: {exc}", EXIT_VALIDATION) from exc


def _dim_arg(args) -> dict:
    return _read_json_arg(args.d, "dimension vector")


def _weight_arg(text: Optional[str]) -> Optional[dict]:
    if text is None:
        return None
    return _read_json_arg(text, "weight")


def _emit(payload, tsv_rows=None, tsv: bool = False, force_json: bool = False):
    if tsv and not force_json and tsv_rows is not None:
        out = "\n".join("\t".join(str(x) for x in row) for row in tsv_rows)
        sys.stdout.write(out + ("\n" if out else ""))
    else:
        if hasattr(payload, "model_dump"):
            payload = payload.model_dump(exclude_none=True)
        sys.stdout.write(json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n")


def _scalar_rows(payload) -> list[list[str]]:
    if hasattr(payload, "model_dump"):
        payload = payload.model_dump(exclude_none=True)
    rows = []
    for key, value in payload.items():
        if isinstance(value, (str, int, bool)) or value is None:
            rows.append([key, json.dumps(value)])
        else:
            rows.append([key, json.dumps(value, ensure_ascii=False, separators=(",", ":"))])
    return rows


def _label_tsv(labels: list[dict]) -> list[list[str]]:
    rows = []
    for entry in labels:
        parts = "+".join(json.dumps(p, ensure_ascii=False, separators=(",", ":"))
                         for p, _ in entry["parts"])
        vs = ",".join(v for _, v in entry["parts"])
        row = [parts, vs]
        if "generators" in entry:
            row.append(str(entry["generators"]))
        rows.append(row)
    return rows


def cmd_describe(args):
    resp = handlers.describe(m.DescribeRequest(quiver=_quiver_model(args)))
    _emit(resp)


def cmd_build(args):
    req = m.BuildRequest(quiver=_quiver_model(args), op=args.op,
                         alpha=getattr(args, "alpha", None), A=getattr(args, "A", None))
    resp = handlers.build(req)
    _emit(resp)


def cmd_generators(args):
    req = m.GeneratorsRequest(
        quiver=_quiver_model(args), d=_dim_arg(args),
        delta=_weight_arg(args.delta), v=args.v, mu=args.mu, window=args.window)
    resp = handlers.generators(req)
    rows = [[c for vals in g.values() for c in vals] for g in resp.generators]
    _emit(resp, tsv_rows=rows, tsv=args.tsv, force_json=getattr(args, "json", False))


def cmd_decompose(args):
    req = m.DecomposeRequest(
        quiver=_quiver_model(args), d=_dim_arg(args),
        chi=_read_json_arg(args.chi, "chi"), delta=_weight_arg(args.delta), v=args.v)
    resp = handlers.decompose(req)
    _emit(resp)


def cmd_sod(args):
    if args.mode == "framed":
        resp = handlers.sod_framed(m.FramedSodRequest(
            quiver=_quiver_model(args), d=_dim_arg(args), mu=args.mu,
            alpha=args.alpha, delta=_weight_arg(args.delta),
            generator_counts=args.gen_counts))
    elif args.mode == "unframed":
        lo, hi = _window_arg(args.window)
        resp = handlers.sod_unframed(m.UnframedSodRequest(
            quiver=_quiver_model(args), d=_dim_arg(args), w=args.w, window=(lo, hi)))
    else:
        lo, hi = _window_arg(args.window)
        resp = handlers.sod_preprojective(m.PreprojectiveSodRequest(
            quiver=_quiver_model(args), d=_dim_arg(args), window=(lo, hi)))
    _emit(resp, tsv_rows=_label_tsv(resp.labels), tsv=args.tsv, force_json=getattr(args, "json", False))


def _window_arg(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError("window must be 'lo,hi'", EXIT_VALIDATION)
    return parts[0].strip(), parts[1].strip()


def cmd_check(args):
    if args.what == "good-weight":
        data = _read_json_arg(args.delta, "delta") if args.delta else {}
        resp = handlers.good_weight(m.GoodWeightRequest(
            quiver=_quiver_model(args), d=_dim_arg(args), delta=data))
    elif args.what == "support":
        quiver = _quiver_model(args) if args.quiver else None
        resp = handlers.support(m.SupportRequest(d=_dim_arg(args), v=args.v, quiver=quiver))
    elif args.what == "structure":
        resp = handlers.structure(m.StructureRequest(
            quiver=_quiver_model(args), d=_dim_arg(args), v=args.v))
    else:
        raise CliError(f"unknown check {args.what!r}", EXIT_VALIDATION)
    _emit(resp, tsv_rows=_scalar_rows(resp), tsv=args.tsv, force_json=getattr(args, "json", False))


def cmd_zonotope(args):
    req = m.ZonotopeRequest(
        quiver=_quiver_model(args), d=_dim_arg(args),
        x=_read_json_arg(args.x, "weight"), window=args.window,
        scale=args.scale, op=args.op)
    resp = handlers.zonotope(req)
    _emit(resp)


def cmd_knorrer(args):
    partition = json.loads(args.partition)
    if not isinstance(partition, list):
        raise CliError("partition must be a JSON list of dimension vectors", EXIT_VALIDATION)
    resp = handlers.knorrer(m.KnorrerRequest(
        quiver=_quiver_model(args), d=_dim_arg(args), partition=partition, A=args.A))
    _emit(resp)


def cmd_verify(args):
    resp = handlers.verify(m.VerifyRequest(seed=args.seed, samples=args.samples))
    lines = []
    for check in resp.checks:
        lines.append(f"{'ok' if check.passed else 'FAIL'}\t{check.name}\t{check.detail}")
    lines.append(f"{'ok' if resp.ok else 'FAIL'}\toverall")
    sys.stdout.write("\n".join(lines) + "\n")
    if not resp.ok:
        sys.exit(1)


def cmd_serve(args):
    import uvicorn

    uvicorn.run("qbps.service.app:app", host=args.host, port=args.port)


def _add_quiver_arg(p, required=True):
    p.add_argument("--quiver", required=required,
                   help="quiver JSON (inline or a file path)")


def _add_common(p, with_d=True):
    _add_quiver_arg(p)
    if with_d:
        p.add_argument("--d", required=True, help='dimension vector JSON, e.g. {"0":2}')
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--tsv", action="store_true", help="tab-separated output where applicable")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qbps",
                                 description="Exact quasi-BPS window combinatorics")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="structural predicates of a quiver")
    _add_quiver_arg(p)
    p.set_defaults(fn=cmd_describe)

    p = sub.add_parser("build", help="double/triple/frame/companion constructions")
    p.add_argument("op", choices=["double", "triple", "frame", "companion"])
    _add_quiver_arg(p)
    p.add_argument("--alpha", type=int, default=None, help="framing multiplicity")
    p.add_argument("--A", type=int, default=None, help="companion edge count")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("magic-gens", help="window generator enumeration")
    _add_common(p)
    p.add_argument("--delta", default=None, help="weight JSON")
    p.add_argument("--v", type=int, default=None, help="delta = v * tau_d")
    p.add_argument("--mu", default=None, help="generic shift mu (adds mu*sigma_d)")
    p.add_argument("--window", choices=["magic", "dd"], default="magic")
    p.set_defaults(fn=cmd_generators)

    p = sub.add_parser("decompose", help="weight decomposition into a partition path")
    _add_common(p)
    p.add_argument("--chi", required=True, help="weight JSON")
    p.add_argument("--delta", default=None, help="weight JSON")
    p.add_argument("--v", type=int, default=None, help="delta = v * tau_d")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("sod", help="semiorthogonal summand reports")
    modes = p.add_subparsers(dest="mode", required=True)
    pf = modes.add_parser("framed")
    _add_common(pf)
    pf.add_argument("--mu", required=True, help='generic real, e.g. "0:-1"')
    pf.add_argument("--alpha", type=int, required=True)
    pf.add_argument("--delta", default=None)
    pf.add_argument("--gen-counts", action="store_true", dest="gen_counts")
    pf.set_defaults(fn=cmd_sod)
    pu = modes.add_parser("unframed")
    _add_common(pu)
    pu.add_argument("--w", type=int, required=True)
    pu.add_argument("--window", required=True, help='slope window "lo,hi"')
    pu.set_defaults(fn=cmd_sod)
    pp = modes.add_parser("preprojective")
    _add_common(pp)
    pp.add_argument("--window", required=True, help='slope window "lo,hi"')
    pp.set_defaults(fn=cmd_sod)

    p = sub.add_parser("check", help="good-weight / support / structure checks")
    p.add_argument("what", choices=["good-weight", "support", "structure"])
    p.add_argument("--quiver", default=None, help="quiver JSON (inline or path)")
    p.add_argument("--d", required=True)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--delta", default=None, help="per-vertex generic reals JSON")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("zonotope", help="window polytope membership / minimal scaling")
    p.add_argument("op", choices=["contains", "rinv", "boundary"])
    _add_quiver_arg(p)
    p.add_argument("--d", required=True)
    p.add_argument("--x", required=True, help="weight JSON")
    p.add_argument("--window", choices=["W", "V"], default="W")
    p.add_argument("--scale", default="1", help="membership scale (rational)")
    p.set_defaults(fn=cmd_zonotope)

    p = sub.add_parser("knorrer", help="companion weight-shift identity check")
    _add_common(p)
    p.add_argument("--partition", required=True, help="JSON list of dimension vectors")
    p.add_argument("--A", type=int, default=None)
    p.set_defaults(fn=cmd_knorrer)

    p = sub.add_parser("verify", help="run the independent oracle suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except PreconditionError as exc:
        sys.stderr.write(f"precondition: {exc}\n")
        return EXIT_PRECONDITION
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit status: 0 on success (or all checks passing), 1 when a check fails or
a biorthogonal family cannot exist, 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import sys
from dataclasses import dataclass

import numpy as np

from . import duals, frames, retro, scenarios
from .errors import FrameError, Infeasible
from .io import frame_to_dict, load_frame, measure_space_to_dict

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class Config:
    tol: float = 1e-8
    output: str = "json"
    seed: int = 0
    depth: int | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise FrameError(f"tol must be positive, got {self.tol}")
        if self.output not in ("json", "csv", "pretty"):
            raise FrameError(f"unknown output format {self.output!r}")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


# -- parsing helpers ---------------------------------------------------------


def parse_vector(text: str) -> np.ndarray:
    """``"1,0,-2.5"`` (real) or ``"1:0,0:-1"`` (re:im pairs)."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise FrameError("empty vector")
    try:
        if any(":" in t for t in tokens):
            vals = []
            for t in tokens:
                re_, _, im = t.partition(":")
                vals.append(complex(float(re_), float(im or 0)))
            return np.array(vals, dtype=complex)
        return np.array([float(t) for t in tokens])
    except ValueError as exc:
        raise FrameError(f"cannot parse vector {text!r}: {exc}") from exc


def resolve_labels(f: frames.Frame, text: str | None) -> list:
    """Match comma-separated tokens against the frame's labels by their text."""
    if not text:
        return []
    by_text = {str(w): w for w in f.labels}
    out = []
    for t in (t.strip() for t in text.split(",")):
        if not t:
            continue
        if t not in by_text:
            raise FrameError(f"omega0 label {t!r} is not a label of the frame")
        out.append(by_text[t])
    return out


# -- rendering ---------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    else:
        yield prefix, obj


def _round(obj):
    if isinstance(obj, float):
        return float(f"{obj:.6g}")
    if isinstance(obj, list):
        return [_round(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    return obj


def render(payload, output: str, rows: list[dict] | None = None) -> str:
    if output == "json":
        return json.dumps(payload, indent=2)
    if output == "csv":
        buf = _io.StringIO()
        if rows:
            fields = list(rows[0])
            w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        else:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["field", "value"])
            items = payload if isinstance(payload, list) else [payload]
            for i, item in enumerate(items):
                for key, value in _flatten(item):
                    if isinstance(payload, list):
                        key = f"{i}.{key}"
                    w.writerow([key, json.dumps(value) if isinstance(value, list) else value])
        return buf.getvalue().rstrip("\n")
    lines = []
    items = payload if isinstance(payload, list) else [payload]
    for item in items:
        for key, value in _flatten(_round(item)):
            lines.append(f"{key}: {value}")
        if isinstance(payload, list):
            lines.append("")
    return "\n".join(lines).rstrip("\n")


# -- commands ----------------------------------------------------------------


def cmd_bounds(args, cfg):
    return frames.optimal_bounds(load_frame(args.frame)).as_dict(), EXIT_OK, None


def cmd_classify(args, cfg):
    return frames.classify(load_frame(args.frame), tol=cfg.tol).as_dict(), EXIT_OK, None


def cmd_exactness(args, cfg):
    f = load_frame(args.frame)
    prof = retro.exactness_profile(f)
    payload = {
        "labels": list(f.labels),
        "distances": prof.tolist(),
        "exact": bool(np.all(prof > cfg.tol)),
    }
    return payload, EXIT_OK, None


def cmd_dual(args, cfg):
    if args.dual_cmd == "canonical":
        return frame_to_dict(duals.canonical_dual(load_frame(args.frame), cfg.tol)), EXIT_OK, None
    if args.dual_cmd == "alternates":
        found = duals.alternate_duals(load_frame(args.frame), args.count, seed=cfg.seed, tol=cfg.tol)
        return [frame_to_dict(g) for g in found], EXIT_OK, None
    rep = duals.verify_hilbert_dual(load_frame(args.f), load_frame(args.g), tol=cfg.tol)
    return rep.as_dict(), EXIT_OK if rep.is_dual else EXIT_FAIL, None


def cmd_biorth(args, cfg):
    files = args.files
    if files[0] == "construct":
        if len(files) != 2:
            raise _UsageError("usage: biorth construct <F> [--omega0 labels]")
        f = load_frame(files[1])
        g = retro.min_norm_biorthogonal(f, resolve_labels(f, args.omega0), cfg.tol)
        return frame_to_dict(g), EXIT_OK, None
    if len(files) != 2:
        raise _UsageError("usage: biorth <F> <G> [--omega0 labels]")
    f, g = load_frame(files[0]), load_frame(files[1])
    rep = retro.check_biorthogonality(f, g, resolve_labels(f, args.omega0), cfg.tol)
    return rep.as_dict(), EXIT_OK if rep.holds else EXIT_FAIL, None


def cmd_distance_profile(args, cfg):
    g = load_frame(args.frame)
    x = parse_vector(args.vector)
    depth = args.depth if args.depth is not None else cfg.depth
    return retro.distance_profile(g, x, depth).as_dict(), EXIT_OK, None


def cmd_retro(args, cfg):
    f = load_frame(args.frame)
    cand = load_frame(args.candidate) if args.candidate else None
    v = retro.retro_dual_verdict(f, resolve_labels(f, args.omega0), cand, cfg.tol)
    return v.as_dict(), EXIT_OK, None


def cmd_scenario(args, cfg):
    if args.scenario_cmd == "list":
        return [s.as_dict() for s in scenarios.list_scenarios()], EXIT_OK, None
    rep = scenarios.run_scenario(args.name, args.n)
    return rep.as_dict(), EXIT_OK if rep.passed else EXIT_FAIL, rep.rows()


def cmd_quadrature(args, cfg):
    space = frames.uniform_quadrature(args.a, args.b, args.m)
    return measure_space_to_dict(space), EXIT_OK, None


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-8, help="numerical tolerance (default 1e-8)")
    common.add_argument("--output", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="retroframes", description="Frames on finite measure spaces: bounds, duals, retro-dual diagnostics.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("bounds", parents=[common], help="optimal frame bounds")
    s.add_argument("frame")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("classify", parents=[common], help="frame / tight / Parseval / exact flags")
    s.add_argument("frame")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("exactness", parents=[common], help="distance of each vector to the span of the others")
    s.add_argument("frame")
    s.set_defaults(func=cmd_exactness)

    s = sub.add_parser("dual", help="canonical / alternate duals and dual-pair verification")
    dsub = s.add_subparsers(dest="dual_cmd", required=True, parser_class=_Parser)
    d = dsub.add_parser("canonical", parents=[common])
    d.add_argument("frame")
    d = dsub.add_parser("alternates", parents=[common])
    d.add_argument("frame")
    d.add_argument("--count", type=int, default=3)
    d = dsub.add_parser("verify", parents=[common])
    d.add_argument("f")
    d.add_argument("g")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("biorth", parents=[common], help="check (F G) or build (construct F) a biorthogonal family")
    s.add_argument("files", nargs="+", metavar="FILE")
    s.add_argument("--omega0", help="comma-separated labels exempt from biorthogonality")
    s.set_defaults(func=cmd_biorth)

    s = sub.add_parser("distance-profile", parents=[common], help="distances to nested spans")
    s.add_argument("frame")
    s.add_argument("--vector", required=True, help="comma-separated reals or re:im pairs")
    s.add_argument("--depth", type=int)
    s.set_defaults(func=cmd_distance_profile)

    s = sub.add_parser("retro", help="retro-dual existence verdict")
    rsub = s.add_subparsers(dest="retro_cmd", required=True, parser_class=_Parser)
    r = rsub.add_parser("verdict", parents=[common])
    r.add_argument("frame")
    r.add_argument("--candidate")
    r.add_argument("--omega0")
    s.set_defaults(func=cmd_retro)

    s = sub.add_parser("scenario", help="run or list the worked-example scenarios")
    ssub = s.add_subparsers(dest="scenario_cmd", required=True, parser_class=_Parser)
    r = ssub.add_parser("run", parents=[common])
    r.add_argument("name")
    r.add_argument("--n", type=int)
    ssub.add_parser("list", parents=[common])
    s.set_defaults(func=cmd_scenario)

    s = sub.add_parser("quadrature", parents=[common], help="midpoint-rule measure space on [a, b)")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--b", type=float, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_quadrature)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = Config(tol=args.tol, output=args.output, seed=args.seed)
        payload, status, rows = args.func(args, cfg)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except Infeasible as exc:
        payload = {"feasible": False, "label": exc.label, "index": exc.index, "message": str(exc)}
        print(render(payload, cfg.output))
        return EXIT_FAIL
    except FrameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(payload, cfg.output, rows))
    return status


if __name__ == "__main__":
    sys.exit(main())

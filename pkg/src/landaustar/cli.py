"""Command-line interface.

Deterministic, plain-text surface over the library: evaluate states and
marginal densities on grids, run the verification suite, emit uncertainty
tables, check the orthogonal-polynomial integral equalities, and dump/load
states as JSON.  Same configuration always produces byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 configuration conflict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import checks
from .marginals import (
    AXES,
    integral_equality_residuals,
    marginal_1d,
    marginal_2d,
)
from .phase_space import PhysParams, mode_coords_arrays
from .quadrature import gauss_hermite
from .star import fock_from_json_dict, fock_to_json_dict
from .states import (
    CoherentLabel,
    GeneralizedCoherentLabel,
    WignerLabel,
    coherent_values,
    fock_values,
    parse_state_label,
    state_fock,
    wigner_values,
)
from .uncertainty import coordinate_moment

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CONFIG_CONFLICT = 3


class ConfigConflict(Exception):
    pass


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    params: PhysParams
    cutoff: int = 32
    quad_order: int = 16
    fmt: str = "csv"
    unit_norm: bool = False

    def __post_init__(self):
        if self.quad_order < 16:
            raise ConfigConflict(f"quad-order must be at least 16, got {self.quad_order}")
        if self.cutoff < 2:
            raise ConfigConflict(f"cutoff must be at least 2, got {self.cutoff}")

    def require_labels_fit(self, label):
        """Cutoff must exceed every referenced quantum number by at least 2."""
        refs = []
        if isinstance(label, WignerLabel):
            refs = [label.n, label.l]
        elif isinstance(label, GeneralizedCoherentLabel):
            refs = [label.base.n, label.base.l]
        if refs and self.cutoff < max(refs) + 2:
            raise ConfigConflict(
                f"cutoff {self.cutoff} too small for quantum numbers {refs}; "
                f"need at least {max(refs) + 2}")


def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def load_config_file(path: str) -> dict:
    values = {}
    allowed = {"hbar": float, "mass": float, "omega": float}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise InputError(f"{path}:{lineno}: expected 'key = value'")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in allowed:
                    raise InputError(f"{path}:{lineno}: unknown key {key!r}")
                try:
                    values[key] = allowed[key](val.strip())
                except ValueError as exc:
                    raise InputError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read config file: {exc}") from exc
    return values


def build_config(args) -> RunConfig:
    values = {"hbar": 1.0, "mass": 1.0, "omega": 1.0}
    config_path = getattr(args, "config", None)
    if config_path:
        values.update(load_config_file(config_path))
    for key in ("hbar", "mass", "omega"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    try:
        params = PhysParams(**values)
    except ValueError as exc:
        raise ConfigConflict(str(exc)) from exc
    return RunConfig(params=params,
                     cutoff=getattr(args, "cutoff", 32),
                     quad_order=getattr(args, "quad_order", 16),
                     fmt=getattr(args, "format", "csv"),
                     unit_norm=getattr(args, "unit_norm", False))


# ---------------------------------------------------------------------------
# grid parsing
# ---------------------------------------------------------------------------

def parse_axis_spec(text: str) -> np.ndarray:
    """'lo:hi:count' -> linspace, plain number -> one pinned value."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) == 3:
            lo, hi = float(parts[0]), float(parts[1])
            count = int(parts[2])
            if count < 1:
                raise InputError(f"grid count must be positive in {text!r}")
            return np.linspace(lo, hi, count)
    except ValueError as exc:
        raise InputError(f"malformed grid axis {text!r}: {exc}") from exc
    raise InputError(f"malformed grid axis {text!r}: expected 'value' or 'lo:hi:count'")


def parse_named_grid(text: str, axes) -> dict:
    """'q1=-3:3:7,q2=0,...' -> {axis: 1-D array}; missing axes pin to 0."""
    grid = {ax: np.array([0.0]) for ax in axes}
    if text:
        for item in text.split(","):
            if "=" not in item:
                raise InputError(f"malformed grid item {item!r}: expected axis=spec")
            name, _, spec = item.partition("=")
            name = name.strip()
            if name not in axes:
                raise InputError(f"unknown grid axis {name!r}; expected one of {axes}")
            grid[name] = parse_axis_spec(spec)
    return grid


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def table_text(header, rows, fmt: str, json_meta: dict | None = None) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(fmt17(v) if isinstance(v, float) else str(v)
                                  for v in row))
        return "\n".join(lines) + "\n"
    doc = dict(json_meta or {})
    doc["columns"] = list(header)
    doc["points"] = [[v for v in row] for row in rows]
    return json.dumps(doc) + "\n"


def params_doc(params: PhysParams) -> dict:
    return {"hbar": params.hbar, "mass": params.mass, "omega": params.omega}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args, cfg: RunConfig) -> int:
    if args.state is None:
        target, state_text = "wigner", args.target
    else:
        target, state_text = args.target, args.state
    label = parse_state_label(state_text)
    cfg.require_labels_fit(label)
    norm = cfg.params.planck_h ** 2 if cfg.unit_norm else 1.0

    if target == "wigner":
        grid = parse_named_grid(args.grid, AXES)
        mesh = np.meshgrid(*(grid[ax] for ax in AXES), indexing="ij")
        flat = [m.reshape(-1) for m in mesh]
        a, b = mode_coords_arrays(*flat, cfg.params)
        if isinstance(label, WignerLabel):
            vals = np.real(wigner_values(label.n, label.l, a, b))
        elif isinstance(label, CoherentLabel):
            vals = coherent_values(label, a, b)
        else:
            vals = np.real(fock_values(state_fock(label, cfg.cutoff), a, b))
        rows = [(*(float(c[i]) for c in flat), float(vals[i] / norm))
                for i in range(vals.size)]
        meta = {"target": "wigner", "state": state_text, "params": params_doc(cfg.params)}
        emit(table_text(("q1", "q2", "p1", "p2", "value"), rows, cfg.fmt, meta), args.out)
        return EXIT_OK

    kind, _, detail = target.partition(":")
    if kind == "marginal1d":
        if detail not in AXES:
            raise InputError(f"unknown marginal axis {detail!r}")
        if not isinstance(label, WignerLabel):
            raise InputError("1D marginals are defined for wigner:n,l states")
        xs = parse_axis_spec(args.grid if args.grid else "0")
        vals = np.atleast_1d(marginal_1d(label.n, label.l, detail, xs, cfg.params)) / norm
        rows = [(float(x), float(v)) for x, v in zip(xs, vals)]
        meta = {"axis": detail, "n": label.n, "l": label.l, "params": params_doc(cfg.params)}
        emit(table_text(("x", "value"), rows, cfg.fmt, meta), args.out)
        return EXIT_OK

    if kind == "marginal2d":
        plane = tuple(detail.split(","))
        if len(plane) != 2 or plane[0] == plane[1] or any(ax not in AXES for ax in plane):
            raise InputError(f"unknown marginal plane {detail!r}")
        if not isinstance(label, WignerLabel):
            raise InputError("2D marginals are defined for wigner:n,l states")
        grid = parse_named_grid(args.grid, plane)
        x, y = np.meshgrid(grid[plane[0]], grid[plane[1]], indexing="ij")
        rule = gauss_hermite(max(cfg.quad_order, label.n + label.l + 8))
        vals = marginal_2d(label.n, label.l, plane, x.reshape(-1), y.reshape(-1),
                           cfg.params, rule) / norm
        rows = [(float(x.reshape(-1)[i]), float(y.reshape(-1)[i]), float(vals[i]))
                for i in range(vals.size)]
        meta = {"plane": list(plane), "n": label.n, "l": label.l,
                "params": params_doc(cfg.params)}
        emit(table_text((plane[0], plane[1], "value"), rows, cfg.fmt, meta), args.out)
        return EXIT_OK

    raise InputError(f"unknown eval target {target!r}")


def cmd_verify(args, cfg: RunConfig) -> int:
    results = checks.run_suite(args.suite, cfg.params)
    lines = []
    n_fail = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        n_fail += 0 if r.passed else 1
        lines.append(f"{status} {r.name}: residual={fmt17(r.residual)} "
                     f"tolerance={fmt17(r.tolerance)}")
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if n_fail == 0 else EXIT_VERIFY_FAILED


def parse_range(text: str):
    try:
        if ".." in text:
            lo_s, _, hi_s = text.partition("..")
            lo, hi = int(lo_s), int(hi_s)
            return range(lo, hi + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError as exc:
        raise InputError(f"malformed range {text!r}: expected 'n' or 'lo..hi'") from exc


def cmd_uncertainty(args, cfg: RunConfig) -> int:
    n_range = parse_range(args.n_range)
    l_range = parse_range(args.l_range)
    for v in list(n_range) + list(l_range):
        if v < 0:
            raise InputError("quantum numbers must be non-negative")
        if cfg.cutoff < v + 2:
            raise ConfigConflict(
                f"cutoff {cfg.cutoff} too small for quantum number {v}")
    hb = cfg.params.hbar
    rows = []
    for n in n_range:
        for l in l_range:
            label = WignerLabel(n, l)
            var_q = coordinate_moment("q1", 2, label, cfg.params)
            var_p = coordinate_moment("p1", 2, label, cfg.params)
            dq = float(np.sqrt(var_q))
            dp = float(np.sqrt(var_p))
            rows.append((n, l, dq, dp, dq * dp, dq * dp - 0.5 * hb))
    meta = {"params": params_doc(cfg.params)}
    emit(table_text(("n", "l", "dq1", "dp1", "product", "bound_gap"),
                    rows, cfg.fmt, meta), args.out)
    return EXIT_OK


def cmd_equalities(args, cfg: RunConfig) -> int:
    pairs = []
    for item in args.pairs.split(";"):
        try:
            n, l = (int(v) for v in item.split(","))
        except ValueError as exc:
            raise InputError(f"malformed pair {item!r}: expected 'n,l'") from exc
        if n < l:
            raise InputError(f"pair {item!r}: need n >= l for the closed-form branch")
        pairs.append((n, l))
    try:
        samples = [float(v) for v in args.samples.split(",")]
    except ValueError as exc:
        raise InputError(f"malformed samples {args.samples!r}") from exc
    rows = []
    for n, l in pairs:
        q1s = cfg.params.gamma * np.array(samples)
        for (q1, res_lag, res_herm) in integral_equality_residuals(n, l, q1s, cfg.params):
            rows.append((n, l, float(q1 / cfg.params.gamma), res_lag, res_herm))
    meta = {"params": params_doc(cfg.params)}
    emit(table_text(("n", "l", "q1_over_gamma", "residual_position_plane",
                     "residual_mixed_plane"), rows, cfg.fmt, meta), args.out)
    return EXIT_OK


def cmd_state(args, cfg: RunConfig) -> int:
    if args.action == "dump":
        label = parse_state_label(args.source)
        cfg.require_labels_fit(label)
        rep = state_fock(label, cfg.cutoff)
        emit(json.dumps(fock_to_json_dict(rep)) + "\n", args.out)
        return EXIT_OK
    # load: parse, validate, re-emit canonical form
    try:
        with open(args.source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed state file at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from exc
    try:
        rep = fock_from_json_dict(doc)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    emit(json.dumps(fock_to_json_dict(rep)) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # defaults are applied in build_config; SUPPRESS keeps a subcommand's
    # parse from overriding a flag given before the subcommand
    sup = argparse.SUPPRESS
    common = argparse.ArgumentParser(add_help=False, argument_default=sup)
    common.add_argument("--hbar", type=float)
    common.add_argument("--mass", type=float)
    common.add_argument("--omega", type=float)
    common.add_argument("--cutoff", type=int)
    common.add_argument("--quad-order", type=int)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--unit-norm", action="store_true",
                        help="divide density values by h^2")
    common.add_argument("--out", help="write output to a file")
    common.add_argument("--config", help="key=value file with hbar, mass, omega")

    parser = argparse.ArgumentParser(
        prog="landaustar",
        parents=[common],
        description="Phase-space toolkit for a charged particle in a uniform "
                    "magnetic field: star products, Wigner functions, coherent "
                    "states, marginal densities and uncertainty relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate a state or marginal on a grid")
    p_eval.add_argument("target",
                        help="state label, or a target (wigner, marginal1d:AXIS, "
                             "marginal2d:AX1,AX2) followed by the state label")
    p_eval.add_argument("state", nargs="?", default=None)
    p_eval.add_argument("--grid", default="",
                        help="axis=lo:hi:count or axis=value items, comma separated; "
                             "bare lo:hi:count for 1D marginals; missing axes pin to 0")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the verification suite")
    p_verify.add_argument("suite", nargs="?", default="all",
                          choices=("all",) + checks.SUITES)
    p_verify.set_defaults(func=cmd_verify)

    p_unc = sub.add_parser("uncertainty", parents=[common],
                           help="uncertainty product table")
    p_unc.add_argument("n_range", help="'n' or 'lo..hi'")
    p_unc.add_argument("l_range", help="'l' or 'lo..hi'")
    p_unc.set_defaults(func=cmd_uncertainty)

    p_eq = sub.add_parser("equalities", parents=[common],
                          help="orthogonal-polynomial integral-equality residual sweep")
    p_eq.add_argument("--pairs", default="1,0;2,1;3,3;2,2",
                      help="semicolon-separated n,l pairs (n >= l)")
    p_eq.add_argument("--samples", default="0,0.7,1.4",
                      help="comma-separated q1 samples in units of gamma")
    p_eq.set_defaults(func=cmd_equalities)

    p_state = sub.add_parser("state", parents=[common],
                             help="dump or load a state as JSON")
    p_state.add_argument("action", choices=("dump", "load"))
    p_state.add_argument("source", help="state label (dump) or file path (load)")
    p_state.set_defaults(func=cmd_state)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # join '--grid -4:4:81' so a leading minus is not taken for a flag
    joined = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--grid" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            joined.append(f"--grid={argv[i + 1]}")
            i += 2
        else:
            joined.append(tok)
            i += 1
    parser = build_parser()
    args = parser.parse_args(joined)
    args.out = getattr(args, "out", None)
    try:
        cfg = build_config(args)
        return args.func(args, cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ConfigConflict as exc:
        print(f"configuration conflict: {exc}", file=sys.stderr)
        return EXIT_CONFIG_CONFLICT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: sweeps written as CSV (or DOT), optional figures.

Numbers are printed with 17 significant digits so that repeated runs of the
same configuration produce byte-identical files.
"""
from __future__ import annotations

import argparse
import ast
import io
import json
import math
import operator
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import abmodel, continuum, gauge, poset, weyl
from .operators import LatticeParams, build_dirac

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2


class ConfigError(ValueError):
    pass


def fmt(x) -> str:
    return format(float(x), ".17g")


def fmt_complex(z) -> str:
    z = complex(z)
    im = fmt(z.imag)
    return f"{fmt(z.real)}{'' if im.startswith('-') else '+'}{im}i"


def matrix_csv(m) -> str:
    """One matrix row per line, entries written as ``re+imi``."""
    return "".join(",".join(fmt_complex(z) for z in row) + "\n" for row in np.asarray(m))


# --- numeric argument parsing -------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_NAMES = {"pi": math.pi, "tau": 2.0 * math.pi, "e": math.e}


def parse_real(text) -> float:
    """Float or a small arithmetic expression over ``pi``/``tau``, e.g. ``-4*pi`` or ``pi/3``."""
    if isinstance(text, (int, float)):
        return float(text)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise ConfigError(f"cannot parse number {text!r}")

    try:
        value = ev(ast.parse(str(text).strip(), mode="eval"))
    except (SyntaxError, OverflowError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse number {text!r}") from exc
    if not math.isfinite(value):
        raise ConfigError(f"number {text!r} is not finite")
    return value


def parse_grid(text) -> np.ndarray:
    """``a:b:steps`` -> ``steps`` evenly spaced values from a to b inclusive."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must look like a:b:steps, got {text!r}")
    a, b = parse_real(parts[0]), parse_real(parts[1])
    try:
        steps = int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"grid step count must be an integer, got {parts[2]!r}") from exc
    if steps < 1:
        raise ConfigError("grid needs at least one step")
    return np.linspace(a, b, steps)


def parse_unit_complex(text) -> complex:
    """``"re,im"`` -> complex; Python literals such as ``1j`` also work."""
    if isinstance(text, (list, tuple)) and len(text) == 2:
        return complex(parse_real(text[0]), parse_real(text[1]))
    text = str(text).strip()
    if "," in text:
        re_s, im_s = text.split(",", 1)
        return complex(parse_real(re_s), parse_real(im_s))
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex {text!r}; use re,im") from exc


def parse_sizes(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [s for s in str(text).split(",") if s.strip()]
    try:
        return [int(s) for s in items]
    except ValueError as exc:
        raise ConfigError(f"sizes must be comma-separated integers, got {text!r}") from exc


# --- configuration -------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    n: int = 8
    eps: str | None = None
    m: str = "0,1"
    boundary: str = "cyclic"
    theta: str = "0"
    theta_grid: str | None = None
    sigma: str = gauge.PER_STEP
    wavelength: str = "0.5"
    ell: str = "1"
    h: str = "1"
    alpha: str = "0"
    from_grating: bool = False
    max_order: int = 5
    p_grid: str = "-2:2:17"
    p0: str | None = None
    sizes: str = "32,64,128,256"
    out: str | None = None
    svg: str | None = None
    matrix_out: str | None = None
    config: str | None = None

    def lattice(self) -> LatticeParams:
        eps = None if self.eps is None else parse_real(self.eps)
        try:
            return LatticeParams(int(self.n), eps, parse_unit_complex(self.m), self.boundary)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc

    def grating(self) -> abmodel.GratingConfig:
        try:
            return abmodel.GratingConfig(parse_real(self.wavelength), parse_real(self.ell), parse_real(self.h))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def thetas(self) -> list[float]:
        if self.from_grating:
            g = self.grating()
            return [g.planck / g.slit_spacing]
        if self.theta_grid is not None:
            return [float(t) for t in parse_grid(self.theta_grid)]
        return [parse_real(self.theta)]


_CONFIG_KEYS = {f.name for f in fields(RunConfig)} - {"command", "config"}


def _normalize_key(key: str) -> str:
    key = key.replace("-", "_")
    return "wavelength" if key == "lambda" else key


def load_config(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a flat JSON object")
    out = {}
    for key, value in data.items():
        norm = _normalize_key(key)
        if norm not in _CONFIG_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        if isinstance(value, (dict, list)) and norm not in ("sizes", "m"):
            raise ConfigError(f"config key {key!r} must be a scalar")
        out[norm] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("lattice")
    g.add_argument("--n", type=int, help="lattice sites N (poset: cells)")
    g.add_argument("--eps", help="lattice spacing (default sqrt(2)/N)")
    g.add_argument("--m", help="unit hopping phase as re,im (default 0,1)")
    g.add_argument("--boundary", choices=["cyclic", "open"])
    g.add_argument("--theta", help="twist angle; accepts expressions like pi/3")
    g.add_argument("--theta-grid", dest="theta_grid", help="a:b:steps, inclusive")
    g.add_argument("--sigma", choices=list(gauge.CONVENTIONS), help="connection twist convention")
    g = common.add_argument_group("grating")
    g.add_argument("--lambda", dest="wavelength", help="electron wavelength")
    g.add_argument("--ell", help="slit spacing")
    g.add_argument("--h", help="Planck constant (natural units: 1)")
    g.add_argument("--alpha", help="solenoid phase e*Phi/(hbar c)")
    g.add_argument("--from-grating", dest="from_grating", action="store_true", default=None,
                   help="set theta = h/ell from the grating parameters")
    g = common.add_argument_group("output")
    g.add_argument("--out", help="output path (default stdout)")
    g.add_argument("--svg", help="also render a figure to this path")
    g.add_argument("--config", help="flat JSON config; flags take precedence")

    parser = argparse.ArgumentParser(
        prog="ncg-circle",
        description="Theta-quantization on the circle poset lattice and Aharonov-Bohm modular momentum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("spectrum", parents=[common], help="free vs gauged Dirac spectrum")
    sp.add_argument("--matrix-out", dest="matrix_out", help="write the gauged Dirac matrix as CSV")
    sub.add_parser("weyl", parents=[common], help="Weyl-relation residual over theta")
    sp = sub.add_parser("diffraction", parents=[common], help="grating orders with and without flux")
    sp.add_argument("--max-order", dest="max_order", type=int, help="orders -K..K (default 5)")
    sp = sub.add_parser("equivalence", parents=[common], help="momentum -> circle coordinates")
    sp.add_argument("--p-grid", dest="p_grid", help="momentum samples a:b:steps (use --p-grid=-2:2:9 for negative a)")
    sp.add_argument("--p0", help="momentum quantum (default h/ell)")
    sub.add_parser("poset", parents=[common], help="Hasse diagram of the circle poset as DOT")
    sp = sub.add_parser("convergence", parents=[common], help="lattice vs continuum error table")
    sp.add_argument("--sizes", help="comma-separated lattice sizes, ascending, each >= 8")
    return parser


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    values = {}
    if ns.config:
        values.update(load_config(ns.config))
    for key, value in vars(ns).items():
        if key in _CONFIG_KEYS and value is not None:
            values[key] = value
    cfg = RunConfig(command=ns.command, config=ns.config)
    for key, value in values.items():
        setattr(cfg, key, value)
    if cfg.command == "poset" and "n" not in values:
        cfg.n = 4
    if cfg.boundary not in ("cyclic", "open"):
        raise ConfigError(f"boundary must be cyclic or open, got {cfg.boundary!r}")
    if cfg.sigma not in gauge.CONVENTIONS:
        raise ConfigError(f"sigma must be one of {gauge.CONVENTIONS}, got {cfg.sigma!r}")
    if not isinstance(cfg.from_grating, bool):
        raise ConfigError("from-grating must be true or false")
    for key in ("n", "max_order"):
        try:
            setattr(cfg, key, int(getattr(cfg, key)))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{key} must be an integer") from exc
    return cfg


# --- commands ------------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig) -> dict[str, str]:
    p = cfg.lattice()
    if not p.cyclic:
        raise ConfigError("spectrum needs --boundary cyclic (the shifted closed form is cyclic-only)")
    theta = cfg.thetas()[0]
    report = gauge.spectral_shift_check(p, theta, cfg.sigma)
    buf = io.StringIO()
    buf.write("k,free,gauged,analytic,deviation\n")
    for k, free, gauged_ev, analytic, dev in report.rows():
        buf.write(f"{k},{fmt(free)},{fmt(gauged_ev)},{fmt(analytic)},{fmt(dev)}\n")
    files = {"csv": buf.getvalue()}
    if cfg.matrix_out:
        rho = gauge.build_connection(p, theta, cfg.sigma)
        files["matrix"] = matrix_csv(gauge.gauged_dirac(build_dirac(p), rho))
    if cfg.svg:
        from .plotting import plot_spectrum

        files["svg"] = lambda path: plot_spectrum(report, gauge.laplacian_spectrum(p, theta, cfg.sigma), path)
    return files


def cmd_weyl(cfg: RunConfig) -> dict:
    p = cfg.lattice()
    try:
        reports = sorted(weyl.weyl_sweep(p, cfg.thetas()), key=lambda r: r.theta)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    buf = io.StringIO()
    buf.write("theta,residual,wrap_defect\n")
    for r in reports:
        buf.write(f"{fmt(r.theta)},{fmt(r.residual)},{fmt(r.wrap_defect)}\n")
    files = {"csv": buf.getvalue()}
    if cfg.svg:
        from .plotting import plot_weyl

        files["svg"] = lambda path: plot_weyl(reports, path)
    return files


def cmd_diffraction(cfg: RunConfig) -> dict:
    g = cfg.grating()
    s = abmodel.SolenoidConfig(parse_real(cfg.alpha))
    k = int(cfg.max_order)
    if k < 0:
        raise ConfigError("--max-order must be >= 0")
    rows = []
    buf = io.StringIO()
    buf.write("n,angle,angle_ab,px,px_ab,evanescent\n")
    for n in range(-k, k + 1):
        angle = abmodel.diffraction_angle(n, g)
        angle_ab = abmodel.ab_diffraction_angle(n, g, s)
        row = {
            "n": n,
            "angle": math.nan if angle is abmodel.EVANESCENT else angle,
            "angle_ab": math.nan if angle_ab is abmodel.EVANESCENT else angle_ab,
            "px": abmodel.transverse_momentum(n, g),
            "px_ab": abmodel.ab_transverse_momentum(n, g, s),
            "evanescent": int(angle is abmodel.EVANESCENT),
        }
        rows.append(row)
        buf.write(f"{n},{fmt(row['angle'])},{fmt(row['angle_ab'])},{fmt(row['px'])},"
                  f"{fmt(row['px_ab'])},{row['evanescent']}\n")
    files = {"csv": buf.getvalue()}
    if cfg.svg:
        from .plotting import plot_diffraction

        files["svg"] = lambda path: plot_diffraction(rows, path)
    return files


ROUNDTRIP_TOL = 1e-12


def cmd_equivalence(cfg: RunConfig) -> dict:
    p0 = parse_real(cfg.p0) if cfg.p0 is not None else cfg.grating().momentum_quantum
    if not p0 > 0:
        raise ConfigError(f"p0 must be positive, got {p0}")
    buf = io.StringIO()
    buf.write("p,p0,x,n,p1_over_p0,theta_reduced,rep_phase_re,rep_phase_im,roundtrip_error\n")
    worst = 0.0
    for p in parse_grid(cfg.p_grid):
        p = float(p)
        x, sector = continuum.momentum_to_circle(p, p0)
        mm = abmodel.modular_decompose(p, p0)
        frac = mm.p1 / p0
        if frac >= 1.0:
            frac = math.nextafter(1.0, 0.0)
        phase = continuum.representation_phase(frac, mm.n, p0)
        err = abs(continuum.circle_to_momentum(x, p0) - p)
        worst = max(worst, err / max(1.0, abs(p)))
        buf.write(f"{fmt(p)},{fmt(p0)},{fmt(x)},{mm.n},{fmt(frac)},{fmt(sector.theta)},"
                  f"{fmt(phase.real)},{fmt(phase.imag)},{fmt(err)}\n")
    if worst > ROUNDTRIP_TOL:
        raise ConfigError(f"momentum/circle round trip failed: relative error {worst:.3e}")
    return {"csv": buf.getvalue()}


def cmd_poset(cfg: RunConfig) -> dict:
    try:
        ps = poset.build_circle_poset(int(cfg.n))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return {"csv": poset.to_dot(ps)}


def cmd_convergence(cfg: RunConfig) -> dict:
    sizes = parse_sizes(cfg.sizes)
    if not sizes:
        raise ConfigError("need at least one size")
    if any(n < 8 for n in sizes):
        raise ConfigError("every size must be >= 8")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ConfigError("sizes must be strictly ascending")
    theta = cfg.thetas()[0]
    rows = continuum.lattice_continuum_convergence(theta, sizes)
    buf = io.StringIO()
    buf.write("N,error,ratio\n")
    prev = None
    for n, err in rows:
        ratio = "" if prev is None or err == 0 else fmt(prev / err)
        buf.write(f"{n},{fmt(err)},{ratio}\n")
        prev = err
    files = {"csv": buf.getvalue()}
    if cfg.svg:
        from .plotting import plot_convergence

        files["svg"] = lambda path: plot_convergence(rows, path)
    return files


COMMANDS = {
    "spectrum": cmd_spectrum,
    "weyl": cmd_weyl,
    "diffraction": cmd_diffraction,
    "equivalence": cmd_equivalence,
    "poset": cmd_poset,
    "convergence": cmd_convergence,
}


def run(cfg: RunConfig) -> int:
    try:
        files = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        if cfg.out:
            Path(cfg.out).write_text(files["csv"])
        else:
            sys.stdout.write(files["csv"])
        if "matrix" in files:
            Path(cfg.matrix_out).write_text(files["matrix"])
        if "svg" in files:
            files["svg"](cfg.svg)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = resolve_config(ns)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

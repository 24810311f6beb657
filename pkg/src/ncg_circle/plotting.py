"""Matplotlib figures written next to the CSV reports.

Everything renders through the Agg backend and is saved with fixed metadata
and a fixed SVG hash salt, so the same data gives byte-identical files.
"""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "lines.linewidth": 1.2,
    "svg.hashsalt": "ncg-circle",
    "svg.fonttype": "path",
    "path.simplify": False,
}


def new_figure(width=5.0, height=None, ncols=1):
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    height = height or width * golden / ncols
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(1, ncols, figsize=(width, height))
    return fig, ax


def save_figure(fig, path) -> None:
    path = str(path)
    fmt = path.rsplit(".", 1)[-1].lower() if "." in path else "svg"
    metadata = {"Date": None} if fmt in ("svg", "pdf") else None
    with plt.rc_context(STYLE):
        fig.savefig(path, format=fmt, metadata=metadata)
    plt.close(fig)


def plot_convergence(rows, path) -> None:
    """log(error) against log(N) for the lattice-to-continuum comparison."""
    rows = [(n, e) for n, e in rows if e > 0]
    fig, ax = new_figure()
    if rows:
        n, e = np.array(rows, dtype=float).T
        ax.plot(np.log10(n), np.log10(e), marker="o", color="k")
    ax.set_xlabel(r"$\log_{10} N$")
    ax.set_ylabel(r"$\log_{10}$ error")
    fig.tight_layout()
    save_figure(fig, path)


def plot_weyl(reports, path) -> None:
    fig, ax = new_figure()
    theta = [r.theta for r in reports]
    ax.plot(theta, [r.residual for r in reports], marker=".", color="k", label="residual")
    ax.plot(theta, [r.wrap_defect for r in reports], ls="--", color="tab:red", label="wrap defect")
    ax.set_xlabel(r"$\theta$")
    ax.set_ylabel("max |entry|")
    ax.legend(frameon=False)
    fig.tight_layout()
    save_figure(fig, path)


def plot_spectrum(report, laplacian_values, path) -> None:
    fig, (left, right) = new_figure(8.0, 3.2, ncols=2)
    k = np.arange(report.free_spectrum.size)
    left.plot(k, report.free_spectrum, "o", mfc="none", color="0.5", label="free")
    left.plot(k, report.gauged_spectrum, "x", color="k", label="gauged")
    left.plot(k, report.analytic_shifted, "-", color="tab:red", lw=0.8, label="shifted closed form")
    left.set_xlabel("sorted index")
    left.set_ylabel("eigenvalue of D + rho")
    left.legend(frameon=False)
    right.plot(k, laplacian_values, ".", color="k")
    right.set_xlabel("sorted index")
    right.set_ylabel("Laplacian eigenvalue")
    fig.tight_layout()
    save_figure(fig, path)


def plot_diffraction(rows, path) -> None:
    """Transverse momentum per order, with and without the solenoid phase."""
    fig, ax = new_figure()
    n = [r["n"] for r in rows]
    ax.plot(n, [r["px"] for r in rows], "o", mfc="none", color="0.4", label="no flux")
    ax.plot(n, [r["px_ab"] for r in rows], "x", color="k", label="with flux")
    ax.set_xlabel("order n")
    ax.set_ylabel(r"$p_x$")
    ax.legend(frameon=False)
    fig.tight_layout()
    save_figure(fig, path)

"""Figures of the (D, E) domain, sampled clouds and RMT sweeps.

Uses the object-oriented matplotlib API (no pyplot state), so figures can be
rendered from any thread without selecting a GUI backend.
"""
import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .bounds import CUSPS, CurveId, sample_curve

OUTER = (CurveId.C12, CurveId.C23, CurveId.C34, CurveId.C14)
INNER = (CurveId.C13, CurveId.C24)


def _new_axes(width=5.0, height=4.2):
    fig = Figure(figsize=(width, height))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(1, 1, 1)
    ax.set_xlim(-0.02, 1.02)
    ax.set_ylim(-0.02, 1.05)
    ax.set_xlabel(r"depolarization index $D_M$")
    ax.set_ylabel(r"polarization entropy $E_M$")
    return fig, ax


def draw_domain(ax, samples=300, inner=True, labels=True):
    for curve in OUTER:
        d, e = np.array(sample_curve(curve, samples)).T
        ax.plot(d, e, color="k", lw=1.2)
    if inner:
        for curve in INNER:
            d, e = np.array(sample_curve(curve, samples)).T
            ax.plot(d, e, color="k", lw=0.8, ls="--")
    for p in CUSPS:
        ax.plot(p.d, p.e, "o", color="k", ms=4)
        if labels:
            ax.annotate(
                f"$p_{p.id[1]}$", (p.d, p.e), textcoords="offset points", xytext=(5, 4)
            )


def save(fig, path, dpi=150):
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)


def figure_boundary(path, samples=300):
    fig, ax = _new_axes()
    draw_domain(ax, samples)
    save(fig, path)


def figure_cloud(cloud, path, max_points=50_000):
    fig, ax = _new_axes()
    step = max(1, len(cloud) // max_points)
    ax.scatter(cloud.d[::step], cloud.e[::step], s=0.3, color="tab:gray", alpha=0.5,
               rasterized=True)
    draw_domain(ax)
    save(fig, path)


def figure_rmt(records, path):
    """One marker trace per medium kind; filled squares for generic media."""
    fig, ax = _new_axes()
    draw_domain(ax, labels=False)
    kinds = sorted({r.kind for r in records}, key=lambda k: k.value)
    for kind in kinds:
        rs = [r for r in records if r.kind is kind]
        filled = kind.value == "generic"
        ax.plot(
            [r.mean_d for r in rs],
            [r.mean_e for r in rs],
            "s",
            ms=4,
            mfc="k" if filled else "none",
            mec="k",
            label=kind.value,
        )
    ax.legend(loc="upper right", frameon=False)
    save(fig, path)


def figure_point(d, e, path, label=None):
    fig, ax = _new_axes()
    draw_domain(ax)
    ax.plot([d], [e], "*", color="tab:red", ms=10, label=label)
    if label:
        ax.legend(loc="upper right", frameon=False)
    save(fig, path)

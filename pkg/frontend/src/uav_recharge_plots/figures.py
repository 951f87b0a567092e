"""Chart rendering for the four experiment kinds.

fig3/fig5 draw fleet-size-vs-N staircases (fig5 shades each flight-time
family by displacement deviation, lighter hue = lower deviation); fig6 draws
the approximation factor against deviation, one line per overhead; appc draws
grouped bars with standard-deviation error bars.  Output is pixel-stable for
a given CSV and style (fixed fonts, no timestamps in metadata).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib import colormaps

from .schema import ResultRow, read_rows

FIGURE_KINDS = ("fig3", "fig5", "fig6", "appc")

_F_FAMILY_CMAPS = ("Blues", "Greens", "Oranges", "Purples", "Reds")
_METHOD_ORDER = ("suff", "herr", "pherr", "opherr")


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    kind: str
    output_image: Path
    hue_map: str = "viridis"
    dpi: int = 120
    title: str | None = None
    style: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind '{self.kind}'")


def _f_minutes(row: ResultRow) -> float:
    return float(int(row.f_ms)) / 60000.0


def _new_axes():
    fig, ax = plt.subplots(figsize=(7.2, 4.5))
    return fig, ax


def _save(fig, spec: FigureSpec) -> None:
    fig.tight_layout()
    suffix = Path(spec.output_image).suffix.lower()
    if suffix == ".png":
        metadata = {"Software": "uav-recharge-plots"}
    elif suffix == ".svg":
        metadata = {"Date": None}  # strip the timestamp for stable output
    else:
        metadata = None
    fig.savefig(spec.output_image, dpi=spec.dpi, metadata=metadata)
    plt.close(fig)


def _render_staircases(rows: list[ResultRow], spec: FigureSpec):
    fig, ax = _new_axes()
    families = sorted({r.f_ms for r in rows}, key=int)
    deltas = sorted({r.delta for r in rows})
    for fam_index, f_ms in enumerate(families):
        cmap = colormaps[_F_FAMILY_CMAPS[fam_index % len(_F_FAMILY_CMAPS)]]
        for delta in deltas:
            series = sorted(
                (r for r in rows if r.f_ms == f_ms and r.delta == delta),
                key=lambda r: r.n,
            )
            if not series:
                continue
            shade = 0.45 + 0.5 * (deltas.index(delta) / max(len(deltas) - 1, 1))
            label = f"f={_f_minutes(series[0]):g} min"
            if len(deltas) > 1:
                label += f", d={delta:g}"
            ax.step(
                [r.n for r in series],
                [r.fleet_mean for r in series],
                where="post",
                color=cmap(shade),
                label=label,
            )
    ax.set_xlabel("locations N")
    ax.set_ylabel("fleet size M")
    ax.legend(fontsize=7, ncols=2)
    ax.grid(True, alpha=0.3)
    return fig


def _render_factor_lines(rows: list[ResultRow], spec: FigureSpec):
    fig, ax = _new_axes()
    cmap = colormaps[spec.hue_map]
    omegas = sorted({r.omega for r in rows})
    n_values = sorted({r.n for r in rows})
    linestyles = ["-", "--", ":", "-."]
    for omega in omegas:
        color = cmap(0.15 + 0.75 * omegas.index(omega) / max(len(omegas) - 1, 1))
        for n in n_values:
            series = sorted(
                (r for r in rows if r.omega == omega and r.n == n),
                key=lambda r: r.delta,
            )
            if not series:
                continue
            ax.plot(
                [r.delta for r in series],
                [r.approx_factor for r in series],
                color=color,
                linestyle=linestyles[n_values.index(n) % len(linestyles)],
                marker="o",
                markersize=3,
                label=f"w={omega:g}, N={n}",
            )
    ax.axhline(1.1, color="gray", linewidth=0.8, linestyle="--")
    ax.set_xlabel("displacement deviation")
    ax.set_ylabel("fleet / lower bound")
    ax.legend(fontsize=7, ncols=2)
    ax.grid(True, alpha=0.3)
    return fig


def _render_grouped_bars(rows: list[ResultRow], spec: FigureSpec):
    fig, ax = _new_axes()
    cells = sorted({(r.omega, r.delta) for r in rows})
    methods = [m for m in _METHOD_ORDER if any(r.method == m for r in rows)]
    width = 0.8 / max(len(methods), 1)
    cmap = colormaps[spec.hue_map]
    for m_index, method in enumerate(methods):
        xs, ys, errs = [], [], []
        for c_index, (omega, delta) in enumerate(cells):
            match = [r for r in rows if r.method == method and (r.omega, r.delta) == (omega, delta)]
            if not match:
                continue
            xs.append(c_index + m_index * width)
            ys.append(match[0].fleet_mean)
            errs.append(match[0].fleet_std)
        ax.bar(
            xs,
            ys,
            width=width,
            yerr=errs,
            capsize=3,
            color=cmap(0.15 + 0.7 * m_index / max(len(methods) - 1, 1)),
            label=method,
        )
    ax.set_xticks(
        [i + width * (len(methods) - 1) / 2 for i in range(len(cells))],
        [f"w={omega:g}\nd={delta:g}" for omega, delta in cells],
        fontsize=7,
    )
    ax.set_ylabel("fleet size")
    ax.legend(fontsize=8)
    ax.grid(True, axis="y", alpha=0.3)
    return fig


def render(spec: FigureSpec) -> Path:
    """Read the CSV, draw the figure for its kind, write the image."""
    rows = read_rows(spec.input_csv, expected_kind=spec.kind)
    if spec.kind in ("fig3", "fig5"):
        fig = _render_staircases(rows, spec)
    elif spec.kind == "fig6":
        fig = _render_factor_lines(rows, spec)
    else:
        fig = _render_grouped_bars(rows, spec)
    if spec.title:
        fig.axes[0].set_title(spec.title)
    _save(fig, spec)
    return spec.output_image

"""Render figures from gausscf CLI exports.

Pure post-processing: disks and region boundaries are drawn from the
regions-export geometry, orbit points from the orbit JSONL, with no numeric
computation beyond coordinate transforms.  The case-to-color mapping lives
in case_colors.json so figures stay comparable across runs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.patches import Circle

FIGURES = ("constraints", "orbit", "orbit_t2", "regions", "density_heatmap")

#: disks drawn on the w1 (left) and w2 (right) panels
W1_DISKS = ("red1", "blue1", "green1")
W2_DISKS = ("red2", "blue2", "green2")


class SchemaError(ValueError):
    """Input file does not match the expected CLI export schema."""


@dataclass(frozen=True)
class PlotSpec:
    input_path: str
    figure: str
    out_image: str
    geometry_path: str | None = None

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise SchemaError(f"unknown figure {self.figure!r}; choose from {FIGURES}")


def case_colors() -> dict:
    with resources.files("gausscf_plots").joinpath("case_colors.json").open() as fh:
        return json.load(fh)


def load_geometry(path: str) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "disks" not in doc or "regions" not in doc:
        raise SchemaError(f"{path} is not a regions-export document")
    return doc


def load_orbit(path: str) -> list[dict]:
    records = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if not {"theta", "w1", "w2", "k", "case", "t_return"} <= set(rec):
                raise SchemaError(f"{path} is not an orbit export")
            records.append(rec)
    return records


def _unit_disk_axes(ax, title):
    ax.add_patch(Circle((0, 0), 1.0, fill=False, color="black", lw=1.2))
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_aspect("equal")
    ax.set_title(title)
    ax.axhline(0, color="0.85", lw=0.5, zorder=0)
    ax.axvline(0, color="0.85", lw=0.5, zorder=0)


def _draw_disks(ax, geometry, names):
    styles = {"red": "#d62728", "blue": "#1f77b4", "green": "#2ca02c"}
    for name in names:
        disk = geometry["disks"][name]
        color = styles[name.rstrip("12")]
        ax.add_patch(
            Circle(
                tuple(disk["center"]),
                disk["radius"],
                fill=False,
                color=color,
                lw=1.4,
                label=name,
            )
        )


def _draw_region(ax, geometry, name, color="black", lw=1.8):
    reg = geometry["regions"][name]
    for arc in reg["arcs"]:
        t = np.linspace(arc["arg_start"], arc["arg_end"], 256)
        cx, cy = arc["center"]
        ax.plot(
            cx + arc["radius"] * np.cos(t),
            cy + arc["radius"] * np.sin(t),
            color=color,
            lw=lw,
        )
    for (p, q) in reg["segments"]:
        ax.plot([p[0], q[0]], [p[1], q[1]], color=color, lw=lw)


def _figure_constraints(spec: PlotSpec):
    geometry = load_geometry(spec.input_path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5.5))
    _unit_disk_axes(ax1, "w1 constraints")
    _draw_disks(ax1, geometry, W1_DISKS)
    _draw_region(ax1, geometry, "C")
    ax1.legend(loc="lower left", fontsize=8)
    _unit_disk_axes(ax2, "w2 constraints")
    _draw_disks(ax2, geometry, W2_DISKS)
    _draw_region(ax2, geometry, "D")
    ax2.legend(loc="lower left", fontsize=8)
    return fig


def _orbit_panels(spec: PlotSpec, records, title_suffix=""):
    colors = case_colors()
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5.5))
    _unit_disk_axes(ax1, "w1" + title_suffix)
    _unit_disk_axes(ax2, "w2" + title_suffix)
    if records:
        w1 = np.array([r["w1"] for r in records])
        w2 = np.array([r["w2"] for r in records])
        cs = [colors.get(str(r["case"]), colors["null"]) for r in records]
        ax1.scatter(w1[:, 0], w1[:, 1], s=1.0, c=cs, linewidths=0)
        ax2.scatter(w2[:, 0], w2[:, 1], s=1.0, c=cs, linewidths=0)
    if spec.geometry_path:
        geometry = load_geometry(spec.geometry_path)
        _draw_region(ax1, geometry, "C")
        _draw_region(ax2, geometry, "D")
    return fig


def _figure_orbit(spec: PlotSpec):
    records = [r for r in load_orbit(spec.input_path) if r["k"] == 1]
    return _orbit_panels(spec, records, " (index-1 states)")


def _figure_orbit_t2(spec: PlotSpec):
    records = [r for r in load_orbit(spec.input_path) if r["k"] == 2]
    fig = _orbit_panels(spec, records, " (index-2 states)")
    if spec.geometry_path:
        geometry = load_geometry(spec.geometry_path)
        _draw_region(fig.axes[1], geometry, "T", color="#555555", lw=1.2)
    return fig


def _figure_regions(spec: PlotSpec):
    geometry = load_geometry(spec.input_path)
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    ax.set_xlim(-2.0, 2.5)
    ax.set_ylim(-2.5, 2.0)
    ax.set_aspect("equal")
    ax.set_title("distance regions around D")
    _draw_region(ax, geometry, "D", color="black", lw=2.0)
    for name, color in (("C", "#2ca02c"), ("T", "#1f77b4")):
        _draw_region(ax, geometry, name, color=color, lw=1.0)
    for label, xy in geometry["corners"].items():
        ax.plot(*xy, marker="o", ms=4, color="#d62728")
        ax.annotate(label, xy, textcoords="offset points", xytext=(5, 5), fontsize=8)
    return fig


def _figure_density_heatmap(spec: PlotSpec):
    records = load_orbit(spec.input_path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5.5))
    for ax, key, title in ((ax1, "w1", "w1 visits"), (ax2, "w2", "w2 visits")):
        ax.set_title(title)
        ax.set_aspect("equal")
        if records:
            pts = np.array([r[key] for r in records])
            ax.hist2d(pts[:, 0], pts[:, 1], bins=60, range=[[-1, 1], [-1, 1]])
        ax.set_xlim(-1, 1)
        ax.set_ylim(-1, 1)
    return fig


_RENDERERS = {
    "constraints": _figure_constraints,
    "orbit": _figure_orbit,
    "orbit_t2": _figure_orbit_t2,
    "regions": _figure_regions,
    "density_heatmap": _figure_density_heatmap,
}


def render(spec: PlotSpec) -> str:
    """Write the requested figure; returns the output path."""
    fig = _RENDERERS[spec.figure](spec)
    fig.savefig(spec.out_image, dpi=110, metadata={"Software": "gausscf-plots"})
    plt.close(fig)
    return spec.out_image

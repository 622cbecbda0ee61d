"""Deterministic SVG and DOT drawings of phase-partitioned cube skeletons.

Output is byte-reproducible: vertices are walked in ascending index order,
edges in sorted order, and every coordinate is printed with a fixed format.
The SVG canvas is an 800x800 viewBox with a 40 px margin; the ambient cube
skeleton is drawn in neutral gray with the two class structures on top,
diagonal (control-target) moves dashed.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .bits import bitstring
from .phase_partition import PhasePartition, class_graph
from .statevec import GatePlacement

CANVAS = 800.0
MARGIN = 40.0
LABEL_SIZE = 14
DEFAULT_PHI1_COLOR = "#1f77b4"
DEFAULT_PHI2_COLOR = "#d62728"
DEFAULT_AMBIENT_COLOR = "#999999"

PROJECTIONS = {"square": 2, "cube-isometric": 3, "tesseract-nested": 4}

_ISO_AXES = ((1.0, 0.0), (0.5, -0.5), (0.0, -1.0))
_ISO_CENTER = (0.75, -0.75)
_INNER_SCALE = 0.5


@dataclass(frozen=True)
class RenderSpec:
    """Figure parameters: which cube, which placement, and how to draw it."""

    n_qubits: int
    placement: GatePlacement
    projection: str
    color_phi1: str = DEFAULT_PHI1_COLOR
    color_phi2: str = DEFAULT_PHI2_COLOR
    ambient_color: str = DEFAULT_AMBIENT_COLOR
    ambient_stroke: float = 1.5
    class_stroke: float = 3.0

    def __post_init__(self) -> None:
        if self.projection not in PROJECTIONS:
            raise ValueError(f"unknown projection {self.projection!r}")
        if PROJECTIONS[self.projection] != self.n_qubits:
            raise ValueError(
                f"projection {self.projection!r} draws "
                f"{PROJECTIONS[self.projection]} qubits, not {self.n_qubits}")
        if self.ambient_stroke <= 0 or self.class_stroke <= 0:
            raise ValueError("stroke widths must be positive")

    @classmethod
    def for_partition(cls, partition: PhasePartition, **overrides) -> "RenderSpec":
        """Spec with the default projection for the partition's qubit count."""
        by_n = {n: name for name, n in PROJECTIONS.items()}
        if partition.n_qubits not in by_n:
            raise ValueError(
                f"no SVG projection for {partition.n_qubits} qubits (supported: 2, 3, 4)")
        spec = cls(partition.n_qubits, partition.placement,
                   by_n[partition.n_qubits])
        return replace(spec, **overrides) if overrides else spec


def _isometric(bits3: list[int]) -> tuple[float, float]:
    x = y = 0.0
    for bit, (ax, ay) in zip(bits3, _ISO_AXES):
        x += bit * ax
        y += bit * ay
    return x, y


def project_vertex(bits: str, projection: str) -> tuple[float, float]:
    """Planar position of one cube vertex under the named projection.

    square           : (x, y) = (bit2, 1 - bit1)
    cube-isometric   : bit-weighted sum of the axes (1,0), (0.5,-0.5), (0,-1)
    tesseract-nested : isometric cube of bits 2..4, shrunk about the cube
                       center by 1/2 when bit1 = 0
    """
    if projection not in PROJECTIONS:
        raise ValueError(f"unknown projection {projection!r}")
    if len(bits) != PROJECTIONS[projection] or set(bits) - {"0", "1"}:
        raise ValueError(
            f"projection {projection!r} needs a {PROJECTIONS[projection]}-bit string, "
            f"got {bits!r}")
    b = [int(ch) for ch in bits]
    if projection == "square":
        return float(b[1]), 1.0 - float(b[0])
    if projection == "cube-isometric":
        return _isometric(b)
    x, y = _isometric(b[1:])
    scale = _INNER_SCALE if b[0] == 0 else 1.0
    cx, cy = _ISO_CENTER
    return cx + scale * (x - cx), cy + scale * (y - cy)


def _canvas_points(n: int, projection: str) -> dict[int, tuple[float, float]]:
    raw = {v: project_vertex(bitstring(v, n), projection) for v in range(1 << n)}
    xs = [p[0] for p in raw.values()]
    ys = [p[1] for p in raw.values()]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    span = max(width, height) or 1.0
    scale = (CANVAS - 2.0 * MARGIN) / span
    off_x = (CANVAS - scale * width) / 2.0 - scale * min(xs)
    off_y = (CANVAS - scale * height) / 2.0 - scale * min(ys)
    return {v: (scale * x + off_x, scale * y + off_y) for v, (x, y) in raw.items()}


def _ambient_edges(n: int) -> list[tuple[int, int]]:
    edges = []
    for v in range(1 << n):
        for b in range(n):
            if not v & (1 << b):
                edges.append((v, v | (1 << b)))
    return sorted(edges)


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def render_partition_svg(partition: PhasePartition, spec: RenderSpec) -> str:
    """Standalone SVG of the partitioned cube skeleton under `spec`."""
    if spec.n_qubits != partition.n_qubits or spec.placement != partition.placement:
        raise ValueError("render spec does not match the partition")
    n = partition.n_qubits
    points = _canvas_points(n, spec.projection)
    graphs = (class_graph(partition, "phi1"), class_graph(partition, "phi2"))
    colors = (spec.color_phi1, spec.color_phi2)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        'viewBox="0 0 800 800">',
        f'  <title>phase classes of the {n}-cube, control '
        f'{partition.placement.control}, target {partition.placement.target}</title>',
    ]
    out.append(f'  <g stroke="{spec.ambient_color}" '
               f'stroke-width="{_fmt(spec.ambient_stroke)}">')
    for u, v in _ambient_edges(n):
        (x1, y1), (x2, y2) = points[u], points[v]
        out.append(f'    <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                   f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append('  </g>')
    for graph, color in zip(graphs, colors):
        mask = graph.diagonal_mask()
        out.append(f'  <g stroke="{color}" stroke-width="{_fmt(spec.class_stroke)}">')
        for u, v in graph.edges:
            (x1, y1), (x2, y2) = points[u], points[v]
            dash = ' stroke-dasharray="8 6"' if u ^ v == mask else ''
            out.append(f'    <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                       f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"{dash}/>')
        out.append('  </g>')
    out.append('  <g stroke="none">')
    for v in range(1 << n):
        color = spec.color_phi1 if v in partition.class_phi1 else spec.color_phi2
        x, y = points[v]
        out.append(f'    <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="10" fill="{color}"/>')
    out.append('  </g>')
    out.append(f'  <g font-family="monospace" font-size="{LABEL_SIZE}" '
               'fill="#000000" text-anchor="middle">')
    for v in range(1 << n):
        x, y = points[v]
        label = f"|{bitstring(v, n)}⟩"
        out.append(f'    <text x="{_fmt(x)}" y="{_fmt(y - 16.0)}">{label}</text>')
    out.append('  </g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def render_partition_dot(partition: PhasePartition) -> str:
    """Graphviz text: all vertices colored by class, ambient cube edges,
    and the dashed diagonal moves of each class. Works for any qubit count."""
    n = partition.n_qubits
    placement = partition.placement
    out = [f'graph "partition_n{n}_c{placement.control}_t{placement.target}" {{',
           '  node [shape=circle, style=filled, fontname="monospace"];']
    for v in range(1 << n):
        color = DEFAULT_PHI1_COLOR if v in partition.class_phi1 else DEFAULT_PHI2_COLOR
        out.append(f'  "{bitstring(v, n)}" [fillcolor="{color}"];')
    for u, v in _ambient_edges(n):
        out.append(f'  "{bitstring(u, n)}" -- "{bitstring(v, n)}";')
    for which, color in (("phi1", DEFAULT_PHI1_COLOR), ("phi2", DEFAULT_PHI2_COLOR)):
        graph = class_graph(partition, which)
        for u, v in graph.diagonal_edges():
            out.append(f'  "{bitstring(u, n)}" -- "{bitstring(v, n)}" '
                       f'[style=dashed, color="{color}"];')
    out.append('}')
    return "\n".join(out) + "\n"

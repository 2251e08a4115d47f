"""Graphviz export of quivers and exchange graphs."""

from __future__ import annotations

from clusterlift.membership import ExchangeGraph
from clusterlift.seed import Seed, VertexKind, validate_seed

_SHAPES = {
    VertexKind.UNFROZEN: "shape=circle",
    VertexKind.SEMIFROZEN: "shape=square",
    VertexKind.HIGHLYFROZEN: "shape=square, style=filled, fillcolor=black, fontcolor=white",
}


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def entry(s: Seed, i: str, j: str) -> int | None:
    """``b_ij``, using ``b_ij = -b_ji`` when only ``i`` is unfrozen; None for two frozen vertices."""
    B = s.matrix
    if j in B.cols:
        return B[i, j]
    if i in B.cols:
        return -B[j, i]
    return None


def quiver_edges(s: Seed) -> list[tuple[str, str, int, int]]:
    """Arrows ``i -> j`` with ``b_ij > 0``, as ``(i, j, b_ij, -b_ji)``."""
    verts = s.vertices
    out = []
    for a, i in enumerate(verts):
        for j in verts[a + 1:]:
            bij, bji = entry(s, i, j), entry(s, j, i)
            if bij is None:
                continue
            if bij > 0:
                out.append((i, j, bij, -bji))
            elif bji > 0:
                out.append((j, i, bji, -bij))
    return out


def export_dot(s: Seed, always_label: bool = False, name: str = "seed") -> str:
    """Quiver of ``s``: circles, squares and filled squares for the three vertex kinds.

    Arrows carry the label ``b_ij,-b_ji``; unit labels are omitted unless
    ``always_label`` is set.
    """
    validate_seed(s)
    lines = [f"digraph {_q(name)} {{"]
    for v in s.vertices:
        lines.append(f"  {_q(v)} [label={_q(v)}, {_SHAPES[s.kinds[v]]}];")
    for i, j, p, q in quiver_edges(s):
        label = "" if (p, q) == (1, 1) and not always_label else f" [label={_q(f'{p},{q}')}]"
        lines.append(f"  {_q(i)} -> {_q(j)}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_exchange_graph_dot(g: ExchangeGraph) -> str:
    lines = ["digraph exchange_graph {"]
    for key, s in g.nodes.items():
        label = ",".join(s.provenance) or "root"
        lines.append(f"  {_q(key.digest)} [label={_q(label)}];")
    for a, k, b in sorted(g.edges, key=lambda e: (e[0].digest, e[1], e[2].digest)):
        lines.append(f"  {_q(a.digest)} -> {_q(b.digest)} [label={_q(k)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""GraphViz export of a structure graph and its flow links."""

from __future__ import annotations

from .structure_graph import StructureGraph, iter_containment

EDGE_GROUPS = ("tree", "cf", "df")


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(graph: StructureGraph, edges: tuple[str, ...] = EDGE_GROUPS) -> str:
    """Render the graph as GraphViz source.

    ``edges`` selects the groups to draw: containment as solid edges,
    control flow as labeled edges, data flow as dashed edges.
    """
    unknown = [group for group in edges if group not in EDGE_GROUPS]
    if unknown:
        raise ValueError(f"unknown edge groups: {unknown}")
    lines = ["digraph pdg {", "  node [fontname=\"monospace\"];"]
    for item in graph.items:
        shape = "box" if item.is_flow else "ellipse"
        label = _escape(item.kind) + "\\n" + _escape(item.txt)
        lines.append(f'  n{item.id} [shape={shape}, label="{label}"];')
    if "tree" in edges:
        for parent, _role, _index, child in iter_containment(graph):
            lines.append(f"  n{parent} -> n{child};")
        for item in graph.items:
            if item.target is not None:
                lines.append(f'  n{item.id} -> n{item.target} '
                             f'[style=dotted, label="target"];')
    if "cf" in edges:
        for source, target in graph.cf_edges():
            lines.append(f'  n{source} -> n{target} [label="cf", color=blue];')
    if "df" in edges:
        for source, target in graph.df_edges():
            lines.append(f'  n{source} -> n{target} '
                         f'[style=dashed, label="df", color=red];')
    lines.append("}")
    return "\n".join(lines) + "\n"

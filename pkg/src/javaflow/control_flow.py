"""Control-flow link synthesis over the structure graph.

Fills ``cf_next``/``cf_prev`` in place.  Blocks, labels, loops, and
if-items do not participate; control flows between flow instructions only.
A loop or if hands control to its test expression; the test branches to
the first flow instruction of each arm, falling through to whatever
follows when an arm is absent or empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .structure_graph import Item, StructureGraph, iter_containment


@dataclass
class CfContext:
    """Navigation cache: child id -> (parent id, role, index within role)."""

    parent: dict[int, tuple[int, str, int]]

    @classmethod
    def from_graph(cls, graph: StructureGraph) -> "CfContext":
        parent: dict[int, tuple[int, str, int]] = {}
        for parent_id, role, index, child in iter_containment(graph):
            parent[child] = (parent_id, role, index)
        return cls(parent)

    def enclosing_loop(self, graph: StructureGraph, item_id: int) -> Item | None:
        """The innermost Loop whose body contains the item, if any."""
        current = item_id
        while current in self.parent:
            current = self.parent[current][0]
            if graph.item(current).kind == "Loop":
                return graph.item(current)
        return None


def first_flow_instruction(item_id: int, graph: StructureGraph) -> int | None:
    """First flow instruction reachable depth-first from an item.

    A flow instruction is itself; a block cascades through its statements
    in order; a label descends into its statement; a loop or if yields its
    test expression.  None when the subtree holds no flow instruction.
    """
    item = graph.item(item_id)
    if item.is_flow:
        return item_id
    if item.kind == "Block":
        for stmt_id in item.stmts:
            found = first_flow_instruction(stmt_id, graph)
            if found is not None:
                return found
        return None
    if item.kind == "Label":
        assert item.stmt is not None
        return first_flow_instruction(item.stmt, graph)
    if item.kind in ("If", "Loop"):
        return item.test
    return None  # Var/Param subtrees carry no flow


def flow_successor_after(item_id: int, graph: StructureGraph,
                         ctx: CfContext | None = None) -> int:
    """First flow instruction that follows an item in its method.

    Walks outward through the containment tree past empty or exhausted
    siblings; leaving a loop body returns to the loop's test; when nothing
    follows at the method level, the method's Exit.
    """
    if ctx is None:
        ctx = CfContext.from_graph(graph)
    current = item_id
    while True:
        if current not in ctx.parent:
            raise GraphError(f"item {current} is not contained in the method")
        parent_id, role, index = ctx.parent[current]
        parent = graph.item(parent_id)
        if parent.kind == "Method":
            for stmt_id in parent.stmts[index + 1:] if role == "stmts" else []:
                found = first_flow_instruction(stmt_id, graph)
                if found is not None:
                    return found
            assert parent.exit is not None
            return parent.exit
        if parent.kind == "Block":
            for stmt_id in parent.stmts[index + 1:]:
                found = first_flow_instruction(stmt_id, graph)
                if found is not None:
                    return found
            current = parent_id
            continue
        if parent.kind == "Loop":
            if role == "body":
                assert parent.test is not None
                return parent.test
            current = parent_id  # walking out of the test itself
            continue
        if parent.kind in ("If", "Label"):
            current = parent_id
            continue
        raise GraphError(f"unexpected containment parent kind {parent.kind}")


def _loop_under_label(graph: StructureGraph, label_id: int) -> Item | None:
    """The Loop a label (transitively) wraps, if it wraps one."""
    item = graph.item(label_id)
    while item.kind == "Label":
        assert item.stmt is not None
        item = graph.item(item.stmt)
    return item if item.kind == "Loop" else None


def synthesize_control_flow(graph: StructureGraph) -> StructureGraph:
    """Fill cf_next/cf_prev on every flow instruction, in place.

    Requires a graph with no control-flow links yet; raises GraphError
    when links are already present or a labeled continue does not target
    a loop.
    """
    for item in graph.items:
        if item.cf_next or item.cf_prev:
            raise GraphError("control-flow links already present; "
                             "run on a plain structure graph")
    ctx = CfContext.from_graph(graph)
    method = graph.method

    def add_edge(source: int, target: int) -> None:
        graph.item(source).cf_next.add(target)
        graph.item(target).cf_prev.add(source)

    first = None
    for stmt_id in method.stmts:
        first = first_flow_instruction(stmt_id, graph)
        if first is not None:
            break
    add_edge(method.id, first if first is not None else graph.exit_id)

    for item in graph.items:
        if not item.is_flow or item.kind in ("Method", "Exit"):
            continue
        if item.kind == "Expr":
            owner_id, role, _ = ctx.parent[item.id]
            assert role == "test"
            owner = graph.item(owner_id)
            if owner.kind == "Loop":
                assert owner.body is not None
                body_first = first_flow_instruction(owner.body, graph)
                # An empty body falls straight back to the test.
                targets = {body_first if body_first is not None else item.id,
                           flow_successor_after(owner_id, graph, ctx)}
            else:
                after = flow_successor_after(owner_id, graph, ctx)
                assert owner.then is not None
                then_first = first_flow_instruction(owner.then, graph)
                targets = {then_first if then_first is not None else after}
                if owner.else_ is not None:
                    else_first = first_flow_instruction(owner.else_, graph)
                    targets.add(else_first if else_first is not None else after)
                else:
                    targets.add(after)
            for target in targets:
                add_edge(item.id, target)
        elif item.kind == "Return":
            add_edge(item.id, graph.exit_id)
        elif item.kind == "Break":
            if item.target is not None:
                add_edge(item.id, flow_successor_after(item.target, graph, ctx))
            else:
                loop = ctx.enclosing_loop(graph, item.id)
                if loop is None:
                    raise GraphError(f"item {item.id}: 'break' outside any loop")
                add_edge(item.id, flow_successor_after(loop.id, graph, ctx))
        elif item.kind == "Continue":
            if item.target is not None:
                loop = _loop_under_label(graph, item.target)
                if loop is None:
                    raise GraphError(f"item {item.id}: continue target is not a loop")
            else:
                loop = ctx.enclosing_loop(graph, item.id)
                if loop is None:
                    raise GraphError(f"item {item.id}: 'continue' outside any loop")
            assert loop.test is not None
            add_edge(item.id, loop.test)
        else:  # SimpleStmt
            add_edge(item.id, flow_successor_after(item.id, graph, ctx))
    return graph

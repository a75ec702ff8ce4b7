"""Data-flow link synthesis: definitions reaching uses along control flow.

An edge m -> n is created exactly when some variable written by m is read
by n and a control-flow path of length >= 1 from m to n leaves that
variable unwritten at every strictly intermediate instruction.  Two
implementations are provided and must agree: an iterative
reaching-definitions fixpoint (the fast path) and a literal per-pair path
search (the oracle).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphError
from .structure_graph import StructureGraph

#: A reaching fact is a (definition site id, variable id) pair.
ReachFact = tuple[int, int]


@dataclass
class ReachState:
    """Per-node fact sets at the reaching-definitions fixpoint."""

    in_sets: dict[int, set[ReachFact]]
    out_sets: dict[int, set[ReachFact]]
    iterations: int

    def transfer(self, node: int, defs: set[int]) -> set[ReachFact]:
        """gen(n) | (in(n) - kill(n)); kill spares the node's own facts."""
        gen = {(node, var) for var in defs}
        kept = {(site, var) for site, var in self.in_sets[node]
                if var not in defs or site == node}
        return gen | kept


def _require_cf(graph: StructureGraph) -> None:
    missing = [it.id for it in graph.flow_items()
               if it.kind != "Exit" and not it.cf_next]
    if missing:
        raise GraphError("control-flow links missing (run control-flow synthesis "
                         f"first); instructions without successors: {missing}")


def _require_df_empty(graph: StructureGraph) -> None:
    if any(it.df_next for it in graph.items):
        raise GraphError("data-flow links already present; "
                         "run on a control-flow graph")


def reaching_definitions(graph: StructureGraph) -> ReachState:
    """Forward may-analysis to fixpoint over cf_next.

    FIFO worklist seeded with all flow instructions in id order, starting
    from all-empty sets; in(n) is the union of out over cf_prev(n).
    """
    _require_cf(graph)
    flow_ids = [it.id for it in graph.flow_items()]
    state = ReachState(in_sets={n: set() for n in flow_ids},
                       out_sets={n: set() for n in flow_ids},
                       iterations=0)
    pending = deque(flow_ids)
    queued = set(flow_ids)
    while pending:
        node = pending.popleft()
        queued.discard(node)
        state.iterations += 1
        item = graph.item(node)
        incoming: set[ReachFact] = set()
        for pred in item.cf_prev:
            incoming |= state.out_sets[pred]
        state.in_sets[node] = incoming
        out = state.transfer(node, item.defs)
        if out != state.out_sets[node]:
            state.out_sets[node] = out
            for succ in item.cf_next:
                if succ not in queued:
                    pending.append(succ)
                    queued.add(succ)
    return state


def worklist_df_edges(graph: StructureGraph) -> set[tuple[int, int]]:
    """Data-flow edges read off the reaching-definitions fixpoint."""
    state = reaching_definitions(graph)
    edges = set()
    for item in graph.flow_items():
        for site, var in state.in_sets[item.id]:
            if var in item.uses:
                edges.add((site, item.id))
    return edges


def path_witness_exists(source: int, sink: int, graph: StructureGraph) -> bool:
    """True when a cf path of length >= 1 carries a definition of ``source``
    into a use at ``sink`` without an intermediate redefinition.

    It suffices to search paths with pairwise-distinct interior nodes:
    removing a cycle only shrinks the set of intermediate definitions.
    The endpoints may coincide (a self-edge needs a genuine cycle).
    """
    candidates = graph.item(source).defs & graph.item(sink).uses
    for var in candidates:
        seen: set[int] = set()
        frontier = list(graph.item(source).cf_next)
        while frontier:
            node = frontier.pop()
            if node == sink:
                return True
            if node in seen:
                continue
            seen.add(node)
            if var in graph.item(node).defs:
                continue  # blocked: this interior node rewrites var
            frontier.extend(graph.item(node).cf_next)
    return False


def synthesize_data_flow_bruteforce(graph: StructureGraph) -> set[tuple[int, int]]:
    """Literal quadratic reading: test every (definer, user) pair for a
    path witness.  Returns the edge set without touching the graph."""
    _require_cf(graph)
    flow = graph.flow_items()
    edges = set()
    for definer in flow:
        if not definer.defs:
            continue
        for user in flow:
            if definer.defs & user.uses and path_witness_exists(definer.id, user.id,
                                                                graph):
                edges.add((definer.id, user.id))
    return edges


def _apply_edges(graph: StructureGraph, edges: set[tuple[int, int]]) -> StructureGraph:
    for source, target in edges:
        graph.item(source).df_next.add(target)
    return graph


def synthesize_data_flow_worklist(graph: StructureGraph) -> StructureGraph:
    """Fill df_next in place from the reaching-definitions fixpoint."""
    _require_df_empty(graph)
    return _apply_edges(graph, worklist_df_edges(graph))


def synthesize_data_flow(graph: StructureGraph, algorithm: str = "worklist"
                         ) -> StructureGraph:
    """Fill df_next using the selected algorithm.

    ``both`` runs the worklist and the brute-force search and raises
    GraphError naming every differing edge if they disagree.
    """
    if algorithm == "worklist":
        return synthesize_data_flow_worklist(graph)
    if algorithm == "bruteforce":
        _require_df_empty(graph)
        return _apply_edges(graph, synthesize_data_flow_bruteforce(graph))
    if algorithm == "both":
        _require_df_empty(graph)
        fast = worklist_df_edges(graph)
        literal = synthesize_data_flow_bruteforce(graph)
        if fast != literal:
            def describe(edge: tuple[int, int]) -> str:
                src, tgt = edge
                return (f'  {src} -> {tgt}  '
                        f'("{graph.item(src).txt}" -> "{graph.item(tgt).txt}")')
            lines = ["data-flow algorithms disagree"]
            only_fast = sorted(fast - literal)
            only_literal = sorted(literal - fast)
            if only_fast:
                lines.append("worklist only:")
                lines.extend(describe(e) for e in only_fast)
            if only_literal:
                lines.append("bruteforce only:")
                lines.extend(describe(e) for e in only_literal)
            raise GraphError("\n".join(lines))
        return _apply_edges(graph, fast)
    raise ValueError(f"unknown algorithm: {algorithm!r}")

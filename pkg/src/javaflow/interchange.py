"""Graph persistence: a canonical JSON document per graph.

Layout: ``{"format": "flowgraph-pdg", "version": 1, "nodes": [...]}`` with
one record per item, ordered by id.  Records carry id, kind, txt, the
kind-specific containment fields, and (for flow instructions) defs, uses,
cfNext, dfNext as ascending id lists.  cfPrev is never serialized; it is
re-derived on load.  Identical graphs serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InterchangeError
from .structure_graph import FLOW_KINDS, ITEM_KINDS, Item, StructureGraph

FORMAT_TAG = "flowgraph-pdg"
FORMAT_VERSION = 1

#: Statement-position kinds: what stmts/then/else/body/stmt may reference.
_STMT_KINDS = frozenset({"SimpleStmt", "Return", "Break", "Continue",
                         "Block", "If", "Loop", "Label"})

# (json field, required) per kind; fields appear in this order.
_KIND_FIELDS: dict[str, tuple[tuple[str, bool], ...]] = {
    "Method": (("params", True), ("stmts", True), ("exit", True)),
    "Block": (("stmts", True),),
    "If": (("test", True), ("then", True), ("else", False)),
    "Loop": (("test", True), ("body", True)),
    "Label": (("name", True), ("stmt", True)),
    "Break": (("target", False),),
    "Continue": (("target", False),),
    "Exit": (), "SimpleStmt": (), "Expr": (), "Return": (),
    "Var": (), "Param": (),
}

_ATTR_FOR_FIELD = {"else": "else_"}


def _attr(field: str) -> str:
    return _ATTR_FOR_FIELD.get(field, field)


def graph_to_document(graph: StructureGraph) -> dict:
    """Encode a graph as a JSON-ready document in canonical order."""
    nodes = []
    for item in graph.items:
        record: dict = {"id": item.id, "kind": item.kind, "txt": item.txt}
        for field, _required in _KIND_FIELDS[item.kind]:
            value = getattr(item, _attr(field))
            if value is None:
                continue
            record[field] = list(value) if isinstance(value, list) else value
        if item.is_flow:
            record["defs"] = sorted(item.defs)
            record["uses"] = sorted(item.uses)
            record["cfNext"] = sorted(item.cf_next)
            record["dfNext"] = sorted(item.df_next)
        nodes.append(record)
    return {"format": FORMAT_TAG, "version": FORMAT_VERSION, "nodes": nodes}


def dumps_graph(graph: StructureGraph) -> str:
    return json.dumps(graph_to_document(graph), indent=2) + "\n"


def save_graph(graph: StructureGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(graph), encoding="utf-8")


def _fail(context: str, message: str) -> InterchangeError:
    return InterchangeError(f"{context}: {message}")


def _check_id_list(values: object, count: int, context: str,
                   ordered_strictly: bool = True) -> list[int]:
    if not isinstance(values, list) or any(not isinstance(v, int) or
                                           isinstance(v, bool) for v in values):
        raise _fail(context, "expected a list of ids")
    for value in values:
        if not 0 <= value < count:
            raise _fail(context, f"references nonexistent id {value}")
    if ordered_strictly and any(a >= b for a, b in zip(values, values[1:])):
        raise _fail(context, f"id list {values} is not strictly ascending")
    return list(values)


def _check_ref(value: object, count: int, context: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise _fail(context, "expected an id")
    if not 0 <= value < count:
        raise _fail(context, f"references nonexistent id {value}")
    return value


def document_to_graph(doc: object) -> StructureGraph:
    """Decode and fully validate a document; rebuilds cf_prev."""
    if not isinstance(doc, dict):
        raise InterchangeError("document is not an object")
    if doc.get("format") != FORMAT_TAG:
        raise InterchangeError(f"unknown format tag {doc.get('format')!r} "
                               f"(expected {FORMAT_TAG!r})")
    if doc.get("version") != FORMAT_VERSION:
        raise InterchangeError(f"unknown version {doc.get('version')!r} "
                               f"(expected {FORMAT_VERSION})")
    nodes = doc.get("nodes")
    if not isinstance(nodes, list):
        raise InterchangeError("'nodes' must be a list")
    count = len(nodes)

    items: list[Item] = []
    for position, record in enumerate(nodes):
        context = f"node {position}"
        if not isinstance(record, dict):
            raise _fail(context, "not an object")
        if record.get("id") != position:
            raise _fail(context, f"ids must be dense and ordered; found "
                                 f"{record.get('id')!r} at position {position}")
        kind = record.get("kind")
        if kind not in ITEM_KINDS:
            raise _fail(context, f"unknown kind {kind!r}")
        txt = record.get("txt")
        if not isinstance(txt, str) or not txt:
            raise _fail(context, "txt must be a non-empty string")

        allowed = {"id", "kind", "txt"} | {f for f, _ in _KIND_FIELDS[kind]}
        if kind in FLOW_KINDS:
            allowed |= {"defs", "uses", "cfNext", "dfNext"}
        extras = set(record) - allowed
        if extras:
            raise _fail(context, f"unexpected fields for kind {kind}: "
                                 f"{sorted(extras)}")
        item = Item(id=position, kind=kind, txt=txt)
        for field, required in _KIND_FIELDS[kind]:
            if field not in record:
                if required:
                    raise _fail(context, f"missing required field '{field}'")
                continue
            value = record[field]
            if field in ("params", "stmts"):
                setattr(item, field, _check_id_list(value, count,
                                                    f"{context}.{field}"))
            elif field == "name":
                if not isinstance(value, str) or not value:
                    raise _fail(context, "label name must be a non-empty string")
                item.name = value
            else:
                setattr(item, _attr(field),
                        _check_ref(value, count, f"{context}.{field}"))
        if kind in FLOW_KINDS:
            for field in ("defs", "uses", "cfNext", "dfNext"):
                if field not in record:
                    raise _fail(context, f"missing required field '{field}'")
            item.defs = set(_check_id_list(record["defs"], count, f"{context}.defs"))
            item.uses = set(_check_id_list(record["uses"], count, f"{context}.uses"))
            item.cf_next = set(_check_id_list(record["cfNext"], count,
                                              f"{context}.cfNext"))
            item.df_next = set(_check_id_list(record["dfNext"], count,
                                              f"{context}.dfNext"))
        items.append(item)

    graph = StructureGraph(items=items)
    _validate_shape(graph)
    for item in items:
        for succ in item.cf_next:
            items[succ].cf_prev.add(item.id)
    return graph


def _validate_shape(graph: StructureGraph) -> None:
    items = graph.items
    methods = [it for it in items if it.kind == "Method"]
    if len(methods) != 1:
        raise InterchangeError(f"expected exactly one Method node, found "
                               f"{len(methods)}")
    exits = [it for it in items if it.kind == "Exit"]
    if len(exits) != 1:
        raise InterchangeError(f"expected exactly one Exit node, found {len(exits)}")
    graph.root = methods[0].id

    def expect_kinds(parent: Item, field: str, refs: list[int],
                     kinds: frozenset[str] | set[str]) -> None:
        for ref in refs:
            if items[ref].kind not in kinds:
                raise InterchangeError(
                    f"node {parent.id}.{field}: id {ref} has kind "
                    f"{items[ref].kind}, expected one of {sorted(kinds)}")

    parents: dict[int, int] = {}
    for item in items:
        expect_kinds(item, "params", item.params, {"Param"})
        expect_kinds(item, "stmts", item.stmts, _STMT_KINDS)
        for field, kinds in (("exit", {"Exit"}), ("test", {"Expr"}),
                             ("then", _STMT_KINDS), ("else", _STMT_KINDS),
                             ("body", _STMT_KINDS), ("stmt", _STMT_KINDS),
                             ("target", {"Label"})):
            ref = getattr(item, _attr(field))
            if ref is not None:
                expect_kinds(item, field, [ref], kinds)
        expect_kinds(item, "defs", sorted(item.defs), {"Var", "Param"})
        expect_kinds(item, "uses", sorted(item.uses), {"Var", "Param"})
        expect_kinds(item, "cfNext", sorted(item.cf_next), FLOW_KINDS)
        expect_kinds(item, "dfNext", sorted(item.df_next), FLOW_KINDS)
        for child in item.child_ids():
            if child in parents:
                raise InterchangeError(f"node {child} is contained by both "
                                       f"{parents[child]} and {item.id}")
            parents[child] = item.id

    for item in items:
        if item.kind in ("Method", "Var"):
            if item.id in parents:
                raise InterchangeError(f"node {item.id} ({item.kind}) must not "
                                       "be contained by another node")
        elif item.id not in parents:
            raise InterchangeError(f"node {item.id} ({item.kind}) is not contained "
                                   "by any node")

    # Unique parents plus a reachability sweep make containment a tree.
    reached: set[int] = set()
    stack = [graph.root]
    while stack:
        node = stack.pop()
        if node in reached:
            raise InterchangeError(f"containment cycle through node {node}")
        reached.add(node)
        stack.extend(items[node].child_ids())
    unreached = [it.id for it in items
                 if it.kind != "Var" and it.id not in reached]
    if unreached:
        raise InterchangeError(f"nodes not reachable from the Method by "
                               f"containment: {unreached}")

    for var in (it for it in items if it.kind == "Var"):
        if not any(var.id in it.defs for it in items):
            raise InterchangeError(f"node {var.id} (Var) is not referenced by "
                                   "any defs set")
    if exits[0].cf_next:
        raise InterchangeError("the Exit node must have no control-flow successors")


def load_graph(path: str | Path) -> StructureGraph:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(f"{path}: not valid JSON: {exc}") from exc
    return document_to_graph(doc)

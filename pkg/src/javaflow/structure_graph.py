"""Structure graph: the coarse-grained program model built from the AST.

One item per statement, condition expression, parameter, and variable,
plus a synthetic Exit per method.  Every item carries ``txt``, its
canonical concrete-syntax rendering.  Flow instructions additionally carry
``defs``/``uses`` (filled here) and ``cf_next``/``cf_prev``/``df_next``
(left empty; later stages fill them in place).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import GraphError
from .java_parser import AstNode, method_body, method_decl, method_params, var_reads

FLOW_KINDS = frozenset({"Method", "Exit", "SimpleStmt", "Expr", "Return",
                        "Break", "Continue"})
ITEM_KINDS = FLOW_KINDS | frozenset({"Block", "If", "Loop", "Label", "Var", "Param"})

#: Containment role fields, in serialization order.
ROLE_FIELDS = ("params", "stmts", "exit", "test", "then", "else_", "body", "stmt")


@dataclass
class Item:
    """A node of the structure graph.

    Containment roles are populated per kind: Method uses ``params``,
    ``stmts``, ``exit``; Block uses ``stmts``; If uses ``test``, ``then``,
    ``else_``; Loop uses ``test``, ``body``; Label uses ``name``, ``stmt``;
    Break/Continue use ``target`` (a non-containment Label reference).
    """

    id: int
    kind: str
    txt: str
    params: list[int] = field(default_factory=list)
    stmts: list[int] = field(default_factory=list)
    exit: int | None = None
    test: int | None = None
    then: int | None = None
    else_: int | None = None
    body: int | None = None
    stmt: int | None = None
    target: int | None = None
    name: str | None = None
    defs: set[int] = field(default_factory=set)
    uses: set[int] = field(default_factory=set)
    cf_next: set[int] = field(default_factory=set)
    cf_prev: set[int] = field(default_factory=set)
    df_next: set[int] = field(default_factory=set)
    ast: AstNode | None = field(default=None, compare=False, repr=False)

    @property
    def is_flow(self) -> bool:
        return self.kind in FLOW_KINDS

    def child_ids(self) -> list[int]:
        """Containment children in role order (target references excluded)."""
        out = list(self.params) + list(self.stmts)
        for ref in (self.exit, self.test, self.then, self.else_, self.body, self.stmt):
            if ref is not None:
                out.append(ref)
        return out


@dataclass
class StructureGraph:
    items: list[Item] = field(default_factory=list)
    root: int = 0

    def item(self, item_id: int) -> Item:
        return self.items[item_id]

    @property
    def method(self) -> Item:
        return self.items[self.root]

    @property
    def exit_id(self) -> int:
        exit_ref = self.method.exit
        assert exit_ref is not None
        return exit_ref

    def flow_items(self) -> list[Item]:
        return [it for it in self.items if it.is_flow]

    def items_by_txt(self, txt: str) -> list[Item]:
        return [it for it in self.items if it.txt == txt]

    def cf_edges(self) -> list[tuple[int, int]]:
        return sorted((it.id, succ) for it in self.items for succ in it.cf_next)

    def df_edges(self) -> list[tuple[int, int]]:
        return sorted((it.id, succ) for it in self.items for succ in it.df_next)


# ---------------------------------------------------------------------------
# Canonical concrete-syntax rendering


def _render_expr(node: AstNode) -> str:
    kind = node.kind
    if kind == "BinaryExpr":
        return (f"{_render_expr(node.children[0])} {node.attrs['op']} "
                f"{_render_expr(node.children[1])}")
    if kind == "UnaryExpr":
        operand = _render_expr(node.children[0])
        op = node.attrs["op"]
        # "- -x" must not collapse into the '--' token.
        sep = " " if op == "-" and operand.startswith("-") else ""
        return f"{op}{sep}{operand}"
    if kind == "ParenExpr":
        return f"({_render_expr(node.children[0])})"
    if kind == "VarRef":
        return node.attrs["name"]
    if kind == "IntLit":
        return str(node.attrs["value"])
    if kind == "BoolLit":
        return "true" if node.attrs["value"] else "false"
    raise ValueError(f"not an expression node: {kind}")


def render_txt(node: AstNode) -> str:
    """Canonical Java syntax of a statement, condition, parameter, or method.

    Single spaces around binary operators and '=', no space before ';' or
    '++'/'--'; statements end with ';'; condition expressions carry no
    surrounding parentheses and no semicolon.
    """
    kind = node.kind
    if kind == "MethodDecl":
        names = ", ".join(p.attrs["name"] for p in method_params(node))
        return f"{node.attrs['name']}({names})"
    if kind == "ParamDecl":
        return node.attrs["name"]
    if kind == "VarDeclStmt":
        return (f"{node.attrs['type']} {node.attrs['name']} = "
                f"{_render_expr(node.children[0])};")
    if kind == "AssignStmt":
        return f"{node.attrs['name']} = {_render_expr(node.children[0])};"
    if kind == "IncDecStmt":
        return f"{node.attrs['name']}{node.attrs['op']};"
    if kind == "ReturnStmt":
        if node.children:
            return f"return {_render_expr(node.children[0])};"
        return "return;"
    if kind == "BreakStmt":
        label = node.attrs.get("label")
        return f"break {label};" if label else "break;"
    if kind == "ContinueStmt":
        label = node.attrs.get("label")
        return f"continue {label};" if label else "continue;"
    if kind == "BlockStmt":
        return "{...}"
    if kind == "IfStmt":
        return f"if ({_render_expr(node.children[0])})"
    if kind == "WhileStmt":
        return f"while ({_render_expr(node.children[0])})"
    if kind == "LabeledStmt":
        return f"{node.attrs['label']}:"
    return _render_expr(node)


def _stmt_lines(stmt: AstNode, indent: int) -> list[str]:
    pad = "    " * indent
    kind = stmt.kind
    if kind == "BlockStmt":
        lines = [pad + "{"]
        for child in stmt.children:
            lines.extend(_stmt_lines(child, indent + 1))
        lines.append(pad + "}")
        return lines
    if kind == "IfStmt":
        lines = [pad + render_txt(stmt)]
        lines.extend(_stmt_lines(stmt.children[1], indent + 1))
        if len(stmt.children) == 3:
            lines.append(pad + "else")
            lines.extend(_stmt_lines(stmt.children[2], indent + 1))
        return lines
    if kind == "WhileStmt":
        lines = [pad + render_txt(stmt)]
        lines.extend(_stmt_lines(stmt.children[1], indent + 1))
        return lines
    if kind == "LabeledStmt":
        return [pad + render_txt(stmt)] + _stmt_lines(stmt.children[0], indent)
    return [pad + render_txt(stmt)]


def render_source(unit: AstNode) -> str:
    """Render a whole compilation unit back to parseable source text."""
    cls = unit.children[0]
    method = cls.children[0]
    params = ", ".join(f"{p.attrs['type']} {p.attrs['name']}"
                       for p in method_params(method))
    lines = [f"class {cls.attrs['name']} {{",
             f"    {method.attrs['return_type']} {method.attrs['name']}({params}) {{"]
    for stmt in method_body(method).children:
        lines.extend(_stmt_lines(stmt, 2))
    lines.extend(["    }", "}"])
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# def/use synthesis


def compute_def_use(item: Item, scope: Mapping[str, int]) -> tuple[set[int], set[int]]:
    """The variables a flow instruction writes and reads, as item ids.

    ``scope`` maps every name visible at the item (including one declared
    by the item itself) to its Var/Param id.
    """
    kind = item.kind
    if kind == "Method":
        return set(item.params), set()
    if kind in ("Exit", "Break", "Continue"):
        return set(), set()
    ast = item.ast
    assert ast is not None, "def/use needs the originating AST node"
    if kind == "Return":
        reads = var_reads(ast.children[0]) if ast.children else []
        return set(), {scope[name] for name in reads}
    if kind == "Expr":
        return set(), {scope[name] for name in var_reads(ast)}
    if kind == "SimpleStmt":
        if ast.kind == "VarDeclStmt":
            return ({scope[ast.attrs["name"]]},
                    {scope[name] for name in var_reads(ast.children[0])})
        if ast.kind == "AssignStmt":
            return ({scope[ast.attrs["name"]]},
                    {scope[name] for name in var_reads(ast.children[0])})
        if ast.kind == "IncDecStmt":
            target = scope[ast.attrs["name"]]
            return {target}, {target}
    raise ValueError(f"not a flow instruction: {kind}")


# ---------------------------------------------------------------------------
# AST -> structure graph


class _Builder:
    def __init__(self) -> None:
        self.graph = StructureGraph()
        self.scopes: list[dict[str, int]] = []
        self.labels: list[tuple[str, int]] = []
        self.loops: list[int] = []

    def new_item(self, kind: str, txt: str, ast: AstNode | None = None,
                 name: str | None = None) -> Item:
        item = Item(id=len(self.graph.items), kind=kind, txt=txt, ast=ast, name=name)
        self.graph.items.append(item)
        return item

    def flat_scope(self) -> dict[str, int]:
        merged: dict[str, int] = {}
        for frame in self.scopes:
            merged.update(frame)
        return merged

    def set_def_use(self, item: Item) -> None:
        item.defs, item.uses = compute_def_use(item, self.flat_scope())

    def build(self, unit: AstNode) -> StructureGraph:
        method_ast = method_decl(unit)
        method = self.new_item("Method", render_txt(method_ast), ast=method_ast)
        self.scopes.append({})
        for param_ast in method_params(method_ast):
            param = self.new_item("Param", param_ast.attrs["name"], ast=param_ast)
            self.scopes[-1][param_ast.attrs["name"]] = param.id
            method.params.append(param.id)
        self.set_def_use(method)
        for stmt_ast in method_body(method_ast).children:
            method.stmts.append(self.build_stmt(stmt_ast))
        method.exit = self.new_item("Exit", "Exit").id
        self.graph.root = method.id
        return self.graph

    def build_stmt(self, ast: AstNode) -> int:
        kind = ast.kind
        if kind in ("VarDeclStmt", "AssignStmt", "IncDecStmt"):
            item = self.new_item("SimpleStmt", render_txt(ast), ast=ast)
            if kind == "VarDeclStmt":
                var = self.new_item("Var", ast.attrs["name"], ast=ast)
                self.scopes[-1][ast.attrs["name"]] = var.id
            self.set_def_use(item)
            return item.id
        if kind == "ReturnStmt":
            item = self.new_item("Return", render_txt(ast), ast=ast)
            self.set_def_use(item)
            return item.id
        if kind == "BlockStmt":
            item = self.new_item("Block", render_txt(ast), ast=ast)
            self.scopes.append({})
            for child in ast.children:
                item.stmts.append(self.build_stmt(child))
            self.scopes.pop()
            return item.id
        if kind == "IfStmt":
            item = self.new_item("If", render_txt(ast), ast=ast)
            test = self.new_item("Expr", _render_expr(ast.children[0]),
                                 ast=ast.children[0])
            self.set_def_use(test)
            item.test = test.id
            item.then = self.build_stmt(ast.children[1])
            if len(ast.children) == 3:
                item.else_ = self.build_stmt(ast.children[2])
            return item.id
        if kind == "WhileStmt":
            item = self.new_item("Loop", render_txt(ast), ast=ast)
            test = self.new_item("Expr", _render_expr(ast.children[0]),
                                 ast=ast.children[0])
            self.set_def_use(test)
            item.test = test.id
            self.loops.append(item.id)
            item.body = self.build_stmt(ast.children[1])
            self.loops.pop()
            return item.id
        if kind == "LabeledStmt":
            item = self.new_item("Label", render_txt(ast), ast=ast,
                                 name=ast.attrs["label"])
            self.labels.append((ast.attrs["label"], item.id))
            item.stmt = self.build_stmt(ast.children[0])
            self.labels.pop()
            return item.id
        if kind in ("BreakStmt", "ContinueStmt"):
            item_kind = "Break" if kind == "BreakStmt" else "Continue"
            item = self.new_item(item_kind, render_txt(ast), ast=ast)
            label = ast.attrs.get("label")
            if label is not None:
                for name, label_id in reversed(self.labels):
                    if name == label:
                        item.target = label_id
                        break
                else:
                    word = "break" if item_kind == "Break" else "continue"
                    raise GraphError(f"unknown label '{label}' on '{word}' at line "
                                     f"{ast.span.start_line}")
            elif not self.loops:
                word = "break" if item_kind == "Break" else "continue"
                raise GraphError(f"'{word}' outside any loop at line "
                                 f"{ast.span.start_line}")
            self.set_def_use(item)
            return item.id
        raise ValueError(f"unexpected statement kind: {kind}")


def build_structure_graph(unit: AstNode) -> StructureGraph:
    """Transform a parsed compilation unit into its structure graph.

    Item ids are dense, assigned in depth-first construction order, with
    the Method first and its Exit last; rebuilding from the same source
    yields an identical graph.
    """
    return _Builder().build(unit)


def iter_containment(graph: StructureGraph) -> Iterable[tuple[int, str, int, int]]:
    """Yield (parent id, role, index, child id) for every containment edge."""
    for item in graph.items:
        for index, child in enumerate(item.params):
            yield item.id, "params", index, child
        for index, child in enumerate(item.stmts):
            yield item.id, "stmts", index, child
        for role in ("exit", "test", "then", "else_", "body", "stmt"):
            child = getattr(item, role)
            if child is not None:
                yield item.id, role, 0, child

"""Tokenizer and recursive-descent parser for the supported Java subset.

The subset: one compilation unit holding exactly one class with exactly one
method.  Method bodies may contain local variable declarations (with an
initializer), assignments, ``i++;``/``i--;``, ``return``, blocks,
``if``/``else``, ``while``, labeled statements, and ``break``/``continue``
with or without a target label.  Expressions use ``+ - * /`` over ints,
comparisons, ``&& || !``, and the literals.

Grammar (statements):

    unit      := 'class' IDENT '{' method '}'
    method    := ('int'|'boolean'|'void') IDENT '(' params? ')' block
    params    := type IDENT (',' type IDENT)*
    block     := '{' stmt* '}'
    stmt      := type IDENT '=' expr ';'
               | IDENT '=' expr ';' | IDENT ('++'|'--') ';'
               | 'return' expr? ';' | block
               | 'if' '(' expr ')' body ('else' body)?
               | 'while' '(' expr ')' body
               | IDENT ':' body
               | 'break' IDENT? ';' | 'continue' IDENT? ';'
    body      := stmt other than a variable declaration

Expressions follow standard Java precedence for the admitted operators:
``||`` < ``&&`` < ``== !=`` < ``< > <= >=`` < ``+ -`` < ``* /`` < unary.
Recognizable Java constructs outside the subset (``for``, ``switch``, calls,
field access, compound assignment, ...) raise :class:`SubsetError` rather
than a generic syntax error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BindingError, LexError, ParseError, SubsetError

SUBSET_KEYWORDS = frozenset({
    "class", "int", "boolean", "void", "if", "else", "while",
    "return", "break", "continue",
})

# Reserved words recognized only so that programs using them get a clear
# "outside the supported subset" diagnostic instead of a puzzling one.
RESERVED_KEYWORDS = frozenset({
    "abstract", "assert", "byte", "case", "catch", "char", "const", "default",
    "do", "double", "enum", "extends", "final", "finally", "float", "for",
    "goto", "implements", "import", "instanceof", "interface", "long",
    "native", "new", "null", "package", "private", "protected", "public",
    "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "try", "volatile",
})

KEYWORDS = SUBSET_KEYWORDS | RESERVED_KEYWORDS

# Maximal-munch operator table.  Operators outside the subset are lexed so
# the parser can name them in errors.
_MULTI_OPS = ("++", "--", "<=", ">=", "==", "!=", "&&", "||",
              "+=", "-=", "*=", "/=", "%=")
_SINGLE_OPS = frozenset("+-*/<>=!%&|^~?")
_PUNCT = frozenset("{}();,:.[]")

BINARY_OPS = frozenset({"+", "-", "*", "/", "<", ">", "<=", ">=",
                        "==", "!=", "&&", "||"})
UNARY_OPS = frozenset({"!", "-"})


@dataclass(frozen=True)
class Token:
    kind: str    # keyword | identifier | int-literal | boolean-literal | punctuation | operator
    lexeme: str
    line: int    # 1-based
    column: int  # 1-based

    @property
    def end_column(self) -> int:
        return self.column + len(self.lexeme)


def tokenize(source: str) -> list[Token]:
    """Split source text into tokens, skipping whitespace and comments."""
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(source)

    def bump(text: str) -> None:
        nonlocal line, col
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            bump(ch)
            i += 1
            continue
        if source.startswith("//", i):
            end = source.find("\n", i)
            end = n if end < 0 else end
            bump(source[i:end])
            i = end
            continue
        if source.startswith("/*", i):
            end = source.find("*/", i + 2)
            if end < 0:
                raise LexError("unterminated block comment", line, col)
            bump(source[i:end + 2])
            i = end + 2
            continue
        if ch.isalpha() or ch in "_$":
            j = i + 1
            while j < n and (source[j].isalnum() or source[j] in "_$"):
                j += 1
            word = source[i:j]
            if word in ("true", "false"):
                kind = "boolean-literal"
            elif word in KEYWORDS:
                kind = "keyword"
            else:
                kind = "identifier"
            tokens.append(Token(kind, word, line, col))
            bump(word)
            i = j
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and source[j].isdigit():
                j += 1
            if j < n and (source[j].isalpha() or source[j] in "_$."):
                raise LexError(f"malformed number starting with '{source[i:j + 1]}'", line, col)
            word = source[i:j]
            tokens.append(Token("int-literal", word, line, col))
            bump(word)
            i = j
            continue
        matched = next((op for op in _MULTI_OPS if source.startswith(op, i)), None)
        if matched is not None:
            tokens.append(Token("operator", matched, line, col))
            bump(matched)
            i += len(matched)
            continue
        if ch in _SINGLE_OPS:
            tokens.append(Token("operator", ch, line, col))
            bump(ch)
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token("punctuation", ch, line, col))
            bump(ch)
            i += 1
            continue
        raise LexError(f"unknown character {ch!r}", line, col)
    return tokens


@dataclass(frozen=True)
class Span:
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def contains(self, other: "Span") -> bool:
        return ((self.start_line, self.start_col) <= (other.start_line, other.start_col)
                and (other.end_line, other.end_col) <= (self.end_line, self.end_col))


_EMPTY_SPAN = Span(1, 1, 1, 1)


@dataclass
class AstNode:
    """Generic syntax-tree node; role layout of ``children`` depends on ``kind``.

    CompilationUnit: [ClassDecl] / ClassDecl: [MethodDecl] /
    MethodDecl: params + [body BlockStmt] / VarDeclStmt, AssignStmt: [expr] /
    ReturnStmt: [] or [expr] / IfStmt: [cond, then] or [cond, then, else] /
    WhileStmt: [cond, body] / LabeledStmt: [stmt] / BinaryExpr: [lhs, rhs] /
    UnaryExpr, ParenExpr: [operand].  Scalars live in ``attrs``.
    """

    kind: str
    children: list["AstNode"] = field(default_factory=list)
    attrs: dict = field(default_factory=dict)
    span: Span = _EMPTY_SPAN


def walk(node: AstNode) -> Iterator[AstNode]:
    """Yield ``node`` and all descendants, depth first."""
    yield node
    for child in node.children:
        yield from walk(child)


def ast_equal(a: AstNode, b: AstNode) -> bool:
    """Structural equality: kinds, attrs, and child structure; spans ignored."""
    if a.kind != b.kind or a.attrs != b.attrs or len(a.children) != len(b.children):
        return False
    return all(ast_equal(x, y) for x, y in zip(a.children, b.children))


def var_reads(expr: AstNode) -> list[str]:
    """Names of all variable references inside an expression, in order."""
    return [n.attrs["name"] for n in walk(expr) if n.kind == "VarRef"]


def method_decl(unit: AstNode) -> AstNode:
    """The single MethodDecl of a CompilationUnit."""
    return unit.children[0].children[0]


def method_params(method: AstNode) -> list[AstNode]:
    return method.children[:-1]


def method_body(method: AstNode) -> AstNode:
    return method.children[-1]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token helpers ----------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def _here(self) -> tuple[int, int]:
        if self.pos < len(self.tokens):
            t = self.tokens[self.pos]
            return t.line, t.column
        if self.tokens:
            t = self.tokens[-1]
            return t.line, t.end_column
        return 1, 1

    def fail(self, message: str, subset: bool = False) -> ParseError:
        line, col = self._here()
        cls = SubsetError if subset else ParseError
        return cls(message, line, col)

    def _describe(self) -> str:
        t = self.peek()
        return "end of input" if t is None else f"'{t.lexeme}'"

    def advance(self) -> Token:
        if self.at_end():
            raise self.fail("unexpected end of input")
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, lexeme: str | None = None) -> Token:
        t = self.peek()
        if t is None or t.kind != kind or (lexeme is not None and t.lexeme != lexeme):
            wanted = f"'{lexeme}'" if lexeme is not None else kind
            raise self.fail(f"expected {wanted}, found {self._describe()}")
        return self.advance()

    def match(self, kind: str, lexeme: str | None = None) -> bool:
        t = self.peek()
        return (t is not None and t.kind == kind
                and (lexeme is None or t.lexeme == lexeme))

    def _span(self, start: Token, end: Token) -> Span:
        return Span(start.line, start.column, end.line, end.column + len(end.lexeme))

    def _prev(self) -> Token:
        return self.tokens[self.pos - 1]

    # -- declarations ------------------------------------------------------

    def parse_unit(self) -> AstNode:
        t = self.peek()
        if t is not None and t.kind == "keyword" and t.lexeme in RESERVED_KEYWORDS:
            raise self.fail(f"'{t.lexeme}' is outside the supported subset "
                            "(a unit is a single unmodified class)", subset=True)
        start = self.expect("keyword", "class")
        name = self.expect("identifier").lexeme
        self.expect("punctuation", "{")
        method = self.parse_method()
        if not self.match("punctuation", "}"):
            raise self.fail("exactly one method per class is supported", subset=True)
        end = self.advance()
        if not self.at_end():
            if self.match("keyword", "class"):
                raise self.fail("exactly one class per compilation unit is supported",
                                subset=True)
            raise self.fail(f"expected end of input, found {self._describe()}")
        cls = AstNode("ClassDecl", [method], {"name": name}, self._span(start, end))
        return AstNode("CompilationUnit", [cls], {}, self._span(start, end))

    def parse_method(self) -> AstNode:
        t = self.peek()
        if t is not None and t.kind == "keyword" and t.lexeme in RESERVED_KEYWORDS:
            raise self.fail(f"'{t.lexeme}' is outside the supported subset "
                            "(methods carry no modifiers)", subset=True)
        if not (self.match("keyword", "int") or self.match("keyword", "boolean")
                or self.match("keyword", "void")):
            raise self.fail(f"expected a return type ('int', 'boolean' or 'void'), "
                            f"found {self._describe()}")
        start = self.advance()
        ret_type = start.lexeme
        name = self.expect("identifier").lexeme
        if self.match("operator", "=") or self.match("punctuation", ";"):
            raise self.fail("field declarations are outside the supported subset",
                            subset=True)
        self.expect("punctuation", "(")
        params: list[AstNode] = []
        if not self.match("punctuation", ")"):
            while True:
                params.append(self.parse_param())
                if self.match("punctuation", ","):
                    self.advance()
                    continue
                break
        self.expect("punctuation", ")")
        body = self.parse_block()
        span = self._span(start, self._prev())
        return AstNode("MethodDecl", params + [body],
                       {"name": name, "return_type": ret_type}, span)

    def parse_param(self) -> AstNode:
        if not (self.match("keyword", "int") or self.match("keyword", "boolean")):
            raise self.fail(f"expected a parameter type ('int' or 'boolean'), "
                            f"found {self._describe()}")
        start = self.advance()
        name_tok = self.expect("identifier")
        return AstNode("ParamDecl", [], {"name": name_tok.lexeme, "type": start.lexeme},
                       self._span(start, name_tok))

    # -- statements --------------------------------------------------------

    def parse_block(self) -> AstNode:
        start = self.expect("punctuation", "{")
        stmts: list[AstNode] = []
        while not self.match("punctuation", "}"):
            if self.at_end():
                raise self.fail("expected '}'")
            stmts.append(self.parse_statement())
        end = self.advance()
        return AstNode("BlockStmt", stmts, {}, self._span(start, end))

    _SUBSET_STMT_KEYWORDS = {
        "for": "'for' loops", "do": "'do' loops", "switch": "'switch' statements",
        "try": "'try' statements", "throw": "'throw' statements",
        "synchronized": "'synchronized' blocks", "assert": "'assert' statements",
        "new": "object creation", "this": "'this' references",
        "super": "'super' references", "class": "nested classes",
    }

    def parse_statement(self, allow_decl: bool = True) -> AstNode:
        t = self.peek()
        if t is None:
            raise self.fail("expected a statement")
        if t.kind == "punctuation":
            if t.lexeme == "{":
                return self.parse_block()
            if t.lexeme == ";":
                raise self.fail("empty statements are outside the supported subset",
                                subset=True)
            raise self.fail(f"expected a statement, found {self._describe()}")
        if t.kind == "keyword":
            if t.lexeme in ("int", "boolean"):
                if not allow_decl:
                    raise self.fail("a variable declaration cannot be the body of a "
                                    "conditional, loop, or label; wrap it in a block")
                return self.parse_var_decl()
            if t.lexeme == "return":
                return self.parse_return()
            if t.lexeme == "if":
                return self.parse_if()
            if t.lexeme == "while":
                return self.parse_while()
            if t.lexeme in ("break", "continue"):
                return self.parse_jump()
            if t.lexeme == "else":
                raise self.fail("'else' without a matching 'if'")
            hint = self._SUBSET_STMT_KEYWORDS.get(t.lexeme, f"'{t.lexeme}'")
            raise self.fail(f"{hint} are outside the supported subset", subset=True)
        if t.kind == "identifier":
            nxt = self.peek(1)
            if nxt is not None and nxt.kind == "punctuation" and nxt.lexeme == ":":
                start = self.advance()
                self.advance()  # ':'
                stmt = self.parse_statement(allow_decl=False)
                return AstNode("LabeledStmt", [stmt], {"label": start.lexeme},
                               self._span(start, self._prev()))
            if nxt is not None and nxt.kind == "operator" and nxt.lexeme == "=":
                return self.parse_assign()
            if nxt is not None and nxt.kind == "operator" and nxt.lexeme in ("++", "--"):
                return self.parse_incdec()
            if nxt is not None and nxt.kind == "punctuation" and nxt.lexeme == "(":
                raise self.fail("method calls are outside the supported subset",
                                subset=True)
            if nxt is not None and nxt.kind == "punctuation" and nxt.lexeme == ".":
                raise self.fail("field and method access are outside the supported subset",
                                subset=True)
            if nxt is not None and nxt.kind == "operator" and nxt.lexeme in (
                    "+=", "-=", "*=", "/=", "%="):
                raise self.fail("compound assignment is outside the supported subset",
                                subset=True)
            raise self.fail("expected '=', '++', '--' or ':' after identifier "
                            f"'{t.lexeme}'")
        raise self.fail(f"expected a statement, found {self._describe()}")

    def parse_var_decl(self) -> AstNode:
        start = self.advance()
        name = self.expect("identifier").lexeme
        if self.match("punctuation", ","):
            raise self.fail("one declarator per declaration statement is supported",
                            subset=True)
        if self.match("punctuation", ";"):
            raise self.fail("expected '=' (declarations must carry an initializer)")
        self.expect("operator", "=")
        init = self.parse_expression()
        if self.match("punctuation", ","):
            raise self.fail("one declarator per declaration statement is supported",
                            subset=True)
        end = self.expect("punctuation", ";")
        return AstNode("VarDeclStmt", [init], {"name": name, "type": start.lexeme},
                       self._span(start, end))

    def parse_assign(self) -> AstNode:
        start = self.advance()
        self.advance()  # '='
        value = self.parse_expression()
        end = self.expect("punctuation", ";")
        return AstNode("AssignStmt", [value], {"name": start.lexeme},
                       self._span(start, end))

    def parse_incdec(self) -> AstNode:
        start = self.advance()
        op = self.advance().lexeme
        end = self.expect("punctuation", ";")
        return AstNode("IncDecStmt", [], {"name": start.lexeme, "op": op},
                       self._span(start, end))

    def parse_return(self) -> AstNode:
        start = self.advance()
        children: list[AstNode] = []
        if not self.match("punctuation", ";"):
            children.append(self.parse_expression())
        end = self.expect("punctuation", ";")
        return AstNode("ReturnStmt", children, {}, self._span(start, end))

    def parse_if(self) -> AstNode:
        start = self.advance()
        self.expect("punctuation", "(")
        cond = self.parse_expression()
        self.expect("punctuation", ")")
        then = self.parse_statement(allow_decl=False)
        children = [cond, then]
        if self.match("keyword", "else"):
            self.advance()
            children.append(self.parse_statement(allow_decl=False))
        return AstNode("IfStmt", children, {}, self._span(start, self._prev()))

    def parse_while(self) -> AstNode:
        start = self.advance()
        self.expect("punctuation", "(")
        cond = self.parse_expression()
        self.expect("punctuation", ")")
        body = self.parse_statement(allow_decl=False)
        return AstNode("WhileStmt", [cond, body], {}, self._span(start, self._prev()))

    def parse_jump(self) -> AstNode:
        start = self.advance()
        kind = "BreakStmt" if start.lexeme == "break" else "ContinueStmt"
        label = None
        if self.match("identifier"):
            label = self.advance().lexeme
        end = self.expect("punctuation", ";")
        return AstNode(kind, [], {"label": label}, self._span(start, end))

    # -- expressions ---------------------------------------------------------

    _JAVA_ONLY_OPS = frozenset({"%", "&", "|", "^", "~", "?", "<<", ">>",
                                "+=", "-=", "*=", "/=", "%="})

    def parse_expression(self) -> AstNode:
        expr = self.parse_or()
        t = self.peek()
        if t is not None and t.kind == "operator":
            if t.lexeme == "=":
                raise self.fail("assignment cannot appear inside an expression",
                                subset=True)
            if t.lexeme in self._JAVA_ONLY_OPS:
                raise self.fail(f"operator '{t.lexeme}' is outside the supported subset",
                                subset=True)
        return expr

    def _binary_chain(self, sub, ops: tuple[str, ...]) -> AstNode:
        left = sub()
        while True:
            t = self.peek()
            if t is None or t.kind != "operator" or t.lexeme not in ops:
                return left
            self.advance()
            right = sub()
            span = Span(left.span.start_line, left.span.start_col,
                        right.span.end_line, right.span.end_col)
            left = AstNode("BinaryExpr", [left, right], {"op": t.lexeme}, span)

    def parse_or(self) -> AstNode:
        return self._binary_chain(self.parse_and, ("||",))

    def parse_and(self) -> AstNode:
        return self._binary_chain(self.parse_equality, ("&&",))

    def parse_equality(self) -> AstNode:
        return self._binary_chain(self.parse_relational, ("==", "!="))

    def parse_relational(self) -> AstNode:
        return self._binary_chain(self.parse_additive, ("<", ">", "<=", ">="))

    def parse_additive(self) -> AstNode:
        return self._binary_chain(self.parse_multiplicative, ("+", "-"))

    def parse_multiplicative(self) -> AstNode:
        return self._binary_chain(self.parse_unary, ("*", "/"))

    def parse_unary(self) -> AstNode:
        t = self.peek()
        if t is not None and t.kind == "operator":
            if t.lexeme in ("++", "--"):
                raise self.fail("prefix increment/decrement is outside the supported "
                                "subset", subset=True)
            if t.lexeme in UNARY_OPS:
                start = self.advance()
                operand = self.parse_unary()
                span = Span(start.line, start.column,
                            operand.span.end_line, operand.span.end_col)
                return AstNode("UnaryExpr", [operand], {"op": start.lexeme}, span)
            if t.lexeme in self._JAVA_ONLY_OPS:
                raise self.fail(f"operator '{t.lexeme}' is outside the supported subset",
                                subset=True)
        return self.parse_primary()

    def parse_primary(self) -> AstNode:
        t = self.peek()
        if t is None:
            raise self.fail("expected an expression")
        if t.kind == "int-literal":
            self.advance()
            return AstNode("IntLit", [], {"value": int(t.lexeme)}, self._span(t, t))
        if t.kind == "boolean-literal":
            self.advance()
            return AstNode("BoolLit", [], {"value": t.lexeme == "true"}, self._span(t, t))
        if t.kind == "identifier":
            nxt = self.peek(1)
            if nxt is not None and nxt.kind == "punctuation" and nxt.lexeme == "(":
                raise self.fail("method calls are outside the supported subset",
                                subset=True)
            if nxt is not None and nxt.kind == "punctuation" and nxt.lexeme in (".", "["):
                raise self.fail("field and array access are outside the supported subset",
                                subset=True)
            self.advance()
            return AstNode("VarRef", [], {"name": t.lexeme}, self._span(t, t))
        if t.kind == "punctuation" and t.lexeme == "(":
            start = self.advance()
            inner = self.parse_expression()
            end = self.expect("punctuation", ")")
            return AstNode("ParenExpr", [inner], {}, self._span(start, end))
        raise self.fail(f"expected an expression, found {self._describe()}")


def _check_bindings(unit: AstNode) -> None:
    """Verify every variable reference is bound and no name is redeclared
    while still in scope."""
    method = method_decl(unit)
    scopes: list[dict[str, AstNode]] = [{}]

    def declare(name: str, node: AstNode) -> None:
        for frame in scopes:
            if name in frame:
                raise BindingError(f"duplicate variable '{name}' in overlapping scope",
                                   node.span.start_line, node.span.start_col)
        scopes[-1][name] = node

    def require(name: str, node: AstNode) -> None:
        if not any(name in frame for frame in scopes):
            raise BindingError(f"unbound variable '{name}'",
                               node.span.start_line, node.span.start_col)

    def visit_expr(expr: AstNode) -> None:
        for node in walk(expr):
            if node.kind == "VarRef":
                require(node.attrs["name"], node)

    def visit_stmt(stmt: AstNode) -> None:
        kind = stmt.kind
        if kind == "VarDeclStmt":
            visit_expr(stmt.children[0])
            declare(stmt.attrs["name"], stmt)
        elif kind == "AssignStmt":
            require(stmt.attrs["name"], stmt)
            visit_expr(stmt.children[0])
        elif kind == "IncDecStmt":
            require(stmt.attrs["name"], stmt)
        elif kind == "ReturnStmt":
            for child in stmt.children:
                visit_expr(child)
        elif kind == "BlockStmt":
            scopes.append({})
            for child in stmt.children:
                visit_stmt(child)
            scopes.pop()
        elif kind == "IfStmt":
            visit_expr(stmt.children[0])
            visit_stmt(stmt.children[1])
            if len(stmt.children) == 3:
                visit_stmt(stmt.children[2])
        elif kind == "WhileStmt":
            visit_expr(stmt.children[0])
            visit_stmt(stmt.children[1])
        elif kind == "LabeledStmt":
            visit_stmt(stmt.children[0])
        # Break/Continue reference labels, not variables.

    for param in method_params(method):
        declare(param.attrs["name"], param)
    for stmt in method_body(method).children:
        visit_stmt(stmt)


def parse_compilation_unit(tokens: list[Token]) -> AstNode:
    """Parse a token sequence into a CompilationUnit and check bindings."""
    unit = _Parser(tokens).parse_unit()
    _check_bindings(unit)
    return unit


def parse_source(source: str) -> AstNode:
    """Tokenize and parse source text in one step."""
    return parse_compilation_unit(tokenize(source))

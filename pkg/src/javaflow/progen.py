"""Seeded random generator for subset programs.

Produces parseable, binding-valid source text exercising the whole
statement repertoire: declarations, assignments, ``++``/``--``, returns,
nested blocks (possibly empty), if/else, while (possibly labeled or with
an empty body), and break/continue with and without labels, including
dead statements after jumps.  Used as the fuzzing corpus for the
worklist-versus-bruteforce equivalence checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

_NAME_POOL = "abcdefghij"


@dataclass(frozen=True)
class GenLimits:
    max_stmts: int = 15
    max_depth: int = 3
    max_vars: int = 5


class _Gen:
    def __init__(self, rng: random.Random, limits: GenLimits):
        self.rng = rng
        self.limits = limits
        self.stmts_left = limits.max_stmts
        self.scopes: list[list[tuple[str, str]]] = []
        self.names_used = 0
        self.labels: list[tuple[str, bool]] = []  # (name, wraps a loop)
        self.labels_used = 0
        self.loop_depth = 0
        self.return_type = "void"

    # -- scope helpers -----------------------------------------------------

    def visible(self, var_type: str) -> list[str]:
        return [name for frame in self.scopes
                for name, t in frame if t == var_type]

    def can_declare(self) -> bool:
        return self.names_used < min(self.limits.max_vars, len(_NAME_POOL))

    def declare(self, var_type: str) -> str:
        name = _NAME_POOL[self.names_used]
        self.names_used += 1
        self.scopes[-1].append((name, var_type))
        return name

    # -- expressions ---------------------------------------------------------

    def int_expr(self, depth: int = 0) -> str:
        ints = self.visible("int")
        choices = ["lit"] * 3 + (["var"] * 4 if ints else [])
        if depth < 2:
            choices += ["bin"] * 3 + ["paren", "neg"]
        pick = self.rng.choice(choices)
        if pick == "lit":
            return str(self.rng.randrange(0, 100))
        if pick == "var":
            return self.rng.choice(ints)
        if pick == "paren":
            return f"({self.int_expr(depth + 1)})"
        if pick == "neg":
            operand = self.int_expr(depth + 1)
            if operand.startswith("-"):
                operand = f"({operand})"
            return f"-{operand}"
        op = self.rng.choice("+-*/")
        return f"{self.int_expr(depth + 1)} {op} {self.int_expr(depth + 1)}"

    def bool_expr(self, depth: int = 0) -> str:
        bools = self.visible("boolean")
        choices = ["cmp"] * 5 + ["lit"]
        if bools:
            choices += ["var"] * 2
        if depth < 2:
            choices += ["not", "and", "or"]
        pick = self.rng.choice(choices)
        if pick == "cmp":
            op = self.rng.choice(["<", ">", "<=", ">=", "==", "!="])
            return f"{self.int_expr(depth + 1)} {op} {self.int_expr(depth + 1)}"
        if pick == "lit":
            return self.rng.choice(["true", "false"])
        if pick == "var":
            return self.rng.choice(bools)
        if pick == "not":
            operand = self.bool_expr(depth + 1)
            if " " in operand:
                operand = f"({operand})"
            return f"!{operand}"
        op = "&&" if pick == "and" else "||"
        return f"{self.bool_expr(depth + 1)} {op} {self.bool_expr(depth + 1)}"

    def expr_of(self, var_type: str) -> str:
        return self.int_expr() if var_type == "int" else self.bool_expr()

    # -- statements ----------------------------------------------------------

    def return_stmt(self) -> str:
        if self.return_type == "void":
            return "return;"
        return f"return {self.expr_of(self.return_type)};"

    def statement(self, depth: int, allow_decl: bool = True) -> list[str]:
        self.stmts_left -= 1
        ints = self.visible("int")
        bools = self.visible("boolean")
        choices: list[str] = []
        if allow_decl and self.can_declare():
            choices += ["decl"] * 5
        if ints or bools:
            choices += ["assign"] * 4
        if ints:
            choices += ["incdec"] * 4
        choices += ["return"]
        if depth < self.limits.max_depth and self.stmts_left >= 1:
            choices += ["if"] * 3 + ["while"] * 3 + ["block"]
            if allow_decl:
                choices += ["labeled_block"]
        if self.loop_depth > 0:
            choices += ["break", "continue"]
        if not choices:
            choices = ["return"]
        pick = self.rng.choice(choices)

        if pick == "decl":
            var_type = "int" if self.rng.random() < 0.8 else "boolean"
            value = self.expr_of(var_type)
            name = self.declare(var_type)
            return [f"{var_type} {name} = {value};"]
        if pick == "assign":
            pool = ([("int", n) for n in ints] + [("boolean", n) for n in bools])
            var_type, name = self.rng.choice(pool)
            return [f"{name} = {self.expr_of(var_type)};"]
        if pick == "incdec":
            name = self.rng.choice(ints)
            return [f"{name}{self.rng.choice(['++', '--'])};"]
        if pick == "return":
            return [self.return_stmt()]
        if pick == "block":
            return self.block(depth + 1)
        if pick == "labeled_block":
            label = f"l{self.labels_used}"
            self.labels_used += 1
            self.labels.append((label, False))
            lines = self.block(depth + 1)
            self.labels.pop()
            return [f"{label}:"] + lines
        if pick == "if":
            lines = [f"if ({self.bool_expr()})"]
            lines += self.body(depth + 1)
            if self.rng.random() < 0.4 and self.stmts_left > 0:
                lines.append("else")
                lines += self.body(depth + 1)
            return lines
        if pick == "while":
            label = None
            if self.rng.random() < 0.35:
                label = f"l{self.labels_used}"
                self.labels_used += 1
                self.labels.append((label, True))
            lines = [f"while ({self.bool_expr()})"]
            self.loop_depth += 1
            lines += self.block(depth + 1, allow_empty=True)
            self.loop_depth -= 1
            if label is not None:
                self.labels.pop()
                lines[0] = f"{label}: {lines[0]}"
            return lines
        if pick == "break":
            if self.labels and self.rng.random() < 0.4:
                return [f"break {self.rng.choice([n for n, _ in self.labels])};"]
            return ["break;"]
        # continue: a labeled target must wrap a loop
        loop_labels = [name for name, wraps_loop in self.labels if wraps_loop]
        if loop_labels and self.rng.random() < 0.4:
            return [f"continue {self.rng.choice(loop_labels)};"]
        return ["continue;"]

    def body(self, depth: int) -> list[str]:
        """An if/else arm: usually a block, sometimes a bare statement."""
        if self.rng.random() < 0.8 or self.stmts_left < 1:
            return self.block(depth)
        return ["    " + line for line in self.statement(depth, allow_decl=False)]

    def block(self, depth: int, allow_empty: bool = False) -> list[str]:
        lines = ["{"]
        self.scopes.append([])
        minimum = 0 if allow_empty and self.rng.random() < 0.2 else 1
        count = 0
        while self.stmts_left > 0 and (count < minimum or
                                       self.rng.random() < 0.6):
            lines += ["    " + line for line in self.statement(depth)]
            count += 1
            if count >= 6:
                break
        self.scopes.pop()
        lines.append("}")
        return lines

    # -- whole program -------------------------------------------------------

    def program(self) -> str:
        self.return_type = self.rng.choice(["int", "int", "void", "boolean"])
        self.scopes.append([])
        n_params = self.rng.choice([0, 1, 1, 2])
        params = []
        for _ in range(min(n_params, self.limits.max_vars)):
            var_type = "int" if self.rng.random() < 0.85 else "boolean"
            params.append(f"{var_type} {self.declare(var_type)}")
        body: list[str] = []
        while self.stmts_left > 1 and (not body or self.rng.random() < 0.75):
            body += self.statement(0)
        if self.return_type != "void":
            self.stmts_left -= 1
            body.append(self.return_stmt())
        self.scopes.pop()
        lines = [f"class G {{",
                 f"    {self.return_type} m({', '.join(params)}) {{"]
        lines += ["        " + line for line in body]
        lines += ["    }", "}"]
        return "\n".join(lines) + "\n"


def generate_program(seed: int, limits: GenLimits | None = None) -> str:
    """Deterministically generate one subset program for a seed."""
    gen = _Gen(random.Random(seed), limits or GenLimits())
    return gen.program()

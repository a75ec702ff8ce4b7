"""Hand-derived expected link sets for the corpus, plus small helpers.

Every edge below was traced manually from the per-construct successor
rules (for cf) and from explicit path enumeration over those cf edges
(for df); the tests assert the pipeline reproduces them exactly.
"""

from javaflow.structure_graph import StructureGraph


def cf_txt_edges(graph: StructureGraph) -> set[tuple[str, str]]:
    return {(graph.item(a).txt, graph.item(b).txt) for a, b in graph.cf_edges()}


def df_txt_edges(graph: StructureGraph) -> set[tuple[str, str]]:
    return {(graph.item(a).txt, graph.item(b).txt) for a, b in graph.df_edges()}


EXPECTED_CF: dict[str, set[tuple[str, str]]] = {
    "straight_line": {
        ("testMethod()", "int a = 1;"),
        ("int a = 1;", "int b = 2;"),
        ("int b = 2;", "int c = a + b;"),
        ("int c = a + b;", "return c;"),
        ("return c;", "Exit"),
    },
    "while_sum": {
        ("sum(n)", "int s = 0;"),
        ("int s = 0;", "int i = 0;"),
        ("int i = 0;", "i < n"),
        ("i < n", "s = s + i;"),
        ("i < n", "return s;"),
        ("s = s + i;", "i++;"),
        ("i++;", "i < n"),
        ("return s;", "Exit"),
    },
    "labeled_jumps": {
        ("run()", "true"),
        ("true", "int x = 1;"),
        ("true", "Exit"),
        ("int x = 1;", "x > 0"),
        ("x > 0", "break a;"),
        ("x > 0", "continue;"),
        ("break a;", "Exit"),
        ("continue;", "true"),
    },
    "nested_blocks": {
        ("m()", "int a = 1;"),
        ("int a = 1;", "int b = 2;"),
        ("int b = 2;", "Exit"),
    },
    "labeled_block": {
        ("m()", "int a = 1;"),
        ("int a = 1;", "int c = 2;"),
        ("int c = 2;", "int d = 3;"),
        ("int d = 3;", "Exit"),
    },
    "if_else": {
        ("m(x)", "int r = 0;"),
        ("int r = 0;", "x > 0"),
        ("x > 0", "r = 1;"),
        ("x > 0", "r = 2;"),
        ("r = 1;", "return r;"),
        ("r = 2;", "return r;"),
        ("return r;", "Exit"),
    },
    "if_no_else": {
        ("m(x)", "x > 0"),
        ("x > 0", "x = x - 1;"),
        ("x > 0", "return x;"),
        ("x = x - 1;", "return x;"),
        ("return x;", "Exit"),
    },
    "early_return": {
        ("m(x)", "x < 0"),
        ("x < 0", "return 0;"),
        ("x < 0", "return x;"),
        ("return 0;", "Exit"),
        ("return x;", "Exit"),
    },
    "break_plain": {
        ("m()", "true"),
        ("true", "break;"),
        ("true", "int a = 1;"),
        ("break;", "int a = 1;"),
        ("int a = 1;", "Exit"),
    },
    "continue_plain": {
        ("m(n)", "n > 0"),
        ("n > 0", "continue;"),
        ("n > 0", "Exit"),
        ("continue;", "n > 0"),
    },
    "continue_labeled": {
        ("m(n)", "n > 0"),
        ("n > 0", "true"),
        ("n > 0", "Exit"),
        ("true", "continue a;"),
        ("true", "n > 0"),
        ("continue a;", "n > 0"),
    },
    "empty_loop": {
        ("m(n)", "n > 0"),
        ("n > 0", "n > 0"),
        ("n > 0", "Exit"),
    },
    "dead_tail": {
        ("m()", "true"),
        ("true", "break;"),
        ("true", "int b = 2;"),
        ("break;", "int b = 2;"),
        ("int a = 1;", "true"),
        ("int b = 2;", "Exit"),
    },
    "two_params": {
        ("max(a, b)", "a > b"),
        ("a > b", "return a;"),
        ("a > b", "return b;"),
        ("return a;", "Exit"),
        ("return b;", "Exit"),
    },
    "kill_chain": {
        ("m()", "int a = 1;"),
        ("int a = 1;", "a = 2;"),
        ("a = 2;", "int c = a + 0;"),
        ("int c = a + 0;", "return c;"),
        ("return c;", "Exit"),
    },
    "no_cycle": {
        ("m(x)", "x = x + 1;"),
        ("x = x + 1;", "return x;"),
        ("return x;", "Exit"),
    },
    "expr_mix": {
        ("m(p, k)", "boolean q = !p;"),
        ("boolean q = !p;", "int t = -k + 2 * (k - 1);"),
        ("int t = -k + 2 * (k - 1);", "q && k <= 10 || false"),
        ("q && k <= 10 || false", "q = true;"),
        ("q && k <= 10 || false", "return q;"),
        ("q = true;", "return q;"),
        ("return q;", "Exit"),
    },
    "empty_method": {
        ("m()", "Exit"),
    },
}

EXPECTED_DF: dict[str, set[tuple[str, str]]] = {
    "straight_line": {
        ("int a = 1;", "int c = a + b;"),
        ("int b = 2;", "int c = a + b;"),
        ("int c = a + b;", "return c;"),
    },
    "while_sum": {
        ("sum(n)", "i < n"),
        ("int s = 0;", "s = s + i;"),
        ("int s = 0;", "return s;"),
        ("int i = 0;", "i < n"),
        ("int i = 0;", "s = s + i;"),
        ("int i = 0;", "i++;"),
        ("s = s + i;", "s = s + i;"),
        ("s = s + i;", "return s;"),
        ("i++;", "i < n"),
        ("i++;", "s = s + i;"),
        ("i++;", "i++;"),
    },
    "labeled_jumps": {("int x = 1;", "x > 0")},
    "nested_blocks": set(),
    "labeled_block": set(),
    "if_else": {
        ("m(x)", "x > 0"),
        ("r = 1;", "return r;"),
        ("r = 2;", "return r;"),
    },
    "if_no_else": {
        ("m(x)", "x > 0"),
        ("m(x)", "x = x - 1;"),
        ("m(x)", "return x;"),
        ("x = x - 1;", "return x;"),
    },
    "early_return": {
        ("m(x)", "x < 0"),
        ("m(x)", "return x;"),
    },
    "break_plain": set(),
    "continue_plain": {("m(n)", "n > 0")},
    "continue_labeled": {("m(n)", "n > 0")},
    "empty_loop": {("m(n)", "n > 0")},
    "dead_tail": set(),
    "two_params": {
        ("max(a, b)", "a > b"),
        ("max(a, b)", "return a;"),
        ("max(a, b)", "return b;"),
    },
    "kill_chain": {
        ("a = 2;", "int c = a + 0;"),
        ("int c = a + 0;", "return c;"),
    },
    "no_cycle": {
        ("m(x)", "x = x + 1;"),
        ("x = x + 1;", "return x;"),
    },
    "expr_mix": {
        ("m(p, k)", "boolean q = !p;"),
        ("m(p, k)", "int t = -k + 2 * (k - 1);"),
        ("m(p, k)", "q && k <= 10 || false"),
        ("boolean q = !p;", "q && k <= 10 || false"),
        ("boolean q = !p;", "return q;"),
        ("q = true;", "return q;"),
    },
    "empty_method": set(),
}

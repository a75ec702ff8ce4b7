from collections import Counter

import pytest

from javaflow import corpus
from javaflow.errors import GraphError
from javaflow.java_parser import method_body, method_decl, parse_source
from javaflow.structure_graph import (FLOW_KINDS, build_structure_graph,
                                      compute_def_use, iter_containment,
                                      render_txt)


def build(source):
    return build_structure_graph(parse_source(source))


class TestRenderTxt:
    def test_statements_and_method(self):
        source = """\
        class R {
            int m(int y, boolean p) {
                int a = 1;
                boolean q = true;
                int b = 1   +  2 ;
                a = (a + b) * y;
                a++;
                b--;
                q = !p == (y < 3);
                a = -y;
                b = - -y;
                here: while (q) {
                    if (a > 0) {
                        break here;
                    }
                    continue;
                }
                return a / b - 2;
            }
        }
        """
        method = method_decl(parse_source(source))
        stmts = method_body(method).children
        assert render_txt(method) == "m(y, p)"
        assert [render_txt(s) for s in stmts] == [
            "int a = 1;",
            "boolean q = true;",
            "int b = 1 + 2;",
            "a = (a + b) * y;",
            "a++;",
            "b--;",
            "q = !p == (y < 3);",
            "a = -y;",
            "b = - -y;",
            "here:",
            "return a / b - 2;",
        ]
        loop = stmts[9].children[0]
        assert render_txt(loop) == "while (q)"
        body_stmts = loop.children[1].children
        assert render_txt(body_stmts[0]) == "if (a > 0)"
        assert render_txt(body_stmts[0].children[1]) == "{...}"
        assert render_txt(body_stmts[0].children[1].children[0]) == "break here;"
        assert render_txt(body_stmts[1]) == "continue;"

    def test_zero_param_method(self):
        method = method_decl(parse_source(corpus.STRAIGHT_LINE))
        assert render_txt(method) == "testMethod()"

    def test_condition_has_no_parens_or_semicolon(self):
        unit = parse_source(corpus.WHILE_SUM)
        loop = method_body(method_decl(unit)).children[2]
        assert render_txt(loop.children[0]) == "i < n"

    def test_bare_return(self):
        unit = parse_source("class C { void m() { return; } }")
        assert render_txt(method_body(method_decl(unit)).children[0]) == "return;"


class TestBuild:
    def test_straight_line_items(self):
        graph = build(corpus.STRAIGHT_LINE)
        assert [(it.id, it.kind, it.txt) for it in graph.items] == [
            (0, "Method", "testMethod()"),
            (1, "SimpleStmt", "int a = 1;"),
            (2, "Var", "a"),
            (3, "SimpleStmt", "int b = 2;"),
            (4, "Var", "b"),
            (5, "SimpleStmt", "int c = a + b;"),
            (6, "Var", "c"),
            (7, "Return", "return c;"),
            (8, "Exit", "Exit"),
        ]
        assert graph.root == 0
        assert graph.method.stmts == [1, 3, 5, 7]
        assert graph.method.exit == 8

    def test_straight_line_kind_counts(self):
        graph = build(corpus.STRAIGHT_LINE)
        counts = Counter(it.kind for it in graph.items)
        assert counts == {"Method": 1, "SimpleStmt": 3, "Var": 3,
                          "Return": 1, "Exit": 1}

    def test_empty_method_is_method_plus_exit(self):
        graph = build(corpus.EMPTY_METHOD)
        assert [(it.kind, it.txt) for it in graph.items] == \
            [("Method", "m()"), ("Exit", "Exit")]

    def test_while_sum_structure(self):
        graph = build(corpus.WHILE_SUM)
        assert [(it.id, it.kind, it.txt) for it in graph.items] == [
            (0, "Method", "sum(n)"),
            (1, "Param", "n"),
            (2, "SimpleStmt", "int s = 0;"),
            (3, "Var", "s"),
            (4, "SimpleStmt", "int i = 0;"),
            (5, "Var", "i"),
            (6, "Loop", "while (i < n)"),
            (7, "Expr", "i < n"),
            (8, "Block", "{...}"),
            (9, "SimpleStmt", "s = s + i;"),
            (10, "SimpleStmt", "i++;"),
            (11, "Return", "return s;"),
            (12, "Exit", "Exit"),
        ]
        method = graph.method
        assert method.params == [1]
        assert method.stmts == [2, 4, 6, 11]
        loop = graph.item(6)
        assert loop.test == 7 and loop.body == 8
        assert graph.item(8).stmts == [9, 10]

    def test_labeled_jumps_targets(self):
        graph = build(corpus.LABELED_JUMPS)
        label = next(it for it in graph.items if it.kind == "Label")
        assert label.name == "a" and label.txt == "a:"
        break_item = next(it for it in graph.items if it.kind == "Break")
        assert break_item.target == label.id
        continue_item = next(it for it in graph.items if it.kind == "Continue")
        assert continue_item.target is None

    def test_ids_dense_and_deterministic(self):
        for source in corpus.PROGRAMS.values():
            first = build(source)
            second = build(source)
            assert [it.id for it in first.items] == list(range(len(first.items)))
            assert first.items == second.items

    def test_flow_links_empty_after_build(self):
        graph = build(corpus.WHILE_SUM)
        assert all(not it.cf_next and not it.cf_prev and not it.df_next
                   for it in graph.items)

    def test_containment_is_a_tree(self):
        for source in corpus.PROGRAMS.values():
            graph = build(source)
            parents = Counter(child for _p, _role, _i, child in
                              iter_containment(graph))
            for item in graph.items:
                if item.kind in ("Method", "Var"):
                    assert parents[item.id] == 0
                else:
                    assert parents[item.id] == 1, item

    def test_every_var_comes_from_a_declaration(self):
        for source in corpus.PROGRAMS.values():
            graph = build(source)
            for var in (it for it in graph.items if it.kind == "Var"):
                definers = [it for it in graph.items if var.id in it.defs]
                assert definers and definers[0].kind == "SimpleStmt"

    def test_flow_txts_unique_within_corpus_methods(self):
        # Flow instructions are the link endpoints, so their txts must
        # resolve unambiguously against the whole item set.  (Blocks all
        # share the "{...}" txt by construction and are never addressed.)
        for name, source in corpus.PROGRAMS.items():
            graph = build(source)
            for item in graph.flow_items():
                assert graph.items_by_txt(item.txt) == [item], (name, item.txt)


class TestDefUse:
    def def_use_txts(self, graph, txt):
        item = next(it for it in graph.items if it.txt == txt)
        return (sorted(graph.item(i).txt for i in item.defs),
                sorted(graph.item(i).txt for i in item.uses))

    def test_declaration_with_reads(self):
        graph = build(corpus.STRAIGHT_LINE)
        assert self.def_use_txts(graph, "int c = a + b;") == (["c"], ["a", "b"])

    def test_declaration_without_reads(self):
        graph = build(corpus.STRAIGHT_LINE)
        assert self.def_use_txts(graph, "int a = 1;") == (["a"], [])

    def test_increment_reads_and_writes(self):
        graph = build(corpus.WHILE_SUM)
        assert self.def_use_txts(graph, "i++;") == (["i"], ["i"])

    def test_assignment(self):
        graph = build(corpus.WHILE_SUM)
        assert self.def_use_txts(graph, "s = s + i;") == (["s"], ["i", "s"])

    def test_method_defines_its_params(self):
        graph = build(corpus.WHILE_SUM)
        assert self.def_use_txts(graph, "sum(n)") == (["n"], [])
        graph = build(corpus.TWO_PARAMS)
        assert self.def_use_txts(graph, "max(a, b)") == (["a", "b"], [])

    def test_condition_reads_only(self):
        graph = build(corpus.WHILE_SUM)
        assert self.def_use_txts(graph, "i < n") == ([], ["i", "n"])

    def test_return_reads_only(self):
        graph = build(corpus.WHILE_SUM)
        assert self.def_use_txts(graph, "return s;") == ([], ["s"])

    def test_exit_break_continue_empty(self):
        graph = build(corpus.LABELED_JUMPS)
        for txt in ("Exit", "break a;", "continue;"):
            assert self.def_use_txts(graph, txt) == ([], [])

    def test_bare_return_empty(self):
        graph = build("class C { void m() { return; } }")
        assert self.def_use_txts(graph, "return;") == ([], [])

    def test_def_use_reference_vars_and_params_only(self):
        for source in corpus.PROGRAMS.values():
            graph = build(source)
            for item in graph.flow_items():
                for ref in item.defs | item.uses:
                    assert graph.item(ref).kind in ("Var", "Param")

    def test_compute_def_use_matches_stored_sets(self):
        graph = build(corpus.WHILE_SUM)
        scope = {"n": 1, "s": 3, "i": 5}
        for item in graph.flow_items():
            assert compute_def_use(item, scope) == (item.defs, item.uses)

    def test_shadowless_sibling_scopes_resolve_separately(self):
        graph = build("""
        class S {
            void m() {
                { int a = 1; a = 2; }
                { int a = 3; a = 4; }
            }
        }
        """)
        vars_ = [it.id for it in graph.items if it.kind == "Var"]
        assert len(vars_) == 2
        assigns = [it for it in graph.items
                   if it.kind == "SimpleStmt" and it.txt in ("a = 2;", "a = 4;")]
        assert assigns[0].defs == {vars_[0]}
        assert assigns[1].defs == {vars_[1]}


class TestBuildErrors:
    def test_unknown_label(self):
        with pytest.raises(GraphError, match="unknown label"):
            build("class C { void m() { while (true) { break z; } } }")

    def test_break_outside_loop(self):
        with pytest.raises(GraphError, match="outside any loop"):
            build("class C { void m() { break; } }")

    def test_continue_outside_loop(self):
        with pytest.raises(GraphError, match="outside any loop"):
            build("class C { void m() { continue; } }")

    def test_label_must_enclose_jump(self):
        with pytest.raises(GraphError, match="unknown label"):
            build("class C { void m() { a: { } while (true) { break a; } } }")

    def test_non_flow_kinds_do_not_flow(self):
        graph = build(corpus.LABELED_JUMPS)
        for item in graph.items:
            assert item.is_flow == (item.kind in FLOW_KINDS)
            if item.kind in ("Block", "If", "Loop", "Label", "Var", "Param"):
                assert not item.is_flow

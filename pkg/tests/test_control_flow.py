import pytest
from support import EXPECTED_CF, cf_txt_edges

from javaflow import corpus
from javaflow.control_flow import (CfContext, first_flow_instruction,
                                   flow_successor_after, synthesize_control_flow)
from javaflow.errors import GraphError
from javaflow.java_parser import parse_source
from javaflow.structure_graph import build_structure_graph


def build(source):
    return build_structure_graph(parse_source(source))


def cfg(source):
    return synthesize_control_flow(build(source))


def by_txt(graph, txt):
    matches = graph.items_by_txt(txt)
    assert len(matches) == 1, txt
    return matches[0]


class TestFirstFlowInstruction:
    def test_flow_instruction_is_itself(self):
        graph = build(corpus.STRAIGHT_LINE)
        stmt = by_txt(graph, "int a = 1;")
        assert first_flow_instruction(stmt.id, graph) == stmt.id

    def test_nested_blocks_cascade_depth_first(self):
        graph = build(corpus.NESTED_BLOCKS)
        outer = graph.method.stmts[1]  # { { int a = 1; } }
        assert first_flow_instruction(outer, graph) == by_txt(graph, "int a = 1;").id

    def test_empty_block_has_none(self):
        graph = build(corpus.NESTED_BLOCKS)
        empty = graph.method.stmts[0]
        assert first_flow_instruction(empty, graph) is None

    def test_label_descends_into_statement(self):
        graph = build(corpus.LABELED_BLOCK)
        label = next(it for it in graph.items if it.kind == "Label")
        assert first_flow_instruction(label.id, graph) == by_txt(graph, "int c = 2;").id

    def test_loop_and_if_yield_their_test(self):
        graph = build(corpus.WHILE_SUM)
        loop = next(it for it in graph.items if it.kind == "Loop")
        assert first_flow_instruction(loop.id, graph) == loop.test
        graph = build(corpus.IF_ELSE)
        if_item = next(it for it in graph.items if it.kind == "If")
        assert first_flow_instruction(if_item.id, graph) == if_item.test


class TestFlowSuccessorAfter:
    def test_last_statement_falls_to_exit(self):
        graph = build(corpus.STRAIGHT_LINE)
        assert flow_successor_after(by_txt(graph, "return c;").id, graph) \
            == graph.exit_id

    def test_end_of_loop_body_returns_to_test(self):
        graph = build(corpus.WHILE_SUM)
        assert flow_successor_after(by_txt(graph, "i++;").id, graph) \
            == by_txt(graph, "i < n").id

    def test_end_of_then_branch_continues_past_if(self):
        graph = build(corpus.IF_NO_ELSE)
        assert flow_successor_after(by_txt(graph, "x = x - 1;").id, graph) \
            == by_txt(graph, "return x;").id

    def test_skips_empty_sibling_subtrees(self):
        graph = build(corpus.NESTED_BLOCKS)
        # Successor of the first (empty) block is the instruction inside
        # the doubly nested one.
        assert flow_successor_after(graph.method.stmts[0], graph) \
            == by_txt(graph, "int a = 1;").id


class TestEdgeSets:
    @pytest.mark.parametrize("name", sorted(EXPECTED_CF))
    def test_exact_edges(self, name):
        graph = cfg(corpus.PROGRAMS[name])
        assert cf_txt_edges(graph) == EXPECTED_CF[name]

    @pytest.mark.parametrize("name", sorted(EXPECTED_CF))
    def test_inverse_closure(self, name):
        graph = cfg(corpus.PROGRAMS[name])
        for item in graph.flow_items():
            for succ in item.cf_next:
                assert item.id in graph.item(succ).cf_prev
            for pred in item.cf_prev:
                assert item.id in graph.item(pred).cf_next

    @pytest.mark.parametrize("name", sorted(EXPECTED_CF))
    def test_totality_and_terminals(self, name):
        graph = cfg(corpus.PROGRAMS[name])
        for item in graph.flow_items():
            if item.kind == "Exit":
                assert not item.cf_next
            else:
                assert item.cf_next
        assert not graph.method.cf_prev

    @pytest.mark.parametrize("name", sorted(EXPECTED_CF))
    def test_branch_arity(self, name):
        graph = cfg(corpus.PROGRAMS[name])
        for item in graph.items:
            if item.kind == "Expr":
                assert 1 <= len(item.cf_next) <= 2

    @pytest.mark.parametrize("name", sorted(EXPECTED_CF))
    def test_non_participation(self, name):
        graph = cfg(corpus.PROGRAMS[name])
        for item in graph.items:
            if not item.is_flow:
                assert not item.cf_next and not item.cf_prev

    def test_branch_collapses_when_targets_coincide(self):
        graph = cfg("class C { void m(int x) { if (x > 0) { } } }")
        test = next(it for it in graph.items if it.kind == "Expr")
        assert test.cf_next == {graph.exit_id}

    def test_determinism(self):
        for source in corpus.PROGRAMS.values():
            assert cfg(source).items == cfg(source).items


class TestErrors:
    def test_rejects_second_synthesis(self):
        graph = cfg(corpus.STRAIGHT_LINE)
        with pytest.raises(GraphError, match="already present"):
            synthesize_control_flow(graph)

    def test_labeled_continue_must_target_a_loop(self):
        graph = build(
            "class C { void m() { while (true) { a: { continue a; } } } }")
        with pytest.raises(GraphError, match="not a loop"):
            synthesize_control_flow(graph)

    def test_labeled_continue_through_nested_labels(self):
        graph = cfg(
            "class C { void m() { a: b: while (true) { continue a; } } }")
        cont = by_txt(graph, "continue a;")
        assert cont.cf_next == {by_txt(graph, "true").id}


class TestContext:
    def test_enclosing_loop_walks_out_of_conditionals(self):
        graph = build(corpus.LABELED_JUMPS)
        ctx = CfContext.from_graph(graph)
        break_item = next(it for it in graph.items if it.kind == "Break")
        loop = ctx.enclosing_loop(graph, break_item.id)
        assert loop is not None and loop.txt == "while (true)"

    def test_no_enclosing_loop_at_top_level(self):
        graph = build(corpus.STRAIGHT_LINE)
        ctx = CfContext.from_graph(graph)
        assert ctx.enclosing_loop(graph, graph.method.stmts[0]) is None

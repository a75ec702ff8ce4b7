"""javaflow: program dependence graphs for a small Java subset.

Pipeline: parse source (``java_parser``), build the structure graph with
def/use sets (``structure_graph``), synthesize control-flow links
(``control_flow``), synthesize data-flow links (``data_flow``), then
check or emit link specifications (``validation``).  Graphs persist via
``interchange`` and render via ``dot_export``; ``cli`` wires the stages
into a command line.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .control_flow import (CfContext, first_flow_instruction, flow_successor_after,
                           synthesize_control_flow)
from .data_flow import (ReachState, path_witness_exists, reaching_definitions,
                        synthesize_data_flow, synthesize_data_flow_bruteforce,
                        synthesize_data_flow_worklist, worklist_df_edges)
from .dot_export import to_dot
from .interchange import (document_to_graph, dumps_graph, graph_to_document,
                          load_graph, save_graph)
from .java_parser import (AstNode, Span, Token, ast_equal, parse_compilation_unit,
                          parse_source, tokenize)
from .progen import GenLimits, generate_program
from .structure_graph import (FLOW_KINDS, Item, StructureGraph,
                              build_structure_graph, compute_def_use, render_source,
                              render_txt)
from .validation import (Diagnostic, LinkSpec, ValidationSpec, check, emit_spec,
                         parse_spec, resolve_txt)


def analyze(source: str, algorithm: str = "worklist") -> StructureGraph:
    """Run the full pipeline on source text and return the finished PDG."""
    graph = build_structure_graph(parse_source(source))
    synthesize_control_flow(graph)
    synthesize_data_flow(graph, algorithm)
    return graph

"""Link-specification DSL: parsing, graph checking, and spec generation.

A spec is a sequence of lines.  Each non-blank, non-comment line reads

    cfNext: "source txt" --> "target txt"

with kind ``cfNext`` or ``dfNext``; strings are double-quoted with ``\\"``
and ``\\\\`` escapes; ``#`` starts a comment; whitespace between tokens is
free.  Items are addressed by exact txt match, so checking is only sound
on graphs whose link endpoints carry unique txts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousTxtError, SpecError, UnresolvedTxtError, ValidationError
from .structure_graph import StructureGraph

KINDS = ("cfNext", "dfNext")


@dataclass(frozen=True)
class LinkSpec:
    kind: str
    source_txt: str
    target_txt: str
    line: int


@dataclass
class ValidationSpec:
    links: list[LinkSpec]


@dataclass(frozen=True)
class Diagnostic:
    severity: str        # warning | error
    category: str        # false-link | missing-link | unresolved-txt | ambiguous-txt | duplicate-spec
    kind: str            # cfNext | dfNext
    source_txt: str
    target_txt: str
    spec_line: int | None = None
    item_id: int | None = None
    detail: str = ""

    def text_line(self) -> str:
        head = (f"{self.category.upper()} {self.kind}: "
                f"{quote(self.source_txt)} --> {quote(self.target_txt)}")
        return f"{head} ({self.detail})" if self.detail else head

    def machine_line(self) -> str:
        return "\t".join((self.category, self.kind, self.source_txt, self.target_txt))


def quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_link(kind: str, source_txt: str, target_txt: str) -> str:
    return f"{kind}: {quote(source_txt)} --> {quote(target_txt)}"


def _scan_string(line: str, pos: int, lineno: int) -> tuple[str, int]:
    if pos >= len(line) or line[pos] != '"':
        raise SpecError(f"expected '\"', found "
                        f"{line[pos] if pos < len(line) else 'end of line'!r}", lineno)
    pos += 1
    out: list[str] = []
    while pos < len(line):
        ch = line[pos]
        if ch == "\\":
            if pos + 1 >= len(line) or line[pos + 1] not in ('"', "\\"):
                raise SpecError("invalid escape (only \\\" and \\\\ are allowed)",
                                lineno)
            out.append(line[pos + 1])
            pos += 2
            continue
        if ch == '"':
            return "".join(out), pos + 1
        out.append(ch)
        pos += 1
    raise SpecError("unterminated string", lineno)


def _skip_ws(line: str, pos: int) -> int:
    while pos < len(line) and line[pos] in " \t":
        pos += 1
    return pos


def _parse_line(line: str, lineno: int) -> LinkSpec | None:
    pos = _skip_ws(line, 0)
    if pos >= len(line) or line[pos] == "#":
        return None
    start = pos
    while pos < len(line) and line[pos].isalpha():
        pos += 1
    kind = line[start:pos]
    if kind not in KINDS:
        raise SpecError(f"unknown link kind {kind or line[pos]!r} "
                        f"(expected 'cfNext' or 'dfNext')", lineno)
    pos = _skip_ws(line, pos)
    if pos >= len(line) or line[pos] != ":":
        raise SpecError("expected ':' after the link kind", lineno)
    pos = _skip_ws(line, pos + 1)
    source, pos = _scan_string(line, pos, lineno)
    pos = _skip_ws(line, pos)
    if not line.startswith("-->", pos):
        raise SpecError("expected '-->' between the two txts", lineno)
    pos = _skip_ws(line, pos + 3)
    target, pos = _scan_string(line, pos, lineno)
    pos = _skip_ws(line, pos)
    if pos < len(line) and line[pos] != "#":
        raise SpecError(f"unexpected trailing text {line[pos:]!r}", lineno)
    if not source or not target:
        raise SpecError("txts must be non-empty", lineno)
    return LinkSpec(kind, source, target, lineno)


def parse_spec(text: str) -> ValidationSpec:
    """Parse DSL text into an ordered list of expected links."""
    links = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parsed = _parse_line(line, lineno)
        if parsed is not None:
            links.append(parsed)
    return ValidationSpec(links)


def resolve_txt(graph: StructureGraph, txt: str) -> int:
    """The id of the unique item whose txt matches exactly."""
    matches = graph.items_by_txt(txt)
    if not matches:
        raise UnresolvedTxtError(txt)
    if len(matches) > 1:
        raise AmbiguousTxtError(txt, len(matches))
    return matches[0].id


def _model_links(graph: StructureGraph) -> set[tuple[str, int, int]]:
    links = {("cfNext", s, t) for s, t in graph.cf_edges()}
    links |= {("dfNext", s, t) for s, t in graph.df_edges()}
    return links


def check(graph: StructureGraph, spec: ValidationSpec) -> list[Diagnostic]:
    """Compare the graph's links against the spec.

    Model links absent from the spec become false-link warnings; spec
    links absent from the model become missing-link warnings.  Spec
    entries whose txts do not resolve to exactly one item produce errors
    and are excluded from matching; duplicate entries count once and are
    noted.  Output order: errors, false-links by (source id, target id),
    missing-links by spec line, duplicate notes.
    """
    errors: list[Diagnostic] = []
    duplicates: list[Diagnostic] = []
    resolved: list[tuple[LinkSpec, int, int]] = []
    seen: set[tuple[str, str, str]] = set()

    for entry in spec.links:
        key = (entry.kind, entry.source_txt, entry.target_txt)
        if key in seen:
            duplicates.append(Diagnostic(
                "warning", "duplicate-spec", entry.kind, entry.source_txt,
                entry.target_txt, spec_line=entry.line,
                detail=f"spec line {entry.line}"))
            continue
        seen.add(key)
        ids = []
        ok = True
        for txt in (entry.source_txt, entry.target_txt):
            matches = graph.items_by_txt(txt)
            if len(matches) == 1:
                ids.append(matches[0].id)
                continue
            ok = False
            category = "unresolved-txt" if not matches else "ambiguous-txt"
            detail = (f"no item with txt {quote(txt)}" if not matches
                      else f"txt {quote(txt)} matches {len(matches)} items")
            errors.append(Diagnostic(
                "error", category, entry.kind, entry.source_txt, entry.target_txt,
                spec_line=entry.line, detail=f"{detail}; spec line {entry.line}"))
        if ok:
            resolved.append((entry, ids[0], ids[1]))

    model = _model_links(graph)
    covered = {(entry.kind, src, tgt) for entry, src, tgt in resolved}

    false_links = [
        Diagnostic("warning", "false-link", kind, graph.item(src).txt,
                   graph.item(tgt).txt, item_id=src)
        for kind, src, tgt in sorted(model - covered,
                                     key=lambda link: (link[1], link[2], link[0]))
    ]
    missing_links = [
        Diagnostic("warning", "missing-link", entry.kind, entry.source_txt,
                   entry.target_txt, spec_line=entry.line)
        for entry, src, tgt in resolved if (entry.kind, src, tgt) not in model
    ]
    return errors + false_links + missing_links + duplicates


def emit_spec(graph: StructureGraph) -> str:
    """Render every model link as a DSL line, cfNext lines first, each
    group ordered by (source id, target id).

    The result re-parses to a spec that checks cleanly against the same
    graph; raises ValidationError when an endpoint txt is not unique.
    """
    lines = []
    for kind, edges in (("cfNext", graph.cf_edges()), ("dfNext", graph.df_edges())):
        for source, target in edges:
            for endpoint in (source, target):
                txt = graph.item(endpoint).txt
                if len(graph.items_by_txt(txt)) != 1:
                    raise ValidationError(
                        f"cannot emit an unambiguous spec: txt {quote(txt)} "
                        f"is shared by more than one item")
            lines.append(format_link(kind, graph.item(source).txt,
                                     graph.item(target).txt))
    return "".join(line + "\n" for line in lines)

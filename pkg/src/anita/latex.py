"""Rebuild the tableau tree from a checked linear proof and emit qtree LaTeX.

Closing-pair formulas are colored blue in fully closed trees; in trees with
open branches every formula on a root-to-open-leaf path is colored red and
nothing is blue.  Closed leaves end in a `$\\times$` child node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checker import CheckReport, Valid
from .formula import SignedFormula, format_formula
from .script import Block, Closure, ProofScript

CLOSING_PAIR = "closing-pair"
OPEN_PATH = "open-path"


@dataclass
class TableauTree:
    formulas: list[tuple[SignedFormula, str | None]]  # (formula, highlight)
    children: list["TableauTree"] = field(default_factory=list)
    closed: bool = False


def build_tree(script: ProofScript, report: CheckReport) -> TableauTree:
    """Collapse each branch block into one node; sibling blocks become children."""
    highlight: dict[int, str] = {}
    if isinstance(report.verdict, Valid):
        for ln in script.lines:
            if isinstance(ln.justification, Closure):
                for m in ln.justification.refs:
                    highlight[m] = CLOSING_PAIR
    else:
        red_blocks: set[int] = set()

        def mark_chain(block: Block | None) -> None:
            while block is not None and id(block) not in red_blocks:
                red_blocks.add(id(block))
                block = script.parent(block)

        for leaf in script.leaf_blocks():
            direct = script.direct_lines(leaf)
            if not direct or not direct[-1].is_closure:
                mark_chain(leaf)
        for block in _blocks_preorder(script.root):
            if len(block.children) == 1:
                mark_chain(block)  # the second branch of this split was never written
        for ln in script.lines:
            if not ln.is_closure and id(script.block_of(ln.number)) in red_blocks:
                highlight[ln.number] = OPEN_PATH

    def node_of(block: Block) -> TableauTree:
        formulas = [(ln.content, highlight.get(ln.number))
                    for ln in script.direct_lines(block) if ln.content is not None]
        direct = script.direct_lines(block)
        closed = bool(direct) and direct[-1].is_closure
        children = [node_of(child) for child in block.children]
        return TableauTree(formulas, children, closed)

    return node_of(script.root)


def _blocks_preorder(root: Block) -> list[Block]:
    out = [root]
    for child in root.children:
        out.extend(_blocks_preorder(child))
    return out


def _label(node: TableauTree) -> str:
    rendered = []
    for sf, hl in node.formulas:
        text = f"${sf.sign}~{format_formula(sf.formula, 'latex')}$"
        if hl == CLOSING_PAIR:
            text = f"\\color{{blue}}{{{text}}}"
        elif hl == OPEN_PATH:
            text = f"\\color{{red}}{{{text}}}"
        rendered.append(text)
    return " \\\\ ".join(rendered)


def _render(node: TableauTree) -> str:
    parts = [f"[.{{{_label(node)}}}"]
    parts.extend(_render(child) for child in node.children)
    if node.closed:
        parts.append("[.{$\\times$} ]")
    parts.append("]")
    return " ".join(parts)


def to_qtree(tree: TableauTree) -> str:
    """One `\\Tree` expression, preceded by a comment naming the required package."""
    uses_color = any(hl is not None for _, hl in _all_formulas(tree))
    comment = "% requires \\usepackage{qtree}"
    if uses_color:
        comment += " and \\usepackage{xcolor}"
    return f"{comment}\n\\Tree {_render(tree)}"


def _all_formulas(tree: TableauTree):
    yield from tree.formulas
    for child in tree.children:
        yield from _all_formulas(child)

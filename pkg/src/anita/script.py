"""Fitch-style linear tableau proofs: line grammar, block structure, serializer.

One proof line per text line::

    [<number> '.']? '{'* ( <T|F> <formula> | '@' ) <justification> '}'*

where the justification is ``pre``, ``conclusion``, or an optional rule name
followed by comma-separated line references.  ``{`` opens a branch block
before its line, ``}`` closes one after; a closing brace may also stand on a
line of its own.  ``#`` starts a comment; blank lines are ignored and do not
consume line numbers.  Blocks still open at end of input are closed
implicitly (a proof in progress is not a syntax error), but a ``}`` with no
matching ``{`` is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .formula import ParseError, SignedFormula, Sign, Token, format_formula, parse_formula_tokens, tokenize


class RuleId(Enum):
    NOT_T = "~T"
    NOT_F = "~F"
    AND_T = "&T"
    AND_F = "&F"
    OR_T = "|T"
    OR_F = "|F"
    IMP_T = "->T"
    IMP_F = "->F"
    ALL_T = "AT"
    ALL_F = "AF"
    EX_T = "ET"
    EX_F = "EF"

    def __str__(self) -> str:
        return self.value


_WORD_RULES = {"AT": RuleId.ALL_T, "AF": RuleId.ALL_F, "ET": RuleId.EX_T, "EF": RuleId.EX_F}


@dataclass(frozen=True)
class Premise:
    pass


@dataclass(frozen=True)
class Conclusion:
    pass


@dataclass(frozen=True)
class RuleApp:
    rule: RuleId | None
    refs: tuple[int, ...]


@dataclass(frozen=True)
class Closure:
    refs: tuple[int, int]


Justification = Premise | Conclusion | RuleApp | Closure
PREMISE = Premise()
CONCLUSION = Conclusion()


@dataclass(frozen=True)
class ProofLine:
    number: int
    content: SignedFormula | None  # None is the bottom symbol of a closure line
    justification: Justification
    depth: int

    @property
    def is_closure(self) -> bool:
        return self.content is None


@dataclass(eq=True)
class Block:
    """Contiguous run of lines forming one branch; children are nested splits."""

    start: int
    end: int
    children: list["Block"] = field(default_factory=list)


@dataclass
class ProofScript:
    lines: tuple[ProofLine, ...]
    root: Block

    def __post_init__(self) -> None:
        self._innermost: dict[int, Block] = {}
        self._parent: dict[int, Block | None] = {id(self.root): None}

        def visit(block: Block) -> None:
            covered: set[int] = set()
            for child in block.children:
                self._parent[id(child)] = block
                visit(child)
                covered.update(range(child.start, child.end + 1))
            for n in range(block.start, block.end + 1):
                if n not in covered:
                    self._innermost[n] = block

        visit(self.root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProofScript):
            return NotImplemented
        return self.lines == other.lines and self.root == other.root

    def line(self, n: int) -> ProofLine:
        return self.lines[n - 1]

    def block_of(self, n: int) -> Block:
        return self._innermost[n]

    def parent(self, block: Block) -> Block | None:
        return self._parent[id(block)]

    def direct_lines(self, block: Block) -> list[ProofLine]:
        return [ln for ln in self.lines[block.start - 1 : block.end] if self._innermost[ln.number] is block]

    def leaf_blocks(self) -> list[Block]:
        leaves: list[Block] = []

        def visit(block: Block) -> None:
            if block.children:
                for child in block.children:
                    visit(child)
            else:
                leaves.append(block)

        if self.lines:
            visit(self.root)
        return leaves

    def ancestors(self, n: int) -> list[ProofLine]:
        """Lines m < n that are in scope at line n: same branch, previous lines."""
        chain: set[int] = set()
        block: Block | None = self._innermost[n]
        while block is not None:
            chain.add(id(block))
            block = self._parent[id(block)]
        return [ln for ln in self.lines[: n - 1] if id(self._innermost[ln.number]) in chain]


def _split_justification(tokens: list[Token], number: int) -> tuple[list[Token], Justification]:
    """Split a line body (sign already stripped) into formula tokens and a justification."""
    last = tokens[-1]
    if last.kind == "lident" and last.text in ("pre", "conclusion"):
        just: Justification = PREMISE if last.text == "pre" else CONCLUSION
        return tokens[:-1], just

    # collect trailing `n , n , ... n` from the right
    i = len(tokens)
    refs_rev: list[int] = []
    while i >= 1 and tokens[i - 1].kind == "int":
        tok = tokens[i - 1]
        value = int(tok.text)
        if value < 1:
            raise ParseError(tok.line, tok.column, "line references start at 1")
        if value >= number:
            raise ParseError(tok.line, tok.column,
                             f"justification references line {value}, which is not before line {number}")
        refs_rev.append(value)
        i -= 1
        if i >= 2 and tokens[i - 1].kind == "," and tokens[i - 2].kind == "int":
            i -= 1
        else:
            break
    if not refs_rev:
        raise ParseError(last.line, last.column + len(last.text),
                         "missing justification: expected 'pre', 'conclusion', or line references")
    refs = tuple(reversed(refs_rev))

    rule: RuleId | None = None
    before = tokens[:i]
    if len(before) >= 2 and before[-1].kind == "ident" and before[-1].text in _WORD_RULES:
        rule = _WORD_RULES[before[-1].text]
        before = before[:-1]
    elif (len(before) >= 3 and before[-1].kind == "ident" and before[-1].text in ("T", "F")
          and before[-2].kind in ("~", "&", "|", "->")):
        rule = RuleId(before[-2].kind + before[-1].text)
        before = before[:-2]
    return before, RuleApp(rule, refs)


def parse_proof(text: str) -> ProofScript:
    """Parse proof text into numbered lines and a block tree."""
    lines: list[ProofLine] = []
    root = Block(1, 0)
    stack: list[Block] = [root]
    pending_opens = 0

    def close_block(tok: Token) -> None:
        nonlocal pending_opens
        if pending_opens:
            raise ParseError(tok.line, tok.column, "empty branch block")
        if len(stack) == 1:
            raise ParseError(tok.line, tok.column, "unbalanced branch delimiter: '}' has no matching '{'")
        block = stack.pop()
        block.end = len(lines)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = tokenize(raw, line=lineno)
        if tokens[0].kind == "eof":
            continue
        if all(tok.kind in ("{", "}") for tok in tokens[:-1]):
            for tok in tokens[:-1]:
                if tok.kind == "{":
                    pending_opens += 1
                else:
                    close_block(tok)
            continue

        i = 0
        explicit: int | None = None
        if tokens[0].kind == "int" and tokens[1].kind == ".":
            explicit = int(tokens[0].text)
            i = 2
        opens = pending_opens
        pending_opens = 0
        while tokens[i].kind == "{":
            opens += 1
            i += 1
        end = len(tokens) - 1  # drop EOF
        closes = 0
        while end > i and tokens[end - 1].kind == "}":
            closes += 1
            end -= 1
        body = tokens[i:end]
        if not body:
            raise ParseError(lineno, tokens[i].column, "expected a signed formula or '@'")

        number = len(lines) + 1
        if explicit is not None and explicit != number:
            raise ParseError(lineno, tokens[0].column,
                             f"line is numbered {explicit} but it is line {number}")
        for _ in range(opens):
            block = Block(number, number)
            stack[-1].children.append(block)
            stack.append(block)

        head = body[0]
        if head.kind == "@":
            rest = body[1:]
            refs: list[int] = []
            ok = bool(rest)
            expect_int = True
            for tok in rest:
                if expect_int and tok.kind == "int":
                    value = int(tok.text)
                    if value < 1:
                        raise ParseError(tok.line, tok.column, "line references start at 1")
                    if value >= number:
                        raise ParseError(tok.line, tok.column,
                                         f"justification references line {value}, which is not before line {number}")
                    refs.append(value)
                    expect_int = False
                elif not expect_int and tok.kind == ",":
                    expect_int = True
                else:
                    ok = False
                    break
            if not ok or expect_int or len(refs) != 2:
                raise ParseError(head.line, head.column,
                                 "a closed branch '@' is justified by exactly two line references")
            content: SignedFormula | None = None
            just: Justification = Closure((refs[0], refs[1]))
        else:
            if not (head.kind == "ident" and head.text in ("T", "F")):
                raise ParseError(head.line, head.column,
                                 f"expected sign T or F (or '@'), found {head.text!r}")
            if len(body) == 1:
                raise ParseError(head.line, head.column + 1, "missing formula after the sign")
            formula_toks, just = _split_justification(body[1:], number)
            if not formula_toks:
                raise ParseError(body[1].line, body[1].column, "missing formula between sign and justification")
            content = SignedFormula(Sign(head.text), parse_formula_tokens(formula_toks))

        lines.append(ProofLine(number, content, just, len(stack) - 1))
        for block in stack[1:]:
            block.end = number
        for _ in range(closes):
            close_block(tokens[end])

    if pending_opens:
        raise ParseError(len(text.splitlines()) or 1, 1, "empty branch block")
    # blocks still open here are a proof in progress: close them at the last line
    del stack[1:]
    root.end = len(lines)
    return ProofScript(tuple(lines), root)


def _justification_text(just: Justification) -> str:
    if isinstance(just, Premise):
        return "pre"
    if isinstance(just, Conclusion):
        return "conclusion"
    if isinstance(just, Closure):
        return f"{just.refs[0]},{just.refs[1]}"
    refs = ",".join(str(r) for r in just.refs)
    return f"{just.rule} {refs}" if just.rule is not None else refs


def serialize_proof(script: ProofScript) -> str:
    """Canonical text: explicit numbers, one space of indent per depth.

    Rule names are written whenever the script carries them, so
    parse_proof(serialize_proof(s)) is structurally equal to s.
    """
    opens: dict[int, int] = {}
    closes: dict[int, int] = {}

    def visit(block: Block) -> None:
        for child in block.children:
            opens[child.start] = opens.get(child.start, 0) + 1
            closes[child.end] = closes.get(child.end, 0) + 1
            visit(child)

    visit(script.root)
    out: list[str] = []
    for ln in script.lines:
        body = "@" if ln.content is None else f"{ln.content.sign} {format_formula(ln.content.formula)}"
        text = (f"{ln.number}. "
                + " " * ln.depth
                + "{ " * opens.get(ln.number, 0)
                + body
                + " "
                + _justification_text(ln.justification)
                + " }" * closes.get(ln.number, 0))
        out.append(text)
    return "\n".join(out)

"""Proof validation: per-line rule checking, verdicts, countermodel extraction.

check() validates every line of a parsed proof and classifies it:

* Valid        — no diagnostics and every branch ends closed,
* Countermodel — some open branch is saturated and ground: the sequent fails,
* Incomplete   — open branches remain but nothing written is wrong,
* Invalid      — at least one rule application is wrong (see the diagnostics).

All failures are reported as diagnostics; check() itself never raises on a
parse-valid script.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .formula import (
    ANY_TERM,
    Atom,
    Formula,
    ParseError,
    Sign,
    SignedFormula,
    Token,
    Var,
    Witness,
    alpha_equal,
    format_formula,
    format_term,
    occurring_names,
    match_instance_detail,
    parse_formula_tokens,
    tokenize,
)
from .rules import KIND, RuleKind, components, quantifier_parts, rule_for
from .script import Block, Closure, Conclusion, Premise, ProofLine, ProofScript, RuleApp

# diagnostic codes
BAD_INITIAL_SEGMENT = "BAD_INITIAL_SEGMENT"
BAD_REF = "BAD_REF"
SCOPE_VIOLATION = "SCOPE_VIOLATION"
WRONG_COMPONENT = "WRONG_COMPONENT"
RULE_MISMATCH = "RULE_MISMATCH"
NOT_FRESH = "NOT_FRESH"
NOT_SUBSTITUTABLE = "NOT_SUBSTITUTABLE"
NOT_CLOSED_PAIR = "NOT_CLOSED_PAIR"
CLOSURE_NOT_LAST = "CLOSURE_NOT_LAST"
SPLIT_REQUIRED = "SPLIT_REQUIRED"
BRANCH_NOT_COMPLEMENTARY = "BRANCH_NOT_COMPLEMENTARY"
LINES_AFTER_SPLIT = "LINES_AFTER_SPLIT"


class BadInitialSegmentError(Exception):
    pass


class NotSaturatedError(Exception):
    pass


@dataclass(frozen=True)
class Diagnostic:
    line: int
    code: str
    message: str
    refs: tuple[int, ...] = ()


@dataclass(frozen=True)
class Sequent:
    premises: tuple[Formula, ...]
    conclusion: Formula

    def __str__(self) -> str:
        left = ", ".join(format_formula(p) for p in self.premises)
        return f"{left} |- {format_formula(self.conclusion)}" if left else f"|- {format_formula(self.conclusion)}"


def parse_sequent(text: str) -> Sequent:
    """Parse ``G1, ..., Gn |- C`` (premises optional)."""
    tokens = tokenize(text)
    splits = [i for i, tok in enumerate(tokens) if tok.kind == "|-"]
    if len(splits) != 1:
        tok = tokens[splits[1]] if len(splits) > 1 else tokens[-1]
        raise ParseError(tok.line, tok.column, "a sequent has exactly one '|-'")
    turnstile = splits[0]

    def formula_runs(toks: list[Token]) -> list[list[Token]]:
        runs: list[list[Token]] = []
        current: list[Token] = []
        depth = 0
        for tok in toks:
            if tok.kind == "(":
                depth += 1
            elif tok.kind == ")":
                depth -= 1
            if tok.kind == "," and depth == 0:
                runs.append(current)
                current = []
            else:
                current.append(tok)
        runs.append(current)
        return runs

    left = tokens[:turnstile]
    premises: list[Formula] = []
    if left:
        for run in formula_runs(left):
            if not run:
                raise ParseError(tokens[turnstile].line, tokens[turnstile].column, "empty premise before '|-'")
            premises.append(parse_formula_tokens(run))
    conclusion_toks = tokens[turnstile + 1 : -1]
    if not conclusion_toks:
        tok = tokens[turnstile]
        raise ParseError(tok.line, tok.column + 2, "missing conclusion after '|-'")
    return Sequent(tuple(premises), parse_formula_tokens(conclusion_toks))


@dataclass
class Countermodel:
    """Partial valuation of ground atoms; unmentioned atoms are unconstrained."""

    assignments: dict[Atom, Sign]

    def __str__(self) -> str:
        items = sorted(self.assignments.items(), key=lambda kv: format_formula(kv[0]))
        return ", ".join(f"v({format_formula(a)})={s}" for a, s in items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Countermodel):
            return NotImplemented
        return self.assignments == other.assignments


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class CountermodelFound:
    model: Countermodel
    branch: int  # start line of the leaf block the model was read from


@dataclass(frozen=True)
class Incomplete:
    open_branches: tuple[int, ...]  # start lines of open leaf blocks / pending splits


@dataclass(frozen=True)
class Invalid:
    pass


Verdict = Valid | CountermodelFound | Incomplete | Invalid


@dataclass(frozen=True)
class LineResolution:
    """Which rule and source justified a line, as resolved by the checker."""

    kind: str  # "premise" | "conclusion" | "rule" | "closure"
    rule: object | None = None  # RuleId for rule lines
    source: int | None = None
    refs: tuple[int, ...] = ()


@dataclass
class CheckReport:
    verdict: Verdict
    diagnostics: list[Diagnostic]
    sequent: Sequent | None
    resolutions: dict[int, LineResolution] = field(default_factory=dict)


def _initial_segment(script: ProofScript) -> tuple[Sequent | None, list[Diagnostic]]:
    diags: list[Diagnostic] = []
    premises: list[Formula] = []
    seen_premises = 0
    conclusion: Formula | None = None
    conclusion_line = 0
    for ln in script.lines:
        just = ln.justification
        if isinstance(just, Premise):
            seen_premises += 1
            if conclusion is not None:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"premise on line {ln.number} appears after the conclusion "
                                        f"(line {conclusion_line}); premises come first"))
            elif ln.depth != 0:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"premise on line {ln.number} is inside a branch block"))
            elif ln.content.sign is not Sign.T:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"premises are labeled T, but line {ln.number} is labeled F"))
            else:
                premises.append(ln.content.formula)
        elif isinstance(just, Conclusion):
            if conclusion is not None:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"only one conclusion line is allowed (line {conclusion_line} "
                                        f"already is the conclusion)"))
            elif ln.number != seen_premises + 1 or ln.depth != 0:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"the conclusion must be the line right after the premises, "
                                        f"at the top level; line {ln.number} is not"))
                conclusion = ln.content.formula if ln.content.sign is Sign.F else conclusion
                conclusion_line = ln.number
            elif ln.content.sign is not Sign.F:
                diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                        f"the conclusion is labeled F, but line {ln.number} is labeled T"))
            else:
                conclusion = ln.content.formula
                conclusion_line = ln.number
        elif conclusion is None:
            diags.append(Diagnostic(ln.number, BAD_INITIAL_SEGMENT,
                                    f"line {ln.number} comes before the conclusion: a proof starts with "
                                    f"premises ('pre') followed by one conclusion line"))
            break
    if conclusion is None:
        if not diags:
            anchor = len(script.lines) if script.lines else 1
            diags.append(Diagnostic(anchor, BAD_INITIAL_SEGMENT, "the proof has no conclusion line"))
        return None, diags
    return Sequent(tuple(premises), conclusion), diags


def theorem_of(script: ProofScript) -> Sequent:
    """Premises and conclusion stated by the initial segment."""
    sequent, diags = _initial_segment(script)
    if diags or sequent is None:
        raise BadInitialSegmentError(diags[0].message if diags else "malformed initial segment")
    return sequent


def matches_sequent(script: ProofScript, expected: Sequent) -> bool:
    """True iff the proof states `expected` (premise order is irrelevant)."""
    try:
        actual = theorem_of(script)
    except BadInitialSegmentError:
        return False
    return (Counter(actual.premises) == Counter(expected.premises)
            and actual.conclusion == expected.conclusion)


def saturated(branch: list[SignedFormula]) -> bool:
    """No expandable formula is left: α fully expanded, β at least one side, no quantifiers."""
    present = set(branch)
    for sf in present:
        rule = rule_for(sf)
        if rule is None:
            continue
        kind = KIND[rule]
        if kind is RuleKind.ALPHA:
            if any(c not in present for c in components(sf)):
                return False
        elif kind is RuleKind.BETA:
            if not any(c in present for c in components(sf)):
                return False
        else:  # quantified formulas admit arbitrarily many instantiations
            return False
    return True


def _ground_atoms(branch: list[SignedFormula]) -> dict[Atom, Sign] | None:
    """Atom assignments of a branch, or None if some atom carries a variable."""
    assignments: dict[Atom, Sign] = {}
    for sf in branch:
        if isinstance(sf.formula, Atom):
            if sf.formula.args:
                return None
            assignments.setdefault(sf.formula, sf.sign)
    return assignments


def extract_countermodel(branch: list[SignedFormula]) -> Countermodel:
    """Read the valuation off a saturated open branch (signed atoms only)."""
    if not saturated(branch):
        raise NotSaturatedError("the branch still has expandable formulas")
    assignments = _ground_atoms(branch)
    if assignments is None:
        raise NotSaturatedError("the branch contains non-ground atoms")
    return Countermodel(assignments)


class _Checker:
    def __init__(self, script: ProofScript):
        self.script = script
        self.diags: list[Diagnostic] = []
        self.resolutions: dict[int, LineResolution] = {}
        self.pending_splits: list[Block] = []  # lone child blocks awaiting a sibling
        self._names_cache: dict[int, set[str]] = {}

    def diag(self, line: int, code: str, message: str, refs: tuple[int, ...] = ()) -> None:
        self.diags.append(Diagnostic(line, code, message, refs))

    def has_diag(self, line: int) -> bool:
        return any(d.line == line for d in self.diags)

    def names_at(self, number: int) -> set[str]:
        names = self._names_cache.get(number)
        if names is None:
            content = self.script.line(number).content
            names = occurring_names(content.formula) if content is not None else set()
            self._names_cache[number] = names
        return names

    # --- per-line checks ---

    def check_rule_line(self, ln: ProofLine) -> None:
        just = ln.justification
        assert isinstance(just, RuleApp)
        n = ln.number
        if len(just.refs) != 1:
            self.diag(n, BAD_REF,
                      f"a rule application cites exactly one line, line {n} cites {len(just.refs)}",
                      just.refs)
            return
        m = just.refs[0]
        ancestor_numbers = {a.number for a in self.script.ancestors(n)}
        if m not in ancestor_numbers:
            self.diag(n, SCOPE_VIOLATION,
                      f"line {m} cannot be referenced from line {n}: it is not in this branch",
                      (m,))
            return
        source = self.script.line(m)
        if source.content is None:
            self.diag(n, BAD_REF, f"line {m} closes a branch and carries no formula", (m,))
            return
        rule = rule_for(source.content)
        if rule is None:
            self.diag(n, WRONG_COMPONENT,
                      f"no rule applies to line {m}: {source.content} is atomic", (m,))
            return
        if just.rule is not None and just.rule is not rule:
            self.diag(n, RULE_MISMATCH,
                      f"line {n} names rule {just.rule}, but line {m} ({source.content}) "
                      f"is expanded by {rule}", (m,))
            return
        self.resolutions[n] = LineResolution("rule", rule, m, (m,))
        kind = KIND[rule]
        if kind is RuleKind.BETA:
            block = self.script.block_of(n)
            if block is self.script.root or block.start != n:
                self.diag(n, SPLIT_REQUIRED,
                          f"the {rule} rule splits the branch: line {n} must open a '{{' block "
                          f"(and a sibling block derives the other component)", (m,))
                return
            if ln.content not in components(source.content):
                want = " and ".join(str(c) for c in components(source.content))
                self.diag(n, WRONG_COMPONENT,
                          f"the {rule} rule applied to line {m} ({source.content}) yields {want}; "
                          f"line {n} is {ln.content}", (m,))
            return
        if kind is RuleKind.ALPHA:
            if ln.content not in components(source.content):
                want = " or ".join(str(c) for c in components(source.content))
                self.diag(n, WRONG_COMPONENT,
                          f"the {rule} rule applied to line {m} ({source.content}) yields {want}; "
                          f"line {n} is {ln.content}", (m,))
            return

        # γ/δ rules: the line must be an instance of the source's body
        var, body = quantifier_parts(source.content)
        if ln.content.sign is not source.content.sign:
            self.diag(n, WRONG_COMPONENT,
                      f"the {rule} rule keeps the sign of line {m} ({source.content}); "
                      f"line {n} is labeled {ln.content.sign}", (m,))
            return
        result, blocked = match_instance_detail(body, var, ln.content.formula)
        if blocked is not None:
            self.diag(n, NOT_SUBSTITUTABLE,
                      f"the {rule} rule is not applied correctly to {source.content} in line {m}: "
                      f"the term {format_term(blocked)} is not substitutable for {var} "
                      f"in {format_formula(body)}", (m,))
            return
        if result == ANY_TERM:
            return
        if not isinstance(result, Witness):
            self.diag(n, WRONG_COMPONENT,
                      f"the {rule} rule is not applied correctly to {source.content} in line {m}: "
                      f"{format_formula(ln.content.formula)} is not obtained by substituting "
                      f"a term for {var}", (m,))
            return
        if kind is RuleKind.DELTA:
            term = result.term
            if not isinstance(term, Var):
                self.diag(n, NOT_FRESH,
                          f"the {rule} rule is not applied correctly to {source.content} in line {m}: "
                          f"the term {format_term(term)} is not a new variable", (m,))
                return
            for a in self.script.ancestors(n):
                if term.name in self.names_at(a.number):
                    self.diag(n, NOT_FRESH,
                              f"the {rule} rule is not applied correctly to {source.content} in "
                              f"line {m} to obtain {ln.content} in line {n}: the term {term.name} "
                              f"is not a new variable (see line {a.number})", (a.number,))
                    return

    def check_closure_line(self, ln: ProofLine) -> None:
        just = ln.justification
        assert isinstance(just, Closure)
        n = ln.number
        ancestor_numbers = {a.number for a in self.script.ancestors(n)}
        for m in just.refs:
            if m not in ancestor_numbers:
                self.diag(n, SCOPE_VIOLATION,
                          f"line {m} cannot be referenced from line {n}: it is not in this branch",
                          (m,))
                return
        a, b = (self.script.line(m) for m in just.refs)
        if a.content is None or b.content is None:
            bad = just.refs[0] if a.content is None else just.refs[1]
            self.diag(n, BAD_REF, f"line {bad} closes a branch and carries no formula", (bad,))
            return
        self.resolutions[n] = LineResolution("closure", None, None, just.refs)
        if a.content.sign is b.content.sign or a.content.formula != b.content.formula:
            message = (f"lines {just.refs[0]} ({a.content}) and {just.refs[1]} ({b.content}) "
                       f"are not a contradictory pair T/F of the same formula")
            if (a.content.formula != b.content.formula
                    and alpha_equal(a.content.formula, b.content.formula)):
                message += " (they differ only in the names of bound variables)"
            self.diag(n, NOT_CLOSED_PAIR, message, just.refs)
            return
        block = self.script.block_of(n)
        if block.end != n:
            self.diag(n, CLOSURE_NOT_LAST,
                      f"line {n} closes this branch, so nothing may follow it in the block")

    # --- block discipline (β splits) ---

    def beta_resolution(self, block: Block) -> LineResolution | None:
        res = self.resolutions.get(block.start)
        if res is not None and res.kind == "rule" and KIND[res.rule] is RuleKind.BETA:
            return res
        return None

    def check_blocks(self, block: Block) -> None:
        kids = block.children
        if kids:
            first_split = kids[0].start
            for ln in self.script.direct_lines(block):
                if ln.number > first_split:
                    self.diag(ln.number, LINES_AFTER_SPLIT,
                              f"line {ln.number} continues a branch that was already split at "
                              f"line {first_split}", (first_split,))
            if len(kids) > 2:
                self.diag(kids[2].start, LINES_AFTER_SPLIT,
                          f"the split at line {first_split} already has two branches; "
                          f"a third starts at line {kids[2].start}", (first_split,))
            first = self.beta_resolution(kids[0])
            if first is None:
                if not self.has_diag(kids[0].start):
                    self.diag(kids[0].start, BRANCH_NOT_COMPLEMENTARY,
                              f"the first line of a branch block must apply a branching rule "
                              f"(&F, |T or ->T) to a line of the parent branch")
            if len(kids) >= 2:
                second = self.beta_resolution(kids[1])
                if second is None:
                    if not self.has_diag(kids[1].start):
                        self.diag(kids[1].start, BRANCH_NOT_COMPLEMENTARY,
                                  f"the first line of a branch block must apply a branching rule "
                                  f"(&F, |T or ->T) to a line of the parent branch")
                elif first is not None:
                    if first.source != second.source:
                        self.diag(kids[1].start, BRANCH_NOT_COMPLEMENTARY,
                                  f"sibling branches must expand the same line: the branch at line "
                                  f"{kids[0].start} expands line {first.source}, the branch at line "
                                  f"{kids[1].start} expands line {second.source}",
                                  (kids[0].start, first.source, second.source))
                    elif not (self.has_diag(kids[0].start) or self.has_diag(kids[1].start)):
                        source = self.script.line(first.source)
                        want = Counter(components(source.content))
                        got = Counter([self.script.line(kids[0].start).content,
                                       self.script.line(kids[1].start).content])
                        if want != got:
                            want_text = " and ".join(str(c) for c in components(source.content))
                            self.diag(kids[1].start, BRANCH_NOT_COMPLEMENTARY,
                                      f"the two branches of the split on line {first.source} "
                                      f"({source.content}) must derive {want_text}, one each",
                                      (kids[0].start, first.source))
            elif first is not None:
                # a lone branch is a proof still in progress, not an error
                self.pending_splits.append(kids[0])
            for child in kids:
                self.check_blocks(child)

    # --- verdict ---

    def branch_lines(self, leaf: Block) -> list[SignedFormula]:
        chain: set[int] = set()
        cursor: Block | None = leaf
        while cursor is not None:
            chain.add(id(cursor))
            cursor = self.script.parent(cursor)
        return [ln.content for ln in self.script.lines[: leaf.end]
                if ln.content is not None and id(self.script.block_of(ln.number)) in chain]

    def verdict(self) -> Verdict:
        if self.diags:
            return Invalid()
        script = self.script
        open_leaves = []
        for leaf in script.leaf_blocks():
            direct = script.direct_lines(leaf)
            if not direct or not direct[-1].is_closure:
                open_leaves.append(leaf)
        if not open_leaves and not self.pending_splits:
            return Valid()
        for leaf in sorted(open_leaves, key=lambda b: b.start):
            branch = self.branch_lines(leaf)
            present = set(branch)
            if any(SignedFormula(sf.sign.flipped, sf.formula) in present for sf in branch):
                continue  # contradictory but never closed: still the student's move
            if saturated(branch):
                assignments = _ground_atoms(branch)
                if assignments is not None:
                    return CountermodelFound(Countermodel(assignments), leaf.start)
        open_ids = {leaf.start for leaf in open_leaves} | {b.start for b in self.pending_splits}
        return Incomplete(tuple(sorted(open_ids)))


def check(script: ProofScript) -> CheckReport:
    """Validate every line and classify the proof; all failures become diagnostics."""
    chk = _Checker(script)
    sequent, seg_diags = _initial_segment(script)
    chk.diags.extend(seg_diags)
    for ln in script.lines:
        just = ln.justification
        if isinstance(just, Premise):
            chk.resolutions[ln.number] = LineResolution("premise")
        elif isinstance(just, Conclusion):
            chk.resolutions[ln.number] = LineResolution("conclusion")
        elif isinstance(just, RuleApp):
            chk.check_rule_line(ln)
        else:
            chk.check_closure_line(ln)
    if script.lines:
        chk.check_blocks(script.root)
    chk.diags.sort(key=lambda d: d.line)
    report = CheckReport(chk.verdict(), chk.diags, sequent, chk.resolutions)
    return report

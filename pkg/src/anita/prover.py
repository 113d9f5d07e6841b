"""Automatic propositional tableau prover and truth-table entailment oracle.

prove() builds the tableau for a sequent with a fixed strategy: α rules
before β rules, FIFO within each class, branches closed as soon as a
complementary pair of signed atoms appears.  Closed tableaux are rendered as
a canonical linear proof (explicit numbers and rule names) that the checker
accepts; an open tableau yields the countermodel of its leftmost saturated
branch.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .checker import Countermodel, Sequent
from .formula import And, Atom, Formula, Implies, Not, Or, Sign, SignedFormula, is_propositional
from .rules import KIND, RuleKind, components, rule_for
from .script import (
    Block,
    CONCLUSION,
    Closure,
    PREMISE,
    ProofLine,
    ProofScript,
    RuleApp,
    RuleId,
)


class NotPropositionalError(Exception):
    pass


class TooManyAtomsError(Exception):
    pass


class BudgetExceededError(Exception):
    pass


@dataclass(frozen=True)
class Closed:
    script: ProofScript


@dataclass(frozen=True)
class Open:
    model: Countermodel


ProverResult = Closed | Open


def _require_propositional(seq: Sequent) -> None:
    for phi in (*seq.premises, seq.conclusion):
        if not is_propositional(phi):
            raise NotPropositionalError(
                "only propositional sequents can be proved automatically "
                "(no quantifiers, no terms)")


@dataclass(eq=False)
class _Entry:
    sf: SignedFormula
    rule: RuleId | None
    source: "_Entry | None"
    number: int = 0


@dataclass(eq=False)
class _Node:
    entries: list[_Entry] = field(default_factory=list)
    children: list["_Node"] = field(default_factory=list)
    closing: tuple[_Entry, _Entry] | None = None


class _Tableau:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0
        self.open_models: list[dict[Atom, Sign]] = []

    def new_node(self) -> _Node:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(f"tableau exceeded the node budget of {self.budget}")
        return _Node()

    def grow(self, node: _Node, queue: deque[_Entry], path: dict[SignedFormula, _Entry]) -> None:
        """Expand one branch until it closes or saturates; β splits recurse."""
        while True:
            pick_index = None
            for i, entry in enumerate(queue):
                if KIND[rule_for(entry.sf)] is RuleKind.ALPHA:
                    pick_index = i
                    break
            if pick_index is None and queue:
                pick_index = 0  # oldest β
            if pick_index is None:
                self.open_models.append(
                    {sf.formula: sf.sign for sf in path if isinstance(sf.formula, Atom)})
                return
            pick = queue[pick_index]
            del queue[pick_index]
            rule = rule_for(pick.sf)
            if KIND[rule] is RuleKind.ALPHA:
                for comp in components(pick.sf):
                    if comp in path:
                        continue
                    entry = _Entry(comp, rule, pick)
                    node.entries.append(entry)
                    path[comp] = entry
                    complement = SignedFormula(comp.sign.flipped, comp.formula)
                    if isinstance(comp.formula, Atom) and complement in path:
                        node.closing = (path[complement], entry)
                        return
                    if rule_for(comp) is not None:
                        queue.append(entry)
            else:
                for comp in components(pick.sf):
                    child = self.new_node()
                    node.children.append(child)
                    entry = _Entry(comp, rule, pick)
                    child.entries.append(entry)
                    child_path = dict(path)
                    complement = SignedFormula(comp.sign.flipped, comp.formula)
                    if isinstance(comp.formula, Atom) and complement in child_path:
                        child.closing = (child_path[complement], entry)
                        continue
                    already = comp in child_path
                    child_path.setdefault(comp, entry)
                    child_queue = deque(queue)
                    if not already and rule_for(comp) is not None:
                        child_queue.append(entry)
                    self.grow(child, child_queue, child_path)
                return


def _linearize(root: _Node) -> ProofScript:
    lines: list[ProofLine] = []
    number = 0

    def justification(entry: _Entry):
        if entry.rule is None:
            return PREMISE if entry.sf.sign is Sign.T else CONCLUSION
        return RuleApp(entry.rule, (entry.source.number,))

    def emit(node: _Node, depth: int) -> Block:
        nonlocal number
        start = number + 1
        for entry in node.entries:
            number += 1
            entry.number = number
            lines.append(ProofLine(number, entry.sf, justification(entry), depth))
        if node.closing is not None:
            number += 1
            a, b = node.closing
            refs = tuple(sorted((a.number, b.number)))
            lines.append(ProofLine(number, None, Closure(refs), depth))
        block = Block(start, number)
        for child in node.children:
            block.children.append(emit(child, depth + 1))
        block.end = number
        return block

    root_block = emit(root, 0)
    root_block.start = 1
    return ProofScript(tuple(lines), root_block)


def prove(seq: Sequent, node_budget: int = 1_000_000) -> ProverResult:
    """Prove or refute a propositional sequent.

    Closed(script): every branch closed; the script re-checks as Valid.
    Open(model): the countermodel read off the leftmost saturated open branch.
    """
    _require_propositional(seq)
    tableau = _Tableau(node_budget)
    root = tableau.new_node()
    queue: deque[_Entry] = deque()
    path: dict[SignedFormula, _Entry] = {}
    initial = [SignedFormula(Sign.T, p) for p in seq.premises]
    initial.append(SignedFormula(Sign.F, seq.conclusion))
    closed_early = False
    for sf in initial:
        entry = _Entry(sf, None, None)
        root.entries.append(entry)
        if sf in path:
            continue
        complement = SignedFormula(sf.sign.flipped, sf.formula)
        if isinstance(sf.formula, Atom) and complement in path and root.closing is None:
            root.closing = (path[complement], entry)
            closed_early = True
        path[sf] = entry
        if rule_for(sf) is not None:
            queue.append(entry)
    if not closed_early:
        tableau.grow(root, queue, path)
    if tableau.open_models:
        return Open(Countermodel(tableau.open_models[0]))
    return Closed(_linearize(root))


def truth_table_entails(seq: Sequent, max_atoms: int = 24) -> tuple[bool, Countermodel | None]:
    """Brute-force semantic check: do all premise-satisfying valuations satisfy the conclusion?

    Returns (holds, witness); the witness is a total falsifying valuation.
    """
    _require_propositional(seq)
    names: set[str] = set()
    formulas = (*seq.premises, seq.conclusion)

    def collect(phi: Formula) -> None:
        if isinstance(phi, Atom):
            names.add(phi.predicate)
        elif isinstance(phi, Not):
            collect(phi.operand)
        else:
            collect(phi.left)
            collect(phi.right)

    for phi in formulas:
        collect(phi)
    atoms = sorted(names)
    if len(atoms) > max_atoms:
        raise TooManyAtomsError(f"{len(atoms)} atoms exceed the limit of {max_atoms}")

    def evaluate(phi: Formula, env: dict[str, bool]) -> bool:
        if isinstance(phi, Atom):
            return env[phi.predicate]
        if isinstance(phi, Not):
            return not evaluate(phi.operand, env)
        if isinstance(phi, And):
            return evaluate(phi.left, env) and evaluate(phi.right, env)
        if isinstance(phi, Or):
            return evaluate(phi.left, env) or evaluate(phi.right, env)
        return (not evaluate(phi.left, env)) or evaluate(phi.right, env)

    for values in itertools.product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, values))
        if all(evaluate(p, env) for p in seq.premises) and not evaluate(seq.conclusion, env):
            witness = Countermodel({Atom(name): (Sign.T if value else Sign.F)
                                    for name, value in env.items()})
            return False, witness
    return True, None

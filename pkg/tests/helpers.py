"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from anita.checker import Countermodel, Sequent
from anita.formula import (
    And,
    Atom,
    Compound,
    Exists,
    ForAll,
    Formula,
    Implies,
    Not,
    Or,
    Sign,
    SignedFormula,
    Term,
    Var,
)
from anita.script import (
    Block,
    CONCLUSION,
    Closure,
    PREMISE,
    ProofLine,
    ProofScript,
    RuleApp,
    RuleId,
)

# name pools chosen to avoid the quantifier prefix (Ax...) and sign letters (T/F)
PRED_NAMES = ("P", "Q", "R", "H", "M")
PROP_NAMES = ("A", "B", "C", "D")
VAR_NAMES = ("x", "y", "z", "w", "a", "s")
FUN_NAMES = ("f", "g")


# --- formula generators ---

def random_term(rng: random.Random, depth: int = 1) -> Term:
    if depth > 0 and rng.random() < 0.25:
        n_args = rng.randint(1, 2)
        return Compound(rng.choice(FUN_NAMES),
                        tuple(random_term(rng, depth - 1) for _ in range(n_args)))
    return Var(rng.choice(VAR_NAMES))


def random_formula(rng: random.Random, depth: int, first_order: bool = True) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        if first_order and rng.random() < 0.6:
            n_args = rng.randint(1, 2)
            return Atom(rng.choice(PRED_NAMES),
                        tuple(random_term(rng) for _ in range(n_args)))
        return Atom(rng.choice(PROP_NAMES))
    kinds = ["not", "and", "or", "implies"]
    if first_order:
        kinds += ["forall", "exists"]
    kind = rng.choice(kinds)
    if kind == "not":
        return Not(random_formula(rng, depth - 1, first_order))
    if kind == "forall":
        return ForAll(rng.choice(VAR_NAMES), random_formula(rng, depth - 1, first_order))
    if kind == "exists":
        return Exists(rng.choice(VAR_NAMES), random_formula(rng, depth - 1, first_order))
    left = random_formula(rng, depth - 1, first_order)
    right = random_formula(rng, depth - 1, first_order)
    return {"and": And, "or": Or, "implies": Implies}[kind](left, right)


def random_prop_formula(rng: random.Random, depth: int, atoms: tuple[str, ...]) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        return Atom(rng.choice(atoms))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_prop_formula(rng, depth - 1, atoms))
    left = random_prop_formula(rng, depth - 1, atoms)
    right = random_prop_formula(rng, depth - 1, atoms)
    return (And, Or, Implies)[kind - 1](left, right)


def random_sequents(count: int, seed: int, depth: int = 4,
                    atoms: tuple[str, ...] = ("A", "B", "C")) -> list[Sequent]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        premises = tuple(random_prop_formula(rng, depth, atoms)
                         for _ in range(rng.randint(0, 2)))
        out.append(Sequent(premises, random_prop_formula(rng, depth, atoms)))
    return out


# --- exhaustive small-sequent enumeration ---

def formulas_by_count(max_count: int, atom_names: tuple[str, ...]) -> list[list[Formula]]:
    """All formulas with exactly c connectives over the given 0-ary atoms, c = 0..max_count."""
    by_count: list[list[Formula]] = [[Atom(a) for a in atom_names]]
    for c in range(1, max_count + 1):
        level: list[Formula] = [Not(f) for f in by_count[c - 1]]
        for i in range(c):
            j = c - 1 - i
            for left in by_count[i]:
                for right in by_count[j]:
                    level.append(And(left, right))
                    level.append(Or(left, right))
                    level.append(Implies(left, right))
        by_count.append(level)
    return by_count


def exhaustive_sequents(budget: int = 3, atoms: tuple[str, ...] = ("A", "B")):
    """Every sequent with at most 2 (unordered) premises and `budget` connectives in total."""
    pool = [(c, f) for c, level in enumerate(formulas_by_count(budget, atoms)) for f in level]
    for _, conclusion in pool:
        yield Sequent((), conclusion)
    for (c1, p), (c2, conclusion) in itertools.product(pool, pool):
        if c1 + c2 <= budget:
            yield Sequent((p,), conclusion)
    for i, (c1, p1) in enumerate(pool):
        for j in range(i, len(pool)):
            c2, p2 = pool[j]
            if c1 + c2 > budget:
                continue
            for c3, conclusion in pool:
                if c1 + c2 + c3 <= budget:
                    yield Sequent((p1, p2), conclusion)


# --- independent semantic oracles ---

def evaluate(phi: Formula, env: dict[str, bool]) -> bool:
    t = type(phi)
    if t is Atom:
        return env[phi.predicate]
    if t is Not:
        return not evaluate(phi.operand, env)
    if t is And:
        return evaluate(phi.left, env) and evaluate(phi.right, env)
    if t is Or:
        return evaluate(phi.left, env) or evaluate(phi.right, env)
    return (not evaluate(phi.left, env)) or evaluate(phi.right, env)


def atom_names(seq: Sequent) -> set[str]:
    names: set[str] = set()

    def collect(phi: Formula) -> None:
        if type(phi) is Atom:
            names.add(phi.predicate)
        elif type(phi) is Not:
            collect(phi.operand)
        else:
            collect(phi.left)
            collect(phi.right)

    for f in (*seq.premises, seq.conclusion):
        collect(f)
    return names


def falsifies_under_all_extensions(seq: Sequent, model: Countermodel) -> bool:
    """True iff every total extension of the partial model falsifies the sequent."""
    fixed = {a.predicate: (s is Sign.T) for a, s in model.assignments.items()}
    free = sorted(atom_names(seq) - set(fixed))
    for combo in itertools.product((False, True), repeat=len(free)):
        env = dict(fixed)
        env.update(zip(free, combo))
        if not all(evaluate(p, env) for p in seq.premises) or evaluate(seq.conclusion, env):
            return False
    return True


# --- proof-script generator (parse-valid, not necessarily rule-valid) ---

def random_script(rng: random.Random) -> ProofScript:
    counter = itertools.count(1)
    lines: list[ProofLine] = []

    def make_line(depth: int) -> None:
        number = next(counter)
        roll = rng.random()
        if number >= 3 and roll < 0.15:
            refs = tuple(sorted(rng.sample(range(1, number), 2)))
            lines.append(ProofLine(number, None, Closure((refs[0], refs[1])), depth))
            return
        sf = SignedFormula(rng.choice((Sign.T, Sign.F)), random_formula(rng, 2))
        if number == 1 or roll < 0.3:
            just = PREMISE if rng.random() < 0.5 else CONCLUSION
        else:
            name = rng.choice(list(RuleId) + [None, None])
            n_refs = 1 if rng.random() < 0.8 else rng.randint(1, 3)
            refs = tuple(rng.choice(range(1, number)) for _ in range(n_refs))
            just = RuleApp(name, refs)
        lines.append(ProofLine(number, sf, just, depth))

    def build_block(depth: int, budget: int) -> Block:
        direct = rng.randint(1, max(1, min(3, budget)))
        start = len(lines) + 1
        for _ in range(direct):
            make_line(depth)
        budget -= direct
        block = Block(start, len(lines))
        if budget >= 2 and depth < 3 and rng.random() < 0.6:
            half = budget // 2
            block.children.append(build_block(depth + 1, half))
            block.children.append(build_block(depth + 1, budget - half))
        block.end = len(lines)
        return block

    root = build_block(0, rng.randint(1, 14))
    root.start = 1
    return ProofScript(tuple(lines), root)

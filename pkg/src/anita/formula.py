"""First-order formulas and terms: parsing, printing, substitution, matching.

Concrete syntax conventions:

* atoms/predicates start with a capital letter (``A``, ``H(x)``),
* variables start with a lowercase letter (``x``, ``x0``); every lowercase
  identifier parses as a variable — "constant-ness" is a freshness property
  decided by the proof checker, not the grammar,
* connectives are ``~ & | ->`` and quantifiers ``Ax`` / ``Ex`` (the letter A
  or E immediately followed by the variable, no space),
* precedence, tightest first: ``~``, quantifiers, ``&``, ``|``, ``->``;
  binary connectives associate to the right, so ``~A&B->C`` is
  ``((~A)&B)->C`` and ``A|B|C`` is ``A|(B|C)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class ParseError(Exception):
    """Syntax error with 1-based line/column position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class NotSubstitutableError(Exception):
    """Substituting the term would capture one of its variables."""

    def __init__(self, var: str, term_text: str, binder: str):
        super().__init__(
            f"term {term_text} is not substitutable for {var}: "
            f"a variable of the term would be captured by a quantifier binding '{binder}'"
        )
        self.var = var
        self.binder = binder


# --- terms and formulas ---

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Compound:
    """Function application; a 0-ary Compound acts as an explicit constant."""

    functor: str
    args: tuple["Term", ...] = ()


Term = Var | Compound


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Atom | Not | And | Or | Implies | ForAll | Exists


class Sign(Enum):
    T = "T"
    F = "F"

    def __str__(self) -> str:
        return self.value

    @property
    def flipped(self) -> "Sign":
        return Sign.F if self is Sign.T else Sign.T


@dataclass(frozen=True)
class SignedFormula:
    sign: Sign
    formula: Formula

    def __str__(self) -> str:
        return f"{self.sign} {format_formula(self.formula)}"


# --- match results (γ/δ-rule witness recovery) ---

@dataclass(frozen=True)
class Witness:
    term: Term


@dataclass(frozen=True)
class AnyTerm:
    pass


@dataclass(frozen=True)
class NoMatch:
    pass


MatchResult = Witness | AnyTerm | NoMatch
ANY_TERM = AnyTerm()
NO_MATCH = NoMatch()


# --- lexer (shared with the proof-script parser) ---

@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "lident", "quant", "int", "eof" or the symbol itself
    text: str
    line: int
    column: int
    value: str = ""  # variable name for "quant" tokens


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<quant>[AE][a-z][A-Za-z0-9]*)
      | (?P<ident>[A-Z][A-Za-z0-9]*)
      | (?P<lident>[a-z][A-Za-z0-9]*)
      | (?P<int>[0-9]+)
      | (?P<sym><->|\|-|->|[~&|(),.@{}])
    """,
    re.VERBOSE,
)


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    """Lex `text` into tokens (comments and whitespace dropped), ending with EOF."""
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, column, f"unknown token {text[pos]!r}")
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "quant":
            tokens.append(Token("quant", lexeme, line, column, value=lexeme[1:]))
        elif kind == "sym":
            tokens.append(Token(lexeme, lexeme, line, column))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, lexeme, line, column))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            column = len(lexeme) - lexeme.rfind("\n")
        else:
            column += len(lexeme)
        pos = m.end()
    tokens.append(Token("eof", "", line, column))
    return tokens


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class _FormulaParser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok: Token, message: str) -> ParseError:
        return ParseError(tok.line, tok.column, message)

    def parse(self) -> Formula:
        phi = self.implication()
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error(tok, f"unexpected {_describe(tok)} after the formula")
        return phi

    def implication(self) -> Formula:
        left = self.disjunction()
        tok = self.peek()
        if tok.kind == "->":
            self.advance()
            return Implies(left, self.implication())
        if tok.kind == "<->":
            raise self.error(tok, "the biconditional '<->' is not part of the rule set; rewrite it with '->' and '&'")
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        if self.peek().kind == "|":
            self.advance()
            return Or(left, self.disjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        if self.peek().kind == "&":
            self.advance()
            return And(left, self.conjunction())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.advance()
            return Not(self.unary())
        if tok.kind == "quant":
            self.advance()
            body = self.unary()
            return (ForAll if tok.text[0] == "A" else Exists)(tok.value, body)
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            args = self.arglist() if self.peek().kind == "(" else ()
            return Atom(tok.text, args)
        if tok.kind == "(":
            self.advance()
            phi = self.implication()
            closing = self.peek()
            if closing.kind != ")":
                raise self.error(closing, f"expected ')', found {_describe(closing)}")
            self.advance()
            return phi
        if tok.kind == "lident":
            raise self.error(tok, f"{tok.text!r} cannot begin a formula: atoms and predicates start with a capital letter")
        if tok.kind == "<->":
            raise self.error(tok, "the biconditional '<->' is not part of the rule set; rewrite it with '->' and '&'")
        raise self.error(tok, f"expected a formula, found {_describe(tok)}")

    def arglist(self) -> tuple[Term, ...]:
        self.advance()  # '('
        if self.peek().kind == ")":
            raise self.error(self.peek(), "empty argument list; write a bare name instead")
        args = [self.term()]
        while self.peek().kind == ",":
            self.advance()
            args.append(self.term())
        closing = self.peek()
        if closing.kind != ")":
            raise self.error(closing, f"expected ',' or ')', found {_describe(closing)}")
        self.advance()
        return tuple(args)

    def term(self) -> Term:
        tok = self.peek()
        if tok.kind == "lident":
            self.advance()
            if self.peek().kind == "(":
                return Compound(tok.text, self.arglist())
            return Var(tok.text)
        if tok.kind in ("ident", "quant"):
            raise self.error(tok, f"terms start with a lowercase letter, found {_describe(tok)}")
        raise self.error(tok, f"expected a term, found {_describe(tok)}")


def parse_formula(text: str) -> Formula:
    """Parse an ASCII formula; raises ParseError with 1-based line/column."""
    return _FormulaParser(tokenize(text)).parse()


def parse_formula_tokens(tokens: list[Token]) -> Formula:
    """Parse a formula from an already-lexed token run (must be fully consumed)."""
    if tokens and tokens[-1].kind != "eof":
        last = tokens[-1]
        tokens = tokens + [Token("eof", "", last.line, last.column + len(last.text))]
    elif not tokens:
        raise ParseError(1, 1, "expected a formula, found end of input")
    return _FormulaParser(tokens).parse()


# --- printing ---

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, ForAll: 4, Exists: 4, Atom: 5}

_STYLES = {
    "ascii": {"not": "~", "and": "&", "or": "|", "implies": "->", "forall": "A", "exists": "E", "spaced": False},
    "unicode": {"not": "¬", "and": "∧", "or": "∨", "implies": "→",
                "forall": "∀", "exists": "∃", "spaced": False},
    "latex": {"not": "\\lnot ", "and": "\\land", "or": "\\lor", "implies": "\\rightarrow",
              "forall": "\\forall ", "exists": "\\exists ", "spaced": True},
}


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if t.args:
        return f"{t.functor}({','.join(format_term(a) for a in t.args)})"
    return t.functor


def format_formula(phi: Formula, notation: str = "ascii") -> str:
    """Render with minimal parentheses; ascii output round-trips through parse_formula."""
    style = _STYLES[notation]

    def binary(op: str, left: Formula, right: Formula, prec: int) -> str:
        l, r = render(left, prec + 1), render(right, prec)
        return f"{l} {op} {r}" if style["spaced"] else f"{l}{op}{r}"

    def render(f: Formula, ctx: int) -> str:
        prec = _PREC[type(f)]
        if prec < ctx:
            return f"({render(f, 1)})"
        if isinstance(f, Atom):
            if f.args:
                return f"{f.predicate}({','.join(format_term(a) for a in f.args)})"
            return f.predicate
        if isinstance(f, Not):
            return style["not"] + render(f.operand, 4)
        if isinstance(f, And):
            return binary(style["and"], f.left, f.right, 3)
        if isinstance(f, Or):
            return binary(style["or"], f.left, f.right, 2)
        if isinstance(f, Implies):
            return binary(style["implies"], f.left, f.right, 1)
        quant = style["forall"] if isinstance(f, ForAll) else style["exists"]
        return f"{quant}{f.var} {render(f.body, 4)}"

    return render(phi, 1)


# --- variables, substitution, matching ---

def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    out: set[str] = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(phi: Formula) -> set[str]:
    """Variables with at least one free occurrence."""
    if isinstance(phi, Atom):
        out: set[str] = set()
        for a in phi.args:
            out |= term_vars(a)
        return out
    if isinstance(phi, Not):
        return free_vars(phi.operand)
    if isinstance(phi, (And, Or, Implies)):
        return free_vars(phi.left) | free_vars(phi.right)
    return free_vars(phi.body) - {phi.var}


def occurring_names(phi: Formula) -> set[str]:
    """Every lowercase name in the formula: variables (free or bound), binders, functors.

    Used for the freshness side-condition of the δ rules.
    """
    def from_term(t: Term, acc: set[str]) -> None:
        if isinstance(t, Var):
            acc.add(t.name)
        else:
            acc.add(t.functor)
            for a in t.args:
                from_term(a, acc)

    acc: set[str] = set()

    def walk(f: Formula) -> None:
        if isinstance(f, Atom):
            for a in f.args:
                from_term(a, acc)
        elif isinstance(f, Not):
            walk(f.operand)
        elif isinstance(f, (And, Or, Implies)):
            walk(f.left)
            walk(f.right)
        else:
            acc.add(f.var)
            walk(f.body)

    walk(phi)
    return acc


def is_substitutable(phi: Formula, x: str, t: Term) -> bool:
    """True iff no free occurrence of x in phi sits under a quantifier binding a variable of t."""
    tvars = term_vars(t)

    def ok(f: Formula) -> bool:
        if isinstance(f, Atom):
            return True
        if isinstance(f, Not):
            return ok(f.operand)
        if isinstance(f, (And, Or, Implies)):
            return ok(f.left) and ok(f.right)
        if f.var == x:
            return True  # x is bound below: no free occurrence in here
        if f.var in tvars and x in free_vars(f.body):
            return False
        return ok(f.body)

    return ok(phi)


def _capturing_binder(phi: Formula, x: str, t: Term) -> str | None:
    tvars = term_vars(t)

    def find(f: Formula) -> str | None:
        if isinstance(f, Atom):
            return None
        if isinstance(f, Not):
            return find(f.operand)
        if isinstance(f, (And, Or, Implies)):
            return find(f.left) or find(f.right)
        if f.var == x:
            return None
        if f.var in tvars and x in free_vars(f.body):
            return f.var
        return find(f.body)

    return find(phi)


def _subst_term(t: Term, x: str, replacement: Term) -> Term:
    if isinstance(t, Var):
        return replacement if t.name == x else t
    return Compound(t.functor, tuple(_subst_term(a, x, replacement) for a in t.args))


def apply_substitution(phi: Formula, x: str, t: Term) -> Formula:
    """Replace every free occurrence of x by t; raises NotSubstitutableError on capture."""
    binder = _capturing_binder(phi, x, t)
    if binder is not None:
        raise NotSubstitutableError(x, format_term(t), binder)

    def subst(f: Formula) -> Formula:
        if isinstance(f, Atom):
            return Atom(f.predicate, tuple(_subst_term(a, x, t) for a in f.args))
        if isinstance(f, Not):
            return Not(subst(f.operand))
        if isinstance(f, And):
            return And(subst(f.left), subst(f.right))
        if isinstance(f, Or):
            return Or(subst(f.left), subst(f.right))
        if isinstance(f, Implies):
            return Implies(subst(f.left), subst(f.right))
        if f.var == x:
            return f
        cls = type(f)
        return cls(f.var, subst(f.body))

    return subst(phi)


class _MatchFail(Exception):
    pass


def _forced_witness(phi: Formula, x: str, candidate: Formula) -> tuple[bool, Term | None]:
    """Structural match of candidate against phi[x := ?].

    Returns (matched, witness): witness is None when x has no free occurrence
    (so candidate must equal phi exactly). Capture is NOT checked here.
    """
    witnesses: list[Term] = []

    def terms(pt: Term, ct: Term, bound: frozenset[str]) -> None:
        if isinstance(pt, Var):
            if pt.name == x and x not in bound:
                witnesses.append(ct)
                return
            if not (isinstance(ct, Var) and ct.name == pt.name):
                raise _MatchFail()
            return
        if not (isinstance(ct, Compound) and ct.functor == pt.functor and len(ct.args) == len(pt.args)):
            raise _MatchFail()
        for pa, ca in zip(pt.args, ct.args):
            terms(pa, ca, bound)

    def walk(pf: Formula, cf: Formula, bound: frozenset[str]) -> None:
        if isinstance(pf, Atom):
            if not (isinstance(cf, Atom) and cf.predicate == pf.predicate and len(cf.args) == len(pf.args)):
                raise _MatchFail()
            for pa, ca in zip(pf.args, cf.args):
                terms(pa, ca, bound)
        elif isinstance(pf, Not):
            if not isinstance(cf, Not):
                raise _MatchFail()
            walk(pf.operand, cf.operand, bound)
        elif isinstance(pf, (And, Or, Implies)):
            if type(cf) is not type(pf):
                raise _MatchFail()
            walk(pf.left, cf.left, bound)
            walk(pf.right, cf.right, bound)
        else:
            if type(cf) is not type(pf) or cf.var != pf.var:
                raise _MatchFail()
            walk(pf.body, cf.body, bound | {pf.var})

    try:
        walk(phi, candidate, frozenset())
    except _MatchFail:
        return False, None
    if not witnesses:
        return True, None
    first = witnesses[0]
    if any(w != first for w in witnesses[1:]):
        return False, None
    return True, first


def match_instance_detail(phi: Formula, x: str, candidate: Formula) -> tuple[MatchResult, Term | None]:
    """Like match_instance, plus the forced witness that failed the capture check (if any)."""
    matched, witness = _forced_witness(phi, x, candidate)
    if not matched:
        return NO_MATCH, None
    if witness is None:
        return ANY_TERM, None
    if not is_substitutable(phi, x, witness):
        return NO_MATCH, witness
    return Witness(witness), None


def match_instance(phi: Formula, x: str, candidate: Formula) -> MatchResult:
    """Recover the term t with phi[x := t] == candidate.

    Witness(t) when a unique substitutable t exists; AnyTerm when x is not
    free in phi and candidate equals phi; NoMatch otherwise.
    """
    return match_instance_detail(phi, x, candidate)[0]


def alpha_equal(f: Formula, g: Formula) -> bool:
    """Equality up to renaming of bound variables (used only to phrase near-miss messages)."""
    def terms(a: Term, b: Term, env: dict[str, str], renv: dict[str, str]) -> bool:
        if isinstance(a, Var) and isinstance(b, Var):
            return env.get(a.name, a.name) == b.name and renv.get(b.name, b.name) == a.name
        if isinstance(a, Compound) and isinstance(b, Compound):
            return (a.functor == b.functor and len(a.args) == len(b.args)
                    and all(terms(x, y, env, renv) for x, y in zip(a.args, b.args)))
        return False

    def walk(a: Formula, b: Formula, env: dict[str, str], renv: dict[str, str]) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, Atom):
            return (a.predicate == b.predicate and len(a.args) == len(b.args)
                    and all(terms(x, y, env, renv) for x, y in zip(a.args, b.args)))
        if isinstance(a, Not):
            return walk(a.operand, b.operand, env, renv)
        if isinstance(a, (And, Or, Implies)):
            return walk(a.left, b.left, env, renv) and walk(a.right, b.right, env, renv)
        env2 = dict(env)
        renv2 = dict(renv)
        env2[a.var] = b.var
        renv2[b.var] = a.var
        return walk(a.body, b.body, env2, renv2)

    return walk(f, g, {}, {})


def is_propositional(phi: Formula) -> bool:
    """Quantifier-free and variable-free: every atom is 0-ary."""
    if isinstance(phi, Atom):
        return not phi.args
    if isinstance(phi, Not):
        return is_propositional(phi.operand)
    if isinstance(phi, (And, Or, Implies)):
        return is_propositional(phi.left) and is_propositional(phi.right)
    return False

"""Signed expansion rules: which rule a signed formula triggers and what it yields.

α rules extend a branch (T&, F|, F->, T~, F~), β rules split it (F&, T|, T->),
γ rules instantiate with any substitutable term (TA, EF) and may be reused,
δ rules require a fresh variable (AF, ET).
"""

from __future__ import annotations

from enum import Enum

from .formula import And, Exists, ForAll, Formula, Implies, Not, Or, Sign, SignedFormula
from .script import RuleId


class RuleKind(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"


KIND: dict[RuleId, RuleKind] = {
    RuleId.NOT_T: RuleKind.ALPHA,
    RuleId.NOT_F: RuleKind.ALPHA,
    RuleId.AND_T: RuleKind.ALPHA,
    RuleId.OR_F: RuleKind.ALPHA,
    RuleId.IMP_F: RuleKind.ALPHA,
    RuleId.AND_F: RuleKind.BETA,
    RuleId.OR_T: RuleKind.BETA,
    RuleId.IMP_T: RuleKind.BETA,
    RuleId.ALL_T: RuleKind.GAMMA,
    RuleId.EX_F: RuleKind.GAMMA,
    RuleId.ALL_F: RuleKind.DELTA,
    RuleId.EX_T: RuleKind.DELTA,
}

_RULE_FOR: dict[tuple[Sign, type], RuleId] = {
    (Sign.T, Not): RuleId.NOT_T,
    (Sign.F, Not): RuleId.NOT_F,
    (Sign.T, And): RuleId.AND_T,
    (Sign.F, And): RuleId.AND_F,
    (Sign.T, Or): RuleId.OR_T,
    (Sign.F, Or): RuleId.OR_F,
    (Sign.T, Implies): RuleId.IMP_T,
    (Sign.F, Implies): RuleId.IMP_F,
    (Sign.T, ForAll): RuleId.ALL_T,
    (Sign.F, ForAll): RuleId.ALL_F,
    (Sign.T, Exists): RuleId.EX_T,
    (Sign.F, Exists): RuleId.EX_F,
}


def rule_for(sf: SignedFormula) -> RuleId | None:
    """The unique rule expanding sf, or None for signed atoms."""
    return _RULE_FOR.get((sf.sign, type(sf.formula)))


def components(sf: SignedFormula) -> tuple[SignedFormula, ...]:
    """Outputs of the α/β rule for sf, in rule order; quantified sources have none."""
    sign, phi = sf.sign, sf.formula
    if isinstance(phi, Not):
        return (SignedFormula(sign.flipped, phi.operand),)
    if isinstance(phi, And):
        return (SignedFormula(sign, phi.left), SignedFormula(sign, phi.right))
    if isinstance(phi, Or):
        return (SignedFormula(sign, phi.left), SignedFormula(sign, phi.right))
    if isinstance(phi, Implies):
        if sign is Sign.T:
            return (SignedFormula(Sign.F, phi.left), SignedFormula(Sign.T, phi.right))
        return (SignedFormula(Sign.T, phi.left), SignedFormula(Sign.F, phi.right))
    raise ValueError(f"no propositional components for {sf}")


def quantifier_parts(sf: SignedFormula) -> tuple[str, Formula]:
    """(bound variable, body) of a quantified source; instances keep the source's sign."""
    phi = sf.formula
    if isinstance(phi, (ForAll, Exists)):
        return phi.var, phi.body
    raise ValueError(f"{sf} is not quantified")

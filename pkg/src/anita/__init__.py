"""anita: a proof assistant for signed analytic tableaux.

Students write linear, Fitch-style tableau proofs in plain text; the checker
verifies every rule application, extracts countermodels from saturated open
branches, and exports qtree LaTeX trees.  A built-in propositional prover and
truth-table oracle cross-check the checker.
"""

__version__ = "0.1.0"

from .checker import (
    CheckReport,
    Countermodel,
    CountermodelFound,
    Diagnostic,
    Incomplete,
    Invalid,
    Sequent,
    Valid,
    check,
    extract_countermodel,
    matches_sequent,
    parse_sequent,
    saturated,
    theorem_of,
)
from .formula import (
    And,
    Atom,
    Compound,
    Exists,
    ForAll,
    Formula,
    Implies,
    Not,
    Or,
    ParseError,
    Sign,
    SignedFormula,
    Term,
    Var,
    apply_substitution,
    format_formula,
    free_vars,
    is_substitutable,
    match_instance,
    parse_formula,
)
from .latex import TableauTree, build_tree, to_qtree
from .prover import Closed, Open, ProverResult, prove, truth_table_entails
from .script import ProofLine, ProofScript, RuleId, parse_proof, serialize_proof

__all__ = [
    "__version__",
    "And", "Atom", "Compound", "Exists", "ForAll", "Formula", "Implies", "Not", "Or",
    "ParseError", "Sign", "SignedFormula", "Term", "Var",
    "apply_substitution", "format_formula", "free_vars", "is_substitutable",
    "match_instance", "parse_formula",
    "ProofLine", "ProofScript", "RuleId", "parse_proof", "serialize_proof",
    "CheckReport", "Countermodel", "CountermodelFound", "Diagnostic", "Incomplete",
    "Invalid", "Sequent", "Valid", "check", "extract_countermodel", "matches_sequent",
    "parse_sequent", "saturated", "theorem_of",
    "TableauTree", "build_tree", "to_qtree",
    "Closed", "Open", "ProverResult", "prove", "truth_table_entails",
]

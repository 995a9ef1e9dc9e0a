"""Natural-deduction proof layer: formulas, tree contexts, checker, search.

Contexts are trees over three formers (comma for parallel conjunction,
semicolon for sequential, bullet for choice) sharing one unit symbol.
Sequents pair a context with a goal formula.  ``ctx_rules`` implements the
checkable context-morphism judgment, ``proofs`` the inference rules,
``search`` a bounded backward prover, ``library`` the bundled equivalence
derivations, ``audit`` a scalar soundness report, and ``sexpr`` the
on-disk proof format.
"""

from sandcastle.atll.syntax import (
    Atom,
    Bullet,
    Comma,
    Context,
    Formula,
    Join,
    Leaf,
    Limp,
    Odot,
    Rhd,
    Semi,
    Sequent,
    UNIT,
    Unit,
    formula_to_tree,
    tree_to_formula,
)
from sandcastle.atll.ctx_rules import (
    CtxComp,
    CtxDerivation,
    CtxId,
    CtxStep,
    CtxVerdict,
    check_ctx_derivation,
)
from sandcastle.atll.proofs import (
    CM,
    Cut,
    Derivation,
    DerivVerdict,
    JoinE,
    JoinI,
    LimpE,
    LimpI,
    OdotE,
    OdotI,
    RhdE,
    RhdI,
    Var,
    check_derivation,
)
from sandcastle.atll.library import LibraryEntry, equivalence_library
from sandcastle.atll.search import search
from sandcastle.atll.audit import AuditReport, RuleAudit, audit_soundness

__all__ = [
    "Atom", "Join", "Odot", "Rhd", "Limp", "Formula",
    "Unit", "UNIT", "Leaf", "Comma", "Semi", "Bullet", "Context", "Sequent",
    "tree_to_formula", "formula_to_tree",
    "CtxId", "CtxComp", "CtxStep", "CtxDerivation", "CtxVerdict",
    "check_ctx_derivation",
    "Var", "CM", "Cut", "OdotI", "RhdI", "JoinI", "OdotE", "RhdE", "JoinE",
    "LimpI", "LimpE", "Derivation", "DerivVerdict", "check_derivation",
    "LibraryEntry", "equivalence_library",
    "search",
    "AuditReport", "RuleAudit", "audit_soundness",
]

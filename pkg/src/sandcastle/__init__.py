"""sandcastle: a workbench for SAND attack trees.

The package is organised in layers.  ``trees`` holds the attack-tree AST
and its textual format; ``rewrite`` decides equivalence syntactically by
axiom rewriting to canonical normal forms; ``four`` interprets trees in the
four-value chain {0, 1/4, 1/2, 1}; ``lineale`` and ``dialectica`` verify
the algebraic models behind that interpretation on finite instances; and
``atll`` is a natural-deduction proof checker and searcher for the
corresponding substructural logic.  ``cli`` ties everything together.
"""

from sandcastle.errors import (
    MissingValuationError,
    ParseError,
    ResourceLimitError,
    RewriteError,
    SandcastleError,
)

__all__ = [
    "SandcastleError",
    "ParseError",
    "RewriteError",
    "ResourceLimitError",
    "MissingValuationError",
]

__version__ = "0.1.0"

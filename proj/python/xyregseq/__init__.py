"""Regular sequences among the entries of XY for generic square matrices X and Y.

Polynomials are exchanged as strings in the grammar ``3*x[1,2]^2*y[2,1] - 1/2``.
Fields are named ``"rat"`` or ``"gf(p)"``.
"""

import json

from ._core import (
    BudgetExceeded,
    build_F,
    build_Ftilde,
    counterexample,
    entry_f,
    groebner_basis,
    hilbert_numerator,
    k_value,
    pattern_rows,
    sequence_oracle,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "build_F",
    "build_Ftilde",
    "certify",
    "counterexample",
    "entry_f",
    "groebner_basis",
    "hilbert_numerator",
    "k_value",
    "pattern",
    "pattern_rows",
    "recheck",
    "sequence_oracle",
]

__version__ = "0.1.0"


def pattern(n):
    """Selection pattern, F and the augmented sequence as a dict."""
    return json.loads(_core.pattern_json(n))


def certify(n, field="gf(32003)"):
    """Certificate for the selected entries at size n, in the CLI's JSON layout."""
    return json.loads(_core.certify_json(n, field))


def recheck(certificate):
    """Re-validates a certificate dict (or JSON text). Returns (certified, detail)."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return _core.recheck_json(text)

"""
End-to-end verification of closed-form Betti numbers
"""

from .theorem_verifier import CONDITIONAL_MATCH, MATCH, MISMATCH, Check, TheoremVerifier

__all__ = [
    "CONDITIONAL_MATCH",
    "Check",
    "MATCH",
    "MISMATCH",
    "TheoremVerifier",
]

"""
Closed-form Betti number formulas
"""

from .closed_forms import (
    BettiTable, FormulaValue, beta1_star, beta1_star_ordered, beta2_single_edge, beta2_tree_pair,
    beta2_two_particle, beta2_two_particle_multi, beta2_two_particle_ordered, betam_tree_closed,
    betam_tree_general, betam_tree_recursive, euler_consistent, evaluate_all_tree_forms, star_value, tree_beta1
)

__all__ = [
    "BettiTable",
    "FormulaValue",
    "beta1_star",
    "beta1_star_ordered",
    "beta2_single_edge",
    "beta2_tree_pair",
    "beta2_two_particle",
    "beta2_two_particle_multi",
    "beta2_two_particle_ordered",
    "betam_tree_closed",
    "betam_tree_general",
    "betam_tree_recursive",
    "euler_consistent",
    "evaluate_all_tree_forms",
    "star_value",
    "tree_beta1",
]

"""Slopes of Drinfeld cuspforms computed from harmonic cocycles."""

from fractions import Fraction

from ._core import BudgetError, bound_C, bound_D, family_congruence, hecke_matrix, slopes

__all__ = ["BudgetError", "bound_C", "bound_D", "family_congruence", "hecke_matrix", "slopes", "slope_dict"]


def slope_dict(k, q=3, level="gamma1:t", chi=None):
    """Slope table as {Fraction: multiplicity}."""
    return {Fraction(n, d): m for n, d, m in slopes(q=q, level=level, k=k, chi=chi)}

"""Exact knot invariants: Alexander modules, Blanchfield matrices,
Levine-Tristram signature profiles, free solvable quotients, and a
certified verdict for infected knots."""

__version__ = "0.1.0"

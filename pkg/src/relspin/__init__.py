"""Covariant spin operators for massive particles and the Dirac sector built from them."""
from .minkowski import MomentumContext
from .spin_reps import make_spin_rep, spin_operators
from .suites import run_suite

__all__ = ["MomentumContext", "make_spin_rep", "spin_operators", "run_suite"]

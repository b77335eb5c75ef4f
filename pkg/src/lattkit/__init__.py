"""Finite lattices, commutator lattices and finite commutative rings, with
exhaustive checkers for Stone-type annihilator conditions."""
from .lattice import (FiniteLattice, LatticeCongruence, LatticeError, boolean_lattice, build_lattice,
                      chain, congruence_generated, diamond, direct_product, divisor_lattice,
                      enumerate_congruences, pentagon, quotient_lattice)
from .conditions import ALL_CONDITIONS, ConditionId, Family, Kappa, check_condition, verdicts
from .commutator import CommutatorLattice, meet_commutator, spectrum, validate_commutator
from .rings import FiniteCommRing, build_product, build_table, build_zn, enumerate_ideals
from .suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "FiniteLattice", "LatticeCongruence", "LatticeError", "boolean_lattice", "build_lattice", "chain",
    "congruence_generated", "diamond", "direct_product", "divisor_lattice", "enumerate_congruences",
    "pentagon", "quotient_lattice", "ALL_CONDITIONS", "ConditionId", "Family", "Kappa",
    "check_condition", "verdicts", "CommutatorLattice", "meet_commutator", "spectrum",
    "validate_commutator", "FiniteCommRing", "build_product", "build_table", "build_zn",
    "enumerate_ideals", "SUITES", "run_suite",
]

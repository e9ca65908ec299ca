"""Chordality, induced matchings and edge-ring regularity of circulant graphs."""

from .core import CirculantGraph, build, cycle_power, labelling_distance
from .chordal import (
    CycleWitness,
    find_chordless_cycle,
    is_chordal_oracle,
    is_chordal_structural,
    validate_witness,
)
from .matching import (
    induced_matching_formula,
    induced_matching_oracle,
    power_cycle_formula,
)
from .regularity import BettiTable, hochster_betti, regularity

__all__ = [
    "BettiTable",
    "CirculantGraph",
    "CycleWitness",
    "build",
    "cycle_power",
    "find_chordless_cycle",
    "hochster_betti",
    "induced_matching_formula",
    "induced_matching_oracle",
    "is_chordal_oracle",
    "is_chordal_structural",
    "labelling_distance",
    "power_cycle_formula",
    "regularity",
    "validate_witness",
]

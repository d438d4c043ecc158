"""Variants of finite semigroups, their induced representations and the
sandwich congruences ``rho_{b,c}`` and ``rho_a``."""

from .actions import Action, InducedAction, induced, is_faithful, kernel_congruence
from .bicyclic import BicyclicElement
from .congruences import Congruence, all_congruences, congruence_closure, join, meet, rho_a, rho_bc
from .core import FiniteSemigroup, MonoidView, adjoin_identity, new_semigroup
from .reports import CheckReport
from .variants import Decomposition, Variant, decompositions, variant

__all__ = [
    "Action", "BicyclicElement", "CheckReport", "Congruence", "Decomposition",
    "FiniteSemigroup", "InducedAction", "MonoidView", "Variant", "adjoin_identity",
    "all_congruences", "congruence_closure", "decompositions", "induced", "is_faithful",
    "join", "kernel_congruence", "meet", "new_semigroup", "rho_a", "rho_bc", "variant",
]

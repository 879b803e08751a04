"""Randomized verification campaign over seeded instances."""

from .generators import (
    GenerationError,
    GeneratorSettings,
    change_basis,
    change_dga_basis,
    cw_instance,
    dga_instance,
    double_above,
    filtered_instance,
    instance_rng,
    random_dga,
    random_filtered_complex,
    toy_d2,
)
from .properties import THEOREMS, Theorem
from .runner import CampaignResult, InstanceResult, check_instance, get_theorem, run_campaign

__all__ = [
    "GenerationError", "GeneratorSettings", "change_basis", "change_dga_basis", "cw_instance",
    "dga_instance", "double_above", "filtered_instance",
    "instance_rng", "random_dga", "random_filtered_complex", "toy_d2", "THEOREMS", "Theorem",
    "CampaignResult", "InstanceResult", "check_instance", "get_theorem", "run_campaign",
]

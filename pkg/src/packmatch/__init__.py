"""Exact solvers for weighted q-dimensional p-matching and q-set p-packing."""

from .dm3 import solve_dm3
from .instances import (
    WDM,
    WSP,
    Instance,
    InstanceError,
    Solution,
    gen_planted,
    gen_random,
    parse_instance,
    serialize_instance,
    validate,
)
from .kernel import KernelResult, kernelize, kernelize_wdm, kernelize_wsp
from .oracle import OracleBudget, brute_force_solve, check_representation
from .repset import RepEngine, RepQuery, Triple, represent
from .wdm import solve_wdm
from .wsp import solve_wsp

__all__ = [
    "WDM", "WSP", "Instance", "InstanceError", "Solution", "KernelResult", "OracleBudget",
    "RepEngine", "RepQuery", "Triple", "brute_force_solve", "check_representation",
    "gen_planted", "gen_random", "kernelize", "kernelize_wdm", "kernelize_wsp",
    "parse_instance", "represent", "serialize_instance", "solve_dm3", "solve_wdm",
    "solve_wsp", "validate",
]

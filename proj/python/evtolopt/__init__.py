"""Conceptual eVTOL design toolkit: sizing, mission energy, noise, economics,
emissions, cross-transport rating, and constrained design optimization.

All functions exchange plain dicts that mirror the CLI's JSON schemas.
"""

from ._core import (
    ModelError,
    ScenarioError,
    default_scenario,
    design_variables,
    evaluate,
    load_scenario,
    optimize,
)

__all__ = [
    "ModelError",
    "ScenarioError",
    "default_scenario",
    "design_variables",
    "evaluate",
    "load_scenario",
    "optimize",
]

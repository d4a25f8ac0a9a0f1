# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Library wide defaults, overridable through ``DAISY_*`` environment variables."""

import dataclasses
import os
from dataclasses import dataclass

_ENV = {
    "vertex_budget": "DAISY_VERTEX_BUDGET",
    "daisy_budget": "DAISY_BUDGET",
    "seed": "DAISY_SEED",
    "jobs": "DAISY_JOBS",
}


@dataclass(frozen=True)
class Settings:
    """Budgets and seeds shared by enumeration, expansion sampling and the harness.

    Args:
        vertex_budget: largest host that ``enumerate_vertices`` materialises.
        daisy_budget: largest host (in vertices) whose daisy graphs are enumerated.
        exhaustive_cover_limit: base graphs up to this many vertices get every
            daisy peripheral cover family enumerated instead of sampled.
        max_extra_covers: largest number of non-trivial covers (``W_1..W_k``)
            in exhaustive cover enumeration.
        samples_per_graph: number of sampled valid cover families per base graph.
        seed: seed of every sampled family; echoed into reports.
        jobs: worker processes used by the verification suite.
    """

    vertex_budget: int = 4096
    daisy_budget: int = 16
    exhaustive_cover_limit: int = 6
    max_extra_covers: int = 2
    samples_per_graph: int = 100
    seed: int = 15
    jobs: int = 1

    def replace(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)


def _from_environment():
    overrides = {}
    for name, variable in _ENV.items():
        value = os.getenv(variable)
        if value is None:
            continue
        try:
            overrides[name] = int(value)
        except ValueError:
            raise ValueError(f"{variable} must be an integer, got {value!r}")
    return Settings().replace(**overrides)


_settings = None


def get_settings() -> Settings:
    """Return the process wide settings, reading the environment once."""
    global _settings
    if _settings is None:
        _settings = _from_environment()
    return _settings

# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

import math
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate that may carry a witness.

    A ``Verdict`` is truthy exactly when ``ok`` is set, so it can be used
    directly in ``if`` statements while still exposing why a check failed.

    Args:
        ok: result of the predicate.
        witness: counterexample (or certificate) reproducing the result.
        reason: short free-form explanation.
    """

    ok: bool
    witness: Any = None
    reason: Optional[str] = None

    def __bool__(self):
        return bool(self.ok)


def edge_key(u, v) -> Tuple[Any, Any]:
    """Canonical (sorted) representation of the undirected edge ``uv``."""
    return (u, v) if u <= v else (v, u)


def sorted_edges(edges: Iterable[Tuple[Any, Any]]) -> List[Tuple[Any, Any]]:
    return sorted({edge_key(u, v) for u, v in edges})


def format_vertex(vertex) -> str:
    """Comma separated rendering of a coordinate tuple, ``"1,0"``; ids as str."""
    if isinstance(vertex, tuple):
        return ",".join(str(c) for c in vertex)
    return str(vertex)


def to_jsonable(value, coordinates: bool = True):
    """Convert witnesses and documents to JSON friendly values.

    With ``coordinates`` set, integer tuples are Hamming vertices and become
    ``"1,0"`` strings; otherwise (generic graphs) every tuple becomes a list.
    Sets become sorted lists and infinite distances become ``"inf"``.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        return "inf" if math.isinf(value) else value
    if coordinates and isinstance(value, tuple) and all(
        isinstance(c, int) and not isinstance(c, bool) for c in value
    ):
        return format_vertex(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, coordinates) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v, coordinates) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, coordinates) for v in value]
    if hasattr(value, "item"):
        return to_jsonable(value.item(), coordinates)
    return str(value)

# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Exhaustive verification harness for the daisy graph statements.

Every check runs on one rooted instance at a time and produces a
``CheckReport``. A family is a list of ``RootedInstance``; suites bundle a
family per check. Reports are merged in (check, instance) order so the output
does not depend on how many worker processes ran the jobs.
"""

import itertools
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from .common import edge_key, to_jsonable
from .config import Settings, get_settings
from .daisy import (
    build_daisy,
    daisy_cube_of_singleton,
    daisy_pair_geodesic,
    enumerate_daisy_graphs,
    is_daisy,
    is_isometric_daisy,
    is_minimal_host,
    is_path_in,
)
from .errors import BudgetExceededError, CoverError, GraphError, TheoremViolation
from .expansion import (
    contract,
    contract_generic,
    decompose_to_k1,
    daisy_peripheral_expand,
    enumerate_daisy_cover_families,
    expand,
    relabel_expansion,
    sample_daisy_cover_families,
)
from .hamming import (
    Shape,
    delete_coordinate,
    enumerate_vertices,
    hamming_distance,
    hamming_interval,
    hamming_matrix,
)
from .medians import (
    has_small_pseudo_median,
    pseudo_medians,
    quasi_median_hamming,
    rooted_triangle_condition,
    smallest_pair_sizes,
    triangle_condition,
)
from .metric import as_host, cycle_graph, is_isometric
from .relations import (
    anchored_edge,
    delta_class_edges_between_contacts,
    delta_classes,
    is_peripheral_class,
    verify_w_equals_wuv,
)

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"
SCHEMA_VERSION = 1

# largest daisy graph decomposed by the expansion and round-trip checks
EXPANSION_VERTEX_LIMIT = 12

C6_LABELS = ("u", "x1", "x2", "r", "y1", "y2")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check on one instance.

    A failing report always carries a witness that reproduces the failure
    when the check is re-run on the named instance.
    """

    check: str
    instance: str
    verdict: str
    witness: Any = None
    detail: str = ""
    elapsed: float = 0.0
    # witnesses of generic hosts hold opaque ids, not coordinate tuples
    coordinates: bool = True

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def jsonable_witness(self):
        return to_jsonable(self.witness, self.coordinates)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "check": self.check,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.jsonable_witness(),
            "detail": self.detail,
        }
        if timings:
            data["elapsed"] = round(self.elapsed, 6)
        return data


@dataclass(frozen=True)
class RootedInstance:
    """A named host with its root; ``root=None`` selects the host's default root."""

    name: str
    host: Any
    root: Any = None

    def rooted(self):
        host = as_host(self.host)
        root = host.default_root if self.root is None else host.check(self.root)
        return host, root


def shape_name(shape) -> str:
    shape = tuple(shape)
    return "K1" if not shape else "H(" + ",".join(str(k) for k in shape) + ")"


def hamming_instances(shapes: Sequence[Sequence[int]]) -> List[RootedInstance]:
    return [RootedInstance(shape_name(s), Shape(tuple(s))) for s in shapes]


def shapes_up_to(order: int, max_factor: int = None, max_n: int = None) -> List[Tuple[int, ...]]:
    """Non-increasing factor tuples (other than K1) with at most ``order`` vertices."""
    max_factor = order if max_factor is None else max_factor
    result = []

    def grow(prefix, product, bound):
        if prefix:
            result.append(tuple(prefix))
        if max_n is not None and len(prefix) == max_n:
            return
        for k in range(min(bound, order // product), 1, -1):
            grow(prefix + [k], product * k, k)

    grow([], 1, max_factor)
    return sorted(result, key=lambda s: (len(s), s))


def c6_instance() -> RootedInstance:
    return RootedInstance("C6@r", cycle_graph(C6_LABELS), "r")


def tree_instances() -> List[RootedInstance]:
    return [
        RootedInstance("P4@0", nx.path_graph(4), 0),
        RootedInstance("P4@1", nx.path_graph(4), 1),
        RootedInstance("star4@0", nx.star_graph(3), 0),
        RootedInstance("star4@1", nx.star_graph(3), 1),
        RootedInstance("tree7@0", nx.balanced_tree(2, 2), 0),
    ]


def small_graph_instances() -> List[RootedInstance]:
    return [
        c6_instance(),
        RootedInstance("C5@0", nx.cycle_graph(5), 0),
        RootedInstance("K3@0", nx.complete_graph(3), 0),
        RootedInstance("K1", Shape(())),
    ]


def _first_non_isometric_daisy(host, root, budget):
    for d in enumerate_daisy_graphs(host, root, budget=budget):
        verdict = is_isometric_daisy(d)
        if not verdict:
            return {"generators": sorted(d.generators), "pair": verdict.witness}
    return None


def _hamming_host(instance):
    host, root = instance.rooted()
    if host.kind != "hamming":
        raise GraphError(f"{instance.name} is not a Hamming graph")
    if root != host.shape.root:
        raise GraphError(f"{instance.name} must be rooted at 0^n")
    return host, root


def _minimal_isometric_daisies(host, root, budget, max_vertices=None):
    # daisy graphs for which the host is already the smallest possible
    if max_vertices is not None and 1 + sum(k - 1 for k in host.shape) > max_vertices:
        # every value of a minimal host is used, so the graph holds every unit vertex
        return
    for d in enumerate_daisy_graphs(host, root, budget=budget):
        if max_vertices is not None and len(d.vertices) > max_vertices:
            continue
        g = d.to_labeled()
        if is_minimal_host(g) and is_isometric(g):
            yield d, g


def _sufficient_size0(instance, settings):
    host, root = instance.rooted()
    for u, v, size in smallest_pair_sizes(host, root):
        if size > 0:
            return SKIP, (u, v), f"no median of the pair with the root (size {size})"
    bad = _first_non_isometric_daisy(host, root, settings.daisy_budget)
    if bad is not None:
        return FAIL, bad, "non-isometric daisy graph although every triple has a median"
    return PASS, None, "every triple has a median; every daisy graph isometric"


def _sufficient_size1(instance, settings, strict):
    host, root = instance.rooted()
    for u, v, size in smallest_pair_sizes(host, root):
        if strict:
            applies = u == v or root in (u, v) or size == 1
        else:
            applies = size <= 1
        if not applies:
            return SKIP, (u, v), f"pair has minimal pseudo-median size {size}"
    bad = _first_non_isometric_daisy(host, root, settings.daisy_budget)
    if bad is not None:
        return FAIL, bad, "non-isometric daisy graph under the size-1 hypothesis"
    return PASS, None, "hypothesis holds; every daisy graph isometric"


def _characterization(instance, settings):
    host, root = instance.rooted()
    condition = rooted_triangle_condition(host, root)
    if not condition:
        return SKIP, condition.witness, "rooted triangle condition fails"
    large = next(((u, v, s) for u, v, s in smallest_pair_sizes(host, root) if s > 1), None)
    bad = _first_non_isometric_daisy(host, root, settings.daisy_budget)
    all_isometric, all_small = bad is None, large is None
    witness = None if all_isometric else {"daisy": bad, "triple": large}
    if all_isometric == all_small:
        side = "both sides hold" if all_small else "both sides fail"
        return PASS, witness, side
    return (
        FAIL,
        {"daisy": bad, "triple": large},
        f"all daisy graphs isometric: {all_isometric}; small pseudo-medians: {all_small}",
    )


def _pair_theorem(instance, settings):
    host, root = _hamming_host(instance)
    pairs = paths = 0
    for x, y in itertools.combinations(host.vertices, 2):
        d = build_daisy(host, root, {x, y})
        isometric = bool(is_isometric_daisy(d))
        small = has_small_pseudo_median(host, x, y, root)
        if isometric != small:
            witness = {"pair": (x, y), "isometric": isometric, "small": small}
            return FAIL, witness, "isometry does not match the pseudo-median criterion"
        pairs += 1
        if not isometric:
            continue
        for u, v in itertools.combinations(d.sorted_vertices, 2):
            path = daisy_pair_geodesic(host.shape, x, y, u, v)
            inside = is_path_in(path, d.vertices)
            if not inside or len(path) - 1 != hamming_distance(u, v):
                witness = {"pair": (x, y), "ends": (u, v), "path": path}
                return FAIL, witness, "constructed path is not a geodesic of the daisy graph"
            paths += 1
    return PASS, None, f"{pairs} pairs, {paths} constructed geodesics"


def _singleton_daisy_cube(instance, settings):
    host, root = _hamming_host(instance)
    for x in host.vertices:
        d = build_daisy(host, root, {x})
        word = daisy_cube_of_singleton(d)
        cube = build_daisy(Shape((2,) * host.shape.n), root, {word})
        if not nx.is_isomorphic(d.subgraph(), cube.subgraph()):
            return FAIL, {"generator": x, "word": word}, "interval is not the daisy cube"
    return PASS, None, f"{len(host.vertices)} single-generator daisy graphs"


def _structure_violation(g):
    n = g.shape.n
    classes = delta_classes(g, root=g.root)
    if len(classes) != n:
        return "class-count", len(classes)
    for cls in classes:
        try:
            u, v = anchored_edge(g, cls)
        except TheoremViolation as exc:
            return "root-anchor", exc.witness
        other = v if u == g.root else u
        j = next(p for p, c in enumerate(other, start=1) if c != 0)
        if cls.edges != delta_class_edges_between_contacts(g, j):
            return "class-edges", j
    for j in range(1, n + 1):
        k = g.shape[j - 1]
        for i in range(k):
            if not verify_w_equals_wuv(g, j, i):
                return "w-sets", (j, i)
        peripheral = is_peripheral_class(g, j)
        if not peripheral:
            return "peripheral", (j, peripheral.witness)
        reduced = g.shape.drop(j)
        for i in range(k):
            level = {delete_coordinate(x, j) for x in g.vertices if x[j - 1] == i}
            verdict = is_daisy(level, reduced, reduced.root)
            if not verdict:
                return "slice-daisy", (j, i, verdict.witness)
    return None


def _structure_lemmas(instance, settings):
    host, root = _hamming_host(instance)
    graphs = 0
    for d, g in _minimal_isometric_daisies(host, root, settings.daisy_budget):
        violation = _structure_violation(g)
        if violation is not None:
            statement, witness = violation
            return FAIL, {"generators": sorted(d.generators), statement: witness}, statement
        graphs += 1
    return PASS, None, f"{graphs} isometric daisy graphs of a minimal host"


def _expansion_theorems(instance, settings):
    host, root = _hamming_host(instance)
    rng = random.Random(settings.seed)
    graphs = families = 0
    small = _minimal_isometric_daisies(host, root, settings.daisy_budget, EXPANSION_VERTEX_LIMIT)
    for d, g in small:
        generators = sorted(d.generators)
        try:
            steps = decompose_to_k1(g)
        except TheoremViolation as exc:
            return FAIL, {"generators": generators, "error": str(exc)}, "decomposition failed"
        if len(steps) != g.shape.n:
            return FAIL, {"generators": generators, "steps": len(steps)}, "wrong number of steps"
        if len(g) <= settings.exhaustive_cover_limit:
            covers = enumerate_daisy_cover_families(g, settings.max_extra_covers)
        else:
            covers = sample_daisy_cover_families(
                g, settings.samples_per_graph, settings.max_extra_covers, rng
            )
        for family in covers:
            try:
                daisy_peripheral_expand(g, family)
            except (TheoremViolation, CoverError) as exc:
                witness = {"generators": generators, "covers": list(family), "error": str(exc)}
                return FAIL, witness, "daisy peripheral expansion failed"
        graphs += 1
        families += len(covers)
    detail = f"{graphs} graphs decomposed and replayed, {families} cover families expanded"
    return PASS, None, f"{detail} (seed {settings.seed})"


def _round_trip(instance, settings):
    host, root = _hamming_host(instance)
    graphs = 0
    small = _minimal_isometric_daisies(host, root, settings.daisy_budget, EXPANSION_VERTEX_LIMIT)
    for d, g in small:
        edges = set(g.edges())
        for j in range(1, g.shape.n + 1):
            witness = {"generators": sorted(d.generators), "coordinate": j}
            result = contract(g, j)
            try:
                record = expand(result.graph, result.covers)
            except CoverError as exc:
                return FAIL, dict(witness, error=str(exc)), "contraction covers are not valid"
            restored = relabel_expansion(record, result)
            restored_edges = {edge_key(u, v) for u, v in restored.edges()}
            if set(restored.nodes()) != g.vertices or restored_edges != edges:
                return FAIL, witness, "expansion of the contraction differs from the graph"
            quotient = contract_generic(g.graph, delta_class_edges_between_contacts(g, j))
            labels = {x: delete_coordinate(x, j) for x in quotient.nodes()}
            projected = {edge_key(labels[u], labels[v]) for u, v in quotient.edges()}
            if (
                len(set(labels.values())) != quotient.number_of_nodes()
                or projected != set(result.graph.edges())
            ):
                return FAIL, witness, "clique contraction differs from coordinate deletion"
        graphs += 1
    return PASS, None, f"{graphs} graphs, every coordinate"


def _interval_oracle(instance, settings):
    host, _ = _hamming_host(instance)
    vertices = enumerate_vertices(host.shape, budget=settings.vertex_budget)
    table = hamming_matrix(vertices)
    pairs = 0
    for a, u in enumerate(vertices):
        for b in range(a, len(vertices)):
            v = vertices[b]
            members = np.flatnonzero(table[a] + table[:, b] == table[a, b])
            brute = {vertices[c] for c in members}
            fast = hamming_interval(u, v)
            if fast != brute or len(fast) != 2 ** int(table[a, b]):
                return FAIL, (u, v), "product rule disagrees with the distance definition"
            pairs += 1
    return PASS, None, f"{pairs} pairs"


def _quasi_median_agreement(instance, settings):
    host, _ = _hamming_host(instance)
    triples = 0
    for u, v, w in itertools.product(host.vertices, repeat=3):
        found = pseudo_medians(host, u, v, w)
        expected = quasi_median_hamming(host.shape, u, v, w)
        distinct = sum(1 for a, b, c in zip(u, v, w) if len({a, b, c}) == 3)
        if found.triples != (expected,) or found.size != distinct:
            witness = {"triple": (u, v, w), "found": [(t.x, t.y, t.z) for t in found.triples]}
            return FAIL, witness, "pseudo-medians differ from the quasi-median"
        triples += 1
    return PASS, None, f"{triples} triples"


def _hamming_triangle_condition(instance, settings):
    host, _ = _hamming_host(instance)
    verdict = triangle_condition(host)
    if not verdict:
        return FAIL, verdict.witness, verdict.reason
    return PASS, None, "triangle condition holds"


def _cycle_counterexample(instance, settings):
    host, root = instance.rooted()
    u, x1, _, r, _, y2 = C6_LABELS
    whole = build_daisy(host, root, {u})
    if whole.vertices != set(host.vertices) or not is_isometric_daisy(whole):
        return FAIL, sorted(whole.vertices), "G_r({u}) should be the whole isometric cycle"
    size = pseudo_medians(host, x1, y2, r).size
    if size < 2:
        return FAIL, (x1, y2, r), f"expected pseudo-median size >= 2, found {size}"
    bad = _first_non_isometric_daisy(host, root, settings.daisy_budget)
    if bad is None:
        return FAIL, None, "every daisy graph of the six-cycle is isometric"
    return PASS, bad, f"triple ({x1}, {y2}, {r}) has size {size}; non-isometric daisy graph found"


CHECKS: Dict[str, Callable] = {
    "characterization": _characterization,
    "cycle_counterexample": _cycle_counterexample,
    "expansion_theorems": _expansion_theorems,
    "hamming_triangle_condition": _hamming_triangle_condition,
    "interval_oracle": _interval_oracle,
    "pair_theorem": _pair_theorem,
    "quasi_median_agreement": _quasi_median_agreement,
    "round_trip": _round_trip,
    "singleton_daisy_cube": _singleton_daisy_cube,
    "structure_lemmas": _structure_lemmas,
    "sufficient_size0": _sufficient_size0,
    "sufficient_size1": lambda instance, settings: _sufficient_size1(instance, settings, False),
    "sufficient_size1_strict": lambda instance, settings: _sufficient_size1(instance, settings, True),
}

# statement -> check exercising it
COVERAGE: Dict[str, str] = {
    "Hamming intervals follow the coordinate product rule": "interval_oracle",
    "quasi-medians follow the coordinate rule and are the unique pseudo-medians": "quasi_median_agreement",
    "medians with the root make every daisy graph isometric": "sufficient_size0",
    "size-1 pseudo-medians with the root make every daisy graph isometric": "sufficient_size1_strict",
    "size 0 or 1 pseudo-medians with the root make every daisy graph isometric": "sufficient_size1",
    "isometric daisy graphs force small pseudo-medians under the rooted triangle condition": "characterization",
    "characterization of rooted graphs with all daisy graphs isometric": "characterization",
    "Hamming graphs satisfy the triangle condition": "hamming_triangle_condition",
    "the six-cycle has a non-isometric daisy graph": "cycle_counterexample",
    "single-generator daisy graphs are daisy cubes": "singleton_daisy_cube",
    "pair-generated daisy graphs are isometric iff the pseudo-median is small": "pair_theorem",
    "level sets are W-sets of root edges": "structure_lemmas",
    "every Delta-class has an edge at the root": "structure_lemmas",
    "every Delta-class is peripheral": "structure_lemmas",
    "level slices are daisy graphs of the reduced host": "structure_lemmas",
    "isometric daisy graphs of a minimal host have n Delta-classes": "structure_lemmas",
    "daisy peripheral expansions are isometric daisy graphs": "expansion_theorems",
    "contracting a Delta-class undoes a daisy peripheral expansion": "expansion_theorems",
    "isometric daisy graphs arise from K1 by daisy peripheral expansions": "expansion_theorems",
    "expansion along the contraction covers restores the graph": "round_trip",
}


# hosts a full-suite family leaves out, by check and instance name
COVERAGE_EXCLUSIONS: Dict[str, Dict[str, str]] = {
    "characterization": {
        shape_name((k,)): f"{2 ** (k - 1)} daisy graphs, all isometric; complete hosts stop at K16"
        for k in range(17, 28)
    },
}


def _distinct(instances: Sequence[RootedInstance]) -> List[RootedInstance]:
    """Drop repeated instance names, keeping the first occurrence."""
    seen = set()
    kept = []
    for instance in instances:
        if instance.name not in seen:
            seen.add(instance.name)
            kept.append(instance)
    return kept


def _quick_families() -> Dict[str, List[RootedInstance]]:
    structure = hamming_instances([(), (2, 2), (3, 2)])
    size1 = hamming_instances([(3,), (3, 2)]) + small_graph_instances()
    families = {
        "characterization": hamming_instances([(2,), (3,), (2, 2), (3, 2), (3, 3)])
        + small_graph_instances(),
        "cycle_counterexample": [c6_instance()],
        "expansion_theorems": structure,
        "hamming_triangle_condition": hamming_instances(shapes_up_to(9, max_factor=3, max_n=2)),
        "interval_oracle": hamming_instances(shapes_up_to(16)),
        "pair_theorem": hamming_instances([(2, 2), (3, 2)]),
        "quasi_median_agreement": hamming_instances([(3, 2)]),
        "round_trip": structure,
        "singleton_daisy_cube": hamming_instances([(3, 2), (2, 2, 2)]),
        "structure_lemmas": structure,
        "sufficient_size0": tree_instances() + hamming_instances([(), (2, 2), (2, 2, 2)]),
        "sufficient_size1": size1,
        "sufficient_size1_strict": size1,
    }
    return {name: _distinct(family) for name, family in families.items()}


def _full_families() -> Dict[str, List[RootedInstance]]:
    budget = SUITE_BUDGETS["full"]
    excluded = COVERAGE_EXCLUSIONS["characterization"]
    characterization = [
        s for s in shapes_up_to(budget) if shape_name(s) not in excluded
    ]
    # hosts are not capped; the graphs are, see EXPANSION_VERTEX_LIMIT
    minimal_hosts = [()] + shapes_up_to(budget)
    structure = [(), (2,), (3,), (2, 2), (3, 2), (3, 3), (2, 2, 2)]
    size1 = [(3,), (4,), (2, 2), (3, 2), (4, 2), (3, 2, 2), (3, 3), (3, 3, 2)]
    families = {
        "characterization": hamming_instances(characterization)
        + small_graph_instances()
        + tree_instances(),
        "cycle_counterexample": [c6_instance()],
        "expansion_theorems": hamming_instances(minimal_hosts),
        "hamming_triangle_condition": hamming_instances(shapes_up_to(64, max_factor=4, max_n=3)),
        "interval_oracle": hamming_instances([()] + shapes_up_to(64)),
        "pair_theorem": hamming_instances([(3, 3), (4, 2), (2, 2, 2)]),
        "quasi_median_agreement": hamming_instances([(3, 3), (2, 2, 2)]),
        "round_trip": hamming_instances(minimal_hosts),
        "singleton_daisy_cube": hamming_instances([(3, 3), (3, 2, 4), (2, 2, 2)]),
        "structure_lemmas": hamming_instances(structure),
        "sufficient_size0": tree_instances()
        + hamming_instances([(), (2,), (3,), (2, 2), (2, 2, 2), (2, 2, 2, 2)]),
        "sufficient_size1": hamming_instances(size1) + small_graph_instances(),
        "sufficient_size1_strict": hamming_instances(size1) + small_graph_instances(),
    }
    return {name: _distinct(family) for name, family in families.items()}


SUITES: Dict[str, Callable[[], Dict[str, List[RootedInstance]]]] = {
    "quick": _quick_families,
    "full": _full_families,
}

# daisy enumeration budget of each suite; the full suite reaches hosts of 27 vertices
SUITE_BUDGETS = {"quick": 16, "full": 27}


def suite_settings(suite: str, settings: Settings = None, budget: int = None) -> Settings:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    settings = get_settings() if settings is None else settings
    return settings.replace(daisy_budget=budget if budget is not None else SUITE_BUDGETS[suite])


def run_check(name: str, instance: RootedInstance, settings: Settings = None) -> CheckReport:
    """Run one check on one instance and time it."""
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}")
    settings = get_settings() if settings is None else settings
    start = time.perf_counter()
    try:
        verdict, witness, detail = CHECKS[name](instance, settings)
    except BudgetExceededError as exc:
        verdict, witness, detail = SKIP, None, str(exc)
    elapsed = time.perf_counter() - start
    logger.info("%s %s: %s (%.3fs)", name, instance.name, verdict, elapsed)
    coordinates = as_host(instance.host).kind == "hamming"
    return CheckReport(name, instance.name, verdict, witness, detail, elapsed, coordinates)


def _run_task(task):
    name, instance, settings = task
    return run_check(name, instance, settings)


def run_family(name: str, family: Sequence[RootedInstance], settings: Settings = None) -> List[CheckReport]:
    return [run_check(name, instance, settings) for instance in family]


def default_family(name: str, suite: str = "full") -> List[RootedInstance]:
    return SUITES[suite]()[name]


def check_sufficient_size0(family=None, settings=None) -> List[CheckReport]:
    """Medians with the root for every pair imply every daisy graph is isometric."""
    return run_family("sufficient_size0", family or default_family("sufficient_size0"), settings)


def check_sufficient_size1(family=None, settings=None) -> List[CheckReport]:
    """Both readings of the size-1 hypothesis, reported as separate checks.

    ``sufficient_size1_strict`` demands size exactly 1 for every pair of
    distinct non-root vertices; ``sufficient_size1`` accepts size 0 or 1.
    """
    family = family or default_family("sufficient_size1")
    return run_family("sufficient_size1", family, settings) + run_family(
        "sufficient_size1_strict", family, settings
    )


def check_characterization(family=None, settings=None) -> List[CheckReport]:
    return run_family("characterization", family or default_family("characterization"), settings)


def check_pair_theorem(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("pair_theorem")
    return run_family("pair_theorem", family, settings)


def check_structure_lemmas(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("structure_lemmas")
    return run_family("structure_lemmas", family, settings)


def check_expansion_theorems(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("expansion_theorems")
    return run_family("expansion_theorems", family, settings)


def check_round_trip(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("round_trip")
    return run_family("round_trip", family, settings)


def check_interval_oracle(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("interval_oracle")
    return run_family("interval_oracle", family, settings)


def check_quasi_median_agreement(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("quasi_median_agreement")
    return run_family("quasi_median_agreement", family, settings)


def check_hamming_triangle_condition(shapes=None, settings=None) -> List[CheckReport]:
    family = hamming_instances(shapes) if shapes else default_family("hamming_triangle_condition")
    return run_family("hamming_triangle_condition", family, settings)


def check_cycle_counterexample(settings=None) -> List[CheckReport]:
    return run_family("cycle_counterexample", [c6_instance()], settings)


def run_suite(
    suite: str = "quick", settings: Settings = None, jobs: int = None, budget: int = None
) -> List[CheckReport]:
    """Run every check of ``suite`` and return the reports in (check, instance) order.

    Args:
        suite: ``"quick"`` or ``"full"``.
        settings: base settings; the daisy budget is set from the suite or ``budget``.
        jobs: worker processes, ``settings.jobs`` by default.
        budget: overrides the suite's daisy enumeration budget.
    """
    settings = suite_settings(suite, settings, budget)
    jobs = settings.jobs if jobs is None else jobs
    tasks = [
        (name, instance, settings)
        for name, family in sorted(SUITES[suite]().items())
        for instance in family
    ]
    logger.info("running %d jobs of suite %s with %d worker(s)", len(tasks), suite, jobs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(task) for task in tasks]
    return sorted(reports, key=lambda r: (r.check, r.instance))


def report_header(suite: str, settings: Settings) -> Dict[str, Any]:
    return {"suite": suite, "seed": settings.seed, "budget": settings.daisy_budget}


def summarize(reports: Sequence[CheckReport]) -> Dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for report in reports:
        counts[report.verdict] += 1
    return counts


def render_text(reports: Sequence[CheckReport], header: Dict[str, Any], timings: bool = False) -> str:
    lines = ["# " + " ".join(f"{k}={v}" for k, v in header.items())]
    for report in reports:
        line = f"{report.verdict:<4}  {report.check}  {report.instance}"
        if report.detail:
            line += f"  {report.detail}"
        if report.witness is not None:
            line += "  witness=" + json.dumps(report.jsonable_witness(), sort_keys=True)
        if timings:
            line += f"  ({report.elapsed:.3f}s)"
        lines.append(line)
    counts = summarize(reports)
    lines.append(f"# {len(reports)} reports: {counts[PASS]} pass, {counts[FAIL]} fail, {counts[SKIP]} skip")
    return "\n".join(lines) + "\n"


def render_json(reports: Sequence[CheckReport], header: Dict[str, Any], timings: bool = False) -> str:
    document = {
        "schema": SCHEMA_VERSION,
        "header": header,
        "reports": [r.to_dict(timings) for r in reports],
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"

"""Ground-truth brute force, coloring verification, and the instance corpus:
named graphs plus seeded rejection sampling of diameter-two graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionViolated, RejectionBudgetExhausted, TooLarge
from .graph import Graph, build_graph, diameter, find_induced_cycle
from .propagation import Coloring, ListAssignment, mask_colors

DEFAULT_BRUTE_FORCE_BOUND = 22
DEFAULT_ATTEMPT_BUDGET = 100_000


def verify_coloring(g: Graph, lists: ListAssignment, coloring) -> bool:
    """True iff the coloring is proper and every color sits in its list.

    Shares no code path with any solver; used as the final word on every
    certificate.
    """
    if coloring is None or len(coloring) != g.n:
        return False
    for v, color in enumerate(coloring):
        if color.bit_count() != 1 or not color & lists.masks[v]:
            return False
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            return False
    return True


def brute_force(g: Graph, lists: ListAssignment, *,
                max_vertices: int = DEFAULT_BRUTE_FORCE_BOUND) -> Coloring | None:
    """Exact decision by backtracking over the lists with unit propagation.

    Assigns the uncolored vertex with the smallest list first (ties to the
    least index) and strips each committed color from neighbor lists, which
    keeps the search fast at oracle scale.
    """
    if g.n > max_vertices:
        raise TooLarge(g.n, max_vertices)
    masks = list(lists.masks)
    if not _oracle_prune(g, masks, [v for v in range(g.n) if masks[v].bit_count() == 1]):
        return None
    solution = _oracle_search(g, masks)
    if solution is None:
        return None
    coloring = tuple(solution)
    assert verify_coloring(g, lists, coloring)
    return coloring


def _oracle_prune(g: Graph, masks: list[int], queue: list[int]) -> bool:
    while queue:
        u = queue.pop()
        strip = ~masks[u]
        for v in g.adj[u]:
            old = masks[v]
            new = old & strip
            if new == old:
                continue
            if new == 0:
                return False
            masks[v] = new
            if new.bit_count() == 1:
                queue.append(v)
    return True


def _oracle_search(g: Graph, masks: list[int]) -> list[int] | None:
    best = -1
    best_size = 4
    for v in range(g.n):
        size = masks[v].bit_count()
        if size > 1 and size < best_size:
            best, best_size = v, size
    if best < 0:
        return masks
    for color in mask_colors(masks[best]):
        trial = list(masks)
        trial[best] = color
        if _oracle_prune(g, trial, [best]):
            found = _oracle_search(g, trial)
            if found is not None:
                return found
    return None


# -----------------------------------------------------------------
# Named graphs
# -----------------------------------------------------------------

def pentagon_graph() -> Graph:
    return build_graph(5, [(i, (i + 1) % 5) for i in range(5)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, list(combinations(range(k), 2)))


def petersen_graph() -> Graph:
    """Outer pentagon 0..4, inner pentagram 5..9, spokes i to i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def grotzsch_graph() -> Graph:
    """Mycielski construction over the pentagon: 11 vertices, 20 edges,
    triangle-free, diameter two, and not 3-colorable."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        shadow = 5 + i
        edges.append((shadow, (i + 1) % 5))
        edges.append((shadow, (i - 1) % 5))
        edges.append((shadow, 10))
    return build_graph(11, edges)


NAMED_FAMILIES = {
    "petersen": petersen_graph,
    "grotzsch": grotzsch_graph,
    "c5": pentagon_graph,
    "k4": lambda: complete_graph(4),
}


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate: a named graph, or seeded G(n, p) rejection-sampled
    until the diameter is at most two and every listed induced cycle length
    is absent.  Named families ignore n, p and constraints."""

    family: str
    n: int = 0
    p: float = 0.0
    seed: int = 0
    forbidden_cycles: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.family not in NAMED_FAMILIES and self.family != "random_diam2":
            raise PreconditionViolated(f"unknown family {self.family!r}")
        if self.family == "random_diam2":
            if self.n < 1:
                raise PreconditionViolated("random_diam2 needs n >= 1")
            if not 0.0 <= self.p <= 1.0:
                raise PreconditionViolated(f"edge probability {self.p} outside [0, 1]")
            for k in self.forbidden_cycles:
                if k < 3:
                    raise PreconditionViolated(f"cycle length {k} below 3")


def generate(spec: GeneratorSpec, *, max_attempts: int = DEFAULT_ATTEMPT_BUDGET) -> Graph:
    """Deterministic in the spec: the random family draws pair probabilities
    from random.Random(seed) (Mersenne Twister) in ascending pair order, one
    stream across attempts."""
    if spec.family in NAMED_FAMILIES:
        return NAMED_FAMILIES[spec.family]()
    rng = random.Random(spec.seed)
    pairs = list(combinations(range(spec.n), 2))
    for _ in range(max_attempts):
        edges = [pair for pair in pairs if rng.random() < spec.p]
        g = build_graph(spec.n, edges)
        if diameter(g) > 2:
            continue
        if any(find_induced_cycle(g, k) is not None for k in spec.forbidden_cycles):
            continue
        return g
    raise RejectionBudgetExhausted(spec, max_attempts)

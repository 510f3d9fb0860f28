"""Shared machinery for anchoring an induced 5-cycle.

Every proper 3-coloring of a 5-cycle uses one color once and the other two
twice, alternating; rotating the cycle tuple so the once-used color sits
last presents the anchor as (X, Y, X, Y, Z).  With restricted lists the
colors cannot be renamed away, so solvers enumerate all list-consistent
proper colorings of one fixed induced 5-cycle (at most 30) and branch.
"""

from __future__ import annotations

from itertools import product

from .errors import PartitionLeftover
from .graph import Graph
from .propagation import ListAssignment, PALETTE


def consistent_anchorings(lists: ListAssignment, cycle) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All proper list-consistent colorings of the induced 5-cycle, each
    rotated into (X, Y, X, Y, Z) form.

    Returns (rotated_cycle, rotated_colors) pairs in lexicographic order of
    the un-rotated color choice, so branch exploration is reproducible.
    """
    anchorings = []
    choices = [tuple(c for c in PALETTE if lists.masks[v] & c) for v in cycle]
    for colors in product(*choices):
        if any(colors[i] == colors[(i + 1) % 5] for i in range(5)):
            continue
        anchorings.append(_rotate_to_pattern(cycle, colors))
    return anchorings


def _rotate_to_pattern(cycle, colors) -> tuple[tuple[int, ...], tuple[int, ...]]:
    counts = {c: colors.count(c) for c in set(colors)}
    lone = next(c for c, k in counts.items() if k == 1)
    start = (colors.index(lone) + 1) % 5
    order = [(start + i) % 5 for i in range(5)]
    rotated_cycle = tuple(cycle[i] for i in order)
    rotated_colors = tuple(colors[i] for i in order)
    assert rotated_colors[0] == rotated_colors[2] and rotated_colors[1] == rotated_colors[3]
    return (rotated_cycle, rotated_colors)


def shells_around(g: Graph, masks: list[int], cycle) -> dict[str, frozenset[int]]:
    """Split the rest of the graph around the anchored cycle.

    shell1 holds the cycle's neighbors, shell2 everything else (each shell2
    vertex must touch shell1, otherwise the diameter-two partition premise
    fails and PartitionLeftover is raised).  colored1/colored2 are the
    members already holding singleton lists; shell2_twos and shell2_threes
    split the uncolored second shell by list size.
    """
    on_cycle = set(cycle)
    shell1 = set()
    for v in cycle:
        shell1.update(w for w in g.adj[v] if w not in on_cycle)
    shell2 = set()
    for v in range(g.n):
        if v in on_cycle or v in shell1:
            continue
        if not g.neighbor_sets[v] & shell1:
            raise PartitionLeftover(v)
        shell2.add(v)
    colored1 = {v for v in shell1 if masks[v].bit_count() == 1}
    colored2 = {v for v in shell2 if masks[v].bit_count() == 1}
    twos = {v for v in shell2 if masks[v].bit_count() == 2}
    threes = {v for v in shell2 if masks[v].bit_count() == 3}
    return {
        "shell1": frozenset(shell1),
        "shell2": frozenset(shell2),
        "colored1": frozenset(colored1),
        "colored2": frozenset(colored2),
        "shell2_twos": frozenset(twos),
        "shell2_threes": frozenset(threes),
    }

"""List 3-coloring on triangle-free diameter-two graphs with no induced C7.

After anchoring an induced 5-cycle the uncolored first shell splits, by
which anchor positions a vertex attaches to, into seven independent sets.
The decision then needs only two levels of branching over the full-list
vertices of the second shell: restrict them all away from the lone anchor
color, else commit one to it, restrict the survivors, else commit one more.
Triangle-freeness and the absence of induced 7-cycles guarantee that no
full list survives the second commitment, so every branch bottoms out in a
two-list instance and the whole run solves O(n^2) of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .anchoring import consistent_anchorings, shells_around
from .errors import PreconditionViolated, StructureViolation, Violation
from .graph import (
    Graph,
    find_induced_c5,
    is_induced_cycle,
    require_diameter_two,
    require_no_induced_cycle,
)
from .oracle import DEFAULT_BRUTE_FORCE_BOUND, brute_force
from .propagation import ListAssignment, Status, fixpoint_masks
from .results import SolveResult, TelemetryCounter
from .solver_c4cs import DEFAULT_CLASS_CHECK_LIMIT
from .twolist import solve_two_list


@dataclass(frozen=True)
class AnchorPartition:
    """Uncolored first shell split by anchor attachment.

    Positions refer to the anchored cycle (colors X, Y, X, Y, Z in order):
    first_only / third_only / first_and_third attach among {cycle[0],
    cycle[2]}, the three second/fourth sets among {cycle[1], cycle[3]}, and
    fifth attaches to cycle[4].  Second-shell fields mirror the 5-cycle
    decomposition.
    """

    cycle: tuple[int, ...]
    cycle_colors: tuple[int, ...]
    first_only: frozenset[int]
    third_only: frozenset[int]
    first_and_third: frozenset[int]
    second_only: frozenset[int]
    fourth_only: frozenset[int]
    second_and_fourth: frozenset[int]
    fifth: frozenset[int]
    shell1: frozenset[int]
    shell2: frozenset[int]
    colored1: frozenset[int]
    colored2: frozenset[int]
    shell2_twos: frozenset[int]
    shell2_threes: frozenset[int]

    @property
    def x_side(self) -> frozenset[int]:
        return self.first_only | self.third_only | self.first_and_third

    @property
    def y_side(self) -> frozenset[int]:
        return self.second_only | self.fourth_only | self.second_and_fourth


def partition_by_anchor(g: Graph, lists: ListAssignment, cycle) -> AnchorPartition:
    """Build the anchored partition and validate its base invariants:
    attachment sets avoid the other anchor vertices, every full-list vertex
    reaches all three sides, and all seven sets are independent (with no
    edges between a one-anchor set and its two-anchor companion)."""
    cycle = tuple(cycle)
    if not is_induced_cycle(g, cycle) or len(cycle) != 5:
        raise PreconditionViolated(f"{cycle} is not an induced 5-cycle")
    colors = [lists.masks[v] for v in cycle]
    if any(c.bit_count() != 1 for c in colors) or not (
            colors[0] == colors[2] and colors[1] == colors[3]
            and len({colors[0], colors[1], colors[4]}) == 3):
        raise PreconditionViolated(f"anchor colors {colors} are not in alternating form")
    parts = shells_around(g, lists.masks, cycle)
    free1 = parts["shell1"] - parts["colored1"]
    sets = g.neighbor_sets

    def attached(v, *positions):
        return {cycle[i] for i in positions} & sets[v]

    first_only, third_only, both13 = set(), set(), set()
    second_only, fourth_only, both24 = set(), set(), set()
    fifth = set()
    for v in sorted(free1):
        a = attached(v, 0, 2)
        b = attached(v, 1, 3)
        if a:
            (both13 if len(a) == 2 else (first_only if cycle[0] in a else third_only)).add(v)
        if b:
            (both24 if len(b) == 2 else (second_only if cycle[1] in b else fourth_only)).add(v)
        if cycle[4] in sets[v]:
            fifth.add(v)

    part = AnchorPartition(
        cycle=cycle,
        cycle_colors=tuple(colors),
        first_only=frozenset(first_only),
        third_only=frozenset(third_only),
        first_and_third=frozenset(both13),
        second_only=frozenset(second_only),
        fourth_only=frozenset(fourth_only),
        second_and_fourth=frozenset(both24),
        fifth=frozenset(fifth),
        shell1=parts["shell1"],
        shell2=parts["shell2"],
        colored1=parts["colored1"],
        colored2=parts["colored2"],
        shell2_twos=parts["shell2_twos"],
        shell2_threes=parts["shell2_threes"],
    )
    problem = _base_violations(g, part)
    if problem is not None:
        raise StructureViolation(problem)
    return part


def _base_violations(g: Graph, part: AnchorPartition) -> Violation | None:
    sets = g.neighbor_sets
    cycle = part.cycle
    forbidden = {
        "x-side": (part.x_side, {cycle[1], cycle[3], cycle[4]}),
        "y-side": (part.y_side, {cycle[0], cycle[2], cycle[4]}),
        "fifth": (part.fifth, {cycle[0], cycle[1], cycle[2], cycle[3]}),
    }
    for name, (members, banned) in forbidden.items():
        for v in sorted(members):
            hit = sets[v] & banned
            if hit:
                return Violation("anchor-adjacency", (v, min(hit)),
                                 f"{name} vertex adjacent to a banned anchor")
    for v in sorted(part.shell2_threes):
        for name, side in (("x", part.x_side), ("y", part.y_side), ("z", part.fifth)):
            if not sets[v] & side:
                return Violation("missing-side", (v,),
                                 f"full-list vertex with no {name}-side neighbor")
    groups = [
        ("first_only", part.first_only), ("third_only", part.third_only),
        ("first_and_third", part.first_and_third), ("second_only", part.second_only),
        ("fourth_only", part.fourth_only), ("second_and_fourth", part.second_and_fourth),
        ("fifth", part.fifth),
    ]
    for name, members in groups:
        for v in sorted(members):
            hits = sets[v] & members
            if hits:
                return Violation("independent-set", (v, min(hits)), f"edge inside {name}")
    for name, single, double in (
            ("first", part.first_only, part.first_and_third),
            ("third", part.third_only, part.first_and_third),
            ("second", part.second_only, part.second_and_fourth),
            ("fourth", part.fourth_only, part.second_and_fourth)):
        for v in sorted(single):
            hits = sets[v] & double
            if hits:
                return Violation("same-anchor-link", (v, min(hits)),
                                 f"edge between {name} set and its two-anchor companion")
    return None


def partition_violations(g: Graph, part: AnchorPartition) -> list[Violation]:
    """Structural checks a conforming input guarantees beyond the base
    partition invariants; empty on triangle-free, C7-hole-free diameter-two
    graphs at fixpoint.

    Rules reported:
      fifth-second-bridge   an uncolored shell-2 vertex touches both the fifth
                            set and second_only
      fifth-third-bridge    same with third_only
      first-fourth-bridge   an uncolored shell-2 vertex touches both
                            first_only and fourth_only
      missing-paired-anchor a full-list vertex lacks a neighbor in one of the
                            two-anchor sets
      full-list-adjacency   a full-list vertex has a neighbor inside shell 2
    """
    out: list[Violation] = []
    sets = g.neighbor_sets
    uncolored2 = part.shell2 - part.colored2
    for z in sorted(uncolored2):
        near = sets[z]
        if near & part.fifth and near & part.second_only:
            out.append(Violation("fifth-second-bridge", (z,),
                                 "shell-2 bridge from the fifth set to second_only"))
        if near & part.fifth and near & part.third_only:
            out.append(Violation("fifth-third-bridge", (z,),
                                 "shell-2 bridge from the fifth set to third_only"))
        if near & part.first_only and near & part.fourth_only:
            out.append(Violation("first-fourth-bridge", (z,),
                                 "shell-2 bridge between first_only and fourth_only"))
    for z in sorted(part.shell2_threes):
        if not sets[z] & part.first_and_third or not sets[z] & part.second_and_fourth:
            out.append(Violation("missing-paired-anchor", (z,),
                                 "full-list vertex without both two-anchor neighbors"))
        inside = sets[z] & part.shell2
        if inside:
            out.append(Violation("full-list-adjacency", (z, min(inside)),
                                 "full-list vertex not isolated within shell 2"))
    return out


def decide_by_branching(g: Graph, part: AnchorPartition, lists: ListAssignment, *,
                        counter: TelemetryCounter) -> tuple[bool, tuple[int, ...] | None]:
    """Two-level branching over the frozen full-list vertices.

    Phase 1 restricts every full list to the two alternating anchor colors
    and solves.  Failing that, each full-list vertex in turn is committed to
    the lone anchor color; after propagation the survivors are restricted
    away from the second alternating color and solved, and failing that each
    survivor is committed to that color, which must leave a two-list
    instance.  A full list surviving the second commitment is impossible on
    conforming inputs and raises StructureViolation.
    """
    base = list(lists.masks)
    frozen_full = sorted(part.shell2_threes)
    color_x, color_y, color_z = part.cycle_colors[0], part.cycle_colors[1], part.cycle_colors[4]
    instances = 0

    def solve(masks) -> tuple[int, ...] | None:
        nonlocal instances
        instances += 1
        counter.two_list_instances += 1
        return solve_two_list(g, ListAssignment(masks))

    def finish(coloring):
        counter.branch_counts.append((instances, len(frozen_full)))
        return (coloring is not None, coloring)

    trimmed = list(base)
    for z in frozen_full:
        trimmed[z] &= color_x | color_y
    coloring = solve(trimmed)
    if coloring is not None or not frozen_full:
        return finish(coloring)

    for z1 in frozen_full:
        masks = list(base)
        masks[z1] = color_z
        status, masks, _ = fixpoint_masks(g, masks)
        if status is Status.NO:
            continue
        if status is Status.TWO_LIST_READY:
            coloring = solve(masks)
            if coloring is not None:
                return finish(coloring)
            continue
        survivors = [v for v in range(g.n) if masks[v].bit_count() == 3]
        trimmed = list(masks)
        for z in survivors:
            trimmed[z] &= color_x | color_z
        coloring = solve(trimmed)
        if coloring is not None:
            return finish(coloring)
        for z2 in survivors:
            deeper = list(masks)
            deeper[z2] = color_y
            status, deeper, _ = fixpoint_masks(g, deeper)
            if status is Status.NO:
                continue
            if status is Status.REDUCED:
                witness = next(v for v in range(g.n) if deeper[v].bit_count() == 3)
                raise StructureViolation(Violation(
                    "residual-full-list", (z1, z2, witness),
                    "full list survived the second commitment"))
            coloring = solve(deeper)
            if coloring is not None:
                return finish(coloring)
    return finish(None)


def solve_c3c7(g: Graph, lists: ListAssignment, *,
               check_input: bool | None = None,
               oracle_bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> SolveResult:
    """Decide list 3-colorability of a triangle-free, C7-hole-free
    diameter-two graph.

    check_input=None verifies diameter and both freeness properties up front
    when n is at most 300.  Inputs with no induced 5-cycle are decided by the
    brute-force oracle and flagged in the telemetry.
    """
    if len(lists.masks) != g.n:
        raise PreconditionViolated(f"{len(lists.masks)} lists for {g.n} vertices")
    if check_input is None:
        check_input = g.n <= DEFAULT_CLASS_CHECK_LIMIT
    if check_input:
        require_diameter_two(g)
        require_no_induced_cycle(g, 3)
        require_no_induced_cycle(g, 7)

    counter = TelemetryCounter()
    status, masks, _ = fixpoint_masks(g, list(lists.masks))
    if status is Status.NO:
        return SolveResult(False, None, counter.freeze())
    if status is Status.TWO_LIST_READY:
        counter.two_list_instances += 1
        coloring = solve_two_list(g, ListAssignment(masks))
        return SolveResult(coloring is not None, coloring, counter.freeze())

    anchor = find_induced_c5(g)
    if anchor is None:
        counter.fallback = True
        coloring = brute_force(g, ListAssignment(masks), max_vertices=oracle_bound)
        return SolveResult(coloring is not None, coloring, counter.freeze())

    reduced = ListAssignment(masks)
    for cycle, colors in consistent_anchorings(reduced, anchor):
        branch = list(reduced.masks)
        for v, color in zip(cycle, colors):
            branch[v] = color
        status, branch, _ = fixpoint_masks(g, branch)
        if status is Status.NO:
            continue
        if status is Status.TWO_LIST_READY:
            counter.two_list_instances += 1
            coloring = solve_two_list(g, ListAssignment(branch))
            if coloring is not None:
                return SolveResult(True, coloring, counter.freeze())
            continue
        assignment = ListAssignment(branch)
        part = partition_by_anchor(g, assignment, cycle)
        violations = partition_violations(g, part)
        if violations:
            raise StructureViolation(violations[0])
        colorable, coloring = decide_by_branching(g, part, assignment, counter=counter)
        if colorable:
            return SolveResult(True, coloring, counter.freeze())
    return SolveResult(False, None, counter.freeze())

"""List 3-coloring on diameter-two graphs with no induced C4 and no induced
Cs, for a fixed s >= 5.

The solver anchors an induced 5-cycle, enumerates its list-consistent proper
colorings, and for each anchoring propagates and then repeatedly grows an
alternating chain of full-list vertices and 2-list connectors through the
second shell.  Each growth step commits colors to a bounded set of vertices
(all list-consistent choices are branched on), so either some branch bottoms
out in two-list instances within the budget, or the chain reaches length
s - 4 and closes into an induced s-cycle through the anchor, refuting the
input's class membership.

Inputs containing no induced 5-cycle at all are outside the branching
argument; those are decided by the brute-force oracle and flagged in the
telemetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .anchoring import consistent_anchorings, shells_around
from .errors import (
    CertificateInvalid,
    InternalInvariantBroken,
    HasInducedCycle,
    PreconditionViolated,
    StructureViolation,
    Violation,
)
from .graph import (
    Graph,
    InducedCycleCertificate,
    connected_components,
    find_induced_c5,
    is_induced_cycle,
    require_diameter_two,
    require_no_induced_cycle,
)
from .oracle import DEFAULT_BRUTE_FORCE_BOUND, brute_force
from .propagation import ListAssignment, Status, fixpoint_masks, mask_colors
from .results import SolveResult, TelemetryCounter
from .twolist import solve_two_list

DEFAULT_CLASS_CHECK_LIMIT = 300


@dataclass(frozen=True)
class C5Decomposition:
    """The graph split around an anchored, colored induced 5-cycle.

    cycle is in cycle order with cycle_colors following the (X, Y, X, Y, Z)
    pattern.  shell1 holds the cycle's neighbors (colored1 of them already
    colored), shell2 the rest; shell1_at[i] are the uncolored shell-1
    neighbors of cycle[i]; shell2_twos / shell2_threes split the uncolored
    second shell by list size.
    """

    cycle: tuple[int, ...]
    cycle_colors: tuple[int, ...]
    shell1: frozenset[int]
    shell2: frozenset[int]
    colored1: frozenset[int]
    colored2: frozenset[int]
    shell1_at: tuple[frozenset[int], ...]
    shell2_twos: frozenset[int]
    shell2_threes: frozenset[int]


@dataclass(frozen=True)
class AlternatingPath:
    """An induced chain through the second shell: full-list vertices at odd
    positions, 2-list connectors between them."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BranchNode:
    """One node of the commitment tree: the colors committed so far and the
    list state they produced."""

    trail: tuple[tuple[int, int], ...]
    masks: tuple[int, ...]


@dataclass(frozen=True)
class GrowOutcome:
    chain: AlternatingPath | None
    colorable: bool
    coloring: tuple[int, ...] | None


def decompose_around_c5(g: Graph, lists: ListAssignment, cycle) -> C5Decomposition:
    """Split the graph around an anchored 5-cycle; propagation must already
    be at fixpoint and the cycle colored in the alternating pattern."""
    cycle = tuple(cycle)
    if not is_induced_cycle(g, cycle) or len(cycle) != 5:
        raise PreconditionViolated(f"{cycle} is not an induced 5-cycle")
    colors = []
    for v in cycle:
        if not lists.is_colored(v):
            raise PreconditionViolated(f"anchor vertex {v} is not colored")
        colors.append(lists.masks[v])
    if not (colors[0] == colors[2] and colors[1] == colors[3]
            and len({colors[0], colors[1], colors[4]}) == 3):
        raise PreconditionViolated(f"anchor colors {colors} are not in alternating form")
    parts = shells_around(g, lists.masks, cycle)
    on_cycle = set(cycle)
    shell1_at = tuple(
        frozenset(w for w in g.adj[cycle[i]]
                  if w not in on_cycle and w not in parts["colored1"])
        for i in range(5)
    )
    for i in range(5):
        for v in shell1_at[i]:
            if lists.size(v) > 2:
                raise PreconditionViolated(f"shell-1 vertex {v} still has a full list")
    return C5Decomposition(
        cycle=cycle,
        cycle_colors=tuple(colors),
        shell1=parts["shell1"],
        shell2=parts["shell2"],
        colored1=parts["colored1"],
        colored2=parts["colored2"],
        shell1_at=shell1_at,
        shell2_twos=parts["shell2_twos"],
        shell2_threes=parts["shell2_threes"],
    )


def structure_violations(g: Graph, dec: C5Decomposition) -> list[Violation]:
    """Check every structural property a conforming input guarantees for the
    decomposition; empty on (C4, Cs)-free diameter-two graphs at fixpoint.

    Rules reported:
      single-anchor        a 2-list shell-1 vertex touches exactly one cycle vertex
      consecutive-links    no edge joins shell1_at sets of adjacent cycle positions
      multi-link           a shell1_at vertex has at most one neighbor per other class
      matching             classes at cycle distance two pair up as perfect matchings
      shell2-links         uncolored shell-2 vertices touch each class at most once,
                           full-list ones exactly once
      matched-pair-shared  matched cross pairs share no uncolored shell-2 neighbor
      double-bridge        a full-list vertex and a non-neighbor in shell 1 have at
                           most one common shell-2 neighbor
    """
    out: list[Violation] = []
    cycle = dec.cycle
    on_cycle = set(cycle)
    sets = g.neighbor_sets

    for v in sorted(dec.shell1):
        if v not in dec.colored1:
            anchors = sets[v] & on_cycle
            if len(anchors) != 1:
                out.append(Violation("single-anchor", (v, *sorted(anchors)),
                                     "2-list shell-1 vertex with anchor count != 1"))

    for i in range(5):
        here, there = dec.shell1_at[i], dec.shell1_at[(i + 1) % 5]
        for v in sorted(here):
            hits = sets[v] & there
            if hits:
                out.append(Violation("consecutive-links", (v, min(hits)),
                                     f"edge between classes {i} and {(i + 1) % 5}"))

    for i in range(5):
        for j in range(5):
            if i == j:
                continue
            for v in sorted(dec.shell1_at[i]):
                hits = sets[v] & dec.shell1_at[j]
                if len(hits) > 1:
                    out.append(Violation("multi-link", (v, *sorted(hits)),
                                         f"more than one neighbor in class {j}"))

    for i, j in ((0, 2), (1, 3)):
        a, b = dec.shell1_at[i], dec.shell1_at[j]
        if len(a) != len(b):
            out.append(Violation("matching", (cycle[i], cycle[j]),
                                 f"class sizes {len(a)} vs {len(b)}"))
        for side, other in ((a, b), (b, a)):
            for v in sorted(side):
                if len(sets[v] & other) != 1:
                    out.append(Violation("matching", (v,),
                                         "vertex without a unique partner"))

    for v in sorted(dec.shell2 - dec.colored2):
        full = v in dec.shell2_threes
        for i in range(5):
            hits = sets[v] & dec.shell1_at[i]
            if len(hits) > 1 or (full and not hits):
                out.append(Violation("shell2-links", (v, *sorted(hits)),
                                     f"class {i} touched {len(hits)} times"))

    uncolored2 = dec.shell2 - dec.colored2
    for i, j in ((0, 2), (1, 3)):
        for v in sorted(dec.shell1_at[i]):
            for w in sorted(sets[v] & dec.shell1_at[j]):
                shared = sets[v] & sets[w] & uncolored2
                if shared:
                    out.append(Violation("matched-pair-shared", (v, w, *sorted(shared)),
                                         "matched pair with a shared uncolored shell-2 neighbor"))

    shell1_classed = frozenset().union(*dec.shell1_at) if dec.shell1_at else frozenset()
    for z in sorted(dec.shell2_threes):
        for u in sorted(shell1_classed):
            if g.has_edge(u, z):
                continue
            bridges = (sets[u] & sets[z] & dec.shell2) - {z}
            if len(bridges) > 1:
                out.append(Violation("double-bridge", (z, u, *sorted(bridges)),
                                     "two shell-2 bridges between a full-list vertex and shell 1"))
    return out


def branch_on_components(g: Graph, lists: ListAssignment, dec: C5Decomposition,
                         position: int, budget: int, *,
                         counter: TelemetryCounter) -> SolveResult | None:
    """Decide the current anchoring by 2-coloring the shell-1 class at one
    cycle position component by component.

    Every class member must avoid the anchor color, so each connected
    component is 2-colored in one of two ways; a non-bipartite component
    rules the anchoring out immediately.  Returns None when the component
    count exceeds the budget.
    """
    members = sorted(dec.shell1_at[position])
    components = connected_components(g, members)
    if len(components) > budget:
        return None
    colors = [c for c in mask_colors(7) if c != dec.cycle_colors[position]]
    assignments_per_component = []
    for comp in components:
        sides = _bipartition(g, comp)
        if sides is None:
            return SolveResult(False, None, counter.freeze())
        side_a, side_b = sides
        assignments_per_component.append((
            [(v, colors[0]) for v in side_a] + [(v, colors[1]) for v in side_b],
            [(v, colors[1]) for v in side_a] + [(v, colors[0]) for v in side_b],
        ))
    for choice in product(*assignments_per_component):
        masks = list(lists.masks)
        feasible = True
        for commits in choice:
            for v, color in commits:
                if not masks[v] & color:
                    feasible = False
                masks[v] = color
        if not feasible:
            continue
        status, masks, _ = fixpoint_masks(g, masks)
        if status is Status.NO:
            continue
        if status is Status.REDUCED:
            raise InternalInvariantBroken(
                "full list left after coloring an entire anchor neighborhood")
        counter.two_list_instances += 1
        coloring = solve_two_list(g, ListAssignment(masks))
        if coloring is not None:
            return SolveResult(True, coloring, counter.freeze())
    return SolveResult(False, None, counter.freeze())


def _bipartition(g: Graph, comp: list[int]) -> tuple[list[int], list[int]] | None:
    side = {comp[0]: 0} if comp else {}
    queue = list(comp[:1])
    allowed = set(comp)
    while queue:
        u = queue.pop()
        for w in g.adj[u]:
            if w not in allowed:
                continue
            if w not in side:
                side[w] = side[u] ^ 1
                queue.append(w)
            elif side[w] == side[u]:
                return None
    return ([v for v in comp if side[v] == 0], [v for v in comp if side[v] == 1])


class _ChainFound(Exception):
    def __init__(self, chain: tuple[int, ...]):
        self.chain = chain


def grow_chain_or_branch(g: Graph, dec: C5Decomposition, lists: ListAssignment,
                         cap: int, *, counter: TelemetryCounter,
                         check_claims: bool = False) -> GrowOutcome:
    """Run the chain-growing branch procedure for one anchoring.

    Starting from the least full-list vertex, each round commits the current
    chain head and its shell-1 neighbors to every list-consistent coloring,
    propagates, and either bottoms out (two-list leaf, or a bounded cover of
    at most five connectors whose coloring kills every remaining full list)
    or extends the chain by a connector and a fresh full-list vertex.  A
    chain of cap vertices that closes into a verified induced hole through
    the anchor is returned instead of a decision; if the closure cannot be
    verified the growth simply continues, which keeps the procedure total.

    check_claims additionally asserts, at every extension, the two bounded-
    intersection properties the budget argument rests on, plus the 6 * cap
    trail bound.
    """
    grower = _ChainGrower(g, dec, cap, counter, check_claims)
    try:
        decided, coloring = grower.run(list(lists.masks))
    except _ChainFound as found:
        counter.grow_leaf_counts.append(grower.leaves)
        return GrowOutcome(AlternatingPath(found.chain), False, None)
    counter.grow_leaf_counts.append(grower.leaves)
    if grower.overflowed:
        counter.grow_overflowed = True
    return GrowOutcome(None, decided, coloring)


class _ChainGrower:
    def __init__(self, g: Graph, dec: C5Decomposition, cap: int,
                 counter: TelemetryCounter, check_claims: bool):
        self.g = g
        self.dec = dec
        self.cap = cap
        self.counter = counter
        self.check_claims = check_claims
        self.leaves = 0
        self.overflowed = False

    def run(self, masks: list[int]) -> tuple[bool, tuple[int, ...] | None]:
        start = next((v for v in range(self.g.n) if masks[v].bit_count() == 3), None)
        if start is None:
            return self._leaf(masks, ())
        if self.cap == 1:
            self._maybe_raise_chain((start,))
            self.overflowed = True
        return self._iterate(masks, (start,), ())

    def _iterate(self, masks, chain, trail) -> tuple[bool, tuple[int, ...] | None]:
        head = chain[-1]
        commit = [head] + self._anchored_neighbors(head, masks)
        for masks2, trail2 in self._commitments(masks, commit, trail):
            status, masks2, _ = fixpoint_masks(self.g, masks2)
            if status is Status.NO:
                continue
            if status is Status.TWO_LIST_READY:
                decided, coloring = self._leaf(masks2, trail2)
                if decided:
                    return (True, coloring)
                continue
            pair = self._find_extension(masks2, chain)
            if pair is None:
                decided, coloring = self._cover_leaves(masks2, chain, trail2)
            else:
                decided, coloring = self._extend(masks2, chain, trail2, pair)
            if decided:
                return (True, coloring)
        return (False, None)

    def _extend(self, masks, chain, trail, pair):
        full_vertex, connector = pair
        if self.check_claims:
            self._assert_claims(masks, chain[0], full_vertex)
        longer = chain + (connector,)
        if len(longer) == self.cap:
            self._maybe_raise_chain(longer)
            self.overflowed = True
        longer = longer + (full_vertex,)
        if len(longer) == self.cap:
            self._maybe_raise_chain(longer)
            self.overflowed = True
        commit = [connector] + self._anchored_neighbors(connector, masks)
        for masks2, trail2 in self._commitments(masks, commit, trail):
            status, masks2, _ = fixpoint_masks(self.g, masks2)
            if status is Status.NO:
                continue
            if status is Status.TWO_LIST_READY:
                decided, coloring = self._leaf(masks2, trail2)
            else:
                decided, coloring = self._iterate(masks2, longer, trail2)
            if decided:
                return (True, coloring)
        return (False, None)

    def _commitments(self, masks, vertices, trail):
        """All list-consistent colorings of the uncolored commit set, in
        ascending vertex and palette order."""
        todo = [v for v in vertices if masks[v].bit_count() > 1]
        option_sets = [mask_colors(masks[v]) for v in todo]
        for colors in product(*option_sets):
            masks2 = list(masks)
            for v, color in zip(todo, colors):
                masks2[v] = color
            yield masks2, trail + tuple(zip(todo, colors))

    def _anchored_neighbors(self, v: int, masks) -> list[int]:
        """Uncolored shell-1 neighbors of v; an originally-full-list vertex
        must own one neighbor in every class or the input broke the
        decomposition."""
        hits = sorted(w for w in self.g.adj[v]
                      if w in self.dec.shell1 and masks[w].bit_count() > 1)
        if v in self.dec.shell2_threes:
            for i in range(5):
                linked = self.g.neighbor_sets[v] & self.dec.shell1_at[i]
                if len(linked) != 1:
                    raise InternalInvariantBroken(
                        f"full-list vertex {v} has {len(linked)} neighbors in shell class {i}")
        return hits

    def _find_extension(self, masks, chain):
        """Least (full-list vertex, connector) pair usable to extend: the
        connector joins the chain head and the new vertex, holds two colors,
        and none of its shell-1 neighbors touches the chain start."""
        head, start = chain[-1], chain[0]
        sets = self.g.neighbor_sets
        for x in range(self.g.n):
            if masks[x].bit_count() != 3:
                continue
            for y in sorted(sets[x] & sets[head]):
                if y not in self.dec.shell2 or masks[y].bit_count() != 2:
                    continue
                if all(start not in sets[q] for q in sets[y] & self.dec.shell1):
                    return (x, y)
        return None

    def _cover_leaves(self, masks, chain, trail):
        """No extension exists but full lists remain: every remaining
        full-list vertex hangs off one of at most five connectors next to
        the head that link back toward the chain start; color them all."""
        head, start = chain[-1], chain[0]
        sets = self.g.neighbor_sets
        start_shell1 = sets[start] & self.dec.shell1
        cover = [y for y in sorted(sets[head] & self.dec.shell2)
                 if masks[y].bit_count() >= 2 and sets[y] & start_shell1]
        if len(cover) > 5:
            raise InternalInvariantBroken(
                f"cover of size {len(cover)} around chain head {head}")
        if not cover:
            raise InternalInvariantBroken(
                f"full lists remain but no cover exists around chain head {head}")
        for masks2, trail2 in self._commitments(masks, cover, trail):
            status, masks2, _ = fixpoint_masks(self.g, masks2)
            if status is Status.NO:
                continue
            if status is Status.REDUCED:
                raise InternalInvariantBroken(
                    "full list survived coloring the whole connector cover")
            decided, coloring = self._leaf(masks2, trail2)
            if decided:
                return (True, coloring)
        return (False, None)

    def _leaf(self, masks, trail) -> tuple[bool, tuple[int, ...] | None]:
        if self.check_claims and not self.overflowed and len(trail) > 6 * self.cap:
            raise InternalInvariantBroken(
                f"trail of {len(trail)} commits exceeds {6 * self.cap}")
        self.leaves += 1
        self.counter.two_list_instances += 1
        coloring = solve_two_list(self.g, ListAssignment(list(masks)))
        return (coloring is not None, coloring)

    def _maybe_raise_chain(self, chain) -> None:
        if _assemble_hole(self.g, self.dec, chain) is not None:
            raise _ChainFound(tuple(chain))

    def _assert_claims(self, masks, start, full_vertex) -> None:
        sets = self.g.neighbor_sets
        start_shell1 = sets[start] & self.dec.shell1
        for q in sorted(start_shell1):
            if len(sets[q] & sets[full_vertex]) > 1:
                raise InternalInvariantBroken(
                    f"neighbor {q} of chain start shares two neighbors with {full_vertex}")
        linked = [w for w in sets[full_vertex] & self.dec.shell2
                  if sets[w] & start_shell1]
        if len(linked) > 5:
            raise InternalInvariantBroken(
                f"{full_vertex} has {len(linked)} linked shell-2 neighbors")


def _assemble_hole(g: Graph, dec: C5Decomposition, chain) -> tuple[int, ...] | None:
    """Close the chain through the anchor: least shell-1 attachments of its
    endpoints at cycle positions 1 and 2, then the anchor edge between them.
    Returns the cycle if it verifies as induced, else None."""
    first, last = chain[0], chain[-1]
    into1 = sorted(g.neighbor_sets[first] & dec.shell1_at[1])
    into2 = sorted(g.neighbor_sets[last] & dec.shell1_at[2])
    if not into1 or not into2:
        return None
    candidate = tuple(chain) + (into2[0], dec.cycle[2], dec.cycle[1], into1[0])
    return candidate if is_induced_cycle(g, candidate) else None


def hole_from_chain(g: Graph, dec: C5Decomposition, chain: AlternatingPath,
                    s: int) -> InducedCycleCertificate:
    """Close a chain of s - 4 vertices into a verified induced s-cycle.

    CertificateInvalid means the closure could not be built or has a chord,
    which signals a broken chain, not a property of the input.
    """
    vertices = tuple(chain.vertices)
    if len(vertices) != s - 4:
        raise PreconditionViolated(f"chain has {len(vertices)} vertices, need {s - 4}")
    candidate = _assemble_hole(g, dec, vertices)
    if candidate is None:
        raise CertificateInvalid(f"chain {vertices} does not close into an induced {s}-cycle")
    return InducedCycleCertificate(candidate)


def solve_c4cs(g: Graph, lists: ListAssignment, s: int, *,
               check_input: bool | None = None,
               use_component_branch: bool = False,
               component_budget: int = 10,
               check_claims: bool = False,
               oracle_bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> SolveResult:
    """Decide list 3-colorability of a (C4, Cs)-free diameter-two graph.

    check_input=None verifies diameter and both freeness properties up front
    when n is at most 300; pass True or False to force or skip the checks.
    When checks are skipped, violations surface lazily through the
    structural detectors.  use_component_branch enables the optional
    shell-class component split when some class has at most
    component_budget components.
    """
    if s < 5:
        raise PreconditionViolated(f"forbidden cycle length must be at least 5, got {s}")
    if len(lists.masks) != g.n:
        raise PreconditionViolated(f"{len(lists.masks)} lists for {g.n} vertices")
    if check_input is None:
        check_input = g.n <= DEFAULT_CLASS_CHECK_LIMIT
    if check_input:
        require_diameter_two(g)
        require_no_induced_cycle(g, 4)
        require_no_induced_cycle(g, s)

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
        dec = decompose_around_c5(g, assignment, cycle)
        violations = structure_violations(g, dec)
        if violations:
            raise StructureViolation(violations[0])
        if use_component_branch:
            position = min(range(5),
                           key=lambda i: len(connected_components(g, dec.shell1_at[i])))
            result = branch_on_components(g, assignment, dec, position,
                                          component_budget, counter=counter)
            if result is not None:
                if result.colorable:
                    return result
                continue
        outcome = grow_chain_or_branch(g, dec, assignment, s - 4,
                                       counter=counter, check_claims=check_claims)
        if outcome.chain is not None:
            certificate = hole_from_chain(g, dec, outcome.chain, s)
            raise HasInducedCycle(s, certificate.vertices)
        if outcome.colorable:
            return SolveResult(True, outcome.coloring, counter.freeze())
    return SolveResult(False, None, counter.freeze())

"""Per-vertex color lists over a fixed three-color palette and the narrowing
rules that are applied to fixpoint before and between branching steps.

Lists are bitmasks over the palette {a, b, c}.  Every rule only removes
colors that no respecting proper coloring can use, so narrowing preserves
the full set of solutions, and total list mass strictly decreases on every
applied rule, which bounds the number of applications by 3n.

The five narrowing situations:

* a colored vertex strips its color from every neighbor list;
* an empty list means the instance has no coloring;
* the two ends of an induced diamond (K4 minus an edge) must agree, so both
  lists become their intersection;
* a triangle containing two vertices that share the same 2-color list forces
  the third vertex off both of those colors;
* an induced 4-cycle whose three consecutive lists are the three distinct
  2-color lists forces the fourth vertex off the color shared by its two
  cycle neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import PreconditionViolated
from .graph import Graph

COLOR_A = 1
COLOR_B = 2
COLOR_C = 4
PALETTE = (COLOR_A, COLOR_B, COLOR_C)
FULL_LIST = COLOR_A | COLOR_B | COLOR_C

COLOR_LETTERS = {COLOR_A: "a", COLOR_B: "b", COLOR_C: "c"}
LETTER_COLORS = {letter: color for color, letter in COLOR_LETTERS.items()}

Coloring = tuple[int, ...]


def mask_size(mask: int) -> int:
    return mask.bit_count()


def mask_colors(mask: int) -> tuple[int, ...]:
    """Colors in a mask, in palette order."""
    return tuple(color for color in PALETTE if mask & color)


def mask_from_letters(letters: str) -> int:
    mask = 0
    for letter in letters:
        if letter not in LETTER_COLORS:
            raise PreconditionViolated(f"unknown color letter {letter!r}")
        mask |= LETTER_COLORS[letter]
    return mask


def mask_to_letters(mask: int) -> str:
    return "".join(COLOR_LETTERS[color] for color in mask_colors(mask))


@dataclass
class ListAssignment:
    """Mutable per-vertex color lists; cheap to copy for branching."""

    masks: list[int]

    def __post_init__(self) -> None:
        for v, mask in enumerate(self.masks):
            if not 0 <= mask <= FULL_LIST:
                raise PreconditionViolated(f"list mask {mask} at vertex {v} outside palette")

    @classmethod
    def full(cls, n: int) -> "ListAssignment":
        return cls([FULL_LIST] * n)

    def copy(self) -> "ListAssignment":
        return ListAssignment(list(self.masks))

    def size(self, v: int) -> int:
        return self.masks[v].bit_count()

    def is_colored(self, v: int) -> bool:
        return self.masks[v].bit_count() == 1

    def color_of(self, v: int) -> int:
        if not self.is_colored(v):
            raise PreconditionViolated(f"vertex {v} is not colored")
        return self.masks[v]

    def size_counts(self) -> tuple[int, int, int]:
        """How many vertices currently hold lists of size 1, 2 and 3."""
        ones = twos = threes = 0
        for mask in self.masks:
            size = mask.bit_count()
            if size == 1:
                ones += 1
            elif size == 2:
                twos += 1
            elif size == 3:
                threes += 1
        return (ones, twos, threes)

    def total_mass(self) -> int:
        return sum(mask.bit_count() for mask in self.masks)


class Status(Enum):
    NO = "no"
    TWO_LIST_READY = "two-list-ready"
    REDUCED = "reduced"


@dataclass(frozen=True)
class PropagationOutcome:
    """Fixpoint result: NO on an emptied list, TWO_LIST_READY when every list
    has size 1 or 2, REDUCED when a size-3 list survives."""

    status: Status
    assignment: ListAssignment | None


def propagate_singleton(g: Graph, lists: ListAssignment, u: int) -> ListAssignment:
    """Strip the color of the colored vertex u from every neighbor list."""
    if not lists.is_colored(u):
        raise PreconditionViolated(f"vertex {u} must hold a single color")
    out = lists.copy()
    for v in g.adj[u]:
        out.masks[v] &= ~out.masks[u]
    return out


def narrow_diamond(g: Graph, lists: ListAssignment, diamond: Sequence[int]) -> ListAssignment:
    """Intersect the lists of the two nonadjacent ends (v, x) of an induced
    diamond (v, w, x, y): any proper 3-coloring gives them the same color."""
    v, w, x, y = diamond
    required = [(v, w), (v, y), (w, x), (w, y), (x, y)]
    if len({v, w, x, y}) != 4 or g.has_edge(v, x) or not all(g.has_edge(*e) for e in required):
        raise PreconditionViolated(f"{diamond} does not induce a diamond with ends ({v},{x})")
    out = lists.copy()
    both = out.masks[v] & out.masks[x]
    out.masks[v] = both
    out.masks[x] = both
    return out


def narrow_triangle(g: Graph, lists: ListAssignment, triangle: Sequence[int]) -> ListAssignment:
    """In a triangle (v, w, x) with L(v) = L(w) of size two, both of those
    colors are spent on v and w, so remove them from L(x)."""
    v, w, x = triangle
    if len({v, w, x}) != 3 or not (g.has_edge(v, w) and g.has_edge(w, x) and g.has_edge(v, x)):
        raise PreconditionViolated(f"{triangle} is not a triangle")
    if lists.size(v) != 2 or lists.masks[v] != lists.masks[w]:
        raise PreconditionViolated("first two triangle vertices must share one 2-color list")
    out = lists.copy()
    out.masks[x] &= ~out.masks[v]
    return out


def narrow_square(g: Graph, lists: ListAssignment, square: Sequence[int]) -> ListAssignment:
    """On an induced 4-cycle (v, w, x, y) whose lists at v, w, x are the three
    pairwise-different 2-color lists, one of v, x always takes the color they
    share, so remove L(v) & L(x) from L(y)."""
    v, w, x, y = square
    cycle_edges = [(v, w), (w, x), (x, y), (y, v)]
    if len({v, w, x, y}) != 4 or not all(g.has_edge(*e) for e in cycle_edges) \
            or g.has_edge(v, x) or g.has_edge(w, y):
        raise PreconditionViolated(f"{square} is not an induced 4-cycle in order")
    mv, mw, mx = lists.masks[v], lists.masks[w], lists.masks[x]
    sizes_ok = all(m.bit_count() == 2 for m in (mv, mw, mx))
    if not sizes_ok or len({mv, mw, mx}) != 3:
        raise PreconditionViolated("first three cycle lists must be the three distinct pairs")
    out = lists.copy()
    out.masks[y] &= ~(mv & mx)
    return out


def propagate_to_fixpoint(g: Graph, lists: ListAssignment, *,
                          worklist_reversed: bool = False) -> PropagationOutcome:
    """Apply all narrowing rules until none changes a list.

    Scheduling is a worklist of dirty vertices (initially all): popping a
    vertex re-examines its colored-neighbor rule and every diamond, triangle
    and induced 4-cycle through it.  Monotone narrowing makes any fair order
    reach the same fixpoint; worklist_reversed processes largest-first and
    exists so tests can confirm that empirically.
    """
    status, masks, _ = fixpoint_masks(g, list(lists.masks), worklist_reversed)
    if status is Status.NO:
        return PropagationOutcome(Status.NO, None)
    return PropagationOutcome(status, ListAssignment(masks))


def fixpoint_masks(g: Graph, masks: list[int],
                   worklist_reversed: bool = False) -> tuple[Status, list[int], int]:
    """Low-level worklist engine: narrows masks in place and returns the
    status, the masks, and the number of effective list shrinks."""
    shrinks = 0
    pending = set(range(g.n))

    def shrink(v: int, new_mask: int) -> None:
        nonlocal shrinks
        if new_mask != masks[v]:
            masks[v] = new_mask
            shrinks += 1
            pending.add(v)

    while pending:
        u = max(pending) if worklist_reversed else min(pending)
        pending.discard(u)
        if masks[u] == 0:
            return (Status.NO, masks, shrinks)
        if masks[u].bit_count() == 1:
            strip = ~masks[u]
            for v in g.adj[u]:
                shrink(v, masks[v] & strip)
        _triangle_rules_at(g, masks, u, shrink)
        _diamond_rules_at(g, masks, u, shrink)
        _square_rules_at(g, masks, u, shrink)

    if any(mask == 0 for mask in masks):
        return (Status.NO, masks, shrinks)
    ready = all(mask.bit_count() <= 2 for mask in masks)
    return (Status.TWO_LIST_READY if ready else Status.REDUCED, masks, shrinks)


def _triangle_rules_at(g, masks, u, shrink) -> None:
    for a, b in combinations(g.adj[u], 2):
        if not g.has_edge(a, b):
            continue
        for v, w, x in ((u, a, b), (a, b, u), (b, u, a)):
            mv = masks[v]
            if mv.bit_count() == 2 and mv == masks[w]:
                shrink(x, masks[x] & ~mv)


def _diamond_rules_at(g, masks, u, shrink) -> None:
    sets = g.neighbor_sets

    def pinch(v: int, x: int) -> None:
        both = masks[v] & masks[x]
        shrink(v, both)
        shrink(x, both)

    # u as a diamond end: wings w, y adjacent to each other and to u.
    for w, y in combinations(g.adj[u], 2):
        if not g.has_edge(w, y):
            continue
        for x in sets[w] & sets[y]:
            if x != u and not g.has_edge(u, x):
                pinch(u, x)
    # u as a wing: the other wing y, ends v, x among their common neighbors.
    for y in g.adj[u]:
        commons = sorted(sets[u] & sets[y])
        for v, x in combinations(commons, 2):
            if not g.has_edge(v, x):
                pinch(v, x)


def _square_rules_at(g, masks, u, shrink) -> None:
    sets = g.neighbor_sets
    for v, x in combinations(g.adj[u], 2):
        if g.has_edge(v, x):
            continue
        for w in sorted(sets[v] & sets[x]):
            if w == u or g.has_edge(u, w):
                continue
            # Induced 4-cycle u-v-w-x; try each vertex as the narrowed one.
            cycle = (u, v, w, x)
            for i in range(4):
                y = cycle[i]
                n1, opposite, n2 = cycle[(i + 1) % 4], cycle[(i + 2) % 4], cycle[(i + 3) % 4]
                m1, mo, m2 = masks[n1], masks[opposite], masks[n2]
                if m1.bit_count() == 2 and mo.bit_count() == 2 and m2.bit_count() == 2 \
                        and len({m1, mo, m2}) == 3:
                    shrink(y, masks[y] & ~(m1 & m2))


def vertex_with_colored_neighborhood(g: Graph, lists: ListAssignment) -> int | None:
    """Least vertex whose entire open neighborhood is colored, if any.

    On a diameter-two graph such a vertex means the instance collapses to a
    two-list one after propagation, since everything else is adjacent to its
    (colored) neighborhood.
    """
    for v in range(g.n):
        if all(lists.is_colored(w) for w in g.adj[v]):
            return v
    return None

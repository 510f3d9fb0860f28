"""Linear-time decision for instances where every list has one or two colors.

Reduction to 2-SAT: each vertex with a 2-color list gets one boolean
variable choosing between its colors, singleton lists act as constants, and
every edge contributes clauses forbidding equal colors on its endpoints.
Satisfiability is decided on the implication graph by strongly connected
components; a satisfying assignment read off the component order yields the
coloring, which is re-verified before being returned.
"""

from __future__ import annotations

from .errors import InternalInvariantBroken, MalformedInstance
from .graph import Graph
from .propagation import Coloring, ListAssignment, mask_colors


def solve_two_list(g: Graph, lists: ListAssignment) -> Coloring | None:
    """Return a proper coloring respecting the 1/2-sized lists, or None."""
    if len(lists.masks) != g.n:
        raise MalformedInstance(f"{len(lists.masks)} lists for {g.n} vertices")
    options: list[tuple[int, ...]] = []
    for v, mask in enumerate(lists.masks):
        colors = mask_colors(mask)
        if not 1 <= len(colors) <= 2:
            raise MalformedInstance(f"vertex {v} has a list of size {len(colors)}")
        options.append(colors)

    var_of = [-1] * g.n
    variables: list[int] = []
    for v in range(g.n):
        if len(options[v]) == 2:
            var_of[v] = len(variables)
            variables.append(v)

    # Literal 2k asserts "vertex variables[k] takes its first (smaller) color",
    # literal 2k+1 the second; negation toggles the low bit.
    implications: list[list[int]] = [[] for _ in range(2 * len(variables))]

    def literal(v: int, option: int) -> int:
        return 2 * var_of[v] + option

    def add_clause(l1: int, l2: int) -> None:
        implications[l1 ^ 1].append(l2)
        implications[l2 ^ 1].append(l1)

    def forbid(l1: int) -> None:
        implications[l1].append(l1 ^ 1)

    for u, v in g.edges:
        for i, cu in enumerate(options[u]):
            for j, cv in enumerate(options[v]):
                if cu != cv:
                    continue
                u_fixed = len(options[u]) == 1
                v_fixed = len(options[v]) == 1
                if u_fixed and v_fixed:
                    return None
                if u_fixed:
                    forbid(literal(v, j))
                elif v_fixed:
                    forbid(literal(u, i))
                else:
                    add_clause(literal(u, i) ^ 1, literal(v, j) ^ 1)

    component = _tarjan_components(implications)
    for k in range(len(variables)):
        if component[2 * k] == component[2 * k + 1]:
            return None

    coloring = []
    for v in range(g.n):
        if var_of[v] < 0:
            coloring.append(options[v][0])
        else:
            k = var_of[v]
            takes_first = component[2 * k] < component[2 * k + 1]
            coloring.append(options[v][0 if takes_first else 1])

    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise InternalInvariantBroken(f"two-list assignment collides on edge ({u},{v})")
    return tuple(coloring)


def _tarjan_components(adjacency: list[list[int]]) -> list[int]:
    """Iterative Tarjan SCC; components are numbered in completion order, so
    an edge between components always points to a smaller number."""
    n = len(adjacency)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    component = [-1] * n
    stack: list[int] = []
    counter = 0
    next_index = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            node, child_pos = work[-1]
            if child_pos == 0:
                index[node] = low[node] = next_index
                next_index += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            children = adjacency[node]
            while child_pos < len(children):
                child = children[child_pos]
                child_pos += 1
                if index[child] == -1:
                    work[-1] = (node, child_pos)
                    work.append((child, 0))
                    advanced = True
                    break
                if on_stack[child]:
                    low[node] = min(low[node], index[child])
            if advanced:
                continue
            work.pop()
            if low[node] == index[node]:
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component[member] = counter
                    if member == node:
                        break
                counter += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return component

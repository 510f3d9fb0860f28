"""Solver results and run telemetry."""

from __future__ import annotations

from dataclasses import dataclass, field

from .propagation import Coloring


@dataclass(frozen=True)
class Telemetry:
    """Counts gathered during one solve.

    two_list_instances counts every two-list subinstance handed to the
    linear-time solver.  fallback marks decisions delegated to the
    brute-force oracle.  grow_leaf_counts records, per chain-growing run, how
    many leaf instances that run produced; branch_counts records, per
    two-level branching run, the pair (instances solved, frozen full-list
    vertex count).
    """

    two_list_instances: int = 0
    fallback: bool = False
    grow_leaf_counts: tuple[int, ...] = ()
    grow_overflowed: bool = False
    branch_counts: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class SolveResult:
    colorable: bool
    coloring: Coloring | None
    telemetry: Telemetry


@dataclass
class TelemetryCounter:
    """Mutable tally threaded through a solve; frozen into Telemetry at the end."""

    two_list_instances: int = 0
    fallback: bool = False
    grow_leaf_counts: list[int] = field(default_factory=list)
    grow_overflowed: bool = False
    branch_counts: list[tuple[int, int]] = field(default_factory=list)

    def freeze(self) -> Telemetry:
        return Telemetry(
            two_list_instances=self.two_list_instances,
            fallback=self.fallback,
            grow_leaf_counts=tuple(self.grow_leaf_counts),
            grow_overflowed=self.grow_overflowed,
            branch_counts=tuple(self.branch_counts),
        )

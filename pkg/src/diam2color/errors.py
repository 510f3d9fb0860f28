"""Exception types shared across the solver suite.

Vertex indices carried by exceptions are internal (0-based); the CLI
re-renders them with the original 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass


class SolverError(Exception):
    """Base class for every error raised by this package."""


class SelfLoop(SolverError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(SolverError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside 0..{n - 1}")
        self.vertex = vertex
        self.n = n


class PreconditionViolated(SolverError):
    """An operation was called on inputs its contract excludes."""


class MalformedInstance(SolverError):
    """A two-list instance with an empty or size-3 list."""


class NotDiameterTwo(SolverError):
    """Carries a witness pair at distance greater than two (or infinity)."""

    def __init__(self, u: int, v: int, distance):
        super().__init__(f"NotDiameterTwo: d({u},{v})={distance}")
        self.u = u
        self.v = v
        self.distance = distance


class HasInducedCycle(SolverError):
    """The input contains an induced cycle of a forbidden length."""

    def __init__(self, length: int, vertices):
        self.length = length
        self.vertices = tuple(vertices)
        super().__init__(f"HasInducedC{length}: vertices {self.vertices}")


class PartitionLeftover(SolverError):
    """A vertex fell outside the anchored cycle and its two shells."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} not within distance two of the anchor cycle")
        self.vertex = vertex


@dataclass(frozen=True)
class Violation:
    """One failed structural check: a rule slug plus witness vertices."""

    rule: str
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.rule}: witness {self.witness}"
        return f"{text} ({self.detail})" if self.detail else text


class StructureViolation(SolverError):
    """A structural property the conforming graph class guarantees failed.

    Raised at runtime when a decomposition or branching step meets a state
    the input class makes impossible; it signals that the input violated a
    solver precondition (class membership or diameter) that was not checked
    up front.
    """

    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


class InternalInvariantBroken(SolverError):
    """An invariant the implementation relies on failed (bug or bad input)."""


class CertificateInvalid(SolverError):
    """An assembled witness cycle failed its own verification."""


class TooLarge(SolverError):
    def __init__(self, n: int, bound: int, context: str = "brute force"):
        super().__init__(f"{context} limited to {bound} vertices, got {n}")
        self.n = n
        self.bound = bound


class RejectionBudgetExhausted(SolverError):
    def __init__(self, spec, attempts: int):
        super().__init__(f"no graph matching {spec} within {attempts} attempts")
        self.spec = spec
        self.attempts = attempts


class ParseError(SolverError):
    """Invalid instance file."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line

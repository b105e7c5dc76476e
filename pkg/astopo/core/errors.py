"""
Exception hierarchy for AS topology generation and analysis.

Input and configuration problems also derive from ValueError so callers that
only catch ValueError keep working.
"""
from typing import Optional, Sequence


class TopologyError(Exception):
    """Base class for every error raised by astopo."""


class ConfigError(TopologyError, ValueError):
    """Invalid generator, metric or harness configuration."""


class EmptyInputError(TopologyError, ValueError):
    """No edges (and no explicit nodes) to build a graph from."""


class DuplicateEdgeError(TopologyError, ValueError):
    """Duplicate unordered edge under the 'reject' dedup policy."""

    def __init__(self, u: str, v: str):
        super().__init__(f"Duplicate edge ({u}, {v})")
        self.edge = (u, v)


class ParseError(TopologyError, ValueError):
    """Malformed record in an edge-list or timestamped topology file."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UndefinedMetricError(TopologyError, ArithmeticError):
    """The metric has no defined value on this graph (e.g. zero variance)."""


class CliqueTimeout(TopologyError):
    """Clique search exceeded its time budget."""

    def __init__(self, budget: float, best: Sequence[int]):
        super().__init__(
            f"Clique search exceeded {budget:g}s budget; "
            f"best lower bound {len(best)}"
        )
        self.budget = budget
        self.best = tuple(best)

    @property
    def lower_bound(self) -> int:
        return len(self.best)


class SpectrumSizeLimit(TopologyError):
    """Full eigendecomposition requested above the configured node limit."""

    def __init__(self, n: int, limit: int, hint: Optional[str] = None):
        message = f"Full spectrum requested for N={n} > limit {limit}"
        message += f"; {hint}" if hint else "; use mode='extremes'"
        super().__init__(message)
        self.n = n
        self.limit = limit

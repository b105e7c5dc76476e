"""
Timestamp-annotated AS links (first/last observation times) and the
last-seen window filter used to snapshot a long-running topology collection.

Line format: "labelA labelB first_seen last_seen", epoch seconds.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple, Union

from ..core.errors import ConfigError, ParseError
from ..core.graph import Graph, build_graph
from .edge_list import Source, iter_lines, strip_comment

logger = logging.getLogger(__name__)

DAY_SECONDS = 86400
SIX_MONTHS_SECONDS = 182 * DAY_SECONDS

Timestamp = Union[int, float]


@dataclass(frozen=True)
class TimestampedEdge:
    a: str
    b: str
    first_seen: Timestamp
    last_seen: Timestamp


@dataclass(frozen=True)
class TimestampedTopology:
    """Link observations in file order; duplicates are kept at this stage."""
    edges: Tuple[TimestampedEdge, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[TimestampedEdge]:
        return iter(self.edges)


def _parse_timestamp(token: str, number: int) -> Timestamp:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"non-numeric timestamp '{token}'", number) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite timestamp '{token}'", number)
    return value


def parse_timestamped(source: Source) -> TimestampedTopology:
    """
    Parse "a b first_seen last_seen" records.

    Raises ParseError on a wrong token count, a non-numeric timestamp or
    first_seen > last_seen. An empty input is a valid empty topology.
    """
    records = []
    for number, line in iter_lines(source):
        tokens, _ = strip_comment(line)
        if not tokens:
            continue
        if len(tokens) != 4:
            raise ParseError(f"expected 4 fields, got {len(tokens)}", number)
        a, b, first, last = tokens
        first_seen = _parse_timestamp(first, number)
        last_seen = _parse_timestamp(last, number)
        if first_seen > last_seen:
            raise ParseError(f"first_seen {first} is after last_seen {last}", number)
        records.append(TimestampedEdge(a, b, first_seen, last_seen))
    return TimestampedTopology(tuple(records))


def node_last_seen(t: TimestampedTopology) -> Dict[str, Timestamp]:
    """Last observation per node: max last_seen over its incident links."""
    seen: Dict[str, Timestamp] = {}
    for edge in t:
        for label in (edge.a, edge.b):
            if label not in seen or edge.last_seen > seen[label]:
                seen[label] = edge.last_seen
    return seen


def filter_last_seen(t: TimestampedTopology, snapshot: Timestamp,
                     window: float = SIX_MONTHS_SECONDS) -> Graph:
    """
    Graph of the links observed within `window` seconds before `snapshot`.

    A link survives when last_seen >= snapshot - window (inclusive
    boundary); self-loop records are ignored and nodes left without links
    disappear. window may be math.inf.
    """
    if not window > 0:
        raise ConfigError(f"window must be positive, got {window}")
    cutoff = snapshot - window
    survivors = [(e.a, e.b) for e in t if e.last_seen >= cutoff and e.a != e.b]
    logger.info("Last-seen filter kept %d of %d links (cutoff %s)",
                len(survivors), len(t), cutoff)
    return build_graph(survivors, dedup_policy="merge")

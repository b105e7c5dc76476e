"""
Plain AS edge-list files: one whitespace-separated label pair per line,
'#' starts a comment.
"""
import io
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, List, Optional, Tuple, Union

from ..core.errors import ParseError
from ..core.graph import BuildStats, Graph, build_graph

Source = Union[bytes, str, io.IOBase]
PRIVATE_ASN_RANGE = (64512, 65534)


@dataclass(frozen=True)
class ParseStats(BuildStats):
    """Line-level statistics of an edge-list parse."""
    lines: int = 0
    comments: int = 0
    blank: int = 0
    filtered_edges: int = 0


def iter_lines(source: Source) -> Iterator[Tuple[int, str]]:
    """
    Yield (line number, text) from bytes, str or a text/binary stream.

    Handles both '\\n' and '\\r\\n' endings; bytes are decoded as UTF-8.
    """
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    elif isinstance(source, str):
        source = io.StringIO(source)
    for number, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as err:
                raise ParseError(f"invalid UTF-8 at byte {err.start}", number) from None
        yield number, raw.rstrip("\n").rstrip("\r")


def strip_comment(line: str) -> Tuple[List[str], bool]:
    """Tokens before any '#', and whether the line held a comment."""
    cut = line.find("#")
    if cut >= 0:
        return line[:cut].split(), True
    return line.split(), False


def is_public_asn(label: str) -> bool:
    """
    True for plain AS numbers outside the private range 64512-65534.

    AS-sets and anything else with a non-digit character are rejected.
    """
    if not (label.isascii() and label.isdigit()):
        return False
    low, high = PRIVATE_ASN_RANGE
    return not low <= int(label) <= high


def parse_edge_list(source: Source,
                    label_filter: Optional[Callable[[str], bool]] = None) -> Graph:
    """
    Parse an edge list into a Graph, merging duplicate links.

    Lines with a token count other than two raise ParseError carrying the
    line number. With `label_filter`, edges with a rejected endpoint are
    dropped and counted. The returned graph's `stats` is a ParseStats.
    """
    pairs = []
    lines = comments = blank = filtered = 0
    for number, line in iter_lines(source):
        lines += 1
        tokens, commented = strip_comment(line)
        if not tokens:
            if commented:
                comments += 1
            else:
                blank += 1
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 2 labels, got {len(tokens)}", number)
        a, b = tokens
        if label_filter is not None and not (label_filter(a) and label_filter(b)):
            filtered += 1
            continue
        pairs.append((a, b))

    built = build_graph(pairs, dedup_policy="merge")
    stats = ParseStats(
        self_loops_dropped=built.stats.self_loops_dropped,
        duplicates_merged=built.stats.duplicates_merged,
        lines=lines,
        comments=comments,
        blank=blank,
        filtered_edges=filtered,
    )
    return Graph(built.node_count, built.edges, labels=built.labels, stats=stats)


def read_edge_list(path: Union[str, os.PathLike],
                   label_filter: Optional[Callable[[str], bool]] = None) -> Graph:
    with open(path, "rb") as handle:
        return parse_edge_list(handle, label_filter=label_filter)


def format_edge_list(g: Graph, header: Optional[List[str]] = None) -> str:
    """Edge-list text for `g`, optional '#' header lines first."""
    out = io.StringIO()
    for line in header or ():
        out.write(f"# {line}\n")
    for a, b in g.edge_labels():
        out.write(f"{a} {b}\n")
    return out.getvalue()


def write_edge_list(g: Graph, dest: Union[str, os.PathLike, io.TextIOBase],
                    header: Optional[List[str]] = None) -> None:
    text = format_edge_list(g, header)
    if isinstance(dest, (str, os.PathLike)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)

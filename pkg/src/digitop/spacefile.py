"""The SpaceFile text format and DOT export.

Grammar (line oriented, UTF-8):

    # comment to end of line, anywhere
    digitop 1
    point <id>
    edge <id> <id>

The first significant line is the header; point lines come before edge
lines; ids match [A-Za-z0-9_]+.  The writer emits points sorted by id,
then edges sorted lexicographically, with "\n" endings and no trailing
whitespace, so serialize(parse(text)) is byte-stable and parse(serialize(G))
returns exactly G.
"""

from __future__ import annotations

from .space import DigitalSpace, is_valid_point_id

HEADER = "digitop 1"


class SpaceFileError(ValueError):
    """Malformed SpaceFile input; carries a 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse(text: str) -> DigitalSpace:
    points: list[str] = []
    edges: list[tuple[str, str]] = []
    seen_points: set[str] = set()
    seen_edges: set[tuple[str, str]] = set()
    stage = "header"
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if stage == "header":
            if fields != ["digitop", "1"]:
                raise SpaceFileError(number, f"expected header {HEADER!r}")
            stage = "points"
            continue
        if fields[0] == "point":
            if stage != "points":
                raise SpaceFileError(number, "point line after edge lines")
            if len(fields) != 2:
                raise SpaceFileError(number, "point line needs exactly one id")
            pid = fields[1]
            if not is_valid_point_id(pid):
                raise SpaceFileError(number, f"invalid point id {pid!r}")
            if pid in seen_points:
                raise SpaceFileError(number, f"duplicate point {pid!r}")
            seen_points.add(pid)
            points.append(pid)
            continue
        if fields[0] == "edge":
            stage = "edges"
            if len(fields) != 3:
                raise SpaceFileError(number, "edge line needs exactly two ids")
            p, q = fields[1], fields[2]
            for pid in (p, q):
                if not is_valid_point_id(pid):
                    raise SpaceFileError(number, f"invalid point id {pid!r}")
                if pid not in seen_points:
                    raise SpaceFileError(number, f"edge endpoint not declared: {pid!r}")
            if p == q:
                raise SpaceFileError(number, f"self-loop at {p!r}")
            key = (p, q) if p < q else (q, p)
            if key in seen_edges:
                raise SpaceFileError(number, f"duplicate edge {p!r} -- {q!r}")
            seen_edges.add(key)
            edges.append(key)
            continue
        raise SpaceFileError(number, f"unrecognized line {line!r}")
    if stage == "header":
        raise SpaceFileError(1, f"missing header {HEADER!r}")
    return DigitalSpace(points, edges)


def serialize(G: DigitalSpace) -> str:
    lines = [HEADER]
    lines.extend(f"point {pid}" for pid in G.points)
    lines.extend(f"edge {p} {q}" for p, q in sorted(G.edges))
    return "\n".join(lines) + "\n"


def export_dot(G: DigitalSpace) -> str:
    lines = ["graph digitop {"]
    lines.extend(f'  "{pid}";' for pid in G.points)
    lines.extend(f'  "{p}" -- "{q}";' for p, q in sorted(G.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"

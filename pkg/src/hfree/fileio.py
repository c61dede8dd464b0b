"""Reader and writer for the ``p edge n m`` / ``e u v`` graph format.

Vertices are 1-indexed. Lines starting with ``c`` and blank lines are
ignored on input; output is canonical (header, then edges sorted).
"""

from __future__ import annotations

from pathlib import Path

from hfree.graph import Graph
from hfree.patterns import PatternFamily, split_family_names


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _graphs(text: str) -> list[Graph]:
    graphs: list[Graph] = []
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_line = 0

    def finish():
        if len(edges) != m:
            raise ParseError(header_line, f"header declares {m} edges, found {len(edges)}")
        graphs.append(Graph(range(1, n + 1), edges))

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                finish()
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(lineno, f"malformed header {line!r}")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(lineno, f"malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count in header")
            edges, seen, header_line = [], set(), lineno
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before header")
            if len(tokens) != 3:
                raise ParseError(lineno, f"malformed edge {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(lineno, f"malformed edge {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {key}")
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(lineno, f"unknown line type {tokens[0]!r}")
    if n is None:
        raise ParseError(1, "missing header")
    finish()
    return graphs


def parse_graph(text: bytes | str) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    graphs = _graphs(text)
    if len(graphs) != 1:
        raise ValueError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def parse_graphs(text: bytes | str) -> list[Graph]:
    """All graphs in a file; each ``p`` line starts a new one."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    return _graphs(text)


def serialize_graph(g: Graph) -> bytes:
    """Canonical text; vertices are relabelled 1..n in label order."""
    label = {v: i for i, v in enumerate(g.vertices, start=1)}
    lines = [f"p edge {g.num_vertices} {g.num_edges}"]
    lines += [f"e {a} {b}" for a, b in sorted((label[u], label[v]) for u, v in g.edges())]
    return ("\n".join(lines) + "\n").encode("ascii")


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_bytes())


def load_family(spec: str) -> PatternFamily:
    """Builtin names (``"K3,K1,3"``) or ``@path`` to a file of graphs."""
    if spec.startswith("@"):
        path = spec[1:]
        members = parse_graphs(Path(path).read_bytes())
        return PatternFamily(members, [f"{Path(path).name}[{i}]" for i in range(len(members))])
    return PatternFamily.from_names(split_family_names(spec))

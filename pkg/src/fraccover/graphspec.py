"""Graph expressions and the edge-list file format.

Expressions::

    K<n> | C<n> | petersen | kneser:<a>:<b> | complement(<expr>)
    | conormal(<expr>,<expr>) | file:<path>

Edge-list files: the first data line is ``n m``, followed by ``m`` lines
``u v`` with 0-based ids.  Lines starting with ``#`` and blank lines are
ignored.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import Graph, GraphError, build_graph, complement, complete, conormal_product, cycle, kneser, petersen


class GraphSpecError(ValueError):
    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    pass


def read_edge_list(path: str | Path) -> Graph:
    lines = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        text = raw.strip()
        if text and not text.startswith("#"):
            lines.append((lineno, text))
    if not lines:
        raise EdgeListError(f"{path}: missing 'n m' header")
    try:
        n, m = (int(x) for x in lines[0][1].split())
    except ValueError:
        raise EdgeListError(f"{path}:{lines[0][0]}: header must be 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"{path}: header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, text in body:
        try:
            u, v = (int(x) for x in text.split())
        except ValueError:
            raise EdgeListError(f"{path}:{lineno}: expected 'u v'") from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise EdgeListError(f"{path}: {exc}") from None


def write_edge_list(g: Graph, path: str | Path) -> None:
    edges = g.edges()
    text = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    Path(path).write_text("\n".join(text) + "\n")


_INT = re.compile(r"\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise GraphSpecError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def integer(self) -> int:
        self.skip_ws()
        match = _INT.match(self.text, self.pos)
        if not match:
            self.error("expected an integer")
        self.pos = match.end()
        return int(match.group())

    def expr(self) -> Graph:
        self.skip_ws()
        start = self.pos
        try:
            if self.accept("complement("):
                g = self.expr()
                self.expect(")")
                return complement(g)
            if self.accept("conormal("):
                g = self.expr()
                self.expect(",")
                h = self.expr()
                self.expect(")")
                return conormal_product(g, h)
            if self.accept("petersen"):
                return petersen()
            if self.accept("kneser:"):
                a = self.integer()
                self.expect(":")
                b = self.integer()
                return kneser(a, b)
            if self.accept("file:"):
                end = self.pos
                while end < len(self.text) and self.text[end] not in ",)":
                    end += 1
                path = self.text[self.pos:end].strip()
                if not path:
                    self.error("expected a file path")
                self.pos = end
                return read_edge_list(path)
            if self.accept("K"):
                return complete(self.integer())
            if self.accept("C"):
                return cycle(self.integer())
        except (GraphError, EdgeListError, OSError) as exc:
            raise GraphSpecError(str(exc), start) from None
        self.error("expected K<n>, C<n>, petersen, kneser:<a>:<b>, complement(...), conormal(...) or file:<path>")

    def parse(self) -> Graph:
        g = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return g


def parse_graph_spec(text: str) -> Graph:
    return _Parser(text).parse()

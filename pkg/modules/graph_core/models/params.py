"""Sizes, vertices and edge numbering of a complete tripartite graph."""
from dataclasses import dataclass
from functools import cached_property

from common.errors import InputError

U, V, W = 0, 1, 2
PART_NAMES = ("U", "V", "W")

# Bipartite blocks in edge-id order.
BLOCKS = ((U, V), (U, W), (V, W))
BLOCK_NAMES = ("uv", "uw", "vw")


@dataclass(frozen=True, order=True)
class Vertex:
    part: int
    index: int

    def __str__(self):
        return f"{PART_NAMES[self.part].lower()}{self.index}"


@dataclass(frozen=True)
class TripartiteParams:
    """Part sizes (m, n, p) of K_{m,n,p}: |U| = m, |V| = n, |W| = p"""
    m: int
    n: int
    p: int

    def __post_init__(self):
        for name in ("m", "n", "p"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InputError(f"{name} must be at least 1, got {value}")

    @classmethod
    def of(cls, sizes):
        m, n, p = sizes
        return cls(int(m), int(n), int(p))

    def as_tuple(self):
        return (self.m, self.n, self.p)

    def __str__(self):
        return f"K({self.m},{self.n},{self.p})"

    @property
    def sizes(self):
        return self.as_tuple()

    @property
    def vertex_count(self):
        return self.m + self.n + self.p

    @property
    def edge_count(self):
        return self.m * self.n + self.m * self.p + self.n * self.p

    def part_size(self, part):
        return self.sizes[part]

    def degree(self, part):
        """Degree of any vertex of the given part"""
        return self.vertex_count - self.sizes[part]

    @cached_property
    def part_offsets(self):
        return (0, self.m, self.m + self.n)

    @cached_property
    def block_shapes(self):
        return tuple((self.sizes[a], self.sizes[b]) for a, b in BLOCKS)

    @cached_property
    def block_offsets(self):
        offsets, total = [], 0
        for rows, cols in self.block_shapes:
            offsets.append(total)
            total += rows * cols
        return tuple(offsets)

    def vertices(self, part=None):
        parts = (U, V, W) if part is None else (part,)
        for q in parts:
            for i in range(self.sizes[q]):
                yield Vertex(q, i)

    def check_vertex(self, vertex):
        if not isinstance(vertex, Vertex) or vertex.part not in (U, V, W):
            raise InputError(f"not a vertex: {vertex!r}")
        if not 0 <= vertex.index < self.sizes[vertex.part]:
            raise InputError(f"vertex {vertex} outside {self}")
        return vertex

    def global_index(self, vertex):
        """Position of a vertex in the order U, then V, then W"""
        return self.part_offsets[vertex.part] + vertex.index

    def vertex_at(self, global_index):
        for part in (W, V, U):
            if global_index >= self.part_offsets[part]:
                return self.check_vertex(Vertex(part, global_index - self.part_offsets[part]))
        raise InputError(f"vertex index {global_index} outside {self}")

    def check_edge(self, edge):
        if isinstance(edge, bool) or not isinstance(edge, int):
            raise InputError(f"edge id must be an integer, got {edge!r}")
        if not 0 <= edge < self.edge_count:
            raise InputError(f"edge id {edge} outside 0..{self.edge_count - 1}")
        return edge

    def edge_id(self, a, b):
        """Edge id of the edge joining vertices a and b (in either order)."""
        self.check_vertex(a)
        self.check_vertex(b)
        if a.part == b.part:
            raise InputError(f"{a} and {b} lie in the same part and are not adjacent")
        if a.part > b.part:
            a, b = b, a
        block = BLOCKS.index((a.part, b.part))
        return self.block_offsets[block] + a.index * self.sizes[b.part] + b.index

    def locate(self, edge):
        """(block number, row, column) of an edge id"""
        self.check_edge(edge)
        for block in (2, 1, 0):
            if edge >= self.block_offsets[block]:
                row, col = divmod(edge - self.block_offsets[block], self.block_shapes[block][1])
                return block, row, col
        raise InputError(f"edge id {edge} outside {self}")

    def endpoints(self, edge):
        block, row, col = self.locate(edge)
        a, b = BLOCKS[block]
        return Vertex(a, row), Vertex(b, col)

    def edge_name(self, edge):
        a, b = self.endpoints(edge)
        return f"{a}{b}"

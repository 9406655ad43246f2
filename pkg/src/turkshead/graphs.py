"""Checkerboard (Tait) graphs and exact spanning-tree counts."""

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from .braid import Diagram
from .linalg import bareiss_det

__all__ = [
    "CheckerboardGraph", "trace_faces", "checkerboard_graphs",
    "build_checkerboard", "spanning_tree_count", "spanning_trees_bruteforce",
    "build_wheel", "build_tensor", "BRUTEFORCE_MAX_EDGES",
]

BRUTEFORCE_MAX_EDGES = 20


@dataclass(frozen=True)
class CheckerboardGraph:
    """Undirected multigraph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: tuple  # (u, v) with u <= v; repeats are parallel edges

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")

    @classmethod
    def from_edges(cls, vertex_count, edges):
        return cls(vertex_count, tuple(sorted((min(u, v), max(u, v))
                                              for u, v in edges)))

    @property
    def num_edges(self):
        return len(self.edges)

    def laplacian(self):
        n = self.vertex_count
        lap = [[0] * n for _ in range(n)]
        for u, v in self.edges:
            if u == v:
                continue
            lap[u][u] += 1
            lap[v][v] += 1
            lap[u][v] -= 1
            lap[v][u] -= 1
        return lap

    def is_connected(self):
        if self.vertex_count == 0:
            return False
        return _connected(self.vertex_count, self.edges)

    def to_json(self):
        return {"vertices": self.vertex_count,
                "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        return cls.from_edges(int(data["vertices"]),
                              [tuple(e) for e in data["edges"]])


def _connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    todo = [0]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == n


def trace_faces(d: Diagram):
    """Faces of the diagram as a ``corner -> face`` table.

    Corner ``k`` of crossing ``c`` is the sector between slots ``k`` and
    ``k + 1`` (counterclockwise).  Returns ``(face_of, num_faces)`` where
    ``face_of[c][k]`` is the face index; faces are numbered in order of
    first appearance scanning crossings then corners.
    """
    L = d.num_crossings
    face_of = [[None] * 4 for _ in range(L)]
    faces = 0
    for c0 in range(L):
        for k0 in range(4):
            if face_of[c0][k0] is not None:
                continue
            # Walk: leave crossing c through slot k+1, arrive at (c2, s2),
            # then the corner entered is (c2, s2).
            c, k = c0, k0
            while face_of[c][k] is None:
                face_of[c][k] = faces
                s = (k + 1) % 4
                e = d.slots[c][s]
                tail, head = d.edge_ends[e]
                c, k = head if tail == (c, s) else tail
            if (c, k) != (c0, k0):
                raise AssertionError("face walk did not close")
            faces += 1
    # V - E + F = 2 for a connected plane 4-valent graph.
    if L - 2 * L + faces != 2:
        raise ValueError("diagram is not a connected planar diagram")
    return face_of, faces


def _two_color_faces(face_of, num_faces):
    color = [None] * num_faces
    nbrs = [set() for _ in range(num_faces)]
    for corners in face_of:
        for k in range(4):
            a, b = corners[k], corners[(k + 1) % 4]
            nbrs[a].add(b)
            nbrs[b].add(a)
    color[face_of[0][2]] = 0
    todo = deque([face_of[0][2]])
    while todo:
        f = todo.popleft()
        for g in nbrs[f]:
            if color[g] is None:
                color[g] = 1 - color[f]
                todo.append(g)
            elif color[g] == color[f]:
                raise AssertionError("faces are not 2-colorable")
    if None in color:
        raise ValueError("diagram is disconnected")
    return color


def checkerboard_graphs(d: Diagram):
    """Both checkerboard graphs of ``d``.

    Index 0 is the shading containing the face below the first crossing
    (the leftmost-bottom face), index 1 the complementary shading.
    """
    face_of, num_faces = trace_faces(d)
    color = _two_color_faces(face_of, num_faces)
    graphs = []
    for shade in (0, 1):
        index = {}
        for corners in face_of:
            for f in corners:
                if color[f] == shade and f not in index:
                    index[f] = len(index)
        edges = []
        for corners in face_of:
            pair = [corners[k] for k in range(4) if color[corners[k]] == shade]
            if len(pair) != 2:
                raise AssertionError("crossing corners do not alternate")
            edges.append((index[pair[0]], index[pair[1]]))
        graphs.append(CheckerboardGraph.from_edges(len(index), edges))
    return tuple(graphs)


def build_checkerboard(d: Diagram, shading: str = "auto") -> CheckerboardGraph:
    """Checkerboard graph of ``d``.

    ``shading="auto"`` returns the graph with fewer vertices, ties going to
    the shading of the leftmost-bottom face; ``"primary"``/``"dual"``
    select shading 0/1 of :func:`checkerboard_graphs` directly.
    """
    first, second = checkerboard_graphs(d)
    if shading == "primary":
        return first
    if shading == "dual":
        return second
    if shading != "auto":
        raise ValueError(f"unknown shading {shading!r}")
    return second if second.vertex_count < first.vertex_count else first


def spanning_tree_count(g: CheckerboardGraph) -> int:
    """Number of spanning trees, by the Matrix-Tree theorem.

    Determinant of the Laplacian with its last row and column removed.
    """
    if g.vertex_count == 0:
        raise ValueError("empty graph has no spanning trees")
    lap = g.laplacian()
    minor = [row[:-1] for row in lap[:-1]]
    return bareiss_det(minor)


def spanning_trees_bruteforce(g: CheckerboardGraph) -> int:
    """Spanning-tree count by deletion-contraction (small graphs only)."""
    if g.vertex_count == 0:
        raise ValueError("empty graph has no spanning trees")
    if g.num_edges > BRUTEFORCE_MAX_EDGES:
        raise ValueError(f"deletion-contraction limited to "
                         f"{BRUTEFORCE_MAX_EDGES} edges, graph has "
                         f"{g.num_edges}")
    return _dc(g.vertex_count, _canon(g.edges))


def _canon(edges):
    return tuple(sorted(Counter((min(u, v), max(u, v)) for u, v in edges
                                if u != v).items()))


@lru_cache(maxsize=200_000)
def _dc(n, multi):
    # multi: sorted ((u, v), multiplicity) with u < v, no loops.
    if n == 1:
        return 1
    if not _connected(n, [e for e, _ in multi]):
        return 0
    (u, v), k = multi[0]
    rest = multi[1:]
    deleted = _dc(n, rest)

    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    merged = Counter()
    for (a, b), mult in rest:
        a, b = relabel(a), relabel(b)
        if a != b:
            merged[(min(a, b), max(a, b))] += mult
    contracted = _dc(n - 1, tuple(sorted(merged.items())))
    return deleted + k * contracted


def build_wheel(n: int) -> CheckerboardGraph:
    """Hub 0 joined to every vertex of the rim cycle ``1..n``."""
    if n < 3:
        raise ValueError(f"wheel needs n >= 3, got {n}")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    spokes = [(0, 1 + i) for i in range(n)]
    return CheckerboardGraph.from_edges(n + 1, rim + spokes)


def build_tensor(m: int, n: int) -> CheckerboardGraph:
    """Product of an ``n``-cycle and an ``m/2``-vertex path.

    Vertex ``k*n + h`` is position ``h`` on layer ``k``; each layer is a
    cycle and rungs join equal positions on adjacent layers.  For even ``m``
    this is the larger checkerboard graph of THK(m, n).
    """
    if m % 2 or m < 4:
        raise ValueError(f"tensor graph needs even m >= 4, got {m}")
    if n < 3:
        raise ValueError(f"tensor graph needs n >= 3, got {n}")
    layers = m // 2
    edges = []
    for k in range(layers):
        edges += [(k * n + h, k * n + (h + 1) % n) for h in range(n)]
    for k in range(layers - 1):
        edges += [(k * n + h, (k + 1) * n + h) for h in range(n)]
    return CheckerboardGraph.from_edges(layers * n, edges)

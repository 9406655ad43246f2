"""THK(m, n) as the closure of an alternating braid.

The braid is drawn left to right with strand positions ``1..m`` numbered
bottom to top.  The word is ``(s_1 s_2^-1 s_3 s_4^-1 ...)^n``: generator
``s_i`` crosses positions ``i`` and ``i+1``; for a positive letter the
strand running from lower-left to upper-right is on top, for a negative
letter the strand from upper-left to lower-right is on top.  This is the
convention under which one period of the braid acts on colors by the
transfer matrix ``A_m`` (see :mod:`turkshead.transfer`).

Besides arcs and crossings, a :class:`Diagram` keeps the rotation system
of the underlying 4-valent plane graph so faces can be traced.  Slots at a
crossing are listed counterclockwise: NE (out, upper), NW (in, upper),
SW (in, lower), SE (out, lower).
"""

from dataclasses import dataclass
from math import gcd

__all__ = [
    "BraidWord", "Diagram", "ColoringMatrix",
    "thk_word", "build_thk", "component_count", "coloring_matrix",
]

NE, NW, SW, SE = 0, 1, 2, 3


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple  # (generator index, +1 or -1)

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for i, sign in self.letters:
            if not 1 <= i < self.strands or sign not in (1, -1):
                raise ValueError(f"bad letter {(i, sign)!r}")


def thk_word(m: int, n: int) -> BraidWord:
    _check_mn(m, n)
    period = [(i, 1 if i % 2 else -1) for i in range(1, m)]
    return BraidWord(m, tuple(period * n))


def _check_mn(m, n):
    if m < 2 or n < 2:
        raise ValueError(f"THK(m, n) needs m, n >= 2, got ({m}, {n})")


def component_count(m: int, n: int) -> int:
    _check_mn(m, n)
    return gcd(m, n)


@dataclass(frozen=True)
class Diagram:
    """A braid-closure link diagram.

    ``crossings[c]`` is ``(over, under_in, under_out)`` in arc indices.
    ``slots[c]`` holds the four edge ids at crossing ``c`` in
    counterclockwise order and ``edge_ends[e]`` is
    ``((tail_crossing, tail_slot), (head_crossing, head_slot))`` with edges
    oriented along the braid.  ``edge_arc[e]`` is the arc containing edge
    ``e``.
    """

    m: int
    n: int
    word: BraidWord
    crossings: tuple
    num_arcs: int
    component_count: int
    slots: tuple
    edge_ends: tuple
    edge_arc: tuple

    @property
    def num_crossings(self):
        return len(self.crossings)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "components": self.component_count,
            "arcs": self.num_arcs,
            "crossings": [list(c) for c in self.crossings],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        """Rebuild from :meth:`to_json` output, checking the crossing list."""
        d = build_thk(int(data["m"]), int(data["n"]))
        if [list(c) for c in d.crossings] != [list(c) for c in data["crossings"]]:
            raise ValueError("crossing list does not match THK(%d, %d)"
                             % (d.m, d.n))
        return d


def _strand_step(slot):
    """Incoming slot -> outgoing slot along the same strand."""
    return {SW: NE, NW: SE}[slot]


def _build_edges(word):
    m, letters = word.strands, word.letters
    L = len(letters)
    touches = [[] for _ in range(m + 1)]  # position -> crossings, in order
    for t, (i, _) in enumerate(letters):
        touches[i].append(t)
        touches[i + 1].append(t)
    for p in range(1, m + 1):
        if not touches[p]:
            raise ValueError(f"strand position {p} has no crossings")

    slots = [[None] * 4 for _ in range(L)]
    edge_ends = []
    for t, (i, _) in enumerate(letters):
        for p, out_slot in ((i + 1, NE), (i, SE)):
            seq = touches[p]
            nxt = seq[(seq.index(t) + 1) % len(seq)]
            in_slot = SW if letters[nxt][0] == p else NW
            e = len(edge_ends)
            edge_ends.append(((t, out_slot), (nxt, in_slot)))
            slots[t][out_slot] = e
            slots[nxt][in_slot] = e
    return tuple(map(tuple, slots)), tuple(edge_ends), touches


def _over_slots(sign):
    return (SW, NE) if sign > 0 else (NW, SE)


def build_thk(m: int, n: int) -> Diagram:
    """Diagram of the closure of the alternating braid for THK(m, n)."""
    word = thk_word(m, n)
    return _build_diagram(word, m, n)


def _build_diagram(word, m, n):
    letters = word.letters
    slots, edge_ends, touches = _build_edges(word)
    E = len(edge_ends)

    # Edges meeting at an over-pass belong to one arc.
    parent = list(range(E))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c, (_, sign) in enumerate(letters):
        a, b = _over_slots(sign)
        parent[find(slots[c][a])] = find(slots[c][b])

    # Traverse components from a basepoint on each strand position in turn,
    # numbering arcs in order of first appearance.
    arc_of_root = {}
    seen = [False] * E
    components = 0
    for p in range(1, m + 1):
        first = touches[p][0]
        start = slots[first][SW if letters[first][0] == p else NW]
        if seen[start]:
            continue
        components += 1
        passes = []
        e = start
        while not seen[e]:
            seen[e] = True
            root = find(e)
            if root not in arc_of_root:
                arc_of_root[root] = len(arc_of_root)
            c, in_slot = edge_ends[e][1]
            a, _ = _over_slots(letters[c][1])
            passes.append(in_slot == a)
            e = slots[c][_strand_step(in_slot)]
        if e != start:
            raise AssertionError("strand traversal did not close up")
        if len(passes) % 2 or any(passes[k] == passes[k - 1]
                                  for k in range(len(passes))):
            raise AssertionError("diagram is not alternating")

    edge_arc = tuple(arc_of_root[find(e)] for e in range(E))
    crossings = []
    for c, (_, sign) in enumerate(letters):
        a, b = _over_slots(sign)
        under_in = NW if a == SW else SW
        under_out = _strand_step(under_in)
        over = edge_arc[slots[c][a]]
        if edge_arc[slots[c][b]] != over:
            raise AssertionError("over-strand split across arcs")
        crossings.append((over, edge_arc[slots[c][under_in]],
                          edge_arc[slots[c][under_out]]))

    return Diagram(
        m=m, n=n, word=word,
        crossings=tuple(crossings),
        num_arcs=len(arc_of_root),
        component_count=components,
        slots=slots,
        edge_ends=edge_ends,
        edge_arc=edge_arc,
    )


@dataclass(frozen=True)
class ColoringMatrix:
    """One row per crossing, one column per arc: ``2*over - under_in - under_out``."""

    rows: tuple

    def __len__(self):
        return len(self.rows)

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def minor(self, row=-1, col=-1):
        """Rows with ``row`` deleted and column ``col`` deleted, as lists."""
        nr, nc = self.shape
        row %= nr
        col %= nc
        return [[v for j, v in enumerate(r) if j != col]
                for i, r in enumerate(self.rows) if i != row]


def coloring_matrix(d: Diagram) -> ColoringMatrix:
    rows = []
    for over, u_in, u_out in d.crossings:
        r = [0] * d.num_arcs
        r[over] += 2
        r[u_in] -= 1
        r[u_out] -= 1
        rows.append(tuple(r))
    return ColoringMatrix(tuple(rows))

"""Chord diagrams on the circle and the sheet-summing Adams operation.

A diagram is a perfect matching on 2n cyclically ordered points, kept in a
rotation-canonical form so that diagrams agreeing up to rotation compare
equal.  The Adams operation lifts a diagram to the m-fold cover of the
circle in every possible way and tallies the results.
"""

from itertools import product


def _canonical(pairs, points):
    best = None
    for r in range(points):
        rot = tuple(sorted(
            tuple(sorted(((a + r) % points, (b + r) % points))) for a, b in pairs))
        if best is None or rot < best:
            best = rot
    return best


class ChordDiagram:
    """Perfect matching on 2n cyclically ordered points, 0-based internally,
    printed 1-based as in "1-3,2-4".

    >>> str(ChordDiagram([(0, 2), (1, 3)]))
    '1-3,2-4'
    >>> ChordDiagram([(0, 1), (2, 3)]) == ChordDiagram([(0, 3), (1, 2)])
    True
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        pairs = [tuple(sorted(p)) for p in pairs]
        points = 2 * len(pairs)
        if sorted(q for p in pairs for q in p) != list(range(points)):
            raise ValueError("matching must use each of the 2n points exactly once")
        self.pairs = _canonical(pairs, points)

    @property
    def chords(self) -> int:
        return len(self.pairs)

    def rotated(self, r: int) -> "ChordDiagram":
        points = 2 * len(self.pairs)
        return ChordDiagram(((a + r) % points, (b + r) % points) for a, b in self.pairs)

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __lt__(self, other):
        return self.pairs < other.pairs

    def __str__(self):
        return ",".join("%d-%d" % (a + 1, b + 1) for a, b in self.pairs)

    def __repr__(self):
        return "ChordDiagram(%r)" % (list(self.pairs),)


CROSSING = ChordDiagram([(0, 2), (1, 3)])
PARALLEL = ChordDiagram([(0, 1), (2, 3)])


def all_diagrams(n: int) -> list[ChordDiagram]:
    """The distinct n-chord diagrams up to rotation, sorted.

    >>> [len(all_diagrams(n)) for n in (1, 2, 3)]
    [1, 2, 5]
    """
    found = set()

    def match(points):
        if not points:
            found.add(ChordDiagram(acc))
            return
        first, rest = points[0], points[1:]
        for i, other in enumerate(rest):
            acc.append((first, other))
            match(rest[:i] + rest[i + 1:])
            acc.pop()

    acc: list = []
    match(tuple(range(2 * n)))
    return sorted(found)


def psi_chords(diagram: ChordDiagram, m: int) -> dict[ChordDiagram, int]:
    """Sum of all lifts of the diagram to the m-fold cover of the circle.

    Every endpoint independently picks a sheet; the lifted points are
    reordered by (sheet, original position) and the induced matching is
    canonicalized.  The multiplicities total m^(2n).

    >>> psi_chords(ChordDiagram([(0, 1)]), 3)
    {ChordDiagram([(0, 1)]): 9}
    """
    if m < 1:
        raise ValueError("cover index must be positive")
    points = 2 * diagram.chords
    out: dict[ChordDiagram, int] = {}
    canonical: dict[tuple, ChordDiagram] = {}
    for sheets in product(range(m), repeat=points):
        # stable placement by (sheet, original position) without a sort
        counts = [0] * m
        for sh in sheets:
            counts[sh] += 1
        start, acc = [0] * m, 0
        for sh in range(m):
            start[sh] = acc
            acc += counts[sh]
        newpos = [0] * points
        for p in range(points):
            sh = sheets[p]
            newpos[p] = start[sh]
            start[sh] += 1
        key = tuple((newpos[a], newpos[b]) for a, b in diagram.pairs)
        lifted = canonical.get(key)
        if lifted is None:
            lifted = canonical[key] = ChordDiagram(key)
        out[lifted] = out.get(lifted, 0) + 1
    return out

"""Braid words and the combinatorics of their closures.

Strands run downward.  Letter ``(k, +1)`` is sigma_k: the strand in
position k passes *over* to position k+1.  Letter ``(k, -1)`` is its
inverse: the strand in position k+1 passes over to position k.

Levels are the n+1 horizontal lines between consecutive crossings
(level i sits above crossing i).  Each level carries 3m+1 slots,
left to right::

    Region(gap 0), Under(s1), Over(s1), Region(gap 1), ..., Over(sm), Region(gap m)

An Under slot records the arc on that strand together with the region on
the strand's picture-right, which is the left side with respect to the
downward orientation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BraidSyntaxError, NotAKnot, StrandIndexError

Word = tuple  # tuple of (generator, exponent) pairs, exponent = +-1


@dataclass(frozen=True)
class BraidWord:
    width: int
    letters: tuple  # ((k, sign), ...)

    def __post_init__(self):
        if self.width < 2:
            raise StrandIndexError(f"braid width must be >= 2, got {self.width}")
        for k, s in self.letters:
            if not 1 <= k <= self.width - 1:
                raise StrandIndexError(f"generator index {k} outside 1..{self.width - 1}")
            if s not in (1, -1):
                raise BraidSyntaxError(f"letter sign must be +-1, got {s}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        return sum(s for _, s in self.letters)

    def permutation(self):
        """perm[p] = final position (0-based) of the strand starting at position p."""
        pos = list(range(self.width))
        for k, _ in self.letters:
            a, b = k - 1, k
            pos = [b if p == a else a if p == b else p for p in pos]
        return pos

    def is_knot(self) -> bool:
        perm = self.permutation()
        p, steps = 0, 0
        while True:
            p = perm[p]
            steps += 1
            if p == 0:
                break
        return steps == self.width

    def __str__(self):
        return "[" + ",".join(str(k * s) for k, s in self.letters) + "]"


_TOKEN = re.compile(r"^[sS](\d+)(\^(-?1))?$")


def parse_braid_word(text: str, width: int | None = None, require_knot: bool = True) -> BraidWord:
    """Parse ``"s1 s2^-1 s1"`` or ``"[1,-2,1]"``; by default the closure must be a knot."""
    text = text.strip()
    letters = []
    if text.startswith("["):
        if not text.endswith("]"):
            raise BraidSyntaxError(f"unterminated list: {text!r}")
        body = text[1:-1].strip()
        for tok in filter(None, (t.strip() for t in body.split(","))) if body else []:
            try:
                v = int(tok)
            except ValueError:
                raise BraidSyntaxError(f"malformed letter {tok!r}") from None
            if v == 0:
                raise BraidSyntaxError("letter 0 is not a braid generator")
            letters.append((abs(v), 1 if v > 0 else -1))
    elif text:
        for tok in text.split():
            mt = _TOKEN.match(tok)
            if not mt:
                raise BraidSyntaxError(f"malformed token {tok!r}")
            letters.append((int(mt.group(1)), -1 if mt.group(3) == "-1" else 1))
    if width is None:
        width = max((k for k, _ in letters), default=1) + 1
    b = BraidWord(width, tuple(letters))
    if require_knot and not b.is_knot():
        raise NotAKnot(f"closure of {b} on {width} strands is not a knot")
    return b


class Slot(NamedTuple):
    kind: str  # "R", "U" or "O"
    arc: int | None
    region: int | None


@dataclass(frozen=True)
class Crossing:
    index: int       # 1-based letter index
    k: int
    sign: int
    over: int        # over-arc id
    under_in: int    # under arc entering from above
    under_out: int   # under arc leaving below
    left: int        # region ids around the crossing
    top: int
    bottom: int
    right: int


@dataclass(frozen=True)
class Diagram:
    braid: BraidWord
    arcs: tuple
    regions: tuple
    crossings: tuple
    levels: tuple          # levels[i-1] is the slot tuple of level i, i = 1..n+1
    strand_arcs: tuple     # strand_arcs[i-1][p-1] = arc at level i, position p
    region_gaps: tuple     # region_gaps[i-1][g] = region at level i, gap g
    traversal: tuple = field(repr=False)  # ordered (crossing index, role) along the knot

    @property
    def writhe(self) -> int:
        return self.braid.writhe

    @property
    def n(self) -> int:
        return self.braid.n

    @property
    def width(self) -> int:
        return self.braid.width

    def to_json(self):
        return {
            "braid": str(self.braid),
            "width": self.width,
            "writhe": self.writhe,
            "arcs": list(self.arcs),
            "regions": list(self.regions),
            "crossings": [
                {"index": c.index, "k": c.k, "sign": c.sign, "over": c.over,
                 "under_in": c.under_in, "under_out": c.under_out,
                 "regions": {"left": c.left, "top": c.top, "bottom": c.bottom, "right": c.right}}
                for c in self.crossings
            ],
            "levels": [[list(s) for s in lev] for lev in self.levels],
        }


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _step(k, p):
    if p == k:
        return k + 1
    if p == k + 1:
        return k
    return p


def closure_diagram(b: BraidWord, region_order=None) -> Diagram:
    """Arcs, regions, crossings and level layout of the closure of ``b``.

    Arcs are numbered in traversal order from the strand at level 1,
    position 1; a new arc starts after each under-passing.  Regions are
    numbered by first appearance sweeping levels top to bottom, gaps left to
    right.  ``region_order`` optionally renumbers: it lists, for new ids
    1..n+2, the swept id that should receive it.
    """
    n, m = b.n, b.width
    letters = b.letters

    # --- arcs by traversal
    strand_arc = {}
    traversal = []
    level, pos, arc, unders = 1, 1, 1, 0
    while True:
        strand_arc[(level, pos)] = arc
        if level == n + 1:
            level = 1
            if pos == 1:
                break
            continue
        k, s = letters[level - 1]
        new = _step(k, pos)
        if new != pos:
            is_over = (s == 1 and pos == k) or (s == -1 and pos == k + 1)
            traversal.append((level, "over" if is_over else "under"))
            if not is_over:
                unders += 1
                arc = unders + 1 if unders < n else 1
        level, pos = level + 1, new
    for p in range(1, m + 1):
        strand_arc[(n + 1, p)] = strand_arc[(1, p)]

    # --- regions by union-find over (level, gap)
    uf = _UnionFind()
    for i in range(1, n + 2):
        for g in range(m + 1):
            uf.find((i, g))
    for i in range(1, n + 1):
        k, _ = letters[i - 1]
        for g in range(m + 1):
            if g != k:
                uf.union((i, g), (i + 1, g))
    for g in range(m + 1):
        uf.union((n + 1, g), (1, g))
    ids = {}
    for i in range(1, n + 2):
        for g in range(m + 1):
            r = uf.find((i, g))
            if r not in ids:
                ids[r] = len(ids) + 1
    if len(ids) != n + 2:
        raise NotAKnot(f"closure has {len(ids)} regions, expected {n + 2}")
    if region_order is not None:
        if sorted(region_order) != list(range(1, n + 3)):
            raise ValueError("region_order must be a permutation of 1..n+2")
        renum = {old: new for new, old in enumerate(region_order, start=1)}
        ids = {r: renum[v] for r, v in ids.items()}
    region_at = {(i, g): ids[uf.find((i, g))] for i in range(1, n + 2) for g in range(m + 1)}

    crossings = []
    for i, (k, s) in enumerate(letters, start=1):
        top_left, top_right = strand_arc[(i, k)], strand_arc[(i, k + 1)]
        bot_left, bot_right = strand_arc[(i + 1, k)], strand_arc[(i + 1, k + 1)]
        if s == 1:
            over, u_in, u_out = top_left, top_right, bot_left
            assert bot_right == over
        else:
            over, u_in, u_out = top_right, top_left, bot_right
            assert bot_left == over
        crossings.append(Crossing(
            index=i, k=k, sign=s, over=over, under_in=u_in, under_out=u_out,
            left=region_at[(i, k - 1)], top=region_at[(i, k)],
            bottom=region_at[(i + 1, k)], right=region_at[(i, k + 1)],
        ))

    levels, sa, rg = [], [], []
    for i in range(1, n + 2):
        slots = [Slot("R", None, region_at[(i, 0)])]
        for p in range(1, m + 1):
            a = strand_arc[(i, p)]
            slots += [Slot("U", a, region_at[(i, p)]), Slot("O", a, None),
                      Slot("R", None, region_at[(i, p)])]
        levels.append(tuple(slots))
        sa.append(tuple(strand_arc[(i, p)] for p in range(1, m + 1)))
        rg.append(tuple(region_at[(i, g)] for g in range(m + 1)))

    return Diagram(
        braid=b, arcs=tuple(range(1, n + 1)), regions=tuple(range(1, n + 3)),
        crossings=tuple(crossings), levels=tuple(levels), strand_arcs=tuple(sa),
        region_gaps=tuple(rg), traversal=tuple(traversal),
    )


def wirtinger_presentation(d: Diagram):
    """Generators and one relation word per crossing.

    Positive crossing: g_out = g_o g_in g_o^-1; negative: g_out = g_o^-1 g_in g_o.
    Each relation is returned as the word g_o^s g_in g_o^-s g_out^-1.
    """
    rels = []
    for c in d.crossings:
        s = c.sign
        rels.append(((c.over, s), (c.under_in, 1), (c.over, -s), (c.under_out, -1)))
    return list(d.arcs), rels


def longitude_word(d: Diagram):
    """(lambda_bf, lambda) as words.

    lambda_bf collects g_o^s at every under-passing met while traversing the
    knot from arc 1, composed so that the first under-passing acts first
    (rightmost).  lambda = lambda_bf * g_1^-w has exponent sum zero.
    """
    factors = []
    for level, role in d.traversal:
        if role == "under":
            c = d.crossings[level - 1]
            factors.append((c.over, c.sign))
    lam_bf = tuple(reversed(factors))
    w = d.writhe
    lam = lam_bf + tuple((1, -1 if w > 0 else 1) for _ in range(abs(w)))
    return lam_bf, lam


def exponent_sum(word) -> int:
    return sum(e for _, e in word)

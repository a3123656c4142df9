"""Growth of hourglass plabic graphs from lattice words.

Strands hang downward from the boundary line and are rewritten in place:
a rule consumes two adjacent dangling strands and either caps them off or
crosses them, leaving two new dangling strands below.  Unbarred labels
1..4 point down the strip, barred labels point up.  Some rules fire only
next to a witness strand with a prescribed label; the witness itself is
never touched.  A long rule accepts any number of witnesses from its
repeatable set before the closing one.

Every crossing turns into graph structure according to the arrow pattern
of its four legs: all four pointing in gives a white vertex, all four out
a black one, and two adjacent in-legs give a white vertex on the incoming
side tied to a black vertex on the outgoing side by a 2-hourglass.  Caps
splice their two strands into a single edge.  Boundary letters that were
split from a multiset are contracted back into one vertex at the end,
merging parallel strands into hourglass edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .planar_map import CombMap
from .tableaux import RectTableau, content, lattice_word


class GrowthError(ValueError):
    pass


@dataclass(frozen=True)
class StrandLabel:
    value: int
    barred: bool = False

    def __post_init__(self):
        if not 1 <= self.value <= 4:
            raise GrowthError(f"strand label {self.value} outside 1..4")

    def __str__(self) -> str:
        return f"{self.value}̄" if self.barred else str(self.value)


def _sl(k: int) -> StrandLabel:
    return StrandLabel(abs(k), k < 0)


@dataclass(frozen=True)
class GrowthRule:
    family: str
    lhs: tuple  # two StrandLabels
    rhs: tuple  # empty for caps, two StrandLabels otherwise
    witness: str = ""  # "", "L" or "R"
    allowed: frozenset = frozenset()  # witness labels accepted
    run: frozenset | None = None  # long rules: labels skipped before the witness


# One row per box cell, in table order: (family, lhs, rhs, side, witnesses).
# Signed shorthand: -k is the barred label k.
_SHORT = (
    ("S1", (1, -1), (), "", ()),
    ("S1", (-4, 4), (), "", ()),
    ("S2", (1, -2), (-2, 1), "", ()),
    ("S2", (2, -1), (-1, 2), "", ()),
    ("S2", (-3, 4), (4, -3), "", ()),
    ("S2", (-4, 3), (3, -4), "", ()),
    ("S3", (2, -2), (-1, 1), "", ()),
    ("S3", (-3, 3), (4, -4), "", ()),
    ("S4", (1, -3), (-3, 1), "R", (-1, 2)),
    ("S4", (3, -1), (-1, 3), "L", (1, -2)),
    ("S4", (-2, 4), (4, -2), "L", (-4, 3)),
    ("S4", (-4, 2), (2, -4), "R", (4, -3)),
    ("S5", (1, 2), (2, 1), "R", (-1, 2)),
    ("S5", (-2, -1), (-1, -2), "L", (1, -2)),
    ("S5", (3, 4), (4, 3), "L", (-4, 3)),
    ("S5", (-4, -3), (-3, -4), "R", (4, -3)),
    ("S6", (1, 3), (3, 1), "R", (-1, 2, 3)),
    ("S6", (-3, -1), (-1, -3), "L", (1, -2, -3)),
    ("S6", (2, 4), (4, 2), "L", (-4, 3, 2)),
    ("S6", (-4, -2), (-2, -4), "R", (4, -3, -2)),
    ("S7", (1, 4), (4, 1), "R", (-1, 2, 3, 4)),
    ("S7", (-4, -1), (-1, -4), "L", (1, -2, -3, -4)),
    ("S7", (1, 4), (4, 1), "L", (-4, 3, 2, 1)),
    ("S7", (-4, -1), (-1, -4), "R", (4, -3, -2, -1)),
    ("S8", (1, 2), (-3, -4), "R", (-3, 4)),
    ("S8", (-2, -1), (4, 3), "L", (3, -4)),
    ("S8", (3, 4), (-1, -2), "L", (-2, 1)),
    ("S8", (-4, -3), (2, 1), "R", (2, -1)),
    ("S9", (1, 3), (-2, -4), "R", (-2, -3, 4)),
    ("S9", (-3, -1), (4, 2), "L", (2, 3, -4)),
    ("S9", (2, 4), (-1, -3), "L", (-3, -2, 1)),
    ("S9", (-4, -2), (3, 1), "R", (3, 2, -1)),
    ("S10", (2, 3), (-1, -4), "R", (-1, -2, -3, 4)),
    ("S10", (-3, -2), (4, 1), "L", (1, 2, 3, -4)),
    ("S10", (2, 3), (-1, -4), "L", (-4, -3, -2, 1)),
    ("S10", (-3, -2), (4, 1), "R", (4, 3, 2, -1)),
)

# Long rules: (family, lhs, rhs, side, repeatable labels, closing witnesses).
_LONG = (
    ("L1", (1, 4), (4, 1), "R", (-2, -3), (-1, 2, 3, 4)),
    ("L1", (-4, -1), (-1, -4), "L", (2, 3), (1, -2, -3, -4)),
    ("L1", (1, 4), (4, 1), "L", (-2, -3), (-4, 3, 2, 1)),
    ("L1", (-4, -1), (-1, -4), "R", (2, 3), (4, -3, -2, -1)),
    ("L2", (2, 3), (-1, -4), "R", (2, 3), (-1, -2, -3, 4)),
    ("L2", (-3, -2), (4, 1), "L", (-2, -3), (1, 2, 3, -4)),
    ("L2", (2, 3), (-1, -4), "L", (2, 3), (-4, -3, -2, 1)),
    ("L2", (-3, -2), (4, 1), "R", (-2, -3), (4, 3, 2, -1)),
)

_table_cache: list | None = None


def rule_table() -> list[GrowthRule]:
    """The full rewriting table, one rule per witness alternative."""
    global _table_cache
    if _table_cache is None:
        rules = []
        for fam, lhs, rhs, side, wits in _SHORT:
            l, r = tuple(map(_sl, lhs)), tuple(map(_sl, rhs))
            if not wits:
                rules.append(GrowthRule(fam, l, r))
            else:
                for w in wits:
                    rules.append(GrowthRule(fam, l, r, side,
                                            frozenset({_sl(w)})))
        for fam, lhs, rhs, side, run, wits in _LONG:
            l, r = tuple(map(_sl, lhs)), tuple(map(_sl, rhs))
            for w in wits:
                rules.append(GrowthRule(fam, l, r, side,
                                        frozenset({_sl(w)}),
                                        frozenset(map(_sl, run))))
        _table_cache = rules
    return list(_table_cache)


def resolve_crossing(pattern) -> str:
    """Classify a crossing by its four leg orientations, given clockwise
    from the upper-left leg (True = pointing into the crossing)."""
    p = tuple(bool(x) for x in pattern)
    if len(p) != 4:
        raise GrowthError("a crossing has four legs")
    k = sum(p)
    if k == 4:
        return "white"
    if k == 0:
        return "black"
    if k == 2 and any(p[i] and p[(i + 1) % 4] for i in range(4)):
        return "hourglass"
    raise GrowthError(f"unclassifiable crossing orientation {p}")


def _matches(rule: GrowthRule, labels: list, i: int) -> bool:
    if (labels[i], labels[i + 1]) != rule.lhs:
        return False
    if rule.run is not None:
        if rule.witness == "R":
            j = i + 2
            while j < len(labels) and labels[j] in rule.run:
                j += 1
            return j < len(labels) and labels[j] in rule.allowed
        j = i - 1
        while j >= 0 and labels[j] in rule.run:
            j -= 1
        return j >= 0 and labels[j] in rule.allowed
    if rule.witness == "R":
        return i + 2 < len(labels) and labels[i + 2] in rule.allowed
    if rule.witness == "L":
        return i - 1 >= 0 and labels[i - 1] in rule.allowed
    return True


class _Builder:
    """Accumulates strands, crossing vertices and hourglasses; strands are
    merged by caps through a redirect chain."""

    def __init__(self):
        self.ends = {}  # sid -> [end, end]; end = ("b", pos) | ("v", vid) | None
        self.redirect = {}
        self.rot = {}  # vid -> tokens ("s", sid) | ("h", hid), clockwise
        self.color = {}
        self.hg = []  # hid -> (white vid, black vid)
        self._sid = 0
        self._vid = 0

    def strand(self, end) -> int:
        sid = self._sid
        self._sid += 1
        self.ends[sid] = [end, None]
        return sid

    def find(self, sid: int) -> int:
        while sid in self.redirect:
            sid = self.redirect[sid]
        return sid

    def _close(self, sid: int, end) -> None:
        pair = self.ends[sid]
        pair[1 if pair[1] is None else 0] = end

    def cap(self, sL: int, sR: int) -> None:
        a, b = self.find(sL), self.find(sR)
        self.ends[a] = [self.ends[a][0], self.ends[b][0]]
        del self.ends[b]
        self.redirect[b] = a

    def vertex(self, color: str) -> str:
        vid = f"{color[0]}{self._vid}"
        self._vid += 1
        self.color[vid] = color
        return vid

    def crossing(self, sL: int, sR: int, ins: tuple) -> tuple:
        """Consume the two strands of a crossing whose leg orientations are
        ins = (upper-left, upper-right, lower-left, lower-right); returns
        the strand ids of the two new dangling strands."""
        tl, tr, bl, br = ins
        kind = resolve_crossing((tl, tr, br, bl))
        a, b = self.find(sL), self.find(sR)
        if kind in ("white", "black"):
            v = self.vertex(kind)
            nl = self.strand(("v", v))
            nr = self.strand(("v", v))
            self.rot[v] = [("s", a), ("s", b), ("s", nr), ("s", nl)]
        else:
            w = self.vertex("white")
            k = self.vertex("black")
            hid = len(self.hg)
            self.hg.append((w, k))
            h = ("h", hid)
            if tl and bl:  # white takes the west legs
                nl = self.strand(("v", w))
                nr = self.strand(("v", k))
                self.rot[w] = [("s", a), h, ("s", nl)]
                self.rot[k] = [("s", b), ("s", nr), h]
                v_left, v_right = w, k
            elif tr and br:  # white takes the east legs
                nl = self.strand(("v", k))
                nr = self.strand(("v", w))
                self.rot[w] = [("s", b), ("s", nr), h]
                self.rot[k] = [("s", a), h, ("s", nl)]
                v_left, v_right = k, w
            elif tl and tr:  # white above, black below
                nl = self.strand(("v", k))
                nr = self.strand(("v", k))
                self.rot[w] = [("s", a), ("s", b), h]
                self.rot[k] = [h, ("s", nr), ("s", nl)]
                v_left = v_right = w
            else:  # bl and br: white below, black above
                nl = self.strand(("v", w))
                nr = self.strand(("v", w))
                self.rot[w] = [h, ("s", nr), ("s", nl)]
                self.rot[k] = [("s", a), ("s", b), h]
                v_left = v_right = k
            self._close(a, ("v", v_left))
            self._close(b, ("v", v_right))
            return nl, nr
        self._close(a, ("v", v))
        self._close(b, ("v", v))
        return nl, nr


def grow(t: RectTableau, trace: list | None = None) -> CombMap:
    """Run the rewriting system on the lattice word of t and assemble the
    resulting hourglass plabic graph on a*b boundary vertices."""
    if t.a != 4:
        raise GrowthError("4-row shapes only")
    n = t.a * t.b
    letters = list(lattice_word(t).letters)
    letters += [()] * (n - len(letters))

    bld = _Builder()
    frontier = []  # (label, sid)
    origin = []  # strand position -> boundary letter
    for j, ms in enumerate(letters, start=1):
        # a letter shared by two rows sits in a strictly earlier column in
        # the deeper row, and standardization numbers equal letters by
        # column; hanging deeper rows first keeps strand order and
        # standardized labels aligned
        for r in sorted(ms, reverse=True):
            sid = bld.strand(("b", len(origin)))
            origin.append(j)
            frontier.append((StrandLabel(r), sid))

    rules = rule_table()
    limit = 10 * n * n
    applied = 0
    while frontier:
        labels = [lab for lab, _ in frontier]
        hit = None
        for i in range(len(frontier) - 1):
            for rule in rules:
                if _matches(rule, labels, i):
                    hit = (i, rule)
                    break
            if hit:
                break
        if hit is None:
            raise GrowthError(
                "stuck frontier: " + " ".join(str(x) for x in labels))
        i, rule = hit
        if trace is not None:
            trace.append({"family": rule.family, "position": i,
                          "lhs": [str(x) for x in rule.lhs],
                          "rhs": [str(x) for x in rule.rhs]})
        if not rule.rhs:
            bld.cap(frontier[i][1], frontier[i + 1][1])
            del frontier[i:i + 2]
        else:
            ins = (not rule.lhs[0].barred, not rule.lhs[1].barred,
                   rule.rhs[0].barred, rule.rhs[1].barred)
            nl, nr = bld.crossing(frontier[i][1], frontier[i + 1][1], ins)
            frontier[i] = (rule.rhs[0], nl)
            frontier[i + 1] = (rule.rhs[1], nr)
        applied += 1
        if applied > limit:
            raise GrowthError(f"not done after {limit} rule applications")

    return _assemble(bld, t, n, origin)


def _assemble(bld: _Builder, t: RectTableau, n: int, origin: list) -> CombMap:
    # every boundary-born strand keeps its creation id, so position p is
    # strand p; resolve caps to root ids everywhere first
    rot = {v: [("s", bld.find(x)) if tag == "s" else (tag, x)
               for tag, x in tokens]
           for v, tokens in bld.rot.items()}

    def far_end(p: int) -> str:
        root = bld.find(p)
        e0, e1 = bld.ends[root]
        other = e1 if e0 == ("b", p) else e0
        if other is None or other[0] != "v":
            raise GrowthError(f"strand {p} left dangling")
        return other[1]

    edges = []  # (u, v, m)
    token_edge = {}
    skip = {}  # vertex -> set of tokens swallowed by a merged edge
    boundary_rot = {}
    pos = 0
    for j in range(1, n + 1):
        strip = []  # (root sid, far vertex) left to right
        while pos < len(origin) and origin[pos] == j:
            strip.append((bld.find(pos), far_end(pos)))
            pos += 1
        units = []
        i = 0
        while i < len(strip):
            k = i + 1
            while k < len(strip) and strip[k][1] == strip[i][1]:
                k += 1
            run = strip[i:k]
            u = run[0][1]
            merged = False
            if len(run) > 1:
                # merge only when the strands are consecutive at the far
                # vertex in the same left-to-right order; the strand slots
                # of the merged edge then line up at both endpoints
                L = rot[u]
                p1 = L.index(("s", run[0][0]))
                merged = all(L[(p1 + m) % len(L)] == ("s", run[m][0])
                             for m in range(len(run)))
            if merged:
                e = len(edges)
                edges.append((str(j), u, len(run)))
                token_edge[("s", run[0][0])] = e
                skip.setdefault(u, set()).update(("s", s) for s, _ in run[1:])
                units.append(e)
            else:
                for s, _ in run:
                    e = len(edges)
                    edges.append((str(j), u, 1))
                    token_edge[("s", s)] = e
                    units.append(e)
            i = k
        boundary_rot[str(j)] = list(reversed(units))

    # interior-interior strands and hourglasses
    for v, tokens in rot.items():
        for tok in tokens:
            if tok in token_edge or tok in skip.get(v, ()):
                continue
            tag, x = tok
            if tag == "h":
                w, k = bld.hg[x]
                token_edge[tok] = len(edges)
                edges.append((w, k, 2))
            else:
                e0, e1 = bld.ends[x]
                token_edge[tok] = len(edges)
                edges.append((e0[1], e1[1], 1))

    rotation = dict(boundary_rot)
    for v, tokens in rot.items():
        rotation[v] = [token_edge[tok] for tok in tokens
                       if tok not in skip.get(v, ())]

    colors = {str(i): "black" for i in range(1, n + 1)}
    colors.update(bld.color)
    g = CombMap(n, colors, tuple(edges),
                {v: tuple(r) for v, r in rotation.items()})
    mult = content(t)
    from .hourglass import validate
    validate(g, content=tuple(mult) + (0,) * (n - len(mult)))
    return g

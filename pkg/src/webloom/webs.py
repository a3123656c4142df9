"""Bipartite trivalent webs in a disk and their skein combinatorics.

A web is a planar bicolored graph whose interior vertices are trivalent
(counting edge multiplicity) and whose boundary vertices have degree at
most one.  Edges between two boundary vertices play the role of arrows
(black source, white sink); free loops are tracked by a counter since
they carry no vertices.  A web is non-elliptic when no internal face has
four or fewer sides.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field, replace

from .planar_map import (
    CombMap,
    MapBuilder,
    apply_dihedral,
    components_and_cycles,
    dihedral_canonical,
    faces,
    map_code,
)


class WebError(ValueError):
    pass


@dataclass(frozen=True)
class Web:
    graph: CombMap
    loops: int = 0

    @property
    def n(self) -> int:
        return self.graph.n


# boundary arrangements of the eight quadratic types, as white-vertex sets
TYPE_WHITES = {
    1: frozenset({1, 2, 3, 4}),
    2: frozenset({1, 2, 3, 5}),
    3: frozenset({1, 2, 3, 6}),
    4: frozenset({1, 2, 4, 5}),
    5: frozenset({1, 2, 4, 6}),
    6: frozenset({1, 2, 4, 7}),
    7: frozenset({1, 2, 5, 6}),
    8: frozenset({1, 3, 5, 7}),
}
_WHITES_TO_TYPE = {s: t for t, s in TYPE_WHITES.items()}


def validate_web(w: Web) -> None:
    g = w.graph
    for v in g.vertex_ids:
        if g.is_boundary(v):
            if g.degree(v) > 1:
                raise WebError(f"boundary vertex {v!r} has degree > 1")
        elif g.degree(v) != 3:
            raise WebError(f"interior vertex {v!r} is not trivalent")
    if w.loops < 0:
        raise WebError("negative loop count")


def arrows(w: Web) -> list[tuple[int, int]]:
    """Boundary-to-boundary edges as (black source, white sink) pairs."""
    g = w.graph
    out = []
    for u, v, _ in g.edges:
        if g.is_boundary(u) and g.is_boundary(v):
            if g.colors[u] == "black":
                out.append((int(u), int(v)))
            else:
                out.append((int(v), int(u)))
    return sorted(out)


def web_code(w: Web) -> str:
    """Canonical code up to rotation and reflection of the disk."""
    code = dihedral_canonical(w.graph)
    if w.loops:
        code += f"|loops{w.loops}"
    return code


def labeled_code(w: Web) -> str:
    """Canonical code with the boundary labels held fixed."""
    code = map_code(w.graph)
    if w.loops:
        code += f"|loops{w.loops}"
    return code


def boundary_whites(w: Web) -> frozenset[int]:
    g = w.graph
    return frozenset(b for b in range(1, g.n + 1) if g.colors[str(b)] == "white")


def is_non_elliptic(w: Web) -> bool:
    """True when the web has no free loops and no internal face of at
    most four sides (a doubled edge already counts as a bigon)."""
    if w.loops:
        return False
    if any(m >= 2 for _, _, m in w.graph.edges):
        return False
    for f in faces(w.graph):
        if f.interior and not f.is_outer and len(f.walk) <= 4:
            return False
    return True


# ---------------------------------------------------------------------------
# skein reduction

@dataclass
class SignedWebSum:
    """Integer combination of webs over a fixed boundary, keyed by
    boundary-label-preserving code (rotated webs stay distinct).
    ``webs`` keeps one representative per code."""

    terms: dict[str, int] = field(default_factory=dict)
    webs: dict[str, Web] = field(default_factory=dict)

    def add(self, w: Web, coeff: int) -> None:
        code = labeled_code(w)
        self.terms[code] = self.terms.get(code, 0) + coeff
        self.webs.setdefault(code, w)
        if self.terms[code] == 0:
            del self.terms[code]
            del self.webs[code]


def _splice_strands(b: MapBuilder, corners: list[str], outside: list[int],
                    pairing: list[tuple[int, int]]) -> int:
    """Remove ``corners`` and rejoin their outside edges along ``pairing``.

    Outside edges shared between two corners are chased through, so a
    pairing that closes up on itself becomes a free loop.  Returns the
    number of loops produced.
    """
    share: dict[int, list[int]] = {}
    for k, e in enumerate(outside):
        share.setdefault(e, []).append(k)
    partner = {i: j for i, j in pairing} | {j: i for i, j in pairing}
    loops = 0
    seen: set[int] = set()
    for start in range(len(corners)):
        if start in seen:
            continue
        # walk: corner -> paired corner -> (shared outside edge) -> corner ...
        k = start
        chain = []
        closed = False
        while True:
            j = partner[k]
            chain.append((k, j))
            seen.add(k)
            seen.add(j)
            users = share[outside[j]]
            if len(users) == 1:
                break
            k = users[0] if users[1] == j else users[1]
            if k == start:
                closed = True
                break
        if closed:
            loops += 1
            continue
        # re-walk backwards to find the other free end
        k0 = start
        users = share[outside[k0]]
        while len(users) == 2:
            k0 = partner[users[0] if users[1] == k0 else users[1]]
            users = share[outside[k0]]
        e_a, e_b = outside[k0], outside[chain[-1][1]]
        x = b.other_end(e_a, corners[k0])
        y = b.other_end(e_b, corners[chain[-1][1]])
        e_new = b.fresh_edge(x, y, 1)
        b.rotation[x][b.rotation[x].index(e_a)] = e_new
        b.rotation[y][b.rotation[y].index(e_b)] = e_new
    for e in set(outside):
        b.drop_edge(e)
    for v in corners:
        b.drop_vertex(v)
    return loops


def _reduce_once(w: Web) -> list[tuple[Web, int]] | None:
    """Apply one skein relation, or None when w is already non-elliptic."""
    if w.loops:
        return [(replace(w, loops=0), 3 ** w.loops)]
    g = w.graph

    for eid, (u, v, m) in enumerate(g.edges):
        if m < 2:
            continue
        b = MapBuilder(g)
        if m == 3:
            b.drop_edge(eid)
            b.drop_vertex(u)
            b.drop_vertex(v)
            return [(Web(b.freeze(), w.loops + 1), 2)]
        o_u = next(e for e in g.rotation[u] if e != eid)
        o_v = next(e for e in g.rotation[v] if e != eid)
        b.drop_edge(eid)
        loops = _splice_strands(b, [u, v], [o_u, o_v], [(0, 1)])
        return [(Web(b.freeze(), w.loops + loops), 2)]

    small = [f for f in faces(g)
             if f.interior and not f.is_outer and len(f.walk) <= 4]
    bigons = [f for f in small if len(f.walk) == 2]
    if bigons:
        f = bigons[0]
        (e1, t1), (e2, t2) = f.walk
        b = MapBuilder(g)
        o1 = next(e for e in g.rotation[t2] if e not in (e1, e2))
        o2 = next(e for e in g.rotation[t1] if e not in (e1, e2))
        b.drop_edge(e1)
        b.drop_edge(e2)
        loops = _splice_strands(b, [t2, t1], [o1, o2], [(0, 1)])
        return [(Web(b.freeze(), w.loops + loops), 2)]
    if small:
        f = small[0]
        cyc = [e for e, _ in f.walk]
        corners = [t for _, t in f.walk]
        if len(set(corners)) != 4 or len(set(cyc)) != 4:
            raise WebError("degenerate square face")
        outside = [next(e for e in g.rotation[t]
                        if e not in (cyc[k], cyc[(k + 1) % 4]))
                   for k, t in enumerate(corners)]
        out = []
        for pairing in ([(0, 1), (2, 3)], [(1, 2), (3, 0)]):
            b = MapBuilder(g)
            for e in cyc:
                b.drop_edge(e)
            loops = _splice_strands(b, list(corners), list(outside),
                                    pairing)
            out.append((Web(b.freeze(), w.loops + loops), 1))
        return out
    return None


def skein_reduce(w: Web) -> SignedWebSum:
    """Expand w into the basis of non-elliptic webs.

    Free loops contribute a factor 3, bigons (including doubled edges) a
    factor 2, and each internal square the sum of its two smoothings.
    """
    validate_web(w)
    total = SignedWebSum()
    stack = [(w, 1)]
    while stack:
        cur, coeff = stack.pop()
        step = _reduce_once(cur)
        if step is None:
            total.add(cur, coeff)
        else:
            stack.extend((nxt, coeff * c) for nxt, c in step)
    return total


# ---------------------------------------------------------------------------
# exhaustive enumeration of non-elliptic webs with all-black boundary
#
# The disk is filled in from the first dangling strand: either its edge
# terminates at a fresh trivalent vertex (spawning two new danglings) or
# it joins an existing dangling, splitting the region in two.  Gap
# counters along the frontier measure the faces being sealed off, so a
# face of four or fewer sides that cannot reach the boundary circle is
# rejected the moment it would close.

def _interior_cap(n: int) -> int:
    """Largest feasible interior vertex count for an n-vertex boundary.

    |V_int| = n + 2c - 2m with m >= 1 components, and webs of cycle rank
    c need |V_int| >= 2c+4 (c >= 1), >= 2c+9 (c >= 5), >= 2c+10 (c >= 6);
    ranks above 7 do not occur.
    """
    cap = n - 2
    for c in range(1, 8):
        req = 4 if c <= 4 else (9 if c == 5 else 10)
        if n >= req + 2:
            cap = max(cap, n + 2 * c - 2)
    return cap


def _region_feasible(danglings, gaps) -> bool:
    # color balance: each fresh vertex moves the black-white dangling
    # difference by 3, joins leave it alone, and it must end at zero
    diff = sum(+1 if d[1] == "black" else -1 for d in danglings)
    if diff % 3:
        return False
    # side budget: filling the region with b fresh vertices makes
    # (F+b)/2 + 1 faces whose sides total sum(gaps) + F + 3b; faces not
    # reaching the boundary circle need >= 6 sides each
    t = sum(1 for _, touches in gaps if touches)
    s = sum(e for e, _ in gaps)
    return s >= 2 * len(danglings) + 6 - 6 * t


class _WebSearch:
    def __init__(self, boundary: list[str]):
        self.n = len(boundary)
        self.vcap = _interior_cap(self.n)
        self.colors = {str(i): c for i, c in enumerate(boundary, start=1)}
        self.rot: dict[str, list] = {str(i): [None]
                                     for i in range(1, self.n + 1)}
        self.edge_recs: list[tuple[str, str]] = []
        self.created = 0
        self.found: list[Web] = []

    def run(self) -> list[Web]:
        danglings = tuple((str(i), self.colors[str(i)], 0)
                          for i in range(1, self.n + 1))
        gaps = tuple((0, True) for _ in range(self.n))
        if _region_feasible(danglings, gaps):
            self._dfs([(danglings, gaps)])
        return self.found

    # -- graph surgery -----------------------------------------------------
    def _connect(self, d1, d2) -> int:
        eid = len(self.edge_recs)
        self.edge_recs.append((d1[0], d2[0]))
        self.rot[d1[0]][d1[2]] = eid
        self.rot[d2[0]][d2[2]] = eid
        return eid

    def _disconnect(self, d1, d2):
        self.edge_recs.pop()
        self.rot[d1[0]][d1[2]] = None
        self.rot[d2[0]][d2[2]] = None

    def _emit(self):
        colors = dict(self.colors)
        edges = tuple((u, v, 1) for u, v in self.edge_recs)
        rotation = {v: tuple(r) for v, r in self.rot.items()}
        g = CombMap(self.n, colors, edges, rotation)
        w = Web(g)
        assert is_non_elliptic(w)
        self.found.append(w)

    # -- search ------------------------------------------------------------
    def _dfs(self, stack):
        while stack and not stack[-1][0]:
            stack = stack[:-1]
        if not stack:
            self._emit()
            return
        budget = self.vcap - self.created
        need = 0
        for ds, _ in stack:
            diff = sum(+1 if d[1] == "white" else -1 for d in ds)
            need += abs(diff)
        if need > 3 * budget:
            return
        danglings, gaps = stack[-1]
        below = stack[:-1]
        h0 = danglings[0]
        f = len(danglings)

        for j in range(1, f):
            hj = danglings[j]
            if hj[0] == h0[0] or hj[1] == h0[1]:
                continue
            if not self._admissible_join(gaps, j, f):
                continue
            inner = danglings[1:j]
            outer = danglings[j + 1:]
            nxt = below
            ok = True
            if outer:
                merged = (gaps[f - 1][0] + 1 + gaps[j][0],
                          gaps[f - 1][1] or gaps[j][1])
                region = (outer, gaps[j + 1:f - 1] + (merged,))
                ok = _region_feasible(*region)
                nxt = nxt + [region]
            if ok and inner:
                closing = (gaps[j - 1][0] + 1 + gaps[0][0],
                           gaps[j - 1][1] or gaps[0][1])
                region = (inner, gaps[1:j - 1] + (closing,))
                ok = _region_feasible(*region)
                nxt = nxt + [region]
            if not ok:
                continue
            self._connect(h0, hj)
            self._dfs(nxt)
            self._disconnect(h0, hj)

        if self.created >= self.vcap:
            return
        color = "white" if h0[1] == "black" else "black"
        vid = f"i{self.created}"
        self.created += 1
        self.colors[vid] = color
        self.rot[vid] = [None, None, None]
        eid = len(self.edge_recs)
        self.edge_recs.append((h0[0], vid))
        self.rot[h0[0]][h0[2]] = eid
        self.rot[vid][0] = eid
        s1 = (vid, color, 2)
        s2 = (vid, color, 1)
        if f == 1:
            gaps2 = ((0, False), (gaps[0][0] + 2, gaps[0][1]))
        else:
            gaps2 = ((0, False), (gaps[0][0] + 1, gaps[0][1])) \
                + gaps[1:f - 1] + ((gaps[f - 1][0] + 1, gaps[f - 1][1]),)
        self._dfs(below + [((s1, s2) + danglings[1:], gaps2)])
        self.edge_recs.pop()
        self.rot[h0[0]][h0[2]] = None
        del self.colors[vid]
        del self.rot[vid]
        self.created -= 1

    def _admissible_join(self, gaps, j, f) -> bool:
        # faces sealed by this chord must have >= 6 sides unless they can
        # still reach the boundary circle
        if j == 1:
            sides, touches = gaps[0][0] + 1, gaps[0][1]
            if not touches and sides <= 4:
                return False
        if j == f - 1:
            sides, touches = gaps[f - 1][0] + 1, gaps[f - 1][1]
            if not touches and sides <= 4:
                return False
        return True


@functools.lru_cache(maxsize=32)
def _labeled_webs_cached(boundary: tuple[str, ...]) -> tuple[Web, ...]:
    return tuple(_WebSearch(list(boundary)).run())


def enumerate_labeled_webs(boundary: list[str]) -> list[Web]:
    """Every non-elliptic web on the given clockwise boundary coloring,
    each boundary vertex carrying exactly one strand."""
    bad = [c for c in boundary if c not in ("black", "white")]
    if bad or not boundary:
        raise WebError("boundary must be a nonempty list of black/white")
    blacks = boundary.count("black")
    if (blacks - (len(boundary) - blacks)) % 3 != 0:
        raise WebError("boundary coloring admits no webs (mod 3 imbalance)")
    return list(_labeled_webs_cached(tuple(boundary)))


def enumerate_labeled_black_webs(n: int) -> list[Web]:
    """Every non-elliptic web with boundary vertices 1..n all black and
    of degree exactly one."""
    if n % 3 != 0 or n <= 0:
        raise WebError("black boundary size must be a positive multiple of 3")
    return enumerate_labeled_webs(["black"] * n)


def enumerate_arrangement_webs(t: int) -> list[Web]:
    """Every non-elliptic web on the reference arrangement of boundary
    type t (eight boundary vertices, whites at the type's white set)."""
    whites = TYPE_WHITES.get(t)
    if whites is None:
        raise WebError(f"no boundary type {t}")
    return enumerate_labeled_webs(
        ["white" if i in whites else "black" for i in range(1, 9)])


@dataclass(frozen=True)
class WebCensus:
    classes: tuple[tuple[Web, int], ...]  # (representative, orbit size)
    total: int


def enumerate_black_webs(n: int) -> WebCensus:
    """Group the non-elliptic all-black webs on n boundary vertices into
    symmetry classes under rotation and reflection."""
    webs = enumerate_labeled_black_webs(n)
    orbits: dict[str, list[Web]] = {}
    for w in webs:
        orbits.setdefault(web_code(w), []).append(w)
    classes = tuple(sorted(((ws[0], len(ws)) for ws in orbits.values()),
                           key=lambda pair: web_code(pair[0])))
    return WebCensus(classes, len(webs))


# ---------------------------------------------------------------------------
# sink contraction: merging adjacent boundary pairs into white sinks

def _claw_vertex(g: CombMap, i: int, j: int) -> tuple[str, int, int]:
    for b in (i, j):
        if g.degree(str(b)) != 1:
            raise WebError(f"site ({i},{j}): boundary {b} has no strand")
    e_i = g.rotation[str(i)][0]
    e_j = g.rotation[str(j)][0]
    v = g.other_end(e_i, str(i))
    if g.other_end(e_j, str(j)) != v or g.is_boundary(v):
        raise WebError(f"site ({i},{j}) is not claw-contractible")
    if g.colors[v] != "white":
        raise WebError(f"site ({i},{j}): shared vertex is not white")
    return v, e_i, e_j


def contract_sinks(w: Web, sites) -> Web:
    """Contract each site {i, i+1} of adjacent black boundary vertices
    with their shared white neighbor into one white boundary sink.

    Labels are compacted clockwise; a merged pair takes the position of
    its smaller label.  A contracted tripod leaves its third toe as an
    arrow into the new sink.
    """
    g = w.graph
    n = g.n
    norm = []
    used: set[int] = set()
    for s in sites:
        a, c = sorted(s)
        if not (c == a + 1 or (a == 1 and c == n)):
            raise WebError(f"site {tuple(sorted(s))} is not an adjacent pair")
        if {a, c} & used:
            raise WebError("sites overlap")
        used |= {a, c}
        norm.append((a, c) if c == a + 1 else (c, a))
    claw = {pair: _claw_vertex(g, *pair) for pair in norm}
    if len({v for v, _, _ in claw.values()}) != len(claw):
        raise WebError("sites share a claw vertex")

    site_of = {}
    for pair in norm:
        for b in pair:
            site_of[b] = pair
    new_label: dict = {}
    k = 0
    emitted = set()
    for b in range(1, n + 1):
        if b in site_of:
            pair = site_of[b]
            if pair not in emitted:
                emitted.add(pair)
                k += 1
                new_label[pair] = str(k)
        else:
            k += 1
            new_label[b] = str(k)

    dropped_edges = {e for _, e_i, e_j in claw.values() for e in (e_i, e_j)}
    rename = {}
    for b in range(1, n + 1):
        if b not in site_of:
            rename[str(b)] = new_label[b]
    for pair, (v, _, _) in claw.items():
        rename[v] = new_label[pair]
    interiors = sorted(v for v in g.vertex_ids
                       if not g.is_boundary(v) and v not in rename)
    for idx, v in enumerate(interiors):
        rename[v] = f"i{idx}"

    colors = {}
    for v in g.vertex_ids:
        if v in rename or not g.is_boundary(v):
            tgt = rename[v]
            colors[tgt] = g.colors[v]
    for pair, (v, _, _) in claw.items():
        colors[rename[v]] = "white"

    keep = [e for e in range(len(g.edges)) if e not in dropped_edges]
    enum = {e: idx for idx, e in enumerate(keep)}
    edges = tuple((rename[g.edges[e][0]], rename[g.edges[e][1]],
                   g.edges[e][2]) for e in keep)
    rotation = {}
    for v in g.vertex_ids:
        if v not in rename:
            continue
        rotation[rename[v]] = tuple(enum[e] for e in g.rotation[v]
                                    if e not in dropped_edges)
    return Web(CombMap(k, colors, edges, rotation), w.loops)


def expand_sinks(w: Web) -> Web:
    """Inverse of contract_sinks: split every white boundary sink into
    two black boundary vertices joined to a fresh internal white vertex."""
    g = w.graph
    whites = [b for b in range(1, g.n + 1) if g.colors[str(b)] == "white"]
    new_label = {}
    k = 0
    for b in range(1, g.n + 1):
        k += 1
        new_label[b] = k
        if b in whites:
            k += 1
    b_builder = MapBuilder(g)
    rename = {}
    for b in range(1, g.n + 1):
        rename[str(b)] = str(new_label[b])
    interiors = sorted(v for v in g.vertex_ids if not g.is_boundary(v))
    for idx, v in enumerate(interiors):
        rename[v] = f"x{idx}"

    colors = {}
    edges = {e: (rename[u], rename[v], m)
             for e, (u, v, m) in enumerate(g.edges)}
    rotation = {}
    for v in g.vertex_ids:
        colors[rename[v]] = g.colors[v]
        rotation[rename[v]] = list(g.rotation[v])
    next_edge = len(g.edges)
    for idx, b in enumerate(whites):
        lab = new_label[b]
        center = f"c{idx}"
        old = rename[str(b)]
        if rotation[old]:
            (third,) = rotation[old]
            u, v, m = edges[third]
            edges[third] = (center if u == old else u,
                            center if v == old else v, m)
        else:
            third = None
        del colors[old], rotation[old]
        e1, e2 = next_edge, next_edge + 1
        next_edge += 2
        edges[e1] = (str(lab), center, 1)
        edges[e2] = (str(lab + 1), center, 1)
        colors[center] = "white"
        rotation[center] = [e1, e2] + ([third] if third is not None else [])
        colors[str(lab)] = "black"
        colors[str(lab + 1)] = "black"
        rotation[str(lab)] = [e1]
        rotation[str(lab + 1)] = [e2]
    enum = {e: idx for idx, e in enumerate(sorted(edges))}
    final_edges = tuple(edges[e] for e in sorted(edges))
    final_rot = {v: tuple(enum[e] for e in r) for v, r in rotation.items()}
    return Web(CombMap(k, colors, final_edges, final_rot), w.loops)


# ---------------------------------------------------------------------------
# boundary types

def classify_type(w: Web) -> tuple[int, tuple[int, bool]]:
    """Match the boundary arrangement to its type.

    Returns (type, (k, reflected)) where applying the reflection first
    (when flagged) and then shifting labels down by k carries the web
    onto the reference arrangement of that type.
    """
    n = w.n
    whites = boundary_whites(w)
    if n != 8 or len(whites) != 4:
        raise WebError("type classification expects 8 boundary vertices, 4 white")
    for reflected in (False, True):
        base = frozenset(n + 1 - i for i in whites) if reflected else whites
        for k in range(n):
            image = frozenset((i - k - 1) % n + 1 for i in base)
            t = _WHITES_TO_TYPE.get(image)
            if t is not None:
                return t, (k, reflected)
    raise WebError("boundary arrangement matches no type")


def normalize_to_type(w: Web) -> tuple[int, Web]:
    t, (k, reflected) = classify_type(w)
    return t, Web(apply_dihedral(w.graph, shift=k, reflect=reflected), w.loops)


@dataclass(frozen=True)
class MixedCensus:
    # (type, canonical code, representative in the reference arrangement)
    entries: tuple[tuple[int, str, Web], ...]
    by_type: dict[int, int]

    @property
    def classes(self) -> int:
        return len(self.entries)


def admissible_sites(w: Web) -> list[tuple[int, int]]:
    g = w.graph
    out = []
    for i in range(1, g.n + 1):
        j = i % g.n + 1
        try:
            _claw_vertex(g, i, j)
        except WebError:
            continue
        out.append((i, j))
    return out


def enumerate_mixed_webs(labeled: list[Web] | None = None) -> MixedCensus:
    """All symmetry classes of webs obtained from the 12-vertex all-black
    webs by contracting four disjoint sink sites."""
    if labeled is None:
        labeled = enumerate_labeled_black_webs(12)
    seen: dict[str, Web] = {}
    for w in labeled:
        sites = admissible_sites(w)
        for quad in itertools.combinations(sites, 4):
            flat = [b for s in quad for b in s]
            if len(set(flat)) != 8:
                continue
            res = contract_sinks(w, quad)
            code = web_code(res)
            if code not in seen:
                seen[code] = res
    entries = []
    by_type: dict[int, int] = {t: 0 for t in TYPE_WHITES}
    for code, w in seen.items():
        t, norm = normalize_to_type(w)
        entries.append((t, code, norm))
        by_type[t] += 1
    entries.sort(key=lambda rec: (rec[0], rec[1]))
    return MixedCensus(tuple(entries), by_type)


# ---------------------------------------------------------------------------
# structural counts used as cross-checks on the enumeration

def interior_stats(w: Web) -> dict[str, int]:
    g = w.graph
    interior = [v for v in g.vertex_ids if not g.is_boundary(v)]
    m, c = components_and_cycles(g)
    return {
        "interior": len(interior),
        "white": sum(1 for v in interior if g.colors[v] == "white"),
        "black": sum(1 for v in interior if g.colors[v] == "black"),
        "components": m,
        "cycle_rank": c,
    }


def check_interior_bounds(w: Web) -> None:
    """Sanity bounds tying interior size to components and cycle rank."""
    st = interior_stats(w)
    g = w.graph
    n = w.n
    v, m, c = st["interior"], st["components"], st["cycle_rank"]
    if v != n + 2 * c - 2 * m:
        raise WebError("interior count violates n + 2c - 2m")
    if c >= 1:
        bound = 2 * c + 4
        if c >= 5:
            bound = 2 * c + 9
        if c >= 6:
            bound = 2 * c + 10
        if v < bound:
            raise WebError(f"interior count {v} below bound for cycle rank {c}")
    bd_black = sum(1 for b in range(1, n + 1)
                   if g.colors[str(b)] == "black" and g.degree(str(b)) > 0)
    bd_white = sum(1 for b in range(1, n + 1)
                   if g.colors[str(b)] == "white" and g.degree(str(b)) > 0)
    if 3 * (st["white"] - st["black"]) != bd_black - bd_white:
        raise WebError("interior color imbalance does not match boundary")

"""Disk-embedded bicolored multigraphs as rotation systems.

A CombMap stores, for every vertex, the clockwise cyclic order of its
incident edges.  Boundary vertices sit on a circle, labeled 1..n clockwise;
their rotation lists are linear, read clockwise starting from the direction
of the next boundary label.  Everything drawn in a disk in this package
(plabic graphs, hourglass graphs, webs) is one of these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class CombMap:
    n: int
    colors: dict  # vertex id -> "black" | "white"
    edges: tuple  # edge id = index -> (u, v, m)
    rotation: dict  # vertex id -> tuple of edge ids, clockwise

    def __post_init__(self):
        check_map(self)

    # -- basic views ------------------------------------------------------

    @property
    def vertex_ids(self) -> list[str]:
        return list(self.colors)

    def boundary_ids(self) -> list[str]:
        return [str(i) for i in range(1, self.n + 1)]

    def is_boundary(self, v: str) -> bool:
        return v.isdigit() and 1 <= int(v) <= self.n

    def degree(self, v: str) -> int:
        """Total incident multiplicity."""
        return sum(self.edges[e][2] for e in self.rotation[v])

    def simple_degree(self, v: str) -> int:
        return len(self.rotation[v])

    def other_end(self, e: int, v: str) -> str:
        u, w, _ = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise MapError(f"edge {e} not incident to {v}")

    def multiplicity(self, e: int) -> int:
        return self.edges[e][2]


def build_map(n: int, colors: dict, edges: Sequence[tuple], rotation: dict) -> CombMap:
    return CombMap(n, dict(colors), tuple((u, v, int(m)) for u, v, m in edges),
                   {v: tuple(r) for v, r in rotation.items()})


def check_map(g: CombMap) -> None:
    """Raise MapError on any violated structural clause."""
    if g.n < 2:
        raise MapError("need at least two boundary vertices")
    for i in range(1, g.n + 1):
        if str(i) not in g.colors:
            raise MapError(f"boundary vertex {i} missing")
    incident: dict[str, list[int]] = {v: [] for v in g.colors}
    for e, (u, v, m) in enumerate(g.edges):
        if u not in g.colors or v not in g.colors:
            raise MapError(f"edge {e} has unknown endpoint")
        if u == v:
            raise MapError(f"edge {e} is a self-loop")
        if m < 1:
            raise MapError(f"edge {e} has multiplicity {m}")
        if g.colors[u] == g.colors[v]:
            raise MapError(f"edge {e} joins two {g.colors[u]} vertices {u},{v}")
        incident[u].append(e)
        incident[v].append(e)
    for v in g.colors:
        if v not in g.rotation:
            raise MapError(f"vertex {v} has no rotation entry")
        if sorted(g.rotation[v]) != sorted(incident[v]):
            raise MapError(f"rotation at {v} does not list its incident edges")
    _check_euler(g)


# ---------------------------------------------------------------------------
# faces

@dataclass(frozen=True)
class Face:
    walk: tuple  # cyclic sequence of (edge id, head vertex) steps, arcs excluded
    arc_steps: int  # number of boundary-circle arcs on the walk
    is_outer: bool

    @property
    def side_count(self) -> int:
        """Number of distinct edges on the walk."""
        return len({e for e, _ in self.walk})

    @property
    def sides(self) -> int:
        """Number of edge sides on the walk (an edge may contribute two)."""
        return len(self.walk)

    @property
    def interior(self) -> bool:
        return self.arc_steps == 0


def _augmented_rotation(g: CombMap) -> dict:
    """Rotations with the boundary circle added: at boundary vertex i the
    clockwise order is (arc toward i+1, real edges, arc toward i-1)."""
    aug = {}
    for v in g.colors:
        if g.is_boundary(v):
            i = int(v)
            # ("arc", i, +1): half-circle from i clockwise to its successor
            aug[v] = (("arc", i, +1),) + tuple(("edge", e) for e in g.rotation[v]) \
                + (("arc", i, -1),)
        else:
            aug[v] = tuple(("edge", e) for e in g.rotation[v])
    return aug


def faces(g: CombMap) -> list[Face]:
    """Trace all faces: from a dart arriving at v, leave along the clockwise
    successor of the arrival edge.  The all-arc orbit is the outer face."""
    aug = _augmented_rotation(g)

    # darts: (item, tail, head); arcs are directed as stored, edges both ways
    def arc_head(item):
        _, i, d = item
        return str(i % g.n + 1) if d == 1 else str((i - 2) % g.n + 1)

    def successor(item, head):
        rot = aug[head]
        # the arrival item as seen from head
        if item[0] == "edge":
            key = item
        else:
            key = ("arc", int(head), -item[2])
        idx = rot.index(key)
        return rot[(idx + 1) % len(rot)]

    seen = set()
    out = []
    all_darts = []
    for v, rot in aug.items():
        for item in rot:
            if item[0] == "edge":
                all_darts.append((item, g.other_end(item[1], v)))
            else:
                all_darts.append((item, arc_head(item)))
    for start in all_darts:
        if start in seen:
            continue
        walk = []
        arcs = 0
        d = start
        while d not in seen:
            seen.add(d)
            item, head = d
            if item[0] == "edge":
                walk.append((item[1], head))
            else:
                arcs += 1
            nxt = successor(item, head)
            if nxt[0] == "edge":
                d = (nxt, g.other_end(nxt[1], head))
            else:
                d = (nxt, arc_head(nxt))
        out.append(Face(tuple(walk), arcs, is_outer=(not walk and arcs == g.n)))
    return out


def _check_euler(g: CombMap) -> None:
    """Per connected component (with the boundary circle added), check
    V - E + F = 2 for the component's own dart orbits."""
    # union-find over vertices, arcs joining consecutive boundary labels
    parent = {v: v for v in g.colors}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for u, v, _ in g.edges:
        union(u, v)
    for i in range(1, g.n + 1):
        union(str(i), str(i % g.n + 1))

    comp_v: dict[str, int] = {}
    comp_e: dict[str, int] = {}
    for v in g.colors:
        comp_v[find(v)] = comp_v.get(find(v), 0) + 1
    for u, v, _ in g.edges:
        comp_e[find(u)] = comp_e.get(find(u), 0) + 1
    boundary_root = find("1")
    comp_e[boundary_root] = comp_e.get(boundary_root, 0) + g.n  # the n arcs

    comp_f: dict[str, int] = {}
    for f in faces(g):
        if f.walk:
            root = find(f.walk[0][1])
        else:
            root = boundary_root
        comp_f[root] = comp_f.get(root, 0) + 1
    for root, nv in comp_v.items():
        ne = comp_e.get(root, 0)
        nf = comp_f.get(root, 0)
        if nv == 1 and ne == 0:
            continue  # isolated interior vertex: no darts, no check
        if nv - ne + nf != 2:
            raise MapError(
                f"rotation system is not a disk embedding: component of "
                f"{root!r} has V={nv} E={ne} F={nf}")


# ---------------------------------------------------------------------------
# components and cycle rank

def components_and_cycles(g: CombMap) -> tuple[int, int]:
    """(m, c): connected components of the real graph restricted to vertices
    with at least one edge, and the cycle rank E - V + m of that graph."""
    touched = set()
    for u, v, _ in g.edges:
        touched.add(u)
        touched.add(v)
    parent = {v: v for v in touched}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        parent[find(u)] = find(v)
    m = len({find(v) for v in touched})
    c = len(g.edges) - len(touched) + m
    return m, c


# ---------------------------------------------------------------------------
# mutable builder for local surgery

class MapBuilder:
    """Mutable copy of a CombMap; freeze() renumbers edges densely."""

    def __init__(self, g: CombMap | None = None, n: int = 0):
        if g is not None:
            self.n = g.n
            self.colors = dict(g.colors)
            self.edges = {e: rec for e, rec in enumerate(g.edges)}
            self.rotation = {v: list(r) for v, r in g.rotation.items()}
            self._next_edge = len(g.edges)
        else:
            self.n = n
            self.colors = {}
            self.edges = {}
            self.rotation = {}
            self._next_edge = 0
        self._next_vertex = 0

    def fresh_edge(self, u, v, m) -> int:
        e = self._next_edge
        self._next_edge += 1
        self.edges[e] = (u, v, m)
        return e

    def fresh_vertex(self, color, prefix="_m") -> str:
        while True:
            vid = f"{prefix}{self._next_vertex}"
            self._next_vertex += 1
            if vid not in self.colors:
                self.colors[vid] = color
                self.rotation[vid] = []
                return vid

    def drop_vertex(self, v):
        del self.colors[v]
        del self.rotation[v]

    def drop_edge(self, e):
        del self.edges[e]

    def other_end(self, e, v):
        u, w, _ = self.edges[e]
        return w if v == u else u

    def reattach(self, e, old, new):
        u, v, m = self.edges[e]
        self.edges[e] = (new if u == old else u, new if v == old else v, m)

    def freeze(self) -> CombMap:
        renumber = {e: j for j, e in enumerate(sorted(self.edges))}
        edges = tuple(self.edges[e] for e in sorted(self.edges))
        rotation = {v: tuple(renumber[e] for e in r)
                    for v, r in self.rotation.items()}
        return CombMap(self.n, dict(self.colors), edges, rotation)


# ---------------------------------------------------------------------------
# dihedral relabeling and canonical codes

def apply_dihedral(g: CombMap, shift: int = 0, reflect: bool = False) -> CombMap:
    """Relabel boundary labels by i -> i - shift (mod n), optionally after
    the reflection i -> n+1-i.  Reflection mirrors the disk, so every
    rotation list reverses."""
    n = g.n

    def new_label(i: int) -> int:
        if reflect:
            i = n + 1 - i
        return (i - shift - 1) % n + 1

    rename = {}
    for v in g.colors:
        if g.is_boundary(v):
            rename[v] = str(new_label(int(v)))
        else:
            rename[v] = v
    colors = {rename[v]: col for v, col in g.colors.items()}
    edges = tuple((rename[u], rename[v], m) for u, v, m in g.edges)
    rotation = {}
    for v, rot in g.rotation.items():
        rotation[rename[v]] = tuple(reversed(rot)) if reflect else tuple(rot)
    return CombMap(n, colors, edges, rotation)


def _component_of(g: CombMap, seeds: Iterable[str]) -> set[str]:
    seen = set(seeds)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for e in g.rotation[v]:
            w = g.other_end(e, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _serialize_from(g: CombMap, roots: Sequence[tuple[str, int | None]]) -> tuple:
    """Canonical serialization of the components reachable from the given
    (vertex, anchor edge) roots.  Interior vertices are named in discovery
    order; each vertex's rotation is read starting at its anchor: the entry
    edge for interior vertices, the stored start for boundary vertices."""
    name: dict[str, int] = {}
    order: list[tuple[str, int | None]] = []
    queue: list[tuple[str, int | None]] = list(roots)
    qi = 0
    while qi < len(queue):
        v, anchor = queue[qi]
        qi += 1
        if v in name:
            continue
        name[v] = len(name)
        order.append((v, anchor))
        rot = g.rotation[v]
        if anchor is not None:
            k = rot.index(anchor)
            rot = rot[k:] + rot[:k]
        for e in rot:
            w = g.other_end(e, v)
            if w not in name:
                queue.append((w, e))
    rows = []
    for v, anchor in order:
        rot = g.rotation[v]
        if anchor is not None:
            k = rot.index(anchor)
            rot = rot[k:] + rot[:k]
        row = (g.colors[v][0],) + tuple(
            (name[g.other_end(e, v)], g.edges[e][2]) for e in rot)
        rows.append(row)
    return tuple(rows)


def _code_tuple(g: CombMap) -> tuple:
    """Serialization with interior names chosen by boundary-anchored BFS."""
    main = _serialize_from(g, [(str(i), None) for i in range(1, g.n + 1)])
    covered = _component_of(g, [str(i) for i in range(1, g.n + 1)])
    floating = []
    rest = [v for v in g.colors if v not in covered]
    while rest:
        comp = _component_of(g, [rest[0]])
        best = min(
            _serialize_from(g, [(v, e)])
            for v in sorted(comp)
            for e in g.rotation[v]) if any(g.rotation[v] for v in comp) else \
            min(_serialize_from(g, [(v, None)]) for v in sorted(comp))
        floating.append(best)
        rest = [v for v in rest if v not in comp]
    return (g.n, main, tuple(sorted(floating)))


def dihedral_canonical(g: CombMap) -> str:
    """Lexicographically minimal code over the 2n dihedral relabelings.
    Two maps are dihedral translates iff their codes are equal."""
    best = None
    for reflect in (False, True):
        for shift in range(g.n):
            code = _code_tuple(apply_dihedral(g, shift, reflect))
            if best is None or code < best:
                best = code
    return _format_code(best)


def map_code(g: CombMap) -> str:
    """Code of the map as labeled (no dihedral sweep)."""
    return _format_code(_code_tuple(g))


def _format_code(code: tuple) -> str:
    n, main, floating = code
    parts = []
    for rows in (main,) + tuple(floating):
        rows_s = []
        for row in rows:
            col = row[0]
            nbrs = ",".join(f"{t}x{m}" if m > 1 else str(t) for t, m in row[1:])
            rows_s.append(f"{col}:{nbrs}")
        parts.append(";".join(rows_s))
    return f"n{n}|" + "|".join(parts)


# ---------------------------------------------------------------------------
# JSON interchange

def to_json(g: CombMap) -> dict:
    return {
        "n": g.n,
        "vertices": [
            {"id": v, "color": g.colors[v], "boundary": g.is_boundary(v)}
            for v in g.colors
        ],
        "edges": [{"u": u, "v": v, "m": m} for u, v, m in g.edges],
        "rotation": {v: list(r) for v, r in g.rotation.items()},
    }


def from_json(obj: dict) -> CombMap:
    colors = {rec["id"]: rec["color"] for rec in obj["vertices"]}
    edges = tuple((rec["u"], rec["v"], rec.get("m", 1)) for rec in obj["edges"])
    rotation = {v: tuple(r) for v, r in obj["rotation"].items()}
    return CombMap(obj["n"], colors, edges, rotation)

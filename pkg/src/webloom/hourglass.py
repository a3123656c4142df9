"""Hourglass plabic graphs: trip permutations, the tableau correspondence,
and the local moves (benzene, square, contraction).

An m-hourglass is an edge of multiplicity m drawn as m strands twisted so
that the clockwise order of the strands agrees at both endpoints.  Trip
paths run on the strand level: entering an interior vertex along one of its
four strand slots, trip_i leaves along the i-th slot clockwise at a white
vertex and the i-th slot counterclockwise at a black one.
"""

from __future__ import annotations

from .perms import Permutation, aexc
from .planar_map import CombMap, MapBuilder, apply_dihedral, faces, map_code
from .tableaux import RectTableau, destandardize, tableau


class HourglassError(ValueError):
    pass


def validate(g: CombMap, content=None) -> None:
    """Check the hourglass plabic graph degree conditions: every interior
    vertex has total multiplicity 4 and boundary vertex i has total
    multiplicity content[i-1] (all 1 when no content is given)."""
    if content is not None and len(content) != g.n:
        raise HourglassError(
            f"content has {len(content)} entries for {g.n} boundary vertices")
    for v in g.colors:
        d = g.degree(v)
        if g.is_boundary(v):
            want = content[int(v) - 1] if content is not None else 1
            if d != want:
                raise HourglassError(
                    f"boundary vertex {v} has multiplicity {d}, expected {want}")
        elif d != 4:
            raise HourglassError(
                f"interior vertex {v} has total multiplicity {d}, expected 4")


def boundary_content(g: CombMap) -> tuple:
    return tuple(g.degree(str(i)) for i in range(1, g.n + 1))


def strand_count(g: CombMap) -> int:
    return sum(m for _, _, m in g.edges)


def _slots(g: CombMap, v: str) -> list:
    """The strand slots at v, clockwise: each edge contributes one slot per
    unit of multiplicity, in its twist order."""
    return [(e, k) for e in g.rotation[v] for k in range(g.edges[e][2])]


def _boundary_slots(g: CombMap, v: str) -> list:
    # stored boundary rotations run clockwise starting beside the arc toward
    # the next boundary vertex; sweeping the disk clockwise arrives from the
    # previous vertex, so the edge order at v is the stored order reversed.
    # Strands of a single hourglass edge keep their twist order: the crossing
    # sits at the interior side, not between the edge and the boundary circle.
    return [(e, k) for e in reversed(g.rotation[v])
            for k in range(g.edges[e][2])]


def boundary_strands(g: CombMap) -> list:
    """All boundary strand slots in clockwise order starting at vertex 1;
    position in this list (1-based) is the strand label."""
    out = []
    for i in range(1, g.n + 1):
        out.extend(_boundary_slots(g, str(i)))
    return out


def trip_perm(g: CombMap, i: int) -> Permutation:
    """The trip permutation on boundary strand labels."""
    if i not in (1, 2, 3):
        raise ValueError("trip index must be 1, 2 or 3")
    for v in g.colors:
        if not g.is_boundary(v) and g.degree(v) != 4:
            raise HourglassError(
                f"interior vertex {v} has total multiplicity {g.degree(v)}")
    starts = []
    index_of = {}
    for b in range(1, g.n + 1):
        for slot in _boundary_slots(g, str(b)):
            starts.append((str(b),) + slot)
            index_of[(str(b),) + slot] = len(starts)
    limit = 4 * strand_count(g) + 4
    image = []
    for tail, e, k in starts:
        cur_e, cur_k = e, k
        head = g.other_end(cur_e, tail)
        steps = 0
        while not g.is_boundary(head):
            slots = _slots(g, head)
            p = slots.index((cur_e, cur_k))
            if g.colors[head] == "white":
                q = (p + i) % 4
            else:
                q = (p - i) % 4
            cur_e, cur_k = slots[q]
            tail, head = head, g.other_end(cur_e, head)
            steps += 1
            if steps > limit:
                raise HourglassError("trip path does not terminate")
        image.append(index_of[(head, cur_e, cur_k)])
    return Permutation(tuple(image))


def tableau_of(g: CombMap) -> RectTableau:
    """The rectangular tableau whose first i rows are the antiexcedance
    sets of trip_i; semistandard when the boundary content is not all ones."""
    lam = boundary_content(g)
    total = sum(lam)
    if total % 4:
        raise HourglassError(f"boundary multiplicity {total} is not a multiple of 4")
    b = total // 4
    chains = [aexc(trip_perm(g, i)) for i in (1, 2, 3)]
    for i, want in enumerate((b, 2 * b, 3 * b)):
        if len(chains[i]) != want:
            raise HourglassError(
                f"antiexcedance set of trip_{i + 1} has size {len(chains[i])}, "
                f"expected {want}")
    if not (chains[0] <= chains[1] <= chains[2]):
        raise HourglassError("antiexcedance sets do not form a chain")
    rows = [
        sorted(chains[0]),
        sorted(chains[1] - chains[0]),
        sorted(chains[2] - chains[1]),
        sorted(set(range(1, total + 1)) - chains[2]),
    ]
    std = tableau(rows, kind="standard")
    if all(x == 1 for x in lam):
        return std
    return destandardize(std, lam)


def rot_graph(g: CombMap) -> CombMap:
    """Relabel boundary vertices by i -> i-1 (mod n)."""
    return apply_dihedral(g, shift=1)


def refl_graph(g: CombMap) -> CombMap:
    """Mirror the disk: relabel by i -> n+1-i and reverse all rotations."""
    return apply_dihedral(g, reflect=True)


# ---------------------------------------------------------------------------
# local moves

def find_moves(g: CombMap, kind: str) -> list:
    if kind == "benzene":
        return _benzene_sites(g)
    if kind == "square":
        return _square_sites(g)
    if kind == "contraction":
        return _contraction_sites(g)
    raise ValueError(f"unknown move kind {kind!r}")


def apply_move(g: CombMap, kind: str, site) -> CombMap:
    if kind == "benzene":
        return _apply_benzene(g, site)
    if kind == "square":
        return _apply_square(g, site)
    if kind == "contraction":
        return _apply_contraction(g, site)
    raise ValueError(f"unknown move kind {kind!r}")


def _benzene_sites(g: CombMap) -> list:
    """Hexagonal interior faces whose edge multiplicities alternate 2,1."""
    sites = []
    for f in faces(g):
        if not f.interior or f.sides != 6 or f.side_count != 6:
            continue
        mults = [g.edges[e][2] for e, _ in f.walk]
        if sorted(set(mults)) != [1, 2]:
            continue
        if all(mults[j] != mults[(j + 1) % 6] for j in range(6)):
            sites.append(tuple(sorted(e for e, _ in f.walk)))
    return sites


def _apply_benzene(g: CombMap, site) -> CombMap:
    toggle = set(site)
    edges = tuple(
        (u, v, (3 - m) if e in toggle else m)
        for e, (u, v, m) in enumerate(g.edges))
    return CombMap(g.n, dict(g.colors), edges, dict(g.rotation))


def _corner_form(g: CombMap, v: str, cycle_edges: set):
    """Classify a square corner: ("direct", (e1, e2)) for two simple outside
    edges, ("pendant", e_hg) for a 2-hourglass to an interior carrier."""
    outside = [e for e in g.rotation[v] if e not in cycle_edges]
    if len(outside) == 2 and all(g.edges[e][2] == 1 for e in outside):
        return ("direct", tuple(outside))
    if len(outside) == 1 and g.edges[outside[0]][2] == 2:
        x = g.other_end(outside[0], v)
        if not g.is_boundary(x):
            return ("pendant", outside[0])
    return None


def _square_sites(g: CombMap) -> list:
    """Quadrilateral interior faces with simple cycle edges whose corners
    are each in direct or pendant form."""
    sites = []
    for f in faces(g):
        if not f.interior or f.sides != 4 or f.side_count != 4:
            continue
        cyc = {e for e, _ in f.walk}
        if any(g.edges[e][2] != 1 for e in cyc):
            continue
        corners = [w for _, w in f.walk]
        if any(g.is_boundary(w) for w in corners):
            continue
        if all(_corner_form(g, w, cyc) for w in corners):
            sites.append(tuple(sorted(cyc)))
    return sites


def _rot_after(rotation: list, e: int) -> list:
    """The rotation list read cyclically starting just after e, e excluded."""
    k = rotation.index(e)
    return rotation[k + 1:] + rotation[:k]


def _flip(color: str) -> str:
    return "black" if color == "white" else "white"


def _reattach(b: MapBuilder, e: int, old: str, new: str):
    b.reattach(e, old, new)


def _apply_square(g: CombMap, site) -> CombMap:
    cyc = set(site)
    corners = sorted({w for e in site for w in g.edges[e][:2]})
    if len(corners) != 4:
        raise HourglassError("square site does not have four corners")
    b = MapBuilder(g)
    for v in corners:
        form = _corner_form(g, v, cyc)
        if form is None:
            raise HourglassError(f"corner {v} is not in a movable form")
        b.colors[v] = _flip(b.colors[v])
        if form[0] == "pendant":
            # contract the hourglass: the carrier's outside edges take its place
            e_hg = form[1]
            x = g.other_end(e_hg, v)
            spliced = _rot_after(b.rotation[x], e_hg)
            k = b.rotation[v].index(e_hg)
            b.rotation[v] = b.rotation[v][:k] + spliced + b.rotation[v][k + 1:]
            for e in spliced:
                _reattach(b, e, x, v)
            b.drop_edge(e_hg)
            b.drop_vertex(x)
        else:
            # extrude a carrier of the corner's old color behind a 2-hourglass
            e1, e2 = form[1]
            x = b.fresh_vertex(_flip(b.colors[v]))
            e_hg = b.fresh_edge(v, x, 2)
            rot = b.rotation[v]
            k1, k2 = rot.index(e1), rot.index(e2)
            # the two outside slots are cyclically adjacent; splice at them
            if (k1 + 1) % len(rot) == k2:
                lead = k1
            elif (k2 + 1) % len(rot) == k1:
                lead = k2
                e1, e2 = e2, e1
            else:
                raise HourglassError(
                    f"outside edges at {v} are not adjacent in its rotation")
            pair = [rot[lead], rot[(lead + 1) % len(rot)]]
            rest = _rot_after(rot, pair[0])
            rest.remove(pair[1])
            b.rotation[v] = [e_hg] + rest
            b.rotation[x] = [e_hg, e1, e2]
            for e in (e1, e2):
                _reattach(b, e, v, x)
    return b.freeze()


def _contraction_sites(g: CombMap) -> list:
    """Pattern A: an interior vertex of simple degree 2 between two distinct
    interior vertices (merge all three).  Pattern B: an interior edge whose
    two endpoints both have simple degree 2 (delete the pair, join their
    outer neighbors)."""
    sites = []
    for e, (u, v, m) in enumerate(g.edges):
        if g.is_boundary(u) or g.is_boundary(v):
            continue
        if g.simple_degree(u) == 2 and g.simple_degree(v) == 2:
            eu = [f for f in g.rotation[u] if f != e]
            ev = [f for f in g.rotation[v] if f != e]
            x = g.other_end(eu[0], u)
            y = g.other_end(ev[0], v)
            if x != y and x not in (u, v) and y not in (u, v):
                sites.append(("pair", e))
    for v in g.colors:
        if g.is_boundary(v) or g.simple_degree(v) != 2:
            continue
        e1, e2 = g.rotation[v]
        a = g.other_end(e1, v)
        c = g.other_end(e2, v)
        if a != c and not g.is_boundary(a) and not g.is_boundary(c):
            sites.append(("middle", v))
    return sites


def _apply_contraction(g: CombMap, site) -> CombMap:
    b = MapBuilder(g)
    kind, where = site
    if kind == "middle":
        v = where
        e1, e2 = g.rotation[v]
        a = g.other_end(e1, v)
        c = g.other_end(e2, v)
        # splice c's remaining edges into a's rotation at e1's position,
        # oriented by c's rotation after e2
        spliced = _rot_after(b.rotation[c], e2)
        k = b.rotation[a].index(e1)
        b.rotation[a] = b.rotation[a][:k] + spliced + b.rotation[a][k + 1:]
        for e in spliced:
            _reattach(b, e, c, a)
        b.drop_edge(e1)
        b.drop_edge(e2)
        b.drop_vertex(v)
        b.drop_vertex(c)
        return b.freeze()
    if kind == "pair":
        e = where
        u, v, m = g.edges[e]
        eu = [f for f in g.rotation[u] if f != e][0]
        ev = [f for f in g.rotation[v] if f != e][0]
        x = g.other_end(eu, u)
        y = g.other_end(ev, v)
        mu = g.edges[eu][2]
        if g.edges[ev][2] != mu:
            raise HourglassError("outer multiplicities differ at a pair site")
        joined = b.fresh_edge(x, y, mu)
        b.rotation[x][b.rotation[x].index(eu)] = joined
        b.rotation[y][b.rotation[y].index(ev)] = joined
        for f in (e, eu, ev):
            b.drop_edge(f)
        b.drop_vertex(u)
        b.drop_vertex(v)
        return b.freeze()
    raise ValueError(f"unknown contraction site {site!r}")


def equivalent_bounded(g1: CombMap, g2: CombMap, depth: int = 4) -> str:
    """Search both move classes breadth-first up to the given depth (benzene
    and square moves, plus contractions in the shrinking direction).  Returns
    "equivalent" when the searches meet, otherwise "unknown"."""

    def explore(g):
        seen = {map_code(g): g}
        frontier = [g]
        for _ in range(depth):
            nxt = []
            for h in frontier:
                for kind in ("benzene", "square", "contraction"):
                    for site in find_moves(h, kind):
                        try:
                            h2 = apply_move(h, kind, site)
                        except HourglassError:
                            continue
                        c = map_code(h2)
                        if c not in seen:
                            seen[c] = h2
                            nxt.append(h2)
            frontier = nxt
            if not frontier:
                break
        return set(seen)

    if explore(g1) & explore(g2):
        return "equivalent"
    return "unknown"

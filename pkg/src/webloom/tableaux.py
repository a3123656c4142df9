"""Rectangular Young tableaux.

Standard and semistandard tableaux of shape a x b, with promotion,
evacuation, standardization, lattice words, hook-length counting and the
promotion permutations prom_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perms import Permutation


@dataclass(frozen=True)
class RectTableau:
    """Dense row-major a x b grid; shape is explicit, never inferred."""

    shape: tuple[int, int]
    rows: tuple[tuple[int, ...], ...]
    kind: str = "standard"  # "standard" | "semistandard"

    def __post_init__(self):
        a, b = self.shape
        if len(self.rows) != a or any(len(r) != b for r in self.rows):
            raise ValueError(f"grid does not match shape {a}x{b}")
        if self.kind not in ("standard", "semistandard"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "standard":
            flat = sorted(v for r in self.rows for v in r)
            if flat != list(range(1, a * b + 1)):
                raise ValueError("standard tableau must contain 1..ab exactly once")
            strict_rows = True
        else:
            strict_rows = False
        for r in self.rows:
            for x, y in zip(r, r[1:]):
                if (y <= x) if strict_rows else (y < x):
                    raise ValueError(f"row {r} not increasing")
        for j in range(b):
            for i in range(a - 1):
                if self.rows[i + 1][j] <= self.rows[i][j]:  # columns always strict
                    raise ValueError(f"column {j + 1} not strictly increasing")

    @property
    def a(self) -> int:
        return self.shape[0]

    @property
    def b(self) -> int:
        return self.shape[1]

    def entry(self, i: int, j: int) -> int:
        """1-indexed (row, col)."""
        return self.rows[i - 1][j - 1]

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) if max(r) <= 9 else ",".join(map(str, r))
                        for r in self.rows)


def tableau(rows: Sequence[Sequence[int]], kind: str = "standard") -> RectTableau:
    grid = tuple(tuple(r) for r in rows)
    return RectTableau((len(grid), len(grid[0])), grid, kind)


def parse_tableau(text: str, kind: str = "standard") -> RectTableau:
    """Rows separated by '/', entries either digit-packed or comma-separated."""
    rows = []
    for part in text.strip().split("/"):
        if "," in part:
            rows.append([int(tok) for tok in part.split(",")])
        else:
            rows.append([int(ch) for ch in part])
    return tableau(rows, kind)


def to_json(t: RectTableau) -> dict:
    return {"shape": list(t.shape), "rows": [list(r) for r in t.rows], "kind": t.kind}


def from_json(obj: dict) -> RectTableau:
    return RectTableau(tuple(obj["shape"]), tuple(tuple(r) for r in obj["rows"]),
                       obj.get("kind", "standard"))


def content(t: RectTableau) -> tuple[int, ...]:
    """Multiplicity vector over letters 1..max(t); the boundary condition."""
    top = max(v for r in t.rows for v in r)
    mult = [0] * top
    for r in t.rows:
        for v in r:
            mult[v - 1] += 1
    return tuple(mult)


# ---------------------------------------------------------------------------
# promotion / evacuation

def _promote_grid(rows: list[list[int]], a: int, b: int) -> tuple[list[list[int]], dict[int, int]]:
    """One promotion step in place; returns (new grid, {i: entry that moved
    from row i+1 to row i during the slide}).  Entries are the values of the
    input grid (before the final decrement)."""
    moved: dict[int, int] = {}
    i = j = 0  # hole starts where the 1 was deleted
    assert rows[0][0] == min(min(r) for r in rows)
    while True:
        right = rows[i][j + 1] if j + 1 < b else None
        below = rows[i + 1][j] if i + 1 < a else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            moved[i + 1] = below  # row i+2 -> i+1 in 1-indexed terms: record at i+1
            i += 1
    rows[i][j] = a * b + 1
    out = [[v - 1 for v in r] for r in rows]
    return out, moved


def promotion(t: RectTableau) -> RectTableau:
    """Jeu-de-taquin promotion P(t) of a standard tableau."""
    if t.kind != "standard":
        raise ValueError("promotion is defined here for standard tableaux")
    grid = [list(r) for r in t.rows]
    out, _ = _promote_grid(grid, t.a, t.b)
    return RectTableau(t.shape, tuple(tuple(r) for r in out), "standard")


def evacuation(t: RectTableau) -> RectTableau:
    """E(t): rotate the rectangle by 180 degrees and complement i -> ab+1-i."""
    if t.kind != "standard":
        raise ValueError("evacuation is defined here for standard tableaux")
    n = t.a * t.b
    out = tuple(tuple(n + 1 - v for v in reversed(r)) for r in reversed(t.rows))
    return RectTableau(t.shape, out, "standard")


def standardize(s: RectTableau) -> RectTableau:
    """Relabel equal entries left to right by consecutive integers."""
    cells = [(s.rows[i][j], j, i) for i in range(s.a) for j in range(s.b)]
    cells.sort()  # (value, col) ordering; equal values sit in distinct columns
    grid = [[0] * s.b for _ in range(s.a)]
    for label, (_, j, i) in enumerate(cells, start=1):
        grid[i][j] = label
    return RectTableau(s.shape, tuple(tuple(r) for r in grid), "standard")


def destandardize(t: RectTableau, mult: Sequence[int]) -> RectTableau:
    """Inverse of standardize for a given content vector: the mult[k-1]
    entries in the k-th consecutive block of values become the letter k."""
    if sum(mult) != t.a * t.b:
        raise ValueError("content does not fill the shape")
    letter = {}
    v = 1
    for k, m in enumerate(mult, start=1):
        for _ in range(m):
            letter[v] = k
            v += 1
    grid = tuple(tuple(letter[x] for x in r) for r in t.rows)
    kind = "standard" if all(m == 1 for m in mult) else "semistandard"
    return RectTableau(t.shape, grid, kind)


def ssyt_promotion(s: RectTableau) -> RectTableau:
    """Promotion of a semistandard tableau: standardize, promote m times
    (m = multiplicity of the smallest letter), then merge the top m values
    back into the largest letter.  The content vector rotates by one."""
    mult = content(s)
    if any(m == 0 for m in mult):
        raise ValueError("letters must form a contiguous range 1..k")
    m = mult[0]
    t = standardize(s)
    for _ in range(m):
        t = promotion(t)
    new_mult = mult[1:] + mult[:1]
    return destandardize(t, new_mult)


# ---------------------------------------------------------------------------
# lattice words

@dataclass(frozen=True)
class LatticeWord:
    """letters[i] is the sorted multiset of row indices of the boxes
    labeled i+1."""

    letters: tuple[tuple[int, ...], ...]

    def split(self) -> tuple[int, ...]:
        """Flatten multisets into individual letters, in increasing order
        inside each multiset."""
        return tuple(x for ms in self.letters for x in ms)

    def __str__(self) -> str:
        if all(len(ms) == 1 for ms in self.letters):
            return "".join(str(ms[0]) for ms in self.letters)
        return ",".join("{" + ",".join(map(str, ms)) + "}" if len(ms) != 1 else str(ms[0])
                        for ms in self.letters)


def lattice_word(t: RectTableau) -> LatticeWord:
    top = max(v for r in t.rows for v in r)
    rows_of: list[list[int]] = [[] for _ in range(top)]
    for i in range(t.a):
        for j in range(t.b):
            rows_of[t.rows[i][j] - 1].append(i + 1)
    return LatticeWord(tuple(tuple(sorted(ms)) for ms in rows_of))


# ---------------------------------------------------------------------------
# promotion permutations

def prom_perm(t: RectTableau, i: int) -> Permutation:
    """The i-th promotion permutation: j -> p(i,j) + j - 1 (mod ab), where
    p(i,j) is the entry of P^(j-1)(t) that moves from row i+1 to row i
    during its promotion."""
    if t.kind != "standard":
        raise ValueError("prom_perm needs a standard tableau")
    if not 1 <= i <= t.a - 1:
        raise ValueError(f"row index {i} outside [1..{t.a - 1}]")
    n = t.a * t.b
    moves = _promotion_moves(t)
    image = []
    for j in range(1, n + 1):
        image.append((moves[j - 1][i] + j - 2) % n + 1)
    return Permutation(tuple(image))


def _promotion_moves(t: RectTableau) -> list[dict[int, int]]:
    """For j = 1..ab, the row-crossing entries of the promotion taking
    P^(j-1)(t) to P^j(t).  Computed once per tableau; every prom_i reads
    the same list."""
    cached = _MOVES_CACHE.get(t)
    if cached is not None:
        return cached
    a, b = t.shape
    grid = [list(r) for r in t.rows]
    moves = []
    for _ in range(a * b):
        grid, moved = _promote_grid(grid, a, b)
        moves.append(moved)
    _MOVES_CACHE[t] = moves
    return moves


_MOVES_CACHE: dict[RectTableau, list[dict[int, int]]] = {}


# ---------------------------------------------------------------------------
# counting and enumeration

def count_syt(a: int, b: int) -> int:
    """Hook-length formula for the rectangle a x b."""
    if a < 1 or b < 1:
        raise ValueError("shape must be positive")
    hooks = 1
    for i in range(a):
        for j in range(b):
            hooks *= (a - i) + (b - j) - 1
    return math.factorial(a * b) // hooks


def all_syt(a: int, b: int) -> Iterator[RectTableau]:
    """All standard tableaux of shape a x b, by placing 1..ab in order."""
    grid = [[0] * b for _ in range(a)]
    heights = [0] * b  # number of filled cells in each column

    def place(v: int) -> Iterator[RectTableau]:
        if v > a * b:
            yield RectTableau((a, b), tuple(tuple(r) for r in grid), "standard")
            return
        for j in range(b):
            i = heights[j]
            if i < a and (j == 0 or heights[j - 1] > i):
                grid[i][j] = v
                heights[j] += 1
                yield from place(v + 1)
                heights[j] -= 1
        return

    yield from place(1)


def all_ssyt(a: int, b: int, mult: Sequence[int]) -> Iterator[RectTableau]:
    """All semistandard a x b tableaux with the given content vector."""
    if sum(mult) != a * b:
        return
    grid = [[0] * b for _ in range(a)]

    def fits(i: int, j: int, v: int) -> bool:
        if j > 0 and v < grid[i][j - 1]:
            return False
        if i > 0 and v <= grid[i - 1][j]:
            return False
        return True

    remaining = list(mult)

    def place(pos: int) -> Iterator[RectTableau]:
        if pos == a * b:
            yield RectTableau((a, b), tuple(tuple(r) for r in grid), "semistandard")
            return
        i, j = divmod(pos, b)
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] and fits(i, j, v):
                remaining[v - 1] -= 1
                grid[i][j] = v
                yield from place(pos + 1)
                remaining[v - 1] += 1
        return

    yield from place(0)

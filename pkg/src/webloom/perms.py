"""Permutations of [n] in one-line notation, 1-indexed.

Carries the small dihedral toolkit used by promotion and trip permutations:
conjugation by the long cycle c = (1 2 ... n), conjugation by the longest
element w0, and anti-exceedance sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Permutation:
    """A bijection of [1..n]; image[i-1] = pi(i)."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of [1..{n}]: {self.image!r}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"argument {i} outside [1..{self.n}]")
        return self.image[i - 1]

    def __str__(self) -> str:
        # digit string for small degrees, comma-separated otherwise
        if self.n <= 9:
            return "".join(str(v) for v in self.image)
        return ",".join(str(v) for v in self.image)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def perm(values: Iterable[int]) -> Permutation:
    return Permutation(tuple(values))


def parse_perm(text: str) -> Permutation:
    """Inverse of str(): digit string or comma-separated one-line notation."""
    text = text.strip()
    if "," in text:
        return perm(int(tok) for tok in text.split(","))
    return perm(int(ch) for ch in text)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def long_cycle(n: int) -> Permutation:
    """c = (1 2 ... n): i -> i+1 cyclically."""
    return Permutation(tuple(i % n + 1 for i in range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """w0 = n (n-1) ... 1."""
    return Permutation(tuple(range(n, 0, -1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} != {q.n}")
    return Permutation(tuple(p.image[q.image[i] - 1] for i in range(p.n)))


def inverse(p: Permutation) -> Permutation:
    img = [0] * p.n
    for i, v in enumerate(p.image, start=1):
        img[v - 1] = i
    return Permutation(tuple(img))


def rot_perm(p: Permutation) -> Permutation:
    """Rotation c^-1 o p o c; one-line images shift cyclically."""
    n = p.n
    # result(i) = p(i+1) - 1 with both residues wrapped into [1..n]
    return Permutation(tuple((p.image[i % n] - 2) % n + 1 for i in range(1, n + 1)))


def refl_perm(p: Permutation) -> Permutation:
    """Reflection w0 o p o w0."""
    n = p.n
    return Permutation(tuple(n + 1 - p.image[n - i] for i in range(1, n + 1)))


def aexc(p: Permutation) -> set[int]:
    """Anti-exceedance set {i : p^-1(i) > i}."""
    inv = inverse(p)
    return {i for i in range(1, p.n + 1) if inv.image[i - 1] > i}


def is_fixed_point_free(p: Permutation) -> bool:
    return all(v != i for i, v in enumerate(p.image, start=1))

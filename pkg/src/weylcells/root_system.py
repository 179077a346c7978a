"""Irreducible root systems with exact rational coordinates.

Every vector is a tuple of ``fractions.Fraction`` in an ambient orthonormal
basis; no floating point is used anywhere.  The classical families B, C, F4
and G2 use the explicit orthonormal-basis coordinates that make the worked
length computations downstream come out verbatim; A, D and E use the standard
Bourbaki coordinates.

A built system knows its simple roots, all positive roots (in a canonical
order: by height, then lexicographically), coroots, fundamental weights and
the highest short root, and can pair weight vectors against coroots exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

# classical positive-root counts, used as a build-time sanity check
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
    "F4": lambda n: 24,
    "G2": lambda n: 6,
}


def vec(*coords) -> Vector:
    return tuple(Fraction(c) for c in coords)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vscale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def dot(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square exact linear system by Gaussian elimination."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    cols = []
    for j in range(n):
        e = [Fraction(i == j) for i in range(n)]
        cols.append(_solve(matrix, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _simple_roots(family: str, rank: int) -> list[Vector]:
    n = rank
    if family == "A":
        if n < 1:
            raise ValueError("family A needs rank >= 1")
        return [
            vec(*[1 if k == i else -1 if k == i + 1 else 0 for k in range(n + 1)])
            for i in range(n)
        ]
    if family == "B":
        # long roots 2*eps_k; the affine Coxeter graph of this system is B-tilde
        if n < 3:
            raise ValueError("family B needs rank >= 3")
        delta = [
            vec(*[1 if k == i else -1 if k == i + 1 else 0 for k in range(n)])
            for i in range(n - 1)
        ]
        delta.append(vec(*[2 if k == n - 1 else 0 for k in range(n)]))
        return delta
    if family == "C":
        # short roots eps_k; the affine Coxeter graph of this system is C-tilde
        if n < 2:
            raise ValueError("family C needs rank >= 2")
        delta = [
            vec(*[1 if k == i else -1 if k == i + 1 else 0 for k in range(n)])
            for i in range(n - 1)
        ]
        delta.append(vec(*[1 if k == n - 1 else 0 for k in range(n)]))
        return delta
    if family == "D":
        if n < 4:
            raise ValueError("family D needs rank >= 4")
        delta = [
            vec(*[1 if k == i else -1 if k == i + 1 else 0 for k in range(n)])
            for i in range(n - 1)
        ]
        delta.append(vec(*[1 if k in (n - 2, n - 1) else 0 for k in range(n)]))
        return delta
    if family in ("E6", "E7", "E8"):
        m = int(family[1])
        if n != m:
            raise ValueError(f"family {family} has fixed rank {m}")
        h = Fraction(1, 2)
        e8 = [
            (h, -h, -h, -h, -h, -h, -h, h),
            vec(1, 1, 0, 0, 0, 0, 0, 0),
            vec(-1, 1, 0, 0, 0, 0, 0, 0),
            vec(0, -1, 1, 0, 0, 0, 0, 0),
            vec(0, 0, -1, 1, 0, 0, 0, 0),
            vec(0, 0, 0, -1, 1, 0, 0, 0),
            vec(0, 0, 0, 0, -1, 1, 0, 0),
            vec(0, 0, 0, 0, 0, -1, 1, 0),
        ]
        e8[0] = tuple(Fraction(c) for c in e8[0])
        return [tuple(r) for r in e8[:m]]
    if family == "F4":
        if n != 4:
            raise ValueError("family F4 has fixed rank 4")
        h = Fraction(1, 2)
        return [
            (h, -h, -h, -h),
            vec(0, 0, 0, 1),
            vec(0, 0, 1, -1),
            vec(0, 1, -1, 0),
        ]
    if family == "G2":
        if n != 2:
            raise ValueError("family G2 has fixed rank 2")
        return [vec(1, -1, 0), vec(-2, 1, 1)]
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable tables for one irreducible root system.

    Hash/equality are by identity; ``build`` caches, so the same (family,
    rank) always yields the same object and the tables are shared.
    """

    family: str
    rank: int
    dim: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]           # canonical order
    fundamental_weights: tuple[Vector, ...]
    cartan: tuple[tuple[int, ...], ...]          # <alpha_i, alpha_j^vee>
    highest_short_root: Vector                   # the translation part of s0
    _coroot: dict[Vector, Vector] = field(repr=False)
    _root_set: frozenset[Vector] = field(repr=False)
    _positive_index: dict[Vector, int] = field(repr=False)
    _simple_coords: dict[Vector, tuple[Fraction, ...]] = field(repr=False)
    _gram_inverse: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def nu(self) -> int:
        """Number of positive roots; equals the length of w0."""
        return len(self.positive_roots)

    def is_root(self, v: Vector) -> bool:
        return v in self._root_set

    def is_positive_root(self, v: Vector) -> bool:
        return v in self._positive_index

    def positive_index(self, alpha: Vector) -> int:
        return self._positive_index[alpha]

    def coroot(self, alpha: Vector) -> Vector:
        try:
            return self._coroot[alpha]
        except KeyError:
            raise ValueError(f"{alpha} is not a root of {self.family}{self.rank}") from None

    def simple_coordinates(self, v: Vector) -> tuple[Fraction, ...]:
        """Coordinates of a vector from span(Delta) in the simple-root basis."""
        if v in self._simple_coords:
            return self._simple_coords[v]
        rhs = [dot(v, a) for a in self.simple_roots]
        coords = tuple(
            sum((self._gram_inverse[i][j] * rhs[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )
        return coords

    def in_root_span(self, v: Vector) -> bool:
        coords = self.simple_coordinates(v)
        rebuilt = zero_vector(self.dim)
        for c, a in zip(coords, self.simple_roots):
            rebuilt = vadd(rebuilt, vscale(c, a))
        return rebuilt == v

    def in_weight_lattice(self, v: Vector) -> bool:
        if not self.in_root_span(v):
            return False
        return all(dot(v, self.coroot(a)).denominator == 1 for a in self.simple_roots)

    def in_root_lattice(self, v: Vector) -> bool:
        if not self.in_root_span(v):
            return False
        return all(c.denominator == 1 for c in self.simple_coordinates(v))

    def pairing(self, v: Vector, alpha: Vector) -> int:
        """Exact integer <v, alpha^vee> for v in the weight lattice."""
        if not self.in_root_span(v):
            raise ValueError(f"{v} is not in the weight lattice (outside span of Delta)")
        for simple in self.simple_roots:
            if dot(v, self.coroot(simple)).denominator != 1:
                raise ValueError(
                    f"{v} is not in the weight lattice: non-integral pairing "
                    f"with coroot {self.coroot(simple)} of simple root {simple}"
                )
        value = dot(v, self.coroot(alpha))
        return int(value)

    def reflect(self, alpha: Vector, v: Vector) -> Vector:
        """s_alpha(v) = v - <v, alpha^vee> alpha."""
        coroot = self.coroot(alpha)  # validates alpha
        return vsub(v, vscale(dot(v, coroot), alpha))

    def weight_from_coefficients(self, coeffs: Sequence[int]) -> Vector:
        """Sum of c_i * lambda_i."""
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        v = zero_vector(self.dim)
        for c, lam in zip(coeffs, self.fundamental_weights):
            v = vadd(v, vscale(Fraction(c), lam))
        return v

    def weight_coefficients(self, v: Vector) -> tuple[int, ...]:
        """Inverse of weight_from_coefficients; requires v in P."""
        return tuple(self.pairing(v, a) for a in self.simple_roots)

    def height(self, root: Vector) -> Fraction:
        return sum(self.simple_coordinates(root))


def _generate_roots(delta: list[Vector], dim: int) -> set[Vector]:
    """Close Delta u -Delta under the simple reflections; yields all of Phi."""
    simple_coroots = [(a, vscale(Fraction(2) / dot(a, a), a)) for a in delta]
    roots = set(delta) | {vneg(a) for a in delta}
    frontier = set(roots)
    while frontier:
        new = set()
        for alpha, ac in simple_coroots:
            for beta in frontier:
                img = vsub(beta, vscale(dot(beta, ac), alpha))
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return roots


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given family and rank.

    Raises ValueError for an unsupported (family, rank) pair.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    delta = _simple_roots(family, rank)
    dim = len(delta[0])
    n = len(delta)

    gram = [[dot(a, b) for b in delta] for a in delta]
    gram_inv = _invert(gram)

    roots = _generate_roots(delta, dim)
    coroot = {a: vscale(Fraction(2) / dot(a, a), a) for a in roots}

    def coords_of(v: Vector) -> tuple[Fraction, ...]:
        rhs = [dot(v, a) for a in delta]
        return tuple(
            sum((gram_inv[i][j] * rhs[j] for j in range(n)), Fraction(0))
            for i in range(n)
        )

    simple_coords = {r: coords_of(r) for r in roots}
    positive = []
    for r in roots:
        cs = simple_coords[r]
        if any(c.denominator != 1 for c in cs):
            raise AssertionError("root with non-integral simple coordinates")
        if all(c >= 0 for c in cs):
            positive.append(r)
    if 2 * len(positive) != len(roots):
        raise AssertionError("positive roots do not split the system in half")
    expected = _POSITIVE_COUNT[family](rank)
    if len(positive) != expected:
        raise AssertionError(
            f"{family}{rank}: got {len(positive)} positive roots, expected {expected}"
        )
    positive.sort(key=lambda r: (sum(simple_coords[r]), r))

    cartan = tuple(
        tuple(int(dot(a, coroot[b])) for b in delta) for a in delta
    )

    weights = []
    for i in range(n):
        lam = zero_vector(dim)
        inv_row = _invert([[Fraction(c) for c in row] for row in cartan])[i]
        for c, a in zip(inv_row, delta):
            lam = vadd(lam, vscale(c, a))
        weights.append(lam)

    min_len = min(dot(r, r) for r in positive)
    short = [r for r in positive if dot(r, r) == min_len]
    short.sort(key=lambda r: sum(simple_coords[r]))
    highest_short = short[-1]
    # the highest short root is dominant and strictly higher than other shorts
    if len(short) > 1 and sum(simple_coords[highest_short]) == sum(simple_coords[short[-2]]):
        raise AssertionError("highest short root is not unique by height")
    if any(dot(highest_short, coroot[a]) < 0 for a in delta):
        raise AssertionError("highest short root is not dominant")

    return RootSystem(
        family=family,
        rank=rank,
        dim=dim,
        simple_roots=tuple(delta),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(weights),
        cartan=cartan,
        highest_short_root=highest_short,
        _coroot=coroot,
        _root_set=frozenset(roots),
        _positive_index={r: i for i, r in enumerate(positive)},
        _simple_coords=simple_coords,
        _gram_inverse=tuple(tuple(row) for row in gram_inv),
    )

"""The permutation model for extended affine type A and its cell invariants.

W for the A family is realized as the group of permutations sigma of Z with
sigma(i + n) = sigma(i) + n and sum(sigma(i) - i) = 0 mod n, stored by the
window (sigma(1), ..., sigma(n)).  The two-sided cell of an element is
classified by the partition mu built from maximal unions of d-antichains; a
d-antichain is a position sequence increasing in both coordinates with both
spreads less than n.

to_permutation / from_permutation translate between this model and the
(translation, finite part) normal form; the center (the n-th power of the
rotation) is quotiented away on the group-element side, and an optional
normalization exposes that quotient here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from . import affine_group as ag
from .affine_group import GroupElement
from .root_system import RootSystem, Vector


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if len(self.window) != self.n:
            raise ValueError(f"window must have {self.n} entries")
        residues = {v % self.n for v in self.window}
        if len(residues) != self.n:
            raise ValueError("window values must be pairwise incongruent mod n")
        if sum(v - i - 1 for i, v in enumerate(self.window)) % self.n != 0:
            raise ValueError("window shift sum must be divisible by n")

    def apply(self, j: int) -> int:
        r = (j - 1) % self.n
        return self.window[r] + (j - 1 - r)

    @property
    def shift_sum(self) -> int:
        return sum(v - i - 1 for i, v in enumerate(self.window))

    def __repr__(self):
        return f"AffinePermutation({self.n}, {list(self.window)})"


def identity_perm(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def compose(p: AffinePermutation, q: AffinePermutation) -> AffinePermutation:
    """(p o q)(j) = p(q(j)); matches the group-element multiplication order."""
    if p.n != q.n:
        raise ValueError("period mismatch")
    return AffinePermutation(p.n, tuple(p.apply(q.apply(j)) for j in range(1, p.n + 1)))


def inverse_perm(p: AffinePermutation) -> AffinePermutation:
    # sigma(j) = v means sigma^{-1}(v) = j; shift v into the window first
    window = [0] * p.n
    for j in range(1, p.n + 1):
        v = p.apply(j)
        r = (v - 1) % p.n
        shift = (v - 1 - r) // p.n
        window[r] = j - shift * p.n
    return AffinePermutation(p.n, tuple(window))


def simple_perm(n: int, i: int) -> AffinePermutation:
    """s_i for i in 0..n-1; adds 1 at residue i, subtracts 1 at residue i+1."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"simple reflection index {i} out of range 0..{n - 1}")
    window = []
    for j in range(1, n + 1):
        if j % n == i % n:
            window.append(j + 1)
        elif j % n == (i + 1) % n:
            window.append(j - 1)
        else:
            window.append(j)
    return AffinePermutation(n, tuple(window))


def rotation_perm(n: int) -> AffinePermutation:
    """pi: i -> i + 1; the length-zero generator of the extended group."""
    return AffinePermutation(n, tuple(range(2, n + 2)))


def translation_perm(n: int, i: int) -> AffinePermutation:
    """tau_i: adds n on the residue class of i, fixes everything else."""
    if not 1 <= i <= n:
        raise ValueError(f"translation index {i} out of range 1..{n}")
    return AffinePermutation(
        n, tuple(j + n if j == i else j for j in range(1, n + 1))
    )


def normalize_center(p: AffinePermutation) -> AffinePermutation:
    """Reduce modulo the center: bring the shift sum into [0, n^2)."""
    shift = p.shift_sum // p.n
    k = shift // p.n
    if k == 0:
        return p
    return AffinePermutation(p.n, tuple(v - k * p.n for v in p.window))


def perm_from_word(n: int, letters: Iterable[int], pi_power: int = 0) -> AffinePermutation:
    g = AffinePermutation(n, tuple(range(1 + pi_power, n + 1 + pi_power)))
    for i in letters:
        g = compose(g, simple_perm(n, i))
    return g


# ---------------------------------------------------------------------------
# Transfer to and from the (translation, finite part) model


def _check_family_a(system: RootSystem):
    if system.family != "A":
        raise ValueError("the permutation model applies to family A only")


def to_permutation(g: GroupElement) -> AffinePermutation:
    """Section of the center quotient: shift coefficients are read off the
    fundamental-weight coordinates, so x_i maps to tau_1 ... tau_i."""
    system = g.system
    _check_family_a(system)
    n = system.rank + 1
    coeffs = system.weight_coefficients(g.translation)
    m = [0] * n
    for i, c in enumerate(coeffs, start=1):
        for j in range(i):
            m[j] += c
    fin = [0] * n
    for j in range(n):
        col = [g.matrix[i][j] for i in range(n)]
        fin[j] = col.index(Fraction(1)) + 1
    window = tuple(fin[j] + n * m[fin[j] - 1] for j in range(n))
    return AffinePermutation(n, window)


def from_permutation(system: RootSystem, p: AffinePermutation) -> GroupElement:
    """Quotient map W_* -> W0 x| P; kills the center."""
    _check_family_a(system)
    n = system.rank + 1
    if p.n != n:
        raise ValueError(f"period {p.n} does not match family A rank {system.rank}")
    fin = [0] * n
    m = [0] * n
    for j in range(1, n + 1):
        v = p.apply(j)
        r = (v - 1) % n
        fin[j - 1] = r + 1
        m[r] = (v - 1 - r) // n
    lam = system.weight_from_coefficients(
        tuple(m[i - 1] - m[i] for i in range(1, n))
    )
    matrix = tuple(
        tuple(Fraction(1 if fin[j] == i + 1 else 0) for j in range(n))
        for i in range(n)
    )
    return GroupElement(system, lam, matrix)


# ---------------------------------------------------------------------------
# d-antichains and the two-sided-cell partition


def is_d_antichain(p: AffinePermutation, positions: tuple[int, ...]) -> bool:
    """Positions strictly increasing, both coordinate spreads below n, and
    values increasing."""
    if any(positions[i] >= positions[i + 1] for i in range(len(positions) - 1)):
        raise ValueError("positions must be strictly increasing")
    return _is_antichain_sorted(p, positions)


def _is_antichain_sorted(p: AffinePermutation, positions) -> bool:
    if positions[-1] - positions[0] >= p.n:
        return False
    vals = [p.apply(j) for j in positions]
    for a, b in zip(vals, vals[1:]):
        if a >= b:
            return False
    return vals[-1] - vals[0] < p.n


def _min_antichain_cover(p: AffinePermutation, elements: tuple[int, ...]) -> int:
    elems = sorted(elements)
    m = len(elems)
    full = (1 << m) - 1
    anti = [False] * (full + 1)
    for mask in range(1, full + 1):
        subset = [elems[i] for i in range(m) if mask >> i & 1]
        anti[mask] = _is_antichain_sorted(p, subset)
    INF = m + 1
    cover = [INF] * (full + 1)
    cover[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        best = INF
        while sub:
            if sub & low and anti[sub]:
                c = cover[mask ^ sub] + 1
                if c < best:
                    best = c
            sub = (sub - 1) & mask
        cover[mask] = best
    return cover[full]


def _translation_shifts(p: AffinePermutation) -> Optional[list[int]]:
    """theta_j with p(j) = j + theta_j * n, or None if p is not a translation."""
    shifts = []
    for j in range(1, p.n + 1):
        d = p.apply(j) - j
        if d % p.n != 0:
            return None
        shifts.append(d // p.n)
    return shifts


@lru_cache(maxsize=65536)
def mu_partition(p: AffinePermutation) -> tuple[int, ...]:
    """The partition (d_1, d_2 - d_1, ..., d_n - d_{n-1}) classifying the
    two-sided cell of p.

    d_i maximizes the cardinality of a set of pairwise-incongruent integers
    that splits into at most i d-antichains.  Every d-antichain is invariant
    under shifting all its members by n, so each block of a candidate set can
    be normalized to have its minimum in [1, n]; representatives from
    {r, r + n} per residue r therefore exhaust all family sets, and the
    search enumerates exactly those.

    Translations short-circuit: a d-antichain of a translation has constant
    shift theta (unequal shifts inside one window contradict the increasing-
    values condition), and conversely any equal-shift residue set is one
    antichain; so d_i is the sum of the i largest shift multiplicities.
    """
    n = p.n
    shifts = _translation_shifts(p)
    if shifts is not None:
        counts = {}
        for t in shifts:
            counts[t] = counts.get(t, 0) + 1
        mults = sorted(counts.values(), reverse=True)
        d = []
        acc = 0
        for i in range(n):
            acc += mults[i] if i < len(mults) else 0
            d.append(acc)
    else:
        best = [0] * (n + 1)
        for assignment in product((None, 0, 1), repeat=n):
            chosen = tuple(
                r + 1 + off * n
                for r, off in enumerate(assignment)
                if off is not None
            )
            if not chosen:
                continue
            c = _min_antichain_cover(p, chosen)
            size = len(chosen)
            if c <= n and size > best[c]:
                best[c] = size
        d = []
        acc = 0
        for i in range(1, n + 1):
            acc = max(acc, best[i])
            best[i] = acc
            d.append(acc)
    if d[-1] != n:
        raise AssertionError(f"d_n = {d[-1]} != n")
    mu = tuple(d[i] - (d[i - 1] if i else 0) for i in range(n))
    mu = tuple(part for part in mu if part > 0)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise AssertionError(f"mu {mu} is not weakly decreasing")
    return mu


def same_two_sided_cell(p: AffinePermutation, q: AffinePermutation) -> bool:
    if p.n != q.n:
        raise ValueError("period mismatch")
    return mu_partition(p) == mu_partition(q)


# ---------------------------------------------------------------------------
# Right-connectedness certificates


def right_cell_certificate(
    a: AffinePermutation,
    b: AffinePermutation,
    max_depth: int = 8,
    max_states: int = 10**5,
) -> Optional[list[AffinePermutation]]:
    """Search for a chain a, a*s, ... , b of right multiplications by
    simple reflections with constant mu; a found chain certifies that a and
    b share a right cell.  Absence only means not-found-within-bounds.
    """
    if a.n != b.n:
        raise ValueError("period mismatch")
    mu = mu_partition(a)
    if mu != mu_partition(b):
        raise ValueError("different two-sided cells cannot share a right cell")
    if a == b:
        return [a]
    gens = [simple_perm(a.n, i) for i in range(a.n)]
    frontier = [a]
    parents: dict[AffinePermutation, Optional[AffinePermutation]] = {a: None}
    for _ in range(max_depth):
        nxt = []
        for cur in frontier:
            for s in gens:
                h = compose(cur, s)
                if h in parents:
                    continue
                if mu_partition(h) != mu:
                    continue
                parents[h] = cur
                if h == b:
                    chain = [h]
                    while parents[chain[-1]] is not None:
                        chain.append(parents[chain[-1]])
                    return list(reversed(chain))
                nxt.append(h)
                if len(parents) > max_states:
                    return None
        frontier = nxt
        if not frontier:
            return None
    return None


def suffix_conjugation_chain(
    w: GroupElement, x: GroupElement
) -> list[AffinePermutation]:
    """The explicit chain w x, w x s_{i_j}, ..., w x w^{-1} obtained by
    multiplying the reversed letters of a reduced word of w; verifies that mu
    is constant along it, certifying w x ~R w x w^{-1}."""
    system = x.system
    _check_family_a(system)
    if not x.is_translation():
        raise ValueError("x must be a translation")
    _, letters = ag.reduced_word(w)
    chain_elt = ag.multiply(w, x)
    chain = [to_permutation(chain_elt)]
    mu = mu_partition(chain[0])
    for i in reversed(letters):
        chain_elt = ag.multiply(chain_elt, ag.simple_reflection(system, i))
        p = to_permutation(chain_elt)
        if mu_partition(p) != mu:
            raise AssertionError("mu changed along the suffix chain")
        chain.append(p)
    target = ag.multiply(ag.multiply(w, x), ag.inverse(w))
    if chain_elt != target:
        raise AssertionError("suffix chain did not end at the conjugate")
    return chain


def verify_conjugation_and_powers(
    x: AffinePermutation,
    conjugators: Iterable[AffinePermutation],
    max_power: int,
) -> dict:
    """mu-equality checks for w x w^{-1} over the given finite-part elements
    and for the powers x^m, m <= max_power."""
    mu = mu_partition(x)
    conj_results = []
    for w in conjugators:
        c = compose(compose(w, x), inverse_perm(w))
        conj_results.append(mu_partition(c) == mu)
    power_results = []
    acc = x
    for _ in range(max_power - 1):
        acc = compose(acc, x)
        power_results.append(mu_partition(acc) == mu)
    return {
        "mu": mu,
        "conjugates_checked": len(conj_results),
        "conjugates_equal": all(conj_results),
        "powers_checked": max_power - 1,
        "powers_equal": all(power_results),
    }


# ---------------------------------------------------------------------------
# Independent oracle: Greene invariants of a finite permutation via RSK


def rsk_shape(sequence: Iterable[int]) -> tuple[int, ...]:
    """Shape of the RSK insertion tableau; by Greene's theorem its partial
    sums are the maximal total lengths of unions of increasing subsequences."""
    rows: list[list[int]] = []
    for value in sequence:
        v = value
        for row in rows:
            # bisect by hand: first entry >= v gets bumped
            idx = None
            for i, entry in enumerate(row):
                if entry >= v:
                    idx = i
                    break
            if idx is None:
                row.append(v)
                v = None
                break
            row[idx], v = v, row[idx]
        if v is not None:
            rows.append([v])
    return tuple(len(r) for r in rows)

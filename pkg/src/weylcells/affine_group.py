"""Extended affine Weyl group arithmetic in the (translation, finite part) normal form.

An element of W = W0 x| X is stored as a pair (lam, w): a weight-lattice
translation and an orthogonal action of the finite Weyl group.  Products use
(l1, w1)(l2, w2) = (l1 + w1(l2), w1 w2); words in the generators s0..sn are
derived on demand, never stored.  Lengths come from the closed formula

    l(t_lam w) = sum_{a > 0, w^-1 a < 0} |<lam, a^vee> - 1|
               + sum_{a > 0, w^-1 a > 0} |<lam, a^vee>|

and s0 = t_b s_b for b the highest short root.  The length-zero elements form
the finite group Gamma ~ P/Q; every element factors as gamma * (affine part)
and the Bruhat order only compares elements with equal Gamma component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .root_system import (
    RootSystem,
    Vector,
    dot,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vector,
)

Matrix = tuple[tuple[Fraction, ...], ...]


def identity_matrix(dim: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
    )


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((r[j] * v[j] for j in range(len(v))), Fraction(0)) for r in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    dim = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((ra[k] * cb[k] for k in range(dim)), Fraction(0)) for cb in bt)
        for ra in a
    )


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def reflection_matrix(system: RootSystem, alpha: Vector) -> Matrix:
    cor = system.coroot(alpha)
    dim = system.dim
    return tuple(
        tuple(Fraction(1 if i == j else 0) - alpha[i] * cor[j] for j in range(dim))
        for i in range(dim)
    )


@dataclass(frozen=True)
class GroupElement:
    """t_lam * w with lam in the weight lattice and w in W0."""

    system: RootSystem
    translation: Vector
    matrix: Matrix

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def is_translation(self) -> bool:
        return self.matrix == identity_matrix(self.system.dim)

    def apply(self, v: Vector) -> Vector:
        """Action on the ambient space: x -> lam + w(x)."""
        return vadd(self.translation, mat_vec(self.matrix, v))

    def __repr__(self):
        sys_name = f"{self.system.family}{self.system.rank}"
        return f"GroupElement({sys_name}, t={self.translation}, w={self.matrix})"


def identity(system: RootSystem) -> GroupElement:
    return GroupElement(system, zero_vector(system.dim), identity_matrix(system.dim))


def translation(system: RootSystem, lam: Vector) -> GroupElement:
    if not system.in_weight_lattice(lam):
        raise ValueError(f"{lam} is not in the weight lattice of {system.family}{system.rank}")
    return GroupElement(system, lam, identity_matrix(system.dim))


def translation_from_exponents(system: RootSystem, exponents: Iterable[int]) -> GroupElement:
    """The translation x_1^{a_1} ... x_n^{a_n} = t_{sum a_i lambda_i}."""
    return translation(system, system.weight_from_coefficients(tuple(exponents)))


def fundamental_translation(system: RootSystem, i: int) -> GroupElement:
    """x_i = t_{lambda_i}, 1-based."""
    if not 1 <= i <= system.rank:
        raise ValueError(f"fundamental weight index {i} out of range 1..{system.rank}")
    return translation(system, system.fundamental_weights[i - 1])


@lru_cache(maxsize=None)
def simple_reflection(system: RootSystem, i: int) -> GroupElement:
    """s_i for i in 0..n; s_0 = t_b s_b with b the highest short root."""
    if i == 0:
        beta = system.highest_short_root
        return GroupElement(system, beta, reflection_matrix(system, beta))
    if not 1 <= i <= system.rank:
        raise ValueError(f"generator index {i} out of range 0..{system.rank}")
    alpha = system.simple_roots[i - 1]
    return GroupElement(system, zero_vector(system.dim), reflection_matrix(system, alpha))


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.system is not b.system:
        raise ValueError("cannot multiply elements over different root systems")
    return GroupElement(
        a.system,
        vadd(a.translation, mat_vec(a.matrix, b.translation)),
        mat_mul(a.matrix, b.matrix),
    )


def inverse(a: GroupElement) -> GroupElement:
    winv = mat_transpose(a.matrix)
    return GroupElement(a.system, mat_vec(winv, vneg(a.translation)), winv)


def from_word(
    system: RootSystem,
    letters: Iterable[int],
    gamma: Optional[GroupElement] = None,
) -> GroupElement:
    """Product of the named generators, left to right, optionally preceded by
    a length-zero element (the Gamma label emitted by reduced_word)."""
    g = identity(system) if gamma is None else gamma
    if gamma is not None and length(gamma) != 0:
        raise ValueError("gamma label must have length zero")
    for i in letters:
        g = multiply(g, simple_reflection(system, i))
    return g


@lru_cache(maxsize=None)
def length(g: GroupElement) -> int:
    system = g.system
    winv = mat_transpose(g.matrix)
    total = 0
    for alpha in system.positive_roots:
        p = int(dot(g.translation, system.coroot(alpha)))
        if system.is_positive_root(mat_vec(winv, alpha)):
            total += abs(p)
        else:
            total += abs(p - 1)
    return total


@lru_cache(maxsize=None)
def coordinate_form(g: GroupElement) -> tuple[int, ...]:
    """k(g, alpha) over the canonical positive-root order.

    For g = t_lam u:  k(g, alpha) = <lam, alpha^vee> + (0 if u^-1(alpha) > 0
    else -1); the values on negative roots are determined by
    k(g, -alpha) = -k(g, alpha).
    """
    system = g.system
    winv = mat_transpose(g.matrix)
    out = []
    for alpha in system.positive_roots:
        p = int(dot(g.translation, system.coroot(alpha)))
        if not system.is_positive_root(mat_vec(winv, alpha)):
            p -= 1
        out.append(p)
    return tuple(out)


def coordinate_at(g: GroupElement, root: Vector) -> int:
    """k(g, root) for an arbitrary root (positive or negative)."""
    system = g.system
    kform = coordinate_form(g)
    if system.is_positive_root(root):
        return kform[system.positive_index(root)]
    return -kform[system.positive_index(vneg(root))]


def left_descents(g: GroupElement) -> frozenset[int]:
    """{ j : s_j g < g }, via the coordinate-form criterion."""
    system = g.system
    kform = coordinate_form(g)
    out = set()
    # alpha_0 = -(highest short root), so k(g, alpha_0) < 0 iff k(g, b) > 0
    if kform[system.positive_index(system.highest_short_root)] > 0:
        out.add(0)
    for j, alpha in enumerate(system.simple_roots, start=1):
        if kform[system.positive_index(alpha)] < 0:
            out.add(j)
    return frozenset(out)


def right_descents(g: GroupElement) -> frozenset[int]:
    """{ j : g s_j < g } = { j : k(g, wbar(alpha_j)) > 0 }."""
    system = g.system
    out = set()
    for j in range(system.rank + 1):
        alpha = (
            vneg(system.highest_short_root) if j == 0 else system.simple_roots[j - 1]
        )
        if coordinate_at(g, mat_vec(g.matrix, alpha)) > 0:
            out.add(j)
    return frozenset(out)


def gamma_component(g: GroupElement) -> GroupElement:
    """The unique length-zero element gamma with g in gamma * W_a."""
    h = g
    while length(h) > 0:
        j = min(right_descents(h))
        h = multiply(h, simple_reflection(g.system, j))
    return h


def in_affine_part(g: GroupElement) -> bool:
    """Whether g lies in W_a, i.e. its translation is in the root lattice."""
    return g.system.in_root_lattice(g.translation)


def same_gamma_component(a: GroupElement, b: GroupElement) -> bool:
    return a.system.in_root_lattice(vsub(a.translation, b.translation))


def reduced_word(g: GroupElement) -> tuple[GroupElement, tuple[int, ...]]:
    """(gamma, letters) with g = gamma * product(letters) and len(letters) = l(g).

    Greedy extraction: at each step the smallest-index right descent is
    stripped, which makes the word deterministic.
    """
    gamma = gamma_component(g)
    h = multiply(inverse(gamma), g)
    stripped = []
    while length(h) > 0:
        j = min(right_descents(h))
        h = multiply(h, simple_reflection(g.system, j))
        stripped.append(j)
    return gamma, tuple(reversed(stripped))


def bruhat_leq(
    a: GroupElement,
    b: GroupElement,
    memo: Optional[dict] = None,
) -> bool:
    """Extended Bruhat order; False (incomparable) when Gamma components differ.

    Standard descent-lifting recursion: for s a left descent of b,
    a <= b iff (sa <= sb when sa < a) else (a <= sb).
    """
    if a.system is not b.system:
        raise ValueError("cannot compare elements over different root systems")
    if not same_gamma_component(a, b):
        return False
    if memo is None:
        memo = {}

    def rec(x: GroupElement, y: GroupElement) -> bool:
        if x == y:
            return True
        lx, ly = length(x), length(y)
        if lx >= ly:
            return False
        key = (x, y)
        cached = memo.get(key)
        if cached is not None:
            return cached
        j = min(left_descents(y))
        s = simple_reflection(y.system, j)
        sy = multiply(s, y)
        sx = multiply(s, x)
        if length(sx) < lx:
            result = rec(sx, sy)
        else:
            result = rec(x, sy)
        memo[key] = result
        return result

    return rec(a, b)


def make_dominant(x: GroupElement) -> tuple[GroupElement, GroupElement]:
    """(w, t) with w x w^-1 = t dominant and w of minimal length in W0.

    Greedy: repeatedly reflect at the smallest simple root with negative
    pairing.  Each step removes exactly one positive root with negative
    pairing, so the word length meets the lower bound
    #{a > 0 : <lam, a^vee> < 0} and the conjugator is the unique minimal one.
    """
    if not x.is_translation():
        raise ValueError("make_dominant expects a translation")
    system = x.system
    lam = x.translation
    w_mat = identity_matrix(system.dim)
    while True:
        for i, alpha in enumerate(system.simple_roots):
            if dot(lam, system.coroot(alpha)) < 0:
                lam = system.reflect(alpha, lam)
                w_mat = mat_mul(reflection_matrix(system, alpha), w_mat)
                break
        else:
            break
    w = GroupElement(system, zero_vector(system.dim), w_mat)
    return w, GroupElement(system, lam, identity_matrix(system.dim))


def is_dominant(x: GroupElement) -> bool:
    if not x.is_translation():
        return False
    system = x.system
    return all(dot(x.translation, system.coroot(a)) >= 0 for a in system.simple_roots)


def longest_parabolic(system: RootSystem, subset: Iterable[int], cap: int = 2**20) -> GroupElement:
    """Longest element of W_J for J a subset of {0..n}, by layered enumeration.

    Elements first discovered at BFS step k have length exactly k, so no
    length evaluations are needed; the enumeration aborts once more than
    ``cap`` elements are seen (the parabolic is then treated as infinite).
    """
    J = sorted(set(subset))
    for j in J:
        if not 0 <= j <= system.rank:
            raise ValueError(f"generator index {j} out of range 0..{system.rank}")
    gens = [simple_reflection(system, j) for j in J]
    e = identity(system)
    seen = {e}
    layer = [e]
    last_layer = layer
    while layer:
        nxt = []
        for g in layer:
            for s in gens:
                h = multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise ValueError(
                            f"parabolic subgroup on {J} exceeded the enumeration cap "
                            f"({cap} elements); treating it as infinite"
                        )
        if nxt:
            last_layer = nxt
        layer = nxt
    if len(last_layer) != 1:
        raise AssertionError("finite parabolic has a non-unique maximal-length element")
    return last_layer[0]


def longest_finite_element(system: RootSystem) -> GroupElement:
    """w0, the longest element of W0, built by greedy length ascent."""
    w = identity(system)
    changed = True
    while changed:
        changed = False
        for i, alpha in enumerate(system.simple_roots, start=1):
            if system.is_positive_root(mat_vec(w.matrix, alpha)):
                w = multiply(w, simple_reflection(system, i))
                changed = True
                break
    return w


def finite_weyl_elements(system: RootSystem, cap: int = 2**20) -> list[GroupElement]:
    """All of W0, by breadth-first closure over s_1..s_n."""
    gens = [simple_reflection(system, i) for i in range(1, system.rank + 1)]
    e = identity(system)
    seen = {e}
    layer = [e]
    while layer:
        nxt = []
        for g in layer:
            for s in gens:
                h = multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise ValueError(f"|W0| exceeds the enumeration cap {cap}")
        layer = nxt
    return sorted(seen, key=length)


def affine_ball_layers(system: RootSystem, bound: int, cap: int = 200000) -> list[list[GroupElement]]:
    """Layers [L0, L1, ..., L_bound] with L_k = {g in W_a : l(g) = k}.

    BFS from the identity over s_0..s_n; an element first reached at step k
    has length k, so the layer index is the length.
    """
    gens = [simple_reflection(system, i) for i in range(system.rank + 1)]
    e = identity(system)
    seen = {e}
    layers = [[e]]
    for _ in range(bound):
        nxt = []
        for g in layers[-1]:
            for s in gens:
                h = multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise ValueError(
                            f"ball enumeration exceeded cap {cap} at length {len(layers)}"
                        )
        layers.append(nxt)
    return layers

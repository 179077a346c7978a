"""Truncated Kazhdan-Lusztig computation on length-bounded balls of W_a.

A Ball enumerates {g : l(g) <= L} with stable indices, multiplication tables
and an all-pairs Bruhat order.  The polynomial table is filled bottom-up in
length order with the classical recursion: for s a left descent of w and
v = s w,

    P_{x,w} = P_{sx,v} + q P_{x,v}
              - sum_z mu(z, v) q^{(l(w)-l(z))/2} P_{x,z}     (s x < x)
    P_{x,w} = P_{sx,w}                                        (s x > x)

with z running over the mu-partners of v having s z < z.  Everything a cell
graph reports is tagged as within-ball: edges leaving the ball are unknown,
so components are unions of, or subsets of, true cells; no API claims
completed cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, TextIO

from . import affine_group as ag
from .affine_group import GroupElement
from .root_system import RootSystem

Poly = tuple[int, ...]  # coefficient list over q, constant term first

ZERO: Poly = ()
ONE: Poly = (1,)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_shift(a: Poly, k: int) -> Poly:
    return ((0,) * k + a) if a else ZERO


def poly_scale(c: int, a: Poly) -> Poly:
    if c == 0:
        return ZERO
    return tuple(c * x for x in a)


def poly_deg(a: Poly) -> int:
    return len(a) - 1  # -1 for the zero polynomial


@dataclass
class Ball:
    """Length-bounded piece of W_a with stable indexing.

    Layers are sorted by the (translation, matrix) key, so indices do not
    depend on hash order and are identical across runs.
    """

    system: RootSystem
    bound: int
    elements: list[GroupElement]
    index: dict[GroupElement, int]
    lengths: list[int]
    left_mult: list[list[int]]    # [idx][gen] -> idx, or -1 if outside the ball
    right_mult: list[list[int]]
    left_desc: list[frozenset[int]]
    right_desc: list[frozenset[int]]
    inverse_of: list[int]
    _leq_sets: list[set[int]] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def leq(self, x: int, w: int) -> bool:
        """Bruhat order via the ball-wide memoized table."""
        return x in self._leq_sets[w]


def enumerate_ball(system: RootSystem, bound: int, cap: int = 200000) -> Ball:
    """Exactly {g in W_a : l(g) <= bound}, deduplicated by the normal form."""
    layers = ag.affine_ball_layers(system, bound, cap=cap)
    elements: list[GroupElement] = []
    for layer in layers:
        elements.extend(sorted(layer, key=lambda g: (g.translation, g.matrix)))
    index = {g: i for i, g in enumerate(elements)}
    lengths = [ag.length(g) for g in elements]
    gens = [ag.simple_reflection(system, i) for i in range(system.rank + 1)]
    left_mult = [
        [index.get(ag.multiply(s, g), -1) for s in gens] for g in elements
    ]
    right_mult = [
        [index.get(ag.multiply(g, s), -1) for s in gens] for g in elements
    ]
    left_desc = [ag.left_descents(g) for g in elements]
    right_desc = [ag.right_descents(g) for g in elements]
    inverse_of = [index[ag.inverse(g)] for g in elements]

    # all-pairs Bruhat order, by length layers:
    # x <= w iff (s x <= s w when s x < x else x <= s w) for s a left descent of w
    leq_sets: list[set[int]] = [set() for _ in elements]
    for w in range(len(elements)):
        if lengths[w] == 0:
            leq_sets[w] = {w}
            continue
        s = min(left_desc[w])
        v = left_mult[w][s]
        below_v = leq_sets[v]
        mine = {w}
        for x in range(len(elements)):
            if lengths[x] >= lengths[w]:
                continue
            sx = left_mult[x][s]
            if sx != -1 and lengths[sx] < lengths[x]:
                if sx in below_v:
                    mine.add(x)
            elif x in below_v:
                mine.add(x)
        leq_sets[w] = mine

    return Ball(
        system=system,
        bound=bound,
        elements=elements,
        index=index,
        lengths=lengths,
        left_mult=left_mult,
        right_mult=right_mult,
        left_desc=left_desc,
        right_desc=right_desc,
        inverse_of=inverse_of,
        _leq_sets=leq_sets,
    )


@dataclass
class KLTable:
    """Sparse P_{x,w} for all Bruhat-comparable ball pairs, plus mu partners."""

    ball: Ball
    polys: dict[tuple[int, int], Poly]
    mu_partners: list[list[tuple[int, int]]]  # per w: [(z, mu(z, w)) ...], z < w

    def polynomial(self, x: int, w: int) -> Poly:
        if x == w:
            return ONE
        return self.polys.get((x, w), ZERO)


def compute_kl_table(
    ball: Ball,
    descent_choice: Callable[[frozenset[int]], int] = min,
) -> KLTable:
    """Fill the table bottom-up in length order.

    ``descent_choice`` picks the left descent used in the recursion; the
    result must not depend on it (checked by the property suite).
    """
    lengths = ball.lengths
    polys: dict[tuple[int, int], Poly] = {}
    mu_partners: list[list[tuple[int, int]]] = [[] for _ in ball.elements]

    def lookup(x: int, w: int) -> Poly:
        if x == w:
            return ONE
        return polys.get((x, w), ZERO)

    order = sorted(range(len(ball.elements)), key=lambda i: lengths[i])
    for w in order:
        lw = lengths[w]
        if lw == 0:
            continue
        s = descent_choice(ball.left_desc[w])
        v = ball.left_mult[w][s]
        mu_v = [(z, m) for (z, m) in mu_partners[v] if s in ball.left_desc[z]]
        below = sorted(
            (x for x in ball._leq_sets[w] if x != w),
            key=lambda x: -lengths[x],
        )
        for x in below:
            sx = ball.left_mult[x][s]
            if sx == -1:
                raise AssertionError("ball is not descent-closed")
            if lengths[sx] > lengths[x]:
                p = lookup(sx, w)  # computed already: longer x first
            else:
                p = poly_add(lookup(sx, v), poly_shift(lookup(x, v), 1))
                for z, m in mu_v:
                    if lengths[z] < lengths[x] or not ball.leq(x, z):
                        continue
                    half = lw - lengths[z]
                    if half % 2 != 0:
                        raise AssertionError("odd exponent in the mu correction term")
                    term = poly_scale(-m, poly_shift(lookup(x, z), half // 2))
                    p = poly_add(p, term)
            if p:
                bound2 = lw - lengths[x] - 1
                if 2 * poly_deg(p) > bound2:
                    raise AssertionError(
                        f"degree bound violated at pair ({x}, {w}): {p}"
                    )
                polys[(x, w)] = p
        # collect mu partners of w
        for x in ball._leq_sets[w]:
            if x == w:
                continue
            diff = lw - lengths[x]
            if diff % 2 == 0:
                continue
            p = polys.get((x, w), ZERO)
            half = (diff - 1) // 2
            if len(p) == half + 1:
                mu_partners[w].append((x, p[half]))
    return KLTable(ball=ball, polys=polys, mu_partners=mu_partners)


def kl_polynomial(table: KLTable, x: GroupElement, w: GroupElement) -> Poly:
    """P_{x,w}; zero when x is not below w, rejection outside the ball."""
    ball = table.ball
    if x not in ball.index or w not in ball.index:
        raise ValueError("both elements must lie in the ball")
    return table.polynomial(ball.index[x], ball.index[w])


def mu_coefficient(table: KLTable, x: GroupElement, w: GroupElement) -> int:
    ball = table.ball
    if x not in ball.index or w not in ball.index:
        raise ValueError("both elements must lie in the ball")
    xi, wi = ball.index[x], ball.index[w]
    diff = ball.lengths[wi] - ball.lengths[xi]
    if diff <= 0 or diff % 2 == 0:
        return 0
    p = table.polynomial(xi, wi)
    half = (diff - 1) // 2
    return p[half] if len(p) == half + 1 else 0


def edge(table: KLTable, x: GroupElement, w: GroupElement) -> bool:
    """The symmetric relation: one of the two mu coefficients is nonzero."""
    return mu_coefficient(table, x, w) != 0 or mu_coefficient(table, w, x) != 0


@dataclass
class CellGraph:
    """Within-ball preorder graph; components are only cell approximations."""

    ball: Ball
    side: str
    edges: dict[int, list[int]]           # u -> {w : w <=_side u, one step}
    components: list[tuple[int, ...]]
    component_of: list[int]
    component_edges: dict[int, set[int]]  # condensation DAG
    truncated: bool = True

    def component_members(self, idx: int) -> list[GroupElement]:
        return [self.ball.elements[i] for i in self.components[idx]]


def _tarjan(vertices: list[int], succ: dict[int, list[int]]) -> list[tuple[int, ...]]:
    index_counter = [0]
    stack: list[int] = []
    on_stack: set[int] = set()
    low: dict[int, int] = {}
    idx: dict[int, int] = {}
    result: list[tuple[int, ...]] = []

    for root in vertices:
        if root in idx:
            continue
        work = [(root, iter(succ.get(root, ())))]
        idx[root] = low[root] = index_counter[0]
        index_counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in idx:
                    idx[nxt] = low[nxt] = index_counter[0]
                    index_counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succ.get(nxt, ()))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], idx[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == idx[node]:
                comp = []
                while True:
                    v = stack.pop()
                    on_stack.discard(v)
                    comp.append(v)
                    if v == node:
                        break
                result.append(tuple(sorted(comp)))
    return result


def cell_graph(table: KLTable, side: str) -> CellGraph:
    """Directed graph of one-step preorder relations from the edge relation
    plus the descent-set condition, and its strongly connected components."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ball = table.ball
    desc = ball.left_desc if side == "left" else ball.right_desc
    edges: dict[int, list[int]] = {i: [] for i in range(len(ball))}
    for w in range(len(ball)):
        for z, _m in table.mu_partners[w]:
            # z - w with z < w; orient by the descent filter
            if not desc[z] <= desc[w]:
                edges[w].append(z)
            if not desc[w] <= desc[z]:
                edges[z].append(w)
    components = _tarjan(list(range(len(ball))), edges)
    components.sort(key=lambda comp: (ball.lengths[comp[0]], comp))
    component_of = [0] * len(ball)
    for ci, comp in enumerate(components):
        for v in comp:
            component_of[v] = ci
    component_edges: dict[int, set[int]] = {i: set() for i in range(len(components))}
    for u, targets in edges.items():
        for w in targets:
            cu, cw = component_of[u], component_of[w]
            if cu != cw:
                component_edges[cu].add(cw)
    return CellGraph(
        ball=ball,
        side=side,
        edges=edges,
        components=components,
        component_of=component_of,
        component_edges=component_edges,
    )


def is_distinguished(
    table: KLTable, w: GroupElement, a_value: int
) -> tuple[bool, str]:
    """Involution test plus 2 deg P_{e,w} = l(w) - a(w), with a supplied.

    The engine never computes the a-function; callers pass the table value.
    """
    ball = table.ball
    if w not in ball.index:
        raise ValueError("element must lie in the ball")
    wi = ball.index[w]
    if ball.inverse_of[wi] != wi:
        return False, "not an involution"
    e = ag.identity(ball.system)
    p = table.polynomial(ball.index[e], wi)
    if not p:
        return False, "no polynomial against the identity"
    if 2 * poly_deg(p) == ball.lengths[wi] - a_value:
        return True, "degree condition met"
    return False, (
        f"2 deg P = {2 * poly_deg(p)} differs from l - a = {ball.lengths[wi] - a_value}"
    )


# ---------------------------------------------------------------------------
# Cache file: text, versioned, bit-exact round trip

CACHE_MAGIC = "klcache v1"


def save_cache(fh: TextIO, table: KLTable) -> None:
    ball = table.ball
    fh.write(f"{CACHE_MAGIC} {ball.system.family} {ball.system.rank} L={ball.bound}\n")
    for i, g in enumerate(ball.elements):
        _, letters = ag.reduced_word(g)
        word = ",".join(str(c) for c in letters) if letters else "-"
        fh.write(f"E {i} {word}\n")
    for (x, w) in sorted(table.polys):
        coeffs = " ".join(str(c) for c in table.polys[(x, w)])
        fh.write(f"P {x} {w} {coeffs}\n")


def load_cache(fh: TextIO, ball: Ball) -> tuple[Optional[KLTable], Optional[str]]:
    """(table, warning); a header or element mismatch yields (None, reason)."""
    header = fh.readline().rstrip("\n")
    expected = f"{CACHE_MAGIC} {ball.system.family} {ball.system.rank} L={ball.bound}"
    if header != expected:
        return None, f"stale cache ignored: header {header!r} != {expected!r}"
    polys: dict[tuple[int, int], Poly] = {}
    for line in fh:
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "E":
            i = int(parts[1])
            letters = [] if parts[2] == "-" else [int(c) for c in parts[2].split(",")]
            g = ag.from_word(ball.system, letters)
            if i >= len(ball.elements) or ball.elements[i] != g:
                return None, f"stale cache ignored: element {i} does not match the ball"
        elif parts[0] == "P":
            x, w = int(parts[1]), int(parts[2])
            polys[(x, w)] = tuple(int(c) for c in parts[3:])
        else:
            return None, f"stale cache ignored: unknown record {parts[0]!r}"
    mu_partners: list[list[tuple[int, int]]] = [[] for _ in ball.elements]
    for (x, w), p in polys.items():
        diff = ball.lengths[w] - ball.lengths[x]
        if diff > 0 and diff % 2 == 1 and len(p) == (diff - 1) // 2 + 1:
            mu_partners[w].append((x, p[(diff - 1) // 2]))
    return KLTable(ball=ball, polys=polys, mu_partners=mu_partners), None

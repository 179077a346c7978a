"""Root system construction and exact pairing arithmetic."""

from fractions import Fraction

import pytest

from weylcells.root_system import build, dot, vec, vneg, vsub

ALL_SYSTEMS = [
    ("A", 1), ("A", 2), ("A", 5), ("A", 7),
    ("B", 3), ("B", 4), ("B", 6),
    ("C", 2), ("C", 3), ("C", 6),
    ("D", 4), ("D", 5),
    ("E6", 6), ("E7", 7), ("E8", 8),
    ("F4", 4), ("G2", 2),
]

EXPECTED_COUNTS = {
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


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_positive_root_count(family, rank):
    rs = build(family, rank)
    assert rs.nu == EXPECTED_COUNTS[family](rank)


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_fundamental_weights_dual_to_simple_coroots(family, rank):
    rs = build(family, rank)
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.pairing(rs.fundamental_weights[i], rs.simple_roots[j]) == (i == j)


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_positive_negative_split(family, rank):
    rs = build(family, rank)
    for alpha in rs.positive_roots:
        assert rs.is_root(alpha)
        assert rs.is_root(vneg(alpha))
        assert not rs.is_positive_root(vneg(alpha))
    for alpha in rs.positive_roots:
        coords = rs.simple_coordinates(alpha)
        assert all(c.denominator == 1 and c >= 0 for c in coords)


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("F4", 4), ("G2", 2), ("A", 3)])
def test_reflection_permutes_roots(family, rank):
    rs = build(family, rank)
    for alpha in rs.simple_roots + (rs.highest_short_root,):
        images = {rs.reflect(alpha, beta) for beta in rs.positive_roots}
        images |= {vneg(v) for v in images}
        full = {beta for beta in rs.positive_roots} | {vneg(b) for b in rs.positive_roots}
        assert images == full
        fixed = [b for b in rs.positive_roots if rs.reflect(alpha, b) == b]
        orthogonal = [b for b in rs.positive_roots if dot(alpha, b) == 0]
        assert fixed == orthogonal


def test_reflection_is_involutive_and_negates_its_root():
    rs = build("F4", 4)
    for alpha in rs.positive_roots:
        assert rs.reflect(alpha, alpha) == vneg(alpha)
        v = vec("1/2", 3, "-2", 1)
        assert rs.reflect(alpha, rs.reflect(alpha, v)) == v


def test_b3_positive_roots_are_the_expected_vectors():
    rs = build("B", 3)
    expected = set()
    for i in range(3):
        for j in range(i + 1, 3):
            for sj in (1, -1):
                v = [0, 0, 0]
                v[i], v[j] = 1, sj
                expected.add(vec(*v))
    for k in range(3):
        v = [0, 0, 0]
        v[k] = 2
        expected.add(vec(*v))
    assert set(rs.positive_roots) == expected
    assert rs.highest_short_root == vec(1, 1, 0)
    # the highest short root is the second fundamental weight here
    assert rs.highest_short_root == rs.fundamental_weights[1]


def test_f4_data_matches_the_worked_coordinates():
    rs = build("F4", 4)
    assert rs.fundamental_weights[0] == vec(1, 0, 0, 0)
    assert rs.fundamental_weights[2] == vec(2, 1, 1, 0)
    assert rs.fundamental_weights[3] == vec(1, 1, 0, 0)
    assert rs.highest_short_root == vec(1, 0, 0, 0)


def test_g2_simple_roots_and_weights():
    rs = build("G2", 2)
    assert set(rs.simple_roots) == {vec(1, -1, 0), vec(-2, 1, 1)}
    # weight lattice equals root lattice for G2
    for lam in rs.fundamental_weights:
        assert rs.in_root_lattice(lam)


def test_g2_highest_short_root_by_brute_force():
    rs = build("G2", 2)
    short_len = min(dot(a, a) for a in rs.positive_roots)
    shorts = [a for a in rs.positive_roots if dot(a, a) == short_len]
    assert len(shorts) == 3
    best = max(shorts, key=lambda a: sum(rs.simple_coordinates(a)))
    assert rs.highest_short_root == best


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_highest_short_root_dominates_all_short_roots(family, rank):
    rs = build(family, rank)
    short_len = min(dot(a, a) for a in rs.positive_roots)
    hsr = rs.highest_short_root
    assert dot(hsr, hsr) == short_len
    for alpha in rs.positive_roots:
        if dot(alpha, alpha) == short_len:
            diff = rs.simple_coordinates(vsub(hsr, alpha))
            assert all(c >= 0 for c in diff)


def test_bn_pairing_with_doubled_coordinates():
    # <lambda_{n-1}, (2 eps_k)^vee> = 1 for k <= n-1
    for n in (3, 4, 5):
        rs = build("B", n)
        lam = rs.fundamental_weights[n - 2]
        for k in range(n - 1):
            gamma = vec(*[2 if idx == k else 0 for idx in range(n)])
            assert rs.pairing(lam, gamma) == 1


def test_f4_composed_reflections_send_eps1_to_eps2():
    rs = build("F4", 4)
    v = vec(1, 0, 0, 0)
    for i in (1, 2, 3, 2, 1, 2, 3, 2, 3):
        v = rs.reflect(rs.simple_roots[i - 1], v)
    assert v == vec(0, 1, 0, 0)


def test_pairing_linearity_and_zero():
    rs = build("C", 3)
    a, b = rs.fundamental_weights[0], rs.fundamental_weights[2]
    for alpha in rs.positive_roots:
        lhs = rs.pairing(tuple(x + y for x, y in zip(a, b)), alpha)
        assert lhs == rs.pairing(a, alpha) + rs.pairing(b, alpha)
        assert rs.pairing(vec(0, 0, 0), alpha) == 0


def test_pairing_rejects_non_weights():
    rs = build("B", 3)
    with pytest.raises(ValueError, match="coroot"):
        rs.pairing(vec("1/2", 0, 0), rs.simple_roots[0])


def test_reflect_rejects_non_roots():
    rs = build("A", 2)
    with pytest.raises(ValueError, match="not a root"):
        rs.reflect(vec(5, 0, 0), vec(1, 0, 0))


@pytest.mark.parametrize("family,rank", [("B", 2), ("C", 1), ("D", 3), ("E6", 5), ("G2", 3), ("X", 2)])
def test_invalid_family_rank_pairs_rejected(family, rank):
    with pytest.raises(ValueError):
        build(family, rank)


def test_canonical_root_order_is_by_height_then_lex():
    rs = build("B", 3)
    heights = [sum(rs.simple_coordinates(a)) for a in rs.positive_roots]
    assert heights == sorted(heights)
    assert heights[0] == 1 and heights[-1] == max(heights)

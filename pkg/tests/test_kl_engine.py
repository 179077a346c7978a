"""Ball enumeration, KL recursion, cell graphs, cache round trip."""

import io
import random

import pytest

from weylcells import affine_group as ag
from weylcells import kl_engine as kl
from weylcells.root_system import build


@pytest.fixture(scope="module")
def g2_ball():
    return kl.enumerate_ball(build("G2", 2), 10)


@pytest.fixture(scope="module")
def g2_table(g2_ball):
    return kl.compute_kl_table(g2_ball)


def test_ball_sizes_and_layers():
    rs = build("G2", 2)
    assert len(kl.enumerate_ball(rs, 0)) == 1
    assert len(kl.enumerate_ball(rs, 1)) == 4
    assert len(kl.enumerate_ball(rs, 2)) == 9


def test_ball_cap_rejection():
    rs = build("A", 2)
    with pytest.raises(ValueError, match="cap"):
        kl.enumerate_ball(rs, 12, cap=30)


def test_ball_descent_closed_and_indices_stable(g2_ball):
    ball = g2_ball
    for idx, g in enumerate(ball.elements):
        for j in ball.left_desc[idx]:
            assert ball.left_mult[idx][j] != -1
        for j in ball.right_desc[idx]:
            assert ball.right_mult[idx][j] != -1
    again = kl.enumerate_ball(build("G2", 2), 10)
    assert again.elements == ball.elements


def test_ball_bruhat_agrees_with_recursive_leq(g2_ball):
    ball = g2_ball
    rng = random.Random(20)
    for _ in range(60):
        x, w = rng.randrange(len(ball)), rng.randrange(len(ball))
        assert ball.leq(x, w) == ag.bruhat_leq(ball.elements[x], ball.elements[w])


def test_kl_diagonal_and_incomparable(g2_ball, g2_table):
    ball, table = g2_ball, g2_table
    e = ag.identity(ball.system)
    assert kl.kl_polynomial(table, e, e) == (1,)
    s1 = ag.simple_reflection(ball.system, 1)
    s2 = ag.simple_reflection(ball.system, 2)
    assert kl.kl_polynomial(table, s1, s2) == ()
    outside = ag.translation_from_exponents(ball.system, (4, 4))
    with pytest.raises(ValueError, match="ball"):
        kl.kl_polynomial(table, e, outside)


def test_kl_covering_pairs_have_mu_one(g2_ball, g2_table):
    ball, table = g2_ball, g2_table
    count = 0
    for w in range(len(ball)):
        for x in range(len(ball)):
            if ball.leq(x, w) and ball.lengths[w] - ball.lengths[x] == 1:
                assert table.polynomial(x, w) == (1,)
                assert kl.mu_coefficient(
                    table, ball.elements[x], ball.elements[w]
                ) == 1
                count += 1
    assert count > 50


def test_mu_of_short_braid_pair_is_zero(g2_table):
    # P_{e, s1 s0 s1} = 1 inside the dihedral parabolic <s0, s1>, so the
    # degree-(l-1)/2 = 1 coefficient vanishes
    ball = g2_table.ball
    rs = ball.system
    e = ag.identity(rs)
    w = ag.from_word(rs, [1, 0, 1])
    assert kl.kl_polynomial(g2_table, e, w) == (1,)
    assert kl.mu_coefficient(g2_table, e, w) == 0
    assert not kl.edge(g2_table, e, w)


def test_edge_is_symmetric(g2_ball, g2_table):
    ball, table = g2_ball, g2_table
    rng = random.Random(22)
    for _ in range(80):
        x, w = rng.randrange(len(ball)), rng.randrange(len(ball))
        assert kl.edge(table, ball.elements[x], ball.elements[w]) == kl.edge(
            table, ball.elements[w], ball.elements[x]
        )


def test_degree_bound_everywhere(g2_ball, g2_table):
    for (x, w), p in g2_table.polys.items():
        if p:
            assert 2 * kl.poly_deg(p) <= g2_ball.lengths[w] - g2_ball.lengths[x] - 1


def test_recursion_determinism_and_inversion_symmetry(g2_ball):
    t_min = kl.compute_kl_table(g2_ball, descent_choice=min)
    t_max = kl.compute_kl_table(g2_ball, descent_choice=max)
    assert t_min.polys == t_max.polys
    for (x, w), p in t_min.polys.items():
        assert t_min.polynomial(g2_ball.inverse_of[x], g2_ball.inverse_of[w]) == p


def test_cell_graph_descent_sets_constant_on_components(g2_table):
    left = kl.cell_graph(g2_table, "left")
    right = kl.cell_graph(g2_table, "right")
    ball = g2_table.ball
    for comp in left.components:
        assert len({ball.right_desc[v] for v in comp}) == 1
    for comp in right.components:
        assert len({ball.left_desc[v] for v in comp}) == 1
    assert left.truncated and right.truncated
    with pytest.raises(ValueError, match="side"):
        kl.cell_graph(g2_table, "middle")


def test_singleton_identity_component(g2_table):
    left = kl.cell_graph(g2_table, "left")
    ball = g2_table.ball
    e_idx = ball.index[ag.identity(ball.system)]
    comp = left.components[left.component_of[e_idx]]
    assert comp == (e_idx,)


def test_two_sided_graph_respects_strict_a_increase(g2_table):
    # for z' - z with R(z') not within R(z) and L(z') not within L(z), the
    # pair never shares a component of the combined graph
    ball = g2_table.ball
    union_edges = {i: set() for i in range(len(ball))}
    for side in ("left", "right"):
        graph = kl.cell_graph(g2_table, side)
        for u, targets in graph.edges.items():
            union_edges[u].update(targets)
    comps = kl._tarjan(list(range(len(ball))), {k: sorted(v) for k, v in union_edges.items()})
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    for w in range(len(ball)):
        for z, _mu in g2_table.mu_partners[w]:
            for hi, lo in ((w, z), (z, w)):
                if (not ball.right_desc[hi] <= ball.right_desc[lo]
                        and not ball.left_desc[hi] <= ball.left_desc[lo]):
                    assert comp_of[hi] != comp_of[lo]


def test_distinguished_involutions(g2_table):
    ball = g2_table.ball
    rs = ball.system
    e = ag.identity(rs)
    ok, _ = kl.is_distinguished(g2_table, e, 0)
    assert ok
    s1 = ag.simple_reflection(rs, 1)
    ok, _ = kl.is_distinguished(g2_table, s1, 1)
    assert ok
    ok, reason = kl.is_distinguished(g2_table, ag.from_word(rs, [1, 2]), 1)
    assert not ok and "involution" in reason


def test_cache_round_trip_bit_exact(tmp_path, g2_ball, g2_table):
    buf = io.StringIO()
    kl.save_cache(buf, g2_table)
    text = buf.getvalue()
    loaded, warning = kl.load_cache(io.StringIO(text), g2_ball)
    assert warning is None
    assert loaded.polys == g2_table.polys
    assert [sorted(m) for m in loaded.mu_partners] == [
        sorted(m) for m in g2_table.mu_partners
    ]
    buf2 = io.StringIO()
    kl.save_cache(buf2, loaded)
    assert buf2.getvalue() == text


def test_cache_header_mismatch_ignored(g2_ball):
    other = kl.enumerate_ball(build("G2", 2), 6)
    table = kl.compute_kl_table(other)
    buf = io.StringIO()
    kl.save_cache(buf, table)
    loaded, warning = kl.load_cache(io.StringIO(buf.getvalue()), g2_ball)
    assert loaded is None and "stale" in warning

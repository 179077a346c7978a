"""Sign types, admissibility tables, verdicts, G2 normal forms, harness."""

import random
from itertools import product

import pytest

from weylcells import affine_group as ag
from weylcells import cell_membership as cm
from weylcells.cell_membership import Verdict
from weylcells.root_system import build


def test_sign_type_base_cases():
    rs = build("C", 3)
    assert cm.sign_type(ag.identity(rs)).serialize() == "o" * rs.nu
    for i in range(1, 4):
        st = cm.sign_type(ag.simple_reflection(rs, i))
        idx = rs.positive_index(rs.simple_roots[i - 1])
        assert st.signs[idx] == "-"
        assert all(c == "o" for j, c in enumerate(st.signs) if j != idx)
    strict = ag.translation_from_exponents(rs, (1, 1, 1))
    assert set(cm.sign_type(strict).signs) == {"+"}


def test_sign_type_rejects_extended_elements():
    rs = build("A", 2)
    g = ag.translation_from_exponents(rs, (1, 0))
    with pytest.raises(ValueError, match="affine"):
        cm.sign_type(g)


def test_sign_type_serialization_round_trip():
    rs = build("G2", 2)
    rng = random.Random(2)
    for _ in range(20):
        g = ag.from_word(rs, [rng.randrange(0, 3) for _ in range(rng.randrange(12))])
        st = cm.sign_type(g)
        assert cm.SignType.parse(rs, st.serialize()) == st


def test_table_counts_and_a2_symmetry():
    a2, b2 = cm._tables()
    assert len(a2) == 16
    assert len(b2) == 25
    assert {(b, a, c) for (a, b, c) in a2} == set(a2)
    # spot entries: all-circle and all-plus are admissible in both tables
    assert ("o", "o", "o") in a2 and ("+", "+", "+") in a2
    assert ("o", "o", "o", "o") in b2 and ("+", "+", "+", "+") in b2


def test_tables_match_the_coordinate_trace_model():
    """Re-derive both tables from scratch: k(t_lam u, c) = <lam, c^vee> + eps
    with eps = -1 exactly on an inversion trace of the rank-2 subsystem."""
    def sign(k):
        return "+" if k > 0 else "-" if k < 0 else "o"

    # A2: (a+b)^vee = a^vee + b^vee; traces are the six inversion sets
    a2_traces = [(), ("a",), ("b",), ("a", "ab"), ("b", "ab"), ("a", "b", "ab")]
    derived_a2 = set()
    for a in range(-3, 4):
        for b in range(-3, 4):
            for trace in a2_traces:
                ka = a - ("a" in trace)
                kb = b - ("b" in trace)
                kc = a + b - ("ab" in trace)
                derived_a2.add((sign(ka), sign(kb), sign(kc)))
    # B2 with s short, l long: (s+l)^vee = s^vee + 2 l^vee, (2s+l)^vee = s^vee + l^vee
    b2_traces = [
        (), ("s",), ("l",), ("s", "ssl"), ("l", "sl"),
        ("s", "sl", "ssl"), ("l", "sl", "ssl"), ("s", "l", "sl", "ssl"),
    ]
    derived_b2 = set()
    for a in range(-4, 5):
        for b in range(-4, 5):
            for trace in b2_traces:
                ks = a - ("s" in trace)
                kl = b - ("l" in trace)
                ksl = a + 2 * b - ("sl" in trace)
                kssl = a + b - ("ssl" in trace)
                derived_b2.add((sign(ks), sign(kl), sign(ksl), sign(kssl)))
    a2_table, b2_table = cm._tables()
    assert derived_a2 == set(a2_table)
    assert derived_b2 == set(b2_table)


def test_admissibility_examples():
    a2sys = build("A", 2)
    assert cm.is_admissible(cm.sign_type(ag.identity(a2sys)))
    all_plus = cm.sign_type(ag.translation_from_exponents(build("G2", 2), (1, 1)))
    assert cm.is_admissible(all_plus)
    # a plus pair below a minus on an A2 triple is not admissible
    (sub,) = cm.rank2_subsystems(a2sys)
    a, b, c = sub.roots
    signs = ["o"] * a2sys.nu
    signs[a2sys.positive_index(a)] = "+"
    signs[a2sys.positive_index(b)] = "+"
    signs[a2sys.positive_index(c)] = "-"
    assert not cm.is_admissible(cm.SignType(a2sys, tuple(signs)))


def test_rank2_subsystem_classification():
    assert [s.kind for s in cm.rank2_subsystems(build("A", 2))] == ["A2"]
    assert [s.kind for s in cm.rank2_subsystems(build("C", 2))] == ["B2"]
    assert [s.kind for s in cm.rank2_subsystems(build("G2", 2))] == ["G2"]
    kinds_b3 = sorted(s.kind for s in cm.rank2_subsystems(build("B", 3)))
    assert set(kinds_b3) == {"A2", "B2"}
    kinds_f4 = {s.kind for s in cm.rank2_subsystems(build("F4", 4))}
    assert kinds_f4 == {"A2", "B2"}
    for sub in cm.rank2_subsystems(build("F4", 4)):
        if sub.kind == "B2":
            s, l, sl, ssl = sub.roots
            assert tuple(x + y for x, y in zip(s, l)) == sl
            assert tuple(x + y for x, y in zip(s, sl)) == ssl


def test_lowest_cell_criterion_and_sign_type_link():
    rs = build("C", 2)
    rng = random.Random(4)
    for _ in range(40):
        g = ag.from_word(rs, [rng.randrange(0, 3) for _ in range(rng.randrange(12))])
        in_cell = cm.in_lowest_cell(g)
        assert in_cell == ("o" not in cm.sign_type(g).serialize())
    w0 = ag.longest_finite_element(rs)
    assert cm.in_lowest_cell(w0)
    assert set(ag.coordinate_form(w0)) == {-1}
    assert not cm.in_lowest_cell(ag.identity(rs))


def test_translation_verdicts_by_family():
    cases = [
        ("A", 3, (1, 0, 1), Verdict.IN_SECOND_LOWEST),
        ("A", 3, (1, 1, 1), Verdict.IN_LOWEST),
        ("A", 3, (0, 1, 0), Verdict.NOT_IN_EITHER),
        ("D", 4, (1, 1, 1, 0), Verdict.IN_SECOND_LOWEST),
        ("G2", 2, (2, 0), Verdict.IN_SECOND_LOWEST),
        ("G2", 2, (0, 2), Verdict.NOT_IN_EITHER),
        ("B", 4, (1, 1, 2, 0), Verdict.IN_SECOND_LOWEST),
        ("B", 4, (1, 1, 1, 0), Verdict.UNKNOWN),
        ("C", 3, (0, 1, 1), Verdict.IN_SECOND_LOWEST),
        ("C", 3, (0, 1, 0), Verdict.UNKNOWN),
        ("F4", 4, (1, 1, 2, 0), Verdict.IN_SECOND_LOWEST),
        ("F4", 4, (2, 1, 1, 0), Verdict.UNKNOWN),
    ]
    for fam, n, exps, want in cases:
        rs = build(fam, n)
        got = cm.translation_second_lowest(ag.translation_from_exponents(rs, exps))
        assert got.verdict is want, (fam, n, exps, got)


def test_verdict_rejects_non_dominant():
    rs = build("A", 2)
    lam = rs.reflect(rs.simple_roots[0], rs.fundamental_weights[0])
    with pytest.raises(ValueError, match="dominant"):
        cm.translation_second_lowest(ag.translation(rs, lam))


def test_a_value_table():
    assert cm.a_value_table("G2", 2) == 3
    assert cm.a_value_table("F4", 4) == 16
    assert cm.a_value_table("C", 4) == 10
    assert cm.a_value_table("B", 5) == 20
    assert cm.a_value_table("D", 5) == 13
    assert cm.a_value_table("A", 6) == 15
    assert cm.a_value_table("E8", 8) == 91


def test_g2_normal_form_examples():
    rs = build("G2", 2)
    core = ag.from_word(rs, [0, 1, 0])
    assert cm.g2_normal_form(core) == cm.G2CellIndex(1, 1, 0)
    x1sq = ag.translation_from_exponents(rs, (2, 0))
    assert cm.g2_normal_form(x1sq) == cm.G2CellIndex(6, 5, 0)
    assert cm.g2_normal_form(ag.identity(rs)) is None
    assert cm.g2_normal_form(ag.translation_from_exponents(rs, (1, 0))) is None


def test_g2_normal_form_injective_on_ball():
    rs = build("G2", 2)
    layers = ag.affine_ball_layers(rs, 11)
    seen = {}
    for layer in layers:
        for g in layer:
            nf = cm.g2_normal_form(g)
            if nf is not None:
                key = (nf.i, nf.j, nf.k)
                assert key not in seen
                seen[key] = g
    # reconstruction: the triple rebuilds the element
    units = cm._g2_units(rs)
    for (i, j, k), g in seen.items():
        rebuilt = ag.multiply(
            ag.multiply(units[i - 1], cm._g2_core(rs, k)), ag.inverse(units[j - 1])
        )
        assert rebuilt == g


def test_g2_cell_comparisons():
    rs = build("G2", 2)
    units = cm._g2_units(rs)

    def u(i, j, k):
        return ag.multiply(
            ag.multiply(units[i - 1], cm._g2_core(rs, k)), ag.inverse(units[j - 1])
        )

    assert cm.g2_same_left_cell(u(1, 4, 0), u(2, 4, 1))
    assert cm.g2_same_right_cell(u(3, 2, 1), u(3, 5, 0))
    assert not cm.g2_same_left_cell(u(3, 2, 1), u(3, 5, 0))
    assert not cm.g2_same_left_cell(u(1, 1, 0), u(2, 2, 0))
    assert not cm.g2_same_right_cell(u(1, 1, 0), u(2, 2, 0))
    with pytest.raises(ValueError, match="second lowest"):
        cm.g2_same_left_cell(ag.identity(rs), u(1, 1, 0))


def test_g2_same_left_cell_implies_equal_right_descents():
    rs = build("G2", 2)
    units = cm._g2_units(rs)

    def u(i, j, k):
        return ag.multiply(
            ag.multiply(units[i - 1], cm._g2_core(rs, k)), ag.inverse(units[j - 1])
        )

    for j in range(1, 7):
        group = [u(i, j, k) for i in range(1, 7) for k in range(2)]
        descents = {ag.right_descents(g) for g in group}
        assert len(descents) == 1


def test_lowest_cell_right_distinct_witnesses():
    rs = build("A", 2)
    x = ag.translation_from_exponents(rs, (1, 1))
    e = ag.identity(rs)
    s1 = ag.simple_reflection(rs, 1)
    found, witness = cm.lowest_cell_right_distinct(x, e, s1)
    assert found and witness == rs.simple_roots[0]
    g2 = build("G2", 2)
    xg = ag.translation_from_exponents(g2, (1, 1))
    s2 = ag.simple_reflection(g2, 2)
    found, witness = cm.lowest_cell_right_distinct(xg, ag.identity(g2), s2)
    assert found and witness in g2.simple_roots
    with pytest.raises(ValueError, match="differ"):
        cm.lowest_cell_right_distinct(x, e, e)


def test_lemma_4_2_families():
    for fam, n, k in [("A", 2, 1), ("A", 2, 2), ("B", 3, 3), ("G2", 2, 2), ("C", 3, 1)]:
        assert cm.lemma_4_2_check(build(fam, n), k)


def test_harness_g2_replay():
    rs = build("G2", 2)
    for a in (2, 3):
        x = ag.translation_from_exponents(rs, (a, 0))
        report = cm.conjecture_harness(x)
        assert report.consistent
        assert report.counts["conjugators"] == 6
        nfs = {tuple(e.evidence["normal_form"]) for e in report.entries}
        expected_pairs = {(6, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 6)}
        assert {(i, j) for (i, j, _k) in nfs} == expected_pairs
        for (i, j, k) in nfs:
            assert k == (2 * (a - 2) if (i, j) in {(6, 5), (5, 6)} else 2 * (a - 1))


def test_harness_a_family():
    rs = build("A", 2)
    x = ag.translation_from_exponents(rs, (1, 0))
    report = cm.conjecture_harness(x)
    assert report.consistent
    assert report.counts["conjugators"] == 3  # |S_3| / 2
    assert report.counts["distinct_conjugates"] == 3


def test_harness_b_family_thickening():
    rs = build("B", 3)
    x = ag.translation_from_exponents(rs, (1, 2, 0))
    report = cm.conjecture_harness(x)
    assert report.counts["conjugators"] == report.weyl_order // 2
    assert all(
        e.evidence["thickened_verdict"] == Verdict.IN_SECOND_LOWEST.value
        for e in report.entries
    )
    assert any("thickened" in w for w in report.warnings)


def test_harness_rejects_wrong_inputs():
    rs = build("G2", 2)
    with pytest.raises(ValueError, match="InSecondLowest"):
        cm.conjecture_harness(ag.translation_from_exponents(rs, (1, 1)))


def test_realized_sign_types_counts():
    assert len(cm.realized_sign_types(build("A", 2))) == 16
    assert len(cm.realized_sign_types(build("C", 2))) == 25
    assert len(cm.realized_sign_types(build("G2", 2))) == 49


@pytest.mark.parametrize("family,rank,bound", [("B", 3, 5), ("C", 3, 5), ("F4", 4, 4), ("A", 3, 5)])
def test_ball_sign_types_admissible(family, rank, bound):
    rs = build(family, rank)
    for layer in ag.affine_ball_layers(rs, bound):
        for g in layer:
            assert cm.is_admissible(cm.sign_type(g))

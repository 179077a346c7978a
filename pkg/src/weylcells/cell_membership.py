"""Decidable cell-membership criteria.

Sign types are the {+, o, -} shadow of the coordinate form; a sign type is
admissible when its restriction to every indecomposable rank-2 positive
subsystem matches the checked-in tables (A2 triples, B2 quadruples).  The
lowest two-sided cell is exactly the set of elements whose coordinate form is
nowhere zero; dominant translations are classified into the second lowest
two-sided cell family by family, with verdicts that never claim more than the
criterion that produced them proves.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from . import affine_group as ag
from .affine_group import GroupElement
from .root_system import RootSystem, Vector, dot, vadd, vneg, vsub

SIGNS = ("+", "o", "-")


def _sign(k: int) -> str:
    return "+" if k > 0 else "-" if k < 0 else "o"


@dataclass(frozen=True)
class SignType:
    """A map Phi+ -> {+, o, -} in the canonical positive-root order."""

    system: RootSystem
    signs: tuple[str, ...]

    def at(self, root: Vector) -> str:
        if self.system.is_positive_root(root):
            return self.signs[self.system.positive_index(root)]
        flip = {"+": "-", "-": "+", "o": "o"}
        return flip[self.signs[self.system.positive_index(vneg(root))]]

    def serialize(self) -> str:
        return "".join(self.signs)

    @classmethod
    def parse(cls, system: RootSystem, text: str) -> "SignType":
        if len(text) != system.nu or any(c not in SIGNS for c in text):
            raise ValueError(
                f"sign type for {system.family}{system.rank} must be "
                f"{system.nu} characters over +, o, -"
            )
        return cls(system, tuple(text))


def sign_type(g: GroupElement) -> SignType:
    """Sign of k(g, alpha) on every positive root; defined on W_a only."""
    if not ag.in_affine_part(g):
        raise ValueError(
            "sign types are defined on the affine Weyl group; "
            "this element has a nontrivial length-zero component"
        )
    kform = ag.coordinate_form(g)
    return SignType(g.system, tuple(_sign(k) for k in kform))


@lru_cache(maxsize=None)
def _tables() -> tuple[frozenset, frozenset]:
    raw = json.loads(
        resources.files("weylcells").joinpath("data/signtype_tables.json").read_text()
    )
    a2 = frozenset(tuple(t) for t in raw["a2"])
    b2 = frozenset(tuple(t) for t in raw["b2"])
    return a2, b2


@dataclass(frozen=True)
class Rank2Subsystem:
    kind: str                     # "A2" | "B2" | "G2"
    roots: tuple[Vector, ...]     # lookup order: A2 (a, b, a+b); B2 (s, l, s+l, 2s+l)


@lru_cache(maxsize=None)
def rank2_subsystems(system: RootSystem) -> tuple[Rank2Subsystem, ...]:
    """Indecomposable rank-2 positive subsystems Phi+ cut out by 2-planes."""
    positive = system.positive_roots

    def in_plane(gamma, a, b):
        # solve gamma = x a + y b via the 2x2 Gram system, then verify
        g11, g12, g22 = dot(a, a), dot(a, b), dot(b, b)
        r1, r2 = dot(gamma, a), dot(gamma, b)
        det = g11 * g22 - g12 * g12
        x = (r1 * g22 - r2 * g12) / det
        y = (g11 * r2 - g12 * r1) / det
        return vadd(tuple(x * c for c in a), tuple(y * c for c in b)) == gamma

    seen: set[frozenset] = set()
    out: list[Rank2Subsystem] = []
    for i, a in enumerate(positive):
        for b in positive[i + 1:]:
            members = tuple(g for g in positive if in_plane(g, a, b))
            key = frozenset(members)
            if key in seen or len(members) < 3:
                continue
            seen.add(key)
            sums = {
                vadd(u, v) for ui, u in enumerate(members) for v in members[ui + 1:]
            }
            simples = [m for m in members if m not in sums]
            if len(members) == 3:
                if len(simples) != 2:
                    raise AssertionError("rank-2 triple without two simples")
                s1, s2 = simples
                if vadd(s1, s2) not in key:
                    raise AssertionError("A2 plane whose simples do not sum to a root")
                out.append(Rank2Subsystem("A2", (s1, s2, vadd(s1, s2))))
            elif len(members) == 4:
                if len(simples) != 2:
                    raise AssertionError("rank-2 quadruple without two simples")
                short, long_ = sorted(simples, key=lambda r: dot(r, r))
                sl = vadd(short, long_)
                ssl = vadd(short, sl)
                if sl not in key or ssl not in key:
                    raise AssertionError("B2 plane missing s+l or 2s+l")
                out.append(Rank2Subsystem("B2", (short, long_, sl, ssl)))
            elif len(members) == 6:
                out.append(Rank2Subsystem("G2", members))
            else:
                raise AssertionError(f"rank-2 plane with {len(members)} positive roots")
    return tuple(out)


@lru_cache(maxsize=None)
def realized_sign_types(system: RootSystem, bound: Optional[int] = None) -> frozenset[str]:
    """All sign types realized by W_a elements of length <= bound.

    With bound None the enumeration radius grows until the realized set
    stabilizes across two consecutive radii, which captures the full finite
    set of realizable sign types for the rank-2 systems this is used on.
    """
    if bound is not None:
        layers = ag.affine_ball_layers(system, bound)
        return frozenset(
            sign_type(g).serialize() for layer in layers for g in layer
        )
    prev: Optional[frozenset] = None
    for radius in range(12, 26, 2):
        cur = realized_sign_types(system, radius)
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise AssertionError(f"sign types of {system.family}{system.rank} did not stabilize")


def is_admissible(st: SignType) -> bool:
    """Membership in the admissible-pattern tables on every rank-2 subsystem.

    G2-type planes (family G2 only) have no table; they fall back to the
    realized-set test, which by the surjectivity of the coordinate-form map
    agrees with admissibility.
    """
    a2, b2 = _tables()
    for sub in rank2_subsystems(st.system):
        if sub.kind == "A2":
            a, b, c = sub.roots
            if (st.at(a), st.at(b), st.at(c)) not in a2:
                return False
        elif sub.kind == "B2":
            s, l, sl, ssl = sub.roots
            if (st.at(s), st.at(l), st.at(sl), st.at(ssl)) not in b2:
                return False
        else:
            if st.serialize() not in realized_sign_types(st.system):
                return False
    return True


class Verdict(Enum):
    IN_LOWEST = "InLowest"
    IN_SECOND_LOWEST = "InSecondLowest"
    NOT_IN_EITHER = "NotInEither"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CellVerdict:
    verdict: Verdict
    criterion: str
    witness: dict = field(default_factory=dict)


def in_lowest_cell(g: GroupElement) -> bool:
    """Nowhere-zero coordinate form characterizes the lowest two-sided cell."""
    return all(k != 0 for k in ag.coordinate_form(g))


def a_value_table(family: str, rank: int) -> int:
    """a-function value on the second lowest two-sided cell, by family."""
    if family == "A":
        return rank * (rank - 1) // 2
    if family == "C":
        return rank * rank - 2 * rank + 2
    if family == "B":
        return rank * rank - rank
    if family == "D":
        return rank * rank - 3 * rank + 3
    fixed = {"E6": 25, "E7": 46, "E8": 91, "F4": 16, "G2": 3}
    if family in fixed:
        return fixed[family]
    raise ValueError(f"unknown family {family!r}")


def translation_second_lowest(x: GroupElement) -> CellVerdict:
    """Classify a dominant translation against the known translation families.

    Families with an if-and-only-if criterion (A, D, E: exactly one exponent
    zero; G2: x1^m with m >= 2) can return NOT_IN_EITHER; families with only
    a sufficient criterion (B, C, F4) return UNKNOWN outside it.
    """
    if not ag.is_dominant(x):
        raise ValueError("translation_second_lowest expects a dominant translation; "
                         "conjugate into the dominant chamber first")
    system = x.system
    exponents = system.weight_coefficients(x.translation)
    zeros = [i + 1 for i, a in enumerate(exponents) if a == 0]
    data = {"exponents": list(exponents)}

    if not zeros:
        return CellVerdict(Verdict.IN_LOWEST, "all exponents positive", data)
    if all(a == 0 for a in exponents):
        return CellVerdict(Verdict.NOT_IN_EITHER, "identity translation", data)

    family = system.family
    if family in ("A", "D", "E6", "E7", "E8"):
        if len(zeros) == 1:
            return CellVerdict(
                Verdict.IN_SECOND_LOWEST,
                "exactly one exponent zero, the rest positive (iff criterion)",
                {**data, "missing_index": zeros[0]},
            )
        return CellVerdict(
            Verdict.NOT_IN_EITHER,
            "two or more exponents zero (commuting-reflection exclusion)",
            {**data, "missing_indices": zeros},
        )
    if family == "G2":
        a1, a2 = exponents
        if a2 == 0 and a1 >= 2:
            return CellVerdict(
                Verdict.IN_SECOND_LOWEST,
                "power of the first fundamental translation, exponent >= 2 (iff criterion)",
                data,
            )
        return CellVerdict(
            Verdict.NOT_IN_EITHER,
            "outside the x1^m (m >= 2) family (iff criterion)",
            data,
        )
    if family == "B":
        n = system.rank
        if (
            exponents[n - 1] == 0
            and all(a >= 1 for a in exponents[: n - 2])
            and exponents[n - 2] >= 2
        ):
            return CellVerdict(
                Verdict.IN_SECOND_LOWEST,
                "B-family sufficient pattern: last exponent zero, next-to-last >= 2, rest >= 1",
                data,
            )
        return CellVerdict(Verdict.UNKNOWN, "outside the known sufficient family", data)
    if family == "C":
        if exponents[0] == 0 and all(a >= 1 for a in exponents[1:]):
            return CellVerdict(
                Verdict.IN_SECOND_LOWEST,
                "C-family sufficient pattern: first exponent zero, rest >= 1",
                data,
            )
        return CellVerdict(Verdict.UNKNOWN, "outside the known sufficient family", data)
    if family == "F4":
        a1, a2, a3, a4 = exponents
        if a4 == 0 and a1 >= 1 and a2 >= 1 and a3 >= 2:
            return CellVerdict(
                Verdict.IN_SECOND_LOWEST,
                "F4 sufficient pattern: fourth exponent zero, third >= 2, first two >= 1",
                data,
            )
        return CellVerdict(Verdict.UNKNOWN, "outside the known sufficient family", data)
    raise AssertionError(f"unhandled family {family}")


# ---------------------------------------------------------------------------
# G2: the second lowest cell in closed form


@dataclass(frozen=True)
class G2CellIndex:
    i: int
    j: int
    k: int


_G2_U_WORDS = ((), (2,), (1, 2), (2, 1, 2), (1, 2, 1, 2), (0, 1, 2, 1, 2))


@lru_cache(maxsize=None)
def _g2_units(system: RootSystem) -> tuple[GroupElement, ...]:
    return tuple(ag.from_word(system, w) for w in _G2_U_WORDS)


@lru_cache(maxsize=None)
def _g2_core(system: RootSystem, k: int) -> GroupElement:
    return ag.from_word(system, (0, 1, 0) + (2, 1, 0) * k)


def g2_normal_form(g: GroupElement) -> Optional[G2CellIndex]:
    """(i, j, k) with g = u_i (s0 s1 s0) (s2 s1 s0)^k u_j^-1, if it exists.

    Existence is equivalent to membership in the second lowest two-sided
    cell of the G2 affine Weyl group; the triple is unique when it exists.
    """
    system = g.system
    if system.family != "G2":
        raise ValueError("g2_normal_form is specific to the G2 family")
    if not ag.in_affine_part(g):
        raise ValueError("g2_normal_form expects an element of the affine Weyl group")
    units = _g2_units(system)
    matches = []
    lg = ag.length(g)
    for i, ui in enumerate(units, start=1):
        for j, uj in enumerate(units, start=1):
            core_len = lg - ag.length(ui) - ag.length(uj)
            # cores have length 3 + 3k; cheap necessary filter before products
            if core_len < 3 or (core_len - 3) % 3 != 0:
                continue
            k = (core_len - 3) // 3
            if g == ag.multiply(ag.multiply(ui, _g2_core(system, k)), ag.inverse(uj)):
                matches.append(G2CellIndex(i, j, k))
    if len(matches) > 1:
        raise AssertionError(f"normal form is not unique: {matches}")
    return matches[0] if matches else None


def g2_same_left_cell(a: GroupElement, b: GroupElement) -> bool:
    na, nb = g2_normal_form(a), g2_normal_form(b)
    if na is None or nb is None:
        raise ValueError("both elements must lie in the second lowest cell of G2")
    return na.j == nb.j


def g2_same_right_cell(a: GroupElement, b: GroupElement) -> bool:
    na, nb = g2_normal_form(a), g2_normal_form(b)
    if na is None or nb is None:
        raise ValueError("both elements must lie in the second lowest cell of G2")
    return na.i == nb.i


# ---------------------------------------------------------------------------
# Conjugation harness for the refined left-cell-count conjecture


@dataclass
class HarnessEntry:
    conjugator_word: tuple[int, ...]
    conjugate_exponents: Optional[tuple[int, ...]]
    evidence: dict


@dataclass
class HarnessReport:
    family: str
    rank: int
    exponents: tuple[int, ...]
    zero_index: int
    entries: list[HarnessEntry]
    weyl_order: int
    counts: dict
    warnings: list[str]
    consistent: bool


def conjecture_harness(x: GroupElement, cap: int = 2**20) -> HarnessReport:
    """Conjugate a second-lowest dominant translation over W0 and collect
    membership evidence and pairwise right-cell-distinctness certificates.

    Only conjugators w with w(alpha_k) > 0 are enumerated (k the missing
    exponent index); the other coset gives the same conjugates because s_k
    fixes x.
    """
    system = x.system
    verdict = translation_second_lowest(x)
    if verdict.verdict is not Verdict.IN_SECOND_LOWEST:
        raise ValueError(
            f"harness needs a translation classified InSecondLowest, got {verdict.verdict.value}"
        )
    exponents = tuple(system.weight_coefficients(x.translation))
    zeros = [i + 1 for i, a in enumerate(exponents) if a == 0]
    if len(zeros) != 1:
        raise ValueError("harness expects exactly one zero exponent")
    k = zeros[0]
    alpha_k = system.simple_roots[k - 1]

    w0_elements = ag.finite_weyl_elements(system, cap=cap)
    weyl_order = len(w0_elements)
    chosen = [
        w for w in w0_elements
        if system.is_positive_root(ag.mat_vec(w.matrix, alpha_k))
    ]

    family = system.family
    warnings: list[str] = []
    entries: list[HarnessEntry] = []
    conjugates: list[GroupElement] = []

    thickener = None
    if family not in ("G2", "A", "D", "E6", "E7", "E8"):
        thickener = ag.translation_from_exponents(
            system, tuple(0 if i + 1 == k else 1 for i in range(system.rank))
        )
        warnings.append(
            "membership of the bare conjugates is not decidable for this family; "
            "evidence covers the thickened conjugates w(x*x_Ik)w^-1 only"
        )

    mu_reference = None
    if family == "A":
        from . import type_a

        mu_reference = type_a.mu_partition(type_a.to_permutation(x))

    for w in chosen:
        conj = ag.multiply(ag.multiply(w, x), ag.inverse(w))
        conjugates.append(conj)
        _, w_word = ag.reduced_word(w)
        evidence: dict = {"not_in_lowest": not in_lowest_cell(conj)}
        if family == "G2":
            nf = g2_normal_form(conj)
            evidence["normal_form"] = None if nf is None else (nf.i, nf.j, nf.k)
        elif family == "A":
            from . import type_a

            mu = type_a.mu_partition(type_a.to_permutation(conj))
            evidence["mu"] = mu
            evidence["mu_matches_reference"] = mu == mu_reference
        else:
            thick = ag.multiply(ag.multiply(w, ag.multiply(x, thickener)), ag.inverse(w))
            _, dom = ag.make_dominant(thick)
            evidence["thickened_verdict"] = translation_second_lowest(dom).verdict.value
        _, dom_conj = ag.make_dominant(conj)
        entries.append(
            HarnessEntry(w_word, system.weight_coefficients(dom_conj.translation), evidence)
        )

    counts: dict = {
        "conjugators": len(chosen),
        "half_weyl_order": weyl_order // 2,
        "distinct_conjugates": len(set(conjugates)),
    }
    consistent = len(chosen) == weyl_order // 2
    consistent &= counts["distinct_conjugates"] == len(chosen)
    if family == "G2":
        i_indices = [e.evidence["normal_form"][0] for e in entries if e.evidence["normal_form"]]
        counts["distinct_right_indices"] = len(set(i_indices))
        consistent &= all(e.evidence["normal_form"] is not None for e in entries)
        consistent &= counts["distinct_right_indices"] == weyl_order // 2
    elif family == "A":
        consistent &= all(e.evidence["mu_matches_reference"] for e in entries)
        counts["mu_equal"] = sum(e.evidence["mu_matches_reference"] for e in entries)
    else:
        consistent &= all(
            e.evidence["thickened_verdict"] == Verdict.IN_SECOND_LOWEST.value
            for e in entries
        )
        warnings.append("pairwise right-cell distinctness recorded as consistent, not proved")
    consistent &= all(e.evidence["not_in_lowest"] for e in entries)
    return HarnessReport(
        family=family,
        rank=system.rank,
        exponents=exponents,
        zero_index=k,
        entries=entries,
        weyl_order=weyl_order,
        counts=counts,
        warnings=warnings,
        consistent=consistent,
    )


def lowest_cell_right_distinct(
    x: GroupElement, w: GroupElement, u: GroupElement
) -> tuple[bool, Vector]:
    """Witness root where the sign types of w x^-1 w^-1 and u x^-1 u^-1 differ.

    For strictly dominant x this certifies that the conjugates of x by w and
    u lie in different right cells of the lowest two-sided cell.
    """
    if w == u:
        raise ValueError("conjugators must differ")
    system = x.system
    if not ag.is_dominant(x):
        raise ValueError("x must be a dominant translation")
    exponents = system.weight_coefficients(x.translation)
    if any(a < 1 for a in exponents):
        raise ValueError("x must be strictly dominant (all exponents >= 1)")
    xinv = ag.inverse(x)
    kw = ag.coordinate_form(ag.multiply(ag.multiply(w, xinv), ag.inverse(w)))
    ku = ag.coordinate_form(ag.multiply(ag.multiply(u, xinv), ag.inverse(u)))
    for idx, alpha in enumerate(system.positive_roots):
        if _sign(kw[idx]) != _sign(ku[idx]):
            return True, alpha
    raise AssertionError("no witness root found; conjugators should act differently")


def lemma_4_2_check(system: RootSystem, k: int) -> bool:
    """x_Ik * s_k adds one letter, ends in the longest finite element, and
    lies in the lowest two-sided cell."""
    if not 1 <= k <= system.rank:
        raise ValueError(f"index {k} out of range 1..{system.rank}")
    x = ag.translation_from_exponents(
        system, tuple(0 if i + 1 == k else 1 for i in range(system.rank))
    )
    sk = ag.simple_reflection(system, k)
    w0 = ag.longest_finite_element(system)
    xsk = ag.multiply(x, sk)
    ok = ag.length(xsk) == ag.length(x) + 1
    ok &= ag.length(xsk) == ag.length(ag.multiply(xsk, w0)) + ag.length(w0)
    ok &= in_lowest_cell(xsk)
    return ok

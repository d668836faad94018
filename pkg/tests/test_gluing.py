"""Triangle gluings: conditions, search, glued objects, and their laws."""

import random

import pytest

from genutil import (
    random_arrangement,
    random_inner_cyclic,
    random_triangle_safe_combinatorics,
)
from zarpair.catalog import (
    extended_maclane_explicit,
    extended_maclane_realization,
    maclane_character,
    rybnikov_character,
    rybnikov_explicit,
)
from zarpair.characters import Character, is_inner_cyclic_def
from zarpair.combinatorics import (
    Combinatorics,
    NoTriangleError,
    apply_line_permutation,
    is_isomorphic,
    ordered_equal,
    triangle_cycle,
)
from zarpair.cyclotomic import CycloNum
from zarpair.gluing import (
    GluingSearchExhausted,
    GluingSpec,
    check_generic,
    check_gluing,
    find_generic_gluing,
    glue_arrangements,
    glue_characters,
    glue_combinatorics,
)
from zarpair.realization import Arrangement, ProjLine, ProjMap, derive_combinatorics

ZERO, ONE = CycloNum.zero(3), CycloNum.one(3)


def identity_map(order=3):
    one, zero = CycloNum.one(order), CycloNum.zero(order)
    return ProjMap([[one, zero, zero], [zero, one, zero], [zero, zero, one]])


def triangle_arrangement(order=3, names=("T1", "T2", "T3")):
    one, zero = CycloNum.one(order), CycloNum.zero(order)
    return Arrangement(
        order,
        [
            ProjLine(names[0], (one, zero, zero)),
            ProjLine(names[1], (zero, one, zero)),
            ProjLine(names[2], (zero, zero, one)),
        ],
    )


@pytest.fixture(scope="module")
def m_plus():
    return extended_maclane_realization("+")


@pytest.fixture(scope="module")
def m_minus():
    return extended_maclane_realization("-")


@pytest.fixture(scope="module")
def spec_pp(m_plus):
    return find_generic_gluing(m_plus, m_plus)


@pytest.fixture(scope="module")
def spec_pm(m_plus, m_minus):
    return find_generic_gluing(m_plus, m_minus)


class TestCheckGluing:
    def test_identity_self_gluing_full_overlap(self, m_plus):
        spec = GluingSpec(m_plus, m_plus, identity_map(), shared_count=9)
        assert check_gluing(spec)

    def test_found_gluing_passes(self, spec_pp):
        assert check_gluing(spec_pp)
        assert spec_pp.shared_count == 3

    def test_line_collision_fails(self, m_plus):
        # right arrangement with lines 4 and 5 swapped: the identity then
        # sends its line 4 onto left line 5
        swapped = Arrangement(
            3,
            [
                m_plus.line(1), m_plus.line(2), m_plus.line(3),
                m_plus.line(5), m_plus.line(4),
            ]
            + [m_plus.line(i) for i in range(6, 10)],
        )
        spec = GluingSpec(m_plus, swapped, identity_map(), shared_count=3)
        assert not check_gluing(spec)

    def test_concurrent_triangle_is_an_error(self):
        pencil = Arrangement(
            3,
            [
                ProjLine("P1", (ONE, ZERO, ZERO)),
                ProjLine("P2", (ONE, ONE, ZERO)),
                ProjLine("P3", (ONE, -ONE, ZERO)),
            ],
        )
        spec = GluingSpec(pencil, pencil, identity_map(), shared_count=3)
        with pytest.raises(NoTriangleError):
            check_gluing(spec)


class TestCheckGeneric:
    def test_found_gluings_are_generic(self, spec_pp, spec_pm):
        assert check_generic(spec_pp)
        assert check_generic(spec_pm)

    def test_identity_self_gluing_is_not_generic(self, m_plus):
        spec = GluingSpec(m_plus, m_plus, identity_map(), shared_count=9)
        assert not check_generic(spec)  # l != 3
        spec3 = GluingSpec(m_plus, m_plus, identity_map(), shared_count=3)
        assert not check_generic(spec3)  # every line and point collides

    def test_wrong_vertex_matching_fails(self, m_plus):
        # glue against the arrangement with lines 2 and 3 exchanged: the
        # vertex 1^2 of the right side lands on the vertex 1^3 of the left
        swapped = Arrangement(
            3,
            [m_plus.line(1), m_plus.line(3), m_plus.line(2)]
            + [m_plus.line(i) for i in range(4, 10)],
        )
        spec = find_generic_gluing(swapped, swapped)
        mismatched = GluingSpec(m_plus, swapped, spec.map, shared_count=3)
        assert not check_generic(mismatched)


class TestFindGenericGluing:
    def test_catalog_pairs_within_budget(self, spec_pp, spec_pm):
        assert spec_pp.parameter is not None
        assert spec_pm.parameter is not None

    def test_two_bare_triangles(self):
        spec = find_generic_gluing(triangle_arrangement(), triangle_arrangement())
        assert check_generic(spec)
        assert spec.parameter == (2, 3)  # nothing to collide: first pair works

    def test_exhaustion_is_reported(self, m_plus):
        with pytest.raises(GluingSearchExhausted):
            find_generic_gluing(m_plus, m_plus, max_candidates=0)

    def test_order_mismatch_rejected(self, m_plus):
        with pytest.raises(ValueError, match="order"):
            find_generic_gluing(m_plus, triangle_arrangement(order=6))

    def test_random_arrangements_glue(self):
        rng = random.Random(321)
        found = 0
        for _ in range(5):
            left = random_arrangement(rng, max_lines=5)
            right = random_arrangement(rng, max_lines=5)
            try:
                spec = find_generic_gluing(left, right)
            except NoTriangleError:
                continue  # generator may produce concurrent first triples
            assert check_generic(spec)
            # the arrangement-level and combinatorial gluings agree
            assert ordered_equal(
                derive_combinatorics(glue_arrangements(spec)),
                glue_combinatorics(
                    derive_combinatorics(left), derive_combinatorics(right)
                ),
            )
            found += 1
        assert found >= 2


class TestGlueArrangements:
    def test_rybnikov_pair(self, spec_pp, spec_pm):
        r_plus = glue_arrangements(spec_pp)
        r_minus = glue_arrangements(spec_pm)
        assert r_plus.n_lines == r_minus.n_lines == 15
        assert [l.name for l in r_plus.lines] == [f"D{i}" for i in range(1, 16)]
        explicit = rybnikov_explicit()
        assert ordered_equal(derive_combinatorics(r_plus), explicit)
        assert ordered_equal(derive_combinatorics(r_minus), explicit)

    def test_full_overlap_returns_left(self, m_plus):
        spec = GluingSpec(m_plus, m_plus, identity_map(), shared_count=9)
        glued = glue_arrangements(spec)
        assert glued.n_lines == 9
        assert [l.coeffs for l in glued.lines] == [l.coeffs for l in m_plus.lines]

    def test_failing_conditions_rejected(self, m_plus):
        spec = GluingSpec(m_plus, m_plus, identity_map(), shared_count=3)
        with pytest.raises(ValueError):
            glue_arrangements(spec)


class TestGlueCombinatorics:
    def test_reproduces_rybnikov(self):
        cm = extended_maclane_explicit()
        glued = glue_combinatorics(cm, cm)
        assert ordered_equal(glued, rybnikov_explicit())
        assert len(glued.points) == 14 + (14 - 3) + 6 * 6 == 61

    def test_two_bare_triangles(self):
        tri = Combinatorics(["A", "B", "C"], [[1, 2], [1, 3], [2, 3]])
        glued = glue_combinatorics(tri, tri)
        assert glued.n_lines == 3
        assert sorted(glued.points) == [(1, 2), (1, 3), (2, 3)]

    def test_concurrent_triangle_rejected(self):
        pencil = Combinatorics(["A", "B", "C", "D"], [[1, 2, 3], [1, 4], [2, 4], [3, 4]])
        tri = Combinatorics(["A", "B", "C"], [[1, 2], [1, 3], [2, 3]])
        with pytest.raises(NoTriangleError):
            glue_combinatorics(pencil, tri)

    def test_agrees_with_arrangement_gluing(self, spec_pm):
        left = derive_combinatorics(spec_pm.left)
        right = derive_combinatorics(spec_pm.right)
        assert ordered_equal(
            glue_combinatorics(left, right),
            derive_combinatorics(glue_arrangements(spec_pm)),
        )

    def test_point_count_identity_random(self):
        rng = random.Random(77)
        for _ in range(50):
            c1 = random_triangle_safe_combinatorics(rng)
            c2 = random_triangle_safe_combinatorics(rng)
            glued = glue_combinatorics(c1, c2)
            n, k = c1.n_lines, c2.n_lines
            assert glued.validate().ok
            # cross pairs swallowed by a shared vertex carrying extra lines
            overlap = sum(
                (len(c1.point_through(i, j)) - 2) * (len(c2.point_through(i, j)) - 2)
                for i, j in [(1, 2), (1, 3), (2, 3)]
            )
            assert len(glued.points) == len(c1.points) + len(c2.points) - 3 + (
                n - 3
            ) * (k - 3) - overlap
            if overlap == 0:
                # the plain identity, exact when the vertices are bare doubles
                assert len(glued.points) == len(c1.points) + len(
                    c2.points
                ) - 3 + (n - 3) * (k - 3)

    def test_unordered_commutativity_random(self):
        rng = random.Random(88)
        for _ in range(25):
            c1 = random_triangle_safe_combinatorics(rng, max_lines=6)
            c2 = random_triangle_safe_combinatorics(rng, max_lines=6)
            g12 = glue_combinatorics(c1, c2)
            g21 = glue_combinatorics(c2, c1)
            n, k = c1.n_lines, c2.n_lines
            # explicit witness: swap the two blocks of non-triangle lines
            witness = tuple(
                i if i <= 3 else (i + k - 3 if i <= n else i - n + 3)
                for i in range(1, n + k - 2)
            )
            assert ordered_equal(apply_line_permutation(g12, witness), g21)
            assert is_isomorphic(g12, g21) is not None


class TestGlueCharacters:
    def test_catalog_glued_character(self):
        xi = maclane_character()
        glued = glue_characters(xi, xi, 3)
        assert glued.exponents == (0, 0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 1, 2, 2, 2)
        assert glued.modulus == 3
        assert ordered_equal(glued.base, rybnikov_character().base)

    def test_trivial_glues_to_trivial(self):
        cm = extended_maclane_explicit()
        trivial = Character.trivial(cm, 3)
        glued = glue_characters(trivial, trivial, 3)
        assert all(e == 0 for e in glued.exponents)

    def test_mixed_moduli_reconciled_by_lcm(self):
        rng = random.Random(6)
        comb_a, char_a = random_inner_cyclic(rng)
        while char_a.modulus != 2:
            comb_a, char_a = random_inner_cyclic(rng)
        comb_b, char_b = random_inner_cyclic(rng)
        while char_b.modulus != 3:
            comb_b, char_b = random_inner_cyclic(rng)
        glued = glue_characters(char_a, char_b, 3)
        assert glued.modulus == 6
        n = comb_a.n_lines
        # values agree with the lifted factor values on both sides
        for i in range(4, n + 1):
            assert glued.value_on_line(i) == char_a.value_on_line(i).lift(6)
        for i in range(n + 1, glued.base.n_lines + 1):
            assert glued.value_on_line(i) == char_b.value_on_line(i - n + 3).lift(6)

    def test_product_one_holds_automatically(self):
        rng = random.Random(13)
        for _ in range(25):
            _, char_a = random_inner_cyclic(rng)
            _, char_b = random_inner_cyclic(rng)
            glued = glue_characters(char_a, char_b, 3)
            assert sum(glued.exponents) % glued.modulus == 0

    def test_length_mismatch_rejected(self):
        cm = extended_maclane_explicit()
        xi = maclane_character()
        with pytest.raises(ValueError):
            glue_characters(xi, xi, 3, base=cm)  # wrong target line count


def test_glued_triple_is_inner_cyclic_on_catalog():
    cr = rybnikov_explicit()
    chi = rybnikov_character()
    mu = triangle_cycle(cr, 1, 2, 3)
    assert is_inner_cyclic_def(cr, chi, mu)


def test_glued_triple_is_inner_cyclic_randomized():
    """Gluing two triangular inner-cyclic pairs stays inner-cyclic."""
    rng = random.Random(0xBEEF)
    for _ in range(60):
        comb_a, char_a = random_inner_cyclic(rng)
        comb_b, char_b = random_inner_cyclic(rng)
        glued = glue_characters(char_a, char_b, 3)
        mu = triangle_cycle(glued.base, 1, 2, 3)
        assert is_inner_cyclic_def(glued.base, glued, mu)

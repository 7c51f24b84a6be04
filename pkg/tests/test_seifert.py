"""Seifert invariants: parsing, validation, flows, closed form, equivalence."""

import random
from fractions import Fraction

import pytest

from nmshom import (
    HomologyGroup,
    IntegerMatrix,
    ParseError,
    SeifertInvariant,
    ValidationError,
    boundary_matrix,
    format_invariant,
    parse_invariant,
    seifert_equivalent,
)

from randgen import random_coprime_beta, random_invariant


def _codes(report):
    return [v.code for v in report.violations]


def _sum(invariant):
    return sum((Fraction(b, a) for a, b in invariant.pairs), Fraction(0))


class TestInvariantText:
    def test_parse_basic(self):
        inv = parse_invariant("2;1/2,1/3,1/5")
        assert inv.genus == 2
        assert inv.pairs == ((2, 1), (3, 1), (5, 1))

    def test_parse_tolerates_spaces_and_negatives(self):
        inv = parse_invariant(" 0 ; -3 / 2 , 7 / 1 ")
        assert inv.pairs == ((2, -3), (1, 7))

    def test_round_trip(self):
        rng = random.Random(401)
        for _ in range(40):
            inv = random_invariant(rng)
            assert parse_invariant(format_invariant(inv)) == inv

    def test_str_is_compact_form(self):
        assert str(SeifertInvariant(1, ((2, 1),))) == "1;1/2"

    def test_missing_semicolon(self):
        with pytest.raises(ParseError):
            parse_invariant("1/2,1/3")

    def test_bad_genus(self):
        with pytest.raises(ParseError):
            parse_invariant("x;1/2")

    def test_bad_pair(self):
        with pytest.raises(ParseError):
            parse_invariant("0;12")
        with pytest.raises(ParseError):
            parse_invariant("0;a/2")

    def test_empty_pair_list_parses_but_fails_validation(self):
        inv = parse_invariant("0;")
        assert inv.pairs == ()
        assert "empty-fiber-list" in _codes(inv.validate())


class TestValidation:
    def test_valid(self):
        assert parse_invariant("0;1/2,1/3").validate().ok
        assert parse_invariant("3;0/1").validate().ok

    def test_alpha_must_be_positive(self):
        assert "alpha-below-one" in _codes(SeifertInvariant(0, ((0, 1),)).validate())
        assert "alpha-below-one" in _codes(SeifertInvariant(0, ((-2, 1),)).validate())

    def test_coprimality_required(self):
        assert "non-coprime-pair" in _codes(parse_invariant("0;2/4").validate())

    def test_negative_genus_reported(self):
        assert "negative-genus" in _codes(parse_invariant("-1;1/2").validate())

    def test_operations_refuse_invalid_input(self):
        bad = parse_invariant("0;2/4")
        with pytest.raises(ValidationError):
            bad.homology_closed_form()
        with pytest.raises(ValidationError):
            bad.to_flow_complex()
        with pytest.raises(ValidationError):
            bad.normalized()
        with pytest.raises(ValidationError):
            seifert_equivalent(bad, bad)


class TestBoundaryMatrix:
    def test_three_fibers(self):
        m = boundary_matrix(parse_invariant("0;1/2,1/3,1/5"))
        assert m == IntegerMatrix.from_rows([[2, 0], [-3, 3], [0, -5]])

    def test_single_fiber_has_no_columns(self):
        m = boundary_matrix(parse_invariant("0;1/1"))
        assert (m.rows, m.cols) == (1, 0)

    def test_betas_do_not_enter(self):
        assert boundary_matrix(parse_invariant("0;1/2,1/3")) == boundary_matrix(
            parse_invariant("0;-5/2,4/3")
        )


class TestFlowConstruction:
    def test_single_trivial_fiber(self):
        fc = parse_invariant("0;1/1").to_flow_complex()
        assert fc.dimension == 3
        assert len(fc.orbits) == 2
        assert fc.incidences == ()
        assert [str(g) for g in fc.to_chain_complex().homology()] == ["Z", "0", "Z"]

    def test_orbit_counts(self):
        fc = parse_invariant("2;1/2,1/3,1/5").to_flow_complex()
        complex_ = fc.to_chain_complex()
        assert complex_.ranks == (3, 6, 1)

    def test_genus_pads_with_free_saddles(self):
        complex_ = parse_invariant("1;1/1,1/1").to_flow_complex().to_chain_complex()
        assert complex_.ranks == (2, 3, 1)
        assert complex_.boundary(1) == IntegerMatrix.from_rows([[1, 0, 0], [-1, 0, 0]])
        assert complex_.boundary(2) == IntegerMatrix.zeros(3, 1)

    def test_first_boundary_reproduces_boundary_matrix(self):
        rng = random.Random(409)
        for _ in range(25):
            inv = random_invariant(rng, min_pairs=2)
            complex_ = inv.to_flow_complex().to_chain_complex()
            expected = boundary_matrix(inv)
            m = len(inv.pairs)
            produced = complex_.boundary(1)
            trimmed = [list(produced.row(i))[: m - 1] for i in range(produced.rows)]
            assert IntegerMatrix.from_rows(trimmed, cols=m - 1) == expected
            extra = [list(produced.row(i))[m - 1 :] for i in range(produced.rows)]
            assert not any(any(row) for row in extra)

    def test_many_fibers_keep_construction_order(self):
        inv = SeifertInvariant(0, tuple((1, 0) for _ in range(12)))
        complex_ = inv.to_flow_complex().to_chain_complex()
        assert complex_.ranks == (12, 11, 1)
        assert complex_.boundary(1) == boundary_matrix(inv)
        assert complex_.generator_labels[0][0] == "o0_01"
        assert complex_.generator_labels[0][-1] == "o0_12"


class TestClosedForm:
    def test_coprime_family_matches_surface_homology(self):
        for genus in range(4):
            inv = parse_invariant(f"{genus};1/2,1/3,1/5")
            assert inv.homology_closed_form() == [
                HomologyGroup(0, 1),
                HomologyGroup(1, 2 * genus),
                HomologyGroup(2, 1),
            ]

    def test_torsion_examples(self):
        assert parse_invariant("0;1/2,1/4").homology_closed_form()[0] == HomologyGroup(0, 1, (2,))
        assert parse_invariant("0;1/6,1/10,1/15").homology_closed_form()[0] == HomologyGroup(
            0, 1, (30,)
        )
        assert parse_invariant("0;1/2,1/2").homology_closed_form()[0] == HomologyGroup(0, 1, (2,))

    def test_agrees_with_flow_pipeline(self):
        rng = random.Random(419)
        for _ in range(40):
            inv = random_invariant(rng)
            assert inv.to_flow_complex().to_chain_complex().homology() == inv.homology_closed_form()

    def test_betas_do_not_affect_homology(self):
        rng = random.Random(421)
        for _ in range(20):
            inv = random_invariant(rng)
            replaced = SeifertInvariant(
                inv.genus,
                tuple((a, random_coprime_beta(rng, a)) for a, _ in inv.pairs),
            )
            assert replaced.homology_closed_form() == inv.homology_closed_form()

    def test_euler_characteristic_is_surface_euler(self):
        rng = random.Random(431)
        for _ in range(20):
            inv = random_invariant(rng)
            complex_ = inv.to_flow_complex().to_chain_complex()
            assert complex_.euler_characteristic() == 2 - 2 * inv.genus


class TestNormalization:
    def test_known_forms(self):
        assert format_invariant(parse_invariant("0;3/2,1/3").normalized()) == "0;1/2,1/3,1/1"
        assert format_invariant(parse_invariant("0;1/2,0/1").normalized()) == "0;1/2,0/1"
        assert format_invariant(parse_invariant("0;1/2").normalized()) == "0;1/2,0/1"

    def test_idempotent(self):
        rng = random.Random(433)
        for _ in range(40):
            norm = random_invariant(rng).normalized()
            assert norm.normalized() == norm

    def test_preserves_sum_and_class(self):
        rng = random.Random(439)
        for _ in range(40):
            inv = random_invariant(rng)
            norm = inv.normalized()
            assert _sum(norm) == _sum(inv)
            assert norm.validate().ok
            assert seifert_equivalent(inv, norm)


class TestEquivalence:
    def test_reflexive_and_symmetric(self):
        rng = random.Random(443)
        for _ in range(25):
            first = random_invariant(rng)
            second = random_invariant(rng)
            assert seifert_equivalent(first, first)
            assert seifert_equivalent(first, second) == seifert_equivalent(second, first)

    def test_known_pairs(self):
        assert seifert_equivalent(parse_invariant("0;1/2,1/3"), parse_invariant("0;1/2,1/3"))
        assert not seifert_equivalent(parse_invariant("0;1/2,1/3"), parse_invariant("0;3/2,1/3"))
        assert seifert_equivalent(parse_invariant("0;1/2,0/1"), parse_invariant("0;1/2"))

    def test_genus_must_agree(self):
        assert not seifert_equivalent(parse_invariant("0;1/2"), parse_invariant("1;1/2"))

    def test_compensated_shift_keeps_class(self):
        base = parse_invariant("0;1/2,1/3,1/5")
        shifted = parse_invariant("0;3/2,-2/3,1/5")
        assert seifert_equivalent(base, shifted)
        assert base.normalized() == shifted.normalized()

    def test_uncompensated_shift_changes_class(self):
        base = parse_invariant("0;1/2,1/3")
        shifted = parse_invariant("0;1/2,4/3")
        assert not seifert_equivalent(base, shifted)
        assert base.normalized() != shifted.normalized()

    def test_trivial_pair_padding_keeps_class(self):
        base = parse_invariant("1;1/2,1/3")
        padded = parse_invariant("1;1/2,1/3,0/1,0/1")
        assert seifert_equivalent(base, padded)

    def test_permutation_keeps_class(self):
        rng = random.Random(449)
        for _ in range(25):
            inv = random_invariant(rng, min_pairs=2)
            pairs = list(inv.pairs)
            rng.shuffle(pairs)
            assert seifert_equivalent(inv, SeifertInvariant(inv.genus, tuple(pairs)))

    def test_matches_normal_form_identity(self):
        rng = random.Random(457)
        for _ in range(120):
            first = random_invariant(rng, max_pairs=4)
            second = random_invariant(rng, max_pairs=4)
            assert seifert_equivalent(first, second) == (first.normalized() == second.normalized())

    def test_repeated_alpha_residue_matching(self):
        first = parse_invariant("0;1/3,2/3")
        second = parse_invariant("0;2/3,1/3")
        assert seifert_equivalent(first, second)
        third = parse_invariant("0;1/3,1/3")
        assert not seifert_equivalent(first, third)

import random
from fractions import Fraction

import numpy as np
import pytest

from rankcalc import (
    MassFunction,
    MaximalDoubtError,
    NonContingentError,
    Proposition,
    RankcalcError,
    ScaleError,
    SurpriseFunction,
    TotalConflictError,
    belief_of,
    build_space,
    check_surprise_axioms,
    comparison_report,
    conditional_doubt,
    conflict_mass,
    dempster_combine,
    demonstrate_nonclosure,
    doubt_of,
    eval_formula,
    make_simple_support,
    rank_prop,
    ranking_from_world_ranks,
    ranking_to_surprise,
    surprise_conjunction_gap,
)


class TestSurprise:
    def test_reference_world_values(self, ranking2):
        surprise = ranking_to_surprise(ranking2)
        assert surprise.world_values == (
            Fraction(0), Fraction(2, 3), Fraction(1, 2), Fraction(3, 4))

    def test_axioms_pass_for_scaled_ranking(self, ranking2):
        assert check_surprise_axioms(ranking_to_surprise(ranking2)).ok

    def test_axioms_fail_when_empty_value_wrong(self, space2):
        surprise = SurpriseFunction(space2, (0, 0, 0, 0), empty_value=0)
        report = check_surprise_axioms(surprise)
        line = {l.name: l for l in report.lines}
        assert line["impossible-maximal-surprise"].violations == 1

    def test_vacuous_surprise_passes(self, space2):
        surprise = SurpriseFunction(space2, (0, 0, 0, 0))
        assert check_surprise_axioms(surprise).ok

    def test_negation_axiom_fails_without_zero_world(self, space2):
        surprise = SurpriseFunction(
            space2, (Fraction(1, 2), Fraction(1, 2),
                     Fraction(1, 2), Fraction(1, 2)))
        report = check_surprise_axioms(surprise)
        line = {l.name: l for l in report.lines}
        assert line["negation-law"].violations > 0

    def test_scale_validation(self, ranking2):
        with pytest.raises(ScaleError):
            ranking_to_surprise(ranking2, lambda n: Fraction(n, 3))  # hits 1
        with pytest.raises(ScaleError):
            ranking_to_surprise(ranking2, lambda n: Fraction(0))  # flat
        with pytest.raises(ScaleError):
            ranking_to_surprise(ranking2,
                                lambda n: Fraction(1, 2) + Fraction(n, 100))

    def test_order_preserved(self, ranking2, space2):
        surprise = ranking_to_surprise(ranking2)
        props = [Proposition(space2, m) for m in range(16)]
        for a in props:
            for b in props:
                assert ((surprise.value_of(a) <= surprise.value_of(b))
                        == _rank_le(ranking2, a, b))


def _rank_le(ranking, a, b):
    ra = rank_prop(ranking, a)
    rb = rank_prop(ranking, b)
    return rb is not None and ra <= rb


class TestConjunctionGap:
    def test_reference_disagreement(self, ranking2, space2):
        surprise = ranking_to_surprise(ranking2)
        report = surprise_conjunction_gap(
            surprise, ranking2,
            eval_formula(space2, "X=1"), eval_formula(space2, "Y=1"))
        assert not report.ok  # max-composition disagrees here
        note = report.lines[0].note
        assert "3/4" in note and "2/3" in note and "1/2" in note

    def test_full_condition_agrees(self, ranking2, space2):
        surprise = ranking_to_surprise(ranking2)
        for b_mask in range(1, 16):
            report = surprise_conjunction_gap(surprise, ranking2,
                                              space2.full,
                                              Proposition(space2, b_mask))
            assert report.ok

    def test_rank_zero_condition_boundary(self, space2):
        # when rank(A) = 0 the rule holds exactly when the scaled
        # conditional equals the scaled joint rank
        ranking = ranking_from_world_ranks(space2, (0, 1, 2, 3))
        surprise = ranking_to_surprise(ranking)
        a = eval_formula(space2, "X=0")  # rank 0
        for b_mask in range(1, 16):
            b = Proposition(space2, b_mask)
            if (a & b).is_empty:
                continue
            report = surprise_conjunction_gap(surprise, ranking, a, b)
            from rankcalc import cond_rank
            agrees = (surprise.scale(int(cond_rank(ranking, b, a)))
                      == surprise.value_of(a & b))
            assert report.ok == agrees

    def test_disjoint_pair_rejected(self, ranking2, space2):
        surprise = ranking_to_surprise(ranking2)
        with pytest.raises(NonContingentError):
            surprise_conjunction_gap(surprise, ranking2,
                                     space2.proposition([0]),
                                     space2.proposition([1]))


@pytest.fixture
def nested_mass(space2):
    return MassFunction(space2, {
        space2.proposition([0]): Fraction(1, 2),
        space2.proposition([0, 2]): Fraction(3, 10),
        space2.full: Fraction(1, 5),
    })


class TestBeliefAndDoubt:
    def test_belief_reference(self, nested_mass, space2):
        assert belief_of(nested_mass, space2.proposition([0, 2])) == Fraction(4, 5)

    def test_belief_of_full_is_one(self, nested_mass, space2):
        assert belief_of(nested_mass, space2.full) == 1

    def test_belief_of_empty_is_zero(self, nested_mass, space2):
        assert belief_of(nested_mass, space2.empty) == 0

    def test_doubt_reference(self, nested_mass, space2):
        assert doubt_of(nested_mass, space2.proposition([2, 3])) == Fraction(1, 2)

    def test_doubt_of_full_and_empty(self, nested_mass, space2):
        assert doubt_of(nested_mass, space2.full) == 0
        assert doubt_of(nested_mass, space2.empty) == 1

    def test_conditional_doubt_reference(self, nested_mass, space2):
        assert conditional_doubt(nested_mass, space2.proposition([0]),
                                 space2.proposition([0, 2])) == 0

    def test_conditional_doubt_superset_is_zero(self, nested_mass, space2):
        a = space2.proposition([0, 2])
        assert conditional_doubt(nested_mass, space2.full, a) == 0

    def test_conditional_doubt_on_full_reduces(self, nested_mass, space2):
        for mask in range(16):
            prop = Proposition(space2, mask)
            assert conditional_doubt(nested_mass, prop, space2.full) == \
                doubt_of(nested_mass, prop)

    def test_maximally_doubted_condition_rejected(self, space2):
        mass = MassFunction(space2, {space2.proposition([0, 1]): Fraction(1)})
        with pytest.raises(MaximalDoubtError):
            conditional_doubt(mass, space2.full, space2.proposition([2, 3]))


class TestMassFunction:
    def test_masses_must_sum_to_one(self, space2):
        with pytest.raises(RankcalcError):
            MassFunction(space2, {space2.full: Fraction(1, 2)})

    def test_no_mass_on_empty(self, space2):
        with pytest.raises(RankcalcError):
            MassFunction(space2, {space2.empty: Fraction(1, 2),
                                  space2.full: Fraction(1, 2)})

    def test_consonance(self, nested_mass, space2):
        assert nested_mass.is_consonant()
        flat = MassFunction(space2, {space2.proposition([0]): Fraction(1, 2),
                                     space2.proposition([1]): Fraction(1, 2)})
        assert not flat.is_consonant()

    def test_consonance_matches_doubt_axioms_exhaustively(self):
        # a mass function is consonant exactly when its doubt function
        # satisfies the negation and disjunction axioms; checked for every
        # focal structure on a 4-world space with generic masses
        space = build_space([("X", ("0", "1")), ("Y", ("0", "1"))])
        focal_candidates = [Proposition(space, m) for m in range(1, 16)]
        incl = np.array([[f.issubset(Proposition(space, p)) for p in range(16)]
                         for f in focal_candidates], dtype=np.int64)
        weights = np.array([1 << i for i in range(15)], dtype=np.int64)
        nested = np.array([[a.issubset(b) or b.issubset(a)
                            for b in focal_candidates]
                           for a in focal_candidates], dtype=bool)
        and_table = np.array([[c & d for d in range(16)] for c in range(16)])
        for family in range(1, 1 << 15):
            members = [i for i in range(15) if family >> i & 1]
            bel = (weights[members, None] * incl[members, :]).sum(axis=0)
            consonant = all(nested[i][j] for i in members for j in members)
            # negation: doubt(A) = bel(~A); min(doubt(A), doubt(~A)) == 0
            neg_ok = bool((np.minimum(bel, bel[::-1]) == 0).all())
            # disjunction on beliefs: bel(C & D) == min(bel(C), bel(D))
            dis_ok = bool((bel[and_table]
                           == np.minimum(bel[:, None], bel[None, :])).all())
            assert consonant == (neg_ok and dis_ok), family

    def test_focal_sets_sorted(self, nested_mass, space2):
        assert [p.mask for p in nested_mass.focal_sets] == [0b0001, 0b0101, 0b1111]


class TestDempster:
    def test_reference_combination(self, nested_mass, space2):
        support = make_simple_support(space2, eval_formula(space2, "X=1"),
                                      Fraction(1, 2))
        assert conflict_mass(nested_mass, support) == Fraction(1, 4)
        combined = dempster_combine(nested_mass, support)
        expected = {
            space2.proposition([0]): Fraction(1, 3),
            space2.proposition([2]): Fraction(1, 5),
            space2.proposition([0, 2]): Fraction(1, 5),
            space2.proposition([2, 3]): Fraction(2, 15),
            space2.full: Fraction(2, 15),
        }
        assert combined.masses == expected
        assert not combined.is_consonant()

    def test_vacuous_is_neutral(self, nested_mass, space2):
        vacuous = MassFunction(space2, {space2.full: Fraction(1)})
        assert dempster_combine(nested_mass, vacuous) == nested_mass
        assert dempster_combine(vacuous, vacuous) == vacuous

    def test_commutative(self, space2):
        rng = random.Random(9)
        for _ in range(30):
            m1 = _random_mass(space2, rng)
            m2 = _random_mass(space2, rng)
            if conflict_mass(m1, m2) == 1:
                continue
            assert dempster_combine(m1, m2) == dempster_combine(m2, m1)

    def test_total_conflict_rejected(self, space2):
        m1 = MassFunction(space2, {space2.proposition([0, 1]): Fraction(1)})
        m2 = MassFunction(space2, {space2.proposition([2, 3]): Fraction(1)})
        with pytest.raises(TotalConflictError):
            dempster_combine(m1, m2)


def _random_mass(space, rng):
    count = rng.randrange(1, 4)
    masks = rng.sample(range(1, space.full_mask + 1), count)
    raw = [Fraction(rng.randrange(1, 5)) for _ in masks]
    total = sum(raw)
    return MassFunction(space, {Proposition(space, m): v / total
                                for m, v in zip(masks, raw)})


class TestSimpleSupport:
    def test_reference_masses(self, space2):
        support = make_simple_support(space2, eval_formula(space2, "X=1"),
                                      Fraction(1, 2))
        assert support.masses == {
            space2.proposition([2, 3]): Fraction(1, 2),
            space2.full: Fraction(1, 2),
        }

    def test_boundary_strengths_rejected(self, space2):
        prop = eval_formula(space2, "X=1")
        for bad in (0, 1, Fraction(3, 2), -1):
            with pytest.raises(RankcalcError):
                make_simple_support(space2, prop, bad)

    def test_non_contingent_rejected(self, space2):
        with pytest.raises(NonContingentError):
            make_simple_support(space2, space2.full, Fraction(1, 2))

    def test_belief_values_match_definition(self, space2):
        prop = eval_formula(space2, "X=1")
        s = Fraction(2, 7)
        support = make_simple_support(space2, prop, s)
        for mask in range(16):
            b = Proposition(space2, mask)
            if b.is_full:
                expected = Fraction(1)
            elif prop.issubset(b):
                expected = s
            else:
                expected = Fraction(0)
            assert belief_of(support, b) == expected


class TestNonclosure:
    def test_pinned_witness_on_four_worlds(self, space2):
        witness = demonstrate_nonclosure(space2)
        assert witness is not None
        assert witness.consonant.masses == {
            space2.proposition([0]): Fraction(1, 2),
            space2.proposition([0, 2]): Fraction(3, 10),
            space2.full: Fraction(1, 5),
        }
        assert witness.support.masses == {
            space2.proposition([2, 3]): Fraction(1, 2),
            space2.full: Fraction(1, 2),
        }
        assert witness.conflict == Fraction(1, 4)
        first, second = witness.focal_pair
        assert first.members() == (0,)
        assert second.members() == (2,)

    def test_witness_revalidates(self, space2):
        witness = demonstrate_nonclosure(space2)
        assert witness.consonant.is_consonant()
        assert not witness.combined.is_consonant()
        assert witness.combined == dempster_combine(witness.consonant,
                                                    witness.support)

    def test_single_world_space_has_no_witness(self):
        space = build_space([("X", ("only",))])
        assert demonstrate_nonclosure(space) is None

    def test_larger_space_still_finds_witness(self):
        space = build_space([("X", ("a", "b", "c")), ("Y", ("0", "1"))])
        witness = demonstrate_nonclosure(space)
        assert witness is not None
        assert witness.consonant.is_consonant()
        assert not witness.combined.is_consonant()


class TestComparisonReport:
    def test_reference_ranking_report(self, ranking2):
        report = comparison_report(ranking2)
        assert report.ok
        names = [line.name for line in report.lines]
        assert "consonance-nonclosure" in names
        assert "ranking-revision-closure" in names
        assert "max-composition-conjunction-gap" in names
        nonclosure = next(l for l in report.lines
                          if l.name == "consonance-nonclosure")
        assert "not nested" in nonclosure.note

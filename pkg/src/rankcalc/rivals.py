"""Rival gradings of disbelief, made executable for comparison.

Two formalisms live here, both in exact rational arithmetic:

* potential-surprise functions: [0,1]-valued disbelief gradings obeying
  maximal surprise for the impossible, the negation law and the min rule
  for disjunction, plus the max-composition rule for conjunction that the
  surprise calculus proposes but never grounds in a conditional notion;
* belief functions given by basic mass assignments, with Dempster's rule
  of combination, consonance (nested focal sets), simple support
  functions, and degrees of doubt.

The headline contrasts: a strictly increasing bounded scale turns any
ranking into a surprise function that satisfies the surprise axioms but
breaks the max-composition conjunction rule; and combining a consonant
mass with a simple support mass can leave consonance, while ranking
revision never leaves the space of rankings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Tuple

from .errors import (
    MaximalDoubtError,
    NonContingentError,
    RankcalcError,
    ScaleError,
    TotalConflictError,
)
from .ranking import RankingFunction, cond_rank
from .report import Report
from .space import Proposition, Space, check_same_space


def default_scale(rank: int) -> Fraction:
    """The canonical rank-to-surprise scale n/(n+1): strictly increasing,
    0 at 0, never reaching 1."""
    return Fraction(rank, rank + 1)


class SurpriseFunction:
    """[0,1]-valued grading of disbelief stored world-level with the min
    rule; the empty proposition's value is stored separately so invalid
    gradings can be constructed and then caught by the axiom checks."""

    __slots__ = ("space", "world_values", "empty_value", "scale")

    def __init__(self, space: Space, world_values, empty_value=Fraction(1),
                 scale: Optional[Callable[[int], Fraction]] = None):
        world_values = tuple(Fraction(v) for v in world_values)
        if len(world_values) != space.n_worlds:
            raise RankcalcError("expected %d world values" % space.n_worlds)
        for v in world_values:
            if not 0 <= v <= 1:
                raise RankcalcError("surprise values live in [0,1], got %s" % v)
        empty_value = Fraction(empty_value)
        if not 0 <= empty_value <= 1:
            raise RankcalcError("surprise values live in [0,1]")
        self.space = space
        self.world_values = world_values
        self.empty_value = empty_value
        self.scale = scale

    def value_of(self, prop: Proposition) -> Fraction:
        check_same_space(self, prop)
        if prop.is_empty:
            return self.empty_value
        return min(self.world_values[w] for w in prop.members())

    def __repr__(self):
        return "SurpriseFunction(%s)" % ", ".join(
            "%s:%s" % (self.space.world_str(i), v)
            for i, v in enumerate(self.world_values))


def check_surprise_axioms(surprise: SurpriseFunction) -> Report:
    """Verify the three surprise axioms over every proposition (pair):
    maximal surprise of the impossible, the negation law, and the min rule
    for disjunction."""
    space = surprise.space
    size = 1 << space.n_worlds
    if space.n_worlds > 12:
        raise RankcalcError("axiom sweep supports at most 12 worlds")
    values = [surprise.value_of(Proposition(space, m)) for m in range(size)]
    full = size - 1
    report = Report("surprise axioms")

    bad = 0 if values[0] == 1 else 1
    report.add("impossible-maximal-surprise", 1,
               "" if not bad else "value of the empty proposition is %s" % values[0],
               bad)

    neg_bad = 0
    neg_note = ""
    for m in range(size):
        if min(values[m], values[full ^ m]) != 0:
            neg_bad += 1
            neg_note = neg_note or ("mask %d: min(%s, %s) != 0"
                                    % (m, values[m], values[full ^ m]))
    report.add("negation-law", size, neg_note, neg_bad)

    dis_bad = 0
    dis_note = ""
    for a in range(size):
        for b in range(size):
            if values[a | b] != min(values[a], values[b]):
                dis_bad += 1
                dis_note = dis_note or (
                    "masks %d, %d: %s vs min(%s, %s)"
                    % (a, b, values[a | b], values[a], values[b]))
    report.add("disjunction-min-law", size * size, dis_note, dis_bad)
    return report


def ranking_to_surprise(ranking: RankingFunction,
                        scale: Callable[[int], Fraction] = default_scale
                        ) -> SurpriseFunction:
    """Map ranks through a strictly increasing scale with scale(0) = 0 and
    all values below 1; the result satisfies the surprise axioms by
    construction, with the empty proposition pinned at 1.

    The scale is validated on the ranks actually used (0 through the
    ranking's maximum): no finite rank may reach surprise 1, because a
    maximal degree of disbelief would be incorrigible under every revision
    rule.
    """
    top = ranking.max_rank
    values = [Fraction(scale(r)) for r in range(top + 1)]
    if values[0] != 0:
        raise ScaleError("scale(0) must be 0, got %s" % values[0])
    for i in range(top):
        if values[i + 1] <= values[i]:
            raise ScaleError("scale must be strictly increasing")
    if values[top] >= 1:
        raise ScaleError(
            "scale reaches %s at rank %d; only the impossible may have "
            "maximal surprise" % (values[top], top))
    return SurpriseFunction(
        ranking.space,
        [values[r] for r in ranking.world_ranks],
        empty_value=Fraction(1),
        scale=scale,
    )


def surprise_conjunction_gap(surprise: SurpriseFunction,
                             ranking: RankingFunction,
                             a: Proposition, b: Proposition) -> Report:
    """Test the max-composition conjunction rule y(A&B) = max(y(A), y(B|A))
    against the rank-derived candidate y(B|A) := scale(cond_rank(B|A)).

    The surprise calculus never defines y(B|A); plugging in the scaled
    conditional rank exposes where max-composition disagrees with the
    additive conjunction law of rankings.
    """
    check_same_space(surprise, a)
    check_same_space(surprise, b)
    if (a & b).is_empty:
        raise NonContingentError("conjunction gap needs overlapping A and B")
    if surprise.scale is None:
        raise ScaleError("surprise function carries no scale; derive it "
                         "from a ranking first")
    scale = surprise.scale
    y_ab = surprise.value_of(a & b)
    y_a = surprise.value_of(a)
    cond = cond_rank(ranking, b, a)
    y_b_given_a = Fraction(scale(int(cond)))
    composed = max(y_a, y_b_given_a)
    holds = composed == y_ab
    report = Report("conjunction rule comparison")
    report.add(
        "max-composition-conjunction",
        1,
        "y(A&B)=%s, max(y(A), y(B|A))=max(%s, %s)=%s -> %s"
        % (y_ab, y_a, y_b_given_a, composed,
           "agrees" if holds else "disagrees"),
        0 if holds else 1,
    )
    return report


class MassFunction:
    """Basic mass assignment: positive rational masses on non-empty focal
    sets, summing to one."""

    __slots__ = ("space", "masses")

    def __init__(self, space: Space, masses: Mapping[Proposition, object]):
        clean = {}
        total = Fraction(0)
        for prop, mass in masses.items():
            check_same_space(prop, space.full)
            mass = Fraction(mass)
            if mass < 0:
                raise RankcalcError("negative mass on %r" % (prop,))
            if mass == 0:
                continue
            if prop.is_empty:
                raise RankcalcError("mass on the empty proposition")
            clean[prop] = clean.get(prop, Fraction(0)) + mass
            total += mass
        if total != 1:
            raise RankcalcError("masses must sum to 1, got %s" % total)
        self.space = space
        self.masses = clean

    @property
    def focal_sets(self):
        return sorted(self.masses, key=lambda p: (p.size, p.mask))

    def is_consonant(self) -> bool:
        """Focal sets totally ordered by inclusion."""
        chain = self.focal_sets
        for smaller, larger in zip(chain, chain[1:]):
            if not smaller.issubset(larger):
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, MassFunction)
                and self.space == other.space and self.masses == other.masses)

    def __repr__(self):
        body = ", ".join("%r: %s" % (p, m)
                         for p, m in sorted(self.masses.items(),
                                            key=lambda kv: (kv[0].size, kv[0].mask)))
        return "MassFunction(%s)" % body


def belief_of(mass: MassFunction, prop: Proposition) -> Fraction:
    """Total mass of focal sets contained in the proposition."""
    check_same_space(prop, mass.space.full)
    return sum((m for p, m in mass.masses.items() if p.issubset(prop)),
               Fraction(0))


def doubt_of(mass: MassFunction, prop: Proposition) -> Fraction:
    """Degree of doubt: belief in the complement."""
    return belief_of(mass, prop.complement())


def conditional_doubt(mass: MassFunction, prop: Proposition,
                      given: Proposition) -> Fraction:
    """Conditional doubt (y(A&B) - y(A)) / (1 - y(A)) with y = doubt."""
    y_given = doubt_of(mass, given)
    if y_given == 1:
        raise MaximalDoubtError(
            "conditional doubt undefined: the condition is maximally doubted")
    y_joint = doubt_of(mass, prop & given)
    return (y_joint - y_given) / (1 - y_given)


def dempster_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Dempster's rule: normalized products of masses on intersections.

    The conflict mass (products landing on the empty set) is discarded by
    renormalization; total conflict is an error.
    """
    if m1.space != m2.space:
        raise RankcalcError("mass functions over different spaces")
    combined = {}
    conflict = Fraction(0)
    for p1, v1 in m1.masses.items():
        for p2, v2 in m2.masses.items():
            cut = p1 & p2
            product = v1 * v2
            if cut.is_empty:
                conflict += product
            else:
                combined[cut] = combined.get(cut, Fraction(0)) + product
    if conflict == 1:
        raise TotalConflictError("total conflict: every focal pair is disjoint")
    norm = 1 - conflict
    return MassFunction(m1.space, {p: v / norm for p, v in combined.items()})


def conflict_mass(m1: MassFunction, m2: MassFunction) -> Fraction:
    """The mass Dempster combination discards."""
    if m1.space != m2.space:
        raise RankcalcError("mass functions over different spaces")
    return sum((v1 * v2
                for p1, v1 in m1.masses.items()
                for p2, v2 in m2.masses.items()
                if (p1 & p2).is_empty), Fraction(0))


def make_simple_support(space: Space, prop: Proposition, s) -> MassFunction:
    """Simple support: mass s on a contingent proposition, 1-s on the whole
    space; the unique mass function giving belief s to every proper
    superset of the support and 1 to the whole space."""
    s = Fraction(s)
    if not 0 < s < 1:
        raise RankcalcError("support strength must satisfy 0 < s < 1, got %s" % s)
    if not prop.is_contingent:
        raise NonContingentError("simple support needs a contingent proposition")
    check_same_space(prop, space.full)
    return MassFunction(space, {prop: s, space.full: 1 - s})


@dataclass(frozen=True)
class NonclosureWitness:
    """Consonant mass whose Dempster combination with a simple support is
    no longer consonant."""
    consonant: MassFunction
    support: MassFunction
    combined: MassFunction
    conflict: Fraction
    focal_pair: Tuple[Proposition, Proposition]


def _first_non_nested_pair(mass: MassFunction):
    chain = mass.focal_sets
    for i, smaller in enumerate(chain):
        for larger in chain[i + 1:]:
            if not smaller.issubset(larger) and not larger.issubset(smaller):
                return (smaller, larger)
    return None


def _chain_mass(space, u, v):
    """Nested chain {u} in {u,v} in W with masses 1/2, 3/10, 1/5
    (accumulated, since {u,v} may coincide with W on two-world spaces)."""
    masses = {}
    for prop, value in ((space.proposition([u]), Fraction(1, 2)),
                        (space.proposition([u, v]), Fraction(3, 10)),
                        (space.full, Fraction(1, 5))):
        masses[prop] = masses.get(prop, Fraction(0)) + value
    return MassFunction(space, masses)


def _canonical_candidates(space):
    """Deterministic candidate stream: the canonical nested-chain /
    simple-support pairing built from the first variable first (the
    documented regression witness on the four-world space), then a grid
    over world pairs and support sets."""
    first_name, first_domain = space.variables[0]
    if len(first_domain) >= 2 and space.n_worlds >= 4:
        other_value = space.value_mask(first_name, 1)
        v = (other_value & -other_value).bit_length() - 1
        support_set = Proposition(space, other_value)
        if support_set.is_contingent:
            yield (_chain_mass(space, 0, v),
                   make_simple_support(space, support_set, Fraction(1, 2)))
    for u in range(space.n_worlds):
        for v in range(space.n_worlds):
            if u == v:
                continue
            chain = _chain_mass(space, u, v)
            for support_mask in range(1, space.full_mask):
                support_set = Proposition(space, support_mask)
                yield chain, make_simple_support(space, support_set,
                                                 Fraction(1, 2))


def demonstrate_nonclosure(space: Space) -> Optional[NonclosureWitness]:
    """Search deterministically for a consonant mass and simple support
    whose combination has non-nested focal sets.

    Returns None on spaces too small to carry a witness; raises loudly if
    a space with at least four worlds yields none (that would contradict
    the non-closure of consonance under this dynamics).
    """
    if space.n_worlds < 2:
        return None
    for consonant, support in _canonical_candidates(space):
        if not consonant.is_consonant():
            continue
        if conflict_mass(consonant, support) == 1:
            continue
        combined = dempster_combine(consonant, support)
        pair = _first_non_nested_pair(combined)
        if pair is not None:
            return NonclosureWitness(consonant, support, combined,
                                     conflict_mass(consonant, support), pair)
    if space.n_worlds >= 4:
        raise RankcalcError(
            "no non-closure witness found on %r; consonance appears closed "
            "here, which contradicts the expected dynamics" % (space,))
    return None


def comparison_report(ranking: RankingFunction) -> Report:
    """Side-by-side comparison: the ranking passes the surprise axioms
    after scaling, the max-composition conjunction rule breaks on it, and
    Dempster dynamics leaves consonance while ranking revision stays
    closed."""
    from .revision import conditionalize  # local import avoids a cycle

    report = Report("rival formalisms")
    space = ranking.space

    surprise = ranking_to_surprise(ranking)
    if space.n_worlds <= 8:
        report.extend(check_surprise_axioms(surprise))
    else:
        report.add("surprise-axioms", 0,
                   "space too large for the exhaustive axiom sweep", 0)

    gap = _first_conjunction_gap(surprise, ranking)
    if gap is None:
        report.add("max-composition-conjunction-gap", 1,
                   "no disagreeing overlapping pair on this ranking", 0)
    else:
        a, b, y_ab, composed = gap
        report.add(
            "max-composition-conjunction-gap", 1,
            "A=%r, B=%r: y(A&B)=%s but max-composition gives %s"
            % (a, b, y_ab, composed), 0)

    witness = demonstrate_nonclosure(space)
    if witness is None:
        report.add("consonance-nonclosure", 1,
                   "space too small for a witness", 0)
    else:
        first, second = witness.focal_pair
        report.add(
            "consonance-nonclosure", 1,
            "combined focal sets %r and %r are not nested (conflict %s)"
            % (first, second, witness.conflict), 0)

    closure_bad = 0
    closure_note = ""
    trials = 0
    for mask in _contingent_masks(space, limit=256):
        for weight in (0, 1, 2):
            trials += 1
            try:
                conditionalize(ranking, Proposition(space, mask), weight)
            except RankcalcError as exc:
                closure_bad += 1
                closure_note = closure_note or str(exc)
    report.add("ranking-revision-closure", trials, closure_note, closure_bad)
    return report


def _contingent_masks(space, limit):
    """All contingent masks in ascending order, or a seeded sample when the
    space is too large to enumerate."""
    full = space.full_mask
    if full - 1 <= limit:
        return range(1, full)
    import random
    rng = random.Random(0xD1CE)
    return sorted({rng.randrange(1, full) for _ in range(limit)})


def _first_conjunction_gap(surprise, ranking):
    """First overlapping contingent pair where max-composition disagrees
    with the scaled ranks, in ascending mask order (seeded sample on large
    spaces); None if none is found."""
    space = ranking.space
    masks = list(_contingent_masks(space, limit=64))
    for a_mask in masks:
        for b_mask in masks:
            if a_mask & b_mask == 0:
                continue
            a = Proposition(space, a_mask)
            b = Proposition(space, b_mask)
            y_ab = surprise.value_of(a & b)
            cond = cond_rank(ranking, b, a)
            composed = max(surprise.value_of(a),
                           Fraction(surprise.scale(int(cond))))
            if composed != y_ab:
                return (a, b, y_ab, composed)
    return None

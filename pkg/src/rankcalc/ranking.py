"""Ranking functions: graded disbelief over a finite possibility space.

A ranking function assigns every world a natural-number rank with minimum 0
and is constant on the atoms of its measurability field.  Rank 0 means "not
disbelieved"; higher ranks mean firmer disbelief.  The rank of a non-empty
proposition is the minimum rank of its worlds; the empty proposition gets
the TOP extension (documented here: the calculus itself never assigns a
rank to the impossible proposition, TOP is this package's uniform closure
of the min/plus laws).
"""

from __future__ import annotations

from typing import Mapping, Sequence, Union

from . import _kernels
from .errors import (
    EmptyConditionError,
    LawViolationError,
    MeasurabilityError,
    NonContingentError,
    NormalizationError,
    PartitionError,
)
from .extnat import TOP, ExtNat, ext_min, is_top
from .space import PartitionField, Proposition, Space, check_same_space


class RankingFunction:
    """Total map world -> natural rank, minimum 0, constant on field atoms."""

    __slots__ = ("space", "world_ranks", "field", "_mask_table")

    def __init__(self, space: Space, world_ranks: Sequence[int],
                 field: PartitionField = None):
        world_ranks = tuple(world_ranks)
        if len(world_ranks) != space.n_worlds:
            raise NormalizationError(
                "expected %d world ranks, got %d" % (space.n_worlds, len(world_ranks)))
        for rank in world_ranks:
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
                raise NormalizationError("world ranks must be naturals, got %r" % (rank,))
        lowest = min(world_ranks)
        if lowest != 0:
            raise NormalizationError(
                "minimum world rank must be 0, found %d" % lowest, minimum=lowest)
        if field is None:
            field = PartitionField.discrete(space)
        elif field.space != space:
            raise MeasurabilityError("measurability field over a different space")
        if not field.is_discrete:
            for atom in field.atoms:
                members = atom.members()
                first = world_ranks[members[0]]
                for w in members[1:]:
                    if world_ranks[w] != first:
                        raise MeasurabilityError(
                            "ranks differ inside atom %r" % (atom,))
        self.space = space
        self.world_ranks = world_ranks
        self.field = field
        self._mask_table = None

    def rank_of_world(self, index) -> int:
        return self.world_ranks[index]

    @property
    def max_rank(self) -> int:
        return max(self.world_ranks)

    def __eq__(self, other):
        return (isinstance(other, RankingFunction)
                and self.space == other.space
                and self.world_ranks == other.world_ranks
                and self.field == other.field)

    def __hash__(self):
        return hash((self.space, self.world_ranks, self.field))

    def __repr__(self):
        return "RankingFunction(%s)" % ", ".join(
            "%s:%d" % (self.space.world_str(i), r)
            for i, r in enumerate(self.world_ranks))


def make_ranking(space: Space, field: PartitionField,
                 atom_ranks: Union[Mapping, Sequence[int]]) -> RankingFunction:
    """Build a ranking from per-atom ranks.

    ``atom_ranks`` is either a mapping keyed by the field's atoms or a
    sequence aligned with ``field.atoms``.  Every atom must be assigned and
    the minimum assigned rank must be 0.
    """
    if field.space != space:
        raise MeasurabilityError("field over a different space")
    if isinstance(atom_ranks, Mapping):
        ranks = []
        for atom in field.atoms:
            if atom not in atom_ranks:
                raise PartitionError("missing rank for atom %r" % (atom,))
            ranks.append(atom_ranks[atom])
        if len(atom_ranks) != len(field.atoms):
            raise PartitionError("rank assignment names non-atoms of the field")
    else:
        ranks = list(atom_ranks)
        if len(ranks) != len(field.atoms):
            raise PartitionError(
                "expected %d atom ranks, got %d" % (len(field.atoms), len(ranks)))
    world_ranks = [0] * space.n_worlds
    for atom, rank in zip(field.atoms, ranks):
        for w in atom.members():
            world_ranks[w] = rank
    return RankingFunction(space, world_ranks, field)


def ranking_from_world_ranks(space: Space, world_ranks) -> RankingFunction:
    """Ranking measurable with respect to the discrete field."""
    return RankingFunction(space, world_ranks)


def mask_rank_table(ranking: RankingFunction):
    """Cached per-mask rank table (kernel sweep format), or None when the
    space is too large to enumerate propositions."""
    if ranking.space.n_worlds > _kernels.MAX_SWEEP_WORLDS:
        return None
    if ranking.max_rank > _kernels.MAX_KERNEL_RANK:
        return None
    if ranking._mask_table is None:
        ranking._mask_table = _kernels.rank_table(ranking.world_ranks)
    return ranking._mask_table


def rank_prop(ranking: RankingFunction, prop: Proposition) -> ExtNat:
    """Minimum world rank over the proposition; TOP for the empty one."""
    check_same_space(ranking, prop)
    return ext_min(ranking.world_ranks[w] for w in prop.members())


def believes(ranking: RankingFunction, prop: Proposition) -> bool:
    """True iff the complement is disbelieved (its rank is positive)."""
    check_same_space(ranking, prop)
    return rank_prop(ranking, prop.complement()) > 0


def belief_core(ranking: RankingFunction) -> Proposition:
    """The non-empty set of rank-0 worlds; A is believed iff core <= A."""
    mask = 0
    for w, rank in enumerate(ranking.world_ranks):
        if rank == 0:
            mask |= 1 << w
    return Proposition(ranking.space, mask)


def firmness(ranking: RankingFunction, prop: Proposition) -> int:
    """Signed strength of belief in a contingent proposition.

    Positive: believed true with that firmness; negative: believed false;
    zero: neither.  Undefined (an error) for the empty and full propositions.
    """
    if not prop.is_contingent:
        raise NonContingentError("firmness is defined for contingent propositions only")
    rank = rank_prop(ranking, prop)
    if rank == 0:
        return int(rank_prop(ranking, prop.complement()))
    return -int(rank)


def cond_rank(ranking: RankingFunction, prop: Proposition,
              given: Proposition) -> ExtNat:
    """Conditional rank: rank(prop & given) - rank(given); TOP if disjoint."""
    check_same_space(ranking, prop)
    check_same_space(ranking, given)
    if given.is_empty:
        raise EmptyConditionError("conditioning on the empty proposition")
    joint = rank_prop(ranking, prop & given)
    if is_top(joint):
        return TOP
    return joint - rank_prop(ranking, given)


def part_of(ranking: RankingFunction, prop: Proposition) -> dict:
    """The restriction of the ranking to ``prop``, renormalized to minimum 0.

    Returns {world index: conditional rank} over the members of ``prop``.
    """
    check_same_space(ranking, prop)
    if prop.is_empty:
        raise EmptyConditionError("the empty proposition has no part")
    base = rank_prop(ranking, prop)
    return {w: ranking.world_ranks[w] - base for w in prop.members()}


def total_rank(ranking: RankingFunction, partition: PartitionField,
               prop: Proposition) -> ExtNat:
    """Rank of ``prop`` computed through a partition (law of total rank).

    Returns min over atoms of rank(atom) + rank(prop | atom), and checks
    that it equals the direct rank.
    """
    check_same_space(ranking, partition)
    check_same_space(ranking, prop)
    value = ext_min(
        rank_prop(ranking, atom) + cond_rank(ranking, prop, atom)
        for atom in partition.atoms)
    direct = rank_prop(ranking, prop)
    if value != direct:
        raise LawViolationError(
            "total-rank law broken: partition route %r, direct %r" % (value, direct))
    return value


def bayes_rank(ranking: RankingFunction, partition: PartitionField,
               q: int, prop: Proposition) -> ExtNat:
    """Conditional rank of the q-th atom given ``prop``, via the rank
    analogue of Bayes' theorem; checked against the direct conditional."""
    check_same_space(ranking, partition)
    check_same_space(ranking, prop)
    if prop.is_empty:
        raise EmptyConditionError("conditioning on the empty proposition")
    if not 0 <= q < len(partition.atoms):
        raise PartitionError("atom index %d out of range" % q)
    terms = [rank_prop(ranking, atom) + cond_rank(ranking, prop, atom)
             for atom in partition.atoms]
    term_q = terms[q]
    if is_top(term_q):
        value = TOP
    else:
        value = term_q - ext_min(terms)
    direct = cond_rank(ranking, partition.atoms[q], prop)
    if value != direct:
        raise LawViolationError(
            "rank Bayes law broken: partition route %r, direct %r" % (value, direct))
    return value

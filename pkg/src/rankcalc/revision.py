"""Belief dynamics: conditionalization on a proposition with an evidence
weight, and Jeffrey-style conditionalization on a whole evidence field.

Both operations only shift the parts of the ranking relative to one
another; the grading of disbelief inside each evidence cell is preserved.
Results are always valid ranking functions (the dynamics is closed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .errors import NonContingentError, NormalizationError, RevisionStepError
from .ranking import RankingFunction, belief_core, firmness, rank_prop
from .space import PartitionField, Proposition, check_same_space


class EvidenceRanking:
    """Prescribed post-revision ranks for the atoms of an evidence field.

    It is itself a ranking on its field: the minimum atom rank must be 0.
    """

    __slots__ = ("field", "atom_ranks")

    def __init__(self, field: PartitionField, atom_ranks: Sequence[int]):
        atom_ranks = tuple(atom_ranks)
        if len(atom_ranks) != len(field.atoms):
            raise NormalizationError(
                "expected %d atom ranks, got %d" % (len(field.atoms), len(atom_ranks)))
        for rank in atom_ranks:
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
                raise NormalizationError("atom ranks must be naturals, got %r" % (rank,))
        if min(atom_ranks) != 0:
            raise NormalizationError(
                "minimum evidence rank must be 0, found %d" % min(atom_ranks),
                minimum=min(atom_ranks))
        self.field = field
        self.atom_ranks = atom_ranks

    @property
    def space(self):
        return self.field.space

    def __eq__(self, other):
        return (isinstance(other, EvidenceRanking)
                and self.field == other.field
                and self.atom_ranks == other.atom_ranks)

    def __repr__(self):
        return "EvidenceRanking(%s)" % ", ".join(
            "%r:%d" % (atom, rank)
            for atom, rank in zip(self.field.atoms, self.atom_ranks))


def conditionalize(ranking: RankingFunction, prop: Proposition,
                   weight: int) -> RankingFunction:
    """Shift the ranking so ``prop`` holds rank 0 and its complement rank
    ``weight``, preserving both parts.

    ``weight`` 0 suspends judgment: afterwards ``prop`` is neither believed
    nor disbelieved.
    """
    check_same_space(ranking, prop)
    if not prop.is_contingent:
        raise NonContingentError(
            "conditionalization requires a contingent proposition")
    if not isinstance(weight, int) or isinstance(weight, bool) or weight < 0:
        raise NormalizationError("evidence weight must be a natural, got %r" % (weight,))
    inside = rank_prop(ranking, prop)
    outside = rank_prop(ranking, prop.complement())
    mask = prop.mask
    new_ranks = [
        rank - inside if (mask >> w) & 1 else weight + rank - outside
        for w, rank in enumerate(ranking.world_ranks)
    ]
    field = ranking.field.refine(
        PartitionField(ranking.space, (prop, prop.complement())))
    return RankingFunction(ranking.space, new_ranks, field)


def jeffrey_conditionalize(ranking: RankingFunction,
                           evidence: EvidenceRanking) -> RankingFunction:
    """Give each atom of the evidence field its prescribed rank, shifting
    the atoms' parts relative to one another without reordering inside."""
    check_same_space(ranking, evidence)
    new_ranks = [0] * ranking.space.n_worlds
    for atom, target in zip(evidence.field.atoms, evidence.atom_ranks):
        base = rank_prop(ranking, atom)
        for w in atom.members():
            new_ranks[w] = target + ranking.world_ranks[w] - base
    field = ranking.field.refine(evidence.field)
    return RankingFunction(ranking.space, new_ranks, field)


RevisionStep = Union[Tuple[Proposition, int], EvidenceRanking]


@dataclass(frozen=True)
class TraceEntry:
    """One revision step: what was applied and where belief then stood."""
    index: int
    description: str
    core: Proposition
    target_firmness: Optional[int]
    atom_ranks: Optional[Tuple[int, ...]]


def revision_sequence(ranking: RankingFunction,
                      steps: Sequence[RevisionStep]):
    """Left-to-right fold of revision steps.

    Each step is either ``(proposition, weight)`` or an EvidenceRanking.
    Returns ``(final ranking, trace)``; the first invalid step aborts with
    its index.
    """
    trace = []
    current = ranking
    for i, step in enumerate(steps):
        try:
            if isinstance(step, EvidenceRanking):
                current = jeffrey_conditionalize(current, step)
                achieved = tuple(rank_prop(current, atom)
                                 for atom in step.field.atoms)
                entry = TraceEntry(i, "evidence field (%d atoms)" % len(step.field),
                                   belief_core(current), None, achieved)
            else:
                prop, weight = step
                current = conditionalize(current, prop, weight)
                entry = TraceEntry(i, "on %r weight %d" % (prop, weight),
                                   belief_core(current),
                                   firmness(current, prop), None)
        except Exception as exc:
            raise RevisionStepError(i, exc) from exc
        trace.append(entry)
    return current, trace

"""Rank independence of fields and propositions.

Two fields are independent when the rank of every intersection of
non-empty members splits additively.  The check quantifies over all
members (unions of atoms), not just atom pairs: exhaustively when both
fields have at most EXHAUSTIVE_ATOM_LIMIT atoms, otherwise all atom pairs
plus a seeded sample of member pairs (the result reports which regime
ran).  Members with empty intersection force dependence: their
intersection ranks TOP, which no finite sum matches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Tuple

from . import _kernels
from .errors import (
    EmptyConditionError,
    NonContingentError,
    PartitionError,
    SearchBoundError,
)
from .extnat import TOP, ExtNat
from .ranking import RankingFunction, mask_rank_table, rank_prop
from .space import (
    PartitionField,
    Proposition,
    Space,
    build_space,
    check_same_space,
    field_of_proposition,
    subfield_of_variables,
)

EXHAUSTIVE_ATOM_LIMIT = 12
SAMPLED_PAIRS = 2048
_SAMPLE_SEED = 0x5EED


def _ext(value: int) -> ExtNat:
    return TOP if value >= _kernels.INF else int(value)


@dataclass(frozen=True)
class AdditivityWitness:
    """A member pair whose ranks do not split additively."""
    left: Proposition
    right: Proposition
    given: Optional[Proposition]
    joint_rank: ExtNat
    split_rank: ExtNat

    def render(self) -> str:
        given = "" if self.given is None else " given %r" % (self.given,)
        return ("rank(B&C%s)=%r but rank(B%s)+rank(C%s)=%r for B=%r, C=%r"
                % (given, self.joint_rank, given, given, self.split_rank,
                   self.left, self.right))


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    regime: str  # "exhaustive" or "sampled"
    witness: Optional[AdditivityWitness]


def _mask_rank(ranking, mask, lookup) -> int:
    """Rank of a world mask with the INF sentinel for the empty mask."""
    if mask == 0:
        return _kernels.INF
    if lookup is not None:
        return int(lookup[mask])
    return min(ranking.world_ranks[w] for w in _bit_indices(mask))


def _cond_atom_ranks(ranking, atoms, given_mask, given_rank, lookup):
    """Conditional rank of each atom (INF sentinel for empty overlap)."""
    out = []
    for atom in atoms:
        value = _mask_rank(ranking, atom.mask & given_mask, lookup)
        out.append(value if value >= _kernels.INF else value - given_rank)
    return out


def _pair_rank_table(ranking, atoms1, atoms2, given_mask, given_rank, lookup):
    table = []
    for a in atoms1:
        row = []
        for b in atoms2:
            value = _mask_rank(ranking, a.mask & b.mask & given_mask, lookup)
            row.append(value if value >= _kernels.INF else value - given_rank)
        table.append(row)
    return table


def independence_report(ranking: RankingFunction, first: PartitionField,
                        second: PartitionField,
                        given: Optional[Proposition] = None) -> IndependenceResult:
    """Full additivity check between two fields, optionally conditional on
    a non-empty proposition."""
    check_same_space(ranking, first)
    check_same_space(ranking, second)
    if given is not None:
        check_same_space(ranking, given)
        if given.is_empty:
            raise EmptyConditionError("conditioning on the empty proposition")
        given_mask = given.mask
        given_rank = rank_prop(ranking, given)
    else:
        given_mask = ranking.space.full_mask
        given_rank = 0

    lookup = mask_rank_table(ranking)
    atoms1 = first.atoms
    atoms2 = second.atoms
    r1 = _cond_atom_ranks(ranking, atoms1, given_mask, given_rank, lookup)
    r2 = _cond_atom_ranks(ranking, atoms2, given_mask, given_rank, lookup)
    table = _pair_rank_table(ranking, atoms1, atoms2, given_mask, given_rank, lookup)

    if (len(atoms1) <= EXHAUSTIVE_ATOM_LIMIT
            and len(atoms2) <= EXHAUSTIVE_ATOM_LIMIT):
        ok, s, t, lhs, rhs = _kernels.additivity_check(table, r1, r2)
        if ok:
            return IndependenceResult(True, "exhaustive", None)
        witness = AdditivityWitness(first.member(s), second.member(t), given,
                                    _ext(lhs), _ext(rhs))
        return IndependenceResult(False, "exhaustive", witness)

    # Sampled regime: all atom pairs, then seeded random member unions.
    def split_value(sub1, sub2):
        joint = min((table[a][b]
                     for a in _bit_indices(sub1) for b in _bit_indices(sub2)),
                    default=_kernels.INF)
        left = min((r1[a] for a in _bit_indices(sub1)), default=_kernels.INF)
        right = min((r2[b] for b in _bit_indices(sub2)), default=_kernels.INF)
        return joint, min(left + right, _kernels.INF)

    for a in range(len(atoms1)):
        for b in range(len(atoms2)):
            joint, split = split_value(1 << a, 1 << b)
            if joint != split:
                witness = AdditivityWitness(atoms1[a], atoms2[b], given,
                                            _ext(joint), _ext(split))
                return IndependenceResult(False, "sampled", witness)
    rng = random.Random(_SAMPLE_SEED)
    top1 = (1 << len(atoms1)) - 1
    top2 = (1 << len(atoms2)) - 1
    for _ in range(SAMPLED_PAIRS):
        sub1 = rng.randrange(1, top1 + 1)
        sub2 = rng.randrange(1, top2 + 1)
        joint, split = split_value(sub1, sub2)
        if joint != split:
            witness = AdditivityWitness(first.member(sub1), second.member(sub2),
                                        given, _ext(joint), _ext(split))
            return IndependenceResult(False, "sampled", witness)
    return IndependenceResult(True, "sampled", None)


def _bit_indices(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def independent(ranking: RankingFunction, first: PartitionField,
                second: PartitionField) -> bool:
    """Additivity of ranks across all non-empty members of the two fields."""
    return independence_report(ranking, first, second).independent


def cond_independent_on_prop(ranking: RankingFunction, first: PartitionField,
                             second: PartitionField,
                             given: Proposition) -> bool:
    """Additivity of conditional ranks given a non-empty proposition."""
    return independence_report(ranking, first, second, given).independent


def cond_independent_on_field(ranking: RankingFunction, first: PartitionField,
                              second: PartitionField,
                              given: PartitionField) -> bool:
    """Conditional independence on every atom of the conditioning field."""
    check_same_space(ranking, given)
    return all(
        independence_report(ranking, first, second, atom).independent
        for atom in given.atoms)


def independent_props(ranking: RankingFunction, first: Proposition,
                      second: Proposition) -> bool:
    """Field independence specialized to two contingent propositions."""
    if not first.is_contingent or not second.is_contingent:
        raise NonContingentError(
            "proposition independence requires contingent propositions")
    return independent(ranking, field_of_proposition(first),
                       field_of_proposition(second))


def _prop_indep_allow_full(ranking, prop, other) -> bool:
    """Proposition independence where ``prop`` may be the full space (the
    trivial field is independent of everything)."""
    if prop.is_full:
        return True
    return independent_props(ranking, prop, other)


@dataclass(frozen=True)
class UnionLawCheck:
    holds: bool
    proviso_met: bool


def check_union_law(ranking: RankingFunction, a: Proposition, b: Proposition,
                    c: Proposition) -> UnionLawCheck:
    """Union law: if A,C are independent and A,B are disjoint, then B,C are
    independent iff (A|B),C are independent.

    ``proviso_met`` is the antecedent; ``holds`` is the biconditional.  The
    union A|B may be the full space, in which case it counts as trivially
    independent of C.
    """
    for prop in (a, b, c):
        if not prop.is_contingent:
            raise NonContingentError("union law needs contingent A, B, C")
    check_same_space(ranking, a)
    union = a | b
    proviso = (a & b).is_empty and independent_props(ranking, a, c)
    bc = independent_props(ranking, b, c)
    union_c = _prop_indep_allow_full(ranking, union, c)
    return UnionLawCheck(holds=(bc == union_c), proviso_met=proviso)


@dataclass(frozen=True)
class ProvisoWitness:
    """Overlapping A,B with A,C and B,C independent but A|B,C dependent."""
    space: Space
    world_ranks: Tuple[int, ...]
    a: Proposition
    b: Proposition
    c: Proposition

    @property
    def ranking(self) -> RankingFunction:
        return RankingFunction(self.space, self.world_ranks)


MAX_SEARCH_WORLDS = 8
MAX_SEARCH_RANK = 3


def _search_spaces(world_bound):
    """Spaces searched, smallest first: the one-world space, then products
    of binary variables up to the bound."""
    if world_bound >= 1:
        yield build_space([("V1", ("0",))])
    n_vars = 1
    while (1 << n_vars) <= world_bound:
        yield build_space([("V%d" % (i + 1), ("0", "1")) for i in range(n_vars)])
        n_vars += 1


def find_proviso_counterexample(world_bound: int, max_rank: int = MAX_SEARCH_RANK):
    """Deterministic search for a triple showing the union law needs its
    disjointness proviso.

    Scans spaces smallest first, rank vectors in lexicographic order,
    triples in ascending mask order; returns the first witness where A,C
    and B,C are independent, A overlaps B, and A|B,C are dependent.
    Returns None when the bounded search space is exhausted.
    """
    if world_bound > MAX_SEARCH_WORLDS or max_rank > MAX_SEARCH_RANK:
        raise SearchBoundError(
            "exhaustive search capped at %d worlds and rank %d"
            % (MAX_SEARCH_WORLDS, MAX_SEARCH_RANK))
    if world_bound < 1:
        return None
    for space in _search_spaces(world_bound):
        n = space.n_worlds
        full = space.full_mask
        for ranks in _lexicographic_rank_vectors(n, max_rank):
            table = _kernels.rank_table(ranks)
            witness = _triple_scan(table, full)
            if witness is not None:
                a_mask, b_mask, c_mask = witness
                return ProvisoWitness(space, tuple(ranks),
                                      Proposition(space, a_mask),
                                      Proposition(space, b_mask),
                                      Proposition(space, c_mask))
    return None


def _lexicographic_rank_vectors(n, max_rank):
    vec = [0] * n
    while True:
        if min(vec) == 0:
            yield tuple(vec)
        i = n - 1
        while i >= 0 and vec[i] == max_rank:
            vec[i] = 0
            i -= 1
        if i < 0:
            return
        vec[i] += 1


def _indep4_table(table, full, p, q):
    pc = full ^ p
    qc = full ^ q
    return (table[p & q] == table[p] + table[q]
            and table[p & qc] == table[p] + table[qc]
            and table[pc & q] == table[pc] + table[q]
            and table[pc & qc] == table[pc] + table[qc])


def _triple_scan(table, full):
    """First (A, B, C) in ascending order with A,C and B,C independent,
    A&B non-empty, A|B contingent and A|B,C dependent."""
    for a in range(1, full):
        for b in range(1, full):
            if a & b == 0:
                continue
            union = a | b
            if union == full:
                continue
            for c in range(1, full):
                if not _indep4_table(table, full, a, c):
                    continue
                if not _indep4_table(table, full, b, c):
                    continue
                if not _indep4_table(table, full, union, c):
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class ContractionCheck:
    """Premises and conclusion of the contraction law for variable fields."""
    jk_given_l: bool
    j_l: bool
    j_l_given_k: bool
    conclusion: bool

    @property
    def premises_hold(self) -> bool:
        return self.jk_given_l and (self.j_l or self.j_l_given_k)

    @property
    def law_holds(self) -> bool:
        return not self.premises_hold or self.conclusion


def check_contraction_law(ranking: RankingFunction, j_vars, k_vars,
                          l_vars) -> ContractionCheck:
    """Contraction: J independent of K given L, and of L (outright or given
    K), together force J independent of K and L jointly."""
    j_vars, k_vars, l_vars = set(j_vars), set(k_vars), set(l_vars)
    if j_vars & k_vars or j_vars & l_vars or k_vars & l_vars:
        raise PartitionError("variable sets must be pairwise disjoint")
    space = ranking.space
    f_j = subfield_of_variables(space, j_vars)
    f_k = subfield_of_variables(space, k_vars)
    f_l = subfield_of_variables(space, l_vars)
    f_kl = subfield_of_variables(space, k_vars | l_vars)
    return ContractionCheck(
        jk_given_l=cond_independent_on_field(ranking, f_j, f_k, f_l),
        j_l=independent(ranking, f_j, f_l),
        j_l_given_k=cond_independent_on_field(ranking, f_j, f_l, f_k),
        conclusion=independent(ranking, f_j, f_kl),
    )

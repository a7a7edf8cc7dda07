"""Verification suites: seeded randomized and exhaustive law checking.

Suites (laws, bridge, rivals) aggregate into a single report; every check
is an exact integer or exact rational assertion, and identical inputs with
the same seed print byte-identical reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional

from . import _kernels
from .bridge import measure_independent_fields, ranking_to_measure
from .errors import RankcalcError
from .independence import (
    find_proviso_counterexample,
    independence_report,
    independent_props,
)
from .ranking import (
    RankingFunction,
    bayes_rank,
    cond_rank,
    firmness,
    part_of,
    rank_prop,
    total_rank,
)
from .report import Report
from .revision import EvidenceRanking, conditionalize, jeffrey_conditionalize
from .rivals import check_surprise_axioms, comparison_report, ranking_to_surprise
from .space import PartitionField, Proposition, build_space, subfield_of_variables

DEFAULT_SEED = 1729
SUITES = ("laws", "bridge", "rivals", "all")

_space_cache = {}
_subfield_cache = {}


def binary_space(n_vars: int):
    """The canonical space of ``n_vars`` binary variables V1..Vn."""
    if n_vars not in _space_cache:
        _space_cache[n_vars] = build_space(
            [("V%d" % (i + 1), ("0", "1")) for i in range(n_vars)])
    return _space_cache[n_vars]


def _cached_subfield(space, names):
    key = (space._key, frozenset(names))
    if key not in _subfield_cache:
        _subfield_cache[key] = subfield_of_variables(space, names)
    return _subfield_cache[key]


def _normalized(ranks):
    low = min(ranks)
    return tuple(r - low for r in ranks)


def random_ranking(rng, space, max_rank) -> RankingFunction:
    ranks = _normalized([rng.randrange(max_rank + 1)
                         for _ in range(space.n_worlds)])
    return RankingFunction(space, ranks)


def random_additive_ranking(rng, space, max_rank) -> RankingFunction:
    """Sum of independent per-variable rank maps; rank independent across
    every pair of disjoint variable sets by construction."""
    per_var = []
    for _name, domain in space.variables:
        per_var.append(_normalized([rng.randrange(max_rank + 1)
                                    for _ in domain]))
    ranks = []
    for index in range(space.n_worlds):
        assignment_total = 0
        rest = index
        for (name, domain), table in zip(reversed(space.variables),
                                         reversed(per_var)):
            assignment_total += table[rest % len(domain)]
            rest //= len(domain)
        ranks.append(assignment_total)
    return RankingFunction(space, ranks)


def iter_random_rankings(seed, count, max_vars, max_rank,
                         cycle_vars=True) -> Iterable[RankingFunction]:
    rng = random.Random(seed)
    for i in range(count):
        n_vars = (i % max_vars) + 1 if cycle_vars else max_vars
        yield random_ranking(rng, binary_space(n_vars), max_rank)


def random_contingent(rng, space) -> Proposition:
    return Proposition(space, rng.randrange(1, space.full_mask))


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    count: int = 1000
    max_vars: int = 3
    max_rank: int = 5
    bridge_count: Optional[int] = None  # capped separately; defaults below

    BRIDGE_CAP = 1000

    @property
    def bridge_instances(self) -> int:
        if self.bridge_count is not None:
            return self.bridge_count
        return min(self.count, self.BRIDGE_CAP)


def _all_variable_subfields(space):
    names = [name for name, _ in space.variables]
    out = []
    for mask in range(1 << len(names)):
        chosen = frozenset(names[i] for i in range(len(names))
                           if mask >> i & 1)
        out.append(_cached_subfield(space, chosen))
    return out


# ----------------------------------------------------------------- laws

def run_laws_suite(rankings: List[RankingFunction], seed: int,
                   max_rank: int) -> Report:
    """Core calculus laws plus revision dynamics and independence laws."""
    report = Report("laws")
    rng = random.Random(seed + 1)

    neg = dis = conj = 0
    total_bad = bayes_bad = 0
    law_note = [""] * 5
    instances = 0
    sampled = 0
    for ranking in rankings:
        instances += 1
        if ranking.space.n_worlds > _kernels.MAX_SWEEP_WORLDS:
            sampled += 1
            bad = _sampled_law_checks(ranking, rng)
            neg += bad[0]
            dis += bad[1]
            conj += bad[2]
            total_bad += bad[3]
            bayes_bad += bad[4]
            continue
        counts, examples = _kernels.basic_laws_sweep(ranking.world_ranks)
        neg += counts[0]
        dis += counts[1]
        conj += counts[2]
        for code, a, b, lhs, rhs in examples:
            idx = code - 1
            law_note[idx] = law_note[idx] or (
                "ranks %r masks A=%d B=%d: %d vs %d"
                % (ranking.world_ranks, a, b, lhs, rhs))
        for subfield in _all_variable_subfields(ranking.space):
            counts2, examples2 = _kernels.partition_laws_sweep(
                ranking.world_ranks, subfield.atom_masks)
            total_bad += counts2[0]
            bayes_bad += counts2[1]
            for code, b, q, lhs, rhs in examples2:
                idx = code - 1
                law_note[idx] = law_note[idx] or (
                    "ranks %r mask B=%d atom %d: %d vs %d"
                    % (ranking.world_ranks, b, q, lhs, rhs))
    sampled_note = ("%d large instances checked by sampling" % sampled
                    if sampled else "")
    report.add("negation-law", instances, law_note[0] or sampled_note, neg)
    report.add("disjunction-law", instances, law_note[1] or sampled_note, dis)
    report.add("conjunction-law", instances, law_note[2] or sampled_note, conj)
    report.add("total-rank-law", instances, law_note[3] or sampled_note, total_bad)
    report.add("rank-bayes-law", instances, law_note[4] or sampled_note, bayes_bad)

    _revision_checks(rankings, rng, max_rank, report)
    _independence_law_checks(rankings, report)
    return report


def _sampled_law_checks(ranking, rng, samples=128):
    """Object-route law checks for spaces too large to sweep exhaustively."""
    space = ranking.space
    full = space.full_mask
    bad = [0, 0, 0, 0, 0]
    partition = _cached_subfield(space, {space.variables[0][0]})
    for _ in range(samples):
        a = Proposition(space, rng.randrange(1, full))
        b = Proposition(space, rng.randrange(full + 1))
        if min(rank_prop(ranking, a),
               rank_prop(ranking, a.complement())) != 0:
            bad[0] += 1
        if rank_prop(ranking, a | b) != min(rank_prop(ranking, a),
                                            rank_prop(ranking, b)):
            bad[1] += 1
        if not (a & b).is_empty:
            if rank_prop(ranking, a & b) != (rank_prop(ranking, a)
                                             + cond_rank(ranking, b, a)):
                bad[2] += 1
        try:
            total_rank(ranking, partition, b)
        except RankcalcError:
            bad[3] += 1
        if not b.is_empty:
            try:
                bayes_rank(ranking, partition, 0, b)
            except RankcalcError:
                bad[4] += 1
    return bad


def _revision_checks(rankings, rng, max_rank, report):
    closure = parts = weights = equivalence = 0
    notes = ["", "", "", ""]
    trials = 0
    for ranking in rankings:
        if ranking.space.n_worlds < 2:
            continue
        trials += 1
        prop = random_contingent(rng, ranking.space)
        weight = rng.randrange(max_rank + 1)
        try:
            revised = conditionalize(ranking, prop, weight)
        except RankcalcError as exc:
            closure += 1
            notes[0] = notes[0] or ("revision failed: %s" % exc)
            continue
        comp = prop.complement()
        if (part_of(revised, prop) != part_of(ranking, prop)
                or part_of(revised, comp) != part_of(ranking, comp)):
            parts += 1
            notes[1] = notes[1] or (
                "parts changed for ranks %r on %r" % (ranking.world_ranks, prop))
        if (rank_prop(revised, comp) != weight
                or rank_prop(revised, prop) != 0
                or firmness(revised, prop) != weight):
            weights += 1
            notes[2] = notes[2] or (
                "weight %d not assigned for ranks %r on %r"
                % (weight, ranking.world_ranks, prop))
        evidence = EvidenceRanking(
            PartitionField(ranking.space, (prop, comp)), (0, weight))
        via_field = jeffrey_conditionalize(ranking, evidence)
        if via_field.world_ranks != revised.world_ranks:
            equivalence += 1
            notes[3] = notes[3] or (
                "single-prop and field routes differ for ranks %r on %r"
                % (ranking.world_ranks, prop))
    report.add("revision-closure", trials, notes[0], closure)
    report.add("revision-part-preservation", trials, notes[1], parts)
    report.add("revision-weight-assignment", trials, notes[2], weights)
    report.add("revision-field-equivalence", trials, notes[3], equivalence)


def union_law_exhaustive_sweep(max_rank: int = 3):
    """Exhaustive union-law check over every ranking of the two-variable
    binary space with ranks up to ``max_rank``.
    Returns (rankings checked, triples checked, violations, first note)."""
    space = binary_space(2)
    n = space.n_worlds
    full = space.full_mask
    triples_per_ranking = sum(
        1 for a in range(1, full) for b in range(1, full)
        if a & b == 0 and b != 0) * (full - 1)
    checked = 0
    triples = 0
    violations = 0
    note = ""
    for vector in itertools.product(range(max_rank + 1), repeat=n):
        if min(vector) != 0:
            continue
        checked += 1
        count, examples = _kernels.union_law_sweep(vector)
        triples += triples_per_ranking
        violations += count
        if examples and not note:
            a, b, c, bc, union = examples[0]
            note = ("ranks %r masks A=%d B=%d C=%d: B,C %d vs union %d"
                    % (vector, a, b, c, bc, union))
    return checked, triples, violations, note


def _independence_law_checks(rankings, report):
    checked, triples, violations, note = union_law_exhaustive_sweep()
    report.add("union-law-disjointness-proviso",
               triples, note, violations)

    witness = find_proviso_counterexample(8)
    bad = 0
    note = ""
    if witness is None:
        bad = 1
        note = "no overlapping counterexample found within the search bound"
    else:
        ranking = witness.ranking
        ok = (independent_props(ranking, witness.a, witness.c)
              and independent_props(ranking, witness.b, witness.c)
              and not (witness.a & witness.b).is_empty
              and (witness.a | witness.b).is_contingent
              and not independent_props(ranking, witness.a | witness.b,
                                        witness.c))
        if not ok:
            bad = 1
            note = "witness failed re-validation"
        else:
            note = ("overlapping A=%r B=%r C=%r on ranks %r"
                    % (witness.a, witness.b, witness.c, witness.world_ranks))
    report.add("union-law-needs-proviso", 1, note, bad)

    contraction_checked = 0
    contraction_bad = 0
    note = ""
    for ranking in rankings:
        space = ranking.space
        if len(space.variables) < 3:
            continue
        names = [name for name, _ in space.variables[:3]]
        for j, k, l in itertools.permutations(names):
            contraction_checked += 1
            if not _contraction_law_holds(ranking, j, k, l):
                contraction_bad += 1
                note = note or ("ranks %r with J=%s K=%s L=%s"
                                % (ranking.world_ranks, j, k, l))
    report.add("contraction-law", contraction_checked, note, contraction_bad)


def _contraction_law_holds(ranking, j, k, l) -> bool:
    space = ranking.space
    f_j = _cached_subfield(space, {j})
    f_k = _cached_subfield(space, {k})
    f_l = _cached_subfield(space, {l})
    jk_given_l = all(
        independence_report(ranking, f_j, f_k, atom).independent
        for atom in f_l.atoms)
    if not jk_given_l:
        return True
    j_l = independence_report(ranking, f_j, f_l).independent
    if not j_l:
        j_l_given_k = all(
            independence_report(ranking, f_j, f_l, atom).independent
            for atom in f_k.atoms)
        if not j_l_given_k:
            return True
    f_kl = _cached_subfield(space, {k, l})
    return independence_report(ranking, f_j, f_kl).independent


# ----------------------------------------------------------------- bridge

def run_bridge_suite(rankings: List[RankingFunction], seed: int,
                     max_rank: int) -> Report:
    """Rank/order correspondence: exhaustive small sweep, randomized larger
    instances, and independence transfer."""
    report = Report("bridge")
    rng = random.Random(seed + 2)

    space2 = binary_space(2)
    exhaustive_bad = 0
    exhaustive_count = 0
    note = ""
    for vector in itertools.product(range(5), repeat=space2.n_worlds):
        if min(vector) != 0:
            continue
        exhaustive_count += 1
        orders = _kernels.poly_order_table(vector, [1] * len(vector))
        ranks = _kernels.rank_table(vector)
        counts, examples = _kernels.bridge_pair_sweep(orders, ranks)
        total = counts[0] + counts[1] + counts[2]
        exhaustive_bad += total
        if examples and not note:
            note = "ranks %r: %r" % (vector, examples[0])
    report.add("order-correspondence-exhaustive-small",
               exhaustive_count, note, exhaustive_bad)

    random_bad = 0
    transfer_bad = 0
    transfer_checked = 0
    note_random = ""
    note_transfer = ""
    instances = 0
    for i, ranking in enumerate(rankings):
        instances += 1
        if i % 2 == 1 and len(ranking.space.variables) > 1:
            ranking = random_additive_ranking(rng, ranking.space, max_rank)
        coeffs = [1] * ranking.space.n_worlds
        if i % 3 == 2:
            coeffs = [rng.randrange(1, 6) for _ in coeffs]
        coeff_map = {w: c for w, c in enumerate(coeffs)}
        measure = ranking_to_measure(ranking, coeff_map)
        if ranking.space.n_worlds > _kernels.MAX_SWEEP_WORLDS:
            bad, first = _sampled_bridge_checks(ranking, measure, rng)
            random_bad += bad
            note_random = note_random or first
            continue
        orders = _kernels.poly_order_table(ranking.world_ranks, coeffs)
        ranks = _kernels.rank_table(ranking.world_ranks)
        counts, examples = _kernels.bridge_pair_sweep(orders, ranks)
        if counts[0] or counts[1] or counts[2]:
            random_bad += counts[0] + counts[1] + counts[2]
            note_random = note_random or (
                "ranks %r coeffs %r: %r"
                % (ranking.world_ranks, coeffs, examples[0]))
        space = ranking.space
        names = [name for name, _ in space.variables]
        for left, right in _disjoint_pairs_of_names(names):
            f1 = _cached_subfield(space, left)
            f2 = _cached_subfield(space, right)
            transfer_checked += 1
            if not measure_independent_fields(measure, f1, f2):
                continue
            if not independence_report(ranking, f1, f2).independent:
                transfer_bad += 1
                note_transfer = note_transfer or (
                    "ranks %r coeffs %r fields %r vs %r"
                    % (ranking.world_ranks, coeffs,
                       sorted(left), sorted(right)))
    report.add("order-correspondence-random", instances,
               note_random, random_bad)
    report.add("measure-independence-implies-rank-independence",
               transfer_checked, note_transfer, transfer_bad)
    return report


def _sampled_bridge_checks(ranking, measure, rng, samples=64):
    """Object-route order/rank comparisons for spaces beyond the sweeps."""
    from .bridge import cond_measure_order, measure_order
    space = ranking.space
    full = space.full_mask
    bad = 0
    first = ""
    for _ in range(samples):
        a = Proposition(space, rng.randrange(1, full + 1))
        b = Proposition(space, rng.randrange(full + 1))
        if measure_order(measure, b) != rank_prop(ranking, b):
            bad += 1
            first = first or ("order mismatch at %r" % (b,))
        if cond_measure_order(measure, b, a) != cond_rank(ranking, b, a):
            bad += 1
            first = first or ("conditional order mismatch at (%r | %r)"
                              % (b, a))
    return bad, first


def _disjoint_pairs_of_names(names):
    n = len(names)
    for left_mask in range(1, 1 << n):
        left = frozenset(names[i] for i in range(n) if left_mask >> i & 1)
        rest = [names[i] for i in range(n) if not left_mask >> i & 1]
        for right_mask in range(1, 1 << len(rest)):
            right = frozenset(rest[i] for i in range(len(rest))
                              if right_mask >> i & 1)
            if min(left) < min(right):
                yield left, right


# ----------------------------------------------------------------- rivals

def run_rivals_suite(rankings: List[RankingFunction], seed: int) -> Report:
    """Surprise axioms on scaled rankings, the conjunction-rule gap, the
    consonance non-closure witness, and the revision-closure contrast."""
    report = Report("rivals")
    axiom_bad = 0
    note = ""
    instances = 0
    for ranking in rankings:
        if ranking.space.n_worlds > 5:
            continue
        instances += 1
        sub = check_surprise_axioms(ranking_to_surprise(ranking))
        if not sub.ok:
            axiom_bad += sub.total_violations
            note = note or ("ranks %r: %s"
                            % (ranking.world_ranks, sub.lines))
    report.add("surprise-axioms-after-scaling", instances, note, axiom_bad)

    base = rankings[0] if rankings else None
    if base is not None:
        report.extend(comparison_report(base))
    return report


# ----------------------------------------------------------------- driver

def population_for(config: SuiteConfig, model=None) -> List[RankingFunction]:
    if model is not None:
        return [model.ranking]
    return list(iter_random_rankings(config.seed, config.count,
                                     config.max_vars, config.max_rank))


def run_suites(suite: str, config: SuiteConfig, model=None) -> Report:
    if suite not in SUITES:
        raise RankcalcError("unknown suite %r; expected one of %s"
                            % (suite, "|".join(SUITES)))
    population = population_for(config, model)
    report = Report("verify %s" % suite)
    if suite in ("laws", "all"):
        report.extend(run_laws_suite(population, config.seed, config.max_rank))
    if suite in ("bridge", "all"):
        bridge_rankings = population[: config.bridge_instances]
        report.extend(run_bridge_suite(bridge_rankings, config.seed,
                                       config.max_rank))
    if suite in ("rivals", "all"):
        if model is not None:
            rivals_rankings = [model.ranking]
        else:
            rivals_rankings = population[:64]
        report.extend(run_rivals_suite(rivals_rankings, config.seed))
    return report

"""Exact bridge between ranks and infinitesimal-order probabilities.

Ranks correspond to orders of magnitude in an infinitesimal z: a ranking
maps to a measure whose world weights are (positive coefficient) * z^rank.
"z" here is a formal indeterminate with exact rational coefficients, so
"same order as z^n" becomes an exact statement about least exponents.
Addition of probabilities turns into minimum of ranks, multiplication into
addition, conditioning into subtraction; every weight keeps a positive
leading coefficient, so leading terms can never cancel in sums.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import _kernels
from .errors import EmptyConditionError, RankcalcError, SearchBoundError
from .extnat import TOP, ExtNat, is_top
from .independence import independence_report
from .ranking import RankingFunction, cond_rank, rank_prop
from .report import Report
from .space import Proposition, check_same_space, subfield_of_variables


class ZPoly:
    """Polynomial in one indeterminate with exact rational coefficients,
    stored sparsely as {exponent: non-zero coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] = ()):
        clean = {}
        for exp, coeff in dict(coeffs).items():
            if not isinstance(exp, int) or exp < 0:
                raise ValueError("exponents must be naturals, got %r" % (exp,))
            if not isinstance(coeff, (int, Fraction)) or isinstance(coeff, bool):
                raise ValueError("coefficients must be ints or Fractions")
            if coeff != 0:
                clean[exp] = coeff
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "ZPoly":
        return cls({exponent: coefficient})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> ExtNat:
        """Least exponent carrying a non-zero coefficient; TOP for zero."""
        if not self.coeffs:
            return TOP
        return min(self.coeffs)

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[min(self.coeffs)]

    def __add__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for exp, coeff in other.coeffs.items():
            total = out.get(exp, 0) + coeff
            if total == 0:
                out.pop(exp, None)
            else:
                out[exp] = total
        return ZPoly(out)

    def __sub__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self + ZPoly({e: -c for e, c in other.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                total = out.get(e, 0) + c1 * c2
                if total == 0:
                    out.pop(e, None)
                else:
                    out[e] = total
        return ZPoly(out)

    def scale(self, factor) -> "ZPoly":
        return ZPoly({e: c * factor for e, c in self.coeffs.items()})

    def exact_div(self, other: "ZPoly") -> "ZPoly":
        """Exact polynomial division; raises if the remainder is non-zero."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = dict(self.coeffs)
        quotient = {}
        top_exp = max(other.coeffs)
        top_coeff = Fraction(other.coeffs[top_exp])
        while remainder:
            exp = max(remainder)
            if exp < top_exp:
                raise RankcalcError("polynomials do not divide exactly")
            factor = Fraction(remainder[exp]) / top_coeff
            shift = exp - top_exp
            quotient[shift] = factor
            for e, c in other.coeffs.items():
                total = remainder.get(e + shift, 0) - factor * c
                if total == 0:
                    remainder.pop(e + shift, None)
                else:
                    remainder[e + shift] = total
        return ZPoly(quotient)

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "ZPoly(0)"
        terms = []
        for exp in sorted(self.coeffs):
            coeff = self.coeffs[exp]
            if exp == 0:
                terms.append(str(coeff))
            elif exp == 1:
                terms.append("%s*z" % coeff)
            else:
                terms.append("%s*z^%d" % (coeff, exp))
        return "ZPoly(%s)" % " + ".join(terms)


class OrderMeasure:
    """Unnormalized measure whose world weights are polynomials in the
    infinitesimal with positive leading coefficients and total of order 0."""

    __slots__ = ("space", "weights", "_total")

    def __init__(self, space, weights: Sequence[ZPoly]):
        weights = tuple(weights)
        if len(weights) != space.n_worlds:
            raise RankcalcError("expected %d world weights" % space.n_worlds)
        total = ZPoly.zero()
        for weight in weights:
            if weight.is_zero:
                raise RankcalcError("world weights must be non-zero")
            if weight.leading_coefficient() <= 0:
                raise RankcalcError("world weights need positive leading coefficients")
            total = total + weight
        if total.order() != 0:
            raise RankcalcError("total weight must have order 0, got %r"
                                % (total.order(),))
        self.space = space
        self.weights = weights
        self._total = total

    def weight_of(self, prop: Proposition) -> ZPoly:
        """Polynomial weight of a proposition: the sum over its worlds."""
        check_same_space(self, prop)
        acc = {}
        for w in prop.members():
            for exp, coeff in self.weights[w].coeffs.items():
                total = acc.get(exp, 0) + coeff
                if total == 0:
                    acc.pop(exp, None)
                else:
                    acc[exp] = total
        return ZPoly(acc)

    @property
    def total(self) -> ZPoly:
        return self._total

    def __repr__(self):
        return "OrderMeasure(%s)" % ", ".join(
            "%s:%r" % (self.space.world_str(i), w)
            for i, w in enumerate(self.weights))


def ranking_to_measure(ranking: RankingFunction,
                       coefficients: Optional[Mapping[int, object]] = None
                       ) -> OrderMeasure:
    """Measure whose world weights are coefficient * z^rank.

    ``coefficients`` optionally maps world index -> positive rational;
    missing worlds default to 1.  Coefficients never change orders, only
    the rational carried at each order.
    """
    coeffs = dict(coefficients or {})
    weights = []
    for w, rank in enumerate(ranking.world_ranks):
        c = coeffs.get(w, 1)
        if not isinstance(c, (int, Fraction)) or isinstance(c, bool) or c <= 0:
            raise RankcalcError("world coefficient must be positive, got %r" % (c,))
        weights.append(ZPoly.monomial(rank, c))
    return OrderMeasure(ranking.space, weights)


def measure_order(measure: OrderMeasure, prop: Proposition) -> ExtNat:
    """Order of the proposition's weight relative to the total weight."""
    check_same_space(measure, prop)
    weight_order = measure.weight_of(prop).order()
    if is_top(weight_order):
        return TOP
    return weight_order - measure.total.order()


def cond_measure_order(measure: OrderMeasure, prop: Proposition,
                       given: Proposition) -> ExtNat:
    """Order of the conditional weight: order(A&B) - order(A)."""
    check_same_space(measure, prop)
    check_same_space(measure, given)
    if given.is_empty:
        raise EmptyConditionError("conditioning on the empty proposition")
    joint = measure.weight_of(prop & given).order()
    if is_top(joint):
        return TOP
    return joint - measure.weight_of(given).order()


EXHAUSTIVE_PAIR_WORLDS = 8
SAMPLE_PAIRS = 256
_SAMPLE_SEED = 0xB21D6E


def _integer_coefficients(measure):
    """World (exponent, coefficient) arrays when all weights are integer
    monomials; None otherwise (rational path goes through ZPoly)."""
    exps = []
    coeffs = []
    for weight in measure.weights:
        if len(weight.coeffs) != 1:
            return None
        (exp, coeff), = weight.coeffs.items()
        if not isinstance(coeff, int):
            return None
        exps.append(exp)
        coeffs.append(coeff)
    return exps, coeffs


def verify_correspondence(ranking: RankingFunction,
                          coefficients: Optional[Mapping[int, object]] = None,
                          check_products: bool = True) -> Report:
    """Exhaustively verify the rank/order correspondence for one ranking.

    Checks, over every proposition pair when the space has at most
    EXHAUSTIVE_PAIR_WORLDS worlds (seeded samples beyond):

    * order of every proposition equals its rank, conditional orders equal
      conditional ranks, and orders of disjoint unions obey the min law;
    * orders multiply additively under polynomial products;
    * independence of variable subfields under the measure (exact
      cross-product identities) implies rank independence.
    """
    measure = ranking_to_measure(ranking, coefficients)
    space = ranking.space
    n = space.n_worlds
    report = Report("order correspondence")

    if n <= EXHAUSTIVE_PAIR_WORLDS:
        size = 1 << n
        integer = _integer_coefficients(measure)
        if integer is not None:
            orders = _kernels.poly_order_table(*integer)
        else:
            orders = [_poly_order_of_mask(measure, mask) for mask in range(size)]
        ranks = _kernels.rank_table(ranking.world_ranks)
        counts, examples = _kernels.bridge_pair_sweep(orders, ranks)
        report.add("order-equals-rank", size,
                   _examples_of(examples, 1), counts[0])
        report.add("conditional-order-equals-conditional-rank",
                   (size - 1) * size, _examples_of(examples, 2), counts[1])
        report.add("disjoint-union-min-law", 3 ** n,
                   _examples_of(examples, 3), counts[2])
    else:
        rng = random.Random(_SAMPLE_SEED)
        violations = 0
        first = ""
        checked = 0
        for _ in range(SAMPLE_PAIRS):
            a = _random_prop(rng, space, nonempty=True)
            b = _random_prop(rng, space)
            checked += 1
            if measure_order(measure, b) != rank_prop(ranking, b):
                violations += 1
                first = first or ("order mismatch at %r" % (b,))
            if cond_measure_order(measure, b, a) != cond_rank(ranking, b, a):
                violations += 1
                first = first or ("conditional mismatch at (%r | %r)" % (b, a))
            if (a & b).is_empty:
                union = measure.weight_of(a | b).order()
                split = min(measure.weight_of(a).order(),
                            measure.weight_of(b).order())
                if union != split:
                    violations += 1
                    first = first or ("union order mismatch at %r, %r" % (a, b))
        report.add("sampled-order-correspondence", checked, first, violations)

    if check_products:
        rng = random.Random(_SAMPLE_SEED + 1)
        bad = 0
        first = ""
        trials = 256 if n <= EXHAUSTIVE_PAIR_WORLDS else 64
        for _ in range(trials):
            a = _random_prop(rng, space, nonempty=True)
            b = _random_prop(rng, space, nonempty=True)
            pa = measure.weight_of(a)
            pb = measure.weight_of(b)
            product = pa * pb
            if product.order() != pa.order() + pb.order():
                bad += 1
                first = first or ("product order mismatch at %r, %r" % (a, b))
        report.add("product-order-additivity", trials, first, bad)

    bad, first, checked = _independence_transfer(ranking, measure)
    report.add("measure-independence-implies-rank-independence",
               checked, first, bad)
    return report


def _examples_of(examples, code):
    for e in examples:
        if e[0] == code:
            return "masks A=%d B=%d: %s vs %s" % (e[1], e[2], e[3], e[4])
    return ""


def _poly_order_of_mask(measure, mask):
    total = ZPoly.zero()
    w = 0
    while mask:
        if mask & 1:
            total = total + measure.weights[w]
        mask >>= 1
        w += 1
    order = total.order()
    return _kernels.INF if is_top(order) else order


def _random_prop(rng, space, nonempty=False):
    full = space.full_mask
    mask = rng.randrange(1 if nonempty else 0, full + 1)
    return Proposition(space, mask)


def measure_independent_fields(measure: OrderMeasure, first, second) -> bool:
    """Independence under the measure: the exact cross-product identity
    weight(B&C) * total == weight(B) * weight(C) for every pair of
    non-empty members of the two fields.

    Member weights are assembled from atom weights by subset sums (members
    are disjoint unions of atoms, so this is exact polynomial addition).
    """
    total = measure.total
    k1, k2 = len(first.atoms), len(second.atoms)
    if k1 + k2 > 16:
        raise SearchBoundError(
            "field member enumeration capped at 16 atoms combined")
    space = measure.space
    atom_w1 = [measure.weight_of(a) for a in first.atoms]
    atom_w2 = [measure.weight_of(a) for a in second.atoms]
    cell = [[measure.weight_of(a & b) for b in second.atoms]
            for a in first.atoms]

    w1 = _subset_sums(atom_w1)
    w2 = _subset_sums(atom_w2)
    # row_sums[s][j] = weight of (union of atoms in s) & atom_j
    rows = [[ZPoly.zero()] * k2]
    for i in range(k1):
        rows.extend([prev_j + cell[i][j] for j, prev_j in enumerate(prev)]
                    for prev in list(rows))
    for s in range(1, 1 << k1):
        joint = _subset_sums(rows[s])
        ws = w1[s]
        for t in range(1, 1 << k2):
            if joint[t] * total != ws * w2[t]:
                return False
    return True


def _subset_sums(polys):
    """sums[s] = sum of polys selected by the bits of s (exact addition)."""
    sums = [ZPoly.zero()]
    for poly in polys:
        sums.extend([prev + poly for prev in list(sums)])
    return sums


def _independence_transfer(ranking, measure):
    """Measure independence must imply rank independence for every pair of
    variable subfields over disjoint variable sets (within the member
    enumeration cap)."""
    space = ranking.space
    sizes = {name: len(domain) for name, domain in space.variables}
    names = [name for name, _ in space.variables]
    bad = 0
    first = ""
    checked = 0
    for left, right in _disjoint_name_pairs(names):
        atoms_left = 1
        for name in left:
            atoms_left *= sizes[name]
        atoms_right = 1
        for name in right:
            atoms_right *= sizes[name]
        if atoms_left + atoms_right > 16:
            continue
        f1 = subfield_of_variables(space, left)
        f2 = subfield_of_variables(space, right)
        checked += 1
        if not measure_independent_fields(measure, f1, f2):
            continue
        if not independence_report(ranking, f1, f2).independent:
            bad += 1
            first = first or ("measure-independent but rank-dependent: %r vs %r"
                              % (sorted(left), sorted(right)))
        if checked >= 64:
            break
    return bad, first, checked


def _disjoint_name_pairs(names):
    n = len(names)
    for left_mask in range(1, 1 << n):
        rest = [names[i] for i in range(n) if not left_mask >> i & 1]
        left = frozenset(names[i] for i in range(n) if left_mask >> i & 1)
        for right_mask in range(1, 1 << len(rest)):
            right = frozenset(rest[i] for i in range(len(rest))
                              if right_mask >> i & 1)
            if min(left) < min(right):  # unordered pairs once
                yield left, right

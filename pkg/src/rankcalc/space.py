"""Finite possibility spaces, propositions, and partition fields.

A Space is the Cartesian product of named finite-domain variables.  Worlds
are indexed 0..N-1 in lexicographic order of the declared variables, last
variable fastest.  Propositions are immutable world sets stored as integer
bitmasks; fields of propositions are represented by their atoms only.
"""

from __future__ import annotations

import os
from typing import Iterable, Mapping, Sequence

from .errors import (
    FormulaError,
    NonContingentError,
    PartitionError,
    SpaceMismatchError,
    SpaceTooLargeError,
)
from .formula import parse_formula

DEFAULT_WORLD_CAP = 1 << 20
WORLD_CAP_ENV = "RANKCALC_WORLD_CAP"


def _resolve_world_cap(world_cap):
    if world_cap is not None:
        return int(world_cap)
    env = os.environ.get(WORLD_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SpaceTooLargeError(
                "invalid %s value %r" % (WORLD_CAP_ENV, env)) from None
    return DEFAULT_WORLD_CAP


class Space:
    """Product of named finite-domain variables.

    ``variables`` is an ordered sequence of ``(name, domain)`` pairs; value
    labels may be strings or ints and must be unique (by string form) within
    a domain.
    """

    __slots__ = ("variables", "n_worlds", "variable_index", "_strides",
                 "_value_digits", "_key", "_hash")

    def __init__(self, variables, world_cap=None):
        variables = tuple((name, tuple(domain)) for name, domain in variables)
        if not variables:
            raise PartitionError("a space needs at least one variable")
        names = [name for name, _ in variables]
        if len(set(names)) != len(names):
            raise PartitionError("duplicate variable name in %r" % (names,))
        for name, domain in variables:
            if not isinstance(name, str) or not name:
                raise PartitionError("variable names must be non-empty strings")
            if not domain:
                raise PartitionError("variable %r has an empty domain" % name)
            labels = [str(v) for v in domain]
            if len(set(labels)) != len(labels):
                raise PartitionError("duplicate value label in variable %r" % name)
            for value in domain:
                if not isinstance(value, (str, int)) or isinstance(value, bool):
                    raise PartitionError(
                        "value labels must be strings or ints, got %r" % (value,))

        cap = _resolve_world_cap(world_cap)
        n = 1
        for _, domain in variables:
            n *= len(domain)
            if n > cap:
                raise SpaceTooLargeError(
                    "space too large: %d worlds exceed the cap of %d" % (n, cap))

        strides = []
        acc = 1
        for _, domain in reversed(variables):
            strides.append(acc)
            acc *= len(domain)
        strides.reverse()

        self.variables = variables
        self.n_worlds = n
        self.variable_index = {name: i for i, (name, _) in enumerate(variables)}
        self._strides = tuple(strides)
        self._value_digits = {
            name: {str(v): i for i, v in enumerate(domain)}
            for name, domain in variables
        }
        self._key = variables
        self._hash = hash(variables)

    @property
    def full_mask(self) -> int:
        return (1 << self.n_worlds) - 1

    def assignment(self, index) -> dict:
        """World index -> {variable name: value label}."""
        if not 0 <= index < self.n_worlds:
            raise IndexError("world index %d out of range" % index)
        out = {}
        for (name, domain), stride in zip(self.variables, self._strides):
            out[name] = domain[(index // stride) % len(domain)]
        return out

    def index_of(self, assignment: Mapping) -> int:
        """Inverse of :meth:`assignment`; values matched by string form."""
        index = 0
        seen = 0
        for (name, domain), stride in zip(self.variables, self._strides):
            if name not in assignment:
                raise FormulaError("assignment missing variable %r" % name)
            digit = self.value_digit(name, str(assignment[name]))
            if digit is None:
                raise FormulaError(
                    "unknown value %r for variable %r" % (assignment[name], name))
            index += digit * stride
            seen += 1
        if seen != len(assignment):
            extra = sorted(set(map(str, assignment)) - set(self.variable_index))
            raise FormulaError("assignment names unknown variables %r" % (extra,))
        return index

    def value_digit(self, name, label):
        return self._value_digits[name].get(str(label))

    def value_mask(self, name, digit) -> int:
        """Bitmask of all worlds where variable ``name`` takes its
        ``digit``-th value (built arithmetically, no world enumeration)."""
        i = self.variable_index[name]
        stride = self._strides[i]
        size = len(self.variables[i][1])
        period = stride * size
        unit = ((1 << stride) - 1) << (digit * stride)
        repeats = self.n_worlds // period
        comb = ((1 << (period * repeats)) - 1) // ((1 << period) - 1)
        return unit * comb

    def world_str(self, index) -> str:
        assignment = self.assignment(index)
        return "(%s)" % ",".join("%s=%s" % (name, assignment[name])
                                 for name, _ in self.variables)

    def proposition(self, indices: Iterable[int]) -> "Proposition":
        mask = 0
        for i in indices:
            if not 0 <= i < self.n_worlds:
                raise IndexError("world index %d out of range" % i)
            mask |= 1 << i
        return Proposition(self, mask)

    def prop_from_mask(self, mask: int) -> "Proposition":
        return Proposition(self, mask)

    @property
    def empty(self) -> "Proposition":
        return Proposition(self, 0)

    @property
    def full(self) -> "Proposition":
        return Proposition(self, self.full_mask)

    def __eq__(self, other):
        return isinstance(other, Space) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join("%s:%d" % (name, len(domain))
                          for name, domain in self.variables)
        return "Space(%s; %d worlds)" % (inner, self.n_worlds)


def check_same_space(a, b):
    if a.space != b.space:
        raise SpaceMismatchError("operands belong to different spaces")


class Proposition:
    """An immutable set of worlds within one space."""

    __slots__ = ("space", "mask")

    def __init__(self, space, mask: int):
        if not 0 <= mask <= space.full_mask:
            raise ValueError("mask out of range for %r" % space)
        self.space = space
        self.mask = mask

    def members(self):
        """World indices in ascending order."""
        mask = self.mask
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.space.full_mask

    @property
    def is_contingent(self) -> bool:
        return not (self.is_empty or self.is_full)

    def complement(self) -> "Proposition":
        return Proposition(self.space, self.space.full_mask & ~self.mask)

    __invert__ = complement

    def __or__(self, other):
        check_same_space(self, other)
        return Proposition(self.space, self.mask | other.mask)

    def __and__(self, other):
        check_same_space(self, other)
        return Proposition(self.space, self.mask & other.mask)

    def __sub__(self, other):
        check_same_space(self, other)
        return Proposition(self.space, self.mask & ~other.mask)

    def __contains__(self, index):
        return bool(self.mask >> index & 1)

    def issubset(self, other) -> bool:
        check_same_space(self, other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def __eq__(self, other):
        return (isinstance(other, Proposition)
                and self.space == other.space and self.mask == other.mask)

    def __hash__(self):
        return hash((self.space._key, self.mask))

    def __repr__(self):
        if self.is_empty:
            return "{}"
        shown = self.members()
        if len(shown) > 8 and self.space.n_worlds > 16:
            return "{%d worlds}" % len(shown)
        return "{%s}" % ", ".join(self.space.world_str(i) for i in shown)


class PartitionField:
    """A field of propositions, represented by its atoms.

    The atoms are pairwise-disjoint non-empty propositions covering the
    space; the field they generate (all unions of atoms) is never
    materialized.
    """

    __slots__ = ("space", "atoms", "_masks")

    def __init__(self, space, atoms: Sequence[Proposition]):
        atoms = tuple(atoms)
        if not atoms:
            raise PartitionError("a partition field needs at least one atom")
        union = 0
        for atom in atoms:
            if atom.space != space:
                raise SpaceMismatchError("atom from a different space")
            if atom.is_empty:
                raise PartitionError("empty atom in partition")
            if union & atom.mask:
                raise PartitionError("atoms overlap")
            union |= atom.mask
        if union != space.full_mask:
            raise PartitionError("atoms do not cover the space")
        self.space = space
        self.atoms = atoms
        self._masks = tuple(atom.mask for atom in atoms)

    @classmethod
    def trivial(cls, space) -> "PartitionField":
        return cls(space, (space.full,))

    @classmethod
    def discrete(cls, space) -> "PartitionField":
        return cls(space, tuple(Proposition(space, 1 << i)
                                for i in range(space.n_worlds)))

    @property
    def atom_masks(self):
        return self._masks

    @property
    def is_discrete(self) -> bool:
        return len(self.atoms) == self.space.n_worlds

    def atom_index_of_world(self, index) -> int:
        bit = 1 << index
        for i, mask in enumerate(self._masks):
            if mask & bit:
                return i
        raise IndexError("world index %d out of range" % index)

    def member(self, atom_subset: int) -> Proposition:
        """Union of the atoms selected by the bits of ``atom_subset``."""
        mask = 0
        remaining = atom_subset
        while remaining:
            low = remaining & -remaining
            mask |= self._masks[low.bit_length() - 1]
            remaining ^= low
        return Proposition(self.space, mask)

    def refine(self, other: "PartitionField") -> "PartitionField":
        """Common refinement; atom order is (self atom, other atom) major."""
        if self.space != other.space:
            raise SpaceMismatchError("fields over different spaces")
        if self.is_discrete:
            return self
        if other.is_discrete:
            return other
        if len(other.atoms) == 1:
            return self
        if len(self.atoms) == 1:
            return other
        cells = []
        for a in self._masks:
            for b in other._masks:
                cell = a & b
                if cell:
                    cells.append(Proposition(self.space, cell))
        return PartitionField(self.space, cells)

    def __len__(self):
        return len(self.atoms)

    def __eq__(self, other):
        return (isinstance(other, PartitionField)
                and self.space == other.space
                and frozenset(self._masks) == frozenset(other._masks))

    def __hash__(self):
        return hash((self.space._key, frozenset(self._masks)))

    def __repr__(self):
        return "PartitionField(%d atoms over %r)" % (len(self.atoms), self.space)


def build_space(variables, world_cap=None) -> Space:
    """Construct a Space from ``(name, domain)`` pairs.

    Worlds are indexed deterministically: the first variable is most
    significant, the last varies fastest.
    """
    return Space(variables, world_cap=world_cap)


def eval_formula(space: Space, text: str) -> Proposition:
    """Worlds satisfying a boolean formula over ``var=value`` atoms."""
    return Proposition(space, parse_formula(space, text))


def subfield_of_variables(space: Space, names) -> PartitionField:
    """Field of all propositions referring at most to ``names``.

    Atoms are the classes of worlds agreeing on every listed variable; the
    empty set yields the trivial field whose single atom is the whole space.
    """
    names = set(names)
    unknown = names - set(space.variable_index)
    if unknown:
        raise FormulaError("unknown variables %r" % sorted(unknown))
    if not names:
        return PartitionField.trivial(space)
    picked = [name for name, _ in space.variables if name in names]
    atoms = [space.full_mask]
    for name in picked:
        domain = space.variables[space.variable_index[name]][1]
        value_masks = [space.value_mask(name, digit) for digit in range(len(domain))]
        split = []
        for atom in atoms:
            for value_mask in value_masks:
                cell = atom & value_mask
                if cell:
                    split.append(cell)
        atoms = split
    return PartitionField(space, [Proposition(space, m) for m in atoms])


def field_of_proposition(prop: Proposition) -> PartitionField:
    """Two-atom field {A, -A} of a contingent proposition."""
    if not prop.is_contingent:
        raise NonContingentError(
            "field of a proposition requires a contingent proposition")
    return PartitionField(prop.space, (prop, prop.complement()))


def is_measurable(prop: Proposition, field: PartitionField) -> bool:
    """True iff ``prop`` is a union of atoms of ``field``."""
    check_same_space(prop, field)
    for mask in field.atom_masks:
        hit = prop.mask & mask
        if hit and hit != mask:
            return False
    return True

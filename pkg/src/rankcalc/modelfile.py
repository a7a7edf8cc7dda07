"""Model files: JSON documents describing a space, a ranking and optional
named propositions.

Layout (version 1):

    {
      "version": 1,
      "variables": [{"name": "X", "domain": ["0", "1"]}, ...],
      "ranking": {"table": [{"assignment": {"X": "0", ...}, "rank": 0}, ...]}
                 or {"additive": {"X": {"0": 0, "1": 1}, ...}},
      "propositions": {"name": "formula", ...}        (optional)
    }

Table mode lists every world exactly once with minimum rank 0; additive
mode sums per-variable rank maps, each with minimum 0.  Unknown fields are
rejected.  Saving always emits canonical table mode, so a written model
reloads to an identical ranking.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import FormulaError, ModelFormatError, RankcalcError
from .ranking import RankingFunction
from .revision import EvidenceRanking
from .space import PartitionField, Proposition, Space, build_space, eval_formula

MODEL_VERSION = 1


class Model:
    """A space, its ranking, and named propositions from a model file."""

    __slots__ = ("space", "ranking", "propositions")

    def __init__(self, space: Space, ranking: RankingFunction,
                 propositions: Optional[dict] = None):
        if ranking.space != space:
            raise ModelFormatError("ranking over a different space")
        self.space = space
        self.ranking = ranking
        self.propositions = dict(propositions or {})

    def resolve(self, text: str) -> Proposition:
        """Evaluate a formula, or look up ``@name`` among the model's
        named propositions."""
        if text.startswith("@"):
            name = text[1:]
            if name not in self.propositions:
                raise FormulaError("unknown named proposition %r" % name)
            return self.propositions[name]
        return eval_formula(self.space, text)


def _require_keys(obj, allowed, where):
    unknown = set(obj) - set(allowed)
    if unknown:
        raise ModelFormatError("unknown fields %r in %s" % (sorted(unknown), where))


def model_from_dict(doc: dict, world_cap=None) -> Model:
    if not isinstance(doc, dict):
        raise ModelFormatError("model document must be an object")
    _require_keys(doc, {"version", "variables", "ranking", "propositions"}, "model")
    if doc.get("version") != MODEL_VERSION:
        raise ModelFormatError("unsupported model version %r" % (doc.get("version"),))
    variables = doc.get("variables")
    if not isinstance(variables, list) or not variables:
        raise ModelFormatError("variables must be a non-empty list")
    pairs = []
    for entry in variables:
        if not isinstance(entry, dict):
            raise ModelFormatError("each variable must be an object")
        _require_keys(entry, {"name", "domain"}, "variable")
        name = entry.get("name")
        domain = entry.get("domain")
        if not isinstance(domain, list):
            raise ModelFormatError("variable %r domain must be a list" % (name,))
        pairs.append((name, domain))
    try:
        space = build_space(pairs, world_cap=world_cap)
    except RankcalcError:
        raise
    except Exception as exc:
        raise ModelFormatError("invalid variables: %s" % exc) from exc

    ranking_doc = doc.get("ranking")
    if not isinstance(ranking_doc, dict):
        raise ModelFormatError("ranking must be an object")
    _require_keys(ranking_doc, {"table", "additive"}, "ranking")
    if ("table" in ranking_doc) == ("additive" in ranking_doc):
        raise ModelFormatError("ranking needs exactly one of 'table' or 'additive'")
    if "table" in ranking_doc:
        ranking = _ranking_from_table(space, ranking_doc["table"])
    else:
        ranking = _ranking_from_additive(space, ranking_doc["additive"])

    propositions = {}
    props_doc = doc.get("propositions", {})
    if not isinstance(props_doc, dict):
        raise ModelFormatError("propositions must be an object")
    for name in sorted(props_doc):
        formula = props_doc[name]
        if not isinstance(formula, str):
            raise ModelFormatError("proposition %r must map to a formula" % name)
        propositions[name] = eval_formula(space, formula)
    return Model(space, ranking, propositions)


def _rank_value(value, where):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ModelFormatError("%s rank must be a natural number, got %r"
                               % (where, value))
    return value


def _ranking_from_table(space, table):
    if not isinstance(table, list):
        raise ModelFormatError("ranking table must be a list")
    ranks = [None] * space.n_worlds
    for entry in table:
        if not isinstance(entry, dict):
            raise ModelFormatError("table entries must be objects")
        _require_keys(entry, {"assignment", "rank"}, "table entry")
        assignment = entry.get("assignment")
        if not isinstance(assignment, dict):
            raise ModelFormatError("table assignment must be an object")
        try:
            index = space.index_of(assignment)
        except FormulaError as exc:
            raise ModelFormatError(str(exc)) from exc
        if ranks[index] is not None:
            raise ModelFormatError(
                "world %s listed twice" % space.world_str(index))
        ranks[index] = _rank_value(entry.get("rank"), "table")
    missing = [space.world_str(i) for i, r in enumerate(ranks) if r is None]
    if missing:
        raise ModelFormatError("table misses worlds: %s" % ", ".join(missing[:4]))
    try:
        return RankingFunction(space, ranks)
    except RankcalcError as exc:
        raise ModelFormatError("invalid ranking table: %s" % exc) from exc


def _ranking_from_additive(space, additive):
    if not isinstance(additive, dict):
        raise ModelFormatError("additive ranking must be an object")
    per_variable = {}
    for name, _domain in space.variables:
        if name not in additive:
            raise ModelFormatError("additive ranking misses variable %r" % name)
    _require_keys(additive, {name for name, _ in space.variables}, "additive ranking")
    for name, domain in space.variables:
        value_map = additive[name]
        if not isinstance(value_map, dict):
            raise ModelFormatError("additive entry for %r must be an object" % name)
        _require_keys(value_map, {str(v) for v in domain}, "additive %r" % name)
        digits = {}
        for value in domain:
            key = str(value)
            if key not in value_map:
                raise ModelFormatError(
                    "additive entry for %r misses value %r" % (name, key))
            digits[space.value_digit(name, value)] = _rank_value(
                value_map[key], "additive")
        if min(digits.values()) != 0:
            raise ModelFormatError(
                "additive map for %r must have minimum 0" % name)
        per_variable[name] = digits
    ranks = []
    for index in range(space.n_worlds):
        assignment = space.assignment(index)
        total = 0
        for name, _domain in space.variables:
            total += per_variable[name][space.value_digit(name, assignment[name])]
        ranks.append(total)
    try:
        return RankingFunction(space, ranks)
    except RankcalcError as exc:
        raise ModelFormatError("invalid additive ranking: %s" % exc) from exc


def model_to_dict(model: Model) -> dict:
    """Canonical (table-mode) document for a model."""
    space = model.space
    doc = {
        "version": MODEL_VERSION,
        "variables": [{"name": name, "domain": list(domain)}
                      for name, domain in space.variables],
        "ranking": {"table": [
            {"assignment": space.assignment(i), "rank": model.ranking.world_ranks[i]}
            for i in range(space.n_worlds)
        ]},
    }
    if model.propositions:
        doc["propositions"] = {
            name: _formula_for(model.propositions[name])
            for name in sorted(model.propositions)
        }
    return doc


def _formula_for(prop: Proposition) -> str:
    """A disjunctive formula denoting the proposition exactly."""
    if prop.is_empty:
        name, domain = prop.space.variables[0]
        if len(domain) == 1:
            # no contradiction expressible with a single unary variable
            raise ModelFormatError(
                "cannot serialize the empty proposition on %r" % (prop.space,))
        return "%s=%s and %s=%s" % (name, domain[0], name, domain[1])
    terms = []
    for w in prop.members():
        assignment = prop.space.assignment(w)
        terms.append("(" + " and ".join(
            "%s=%s" % (name, assignment[name])
            for name, _ in prop.space.variables) + ")")
    return " or ".join(terms)


def load_model(path, world_cap=None) -> Model:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("invalid JSON in %s: %s" % (path, exc)) from exc
    return model_from_dict(doc, world_cap=world_cap)


def save_model(model: Model, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_model(model))


def render_model(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def evidence_from_dict(doc: dict, space: Space) -> EvidenceRanking:
    """Evidence file: {"version": 1, "atoms": [{"formula": ..., "rank": n}]}.

    The formulas must carve the space into a partition.
    """
    if not isinstance(doc, dict):
        raise ModelFormatError("evidence document must be an object")
    _require_keys(doc, {"version", "atoms"}, "evidence")
    if doc.get("version") != MODEL_VERSION:
        raise ModelFormatError("unsupported evidence version %r"
                               % (doc.get("version"),))
    atoms_doc = doc.get("atoms")
    if not isinstance(atoms_doc, list) or not atoms_doc:
        raise ModelFormatError("evidence atoms must be a non-empty list")
    atoms = []
    ranks = []
    for entry in atoms_doc:
        if not isinstance(entry, dict):
            raise ModelFormatError("evidence atoms must be objects")
        _require_keys(entry, {"formula", "rank"}, "evidence atom")
        formula = entry.get("formula")
        if not isinstance(formula, str):
            raise ModelFormatError("evidence atom formula must be a string")
        atoms.append(eval_formula(space, formula))
        ranks.append(_rank_value(entry.get("rank"), "evidence"))
    try:
        field = PartitionField(space, atoms)
        return EvidenceRanking(field, ranks)
    except RankcalcError as exc:
        raise ModelFormatError("invalid evidence: %s" % exc) from exc


def load_evidence(path, space: Space) -> EvidenceRanking:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("invalid JSON in %s: %s" % (path, exc)) from exc
    return evidence_from_dict(doc, space)

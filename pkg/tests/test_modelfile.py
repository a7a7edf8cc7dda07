import json

import pytest

from rankcalc import (
    Model,
    ModelFormatError,
    eval_formula,
    load_evidence,
    load_model,
    model_from_dict,
    model_to_dict,
    ranking_from_world_ranks,
    render_model,
    save_model,
)
from conftest import DATA_DIR, REFERENCE_RANKS


def _reference_doc():
    return json.loads((DATA_DIR / "reference_model.json").read_text())


class TestLoad:
    def test_reference_model(self):
        model = load_model(DATA_DIR / "reference_model.json")
        assert model.ranking.world_ranks == REFERENCE_RANKS
        assert model.space.n_worlds == 4
        assert model.propositions["sunny"].members() == (0, 2)

    def test_resolve_named_proposition(self):
        model = load_model(DATA_DIR / "reference_model.json")
        assert model.resolve("@sunny") == eval_formula(model.space, "Y=0")
        with pytest.raises(Exception):
            model.resolve("@unknown")

    def test_unknown_top_level_field_rejected(self):
        doc = _reference_doc()
        doc["comment"] = "nope"
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_version_required(self):
        doc = _reference_doc()
        doc["version"] = 2
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_every_world_exactly_once(self):
        doc = _reference_doc()
        doc["ranking"]["table"] = doc["ranking"]["table"][:3]
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)
        doc = _reference_doc()
        doc["ranking"]["table"].append(doc["ranking"]["table"][0])
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_minimum_rank_zero_enforced(self):
        doc = _reference_doc()
        for entry in doc["ranking"]["table"]:
            entry["rank"] += 1
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_rank_must_be_natural(self):
        doc = _reference_doc()
        doc["ranking"]["table"][0]["rank"] = -1
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)
        doc = _reference_doc()
        doc["ranking"]["table"][0]["rank"] = 0.5
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_exactly_one_ranking_mode(self):
        doc = _reference_doc()
        doc["ranking"]["additive"] = {"X": {"0": 0, "1": 0},
                                      "Y": {"0": 0, "1": 0}}
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)
        doc = _reference_doc()
        del doc["ranking"]["table"]
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)


class TestAdditive:
    def test_additive_ranking_sums(self):
        doc = {
            "version": 1,
            "variables": [{"name": "X", "domain": ["0", "1"]},
                          {"name": "Y", "domain": ["0", "1"]}],
            "ranking": {"additive": {"X": {"0": 0, "1": 1},
                                     "Y": {"0": 0, "1": 2}}},
        }
        model = model_from_dict(doc)
        assert model.ranking.world_ranks == (0, 2, 1, 3)

    def test_additive_per_variable_minimum_zero(self):
        doc = {
            "version": 1,
            "variables": [{"name": "X", "domain": ["0", "1"]}],
            "ranking": {"additive": {"X": {"0": 1, "1": 2}}},
        }
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)

    def test_additive_must_cover_all_values(self):
        doc = {
            "version": 1,
            "variables": [{"name": "X", "domain": ["0", "1"]}],
            "ranking": {"additive": {"X": {"0": 0}}},
        }
        with pytest.raises(ModelFormatError):
            model_from_dict(doc)


class TestRoundTrip:
    def test_write_then_read_is_identity(self, tmp_path, space3):
        import random
        rng = random.Random(2)
        for i in range(10):
            ranks = [rng.randrange(5) for _ in range(8)]
            low = min(ranks)
            ranking = ranking_from_world_ranks(space3,
                                               tuple(r - low for r in ranks))
            model = Model(space3, ranking,
                          {"p": eval_formula(space3, "X=1 and Y=0")})
            path = tmp_path / ("model_%d.json" % i)
            save_model(model, path)
            loaded = load_model(path)
            assert loaded.ranking == model.ranking
            assert loaded.space == model.space
            assert loaded.propositions == model.propositions

    def test_additive_model_reloads_to_same_ranking(self, tmp_path):
        doc = {
            "version": 1,
            "variables": [{"name": "X", "domain": ["0", "1"]},
                          {"name": "Y", "domain": ["0", "1"]}],
            "ranking": {"additive": {"X": {"0": 0, "1": 1},
                                     "Y": {"0": 0, "1": 2}}},
        }
        model = model_from_dict(doc)
        path = tmp_path / "model.json"
        save_model(model, path)
        assert load_model(path).ranking == model.ranking

    def test_render_is_deterministic(self):
        model = load_model(DATA_DIR / "reference_model.json")
        assert render_model(model) == render_model(model)

    def test_canonical_dict_shape(self):
        model = load_model(DATA_DIR / "reference_model.json")
        doc = model_to_dict(model)
        assert list(doc) == ["version", "variables", "ranking", "propositions"]
        assert "table" in doc["ranking"]


class TestEvidence:
    def test_reference_evidence(self):
        model = load_model(DATA_DIR / "reference_model.json")
        evidence = load_evidence(DATA_DIR / "evidence_x.json", model.space)
        assert evidence.atom_ranks == (1, 0)
        assert [a.members() for a in evidence.field.atoms] == [(0, 1), (2, 3)]

    def test_atoms_must_partition(self, tmp_path):
        model = load_model(DATA_DIR / "reference_model.json")
        path = tmp_path / "evidence.json"
        path.write_text(json.dumps({
            "version": 1,
            "atoms": [{"formula": "X=0", "rank": 0},
                      {"formula": "X=0 or Y=1", "rank": 1}],
        }))
        with pytest.raises(ModelFormatError):
            load_evidence(path, model.space)

    def test_minimum_zero_enforced(self, tmp_path):
        model = load_model(DATA_DIR / "reference_model.json")
        path = tmp_path / "evidence.json"
        path.write_text(json.dumps({
            "version": 1,
            "atoms": [{"formula": "X=0", "rank": 1},
                      {"formula": "X=1", "rank": 2}],
        }))
        with pytest.raises(ModelFormatError):
            load_evidence(path, model.space)

    def test_invalid_json_reported(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ModelFormatError):
            load_model(path)

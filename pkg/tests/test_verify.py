import pytest

from rankcalc import RankcalcError, SuiteConfig, load_model, run_suites
from rankcalc.verify import (
    binary_space,
    iter_random_rankings,
    random_additive_ranking,
    union_law_exhaustive_sweep,
)
from conftest import DATA_DIR


def test_random_rankings_are_valid_and_seeded():
    first = [r.world_ranks for r in iter_random_rankings(5, 30, 3, 4)]
    second = [r.world_ranks for r in iter_random_rankings(5, 30, 3, 4)]
    assert first == second
    for ranks in first:
        assert min(ranks) == 0
        assert max(ranks) <= 4
    sizes = {len(r) for r in first}
    assert sizes == {2, 4, 8}  # cycles through 1..3 binary variables


def test_additive_rankings_factor():
    import random
    from rankcalc import independent, subfield_of_variables
    space = binary_space(3)
    rng = random.Random(3)
    for _ in range(20):
        ranking = random_additive_ranking(rng, space, 4)
        assert min(ranking.world_ranks) == 0
        fx = subfield_of_variables(space, {"V1"})
        fyz = subfield_of_variables(space, {"V2", "V3"})
        assert independent(ranking, fx, fyz)


def test_union_law_sweep_shape():
    checked, triples, violations, note = union_law_exhaustive_sweep(max_rank=1)
    assert checked == 15  # 2^4 - 1 vectors with minimum 0
    assert violations == 0
    assert note == ""


def test_run_suites_rejects_unknown_name():
    with pytest.raises(RankcalcError):
        run_suites("nope", SuiteConfig(count=1))


def test_suite_reports_are_deterministic():
    config = SuiteConfig(seed=7, count=30, max_vars=2, max_rank=3)
    first = run_suites("laws", config)
    second = run_suites("laws", config)
    assert first.render() == second.render()
    assert first.ok


def test_model_population_runs_all_suites():
    model = load_model(DATA_DIR / "reference_model.json")
    report = run_suites("all", SuiteConfig(count=10), model)
    assert report.ok
    names = [line.name for line in report.lines]
    assert "union-law-needs-proviso" in names
    assert "order-correspondence-exhaustive-small" in names
    assert "consonance-nonclosure" in names


def test_bridge_instances_capped():
    config = SuiteConfig(count=5000)
    assert config.bridge_instances == 1000
    config = SuiteConfig(count=200)
    assert config.bridge_instances == 200
    config = SuiteConfig(count=5000, bridge_count=50)
    assert config.bridge_instances == 50

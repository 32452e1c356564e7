import pytest

import nqopt


def test_cost_fixtures():
    assert nqopt.evaluate_cost([0, 4, 7, 5, 2, 6, 1, 3]) == 0
    assert nqopt.evaluate_cost([0, 1, 2, 3, 4, 5, 6, 7]) == 56
    assert nqopt.evaluate_cost([3, 3, 3, 3, 3, 3, 3, 3]) == 7
    assert nqopt.max_cost(8) == 63


def test_algorithm_listing():
    names = nqopt.algorithms()
    assert len(names) == 7
    assert "brado" in names and "ls" in names


def test_solve_is_deterministic():
    first = nqopt.solve("ls", 8, seed=11)
    second = nqopt.solve("ls", 8, seed=11)
    assert first["best"] == second["best"]
    assert first["cost"] == second["cost"]
    assert first["nfe"] == second["nfe"]
    assert nqopt.evaluate_cost(first["best"]) == first["cost"]


def test_solve_every_algorithm():
    for name in nqopt.algorithms():
        run = nqopt.solve(name, 8, seed=5)
        assert run["algorithm"] == name
        assert run["n"] == 8
        assert 0 <= run["cost"] <= nqopt.max_cost(8)
        assert len(run["best"]) == 8
        assert run["nfe"] >= 1


def test_config_override_and_errors():
    base = nqopt.default_config("ga")
    assert "population" in base
    run = nqopt.solve("ga", 8, seed=3, config={"population": 40})
    assert run["cost"] >= 0
    with pytest.raises(ValueError):
        nqopt.solve("ga", 8, seed=3, config={"warp_factor": 9})
    with pytest.raises(ValueError):
        nqopt.solve("warp", 8, seed=3)


def test_reference_configs_cover_known_sizes():
    sizes = nqopt.reference_sizes()
    assert 8 in sizes
    config = nqopt.reference_config("brado", 8)
    assert config is not None and "population" in config
    assert nqopt.reference_config("brado", 9) is None


def test_tuning_factors_shape():
    factors = nqopt.tuning_factors("ls")
    names = [name for name, _ in factors]
    assert names == ["max_stall", "radius"]
    assert all(len(levels) in (2, 4) for _, levels in factors)


def test_topsis_ranking():
    out = nqopt.topsis_rank(
        [[1.0, 10.0], [4.0, 40.0], [2.0, 20.0]],
        [0.5, 0.5],
        ["min", "min"],
    )
    assert out["ranking"][0] == 0
    assert len(out["closeness"]) == 3
    with pytest.raises(ValueError):
        nqopt.topsis_rank([[1.0]], [1.0], ["sideways"])


def test_self_check_green():
    results = nqopt.self_check()
    assert results and all(entry["pass"] for entry in results)

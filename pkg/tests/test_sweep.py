from fractions import Fraction

import pandas as pd
import pytest

from polynorm.errors import ConsistencyError, DimensionMismatchError
from polynorm.norm import NORM_ROUTES
from polynorm.poly.parser import parse
from polynorm.sweep import NormSweep, grid


def test_grid():
    points = list(grid(Fraction(1, 2), 1, 2))
    assert len(points) == 25
    assert points[0] == (-1, -1)
    assert points[-1] == (1, 1)
    assert list(grid(2, 1, 1)) == [(0,)]
    with pytest.raises(ValueError):
        list(grid(0, 1, 1))


def test_unknown_route(borromean):
    with pytest.raises(ValueError, match="Unknown norm routes"):
        NormSweep(borromean, routes=("def", "simplex"))


def test_evaluate_row(borromean):
    sweep = NormSweep(borromean)
    row = sweep.evaluate((1, 1, 1))
    assert row == {
        "phi_t1": "1", "phi_t2": "1", "phi_t3": "1",
        "def": "3", "width": "3", "specialize": "3",
        "active_alpha": "1 1 1", "active_beta": "0 0 0",
        "in_ball": False,
    }
    assert sweep.history == [row]


def test_rational_dual_vectors_skip_integer_routes(borromean):
    row = NormSweep(borromean).evaluate((Fraction(1, 3), Fraction(-1, 3), 0))
    assert row["def"] == "2/3"
    assert row["specialize"] is None
    assert row["in_ball"] is True


def test_indeterminate_specialization_is_reported():
    f = parse("t1 - t2 + t1^2 - t2^2", ["t1", "t2"])
    row = NormSweep(f).evaluate((1, 1))
    assert row["specialize"] == "indeterminate"
    assert row["def"] == "1"


def test_dimension_mismatch(borromean):
    with pytest.raises(DimensionMismatchError):
        NormSweep(borromean).evaluate((1, 0))


def test_monomial_sweep_has_no_ball():
    sweep = NormSweep(parse("t1*t2", ["t1", "t2"]))
    assert sweep.ball is None
    assert sweep.evaluate((3, 4))["in_ball"] is True


def test_run_grid_lifts_essential_points(great_circle):
    sweep = NormSweep(great_circle, routes=("def", "width"), variables=[f"x{i}" for i in range(6)])
    history = sweep.run_grid(Fraction(1, 4), Fraction(1, 2))
    assert len(history) == 25
    assert set(history[0]) >= {"phi_x0", "phi_x5", "def", "width"}
    inside = [row for row in history if row["in_ball"]]
    assert len(inside) == 9
    assert all(Fraction(row["def"]) <= 1 for row in inside)


def test_history_as_dataframe(tmp_path, borromean):
    sweep = NormSweep(borromean)
    sweep.run([(1, 0, 0), (0, 1, 0), (1, -1, 2)], verbose=True)
    frame = sweep.get_history_as_dataframe()
    assert isinstance(frame, pd.DataFrame)
    assert list(frame["def"]) == ["1", "1", "4"]
    path = tmp_path / "history.csv"
    sweep.save_history(str(path))
    assert pd.read_csv(path)["width"].tolist() == [1, 1, 4]


def test_disagreement_is_reported(monkeypatch, borromean):
    sweep = NormSweep(borromean)
    monkeypatch.setattr(NORM_ROUTES["width"], "compute_norm", lambda f, phi: Fraction(99))
    with pytest.raises(ConsistencyError):
        sweep.evaluate((1, 0, 0))

import json
import math
import os

import pytest

import evtolopt


def repo_root():
    env = os.environ.get("EVTOL_REPO_ROOT")
    if env:
        return env
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.dirname(os.path.dirname(here))


def test_default_scenario_shape():
    cfg = evtolopt.default_scenario()
    assert cfg["mission"]["trip_distance_m"] == 70000.0
    assert cfg["operations"]["seats"] == 4
    assert len(evtolopt.design_variables()) == 6


def test_evaluate_reference_design():
    path = os.path.join(repo_root(), "data", "designs", "toc.json")
    with open(path) as f:
        design = json.load(f)
    report = evtolopt.evaluate(design)
    assert report["feasible"] is True
    assert math.isclose(report["mass"]["mtom_kg"], 1632.997745, rel_tol=1e-5)
    assert math.isclose(report["costs_eur"]["toc"], 92.249037, rel_tol=1e-5)
    total = (report["mass"]["payload_kg"] + report["mass"]["empty_kg"] +
             report["mass"]["battery_kg"])
    assert report["mass"]["mtom_kg"] == total


def test_out_of_bounds_design_raises():
    design = {"span_m": 99.0, "chord_m": 1.0, "r_cruise_m": 1.0,
              "r_hover_m": 1.0, "rho_battery_wh_kg": 300.0,
              "c_charge_per_h": 2.0}
    with pytest.raises(evtolopt.ModelError):
        evtolopt.evaluate(design)


def test_scenario_override_changes_result():
    cfg = evtolopt.default_scenario()
    cfg["economics"]["electricity_price_kwh"] = 0.2
    path = os.path.join(repo_root(), "data", "designs", "toc.json")
    with open(path) as f:
        design = json.load(f)
    base = evtolopt.evaluate(design)
    priced = evtolopt.evaluate(design, cfg)
    assert priced["costs_eur"]["c_energy"] > base["costs_eur"]["c_energy"]
    assert priced["scenario_fingerprint"] != base["scenario_fingerprint"]


def test_optimize_small_run():
    result = evtolopt.optimize("min_toc", seed=11, starts=3)
    assert result["success"] is True
    assert result["report"]["feasible"] is True
    assert result["best_value"] <= 110.0

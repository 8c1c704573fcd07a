import json
import math

import numpy as np
import pytest

from ccrlab import cli
from ccrlab import dynamics as dyn
from ccrlab.exceptions import ConfigError, SizeLimitError
from ccrlab.scenarios import (
    SCENARIO_NAMES,
    ScenarioConfig,
    convergence_sweep,
    profile_from_spec,
    run_scenario,
    simulated_atomic_density,
    validate,
)


def all_numbers_finite(obj):
    if isinstance(obj, dict):
        return all(all_numbers_finite(v) for v in obj.values())
    if isinstance(obj, (list, tuple)):
        return all(all_numbers_finite(v) for v in obj)
    if isinstance(obj, float):
        return math.isfinite(obj)
    return True


class TestConfig:
    def test_defaults(self):
        cfg = ScenarioConfig(scenario="infinity")
        assert cfg.times[-1] == pytest.approx(math.pi / 2)
        assert cfg.tolerance("rho_match") == 1e-10

    def test_from_dict_scalar_n(self):
        cfg = ScenarioConfig.from_dict({"scenario": "reducible-brute", "N": 2})
        assert cfg.n_values == (2,)

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown config key"):
            ScenarioConfig.from_dict({"scenario": "infinity", "bogus": 1})

    def test_times_domain(self):
        with pytest.raises(ConfigError, match="0, 2"):
            ScenarioConfig(scenario="infinity", times=(7.0,))

    def test_nonpositive_tolerance_rejected(self):
        with pytest.raises(ConfigError, match="positive"):
            ScenarioConfig(scenario="infinity", tolerances={"rho_match": 0.0})

    def test_tolerance_override(self):
        cfg = ScenarioConfig(scenario="infinity", tolerances={"rho_match": 1e-6})
        assert cfg.tolerance("rho_match") == 1e-6

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({
            "scenario": "reducible-limit",
            "N": [100, 1000],
            "profile": {"kind": "uniform", "modes": 4},
            "seed": 9,
        }))
        cfg = ScenarioConfig.from_file(path)
        assert cfg.scenario == "reducible-limit"
        assert cfg.n_values == (100, 1000)
        assert cfg.seed == 9

    def test_unknown_scenario(self):
        with pytest.raises(ConfigError, match="unknown scenario"):
            run_scenario(ScenarioConfig(scenario="mystery"))


class TestProfileSpec:
    def test_uniform(self):
        profile, selected = profile_from_spec({"kind": "uniform", "modes": 4})
        assert selected == ("k1", "k2")
        assert profile.z_max == pytest.approx(0.25)

    def test_plateau_with_selection(self):
        spec = {"kind": "plateau", "modes": 6, "window": [0, 2], "rate": 1.5,
                "selected": [0, 4]}
        profile, selected = profile_from_spec(spec)
        assert selected == ("k1", "k5")
        z = profile.probabilities
        assert z[0] == pytest.approx(z[2])
        assert z[4] < z[2]

    def test_unknown_kind(self):
        with pytest.raises(ConfigError, match="profile kind"):
            profile_from_spec({"kind": "gaussian"})

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="profile key"):
            profile_from_spec({"kind": "uniform", "shape": 1})

    def test_selection_out_of_range(self):
        with pytest.raises(ConfigError, match="out of range"):
            profile_from_spec({"kind": "uniform", "modes": 2, "selected": [0, 5]})


@pytest.mark.parametrize("name", sorted(SCENARIO_NAMES))
class TestScenariosPass:
    def test_runs_green(self, name):
        cfg = ScenarioConfig(scenario=name)
        if name == "reducible-limit":
            cfg = ScenarioConfig(
                scenario=name, n_values=(100, 1000),
                profile={"kind": "uniform", "modes": 4},
            )
        report = run_scenario(cfg)
        assert report.passed, [c for c in report.checks if not c.passed]
        assert report.records
        assert all_numbers_finite(report.to_dict())
        for check in report.checks:
            assert check.tolerance >= 0.0


class TestScenarioContent:
    def test_infinity_concurrence_unity_at_half_pi(self):
        report = run_scenario(ScenarioConfig(scenario="infinity"))
        by_name = {c.name: c for c in report.checks}
        assert by_name["concurrence_at_half_pi"].measured <= 1e-10
        assert by_name["initial_mode_entropy_ln2"].passed

    def test_infinity_skips_when_half_pi_absent(self):
        report = run_scenario(ScenarioConfig(
            scenario="infinity", times=(0.0, 0.5)))
        assert any(s["check"] == "concurrence_at_half_pi" for s in report.skipped)

    def test_berezin_nonproduct_and_agreement(self):
        report = run_scenario(ScenarioConfig(scenario="berezin"))
        by_name = {c.name: c for c in report.checks}
        assert by_name["propagator_nonproduct_atom1"].measured >= 1e-2
        assert by_name["propagator_nonproduct_atom1_field"].measured >= 1e-2
        assert by_name["agrees_with_infinity_rep"].measured <= 1e-10
        assert by_name["bell_times_unique_vacuum"].measured <= 1e-10

    def test_reducible_brute_coherence_extinction(self):
        report = run_scenario(ScenarioConfig(scenario="reducible-brute"))
        by_name = {c.name: c for c in report.checks}
        assert by_name["coherence_extinct_n1_closed_form"].measured == 0.0
        assert by_name["coherence_extinct_n1_brute"].measured <= 1e-10
        assert by_name["brute_force_matches_closed_form"].measured <= 1e-8

    def test_reducible_brute_size_ceiling_raises_when_nothing_runs(self):
        with pytest.raises(SizeLimitError):
            run_scenario(ScenarioConfig(scenario="reducible-brute", n_values=(9,)))

    def test_reducible_brute_partial_skip(self):
        report = run_scenario(ScenarioConfig(
            scenario="reducible-brute", n_values=(1, 9)))
        assert report.passed
        assert any("brute_force_N9" == s["check"] for s in report.skipped)

    def test_single_mode_entropies(self):
        report = run_scenario(ScenarioConfig(scenario="single-mode"))
        rows = {r["n"]: r for r in report.records if r["kind"] == "reducible"}
        assert rows[1]["entropy"] == pytest.approx(0.0, abs=1e-12)
        assert rows[2]["entropy"] == pytest.approx(math.log(2.0), abs=1e-12)
        inf_rows = [r for r in report.records if r["kind"] == "infinity"]
        assert inf_rows[0]["entropy"] == pytest.approx(0.0, abs=1e-12)

    def test_sweep_distances_decrease(self):
        cfg = ScenarioConfig(
            scenario="reducible-limit", n_values=(100, 400),
            profile={"kind": "uniform", "modes": 4},
            times=(0.0, math.pi / 2),
        )
        report = convergence_sweep(cfg)
        assert report.passed
        rows = {(r["n"], r["t"]): r["trace_distance"] for r in report.records}
        assert rows[(400, math.pi / 2)] < rows[(100, math.pi / 2)]
        assert rows[(100, 0.0)] == pytest.approx(0.0, abs=1e-12)

    def test_sweep_asymmetric_profile(self):
        cfg = ScenarioConfig(
            scenario="reducible-limit", n_values=(50, 200),
            profile={"kind": "plateau", "modes": 5, "window": [0, 1],
                     "rate": 1.0, "selected": [0, 3]},
            times=(math.pi / 4,),
        )
        report = convergence_sweep(cfg)
        assert report.passed
        # asymmetric profile: no plateau-match check emitted
        assert not any("limit_matches" in c.name for c in report.checks)


class TestSimulatedDensity:
    def test_matches_closed_form_row(self):
        from ccrlab.representations import VacuumProfile, build_reducible

        prof = VacuumProfile.uniform(2)
        rep = build_reducible(3, prof, n_max=1)
        brute = simulated_atomic_density(rep, 0.8, ("k1", "k2"), renormalize=True)
        closed = dyn.rho_atoms_reducible(0.8, 3, 0.5, 0.5, 0.5)
        assert np.max(np.abs(brute - closed)) <= 1e-8


class TestReports:
    def test_write_outputs(self, tmp_path):
        report = run_scenario(ScenarioConfig(scenario="infinity"))
        paths = report.write(tmp_path)
        assert paths["json"].exists()
        assert paths["csv"].exists()
        assert paths["rho_csv"].exists()
        payload = json.loads(paths["json"].read_text())
        assert payload["passed"] is True
        assert payload["checks"][0]["tolerance"] > 0

    def test_csv_round_trip_precision(self, tmp_path):
        report = run_scenario(ScenarioConfig(scenario="infinity"))
        paths = report.write(tmp_path)
        lines = paths["csv"].read_text().strip().splitlines()
        header = lines[0].split(",")
        t_col = header.index("t")
        conc_col = header.index("concurrence")
        values = [float(line.split(",")[conc_col]) for line in lines[1:]]
        times = [float(line.split(",")[t_col]) for line in lines[1:]]
        for t, v in zip(times, values):
            assert v == pytest.approx(report.records[times.index(t)]["concurrence"],
                                      abs=0.0)

    def test_byte_identical_reruns(self):
        cfg = ScenarioConfig(scenario="reducible-brute", seed=5)
        a = run_scenario(cfg)
        b = run_scenario(cfg)
        assert a.json_bytes() == b.json_bytes()
        assert a.csv_bytes() == b.csv_bytes()
        assert a.rho_csv_bytes() == b.rho_csv_bytes()


class TestValidate:
    def test_green_and_deterministic(self):
        a = validate(seed=0)
        b = validate(seed=0)
        assert a.passed
        assert a.json_bytes() == b.json_bytes()
        assert a.csv_bytes() == b.csv_bytes()

    @pytest.mark.parametrize("seed", [1, 17, 123456789])
    def test_verdicts_seed_robust(self, seed):
        report = validate(seed=seed)
        assert report.passed
        assert {c.name for c in report.checks} == {
            c.name for c in validate(seed=0).checks
        }

    def test_injected_sign_flip_detected(self, monkeypatch):
        original = dyn.closed_form_evolution

        def flipped(a, t):
            u = original(a, t)
            d = a.shape[0]
            u = u.copy()
            u[:d, d:] *= -1.0  # wrong sign on one sinc block
            u[d:, :d] *= -1.0
            return u

        monkeypatch.setattr(dyn, "closed_form_evolution", flipped)
        report = validate(seed=0)
        by_name = {c.name: c for c in report.checks}
        assert not by_name["propagator_closed_form"].passed
        assert by_name["propagator_closed_form"].measured > 0.1
        assert not report.passed


class TestCli:
    def test_run_writes_and_exits_zero(self, tmp_path, capsys):
        code = cli.main(["run", "--scenario", "infinity", "--out", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "infinity.json").exists()
        out = capsys.readouterr().out
        assert "[PASS]" in out

    def test_run_with_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"scenario": "single-mode", "N": [1, 2]}))
        code = cli.main(["run", "--config", str(cfg), "--out", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "single-mode.csv").exists()

    def test_sweep(self, tmp_path):
        cfg = tmp_path / "sweep.json"
        cfg.write_text(json.dumps({
            "scenario": "reducible-limit",
            "N": [100, 300],
            "profile": {"kind": "uniform", "modes": 4},
            "times": [0.0, 1.5707963267948966],
        }))
        code = cli.main(["sweep", "--config", str(cfg), "--out", str(tmp_path)])
        assert code == 0
        header = (tmp_path / "reducible-limit.csv").read_text().splitlines()[0]
        assert header == "n,t,z1,z2,z,trace_distance"

    def test_validate_deterministic_files(self, tmp_path):
        assert cli.main(["validate", "--seed", "3",
                         "--out", str(tmp_path / "a")]) == 0
        assert cli.main(["validate", "--seed", "3",
                         "--out", str(tmp_path / "b")]) == 0
        a = (tmp_path / "a" / "validate.json").read_bytes()
        b = (tmp_path / "b" / "validate.json").read_bytes()
        assert a == b

    def test_scenario_flag_overrides_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"scenario": "infinity", "seed": 2}))
        code = cli.main(["run", "--scenario", "berezin", "--config", str(cfg),
                         "--out", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "berezin.json").exists()
        payload = json.loads((tmp_path / "berezin.json").read_text())
        assert payload["provenance"]["config"]["seed"] == 2

    def test_config_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"scenario": "mystery"}))
        assert cli.main(["run", "--config", str(bad)]) == 2

    def test_size_error_exit_code(self, tmp_path):
        big = tmp_path / "big.json"
        big.write_text(json.dumps({"scenario": "reducible-brute", "N": [9]}))
        assert cli.main(["run", "--config", str(big), "--out", str(tmp_path)]) == 3

    def test_missing_scenario_is_config_error(self):
        assert cli.main(["run"]) == 2

"""Experiment runner tests: schemas, determinism, dominance, small-scale sanity."""

import csv
import math

import numpy as np
import pytest

from sortkern.errors import ConfigError
from sortkern.experiments import (
    Experiment,
    ExperimentConfig,
    resolved_slope_depth,
    run,
    run_bounds_report,
    run_eigen_decay,
    run_interp_compare,
    run_table1,
    run_tail_curves,
)
from sortkern.geometry import Domain, cone_parameters
from sortkern.kernels import KernelSpec
from sortkern.spectral import SpectrumEstimate

KERNEL = KernelSpec(amplitude=1 / (2 * math.pi), bandwidth=1.0)
NARROW = KernelSpec(amplitude=1 / (2 * math.pi), bandwidth=0.08)


def cfg(tmp_path, name, experiment, **kw):
    base = dict(experiment=experiment, kernel=KERNEL, dims=(3,), ns=(40,),
                trials=3, candidate_count=2000, mc_samples=2000,
                seed=11235, out_path=str(tmp_path / name))
    base.update(kw)
    return ExperimentConfig(**base)


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestConfigValidation:
    def test_zero_trials_rejected(self, tmp_path):
        with pytest.raises(ConfigError, match="trials"):
            cfg(tmp_path, "x.csv", Experiment.TABLE1, trials=0)

    def test_empty_dims_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            cfg(tmp_path, "x.csv", Experiment.TABLE1, dims=())

    def test_nonpositive_dim_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            cfg(tmp_path, "x.csv", Experiment.TABLE1, dims=(3, 0))

    def test_alpha_at_one_rejected(self, tmp_path):
        with pytest.raises(ConfigError, match="alpha"):
            cfg(tmp_path, "x.csv", Experiment.TABLE1, alpha=1.0)

    def test_non_enum_experiment_rejected(self, tmp_path):
        with pytest.raises(ConfigError, match="experiment"):
            cfg(tmp_path, "x.csv", "table1")

    def test_tail_needs_eps_grid(self, tmp_path):
        with pytest.raises(ConfigError, match="eps"):
            run_tail_curves(cfg(tmp_path, "x.csv", Experiment.TAIL_CURVES))


class TestTable1:
    def test_schema_and_row_count(self, tmp_path):
        c = cfg(tmp_path, "t1.csv", Experiment.TABLE1, dims=(2, 3), ns=(20, 40))
        rows = run_table1(c)
        assert len(rows) == 4
        file_rows = read_rows(c.out_path)
        assert list(file_rows[0]) == ["d", "n", "trials", "mean_h",
                                      "mean_h_sorted", "se_h", "se_h_sorted"]
        assert len(file_rows) == 4

    def test_sorted_mean_dominated(self, tmp_path):
        c = cfg(tmp_path, "t1.csv", Experiment.TABLE1, dims=(2, 5), ns=(30,))
        for row in run_table1(c):
            assert row["mean_h_sorted"] <= row["mean_h"]
            assert row["se_h"] >= 0 and row["se_h_sorted"] >= 0

    def test_byte_identical_across_runs(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.TABLE1)
        b = cfg(tmp_path, "b.csv", Experiment.TABLE1)
        run_table1(a)
        run_table1(b)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_seed_changes_output(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.TABLE1)
        b = cfg(tmp_path, "b.csv", Experiment.TABLE1, seed=999)
        run_table1(a)
        run_table1(b)
        assert (tmp_path / "a.csv").read_bytes() != (tmp_path / "b.csv").read_bytes()

    def test_floats_round_trip_exactly(self, tmp_path):
        c = cfg(tmp_path, "t1.csv", Experiment.TABLE1)
        rows = run_table1(c)
        file_rows = read_rows(c.out_path)
        for mem, disk in zip(rows, file_rows):
            # 17 significant digits reproduce the double bit for bit
            assert float(disk["mean_h"]) == mem["mean_h"]
            assert float(disk["se_h_sorted"]) == mem["se_h_sorted"]


class TestTailCurves:
    def test_schema_dominance_and_monotone(self, tmp_path):
        c = cfg(tmp_path, "tc.csv", Experiment.TAIL_CURVES, trials=8,
                eps_grid=(0.2, 0.4, 0.6, 0.8))
        rows = run_tail_curves(c)
        assert len(rows) == 4
        prev = None
        for row in rows:
            assert 0.0 <= row["bound_plain"] <= 1.0
            assert 0.0 <= row["bound_sorted"] <= 1.0
            assert row["emp_p_sorted"] <= row["emp_p_plain"]
            if prev is not None:
                assert row["emp_p_plain"] <= prev["emp_p_plain"]
                assert row["emp_p_sorted"] <= prev["emp_p_sorted"]
            prev = row

    def test_exceedance_is_strict(self, tmp_path):
        # with a single trial the empirical probability is 0 or 1; an eps
        # equal to the realized h must count as no exceedance
        c = cfg(tmp_path, "tc.csv", Experiment.TAIL_CURVES, trials=1,
                eps_grid=(10.0,))
        row = run_tail_curves(c)[0]
        assert row["emp_p_plain"] == 0.0

    def test_byte_identical(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.TAIL_CURVES, eps_grid=(0.3, 0.6))
        b = cfg(tmp_path, "b.csv", Experiment.TAIL_CURVES, eps_grid=(0.3, 0.6))
        run_tail_curves(a)
        run_tail_curves(b)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


class TestInterpCompare:
    def test_modes_and_schema(self, tmp_path):
        c = cfg(tmp_path, "ic.csv", Experiment.INTERP_COMPARE, kernel=NARROW,
                dims=(2,), ns=(15, 30), trials=2)
        rows = run_interp_compare(c)
        assert len(rows) == 2 * 2 * 3
        assert [r["mode"] for r in rows[:3]] == ["plain", "sorted", "perm_single"]
        file_rows = read_rows(c.out_path)
        assert list(file_rows[0]) == ["d", "n", "trial", "mode", "l2_error",
                                      "l2_bound_value", "pointwise_max_error",
                                      "fit_ms"]
        # the returned rows carry diagnostics the CSV omits
        assert "fill_distance" in rows[0] and "bound_valid" in rows[0]

    def test_errors_finite_and_bounded(self, tmp_path):
        c = cfg(tmp_path, "ic.csv", Experiment.INTERP_COMPARE, kernel=NARROW,
                dims=(2,), ns=(25,), trials=3)
        for row in run_interp_compare(c):
            assert math.isfinite(row["l2_error"])
            assert math.isfinite(row["pointwise_max_error"])
            assert row["fit_ms"] >= 0.0
            assert row["l2_error"] ** 2 <= row["l2_bound_value"]

    def test_plain_and_perm_share_bound_value(self, tmp_path):
        c = cfg(tmp_path, "ic.csv", Experiment.INTERP_COMPARE, kernel=NARROW,
                dims=(2,), ns=(15,), trials=2)
        rows = run_interp_compare(c)
        for t in range(2):
            group = rows[3 * t:3 * t + 3]
            assert group[0]["l2_bound_value"] == group[2]["l2_bound_value"]
            assert group[0]["fill_distance"] == group[2]["fill_distance"]
            assert group[1]["fill_distance"] <= group[0]["fill_distance"]

    def test_deterministic_outside_timing(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.INTERP_COMPARE, kernel=NARROW,
                dims=(2,), ns=(15,), trials=2)
        b = cfg(tmp_path, "b.csv", Experiment.INTERP_COMPARE, kernel=NARROW,
                dims=(2,), ns=(15,), trials=2)
        ra = run_interp_compare(a)
        rb = run_interp_compare(b)
        for x, y in zip(ra, rb):
            for col in ("d", "n", "trial", "mode", "l2_error", "l2_bound_value",
                        "pointwise_max_error", "fill_distance", "bound_valid"):
                assert x[col] == y[col]

    def test_dim_above_averaged_cap_rejected(self, tmp_path):
        c = cfg(tmp_path, "ic.csv", Experiment.INTERP_COMPARE, dims=(9,))
        with pytest.raises(ConfigError, match="averaged"):
            run_interp_compare(c)


class TestEigenDecay:
    def test_schema_and_content(self, tmp_path):
        c = cfg(tmp_path, "ed.csv", Experiment.EIGEN_DECAY, dims=(2,), ns=(60,),
                trials=3)
        rows = run_eigen_decay(c)
        j_top = 60 // 4
        assert len(rows) == 2 * (j_top - 1)
        plain = [r for r in rows if r["mode"] == "plain"]
        assert [r["j"] for r in plain] == list(range(2, j_top + 1))
        lam = [r["lambda_hat"] for r in plain]
        assert all(a >= b for a, b in zip(lam, lam[1:]))
        assert len({r["slope"] for r in plain}) == 1
        assert all(r["trace_err"] <= 1e-8 for r in rows)

    def test_sorted_slope_steeper_here(self, tmp_path):
        c = cfg(tmp_path, "ed.csv", Experiment.EIGEN_DECAY, dims=(3,), ns=(80,),
                trials=3)
        rows = run_eigen_decay(c)
        slope = {r["mode"]: r["slope"] for r in rows}
        assert slope["sorted"] < slope["plain"]

    def test_too_small_m_rejected(self, tmp_path):
        c = cfg(tmp_path, "ed.csv", Experiment.EIGEN_DECAY, ns=(10,))
        with pytest.raises(ConfigError, match="m >="):
            run_eigen_decay(c)

    def test_byte_identical(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.EIGEN_DECAY, dims=(2,), ns=(40,))
        b = cfg(tmp_path, "b.csv", Experiment.EIGEN_DECAY, dims=(2,), ns=(40,))
        run_eigen_decay(a)
        run_eigen_decay(b)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


class TestResolvedSlopeDepth:
    def make(self, lam):
        return SpectrumEstimate(mode=None, m=len(lam),
                                eigenvalues=np.asarray(lam, dtype=float), seed=0)

    def test_truncates_at_noise_floor(self):
        lam = np.concatenate([np.geomspace(1.0, 1e-10, 8), np.full(8, 1e-18)])
        assert resolved_slope_depth([self.make(lam)], 16) == 8

    def test_clean_spectrum_keeps_cap(self):
        lam = np.geomspace(1.0, 1e-6, 12)
        assert resolved_slope_depth([self.make(lam)], 10) == 10

    def test_short_resolved_range_rejected(self):
        lam = np.concatenate([np.geomspace(1.0, 1e-2, 3), np.full(13, 1e-19)])
        with pytest.raises(ConfigError, match="slope"):
            resolved_slope_depth([self.make(lam)], 16)


class TestBoundsReport:
    def test_values_match_library(self, tmp_path):
        c = cfg(tmp_path, "br.csv", Experiment.BOUNDS_REPORT, dims=(2, 4))
        rows = run_bounds_report(c)
        assert len(rows) == 4  # nu in {1, 2} per d
        for row in rows:
            cube = cone_parameters(row["d"], Domain.CUBE)
            srt = cone_parameters(row["d"], Domain.SORTED_SIMPLEX)
            assert row["theta_cube"] == cube.theta
            assert row["radius_simplex"] == srt.radius
            assert row["tilde_constant"] > 0 and row["p_constant"] > 0

    def test_byte_identical(self, tmp_path):
        a = cfg(tmp_path, "a.csv", Experiment.BOUNDS_REPORT)
        b = cfg(tmp_path, "b.csv", Experiment.BOUNDS_REPORT)
        run_bounds_report(a)
        run_bounds_report(b)
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


class TestDispatch:
    def test_run_routes_by_experiment(self, tmp_path):
        c = cfg(tmp_path, "br.csv", Experiment.BOUNDS_REPORT, dims=(2,))
        assert run(c) == run_bounds_report(
            cfg(tmp_path, "br2.csv", Experiment.BOUNDS_REPORT, dims=(2,)))

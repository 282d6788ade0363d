"""Library-level checks for the sweep drivers and the table writer."""

import io
import math
from contextlib import redirect_stdout

import numpy as np
import pytest

from floquet_complexity.complexity import floquet_complexity, sweep_derivatives, time_average
from floquet_complexity.model import ModelParams, PhaseLabel, anisotropy
from floquet_complexity.output import format_cell, write_table
from floquet_complexity.sweeps import (
    run_average_sweep,
    run_oracle_comparison,
    run_phase_grid,
)

OMEGA = math.pi


def small_params(**kw):
    args = dict(J=0.01 * OMEGA, g0=OMEGA / 2, g1=OMEGA, omega=OMEGA, L=16, ell=2)
    args.update(kw)
    return ModelParams(**args)


class TestFormatCell:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (True, "true"),
            (False, "false"),
            (1.5, "1.5000000000000000e+00"),
            (float("nan"), "nan"),
            (None, ""),
            (PhaseLabel.PM, "PM"),
            (7, "7"),
            ("label", "label"),
        ],
    )
    def test_rendering(self, value, expected):
        assert format_cell(value) == expected

    def test_numpy_float_uses_scientific_form(self):
        assert format_cell(np.float64(0.25)) == "2.5000000000000000e-01"


class TestWriteTable:
    def test_file_layout(self, tmp_path):
        path = tmp_path / "t.csv"
        write_table(
            str(path),
            {"b_key": 2, "a_key": 1.0},
            ["x", "y"],
            [(1.0, True), (2.0, False)],
            footer={"z_note": "done", "m_note": 3},
        )
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# a_key = 1.0000000000000000e+00"
        assert lines[1] == "# b_key = 2"
        assert lines[2] == "x,y"
        assert lines[3] == "1.0000000000000000e+00,true"
        assert lines[4] == "2.0000000000000000e+00,false"
        assert lines[5] == "# m_note = 3"
        assert lines[6] == "# z_note = done"

    def test_stdout_path(self):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            write_table(None, {"k": 1}, ["a"], [(0.5,)])
        assert buffer.getvalue() == "# k = 1\na\n5.0000000000000000e-01\n"


class TestAverageSweep:
    def test_values_sorted_before_dispatch(self):
        base = small_params()
        lo, mid, hi = OMEGA / 2 - 0.02, OMEGA / 2, OMEGA / 2 + 0.02
        shuffled = run_average_sweep(base, "g0", [hi, lo, mid],
                                     n_periods=2, samples_per_period=4)
        ordered = run_average_sweep(base, "g0", [lo, mid, hi],
                                    n_periods=2, samples_per_period=4)
        assert [r.param_value for r in shuffled] == [lo, mid, hi]
        assert shuffled == ordered

    def test_worker_pool_matches_serial(self):
        base = small_params()
        values = np.linspace(OMEGA / 2 - 0.05, OMEGA / 2 + 0.05, 4)
        serial = run_average_sweep(base, "g0", values, n_periods=2,
                                   samples_per_period=4, workers=1)
        pooled = run_average_sweep(base, "g0", values, n_periods=2,
                                   samples_per_period=4, workers=2)
        assert serial == pooled

    def test_derivative_columns_match_direct_computation(self):
        base = small_params()
        values = np.linspace(OMEGA / 2 - 0.04, OMEGA / 2 + 0.04, 5)
        records = run_average_sweep(base, "g0", values, n_periods=2,
                                    samples_per_period=4)
        from floquet_complexity.complexity import AverageRecord

        bare = [
            AverageRecord(r.param_value, r.c_bar, r.c_minus, n_periods=2)
            for r in records
        ]
        d1 = sweep_derivatives(bare, 1)
        d2 = sweep_derivatives(bare, 2)
        for rec, (_, v1), (_, v2) in zip(records, d1, d2):
            assert rec.d1 == v1
            assert rec.d2 == v2

    def test_single_point_has_nan_derivatives(self):
        base = small_params()
        records = run_average_sweep(base, "g0", [OMEGA / 2], n_periods=2,
                                    samples_per_period=4)
        assert len(records) == 1
        assert math.isnan(records[0].d1) and math.isnan(records[0].d2)

    def test_c_bar_matches_time_average(self):
        base = small_params()
        value = OMEGA / 2 + 0.03
        records = run_average_sweep(base, "g0", [value], n_periods=3,
                                    samples_per_period=8)
        import dataclasses

        p = dataclasses.replace(base, g0=value)
        assert records[0].c_bar == time_average(p, n_periods=3, samples_per_period=8)
        assert records[0].c_minus == floquet_complexity(p, "-")

    def test_input_validation(self):
        base = small_params()
        with pytest.raises(ValueError):
            run_average_sweep(base, "J", [1.0], n_periods=2, samples_per_period=4)
        with pytest.raises(ValueError):
            run_average_sweep(base, "g0", [], n_periods=2, samples_per_period=4)
        with pytest.raises(ValueError):
            run_average_sweep(base, "g0", [1.0], n_periods=2,
                              samples_per_period=4, workers=0)


class TestPhaseGrid:
    def test_row_major_order_and_fields(self):
        base = small_params()
        g0s = [OMEGA / 2, OMEGA / 2 + 0.01]
        g1s = [OMEGA, 1.2 * OMEGA, 1.4 * OMEGA]
        cells = run_phase_grid(base, g0s, g1s)
        assert len(cells) == 6
        assert [c.g0 for c in cells[:3]] == [g0s[0]] * 3
        assert [c.g1 for c in cells[:3]] == g1s
        assert [c.g1 for c in cells[3:]] == g1s
        import dataclasses

        for cell in cells:
            p = dataclasses.replace(base, g0=cell.g0, g1=cell.g1)
            assert cell.gamma == anisotropy(p)
            assert cell.dg0 == p.detuning

    def test_resonant_center_is_ferromagnetic(self):
        base = small_params()
        cells = run_phase_grid(base, [OMEGA / 2], [OMEGA])
        assert cells[0].phase is PhaseLabel.FMZ
        assert cells[0].valid


class TestOracleComparison:
    def test_size_cap(self):
        with pytest.raises(ValueError):
            run_oracle_comparison([50.0], np.linspace(0, 1, 3), L=34)

    def test_deviation_shrinks_with_frequency(self):
        times = np.linspace(0.0, 2.0, 5)
        runs = run_oracle_comparison([40.0, 80.0], times, L=2)
        assert runs[0].max_dev > runs[1].max_dev
        for run in runs:
            assert run.c_analytic[0] == 0.0
            assert run.c_ode[0] == 0.0
            assert run.norm_drift < 1e-9

import math

import numpy as np
import pytest

from distgame_figures import (
    InputError,
    SchemaError,
    mask_unbounded,
    read_field_csv,
    read_grid_sweep_csv,
)


class TestFieldReader:
    def test_values_verbatim(self, golden_dir):
        path = golden_dir / "field_I.csv"
        table = read_field_csv(path)
        assert table.values.shape == (6, 81)
        # every parsed cell matches the file text exactly, in file order
        lines = path.read_text().splitlines()[1:]
        flat = iter(table.values.flatten())
        for line in lines:
            assert float(line.split(",")[2]) == next(flat)

    def test_axes_in_file_order(self, golden_dir):
        table = read_field_csv(golden_dir / "field_S.csv")
        assert table.deltas.tolist() == [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
        assert table.times[0] == 0.0 and table.times[-1] == 40.0

    def test_inf_column_parsed_and_maskable(self, golden_dir):
        table = read_field_csv(golden_dir / "cost_field.csv")
        assert np.all(np.isinf(table.values[0]))
        masked = mask_unbounded(table.values)
        assert masked.mask[0].all()
        assert not masked.mask[1:].any()

    def test_single_column_flag(self, golden_dir):
        table = read_field_csv(golden_dir / "single_column.csv")
        assert table.single_column and table.values.shape == (1, 81)

    def test_header_mismatch_names_columns(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("delta,time,value\n0,0,1\n")
        with pytest.raises(SchemaError) as exc:
            read_field_csv(bad)
        assert "t" in str(exc.value) and "time" in str(exc.value)

    def test_extra_column_named(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("delta,t,value,extra\n0,0,1,2\n")
        with pytest.raises(SchemaError, match="extra"):
            read_field_csv(bad)

    def test_ragged_grid_rejected(self, tmp_path):
        bad = tmp_path / "ragged.csv"
        bad.write_text("delta,t,value\n0,0,1\n0,1,2\n0.5,0,3\n")
        with pytest.raises(InputError, match="grid"):
            read_field_csv(bad)

    def test_empty_file_rejected(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        with pytest.raises(InputError):
            read_field_csv(empty)


class TestGridSweepReader:
    def test_cells_and_lengths(self, golden_dir):
        cells = read_grid_sweep_csv(golden_dir / "grid_sweep.csv")
        assert [(c.r0, c.gamma_inv) for c in cells] == \
            [(1.5, 5.0), (1.5, 8.5), (2.67, 5.0), (2.67, 8.5)]
        for cell in cells:
            assert len(cell.t) == 81
            assert math.isclose(cell.s[0] + cell.i[0] + cell.r[0], 10000.0)

    def test_header_checked(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("r0,gamma,t,S,I,R\n1,2,0,1,1,1\n")
        with pytest.raises(SchemaError, match="gamma_inv"):
            read_grid_sweep_csv(bad)

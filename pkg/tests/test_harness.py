import json

import numpy as np
import pytest

from lerchlab import DomainError, OperatorKind, apply_hecke, unit_square_grid
from lerchlab.harness import (
    DEFAULT_SUITE_CONFIG,
    adjoint_check,
    inner_product,
    load_config,
    lp_bound_check,
    lp_norm,
    norm_identity_check,
    run_suite,
    smooth_twisted_fn,
    write_csv,
)
from lerchlab.twisted_space import twisted_from_core


def const_one():
    return twisted_from_core(
        lambda a, c: np.ones_like(np.asarray(a, dtype=complex)), 1, "1")


def char_a():
    return twisted_from_core(
        lambda a, c: np.exp(2j * np.pi * a), 1, "e(a)")


class TestQuadratureGrid:
    def test_weights_sum_to_area(self):
        for p in (2, 4, 7):
            grid = unit_square_grid(p, 12)
            assert abs(np.sum(grid.weights) - 1.0) < 1e-14

    def test_nodes_strictly_interior(self):
        grid = unit_square_grid(4, 16)
        assert grid.a.min() > 0 and grid.a.max() < 1
        assert grid.c.min() > 0 and grid.c.max() < 1

    def test_refinement_self_consistency(self):
        rng = np.random.default_rng(2)
        f = smooth_twisted_fn(rng)
        g = smooth_twisted_fn(rng)
        v1 = inner_product(f, g, unit_square_grid(4, 16))
        v2 = inner_product(f, g, unit_square_grid(8, 16))
        assert abs(v1 - v2) < 1e-12 * max(1.0, abs(v1))


class TestInnerProduct:
    def test_unit_constant(self):
        grid = unit_square_grid(2, 8)
        assert abs(inner_product(const_one(), const_one(), grid) - 1.0) < 1e-14

    def test_unit_character(self):
        grid = unit_square_grid(2, 16)
        assert abs(inner_product(char_a(), char_a(), grid) - 1.0) < 1e-13

    def test_character_orthogonality(self):
        grid = unit_square_grid(2, 16)
        assert abs(inner_product(char_a(), const_one(), grid)) < 1e-12


class TestOperatorChecks:
    def test_adjoint_m1_trivial(self):
        rec = adjoint_check(1, 3, rng=np.random.default_rng(0))
        assert rec.passed and rec.residual < 1e-12

    def test_adjoint_m2(self):
        rec = adjoint_check(2, 20, rng=np.random.default_rng(0),
                            tolerance=1e-8)
        assert rec.passed, rec.residual

    def test_adjoint_m5(self):
        rec = adjoint_check(5, 10, rng=np.random.default_rng(0),
                            tolerance=1e-7)
        assert rec.passed, rec.residual

    def test_adjoint_m_limit(self):
        with pytest.raises(DomainError):
            adjoint_check(9, 1)

    def test_norm_identity_m1(self):
        rec = norm_identity_check(1, 3, rng=np.random.default_rng(0))
        assert rec.passed and rec.residual < 1e-13

    def test_norm_identity_m4(self):
        rec = norm_identity_check(4, 10, rng=np.random.default_rng(1),
                                  tolerance=1e-8)
        assert rec.passed, rec.residual

    def test_lp_bound_m3_p1(self):
        rec = lp_bound_check(3, 1.0, 5, rng=np.random.default_rng(2))
        assert rec.passed  # zero residual = no violation

    def test_lp_ratio_at_p2_matches_unitarity(self):
        # ||T_m f||_2 / ||f||_2 = m^(-1/2), far below the bound m
        rng = np.random.default_rng(3)
        grid = unit_square_grid(8, 20)  # resolve the dilated c-period
        f = smooth_twisted_fn(rng)
        tf = apply_hecke(OperatorKind.T, 2, f)
        ratio = lp_norm(tf, grid, 2) / lp_norm(f, grid, 2)
        assert abs(ratio - 2 ** -0.5) < 1e-9

    def test_lp_bound_m1_identity(self):
        rec = lp_bound_check(1, 2.0, 3, rng=np.random.default_rng(4))
        assert rec.passed and rec.residual == 0.0


class TestConfig:
    def test_defaults_returned_without_path(self):
        cfg = load_config(None)
        assert cfg == DEFAULT_SUITE_CONFIG

    def test_parse_file(self, tmp_path):
        p = tmp_path / "suite.cfg"
        p.write_text(
            "# comment\n"
            "seed = 7\n"
            "groups = special_fns, milnor_baseline\n"
            "hecke_s = 2.0, 0.5+10j\n"
            "fe_tol = 1e-6\n"
            "deterministic_timing = true\n")
        cfg = load_config(p)
        assert cfg["seed"] == 7
        assert cfg["groups"] == ["special_fns", "milnor_baseline"]
        assert cfg["hecke_s"] == [2.0, 0.5 + 10j]
        assert cfg["fe_tol"] == 1e-6
        assert cfg["deterministic_timing"] is True

    def test_unknown_key_rejected(self, tmp_path):
        p = tmp_path / "bad.cfg"
        p.write_text("not_a_key = 3\n")
        with pytest.raises(DomainError):
            load_config(p)

    def test_malformed_line_rejected(self, tmp_path):
        p = tmp_path / "bad.cfg"
        p.write_text("seed 7\n")
        with pytest.raises(DomainError):
            load_config(p)


class TestRunSuite:
    def test_empty_groups(self, tmp_path):
        code, records = run_suite(groups=[],
                                  json_path=tmp_path / "r.json",
                                  csv_path=tmp_path / "r.csv")
        assert code == 0
        assert records == []
        assert json.loads((tmp_path / "r.json").read_text()) == []

    def test_unknown_group(self):
        with pytest.raises(DomainError):
            run_suite(groups=["nonexistent"])

    def test_special_fns_group_passes(self, tmp_path):
        code, records = run_suite(groups=["special_fns"],
                                  json_path=tmp_path / "r.json",
                                  csv_path=tmp_path / "r.csv")
        assert code == 0
        assert all(r.passed for r in records)
        rows = (tmp_path / "r.csv").read_text().strip().splitlines()
        assert rows[0].startswith("identity,")
        assert len(rows) == len(records) + 1

    def test_exit_code_contract_with_broken_tolerance(self, tmp_path):
        p = tmp_path / "broken.cfg"
        p.write_text("groups = milnor_baseline\nmilnor_tol = 0\n")
        code, records = run_suite(config_path=p)
        assert code == 1
        assert any(not r.passed for r in records)

    def test_deterministic_reports_byte_identical(self, tmp_path):
        kw = dict(groups=["special_fns"], seed=42, deterministic_timing=True)
        run_suite(json_path=tmp_path / "a.json", **kw)
        run_suite(json_path=tmp_path / "b.json", **kw)
        assert (tmp_path / "a.json").read_bytes() == \
            (tmp_path / "b.json").read_bytes()

    def test_records_roundtrip_csv(self, tmp_path):
        _, records = run_suite(groups=["special_fns"])
        write_csv(records, tmp_path / "out.csv")
        text = (tmp_path / "out.csv").read_text()
        assert "gamma:recurrence" in text


class TestGoldenSuite:
    def test_full_default_suite_matches_golden(self, tmp_path):
        # record list (identities and count) is pinned by the suite
        # definition; a change here is an interface change
        import pathlib

        golden = json.loads(
            (pathlib.Path(__file__).parent / "golden_suite_identities.json")
            .read_text())
        code, records = run_suite(json_path=tmp_path / "full.json",
                                  csv_path=tmp_path / "full.csv",
                                  deterministic_timing=True)
        assert code == 0
        assert [r.identity for r in records] == golden
        assert all(r.passed for r in records)


class TestParallelGroups:
    def test_parallel_matches_sequential(self, tmp_path):
        import pathlib

        cfg = tmp_path / "par.cfg"
        cfg.write_text("groups = special_fns, milnor_baseline\n"
                       "parallel_groups = true\n")
        code_p, rec_p = run_suite(config_path=cfg,
                                  deterministic_timing=True)
        code_s, rec_s = run_suite(groups=["special_fns", "milnor_baseline"],
                                  deterministic_timing=True)
        assert code_p == code_s == 0
        assert [r.to_dict() for r in rec_p] == [r.to_dict() for r in rec_s]

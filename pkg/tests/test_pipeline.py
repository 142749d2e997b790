"""Tests for the check pipeline and the summary table."""

import json

import pytest

from src.generators.standard import cycle
from src.models.certificate import CheckVerdict
from src.models.errors import DimOutOfRangeError
from src.reporting.pipeline import (
    CHECKS,
    DEFAULT_CHECKS,
    PipelineContext,
    default_checks,
    expected_row0,
    run_check,
    run_pipeline,
)
from src.reporting.table import OUT_OF_SCOPE, SPORADIC_ROWS, render_table, summary_table, table_frame


class TestRunCheck:

    def test_refusal_is_inconclusive(self):
        result = run_check("automorphism", PipelineContext(complex=cycle(4).cone(9)))
        assert result.verdict is CheckVerdict.INCONCLUSIVE
        assert result.summary == "ConeNotSupportedError"

    def test_low_dimension_is_refused(self, m2):
        result = run_check("tight-neighborly", PipelineContext(complex=m2.manifold))
        assert result.verdict is CheckVerdict.INCONCLUSIVE
        assert result.summary == "DimOutOfRangeError"

    def test_precondition_failure(self, m2):
        result = run_check("class-K", PipelineContext(complex=m2.filling))
        assert result.verdict is CheckVerdict.FAIL
        assert result.summary == "NotClosedError"

    def test_cyclic_without_n(self, octahedron):
        assert run_check("cyclic", PipelineContext(complex=octahedron)).verdict is CheckVerdict.INCONCLUSIVE

    def test_witness_truncated(self, octahedron):
        result = run_check("neighborly", PipelineContext(complex=octahedron), max_items=1)
        assert result.verdict is CheckVerdict.FAIL
        assert result.truncated
        assert len(result.witness["missing_edges"]) == 1

    def test_duration_recorded(self, octahedron):
        assert run_check("betti", PipelineContext(complex=octahedron)).duration >= 0

    def test_unknown(self, octahedron):
        with pytest.raises(KeyError):
            run_check("shelling", PipelineContext(complex=octahedron))


class TestRunPipeline:

    def test_m3_passes_default_checks(self, m3):
        ctx = PipelineContext(complex=m3.manifold, n_cyclic=29, samples=50, seed=1, expect_betti=(1, 30, 30, 1),
                              expect_orientable=False, expect_aut_order=29)
        certificate = run_pipeline(ctx, DEFAULT_CHECKS, subject="M^3_29")
        assert [c.name for c in certificate.checks] == list(DEFAULT_CHECKS)
        assert certificate.passed, [c.name for c in certificate.checks if not c.passed]
        assert certificate.parameters["f"] == [29, 406, 754, 377]
        assert certificate.notes

    def test_tight_surface_is_not_failed(self, m2):
        ctx = PipelineContext(complex=m2.manifold, n_cyclic=19)
        certificate = run_pipeline(ctx, ["tight-neighborly", "tight"], subject="M^2_19")
        verdicts = {c.name: c.verdict for c in certificate.checks}
        assert verdicts == {"tight-neighborly": CheckVerdict.INCONCLUSIVE, "tight": CheckVerdict.PASS}
        assert certificate.exit_code() == 2

    def test_default_checks_by_dimension(self):
        assert "tight-neighborly" not in default_checks(2)
        assert default_checks(3) == DEFAULT_CHECKS
        assert "class-K" not in default_checks(1)

    def test_m2_passes_surface_defaults(self, m2):
        ctx = PipelineContext(complex=m2.manifold, n_cyclic=19, samples=50, seed=2, expect_betti=(1, 40, 1),
                              expect_orientable=True, expect_aut_order=19)
        certificate = run_pipeline(ctx, default_checks(2), subject="M^2_19")
        assert certificate.passed, [c.name for c in certificate.checks if not c.passed]

    def test_octahedron_tightness_inconclusive(self, octahedron):
        certificate = run_pipeline(PipelineContext(complex=octahedron), ["tight"], subject="octahedron")
        assert certificate.verdict is CheckVerdict.INCONCLUSIVE
        assert certificate.exit_code() == 2

    def test_registry_order_and_jobs(self, octahedron):
        ctx = PipelineContext(complex=octahedron, samples=5, seed=3)
        requested = ["orientability", "betti", "neighborly", "automorphism"]
        serial = run_pipeline(ctx, requested, subject="octahedron")
        parallel = run_pipeline(ctx, requested, subject="octahedron", jobs=3)
        assert [c.name for c in serial.checks] == ["neighborly", "betti", "orientability", "automorphism"]
        assert serial.canonical_json() == parallel.canonical_json()

    def test_unknown_check(self, octahedron):
        with pytest.raises(KeyError):
            run_pipeline(PipelineContext(complex=octahedron), ["betti", "nope"], subject="x")

    def test_link_order_against_row0(self, m2, n2):
        ctx = PipelineContext(complex=m2.manifold, expect_cycle=expected_row0("M"))
        assert run_pipeline(ctx, ["link-order"], subject="M^2_19").passed
        ctx = PipelineContext(complex=n2.manifold, expect_cycle=expected_row0("M"))
        assert run_pipeline(ctx, ["link-order"], subject="N^2_19").verdict is CheckVerdict.FAIL

    def test_expected_row0_unknown(self):
        with pytest.raises(ValueError):
            expected_row0("Q")

    def test_registry_covers_defaults(self):
        assert set(DEFAULT_CHECKS) <= set(CHECKS)


class TestSummaryTable:

    @pytest.fixture(scope="class")
    def rows(self):
        return summary_table(dims=(3,))

    def test_rebuilt_rows_verify(self, rows):
        rebuilt = rows[:4]
        assert [r.name for r in rebuilt] == ["S^3_5", "X^3_9(id)", "M^3_29", "N^3_29"]
        assert all(r.consistent for r in rebuilt)
        assert rebuilt[2].computed_beta1 == 30

    def test_sporadic_rows_listed(self, rows):
        assert len(rows) == 4 + len(SPORADIC_ROWS)
        assert rows[-1].status == OUT_OF_SCOPE

    def test_rendering(self, rows):
        text = render_table(rows)
        assert "M^3_29" in text
        records = json.loads(render_table(rows, as_json=True))
        assert records[0]["status"] == "verified"
        assert list(table_frame(rows).columns)[0] == "name"

    def test_surfaces_rejected(self):
        with pytest.raises(DimOutOfRangeError):
            summary_table(dims=(2, 3))

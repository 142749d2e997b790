"""
Reporting module: the verification pipeline and the summary table.
"""

from src.reporting.pipeline import (
    CHECKS,
    DEFAULT_CHECKS,
    PipelineContext,
    expected_row0,
    run_check,
    run_pipeline,
)
from src.reporting.table import OUT_OF_SCOPE, TableRow, render_table, summary_table, table_frame, table_records

__all__ = [
    "CHECKS",
    "DEFAULT_CHECKS",
    "OUT_OF_SCOPE",
    "PipelineContext",
    "TableRow",
    "expected_row0",
    "render_table",
    "run_check",
    "run_pipeline",
    "summary_table",
    "table_frame",
    "table_records",
]

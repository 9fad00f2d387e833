"""Tests for SolverTrace."""

from __future__ import annotations

from fractions import Fraction

from birkhoff_gm.solver import SolverTrace, TraceEntry


class TestSolverTrace:
    """Tests for SolverTrace bookkeeping."""

    def test_empty_trace(self) -> None:
        """Test defaults before the first entry."""
        trace = SolverTrace()

        assert trace.iteration_count == 0
        assert trace.status == "iteration-limit"
        assert not trace.is_optimal
        assert trace.final_basis is None

    def test_record_appends(self) -> None:
        """Test recorded entries are returned and kept in order."""
        trace = SolverTrace()

        first = trace.record(0, Fraction(20), Fraction(18), 1)
        trace.record(1, Fraction(39, 2), Fraction(19), 3)

        assert first == TraceEntry(0, Fraction(20), Fraction(18), 1)
        assert [e.iteration for e in trace.iterations] == [0, 1]
        assert trace.upper_bound == Fraction(39, 2)
        assert trace.incumbent_value == 19
        assert trace.iteration_count == 1

    def test_upper_bound_is_clamped(self) -> None:
        """Test a looser later bound does not raise the recorded one."""
        trace = SolverTrace()
        trace.record(0, Fraction(19), Fraction(18))

        entry = trace.record(1, Fraction(21), Fraction(18))

        assert entry.upper_bound == 19
        assert trace.upper_bound == 19

    def test_optimal_status(self) -> None:
        """Test is_optimal follows the status field."""
        trace = SolverTrace(status="optimal")

        assert trace.is_optimal

"""End-to-end workflow tests for the bubble CLI."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from bubblelab.cli.main import app
from bubblelab.triangle import IDENTITY_NAMES


class TestTriangleWorkflow:
    """Triangles computed two ways agree and satisfy their identities."""

    def test_h_both_ways(self, cli_runner: CliRunner) -> None:
        """Definitional and closed H agree at (2, 1)."""
        result = cli_runner.invoke(
            app, ["triangle", "--which", "h", "--m", "2", "--n", "1", "--both"]
        )

        assert result.exit_code == 0
        assert result.output.strip() == "q^3*t^3 + 3*q^2*t^2 + 2*q^2*t + 3*q*t + 2*q + 1"

    def test_f_then_verify(self, cli_runner: CliRunner) -> None:
        """F printed by the triangle command satisfies the F-H relation."""
        triangle = cli_runner.invoke(app, ["triangle", "--which", "f", "--m", "1", "--n", "1"])
        verify = cli_runner.invoke(app, ["verify", "--identity", "fh", "--m", "3", "--n", "2"])

        assert triangle.exit_code == 0
        assert triangle.output.strip() == "2*q^2 + 2*q*t + t^2 + 3*q + 2*t + 1"
        assert verify.exit_code == 0
        assert verify.output.strip() == "fh 3 2 PASS"


class TestComplexWorkflow:
    """Complexes exported as JSON match their f-vectors."""

    def test_json_and_fvector_agree(self, cli_runner: CliRunner) -> None:
        """Facet count from JSON equals the top entry of the f-vector."""
        fvector = cli_runner.invoke(app, ["complex", "--which", "delta", "--m", "2", "--n", "1"])
        exported = cli_runner.invoke(
            app, ["complex", "--which", "delta", "--m", "2", "--n", "1", "--out", "json"]
        )

        assert fvector.exit_code == 0
        assert exported.exit_code == 0
        counts = [int(value) for value in fvector.output.split()]
        data = json.loads(exported.output)
        assert len(data["facets"]) == counts[-1]
        assert len(data["vertices"]) == counts[1]


class TestSweepWorkflow:
    """A full sweep over small cells."""

    @pytest.mark.slow
    def test_every_identity_passes(self, cli_runner: CliRunner, tmp_path: Path) -> None:
        """All identities hold for m + n <= 2, and the report lists every check."""
        report = tmp_path / "sweep.json"

        result = cli_runner.invoke(app, ["sweep", "--max-r", "2", "--report", str(report)])

        assert result.exit_code == 0
        total = 6 * len(IDENTITY_NAMES)
        assert result.output.splitlines()[-1] == f"{total}/{total} PASS"
        data = json.loads(report.read_text())
        assert len(data) == total
        assert all(entry["status"] == "PASS" for entry in data)

    def test_parallel_matches_serial(self, cli_runner: CliRunner) -> None:
        """--jobs only changes how cells are scheduled."""
        serial = cli_runner.invoke(app, ["sweep", "--max-r", "2", "--identities", "fh,f_closed"])
        parallel = cli_runner.invoke(
            app, ["sweep", "--max-r", "2", "--identities", "fh,f_closed", "--jobs", "2"]
        )

        assert serial.exit_code == 0
        assert parallel.exit_code == 0
        assert serial.output.splitlines()[-1] == parallel.output.splitlines()[-1] == "12/12 PASS"

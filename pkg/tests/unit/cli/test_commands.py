"""Tests for the bubble subcommands."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from bubblelab.cli.commands import triangle as triangle_module
from bubblelab.cli.commands.sweep import sweep_cells
from bubblelab.cli.commands.triangle import TriangleChoice
from bubblelab.cli.main import app
from bubblelab.triangle import IdentityReport, IdentityStatus, MultiPoly, TriangleMode, Witness
from bubblelab.word import Params


@pytest.fixture()
def runner() -> CliRunner:
    """CLI test runner."""
    return CliRunner()


class TestEnumerate:
    """Tests for the enumerate command."""

    def test_lists_words_in_order(self, runner: CliRunner) -> None:
        """One line per word, canonical order first."""
        result = runner.invoke(app, ["enumerate", "--m", "1", "--n", "1"])
        assert result.exit_code == 0
        words = [line.split("\t")[0] for line in result.output.splitlines()]
        assert words == ["-", "x1", "y1", "x1 y1", "y1 x1"]

    def test_json_records(self, runner: CliRunner) -> None:
        """--json emits one record per word."""
        result = runner.invoke(app, ["enumerate", "--m", "1", "--n", "1", "--json"])
        assert result.exit_code == 0
        records = json.loads(result.output)
        assert len(records) == 5
        by_word = {record["word"]: record for record in records}
        assert by_word["x1"]["rank"] == 0
        assert by_word["y1"]["rank"] == 2
        assert by_word["x1 y1"]["rank"] == 1

    def test_resource_cap(self, runner: CliRunner) -> None:
        """Exceeding a cap exits with code 3 and mentions --force."""
        result = runner.invoke(app, ["enumerate", "--m", "9", "--n", "9"])
        assert result.exit_code == 3
        assert "--force" in result.output

    def test_negative_size(self, runner: CliRunner) -> None:
        """Negative sizes are usage errors."""
        result = runner.invoke(app, ["enumerate", "--m", "-1", "--n", "1"])
        assert result.exit_code == 2


class TestPoset:
    """Tests for the poset command."""

    def test_dot_with_labels(self, runner: CliRunner) -> None:
        """Bubble covers carry their labels."""
        result = runner.invoke(app, ["poset", "--m", "1", "--n", "1", "--labels"])
        assert result.exit_code == 0
        assert result.output.startswith("digraph {")
        assert '"x1 y1" -> "y1 x1" [label="x1-y1"];' in result.output

    def test_json(self, runner: CliRunner) -> None:
        """JSON output carries the order and the alphabet sizes."""
        result = runner.invoke(
            app, ["poset", "--m", "1", "--n", "1", "--which", "shuf", "--out", "json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (data["order"], data["m"], data["n"]) == ("shuf", 1, 1)
        assert len(data["nodes"]) == 5

    def test_labels_need_the_bubble_order(self, runner: CliRunner) -> None:
        """Shuffle covers have no labels."""
        result = runner.invoke(
            app, ["poset", "--m", "1", "--n", "1", "--which", "shuf", "--labels"]
        )
        assert result.exit_code == 2

    def test_resource_cap(self, runner: CliRunner) -> None:
        """Dense posets are capped."""
        result = runner.invoke(app, ["poset", "--m", "5", "--n", "4"])
        assert result.exit_code == 3


class TestComplex:
    """Tests for the complex command."""

    @pytest.mark.parametrize(
        ("which", "expected"),
        [("gamma", "1 3 1"), ("delta", "1 5 5"), ("gamma+", "1 1"), ("delta+", "1 3 2")],
    )
    def test_f_vectors(self, runner: CliRunner, which: str, expected: str) -> None:
        """f-vectors of the complexes on (1, 1)."""
        result = runner.invoke(app, ["complex", "--m", "1", "--n", "1", "--which", which])
        assert result.exit_code == 0
        assert result.output.strip() == expected

    def test_json(self, runner: CliRunner) -> None:
        """JSON lists the facets."""
        result = runner.invoke(
            app, ["complex", "--m", "1", "--n", "1", "--which", "delta", "--out", "json"]
        )
        assert result.exit_code == 0
        assert len(json.loads(result.output)["facets"]) == 5

    def test_left_leaning_needs_square(self, runner: CliRunner) -> None:
        """m != n is a usage error."""
        result = runner.invoke(app, ["complex", "--m", "2", "--n", "1", "--which", "left"])
        assert result.exit_code == 2
        assert "m == n" in result.output

    def test_unknown_kind(self, runner: CliRunner) -> None:
        """Choices are validated by the parser."""
        result = runner.invoke(app, ["complex", "--m", "1", "--n", "1", "--which", "sphere"])
        assert result.exit_code == 2


class TestPaths:
    """Tests for the paths command."""

    def test_counts(self, runner: CliRunner) -> None:
        """Enumeration and the closed form agree."""
        result = runner.invoke(app, ["paths", "--m", "2", "--n", "2", "--q", "2"])
        assert result.exit_code == 0
        assert "delannoy 22 (closed form 22)" in result.output

    def test_schroder_list(self, runner: CliRunner) -> None:
        """--list prints the surviving paths."""
        result = runner.invoke(
            app, ["paths", "--m", "1", "--n", "1", "--q", "1", "--schroder", "--list"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "schroder 2" in lines
        assert lines[-2:] == ["E N", "D1"]

    def test_little(self, runner: CliRunner) -> None:
        """Little Schröder paths avoid diagonal steps on the diagonal."""
        result = runner.invoke(app, ["paths", "--m", "1", "--n", "1", "--q", "1", "--little"])
        assert result.exit_code == 0
        assert "little 1" in result.output

    def test_conflicting_filters(self, runner: CliRunner) -> None:
        """--schroder and --little exclude each other."""
        result = runner.invoke(
            app, ["paths", "--m", "1", "--n", "1", "--q", "1", "--schroder", "--little"]
        )
        assert result.exit_code == 2

    def test_schroder_needs_square(self, runner: CliRunner) -> None:
        """Schröder filters need m = n."""
        result = runner.invoke(app, ["paths", "--m", "2", "--n", "1", "--q", "0", "--schroder"])
        assert result.exit_code == 2

    def test_color_cap(self, runner: CliRunner) -> None:
        """Too many colors exits with code 3."""
        result = runner.invoke(app, ["paths", "--m", "1", "--n", "1", "--q", "9"])
        assert result.exit_code == 3


class TestTriangle:
    """Tests for the triangle command."""

    def test_h(self, runner: CliRunner) -> None:
        """Definitional H by default."""
        result = runner.invoke(app, ["triangle", "--which", "h", "--m", "1", "--n", "1"])
        assert result.exit_code == 0
        assert result.output.strip() == "q^2*t^2 + 2*q*t + q + 1"

    def test_char_closed(self, runner: CliRunner) -> None:
        """Closed ch̃."""
        result = runner.invoke(
            app, ["triangle", "--which", "char", "--m", "1", "--n", "1", "--closed"]
        )
        assert result.exit_code == 0
        assert result.output.strip() == "2*q^2 - 3*q + 1"

    def test_bw_both(self, runner: CliRunner) -> None:
        """The closed F^BW agrees with the face count."""
        result = runner.invoke(
            app, ["triangle", "--which", "bw-f", "--m", "1", "--n", "1", "--both"]
        )
        assert result.exit_code == 0
        assert result.output.strip() == "q^2*t^2 + 2*q^2*t + q^2 + q"

    def test_extended_has_no_closed_form(self, runner: CliRunner) -> None:
        """--closed with ext-f is a usage error."""
        result = runner.invoke(
            app, ["triangle", "--which", "ext-f", "--m", "1", "--n", "1", "--closed"]
        )
        assert result.exit_code == 2

    def test_conflicting_modes(self, runner: CliRunner) -> None:
        """At most one mode flag."""
        result = runner.invoke(
            app, ["triangle", "--which", "h", "--m", "1", "--n", "1", "--closed", "--both"]
        )
        assert result.exit_code == 2

    def test_disagreement_exits_1(
        self, runner: CliRunner, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Differing forms are both printed and the exit code is 1."""

        def fake(p: Params, mode: TriangleMode, limits: object) -> MultiPoly:
            return MultiPoly.constant(1 if mode is TriangleMode.CLOSED else 2, ("q",))

        monkeypatch.setitem(triangle_module.BUILDERS, TriangleChoice.H, fake)
        result = runner.invoke(app, ["triangle", "--which", "h", "--m", "1", "--n", "1", "--both"])
        assert result.exit_code == 1
        assert "definitional: 2" in result.output
        assert "closed: 1" in result.output

    def test_resource_cap(self, runner: CliRunner) -> None:
        """The definitional M is capped; the closed one is not."""
        capped = runner.invoke(app, ["triangle", "--which", "m", "--m", "5", "--n", "4"])
        assert capped.exit_code == 3
        closed = runner.invoke(
            app, ["triangle", "--which", "m", "--m", "5", "--n", "4", "--closed"]
        )
        assert closed.exit_code == 0


class TestVerify:
    """Tests for the verify command."""

    def test_pass(self, runner: CliRunner) -> None:
        """One line per identity."""
        result = runner.invoke(app, ["verify", "--identity", "fh,f_closed", "--m", "2", "--n", "1"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["fh 2 1 PASS", "f_closed 2 1 PASS"]

    def test_json(self, runner: CliRunner) -> None:
        """--json emits the reports."""
        result = runner.invoke(
            app, ["verify", "--identity", "euler_gamma", "--m", "1", "--n", "1", "--json"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output) == [
            {"identity": "euler_gamma", "m": 1, "n": 1, "status": "PASS", "witness": None}
        ]

    def test_unknown_identity(self, runner: CliRunner) -> None:
        """Unknown names exit with code 2."""
        result = runner.invoke(app, ["verify", "--identity", "nope", "--m", "1", "--n", "1"])
        assert result.exit_code == 2
        assert "unknown identity: nope" in result.output

    def test_failure_exits_1(self, runner: CliRunner, monkeypatch: pytest.MonkeyPatch) -> None:
        """A failing identity prints its witness and exits with code 1."""
        witness = Witness({"q": 2}, 1, 2)
        failing = IdentityReport("fh", 1, 1, IdentityStatus.FAIL, witness)
        monkeypatch.setattr(
            "bubblelab.cli.commands.verify.verify_all", lambda p, names, limits: [failing]
        )
        result = runner.invoke(app, ["verify", "--identity", "fh", "--m", "1", "--n", "1"])
        assert result.exit_code == 1
        assert "fh 1 1 FAIL q=2 lhs=1 rhs=2" in result.output


class TestSweep:
    """Tests for the sweep command."""

    def test_cells(self) -> None:
        """Cells with m + n <= R, by m then n."""
        assert sweep_cells(1) == [Params(0, 0), Params(0, 1), Params(1, 0)]
        assert len(sweep_cells(3)) == 10

    def test_summary(self, runner: CliRunner) -> None:
        """Table plus a PASS count."""
        result = runner.invoke(app, ["sweep", "--max-r", "1", "--identities", "fh,h_closed"])
        assert result.exit_code == 0
        assert "Identity Sweep" in result.output
        assert result.output.splitlines()[-1] == "6/6 PASS"

    def test_report_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """--report writes every report as JSON."""
        report = tmp_path / "sweep.json"
        result = runner.invoke(
            app, ["sweep", "--max-r", "1", "--identities", "fh", "--report", str(report)]
        )
        assert result.exit_code == 0
        data = json.loads(report.read_text())
        assert [(r["m"], r["n"]) for r in data] == [(0, 0), (0, 1), (1, 0)]

    def test_unknown_identity(self, runner: CliRunner) -> None:
        """Unknown names exit with code 2."""
        result = runner.invoke(app, ["sweep", "--max-r", "1", "--identities", "nope"])
        assert result.exit_code == 2

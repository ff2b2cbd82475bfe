"""End-to-end run of the full check suite."""

import json

import pytest

from twistlab.cli.main import main

ARGS = ["verify-all", "--samples", "1024", "--quad-nodes", "96", "--seed", "0"]


@pytest.fixture(scope="module")
def reports(tmp_path_factory):
    directory = tmp_path_factory.mktemp("acceptance")
    first = directory / "first.json"
    second = directory / "second.json"
    codes = (main([*ARGS, "-o", str(first)]), main([*ARGS, "--workers", "4", "-o", str(second)]))
    return codes, first.read_bytes(), second.read_bytes()


@pytest.mark.slow
class TestVerifyAll:
    """Test the suite passes and is reproducible."""

    def test_exit_codes(self, reports):
        codes, _, _ = reports
        assert codes == (0, 0)

    def test_every_check_passes(self, reports):
        _, first, _ = reports
        payload = json.loads(first)
        failed = [report["name"] for report in payload["reports"] if not report["pass"]]
        assert failed == []
        assert payload["summary"]["failed"] == 0

    def test_layout(self, reports):
        _, first, _ = reports
        payload = json.loads(first)
        assert payload["schema"] == 1
        assert len(payload["reports"]) >= 14
        assert payload["summary"]["total"] == len(payload["reports"])
        assert payload["summary"]["wall_time_ms"] is None

    def test_byte_identical_across_runs(self, reports):
        """Test repeated runs, serial and threaded, write the same bytes."""
        _, first, second = reports
        assert first == second

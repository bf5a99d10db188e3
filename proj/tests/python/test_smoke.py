"""End-to-end smoke tests for the python bindings and the CLI.

Run with the staged package on the path:
    PYTHONPATH=build/python pytest tests/python
Set SPTOOL to the built binary (default: build/sptool).
"""

import json
import os
import subprocess
from fractions import Fraction

import pytest

singlepeaked = pytest.importorskip("singlepeaked")

SPTOOL = os.environ.get("SPTOOL", os.path.join("build", "sptool"))


def test_recognize():
    axis = singlepeaked.recognize(3, [[1, 2, 3], [3, 2, 1]])
    assert axis is not None
    assert sorted(axis) == [1, 2, 3]
    assert singlepeaked.recognize(3, [[2, 3, 1], [1, 3, 2], [1, 2, 3]]) is None


def test_recognition_matches_configuration_avoidance():
    votes = [[2, 3, 1], [1, 3, 2], [1, 2, 3]]
    assert not singlepeaked.avoids_forbidden_configurations(3, votes)
    assert singlepeaked.avoids_forbidden_configurations(3, [[1, 2, 3], [3, 2, 1]])


def test_axis_votes():
    votes = singlepeaked.enumerate_sp_votes([1, 2, 3, 4])
    assert len(votes) == 8
    assert all(singlepeaked.is_sp_wrt_axis(4, [v], [1, 2, 3, 4]) for v in votes)


def test_patterns():
    assert singlepeaked.contains_pattern([5, 3, 1, 6, 2], [1, 3, 2]) is not None
    assert singlepeaked.contains_pattern([1, 2, 3, 4], [3, 1, 4, 2]) is None
    assert singlepeaked.schroder(5) == 90


def test_exact_values():
    assert singlepeaked.count_single_peaked(5, 3) == 2976
    assert singlepeaked.iac_exact(10, 3) == Fraction(25, 91)
    lo, hi = singlepeaked.ic_probability_bounds(10, 5)
    assert 0 < lo < hi < 1
    assert singlepeaked.polya_lower(10, 5, "120") > Fraction(43, 100)
    assert singlepeaked.mallows_lower(10, 5, "0.1") > Fraction(59, 100)


def test_capability_guard():
    with pytest.raises(RuntimeError):
        singlepeaked.count_single_peaked(5, 5)


def test_sampling_and_estimation():
    votes = singlepeaked.sample("mallows", 4, 5, 7, phi="0.2")
    assert len(votes) == 4
    assert all(sorted(v) == [1, 2, 3, 4, 5] for v in votes)
    assert votes == singlepeaked.sample("mallows", 4, 5, 7, phi="0.2")

    r = singlepeaked.estimate_sp_probability("ic", 2, 3, 2000, 1)
    assert r["successes"] == 2000
    assert r["estimate"] == 1.0


@pytest.mark.skipif(not os.path.exists(SPTOOL), reason="CLI not built")
class TestCli:
    def run(self, *args):
        return subprocess.run(
            [SPTOOL, *args], capture_output=True, text=True, check=False
        )

    def test_estimate_json(self):
        out = self.run(
            "estimate", "--model", "ic", "--n", "2", "--m", "3",
            "--trials", "1000", "--seed", "1", "--json",
        )
        assert out.returncode == 0
        rec = json.loads(out.stdout)
        assert rec["model"] == "ic"
        assert rec["estimate"] == "1"
        assert rec["successes"] == 1000
        assert rec["seed"] == 1

    def test_sample_deterministic(self):
        a = self.run("sample", "--model", "ic", "--n", "3", "--m", "3",
                     "--count", "2", "--seed", "7")
        b = self.run("sample", "--model", "ic", "--n", "3", "--m", "3",
                     "--count", "2", "--seed", "7")
        assert a.returncode == 0
        assert a.stdout == b.stdout

    def test_recognize_file(self, tmp_path):
        f = tmp_path / "e.txt"
        f.write_text("# two votes\n2 3\n1 2 3\n3 2 1\n")
        out = self.run("recognize", str(f))
        assert out.returncode == 0
        assert "single-peaked: yes" in out.stdout

    def test_exit_codes(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 3\n1 2 3\n1 1 2\n")
        assert self.run("recognize", str(bad)).returncode == 1
        cap = self.run("count", "--model", "ic", "--n", "5", "--m", "5")
        assert cap.returncode == 2

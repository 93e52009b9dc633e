"""Acceptance criteria 1-9, one test each.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per
criterion is printed in the terminal summary) or directly as a script.
"""

import json
import subprocess
import sys

import pytest

from berge_turan import verify

RESULTS: dict[int, str] = {}


def _record(cid: int, name: str, passed: bool, note: str = "") -> None:
    RESULTS[cid] = f"criterion {cid} ({name}): {'PASS' if passed else 'FAIL'}" + (f" - {note}" if note else "")


@pytest.mark.parametrize("cid", sorted(verify.CRITERIA))
def test_criterion(cid):
    res = verify.CRITERIA[cid](verify.DEFAULT_SEED)
    note = "; ".join(res.failures[:2])
    _record(cid, res.name, res.passed, note)
    assert res.checks > 0
    assert res.passed, "\n".join(res.failures)


def _verify_all(tmp_path, tag):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps({"seed": verify.DEFAULT_SEED}))
    out = tmp_path / f"report-{tag}.json"
    proc = subprocess.run(
        [sys.executable, "-m", "berge_turan.cli", "verify", "all", "--seed-file", str(seed), "-o", str(out)],
        capture_output=True,
    )
    assert proc.returncode in (0, 1), proc.stderr.decode()
    return out.read_bytes()


def test_criterion_9_reproducibility(tmp_path):
    first = _verify_all(tmp_path, "a")
    second = _verify_all(tmp_path, "b")
    same = first == second
    report = json.loads(first)
    _record(9, "reproducibility", same, f"sha256 {report['reproducibility']['sha256'][:16]}")
    assert same
    assert "two_connectivity_H(20,8,3)" in report["informational"]
    assert [c["id"] for c in report["criteria"]] == list(range(1, 9))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

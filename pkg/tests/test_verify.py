"""The randomized property battery should pass end to end."""

import io
import random

from atfkit.verify import CHECKS, run_all


def test_run_all_passes():
    buffer = io.StringIO()
    assert run_all(seed=2026, out=buffer) == 0
    lines = buffer.getvalue().strip().splitlines()
    assert len(lines) == len(CHECKS) + 1
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1] == f"{len(CHECKS)}/{len(CHECKS)} properties passed"


def test_every_check_reports_detail():
    for name, fn in CHECKS:
        ok, detail = fn(random.Random(f"99:{name}"))
        assert ok, f"{name}: {detail}"
        assert detail

import pytest

from galois_grm.checks import reproduce_length16, run_all
from galois_grm.grm import build_context

from .conftest import GRID


@pytest.mark.parametrize("point", GRID, ids=str)
def test_run_all_passes(point):
    p, r, m = point
    ordering = "gamma" if r == 1 else "integer"
    results = run_all(build_context(p, r, m, ordering=ordering), samples=200)
    assert [res.name for res in results if not res.ok] == []
    if r == 1:
        assert any(res.name == "grm.radical_coincidence" for res in results)


def test_run_all_flags_bad_modulus():
    ctx = build_context(2, 2, 2, h=[3, 1, 1], check=False)
    assert not all(res.ok for res in run_all(ctx, samples=50))


def test_reproduce_length16():
    lines, elapsed = reproduce_length16()
    assert all(line.ok for line in lines)
    assert elapsed < 1.0

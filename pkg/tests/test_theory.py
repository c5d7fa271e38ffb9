import math

import pytest

from editdistort.errors import InputError
from editdistort.theory import (
    ALGORITHMS,
    batu_c_rule,
    charikar_ulam_distortion,
    iterated_log,
    theory_curves,
    theory_distortion,
)


@pytest.mark.parametrize("x, v", [(16, 3), (65536, 4), (0.5, 0), (1, 0), (4.5, 3), (4, 2), (65537, 5)])
def test_iterated_log(x, v):
    assert iterated_log(2, x) == v


def test_iterated_log_other_base():
    assert iterated_log(10, 1e10) == 2
    with pytest.raises(InputError):
        iterated_log(1, 5)


def test_batu_single_reduction_value():
    assert theory_distortion("batu", 1000, k=5, c=2, j=1) == 72
    # 12·(1 + k) at c = 2
    for k in range(1, 8):
        assert theory_distortion("batu", 1000, k=k, c=2, j=1) == 12 * (1 + k)


def test_batu_limit_values():
    # 12·(lg k + 1.5) at c = 2
    assert theory_distortion("batu", 10_000, k=2) == 30
    assert theory_distortion("batu", 10_000, k=4) == 42


def test_c_rule():
    assert batu_c_rule(100) == 2 and batu_c_rule(10_000) == 2 and batu_c_rule(65536) == 2
    assert batu_c_rule(2.0 ** 256) == pytest.approx(8 / 3)


def test_table_spot_values():
    assert theory_distortion("sokolov", 100, theta=5) == math.inf
    assert theory_distortion("sokolov", 100, theta=10) == pytest.approx(200.4, abs=1e-9)
    assert theory_distortion("baryossef", 1000, theta=1000) == pytest.approx(65, abs=1e-9)
    assert theory_distortion("baryossef", 1000, theta=0) == math.inf
    assert theory_distortion("andoni09", 100) == 340000
    assert theory_distortion("andoni10", 1024) == pytest.approx(120, abs=1e-9)
    assert theory_distortion("charikar", 100, theta=1) == pytest.approx(26904.8, abs=0.1)
    assert theory_distortion("charikar", 100, theta=0) == theory_distortion("charikar", 100, theta=1)


def test_ulam_constants():
    assert 2 * 100 * charikar_ulam_distortion(100, 1) == theory_distortion("charikar", 100, theta=1)


def test_invalid_parameters():
    with pytest.raises(InputError):
        theory_distortion("nope", 100)
    with pytest.raises(InputError):
        theory_distortion("baryossef", 100)
    with pytest.raises(InputError):
        theory_distortion("sokolov", 100, theta=200)
    with pytest.raises(InputError):
        theory_distortion("batu", 100, k=2, j=3)
    with pytest.raises(InputError):
        theory_distortion("batu", 100, k=2, c=2.5, j=1)
    with pytest.raises(InputError):
        theory_distortion("andoni10", 1)


def test_curves_shape_and_examples():
    pts = theory_curves([100, 1024, 10_000], theta="n", k=2)
    assert len(pts) == 18
    by = {(p.algorithm, p.n): p.value for p in pts}
    assert by["baryossef", 100] == pytest.approx(6.5 * 100 ** (1 / 3))
    assert by["baryossef", 100] == pytest.approx(30.17, abs=0.01)
    assert by["andoni10", 1024] == pytest.approx(120)
    assert all(by["batu", n] == 30 for n in (100, 1024, 10_000))
    others = [by[a, 10_000] for a in ALGORITHMS if a != "batu"]
    assert by["batu", 10_000] < min(others)


def test_curves_fixed_theta_and_validation():
    pts = theory_curves([100, 200], theta=5, k=2)
    assert [p.value for p in pts if p.algorithm == "sokolov"] == [math.inf, math.inf]
    with pytest.raises(InputError):
        theory_curves([200, 100])
    with pytest.raises(InputError):
        theory_curves([])


def test_values_at_least_one():
    grid = [100, 200, 500, 1000, 5000, 10_000]
    for k in (1, 2, 5):
        for theta in ("n", 1, 6, 50):
            for p in theory_curves(grid, theta=theta, k=k):
                assert p.value >= 1
            for p in theory_curves(grid, theta=theta, k=k, batu_j=1):
                assert p.value >= 1

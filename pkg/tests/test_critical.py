import math
import threading

import pytest

from npythag import (
    DomainError,
    NoCriticalDegreeError,
    RatioAtLeastTwoError,
    cos_vertex_arg,
    is_real_domain,
    ncrit_residual,
    solve_ncrit,
    vertex_angle,
)
from npythag.claims import linspace
from npythag.critical import clear_ncrit_cache

# roots of (g^n + 1)^(1/n) = g - 1, mpmath findroot at 50 digits
MP_NCRIT = {
    1.1: -0.29496813909726905031,
    1.5: -0.78788491102586978363,
    1.99: -4.4746383207669643211,
}


@pytest.mark.parametrize("g", sorted(MP_NCRIT))
def test_ncrit_matches_high_precision_root(g, fresh_cache):
    cd = solve_ncrit(g)
    # a 1e-12 residual tolerance pins the root to roughly that many units of n
    assert cd.n_crit == pytest.approx(MP_NCRIT[g], abs=1e-9)
    assert abs(cd.residual) <= 1e-12
    assert cd.bracket[0] <= cd.n_crit <= cd.bracket[1]


def test_residual_values():
    # 50-digit evaluations
    assert ncrit_residual(1.5, -10) == pytest.approx(0.49828218896416844301, rel=1e-13)
    assert ncrit_residual(1.5, -0.1) == pytest.approx(-0.49880641528597785191, rel=1e-12)


@pytest.mark.parametrize("g,n", [(1.0, -1.0), (2.0, -1.0), (1.5, 1.0), (1.5, 0.0)])
def test_residual_domain(g, n):
    with pytest.raises(DomainError):
        ncrit_residual(g, n)


def test_solver_errors():
    with pytest.raises(NoCriticalDegreeError):
        solve_ncrit(1.0)
    with pytest.raises(RatioAtLeastTwoError):
        solve_ncrit(2.0)
    with pytest.raises(DomainError):
        solve_ncrit(math.nan)


def test_is_real_domain_examples():
    assert is_real_domain(1.5, -2)
    assert not is_real_domain(1.5, -0.5)
    assert is_real_domain(1.0, -0.01)
    assert not is_real_domain(2.5, -3)
    assert is_real_domain(2.5, 3)
    assert not is_real_domain(1.5, 0.5)


GRID50 = linspace(1.01, 1.99, 50)


def test_root_consistency_on_grid():
    for g in GRID50:
        nc = solve_ncrit(g).n_crit
        assert abs(cos_vertex_arg(g, nc) - 1.0) <= 10 * 1e-12


def test_boundary_flip_and_collapse():
    for g in linspace(1.01, 1.99, 20):
        nc = solve_ncrit(g).n_crit
        assert vertex_angle(g, nc * (1 + 1e-6)).is_real
        assert not vertex_angle(g, nc * (1 - 1e-6)).is_real
        assert vertex_angle(g, nc).theta <= 1e-4


def test_monotone_decreasing():
    roots = [solve_ncrit(g).n_crit for g in GRID50]
    assert all(b < a for a, b in zip(roots, roots[1:]))


def test_cache_transparent(fresh_cache):
    a = solve_ncrit(1.37, use_cache=False)
    b = solve_ncrit(1.37)
    c = solve_ncrit(1.37)
    assert a == b == c


def test_cache_keyed_on_tolerance(fresh_cache):
    loose = solve_ncrit(1.37, tol_root=1e-4)
    tight = solve_ncrit(1.37)
    assert abs(loose.residual) <= 1e-4
    assert abs(tight.residual) <= 1e-12


def test_cache_thread_safety(fresh_cache):
    grid = linspace(1.05, 1.95, 30)
    expected = [solve_ncrit(g, use_cache=False) for g in grid]
    clear_ncrit_cache()
    results = {}

    def work(k):
        results[k] = [solve_ncrit(g) for g in grid]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(v == expected for v in results.values())

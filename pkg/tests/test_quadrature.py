import numpy as np
import pytest

from sfrepro.errors import ConfigError
from sfrepro.geometry import Medium, Region, Wavenumber
from sfrepro.quadrature import QuadratureSpec, rect_nodes

REGION = Region(np.zeros(2), np.array([1.0, 1.0]))


def test_weights_sum_to_region_measure():
    for rule in ("gauss", "midpoint"):
        for n in (2, 7, 40):
            nodes, wts = rect_nodes(REGION, QuadratureSpec(rule, n))
            assert wts.sum() == pytest.approx(REGION.measure, rel=1e-13)
            assert nodes.shape == (n * n, 2)
            assert wts.shape == (n * n,)


def test_nodes_stay_inside_region():
    big = Region(np.array([0.3, -0.2]), np.array([2.0, 0.5]))
    for rule in ("gauss", "midpoint"):
        nodes, _ = rect_nodes(big, QuadratureSpec(rule, 9))
        assert np.all(nodes >= big.lower - 1e-12)
        assert np.all(nodes <= big.upper + 1e-12)


def test_gauss_integrates_complex_exponential_to_machine_precision():
    k = Wavenumber.from_frequency(450.0, Medium())
    kv = k.k * np.array([np.cos(0.3), np.sin(0.3)])
    nodes, wts = rect_nodes(REGION, QuadratureSpec("gauss", 40))
    got = np.sum(wts * np.exp(-1j * nodes @ kv))

    # separable integral: prod_i 2 sin(k_i/2) / k_i over the unit square
    exact = np.prod([2.0 * np.sin(kc / 2.0) / kc for kc in kv])
    assert got == pytest.approx(exact, rel=1e-12)


def test_midpoint_nodes_are_cell_centers():
    nodes, wts = rect_nodes(REGION, QuadratureSpec("midpoint", 4))
    xs = np.unique(nodes[:, 0])
    assert xs == pytest.approx([-0.375, -0.125, 0.125, 0.375], abs=1e-15)
    assert np.all(wts == wts[0])
    assert wts[0] == pytest.approx(0.25 ** 2, rel=1e-15)


def test_midpoint_converges_at_second_order():
    k = Wavenumber.from_frequency(300.0, Medium())
    kv = k.k * np.array([1.0, 0.0])
    exact = np.prod([2.0 * np.sin(kc / 2.0) / kc if kc != 0 else 1.0 for kc in kv])
    errs = []
    for n in (8, 16, 32):
        nodes, wts = rect_nodes(REGION, QuadratureSpec("midpoint", n))
        got = np.sum(wts * np.exp(-1j * nodes @ kv))
        errs.append(abs(got - exact))
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.2)
    assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.2)


def test_spec_validation():
    with pytest.raises(ConfigError):
        QuadratureSpec("simpson", 10)
    with pytest.raises(ConfigError):
        QuadratureSpec("gauss", 1)
    with pytest.raises(ConfigError):
        QuadratureSpec("gauss", 0)

import math

import pytest

import ptwell


def test_oscillator_levels():
    for k in range(4):
        r = ptwell.solve_level(ptwell.ModelSpec(1, 0.0), k)
        assert r.converged
        assert abs(r.E - (2 * k + 1)) < 1e-8


def test_table_point():
    r = ptwell.solve_level(ptwell.ModelSpec(M=1, epsilon=18.0))
    assert abs(r.E.real - 20.67629) < 1e-5
    assert ptwell.F_of_eps(r.E.real, 18.0) == pytest.approx(0.06998, abs=1e-5)


def test_run_table_csv():
    lines = ptwell.run_table(1).splitlines()
    assert lines[0] == "epsilon,E0,F,R1,R2"
    assert lines[5] == "48,134.43752,0.06542,0.06260,0.06251"


def test_wkb_and_limit():
    assert ptwell.wkb_energy_closed(2, 0.0) == pytest.approx(5.0, rel=1e-12)
    assert ptwell.wkb_energy_quadrature(ptwell.ModelSpec(1, 4.0), 1) == pytest.approx(
        ptwell.wkb_energy_closed(1, 4.0), rel=1e-8
    )
    nus = [lvl.nu for lvl in ptwell.nu_spectrum(2, 1)]
    assert nus == pytest.approx([1 / 3, 2 / 3, 4 / 3, 5 / 3])
    assert abs(ptwell.quantization_residual(1, 0.5)) < 1e-15
    psi = ptwell.LimitWavefunction(1, 0.5)
    w = 0.5
    assert psi(0j) == pytest.approx(math.exp(w) / math.sqrt(2 * math.pi * w))
    assert ptwell.scaled_ode_residual(1, psi.F, 0.3 - 0.1j, psi) < 1e-6


def test_special_functions_and_period():
    assert ptwell.gamma(0.5) == pytest.approx(math.sqrt(math.pi))
    assert ptwell.bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) / math.e)
    assert ptwell.f1_oracle() == pytest.approx(ptwell.euler_gamma() / 4, abs=1e-8)
    T, ET = ptwell.period_exact(0.0, 1.0)
    assert T == pytest.approx(2 * math.pi)
    assert ptwell.richardson([8, 18], [0.07825, 0.06998], 1)[0] == pytest.approx(0.06336, abs=1e-5)


def test_errors_map_to_python():
    with pytest.raises(ptwell.DomainError):
        ptwell.ModelSpec(0, 1.0)
    with pytest.raises(ValueError):
        ptwell.turning_points(ptwell.ModelSpec(1, 1.0), -1.0)
    with pytest.raises(ptwell.BranchCutError):
        ptwell.potential_value(ptwell.ModelSpec(1, 0.5), 2j)
    with pytest.raises(ptwell.UnsupportedError):
        ptwell.quantization_residual(3, 0.25)

import json
import math

import pytest

import bohr_abscissa as ba


def test_bohr_roots():
    bohr = ba.solve_abscissa(0.5)
    assert abs(bohr.root - 1.7267) <= 2e-3
    assert bohr.residual.contains(0.0)
    lo, hi = bohr.bracket
    assert lo < bohr.root < hi

    mixed = ba.solve_abscissa(1.0)
    assert abs(mixed.root - 1.2061) <= 2e-3


def test_zeta_kernels():
    assert ba.riemann_zeta(2.0).contains(math.pi**2 / 6)
    assert ba.prime_zeta(2.0).value == pytest.approx(0.4522474200410655, rel=1e-13)
    assert ba.almost_prime_zeta(0, 3.0).value == 1.0
    assert ba.almost_prime_zeta(2, 4.0).value == pytest.approx(0.0049946744686373, rel=1e-12)
    with pytest.raises(ValueError):
        ba.prime_zeta(1.0)


def test_policy_and_errors():
    policy = ba.TruncationPolicy(zeta_terms=32, moebius_terms=32, k_tail_tolerance=1e-12)
    assert ba.bohr_sum(2.0, policy).contains(0.37179660707028866)
    with pytest.raises(ValueError):
        ba.TruncationPolicy(k_tail_tolerance=2.0)
    with pytest.raises(ba.BracketError):
        ba.solve_abscissa(5.0)


def test_radii_and_bounds():
    assert ba.rogosinski_radius(1) == 0.5
    assert ba.rogosinski_radius(2) == math.sqrt(3) / 8
    assert ba.rogosinski_radius(2, r2_alternate=True) == math.sqrt(3 / 8)
    assert ba.rogosinski_radius(3) == pytest.approx(0.6477988712610424, rel=1e-13)
    assert ba.radius_to_abscissa(1 / 3) == pytest.approx(math.log(3) / math.log(2), rel=1e-14)
    assert ba.bohr_bound_modulus(1.0, 2.0).value == 1.0


def test_lift_and_lattice():
    table = ba.PrimeTable(100)
    assert table.factorize(12) == [(2, 2), (3, 1)]
    assert table.omega(96) == 6
    basis, terms = ba.lift([1, 1, 0, 0, 0, 1], table)
    assert basis == [2, 3, 5]
    assert [t[2] for t in terms] == [[0, 0, 0], [1, 0, 0], [1, 1, 0]]
    s = complex(1.3, 4.0)
    coeffs = [complex(math.cos(n), math.sin(n)) / n for n in range(1, 60)]
    assert abs(ba.evaluate_dirichlet(coeffs, s) - ba.evaluate_lifted(coeffs, s, table)) < 1e-12

    spec = ba.lattice_for_degree(4, table)
    assert spec.points == [[0, 0], [1, 0], [0, 1], [2, 0]]
    assert ba.lattice_enumeration_check(spec)
    spec.integer_weights = [1, 1]
    spec.integer_bound = 10
    assert not ba.lattice_enumeration_check(spec)
    assert ba.rogosinski_halfplane_bound(2, table) == pytest.approx(1.0)


def test_oracle():
    table = ba.PrimeTable(1000)
    report = ba.direct_sum_oracle(1, 2.0, 10, table)
    assert report.value == pytest.approx(1 / 4 + 1 / 9 + 1 / 25 + 1 / 49)
    assert report.terms_used == 4


def test_cli_in_process():
    code, out, _ = ba.run_cli(["lattice", "--k", "4", "--format", "json"])
    assert code == 0
    assert json.loads(out)["value"]["points"] == [[0, 0], [1, 0], [0, 1], [2, 0]]
    code, _, err = ba.run_cli(["prime-zeta", "--s", "0.5"])
    assert code == 2
    assert "s > 1" in err

from fractions import Fraction

import pytest

import orbitkit as ok


def test_arith():
    assert ok.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert ok.mobius(6) == 1
    assert ok.ord_p(2**6 - 1, 3) == 2
    assert ok.padic_abs(4095, 3) == (3, 2)
    assert ok.padic_factor(12) == 2
    with pytest.raises(ValueError):
        ok.divisors(0)


def test_tables():
    f = ok.MapSpec.three_adic_extension()
    g = ok.MapSpec.circle_doubling()
    tf = ok.build_table(f, 6)
    assert tf.F == [1, 1, 7, 5, 31, 7]
    assert tf.O == [1, 0, 2, 1, 6, 0]
    assert ok.build_table(g, 6).O == [1, 1, 2, 3, 6, 9]
    assert ok.fix_count(g, 100) == 2**100 - 1
    assert ok.orbit_count_iterate(ok.build_table(g, 10), 2, 2) == 6
    assert ok.iterate_square_identity(tf, 3) == 2
    assert ok.build_table(ok.MapSpec.custom([1, 3]), 2).F == [1, 7]
    assert ok.MapSpec.iterate(g, 2).name == "g^2"
    with pytest.raises(ok.ValidationError):
        tf.orbits(7)


def test_asymptotics():
    tf = ok.build_table(ok.MapSpec.three_adic_extension(), 200)
    tg = ok.build_table(ok.MapSpec.circle_doubling(), 200)
    assert ok.pi_sum(tf, 6) == 10
    assert ok.pnt_ratio(tf, 6) == Fraction(15, 32)
    assert ok.delta_gap(tf, tg, 6) == (12, 13)
    assert ok.merten_series(tf, 3)[-1][1] == Fraction(3, 4)
    rows = ok.ratio_series(tf, 200)
    assert all(0.313 <= float(r["ratio"]) <= 1.02 for r in rows)


def test_zeta():
    tf = ok.build_table(ok.MapSpec.three_adic_extension(), 60)
    assert ok.zeta_series(tf, 5) == [1, 1, 1, 3, 4, 10]
    assert ok.zeta_series(tf, 60) == ok.orbit_product_series(tf, 60)
    assert ok.xi1_direct(100) == ok.xi1_closed_form(100)
    assert ok.xi_series(tf, 60) == ok.xi_decomposition(60)
    assert ok.modulus_product_polar(0.5, 1, 3, 1) == 0.0
    assert ok.modulus_product(0j) == 1.0
    assert abs(ok.modulus_product(0.1 + 0.05j) - ok.series_modulus(tf, 0.1 + 0.05j, 60)) < 1e-9
    scan = ok.radial_scan(1, 3, [0.49, 0.495, 0.499, 0.4995, 0.4999], 10, 60, tf)
    mods = [r["product_modulus"] for r in scan]
    assert mods == sorted(mods, reverse=True)


def test_cli_and_verify():
    code, out, _ = ok.run_cli(["table", "--map", "f", "--max", "6"])
    assert code == 0
    assert "6,7,0,0" in out.splitlines()
    code, _, err = ok.run_cli(["table", "--map", "f", "--max", "0"])
    assert code == 1 and err
    assert all(passed for _, _, passed, _ in ok.run_invariants(60))

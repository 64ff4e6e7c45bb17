from fractions import Fraction

import pytest

import orderpoly as op


def test_chain_order_polynomial_routes():
    lp = op.natural(op.chain(2))
    for route in ("recursive", "matrix", "oracle"):
        p = op.order_poly(lp, route=route)
        assert p.coefficients == [Fraction(0), Fraction(1, 2), Fraction(1, 2)]
    assert str(op.order_poly(lp)) == "1/2·t^2 + 1/2·t"


def test_strict_chain_counts_strict_maps():
    p = op.order_poly(op.reversed(op.chain(2)))
    assert [p(n) for n in range(5)] == [0, 0, 1, 3, 6]


def test_antichain_is_power_of_t():
    p = op.order_poly(op.natural(op.antichain(3)))
    assert p == op.Polynomial([0, 0, 0, 1])


def test_parse_and_errors():
    lp = op.parse_poset("elements: 2\nlabels: 2 1\n0 < 1\n")
    assert lp.labels == [2, 1]
    with pytest.raises(ValueError, match="line 3"):
        op.parse_poset("elements: 2\n0 < 1\n1 < 0\n")
    with pytest.raises(ValueError):
        op.Poset(3, [(0, 1), (1, 2), (2, 0)])


def test_eulerian_and_phi():
    lp = op.natural(op.antichain(2))
    assert op.eulerian(lp).coefficients == [0, 1, 1]
    assert op.eulerian(lp, route="chains") == op.eulerian(lp)
    assert op.path_counts(lp) == [0, 1, 2]
    assert op.phi(op.reversed(op.shrub(1))) == Fraction(-1, 2)
    et = op.e_tilde(lp)
    assert et.pole_order == 3
    assert et.series(4) == [n * n for n in range(5)]


def test_bernoulli_routes():
    for route in ("oracle", "shrub", "multinomial"):
        assert op.bernoulli(12, route=route) == Fraction(-691, 2730)


def test_qsym_and_invariants():
    lp = op.reversed(op.chain(2))
    assert op.qsym(lp, 2) == {(1, 1): Fraction(1)}
    assert op.qsym(lp, 3, route="recursive") == op.qsym(lp, 3)
    assert op.invariant(lp, "omega") == op.order_poly(lp)
    assert op.invariant(lp, "qsym:2") == {(1, 1): Fraction(1)}


def test_unlabeled_reciprocity():
    for p in op.posets_up_to_iso(4):
        weak = op.order_poly_unlabeled(p)
        strict = op.strict_order_poly(p)
        sign = (-1) ** len(p)
        assert all(weak(n) == sign * strict(-n) for n in range(-3, 4))


def test_catalog_counts_and_check_suite():
    assert [len(op.posets_up_to_iso(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]
    rows = op.check(3)
    assert rows and all(r["passed"] for r in rows)

import random
from fractions import Fraction

import pytest

from jacklr.alg import AlphaPoly, AlphaRat
from jacklr.errors import BasisMismatch, LengthExceedsVars, NvarsMismatch, UnstableTruncation
from jacklr.lr import lr_coeff
from jacklr.partition import partitions_of
from jacklr.symring import (MONOMIAL, POWERSUM, SymPoly, kostka, mono_product, mono_to_power,
                            mono_to_schur, power_inner, power_to_mono, schur_to_mono)

from conftest import explicit_monomial, explicit_mul, explicit_to_mono

a = AlphaPoly((0, 1))


def m(lam, n, c=1):
    return SymPoly.mono(lam, n, c)


def test_mono_product_examples():
    assert mono_product(m((1,), 2), m((1,), 2)) == SymPoly(MONOMIAL, 2, {(2,): 1, (1, 1): 2})
    assert mono_product(m((1,), 3), m((1,), 3)) == SymPoly(MONOMIAL, 3, {(2,): 1, (1, 1): 2})
    f = SymPoly(MONOMIAL, 3, {(2, 1): 3, (1, 1, 1): -1})
    assert mono_product(m((), 3), f) == f
    assert mono_product(m((1,), 1), m((1,), 1)) == m((2,), 1)


def test_mono_product_errors():
    with pytest.raises(NvarsMismatch):
        mono_product(m((1,), 2), m((1,), 3))
    with pytest.raises(BasisMismatch):
        mono_product(SymPoly.power((1,), 2), SymPoly.power((1,), 2))


def test_mono_product_matches_explicit_polynomials():
    for n in (1, 2, 3, 4):
        for d1 in range(4):
            for d2 in range(4):
                for lam in partitions_of(d1, max_len=n):
                    for mu in partitions_of(d2, max_len=n):
                        got = mono_product(m(lam, n), m(mu, n)).terms
                        want = explicit_to_mono(explicit_mul(explicit_monomial(lam, n),
                                                             explicit_monomial(mu, n)))
                        assert got == want, (lam, mu, n)


def _random_poly(rng, n, max_deg=3):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(0, max_deg)
        lam = rng.choice(partitions_of(d, max_len=n))
        terms[lam] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return SymPoly(MONOMIAL, n, terms)


def test_mono_product_commutative_associative():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        f, g, h = (_random_poly(rng, n, 2) for _ in range(3))
        assert mono_product(f, g) == mono_product(g, f)
        assert mono_product(mono_product(f, g), h) == mono_product(f, mono_product(g, h))


def test_power_mono_examples():
    assert power_to_mono(SymPoly.power((2,), 2)) == m((2,), 2)
    assert mono_to_power(m((1, 1), 2)) == SymPoly(POWERSUM, 2, {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    p21 = SymPoly.power((2, 1), 3)
    assert mono_to_power(power_to_mono(p21)) == p21


def test_mono_to_power_needs_enough_variables():
    with pytest.raises(UnstableTruncation):
        mono_to_power(m((2, 1), 2))


def test_power_mono_round_trip_all_degrees():
    for d in range(7):
        for lam in partitions_of(d):
            f = m(lam, max(d, 1))
            assert power_to_mono(mono_to_power(f)) == f


@pytest.mark.parametrize("lam, n, expected", [
    ((1, 1), 2, {(1, 1): 1}),
    ((2,), 2, {(2,): 1, (1, 1): 1}),
    ((2, 1), 3, {(2, 1): 1, (1, 1, 1): 2}),
])
def test_schur_examples(lam, n, expected):
    assert schur_to_mono(lam, n).terms == expected


def test_schur_length_check():
    with pytest.raises(LengthExceedsVars):
        schur_to_mono((1, 1, 1), 2)


def test_kostka_unitriangular():
    for d in range(8):
        parts = partitions_of(d)
        for i, lam in enumerate(parts):
            assert kostka(lam, lam) == 1
            for mu in parts[:i]:
                # mu before lam in reverse-lex means mu is not dominated by lam
                assert kostka(lam, mu) == 0


def test_kostka_against_bialternant():
    # s_lam(x1..xn) = det(x_i^(lam_j+n-j)) / det(x_i^(n-j)), read off by explicit polynomial division
    # is overkill; use the column count K_{lam,1^n} = number of standard tableaux (hook length).
    from math import factorial
    from jacklr.partition import arm, cells, leg
    for d in range(1, 8):
        for lam in partitions_of(d):
            hooks = 1
            for s in cells(lam):
                hooks *= arm(lam, s) + leg(lam, s) + 1
            assert kostka(lam, (1,) * d) == factorial(d) // hooks


def test_power_inner_examples():
    assert power_inner(SymPoly.power((2,), 2), SymPoly.power((2,), 2)) == AlphaRat(2 * a)
    assert power_inner(SymPoly.power((2,), 2), SymPoly.power((1, 1), 2)) == AlphaRat()
    assert power_inner(m((1, 1), 2), m((1, 1), 2)) == AlphaRat(a * (a + 1), 2)


def test_power_inner_symmetric_and_positive_at_one():
    rng = random.Random(11)
    for _ in range(40):
        d = rng.randint(1, 5)
        f = SymPoly(MONOMIAL, d, {lam: Fraction(rng.randint(-3, 3)) for lam in rng.sample(partitions_of(d), min(3, len(partitions_of(d))))})
        g = SymPoly(MONOMIAL, d, {lam: Fraction(rng.randint(-3, 3)) for lam in rng.sample(partitions_of(d), min(3, len(partitions_of(d))))})
        assert power_inner(f, g) == power_inner(g, f)
        assert power_inner(f + g, g) == power_inner(f, g) + power_inner(g, g)
        if not f.is_zero():
            assert power_inner(f, f)(1) > 0


def test_schur_product_has_lr_coefficients():
    for n in range(1, 7):
        for s in range(n + 1):
            for lam in partitions_of(s):
                for mu in partitions_of(n - s):
                    prod_ = mono_product(schur_to_mono(lam, n), schur_to_mono(mu, n))
                    schur = mono_to_schur(prod_).terms
                    for nu in partitions_of(n):
                        assert schur.get(nu, 0) == lr_coeff(lam, mu, nu)

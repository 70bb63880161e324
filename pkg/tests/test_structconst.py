from fractions import Fraction

from jacklr.alg import AlphaPoly, AlphaRat
from jacklr.lr import lr_coeff
from jacklr.partition import horizontal_strips, partitions_of
from jacklr.structconst import (StanleyClass, check_nonvanishing, check_jack_pieri, check_stanley,
                                product_mono, reconstruct, stanley_evidence, stanley_product,
                                struct_coeff, structure_constants)

a = AlphaPoly((0, 1))


def test_struct_examples():
    t = structure_constants((1,), (1,), 2)
    assert t.entries == {(2,): 1, (1, 1): AlphaRat(2 * a, a + 1)}
    assert t.at(1) == {(2,): 1, (1, 1): 1}
    assert t.truncate(1).entries == {(2,): 1}
    for n in (1, 2, 5):
        assert structure_constants((1,), (), n).entries == {(1,): 1}


def test_reconstruction():
    for n in range(6):
        for s in range(n + 1):
            for lam in partitions_of(s):
                for mu in partitions_of(n - s):
                    t = structure_constants(lam, mu)
                    assert reconstruct(t) == product_mono(lam, mu, t.nvars)


def test_symmetric_in_lam_mu():
    for n in range(6):
        for s in range(n + 1):
            for lam in partitions_of(s):
                for mu in partitions_of(n - s):
                    assert structure_constants(lam, mu).entries == structure_constants(mu, lam).entries


def test_size_mismatch_is_zero():
    assert not struct_coeff((1,), (1,), (3,))


def test_stanley_examples():
    assert stanley_product((1,), (1,), (1, 1)) == AlphaRat(2 * a * a)
    assert stanley_product((1,), (1,), (2,)) == AlphaRat(2 * a * a)
    assert not stanley_product((1,), (1,), (3,))
    assert check_stanley((1,), (1,), (1, 1)) is StanleyClass.POLYNOMIAL_NONNEG
    assert check_stanley((2,), (1,), (2, 1)) is StanleyClass.POLYNOMIAL_NONNEG
    assert check_stanley((1,), (1,), (4,)) is StanleyClass.POLYNOMIAL_NONNEG
    ev = stanley_evidence((1,), (1,), (1, 1))
    assert ev["product"] == "2*a^2" and ev["class"] == "PolynomialNonneg"


def test_nonvanishing_examples():
    r = check_nonvanishing((1,), (1,), (1, 1))
    assert r.agree and all(v != 0 for v in r.values.values())
    r = check_nonvanishing((1,), (1,), (3,))
    assert r.agree and all(v == 0 for v in r.values.values())
    r = check_nonvanishing((2, 1), (2, 1), (3, 2, 1), (1, 2))
    assert r.agree and r.lr == 2
    assert r.f(1) == 2


def test_pieri_examples():
    assert set(check_jack_pieri((2, 1), 2, 3).support) == {(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)}
    assert check_jack_pieri((), 5).support == [(5,)]
    r = check_jack_pieri((1, 1), 1, 2)
    assert r.support == [(2, 1)] and r.equal


def test_value_at_one_is_lr():
    for n in range(6):
        for s in range(n + 1):
            for lam in partitions_of(s):
                for mu in partitions_of(n - s):
                    vals = structure_constants(lam, mu).at(1)
                    for nu in partitions_of(n):
                        assert vals.get(nu, 0) == lr_coeff(lam, mu, nu)


def test_truncated_table_matches_fewer_variables():
    # stability: computing in fewer variables drops exactly the long nu
    for lam, mu in [((2, 1), (1,)), ((1, 1), (2,)), ((2,), (2,))]:
        full = structure_constants(lam, mu)
        for r in (2, 3):
            assert structure_constants(lam, mu, r).entries == full.truncate(r).entries


def test_alpha_two_value_example():
    assert struct_coeff((1,), (1,), (1, 1))(2) == Fraction(4, 3)


def test_pieri_support_equals_interlacing_small():
    for n in range(4):
        for lam in partitions_of(n):
            for k in range(4):
                r = check_jack_pieri(lam, k)
                assert r.equal
                assert r.expected == horizontal_strips(lam, k, len(lam) + 1)

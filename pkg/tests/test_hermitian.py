from fractions import Fraction

import pytest

from jacklr.errors import ConjecturalCase, InvalidParameters, RankExceeded, SizeMismatch
from jacklr.hermitian import (SO2, SU, Verdict, case_registry, check_multiplicity_nonvanishing,
                              decide_product_support, e_iii, e_vii, make_case, parse_case, so_branching_multiplicity, so_n2,
                              sostar, sp_n, split_case_list, su_pq, table_rows, tensor_multiplicity)
from jacklr.lr import rank2_coeff


def test_registry_examples():
    c = su_pq(3, 5)
    assert (c.rank, c.tube, c.tube_reduction, c.mult) == (3, False, (SU, (3, 3)), 2)
    c = sp_n(4)
    assert (c.rank, c.tube, c.mult) == (4, True, 1)
    c = so_n2(6)
    assert (c.rank, c.tube, c.mult) == (2, True, 4)


def test_tube_multiplicities():
    assert su_pq(2, 2).mult == 2
    assert sp_n(3).alpha == 2
    assert sostar(8).mult == 4 and sostar(8).tube and sostar(8).rank == 2
    assert so_n2(7).mult == 5
    assert e_vii().mult == 8 and e_vii().rank == 3
    odd = sostar(10)
    assert not odd.tube and odd.rank == 2 and odd.mult == 4
    assert e_iii().tube_reduction == (SO2, (8,)) and e_iii().mult == 6


def test_registry_lists_every_family():
    assert set(case_registry()) == {"su", "sp", "sostar", "so2", "eiii", "evii"}
    assert len(table_rows()) >= 6


def test_literals():
    assert parse_case("su:3,5") == su_pq(3, 5)
    assert parse_case("EVII") == e_vii()
    assert [c.literal for c in split_case_list("sp:2,su:2,2,evii")] == ["sp:2", "su:2,2", "evii"]
    for c in table_rows():
        assert parse_case(c.literal) == c


@pytest.mark.parametrize("bad", ["su:0,2", "sp:0", "sostar:7", "so2:2", "xx:1", "su:2", "sp:a"])
def test_bad_literals(bad):
    with pytest.raises(InvalidParameters):
        parse_case(bad)


def test_decide_examples():
    v, ev = decide_product_support(sp_n(2), (1,), (1,), (1, 1))
    assert v is Verdict.IN_SUPPORT and ev.value == Fraction(4, 3) and ev.lr == 1
    for case in (sp_n(2), su_pq(2, 2), so_n2(6)):
        assert decide_product_support(case, (1,), (1,), (3,))[0] is Verdict.NOT_IN_SUPPORT
    v, ev = decide_product_support(su_pq(2, 4), (1,), (1,), (2,))
    assert v is Verdict.IN_SUPPORT and ev.value == 1 and str(ev.f) == "1"


def test_rank_is_enforced():
    with pytest.raises(RankExceeded):
        decide_product_support(sp_n(2), (1, 1, 1), (), (1, 1, 1))


def test_tensor_examples():
    assert tensor_multiplicity(sp_n(2), (1,), (1,), (2,)).value == 1
    assert tensor_multiplicity(so_n2(6), (2, 1), (3, 1), (5, 2)).value == 1
    assert tensor_multiplicity(su_pq(2, 3), (1,), (1,), (1, 1)).value == 1
    assert tensor_multiplicity(su_pq(3, 3), (2, 1), (2, 1), (3, 2, 1)).value == 4
    r = tensor_multiplicity(e_vii(), (2, 1), (2, 1), (3, 2, 1))
    assert r.conjectural and r.value == 3
    with pytest.raises(InvalidParameters):
        tensor_multiplicity(make_case("so2", 3), (1,), (1,), (2,))


def test_multiplicity_nonvanishing_examples():
    assert check_multiplicity_nonvanishing(sp_n(2), (1,), (1,), (1, 1))
    assert check_multiplicity_nonvanishing(so_n2(5), (2, 1), (3, 1), (6, 1))
    assert check_multiplicity_nonvanishing(sostar(8), (1,), (1,), (2,))
    with pytest.raises(SizeMismatch):
        check_multiplicity_nonvanishing(sp_n(2), (1,), (1,), (3,))
    with pytest.raises(ConjecturalCase):
        check_multiplicity_nonvanishing(e_iii(), (1,), (1,), (2,))


def test_so_lemma_agrees_with_rank2_rule():
    for a in range(7):
        for b in range(7):
            for c in range(13):
                lam, mu = (a,) if a else (), (b,) if b else ()
                lengths = {(c + k, k) for k in range(7)}
                # one-row inputs: the lemma is nonzero exactly when some nu with gap c occurs
                want = any(rank2_coeff(lam, mu, tuple(p for p in nu if p)) for nu in lengths
                           if sum(nu) == a + b)
                assert (so_branching_multiplicity(a, b, c) != 0) == want


def test_grading_for_every_case():
    for case in [sp_n(2), su_pq(2, 3), sostar(8), so_n2(6), e_vii()]:
        assert decide_product_support(case, (2,), (1,), (2, 2))[0] is Verdict.NOT_IN_SUPPORT

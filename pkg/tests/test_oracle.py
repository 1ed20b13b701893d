import pytest

from twistcalc.errors import BudgetError, CrosscheckError
from twistcalc.graded import GradedDims, make_Er
from twistcalc.schur_oracle import crosscheck, oracle_ext, oracle_table, piece, twisted
from twistcalc.schur_oracle.functors import Compose, Div, Fr, Id, Sym, Ten
from twistcalc.schur_oracle.oracle import truncate


def test_pieces():
    assert piece("Id", (1,)) == Id()
    assert piece("Sym", (2,)) == Sym(2)
    assert piece("Div", (2, 1)) == Ten((Div(2), Div(1)))
    with pytest.raises(ValueError):
        piece("Id", (2,))
    with pytest.raises(ValueError):
        piece("Tor", (1,))


def test_twisted():
    assert twisted(Id(), 1) == Fr(1)
    assert twisted(Sym(2), 1) == Compose(Sym(2), Fr(1))
    assert twisted(Sym(2), 0) == Sym(2)


def test_frobenius_self_ext():
    assert oracle_ext("Fr(1)", "Fr(1)", 2, 6) == {0: 1, 2: 1}
    assert oracle_ext("Fr(1)", "Fr(1)", 2, 1) == {0: 1}


def test_stretch_case_in_characteristic_three():
    assert oracle_ext("Fr(1)", "Fr(1)", 3, 6) == make_Er(3, 1)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        oracle_ext("Sym(2)", "Sym(3)", 2, 1)


def test_tables():
    t = oracle_table("Sym(2)", "Div", 2, 3)
    assert t.lookup((2,)) == {0: 1, 1: 1, 2: 1}
    assert t.lookup((1, 1)) == {0: 1}
    assert oracle_table("Id", "Id", 2, 4).lookup((1,)) == {0: 1}


def test_hom_only_for_large_algebra():
    # degree zero stays available through the generator actions
    assert oracle_ext("Div(2)∘Fr(1)", "Sym(2)∘Fr(1)", 2, 0) == {0: 1}
    with pytest.raises(BudgetError):
        oracle_ext("Div(2)∘Fr(1)", "Sym(2)∘Fr(1)", 2, 1)


def test_truncate():
    assert truncate(make_Er(2, 2), 3) == {0: 1, 2: 1}


@pytest.mark.parametrize("p", [2, 3])
def test_crosscheck_identity(p):
    report = crosscheck("Id", "Id", p, 1, 2 * p)
    assert report.agree
    assert report.engine == make_Er(p, 1)
    assert report.to_json()["agree"] is True


def test_crosscheck_second_twist_is_over_budget():
    with pytest.raises(BudgetError):
        crosscheck("Id", "Id", 2, 2, 6)


def test_crosscheck_r_zero_with_nontrivial_left():
    report = crosscheck("Sym(2)", "Div", 2, 0, 3)
    assert report.agree and report.oracle == {0: 1, 1: 1, 2: 1}


def test_crosscheck_strict_raises(monkeypatch):
    import twistcalc.schur_oracle.oracle as mod

    monkeypatch.setattr(mod, "untwist", lambda table, p, r: GradedDims({0: 5}))
    with pytest.raises(CrosscheckError):
        crosscheck("Id", "Id", 2, 1, 4)
    assert not crosscheck("Id", "Id", 2, 1, 4, strict=False).agree

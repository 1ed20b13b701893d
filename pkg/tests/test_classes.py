import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistcalc import combin
from twistcalc.classes import check_laws, class_c, cup_compose, gamma, phi_slot


def comp_matrix(rows, p, total):
    return st.lists(st.integers(0, total), min_size=rows * p, max_size=rows * p).map(
        lambda xs: tuple(tuple(xs[i * p : (i + 1) * p]) for i in range(rows))
    )


class TestGamma:
    def test_degrees(self):
        assert gamma(0, 3, 5).degree == 0
        assert gamma(4, 2, 5).degree == 16
        assert gamma(0, 3, 5).is_unit

    @given(st.integers(0, 5), st.integers(0, 6))
    def test_linear_in_index(self, k, j):
        assert gamma(k, j, 7).degree == 2 * j * k

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            gamma(1, 2, 2)
        with pytest.raises(ValueError):
            gamma(-1, 0, 2)


class TestClassC:
    def test_examples(self):
        c = class_c([[0, 1]], 2)
        assert (c.degree, c.domain_index, c.codomain_index) == (2, ((2,),), ((0, 1),))
        assert class_c([[1, 1]], 2).degree == 2
        assert class_c([[3, 0, 0]], 3).degree == 0

    def test_column_mismatch(self):
        with pytest.raises(ValueError):
            class_c([[1, 0, 0]], 2)

    def test_json(self):
        js = class_c([[0, 2], [1, 0]], 2).to_json()
        assert js["degree"] == 4 and js["domain"] == [[4], [2]]
        assert js["factors"] == [[0, 1, 2], [1, 0, 1]]

    @given(st.sampled_from([2, 3]).flatmap(lambda p: comp_matrix(2, p, 3).map(lambda m: (p, m))))
    def test_degree_is_weight(self, pm):
        p, nu = pm
        assert class_c(nu, p).degree == combin.weight_t(nu)


class TestCup:
    def test_example(self):
        out = cup_compose(class_c([[1, 0]], 2), class_c([[0, 1]], 2))
        assert out == class_c([[1, 1]], 2) and out.degree == 2

    def test_zero_is_unit(self):
        c = class_c([[2, 1, 0]], 3)
        assert cup_compose(c, class_c([[0, 0, 0]], 3)) == c

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            cup_compose(class_c([[1, 0]], 2), class_c([[1, 0, 0]], 3))

    @given(comp_matrix(2, 3, 3), comp_matrix(2, 3, 3), comp_matrix(2, 3, 3))
    def test_commutative_associative_additive(self, a, b, c):
        ca, cb, cc = (class_c(x, 3) for x in (a, b, c))
        assert cup_compose(ca, cb) == cup_compose(cb, ca)
        assert cup_compose(cup_compose(ca, cb), cc) == cup_compose(ca, cup_compose(cb, cc))
        assert cup_compose(ca, cb).degree == ca.degree + cb.degree


class TestPhiSlot:
    def test_examples(self):
        assert phi_slot([[1, 0]], 0, [0], 2) == (((2,),), 0)
        assert phi_slot([[0, 1]], 0, [0], 2) == (((2,),), 2)
        target, ext = phi_slot([[0, 1]], 3, [2], 2)
        assert (target, ext) == (((2,),), 5)
        assert 3 + 2 * combin.weight_s([[0, 1]], [2]) + 2 == ext + combin.weight_s(target, [2]) == 9

    @given(st.sampled_from([2, 3]).flatmap(lambda p: comp_matrix(2, p, 2).map(lambda m: (p, m))), st.integers(0, 6),
           st.lists(st.sampled_from([0, 2, 4]), min_size=2, max_size=2))
    def test_conservation(self, pm, ext, degs):
        p, nu = pm
        target, out = phi_slot(nu, ext, degs, p)
        assert ext + p * combin.weight_s(nu, degs) + combin.weight_t(nu) == out + combin.weight_s(target, degs)


class TestLawSuite:
    @pytest.mark.parametrize("d,l,p", [(0, 1, 2), (2, 1, 2), (3, 2, 2), (2, 2, 3), (3, 1, 5)])
    def test_green(self, d, l, p):
        report = check_laws(d, l, p)
        assert report.ok, report.failures
        assert report.checked > 0
        assert report.to_json()["ok"]

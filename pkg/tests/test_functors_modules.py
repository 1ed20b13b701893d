from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistcalc import combin
from twistcalc.acceptance import count_integer_matrices
from twistcalc.schur_oracle import build_schur_algebra, evaluate_functor, hom_dim
from twistcalc.schur_oracle.functors import Compose, Div, Ext, Fr, Id, ParseError, Sym, Ten, parse
from twistcalc.schur_oracle.modules import hom_dim_dense, hom_space, weight_frame


class TestParse:
    def test_round_trip(self):
        for text in ["Id", "Fr(1)", "Sym(2)", "Div(3)", "Ext(2)", "Ten(Sym(1),Div(2))", "Div(2)∘Fr(1)"]:
            assert str(parse(text)) == text
        assert parse("Div(2) o Fr(1)") == Compose(Div(2), Fr(1))
        assert parse("Ten(Sym(1), Ext(1))") == Ten((Sym(1), Ext(1)))

    @pytest.mark.parametrize("bad", ["", "Foo(1)", "Sym(0)", "Sym(2", "Sym(2))", "Div(2)∘Sym(1)", "Div(2)∘Fr(1)∘Fr(1)", "Sym(x)"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse(bad)

    def test_degrees(self):
        assert Id().degree(2) == 1
        assert Fr(2).degree(3) == 9
        assert parse("Div(2)∘Fr(1)").degree(2) == 4
        assert parse("Ten(Sym(2),Ext(1))").degree(5) == 3


class TestDimensions:
    @pytest.mark.parametrize(
        "expr,n,p,dim",
        [
            ("Fr(1)", 2, 2, 2),
            ("Div(2)", 2, 2, 3),
            ("Sym(2)", 3, 2, 6),
            ("Ext(2)", 3, 3, 3),
            ("Ten(Sym(1),Sym(1))", 2, 2, 4),
            ("Div(2)∘Fr(1)", 4, 2, 10),
            ("Ext(2)∘Fr(1)", 4, 2, 6),
        ],
    )
    def test_dims(self, expr, n, p, dim):
        assert evaluate_functor(expr, n, p).dim == dim

    def test_unstable_needs_flag(self):
        with pytest.raises(ValueError):
            evaluate_functor("Div(2)∘Fr(1)", 2, 2)
        assert evaluate_functor("Div(2)∘Fr(1)", 2, 2, allow_unstable=True).dim == 3

    @pytest.mark.parametrize("family", ["Sym", "Div", "Ext"])
    def test_family_dims(self, family):
        n = 3
        for a in range(1, 4):
            want = comb(n, a) if family == "Ext" else comb(n + a - 1, a)
            assert evaluate_functor(f"{family}({a})", n, 3).dim == want

    def test_actions_are_representations(self):
        rng = np.random.default_rng(0)
        for expr, n in [("Div(2)", 2), ("Sym(3)", 3), ("Ten(Ext(1),Div(2))", 3), ("Sym(2)∘Fr(1)", 2)]:
            M = evaluate_functor(expr, n, 2, allow_unstable=True)
            assert M.is_full
            assert M.spot_check(rng, trials=8)
            assert np.array_equal(M.act(M.algebra.one), np.eye(M.dim, dtype=np.int64))

    def test_over_budget_falls_back_to_generators(self):
        M = evaluate_functor("Sym(2)∘Fr(1)", 4, 2)
        assert not M.is_full and M.dim == 10

    def test_generators_only(self):
        M = evaluate_functor("Div(2)", 2, 2, generators_only=True)
        assert not M.is_full
        with pytest.raises(ValueError):
            M.act_many(np.zeros((1, M.algebra.dim), dtype=np.int64))


class TestHom:
    def test_frozen_values(self):
        A = build_schur_algebra(2, 2, 2)
        div, sym, ext = (evaluate_functor(x, 2, 2, algebra=A) for x in ("Div(2)", "Sym(2)", "Ext(2)"))
        assert hom_dim(div, sym) == 1
        assert hom_dim(sym, div) == 1
        assert hom_dim(ext, div) == 1
        assert hom_dim(div, ext) == 0
        assert hom_dim(sym, sym) == 1

    def test_twisted_unstable_value(self):
        A = build_schur_algebra(4, 4, 2)
        M = evaluate_functor("Div(2)∘Fr(1)", 4, 2, algebra=A, generators_only=True)
        N = evaluate_functor("Sym(2)∘Fr(1)", 4, 2, algebra=A, generators_only=True)
        assert hom_dim(M, N) == 1

    @pytest.mark.parametrize("D,p", [(2, 2), (3, 2), (3, 3)])
    def test_matches_matrix_counts(self, D, p):
        A = build_schur_algebra(D, D, p)
        for lam in combin.partitions(D):
            for mu in combin.partitions(D):
                M = evaluate_functor(Ten(tuple(Div(a) for a in lam)) if len(lam) > 1 else Div(lam[0]), D, p, algebra=A)
                N = evaluate_functor(Ten(tuple(Sym(a) for a in mu)) if len(mu) > 1 else Sym(mu[0]), D, p, algebra=A)
                assert hom_dim(M, N) == count_integer_matrices(lam, mu)

    @settings(max_examples=15)
    @given(st.sampled_from(["Fr(1)", "Sym(2)", "Div(2)", "Ext(2)", "Ten(Sym(1),Sym(1))"]),
           st.sampled_from(["Fr(1)", "Sym(2)", "Div(2)", "Ext(2)", "Ten(Sym(1),Sym(1))"]))
    def test_fast_and_dense_routes_agree(self, left, right):
        A = build_schur_algebra(2, 2, 2)
        M = evaluate_functor(left, 2, 2, algebra=A)
        N = evaluate_functor(right, 2, 2, algebra=A)
        assert hom_dim(M, N) == hom_dim_dense(M, N) == hom_space(M, N).shape[0]

    def test_fast_route_chunking(self):
        A = build_schur_algebra(3, 3, 3)
        M = evaluate_functor("Ten(Sym(1),Div(2))", 3, 3, algebra=A)
        N = evaluate_functor("Ten(Sym(2),Sym(1))", 3, 3, algebra=A)
        assert hom_dim(M, N, chunk_rows=7) == hom_dim(M, N) == hom_dim_dense(M, N) == 2

    def test_weight_frame_blocks(self):
        M = evaluate_functor("Sym(3)", 3, 2)
        frame = weight_frame(M)
        assert sum(frame.sizes) == M.dim == 10
        assert all(s == 1 for s in frame.sizes if s)

"""Pullback, join, and the named corpus."""

import numpy as np
import pytest

from helpers import random_mixed_poly
from mixedmilnor import newton
from mixedmilnor.constructors import (
    PullbackSpec,
    compose_pullbacks,
    corpus,
    corpus_names,
    has_linear_term,
    join,
    pullback_cyclic,
)
from mixedmilnor.errors import BadParamsError, DimensionMismatchError, UnknownCorpusNameError
from mixedmilnor.poly import parse_poly


class TestCorpus:
    def test_fig1_terms(self):
        f = corpus("fig1")
        assert len(f.terms) == 3
        assert f == parse_poly("z1^3 + z2^3 + z2*z3^2")

    def test_tibar_a_one_is_tibar(self):
        assert corpus("tibar_a", (1,)) == corpus("tibar")

    def test_d_4(self):
        assert corpus("d_n", (4,)) == parse_poly("z1^2 + z2^2*z3 + z3^3")

    def test_cone_matches_definition(self):
        f = corpus("cone", (2, 3, 1, 2, 1))
        expected = parse_poly("z1*(|z1|^2 + |z2|^4 - |z3|^2)")
        assert f == expected

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            corpus("cyclic", (2, 1, 2))
        with pytest.raises(BadParamsError):
            corpus("cone", (2, 2, 1, 1))
        with pytest.raises(BadParamsError):
            corpus("tibar_a", ())
        with pytest.raises(UnknownCorpusNameError):
            corpus("nonesuch")

    def test_names_stable(self):
        assert corpus_names() == [
            "brieskorn_curve",
            "cone",
            "cyclic",
            "d_n",
            "fig1",
            "parusinski",
            "tibar",
            "tibar_a",
        ]


class TestPullback:
    def test_d_n_display(self):
        f = corpus("d_n", (4,))
        ft = pullback_cyclic(f, PullbackSpec((2, 2, 2), (1, 1, 1)))
        assert ft == parse_poly("z1^4*zb1^2 + z2^4*zb2^2*z3^2*zb3 + z3^6*zb3^3")

    def test_identity_spec(self):
        rng = np.random.default_rng(71)
        for _ in range(20):
            f = random_mixed_poly(rng)
            spec = PullbackSpec((1,) * f.n, (0,) * f.n)
            assert pullback_cyclic(f, spec) == f

    def test_exponent_arithmetic(self):
        f = parse_poly("z1*z2")
        out = pullback_cyclic(f, PullbackSpec((1, 2), (0, 1)))
        (mono,) = out.terms
        assert mono.nu == (1, 2) and mono.mu == (0, 1)

    def test_vanishing_preserved_on_corpus(self):
        spec3 = PullbackSpec((2, 3, 2), (1, 0, 1))
        spec2 = PullbackSpec((3, 2), (1, 1))
        for name, params, spec in [
            ("fig1", (), spec3),
            ("parusinski", (), spec3),
            ("d_n", (4,), spec3),
            ("tibar", (), spec2),
            ("brieskorn_curve", (), spec2),
        ]:
            f = corpus(name, params)
            ft = pullback_cyclic(f, spec)
            assert (
                newton.vanishing_subsets(ft).vanishing
                == newton.vanishing_subsets(f).vanishing
            )

    def test_functoriality(self):
        rng = np.random.default_rng(73)
        for _ in range(20):
            f = random_mixed_poly(rng, n=2)
            s1 = PullbackSpec((2, 3), (1, 0))
            s2 = PullbackSpec((2, 2), (0, 1))
            lhs = pullback_cyclic(pullback_cyclic(f, s1), s2)
            rhs = pullback_cyclic(f, compose_pullbacks(s1, s2))
            assert lhs == rhs

    def test_support_scaling_law(self):
        rng = np.random.default_rng(79)
        for _ in range(20):
            f = random_mixed_poly(rng, n=2)
            a, b = (3, 2), (1, 1)
            ft = pullback_cyclic(f, PullbackSpec(a, b))
            scaled = {
                tuple((a[i] + b[i]) * xi[i] for i in range(2)) for xi in f.support()
            }
            assert ft.support() == scaled

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            pullback_cyclic(corpus("tibar"), PullbackSpec((2, 2, 2), (1, 1, 1)))
        with pytest.raises(BadParamsError):
            PullbackSpec((2, 1), (1, 1))


class TestJoin:
    def test_disjoint_powers(self):
        f, idx = join(parse_poly("z1^2", n=1), parse_poly("z1^3", n=1))
        assert f == parse_poly("z1^2 + z2^3")
        assert idx == {(1, 1): 1, (2, 1): 2}
        report = newton.vanishing_subsets(f)
        assert report.vanishing == frozenset()

    def test_tibar_join_vanishing_law(self):
        t = corpus("tibar")
        f, _ = join(t, t)
        expected = {
            frozenset(s)
            for s in [{1}, {2}, {3}, {4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}]
        }
        assert newton.vanishing_subsets(f).vanishing == expected

    def test_vanishing_law_random(self):
        rng = np.random.default_rng(83)
        for _ in range(10):
            f1 = random_mixed_poly(rng, n=2, max_terms=3)
            f2 = random_mixed_poly(rng, n=2, max_terms=3)
            f, _ = join(f1, f2)
            v1 = newton.vanishing_subsets(f1).vanishing | {frozenset()}
            v2 = newton.vanishing_subsets(f2).vanishing | {frozenset()}
            expected = set()
            for I1 in v1:
                for I2 in v2:
                    I = I1 | {j + f1.n for j in I2}
                    if I:
                        expected.add(frozenset(I))
            assert newton.vanishing_subsets(f).vanishing == expected

    def test_support_disjoint_union(self):
        f1 = corpus("tibar")
        f2 = corpus("d_n", (4,))
        f, _ = join(f1, f2)
        lifted = {xi + (0, 0, 0) for xi in f1.support()} | {
            (0, 0) + xi for xi in f2.support()
        }
        assert f.support() == lifted

    def test_linear_term_flag(self):
        assert has_linear_term(parse_poly("z1 + z2^2"))
        assert not has_linear_term(corpus("tibar"))

    def test_zero_inputs_rejected(self):
        from mixedmilnor.errors import ZeroPolynomialError
        from mixedmilnor.poly import MixedPoly

        with pytest.raises(ZeroPolynomialError):
            join(corpus("tibar"), MixedPoly.zero(2))

"""Fraction-free elimination: rank, kernels, minimal polynomials, rank-one test."""

from fractions import Fraction

import pytest

from genmaxwell import oracle
from genmaxwell.algebra import ComplexRational, RepMatrix
from genmaxwell.momentum import MassiveMomentum, massive_operator, projector_set


def C(re, im=0):
    return ComplexRational(re, im)


def test_kernel_of_zero_and_identity():
    assert oracle.null_space(RepMatrix.zero()).dimension == 11
    assert oracle.null_space(RepMatrix.identity()).dimension == 0


def test_small_dense_example():
    m = [[C(1), C(2), C(3)], [C(2), C(4), C(6)], [C(0), C(1, 1), C(1)]]
    assert oracle.rank(m) == 2
    (v,) = oracle.null_space(m).vectors
    for row in m:
        assert sum((a * b for a, b in zip(row, v)), C(0)) == C(0)


def test_gaussian_pivot_with_fractions():
    m = [[C(Fraction(1, 2), Fraction(1, 3)), C(1)], [C(1), C(Fraction(18, 13), Fraction(-12, 13))]]
    # second row is the first divided by (1/2 + i/3)
    assert oracle.rank(m) == 1


def test_wave_operator_kernel(k345):
    ps = projector_set(k345, 1)
    kernel = oracle.null_space(ps.D)
    assert kernel.dimension == 4
    for state in kernel.states():
        assert (ps.D @ state).is_zero()
    cols = [ps.gamma.column(c).components for c in range(11)]
    assert oracle.spans_equal(cols, kernel.vectors)
    assert oracle.rank(ps.gamma) == 4


def test_spans_equal_detects_difference():
    e = [[C(1), C(0)], [C(0), C(1)]]
    assert oracle.spans_equal(e, [[C(1), C(1)], [C(1), C(-1)]])
    assert not oracle.spans_equal(e[:1], e[1:])


@pytest.mark.parametrize("kappa", [1, 2, Fraction(1, 3)])
def test_minimal_polynomials(k345, kappa):
    ps = projector_set(k345, kappa)
    assert oracle.minimal_polynomial(ps.D, 4) == oracle.poly_from_roots([0, kappa, kappa])
    assert oracle.minimal_polynomial(ps.helicity, 4) == oracle.poly_from_roots([0, 1, -1])


def test_minimal_polynomial_degree_cap():
    m = RepMatrix.diagonal([0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10])
    with pytest.raises(oracle.MinimalPolynomialNotFound):
        oracle.minimal_polynomial(m, 3)
    assert len(oracle.minimal_polynomial(m)) == 12
    with pytest.raises(ValueError):
        oracle.minimal_polynomial(m, 12)


def test_poly_from_roots():
    assert oracle.poly_from_roots([1, -1]) == [C(-1), C(0), C(1)]


class TestRankOne:
    def test_helicity_projector_passes(self, k345):
        assert oracle.rank_one_check(projector_set(k345, 1).Pi_plus)

    def test_gamma_fails_with_minor(self, k345):
        r = oracle.rank_one_check(projector_set(k345, 1).gamma)
        assert not r
        assert r.witness.startswith("minor rows")

    def test_zero_matrix_is_not_rank_one(self):
        assert oracle.rank_one_check(RepMatrix.zero()).witness == "zero matrix"


class TestMassive:
    def test_on_shell_kernel(self):
        k = MassiveMomentum(0, 0, 0, 1, m=1)
        assert oracle.null_space(massive_operator(k)).dimension == 4

    def test_moving_on_shell_kernel(self):
        k = MassiveMomentum(0, 0, 3, 5, m=4)
        assert oracle.null_space(massive_operator(k)).dimension == 4

    def test_off_shell_full_rank(self):
        from genmaxwell.momentum import FourMomentum

        k = FourMomentum(0, 0, 1, 1)
        assert oracle.rank(massive_operator(k, m=1)) == 11

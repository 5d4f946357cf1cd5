"""Concrete entries of the wave matrices, projectors, metric and generators."""

from fractions import Fraction

import pytest

from genmaxwell.algebra import ONE, ComplexRational, RepMatrix
from genmaxwell.representation import MATRIX_NAMES, MU, build_J


def test_alpha4_couples_scalar_and_time_vector(rep):
    assert rep.a(4)["S", "V4"] == ONE
    assert rep.a(4)["V4", "S"] == ONE


def test_alpha1_stores_reversed_pair_with_minus_sign(rep):
    assert rep.a(1)["V2", "T12"] == -ONE


@pytest.mark.parametrize("mu", MU)
def test_alpha_has_eight_entries(rep, mu):
    assert rep.a(mu).nonzero_count() == 8


@pytest.mark.parametrize("mu", MU)
def test_beta_families_add_up_to_alpha(rep, mu):
    assert rep.b1(mu) + rep.b0(mu) == rep.a(mu)


def test_beta0_only_touches_scalar_vector(rep):
    assert set(rep.b0(2).nonzero_entries()) == {(0, 2), (2, 0)}


@pytest.mark.parametrize("mu", MU)
def test_beta1_scalar_row_is_empty(rep, mu):
    assert not any(rep.b1(mu).row("S"))


def test_projector_traces(rep):
    assert rep.P.trace() == ComplexRational(7)
    assert rep.Pbar.trace() == ComplexRational(4)
    assert rep.P + rep.Pbar == rep.I11


def test_eta_diagonal(rep):
    expected = [-1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1]
    assert rep.eta == RepMatrix.diagonal(expected)
    assert rep.eta @ rep.eta == rep.I11


def test_eta_commutes_with_alpha4(rep):
    assert rep.eta @ rep.a(4) == rep.a(4) @ rep.eta


def test_i10_is_identity_off_scalar(rep):
    assert rep.I10 + RepMatrix.zero().with_entry("S", "S", 1) == rep.I11


class TestGenerators:
    def test_diagonal_generator_vanishes(self, rep):
        for mu in MU:
            assert rep.j(mu, mu).is_zero()

    def test_antisymmetric(self, rep):
        assert (rep.j(1, 2) + rep.j(2, 1)).is_zero()

    def test_scalar_is_invariant(self, rep):
        j = rep.j(1, 2)
        assert not any(j.row("S"))
        assert j.column("S").is_zero()

    def test_matches_direct_commutator(self, rep):
        assert build_J(2, 4) == rep.b1(2) @ rep.b1(4) - rep.b1(4) @ rep.b1(2)


@pytest.mark.parametrize("name", MATRIX_NAMES)
def test_every_dump_name_resolves(rep, name):
    assert isinstance(rep.named(name), RepMatrix)


def test_unknown_name(rep):
    with pytest.raises(KeyError):
        rep.named("alpha9")


def test_with_alpha_entry_leaves_original_alone(rep):
    mutated = rep.with_alpha_entry(1, "S", "V1", -1)
    assert mutated.a(1)["S", "V1"] == -ONE
    assert rep.a(1)["S", "V1"] == ONE


def test_entries_are_small_rationals(rep):
    allowed = {ComplexRational(x) for x in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))}
    for name in MATRIX_NAMES:
        assert set(rep.named(name).nonzero_entries().values()) <= allowed, name

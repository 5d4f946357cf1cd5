"""Field components, E and H, and agreement of component and matrix residuals."""

import random

import pytest

from genmaxwell.algebra import I, ONE, ZERO, ComplexRational, WaveState
from genmaxwell.fields import (
    FieldComponents,
    component_residual,
    em_fields,
    matrix_residual,
    maxwell_limit_check,
    pack,
    unpack,
)
from genmaxwell.momentum import FourMomentum, LightlikeMomentum, projector_set, solution_basis, solution_from_vector
from genmaxwell.suites import builtin_momenta, convention_lock_check, random_field_components


def test_scalar_maps_to_first_slot():
    s = pack(FieldComponents(1, (0, 0, 0, 0), {}))
    assert s == WaveState.basis("S")


def test_round_trip_random_states():
    rng = random.Random(7)
    for _ in range(100):
        fc = random_field_components(rng)
        assert unpack(pack(fc)) == fc


def test_signed_tensor_accessor():
    fc = FieldComponents(0, (0, 0, 0, 0), {(1, 2): 5})
    assert fc.tensor(2, 1) == ComplexRational(-5)


def test_tensor_keys_must_be_ordered():
    with pytest.raises(ValueError):
        FieldComponents(0, (0, 0, 0, 0), {(2, 1): 1})


class TestElectromagnetic:
    def test_electric_from_time_pair(self):
        em = em_fields(WaveState.basis("T14"))
        assert em.E == (I, ZERO, ZERO)

    def test_magnetic_from_space_pair(self):
        em = em_fields(WaveState.basis("T12"))
        assert em.H == (ZERO, ZERO, ONE)

    def test_transverse_mode_fields(self, kz):
        em = em_fields(solution_basis(kz, 1)[0])
        assert em.E == (I, ZERO, ZERO)
        assert em.H == (ZERO, I, ZERO)


class TestResiduals:
    def test_solutions_have_zero_residual(self, kz):
        for s in solution_basis(kz, 1):
            assert not any(component_residual(unpack(s), kz, 1))

    def test_pure_scalar_residual(self, kz):
        res = component_residual(FieldComponents(1, (0,) * 4, {}), kz, 1)
        assert res[0] == ONE
        assert res[1:5] == tuple(I * kz.component(mu) for mu in range(1, 5))
        assert not any(res[5:])

    @pytest.mark.parametrize("k", [FourMomentum(1, 2, 3, 4), LightlikeMomentum(3, 4, 0, 5)])
    def test_component_form_matches_matrix_form(self, k):
        rng = random.Random(11)
        for _ in range(25):
            fc = random_field_components(rng)
            assert component_residual(fc, k, 2) == matrix_residual(fc, k, 2)

    def test_convention_lock(self):
        assert convention_lock_check(builtin_momenta(3), n_states=10).ok


class TestMaxwellLimit:
    def test_helicity_states_pass(self, k345):
        from genmaxwell.momentum import dyad_decompose

        ps = projector_set(k345, 1)
        for p in (ps.Pi_plus, ps.Pi_minus):
            assert maxwell_limit_check(dyad_decompose(p).psi, k345, 1).ok

    def test_scalar_carrying_mode_fails(self, kz):
        r = maxwell_limit_check(solution_basis(kz, 1)[3], kz, 1)
        assert not r.ok
        assert r.witness.startswith("scalar present")

    def test_gauge_mode_passes(self, kz):
        s = solution_from_vector([0, 0, 1, I], kz, 1)
        assert maxwell_limit_check(s, kz, 1).ok
        em = em_fields(s)
        assert not any(em.E + em.H)

    def test_non_solution_reports_residual(self, kz):
        r = maxwell_limit_check(WaveState.basis("V1"), kz, 1)
        assert not r.ok and "residual" in r.witness

"""Structural identity suite, plus mutated representations as negative controls."""

import pytest

from genmaxwell.checks import expect_zero
from genmaxwell.algebra import ComplexRational, RepMatrix
from genmaxwell.identities import (
    check_alpha_algebra,
    check_beta_decomposition,
    check_eta_hermiticity,
    check_eta_relations,
    check_kslash_cubic,
    check_lorentz_commutators,
    check_pdk_algebra,
    check_projector_relations,
    check_representation_invariants,
    run_all,
)
from genmaxwell.momentum import FourMomentum, k_slash


def test_run_all_passes(rep):
    results = run_all(rep)
    assert len(results) == 11
    failed = [(r.name, r.witness) for r in results if not r.ok]
    assert failed == []


def test_report_has_one_entry_per_named_check(rep):
    names = [r.to_json()["name"] for r in run_all(rep)]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("family", ["beta1", "beta0"])
def test_trilinear_relation_holds_for_betas(rep, family):
    assert check_pdk_algebra(family, rep).ok


def test_alpha_fails_trilinear_relation(rep):
    r = check_pdk_algebra("alpha", rep)
    assert not r.ok
    assert "triple" in r.witness


def test_unknown_family(rep):
    with pytest.raises(ValueError):
        check_pdk_algebra("gamma", rep)


def test_alpha_cubes_to_itself(rep):
    a = rep.a(1)
    assert a @ a @ a == a


def test_distinct_index_commutator_vanishes(rep):
    a, j = rep.a(1), rep.j(2, 3)
    assert (a @ j - j @ a).is_zero()


def test_kslash_cubic_at_rest_frame(rep):
    k = FourMomentum(0, 0, 0, 2)
    ks = k_slash(k, rep)
    assert ks @ ks @ ks == ks * -4


class TestMutations:
    def test_zeroed_projector_entry_is_caught(self, rep):
        bad = rep.replace(P=rep.P.with_entry("S", "S", 0))
        r = check_projector_relations(bad)
        assert not r.ok
        assert r.witness.startswith("P + Pbar - I11")

    def test_alpha_sign_flip_breaks_alpha_algebra(self, rep):
        bad = rep.with_alpha_entry(1, "S", "V1", -1)
        assert not check_alpha_algebra(bad).ok
        assert any(not r.ok for r in run_all(bad))

    def test_alpha_sign_flip_breaks_decomposition(self, rep):
        bad = rep.with_alpha_entry(1, "V2", "T12", 1)
        assert not check_beta_decomposition(bad).ok

    def test_eta_sign_flip(self, rep):
        bad = rep.replace(eta=rep.eta.with_entry("V1", "V1", -1))
        assert not check_eta_relations(bad).ok

    def test_generator_mutation(self, rep):
        j = list(list(row) for row in rep.J)
        j[0][1] = j[0][1].with_entry("V1", "V2", ComplexRational(5))
        bad = rep.replace(J=tuple(tuple(row) for row in j))
        assert not check_lorentz_commutators(bad, "jj").ok
        assert not check_representation_invariants(bad).ok

    def test_symmetrised_alpha_mutation_breaks_cubic_contraction(self, rep):
        bad = rep.with_alpha_entry(2, "S", "V2", 2).with_alpha_entry(2, "V2", "S", 2)
        assert not check_kslash_cubic(bad).ok

    def test_asymmetric_alpha_breaks_hermiticity(self, rep):
        bad = rep.with_alpha_entry(3, "S", "V3", 0)
        assert not check_eta_hermiticity(bad).ok


def test_witness_names_first_failure():
    r = expect_zero("demo", [("ok", RepMatrix.zero()), ("bad", RepMatrix.identity())])
    assert r.witness == "bad: entry (S,S) = 1"
    assert r.residual == "1"

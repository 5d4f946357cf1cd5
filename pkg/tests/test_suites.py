"""Suite assembly: naming, ordering and the parallel path."""

from genmaxwell.suites import (
    STATE_LABELS,
    builtin_momenta,
    dyad_checks,
    full_verification,
    momentum_checks,
    polarization_dyads,
)
from genmaxwell.momentum import NotRankOneError, projector_set


def test_check_names_carry_momentum_and_kappa(k345):
    names = [r.name for r in momentum_checks(k345, 2)]
    assert all(n.endswith(" @ k=(3,4,0;k0=5) kappa=2") for n in names)


def test_one_dyad_check_per_state_and_property(k345):
    names = [r.name.split(" @")[0] for r in dyad_checks(k345, 1)]
    assert len(names) == len(set(names))
    for label in STATE_LABELS:
        assert f"dyad-extraction[{label}]" in names


def test_polarization_dyads_keep_rejection(k345):
    d = polarization_dyads(projector_set(k345, 1))
    assert list(d) == list(STATE_LABELS)
    assert isinstance(d["spin-0"], NotRankOneError)


def test_parallel_run_matches_serial():
    ms = builtin_momenta(2)
    serial = full_verification(ms, (1,), n_states=5)
    parallel = full_verification(ms, (1,), n_states=5, workers=2)
    assert serial == parallel


def test_mutated_representation_skips_oracle(rep):
    bad = rep.with_alpha_entry(1, "S", "V1", -1)
    results = full_verification(builtin_momenta(1), (1,), rep=bad, n_states=2)
    assert not any(r.name.startswith("oracle-") for r in results)
    assert any(not r.ok for r in results)

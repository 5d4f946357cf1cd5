"""Momentum-dependent verification suites over the built-in momentum set."""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from . import oracle
from .algebra import ComplexRational, RepMatrix, WaveState, commutator, mat_poly
from .checks import CheckResult, expect_true, expect_zero
from .fields import FieldComponents, PAIRS, component_residual, em_fields, matrix_residual, maxwell_limit_check
from .momentum import (
    DyadSolution,
    FourMomentum,
    LightlikeMomentum,
    NotRankOneError,
    ProjectorSet,
    dyad_decompose,
    projector_set,
    spin_squared_eps_form,
)
from .representation import RepresentationSet, build_representation

__all__ = [
    "KAPPAS",
    "STATE_LABELS",
    "builtin_momenta",
    "momentum_checks",
    "oracle_checks",
    "polarization_dyads",
    "dyad_checks",
    "random_field_components",
    "convention_lock_check",
    "full_verification",
]

KAPPAS: tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(1, 3))
STATE_LABELS = ("spin-0", "helicity+1", "helicity-1")


@lru_cache(maxsize=1)
def _momenta_data() -> tuple[tuple[str, ...], ...]:
    text = resources.files("genmaxwell").joinpath("data/momenta.json").read_text()
    return tuple(tuple(row) for row in json.loads(text)["momenta"])


def builtin_momenta(count: int | None = None) -> list[LightlikeMomentum]:
    rows = _momenta_data()
    if count is not None:
        rows = rows[:count]
    return [LightlikeMomentum(*row) for row in rows]


def _tag(k: FourMomentum, kappa) -> str:
    return f" @ k={k} kappa={kappa}"


def momentum_checks(k: FourMomentum, kappa, rep: RepresentationSet | None = None) -> list[CheckResult]:
    rep = build_representation() if rep is None else rep
    kappa = Fraction(kappa)
    ps = projector_set(k, kappa, rep)
    tag = _tag(k, kappa)
    eye = rep.I11
    D, g, s2, sk, ks = ps.D, ps.gamma, ps.spin_sq, ps.helicity, ps.k_slash
    half = Fraction(1, 2)

    def projector_triplet(mats: Sequence[tuple[str, RepMatrix]]):
        total = RepMatrix.zero()
        for name, m in mats:
            yield f"{name}^2 - {name}", m @ m - m
            total = total + m
        for i, (na, a) in enumerate(mats):
            for nb, b in mats[i + 1:]:
                yield f"{na} {nb}", a @ b
        yield "sum - I11", total - eye

    return [
        expect_zero("wave-operator-minimal-equation" + tag, [("D(D-kappa)^2", mat_poly(D, [0, kappa ** 2, -2 * kappa, 1]))]),
        expect_zero("gamma-idempotent" + tag, [("gamma^2 - gamma", g @ g - g)]),
        expect_zero("gamma-annihilated-by-D" + tag, [("D gamma", D @ g)]),
        expect_zero("spin-squared-forms-agree" + tag, [("eps form - contracted form", spin_squared_eps_form(k, rep) - s2)]),
        expect_zero("spin-squared-minimal-equation" + tag, [("s2 (s2 - 2)", s2 @ (s2 - eye * 2))]),
        expect_zero("helicity-minimal-equation" + tag, [("sk (sk - 1)(sk + 1)", sk @ (sk - eye) @ (sk + eye))]),
        expect_zero(
            "projector-commutators" + tag,
            [
                ("[S2_0, k_slash]", commutator(ps.S2_0, ks)),
                ("[S2_1, k_slash]", commutator(ps.S2_1, ks)),
                ("[Shat_plus, k_slash]", commutator(ps.Shat_plus, ks)),
                ("[Shat_minus, k_slash]", commutator(ps.Shat_minus, ks)),
                ("[Shat_0, k_slash]", commutator(ps.Shat_0, ks)),
                ("[S2_0, Shat_plus]", commutator(ps.S2_0, ps.Shat_plus)),
                ("[S2_0, Shat_minus]", commutator(ps.S2_0, ps.Shat_minus)),
                ("[S2_1, Shat_plus]", commutator(ps.S2_1, ps.Shat_plus)),
                ("[S2_1, Shat_minus]", commutator(ps.S2_1, ps.Shat_minus)),
                ("[S2_0, Shat_0]", commutator(ps.S2_0, ps.Shat_0)),
            ],
        ),
        expect_zero("spin-squared-fixes-helicity" + tag, [("(s2/2) sk - sk", (s2 * half) @ sk - sk)]),
        expect_zero("spin-projectors" + tag, projector_triplet([("S2_0", ps.S2_0), ("S2_1", ps.S2_1)])),
        expect_zero(
            "helicity-projectors" + tag,
            projector_triplet([("Shat_plus", ps.Shat_plus), ("Shat_minus", ps.Shat_minus), ("Shat_0", ps.Shat_0)]),
        ),
    ]


def oracle_checks(k: FourMomentum, kappa, ps: ProjectorSet | None = None) -> list[CheckResult]:
    kappa = Fraction(kappa)
    ps = projector_set(k, kappa) if ps is None else ps
    tag = _tag(k, kappa)
    kernel = oracle.null_space(ps.D)
    gamma_cols = [ps.gamma.column(c).components for c in range(11)]
    expected = {
        "D": oracle.poly_from_roots([0, kappa, kappa]),
        "spin-squared": oracle.poly_from_roots([0, 2]),
        "helicity": oracle.poly_from_roots([0, 1, -1]),
    }
    out = [
        expect_true("oracle-gamma-rank" + tag, [(f"rank(gamma) = {oracle.rank(ps.gamma)} != 4", oracle.rank(ps.gamma) == 4)]),
        expect_true("oracle-kernel-dimension" + tag, [(f"dim ker D = {kernel.dimension} != 4", kernel.dimension == 4)]),
        expect_true("oracle-kernel-span" + tag, [("column space of gamma != ker D", oracle.spans_equal(gamma_cols, kernel.vectors))]),
    ]
    for name, m in (("D", ps.D), ("spin-squared", ps.spin_sq), ("helicity", ps.helicity)):
        try:
            found = oracle.minimal_polynomial(m, 4)
        except oracle.MinimalPolynomialNotFound as exc:
            out.append(CheckResult.failed(f"oracle-minpoly-{name}" + tag, str(exc)))
            continue
        ok = found == expected[name]
        out.append(
            expect_true(
                f"oracle-minpoly-{name}" + tag,
                [(f"found {_poly_str(found)}, expected {_poly_str(expected[name])}", ok)],
            )
        )
    return out


def _poly_str(coeffs: Sequence[ComplexRational]) -> str:
    terms = []
    for n, c in enumerate(coeffs):
        if c:
            mono = "1" if n == 0 else ("x" if n == 1 else f"x^{n}")
            terms.append(f"({c})*{mono}" if n else f"({c})")
    return " + ".join(reversed(terms)) or "0"


def polarization_dyads(ps: ProjectorSet, eta: RepMatrix | None = None) -> dict[str, DyadSolution | NotRankOneError]:
    """Dyad for each pure-state projector, or the rejection raised for it."""
    eta = build_representation().eta if eta is None else eta
    out: dict[str, DyadSolution | NotRankOneError] = {}
    for label, pi in zip(STATE_LABELS, (ps.Pi_0, ps.Pi_plus, ps.Pi_minus)):
        try:
            out[label] = dyad_decompose(pi, eta, label)
        except NotRankOneError as exc:
            out[label] = exc
    return out


def dyad_checks(k: FourMomentum, kappa, ps: ProjectorSet | None = None) -> list[CheckResult]:
    """One named check per property and per pure state."""
    kappa = Fraction(kappa)
    ps = projector_set(k, kappa) if ps is None else ps
    tag = _tag(k, kappa)
    pis = dict(zip(STATE_LABELS, (ps.Pi_0, ps.Pi_plus, ps.Pi_minus)))
    dyads = polarization_dyads(ps)
    one = ComplexRational(1)
    out = []
    for label, p in pis.items():
        out.append(expect_zero(f"state-projector-idempotent[{label}]" + tag, [("Pi^2 - Pi", p @ p - p)]))
        out.append(expect_true(f"state-projector-trace[{label}]" + tag, [(f"trace = {p.trace()}", p.trace() == one)]))
        r1 = oracle.rank_one_check(p)
        out.append(expect_true(f"state-projector-rank-one[{label}]" + tag, [(str(r1.witness), r1.passed)]))
    for i, a in enumerate(STATE_LABELS):
        for b in STATE_LABELS[i + 1:]:
            out.append(
                expect_zero(
                    f"state-projectors-orthogonal[{a},{b}]" + tag,
                    [(f"Pi[{a}] Pi[{b}]", pis[a] @ pis[b]), (f"Pi[{b}] Pi[{a}]", pis[b] @ pis[a])],
                )
            )

    helicity = {"helicity+1": 1, "helicity-1": -1}
    spin_sq = {"spin-0": 0, "helicity+1": 2, "helicity-1": 2}
    for label in STATE_LABELS:
        d = dyads[label]
        if isinstance(d, NotRankOneError):
            out.append(CheckResult.failed(f"dyad-extraction[{label}]" + tag, str(d)))
            continue
        out.append(CheckResult.passed(f"dyad-extraction[{label}]" + tag))
        out.append(expect_zero(f"dyad-reconstruction[{label}]" + tag, [("psi psi_bar - Pi", d.outer() - pis[label])]))
        out.append(expect_true(f"dyad-normalization[{label}]" + tag, [(f"psi_bar psi = {d.norm()}", d.norm() == one)]))
        out.append(expect_true(f"dyad-solves-wave-equation[{label}]" + tag, [("D psi != 0", (ps.D @ d.psi).is_zero())]))
        if label in helicity:
            out.append(
                expect_true(
                    f"dyad-helicity-eigenvalue[{label}]" + tag,
                    [(f"sk psi != {helicity[label]} psi", ps.helicity @ d.psi == d.psi * helicity[label])],
                )
            )
        out.append(
            expect_true(
                f"dyad-spin-squared-eigenvalue[{label}]" + tag,
                [(f"s2 psi != {spin_sq[label]} psi", ps.spin_sq @ d.psi == d.psi * spin_sq[label])],
            )
        )
        if label in helicity:
            out.append(_maxwell_check(label, d.psi, k, kappa, tag))
        else:
            out.append(expect_true(f"scalar-present[{label}]" + tag, [("psi0 = 0", bool(d.psi.psi0))]))
    return out


def _maxwell_check(label: str, psi: WaveState, k: FourMomentum, kappa, tag: str) -> CheckResult:
    name = f"maxwell-limit[{label}]" + tag
    r = maxwell_limit_check(psi, k, kappa, name)
    if not r.ok:
        return r
    em = em_fields(psi)
    zero = ComplexRational(0)
    kE = sum((kc * e for kc, e in zip(k.spatial, em.E)), zero)
    kH = sum((kc * h for kc, h in zip(k.spatial, em.H)), zero)
    return expect_true(name, [(f"k.E = {kE}", not kE), (f"k.H = {kH}", not kH)])


def random_field_components(rng: random.Random, spread: int = 7) -> FieldComponents:
    def c():
        return ComplexRational(
            Fraction(rng.randint(-spread, spread), rng.randint(1, spread)),
            Fraction(rng.randint(-spread, spread), rng.randint(1, spread)),
        )

    return FieldComponents(c(), tuple(c() for _ in range(4)), {p: c() for p in PAIRS})


def convention_lock_check(
    momenta: Iterable[FourMomentum], n_states: int = 200, kappa=1, seed: int = 20240611, rep=None
) -> CheckResult:
    """Component-form residual equals the matrix residual for random exact states."""
    rng = random.Random(seed)
    states = [random_field_components(rng) for _ in range(n_states)]

    def cases():
        for k in momenta:
            for n, fc in enumerate(states):
                ok = component_residual(fc, k, kappa) == matrix_residual(fc, k, kappa, rep)
                yield f"state {n} at k={k}", ok

    return expect_true("convention-lock", cases())


def _per_momentum(job) -> list[CheckResult]:
    k, kappa, with_oracle = job
    results = momentum_checks(k, kappa)
    if with_oracle:
        ps = projector_set(k, kappa)
        results.extend(oracle_checks(k, kappa, ps))
        results.extend(dyad_checks(k, kappa, ps))
    return results


def full_verification(
    momenta: Sequence[FourMomentum],
    kappas: Sequence = KAPPAS,
    rep: RepresentationSet | None = None,
    with_oracle: bool = True,
    n_states: int = 200,
    workers: int = 1,
) -> list[CheckResult]:
    """Structural suite, convention lock, then every per-momentum suite.

    With ``workers > 1`` the per-momentum suites run in a process pool; the
    results keep the serial order. Oracle and dyad suites only run against
    the default representation.
    """
    from .identities import run_all

    results = list(run_all(rep))
    results.append(convention_lock_check(momenta[:10], n_states=n_states, rep=rep))
    jobs = [(k, Fraction(kappa)) for k in momenta for kappa in kappas]
    if rep is not None:
        for k, kappa in jobs:
            results.extend(momentum_checks(k, kappa, rep))
        return results
    jobs = [(k, kappa, with_oracle) for k, kappa in jobs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_per_momentum, jobs):
                results.extend(chunk)
    else:
        for job in jobs:
            results.extend(_per_momentum(job))
    return results

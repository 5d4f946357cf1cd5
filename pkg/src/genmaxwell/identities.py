"""Exhaustive exact checks of the momentum-independent algebra.

Each ``check_*`` function accepts an optional representation so the same
suite can be pointed at a mutated copy (negative controls).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import I, ComplexRational, RepMatrix, kron
from .checks import CheckResult, expect_true, expect_zero
from .momentum import FourMomentum, k_slash
from .representation import MU, RepresentationSet, build_representation

__all__ = [
    "CheckResult",
    "check_projector_relations",
    "check_beta_decomposition",
    "check_pdk_algebra",
    "check_alpha_algebra",
    "check_lorentz_commutators",
    "check_eta_relations",
    "check_kslash_cubic",
    "check_eta_hermiticity",
    "check_representation_invariants",
    "run_all",
    "SAMPLE_MOMENTA",
]

# lightlike and non-lightlike probes for the contracted identities
SAMPLE_MOMENTA: tuple[FourMomentum, ...] = (
    FourMomentum(3, 4, 0, 5),
    FourMomentum(1, 2, 2, -3),
    FourMomentum(0, 0, 1, 2),
    FourMomentum(Fraction(1, 2), -1, 3, Fraction(7, 3)),
    FourMomentum(2, 0, 0, 0),
)


def _rep(rep):
    return build_representation() if rep is None else rep


def check_projector_relations(rep: RepresentationSet | None = None) -> CheckResult:
    rep = _rep(rep)
    P, Pb, eye = rep.P, rep.Pbar, rep.I11

    def cases():
        yield "P^2 - P", P @ P - P
        yield "Pbar^2 - Pbar", Pb @ Pb - Pb
        yield "P + Pbar - I11", P + Pb - eye
        for mu in MU:
            a = rep.a(mu)
            yield f"alpha{mu} Pbar + Pbar alpha{mu} - alpha{mu}", a @ Pb + Pb @ a - a
        for mu in MU:
            a = rep.a(mu)
            yield f"alpha{mu} P + P alpha{mu} - alpha{mu}", a @ P + P @ a - a

    return expect_zero("projector-relations", cases())


def check_beta_decomposition(rep: RepresentationSet | None = None) -> CheckResult:
    rep = _rep(rep)
    return expect_zero(
        "beta-decomposition",
        ((f"beta1_{mu} + beta0_{mu} - alpha{mu}", rep.b1(mu) + rep.b0(mu) - rep.a(mu)) for mu in MU),
    )


def _family(rep: RepresentationSet, family: str) -> Sequence[RepMatrix]:
    try:
        return {"beta1": rep.beta1, "beta0": rep.beta0, "alpha": rep.alpha}[family]
    except KeyError:
        raise ValueError(f"unknown matrix family {family!r}") from None


def check_pdk_algebra(family: str = "beta1", rep: RepresentationSet | None = None) -> CheckResult:
    """Trilinear relation ``b_m b_n b_a + b_a b_n b_m = d_mn b_a + d_an b_m`` over all 64 triples."""
    b = _family(_rep(rep), family)

    def cases():
        for m, n, a in product(MU, repeat=3):
            bm, bn, ba = b[m - 1], b[n - 1], b[a - 1]
            lhs = bm @ bn @ ba + ba @ bn @ bm
            rhs = ba * kron(m, n) + bm * kron(a, n)
            yield f"triple ({m},{n},{a})", lhs - rhs

    return expect_zero(f"pdk-algebra[{family}]", cases())


def check_alpha_algebra(rep: RepresentationSet | None = None) -> CheckResult:
    """Fully symmetrised cubic relation for alpha over all 64 triples."""
    al = _rep(rep).alpha

    def cases():
        for m, n, a in product(MU, repeat=3):
            x, y, z = al[m - 1], al[n - 1], al[a - 1]
            lhs = x @ y @ z + z @ y @ x + x @ z @ y + y @ z @ x + y @ x @ z + z @ x @ y
            rhs = (z * kron(m, n) + x * kron(a, n) + y * kron(m, a)) * 2
            yield f"triple ({m},{n},{a})", lhs - rhs

    return expect_zero("alpha-algebra", cases())


def _jj_cases(rep):
    j = rep.j
    for r, s, m, n in product(MU, repeat=4):
        lhs = j(r, s) @ j(m, n) - j(m, n) @ j(r, s)
        rhs = j(r, n) * kron(s, m) + j(s, m) * kron(r, n) - j(s, n) * kron(r, m) - j(r, m) * kron(s, n)
        yield f"[J{r}{s}, J{m}{n}]", lhs - rhs


def _alpha_j_cases(rep):
    for l, m, n in product(MU, repeat=3):
        a, jmn = rep.a(l), rep.j(m, n)
        rhs = rep.a(n) * kron(l, m) - rep.a(m) * kron(l, n)
        yield f"[alpha{l}, J{m}{n}]", a @ jmn - jmn @ a - rhs


def check_lorentz_commutators(rep: RepresentationSet | None = None, which: str = "both") -> CheckResult:
    """Lorentz algebra of J (256 tuples) and covariance of alpha under J (64 tuples)."""
    rep = _rep(rep)
    if which == "jj":
        return expect_zero("lorentz-jj-commutators", _jj_cases(rep))
    if which == "alpha-j":
        return expect_zero("lorentz-alpha-j-commutators", _alpha_j_cases(rep))

    def both():
        yield from _jj_cases(rep)
        yield from _alpha_j_cases(rep)

    return expect_zero("lorentz-commutators", both())


def check_eta_relations(rep: RepresentationSet | None = None) -> CheckResult:
    rep = _rep(rep)
    eta = rep.eta

    def cases():
        for i in (1, 2, 3):
            yield f"eta alpha{i} + alpha{i} eta", eta @ rep.a(i) + rep.a(i) @ eta
        yield "eta alpha4 - alpha4 eta", eta @ rep.a(4) - rep.a(4) @ eta

    return expect_zero("eta-relations", cases())


def check_kslash_cubic(rep: RepresentationSet | None = None, momenta: Sequence[FourMomentum] = SAMPLE_MOMENTA) -> CheckResult:
    """``k_slash^3 = k^2 k_slash``, the full contraction of the cubic alpha relation."""
    rep = _rep(rep)

    def cases():
        for k in momenta:
            ks = k_slash(k, rep)
            yield f"k = {k}", ks @ ks @ ks - ks * k.square()

    return expect_zero("kslash-cubic", cases())


def check_eta_hermiticity(rep: RepresentationSet | None = None, momenta: Sequence[FourMomentum] = SAMPLE_MOMENTA) -> CheckResult:
    """``eta (i k_slash)`` is self-adjoint for real spatial k and ``k_4 = i k0``."""
    rep = _rep(rep)

    def cases():
        for k in momenta:
            h = rep.eta @ (k_slash(k, rep) * I)
            yield f"k = {k}", h - h.adjoint()

    return expect_zero("eta-hermiticity", cases())


_ALLOWED = {ComplexRational(x) for x in (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))}


def check_representation_invariants(rep: RepresentationSet | None = None) -> CheckResult:
    rep = _rep(rep)
    named = (
        [(f"alpha{m}", rep.a(m)) for m in MU]
        + [(f"beta1_{m}", rep.b1(m)) for m in MU]
        + [(f"beta0_{m}", rep.b0(m)) for m in MU]
        + [(f"J{m}{n}", rep.j(m, n)) for m in MU for n in MU]
        + [("P", rep.P), ("Pbar", rep.Pbar), ("eta", rep.eta), ("I10", rep.I10)]
    )

    def cases():
        for name, m in named:
            bad = [v for v in m.nonzero_entries().values() if v not in _ALLOWED]
            yield f"{name} entries within {{0, +-1, +-1/2, +-2}}", not bad
        for mu in MU:
            yield f"alpha{mu} symmetric", rep.a(mu) == rep.a(mu).transpose()
            yield f"alpha{mu} has 8 nonzero entries", rep.a(mu).nonzero_count() == 8
            yield f"Pbar alpha{mu} Pbar = 0", (rep.Pbar @ rep.a(mu) @ rep.Pbar).is_zero()
        yield "P Pbar = 0", (rep.P @ rep.Pbar).is_zero()
        yield "eta^2 = I11", rep.eta @ rep.eta == rep.I11
        for m in MU:
            for n in MU:
                jmn = rep.j(m, n)
                yield f"J{m}{n} + J{n}{m} = 0", (jmn + rep.j(n, m)).is_zero()
                yield f"J{m}{n} scalar row/column zero", all(
                    r != 0 and c != 0 for r, c in jmn.nonzero_entries()
                )

    return expect_true("representation-invariants", cases())


def run_all(rep: RepresentationSet | None = None) -> list[CheckResult]:
    """Every structural suite, in a fixed order."""
    rep = _rep(rep)
    return [
        check_representation_invariants(rep),
        check_projector_relations(rep),
        check_beta_decomposition(rep),
        check_pdk_algebra("beta1", rep),
        check_pdk_algebra("beta0", rep),
        check_alpha_algebra(rep),
        check_lorentz_commutators(rep, "jj"),
        check_lorentz_commutators(rep, "alpha-j"),
        check_eta_relations(rep),
        check_kslash_cubic(rep),
        check_eta_hermiticity(rep),
    ]

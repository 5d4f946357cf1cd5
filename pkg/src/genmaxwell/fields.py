"""Named field components, electric/magnetic fields and the component-form equations.

The component residual is written out directly from the three field
equations with ``d_mu -> i k_mu`` and never touches the alpha matrices, so
comparing it against the matrix residual pins every index and sign choice
made in :mod:`genmaxwell.representation`.

``E`` is reported as-is in the imaginary-time convention (``E_m = i psi_[m4]``)
and is therefore imaginary for real tensor components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .algebra import (
    BASIS,
    I,
    ZERO,
    ComplexRational,
    ComponentIndex,
    WaveState,
    as_scalar,
    levi_civita3,
    pair_slot,
)
from .checks import CheckResult
from .momentum import FourMomentum, wave_operator

__all__ = [
    "FieldComponents",
    "EMFields",
    "PAIRS",
    "pack",
    "unpack",
    "em_fields",
    "component_residual",
    "matrix_residual",
    "maxwell_limit_check",
    "field_state_json",
]

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(1, 5), 2))


@dataclass(frozen=True)
class FieldComponents:
    """``psi0``, ``psi_mu`` and the six stored pairs ``psi_[mu nu]`` (mu < nu)."""

    psi0: ComplexRational
    psi: tuple[ComplexRational, ComplexRational, ComplexRational, ComplexRational]
    F: Mapping[tuple[int, int], ComplexRational]

    def __post_init__(self):
        object.__setattr__(self, "psi0", as_scalar(self.psi0))
        psi = tuple(as_scalar(x) for x in self.psi)
        if len(psi) != 4:
            raise ValueError("psi needs 4 components")
        object.__setattr__(self, "psi", psi)
        F = {p: as_scalar(self.F.get(p, ZERO)) for p in PAIRS}
        extra = set(self.F) - set(PAIRS)
        if extra:
            raise ValueError(f"tensor keys must be ordered pairs mu < nu, got {sorted(extra)}")
        object.__setattr__(self, "F", F)

    def __hash__(self):
        return hash((self.psi0, self.psi, tuple(self.F[p] for p in PAIRS)))

    def tensor(self, mu: int, nu: int) -> ComplexRational:
        slot, sign = pair_slot(mu, nu)
        if slot is None:
            return ZERO
        return self.F[(slot.mu, slot.nu)] * sign

    @classmethod
    def zero(cls) -> "FieldComponents":
        return cls(ZERO, (ZERO,) * 4, {})


@dataclass(frozen=True)
class EMFields:
    E: tuple[ComplexRational, ComplexRational, ComplexRational]
    H: tuple[ComplexRational, ComplexRational, ComplexRational]


def pack(fc: FieldComponents) -> WaveState:
    comps = []
    for slot in BASIS:
        if slot.kind == "S":
            comps.append(fc.psi0)
        elif slot.kind == "V":
            comps.append(fc.psi[slot.mu - 1])
        else:
            comps.append(fc.F[(slot.mu, slot.nu)])
    return WaveState(comps)


def unpack(state: WaveState) -> FieldComponents:
    return FieldComponents(
        psi0=state[ComponentIndex.S()],
        psi=tuple(state[ComponentIndex.V(m)] for m in range(1, 5)),
        F={p: state[ComponentIndex.T(*p)] for p in PAIRS},
    )


def em_fields(state: WaveState) -> EMFields:
    """``E_m = i psi_[m4]`` and ``H_m = (1/2) eps_mnk psi_[nk]``."""
    E = tuple(I * state.tensor(m, 4) for m in (1, 2, 3))
    half = Fraction(1, 2)
    H = []
    for m in (1, 2, 3):
        acc = ZERO
        for n in (1, 2, 3):
            for k in (1, 2, 3):
                e = levi_civita3(m, n, k)
                if e:
                    acc = acc + state.tensor(n, k) * e
        H.append(acc * half)
    return EMFields(E=E, H=tuple(H))


def component_residual(fc: FieldComponents, k: FourMomentum, kappa) -> tuple[ComplexRational, ...]:
    """Residuals of the three component equations, in canonical slot order.

    * S:        ``i k_mu psi_mu + kappa psi0``
    * V(mu):    ``i k_nu psi_[mu nu] + i k_mu psi0``
    * T(mu,nu): ``i k_nu psi_mu - i k_mu psi_nu + kappa psi_[mu nu]``
    """
    kappa = as_scalar(kappa)
    kc = {mu: k.component(mu) for mu in range(1, 5)}
    out = []
    for slot in BASIS:
        if slot.kind == "S":
            div = sum((kc[m] * fc.psi[m - 1] for m in range(1, 5)), ZERO)
            out.append(I * div + kappa * fc.psi0)
        elif slot.kind == "V":
            mu = slot.mu
            acc = sum((kc[nu] * fc.tensor(mu, nu) for nu in range(1, 5)), ZERO)
            out.append(I * acc + I * kc[mu] * fc.psi0)
        else:
            mu, nu = slot.mu, slot.nu
            out.append(
                I * kc[nu] * fc.psi[mu - 1] - I * kc[mu] * fc.psi[nu - 1] + kappa * fc.F[(mu, nu)]
            )
    return tuple(out)


def matrix_residual(fc: FieldComponents, k: FourMomentum, kappa, rep=None) -> tuple[ComplexRational, ...]:
    """``D @ pack(fc)`` as a tuple, for comparison with :func:`component_residual`."""
    return (wave_operator(k, kappa, rep) @ pack(fc)).components


def maxwell_limit_check(state: WaveState, k: FourMomentum, kappa, name: str = "maxwell-limit") -> CheckResult:
    """Pass iff ``psi0 = 0`` and the source-free Maxwell residuals vanish."""
    fc = unpack(state)
    if fc.psi0:
        return CheckResult.failed(name, f"scalar present: psi0 = {fc.psi0}", abs(fc.psi0))
    res = component_residual(fc, k, kappa)
    for slot, r in zip(BASIS, res):
        if r:
            return CheckResult.failed(name, f"residual at {slot} = {r}", abs(r))
    return CheckResult.passed(name)


def field_state_json(state: WaveState) -> dict:
    fc = unpack(state)
    em = em_fields(state)
    return {
        "psi0": fc.psi0.to_json(),
        "psi": [c.to_json() for c in fc.psi],
        "F": {f"{a}{b}": fc.F[(a, b)].to_json() for a, b in PAIRS},
        "E": [c.to_json() for c in em.E],
        "H": [c.to_json() for c in em.H],
    }

"""Named matrices of the 11-dimensional first-order system.

All matrices are assembled from elementary matrices. Generalised labels
``0`` (scalar), ``mu`` (vector) and ``(mu, nu)`` (antisymmetric pair, any
order) are resolved through :func:`~genmaxwell.algebra.pair_slot`, so the
free sums over both orders of a pair index come out with the right signs.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Union

from .algebra import (
    ComponentIndex,
    RepMatrix,
    eps_matrix,
    pair_slot,
)

__all__ = [
    "RepresentationSet",
    "build_alpha",
    "build_beta1",
    "build_beta0",
    "build_P",
    "build_Pbar",
    "build_I10",
    "build_eta",
    "build_J",
    "build_representation",
    "MATRIX_NAMES",
]

MU = (1, 2, 3, 4)

# generalised label: 0 -> scalar, int -> vector, (mu, nu) -> signed pair
Label = Union[int, tuple]


def _resolve(label: Label) -> tuple[ComponentIndex | None, int]:
    if isinstance(label, tuple):
        return pair_slot(*label)
    if label == 0:
        return ComponentIndex.S(), 1
    return ComponentIndex.V(label), 1


def _eps(a: Label, b: Label) -> RepMatrix:
    ra, sa = _resolve(a)
    rb, sb = _resolve(b)
    if ra is None or rb is None:
        return RepMatrix.zero()
    return eps_matrix(ra, rb) * (sa * sb)


def _check_mu(nu: int) -> None:
    if nu not in MU:
        raise ValueError(f"space-time index must be in 1..4, got {nu}")


def build_beta1(nu: int) -> RepMatrix:
    """Spin-1 block: sum over mu of eps^{mu,[mu nu]} + eps^{[mu nu],mu}."""
    _check_mu(nu)
    out = RepMatrix.zero()
    for mu in MU:
        out = out + _eps(mu, (mu, nu)) + _eps((mu, nu), mu)
    return out


def build_beta0(nu: int) -> RepMatrix:
    """Spin-0 block: eps^{nu,0} + eps^{0,nu}."""
    _check_mu(nu)
    return _eps(nu, 0) + _eps(0, nu)


def build_alpha(nu: int) -> RepMatrix:
    _check_mu(nu)
    out = RepMatrix.zero()
    for mu in MU:
        out = out + _eps(mu, (mu, nu)) + _eps((mu, nu), mu)
    return out + _eps(nu, 0) + _eps(0, nu)


def build_P() -> RepMatrix:
    out = _eps(0, 0)
    half = Fraction(1, 2)
    for mu in MU:
        for nu in MU:
            out = out + _eps((mu, nu), (mu, nu)) * half
    return out


def build_Pbar() -> RepMatrix:
    out = RepMatrix.zero()
    for mu in MU:
        out = out + _eps(mu, mu)
    return out


def build_I10() -> RepMatrix:
    """Unit matrix of the vector+tensor subspace, embedded in 11 dimensions."""
    return build_Pbar() + build_P() - _eps(0, 0)


def build_eta() -> RepMatrix:
    b4 = build_beta1(4)
    return -_eps(0, 0) + (b4 @ b4) * 2 - build_I10()


def build_J(mu: int, nu: int, beta1: tuple[RepMatrix, ...] | None = None) -> RepMatrix:
    """Lorentz generator ``beta1_mu beta1_nu - beta1_nu beta1_mu``."""
    _check_mu(mu)
    _check_mu(nu)
    if beta1 is None:
        bm, bn = build_beta1(mu), build_beta1(nu)
    else:
        bm, bn = beta1[mu - 1], beta1[nu - 1]
    return bm @ bn - bn @ bm


@dataclass(frozen=True)
class RepresentationSet:
    """The full set of constructed matrices.

    Index tuples are 0-based containers holding space-time index ``mu`` at
    position ``mu - 1``; use :meth:`a`, :meth:`b1`, :meth:`b0`, :meth:`j` for
    1-based access. Instances are immutable; build mutated copies with
    :meth:`replace`.
    """

    alpha: tuple[RepMatrix, ...]
    beta1: tuple[RepMatrix, ...]
    beta0: tuple[RepMatrix, ...]
    P: RepMatrix
    Pbar: RepMatrix
    eta: RepMatrix
    J: tuple[tuple[RepMatrix, ...], ...]
    I11: RepMatrix
    I10: RepMatrix

    def a(self, mu: int) -> RepMatrix:
        return self.alpha[mu - 1]

    def b1(self, mu: int) -> RepMatrix:
        return self.beta1[mu - 1]

    def b0(self, mu: int) -> RepMatrix:
        return self.beta0[mu - 1]

    def j(self, mu: int, nu: int) -> RepMatrix:
        return self.J[mu - 1][nu - 1]

    def replace(self, **changes) -> "RepresentationSet":
        return dataclasses.replace(self, **changes)

    def with_alpha_entry(self, mu: int, row, col, value) -> "RepresentationSet":
        alpha = list(self.alpha)
        alpha[mu - 1] = alpha[mu - 1].with_entry(row, col, value)
        return self.replace(alpha=tuple(alpha))

    @cached_property
    def jj(self) -> tuple[tuple[RepMatrix, ...], ...]:
        """``sum_sigma J_{mu sigma} J_{sigma nu}`` for every (mu, nu)."""
        return tuple(
            tuple(_sum(self.j(m, s) @ self.j(s, n) for s in MU) for n in MU) for m in MU
        )

    @cached_property
    def b1b1(self) -> tuple[tuple[RepMatrix, ...], ...]:
        return tuple(tuple(self.b1(b) @ self.b1(c) for c in MU) for b in MU)

    def named(self, name: str) -> RepMatrix:
        """Look up a matrix by its dump name, e.g. ``alpha1``, ``J23``, ``eta``."""
        name = name.strip()
        simple = {"P": self.P, "Pbar": self.Pbar, "eta": self.eta, "I11": self.I11, "I10": self.I10}
        if name in simple:
            return simple[name]
        for prefix, fam in (("alpha", self.alpha), ("beta1_", self.beta1), ("beta0_", self.beta0)):
            if name.startswith(prefix) and name[len(prefix):].isdigit():
                mu = int(name[len(prefix):])
                if mu in MU:
                    return fam[mu - 1]
        if len(name) == 3 and name[0] == "J" and name[1:].isdigit():
            mu, nu = int(name[1]), int(name[2])
            if mu in MU and nu in MU:
                return self.j(mu, nu)
        raise KeyError(f"unknown matrix name {name!r}; choose from {', '.join(MATRIX_NAMES)}")


MATRIX_NAMES = (
    ["P", "Pbar", "eta", "I11", "I10"]
    + [f"alpha{m}" for m in MU]
    + [f"beta1_{m}" for m in MU]
    + [f"beta0_{m}" for m in MU]
    + [f"J{m}{n}" for m in MU for n in MU if m < n]
)


def _sum(mats) -> RepMatrix:
    out = RepMatrix.zero()
    for m in mats:
        out = out + m
    return out


@lru_cache(maxsize=1)
def build_representation() -> RepresentationSet:
    beta1 = tuple(build_beta1(m) for m in MU)
    return RepresentationSet(
        alpha=tuple(build_alpha(m) for m in MU),
        beta1=beta1,
        beta0=tuple(build_beta0(m) for m in MU),
        P=build_P(),
        Pbar=build_Pbar(),
        eta=build_eta(),
        J=tuple(tuple(build_J(m, n, beta1) for n in MU) for m in MU),
        I11=RepMatrix.identity(),
        I10=build_I10(),
    )

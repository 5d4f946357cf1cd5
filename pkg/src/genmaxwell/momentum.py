"""Momentum-space wave operator, spin and helicity projectors, dyad solutions.

Conventions: imaginary-time metric, ``k_4 = i*k0``, lightlike means
``k1^2 + k2^2 + k3^2 = k0^2``. Every function takes an optional ``rep``
argument so that the same code can be run against a deliberately mutated
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    I,
    ONE,
    ZERO,
    ComplexRational,
    RepMatrix,
    WaveState,
    as_scalar,
    levi_civita3,
    levi_civita4,
    BASIS,
)
from .representation import MU, RepresentationSet, build_representation

__all__ = [
    "MomentumError",
    "NotLightlikeError",
    "ZeroFrequencyError",
    "OffShellError",
    "NotRankOneError",
    "FourMomentum",
    "LightlikeMomentum",
    "MassiveMomentum",
    "ProjectorSet",
    "DyadSolution",
    "parse_rational",
    "k_slash",
    "wave_operator",
    "massive_operator",
    "gamma_projector",
    "spin_squared",
    "spin_squared_eps_form",
    "helicity_operator",
    "spin_projectors",
    "helicity_projectors",
    "state_projectors",
    "projector_set",
    "dyad_decompose",
    "solution_from_vector",
    "solution_basis",
]


class MomentumError(ValueError):
    code = "bad-momentum"


class NotLightlikeError(MomentumError):
    code = "not-lightlike"


class ZeroFrequencyError(MomentumError):
    code = "zero-frequency"


class OffShellError(MomentumError):
    code = "off-shell"


class NotRankOneError(ValueError):
    """Raised when a projector cannot be written as a single dyad."""


def parse_rational(x) -> Fraction:
    """Exact rational from int, Fraction or ``"p/q"`` text; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE"):
            raise ValueError(f"floating-point literal {x!r} rejected; use an integer or p/q")
        return Fraction(s)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class FourMomentum:
    """Unconstrained four-momentum ``(k1, k2, k3; k0)``."""

    k1: Fraction
    k2: Fraction
    k3: Fraction
    k0: Fraction

    def __post_init__(self):
        for name in ("k1", "k2", "k3", "k0"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

    @property
    def spatial(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.k1, self.k2, self.k3)

    def component(self, mu: int) -> ComplexRational:
        """``k_mu`` with ``k_4 = i*k0``."""
        if mu == 4:
            return I * self.k0
        return ComplexRational(self.spatial[mu - 1])

    def square(self) -> Fraction:
        """``k_mu k_mu = |k|^2 - k0^2``."""
        return self.k1 ** 2 + self.k2 ** 2 + self.k3 ** 2 - self.k0 ** 2

    def scaled(self, lam) -> "FourMomentum":
        lam = parse_rational(lam)
        return FourMomentum(self.k1 * lam, self.k2 * lam, self.k3 * lam, self.k0 * lam)

    def as_tuple(self) -> tuple[str, str, str, str]:
        return tuple(str(x) for x in (self.k1, self.k2, self.k3, self.k0))

    def __str__(self):
        return f"({self.k1},{self.k2},{self.k3};k0={self.k0})"


@dataclass(frozen=True)
class LightlikeMomentum(FourMomentum):
    def __post_init__(self):
        super().__post_init__()
        if self.k0 == 0:
            raise ZeroFrequencyError("k0 must be nonzero")
        if self.square() != 0:
            raise NotLightlikeError(
                f"momentum is not lightlike: |k|^2 = {self.k1**2 + self.k2**2 + self.k3**2}, k0^2 = {self.k0**2}"
            )

    def scaled(self, lam) -> "LightlikeMomentum":
        lam = parse_rational(lam)
        return LightlikeMomentum(self.k1 * lam, self.k2 * lam, self.k3 * lam, self.k0 * lam)


@dataclass(frozen=True)
class MassiveMomentum(FourMomentum):
    m: Fraction = Fraction(1)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "m", parse_rational(self.m))
        if self.m <= 0:
            raise MomentumError("mass must be positive")
        if self.square() != -self.m ** 2:
            raise OffShellError(f"k^2 = {self.square()} but -m^2 = {-self.m ** 2}")


def _rep(rep: RepresentationSet | None) -> RepresentationSet:
    return build_representation() if rep is None else rep


def _kappa(kappa) -> Fraction:
    k = parse_rational(kappa)
    if k == 0:
        raise ValueError("kappa must be nonzero")
    return k


def _lightlike(k: FourMomentum) -> FourMomentum:
    if k.k0 == 0:
        raise ZeroFrequencyError("k0 must be nonzero")
    if k.square() != 0:
        raise NotLightlikeError("momentum is not lightlike")
    return k


def _sum(terms) -> RepMatrix:
    out = RepMatrix.zero()
    for t in terms:
        out = out + t
    return out


def k_slash(k: FourMomentum, rep: RepresentationSet | None = None) -> RepMatrix:
    rep = _rep(rep)
    return _sum(rep.a(mu) * k.component(mu) for mu in MU)


def wave_operator(k: FourMomentum, kappa, rep: RepresentationSet | None = None) -> RepMatrix:
    """``D = i*k_slash + kappa*P``."""
    kappa = _kappa(kappa)
    rep = _rep(rep)
    return k_slash(k, rep) * I + rep.P * kappa


def massive_operator(k: FourMomentum, m=None, rep: RepresentationSet | None = None) -> RepMatrix:
    """``i*k_slash + m*I``; ``m`` defaults to the mass carried by a MassiveMomentum.

    Passing an unconstrained :class:`FourMomentum` with an explicit ``m`` is
    allowed so that off-shell points can be probed.
    """
    if m is None:
        if not isinstance(k, MassiveMomentum):
            raise TypeError("mass required for a plain FourMomentum")
        m = k.m
    m = parse_rational(m)
    if m <= 0:
        raise MomentumError("mass must be positive")
    rep = _rep(rep)
    return k_slash(k, rep) * I + rep.I11 * m


def gamma_projector(k: FourMomentum, kappa, rep: RepresentationSet | None = None) -> RepMatrix:
    """Projector onto the zero eigenspace of D: ``((D - kappa)/kappa)^2``."""
    _lightlike(k)
    kappa = _kappa(kappa)
    rep = _rep(rep)
    shifted = (wave_operator(k, kappa, rep) - rep.I11 * kappa) / kappa
    return shifted @ shifted


def spin_squared(k: FourMomentum, rep: RepresentationSet | None = None) -> RepMatrix:
    """Contracted form ``(1/k0^2) J_{mu s} J_{s nu} k_mu k_nu``."""
    _lightlike(k)
    rep = _rep(rep)
    jj = rep.jj
    out = _sum(
        jj[m - 1][n - 1] * (k.component(m) * k.component(n)) for m in MU for n in MU
    )
    return out / (k.k0 ** 2)


def spin_squared_eps_form(k: FourMomentum, rep: RepresentationSet | None = None) -> RepMatrix:
    """Square of ``W_mu = (1/(2 k0)) eps_{mu nu a b} k_nu J_{ab}``, summed over mu."""
    _lightlike(k)
    rep = _rep(rep)
    half_inv = Fraction(1, 2) / k.k0
    w = []
    for mu in MU:
        terms = []
        for nu in MU:
            kn = k.component(nu)
            for a in MU:
                for b in MU:
                    e = levi_civita4(mu, nu, a, b)
                    if e:
                        terms.append(rep.j(a, b) * (e * kn))
        w.append(_sum(terms) * half_inv)
    return _sum(wm @ wm for wm in w)


def helicity_operator(k: FourMomentum, rep: RepresentationSet | None = None, orientation: int = 1) -> RepMatrix:
    """``-(i/k0) eps_abc k_a beta1_b beta1_c``.

    ``orientation=-1`` evaluates with the opposite handedness of the spatial
    Levi-Civita symbol.
    """
    _lightlike(k)
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    rep = _rep(rep)
    terms = []
    for a in (1, 2, 3):
        ka = k.spatial[a - 1]
        if not ka:
            continue
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                e = levi_civita3(a, b, c) * orientation
                if e:
                    terms.append(rep.b1b1[b - 1][c - 1] * (ka * e))
    return _sum(terms) * (-I / k.k0)


def spin_projectors(k: FourMomentum, rep: RepresentationSet | None = None) -> tuple[RepMatrix, RepMatrix]:
    rep = _rep(rep)
    half = spin_squared(k, rep) * Fraction(1, 2)
    return rep.I11 - half, half


def helicity_projectors(
    k: FourMomentum, rep: RepresentationSet | None = None, orientation: int = 1
) -> tuple[RepMatrix, RepMatrix, RepMatrix]:
    """Return ``(S_plus, S_minus, S_0)``."""
    rep = _rep(rep)
    sk = helicity_operator(k, rep, orientation)
    sk2 = sk @ sk
    half = Fraction(1, 2)
    return (sk2 + sk) * half, (sk2 - sk) * half, rep.I11 - sk2


def state_projectors(
    k: FourMomentum, kappa, rep: RepresentationSet | None = None, orientation: int = 1
) -> tuple[RepMatrix, RepMatrix, RepMatrix]:
    """Return ``(Pi_0, Pi_plus, Pi_minus)``."""
    rep = _rep(rep)
    gamma = gamma_projector(k, kappa, rep)
    s0, _ = spin_projectors(k, rep)
    sp, sm, _ = helicity_projectors(k, rep, orientation)
    return s0 @ gamma, sp @ gamma, sm @ gamma


@dataclass(frozen=True)
class ProjectorSet:
    k: FourMomentum
    kappa: Fraction
    D: RepMatrix
    k_slash: RepMatrix
    gamma: RepMatrix
    spin_sq: RepMatrix
    helicity: RepMatrix
    S2_0: RepMatrix
    S2_1: RepMatrix
    Shat_plus: RepMatrix
    Shat_minus: RepMatrix
    Shat_0: RepMatrix
    Pi_0: RepMatrix
    Pi_plus: RepMatrix
    Pi_minus: RepMatrix

    def matrices(self) -> dict[str, RepMatrix]:
        names = (
            "D", "k_slash", "gamma", "spin_sq", "helicity", "S2_0", "S2_1",
            "Shat_plus", "Shat_minus", "Shat_0", "Pi_0", "Pi_plus", "Pi_minus",
        )
        return {n: getattr(self, n) for n in names}


def projector_set(
    k: FourMomentum, kappa, rep: RepresentationSet | None = None, orientation: int = 1
) -> ProjectorSet:
    _lightlike(k)
    kappa = _kappa(kappa)
    rep = _rep(rep)
    ks = k_slash(k, rep)
    D = ks * I + rep.P * kappa
    shifted = (D - rep.I11 * kappa) / kappa
    gamma = shifted @ shifted
    s2 = spin_squared(k, rep)
    sk = helicity_operator(k, rep, orientation)
    sk2 = sk @ sk
    half = Fraction(1, 2)
    S2_1 = s2 * half
    S2_0 = rep.I11 - S2_1
    Sp, Sm, S0 = (sk2 + sk) * half, (sk2 - sk) * half, rep.I11 - sk2
    return ProjectorSet(
        k=k, kappa=kappa, D=D, k_slash=ks, gamma=gamma, spin_sq=s2, helicity=sk,
        S2_0=S2_0, S2_1=S2_1, Shat_plus=Sp, Shat_minus=Sm, Shat_0=S0,
        Pi_0=S2_0 @ gamma, Pi_plus=Sp @ gamma, Pi_minus=Sm @ gamma,
    )


@dataclass(frozen=True)
class DyadSolution:
    """A rank-one projector written as ``psi * psi_bar``.

    ``eta_ratio`` is the constant ``c`` with ``psi_bar = c * psi^+ eta`` when
    such a constant exists, else ``None``.
    """

    psi: WaveState
    psi_bar: tuple[ComplexRational, ...]
    label: str
    pivot: int
    eta_ratio: ComplexRational | None

    def outer(self) -> RepMatrix:
        return RepMatrix(
            {(r, c): a * b for r, a in enumerate(self.psi) if a for c, b in enumerate(self.psi_bar) if b}
        )

    def norm(self) -> ComplexRational:
        """``psi_bar . psi``."""
        return self.psi.dot(self.psi_bar)


def _has_nonzero_minor(rows: list[list[ComplexRational]]) -> bool:
    # compare every row with the first nonzero row
    ref = next((r for r in rows if any(r)), None)
    if ref is None:
        return True
    j = next(c for c, v in enumerate(ref) if v)
    for r in rows:
        if r is ref:
            continue
        for c in range(len(ref)):
            if ref[j] * r[c] - ref[c] * r[j]:
                return True
    return False


def dyad_decompose(Pi: RepMatrix, eta: RepMatrix | None = None, label: str = "") -> DyadSolution:
    """Split a rank-one idempotent ``Pi`` into ``psi * psi_bar`` with ``psi_bar . psi = 1``.

    ``psi`` is the column of ``Pi`` at the first nonzero diagonal position and
    ``psi_bar`` the matching row divided by that diagonal entry.
    """
    rows = Pi.rows()
    if _has_nonzero_minor(rows):
        raise NotRankOneError(f"{label or 'matrix'} is not a rank-one dyad")
    if Pi @ Pi != Pi:
        raise NotRankOneError(f"{label or 'matrix'} is rank one but not idempotent")
    pivot = next((n for n in range(len(rows)) if rows[n][n]), None)
    if pivot is None:
        raise NotRankOneError(f"{label or 'matrix'} has zero trace")
    psi = Pi.column(pivot)
    d = rows[pivot][pivot]
    psi_bar = tuple(v / d for v in rows[pivot])
    ratio = None
    if eta is not None:
        ratio = _proportionality(psi_bar, (eta.transpose() @ psi.conjugate()).components)
    return DyadSolution(psi=psi, psi_bar=psi_bar, label=label, pivot=pivot, eta_ratio=ratio)


def _proportionality(a: Sequence[ComplexRational], b: Sequence[ComplexRational]) -> ComplexRational | None:
    """``c`` with ``a = c*b`` exactly, or None."""
    c = None
    for x, y in zip(a, b):
        if not y:
            if x:
                return None
            continue
        q = x / y
        if c is None:
            c = q
        elif q != c:
            return None
    return c


def solution_from_vector(psi_vec: Sequence, k: FourMomentum, kappa) -> WaveState:
    """Complete a vector part ``psi_mu`` to a solution of ``D Psi = 0``.

    ``psi_0 = -(i/kappa) k.psi`` and ``psi_[mu nu] = -(i/kappa)(k_nu psi_mu - k_mu psi_nu)``.
    """
    kappa = _kappa(kappa)
    psi_vec = [as_scalar(x) for x in psi_vec]
    if len(psi_vec) != 4:
        raise ValueError("vector part needs 4 components")
    f = -I / kappa
    kc = [k.component(mu) for mu in MU]
    comps = [ZERO] * len(BASIS)
    comps[0] = f * sum((a * b for a, b in zip(kc, psi_vec)), ZERO)
    for mu in MU:
        comps[mu] = psi_vec[mu - 1]
    for n, slot in enumerate(BASIS):
        if slot.kind == "T":
            m, v = slot.mu, slot.nu
            comps[n] = f * (kc[v - 1] * psi_vec[m - 1] - kc[m - 1] * psi_vec[v - 1])
    return WaveState(comps)


def solution_basis(k: FourMomentum, kappa) -> list[WaveState]:
    """Four independent solutions, one per unit vector part ``psi_mu = e_mu``."""
    _lightlike(k)
    out = []
    for mu in MU:
        e = [ZERO] * 4
        e[mu - 1] = ONE
        out.append(solution_from_vector(e, k, kappa))
    return out

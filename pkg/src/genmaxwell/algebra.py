"""Exact scalars, the 11-slot index scheme and sparse 11x11 matrices.

Everything in the package is built over Gaussian rationals ``a + b*i`` with
``a, b`` held as :class:`fractions.Fraction`, so identities are checked
against an exact zero and never against a tolerance.

The state space is indexed by :class:`ComponentIndex` in the frozen order::

    S, V1, V2, V3, V4, T12, T13, T14, T23, T24, T34

Antisymmetric pairs are stored once (``mu < nu``); :func:`pair_slot` resolves
an arbitrary ordered pair to its storage slot and sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "ComplexRational",
    "ComponentIndex",
    "BASIS",
    "DIM",
    "RepMatrix",
    "WaveState",
    "I",
    "ZERO",
    "ONE",
    "as_scalar",
    "eps_matrix",
    "pair_slot",
    "levi_civita4",
    "levi_civita3",
    "mat_poly",
    "commutator",
    "anticommutator",
    "kron",
]

DIM = 11

Rational = Union[int, Fraction]


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class ComplexRational:
    """Exact Gaussian rational ``re + im*i``.

    Floats are rejected on purpose: an exact zero cannot be certified from one.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | str = 0, im: Rational | str = 0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "ComplexRational":
        """Parse ``"p/q"``, ``"p/q*i"``, ``"a+b*i"`` style literals."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1].rstrip("*")
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        while cut > 0 and body[cut - 1] in "eE/":
            cut = max(body.rfind("+", 1, cut), body.rfind("-", 1, cut))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(Fraction(re_part), Fraction(im_part))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is ComplexRational:
            return _mk(self.re + other.re, self.im + other.im)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is ComplexRational:
            return _mk(self.re - other.re, self.im - other.im)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if type(other) is ComplexRational:
            a, b, c, d = self.re, self.im, other.re, other.im
        elif isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return _mk(self.re * other, self.im * other)
        else:
            o = _coerce(other)
            if o is None:
                return NotImplemented
            a, b, c, d = self.re, self.im, o.re, o.im
        # most entries are purely real or purely imaginary
        if not b:
            if not d:
                return _mk(a * c, _F0)
            if not c:
                return _mk(_F0, a * d)
            return _mk(a * c, a * d)
        if not a:
            if not d:
                return _mk(_F0, b * c)
            if not c:
                return _mk(-(b * d), _F0)
            return _mk(-(b * d), b * c)
        if not d:
            return _mk(a * c, b * c)
        if not c:
            return _mk(-(b * d), a * d)
        return _mk(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "ComplexRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero ComplexRational")
        return ComplexRational(self.re / n, -self.im / n)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re^2 + im^2`` (exact)."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return float(self.norm()) ** 0.5

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # presentation ---------------------------------------------------------

    def __repr__(self):
        return f"ComplexRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "ComplexRational":
        return cls(Fraction(obj["re"]), Fraction(obj["im"]))


_F0 = Fraction(0)
_set_re = ComplexRational.re.__set__
_set_im = ComplexRational.im.__set__


def _mk(re: Fraction, im: Fraction) -> ComplexRational:
    # trusted constructor: both parts already Fractions
    z = object.__new__(ComplexRational)
    _set_re(z, re)
    _set_im(z, im)
    return z


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}*i"


def _coerce(x) -> ComplexRational | None:
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return ComplexRational(x, 0)
    return None


def as_scalar(x) -> ComplexRational:
    """Coerce ints, Fractions, ``"p/q"`` strings to :class:`ComplexRational`."""
    if isinstance(x, str):
        return ComplexRational.parse(x)
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")
    return c


ZERO = ComplexRational(0, 0)
ONE = ComplexRational(1, 0)
I = ComplexRational(0, 1)


# ---------------------------------------------------------------------------
# index scheme


@dataclass(frozen=True)
class ComponentIndex:
    """One of the 11 basis slots: scalar ``S``, vector ``V(mu)``, pair ``T(mu, nu)``."""

    kind: str
    mu: int = 0
    nu: int = 0

    def __post_init__(self):
        if self.kind == "S":
            if self.mu or self.nu:
                raise ValueError("scalar slot carries no indices")
        elif self.kind == "V":
            if not 1 <= self.mu <= 4 or self.nu:
                raise ValueError(f"bad vector index {self.mu}")
        elif self.kind == "T":
            if not (1 <= self.mu < self.nu <= 4):
                raise ValueError(f"tensor slot needs 1 <= mu < nu <= 4, got ({self.mu}, {self.nu})")
        else:
            raise ValueError(f"unknown slot kind {self.kind!r}")

    @classmethod
    def S(cls) -> "ComponentIndex":
        return _S

    @classmethod
    def V(cls, mu: int) -> "ComponentIndex":
        return cls("V", mu)

    @classmethod
    def T(cls, mu: int, nu: int) -> "ComponentIndex":
        return cls("T", mu, nu)

    @classmethod
    def parse(cls, label: str) -> "ComponentIndex":
        label = label.strip()
        if label == "S":
            return _S
        if len(label) == 2 and label[0] == "V":
            return cls("V", int(label[1]))
        if len(label) == 3 and label[0] == "T":
            return cls("T", int(label[1]), int(label[2]))
        raise ValueError(f"unrecognised slot label {label!r}")

    @property
    def position(self) -> int:
        return _POSITION[self]

    @property
    def label(self) -> str:
        if self.kind == "S":
            return "S"
        if self.kind == "V":
            return f"V{self.mu}"
        return f"T{self.mu}{self.nu}"

    def __str__(self):
        return self.label


_S = ComponentIndex("S")
BASIS: tuple[ComponentIndex, ...] = (
    (_S,)
    + tuple(ComponentIndex("V", m) for m in range(1, 5))
    + tuple(ComponentIndex("T", a, b) for a, b in combinations(range(1, 5), 2))
)
_POSITION = {c: n for n, c in enumerate(BASIS)}
assert len(BASIS) == DIM


def _pos(key) -> int:
    if isinstance(key, ComponentIndex):
        return _POSITION[key]
    if isinstance(key, str):
        return _POSITION[ComponentIndex.parse(key)]
    if isinstance(key, int) and 0 <= key < DIM:
        return key
    raise IndexError(f"invalid component index {key!r}")


def pair_slot(mu: int, nu: int) -> tuple[ComponentIndex | None, int]:
    """Storage slot and sign of ``psi_[mu nu]``.

    >>> pair_slot(4, 1)
    (ComponentIndex(kind='T', mu=1, nu=4), -1)
    """
    if not (1 <= mu <= 4 and 1 <= nu <= 4):
        raise ValueError(f"pair indices must lie in 1..4, got ({mu}, {nu})")
    if mu < nu:
        return ComponentIndex("T", mu, nu), 1
    if mu > nu:
        return ComponentIndex("T", nu, mu), -1
    return None, 0


def _perm_sign(p: Sequence[int]) -> int:
    if len(set(p)) != len(p):
        return 0
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


_MINUS_I = ComplexRational(0, -1)


def levi_civita4(mu: int, nu: int, rho: int, sigma: int) -> ComplexRational:
    """Four-index symbol normalised to ``eps_1234 = -i``."""
    return _MINUS_I * _perm_sign((mu, nu, rho, sigma))


def levi_civita3(a: int, b: int, c: int) -> int:
    """Spatial symbol, ``eps_123 = +1``."""
    return _perm_sign((a, b, c))


# ---------------------------------------------------------------------------
# matrices and states


class WaveState:
    """An 11-component column vector with typed field accessors."""

    __slots__ = ("_c",)

    def __init__(self, components: Iterable):
        comps = tuple(as_scalar(x) for x in components)
        if len(comps) != DIM:
            raise ValueError(f"WaveState needs {DIM} components, got {len(comps)}")
        object.__setattr__(self, "_c", comps)

    def __setattr__(self, name, value):
        raise AttributeError("WaveState is immutable")

    @classmethod
    def zero(cls) -> "WaveState":
        return cls([ZERO] * DIM)

    @classmethod
    def basis(cls, slot) -> "WaveState":
        comps = [ZERO] * DIM
        comps[_pos(slot)] = ONE
        return cls(comps)

    @property
    def components(self) -> tuple[ComplexRational, ...]:
        return self._c

    @property
    def psi0(self) -> ComplexRational:
        return self._c[0]

    def psi(self, mu: int) -> ComplexRational:
        return self._c[mu]

    def tensor(self, mu: int, nu: int) -> ComplexRational:
        """Signed access to ``psi_[mu nu]``; zero on the diagonal."""
        slot, sign = pair_slot(mu, nu)
        if slot is None:
            return ZERO
        return self._c[_POSITION[slot]] * sign

    def __getitem__(self, key) -> ComplexRational:
        return self._c[_pos(key)]

    def __iter__(self) -> Iterator[ComplexRational]:
        return iter(self._c)

    def __len__(self):
        return DIM

    def __add__(self, other: "WaveState") -> "WaveState":
        return WaveState(a + b for a, b in zip(self._c, other._c))

    def __sub__(self, other: "WaveState") -> "WaveState":
        return WaveState(a - b for a, b in zip(self._c, other._c))

    def __neg__(self):
        return WaveState(-a for a in self._c)

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        return WaveState(a * s for a in self._c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WaveState):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def conjugate(self) -> "WaveState":
        return WaveState(a.conjugate() for a in self._c)

    def dot(self, row: Sequence[ComplexRational]) -> ComplexRational:
        """Bilinear contraction ``sum_i row_i * self_i`` (no conjugation)."""
        acc = ZERO
        for a, b in zip(row, self._c):
            if a and b:
                acc = acc + a * b
        return acc

    def __repr__(self):
        body = ", ".join(f"{c.label}={v}" for c, v in zip(BASIS, self._c) if v)
        return f"WaveState({body or '0'})"


class RepMatrix:
    """Immutable 11x11 matrix over :class:`ComplexRational`.

    Only nonzero entries are stored; products skip structural zeros, which
    keeps the exhaustive identity sweeps cheap. Rows and columns may be
    addressed by integer position, :class:`ComponentIndex`, or slot label.
    """

    __slots__ = ("_e",)

    def __init__(self, entries: Mapping[tuple[int, int], ComplexRational] | None = None):
        clean: dict[tuple[int, int], ComplexRational] = {}
        if entries:
            for (r, c), v in entries.items():
                v = as_scalar(v)
                if v:
                    clean[(_pos(r), _pos(c))] = v
        object.__setattr__(self, "_e", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RepMatrix is immutable")

    @classmethod
    def _raw(cls, entries: dict) -> "RepMatrix":
        # entries already keyed by int positions and free of zeros
        m = object.__new__(cls)
        object.__setattr__(m, "_e", entries)
        return m

    @classmethod
    def zero(cls) -> "RepMatrix":
        return cls._raw({})

    @classmethod
    def identity(cls) -> "RepMatrix":
        return cls._raw({(n, n): ONE for n in range(DIM)})

    @classmethod
    def diagonal(cls, values: Sequence) -> "RepMatrix":
        if len(values) != DIM:
            raise ValueError(f"need {DIM} diagonal values")
        return cls({(n, n): v for n, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RepMatrix":
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError(f"expected a {DIM}x{DIM} array")
        return cls({(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    # access ---------------------------------------------------------------

    def __getitem__(self, key) -> ComplexRational:
        r, c = key
        return self._e.get((_pos(r), _pos(c)), ZERO)

    def rows(self) -> list[list[ComplexRational]]:
        out = [[ZERO] * DIM for _ in range(DIM)]
        for (r, c), v in self._e.items():
            out[r][c] = v
        return out

    def row(self, r) -> tuple[ComplexRational, ...]:
        r = _pos(r)
        return tuple(self._e.get((r, c), ZERO) for c in range(DIM))

    def column(self, c) -> WaveState:
        c = _pos(c)
        return WaveState(self._e.get((r, c), ZERO) for r in range(DIM))

    def nonzero_entries(self) -> dict[tuple[int, int], ComplexRational]:
        return dict(self._e)

    def nonzero_count(self) -> int:
        return len(self._e)

    def with_entry(self, r, c, value) -> "RepMatrix":
        """Copy with one entry replaced; used to build mutated controls."""
        e = dict(self._e)
        key = (_pos(r), _pos(c))
        v = as_scalar(value)
        if v:
            e[key] = v
        else:
            e.pop(key, None)
        return RepMatrix._raw(e)

    # algebra --------------------------------------------------------------

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        e = dict(self._e)
        for k, v in other._e.items():
            s = e.get(k)
            if s is None:
                e[k] = v
            else:
                s = s + v
                if s:
                    e[k] = s
                else:
                    del e[k]
        return RepMatrix._raw(e)

    def __neg__(self) -> "RepMatrix":
        return RepMatrix._raw({k: -v for k, v in self._e.items()})

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "RepMatrix":
        if isinstance(scalar, RepMatrix):
            raise TypeError("use @ for matrix products")
        s = as_scalar(scalar)
        if not s:
            return RepMatrix.zero()
        return RepMatrix._raw({k: v * s for k, v in self._e.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RepMatrix":
        return self * as_scalar(scalar).inverse()

    def __matmul__(self, other):
        if isinstance(other, WaveState):
            out = [ZERO] * DIM
            comps = other.components
            for (r, c), v in self._e.items():
                x = comps[c]
                if x:
                    out[r] = out[r] + v * x
            return WaveState(out)
        if not isinstance(other, RepMatrix):
            return NotImplemented
        by_row: dict[int, list[tuple[int, ComplexRational]]] = {}
        for (k, c), v in other._e.items():
            by_row.setdefault(k, []).append((c, v))
        acc: dict[tuple[int, int], ComplexRational] = {}
        for (r, k), a in self._e.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                p = a * b
                s = acc.get(key)
                acc[key] = p if s is None else s + p
        return RepMatrix._raw({k: v for k, v in acc.items() if v})

    def __pow__(self, n: int) -> "RepMatrix":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = RepMatrix.identity(), self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def transpose(self) -> "RepMatrix":
        return RepMatrix._raw({(c, r): v for (r, c), v in self._e.items()})

    def conjugate(self) -> "RepMatrix":
        return RepMatrix._raw({k: v.conjugate() for k, v in self._e.items()})

    def adjoint(self) -> "RepMatrix":
        return self.transpose().conjugate()

    def trace(self) -> ComplexRational:
        acc = ZERO
        for n in range(DIM):
            v = self._e.get((n, n))
            if v is not None:
                acc = acc + v
        return acc

    def is_zero(self) -> bool:
        return not self._e

    def max_abs(self) -> float:
        """Largest entry modulus as a float; for reporting only."""
        if not self._e:
            return 0.0
        return max(abs(v) for v in self._e.values())

    def first_nonzero(self) -> tuple[ComponentIndex, ComponentIndex, ComplexRational] | None:
        if not self._e:
            return None
        r, c = min(self._e)
        return BASIS[r], BASIS[c], self._e[(r, c)]

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(frozenset(self._e.items()))

    def __repr__(self):
        return f"RepMatrix(<{len(self._e)} nonzero>)"

    def pretty(self) -> str:
        cells = [[str(v) if v else "." for v in row] for row in self.rows()]
        width = max(4, max(len(s) for row in cells for s in row))
        head = " " * 4 + " ".join(c.label.rjust(width) for c in BASIS)
        body = [
            BASIS[n].label.ljust(4) + " ".join(s.rjust(width) for s in row)
            for n, row in enumerate(cells)
        ]
        return "\n".join([head] + body)

    def to_json(self) -> list[dict]:
        """Row-major dump of nonzero entries with slot labels."""
        return [
            {"row": BASIS[r].label, "col": BASIS[c].label, **self._e[(r, c)].to_json()}
            for r, c in sorted(self._e)
        ]

    @classmethod
    def from_json(cls, items: Iterable[Mapping]) -> "RepMatrix":
        return cls(
            {
                (ComponentIndex.parse(it["row"]), ComponentIndex.parse(it["col"])): ComplexRational.from_json(it)
                for it in items
            }
        )


def eps_matrix(a, b) -> RepMatrix:
    """Elementary matrix with a single unit entry at row ``a``, column ``b``."""
    return RepMatrix._raw({(_pos(a), _pos(b)): ONE})


def kron(a: int, b: int) -> int:
    return 1 if a == b else 0


def commutator(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    return a @ b - b @ a


def anticommutator(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    return a @ b + b @ a


def mat_poly(m: RepMatrix, coefficients: Sequence) -> RepMatrix:
    """Evaluate ``sum_i c_i * M**i`` (ascending coefficients) by Horner's rule."""
    out = RepMatrix.zero()
    eye = RepMatrix.identity()
    for c in reversed(list(coefficients)):
        out = out @ m + eye * as_scalar(c)
    return out

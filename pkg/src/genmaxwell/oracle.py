"""Brute-force exact linear algebra used to cross-check the constructive path.

Nothing here reuses the matrix product, polynomial evaluation or any of the
representation formulas; matrices are read as plain nested lists and all
arithmetic below is local. Elimination is fraction-free (Bareiss) over the
Gaussian integers after clearing denominators, with full pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from .algebra import ComplexRational, RepMatrix, WaveState, BASIS

__all__ = [
    "NullspaceBasis",
    "RankOneResult",
    "MinimalPolynomialNotFound",
    "null_space",
    "rank",
    "minimal_polynomial",
    "rank_one_check",
    "spans_equal",
    "poly_from_roots",
]

GaussInt = tuple[int, int]


class MinimalPolynomialNotFound(ValueError):
    """No annihilating polynomial of degree <= max_degree exists."""


@dataclass(frozen=True)
class NullspaceBasis:
    vectors: tuple[tuple[ComplexRational, ...], ...]
    dimension: int

    def states(self) -> list[WaveState]:
        return [WaveState(v) for v in self.vectors]


@dataclass(frozen=True)
class RankOneResult:
    passed: bool
    witness: str | None = field(default=None)

    def __bool__(self):
        return self.passed


# -- Gaussian integer helpers ------------------------------------------------

def _gmul(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a: GaussInt, b: GaussInt) -> GaussInt:
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise ArithmeticError("Bareiss division was not exact")
    return (re // n, im // n)


def _gnorm(a: GaussInt) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _to_gauss_rows(rows: Sequence[Sequence[ComplexRational]]) -> list[list[GaussInt]]:
    den = 1
    for row in rows:
        for v in row:
            den = lcm(den, v.re.denominator, v.im.denominator)
    out = []
    for row in rows:
        out.append([(int(v.re * den), int(v.im * den)) for v in row])
    return out


def _bareiss(rows: Sequence[Sequence[ComplexRational]]):
    """Return (echelon rows, column permutation, rank)."""
    a = _to_gauss_rows(rows)
    n = len(a)
    m = len(a[0]) if n else 0
    perm = list(range(m))
    prev: GaussInt = (1, 0)
    r = 0
    for k in range(min(n, m)):
        best = None
        for i in range(k, n):
            for j in range(k, m):
                v = a[i][j]
                if v != (0, 0):
                    key = (_gnorm(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            perm[k], perm[pj] = perm[pj], perm[k]
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, m):
                a[i][j] = _gdiv_exact(_gsub(_gmul(piv, a[i][j]), _gmul(aik, a[k][j])), prev)
            a[i][k] = (0, 0)
        prev = piv
        r += 1
    return a, perm, r


def _nullspace_rows(rows: Sequence[Sequence[ComplexRational]]) -> list[list[ComplexRational]]:
    m = len(rows[0])
    ech, perm, r = _bareiss(rows)
    u = [[ComplexRational(re, im) for re, im in row] for row in ech[:r]]
    basis = []
    for f in range(r, m):
        # unknowns in permuted order: x[0..r-1] pivots, x[f] = 1, other free = 0
        x = [ComplexRational(0)] * m
        x[f] = ComplexRational(1)
        for i in range(r - 1, -1, -1):
            acc = u[i][f]
            for j in range(i + 1, r):
                if u[i][j] and x[j]:
                    acc = acc + u[i][j] * x[j]
            x[i] = -acc / u[i][i]
        vec = [ComplexRational(0)] * m
        for pos, col in enumerate(perm):
            vec[col] = x[pos]
        basis.append(vec)
    return basis


def _dense(m) -> list[list[ComplexRational]]:
    if isinstance(m, RepMatrix):
        return m.rows()
    return [list(r) for r in m]


def rank(m) -> int:
    rows = _dense(m)
    if not rows:
        return 0
    return _bareiss(rows)[2]


def null_space(m) -> NullspaceBasis:
    rows = _dense(m)
    vecs = _nullspace_rows(rows)
    dim = len(vecs)
    if dim + rank(rows) != len(rows[0]):
        raise ArithmeticError("rank-nullity violated")
    return NullspaceBasis(tuple(tuple(v) for v in vecs), dim)


def spans_equal(a: Sequence[Sequence[ComplexRational]], b: Sequence[Sequence[ComplexRational]]) -> bool:
    """True iff the column vectors ``a`` and ``b`` span the same subspace."""
    a, b = [list(v) for v in a], [list(v) for v in b]
    if not a or not b:
        return not any(any(x) for x in a) and not any(any(x) for x in b)

    def as_rows(vs):
        return [list(col) for col in zip(*vs)]

    ra, rb = rank(as_rows(a)), rank(as_rows(b))
    return ra == rb == rank(as_rows(a + b))


def _matmul(x: list[list[ComplexRational]], y: list[list[ComplexRational]]) -> list[list[ComplexRational]]:
    n = len(x)
    zero = ComplexRational(0)
    out = []
    for i in range(n):
        xi = x[i]
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                if xi[k] and y[k][j]:
                    acc = acc + xi[k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def minimal_polynomial(m, max_degree: int = 11) -> list[ComplexRational]:
    """Monic least-degree annihilating polynomial, ascending coefficients.

    Searches degree by degree for the first power ``M**d`` that is a linear
    combination of ``I, M, ..., M**(d-1)``.
    """
    if max_degree > 11:
        raise ValueError("max_degree must be <= 11")
    rows = _dense(m)
    n = len(rows)
    one, zero = ComplexRational(1), ComplexRational(0)
    power = [[one if i == j else zero for j in range(n)] for i in range(n)]
    flat = [[v for row in power for v in row]]
    for d in range(1, max_degree + 1):
        power = _matmul(power, rows)
        flat.append([v for row in power for v in row])
        columns = [list(c) for c in zip(*flat)]  # n*n rows, d+1 columns
        null = _nullspace_rows(columns)
        if null:
            c = null[0]
            lead = c[d]
            return [x / lead for x in c]
    raise MinimalPolynomialNotFound(f"no annihilating polynomial of degree <= {max_degree}")


def poly_from_roots(roots: Sequence) -> list[ComplexRational]:
    """Ascending coefficients of prod (x - r)."""
    coeffs = [ComplexRational(1)]
    for r in roots:
        r = r if isinstance(r, ComplexRational) else ComplexRational(r)
        shifted = [ComplexRational(0)] + coeffs
        scaled = [-r * c for c in coeffs] + [ComplexRational(0)]
        coeffs = [s + t for s, t in zip(shifted, scaled)]
    return coeffs


def rank_one_check(m) -> RankOneResult:
    """Pass iff the matrix is nonzero and every 2x2 minor vanishes."""
    rows = _dense(m)
    n = len(rows)
    if not any(any(r) for r in rows):
        return RankOneResult(False, "zero matrix")
    # one common scale factor, so zero minors stay zero
    g = _to_gauss_rows(rows)
    for i in range(n):
        gi = g[i]
        for k in range(i + 1, n):
            gk = g[k]
            for j in range(n):
                for l in range(j + 1, n):
                    if _gsub(_gmul(gi[j], gk[l]), _gmul(gi[l], gk[j])) != (0, 0):
                        minor = rows[i][j] * rows[k][l] - rows[i][l] * rows[k][j]
                        return RankOneResult(
                            False,
                            f"minor rows ({BASIS[i]},{BASIS[k]}) cols ({BASIS[j]},{BASIS[l]}) = {minor}",
                        )
    return RankOneResult(True)

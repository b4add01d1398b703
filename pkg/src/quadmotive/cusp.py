"""Minus continued fractions, the boundary polygon and its exact linear algebra.

No floating point anywhere in this module: quadratic irrationals are compared
through integer square roots, determinants are fraction-free (Bareiss), and
rank/kernel come from integer echelon forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .quadfield import _floor_quadirr, make_field

__all__ = [
    "NotGreaterThanOne",
    "NotSymmetric",
    "QuadIrrational",
    "CuspCycle",
    "ExactMatrix",
    "DefiniteCertificate",
    "CohomologyReport",
    "hj_step",
    "cusp_cycle",
    "intersection_matrix",
    "is_negative_definite",
    "boundary_d02",
    "rank",
    "kernel_basis",
    "boundary_cohomology",
]


class NotGreaterThanOne(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


@dataclass(frozen=True)
class QuadIrrational:
    """(P + sqrt(D))/Q with the canonical divisibility Q | D - P^2."""

    P: int
    Q: int
    D: int

    def __post_init__(self) -> None:
        assert self.Q != 0
        assert self.D > 0 and isqrt(self.D) ** 2 != self.D  # irrational
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError(
                f"non-canonical state: {self.Q} does not divide {self.D} - {self.P}^2"
            )

    def floor(self) -> int:
        return _floor_quadirr(self.P, self.Q, self.D)

    def ceil(self) -> int:
        # irrational value: ceil = floor + 1, never equal
        return self.floor() + 1

    def conj_floor(self) -> int:
        # conjugate (P - sqrt(D))/Q  ==  (-P + sqrt(D))/(-Q)
        return _floor_quadirr(-self.P, -self.Q, self.D)

    def is_reduced(self) -> bool:
        # value > 1 and conjugate strictly inside (0, 1)
        return self.floor() >= 1 and self.conj_floor() == 0

    def __str__(self) -> str:
        return f"({self.P} + sqrt({self.D}))/{self.Q}"


def hj_step(w: QuadIrrational) -> tuple[int, QuadIrrational]:
    """One minus-CF step: b = ceil(w), successor 1/(b - w)."""
    if w.floor() < 1:
        raise NotGreaterThanOne(f"{w} is not > 1")
    b = w.ceil()
    assert b >= 2
    p2 = b * w.Q - w.P
    q2, rem = divmod(p2 * p2 - w.D, w.Q)
    assert rem == 0  # guaranteed by the canonical-state divisibility
    return b, QuadIrrational(p2, q2, w.D)


@dataclass(frozen=True)
class CuspCycle:
    """Periodic part (b_0, ..., b_{n-1}) of the minus-CF of the cusp datum.

    Stored in the lexicographically minimal rotation; reflections are NOT
    identified (the polygon is oriented).
    """

    b: tuple[int, ...]
    D: int

    def __post_init__(self) -> None:
        assert len(self.b) >= 1
        assert all(x >= 2 for x in self.b)
        assert max(self.b) >= 3  # all-2 cycles belong to rational values
        assert self.b == _min_rotation(self.b)

    @property
    def n(self) -> int:
        return len(self.b)


def _min_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    return min(t[i:] + t[:i] for i in range(len(t)))


@lru_cache(maxsize=None)
def cusp_cycle(D: int, force: bool = False) -> CuspCycle:
    """Periodic minus-CF cycle of w0 = (1 + sqrt(D))/2, pre-period discarded."""
    make_field(D, force=force)  # admissibility check
    w = QuadIrrational(1, 2, D)
    seen: dict[QuadIrrational, int] = {}
    partial: list[int] = []
    while w not in seen:
        seen[w] = len(partial)
        b, w = hj_step(w)
        partial.append(b)
    period = tuple(partial[seen[w]:])
    return CuspCycle(b=_min_rotation(period), D=D)


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        assert len(self.entries) >= 1
        width = len(self.entries[0])
        assert all(len(r) == width for r in self.entries)

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def is_symmetric(self) -> bool:
        if self.n_rows != self.n_cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n_rows)
            for j in range(i)
        )


def intersection_matrix(c: CuspCycle) -> ExactMatrix:
    """Self-intersections -b_i on the diagonal, crossings off it.

    Degenerate conventions: n = 1 picks up +2 from the self-node of the
    single nodal curve; n = 2 has the two curves meeting twice.
    """
    n = c.n
    if n == 1:
        return ExactMatrix.from_rows([[-c.b[0] + 2]])
    if n == 2:
        return ExactMatrix.from_rows([[-c.b[0], 2], [2, -c.b[1]]])
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -c.b[i]
        rows[i][(i + 1) % n] = 1
        rows[i][(i - 1) % n] = 1
    return ExactMatrix.from_rows(rows)


def _int_rows(m: ExactMatrix) -> list[list[int]]:
    # scale each row to integers; row scaling preserves rank and kernel
    out = []
    for row in m.entries:
        mult = 1
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        out.append([int(x * mult) for x in row])
    return out


def _bareiss_det(rows: list[list[int]]) -> int:
    # fraction-free determinant; all divisions below are exact
    n = len(rows)
    a = [r[:] for r in rows]
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def det(m: ExactMatrix) -> Fraction:
    assert m.n_rows == m.n_cols
    scale = Fraction(1)
    int_rows = []
    for row in m.entries:
        mult = 1
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        scale *= mult
        int_rows.append([int(x * mult) for x in row])
    return Fraction(_bareiss_det(int_rows)) / scale


def leading_principal_minors(m: ExactMatrix) -> tuple[Fraction, ...]:
    n = m.n_rows
    assert n == m.n_cols
    return tuple(
        det(ExactMatrix(tuple(r[: k + 1] for r in m.entries[: k + 1])))
        for k in range(n)
    )


@dataclass(frozen=True)
class DefiniteCertificate:
    """Outcome of the leading-principal-minor test: (-1)^k * minor_k > 0."""

    negative_definite: bool
    minors: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return self.negative_definite


def is_negative_definite(m: ExactMatrix) -> DefiniteCertificate:
    if not m.is_symmetric():
        raise NotSymmetric("definiteness test needs a symmetric matrix")
    minors = leading_principal_minors(m)
    ok = all(
        (minor > 0) if (k % 2 == 1) else (minor < 0)
        for k, minor in enumerate(minors)
    )
    return DefiniteCertificate(negative_definite=ok, minors=minors)


def boundary_d02(n: int) -> ExactMatrix:
    """Difference map on the polygon: 1 on the diagonal, -1 cyclically above.

    n = 1 degenerates to the 1x1 zero matrix (the single component is its own
    cyclic successor).
    """
    assert n >= 1
    if n == 1:
        return ExactMatrix.from_rows([[0]])
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        rows[i][(i + 1) % n] = -1
    return ExactMatrix.from_rows(rows)


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    # fraction-free (Bareiss-style) row echelon; returns (rows, pivot columns)
    a = [r[:] for r in rows]
    nr, nc = len(a), len(a[0])
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: ExactMatrix) -> int:
    _, pivots = _echelon(_int_rows(m))
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of {x : m x = 0}, each vector scaled so its first nonzero is 1."""
    ech, pivots = _echelon(_int_rows(m))
    nc = m.n_cols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * nc
        x[f] = Fraction(1)
        for i in reversed(range(len(pivots))):
            c = pivots[i]
            row = ech[i]
            s = sum(Fraction(row[j]) * x[j] for j in range(c + 1, nc))
            x[c] = -s / row[c]
        lead = next(v for v in x if v != 0)
        basis.append(tuple(v / lead for v in x))
    return tuple(basis)


@dataclass(frozen=True)
class CohomologyReport:
    """Degree-by-degree boundary cohomology: (dimension, Tate twist) pairs."""

    n: int
    rank: int
    kernel: tuple[tuple[Fraction, ...], ...]
    h1: tuple[int, int]
    h2: tuple[int, int]
    h3: tuple[int, int]


def boundary_cohomology(c: CuspCycle | int) -> CohomologyReport:
    """Rank/kernel of the difference map, packaged with the fixed dimensions.

    The first differential is an isomorphism, so H^1 is the single constant
    class Q(0); the kernel of the difference map gives H^2 = Q(-2); its
    cokernel contributes the one copy of Q(-2) in H^3.
    """
    n = c if isinstance(c, int) else c.n
    d = boundary_d02(n)
    r = rank(d)
    if r != n - 1:
        raise ArithmeticError(
            f"internal error: difference map on {n} components has rank {r}, "
            f"expected {n - 1}"
        )
    ker = kernel_basis(d)
    assert len(ker) == 1
    assert ker[0] == tuple([Fraction(1)] * n)  # constants
    return CohomologyReport(
        n=n,
        rank=r,
        kernel=ker,
        h1=(1, 0),
        h2=(1, -2),
        h3=(1, -2),
    )

"""Exact arithmetic in real quadratic fields F = Q(sqrt(D)).

The supported fields have D an odd prime with D = 1 (mod 4), so the ring of
integers is O_F = Z + Z*om with om = (1 + sqrt(D))/2, and additionally the
narrow class number h+ must be 1 (a single cusp / a single cycle of reduced
forms).  Elements carry exact rational coordinates in the basis (1, om), so
the whole field F is representable, not just O_F.

Everything that decides equality is exact; the two real embeddings are the
only place floating point appears, and they are computed with mpmath at a
caller-chosen number of decimal digits (default 50, plus guard digits).

The nontrivial automorphism of F is written Theta (conj() here); it sends
sqrt(D) to -sqrt(D), hence om to 1 - om.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

from mpmath import mp, mpf

__all__ = [
    "FieldError",
    "NotPrime",
    "NotOneMod4",
    "NarrowClassNotOne",
    "FieldCtx",
    "QuadElem",
    "make_field",
    "norm",
    "conj",
    "trace",
    "fundamental_unit",
    "totally_positive_unit",
    "chi_D",
    "narrow_class_number",
    "is_prime",
]

Rational = Union[int, Fraction]


class FieldError(ValueError):
    """Base class for field-validation failures."""


class NotPrime(FieldError):
    """D is not a prime number."""


class NotOneMod4(FieldError):
    """D is not congruent to 1 modulo 4."""


class NarrowClassNotOne(FieldError):
    """The narrow class number h+ of Q(sqrt(D)) is not 1."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Validated context for F = Q(sqrt(D)).

    omega_trace and omega_norm are the trace and norm of om = (1+sqrt(D))/2,
    i.e. the coefficients of its minimal polynomial x^2 - x + (1-D)/4.
    """

    D: int
    omega_trace: int
    omega_norm: int

    def omega(self) -> "QuadElem":
        return QuadElem(Fraction(0), Fraction(1), self)

    def one(self) -> "QuadElem":
        return QuadElem(Fraction(1), Fraction(0), self)

    def element(self, a: Rational, b: Rational) -> "QuadElem":
        return QuadElem(Fraction(a), Fraction(b), self)

    def sqrt_numeric(self, precision: int = 50) -> mpf:
        with mp.workdps(precision + 10):
            return mp.sqrt(self.D)


@dataclass(frozen=True)
class QuadElem:
    """Element a + b*om of F, om = (1 + sqrt(D))/2, with exact rational a, b."""

    a: Fraction
    b: Fraction
    ctx: FieldCtx

    # --- ring operations -------------------------------------------------

    def __add__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        other = self._coerce(other)
        return QuadElem(self.a + other.a, self.b + other.b, self.ctx)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.ctx)

    def __sub__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "QuadElem":
        return self._coerce(other) - self

    def __mul__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        other = self._coerce(other)
        # om^2 = om*Tr(om) - N(om) = om + (D-1)/4
        m = Fraction(self.ctx.D - 1, 4)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadElem(
            a1 * a2 + b1 * b2 * m,
            a1 * b2 + a2 * b1 + b1 * b2,
            self.ctx,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero element")
        c = other.conj()
        num = self * c
        return QuadElem(num.a / n, num.b / n, self.ctx)

    def __pow__(self, e: int) -> "QuadElem":
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.ctx.one() / self.__pow__(-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.ctx.D != self.ctx.D:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(Fraction(other), Fraction(0), self.ctx)
        raise TypeError(f"cannot coerce {type(other).__name__} into the field")

    # --- field invariants -------------------------------------------------

    def conj(self) -> "QuadElem":
        """Galois conjugate: om -> 1 - om."""
        return QuadElem(self.a + self.b, -self.b, self.ctx)

    def norm(self) -> Fraction:
        """norm(x) = x * conj(x), an exact rational."""
        return self.a * (self.a + self.b) - self.b * self.b * Fraction(self.ctx.D - 1, 4)

    def trace(self) -> Fraction:
        """trace(x) = x + conj(x), an exact rational."""
        return 2 * self.a + self.b

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    # --- real embeddings ---------------------------------------------------

    def embed(self, which: str = "id", precision: int = 50) -> mpf:
        """Image under a real embedding: om -> (1 +- sqrt(D))/2.

        ``which`` is "id" (sqrt(D) > 0) or "theta" (the conjugate embedding).
        Computed with ``precision`` decimal digits plus ten guard digits; all
        equality logic elsewhere stays on the exact coordinates.
        """
        if which not in ("id", "theta"):
            raise ValueError("embedding must be 'id' or 'theta'")
        with mp.workdps(precision + 10):
            s = mp.sqrt(self.ctx.D)
            if which == "theta":
                s = -s
            w = (1 + s) / 2
            return mpf(self.a.numerator) / self.a.denominator + (
                mpf(self.b.numerator) / self.b.denominator
            ) * w

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*om"


# --------------------------------------------------------------------------
# module-level functional API
# --------------------------------------------------------------------------


def norm(x: QuadElem) -> Fraction:
    return x.norm()


def conj(x: QuadElem) -> QuadElem:
    return x.conj()


def trace(x: QuadElem) -> Fraction:
    return x.trace()


@lru_cache(maxsize=None)
def make_field(D: int, force: bool = False) -> FieldCtx:
    """Validate D and build the field context.

    Checks, in order: D >= 5, D = 1 (mod 4), D prime, and h+ = 1.  With
    ``force=True`` the narrow-class-number requirement is skipped (for
    exploring fields outside the supported family); the first three checks
    are structural and can never be forced.
    """
    if not isinstance(D, int) or D < 5:
        raise NotPrime(f"D must be an integer >= 5, got {D!r}")
    if D % 4 != 1:
        raise NotOneMod4(f"D = {D} is {D % 4} mod 4, need 1 mod 4")
    if not is_prime(D):
        raise NotPrime(f"D = {D} is not prime")
    if not force:
        h = narrow_class_number(D)
        if h != 1:
            raise NarrowClassNotOne(f"h+({D}) = {h}, need 1 (pass force to override)")
    return FieldCtx(D=D, omega_trace=1, omega_norm=(1 - D) // 4)


def chi_D(ctx: Union[FieldCtx, int], m: int) -> int:
    """The primitive even quadratic character mod D.

    For prime D = 1 (mod 4) this equals the Legendre symbol (m/D) (by
    reciprocity also the Kronecker symbol (D/m)); evaluated exactly by
    Euler's criterion.  Returns 0 iff D divides m.
    """
    D = ctx.D if isinstance(ctx, FieldCtx) else int(ctx)
    m %= D
    if m == 0:
        return 0
    r = pow(m, (D - 1) // 2, D)
    if r == 1:
        return 1
    if r == D - 1:
        return -1
    raise ArithmeticError(f"Euler criterion failed: D={D} is not an odd prime")


# --------------------------------------------------------------------------
# fundamental unit via the regular continued fraction of om
# --------------------------------------------------------------------------


def _floor_quadirr(P: int, Q: int, D: int) -> int:
    """Exact floor of (P + sqrt(D))/Q for nonsquare D > 0, any Q != 0."""
    s = isqrt(D)
    assert s * s != D, "D must not be a square"
    if Q > 0:
        return (P + s) // Q
    # (P + sqrt(D))/Q = (-P - sqrt(D))/(-Q); -sqrt(D) lies in (-s-1, -s)
    return (-P - s - 1) // (-Q)


@lru_cache(maxsize=None)
def fundamental_unit(ctx: FieldCtx) -> QuadElem:
    """The fundamental unit eps0 > 1 of O_F, normalized to norm -1.

    Computed from the regular continued fraction of om = (1+sqrt(D))/2: the
    canonical states (P + sqrt(D))/Q are iterated exactly until a state
    repeats; one traversal of the resulting period, accumulated as a 2x2
    convergent matrix [[A,B],[C,E]], gives the fundamental automorph
    u = C*w + E of the lattice Z + Z*w, which is the fundamental unit since
    the continued-fraction map preserves the similarity class of O_F.

    For prime D = 1 (mod 4) the period length is odd and norm(eps0) = -1;
    this is asserted, not assumed.
    """
    D = ctx.D
    # state (P, Q) for (P + sqrt(D))/Q; om has (P, Q) = (1, 2), and 2 | D - 1
    P, Q = 1, 2
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    states: list[tuple[int, int]] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(states)
        states.append((P, Q))
        a = _floor_quadirr(P, Q, D)
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
        assert Q != 0
    start = seen[(P, Q)]
    # accumulate M = M(a_start) * ... * M(a_last), M(a) = [[a,1],[1,0]]
    A, B, C, E = 1, 0, 0, 1
    for a in quotients[start:]:
        A, B, C, E = A * a + B, A, C * a + E, C
    Pc, Qc = states[start]
    # w = (Pc + sqrt(D))/Qc = (Pc-1)/Qc + (2/Qc)*om
    w = QuadElem(Fraction(Pc - 1, Qc), Fraction(2, Qc), ctx)
    unit = w * C + E
    assert unit.is_integral(), "fundamental automorph must be an algebraic integer"
    n = unit.norm()
    assert n in (1, -1), f"automorph has norm {n}"
    assert n == -1, (
        f"period parity gave norm +1 for D={D}; "
        "prime D = 1 mod 4 must have a norm -1 unit"
    )
    assert unit.a >= 0 and unit.b >= 1, "unit not normalized > 1"
    return unit


def totally_positive_unit(ctx: FieldCtx) -> QuadElem:
    """eps = eps0^2, the generator of the totally positive units."""
    return fundamental_unit(ctx) ** 2


# --------------------------------------------------------------------------
# narrow class number via cycles of reduced indefinite forms
# --------------------------------------------------------------------------


def _is_reduced_form(a: int, b: int, D: int) -> bool:
    # reduced: |sqrt(D) - 2|a|| < b < sqrt(D), decided exactly
    if b <= 0 or b * b >= D:
        return False
    t = 2 * abs(a)
    # need sqrt(D) < b + t  and  sqrt(D) > t - b, i.e. D < (b+t)^2 and (t-b)^2 < D
    if D >= (b + t) * (b + t):
        return False
    if t > b and (t - b) * (t - b) >= D:
        return False
    return True


def _rho(form: tuple[int, int, int], D: int, s: int) -> tuple[int, int, int]:
    """One reduction step on a reduced indefinite form (a, b, c)."""
    a, b, c = form
    t = 2 * abs(c)
    r = (-b) % t
    # lift r into (s - t, s]
    r += ((s - r) // t) * t
    cp = (r * r - D) // (4 * c)
    return (c, r, cp)


@lru_cache(maxsize=None)
def narrow_class_number(D: int) -> int:
    """h+ as the number of cycles of reduced indefinite forms of discriminant D.

    For fundamental discriminants the form class group is the narrow class
    group, so counting reduction cycles counts h+.  Exact integer arithmetic
    throughout.
    """
    if D < 5 or D % 4 != 1 or isqrt(D) ** 2 == D:
        raise FieldError(f"D = {D} is not a positive nonsquare = 1 mod 4")
    s = isqrt(D)
    forms = set()
    for b in range(1, s + 1, 2):  # b^2 = D mod 4 forces b odd
        ac = (b * b - D) // 4  # negative
        m = -ac
        for a in range(1, isqrt(m) + 1):
            if m % a:
                continue
            for aa in (a, m // a):
                for sign in (1, -1):
                    if _is_reduced_form(sign * aa, b, D):
                        forms.add((sign * aa, b, ac // (sign * aa)))
    cycles = 0
    remaining = set(forms)
    while remaining:
        cycles += 1
        f0 = next(iter(remaining))
        g = f0
        while True:
            remaining.discard(g)
            g = _rho(g, D, s)
            if g == f0:
                break
            assert g in forms, "reduction stepped outside the reduced set"
    return cycles

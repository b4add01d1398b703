"""l-adic side: finite fields, small-subgroup discrete logs, Frobenius matrices.

Everything is evaluated exactly in F_p (split primes) or F_{p^2} (inert
primes); there is no p-adic or floating-point approximation anywhere.  The
cocycle value tau at a Frobenius element is a discrete logarithm in the
order-l^n subgroup, computed by Pohlig-Hellman descent along l with a
baby-step/giant-step search at each level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .quadfield import chi_D, is_prime, make_field, totally_positive_unit
from .realisation import GENERATORS, epsilon_tilde_exponent

__all__ = [
    "Ramified",
    "NoSuchRoot",
    "BadDenominator",
    "RootMismatch",
    "FiniteField",
    "FFElem",
    "RepMatrix",
    "sqrt_mod",
    "least_generator",
    "root_of_unity",
    "reduce_unit",
    "kummer_tau",
    "frobenius_matrix",
    "frobenius_matrix_3d",
    "verify_power_law",
]


class Ramified(ValueError):
    """p divides D (or the denominator 2 of the ring generator)."""


class NoSuchRoot(ValueError):
    """The field has no root of unity of the requested order."""


class BadDenominator(ValueError):
    """l divides the denominator of the normalized exponent q."""


class RootMismatch(ValueError):
    """l^n does not divide the order needed for exact Frobenius evaluation."""


@dataclass(frozen=True)
class FiniteField:
    """F_p (degree 1) or F_{p^2} = F_p[x]/(x^2 - d_sq) (degree 2)."""

    p: int
    degree: int
    d_sq: int = 0

    def __post_init__(self) -> None:
        assert self.p >= 3 and is_prime(self.p)
        assert self.degree in (1, 2)
        if self.degree == 2:
            # the modulus x^2 - d_sq must be irreducible
            assert pow(self.d_sq % self.p, (self.p - 1) // 2, self.p) == self.p - 1

    @property
    def q(self) -> int:
        return self.p**self.degree

    def elem(self, c0: int, c1: int = 0) -> "FFElem":
        return FFElem(self, c0 % self.p, c1 % self.p)

    def one(self) -> "FFElem":
        return self.elem(1)


@dataclass(frozen=True)
class FFElem:
    """Element c0 + c1*x of its field (c1 = 0 in the prime field)."""

    field: FiniteField
    c0: int
    c1: int = 0

    def __post_init__(self) -> None:
        p = self.field.p
        assert 0 <= self.c0 < p and 0 <= self.c1 < p
        if self.field.degree == 1:
            assert self.c1 == 0

    def __add__(self, other: "FFElem") -> "FFElem":
        assert self.field == other.field
        p = self.field.p
        return FFElem(self.field, (self.c0 + other.c0) % p, (self.c1 + other.c1) % p)

    def __mul__(self, other: "FFElem") -> "FFElem":
        assert self.field == other.field
        p = self.field.p
        if self.field.degree == 1:
            return FFElem(self.field, self.c0 * other.c0 % p)
        # (a0 + a1 x)(b0 + b1 x) with x^2 = d_sq
        c0 = (self.c0 * other.c0 + self.c1 * other.c1 * self.field.d_sq) % p
        c1 = (self.c0 * other.c1 + self.c1 * other.c0) % p
        return FFElem(self.field, c0, c1)

    def inverse(self) -> "FFElem":
        p = self.field.p
        if self.field.degree == 1:
            assert self.c0 != 0
            return FFElem(self.field, pow(self.c0, -1, p))
        # 1/(a0 + a1 x) = (a0 - a1 x) / (a0^2 - d_sq a1^2)
        nrm = (self.c0 * self.c0 - self.field.d_sq * self.c1 * self.c1) % p
        assert nrm != 0
        ninv = pow(nrm, -1, p)
        return FFElem(self.field, self.c0 * ninv % p, -self.c1 * ninv % p)

    def __pow__(self, e: int) -> "FFElem":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = self.field.one()
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_one(self) -> bool:
        return self.c0 == 1 and self.c1 == 0

    def key(self) -> int:
        """Canonical ordering used by the least-generator convention."""
        return self.c0 + self.c1 * self.field.p

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.c0)
        return f"{self.c0} + {self.c1}*x"


def _prime_factors(m: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.add(m)
    return out


@lru_cache(maxsize=None)
def _least_generator_cached(field: FiniteField) -> FFElem:
    q = field.q
    if field.degree == 1:
        prims = _prime_factors(q - 1)
    else:
        # q - 1 = (p - 1)(p + 1): factor the halves separately
        prims = _prime_factors(field.p - 1) | _prime_factors(field.p + 1)
    cofactors = [(q - 1) // r for r in sorted(prims)]
    key = 2
    while True:
        g = field.elem(key % field.p, key // field.p)
        if all(not (g**c).is_one() for c in cofactors):
            return g
        key += 1
        assert key < q  # a cyclic group of order q-1 has a generator


def least_generator(field: FiniteField) -> FFElem:
    """The generator of the multiplicative group least in the key ordering."""
    return _least_generator_cached(field)


def root_of_unity(field: FiniteField, l: int, n: int) -> FFElem:
    """Deterministic zeta of exact order l^n: least-generator^((q-1)/l^n)."""
    assert is_prime(l) and n >= 1
    m = l**n
    if (field.q - 1) % m != 0:
        raise NoSuchRoot(f"l^n = {m} does not divide q - 1 = {field.q - 1}")
    return least_generator(field) ** ((field.q - 1) // m)


def sqrt_mod(a: int, p: int) -> int:
    """Least square root of a quadratic residue mod an odd prime (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    assert pow(a, (p - 1) // 2, p) == 1, "not a quadratic residue"
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        s, e = p - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c = pow(z, s, p)
        r = pow(a, (s + 1) // 2, p)
        t = pow(a, s, p)
        m = e
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            t = t * b % p * b % p
            c = b * b % p
            m = i
    return min(r, p - r)


def reduce_unit(D: int, p: int, flip_root: bool = False) -> FFElem:
    """Image of the totally positive unit eps in F_p (split) or F_{p^2} (inert).

    Split p: the least square root r of D mod p fixes the reduction map
    (flip_root selects p - r).  Inert p: the reduction lands in
    F_p[x]/(x^2 - D), with flip_root sending x to -x (the conjugate embedding).
    """
    ctx = make_field(D)
    if not (is_prime(p) and p % 2 == 1):
        raise ValueError(f"p = {p} is not an odd prime")
    if D % p == 0:
        raise Ramified(f"p = {p} divides D = {D}")
    eps = totally_positive_unit(ctx)
    a, b = int(eps.a), int(eps.b)
    inv2 = pow(2, -1, p)
    if chi_D(D, p) == 1:
        r = sqrt_mod(D, p)
        if flip_root:
            r = p - r
        field = FiniteField(p, 1)
        omega_bar = (1 + r) * inv2 % p
        return field.elem(a + b * omega_bar)
    field = FiniteField(p, 2, D % p)
    sign = -1 if flip_root else 1
    # omega = (1 + x)/2, with x the chosen square root of D
    omega_bar = field.elem(inv2, sign * inv2)
    return field.elem(a) + omega_bar * field.elem(b)


def _dlog_order_l(target: FFElem, base: FFElem, l: int) -> int:
    """d with base^d = target in the cyclic group <base> of prime order l.

    Baby-step/giant-step: store base^j for j < m, then walk target*(base^-m)^i.
    """
    m = isqrt(l - 1) + 1
    table: dict[FFElem, int] = {}
    g = base.field.one()
    for j in range(m):
        table.setdefault(g, j)
        g = g * base
    jump = (base**m).inverse()
    gamma = target
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % l
        gamma = gamma * jump
    raise ArithmeticError("element not in the subgroup generated by base")


def _dlog_zeta(v: FFElem, l: int, n: int, zeta: FFElem) -> int:
    """Discrete log of v in <zeta> of order l^n: Pohlig-Hellman descent along l.

    Digit i of the answer is found in the order-l subgroup after peeling off
    the digits already known.
    """
    zeta_l = zeta ** (l ** (n - 1))  # exact order l
    tau = 0
    for i in range(n):
        w = (v * (zeta**-tau)) ** (l ** (n - 1 - i))
        d = _dlog_order_l(w, zeta_l, l)
        tau += d * l**i
    assert zeta**tau == v  # certificate for the whole descent
    return tau % (l**n)


def kummer_tau(u: FFElem, l: int, n: int, zeta: FFElem) -> int:
    """The exponent tau in Z/l^n with zeta^tau = u^((q-1)/l^n).

    This is the Kummer-cocycle value of u at the field's Frobenius, once zeta
    fixes the identification of the l^n-th roots of unity with Z/l^n.
    """
    assert is_prime(l) and n >= 1
    field = u.field
    assert zeta.field == field
    m = l**n
    assert (field.q - 1) % m == 0, "field has no full set of l^n-th roots"
    assert (zeta**m).is_one() and not (zeta ** (m // l)).is_one(), (
        "zeta must have exact order l^n"
    )
    v = u ** ((field.q - 1) // m)
    return _dlog_zeta(v, l, n, zeta)


@dataclass(frozen=True)
class RepMatrix:
    """Upper-triangular Frobenius matrix over Z/l^n with its conventions.

    entries are reduced representatives in [0, l^n); sqrt_choice and
    zeta_repr record exactly which root of D and which root of unity were
    used, since tau is only canonical relative to those choices.
    """

    entries: tuple
    modulus: int
    p: int
    l: int
    n: int
    sqrt_choice: str
    zeta_repr: str
    zeta_convention: str
    tau: int
    chi: int
    dim: int
    generator: str

    def __post_init__(self) -> None:
        assert self.dim in (2, 3) and len(self.entries) == self.dim
        m = self.modulus
        for i, row in enumerate(self.entries):
            assert len(row) == self.dim
            assert all(0 <= x < m for x in row)
            for j in range(i):
                assert row[j] == 0  # upper triangular
        pinv = pow(self.p, -1, m)
        if self.dim == 2:
            assert self.entries[0][0] == self.chi % m
            assert self.entries[1][1] == pinv
        else:
            assert self.entries[0][0] == 1 % m
            assert self.entries[1][1] == self.chi % m
            assert self.entries[2][2] == pinv

    def power(self, k: int) -> tuple:
        assert k >= 1
        out = self.entries
        for _ in range(k - 1):
            out = _mat_mul(out, self.entries, self.modulus)
        return out

    def determinant(self) -> int:
        d = 1
        for i in range(self.dim):
            d = d * self.entries[i][i] % self.modulus
        return d


def _mat_mul(a: tuple, b: tuple, m: int) -> tuple:
    size = len(a)
    return tuple(
        tuple(
            sum(a[i][k] * b[k][j] for k in range(size)) % m for j in range(size)
        )
        for i in range(size)
    )


def _frobenius_data(
    D: int, p: int, l: int, n: int, flip_root: bool, generator: str
) -> tuple:
    """Shared validation + cocycle evaluation. Returns (tau, chi, m, u, zeta).

    tau is the normalized cocycle value tau_{eps~}(Frob_p) in Z/l^n.
    """
    make_field(D)
    if not (is_prime(p) and p % 2 == 1):
        raise ValueError(f"p = {p} is not an odd prime")
    if not (is_prime(l) and n >= 1):
        raise ValueError(f"(l, n) = ({l}, {n}) is not a prime power spec")
    if D % p == 0:
        raise Ramified(f"p = {p} divides D = {D}")
    if p == l:
        raise ValueError("p = l is not supported (wildly ramified direction)")
    m = l**n
    q_exp = epsilon_tilde_exponent(D, generator)
    if q_exp.denominator % l == 0:
        raise BadDenominator(
            f"l = {l} divides the denominator of q = {q_exp}; the normalized "
            f"unit does not exist l-adically"
        )
    q_mod = q_exp.numerator * pow(q_exp.denominator, -1, m) % m
    chi = chi_D(D, p)
    if chi == 1:
        if (p - 1) % m != 0:
            raise RootMismatch(
                f"split p = {p}: l^n = {m} does not divide p - 1 = {p - 1}"
            )
        e = (p - 1) // m
    else:
        # Frobenius at an inert prime is canonical only on the norm-one line;
        # exact evaluation needs the l^n-torsion inside it, i.e. l^n | p + 1
        if (p + 1) % m != 0:
            raise RootMismatch(
                f"inert p = {p}: l^n = {m} does not divide p + 1 = {p + 1}"
            )
        e = (p + 1) // m
    u = reduce_unit(D, p, flip_root)
    zeta = root_of_unity(u.field, l, n)
    t_raw = _dlog_zeta(u**e, l, n, zeta)
    tau = chi * q_mod * t_raw % m
    return tau, chi, m, u, zeta


def frobenius_matrix(
    D: int,
    p: int,
    l: int,
    n: int,
    flip_root: bool = False,
    generator: str = GENERATORS[0],
) -> RepMatrix:
    """The 2x2 matrix of Frob_p on the motive's l-adic realisation mod l^n.

    [[chi_D(p), tau * p^-1], [0, p^-1]] with tau the Kummer-cocycle value of
    the normalized unit, evaluated by exact discrete logarithm.
    """
    tau, chi, m, u, zeta = _frobenius_data(D, p, l, n, flip_root, generator)
    pinv = pow(p, -1, m)
    entries = ((chi % m, tau * pinv % m), (0, pinv))
    return RepMatrix(
        entries=entries,
        modulus=m,
        p=p,
        l=l,
        n=n,
        sqrt_choice=_sqrt_choice_label(D, p, flip_root),
        zeta_repr=str(zeta),
        zeta_convention="least-generator",
        tau=tau,
        chi=chi,
        dim=2,
        generator=generator,
    )


def frobenius_matrix_3d(
    D: int,
    p: int,
    l: int,
    n: int,
    flip_root: bool = False,
    generator: str = GENERATORS[0],
) -> RepMatrix:
    """The 3x3 form diag(1, chi, p^-1) + tau*p^-1 in slot (2,3).

    The lower-right 2x2 block is exactly frobenius_matrix; the extra constant
    line records the trivial summand.
    """
    tau, chi, m, u, zeta = _frobenius_data(D, p, l, n, flip_root, generator)
    pinv = pow(p, -1, m)
    entries = (
        (1 % m, 0, 0),
        (0, chi % m, tau * pinv % m),
        (0, 0, pinv),
    )
    return RepMatrix(
        entries=entries,
        modulus=m,
        p=p,
        l=l,
        n=n,
        sqrt_choice=_sqrt_choice_label(D, p, flip_root),
        zeta_repr=str(zeta),
        zeta_convention="least-generator",
        tau=tau,
        chi=chi,
        dim=3,
        generator=generator,
    )


def _sqrt_choice_label(D: int, p: int, flip_root: bool) -> str:
    if chi_D(D, p) == 1:
        r = sqrt_mod(D, p)
        return str(p - r if flip_root else r)
    return "-x" if flip_root else "x"


def verify_power_law(
    D: int,
    p: int,
    l: int,
    n: int,
    k: int,
    flip_root: bool = False,
    generator: str = GENERATORS[0],
) -> bool:
    """Check matrix(Frob_p)^k against an independently evaluated Frob_p^k.

    For k = 2 the cocycle at Frob^2 is recomputed from scratch in the same
    field via u^((p^2-1)/l^n) (chi^2 = 1, so no character factor), then
    assembled with alpha(Frob^2) = p^2 and compared entrywise.
    """
    assert k in (1, 2)
    mat = frobenius_matrix(D, p, l, n, flip_root, generator)
    if k == 1:
        return mat.power(1) == mat.entries
    tau1, chi, m, u, zeta = _frobenius_data(D, p, l, n, flip_root, generator)
    q_exp = epsilon_tilde_exponent(D, generator)
    q_mod = q_exp.numerator * pow(q_exp.denominator, -1, m) % m
    assert (p * p - 1) % m == 0  # implied by the k=1 preconditions
    t2_raw = _dlog_zeta(u ** ((p * p - 1) // m), l, n, zeta)
    tau2 = q_mod * t2_raw % m  # chi(p)^2 = 1
    p2inv = pow(p * p, -1, m)
    expected = ((chi * chi % m, tau2 * p2inv % m), (0, p2inv))
    return mat.power(2) == expected

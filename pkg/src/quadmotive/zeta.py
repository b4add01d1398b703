"""Special value zeta_F(-1) of the Dedekind zeta function and derived constants.

zeta_F(-1) is computed by two genuinely independent exact routes and the
results are compared on every call:

  * a divisor sum: zeta_F(-1) = (1/60) * sum over odd b with b^2 < D of
    sigma_1((D - b^2)/4);
  * the L-function factorization zeta_F = zeta * L(chi_D) at -1, with
    L(-1, chi) = -B_{2,chi}/2 and B_{2,chi} = (1/D) * sum chi(a) * a^2
    (valid for the even primitive character chi_D).

A mismatch raises immediately -- it is the package's strongest self-check,
never a warning.  The module also carries the constants derived from
zeta_F(-1) (volume 2*zeta, self cup product -4*zeta of the bundle generator,
and its normalizer -1/(4*zeta)), the numeric Gauss sum of chi_D, and the
lattice covolume sqrt(D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from mpmath import mp, mpc, mpf

from .quadfield import FieldCtx, chi_D, make_field

__all__ = [
    "ZetaReport",
    "Covolume",
    "sigma1",
    "zeta_minus1_siegel",
    "zeta_minus1_bernoulli",
    "zeta_minus1",
    "volume_constants",
    "gauss_sum_numeric",
    "covolume",
]


def sigma1(n: int) -> int:
    """Sum of divisors, by trial division (inputs are desk-scale)."""
    assert n >= 1
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            e = n // d
            if e != d:
                total += e
    return total


def _check_D(D: int) -> int:
    make_field(D, force=True)  # structural validation (prime, 1 mod 4)
    return D


@lru_cache(maxsize=None)
def zeta_minus1_siegel(D: int) -> Fraction:
    """zeta_F(-1) = (1/60) * sum_{b odd, b^2 < D} sigma_1((D - b^2)/4).

    b runs over odd integers of both signs; the sum is collected over b > 0
    and doubled.
    """
    _check_D(D)
    total = 0
    b = 1
    while b * b < D:
        total += 2 * sigma1((D - b * b) // 4)
        b += 2
    return Fraction(total, 60)


@lru_cache(maxsize=None)
def zeta_minus1_bernoulli(D: int) -> Fraction:
    """zeta_F(-1) = zeta(-1) * L(-1, chi_D) via the generalized Bernoulli number.

    B_{2,chi} = (1/D) * sum_{a=1}^{D-1} chi_D(a) a^2 (the linear and constant
    Bernoulli-polynomial terms vanish for an even nontrivial character),
    L(-1, chi) = -B_{2,chi}/2, and zeta(-1) = -1/12.
    """
    _check_D(D)
    b2 = Fraction(sum(chi_D(D, a) * a * a for a in range(1, D)), D)
    l_minus1 = -b2 / 2
    return Fraction(-1, 12) * l_minus1


def zeta_minus1(D: int) -> Fraction:
    """zeta_F(-1) with the two independent formulas cross-checked."""
    zs = zeta_minus1_siegel(D)
    zb = zeta_minus1_bernoulli(D)
    if zs != zb:
        raise ArithmeticError(
            f"internal error: divisor-sum and Bernoulli values of zeta_F(-1) "
            f"disagree for D={D}: {zs} vs {zb}"
        )
    if zs <= 0:
        raise ArithmeticError(f"internal error: zeta_F(-1) = {zs} <= 0 for D={D}")
    return zs


@dataclass(frozen=True)
class ZetaReport:
    """zeta_F(-1) with its derived geometric constants.

    volume     = 2 * zeta_minus1   (covolume of the surface)
    self_cup   = -4 * zeta_minus1  (cup square of the bundle generator)
    normalizer = -1/(4 * zeta_minus1), the factor turning the square of the
                 boundary class into the normalized unit exponent.
    """

    zeta_minus1: Fraction
    method: str
    volume: Fraction
    self_cup: Fraction
    normalizer: Fraction

    def __post_init__(self) -> None:
        assert self.volume == 2 * self.zeta_minus1
        assert self.self_cup == -4 * self.zeta_minus1
        assert self.normalizer * self.self_cup == 1


def volume_constants(D: int) -> ZetaReport:
    z = zeta_minus1(D)
    return ZetaReport(
        zeta_minus1=z,
        method="siegel+bernoulli",
        volume=2 * z,
        self_cup=-4 * z,
        normalizer=Fraction(-1) / (4 * z),
    )


def gauss_sum_numeric(D: int, precision: int = 50) -> mpc:
    """G(chi_D) = sum_{a=1}^{D-1} chi_D(a) exp(2*pi*i*a/D), numerically.

    For the even quadratic character with prime D = 1 mod 4 the exact value
    is sqrt(D); callers compare against that.
    """
    _check_D(D)
    with mp.workdps(precision + 10):
        two_pi_i = 2j * mp.pi
        total = mp.mpc(0)
        for a in range(1, D):
            c = chi_D(D, a)
            if c:
                total += c * mp.e ** (two_pi_i * a / D)
        return total


@dataclass(frozen=True)
class Covolume:
    symbol: str
    numeric: mpf


def covolume(D: int, precision: int = 50) -> Covolume:
    """Lattice covolume of O_F: |embed(om, theta) - embed(om, id)| = sqrt(D).

    Computed from the two embeddings of om rather than from sqrt directly,
    so it exercises the embedding code path.
    """
    ctx: FieldCtx = make_field(D, force=True)
    om = ctx.omega()
    with mp.workdps(precision + 10):
        val = abs(om.embed("theta", precision) - om.embed("id", precision))
    return Covolume(symbol=f"sqrt({D})", numeric=val)

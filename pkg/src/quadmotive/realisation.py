"""Extension-class data of the motive: exponents, Hodge class, Eisenstein pipeline.

All rational invariants are exact; the only floating point is the optional
numeric rendering of q*log(eps) through mpmath.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import mp, mpc, mpf

from .cusp import (
    CohomologyReport,
    CuspCycle,
    boundary_cohomology,
    cusp_cycle,
    intersection_matrix,
    is_negative_definite,
)
from .quadfield import (
    FieldCtx,
    QuadElem,
    fundamental_unit,
    make_field,
    narrow_class_number,
    totally_positive_unit,
)
from .zeta import gauss_sum_numeric, volume_constants, zeta_minus1

__all__ = [
    "EpsPower",
    "HodgeClass",
    "ExactComplex",
    "I",
    "EisCoefficients",
    "OneMotiveDescriptor",
    "RealisationDatasheet",
    "GENERATORS",
    "boundary_ledger",
    "epsilon_tilde_exponent",
    "hodge_de_rham_class",
    "eisenstein_coefficients",
    "eis_to_hodge",
    "kummer_one_motive",
    "datasheet",
]

# the two admissible boundary generators: c1(L1 (x) L2^-1) is the default,
# the flag value "L1inv-L2" selects its inverse and negates every signed output
GENERATORS = ("L1-L2inv", "L1inv-L2")


def _generator_sign(generator: str) -> int:
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator convention {generator!r}")
    return 1 if generator == GENERATORS[0] else -1


@dataclass(frozen=True)
class EpsPower:
    """eps^q in F* tensor Q; the group law adds exponents."""

    q: Fraction
    ctx: Union[FieldCtx, None] = None

    def __mul__(self, other: "EpsPower") -> "EpsPower":
        if not isinstance(other, EpsPower):
            return NotImplemented
        assert self.ctx == other.ctx or self.ctx is None or other.ctx is None
        return EpsPower(self.q + other.q, self.ctx or other.ctx)

    def __pow__(self, e) -> "EpsPower":
        return EpsPower(self.q * Fraction(e), self.ctx)

    def inverse(self) -> "EpsPower":
        return EpsPower(-self.q, self.ctx)

    def theta(self) -> "EpsPower":
        # conjugation: eps has norm 1, so Theta(eps) = eps^-1
        return EpsPower(-self.q, self.ctx)


def boundary_ledger(m1: int, m2: int, ctx: Union[FieldCtx, None] = None) -> EpsPower:
    """Boundary restriction of the bundle L1^m1 (x) L2^m2.

    The two generating bundles restrict to eps and eps^-1 respectively, so the
    class is eps^(m1 - m2).
    """
    return EpsPower(Fraction(m1 - m2), ctx)


def epsilon_tilde_exponent(D: int, generator: str = GENERATORS[0]) -> Fraction:
    """Exponent q with eps~ = eps^q, namely -1/(2*zeta_F(-1)).

    Computed the long way round: the ledger class of L1 (x) L2^-1 (exponent 2,
    the dual of the one-motive image eps^-2) scaled by the cup-product
    normalizer -1/(4*zeta_F(-1)).
    """
    sign = _generator_sign(generator)
    cls = boundary_ledger(1, -1) if sign == 1 else boundary_ledger(-1, 1)
    q = cls.q * volume_constants(D).normalizer
    assert q == sign * Fraction(-1) / (2 * zeta_minus1(D))
    return q


@dataclass(frozen=True)
class HodgeClass:
    """Extension class q*log(eps) against the 1/(2*pi*i) basis."""

    coeff: Fraction
    numeric: mpf
    basis_note: str = "1/(2*pi*i)"


def hodge_de_rham_class(
    D: int, precision: int = 50, generator: str = GENERATORS[0], force: bool = False
) -> HodgeClass:
    """The extension class -log(eps)/(2*zeta_F(-1)) = log(eps~)."""
    coeff = epsilon_tilde_exponent(D, generator)
    ctx = make_field(D, force=force)
    eps = totally_positive_unit(ctx)
    with mp.workdps(precision + 10):
        numeric = mpf(coeff.numerator) / coeff.denominator * mp.log(
            eps.embed("id", precision)
        )
    return HodgeClass(coeff=coeff, numeric=numeric)


@dataclass(frozen=True)
class ExactComplex:
    """Gaussian rational re + im*i, for exact Eisenstein coefficients."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def coerce(x) -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, complex):
            re, im = Fraction(x.real).limit_denominator(10**9), Fraction(
                x.imag
            ).limit_denominator(10**9)
            assert re == x.real and im == x.imag  # reject non-exact floats
            return ExactComplex(re, im)
        return ExactComplex(Fraction(x))

    def __add__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    def __sub__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __radd__ = __add__
    __rmul__ = __mul__

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return f"{self.re} + {self.im}*i"


I = ExactComplex(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class EisCoefficients:
    """Multipliers (lambda1, lambda2) of kappa_D = sqrt(D)*log(eps)/(4*pi*zeta).

    The transcendental factor stays symbolic; only the multipliers are stored.
    """

    lambda1: ExactComplex
    lambda2: ExactComplex
    D: int
    kappa_symbol: str = "sqrt(D)*log(eps)/(4*pi*zeta_F(-1))"


def eisenstein_coefficients(D: int, alpha1, alpha2, beta) -> EisCoefficients:
    """Coefficients of the Eisenstein cohomology class against c1(L1), c1(L2).

    Linear in (alpha1, alpha2); beta only moves the class by a coboundary and
    is discarded. Requires class number one (guaranteed by admissibility of D,
    since h divides h+ = 1): with several cusps the coefficients would be sums
    over cusp contributions.
    """
    make_field(D)
    del beta
    return EisCoefficients(
        lambda1=ExactComplex.coerce(alpha1),
        lambda2=ExactComplex.coerce(alpha2),
        D=D,
    )


def eis_to_hodge(
    coeffs: EisCoefficients, precision: int = 50, generator: str = GENERATORS[0]
) -> HodgeClass:
    """Project Eisenstein coefficients onto the boundary generator's Hodge class.

    The anti-invariant component of lambda1*c1(L1) + lambda2*c1(L2) against
    the oriented generator is (lambda1 - lambda2)/2; rescaling kappa_D by the
    period 2*pi*i/sqrt(D) of the 1/(2*pi*i) basis leaves the exact multiplier
    (lambda1 - lambda2)*i/(4*zeta_F(-1)) on log(eps), which must be real.
    """
    D = coeffs.D
    c = (coeffs.lambda1 - coeffs.lambda2) * I
    c = ExactComplex(
        c.re * _generator_sign(generator), c.im * _generator_sign(generator)
    )
    z4 = 4 * zeta_minus1(D)
    c = ExactComplex(c.re / z4, c.im / z4)
    if not c.is_real:
        raise ValueError(
            f"coefficients ({coeffs.lambda1}, {coeffs.lambda2}) give the "
            f"non-real multiplier {c}; no Hodge class"
        )
    ctx = make_field(D)
    eps = totally_positive_unit(ctx)
    with mp.workdps(precision + 10):
        numeric = mpf(c.re.numerator) / c.re.denominator * mp.log(
            eps.embed("id", precision)
        )
    return HodgeClass(coeff=c.re, numeric=numeric)


@dataclass(frozen=True)
class OneMotiveDescriptor:
    """[lattice -> Pic0 of the boundary] with the lattice generator's image."""

    lattice: str
    lattice_generator: str
    galois_action: str
    target: str
    u_image: EpsPower
    normalized_q: Fraction

    def __post_init__(self) -> None:
        assert self.u_image.q == -2


def kummer_one_motive(D: int) -> OneMotiveDescriptor:
    """The rank-1 Kummer 1-motive cut out by the boundary ledger.

    The lattice generator L1^-1 (x) L2 maps to eps^-2 independently of D; its
    dual class scaled by the normalizer recovers the exponent of eps~.
    """
    ctx = make_field(D)
    u = boundary_ledger(-1, 1, ctx)
    normalized = u.inverse().q * volume_constants(D).normalizer
    assert normalized == epsilon_tilde_exponent(D)
    return OneMotiveDescriptor(
        lattice="Z(chi_D)",
        lattice_generator="L1inv-L2",
        galois_action="chi_D",
        target="Pic0(boundary) = G_m",
        u_image=u,
        normalized_q=normalized,
    )


@dataclass(frozen=True)
class RealisationDatasheet:
    D: int
    h_plus: int
    eps0: QuadElem
    eps0_numeric: mpf
    norm_eps0: int
    eps: QuadElem
    eps_numeric: mpf
    zeta_minus1: Fraction
    volume: Fraction
    self_cup: Fraction
    normalizer: Fraction
    q_exponent: Fraction
    hodge: HodgeClass
    cycle: CuspCycle
    negative_definite: bool
    minors: tuple
    cohomology: CohomologyReport
    gauss_sum: mpc
    gauss_error: mpf
    motive_summands: tuple
    generator: str
    orientation: str
    precision: int


def datasheet(
    D: int, precision: int = 50, generator: str = GENERATORS[0], force: bool = False
) -> RealisationDatasheet:
    """Every invariant of the motive for one field, in a single exact record."""
    ctx = make_field(D, force=force)
    eps0 = fundamental_unit(ctx)
    eps = totally_positive_unit(ctx)
    vols = volume_constants(D)
    q = epsilon_tilde_exponent(D, generator)
    hodge = hodge_de_rham_class(D, precision, generator, force)
    cycle = cusp_cycle(D, force)
    cert = is_negative_definite(intersection_matrix(cycle))
    coh = boundary_cohomology(cycle)
    with mp.workdps(precision + 10):
        gs = gauss_sum_numeric(D, precision)
        gerr = abs(gs - mp.sqrt(D))
        e0n = eps0.embed("id", precision)
        en = eps.embed("id", precision)
    return RealisationDatasheet(
        D=D,
        h_plus=narrow_class_number(D),
        eps0=eps0,
        eps0_numeric=e0n,
        norm_eps0=int(eps0.norm()),
        eps=eps,
        eps_numeric=en,
        zeta_minus1=vols.zeta_minus1,
        volume=vols.volume,
        self_cup=vols.self_cup,
        normalizer=vols.normalizer,
        q_exponent=q,
        hodge=hodge,
        cycle=cycle,
        negative_definite=cert.negative_definite,
        minors=cert.minors,
        cohomology=coh,
        gauss_sum=gs,
        gauss_error=gerr,
        motive_summands=("Q(0)", "Q(0)chi_D"),
        generator=generator,
        orientation="fixed",
        precision=precision,
    )

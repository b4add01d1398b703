"""Boundary ledger, normalized exponent, Hodge class, Eisenstein pipeline."""

import random
from fractions import Fraction

import pytest
from mpmath import mp

from quadmotive import (
    EpsPower,
    ExactComplex,
    boundary_ledger,
    datasheet,
    eis_to_hodge,
    eisenstein_coefficients,
    epsilon_tilde_exponent,
    hodge_de_rham_class,
    kummer_one_motive,
    make_field,
    totally_positive_unit,
    zeta_minus1,
)
from quadmotive.realisation import GENERATORS, I

ADMISSIBLE_SMALL = (5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97)


def test_ledger_examples():
    assert boundary_ledger(1, 1).q == 0
    assert boundary_ledger(-1, 1).q == -2
    assert boundary_ledger(1, -1).q == 2


def test_ledger_is_a_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        m1, m2, k1, k2 = (rng.randint(-20, 20) for _ in range(4))
        lhs = boundary_ledger(m1 + k1, m2 + k2)
        rhs = boundary_ledger(m1, m2) * boundary_ledger(k1, k2)
        assert lhs.q == rhs.q


def test_eps_power_group():
    x = EpsPower(Fraction(3, 2))
    assert (x * x.inverse()).q == 0
    assert x.theta().q == -x.q
    assert (x ** 4).q == 6


def test_exponent_frozen_values():
    assert epsilon_tilde_exponent(5) == -15
    assert epsilon_tilde_exponent(13) == -3
    assert epsilon_tilde_exponent(17) == Fraction(-3, 2)
    assert epsilon_tilde_exponent(29) == -1


def test_exponent_negative_and_flip():
    for D in ADMISSIBLE_SMALL:
        q = epsilon_tilde_exponent(D)
        assert q < 0
        assert q == Fraction(-1, 2) / zeta_minus1(D)
        assert epsilon_tilde_exponent(D, GENERATORS[1]) == -q


def test_hodge_class_values():
    h5 = hodge_de_rham_class(5)
    assert h5.coeff == -15
    with mp.workdps(70):
        ref = -30 * mp.log((1 + mp.sqrt(5)) / 2)
        assert abs(h5.numeric - ref) < mp.mpf(10) ** -30

    h13 = hodge_de_rham_class(13)
    assert h13.coeff == -3
    with mp.workdps(70):
        ref = -6 * mp.log((3 + mp.sqrt(13)) / 2)
        assert abs(h13.numeric - ref) < mp.mpf(10) ** -30

    h29 = hodge_de_rham_class(29)
    assert h29.coeff == -1
    with mp.workdps(70):
        eps = totally_positive_unit(make_field(29)).embed("id", 60)
        assert abs(h29.numeric + mp.log(eps)) < mp.mpf(10) ** -30


def test_hodge_matches_exponent():
    for D in ADMISSIBLE_SMALL:
        assert hodge_de_rham_class(D).coeff == epsilon_tilde_exponent(D)
        flipped = hodge_de_rham_class(D, generator=GENERATORS[1])
        assert flipped.coeff == -hodge_de_rham_class(D).coeff
        # negate inside a wide context: ambient-precision minus would
        # round the 60-digit stored value and break exact equality
        with mp.workdps(80):
            assert flipped.numeric == -hodge_de_rham_class(D).numeric
    assert hodge_de_rham_class(5).basis_note == "1/(2*pi*i)"


def test_exact_complex():
    a = ExactComplex(Fraction(1, 2), Fraction(3))
    b = ExactComplex(Fraction(2), Fraction(-1))
    assert (a + b).re == Fraction(5, 2) and (a + b).im == 2
    assert (a * b) == ExactComplex(Fraction(4), Fraction(11, 2))
    assert (I * I).re == -1 and (I * I).im == 0
    assert ExactComplex.coerce(3) == ExactComplex(Fraction(3))
    assert ExactComplex.coerce(1j) == I
    assert not I.is_real and ExactComplex(Fraction(7)).is_real


def test_eisenstein_coefficients():
    c = eisenstein_coefficients(5, 0, 0, 7)
    assert c.lambda1 == ExactComplex(Fraction(0)) and c.lambda2 == ExactComplex(Fraction(0))
    c = eisenstein_coefficients(5, 1, 0, 0)
    assert c.lambda1 == ExactComplex(Fraction(1)) and c.lambda2.re == 0

    # beta never matters; lambdas are linear in the alphas
    rng = random.Random(23)
    for _ in range(25):
        a1, a2 = rng.randint(-9, 9), rng.randint(-9, 9)
        b1, b2 = rng.randint(-9, 9), rng.randint(-9, 9)
        s = rng.randint(-5, 5)
        left = eisenstein_coefficients(13, a1 + s * b1, a2 + s * b2, rng.random())
        r1 = eisenstein_coefficients(13, a1, a2, 0)
        r2 = eisenstein_coefficients(13, b1, b2, 99)
        assert left.lambda1 == r1.lambda1 + ExactComplex.coerce(s) * r2.lambda1
        assert left.lambda2 == r1.lambda2 + ExactComplex.coerce(s) * r2.lambda2


def test_eis_pipeline_reproduces_hodge_class():
    for D in (5, 13, 29):
        co = eisenstein_coefficients(D, I, -1 * I, 1)
        got = eis_to_hodge(co)
        want = hodge_de_rham_class(D)
        assert got.coeff == want.coeff
        assert got.numeric == want.numeric
    # non-real projection is refused
    with pytest.raises(ValueError):
        eis_to_hodge(eisenstein_coefficients(5, 1, 0, 0))
    # flip negates the projected class as well
    co = eisenstein_coefficients(5, I, -1 * I, 0)
    assert eis_to_hodge(co, generator=GENERATORS[1]).coeff == 15


def test_kummer_one_motive():
    for D, q in ((5, -15), (13, -3)):
        m = kummer_one_motive(D)
        assert m.u_image.q == -2
        assert m.normalized_q == q
        assert m.lattice == "Z(chi_D)"
        assert m.u_image.ctx is not None and m.u_image.ctx.D == D


def test_datasheet_aggregation():
    s = datasheet(5)
    assert s.zeta_minus1 == Fraction(1, 30)
    assert s.q_exponent == -15
    assert s.cycle.b == (3,)
    assert s.h_plus == 1
    assert s.negative_definite
    assert s.motive_summands == ("Q(0)", "Q(0)chi_D")
    with mp.workdps(60):
        assert abs(s.gauss_error) < mp.mpf(10) ** -40
    with pytest.raises(Exception):
        datasheet(12)


def test_datasheet_force_mode():
    s = datasheet(229, force=True)
    assert s.h_plus == 3
    assert s.norm_eps0 == -1
    assert s.negative_definite

"""Finite fields, discrete logs in l-power subgroups, Frobenius matrices."""

import random

import pytest

from quadmotive import (
    BadDenominator,
    FFElem,
    FiniteField,
    NoSuchRoot,
    Ramified,
    RootMismatch,
    chi_D,
    frobenius_matrix,
    frobenius_matrix_3d,
    kummer_tau,
    least_generator,
    reduce_unit,
    root_of_unity,
    verify_power_law,
)
from quadmotive.galois import sqrt_mod

F29 = FiniteField(29, 1)
F169 = FiniteField(13, 2, 5)  # 5 is a non-residue mod 13


def test_prime_field_arithmetic():
    a, b = F29.elem(17), F29.elem(25)
    assert (a * b).c0 == 17 * 25 % 29
    assert (a * a.inverse()).is_one()
    assert (a ** 28).is_one()  # Fermat
    assert a ** -1 == a.inverse()
    assert str(a) == "17"


def test_quadratic_field_arithmetic():
    x = F169.elem(0, 1)
    assert x * x == F169.elem(5)  # x^2 = D
    rng = random.Random(3)
    for _ in range(40):
        u = F169.elem(rng.randint(0, 12), rng.randint(0, 12))
        v = F169.elem(rng.randint(0, 12), rng.randint(0, 12))
        w = F169.elem(rng.randint(0, 12), rng.randint(0, 12))
        assert (u * v) * w == u * (v * w)
        assert u * v == v * u
        if not (u.c0 == 0 and u.c1 == 0):
            assert (u * u.inverse()).is_one()
            assert (u ** (13 * 13 - 1)).is_one()
    assert str(F169.elem(3, 5)) == "3 + 5*x"


def test_field_construction_guards():
    with pytest.raises(AssertionError):
        FiniteField(13, 2, 3)  # 3 = 4^2 mod 13 is a residue
    with pytest.raises(AssertionError):
        FFElem(F29, 30)


def test_sqrt_mod():
    assert sqrt_mod(5, 29) == 11       # Tonelli-Shanks branch (29 = 1 mod 4)
    assert sqrt_mod(5, 11) == 4        # p = 3 mod 4 branch
    assert sqrt_mod(0, 13) == 0
    for p in (13, 29, 101, 103):
        rng = random.Random(p)
        for _ in range(20):
            a = rng.randint(1, p - 1)
            sq = a * a % p
            r = sqrt_mod(sq, p)
            assert r * r % p == sq
            assert r <= p - r  # least root
    with pytest.raises(AssertionError):
        sqrt_mod(2, 5)  # non-residue


def test_least_generator():
    assert least_generator(F29).c0 == 2
    g9 = least_generator(FiniteField(3, 2, 2))
    assert (g9.c0, g9.c1) == (1, 1)  # keys 2, 3 fail the order test first
    g = least_generator(F169)
    seen = set()
    h = F169.one()
    for _ in range(13 * 13 - 1):
        h = h * g
        seen.add(h)
    assert len(seen) == 13 * 13 - 1  # honest generator


def test_root_of_unity():
    z = root_of_unity(F29, 7, 1)
    assert z.c0 == 16
    z4 = root_of_unity(F29, 2, 2)
    assert z4.c0 == 12 and (z4 ** 2).c0 == 28  # order 4: 12^2 = -1
    with pytest.raises(NoSuchRoot):
        root_of_unity(F29, 11, 1)


def test_kummer_tau_worked_values():
    zeta = root_of_unity(F29, 7, 1)
    assert kummer_tau(F29.elem(25), 7, 1, zeta) == 2  # 25^4 = 24 = 16^2
    assert kummer_tau(F29.elem(7), 7, 1, zeta) == 5   # 7^4 = 23 = 16^5
    assert kummer_tau(F29.elem(2) ** 7, 7, 1, zeta) == 0  # a 7th power


def test_reduce_unit():
    assert reduce_unit(5, 29).c0 == 7
    assert reduce_unit(5, 29, flip_root=True).c0 == 25
    with pytest.raises(Ramified):
        reduce_unit(5, 5)
    # inert prime: the reduction lives in F_{p^2} and has norm one
    u = reduce_unit(5, 13)
    assert u.field.degree == 2
    assert (u ** (13 + 1)).is_one()  # N(eps) = 1
    uf = reduce_unit(5, 13, flip_root=True)
    assert (u * uf).is_one()  # the two embeddings are inverse on norm-one units


def test_frobenius_worked_instance():
    m = frobenius_matrix(5, 29, 7, 1)
    assert m.entries == ((1, 2), (0, 1))
    assert m.tau == 2 and m.chi == 1 and m.modulus == 7
    assert m.sqrt_choice == "11" and m.zeta_repr == "16"
    assert m.zeta_convention == "least-generator"
    assert m.determinant() == 1

    flipped = frobenius_matrix(5, 29, 7, 1, flip_root=True)
    assert flipped.tau == 5 == (-m.tau) % 7
    assert flipped.sqrt_choice == "18"

    m3 = frobenius_matrix_3d(5, 29, 7, 1)
    assert m3.entries == ((1, 0, 0), (0, 1, 2), (0, 0, 1))
    assert m3.determinant() == 1


def test_frobenius_rejections():
    with pytest.raises(BadDenominator):
        frobenius_matrix(17, 13, 2, 1)  # q = -3/2
    with pytest.raises(RootMismatch):
        frobenius_matrix(5, 11, 7, 1)  # split, 7 does not divide 10
    with pytest.raises(RootMismatch):
        frobenius_matrix(5, 17, 5, 1)  # inert 17, 5 divides neither 16 nor 18
    with pytest.raises(Ramified):
        frobenius_matrix(5, 5, 7, 1)
    with pytest.raises(ValueError):
        frobenius_matrix(5, 7, 7, 1)  # p = l


def _valid_split_instances():
    # (D, p, l, n) with p split in Q(sqrt(D)) and l^n | p - 1
    out = []
    for D in (5, 13, 29, 41):
        for p in (11, 19, 29, 31, 41, 59, 61, 71, 79, 89, 101, 109):
            if p == D or chi_D(D, p) != 1:
                continue
            for l in (3, 5, 7):
                n = 0
                while (p - 1) % l ** (n + 1) == 0:
                    n += 1
                if n >= 1:
                    out.append((D, p, l, n))
    return out


def _valid_inert_instances():
    out = []
    for D in (5, 13, 29):
        for p in (3, 7, 13, 17, 23, 37, 43, 47):
            if p == D or chi_D(D, p) != -1:
                continue
            for l in (3, 5, 7, 11):
                if l == p:
                    continue
                n = 0
                while (p + 1) % l ** (n + 1) == 0:
                    n += 1
                if n >= 1:
                    out.append((D, p, l, n))
    return out


def test_diagonal_and_power_law_split():
    instances = _valid_split_instances()
    assert len(instances) >= 10
    for D, p, l, n in instances:
        m = frobenius_matrix(D, p, l, n)
        mod = l ** n
        assert m.entries[0][0] == chi_D(D, p) % mod
        assert m.entries[1][1] == pow(p, -1, mod)
        assert m.determinant() == chi_D(D, p) * pow(p, -1, mod) % mod
        assert verify_power_law(D, p, l, n, 1)
        assert verify_power_law(D, p, l, n, 2)


def test_diagonal_and_power_law_inert():
    instances = _valid_inert_instances()
    assert len(instances) >= 8
    for D, p, l, n in instances:
        m = frobenius_matrix(D, p, l, n)
        mod = l ** n
        assert m.entries[0][0] == (-1) % mod
        assert verify_power_law(D, p, l, n, 2)
        # root flip negates tau in the inert case too
        mf = frobenius_matrix(D, p, l, n, flip_root=True)
        assert mf.tau == (-m.tau) % mod


def test_tau_additivity_scaling_covariance():
    rng = random.Random(1729)
    zeta = root_of_unity(F29, 7, 1)
    for _ in range(60):
        u = F29.elem(rng.randint(1, 28))
        v = F29.elem(rng.randint(1, 28))
        tu, tv = kummer_tau(u, 7, 1, zeta), kummer_tau(v, 7, 1, zeta)
        assert kummer_tau(u * v, 7, 1, zeta) == (tu + tv) % 7
        a = rng.randint(0, 6)
        assert kummer_tau(u ** a, 7, 1, zeta) == a * tu % 7
        c = rng.randint(1, 6)
        assert kummer_tau(u, 7, 1, zeta ** c) == tu * pow(c, -1, 7) % 7


def test_zeta_covariance_is_matrix_conjugacy():
    # replacing zeta by zeta^c rescales every tau by c^-1, so the matrix
    # assembled under the new convention is diag(c,1)^-1 * M * diag(c,1)
    u = reduce_unit(5, 29)
    zeta = root_of_unity(F29, 7, 1)
    m = frobenius_matrix(5, 29, 7, 1)
    q_mod = (-15) % 7
    pinv = pow(29, -1, 7)
    for c in (2, 3, 6):
        tau_c = q_mod * kummer_tau(u, 7, 1, zeta ** c) % 7  # chi = +1 here
        m_c = ((1, tau_c * pinv % 7), (0, pinv))
        cinv = pow(c, -1, 7)
        conjugated = ((m.entries[0][0], cinv * m.entries[0][1] % 7),
                      (0, m.entries[1][1]))
        assert m_c == conjugated

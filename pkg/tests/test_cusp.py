"""Minus-CF states, resolution cycles, intersection matrices, exact linear algebra."""

import random
from fractions import Fraction

import pytest

from quadmotive import (
    CuspCycle,
    ExactMatrix,
    NotGreaterThanOne,
    NotSymmetric,
    QuadIrrational,
    boundary_cohomology,
    boundary_d02,
    cusp_cycle,
    hj_step,
    intersection_matrix,
    is_negative_definite,
)
from quadmotive.cusp import det, kernel_basis, leading_principal_minors, rank

# cycles frozen after an independent floating-point iteration at 60 digits
CYCLES = {
    5: (3,),
    13: (2, 2, 5),
    17: (2, 2, 3, 5, 3),
    29: (2, 2, 2, 2, 7),
    37: (2, 2, 2, 2, 3, 7, 3),
    41: (2, 2, 2, 2, 3, 2, 4, 7, 4, 2, 3),
}
MINORS = {
    13: (-2, 3, -9),
    17: (-2, 3, -7, 32, -64),
    29: (-2, 3, -4, 5, -25),
}


def _rotations(t):
    return {t[i:] + t[:i] for i in range(len(t))}


def test_quad_irrational_state():
    w = QuadIrrational(1, 2, 5)
    assert w.floor() == 1 and w.ceil() == 2
    assert not w.is_reduced()  # conjugate -0.618 not in (0,1)
    assert QuadIrrational(3, 2, 5).is_reduced()
    with pytest.raises(ValueError):
        QuadIrrational(1, 3, 5)  # 3 does not divide 5 - 1


def test_hj_step_examples():
    b, w = hj_step(QuadIrrational(1, 2, 5))
    assert b == 2 and w == QuadIrrational(3, 2, 5)
    b, w = hj_step(w)
    assert b == 3 and w == QuadIrrational(3, 2, 5)  # fixed point
    b, w = hj_step(QuadIrrational(1, 2, 13))
    assert b == 3 and w == QuadIrrational(5, 6, 13)
    with pytest.raises(NotGreaterThanOne):
        hj_step(QuadIrrational(-5, 2, 5))


def test_hj_step_preserves_reduced():
    for D in CYCLES:
        w = QuadIrrational(1, 2, D)
        for _ in range(40):
            b, w = hj_step(w)
            assert b >= 2
            if w.is_reduced():
                b2, w2 = hj_step(w)
                assert w2.is_reduced()


def test_cusp_cycles_frozen():
    for D, cyc in CYCLES.items():
        c = cusp_cycle(D)
        assert c.b in _rotations(cyc)
        assert c.b == min(_rotations(cyc))  # lex-min rotation stored
        assert all(b >= 2 for b in c.b) and max(c.b) >= 3


def test_cycle_independent_of_start():
    # walking in from a few steps later must give the same normalized cycle
    for D in (13, 29, 41):
        w = QuadIrrational(1, 2, D)
        for _ in range(3):
            _, w = hj_step(w)
        seen, period = {}, []
        while w not in seen:
            seen[w] = len(period)
            b, w = hj_step(w)
            period.append(b)
        tail = tuple(period[seen[w]:])
        assert min(_rotations(tail)) == cusp_cycle(D).b


def test_intersection_matrix_shapes():
    m1 = intersection_matrix(CuspCycle((3,), 5))
    assert m1.entries == ((Fraction(-1),),)
    m2 = intersection_matrix(CuspCycle((2, 3), 0))
    assert m2.entries == ((Fraction(-2), Fraction(2)), (Fraction(2), Fraction(-3)))
    m3 = intersection_matrix(CuspCycle((2, 2, 5), 13))
    assert [[int(x) for x in row] for row in m3.entries] == [
        [-2, 1, 1], [1, -2, 1], [1, 1, -5]]
    m5 = intersection_matrix(cusp_cycle(17))
    assert m5.is_symmetric()
    n = m5.n_rows
    for i in range(n):
        assert m5[i, i] == -cusp_cycle(17).b[i]
        assert m5[i, (i + 1) % n] == 1


def test_negative_definiteness():
    good = ExactMatrix.from_rows([[-2, 1, 1], [1, -2, 1], [1, 1, -5]])
    cert = is_negative_definite(good)
    assert cert and cert.negative_definite
    assert cert.minors == (Fraction(-2), Fraction(3), Fraction(-9))

    degenerate = ExactMatrix.from_rows([[-2, 1, 1], [1, -2, 1], [1, 1, -2]])
    cert = is_negative_definite(degenerate)
    assert not cert
    assert cert.minors[-1] == 0  # kernel vector (1,1,1)

    assert is_negative_definite(ExactMatrix.from_rows([[-1]])).negative_definite

    with pytest.raises(NotSymmetric):
        is_negative_definite(ExactMatrix.from_rows([[1, 2], [3, 4]]))


def test_all_supported_cycles_negative_definite():
    for D in CYCLES:
        cert = is_negative_definite(intersection_matrix(cusp_cycle(D)))
        assert cert.negative_definite
        if D in MINORS:
            assert cert.minors == tuple(Fraction(m) for m in MINORS[D])


def test_bareiss_det_against_cofactor_expansion():
    def cofactor_det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, x in enumerate(rows[0]):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
        return total

    rng = random.Random(42)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
                for _ in range(n)]
        assert det(ExactMatrix.from_rows(rows)) == cofactor_det(rows)


def test_leading_principal_minors():
    m = ExactMatrix.from_rows([[-2, 1], [1, -2]])
    assert leading_principal_minors(m) == (Fraction(-2), Fraction(3))


def test_boundary_d02_matrices():
    assert boundary_d02(1).entries == ((Fraction(0),),)
    assert [[int(x) for x in r] for r in boundary_d02(2).entries] == [[1, -1], [-1, 1]]
    assert [[int(x) for x in r] for r in boundary_d02(3).entries] == [
        [1, -1, 0], [0, 1, -1], [-1, 0, 1]]


def test_rank_and_kernel():
    for n in (1, 2, 3, 10, 25):
        d = boundary_d02(n)
        assert rank(d) == n - 1
        ker = kernel_basis(d)
        assert ker == (tuple([Fraction(1)] * n),)
        # transpose kernel is one-dimensional too
        dt = ExactMatrix(tuple(zip(*d.entries)))
        assert rank(dt) == n - 1
        assert len(kernel_basis(dt)) == 1
    # a full-rank matrix has no kernel
    full = ExactMatrix.from_rows([[2, 1], [1, 1]])
    assert rank(full) == 2 and kernel_basis(full) == ()


def test_boundary_cohomology_report():
    rep = boundary_cohomology(cusp_cycle(13))
    assert rep.n == 3 and rep.rank == 2
    assert rep.kernel == ((Fraction(1), Fraction(1), Fraction(1)),)
    assert rep.h1 == (1, 0) and rep.h2 == (1, -2) and rep.h3 == (1, -2)
    rep1 = boundary_cohomology(1)
    assert rep1.rank == 0 and len(rep1.kernel) == 1
    rep10 = boundary_cohomology(10)
    assert rep10.rank == 9


def test_cycle_invariants_enforced():
    with pytest.raises(AssertionError):
        CuspCycle((2, 2), 0)  # needs some b >= 3
    with pytest.raises(AssertionError):
        CuspCycle((3, 2), 0)  # not the lex-min rotation
    with pytest.raises(AssertionError):
        CuspCycle((1, 4), 0)  # b >= 2 violated

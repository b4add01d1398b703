"""Mod-l^n Frobenius matrices on the boundary motive, with sanity checks."""

from quadmotive import frobenius_matrix, frobenius_matrix_3d, verify_power_law


def show(D, p, l, n, **kw):
    m = frobenius_matrix(D, p, l, n, **kw)
    kind = "split" if m.chi == 1 else "inert"
    print(f"D={D} p={p} ({kind})  l^n={l}^{n}  "
          f"M = {m.entries}  mod {m.modulus}  tau={m.tau}  "
          f"root={m.sqrt_choice}  zeta={m.zeta_repr}")
    return m


# worked instance: D = 5, p = 29 (split), l = 7
m = show(5, 29, 7, 1)
assert m.entries == ((1, 2), (0, 1))
show(5, 29, 7, 1, flip_root=True)   # other square root of 5 mod 29: tau flips sign
print()

# a batch across split and inert primes
for args in ((5, 13, 7, 1), (5, 31, 5, 1), (13, 29, 7, 1), (13, 47, 3, 1),
             (29, 7, 3, 1), (29, 17, 3, 2), (41, 43, 3, 1)):
    show(*args)
    assert verify_power_law(*args, k=2)  # M^2 equals the matrix of Frob^2
print("power law M(Frob)^2 == M(Frob^2) verified on every instance above")
print()

# the three-dimensional version just adds the weight-0 line
m3 = frobenius_matrix_3d(5, 29, 7, 1)
print(f"3d block for D=5, p=29, l=7: {m3.entries}, det = {m3.determinant()}")

"""Boundary complex of a resolved cusp: the d_0^2 differential and its kernel."""

from quadmotive import boundary_cohomology, boundary_d02, cusp_cycle
from quadmotive.cusp import kernel_basis, rank

for n in (1, 2, 3, 5):
    d = boundary_d02(n)
    print(f"n = {n}:")
    for row in d.entries:
        print("   [" + " ".join(f"{int(x):2d}" for x in row) + "]")
    print(f"   rank {rank(d)}, kernel basis {kernel_basis(d)}")
    print()

# ranks are always n - 1 and the kernel is spanned by (1, ..., 1), so the
# boundary cohomology has fixed shape: one class in each degree 1, 2, 3
for D in (13, 29, 41):
    rep = boundary_cohomology(cusp_cycle(D))
    print(f"D = {D} (cycle length {rep.n}):"
          f" H^1 dim {rep.h1[0]} weight {rep.h1[1]},"
          f" H^2 dim {rep.h2[0]} weight {rep.h2[1]},"
          f" H^3 dim {rep.h3[0]} weight {rep.h3[1]}")

"""Resolve the cusp singularity for D = 13, one minus-CF step at a time.

The cycle of self-intersection numbers of the exceptional curves is the
period of the minus (ceiling) continued fraction of omega = (1 + sqrt(13))/2.
"""

from quadmotive import (
    QuadIrrational,
    cusp_cycle,
    hj_step,
    intersection_matrix,
    is_negative_definite,
)

D = 13

# start at omega = (1 + sqrt(13))/2, i.e. (P + sqrt(D))/Q with P = 1, Q = 2
w = QuadIrrational(1, 2, D)
print(f"start: w0 = ({w.P} + sqrt({D}))/{w.Q}")
for k in range(8):
    b, w2 = hj_step(w)
    tag = "reduced" if w.is_reduced() else "pre-period"
    print(f"  step {k}: b = {b:2d}   ({tag})   ->   ({w2.P} + sqrt({D}))/{w2.Q}")
    w = w2

c = cusp_cycle(D)
print()
print(f"period (lexicographically least rotation): {c.b}")

m = intersection_matrix(c)
print("intersection matrix of the exceptional cycle:")
for row in m.entries:
    print("   [" + "  ".join(f"{int(x):3d}" for x in row) + "]")

cert = is_negative_definite(m)
print(f"leading principal minors: {tuple(int(x) for x in cert.minors)}")
print(f"negative definite: {cert.negative_definite}")
assert cert.negative_definite

# same story for every supported field below 50
print()
for d in (5, 17, 29, 37, 41):
    cd = cusp_cycle(d)
    ok = bool(is_negative_definite(intersection_matrix(cd)))
    print(f"D = {d:2d}: cycle {cd.b}, length {len(cd.b)}, negative definite: {ok}")

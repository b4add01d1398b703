"""Fundamental units and zeta values for the first few supported fields."""

from quadmotive import (
    fundamental_unit,
    make_field,
    narrow_class_number,
    volume_constants,
    zeta_minus1_bernoulli,
    zeta_minus1_siegel,
)
from quadmotive.quadfield import is_prime

print(f"{'D':>4} {'eps0':>12} {'N(eps0)':>8} {'zeta_F(-1)':>12} {'vol':>8} {'chi(X)':>8}")
for D in range(5, 100, 4):
    if not is_prime(D):
        continue
    if narrow_class_number(D) != 1:
        print(f"{D:>4}   (narrow class number {narrow_class_number(D)}, skipped)")
        continue
    ctx = make_field(D)
    u = fundamental_unit(ctx)
    zs = zeta_minus1_siegel(D)
    zb = zeta_minus1_bernoulli(D)
    assert zs == zb  # divisor-sum route and L-function route must agree
    vc = volume_constants(D)
    print(f"{D:>4} {str(u):>12} {str(u.norm()):>8} {str(zs):>12} {str(vc.volume):>8} {str(vc.self_cup):>8}")

print()
print("eps0 is written a + b*omega with omega = (1 + sqrt(D))/2.")
print("vol = 2*zeta_F(-1) and the self-cup number is -4*zeta_F(-1);")
print("their product with the normalizer -1/(4*zeta_F(-1)) is always 1.")

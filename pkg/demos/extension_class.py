"""The extension class of the boundary motive, three ways.

1. directly, as the exponent q = -1/(2*zeta_F(-1)) of the normalized unit;
2. through the Eisenstein coefficient pipeline (lambda1, lambda2) = (i, -i);
3. through the one-motive descriptor, whose image eps^-2 is rescaled by the
   cup-product normalizer.

All three must agree exactly, and flipping the lattice generator flips the
sign of each.
"""

from quadmotive import (
    eis_to_hodge,
    eisenstein_coefficients,
    epsilon_tilde_exponent,
    hodge_de_rham_class,
    kummer_one_motive,
)
from quadmotive.realisation import GENERATORS, I

for D in (5, 13, 29):
    h = hodge_de_rham_class(D, precision=30)
    coeffs = eisenstein_coefficients(D, I, -1 * I, 1)
    via_eis = eis_to_hodge(coeffs, precision=30)
    om = kummer_one_motive(D)
    print(f"D = {D}:")
    print(f"  q exponent        {epsilon_tilde_exponent(D)}")
    print(f"  hodge coefficient {h.coeff}   numeric {h.numeric}")
    print(f"  via Eisenstein    {via_eis.coeff}")
    print(f"  one-motive image  eps^{om.u_image.q}, normalized exponent {om.normalized_q}")
    assert h.coeff == via_eis.coeff == om.normalized_q == epsilon_tilde_exponent(D)

    flipped = hodge_de_rham_class(D, precision=30, generator=GENERATORS[1])
    print(f"  generator {GENERATORS[1]!r}: coefficient {flipped.coeff}")
    assert flipped.coeff == -h.coeff
    print()

print("the numeric value is coeff * log(eps) against the basis 1/(2*pi*i)")

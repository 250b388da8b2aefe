#!/usr/bin/env python3
# Majorana stars for permutation-symmetric qubit states.
#
# A symmetric n-qubit state maps to n points on the sphere (counted
# with multiplicity).  Coherent states pile all n stars on one point,
# GHZ spreads them out, and the multiplicity pattern is exactly what
# the discriminant of the star polynomial detects.

import math

import numpy as np

from entkit import (
    bell_state,
    binary_discriminant,
    classify_symmetric,
    coherent_state,
    dicke_state,
    ghz_state,
    majorana_polynomial,
    symmetrize_check,
    w_state,
)


def show(name, state):
    cls = classify_symmetric(state)
    con = cls.constellation
    print(f"{name}: partition {list(con.partition)}, onion level {cls.onion_level}")
    for sp in con.stars:
        print(f"    theta={sp.theta:.6f}  phi={sp.phi:.6f}  x{sp.multiplicity}")
    print(f"    |discriminant| = {abs(con.discriminant):.3e}")


show("GHZ(3)", ghz_state(3))      # three equatorial stars at cube roots of unity
show("W(3)", w_state())           # a double star at the north pole plus one south
show("Bell phi+", bell_state("phi+"))   # antipodal pair

# A coherent state keeps every star at the chosen direction; the
# constellation recovers that direction from the amplitudes alone.
direction = (1.1, 2.2)
show("coherent(theta=1.1, phi=2.2, n=5)", dicke_state(coherent_state(direction, 5)))

# The discriminant separates degenerate from generic constellations
# without finding any roots.
exp = symmetrize_check(ghz_state(4))
poly = majorana_polynomial(exp)
print("\nGHZ(4) discriminant:", abs(binary_discriminant(poly, 4)))

# collapse two stars and it drops to zero
double = np.polynomial.polynomial.polyfromroots([1.0, 1.0, -2.0, 0.5])
print("poly with a double root:", abs(binary_discriminant(double, 4)))

# The onion order: fewer distinct stars = closer to the product end.
coh = classify_symmetric(dicke_state(coherent_state((0.3, 0.0), 3)))
mid = classify_symmetric(w_state())
top = classify_symmetric(ghz_state(3))
print("\ncoherent < W ?", coh.precedes(mid))
print("W < GHZ ?", mid.precedes(top))
print("GHZ < coherent ?", top.precedes(coh))

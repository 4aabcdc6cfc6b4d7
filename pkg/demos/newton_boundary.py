#!/usr/bin/env python3
"""Walkthrough: Newton boundary combinatorics of mixed polynomials.

A mixed polynomial uses both z and conjugate-z variables.  Its Newton
polyhedron lives in the exponent lattice via the support points nu + mu,
and the interesting structure for non-convenient polynomials is the set of
non-compact faces sitting over coordinate subspaces where the polynomial
vanishes identically.
"""

from mixedmilnor import newton, parse_poly

# A holomorphic three-variable example whose boundary misses the z3-axis.
f = parse_poly("z1^3 + z2^3 + z2*z3^2")
print("f =", f)

support, vertices, convenient = newton.support_vertices(f)
print("support points:", sorted(support))
print("vertices of the Newton polyhedron:", sorted(vertices))
print("convenient (boundary meets every axis):", convenient)

# f restricted to the z3-axis is identically zero, so {3} is a vanishing
# coordinate subset; the modified boundary gets an essential face there.
report = newton.vanishing_subsets(f)
print("vanishing subsets:", sorted(sorted(I) for I in report.vanishing))

for face in newton.essential_noncompact_faces(f, include_inessential=True):
    print(
        f"{face.kind.value:>24}: directions {sorted(face.noncompact_directions)}, "
        f"generators {sorted(face.generators)}, witness {face.weight_witness.p}, "
        f"d = {face.d_value}"
    )

# A weight vector selects the face where it is minimized; the face function
# keeps exactly the terms supported there.
d, face, face_poly = newton.delta_of_weight(f, (1, 3, 0))
print("\nweight (1,3,0): minimum", d, "face function", face_poly)

# Degrees of a face function under a weight: radial uses nu + mu, polar
# uses nu - mu.  Both constant under the same weight is the strongly polar
# homogeneous case that the zeta module needs.
g = parse_poly("z1^12*zb1^5*z2^2 + z1^6*zb1^2*z2^6*zb2^2")
degrees = newton.degrees(g, (2, 3))
print("\nmixed face function:", g)
print(
    "radial degree:", degrees.rdeg,
    "polar degree:", degrees.pdeg,
    "strongly polar:", degrees.strongly_polar,
)

# Top-dimensional compact faces of a restriction, used as zeta input.
from mixedmilnor.constructors import corpus

b = corpus("brieskorn_curve")
print("\ncurve with two mixed faces:", b)
for P, poly in newton.top_faces(b, {1, 2}):
    print("  weight", P.p, "face", poly)

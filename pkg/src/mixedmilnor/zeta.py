"""Zeta function of the Milnor fibration for strongly polar homogeneous faces.

For inputs whose face functions are all strongly polar positive weighted
homogeneous, the zeta function of the Milnor fibration is a finite product
of factors (1 - t^d)^e.  Each nonvanishing coordinate subset I contributes
one factor per top-dimensional compact face of the restricted Newton
boundary: d is the polar degree of the face function, and the exponent is
-chi/d where chi is the Euler characteristic of the torus fiber of the face
function.  That characteristic is computed here as a signed normalized
lattice volume of the cone over the polar-reduced support, validated against
independent fiber-counting oracles in the test suite.

The product is emitted in factor form as the primary artifact; expansion to
a reduced numerator/denominator pair is presentational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import newton
from .errors import (
    NegativeReducedExponentError,
    NotStronglyPolarError,
    NotStronglyPolarFaceTypeError,
    ZetaIntegralityError,
)
from .lattice import normalized_volume
from .poly import MixedPoly

__all__ = [
    "ZetaFactor",
    "ZetaFunction",
    "polar_reduction",
    "chi_torus",
    "zeta_function",
    "expand_zeta",
]


@dataclass(frozen=True)
class ZetaFactor:
    """One factor (1 - t^d)^e with its provenance (I, P, chi)."""

    d: int
    e: int
    I: frozenset
    P: tuple
    chi: int

    def __post_init__(self):
        if self.e * self.d != -self.chi:
            raise ZetaIntegralityError(
                f"exponent {self.e} times degree {self.d} is not -chi = {-self.chi}"
            )


@dataclass(frozen=True)
class ZetaFunction:
    """Product of factors (1 - t^d)^e, one per contributing (I, P) pair."""

    factors: tuple

    def multiset(self):
        """(d, e) pairs sorted; the convention-independent comparison key."""
        return tuple(sorted((f.d, f.e) for f in self.factors))

    def merged(self):
        """Factors with equal d merged by summing exponents, zeros dropped."""
        acc = {}
        for f in self.factors:
            acc[f.d] = acc.get(f.d, 0) + f.e
        return tuple((d, e) for d, e in sorted(acc.items()) if e != 0)

    def product_text(self) -> str:
        merged = self.merged()
        if not merged:
            return "1"
        parts = []
        for d, e in merged:
            base = f"(1-t^{d})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "".join(parts)


def polar_reduction(f_face: MixedPoly, P=None):
    """Support of the holomorphic model of a strongly polar face function.

    Maps each term z^nu zbar^mu to the exponent vector nu - mu (the same
    coefficients would be carried along; only the support matters here).
    Requires strong polar homogeneity with positive polar degree when a
    weight is supplied; a negative reduced exponent (Laurent case) is
    rejected.
    """
    if P is not None:
        report = newton.degrees(f_face, P)
        if not (report.strongly_polar and report.polar_positive):
            raise NotStronglyPolarError(
                "face function is not strongly polar positive homogeneous"
            )
    reduced = set()
    for m in f_face.terms:
        vec = tuple(a - b for a, b in zip(m.nu, m.mu))
        if any(x < 0 for x in vec):
            raise NegativeReducedExponentError(
                f"term with nu - mu = {vec} reduces to a Laurent monomial"
            )
        reduced.add(vec)
    return frozenset(reduced)


def chi_torus(reduced_support, k: int) -> int:
    """Euler characteristic of the torus fiber from the reduced support.

    Equals (-1)^(k-1) k! Vol_k of the convex hull of the origin and the
    support, computed exactly; degenerate (lower-dimensional) cones give 0.
    The support points must already be restricted to the k active
    coordinates.
    """
    pts = [tuple(p) for p in reduced_support]
    if not pts:
        raise ValueError("empty reduced support")
    if any(len(p) != k for p in pts):
        raise ValueError("support points must have length k")
    vol = normalized_volume(pts + [(0,) * k])
    sign = 1 if (k - 1) % 2 == 0 else -1
    chi = sign * vol
    if chi.denominator != 1:
        raise ZetaIntegralityError(f"normalized volume {vol} is not an integer")
    return int(chi)


def zeta_function(f: MixedPoly) -> ZetaFunction:
    """Zeta function of the Milnor fibration, in factor form.

    Iterates the nonvanishing subsets I and the top-dimensional compact
    faces of each restricted boundary; every face function must be strongly
    polar positive weighted homogeneous under its face weight.  Strong
    non-degeneracy and local tameness of the input are the caller's
    responsibility (the falsifier and tameness modules provide advisory
    verdicts).
    """
    report = newton.vanishing_subsets(f)
    factors = []
    for I in sorted(report.nonvanishing, key=lambda s: (len(s), sorted(s))):
        I_sorted = sorted(I)
        k = len(I_sorted)
        for P, face_poly in newton.top_faces(f, I):
            deg = newton.degrees(face_poly, P)
            if not (deg.strongly_polar and deg.polar_positive):
                raise NotStronglyPolarFaceTypeError(
                    f"face for I={set(I)} under P={P.p} is not strongly polar "
                    "positive weighted homogeneous"
                )
            reduced = polar_reduction(face_poly)
            restricted = frozenset(
                tuple(vec[i - 1] for i in I_sorted) for vec in reduced
            )
            chi = chi_torus(restricted, k)
            d = deg.pdeg
            if chi % d != 0:
                raise ZetaIntegralityError(
                    f"pdeg {d} does not divide chi {chi} for I={set(I)}"
                )
            factors.append(ZetaFactor(d=d, e=-chi // d, I=I, P=P.p, chi=chi))
    return ZetaFunction(tuple(factors))


# ---------------------------------------------------------------------------
# Expansion to a reduced rational function
# ---------------------------------------------------------------------------


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            out[i + j] += x * y
    return out


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(x != 0 for x in a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coeff = a[-1] / b[-1]
        q[shift] += coeff
        for i, y in enumerate(b):
            a[shift + i] -= coeff * y
        a = _poly_trim(a)
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a, b):
    a = _poly_trim([Fraction(x) for x in a])
    b = _poly_trim([Fraction(x) for x in b])
    while any(x != 0 for x in b):
        _, r = _poly_divmod(a, b)
        a, b = b, _poly_trim(r)
        if b == [Fraction(0)]:
            break
    lead = a[-1]
    return [x / lead for x in a]


def _poly_to_int(a):
    denom = 1
    for x in a:
        denom = denom * x.denominator // _gcd_int(denom, x.denominator)
    ints = [int(x * denom) for x in a]
    g = 0
    for x in ints:
        g = _gcd_int(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _one_minus_td(d):
    out = [Fraction(0)] * (d + 1)
    out[0] = Fraction(1)
    out[d] = Fraction(-1)
    return out


def expand_zeta(z: ZetaFunction):
    """Expanded reduced numerator/denominator of the factor product.

    Positive exponents multiply into the numerator, negative ones into the
    denominator; the pair is returned gcd-reduced with integer coefficients
    in ascending degree order.
    """
    num = [Fraction(1)]
    den = [Fraction(1)]
    for d, e in z.merged():
        base = _one_minus_td(d)
        for _ in range(abs(e)):
            if e > 0:
                num = _poly_mul(num, base)
            else:
                den = _poly_mul(den, base)
    g = _poly_gcd(num, den)
    if len(g) > 1:
        num, _ = _poly_divmod(num, g)
        den, _ = _poly_divmod(den, g)
    num_i = _poly_to_int(num)
    den_i = _poly_to_int(den)
    # one joint sign normalization: lowest nonzero denominator coefficient
    # positive, numerator compensated, so the ratio is unchanged
    lead = next((x for x in den_i if x != 0), 1)
    if lead < 0:
        den_i = [-x for x in den_i]
        num_i = [-x for x in num_i]
    return num_i, den_i


def poly_text(coeffs) -> str:
    """Human-readable form of an integer-coefficient polynomial in t."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mag = abs(c)
        term = ("t" if i == 1 else f"t^{i}") if mag == 1 else (
            f"{mag}*t" if i == 1 else f"{mag}*t^{i}"
        )
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def zeta_to_json(z: ZetaFunction) -> dict:
    num, den = expand_zeta(z)
    return {
        "factors": [
            {
                "d": f.d,
                "e": f.e,
                "I": sorted(f.I),
                "P": list(f.P),
                "chi": f.chi,
            }
            for f in z.factors
        ],
        "product": z.product_text(),
        "numerator": num,
        "denominator": den,
    }

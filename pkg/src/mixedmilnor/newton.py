"""Newton polyhedron combinatorics for mixed polynomials.

The Newton polyhedron of f is the convex hull of the union of the orthant
translates xi + R_{>=0}^n over the support points xi = nu + mu of f.  This
module computes its vertices, compact boundary, the non-compact faces that
become relevant when f vanishes on coordinate subspaces (essential faces),
weight/face duality data, and radial/polar degrees of face functions.

Subsets of variables are always 1-based sets, matching the z1, z2, ...
naming of the text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import lattice
from .errors import (
    TooManyVariablesError,
    VanishingSubsetError,
    ZeroPolynomialError,
)
from .poly import MixedPoly

MAX_VANISHING_VARS = 16


class FaceKind(Enum):
    COMPACT = "Compact"
    NONCOMPACT_ESSENTIAL = "NonCompactEssential"
    NONCOMPACT_INESSENTIAL = "NonCompactInessential"


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative integer weight, stored primitive and not all zero."""

    p: tuple

    def __post_init__(self):
        if not self.p or all(x == 0 for x in self.p):
            raise ValueError("weight vector must be nonzero")
        if any(x < 0 for x in self.p):
            raise ValueError("weight vector must be nonnegative")
        object.__setattr__(self, "p", lattice.primitive(self.p))

    @property
    def n(self) -> int:
        return len(self.p)

    def zero_set(self) -> frozenset:
        """I(P) = set of 1-based indices with p_i == 0."""
        return frozenset(i + 1 for i, x in enumerate(self.p) if x == 0)

    def value(self, xi) -> int:
        return sum(w * x for w, x in zip(self.p, xi))

    def is_strictly_positive(self) -> bool:
        return all(x > 0 for x in self.p)


@dataclass(frozen=True)
class FaceDescriptor:
    """One face of the (modified) Newton boundary.

    generators are the support points realizing the face; for non-compact
    faces the geometric face is conv(generators) plus rays in the
    noncompact_directions, and compact_part lists the generators lying on
    the compact boundary (the Delta_0 part used by degeneracy tests).
    """

    generators: frozenset
    dim: int
    weight_witness: WeightVector
    d_value: int
    kind: FaceKind
    noncompact_directions: frozenset
    compact_part: frozenset

    def is_compact(self) -> bool:
        return self.kind is FaceKind.COMPACT


@dataclass(frozen=True)
class VanishingReport:
    """Partition of the nonempty variable subsets by f^I == 0 or not."""

    vanishing: frozenset
    nonvanishing: frozenset

    def is_vanishing(self, I) -> bool:
        return frozenset(I) in self.vanishing


@dataclass(frozen=True)
class DegreeReport:
    """Radial/polar homogeneity data of a face function under one weight.

    rdeg/pdeg are None when the corresponding degree is not constant
    across the terms.
    """

    rdeg: int | None
    pdeg: int | None
    strongly_polar: bool
    polar_positive: bool


def _support(f: MixedPoly):
    if f.is_zero():
        raise ZeroPolynomialError("operation needs a nonzero polynomial")
    return sorted(f.support())


def _face_dim(face: lattice.LatticeFace, compact_pts) -> int:
    gens = sorted(face.generators & compact_pts) or sorted(face.generators)
    rows = []
    base = gens[0]
    for p in gens[1:]:
        rows.append([a - b for a, b in zip(p, base)])
    n = len(base)
    for i in sorted(face.rays):
        e = [0] * n
        e[i - 1] = 1
        rows.append(e)
    return lattice.rank(rows)


def _descriptor(f, face, compact_pts, vanish_lookup=None):
    if face.is_compact():
        kind = FaceKind.COMPACT
        compact_part = face.generators
    else:
        I = face.rays
        if vanish_lookup is None:
            vanish = f.restrict(I).is_zero()
        else:
            vanish = vanish_lookup(I)
        kind = (
            FaceKind.NONCOMPACT_ESSENTIAL if vanish else FaceKind.NONCOMPACT_INESSENTIAL
        )
        compact_part = frozenset(face.generators & compact_pts)
    return FaceDescriptor(
        generators=face.generators,
        dim=_face_dim(face, compact_pts),
        weight_witness=WeightVector(face.witness),
        d_value=face.d,
        kind=kind,
        noncompact_directions=face.rays,
        compact_part=compact_part,
    )


def _vanish_lookup(f):
    """Map I -> does f^(complement-fixed set) vanish, computed on demand."""
    cache = {}

    def lookup(I):
        I = frozenset(I)
        if I not in cache:
            cache[I] = f.restrict(I).is_zero()
        return cache[I]

    return lookup


def support_vertices(f: MixedPoly):
    """Support points, Newton-polyhedron vertices, and the convenience flag.

    Vertices are the support points that are 0-dimensional faces of
    conv(support) + R_{>=0}^n.  f is convenient when its compact boundary
    meets every coordinate axis, i.e. every axis carries a support point.
    """
    support = _support(f)
    faces = lattice.newton_faces(support, f.n)
    vertices = set()
    for face in faces:
        if face.is_compact() and len(face.generators) == 1:
            vertices.update(face.generators)
    convenient = all(
        any(pt[i] > 0 and all(x == 0 for j, x in enumerate(pt) if j != i) for pt in support)
        for i in range(f.n)
    )
    return frozenset(support), frozenset(vertices), convenient


def delta_of_weight(f: MixedPoly, P):
    """Minimal weight value d(P), the face it selects, and the face function.

    The weight is evaluated on the support; the face function f_P collects
    the terms whose support point attains the minimum.
    """
    if not isinstance(P, WeightVector):
        P = WeightVector(tuple(P))
    support = _support(f)
    if P.n != f.n:
        raise ValueError("weight length does not match variable count")
    vals = {xi: P.value(xi) for xi in support}
    d = min(vals.values())
    gens = frozenset(xi for xi, v in vals.items() if v == d)
    lat = lattice.LatticeFace(gens, P.zero_set(), P.p, d)
    all_faces = lattice.newton_faces(support, f.n)
    compact_pts = lattice.compact_support_points(all_faces)
    face = _descriptor(f, lat, compact_pts)
    face_poly = face_function(f, face)
    return d, face, face_poly


def face_function(f: MixedPoly, face: FaceDescriptor) -> MixedPoly:
    """Sum of the terms of f supported on the face."""
    gens = face.generators
    return MixedPoly(
        f.n, {m: c for m, c in f.terms.items() if m.support_point() in gens}
    )


def compact_part_function(f: MixedPoly, face: FaceDescriptor) -> MixedPoly:
    """Sum of the terms supported on the compact part Delta_0 of the face."""
    gens = face.compact_part
    return MixedPoly(
        f.n, {m: c for m, c in f.terms.items() if m.support_point() in gens}
    )


def vanishing_subsets(f: MixedPoly) -> VanishingReport:
    """Exact classification of all nonempty variable subsets by f^I == 0.

    The empty set is excluded (f(0) = 0 always); the full set is included
    and is nonvanishing for nonzero f.
    """
    _support(f)
    if f.n > MAX_VANISHING_VARS:
        raise TooManyVariablesError(
            f"subset enumeration guarded at {MAX_VANISHING_VARS} variables"
        )
    vanishing = set()
    nonvanishing = set()
    indices = range(1, f.n + 1)
    for size in range(1, f.n + 1):
        for I in combinations(indices, size):
            I = frozenset(I)
            if f.restrict(I).is_zero():
                vanishing.add(I)
            else:
                nonvanishing.add(I)
    return VanishingReport(frozenset(vanishing), frozenset(nonvanishing))


def all_faces(f: MixedPoly, include_polyhedron=False) -> list:
    """Every proper face of the Newton polyhedron as a FaceDescriptor."""
    support = _support(f)
    faces = lattice.newton_faces(support, f.n)
    compact_pts = lattice.compact_support_points(faces)
    lookup = _vanish_lookup(f)
    return [_descriptor(f, face, compact_pts, vanish_lookup=lookup) for face in faces]


def faces_with_directions(f: MixedPoly, I) -> list:
    """All non-compact faces whose noncompact direction set is exactly I.

    Includes nested (non-maximal) faces; local tameness must hold for every
    one of them, so degeneracy checks iterate this full list.
    """
    I = frozenset(I)
    return [fc for fc in all_faces(f) if fc.noncompact_directions == I]


def essential_noncompact_faces(f: MixedPoly, include_inessential=False) -> list:
    """Inclusion-maximal non-compact faces, essential ones first.

    A face is essential when f vanishes identically on the coordinate
    subspace spanned by its noncompact directions; with
    include_inessential=True the maximal non-essential non-compact faces
    are reported too.
    """
    faces = [fc for fc in all_faces(f) if not fc.is_compact()]
    by_dirs = {}
    for fc in faces:
        by_dirs.setdefault(fc.noncompact_directions, []).append(fc)
    out = []
    for dirs in sorted(by_dirs, key=sorted):
        group = by_dirs[dirs]
        maximal = [
            fc
            for fc in group
            if not any(
                other is not fc and fc.generators < other.generators for other in group
            )
        ]
        for fc in sorted(maximal, key=lambda x: sorted(x.generators)):
            if fc.kind is FaceKind.NONCOMPACT_ESSENTIAL or include_inessential:
                out.append(fc)
    out.sort(key=lambda fc: (fc.kind is not FaceKind.NONCOMPACT_ESSENTIAL, sorted(fc.noncompact_directions)))
    return out


def top_faces(f: MixedPoly, I) -> list:
    """Weights of the (|I|-1)-dimensional compact faces of the restriction f^I.

    Returns (WeightVector, face function) pairs; the weights are primitive,
    strictly positive on I, zero elsewhere.  For |I| = 1 the single pair is
    the lowest-degree support point on that axis with unit weight.
    """
    I = sorted(set(I))
    fI = f.restrict(I)
    if fI.is_zero():
        raise VanishingSubsetError(f"f vanishes on the subspace of {set(I)}")
    proj = {}
    for m in fI.terms:
        xi = m.support_point()
        proj.setdefault(tuple(xi[i - 1] for i in I), set()).add(xi)
    pts = sorted(proj)
    out = []
    if len(I) == 1:
        low = min(pts)
        weight = [0] * f.n
        weight[I[0] - 1] = 1
        gens = frozenset(xi for q in (low,) for xi in proj[q])
        poly = MixedPoly(
            f.n, {m: c for m, c in fI.terms.items() if m.support_point() in gens}
        )
        return [(WeightVector(tuple(weight)), poly)]
    k = len(I)
    for face in lattice.newton_faces(pts, k):
        if not face.is_compact():
            continue
        if lattice.affine_rank(sorted(face.generators)) != k - 1:
            continue
        weight = [0] * f.n
        for idx, i in enumerate(I):
            weight[i - 1] = face.witness[idx]
        gens = set()
        for q in face.generators:
            gens.update(proj[q])
        poly = MixedPoly(
            f.n, {m: c for m, c in fI.terms.items() if m.support_point() in gens}
        )
        out.append((WeightVector(tuple(weight)), poly))
    out.sort(key=lambda pair: pair[0].p)
    return out


def degrees(f_face: MixedPoly, P) -> DegreeReport:
    """Radial and polar degrees of a face function under a weight.

    rdeg = sum p_i (nu_i + mu_i), pdeg = sum p_i (nu_i - mu_i); either is
    reported only when constant across all terms.  strongly_polar means
    both are constant under this same weight.
    """
    if not isinstance(P, WeightVector):
        P = WeightVector(tuple(P))
    if f_face.is_zero():
        raise ZeroPolynomialError("degrees of the zero polynomial are undefined")
    rdegs = set()
    pdegs = set()
    for m in f_face.terms:
        rdegs.add(sum(p * (a + b) for p, a, b in zip(P.p, m.nu, m.mu)))
        pdegs.add(sum(p * (a - b) for p, a, b in zip(P.p, m.nu, m.mu)))
    rdeg = rdegs.pop() if len(rdegs) == 1 else None
    pdeg = pdegs.pop() if len(pdegs) == 1 else None
    strongly_polar = rdeg is not None and pdeg is not None
    return DegreeReport(
        rdeg=rdeg,
        pdeg=pdeg,
        strongly_polar=strongly_polar,
        polar_positive=pdeg is not None and pdeg > 0,
    )


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def face_to_json(face: FaceDescriptor) -> dict:
    return {
        "I": sorted(face.noncompact_directions),
        "generators": [list(g) for g in sorted(face.generators)],
        "compact_part": [list(g) for g in sorted(face.compact_part)],
        "witness": list(face.weight_witness.p),
        "d": face.d_value,
        "dim": face.dim,
        "kind": face.kind.value,
    }


def newton_report(f: MixedPoly) -> dict:
    """Stable JSON-ready summary of the Newton boundary combinatorics."""
    support, vertices, convenient = support_vertices(f)
    essential = essential_noncompact_faces(f, include_inessential=True)
    report = {
        "vertices": [list(v) for v in sorted(vertices)],
        "support": [list(v) for v in sorted(support)],
        "essential_faces": [
            face_to_json(fc)
            for fc in essential
            if fc.kind is FaceKind.NONCOMPACT_ESSENTIAL
        ],
        "inessential_faces": [
            face_to_json(fc)
            for fc in essential
            if fc.kind is FaceKind.NONCOMPACT_INESSENTIAL
        ],
        "convenient": convenient,
    }
    return report

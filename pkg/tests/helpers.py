"""Shared test utilities: random inputs and independent brute-force oracles.

The oracles here deliberately avoid the package's own geometry code so that
agreement is evidence, not tautology.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

from mixedmilnor.poly import GaussianRational, MixedMonomial, MixedPoly


def random_gaussian(rng, max_num=4, max_den=3, allow_zero=False):
    while True:
        re = Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))
        im = Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))
        c = GaussianRational(re, im)
        if allow_zero or c:
            return c


def random_mixed_poly(rng, n=None, max_terms=5, max_exp=3, holomorphic=False):
    if n is None:
        n = int(rng.integers(1, 4))
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        nu = tuple(int(rng.integers(0, max_exp + 1)) for _ in range(n))
        if holomorphic:
            mu = (0,) * n
        else:
            mu = tuple(int(rng.integers(0, max_exp + 1)) for _ in range(n))
        terms[MixedMonomial(nu, mu)] = random_gaussian(rng)
    poly = MixedPoly(n, terms)
    if poly.is_zero():
        poly = MixedPoly.monomial(n, {1: 1}, {})
    return poly


def random_real_valued_poly(rng, n=None, max_terms=3, max_exp=2):
    base = random_mixed_poly(rng, n=n, max_terms=max_terms, max_exp=max_exp)
    return base + base.conjugate()


def random_point(rng, n, scale=1.0, min_mag=0.3):
    mags = rng.uniform(min_mag, scale, size=n)
    phases = rng.uniform(0, 2 * np.pi, size=n)
    return mags * np.exp(1j * phases)


# ---------------------------------------------------------------------------
# Independent Newton-vertex oracle
# ---------------------------------------------------------------------------


def _solve_exact(rows, rhs):
    """Solve a square rational system; None when singular."""
    size = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


def _dominated_cone_member(xi, others, n):
    """Exact feasibility of xi in conv(others) + R_{>=0}^n by basis search.

    Variables are the convex weights plus n slack coordinates; a feasible
    basic solution exists iff the system lambda >= 0, slack >= 0,
    sum(lambda) = 1, sum(lambda * other) + slack = xi has a solution.
    """
    others = list(others)
    m = len(others)
    if m == 0:
        return False
    ncols = m + n
    nrows = n + 1
    columns = []
    for k, pt in enumerate(others):
        columns.append([Fraction(pt[i]) for i in range(n)] + [Fraction(1)])
    for i in range(n):
        col = [Fraction(0)] * nrows
        col[i] = Fraction(1)
        columns.append(col)
    rhs = [Fraction(xi[i]) for i in range(n)] + [Fraction(1)]
    for basis in combinations(range(ncols), nrows):
        rows = [[columns[c][r] for c in basis] for r in range(nrows)]
        sol = _solve_exact(rows, rhs)
        if sol is None:
            continue
        if all(x >= 0 for x in sol):
            return True
    return False


def newton_vertices_oracle(support, n):
    """Brute-force vertices of conv(support) + R_{>=0}^n.

    Pairwise dominance prunes the easy cases; survivors get the exact
    convex-cone membership test against the other points.
    """
    support = sorted(set(tuple(p) for p in support))
    vertices = set()
    for xi in support:
        others = [p for p in support if p != xi]
        if any(all(q[i] <= xi[i] for i in range(n)) for q in others):
            # a single dominating point already writes xi as point + orthant
            continue
        if not _dominated_cone_member(xi, others, n):
            vertices.add(xi)
    return vertices


def hull_2d_oracle(points):
    """Monotone-chain hull, written here independently of the library."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lo, hi = [], []
    for p in pts:
        while len(lo) >= 2 and turn(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    for p in reversed(pts):
        while len(hi) >= 2 and turn(hi[-2], hi[-1], p) <= 0:
            hi.pop()
        hi.append(p)
    return lo[:-1] + hi[:-1]

"""Limit tangents along monomial arcs and numeric fibration probes.

An arc is a curve z_j(t) = b_j t^{p_j} + (higher terms) with exact complex
coefficients and a real positive parameter t.  Substituting an arc into the
antiholomorphic gradients of the real and imaginary parts of f gives two
covector power series v_g(t), v_h(t); their normalized limits as t -> 0 span
the limit of the tangent planes of the fibers of f along the arc.  When the
leading coefficients of the two series are real-dependent the naive limits
collapse, and the limit plane is recovered by iterated elimination
v_h <- v_h - lambda t^(r'-r) v_g, which preserves the real span at every t
and terminates with a real-independent leading pair.

The numeric probes (fiber/sphere transversality, argument coverage of small
neighborhoods of points of the zero set) are sampling estimates, separate
from the exact series algebra.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .degeneracy import criticality_residual, real_span_residual
from .errors import (
    AllValuesZeroError,
    ArcInsideVarietyError,
    PolySyntaxError,
    SingularFiberError,
    TruncationExhaustedError,
    TruncationOverflowError,
)
from .poly import GR_ZERO, GaussianRational, MixedPoly

__all__ = [
    "Arc",
    "parse_arc",
    "expand_arc",
    "limit_tangent",
    "af_test_arc",
    "LimitTangentResult",
    "AfArcVerdict",
    "transversality_residual",
    "transversality_scan",
    "boundary_openness_probe",
]


# ---------------------------------------------------------------------------
# Exact power series in t (dict exponent -> GaussianRational)
# ---------------------------------------------------------------------------


def _s_trim(s):
    return {k: c for k, c in s.items() if c}


def _s_add(a, b):
    out = dict(a)
    for k, c in b.items():
        acc = out.get(k, GR_ZERO) + c
        if acc:
            out[k] = acc
        elif k in out:
            del out[k]
    return out


def _s_scale(a, c, shift=0):
    if not c:
        return {}
    return {k + shift: x * c for k, x in a.items()}


def _s_mul(a, b, trunc=None):
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            if trunc is not None and k > trunc:
                continue
            acc = out.get(k, GR_ZERO) + c1 * c2
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
    return out


def _s_pow(a, e, trunc=None):
    out = {0: GaussianRational.of(1)}
    for _ in range(e):
        out = _s_mul(out, a, trunc)
    return out


def _s_conj(a):
    return {k: c.conjugate() for k, c in a.items()}


def _s_order(a):
    return min(a) if a else None


def series_to_text(s) -> str:
    if not s:
        return "0"
    parts = []
    for k in sorted(s):
        c = str(s[k])
        if k == 0:
            parts.append(c)
        else:
            tk = "t" if k == 1 else f"t^{k}"
            parts.append(tk if c == "1" else f"{c}*{tk}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Arcs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    """Monomial curve jet z_j(t) = sum of coeff * t^exponent per variable.

    jets is a tuple (one entry per variable) of tuples of (exponent, coeff)
    pairs with strictly increasing nonnegative integer exponents and exact
    nonzero coefficients; an empty tuple is the zero coordinate.  Rational
    exponents are normalized away at construction by reparameterizing
    t -> t^(1/q) with q the common denominator.

    truncation_order of None means the jets are exact polynomial curves;
    otherwise series coefficients beyond that order are treated as unknown.
    """

    jets: tuple
    truncation_order: int | None = None

    def __post_init__(self):
        jets = []
        denom = 1
        for jet in self.jets:
            for exp, _ in jet:
                q = Fraction(exp).denominator
                denom = denom * q // math.gcd(denom, q)
        for jet in self.jets:
            scaled = []
            last = -1
            for exp, coeff in jet:
                e = Fraction(exp) * denom
                if e.denominator != 1 or e < 0:
                    raise ValueError("arc exponents must be nonnegative rationals")
                e = int(e)
                if e <= last:
                    raise ValueError("arc exponents must be strictly increasing")
                last = e
                if not isinstance(coeff, GaussianRational):
                    coeff = GaussianRational.of(coeff)
                if not coeff:
                    raise ValueError("arc coefficients must be nonzero")
                scaled.append((e, coeff))
            jets.append(tuple(scaled))
        object.__setattr__(self, "jets", tuple(jets))
        if self.truncation_order is not None and denom != 1:
            object.__setattr__(self, "truncation_order", self.truncation_order * denom)

    @property
    def n(self) -> int:
        return len(self.jets)

    def is_zero(self) -> bool:
        return all(not jet for jet in self.jets)

    def leading_exponents(self):
        """p_j per variable; None for identically zero coordinates."""
        return tuple(jet[0][0] if jet else None for jet in self.jets)

    def coordinate_series(self, j: int):
        """Series of z_j(t), 1-based j."""
        return {e: c for e, c in self.jets[j - 1]}

    def evaluate(self, t: float):
        """Float point z(t) for a real positive parameter value."""
        return np.array(
            [
                sum(complex(c) * t**e for e, c in jet) if jet else 0.0
                for jet in self.jets
            ],
            dtype=np.complex128,
        )

    def to_text(self) -> str:
        chunks = []
        for idx, jet in enumerate(self.jets):
            rhs = series_to_text({e: c for e, c in jet})
            chunks.append(f"z{idx + 1} = {rhs}")
        return "; ".join(chunks)


_ARC_TOKEN = re.compile(
    r"\s*(?:(?P<var>z(?P<vidx>\d+))|(?P<t>t)|(?P<nat>\d+)|(?P<imag>i)"
    r"|(?P<op>[=+\-*/^();]))"
)


def _tokenize_arc(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _ARC_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolySyntaxError(pos, "an arc token", text)
        for kind in ("var", "t", "nat", "imag", "op"):
            if m.group(kind):
                if kind == "var":
                    tokens.append(("var", int(m.group("vidx")), m.start()))
                elif kind == "op":
                    tokens.append((m.group("op"), None, m.start()))
                else:
                    val = int(m.group("nat")) if kind == "nat" else None
                    tokens.append((kind, val, m.start()))
                break
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ArcParser:
    def __init__(self, tokens, text):
        self.toks = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise PolySyntaxError(tok[2], f"'{kind}'", self.text)
        return tok

    def parse(self):
        assignments = {}
        while self.peek()[0] != "end":
            tok = self.expect("var")
            var = tok[1]
            self.expect("=")
            assignments[var] = self.jet_expr()
            if self.peek()[0] == ";":
                self.take()
        return assignments

    def jet_expr(self):
        terms = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            exp, coeff = self.jet_term()
            if sign < 0:
                coeff = -coeff
            acc = terms.get(exp, GR_ZERO) + coeff
            if acc:
                terms[exp] = acc
            elif exp in terms:
                del terms[exp]
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
                continue
            return terms

    def jet_term(self):
        coeff = None
        if self.peek()[0] in ("nat", "imag", "("):
            coeff = self.coefficient()
            if self.peek()[0] == "*":
                self.take()
        if self.peek()[0] == "t":
            self.take()
            exp = Fraction(1)
            if self.peek()[0] == "^":
                self.take()
                exp = self.exponent()
            return exp, coeff if coeff is not None else GaussianRational.of(1)
        if coeff is None:
            tok = self.peek()
            raise PolySyntaxError(tok[2], "a coefficient or 't'", self.text)
        return Fraction(0), coeff

    def exponent(self):
        if self.peek()[0] == "(":
            self.take()
            num = self.expect("nat")[1]
            self.expect("/")
            den = self.expect("nat")[1]
            self.expect(")")
            return Fraction(num, den)
        num = self.expect("nat")[1]
        if self.peek()[0] == "/":
            self.take()
            den = self.expect("nat")[1]
            return Fraction(num, den)
        return Fraction(num)

    def coefficient(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "nat":
            num = Fraction(value)
            if self.peek()[0] == "/":
                self.take()
                num /= self.expect("nat")[1]
            if self.peek()[0] == "imag":
                self.take()
                return GaussianRational(Fraction(0), num)
            return GaussianRational(num, Fraction(0))
        if kind == "imag":
            return GaussianRational(Fraction(0), Fraction(1))
        if kind == "(":
            # signed complex literal, e.g. (1+2i) or (-1/2)
            total = GaussianRational(Fraction(0), Fraction(0))
            sign = 1
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
            while True:
                part = self.coefficient()
                if sign < 0:
                    part = -part
                total = total + part
                if self.peek()[0] in ("+", "-"):
                    sign = -1 if self.take()[0] == "-" else 1
                    continue
                break
            self.expect(")")
            return total
        raise PolySyntaxError(pos, "a coefficient", self.text)


def parse_arc(text: str, n: int | None = None, truncation_order=None) -> Arc:
    """Parse arc text like "z1 = (1+0i); z2 = t; z3 = (2+0i)*t^3".

    Unassigned variables up to n are zero coordinates; constants are jets
    with exponent 0.  Exponents may be rationals (t^(3/2)); they are
    normalized by a common reparameterization.
    """
    assignments = _ArcParser(_tokenize_arc(text), text).parse()
    if not assignments and n is None:
        raise PolySyntaxError(0, "at least one assignment", text)
    size = max(max(assignments, default=0), n or 0)
    jets = []
    for j in range(1, size + 1):
        series = assignments.get(j, {})
        jets.append(tuple(sorted(series.items())))
    return Arc(tuple(jets), truncation_order=truncation_order)


# ---------------------------------------------------------------------------
# Exact expansion along an arc
# ---------------------------------------------------------------------------


def _substitute(poly: MixedPoly, arc: Arc, trunc=None):
    """Exact series of poly(z(t), conj z(t)); t is real so conjugating a jet
    conjugates its coefficients only."""
    jets = [arc.coordinate_series(j) for j in range(1, arc.n + 1)]
    out = {}
    for mono, coeff in poly.terms.items():
        term = {0: coeff}
        for j in range(poly.n):
            a, b = mono.nu[j], mono.mu[j]
            if a:
                if not jets[j]:
                    term = {}
                    break
                term = _s_mul(term, _s_pow(jets[j], a, trunc), trunc)
            if b:
                if not jets[j]:
                    term = {}
                    break
                term = _s_mul(term, _s_pow(_s_conj(jets[j]), b, trunc), trunc)
            if not term:
                break
        out = _s_add(out, term)
    return _s_trim(out)


def expand_arc(f: MixedPoly, arc: Arc, order: int | None = None):
    """Series of f along the arc, exact up to the requested order.

    Returns a dict {exponent: GaussianRational}.  With order=None and an
    exact (untruncated) arc the full polynomial series is returned.
    """
    if arc.n != f.n:
        raise ValueError("arc and polynomial variable counts differ")
    trunc = arc.truncation_order
    if order is not None and trunc is not None and order > trunc:
        raise TruncationOverflowError(
            f"requested order {order} exceeds arc truncation {trunc}"
        )
    cap = order if trunc is None else min(x for x in (order, trunc) if x is not None)
    series = _substitute(f, arc, cap)
    if cap is not None:
        series = {k: c for k, c in series.items() if k <= cap}
    return series


# ---------------------------------------------------------------------------
# Limit tangent computation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LimitTangentResult:
    """Normalized limit covector pair along an arc.

    The limit tangent plane is the set of v with Re<v, covector_g> = 0 and
    Re<v, covector_h> = 0.  leading_g/leading_h are the exact leading
    coefficient vectors before float normalization; reduction_steps records
    each elimination (lambda, exponent shift), and swapped whether the two
    series were interchanged to normalize their leading data.
    """

    covector_g: np.ndarray
    covector_h: np.ndarray
    leading_g: tuple
    leading_h: tuple
    orders: tuple
    reduction_steps: tuple
    swapped: bool
    independent: bool


@dataclass(frozen=True)
class AfArcVerdict:
    """Whether the limit tangent along one arc contains C^I.

    contains_CI is None when the covector pair collapsed (the Grassmann
    limit is not resolved by this arc), in which case the test is
    inconclusive rather than failed.
    """

    contains_CI: bool | None
    I: frozenset
    limit: LimitTangentResult


def _vector_order_index(vec):
    """(order, leading 1-based index) of a vector of series; None if zero."""
    best = None
    for idx, s in enumerate(vec):
        o = _s_order(s)
        if o is None:
            continue
        if best is None or o < best[0]:
            best = (o, idx + 1)
    return best


def _leading_vector(vec, order):
    return tuple(s.get(order, GR_ZERO) for s in vec)


def _real_ratio(b, a):
    """b/a as an exact real number, or None when not real (or a == 0)."""
    if not a:
        return None
    ratio = b / a
    if ratio.im != 0:
        return None
    return ratio.re


def _real_dependent(V, W):
    """Exact test for real-linear dependence of two complex vectors."""
    if all(not c for c in V) or all(not c for c in W):
        return True
    lam = None
    for a, b in zip(V, W):
        if not a:
            if b:
                return False
            continue
        r = _real_ratio(b, a)
        if r is None:
            return False
        if lam is None:
            lam = r
        elif lam != r:
            return False
    return True


def _normalize_covector(V):
    """Float unit vector from an exact leading vector, sign-canonical."""
    v = np.array([complex(c) for c in V], dtype=np.complex128)
    norm = np.linalg.norm(v)
    if norm == 0:
        return v
    v = v / norm
    for x in v:
        if abs(x) > 1e-12:
            if (x.real, x.imag) < (0.0, 0.0) or (x.real == 0.0 and x.imag < 0.0):
                v = -v
            break
    return v


def limit_tangent(f: MixedPoly, arc: Arc, max_steps: int = 10_000) -> LimitTangentResult:
    """Limit of the fiber tangent planes of f along the arc as t -> 0.

    Expands both gradient covector series exactly, orients them so the
    (leading index, order) data of the first precedes the second, and
    eliminates real-dependent leading coefficients until the pair is
    real-independent.  The real span of the pair is preserved at every
    step, so the limit plane is exact.
    """
    if arc.is_zero():
        raise ValueError("arc is identically zero")
    if arc.n != f.n:
        raise ValueError("arc and polynomial variable counts differ")
    fseries = _substitute(f, arc, arc.truncation_order)
    if not fseries:
        raise ArcInsideVarietyError("f vanishes identically along the arc")
    g, h = f.real_imag_parts()
    trunc = arc.truncation_order
    vg = [_substitute(g.wirtinger(j, "zbar"), arc, trunc) for j in range(1, f.n + 1)]
    vh = [_substitute(h.wirtinger(j, "zbar"), arc, trunc) for j in range(1, f.n + 1)]

    swapped = False
    lead_g = _vector_order_index(vg)
    lead_h = _vector_order_index(vh)
    if lead_g is None or lead_h is None:
        # one series vanishes identically; the pair collapses
        order_g = lead_g[0] if lead_g else 0
        order_h = lead_h[0] if lead_h else 0
        Vg = _leading_vector(vg, order_g) if lead_g else (GR_ZERO,) * f.n
        Vh = _leading_vector(vh, order_h) if lead_h else (GR_ZERO,) * f.n
        return LimitTangentResult(
            covector_g=_normalize_covector(Vg),
            covector_h=_normalize_covector(Vh),
            leading_g=Vg,
            leading_h=Vh,
            orders=(order_g, order_h),
            reduction_steps=(),
            swapped=False,
            independent=False,
        )
    if (lead_h[1], lead_h[0]) < (lead_g[1], lead_g[0]):
        # interchange, as if analyzing i*f: (g, h) -> (-h, g)
        vg, vh = [_s_scale(s, -GaussianRational.of(1)) for s in vh], vg
        swapped = True

    steps = []
    while True:
        lead_g = _vector_order_index(vg)
        lead_h = _vector_order_index(vh)
        if lead_h is None:
            if trunc is not None:
                raise TruncationExhaustedError(
                    "second covector vanished to truncation order"
                )
            # exact collapse: spans are real-dependent along the whole arc
            r, s = lead_g
            Vg = _leading_vector(vg, r)
            return LimitTangentResult(
                covector_g=_normalize_covector(Vg),
                covector_h=_normalize_covector((GR_ZERO,) * f.n),
                leading_g=Vg,
                leading_h=(GR_ZERO,) * f.n,
                orders=(r, r),
                reduction_steps=tuple(steps),
                swapped=swapped,
                independent=False,
            )
        r, s = lead_g
        rp, sp = lead_h
        if trunc is not None and rp > trunc:
            raise TruncationExhaustedError("reduction ran past the truncation order")
        if s != sp:
            break
        a = vg[s - 1].get(r, GR_ZERO)
        b = vh[s - 1].get(rp, GR_ZERO)
        lam = _real_ratio(b, a)
        if lam is None:
            break
        shift = rp - r
        coeff = GaussianRational(lam, Fraction(0))
        steps.append((lam, shift))
        vh = [_s_add(vh[i], _s_scale(vg[i], -coeff, shift)) for i in range(f.n)]
        if len(steps) > max_steps:
            raise TruncationExhaustedError("reduction did not terminate")

    r, s = _vector_order_index(vg)
    rp, sp = _vector_order_index(vh)
    Vg = _leading_vector(vg, r)
    Vh = _leading_vector(vh, rp)
    independent = not _real_dependent(Vg, Vh)
    return LimitTangentResult(
        covector_g=_normalize_covector(Vg),
        covector_h=_normalize_covector(Vh),
        leading_g=Vg,
        leading_h=Vh,
        orders=(r, rp),
        reduction_steps=tuple(steps),
        swapped=swapped,
        independent=independent,
    )


def af_test_arc(f: MixedPoly, arc: Arc, I) -> AfArcVerdict:
    """Whether the limit tangent along the arc contains the subspace C^I.

    The arc must limit into the open stratum of C^I: coordinates in I are
    nonzero constants, the others vanish at t = 0.  Containment is decided
    exactly: C^I lies in the limit plane iff both exact leading covectors
    vanish on every I coordinate.
    """
    I = frozenset(I)
    exps = arc.leading_exponents()
    for i in range(1, arc.n + 1):
        jet = arc.jets[i - 1]
        if i in I:
            if len(jet) != 1 or jet[0][0] != 0:
                raise ValueError(f"coordinate z{i} must be a nonzero constant")
        else:
            if jet and exps[i - 1] == 0:
                raise ValueError(f"coordinate z{i} must vanish at t = 0")
    limit = limit_tangent(f, arc)
    if not limit.independent:
        return AfArcVerdict(contains_CI=None, I=I, limit=limit)
    contains = all(
        not limit.leading_g[i - 1] and not limit.leading_h[i - 1] for i in sorted(I)
    )
    return AfArcVerdict(contains_CI=contains, I=I, limit=limit)


# ---------------------------------------------------------------------------
# Transversality of nearby fibers
# ---------------------------------------------------------------------------

REGULARITY_THRESHOLD = 1e-12


def transversality_residual(f: MixedPoly, p) -> float:
    """Normalized distance of p from the tangent span of its fiber.

    Zero exactly when the sphere through p is tangent to the fiber of f at
    p (the radius vector lies in span_R of the two gradient covectors).
    Raises SingularFiberError at points that are numerically mixed-critical.
    """
    p = np.asarray(p, dtype=np.complex128)
    if criticality_residual(f, p) <= REGULARITY_THRESHOLD:
        raise SingularFiberError("point is numerically a mixed critical point")
    g, h = f.real_imag_parts()
    bg = g.gradients(p).d_zbar
    bh = h.gradients(p).d_zbar
    norm = np.linalg.norm(p)
    if norm == 0:
        raise ValueError("transversality residual is undefined at the origin")
    return real_span_residual(p, bg, bh) / norm


@dataclass(frozen=True)
class TransversalityReport:
    samples_drawn: int
    accepted: int
    skipped_singular: int
    min_residual: float
    mean_residual: float


def transversality_scan(
    f: MixedPoly,
    radius: float = 1.0,
    delta: float = 1e-3,
    samples: int = 10_000,
    seed: int = 0,
    max_draws: int = 40_000_000,
) -> TransversalityReport:
    """Minimum fiber/sphere transversality residual over near-zero fibers.

    Draws uniform points on the radius sphere, keeps those with |f| <= delta
    (rejection sampling), and reports residual statistics over the accepted
    points, skipping numerically singular ones.
    """
    rng = np.random.default_rng(seed)
    accepted = 0
    drawn = 0
    skipped = 0
    min_res = math.inf
    total = 0.0
    chunk = 200_000
    while accepted < samples and drawn < max_draws:
        block = rng.normal(size=(chunk, 2 * f.n))
        drawn += chunk
        pts = block[:, : f.n] + 1j * block[:, f.n :]
        norms = np.linalg.norm(pts, axis=1)
        pts = pts * (radius / norms)[:, None]
        vals = np.abs(f.evaluate_many(pts))
        keep = pts[vals <= delta]
        for p in keep:
            if accepted >= samples:
                break
            try:
                res = transversality_residual(f, p)
            except SingularFiberError:
                skipped += 1
                continue
            accepted += 1
            total += res
            if res < min_res:
                min_res = res
    return TransversalityReport(
        samples_drawn=drawn,
        accepted=accepted,
        skipped_singular=skipped,
        min_residual=float(min_res),
        mean_residual=float(total / accepted) if accepted else math.nan,
    )


# ---------------------------------------------------------------------------
# Boundary openness probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OpennessReport:
    arg_coverage: float
    sector_halfwidth: float | None
    nonzero_samples: int


def boundary_openness_probe(
    f: MixedPoly,
    p,
    epsilon: float,
    samples: int = 20_000,
    seed: int = 0,
    bins: int = 256,
) -> OpennessReport:
    """Fraction of the argument circle covered by f over an epsilon-polydisc.

    Samples the polydisc around p (a point of the zero set), collects
    arg f over the nonzero values into bins of width 2 pi / bins, and
    reports the covered fraction.  When the coverage is not full, the
    half-width of the smallest sector containing all observed arguments is
    estimated from the raw values (largest circular gap).
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    p = np.asarray(p, dtype=np.complex128)
    rng = np.random.default_rng(seed)
    radii = epsilon * np.sqrt(rng.uniform(size=(samples, f.n)))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(samples, f.n))
    pts = p[None, :] + radii * np.exp(1j * phases)
    vals = f.evaluate_many(pts)
    mags = np.abs(vals)
    scale = float(np.max(mags))
    if scale == 0.0:
        raise AllValuesZeroError("f vanished on every sample of the polydisc")
    nonzero = vals[mags > 1e-14 * scale]
    args = np.mod(np.angle(nonzero), 2.0 * np.pi)
    hist = np.bincount((args / (2.0 * np.pi / bins)).astype(int) % bins, minlength=bins)
    coverage = float(np.count_nonzero(hist)) / bins
    halfwidth = None
    if coverage < 1.0:
        ordered = np.sort(args)
        gaps = np.diff(ordered)
        wrap = ordered[0] + 2.0 * np.pi - ordered[-1]
        largest = max(float(np.max(gaps)) if gaps.size else 0.0, float(wrap))
        halfwidth = (2.0 * np.pi - largest) / 2.0
    return OpennessReport(
        arg_coverage=coverage,
        sector_halfwidth=halfwidth,
        nonzero_samples=int(nonzero.size),
    )


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def limit_to_json(result: LimitTangentResult) -> dict:
    return {
        "covector_g": [[float(x.real), float(x.imag)] for x in result.covector_g],
        "covector_h": [[float(x.real), float(x.imag)] for x in result.covector_h],
        "orders": list(result.orders),
        "reduction_steps": [
            {"lambda": str(lam), "shift": shift} for lam, shift in result.reduction_steps
        ],
        "swapped": result.swapped,
        "independent": result.independent,
    }


def af_verdict_to_json(verdict: AfArcVerdict) -> dict:
    return {
        "I": sorted(verdict.I),
        "contains_CI": verdict.contains_CI,
        "limit": limit_to_json(verdict.limit),
    }

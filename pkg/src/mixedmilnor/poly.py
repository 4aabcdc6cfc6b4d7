"""Exact mixed polynomials and their Wirtinger calculus.

A mixed polynomial is a finite sum  sum_{nu,mu} c_{nu mu} z^nu zbar^mu  in the
variables z_1..z_n and their complex conjugates, with Gaussian-rational
coefficients.  Viewed as a map C^n -> C it is real-analytic but usually not
holomorphic; the formal partials treating z_j and zbar_j as independent
variables (Wirtinger derivatives) are the basic calculus here.

All combinatorial decisions downstream (vanishing of restrictions, face data,
sign-definiteness of tameness witnesses) are exact, which is why coefficients
are Gaussian rationals and never floats.  Floats enter only through
:meth:`MixedPoly.evaluate` and :meth:`MixedPoly.gradients`.

Values are immutable after construction and every operation is a pure
function, so everything here is safe to use concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import OddModulusExponentError, PolySyntaxError

__all__ = [
    "GaussianRational",
    "MixedMonomial",
    "MixedPoly",
    "GradientPair",
    "parse_poly",
]


@dataclass(frozen=True)
class GaussianRational:
    """Gaussian rational a + bi with exact Fraction components.

    ``Fraction`` keeps numerators and denominators in lowest terms with a
    positive denominator, so structural equality of the two components is
    equality of canonical forms.
    """

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return format_gaussian(self)


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))
GR_HALF = GaussianRational(Fraction(1, 2), Fraction(0))
# -i/2, the factor turning f - conj(f) into the imaginary part
GR_NEG_HALF_I = GaussianRational(Fraction(0), Fraction(-1, 2))


def format_gaussian(c: GaussianRational) -> str:
    """Render a coefficient in the grammar the parser accepts."""
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}i"
    im = "i" if c.im == 1 else ("-i" if c.im == -1 else f"{c.im}i")
    sign = "+" if c.im > 0 else ""
    return f"({c.re}{sign}{im})"


@dataclass(frozen=True)
class MixedMonomial:
    """Exponent data of one term: z^nu zbar^mu.

    ``nu`` and ``mu`` have equal length n >= 1; the support point of the
    monomial is the componentwise sum nu + mu.
    """

    nu: tuple
    mu: tuple

    def __post_init__(self):
        if len(self.nu) != len(self.mu) or len(self.nu) < 1:
            raise ValueError("nu and mu must have equal positive length")

    @property
    def n(self) -> int:
        return len(self.nu)

    def support_point(self) -> tuple:
        return tuple(a + b for a, b in zip(self.nu, self.mu))

    def conjugate(self) -> "MixedMonomial":
        return MixedMonomial(self.mu, self.nu)

    def total_degree(self) -> int:
        return sum(self.nu) + sum(self.mu)


class MixedPoly:
    """Immutable mixed polynomial with exact coefficients.

    The term map never stores a zero coefficient and duplicate (nu, mu)
    keys are merged on construction, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("n", "terms", "_eval_cache", "_wirt_cache")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        merged = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, MixedMonomial):
                mono = MixedMonomial(tuple(mono[0]), tuple(mono[1]))
            if mono.n != n:
                raise ValueError("monomial arity does not match n")
            acc = merged.get(mono, GR_ZERO) + coeff
            if acc:
                merged[mono] = acc
            elif mono in merged:
                del merged[mono]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", merged)
        object.__setattr__(self, "_eval_cache", None)
        object.__setattr__(self, "_wirt_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("MixedPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "MixedPoly":
        return MixedPoly(n, {})

    @staticmethod
    def constant(n: int, c) -> "MixedPoly":
        c = c if isinstance(c, GaussianRational) else GaussianRational.of(c)
        zero = (0,) * n
        return MixedPoly(n, {MixedMonomial(zero, zero): c})

    @staticmethod
    def variable(n: int, j: int) -> "MixedPoly":
        """The polynomial z_j (1-based j)."""
        return MixedPoly.monomial(n, {j: 1}, {})

    @staticmethod
    def conj_variable(n: int, j: int) -> "MixedPoly":
        """The polynomial zbar_j (1-based j)."""
        return MixedPoly.monomial(n, {}, {j: 1})

    @staticmethod
    def monomial(n: int, nu, mu, coeff=GR_ONE) -> "MixedPoly":
        """Single term c * z^nu zbar^mu; nu/mu are dicts {1-based j: exp} or tuples."""
        if isinstance(nu, dict):
            nu = tuple(nu.get(j + 1, 0) for j in range(n))
        if isinstance(mu, dict):
            mu = tuple(mu.get(j + 1, 0) for j in range(n))
        coeff = coeff if isinstance(coeff, GaussianRational) else GaussianRational.of(coeff)
        return MixedPoly(n, {MixedMonomial(tuple(nu), tuple(mu)): coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, GR_ZERO) + coeff
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        return MixedPoly(self.n, out)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return MixedPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = other if isinstance(other, GaussianRational) else GaussianRational.of(other)
            if not c:
                return MixedPoly.zero(self.n)
            return MixedPoly(self.n, {m: k * c for m, k in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = MixedMonomial(
                    tuple(a + b for a, b in zip(m1.nu, m2.nu)),
                    tuple(a + b for a, b in zip(m1.mu, m2.mu)),
                )
                acc = out.get(mono, GR_ZERO) + c1 * c2
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
        return MixedPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not representable")
        out = MixedPoly.constant(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def _coerce(self, other) -> "MixedPoly":
        if isinstance(other, MixedPoly):
            if other.n != self.n:
                raise ValueError("variable counts differ")
            return other
        return MixedPoly.constant(self.n, other)

    def __eq__(self, other):
        if not isinstance(other, MixedPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------

    def support(self) -> frozenset:
        """Set of support points nu + mu over all terms."""
        return frozenset(m.support_point() for m in self.terms)

    def is_real_valued(self) -> bool:
        return self.conjugate() == self

    def is_holomorphic(self) -> bool:
        return all(all(e == 0 for e in m.mu) for m in self.terms)

    def total_degree(self) -> int:
        return max((m.total_degree() for m in self.terms), default=0)

    def conjugate(self) -> "MixedPoly":
        """Complex conjugate: swaps nu <-> mu and conjugates coefficients."""
        return MixedPoly(
            self.n, {m.conjugate(): c.conjugate() for m, c in self.terms.items()}
        )

    def wirtinger(self, j: int, kind: str = "z") -> "MixedPoly":
        """Formal partial d/dz_j (kind='z') or d/dzbar_j (kind='zbar'), 1-based j."""
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range 1..{self.n}")
        if kind not in ("z", "zbar"):
            raise ValueError("kind must be 'z' or 'zbar'")
        key = (j, kind)
        cached = self._wirt_cache.get(key)
        if cached is not None:
            return cached
        out = {}
        idx = j - 1
        for m, c in self.terms.items():
            exps = m.nu if kind == "z" else m.mu
            e = exps[idx]
            if e == 0:
                continue
            new = list(exps)
            new[idx] = e - 1
            if kind == "z":
                mono = MixedMonomial(tuple(new), m.mu)
            else:
                mono = MixedMonomial(m.nu, tuple(new))
            acc = out.get(mono, GR_ZERO) + c * GaussianRational.of(e)
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        result = MixedPoly(self.n, out)
        self._wirt_cache[key] = result
        return result

    def grad_z(self):
        """Tuple of the n holomorphic partials as polynomials."""
        return tuple(self.wirtinger(j, "z") for j in range(1, self.n + 1))

    def grad_zbar(self):
        """Tuple of the n antiholomorphic partials as polynomials."""
        return tuple(self.wirtinger(j, "zbar") for j in range(1, self.n + 1))

    def real_imag_parts(self):
        """Exact split f = g + i h with g, h real-valued.

        g = (f + conj f)/2 and h = (f - conj f)/(2i); the reconstruction
        g + i*h equals f exactly.
        """
        fbar = self.conjugate()
        g = (self + fbar) * GR_HALF
        h = (self - fbar) * GR_NEG_HALF_I
        return g, h

    def restrict(self, I) -> "MixedPoly":
        """Set every variable outside I (1-based set) to zero.

        Keeps exactly the terms with nu_k = mu_k = 0 for all k not in I.
        The ambient variable count n is preserved so face data of nested
        restrictions stay comparable.
        """
        keep = set(I)
        out = {}
        for m, c in self.terms.items():
            if all(
                m.nu[k] == 0 and m.mu[k] == 0
                for k in range(self.n)
                if (k + 1) not in keep
            ):
                out[m] = c
        return MixedPoly(self.n, out)

    # -- numeric evaluation --------------------------------------------------

    def _arrays(self):
        cache = self._eval_cache
        if cache is None:
            m = len(self.terms)
            nu = np.zeros((m, self.n), dtype=np.int64)
            mu = np.zeros((m, self.n), dtype=np.int64)
            coeff = np.zeros(m, dtype=np.complex128)
            for i, (mono, c) in enumerate(self.terms.items()):
                nu[i] = mono.nu
                mu[i] = mono.mu
                coeff[i] = complex(c)
            cache = (nu, mu, coeff)
            object.__setattr__(self, "_eval_cache", cache)
        return cache

    def evaluate(self, p) -> complex:
        """Value at a point p in C^n (floats)."""
        if not self.terms:
            return 0.0 + 0.0j
        nu, mu, coeff = self._arrays()
        p = np.asarray(p, dtype=np.complex128)
        mono = np.prod(p[None, :] ** nu, axis=1) * np.prod(
            np.conj(p)[None, :] ** mu, axis=1
        )
        return complex(np.sum(coeff * mono))

    def evaluate_many(self, pts) -> np.ndarray:
        """Values at an (N, n) array of points, vectorized over N."""
        pts = np.asarray(pts, dtype=np.complex128)
        if not self.terms:
            return np.zeros(pts.shape[0], dtype=np.complex128)
        nu, mu, coeff = self._arrays()
        out = np.zeros(pts.shape[0], dtype=np.complex128)
        conj = np.conj(pts)
        for i in range(len(coeff)):
            term = np.full(pts.shape[0], coeff[i])
            for j in range(self.n):
                if nu[i, j]:
                    term = term * pts[:, j] ** nu[i, j]
                if mu[i, j]:
                    term = term * conj[:, j] ** mu[i, j]
            out += term
        return out

    def gradients(self, p) -> "GradientPair":
        """Both Wirtinger gradients at p, as a GradientPair of complex vectors."""
        d_z = np.array(
            [self.wirtinger(j, "z").evaluate(p) for j in range(1, self.n + 1)],
            dtype=np.complex128,
        )
        d_zbar = np.array(
            [self.wirtinger(j, "zbar").evaluate(p) for j in range(1, self.n + 1)],
            dtype=np.complex128,
        )
        return GradientPair(d_z, d_zbar)

    # -- printing ----------------------------------------------------------

    def _sorted_terms(self):
        def key(item):
            mono = item[0]
            xi = mono.support_point()
            return (sum(xi), xi, mono.nu)

        return sorted(self.terms.items(), key=key)

    def to_text(self) -> str:
        """Canonical text form; parse_poly(to_text()) round-trips exactly."""
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self._sorted_terms():
            factors = []
            for k in range(self.n):
                a, b = mono.nu[k], mono.mu[k]
                if a == b and a > 0:
                    factors.append(f"|z{k + 1}|^{2 * a}")
                else:
                    if a == 1:
                        factors.append(f"z{k + 1}")
                    elif a > 1:
                        factors.append(f"z{k + 1}^{a}")
                    if b == 1:
                        factors.append(f"zb{k + 1}")
                    elif b > 1:
                        factors.append(f"zb{k + 1}^{b}")
            body = "*".join(factors)
            if not body:
                text = format_gaussian(coeff)
            elif coeff == GR_ONE:
                text = body
            elif coeff == -GR_ONE:
                text = "-" + body
            else:
                text = f"{format_gaussian(coeff)}*{body}"
            parts.append(text)
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MixedPoly({self.to_text()!r}, n={self.n})"


@dataclass(frozen=True)
class GradientPair:
    """Holomorphic and antiholomorphic gradient values at one point.

    For a real-valued polynomial the two are related by componentwise
    conjugation: conj(d_z) == d_zbar.
    """

    d_z: np.ndarray
    d_zbar: np.ndarray


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<abs>\|z(?P<absidx>\d+)\|)"
    r"|(?P<zbar>zb(?P<zbaridx>\d+))"
    r"|(?P<z>z(?P<zidx>\d+))"
    r"|(?P<nat>\d+)"
    r"|(?P<imag>i)"
    r"|(?P<op>[+\-*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolySyntaxError(pos, "a coefficient, variable, or operator", text)
        if m.lastgroup is None and m.group().strip() == "":
            pos = m.end()
            continue
        for kind in ("abs", "zbar", "z", "nat", "imag", "op"):
            if m.group(kind):
                start = m.start(kind)
                if kind == "abs":
                    tokens.append(("abs", int(m.group("absidx")), start))
                elif kind == "zbar":
                    tokens.append(("zbar", int(m.group("zbaridx")), start))
                elif kind == "z":
                    tokens.append(("z", int(m.group("zidx")), start))
                elif kind == "nat":
                    tokens.append(("nat", int(m.group("nat")), start))
                elif kind == "imag":
                    tokens.append(("imag", None, start))
                else:
                    tokens.append((m.group("op"), None, start))
                break
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over the grammar:

    expr   := [sign] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := primary ('^' nat)?
    primary:= nat ('/' nat)? 'i'? | 'i' | z | zb | |z| | '(' expr ')'
    """

    def __init__(self, tokens, n, text):
        self.tokens = tokens
        self.i = 0
        self.n = n
        self.text = text

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise PolySyntaxError(tok[2], f"'{kind}'", self.text)
        return tok

    def parse(self):
        poly = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(tok[2], "end of input or an operator", self.text)
        return poly

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        poly = self.term()
        if sign < 0:
            poly = -poly
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            poly = poly - rhs if op == "-" else poly + rhs
        return poly

    _FACTOR_START = ("nat", "imag", "z", "zbar", "abs", "(")

    def term(self):
        poly = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                poly = poly * self.factor()
            elif kind in self._FACTOR_START:
                poly = poly * self.factor()
            else:
                return poly

    def factor(self):
        base = self.primary()
        exponent = None
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("nat")
            exponent = tok[1]
        if isinstance(base, tuple):
            # pending modulus factor |z_k|; needs an even exponent
            kind, k, pos = base
            e = 1 if exponent is None else exponent
            if e % 2 != 0:
                raise OddModulusExponentError(pos, e)
            half = e // 2
            return MixedPoly.monomial(self.n, {k: half}, {k: half})
        return base if exponent is None else base**exponent

    def primary(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "nat":
            num = Fraction(value)
            if self.peek()[0] == "/":
                self.take()
                den = self.expect("nat")[1]
                if den == 0:
                    raise PolySyntaxError(pos, "a nonzero denominator", self.text)
                num = num / den
            if self.peek()[0] == "imag":
                self.take()
                return MixedPoly.constant(self.n, GaussianRational(Fraction(0), num))
            return MixedPoly.constant(self.n, GaussianRational(num, Fraction(0)))
        if kind == "imag":
            return MixedPoly.constant(self.n, GR_I)
        if kind == "z":
            self._check_index(value, pos)
            return MixedPoly.variable(self.n, value)
        if kind == "zbar":
            self._check_index(value, pos)
            return MixedPoly.conj_variable(self.n, value)
        if kind == "abs":
            self._check_index(value, pos)
            return ("abs", value, pos)
        if kind == "(":
            poly = self.expr()
            self.expect(")")
            return poly
        raise PolySyntaxError(pos, "a coefficient, variable, or '('", self.text)

    def _check_index(self, k, pos):
        if not 1 <= k <= self.n:
            raise PolySyntaxError(pos, f"variable index in 1..{self.n}", self.text)


def _max_index(tokens):
    return max((t[1] for t in tokens if t[0] in ("z", "zbar", "abs")), default=0)


def parse_poly(text: str, n: int | None = None) -> MixedPoly:
    """Parse mixed-polynomial text into canonical form.

    Variables are z1, z2, ... with zb1 denoting the conjugate of z1 and
    |z1|^2 the squared modulus (even exponents only).  Whitespace is
    insignificant and '*' may be omitted.  When n is not given it is
    inferred as the largest variable index (1 for constant input).
    """
    tokens = _tokenize(text)
    seen = _max_index(tokens)
    if n is None:
        n = max(seen, 1)
    elif seen > n:
        raise PolySyntaxError(0, f"variable indices within 1..{n}", text)
    return _Parser(tokens, n, text).parse()

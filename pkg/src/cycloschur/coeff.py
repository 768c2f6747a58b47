"""Exact coefficient arithmetic.

Everything downstream computes over one commutative ring: sparse Laurent
polynomials in the variables q, Q_0, ..., Q_{r-1} with arbitrary-precision
rational coefficients.  The number of Q parameters is fixed per session by
``LaurentRing(r)``; the q = 1 regime is the same ring built with
``q_one=True``, which pins the q exponent to zero at construction time.
"""

from __future__ import annotations

from fractions import Fraction


class CoeffError(ArithmeticError):
    """Inexact division, missing specialization value, or similar misuse."""


class MultiLaurent:
    """Sparse Laurent polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples ``(e_q, e_Q0, ..., e_Q{r-1})`` to nonzero
    ``Fraction`` values.  Instances are immutable by convention: no method
    mutates ``terms`` after construction.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong arity (expected {nvars})")
            coeff = Fraction(coeff)
            if coeff:
                c = clean.get(exps)
                if c is None:
                    clean[exps] = coeff
                else:
                    c += coeff
                    if c:
                        clean[exps] = c
                    else:
                        del clean[exps]
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _make(cls, nvars, clean_terms):
        # internal fast path: clean_terms must already be zero-free
        self = object.__new__(cls)
        self.nvars = nvars
        self.terms = clean_terms
        return self

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiLaurent._make(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("mixed variable arities")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiLaurent._make(self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("mixed variable arities")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s += c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MultiLaurent._make(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MultiLaurent._make(self.nvars, {})
        return MultiLaurent._make(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiLaurent._make(self.nvars, {(0,) * self.nvars: Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sorted_terms(self):
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ["q"] + [f"Q{i}" for i in range(self.nvars - 1)]
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [f"{names[i]}^{e}" for i, e in enumerate(exps) if e]
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)


class LaurentRing:
    """Factory for MultiLaurent values over q, Q_0, ..., Q_{r-1}.

    With ``q_one=True`` every q power collapses to 1 at construction, so the
    whole engine runs at the q = 1 specialization without a parallel code
    path.
    """

    def __init__(self, r, q_one=False):
        if r < 1:
            raise ValueError("need r >= 1")
        self.r = r
        self.q_one = q_one
        self.nvars = r + 1
        self._zero_exp = (0,) * self.nvars
        self.zero = MultiLaurent._make(self.nvars, {})
        self.one = MultiLaurent._make(self.nvars, {self._zero_exp: Fraction(1)})
        self._qpow_cache = {}
        self._qint_cache = {}
        self._qfact_cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and self.r == other.r
            and self.q_one == other.q_one
        )

    def __hash__(self):
        return hash((self.r, self.q_one))

    def __repr__(self):
        return f"LaurentRing(r={self.r}, q_one={self.q_one})"

    def from_int(self, n):
        return self.one.scale(n)

    def from_fraction(self, a):
        return self.one.scale(a)

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("wrong exponent arity")
        if self.q_one:
            exps = (0,) + exps[1:]
        coeff = Fraction(coeff)
        if not coeff:
            return self.zero
        return MultiLaurent(self.nvars, {exps: coeff})

    def q_pow(self, e):
        if self.q_one or e == 0:
            return self.one
        cached = self._qpow_cache.get(e)
        if cached is None:
            exps = (e,) + (0,) * self.r
            cached = MultiLaurent._make(self.nvars, {exps: Fraction(1)})
            self._qpow_cache[e] = cached
        return cached

    @property
    def q(self):
        return self.q_pow(1)

    @property
    def qinv(self):
        return self.q_pow(-1)

    def Q(self, k, e=1):
        """The parameter Q_k, 0 <= k <= r-1, raised to the power e."""
        if not 0 <= k < self.r:
            raise ValueError(f"Q_{k} not in this ring (r={self.r})")
        exps = [0] * self.nvars
        exps[k + 1] = e
        return MultiLaurent._make(self.nvars, {tuple(exps): Fraction(1)})

    def qq_comm(self):
        """The ubiquitous factor q - q^{-1} (zero at q = 1)."""
        return self.q_pow(1) - self.q_pow(-1)


def qint(d, ring):
    """Gauss integer [d] = (q^d - q^{-d}) / (q - q^{-1}) as a Laurent polynomial."""
    cached = ring._qint_cache.get(d)
    if cached is not None:
        return cached
    a = abs(d)
    out = ring.zero
    for j in range(a):
        out = out + ring.q_pow(a - 1 - 2 * j)
    if d < 0:
        out = -out
    ring._qint_cache[d] = out
    return out


def qfactorial(d, ring):
    """[d]! = [d][d-1]...[1] with [0]! = 1; requires d >= 0."""
    if d < 0:
        raise ValueError("q-factorial needs d >= 0")
    cached = ring._qfact_cache.get(d)
    if cached is not None:
        return cached
    out = ring.one
    for j in range(1, d + 1):
        out = out * qint(j, ring)
    ring._qfact_cache[d] = out
    return out


def qbinom(d, c, ring):
    """Gaussian binomial [d choose c], exact in Z[q, q^{-1}]; c >= 0."""
    if c < 0:
        raise ValueError("qbinom needs c >= 0")
    if c == 0:
        return ring.one
    num = ring.one
    for j in range(c):
        num = num * qint(d - j, ring)
    return divexact(num, qfactorial(c, ring))


def divexact(p, g):
    """Exact division p / g.

    Supported divisors: a single monomial (always exact over Laurent
    polynomials), or a polynomial involving only the variable q.  Raises
    CoeffError when the division leaves a remainder, which signals an
    arithmetic bug upstream.
    """
    if g.is_zero:
        raise CoeffError("division by zero")
    if p.is_zero:
        return p
    if p.nvars != g.nvars:
        raise ValueError("mixed variable arities")
    if len(g.terms) == 1:
        (gexp, gc), = g.terms.items()
        out = {}
        for e, c in p.terms.items():
            out[tuple(a - b for a, b in zip(e, gexp))] = c / gc
        return MultiLaurent._make(p.nvars, out)
    if any(any(e[1:]) for e in g.terms):
        raise CoeffError("divisor must be a monomial or univariate in q")
    # group the dividend by its Q-exponent part and divide each univariate
    # (in q) piece by g
    groups = {}
    for e, c in p.terms.items():
        groups.setdefault(e[1:], {})[e[0]] = c
    gq = {e[0]: c for e, c in g.terms.items()}
    out = {}
    for qpart, poly in groups.items():
        quo = _divexact_univariate(poly, gq)
        for e0, c in quo.items():
            out[(e0,) + qpart] = c
    return MultiLaurent._make(p.nvars, out)


def _divexact_univariate(a, b):
    """Exact division of univariate Laurent polynomials given as exp->coeff dicts."""
    sa = min(a)
    sb = min(b)
    # shift to ordinary polynomials
    pa = {e - sa: c for e, c in a.items()}
    pb = {e - sb: c for e, c in b.items()}
    da = max(pa)
    db = max(pb)
    lead_b = pb[db]
    quo = {}
    rem = dict(pa)
    deg = da
    while rem:
        deg = max(rem)
        if deg < db:
            raise CoeffError("inexact division")
        qc = rem[deg] / lead_b
        quo[deg - db] = qc
        for e, c in pb.items():
            k = deg - db + e
            s = rem.get(k, Fraction(0)) - qc * c
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return {e + sa - sb: c for e, c in quo.items()}


def specialize(p, assignment):
    """Exact evaluation of p at nonzero rational values of its variables.

    ``assignment`` maps variable names ("q", "Q0", ..., "Q{r-1}") or variable
    indices to rationals.  Every variable actually occurring in p must be
    assigned; a zero value is rejected for variables occurring with negative
    exponent.
    """
    values = [None] * p.nvars
    for key, val in assignment.items():
        if isinstance(key, str):
            if key == "q":
                idx = 0
            elif key.startswith("Q"):
                idx = 1 + int(key[1:])
            else:
                raise CoeffError(f"unknown variable {key!r}")
        else:
            idx = key
        if not 0 <= idx < p.nvars:
            raise CoeffError(f"variable index {idx} out of range")
        values[idx] = Fraction(val)
    total = Fraction(0)
    for exps, coeff in p.terms.items():
        term = coeff
        for i, e in enumerate(exps):
            if e == 0:
                continue
            v = values[i]
            if v is None:
                raise CoeffError(f"no value assigned to variable {i}")
            if v == 0 and e < 0:
                raise CoeffError("zero value for a variable with negative exponent")
            term *= v ** e
        total += term
    return total


def ml_to_json(p):
    """Canonical JSON form: term list in lexicographic exponent order."""
    return [
        {"exponents": list(exps), "num": str(c.numerator), "den": str(c.denominator)}
        for exps, c in p.sorted_terms()
    ]


def ml_from_json(data, nvars):
    terms = {}
    for item in data:
        exps = tuple(item["exponents"])
        terms[exps] = Fraction(int(item["num"]), int(item["den"]))
    return MultiLaurent(nvars, terms)

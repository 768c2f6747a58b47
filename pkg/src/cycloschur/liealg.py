"""The deformed current Lie algebra attached to a block decomposition.

Basis labels are triples (p, q, t): row position p, column position q in
the gamma linearization 1..m, and a degree t >= 0.  Labels with
|p - q| <= 1 are the generators (diagonal elements, raising and lowering
steps); longer labels are defined by iterated brackets of degree-zero
raising/lowering generators with an innermost generator carrying the
degree.  Brackets of a generator against any basis element come from closed
formulas; general brackets reduce recursively through the derivation rule
[[a,b],c] = [a,[b,c]] - [b,[a,c]].

Coefficients live in the shared Laurent ring with the q exponent pinned to
zero; the parameters Q_1, ..., Q_{r-1} enter at the junction positions
m_1 + ... + m_k.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coeff import LaurentRing
from .reporting import check as _check


class LieElem:
    """Finitely supported combination of basis labels (p, q, t)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        clean = {}
        for label, coeff in items:
            if not coeff.is_zero:
                if label in clean:
                    s = clean[label] + coeff
                    if s.is_zero:
                        del clean[label]
                    else:
                        clean[label] = s
                else:
                    clean[label] = coeff
        self.ctx = ctx
        self.terms = clean

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LieElem):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            cur = out.get(label)
            if cur is None:
                out[label] = coeff
            else:
                s = cur + coeff
                if s.is_zero:
                    del out[label]
                else:
                    out[label] = s
        return LieElem(self.ctx, out)

    def __neg__(self):
        return LieElem(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if coeff.is_zero:
            return LieElem(self.ctx, {})
        return LieElem(self.ctx, {k: v * coeff for k, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "LieElem(0)"
        return " + ".join(f"({c!r})E[{p},{q};{t}]" for (p, q, t), c in self.sorted_terms())


def elem_to_json(x):
    from .coeff import ml_to_json

    return [
        {"src": p, "tgt": q, "t": t, "coeff": ml_to_json(c)}
        for (p, q, t), c in x.sorted_terms()
    ]


class LieContext:
    """Fixes the shape and carries bracket and representation caches."""

    def __init__(self, shape):
        self.shape = shape
        self.m = shape.total
        self.ring = LaurentRing(max(shape.r, 1))
        self._bb_cache = {}
        self._vtau_cache = {}
        self._eval_cache = {}

    # -- element constructors --------------------------------------------

    def basis(self, p, q, t, coeff=None):
        if not (1 <= p <= self.m and 1 <= q <= self.m and t >= 0):
            raise ValueError(f"bad basis label ({p}, {q}, {t})")
        return LieElem(self, {(p, q, t): self.ring.one if coeff is None else coeff})

    def X(self, sign, pos, t):
        if not 1 <= pos <= self.m - 1:
            raise ValueError(f"position {pos} not in Gamma'")
        return self.basis(pos, pos + 1, t) if sign > 0 else self.basis(pos + 1, pos, t)

    def I(self, pos, t):
        return self.basis(pos, pos, t)

    def zero(self):
        return LieElem(self, {})

    def junction_Q(self, pos):
        """The parameter attached to a junction position, else None."""
        k = self.shape.junction(pos)
        return None if k is None else self.ring.Q(k)

    # -- brackets ----------------------------------------------------------

    def bracket(self, x, y):
        out = self.zero()
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                out = out + self.bracket_basis(a, b).scale(ca * cb)
        return out

    def bracket_basis(self, a, b):
        key = (a, b)
        cached = self._bb_cache.get(key)
        if cached is not None:
            return cached
        p, q, s = a
        if abs(p - q) <= 1:
            out = self._gen_on_basis(a, b)
        elif abs(b[0] - b[1]) <= 1:
            out = -self._gen_on_basis(b, a)
        else:
            # peel one step off a: a = [g, a1] with g a degree-zero generator
            if p < q:
                g = (p, p + 1, 0)
                a1 = (p + 1, q, s)
            else:
                g = (p, p - 1, 0)
                a1 = (p - 1, q, s)
            # [[g, a1], b] = [g, [a1, b]] - [a1, [g, b]]
            inner1 = self.bracket_basis(a1, b)
            term1 = self._gen_on_elem(g, inner1)
            inner2 = self._gen_on_basis(g, b)
            term2 = self.zero()
            for lab, coeff in inner2.terms.items():
                term2 = term2 + self.bracket_basis(a1, lab).scale(coeff)
            out = term1 - term2
        self._bb_cache[key] = out
        return out

    def _gen_on_elem(self, g, x):
        out = self.zero()
        for lab, coeff in x.terms.items():
            out = out + self._gen_on_basis(g, lab).scale(coeff)
        return out

    def _gen_on_basis(self, g, b):
        """Closed-form bracket [generator, basis element]."""
        gp, gq, s = g
        p, q, t = b
        one = self.ring.one
        out = {}

        def add(label, coeff):
            cur = out.get(label)
            if cur is None:
                if not coeff.is_zero:
                    out[label] = coeff
            else:
                s2 = cur + coeff
                if s2.is_zero:
                    del out[label]
                else:
                    out[label] = s2

        if gp == gq:
            # diagonal generator I_{a,s}
            a = gp
            if p == q:
                return self.zero()
            if a == p:
                add((p, q, t + s), one)
            if a == q:
                add((p, q, t + s), -one)
            return LieElem(self, out)

        if gq == gp + 1:
            # raising generator X^+_{a,s}
            a = gp
            if p == q:
                c = p
                if c == a:
                    add((a, a + 1, t + s), -one)
                elif c == a + 1:
                    add((a, a + 1, t + s), one)
                return LieElem(self, out)
            if p < q:
                if a == p - 1:
                    add((p - 1, q, t + s), one)
                if a == q:
                    add((p, q + 1, t + s), -one)
                return LieElem(self, out)
            # p > q
            ell = p - q
            if ell == 1 and a == p - 1:
                Q = self.junction_Q(a)
                if Q is None:
                    add((p - 1, p - 1, t + s), one)
                    add((p, p, t + s), -one)
                else:
                    add((p - 1, p - 1, t + s), -Q)
                    add((p, p, t + s), Q)
                    add((p - 1, p - 1, t + s + 1), one)
                    add((p, p, t + s + 1), -one)
                return LieElem(self, out)
            if ell > 1 and a == p - 1:
                Q = self.junction_Q(a)
                if Q is None:
                    add((p - 1, q, t + s), one)
                else:
                    add((p - 1, q, t + s), -Q)
                    add((p - 1, q, t + s + 1), one)
                return LieElem(self, out)
            if ell > 1 and a == q:
                Q = self.junction_Q(a)
                if Q is None:
                    add((p, q + 1, t + s), -one)
                else:
                    add((p, q + 1, t + s), Q)
                    add((p, q + 1, t + s + 1), -one)
                return LieElem(self, out)
            return self.zero()

        # lowering generator X^-_{a,s} with label (a+1, a)
        a = gq
        if p == q:
            c = p
            if c == a:
                add((a + 1, a, t + s), one)
            elif c == a + 1:
                add((a + 1, a, t + s), -one)
            return LieElem(self, out)
        if p > q:
            if a == p:
                add((p + 1, q, t + s), one)
            if a == q - 1:
                add((p, q - 1, t + s), -one)
            return LieElem(self, out)
        # p < q
        ell = q - p
        if ell == 1 and a == p:
            Q = self.junction_Q(a)
            if Q is None:
                add((p, p, t + s), -one)
                add((p + 1, p + 1, t + s), one)
            else:
                add((p, p, t + s), Q)
                add((p + 1, p + 1, t + s), -Q)
                add((p, p, t + s + 1), -one)
                add((p + 1, p + 1, t + s + 1), one)
            return LieElem(self, out)
        if ell > 1 and a == p:
            Q = self.junction_Q(a)
            if Q is None:
                add((p + 1, q, t + s), one)
            else:
                add((p + 1, q, t + s), -Q)
                add((p + 1, q, t + s + 1), one)
            return LieElem(self, out)
        if ell > 1 and a == q - 1:
            Q = self.junction_Q(a)
            if Q is None:
                add((p, q - 1, t + s), -one)
            else:
                add((p, q - 1, t + s), Q)
                add((p, q - 1, t + s + 1), -one)
            return LieElem(self, out)
        return self.zero()

    # -- the V_tau representations ----------------------------------------

    def vtau_basis_matrix(self, label, tau):
        key = (label, tau)
        cached = self._vtau_cache.get(key)
        if cached is not None:
            return cached
        p, q, t = label
        ring = self.ring
        tau_t = ring.from_fraction(tau**t) if t else ring.one
        if abs(p - q) <= 1:
            M = mat_zero(self.m, ring)
            if p == q:
                M[p - 1][p - 1] = tau_t
            elif q == p + 1:
                Q = self.junction_Q(p)
                coeff = tau_t if Q is None else (ring.from_fraction(tau) - Q) * tau_t
                M[p - 1][q - 1] = coeff
            else:
                M[p - 1][q - 1] = tau_t
        else:
            if p < q:
                g = (p, p + 1, 0)
                inner = (p + 1, q, t)
            else:
                g = (p, p - 1, 0)
                inner = (p - 1, q, t)
            M = mat_commutator(
                self.vtau_basis_matrix(g, tau),
                self.vtau_basis_matrix(inner, tau),
                ring,
            )
        self._vtau_cache[key] = M
        return M

    def vtau_rep(self, x, tau):
        M = mat_zero(self.m, self.ring)
        for label, coeff in x.terms.items():
            M = mat_add(M, mat_scale(self.vtau_basis_matrix(label, tau), coeff))
        return M

    def psi_vtau(self, p, q, tau):
        """The scalar by which E[p,q;t] hits v_q: the product (tau - Q) over
        crossed junctions for strictly upper labels, else 1."""
        ring = self.ring
        out = ring.one
        if p < q:
            for pos in range(p, q):
                Q = self.junction_Q(pos)
                if Q is not None:
                    out = out * (ring.from_fraction(tau) - Q)
        return out

    # -- evaluation onto gl_m ----------------------------------------------

    def eval_basis_matrix(self, label):
        """The evaluation map: degree-zero generators to matrix units (with
        -Q_k at junction raisers), positive degrees to zero."""
        cached = self._eval_cache.get(label)
        if cached is not None:
            return cached
        p, q, t = label
        ring = self.ring
        if abs(p - q) <= 1:
            M = mat_zero(self.m, ring)
            if t == 0:
                if q == p + 1:
                    Q = self.junction_Q(p)
                    M[p - 1][q - 1] = ring.one if Q is None else -Q
                else:
                    M[p - 1][q - 1] = ring.one
        else:
            if p < q:
                g = (p, p + 1, 0)
                inner = (p + 1, q, t)
            else:
                g = (p, p - 1, 0)
                inner = (p - 1, q, t)
            M = mat_commutator(
                self.eval_basis_matrix(g), self.eval_basis_matrix(inner), ring
            )
        self._eval_cache[label] = M
        return M

    def eval_map(self, x):
        M = mat_zero(self.m, self.ring)
        for label, coeff in x.terms.items():
            M = mat_add(M, mat_scale(self.eval_basis_matrix(label), coeff))
        return M

    def psi_gr(self, p, q):
        """Rescaling of the graded isomorphism: prod of (-Q_k^{-1}) over the
        junctions crossed by strictly upper labels, else 1."""
        ring = self.ring
        out = ring.one
        if p < q:
            for pos in range(p, q):
                k = self.shape.junction(pos)
                if k is not None:
                    out = out * ring.Q(k, -1).scale(-1)
        return out


# ---------------------------------------------------------------------------
# matrices over the coefficient ring


def mat_zero(m, ring):
    return [[ring.zero for _ in range(m)] for _ in range(m)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_mul(A, B, ring):
    m = len(A)
    out = mat_zero(m, ring)
    for i in range(m):
        for k in range(m):
            a = A[i][k]
            if a.is_zero:
                continue
            rowB = B[k]
            rowO = out[i]
            for j in range(m):
                b = rowB[j]
                if not b.is_zero:
                    rowO[j] = rowO[j] + a * b
    return out


def mat_commutator(A, B, ring):
    return mat_sub(mat_mul(A, B, ring), mat_mul(B, A, ring))


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


# ---------------------------------------------------------------------------
# verification suites


def all_basis_labels(lctx, deg_cap):
    m = lctx.m
    return [
        (p, q, t)
        for p in range(1, m + 1)
        for q in range(1, m + 1)
        for t in range(deg_cap + 1)
    ]


def generator_labels(lctx, deg_cap):
    labels = []
    for t in range(deg_cap + 1):
        for pos in range(1, lctx.m + 1):
            labels.append((pos, pos, t))
        for pos in range(1, lctx.m):
            labels.append((pos, pos + 1, t))
            labels.append((pos + 1, pos, t))
    return labels


def jacobi_defect(lctx, a, b, c):
    ab = lctx.bracket_basis(a, b)
    bc = lctx.bracket_basis(b, c)
    ca = lctx.bracket_basis(c, a)
    out = lctx.zero()
    for lab, coeff in ab.terms.items():
        out = out + lctx.bracket_basis(lab, c).scale(coeff)
    for lab, coeff in bc.terms.items():
        out = out + lctx.bracket_basis(lab, a).scale(coeff)
    for lab, coeff in ca.terms.items():
        out = out + lctx.bracket_basis(lab, b).scale(coeff)
    return out


def verify_jacobi(lctx, deg_cap=2, sample=None, seed=0):
    """Jacobi identity on basis triples: exhaustive when sample is None, else
    a seeded random sample of that size."""
    labels = all_basis_labels(lctx, deg_cap)
    if sample is None:
        triples = [
            (a, b, c) for a in labels for b in labels for c in labels
        ]
    else:
        rng = random.Random(seed)
        triples = [
            (rng.choice(labels), rng.choice(labels), rng.choice(labels))
            for _ in range(sample)
        ]
    bad = []
    count = 0
    for a, b, c in triples:
        count += 1
        if not jacobi_defect(lctx, a, b, c).is_zero:
            bad.append((a, b, c))
            if len(bad) >= 3:
                break
    return [
        _check(
            "jacobi",
            {"shape": lctx.shape.m, "deg_cap": deg_cap, "triples": count},
            not bad,
            None if not bad else f"violations at {bad}",
        )
    ]


def verify_antisymmetry(lctx, deg_cap=2):
    labels = all_basis_labels(lctx, deg_cap)
    ok = True
    witness = None
    for a in labels:
        for b in labels:
            if not (lctx.bracket_basis(a, b) + lctx.bracket_basis(b, a)).is_zero:
                ok = False
                witness = (a, b)
                break
        if not ok:
            break
    return [
        _check(
            "bracket-antisymmetry",
            {"shape": lctx.shape.m, "deg_cap": deg_cap},
            ok,
            None if ok else f"violation at {witness}",
        )
    ]


def verify_vtau(lctx, deg_cap=3, taus=(Fraction(2), Fraction(-1, 3), Fraction(5, 7))):
    """V_tau is a representation: the matrix of a bracket of generators equals
    the matrix commutator; the basis action has the expected closed form."""
    checks = []
    gens = generator_labels(lctx, deg_cap)
    for tau in taus:
        ok = True
        witness = None
        for a in gens:
            Ma = lctx.vtau_basis_matrix(a, tau)
            for b in gens:
                Mb = lctx.vtau_basis_matrix(b, tau)
                lhs = lctx.vtau_rep(lctx.bracket_basis(a, b), tau)
                if not mat_eq(lhs, mat_commutator(Ma, Mb, lctx.ring)):
                    ok = False
                    witness = (a, b)
                    break
            if not ok:
                break
        checks.append(
            _check(
                "vtau-homomorphism",
                {"shape": lctx.shape.m, "tau": str(tau), "deg_cap": deg_cap},
                ok,
                None if ok else f"violation at {witness}",
            )
        )
        closed_ok = True
        for p in range(1, lctx.m + 1):
            for q in range(1, lctx.m + 1):
                for t in range(deg_cap + 1):
                    M = lctx.vtau_basis_matrix((p, q, t), tau)
                    expected = mat_zero(lctx.m, lctx.ring)
                    expected[p - 1][q - 1] = lctx.psi_vtau(p, q, tau) * (
                        lctx.ring.from_fraction(tau**t)
                    )
                    if not mat_eq(M, expected):
                        closed_ok = False
        checks.append(
            _check(
                "vtau-basis-closed-form",
                {"shape": lctx.shape.m, "tau": str(tau), "deg_cap": deg_cap},
                closed_ok,
            )
        )
    return checks


def verify_gr(lctx, deg_cap=2):
    """Filtration and the graded comparison with the current algebra: the
    lowest-degree part of [E^s_{pq}, E^t_{uv}] sits in degree exactly s + t and
    matches the gl_m[x] structure constants after the psi rescaling; all other
    terms live strictly higher.  In the one-component case there is no excess
    at all."""
    checks = []
    ring = lctx.ring
    m = lctx.m
    filtration_ok = True
    leading_ok = True
    exact_ok = True
    witness = None
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            for s in range(deg_cap + 1):
                for u in range(1, m + 1):
                    for v in range(1, m + 1):
                        for t in range(deg_cap + 1):
                            br = lctx.bracket_basis((p, q, s), (u, v, t))
                            lead = lctx.zero()
                            for (a, b, d), coeff in br.terms.items():
                                if d < s + t:
                                    filtration_ok = False
                                    witness = ((p, q, s), (u, v, t))
                                elif d == s + t:
                                    lead = lead + lctx.basis(a, b, d, coeff)
                            if lctx.shape.r == 1 and lead != br:
                                exact_ok = False
                                witness = ((p, q, s), (u, v, t))
                            expected = lctx.zero()
                            if q == u:
                                expected = expected + lctx.basis(
                                    p, v, s + t, lctx.psi_gr(p, v)
                                )
                            if v == p:
                                expected = expected - lctx.basis(
                                    u, q, s + t, lctx.psi_gr(u, q)
                                )
                            scaled = lead.scale(lctx.psi_gr(p, q) * lctx.psi_gr(u, v))
                            if scaled != expected:
                                leading_ok = False
                                witness = ((p, q, s), (u, v, t))
    params = {"shape": lctx.shape.m, "deg_cap": deg_cap}
    checks.append(
        _check("gr-filtration", params, filtration_ok, None if filtration_ok else str(witness))
    )
    checks.append(
        _check("gr-leading-term", params, leading_ok, None if leading_ok else str(witness))
    )
    if lctx.shape.r == 1:
        checks.append(
            _check("gr-exact-current", params, exact_ok, None if exact_ok else str(witness))
        )
    return checks


def verify_eval_map(lctx, deg_cap=2):
    """The evaluation onto gl_m is a Lie homomorphism, and composing with the
    Levi embedding recovers the block-diagonal inclusion."""
    checks = []
    ring = lctx.ring
    labels = all_basis_labels(lctx, deg_cap)
    ok = True
    witness = None
    for a in labels:
        Ma = lctx.eval_basis_matrix(a)
        for b in labels:
            Mb = lctx.eval_basis_matrix(b)
            lhs = lctx.eval_map(lctx.bracket_basis(a, b))
            if not mat_eq(lhs, mat_commutator(Ma, Mb, ring)):
                ok = False
                witness = (a, b)
                break
        if not ok:
            break
    checks.append(
        _check(
            "eval-homomorphism",
            {"shape": lctx.shape.m, "deg_cap": deg_cap},
            ok,
            None if ok else f"violation at {witness}",
        )
    )
    # g(X_{t>=1}) = g(I_{t>=1}) = 0
    kill_ok = all(
        all(c.is_zero for row in lctx.eval_basis_matrix(g) for c in row)
        for g in generator_labels(lctx, deg_cap)
        if g[2] >= 1
    )
    checks.append(
        _check("eval-kills-positive-degree", {"shape": lctx.shape.m}, kill_ok)
    )
    # g o iota = block-diagonal embedding on the Levi generators
    levi_ok = True
    for k in range(1, lctx.shape.r + 1):
        block = [pos + 1 for pos in lctx.shape.block(k)]
        for pos in block:
            unit = mat_zero(lctx.m, ring)
            unit[pos - 1][pos - 1] = ring.one
            if not mat_eq(lctx.eval_map(lctx.I(pos, 0)), unit):
                levi_ok = False
        for pos in block[:-1]:
            up = mat_zero(lctx.m, ring)
            up[pos - 1][pos] = ring.one
            down = mat_zero(lctx.m, ring)
            down[pos][pos - 1] = ring.one
            if not mat_eq(lctx.eval_map(lctx.X(+1, pos, 0)), up):
                levi_ok = False
            if not mat_eq(lctx.eval_map(lctx.X(-1, pos, 0)), down):
                levi_ok = False
    checks.append(_check("eval-levi-embedding", {"shape": lctx.shape.m}, levi_ok))
    return checks

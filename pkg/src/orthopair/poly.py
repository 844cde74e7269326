"""Sparse multivariate polynomials over Q(i).

Representation: a polynomial of arity n is a dict mapping exponent tuples
of length n to nonzero GaussianRational coefficients.  The zero polynomial
is the empty dict.  Zero coefficients are dropped on construction, so the
representation is canonical and equality is dict equality.

The monomial order used throughout is graded lexicographic: higher total
degree first, ties broken lexicographically on the exponent tuple.  An
optional priority permutation reorders which variables dominate the tie
break; all divisibility answers must agree across orders.

Division here is single-divisor reduction (quotient plus remainder whose
monomials are not divisible by the divisor's leading monomial).  That is
all the ideal theory this package needs: membership in a principal ideal.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Optional, Sequence

from orthopair.scalar import GaussianRational, ONE, ZERO, _coerce

Exponent = tuple  # tuple[int, ...]

#: Degree tag for the zero polynomial, which is homogeneous of every degree.
ANY_DEGREE = object()


class MPoly:
    """An immutable sparse polynomial in n variables over Q(i)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError(f"arity must be >= 0, got {n}")
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, arity is {n}")
            if any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"exponents must be non-negative ints: {exp}")
            c = _coerce(c)
            if c is None:
                raise TypeError("coefficients must be GaussianRational or rational")
            if not c.is_zero():
                clean[tuple(exp)] = c
        self.n = n
        self.terms = clean

    # --- constructors ---

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "MPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "MPoly":
        """The variable with 0-based index i."""
        if not 0 <= i < n:
            raise ValueError(f"variable index {i} out of range for arity {n}")
        exp = [0] * n
        exp[i] = 1
        return cls(n, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, n: int, exp: Sequence[int], c=1) -> "MPoly":
        return cls(n, {tuple(exp): c})

    # --- basic queries ---

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> Optional[int]:
        """Max term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """The common degree if homogeneous, ANY_DEGREE for zero, else None."""
        if not self.terms:
            return ANY_DEGREE
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.n, ZERO)

    def variables_used(self) -> set:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return used

    # --- arithmetic ---

    def _check_arity(self, other: "MPoly"):
        if self.n != other.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        other = _as_poly(other, self.n)
        if other is None:
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return MPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other, self.n)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other, self.n)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other, self.n)
        if other is None:
            return NotImplemented
        self._check_arity(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return MPoly(self.n, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        c = _coerce(c)
        if c.is_zero():
            return MPoly.zero(self.n)
        return MPoly(self.n, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative int, got {k!r}")
        out = MPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj_coefficients(self) -> "MPoly":
        """Coefficient-wise complex conjugate; variables untouched."""
        return MPoly(self.n, {e: c.conj() for e, c in self.terms.items()})

    # --- evaluation and substitution ---

    def evaluate(self, point: Sequence) -> GaussianRational:
        if len(point) != self.n:
            raise ValueError(
                f"point has {len(point)} coordinates, arity is {self.n}"
            )
        vals = [_coerce(x) for x in point]
        acc = ZERO
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def compose(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute images[i] for variable i; images share a common arity."""
        if len(images) != self.n:
            raise ValueError(
                f"need {self.n} substitution polynomials, got {len(images)}"
            )
        if not images:
            return MPoly(0, dict(self.terms))
        m = images[0].n
        for g in images:
            if g.n != m:
                raise ValueError("substitution polynomials have mixed arity")
        acc = MPoly.zero(m)
        pow_cache: dict = {}
        for exp, c in self.terms.items():
            term = MPoly.constant(m, c)
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** e
                    term = term * pow_cache[key]
            acc = acc + term
        return acc

    def embed(self, new_arity: int, offset: int = 0) -> "MPoly":
        """Reinterpret in a larger variable space, shifting indices by offset."""
        if offset < 0 or self.n + offset > new_arity:
            raise ValueError("embedding does not fit")
        pad_hi = new_arity - self.n - offset
        return MPoly(
            new_arity,
            {
                (0,) * offset + exp + (0,) * pad_hi: c
                for exp, c in self.terms.items()
            },
        )

    # --- comparison ---

    def __eq__(self, other):
        other = _as_poly(other, self.n if isinstance(self, MPoly) else None)
        if other is None:
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return f"MPoly({self.n}, 0)"
        bits = []
        for exp in sorted(self.terms, key=GRADED_LEX.sort_key, reverse=True):
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}"
                for i, e in enumerate(exp)
                if e
            )
            bits.append(f"{self.terms[exp]!r}{'*' + mono if mono else ''}")
        return f"MPoly({self.n}, {' + '.join(bits)})"


def _as_poly(x, n):
    if isinstance(x, MPoly):
        return x
    c = _coerce(x)
    if c is not None and n is not None:
        return MPoly.constant(n, c)
    return None


class GradedLex:
    """Graded lexicographic order, optionally with a variable priority.

    priority is a permutation of range(n): position 0 names the variable
    that dominates the lexicographic tie break.  None means natural index
    order, which for pairing polynomials puts the z block before the xi
    block. Works for any arity when priority is None.
    """

    def __init__(self, priority: Optional[Sequence[int]] = None):
        self.priority = tuple(priority) if priority is not None else None
        if self.priority is not None and sorted(self.priority) != list(
            range(len(self.priority))
        ):
            raise ValueError(f"priority must be a permutation: {priority}")

    def sort_key(self, exp: Exponent):
        if self.priority is None:
            return (sum(exp), exp)
        if len(exp) != len(self.priority):
            raise ValueError("priority permutation does not match arity")
        return (sum(exp), tuple(exp[i] for i in self.priority))

    def leading(self, p: MPoly):
        """(exponent, coefficient) of the leading term; error on zero."""
        if p.is_zero():
            raise ValueError("zero polynomial has no leading term")
        exp = max(p.terms, key=self.sort_key)
        return exp, p.terms[exp]


GRADED_LEX = GradedLex()


def _monomial_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def reduce_mod(g: MPoly, b: MPoly, order: GradedLex = GRADED_LEX):
    """Single-divisor division: g = q*b + r with no r-monomial divisible
    by the leading monomial of b.  Returns (q, r)."""
    if b.is_zero():
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    if g.n != b.n:
        raise ValueError(f"arity mismatch: {g.n} vs {b.n}")
    lead_exp, lead_c = order.leading(b)
    q: dict = {}
    r: dict = {}
    work = dict(g.terms)
    while work:
        exp = max(work, key=order.sort_key)
        c = work.pop(exp)
        if _monomial_divides(lead_exp, exp):
            t = tuple(x - y for x, y in zip(exp, lead_exp))
            coef = c / lead_c
            q[t] = q.get(t, ZERO) + coef
            # subtract coef * x^t * b from the working tail
            for bexp, bc in b.terms.items():
                if bexp == lead_exp:
                    continue
                e2 = tuple(x + y for x, y in zip(t, bexp))
                s = work.get(e2, ZERO) - coef * bc
                if s.is_zero():
                    work.pop(e2, None)
                else:
                    work[e2] = s
        else:
            r[exp] = c
    return MPoly(g.n, q), MPoly(g.n, r)


def divides(b: MPoly, g: MPoly, order: GradedLex = GRADED_LEX) -> bool:
    return reduce_mod(g, b, order)[1].is_zero()


def exact_div(p: MPoly, d: MPoly, order: GradedLex = GRADED_LEX) -> MPoly:
    q, r = reduce_mod(p, d, order)
    if not r.is_zero():
        raise ValueError("exact_div: divisor does not divide")
    return q


def monic(p: MPoly, order: GradedLex = GRADED_LEX) -> MPoly:
    """Scale so the leading coefficient is 1; zero stays zero."""
    if p.is_zero():
        return p
    _, c = order.leading(p)
    return p.scale(ONE / c)


# --- multivariate gcd: content/primitive-part recursion with a
#     subresultant pseudo-remainder sequence in a chosen main variable ---


def _coeffs_in(p: MPoly, x: int) -> dict:
    """p as a univariate polynomial in variable x: degree -> MPoly coefficient
    (the coefficient polynomials keep the full arity with x-exponent 0)."""
    out: dict = {}
    for exp, c in p.terms.items():
        d = exp[x]
        rest = exp[:x] + (0,) + exp[x + 1 :]
        blk = out.setdefault(d, {})
        blk[rest] = blk.get(rest, ZERO) + c
    return {d: MPoly(p.n, blk) for d, blk in out.items() if any(
        not v.is_zero() for v in blk.values()
    )}


def _from_coeffs(n: int, x: int, coeffs: dict) -> MPoly:
    acc = MPoly.zero(n)
    xv = MPoly.variable(n, x)
    for d, c in coeffs.items():
        acc = acc + c * xv**d
    return acc


def _content(p: MPoly, x: int) -> MPoly:
    """gcd of the univariate-in-x coefficients of p."""
    g = MPoly.zero(p.n)
    # small coefficients first: the accumulated gcd usually collapses to a
    # constant after one or two steps, which short-circuits the loop
    for c in sorted(_coeffs_in(p, x).values(), key=lambda m: len(m.terms)):
        g = gcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    return g


def _split_monomial_content(p: MPoly):
    """Factor out the largest monomial dividing every term.

    Returns (exponent tuple of that monomial, deflated polynomial)."""
    mins = None
    for exp in p.terms:
        mins = exp if mins is None else tuple(map(min, mins, exp))
    if mins is None or not any(mins):
        return (0,) * p.n, p
    deflated = {
        tuple(e - m for e, m in zip(exp, mins)): c for exp, c in p.terms.items()
    }
    return mins, MPoly(p.n, deflated)


def _degree_in(p: MPoly, x: int) -> int:
    return max((exp[x] for exp in p.terms), default=-1)


def _lead_coeff_in(p: MPoly, x: int) -> MPoly:
    """Coefficient of the highest power of x, as a polynomial without x."""
    d = _degree_in(p, x)
    return MPoly(
        p.n,
        {
            exp[:x] + (0,) + exp[x + 1 :]: c
            for exp, c in p.terms.items()
            if exp[x] == d
        },
    )


def _uni_eval(p: MPoly, x: int, point: Sequence[GaussianRational]) -> dict:
    """Evaluate every variable except x, leaving a univariate polynomial in
    x as a dict degree -> scalar (point[x] is ignored)."""
    out: dict = {}
    for exp, c in p.terms.items():
        v = c
        for j, e in enumerate(exp):
            if j != x and e:
                v = v * point[j] ** e
        out[exp[x]] = out.get(exp[x], ZERO) + v
    return {d: c for d, c in out.items() if not c.is_zero()}


def _uni_rem(u: dict, v: dict) -> dict:
    """Remainder of one univariate scalar polynomial by another."""
    dv = max(v)
    lv = v[dv]
    u = dict(u)
    while u and max(u) >= dv:
        du = max(u)
        f = u[du] / lv
        shift = du - dv
        for d, c in v.items():
            t = u.get(d + shift, ZERO) - f * c
            if t.is_zero():
                u.pop(d + shift, None)
            else:
                u[d + shift] = t
    return u


def _uni_gcd_degree(u: dict, v: dict) -> int:
    while v:
        u, v = v, _uni_rem(u, v)
    return max(u) if u else -1


def _probe_degree(p: MPoly, q: MPoly, v: int, rng) -> Optional[int]:
    """Degree in v of the gcd of the two polynomials after evaluating every
    other variable at a random scalar point, or None if no point kept both
    leading coefficients alive.  At a valid point the evaluated gcd is a
    multiple of the evaluated true gcd and the true gcd's leading term in v
    survives, so this is an upper bound for the v-degree of the true gcd;
    in particular zero is an exact certificate of coprimality in v."""
    lp, lq = _lead_coeff_in(p, v), _lead_coeff_in(q, v)
    for _ in range(3):
        point = [GaussianRational(rng.randint(-9, 9)) for _ in range(p.n)]
        if lp.evaluate(point).is_zero() or lq.evaluate(point).is_zero():
            continue
        return _uni_gcd_degree(_uni_eval(p, v, point), _uni_eval(q, v, point))
    return None


# The pseudo-remainder chain itself runs over Gaussian integers with plain
# int pairs as coefficients: denominators are cleared once up front, which
# keeps the hot loop free of rational normalization.


def _to_zz(p: MPoly) -> dict:
    """Scale to Gaussian-integer coefficients with trivial integer content:
    exponent tuple -> (int real part, int imaginary part)."""
    scale = 1
    for c in p.terms.values():
        scale = math.lcm(scale, c.re.denominator, c.im.denominator)
    return _to_zz_reduce(
        {exp: (int(c.re * scale), int(c.im * scale)) for exp, c in p.terms.items()}
    )


def _to_zz_reduce(zz: dict) -> dict:
    """Divide a Gaussian-integer poly by its integer content."""
    content = 0
    for a, b in zz.values():
        content = math.gcd(content, a, b)
    if content > 1:
        zz = {e: (a // content, b // content) for e, (a, b) in zz.items()}
    return zz


def _from_zz(n: int, zz: dict) -> MPoly:
    return MPoly(n, {e: GaussianRational(a, b) for e, (a, b) in zz.items()})


def _zz_coeffs(zz: dict, x: int) -> dict:
    """Split a Gaussian-integer poly by powers of x: degree -> coefficient
    map (full arity, x-exponent zeroed)."""
    out: dict = {}
    for exp, c in zz.items():
        out.setdefault(exp[x], {})[exp[:x] + (0,) + exp[x + 1 :]] = c
    return out


def _zz_flatten(x: int, coeffs: dict) -> dict:
    return {
        rest[:x] + (d,) + rest[x + 1 :]: c
        for d, cmap in coeffs.items()
        for rest, c in cmap.items()
    }


def _zz_mul(u: dict, v: dict) -> dict:
    out: dict = {}
    for e1, (a, b) in u.items():
        for e2, (c, d) in v.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            ra, rb = out.get(e, (0, 0))
            out[e] = (ra + a * c - b * d, rb + a * d + b * c)
    return {e: c for e, c in out.items() if c != (0, 0)}


def _zz_pow(u: dict, k: int) -> dict:
    out = u
    for _ in range(k - 1):
        out = _zz_mul(out, u)
    return out


def _zz_div_exact(u: dict, b: dict) -> dict:
    """Exact division of Gaussian-integer polys; AssertionError if inexact
    (the chain construction guarantees exactness, so failure is a bug)."""

    def key(e):
        return (sum(e), e)

    lead = max(b, key=key)
    la, lb = b[lead]
    nsq = la * la + lb * lb
    work = dict(u)
    quot: dict = {}
    while work:
        e = max(work, key=key)
        ca, cb = work[e]
        if any(i < j for i, j in zip(e, lead)):
            raise AssertionError("inexact division in pseudo-remainder chain")
        num_re, num_im = ca * la + cb * lb, cb * la - ca * lb
        if num_re % nsq or num_im % nsq:
            raise AssertionError("inexact division in pseudo-remainder chain")
        qc = (num_re // nsq, num_im // nsq)
        qe = tuple(i - j for i, j in zip(e, lead))
        quot[qe] = qc
        for be, (ba, bb) in b.items():
            te = tuple(i + j for i, j in zip(qe, be))
            ta, tb = work.get(te, (0, 0))
            t = (ta - qc[0] * ba + qc[1] * bb, tb - qc[0] * bb - qc[1] * ba)
            if t == (0, 0):
                work.pop(te, None)
            else:
                work[te] = t
    return quot


def _zz_prem(a: dict, b: dict, n: int) -> dict:
    """Standardized pseudo-remainder of coefficient-split polys:
    lc(b)^(deg a - deg b + 1) * a  mod  b in the split-out variable."""
    da, db = max(a), max(b)
    lb = b[db]
    fc = a
    steps = 0
    while fc and max(fc) >= db:
        df = max(fc)
        lf = fc[df]
        shift = df - db
        new = {d: _zz_mul(c, lb) for d, c in fc.items()}
        for d, c in b.items():
            prod = _zz_mul(c, lf)
            t = new.get(d + shift, {})
            t = dict(t)
            for e, (pa, pb) in prod.items():
                ta, tb = t.get(e, (0, 0))
                s = (ta - pa, tb - pb)
                if s == (0, 0):
                    t.pop(e, None)
                else:
                    t[e] = s
            if t:
                new[d + shift] = t
            else:
                new.pop(d + shift, None)
        fc = {d: c for d, c in new.items() if c}
        if fc and max(fc) >= df:
            raise AssertionError("pseudo-division failed to reduce degree")
        steps += 1
    for _ in range(da - db + 1 - steps):
        fc = {d: _zz_mul(c, lb) for d, c in fc.items()}
    return fc


def gcd(p: MPoly, q: MPoly, order: GradedLex = GRADED_LEX) -> MPoly:
    """Greatest common divisor, normalized monic under the given order.

    Strategy: factor out the monomial content, probe each shared variable
    with scalar evaluations (a degree-zero evaluated gcd at a point where
    both leading coefficients survive is an exact coprimality certificate),
    then recurse on content and primitive part in the most promising
    variable and run a subresultant pseudo-remainder chain over Gaussian
    integers.  The chain element whose degree matches the probe is tried
    early and accepted only if it divides both primitive parts.  The final
    result is verified by exact division before being returned.
    """
    if p.n != q.n:
        raise ValueError(f"arity mismatch: {p.n} vs {q.n}")
    if p.is_zero():
        return monic(q, order)
    if q.is_zero():
        return monic(p, order)
    if p.is_constant() or q.is_constant():
        return MPoly.constant(p.n, 1)

    mp, p1 = _split_monomial_content(p)
    mq, q1 = _split_monomial_content(q)
    mono = MPoly.monomial(p.n, tuple(min(i, j) for i, j in zip(mp, mq)), 1)
    if p1.is_constant() or q1.is_constant():
        return mono
    common = p1.variables_used() & q1.variables_used()
    if not common:
        # a common divisor only uses variables common to both
        return mono

    rng = random.Random(0x9C0FFEE)
    bounds = {v: _probe_degree(p1, q1, v, rng) for v in sorted(common)}
    if all(d == 0 for d in bounds.values()):
        # coprime in every shared variable, hence no common factor at all
        return mono

    def preference(v):
        d = bounds[v]
        return (
            d if d is not None else p.n * (_degree_in(p1, v) + _degree_in(q1, v)),
            min(_degree_in(p1, v), _degree_in(q1, v)),
            v,
        )

    x = min((v for v in common if bounds[v] != 0), key=preference)
    d_bound = bounds[x]

    cp, cq = _content(p1, x), _content(q1, x)
    pp = exact_div(p1, cp, order)
    qq = exact_div(q1, cq, order)
    cont = gcd(cp, cq, order)

    def finish(g):
        for original in (p, q):
            if not divides(g, original, order):
                raise AssertionError("gcd verification by exact division failed")
        return g

    a = _zz_coeffs(_to_zz(pp), x)
    b = _zz_coeffs(_to_zz(qq), x)
    if max(a) < max(b):
        a, b = b, a
    one = {(0,) * p.n: (1, 0)}
    g_, h_ = one, one
    tried_bound = False
    while True:
        delta = max(a) - max(b)
        r = _zz_prem(a, b, p.n)
        if not r:
            break
        if max(r) == 0:
            # the primitive parts share no factor involving x, and being
            # primitive they share no factor free of x either
            return finish(monic(mono * cont, order))
        beta = _zz_mul(g_, _zz_pow(h_, delta))
        a, b = b, {d: _zz_div_exact(c, beta) for d, c in r.items()}
        g_ = a[max(a)]
        if delta == 1:
            h_ = g_
        elif delta > 1:
            h_ = _zz_div_exact(_zz_pow(g_, delta), _zz_pow(h_, delta - 1))
        if max(b) == d_bound and not tried_bound:
            # chain element at the probed degree: if it divides both
            # primitive parts it is exactly their gcd
            tried_bound = True
            cand = _from_zz(p.n, _to_zz_reduce(_zz_flatten(x, b)))
            cand = exact_div(cand, _content(cand, x), order)
            if divides(cand, pp, order) and divides(cand, qq, order):
                return finish(monic(mono * cont * cand, order))

    last = _from_zz(p.n, _to_zz_reduce(_zz_flatten(x, b)))
    prim = exact_div(last, _content(last, x), order)
    return finish(monic(mono * cont * prim, order))


def tuple_gcd(ps: Iterable[MPoly], order: GradedLex = GRADED_LEX):
    """gcd of a tuple of polynomials plus the primitive cofactors.

    Returns (g, primitives) with primitives[i] * g == ps[i] exactly; the
    products are re-checked before returning.  All-zero input is an error.
    """
    ps = list(ps)
    if not ps:
        raise ValueError("tuple_gcd of an empty tuple")
    g = MPoly.zero(ps[0].n)
    for p in ps:
        g = gcd(g, p, order)
        if g.is_constant() and not g.is_zero():
            break
    if g.is_zero():
        raise ValueError("tuple_gcd of an all-zero tuple")
    prims = [exact_div(p, g, order) for p in ps]
    for p, pr in zip(ps, prims):
        if pr * g != p:
            raise AssertionError("tuple_gcd verification failed")
    return g, prims

"""Multivariate polynomials over the extension field, with a multigrading.

A :class:`MultigradedRing` fixes the variables, the coefficient tower, the
grading matrix onto the Picard lattice, a monomial order, and optionally a
defining ideal (quotient Cox ring) plus the irrelevant generators.

Polynomials are immutable; their terms map exponent tuples to the tower's
internal coefficient representation.  Coefficients surface as
:class:`~coxdescent.fields.FieldElement` through the public accessors.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import (InhomogeneousError, ParseError, RingMismatchError)
from .fields import FieldElement, FieldTower, format_rep


# ---------------------------------------------------------------------------
# monomial orders

def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e):
    return e


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples."""

    def __init__(self, tag, key, block=None):
        self.tag = tag
        self.key = key
        self.block = block

    def __repr__(self):
        return "MonomialOrder(%r)" % self.tag

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.tag == other.tag \
            and self.block == other.block

    def __hash__(self):
        return hash((self.tag, self.block))


GREVLEX = MonomialOrder("grevlex", _grevlex_key)
LEX = MonomialOrder("lex", _lex_key)


def elimination_order(k, base):
    """Block order eliminating the first k variables, then ``base``."""
    base_key = base.key

    def key(e):
        head = e[:k]
        return (sum(head), tuple(-x for x in reversed(head)), base_key(e[k:]))

    return MonomialOrder("elim(%d)+%s" % (k, base.tag), key, block=k)


_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


# ---------------------------------------------------------------------------
# multidegrees

class Multidegree(tuple):
    """A degree in the Picard lattice: a tuple of r integers."""

    def __add__(self, other):
        return Multidegree(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Multidegree(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Multidegree(-a for a in self)

    def __str__(self):
        return "(%s)" % ",".join(str(a) for a in self)


# ---------------------------------------------------------------------------
# ring

class MultigradedRing:
    """Polynomial ring over GF(p^d) graded by an integer matrix.

    ``grading`` has one column per variable; ``grading=None`` yields an
    ungraded scratch ring (used internally for elimination).
    """

    def __init__(self, tower, variables, grading=None, order="grevlex",
                 defining=None, irrelevant=None):
        if not isinstance(tower, FieldTower):
            raise TypeError("tower must be a FieldTower")
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or v == "t":
                raise ValueError("invalid variable name %r" % v)
        self.tower = tower
        self.variables = variables
        self.nvars = len(variables)
        self._var_index = {v: i for i, v in enumerate(variables)}
        if isinstance(order, str):
            order = _ORDERS[order]
        self.order = order
        self.okey = order.key
        if grading is not None:
            grading = tuple(tuple(int(x) for x in row) for row in grading)
            for row in grading:
                if len(row) != self.nvars:
                    raise ValueError("grading row length != number of variables")
        self.grading = grading
        self.rank = len(grading) if grading is not None else 0
        self._weights = None
        if grading is not None:
            self._weights = _positive_weights(grading)

        self.defining = ()
        self.irrelevant = ()
        # caches set lazily by the groebner module
        self._defining_handle = None
        self._defining_height = None
        if defining:
            self.defining = tuple(self._coerce_poly(f) for f in defining)
        if irrelevant:
            self.irrelevant = tuple(self._coerce_poly(g) for g in irrelevant)
        if grading is not None:
            for f in self.defining + self.irrelevant:
                f.multidegree()  # raises if inhomogeneous

    def _coerce_poly(self, f):
        if isinstance(f, Polynomial):
            if f.ring is not self:
                raise RingMismatchError("polynomial from another ring")
            return f
        if isinstance(f, str):
            return self.parse(f)
        raise TypeError("expected polynomial or string")

    # -- element constructors

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: self.tower.c_one})

    def constant(self, c):
        c = self.tower.element(c)
        if c.is_zero():
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c.rep})

    def var(self, name):
        i = self._var_index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.tower.c_one})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def monomial(self, exponents, coeff=1):
        e = tuple(int(x) for x in exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError("bad exponent tuple %r" % (e,))
        c = self.tower.element(coeff)
        if c.is_zero():
            return self.zero()
        return Polynomial(self, {e: c.rep})

    def parse(self, text):
        return _parse_polynomial(self, text)

    def multidegree_of_exp(self, e):
        if self.grading is None:
            raise ValueError("ring is ungraded")
        return Multidegree(sum(row[i] * e[i] for i in range(self.nvars))
                           for row in self.grading)

    def __repr__(self):
        return "MultigradedRing(%r, vars=%s)" % (self.tower, ",".join(self.variables))


def _positive_weights(grading):
    """An all-positive integer combination of the grading rows.

    Certifies that every graded piece is finite dimensional and yields the
    weight vector used to enumerate monomials of a given degree.  Returns a
    pair (combination, weights).
    """
    nvars = len(grading[0])
    candidates = [tuple(1 if i == j else 0 for j in range(len(grading)))
                  for i in range(len(grading))]
    candidates.append((1,) * len(grading))
    for y in candidates:
        w = [sum(yi * row[j] for yi, row in zip(y, grading)) for j in range(nvars)]
        if all(x > 0 for x in w):
            return tuple(y), tuple(w)
    # general case: feasibility LP, rationalized afterwards
    try:
        from scipy.optimize import linprog
    except ImportError as exc:  # pragma: no cover
        raise ValueError("grading positivity check needs scipy for this grading") from exc
    import math
    r = len(grading)
    a_ub = [[-row[j] for row in grading] for j in range(nvars)]
    res = linprog(c=[0] * r, A_ub=a_ub, b_ub=[-1] * nvars, bounds=[(None, None)] * r,
                  method="highs")
    if not res.success:
        raise ValueError("grading admits no positive weight combination")
    for denom in (1, 2, 4, 8, 16, 64, 1024, 10**6):
        ys = [Fraction(v).limit_denominator(denom) for v in res.x]
        lcm = 1
        for y in ys:
            lcm = lcm * y.denominator // math.gcd(lcm, y.denominator)
        y = tuple(int(v * lcm) for v in ys)
        w = [sum(yi * row[j] for yi, row in zip(y, grading)) for j in range(nvars)]
        if all(x > 0 for x in w):
            return y, tuple(w)
    raise ValueError("grading admits no positive weight combination")


# ---------------------------------------------------------------------------
# polynomials

def _exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_divides(a, b):
    """a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


class Polynomial:
    """Immutable multivariate polynomial in canonical form."""

    __slots__ = ("ring", "_t", "_sorted", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self._t = terms  # dict exp -> raw coefficient, no zeros
        self._sorted = None
        self._hash = None

    # -- inspection

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def sorted_terms(self):
        """Terms in decreasing monomial order as (exponent, raw coeff)."""
        if self._sorted is None:
            okey = self.ring.okey
            self._sorted = tuple(sorted(self._t.items(),
                                        key=lambda kv: okey(kv[0]), reverse=True))
        return self._sorted

    @property
    def terms(self):
        """Public view: list of (exponent tuple, FieldElement), sorted."""
        tw = self.ring.tower
        return [(e, FieldElement(tw, c)) for e, c in self.sorted_terms()]

    def leading_exponent(self):
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0][0]

    def leading_coefficient(self):
        return FieldElement(self.ring.tower, self.sorted_terms()[0][1])

    def coefficient(self, exponents):
        c = self._t.get(tuple(exponents))
        tw = self.ring.tower
        return FieldElement(tw, tw.c_zero if c is None else c)

    def is_constant(self):
        return not self._t or set(self._t) == {(0,) * self.ring.nvars}

    def total_degree(self):
        return max((sum(e) for e in self._t), default=-1)

    def multidegree(self):
        """The common grading image of all monomials; errors if mixed."""
        if not self._t:
            raise InhomogeneousError("zero polynomial has no multidegree")
        ring = self.ring
        it = iter(self._t)
        e0 = next(it)
        deg = ring.multidegree_of_exp(e0)
        for e in it:
            d = ring.multidegree_of_exp(e)
            if d != deg:
                raise InhomogeneousError(
                    "inhomogeneous polynomial: monomials %s and %s have degrees %s and %s"
                    % (_monomial_str(ring, e0), _monomial_str(ring, e), deg, d),
                    monomials=(e0, e))
        return deg

    def is_homogeneous(self):
        try:
            self.multidegree()
        except InhomogeneousError:
            return not self._t
        return True

    # -- arithmetic

    def _check_ring(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise RingMismatchError("polynomials from different rings")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._check_ring(other)
        if other is None:
            return NotImplemented
        tw = self.ring.tower
        out = dict(self._t)
        for e, c in other._t.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = tw.c_add(cur, c)
                if s == tw.c_zero:
                    del out[e]
                else:
                    out[e] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.tower.c_neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._check_ring(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check_ring(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.ring.tower.element(other)
            if c.is_zero():
                return self.ring.zero()
            mul = self.ring.tower.c_mul
            return Polynomial(self.ring, {e: mul(v, c.rep) for e, v in self._t.items()})
        other = self._check_ring(other)
        if other is None:
            return NotImplemented
        tw = self.ring.tower
        mul, add, zero = tw.c_mul, tw.c_add, tw.c_zero
        out = {}
        small, big = (self._t, other._t) if len(self._t) <= len(other._t) else (other._t, self._t)
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = _exp_add(e1, e2)
                prod = mul(c1, c2)
                cur = out.get(e)
                if cur is None:
                    if prod != zero:
                        out[e] = prod
                else:
                    s = add(cur, prod)
                    if s == zero:
                        del out[e]
                    else:
                        out[e] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self._t:
            return self
        inv = self.ring.tower.c_inv(self.sorted_terms()[0][1])
        return self * FieldElement(self.ring.tower, inv)

    # -- comparison / output

    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == self.ring.constant(other)._t
        return (isinstance(other, Polynomial) and other.ring is self.ring
                and self._t == other._t)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ring), frozenset(self._t.items())))
        return self._hash

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return "<%s>" % poly_str(self)


# ---------------------------------------------------------------------------
# printing

def _monomial_str(ring, e):
    parts = []
    for v, a in zip(ring.variables, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append("%s^%d" % (v, a))
    return "*".join(parts)


def poly_str(f):
    """Canonical text: terms in decreasing monomial order, '+'-joined."""
    if f.is_zero():
        return "0"
    ring = f.ring
    tw = ring.tower
    parts = []
    for e, c in f.sorted_terms():
        mono = _monomial_str(ring, e)
        cs = format_rep(tw, c)
        if not mono:
            parts.append("(%s)" % cs if ("+" in cs or "-" in cs) else cs)
        elif c == tw.c_one:
            parts.append(mono)
        else:
            if "+" in cs or "-" in cs:
                cs = "(%s)" % cs
            parts.append("%s*%s" % (cs, mono))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# parsing

_POLY_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\^|\*|\+|\-|\(|\))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError("bad polynomial syntax near %r" % text[pos:pos + 20])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, ring, tokens):
        self.ring = ring
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        f = self.expr()
        if self.peek() is not None:
            raise ParseError("unexpected token %r" % self.peek())
        return f

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        f = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
            f = f + self.term() * sign
        return f

    def term(self):
        f = self.factor()
        while self.peek() == "*":
            self.next()
            f = f * self.factor()
        return f

    def factor(self):
        ring = self.ring
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of polynomial")
        if tok == "(":
            f = self.expr()
            if self.next() != ")":
                raise ParseError("missing ')'")
            return f
        if tok.isdigit():
            return ring.constant(int(tok))
        if tok == "t":
            base = ring.constant(ring.tower.gen())
        elif tok in ring._var_index:
            base = ring.var(tok)
        else:
            raise ParseError("unknown variable %r" % tok)
        if self.peek() == "^":
            self.next()
            e = self.next()
            if e is None or not e.isdigit():
                raise ParseError("expected exponent after '^'")
            return base ** int(e)
        return base


def _parse_polynomial(ring, text):
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial")
    return _Parser(ring, toks).parse()


# ---------------------------------------------------------------------------
# graded pieces and the effectivity order

def _exps_of_degree(ring, degree):
    """All exponent tuples with grading image ``degree``, unordered."""
    if ring.grading is None:
        raise ValueError("ring is ungraded")
    degree = Multidegree(degree)
    if len(degree) != ring.rank:
        raise ValueError("degree has wrong rank")
    y, w = ring._weights
    total = sum(yi * di for yi, di in zip(y, degree))
    if total < 0:
        return []
    grading = ring.grading
    n = ring.nvars
    out = []
    exp = [0] * n

    def rec(i, rem, budget):
        if i == n:
            if all(x == 0 for x in rem):
                out.append(tuple(exp))
            return
        col = [row[i] for row in grading]
        wmax = budget // w[i]
        for a in range(wmax + 1):
            exp[i] = a
            rec(i + 1, [x - a * c for x, c in zip(rem, col)], budget - a * w[i])
        exp[i] = 0

    rec(0, list(degree), total)
    return out


def monomials_of_degree(ring, degree):
    """Monomials of the given multidegree, in decreasing monomial order."""
    exps = _exps_of_degree(ring, degree)
    exps.sort(key=ring.okey, reverse=True)
    return [Polynomial(ring, {e: ring.tower.c_one}) for e in exps]


def degree_leq(l1, l2, ring):
    """Effectivity order: L1 <= L2 iff L2 - L1 is the degree of a monomial."""
    diff = Multidegree(l2) - Multidegree(l1)
    return bool(_exps_of_degree(ring, diff))


def multidegree(f):
    """Free-function form of :meth:`Polynomial.multidegree`."""
    return f.multidegree()

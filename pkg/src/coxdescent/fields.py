"""Exact arithmetic in GF(p) and GF(p^d), with the Frobenius automorphism.

Elements of GF(p^d) are stored in the power basis 1, t, ..., t^(d-1) where t
is a root of the defining minimal polynomial.  For d == 1 the internal
representation is a plain residue; for d > 1 it is a tuple of d residues.
The :class:`FieldElement` wrapper presents a uniform immutable value type.
"""

from __future__ import annotations

import itertools
import re

from .errors import ParseError, TowerMismatchError

# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, ascending degree


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        k = len(a) - 1 - dm
        if c:
            for i, mi in enumerate(m):
                a[i + k] = (a[i + k] - c * mi) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(base, e, m, p):
    result = [1]
    b = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # make b monic before reduction
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _pinvmod(a, m, p):
    # extended Euclid in GF(p)[t]; m monic, gcd(a, m) = 1
    r0, r1 = list(m), _pmod(a, m, p)
    s0, s1 = [], [1]
    while r1:
        inv = pow(r1[-1], p - 2, p)
        r1m = [(c * inv) % p for c in r1]
        # quotient of r0 by r1m
        q = []
        r = list(r0)
        dm = len(r1m) - 1
        q = [0] * max(len(r) - dm, 1)
        while len(r) - 1 >= dm and r:
            c = r[-1]
            k = len(r) - 1 - dm
            q[k] = c
            if c:
                for i, mi in enumerate(r1m):
                    r[i + k] = (r[i + k] - c * mi) % p
            r.pop()
        _ptrim(q)
        q = [(c * inv) % p for c in q]  # undo the monic scaling
        r0, r1 = r1, _ptrim([(x - y) % p for x, y in
                             itertools.zip_longest(r0, _pmul(q, r1, p), fillvalue=0)])
        s0, s1 = s1, _ptrim([(x - y) % p for x, y in
                             itertools.zip_longest(s0, _pmul(q, s1, p), fillvalue=0)])
    # r0 = gcd, should be a nonzero constant
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return [(x * c) % p for x in s0]


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
    i = 37
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


_ELEM_TOKEN = re.compile(r"\s*(\d+|t|\^|\*|\+|\-)")


def _parse_element_tokens(s):
    pos, out = 0, []
    while pos < len(s):
        m = _ELEM_TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ParseError("bad field element syntax near %r" % s[pos:])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class FieldTower:
    """A prime field GF(p) with an extension GF(p^d) and its Galois group.

    The Galois group of GF(p^d)/GF(p) is cyclic of order d, generated by
    the Frobenius a -> a^p.
    """

    def __init__(self, p, d=1, min_poly=None):
        if not _is_prime(p):
            raise ValueError("p = %d is not prime" % p)
        if p >= 2**62:
            raise ValueError("p too large")
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.d = d
        if d == 1:
            self.min_poly = (0, 1)  # t - 0; unused
        else:
            if min_poly is None:
                coeffs = self._find_min_poly()
            else:
                coeffs = self._coerce_min_poly(min_poly)
            self.min_poly = tuple(coeffs)
            if not self._is_irreducible(list(coeffs)):
                raise ValueError("min_poly is not irreducible over GF(%d)" % p)
        self.size = p**d
        self._setup_ops()

    # -- construction helpers

    def _coerce_min_poly(self, mp):
        p, d = self.p, self.d
        if isinstance(mp, str):
            rep = _parse_rep(mp, p, d + 1)
            coeffs = list(rep) if isinstance(rep, tuple) else [rep]
            while len(coeffs) < d + 1:
                coeffs.append(0)
        else:
            coeffs = [c % p for c in mp]
        if len(coeffs) != d + 1 or coeffs[-1] != 1:
            raise ValueError("min_poly must be monic of degree %d" % d)
        return coeffs

    def _is_irreducible(self, f):
        p, d = self.p, self.d
        x = [0, 1]
        g = x
        for _ in range(d // 2):
            g = _ppowmod(g, p, f, p)
            diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(g, x, fillvalue=0)])
            if len(_pgcd(f, diff, p)) != 1:
                return False
        return True

    def _find_min_poly(self):
        # smallest irreducible in lexicographic coefficient order (a_0,...,a_{d-1})
        p, d = self.p, self.d
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            if self._is_irreducible(f):
                return f
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _setup_ops(self):
        """Install coefficient operations as closures.

        Internal representation: plain residue for d == 1, tuple of d
        residues otherwise.  Polynomials store these raw representations.
        """
        p, d = self.p, self.d
        if d == 1:
            self.c_zero = 0
            self.c_one = 1
            self.c_add = lambda a, b: (a + b) % p
            self.c_sub = lambda a, b: (a - b) % p
            self.c_mul = lambda a, b: (a * b) % p
            self.c_neg = lambda a: (-a) % p

            def c_inv(a):
                if a == 0:
                    raise ZeroDivisionError("division by zero in GF(%d)" % p)
                return pow(a, p - 2, p)

            self.c_inv = c_inv
            self.c_frob = lambda a, i=1: a
            self.c_from_int = lambda n: n % p
            self.c_coeffs = lambda a: (a,)
            self.c_from_coeffs = lambda cs: cs[0] % p
        else:
            mp = list(self.min_poly)
            # reduction rows: t^(d+k) in the power basis, k = 0 .. d-2
            red = [None] * (d - 1)
            cur = [(-c) % p for c in mp[:d]]  # t^d
            red[0] = tuple(cur)
            for k in range(1, d - 1):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c + top * r) % p for c, r in zip(cur, red[0])]
                red[k] = tuple(cur)

            zero = (0,) * d
            one = (1,) + (0,) * (d - 1)
            self.c_zero = zero
            self.c_one = one

            def c_add(a, b):
                return tuple((x + y) % p for x, y in zip(a, b))

            def c_sub(a, b):
                return tuple((x - y) % p for x, y in zip(a, b))

            def c_neg(a):
                return tuple((-x) % p for x in a)

            def c_mul(a, b):
                full = [0] * (2 * d - 1)
                for i, ai in enumerate(a):
                    if ai:
                        for j, bj in enumerate(b):
                            full[i + j] += ai * bj
                out = [c % p for c in full[:d]]
                for k in range(d - 1):
                    c = full[d + k] % p
                    if c:
                        row = red[k]
                        for i in range(d):
                            out[i] = (out[i] + c * row[i]) % p
                return tuple(out)

            def c_inv(a):
                if not any(a):
                    raise ZeroDivisionError("division by zero in GF(%d^%d)" % (p, d))
                inv = _pinvmod(list(a), mp, p)
                inv += [0] * (d - len(inv))
                return tuple(inv)

            # Frobenius matrices: column j of frob_mats[i] is t^(j*p^i) mod min_poly
            tp = _ppowmod([0, 1], p, mp, p)
            cols = []
            cur = [1]
            for j in range(d):
                c = list(cur) + [0] * (d - len(cur))
                cols.append(tuple(c[:d]))
                cur = _pmod(_pmul(cur, tp, p), mp, p)
            frob_mats = [None] * d
            frob_mats[0] = None  # identity
            frob_mats[1] = cols if d > 1 else None

            def _apply_mat(cols_, a):
                out = [0] * d
                for j, aj in enumerate(a):
                    if aj:
                        col = cols_[j]
                        for i in range(d):
                            out[i] = (out[i] + aj * col[i]) % p
                return tuple(out)

            for i in range(2, d):
                prev = frob_mats[i - 1]
                frob_mats[i] = [_apply_mat(cols, c) for c in prev]

            def c_frob(a, i=1):
                i %= d
                if i == 0:
                    return a
                return _apply_mat(frob_mats[i], a)

            self.c_add = c_add
            self.c_sub = c_sub
            self.c_neg = c_neg
            self.c_mul = c_mul
            self.c_inv = c_inv
            self.c_frob = c_frob
            self.c_from_int = lambda n: (n % p,) + (0,) * (d - 1)
            self.c_coeffs = lambda a: a
            self.c_from_coeffs = lambda cs: tuple(c % p for c in cs)

    def c_is_zero(self, a):
        return a == self.c_zero

    def c_pow(self, a, n):
        if n < 0:
            a, n = self.c_inv(a), -n
        result = self.c_one
        while n:
            if n & 1:
                result = self.c_mul(result, a)
            a = self.c_mul(a, a)
            n >>= 1
        return result

    def c_div(self, a, b):
        return self.c_mul(a, self.c_inv(b))

    # -- public element interface

    def element(self, value):
        """Coerce an int, string, coefficient sequence or element."""
        if isinstance(value, FieldElement):
            if value.tower != self:
                raise TowerMismatchError("element from a different tower")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.c_from_int(value))
        if isinstance(value, str):
            return FieldElement(self, _parse_rep(value, self.p, self.d))
        if isinstance(value, (tuple, list)):
            cs = list(value) + [0] * (self.d - len(value))
            if len(cs) != self.d:
                raise ValueError("too many coordinates for degree %d" % self.d)
            return FieldElement(self, self.c_from_coeffs(cs))
        raise TypeError("cannot coerce %r to a field element" % (value,))

    def zero(self):
        return FieldElement(self, self.c_zero)

    def one(self):
        return FieldElement(self, self.c_one)

    def gen(self):
        """The generator t of GF(p^d) over GF(p)."""
        if self.d == 1:
            raise ValueError("prime field has no extension generator")
        return FieldElement(self, (0, 1) + (0,) * (self.d - 2))

    def elements(self):
        """Iterate over all p^d elements (small towers only)."""
        if self.d == 1:
            for a in range(self.p):
                yield FieldElement(self, a)
        else:
            for cs in itertools.product(range(self.p), repeat=self.d):
                yield FieldElement(self, cs)

    def __eq__(self, other):
        return (isinstance(other, FieldTower)
                and (self.p, self.d, self.min_poly) == (other.p, other.d, other.min_poly))

    def __hash__(self):
        return hash((self.p, self.d, self.min_poly))

    def __repr__(self):
        if self.d == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.d)


def _parse_rep(s, p, d):
    """Parse 'a*t^k + ...' into the internal representation."""
    toks = _parse_element_tokens(s)
    if not toks:
        raise ParseError("empty field element")
    coeffs = [0] * max(d, 1)
    pos = 0
    sign = 1
    first = True
    while pos < len(toks):
        if toks[pos] in "+-":
            sign = -1 if toks[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-' in field element")
        first = False
        # term: INT ['*' t ['^' INT]] | t ['^' INT]
        coef = 1
        exp = 0
        if pos < len(toks) and toks[pos].isdigit():
            coef = int(toks[pos])
            pos += 1
            if pos < len(toks) and toks[pos] == "*":
                pos += 1
                if pos >= len(toks) or toks[pos] != "t":
                    raise ParseError("expected 't' after '*'")
        if pos < len(toks) and toks[pos] == "t":
            exp = 1
            pos += 1
            if pos < len(toks) and toks[pos] == "^":
                pos += 1
                if pos >= len(toks) or not toks[pos].isdigit():
                    raise ParseError("expected exponent after '^'")
                exp = int(toks[pos])
                pos += 1
        if exp >= d:
            raise ParseError("t^%d exceeds extension degree %d" % (exp, d))
        coeffs[exp] = (coeffs[exp] + sign * coef) % p
        sign = 1
    if d == 1:
        return coeffs[0]
    return tuple(coeffs)


class FieldElement:
    """An element of GF(p^d), canonical in the power basis."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower, rep):
        self.tower = tower
        self.rep = rep

    @property
    def coeffs(self):
        return self.tower.c_coeffs(self.rep)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.tower != self.tower:
                raise TowerMismatchError("operands from different towers")
            return other.rep
        if isinstance(other, int):
            return self.tower.c_from_int(other)
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_div(self.rep, r))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.tower, self.tower.c_mul(r, self.tower.c_inv(self.rep)))

    def __neg__(self):
        return FieldElement(self.tower, self.tower.c_neg(self.rep))

    def __pow__(self, n):
        return FieldElement(self.tower, self.tower.c_pow(self.rep, n))

    def frobenius(self, i=1):
        """Return a^(p^(i mod d))."""
        return FieldElement(self.tower, self.tower.c_frob(self.rep, i))

    def inverse(self):
        return FieldElement(self.tower, self.tower.c_inv(self.rep))

    def is_zero(self):
        return self.rep == self.tower.c_zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rep == self.tower.c_from_int(other)
        return (isinstance(other, FieldElement)
                and self.tower == other.tower and self.rep == other.rep)

    def __hash__(self):
        return hash((self.tower, self.rep))

    def __str__(self):
        return format_rep(self.tower, self.rep)

    def __repr__(self):
        return "%s(%s)" % (self.tower, self)


def format_rep(tower, rep):
    """Canonical text for an internal coefficient representation."""
    cs = tower.c_coeffs(rep)
    parts = []
    for e in range(tower.d - 1, -1, -1):
        c = cs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            tpow = "t" if e == 1 else "t^%d" % e
            parts.append(tpow if c == 1 else "%d*%s" % (c, tpow))
    if not parts:
        return "0"
    return "+".join(parts)


def frobenius(a, i=1):
    """Frobenius power as a free function: a -> a^(p^(i mod d))."""
    return a.frobenius(i)

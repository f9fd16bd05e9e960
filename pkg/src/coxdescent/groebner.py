"""Buchberger's algorithm and the ideal-theoretic toolkit.

Normal forms, reduced Groebner bases, ideal equality, saturation via
auxiliary-variable elimination, Krull dimension of the initial ideal, and
height.  Quotient Cox rings are handled by adjoining the defining ideal to
every ideal before basis computations.

The engine is deterministic: normal pair selection (smallest lcm first in
the ring's order) with both Buchberger criteria, and reduced bases are
unique for a fixed order.
"""

from __future__ import annotations

import heapq
import itertools
import threading

from .errors import (RingMismatchError, SaturationDirectionError, UnitIdealError)
from .rings import (MultigradedRing, Polynomial, _exp_add, _exp_divides,
                    _exp_sub, elimination_order)

# ---------------------------------------------------------------------------
# engine: polynomials as dicts {exponent tuple: raw coefficient}


def _monic_dict(t, tower, okey):
    lead = max(t, key=okey)
    inv = tower.c_inv(t[lead])
    mul = tower.c_mul
    return {e: mul(inv, c) for e, c in t.items()}


def _normal_form_dict(h, gb, tower, okey):
    """Full normal form of ``h`` against monic (lt, terms) pairs ``gb``."""
    sub, mul, neg, zero = tower.c_sub, tower.c_mul, tower.c_neg, tower.c_zero
    work = dict(h)
    result = {}
    while work:
        m = max(work, key=okey)
        c = work.pop(m)
        for lt, terms in gb:
            if _exp_divides(lt, m):
                q = _exp_sub(m, lt)
                for e2, c2 in terms.items():
                    if e2 == lt:
                        continue
                    e = _exp_add(e2, q)
                    cur = work.get(e)
                    nv = neg(mul(c, c2)) if cur is None else sub(cur, mul(c, c2))
                    if nv == zero:
                        work.pop(e, None)
                    else:
                        work[e] = nv
                break
        else:
            result[m] = c
    return result


def _buchberger(tower, okey, polys):
    """Reduced Groebner basis of the ideal generated by ``polys`` (dicts)."""
    G = []
    lts = []
    for f in polys:
        if f:
            g = _monic_dict(f, tower, okey)
            G.append(g)
            lts.append(max(g, key=okey))

    def lcm(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    pending = set()
    heap = []
    for i in range(len(G)):
        for j in range(i):
            l = lcm(lts[i], lts[j])
            heapq.heappush(heap, (okey(l), j, i, l))
            pending.add((j, i))

    while heap:
        _, i, j, l = heapq.heappop(heap)
        pending.discard((i, j))
        # first criterion: coprime leading monomials
        if l == _exp_add(lts[i], lts[j]):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _exp_divides(lts[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        fi, fj = G[i], G[j]
        qi, qj = _exp_sub(l, lts[i]), _exp_sub(l, lts[j])
        s = {}
        add, neg, zero = tower.c_add, tower.c_neg, tower.c_zero
        for e, c in fi.items():
            s[_exp_add(e, qi)] = c
        for e, c in fj.items():
            ee = _exp_add(e, qj)
            cur = s.get(ee)
            nv = neg(c) if cur is None else add(cur, neg(c))
            if nv == zero:
                s.pop(ee, None)
            else:
                s[ee] = nv
        r = _normal_form_dict(s, list(zip(lts, G)), tower, okey)
        if r:
            r = _monic_dict(r, tower, okey)
            k = len(G)
            G.append(r)
            ltk = max(r, key=okey)
            lts.append(ltk)
            for i2 in range(k):
                l2 = lcm(lts[i2], ltk)
                heapq.heappush(heap, (okey(l2), i2, k, l2))
                pending.add((i2, k))

    # minimal basis: drop elements whose lt is divisible by another lt
    order_idx = sorted(range(len(G)), key=lambda i: okey(lts[i]))
    kept = []
    for i in order_idx:
        if not any(_exp_divides(lts[k], lts[i]) for k in kept):
            kept.append(i)
    minimal = [(lts[i], G[i]) for i in kept]
    # reduce tails
    reduced = []
    for idx, (lt, g) in enumerate(minimal):
        others = [minimal[k] for k in range(len(minimal)) if k != idx]
        r = _normal_form_dict(g, others, tower, okey) if others else dict(g)
        reduced.append(_monic_dict(r, tower, okey))
    reduced.sort(key=lambda t: okey(max(t, key=okey)), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# handles

class IdealHandle:
    """Generators plus a lazily cached reduced Groebner basis.

    In a quotient Cox ring the defining ideal is adjoined before any basis
    computation, so all results are canonical representatives modulo it.
    """

    def __init__(self, ring, gens, _gb=None):
        self.ring = ring
        self.gens = tuple(ring._coerce_poly(g) for g in gens)
        self._gb = _gb
        self._gb_pairs = None  # [(lt, terms)] engine form
        self._lock = threading.Lock()

    def reduced_gb(self):
        """Unique reduced basis: monic, tails reduced, sorted."""
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    polys = [g._t for g in self.gens if g._t]
                    polys += [f._t for f in self.ring.defining if f._t]
                    dicts = _buchberger(self.ring.tower, self.ring.okey, polys)
                    self._gb = [Polynomial(self.ring, d) for d in dicts]
        return list(self._gb)

    def _pairs(self):
        if self._gb_pairs is None:
            okey = self.ring.okey
            self._gb_pairs = [(max(g._t, key=okey), g._t) for g in self.reduced_gb()]
        return self._gb_pairs

    def normal_form(self, f):
        """Remainder of f on division by the reduced basis; zero iff f is in I."""
        if f.ring is not self.ring:
            raise RingMismatchError("polynomial from a different ring")
        r = _normal_form_dict(f._t, self._pairs(), self.ring.tower, self.ring.okey)
        return Polynomial(self.ring, r)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.reduced_gb())

    def equals(self, other):
        if other.ring is not self.ring:
            raise RingMismatchError("ideals from different rings")
        return self.reduced_gb() == other.reduced_gb()

    def is_unit(self):
        gb = self.reduced_gb()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def is_zero(self):
        return not self.reduced_gb()

    def __repr__(self):
        return "IdealHandle(%s)" % ", ".join(str(g) for g in self.gens)


# functional wrappers

def reduced_gb(ideal):
    return ideal.reduced_gb()


def normal_form(f, ideal):
    return ideal.normal_form(f)


def ideal_equal(a, b):
    return a.equals(b)


# ---------------------------------------------------------------------------
# elimination machinery

_AUX_NAMES = ("aux_z", "aux_u", "aux_w")


def _extended_ring(ring, naux):
    names = _AUX_NAMES[:naux] + ring.variables
    return MultigradedRing(ring.tower, names, grading=None,
                           order=elimination_order(naux, ring.order))


def _lift(ext, f, naux):
    pad = (0,) * naux
    return {pad + e: c for e, c in f._t.items()}


def _eliminate(ring, ext, dicts, naux):
    """GB in the elimination order, restricted to aux-free elements."""
    gb = _buchberger(ext.tower, ext.okey, dicts)
    out = []
    for d in gb:
        if all(not any(e[:naux]) for e in d):
            out.append(Polynomial(ring, {e[naux:]: c for e, c in d.items()}))
    # the aux-free part of a reduced elimination GB is the reduced GB
    # for the ring's own order
    return out


def _handle_with_gb(ring, gb_polys):
    h = IdealHandle(ring, gb_polys)
    h._gb = list(gb_polys)
    return h


def saturate_single(ideal, g):
    """(I : g^infinity) by eliminating z from I + (1 - z*g)."""
    ring = ideal.ring
    ext = _extended_ring(ring, 1)
    dicts = [_lift(ext, f, 1) for f in ideal.reduced_gb()]
    zg = _lift(ext, g, 1)
    one = (0,) * ext.nvars
    rel = {}
    for e, c in zg.items():
        rel[(e[0] + 1,) + e[1:]] = ring.tower.c_neg(c)
    rel[one] = ring.tower.c_add(rel.get(one, ring.tower.c_zero), ring.tower.c_one)
    if rel.get(one) == ring.tower.c_zero:
        del rel[one]
    dicts.append(rel)
    return _handle_with_gb(ring, _eliminate(ring, ext, dicts, 1))


def intersect(a, b):
    """Ideal intersection via u*I + (1-u)*J elimination."""
    ring = a.ring
    if b.ring is not ring:
        raise RingMismatchError("ideals from different rings")
    ext = _extended_ring(ring, 1)
    tower = ring.tower
    dicts = []
    for f in a.reduced_gb():
        d = _lift(ext, f, 1)
        dicts.append({(e[0] + 1,) + e[1:]: c for e, c in d.items()})
    for f in b.reduced_gb():
        d = _lift(ext, f, 1)
        out = dict(d)  # (1-u)*f = f - u*f
        for e, c in d.items():
            eu = (e[0] + 1,) + e[1:]
            cur = out.get(eu)
            nv = tower.c_neg(c) if cur is None else tower.c_sub(cur, c)
            if nv == tower.c_zero:
                out.pop(eu, None)
            else:
                out[eu] = nv
        dicts.append(out)
    return _handle_with_gb(ring, _eliminate(ring, ext, dicts, 1))


def saturate(ideal, direction):
    """(I : G^infinity) as the intersection of single saturations.

    Runs over the generators of ``direction``; the running intersection is
    short-circuited by containment checks, and the loop stops early once
    the running result collapses to I itself.
    """
    ring = ideal.ring
    if direction.ring is not ring:
        raise RingMismatchError("ideals from different rings")
    gens = [g for g in direction.gens if not g.is_zero()]
    if not gens:
        raise SaturationDirectionError("cannot saturate with respect to the zero ideal")
    seen = set()
    uniq = []
    for g in gens:
        key = frozenset(g._t.items())
        if key not in seen:
            seen.add(key)
            uniq.append(g)
    result = None
    for g in uniq:
        s = saturate_single(ideal, g)
        if result is None:
            result = s
        elif result.contains_ideal(s):
            # s is smaller or equal: intersection is s
            result = s
        elif s.contains_ideal(result):
            pass  # intersection is result
        else:
            result = intersect(result, s)
        if ideal.contains_ideal(result):
            # running intersection already equals I; it can only stay I
            return _handle_with_gb(ring, ideal.reduced_gb())
    return result


# ---------------------------------------------------------------------------
# dimension and height

def dimension(ideal):
    """Krull dimension of R/I via the initial monomial ideal.

    Maximum cardinality of a variable subset S such that no leading
    monomial of the reduced basis has support inside S.
    """
    gb = ideal.reduced_gb()
    if gb and gb[0].is_constant():
        raise UnitIdealError("dimension of the unit ideal is undefined")
    okey = ideal.ring.okey
    supports = {frozenset(i for i, a in enumerate(g.leading_exponent()) if a)
                for g in gb}
    n = ideal.ring.nvars
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            ss = set(subset)
            if not any(sup <= ss for sup in supports):
                return size
    raise AssertionError("unreachable")


def ambient_dimension(ring):
    """Krull dimension of the (quotient) Cox ring itself."""
    if not ring.defining:
        return ring.nvars
    if ring._defining_height is None:
        dim_quotient = dimension(IdealHandle(ring, []))
        ring._defining_height = ring.nvars - dim_quotient
    return ring.nvars - ring._defining_height


def height(ideal):
    """Codimension: dim of the ambient (quotient) ring minus dim R/I."""
    return ambient_dimension(ideal.ring) - dimension(ideal)

"""Cox-ring-level predicates.

Ambient constructors for products of projective spaces and the Segre
quotient of P^1 x P^1, the subscheme-ideal operator (saturation against the
irrelevant ideal), and the complete-intersection / strict-complete-
intersection tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InhomogeneousError
from .groebner import IdealHandle, height, ideal_equal, saturate
from .rings import MultigradedRing, Polynomial

_FACTOR_LETTERS = "xyzwuv"


@dataclass(frozen=True)
class CoxAmbient:
    """A Cox ring with distinguished irrelevant generators."""

    ring: MultigradedRing
    label: str
    dims: tuple = ()

    def irrelevant_ideal(self):
        return IdealHandle(self.ring, self.ring.irrelevant)


def make_product_projective(dims, tower):
    """Cox ring of P^{n_1} x ... x P^{n_m} with its block grading.

    Variables come in per-factor blocks (x0..x_{n_1}, y0.., ...); the
    irrelevant ideal is generated by all products of one variable per
    factor.
    """
    dims = tuple(int(n) for n in dims)
    if not dims:
        raise ValueError("need at least one projective factor")
    if any(n < 1 for n in dims):
        raise ValueError("factor dimensions must be >= 1")
    m = len(dims)
    blocks = []
    for i, n in enumerate(dims):
        prefix = _FACTOR_LETTERS[i] if m <= len(_FACTOR_LETTERS) else "x%d_" % i
        blocks.append([("%s%d" % (prefix, j)) for j in range(n + 1)])
    variables = [v for block in blocks for v in block]
    grading = []
    pos = 0
    for n in dims:
        row = [0] * len(variables)
        for j in range(n + 1):
            row[pos + j] = 1
        grading.append(tuple(row))
        pos += n + 1
    ring = MultigradedRing(tower, variables, grading=grading)
    irrelevant = ["*".join(combo) for combo in itertools.product(*blocks)]
    ring.irrelevant = tuple(ring.parse(s) for s in irrelevant)
    return CoxAmbient(ring=ring, label="product-projective", dims=dims)


def make_segre_p1p1(tower):
    """The Cox ring of P^1 x P^1 of Segre type: one Z-grading, all degrees 1.

    A quotient ring: k[z00,z01,z10,z11] modulo the Segre quadric, with the
    maximal ideal of the variables as irrelevant ideal.
    """
    ring = MultigradedRing(tower, ["z00", "z01", "z10", "z11"],
                           grading=[(1, 1, 1, 1)],
                           defining=["z00*z11 - z01*z10"],
                           irrelevant=["z00", "z01", "z10", "z11"])
    return CoxAmbient(ring=ring, label="segre-p1p1", dims=(1, 1))


def make_custom(ring, label="custom"):
    if not ring.irrelevant:
        raise ValueError("custom ambient needs irrelevant generators")
    return CoxAmbient(ring=ring, label=label)


def subscheme_ideal(amb, ideal):
    """The ideal of the subscheme cut out by I: saturation against G."""
    _require_homogeneous(ideal.gens)
    if ideal.is_unit():
        raise ValueError("subscheme ideal of the unit ideal is undefined")
    return saturate(ideal, amb.irrelevant_ideal())


def _require_homogeneous(polys):
    for f in polys:
        if not f.is_zero():
            f.multidegree()  # raises InhomogeneousError


def is_complete_intersection(amb, polys):
    """Height test: the s hypersurfaces cut out codimension s."""
    polys = [amb.ring._coerce_poly(f) for f in polys]
    _validate_hypersurfaces(polys)
    ideal = IdealHandle(amb.ring, polys)
    return height(ideal) == len(polys)


def _validate_hypersurfaces(polys):
    _require_homogeneous(polys)
    for f in polys:
        if f.is_zero():
            raise ValueError("zero polynomial does not define a hypersurface")
        if f.is_constant():
            raise ValueError("unit does not define a hypersurface")


@dataclass(frozen=True)
class StrictCIVerdict:
    """Outcome of the strict-complete-intersection test."""

    status: str  # 'strict' | 'not_strict' | 'not_ci'
    witness: Polynomial = None
    height: int = None
    expected: int = None

    def is_strict(self):
        return self.status == "strict"


def is_strict_ci(amb, polys):
    """Strict iff the generated ideal equals its saturation against G.

    Returns ``not_ci`` when the height test fails; when not strict, the
    witness is the first reduced-basis element of the saturation that does
    not reduce to zero modulo the input ideal.
    """
    ring = amb.ring
    polys = [ring._coerce_poly(f) for f in polys]
    _validate_hypersurfaces(polys)
    ideal = IdealHandle(ring, polys)
    h = height(ideal)
    if h != len(polys):
        return StrictCIVerdict(status="not_ci", height=h, expected=len(polys))
    sat = saturate(ideal, amb.irrelevant_ideal())
    if ideal_equal(sat, ideal):
        return StrictCIVerdict(status="strict", height=h, expected=len(polys))
    witness = next(g for g in sat.reduced_gb() if not ideal.contains(g))
    return StrictCIVerdict(status="not_strict", witness=witness,
                           height=h, expected=len(polys))

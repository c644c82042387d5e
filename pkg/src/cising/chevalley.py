"""Cochain model of a two-step Lie algebra and its bigraded cohomology.

The input is a tangent Lie algebra with degree-1 part of dimension ``a`` and
degree-2 part of dimension ``b``.  The cochain model has one even (polynomial)
generator per degree-1 basis vector and one odd (exterior) generator per
degree-2 basis vector; the differential kills the even generators and sends
the j-th odd generator to the quadratic form

    q_j = 1/2 * sum_{k,l} <e'_j, B(e_k, e_l)> y_k y_l,

so off-diagonal bracket values appear as mixed coefficients and diagonal ones
at half weight -- the same normalization convention as the bracket itself
(:mod:`cising.tangentlie`), which is why :func:`extract_bracket` can invert it
exactly by doubling the square coefficients.

Cohomology is computed one bidegree slice at a time (exterior degree p,
polynomial degree e) by exact rank computations; the differential maps slice
(p, e) to (p-1, e+2).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ValidationError
from .exactq import Mat, rank
from .polyring import Poly, PolyRing

HALF = Fraction(1, 2)


@dataclass
class ChevalleyComplex:
    """Cochain model data: even polynomial ring and odd differentials."""

    even_ring: PolyRing
    differentials: list    # Poly per odd generator; each quadratic or zero

    def __post_init__(self):
        if any(w != 1 for w in self.even_ring.weights):
            raise ValidationError("even generators must all have weight 1")
        for j, q in enumerate(self.differentials):
            if not isinstance(q, Poly) or q.ring != self.even_ring:
                raise ValidationError("differentials must live in the even ring")
            if not q.is_zero() and (not q.is_homogeneous()
                                    or q.homogeneous_degree() != 2):
                raise ValidationError(
                    f"differential {j + 1} is not quadratic: {q}")

    @property
    def even_count(self):
        return self.even_ring.nvars

    @property
    def odd_count(self):
        return len(self.differentials)


@dataclass
class GradedDims:
    """Cohomology dimensions by (exterior degree, polynomial degree)."""

    table: list
    degree: int

    def dim(self, p, e):
        return self.table[p][e]

    def row(self, p):
        return list(self.table[p])


def chevalley_cochain(lie):
    """Cochain model of a tangent Lie algebra."""
    a = lie.fiber.g1_dim
    b = lie.fiber.g2_dim
    ring = PolyRing([f"y{k + 1}" for k in range(a)])
    differentials = []
    for j in range(b):
        q = ring.zero()
        for k in range(a):
            for l in range(a):
                coeff = HALF * lie.bracket[k][l][j]
                if coeff:
                    q = q + ring.var(f"y{k + 1}") * ring.var(f"y{l + 1}") * coeff
        differentials.append(q)
    return ChevalleyComplex(even_ring=ring, differentials=differentials)


def extract_bracket(ce):
    """Invert the quadratic differentials back to a symmetric bracket.

    Mixed coefficients are read off directly; square coefficients are
    doubled.  Exact over the rationals, so
    ``extract_bracket(chevalley_cochain(lie)) == lie.bracket``.
    """
    a, b = ce.even_count, ce.odd_count
    bracket = [[[Fraction(0)] * b for _ in range(a)] for _ in range(a)]
    for j, q in enumerate(ce.differentials):
        for expo, coeff in q.terms.items():
            support = [i for i, e in enumerate(expo) if e]
            if sum(expo) != 2:
                raise ValidationError(f"differential {j + 1} is not quadratic")
            if len(support) == 1:
                k = support[0]
                bracket[k][k][j] = 2 * coeff
            else:
                k, l = support
                bracket[k][l][j] = coeff
                bracket[l][k][j] = coeff
    return bracket


class _SliceComplex:
    """Bidegree slices of the cochain model and their differentials."""

    def __init__(self, ce):
        self.ce = ce
        self._bases = {}
        self._ranks = {}
        self._mats = {}

    def basis(self, p, e):
        key = (p, e)
        if key not in self._bases:
            if p < 0 or p > self.ce.odd_count or e < 0:
                self._bases[key] = []
            else:
                subsets = list(combinations(range(self.ce.odd_count), p))
                monos = self.ce.even_ring.monomials_of_degree(e)
                self._bases[key] = [(s, m) for s in subsets for m in monos]
        return self._bases[key]

    def matrix(self, p, e):
        """Differential from slice (p, e) to slice (p-1, e+2)."""
        key = (p, e)
        if key not in self._mats:
            source = self.basis(p, e)
            target = self.basis(p - 1, e + 2)
            index = {be: i for i, be in enumerate(target)}
            columns = []
            for subset, mono in source:
                col = [Fraction(0)] * len(target)
                for t, j in enumerate(subset):
                    reduced = tuple(x for x in subset if x != j)
                    sign = -1 if t % 2 else 1
                    product = self.ce.differentials[j] * \
                        self.ce.even_ring.monomial(mono)
                    for expo, coeff in product.terms.items():
                        col[index[(reduced, expo)]] += sign * coeff
                columns.append(col)
            self._mats[key] = Mat.from_columns(columns, len(target))
        return self._mats[key]

    def rank(self, p, e):
        key = (p, e)
        if key not in self._ranks:
            if not self.basis(p, e):
                self._ranks[key] = 0
            else:
                self._ranks[key] = rank(self.matrix(p, e))
        return self._ranks[key]


def ce_cohomology(ce, degree):
    """Cohomology dimensions of the cochain model, sliced by bidegree.

    Returns a :class:`GradedDims` with rows indexed by exterior degree
    0..odd_count and columns by polynomial degree 0..degree.  Verifies
    d o d = 0 on every slice it touches.
    """
    degree = int(degree)
    if degree < 0:
        raise ValidationError("truncation degree must be nonnegative")
    slices = _SliceComplex(ce)
    b = ce.odd_count
    table = []
    for p in range(b + 1):
        row = []
        for e in range(degree + 1):
            dim_here = len(slices.basis(p, e))
            rank_out = slices.rank(p, e) if dim_here else 0
            rank_in = slices.rank(p + 1, e - 2) if e >= 2 else 0
            row.append(dim_here - rank_out - rank_in)
            if dim_here and e >= 2 and p >= 1:
                incoming = slices.matrix(p + 1, e - 2)
                outgoing = slices.matrix(p, e)
                if incoming.ncols and outgoing.nrows:
                    assert outgoing.mul(incoming).is_zero(), \
                        "cochain differential does not square to zero"
        table.append(row)
    return GradedDims(table=table, degree=degree)

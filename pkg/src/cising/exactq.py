"""Exact dense linear algebra over the rationals.

Everything here runs on ``fractions.Fraction`` -- no floating point, no
tolerances.  The routines are deterministic by convention, and downstream
code leans on those conventions, so they are contract rather than accident:

* row reduction picks the first usable pivot in each column, scanning top
  to bottom;
* ``kernel_basis`` emits one vector per non-pivot column, free coordinate
  set to 1, in column order;
* ``cokernel_presentation`` projects onto the non-pivot coordinates of the
  column space, in coordinate order.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import CommutativityError, ExactnessError

ZERO = Fraction(0)
ONE = Fraction(1)


class Mat:
    """Dense rational matrix, row-major.

    The shape is stored explicitly so matrices with zero rows or zero
    columns stay well formed (they show up as soon as a kernel or cokernel
    is trivial).
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = [[e if isinstance(e, Fraction) else Fraction(e) for e in row]
                for row in rows]
        if rows:
            if ncols is None:
                ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise ValueError("ragged matrix rows")
        elif ncols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        """Assemble a matrix from a list of column vectors."""
        for col in columns:
            if len(col) != nrows:
                raise ValueError("column length does not match row count")
        return cls([[Fraction(col[i]) for col in columns] for i in range(nrows)],
                   len(columns))

    def column(self, j):
        return [row[j] for row in self.rows]

    def transpose(self):
        return Mat([[self.rows[i][j] for i in range(self.nrows)]
                    for j in range(self.ncols)], self.nrows)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for row in self.rows:
            out.append([sum((row[k] * other.rows[k][j] for k in range(self.ncols)),
                            ZERO) for j in range(other.ncols)])
        return Mat(out, other.ncols)

    def vec(self, v):
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return [sum((row[k] * v[k] for k in range(self.ncols)), ZERO)
                for row in self.rows]

    def is_zero(self):
        return all(e == 0 for row in self.rows for e in row)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols,
                     tuple(tuple(row) for row in self.rows)))

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, {self.rows!r})"


def rref(m):
    """Reduced row echelon form.

    Returns ``(reduced, pivots)`` where ``pivots`` lists the pivot columns in
    order.  The pivot for each column is the first nonzero entry among the
    unused rows, top to bottom.
    """
    rows = [list(row) for row in m.rows]
    pivots = []
    prow = 0
    for col in range(m.ncols):
        if prow >= m.nrows:
            break
        sel = None
        for r in range(prow, m.nrows):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        if sel != prow:
            rows[prow], rows[sel] = rows[sel], rows[prow]
        inv = ONE / rows[prow][col]
        rows[prow] = [e * inv for e in rows[prow]]
        lead = rows[prow]
        for r in range(m.nrows):
            if r != prow and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], lead)]
        pivots.append(col)
        prow += 1
    return Mat(rows, m.ncols), pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Ordered basis of the right kernel of ``m``.

    One vector per non-pivot column: that free coordinate is 1, pivot
    coordinates are filled from the reduced form, everything else is 0.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for col in range(m.ncols):
        if col in pivot_set:
            continue
        v = [ZERO] * m.ncols
        v[col] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -reduced.rows[i][col]
        basis.append(v)
    return basis


def cokernel_presentation(m):
    """Projection presenting the cokernel of ``m``.

    Returns a ``(nrows - rank) x nrows`` matrix ``q`` with ``q * m = 0``
    whose rows are indexed by the non-pivot coordinates of the column space
    (computed from the transpose), in coordinate order.  ``q`` restricted to
    those coordinates is the identity, so it is onto.
    """
    reduced, pivots = rref(m.transpose())
    pivot_set = set(pivots)
    free = [c for c in range(m.nrows) if c not in pivot_set]
    rows = []
    for fc in free:
        row = [ZERO] * m.nrows
        row[fc] = ONE
        for j, pc in enumerate(pivots):
            row[pc] = -reduced.rows[j][fc]
        rows.append(row)
    return Mat(rows, m.nrows)


class IncrementalSpan:
    """A subspace grown one vector at a time, kept in reduced echelon form.

    ``add`` reduces the incoming vector against the stored rows (distinct
    pivots, mutually reduced) and either absorbs it -- returning True, the
    vector was independent -- or rejects it as already in the span.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = []

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec):
        v = [e if isinstance(e, Fraction) else Fraction(e) for e in vec]
        for pivot, row in self.rows:
            c = v[pivot]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        v = self._reduce(vec)
        p = next((i for i, a in enumerate(v) if a), None)
        if p is None:
            return False
        inv = ONE / v[p]
        v = [a * inv for a in v]
        for idx, (pivot, row) in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[idx] = (pivot, [a - c * b for a, b in zip(row, v)])
        self.rows.append((p, v))
        return True

    def contains(self, vec):
        return all(a == 0 for a in self._reduce(vec))


def solve(m, b):
    """One exact solution of ``m x = b`` (free coordinates 0), or None."""
    if len(b) != m.nrows:
        raise ValueError("right-hand side length does not match row count")
    aug = Mat([list(row) + [bv] for row, bv in zip(m.rows, b)], m.ncols + 1)
    reduced, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [ZERO] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = reduced.rows[i][m.ncols]
    return x


@dataclass
class SubquotientMap:
    """A map from a spanned subspace to a presented quotient.

    ``domain_basis`` spans the subspace (as column vectors of the ambient
    space), ``codomain_projection`` presents the quotient, and ``matrix`` is
    the map written in those bases: column ``k`` is the image of
    ``domain_basis[k]`` in quotient coordinates.
    """

    domain_basis: list
    codomain_projection: Mat
    matrix: Mat


def _check_exact_row(a, b, which):
    if a.nrows != b.ncols:
        raise ExactnessError(f"{which} row: middle dimensions disagree")
    if kernel_basis(a):
        raise ExactnessError(f"{which} row: first map is not injective")
    if rank(b) != b.nrows:
        raise ExactnessError(f"{which} row: second map is not surjective")
    if not b.mul(a).is_zero():
        raise ExactnessError(f"{which} row: composite is nonzero")
    if rank(a) + rank(b) != a.nrows:
        raise ExactnessError(f"{which} row: not exact at the middle term")


def snake_boundary(top, bottom, verticals, rng=None):
    """Connecting map of a six-term snake diagram.

    ``top = (a, b)`` and ``bottom = (a2, b2)`` are short exact rows,
    ``verticals = (alpha, beta, gamma)`` the three downward maps.  Returns a
    :class:`SubquotientMap` from ``ker(gamma)`` to ``coker(alpha)``: lift
    along ``b``, push through ``beta``, pull back along ``a2``, project.

    The interior lift is not unique; pass ``rng`` (a ``random.Random``) to
    randomize it.  The resulting map is identical for every lift -- that is
    the point of the construction, and tests rely on it.
    """
    a, b = top
    a2, b2 = bottom
    alpha, beta, gamma = verticals
    _check_exact_row(a, b, "top")
    _check_exact_row(a2, b2, "bottom")
    if beta.mul(a) != a2.mul(alpha):
        raise CommutativityError("left square does not commute")
    if gamma.mul(b) != b2.mul(beta):
        raise CommutativityError("right square does not commute")

    kernel = kernel_basis(gamma)
    projection = cokernel_presentation(alpha)
    lift_freedom = kernel_basis(b) if rng is not None else []
    columns = []
    for c in kernel:
        u = solve(b, c)
        if rng is not None:
            for kv in lift_freedom:
                coeff = Fraction(rng.randint(-4, 4))
                u = [ui + coeff * ki for ui, ki in zip(u, kv)]
        w = beta.vec(u)
        v = solve(a2, w)
        if v is None:
            raise ExactnessError("pushed lift is not in the image of the bottom row")
        columns.append(projection.vec(v))
    matrix = Mat.from_columns(columns, projection.nrows)
    return SubquotientMap(kernel, projection, matrix)

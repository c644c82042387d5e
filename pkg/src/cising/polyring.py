"""Multivariate polynomials over the rationals with weighted gradings.

Provides polynomial arithmetic, a small text grammar for polynomials,
Groebner bases that remember how each basis element was assembled from the
input generators, normal forms, Hilbert functions of graded quotients,
a regular-sequence test, and the square-zero machinery for nilpotent
thickening towers.

Coefficients are ``fractions.Fraction`` throughout; there is no floating
point.  Two monomial orders are supported: weight-compatible graded reverse
lexicographic (``"grevlex"``, the default) and plain lexicographic
(``"lex"``).  Everything is deterministic -- pair selection, reducer
selection and output ordering follow fixed conventions spelled out in the
docstrings.
"""

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import (
    GradingError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)

ZERO = Fraction(0)
ONE = Fraction(1)

#: Default cap on stored monomials per Groebner run.
DEFAULT_MAX_MONOMIALS = 10**6

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PolyRing:
    """A rational polynomial ring with positive integer weights and an order.

    The order is ``"grevlex"`` (graded by the weights, ties broken reverse
    lexicographically) or ``"lex"`` on the variables as listed.
    """

    __slots__ = ("variables", "weights", "order", "_index")

    def __init__(self, variables, weights=None, order="grevlex"):
        variables = tuple(variables)
        for name in variables:
            if not _NAME_RE.match(name):
                raise ValidationError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValidationError("duplicate variable names")
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables):
            raise ValidationError("need one weight per variable")
        if any(w < 1 for w in weights):
            raise ValidationError("weights must be positive integers")
        if order not in ("grevlex", "lex"):
            raise ValidationError(f"unknown monomial order {order!r}")
        self.variables = variables
        self.weights = weights
        self.order = order
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.weights == other.weights and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.weights, self.order))

    def __repr__(self):
        return (f"PolyRing({list(self.variables)!r}, weights={list(self.weights)!r}, "
                f"order={self.order!r})")

    def wdeg(self, expo):
        return sum(w * e for w, e in zip(self.weights, expo))

    def sort_key(self, expo):
        """Sortable key: bigger key means bigger monomial in the ring order."""
        if self.order == "lex":
            return tuple(expo)
        return (self.wdeg(expo), tuple(-e for e in reversed(expo)))

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(0,) * self.nvars: ONE})

    def constant(self, c):
        c = Fraction(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name):
        i = self._index.get(name)
        if i is None:
            raise ValidationError(f"no variable named {name!r}")
        expo = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {expo: ONE})

    def gens(self):
        return [self.var(name) for name in self.variables]

    def monomial(self, expo, coeff=ONE):
        coeff = Fraction(coeff)
        expo = tuple(int(e) for e in expo)
        return Poly(self, {expo: coeff} if coeff else {})

    def monomials_of_degree(self, d):
        """All exponent tuples of weighted degree exactly ``d``, listed with
        earlier variables taking the largest exponents first."""
        out = []

        def rec(idx, remaining, prefix):
            if idx == self.nvars:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            w = self.weights[idx]
            for e in range(remaining // w, -1, -1):
                rec(idx + 1, remaining - w * e, prefix + [e])

        if d >= 0:
            rec(0, d, [])
        return out

    def format_exponent(self, expo):
        parts = []
        for name, e in zip(self.variables, expo):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def parse(self, text):
        return parse_poly(self, text)


def _expo_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _expo_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _expo_divides(a, b):
    """True when monomial ``a`` divides monomial ``b``."""
    return all(x <= y for x, y in zip(a, b))


def _expo_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """A polynomial: an immutable mapping from exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms):
        clean = {}
        for expo, coeff in terms.items():
            if not isinstance(coeff, Fraction):
                coeff = Fraction(coeff)
            if coeff:
                clean[expo] = coeff
        self.ring = ring
        self.terms = clean
        self._lead = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead(self):
        """Leading ``(exponent, coefficient)`` pair in the ring order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if self._lead is None:
            self._lead = max(self.terms, key=self.ring.sort_key)
        return self._lead, self.terms[self._lead]

    @property
    def lm(self):
        return self.lead()[0]

    @property
    def lc(self):
        return self.lead()[1]

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, ZERO)

    def wdegree(self):
        """Largest weighted degree in the support; None for the zero poly."""
        if not self.terms:
            return None
        return max(self.ring.wdeg(e) for e in self.terms)

    def homogeneous_degree(self):
        """The common weighted degree of all terms; None for the zero poly.

        Raises :class:`GradingError` when the support mixes degrees.
        """
        if not self.terms:
            return None
        degrees = {self.ring.wdeg(e) for e in self.terms}
        if len(degrees) > 1:
            raise GradingError(f"not homogeneous: {self} has degrees {sorted(degrees)}")
        return degrees.pop()

    def is_homogeneous(self):
        if not self.terms:
            return True
        return len({self.ring.wdeg(e) for e in self.terms}) == 1

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            s = terms.get(expo, ZERO) + coeff
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
        return Poly(self.ring, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: c * v for e, v in self.terms.items()})
        if other.ring != self.ring:
            raise ValidationError("polynomials from different rings")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = _expo_add(e1, e2)
                s = terms.get(expo, ZERO) + c1 * c2
                if s:
                    terms[expo] = s
                else:
                    del terms[expo]
        return Poly(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self == self.ring.constant(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def diff(self, var):
        """Partial derivative with respect to a variable (name or index)."""
        i = self.ring._index[var] if isinstance(var, str) else var
        terms = {}
        for expo, coeff in self.terms.items():
            e = expo[i]
            if e:
                lowered = tuple(v - 1 if j == i else v for j, v in enumerate(expo))
                terms[lowered] = terms.get(lowered, ZERO) + coeff * e
        return Poly(self.ring, terms)

    def subs(self, point):
        """Evaluate at a rational point (one value per variable)."""
        if len(point) != self.ring.nvars:
            raise ValidationError("point length does not match variable count")
        point = [Fraction(p) for p in point]
        total = ZERO
        for expo, coeff in self.terms.items():
            value = coeff
            for p, e in zip(point, expo):
                for _ in range(e):
                    value *= p
            total += value
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda kv: self.ring.sort_key(kv[0]), reverse=True)
        parts = []
        for idx, (expo, coeff) in enumerate(items):
            mono = self.ring.format_exponent(expo)
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValidationError("polynomials from different rings")
            return other
        return self.ring.constant(other)


# ---------------------------------------------------------------------------
# parsing
#
# poly   := ['-'] term (('+'|'-') term)*
# term   := coeff ('*' varpow)*  |  varpow ('*' varpow)*
# varpow := name ('^' nat)?
# coeff  := nat ('/' posnat)?
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                       r"|(?P<op>[-+*/^])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


def parse_poly(ring, text):
    """Parse a polynomial string into ``ring``.

    Multiplication is always explicit (``2*x*y``), exponents use ``^`` with a
    nonnegative integer, coefficients are integers or fractions ``p/q``.
    Unknown variable names and malformed exponents raise :class:`ParseError`
    with the offending position.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(kind, what):
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError(f"expected {what} at end of input")
        if tok[0] != kind:
            raise ParseError(f"expected {what} at position {tok[2]}, found {tok[1]!r}")
        pos += 1
        return tok

    def parse_varpow():
        tok = take("name", "a variable name")
        idx = ring._index.get(tok[1])
        if idx is None:
            raise ParseError(f"unknown variable {tok[1]!r} at position {tok[2]}")
        exponent = 1
        nxt = peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
            take("op", "'^'")
            exponent = int(take("int", "a nonnegative integer exponent")[1])
        return idx, exponent

    def parse_term():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError("expected a term at end of input")
        coeff = ONE
        expo = [0] * ring.nvars
        if tok[0] == "int":
            take("int", "an integer")
            num = int(tok[1])
            nxt = peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                take("op", "'/'")
                dtok = take("int", "a positive denominator")
                den = int(dtok[1])
                if den == 0:
                    raise ParseError(f"zero denominator at position {dtok[2]}")
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            while (nxt := peek()) is not None and nxt[0] == "op" and nxt[1] == "*":
                take("op", "'*'")
                idx, e = parse_varpow()
                expo[idx] += e
        elif tok[0] == "name":
            idx, e = parse_varpow()
            expo[idx] += e
            while (nxt := peek()) is not None and nxt[0] == "op" and nxt[1] == "*":
                take("op", "'*'")
                idx, e = parse_varpow()
                expo[idx] += e
        else:
            raise ParseError(f"expected a term at position {tok[2]}, found {tok[1]!r}")
        return tuple(expo), coeff

    terms = {}

    def accumulate(sign):
        expo, coeff = parse_term()
        s = terms.get(expo, ZERO) + sign * coeff
        if s:
            terms[expo] = s
        else:
            terms.pop(expo, None)

    tok = peek()
    if tok is None:
        raise ParseError("empty polynomial")
    sign = ONE
    if tok[0] == "op" and tok[1] == "-":
        take("op", "'-'")
        sign = -ONE
    accumulate(sign)
    while (tok := peek()) is not None:
        if tok[0] != "op" or tok[1] not in "+-":
            raise ParseError(f"expected '+' or '-' at position {tok[2]}, found {tok[1]!r}")
        take("op", "'+' or '-'")
        accumulate(ONE if tok[1] == "+" else -ONE)
    return Poly(ring, terms)


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------


@dataclass
class GroebnerBasis:
    """A reduced Groebner basis together with its build certificate.

    ``basis`` is monic and sorted by leading monomial (ascending).
    ``representation[i][k]`` are polynomials with
    ``basis[i] == sum_k representation[i][k] * generators[k]`` exactly.
    """

    ring: PolyRing
    generators: list
    basis: list
    representation: list

    def __iter__(self):
        return iter(self.basis)


def _reduce_with_cofactors(p, reducers, counter=None):
    """Fully reduce ``p`` by ``reducers`` (scanned in order; first divisor
    wins).  Returns ``(remainder, cofactors)`` with
    ``p == sum(cofactors[k] * reducers[k]) + remainder`` and no remainder term
    divisible by any reducer's leading monomial."""
    ring = p.ring
    cofactors = [ring.zero() for _ in reducers]
    leads = [g.lead() for g in reducers]
    rem_terms = {}
    cur = p
    while cur.terms:
        expo, coeff = cur.lead()
        hit = None
        for idx, (glm, glc) in enumerate(leads):
            if _expo_divides(glm, expo):
                hit = idx
                break
        if hit is None:
            rem_terms[expo] = coeff
            cur = Poly(ring, {e: c for e, c in cur.terms.items() if e != expo})
        else:
            glm, glc = leads[hit]
            q = ring.monomial(_expo_sub(expo, glm), coeff / glc)
            cofactors[hit] = cofactors[hit] + q
            cur = cur - q * reducers[hit]
            if counter is not None:
                counter.charge(len(cur.terms))
    return Poly(ring, rem_terms), cofactors


def normal_form(p, gb):
    """Fully reduced normal form of ``p`` modulo a Groebner basis."""
    reducers = gb.basis if isinstance(gb, GroebnerBasis) else list(gb)
    if not reducers:
        return p
    return _reduce_with_cofactors(p, reducers)[0]


def normal_form_with_cofactors(p, gb):
    """Normal form plus the cofactors against the basis elements."""
    reducers = gb.basis if isinstance(gb, GroebnerBasis) else list(gb)
    if not reducers:
        return p, []
    return _reduce_with_cofactors(p, reducers)


class _MonomialBudget:
    """Cumulative monomial counter enforcing a resource cap."""

    __slots__ = ("cap", "used")

    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def charge(self, n):
        self.used += n
        if self.cap is not None and self.used > self.cap:
            raise ResourceLimitError(
                f"monomial cap {self.cap} exceeded during Groebner computation")


def buchberger(generators, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Reduced Groebner basis with representation tracking.

    Pair selection is deterministic: lowest weighted lcm degree first, ties
    by the pair's indices.  The returned basis is monic, fully interreduced,
    and sorted by leading monomial; ``representation`` expresses every basis
    element exactly in terms of the input generators (zero and redundant
    inputs included, with zero rows/columns where appropriate).
    """
    generators = list(generators)
    if not generators:
        raise ValidationError("need at least one generator (possibly zero)")
    ring = generators[0].ring
    for g in generators:
        if g.ring != ring:
            raise ValidationError("generators from different rings")
    budget = _MonomialBudget(max_monomials)

    basis = []      # monic polys
    reps = []       # rep rows: basis[i] = sum_k reps[i][k] * generators[k]
    unit = [ring.zero() for _ in generators]

    def add_element(p, rep):
        lc = p.lc
        if lc != 1:
            inv = ONE / lc
            p = p * inv
            rep = [r * inv for r in rep]
        basis.append(p)
        reps.append(rep)
        budget.charge(len(p.terms))
        i = len(basis) - 1
        for j in range(i):
            if basis[j] is not None:
                lcm = _expo_lcm(basis[j].lm, p.lm)
                heapq.heappush(pairs, (ring.wdeg(lcm), j, i))

    pairs = []
    for k, g in enumerate(generators):
        if g.is_zero():
            continue
        row = list(unit)
        row[k] = ring.one()
        add_element(g, row)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        gi, gj = basis[i], basis[j]
        lcm = _expo_lcm(gi.lm, gj.lm)
        mi = ring.monomial(_expo_sub(lcm, gi.lm))
        mj = ring.monomial(_expo_sub(lcm, gj.lm))
        s = mi * gi - mj * gj
        if s.is_zero():
            continue
        remainder, cofs = _reduce_with_cofactors(s, basis, budget)
        if remainder.is_zero():
            continue
        rep = [mi * a - mj * b for a, b in zip(reps[i], reps[j])]
        for k, q in enumerate(cofs):
            if not q.is_zero():
                rep = [r - q * s_k for r, s_k in zip(rep, reps[k])]
        add_element(remainder, rep)

    # interreduce: prune elements whose lead is divisible by another lead,
    # then tail-reduce each survivor against the others.
    order = sorted(range(len(basis)), key=lambda i: ring.sort_key(basis[i].lm))
    kept = []
    for i in order:
        if any(_expo_divides(basis[j].lm, basis[i].lm) for j in kept):
            continue
        kept.append(i)
    final = [basis[i] for i in kept]
    final_reps = [reps[i] for i in kept]
    for idx in range(len(final)):
        others = [final[k] for k in range(len(final)) if k != idx]
        if not others:
            continue
        remainder, cofs = _reduce_with_cofactors(final[idx], others)
        rep = final_reps[idx]
        pos = 0
        for k in range(len(final)):
            if k == idx:
                continue
            q = cofs[pos]
            pos += 1
            if not q.is_zero():
                rep = [r - q * s_k for r, s_k in zip(rep, final_reps[k])]
        final[idx] = remainder
        final_reps[idx] = rep

    order = sorted(range(len(final)), key=lambda i: ring.sort_key(final[i].lm))
    return GroebnerBasis(ring=ring,
                         generators=generators,
                         basis=[final[i] for i in order],
                         representation=[final_reps[i] for i in order])


# ---------------------------------------------------------------------------
# graded quotient rings
# ---------------------------------------------------------------------------


class RingPresentation:
    """A graded quotient of a weighted polynomial ring by an ideal.

    The ideal's Groebner basis is computed on construction; normal forms and
    standard-monomial counts are then exact and deterministic.
    """

    __slots__ = ("ring", "ideal", "gb")

    def __init__(self, ring, ideal, max_monomials=DEFAULT_MAX_MONOMIALS):
        ideal = list(ideal)
        for g in ideal:
            if not isinstance(g, Poly) or g.ring != ring:
                raise ValidationError("ideal generators must be polynomials in the ring")
        self.ring = ring
        self.ideal = ideal
        if any(not g.is_zero() for g in ideal):
            self.gb = buchberger(ideal, max_monomials=max_monomials)
        else:
            self.gb = GroebnerBasis(ring=ring, generators=ideal, basis=[],
                                    representation=[])

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal) or "0"
        return f"RingPresentation({self.ring!r} mod ({gens}))"

    def normal_form(self, p):
        return normal_form(p, self.gb)

    def standard_monomials(self, d):
        """Exponents of weighted degree ``d`` outside the leading-term ideal."""
        leads = [g.lm for g in self.gb.basis]
        return [m for m in self.ring.monomials_of_degree(d)
                if not any(_expo_divides(lt, m) for lt in leads)]

    def dim_degree(self, d):
        return len(self.standard_monomials(d))

    def require_homogeneous(self):
        for k, g in enumerate(self.ideal):
            if not g.is_homogeneous():
                raise GradingError(
                    f"ideal generator {k + 1} is not homogeneous: {g}")


def hilbert_function(presentation, degree):
    """Dimensions of the graded pieces of the quotient, degrees 0..degree.

    Counts standard monomials of the leading-term ideal; requires every
    ideal generator to be homogeneous for the declared weights.
    """
    presentation.require_homogeneous()
    return [presentation.dim_degree(d) for d in range(degree + 1)]


def is_regular_sequence(ring, gens, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Exact regular-sequence test for homogeneous generators.

    Computes the Krull dimension of the quotient from the leading-term
    ideal (largest variable subset meeting no leading support) and compares
    with ``nvars - len(gens)``.
    """
    gens = list(gens)
    for k, g in enumerate(gens):
        if not isinstance(g, Poly) or g.ring != ring:
            raise ValidationError("generators must be polynomials in the ring")
        if not g.is_homogeneous():
            raise GradingError(f"generator {k + 1} is not homogeneous: {g}")
    if not gens:
        return True
    if any(g.is_zero() for g in gens):
        return False
    gb = buchberger(gens, max_monomials=max_monomials)
    supports = []
    for g in gb.basis:
        support = frozenset(i for i, e in enumerate(g.lm) if e)
        if not support:          # a unit: the quotient is the zero ring
            return ring.nvars - len(gens) == -1
        supports.append(support)
    n = ring.nvars
    best = -1
    for mask in range(1 << n):
        subset = {i for i in range(n) if mask >> i & 1}
        if any(s <= subset for s in supports):
            continue
        best = max(best, len(subset))
    return best == n - len(gens)


def tower_ring(ring, gens, n, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Presentation of the order-``n`` thickening: quotient by the n-th
    powers of the given generators.  ``n`` must be at least 1."""
    n = int(n)
    if n < 1:
        raise ValidationError("thickening order n must be >= 1")
    gens = list(gens)
    if not gens:
        raise ValidationError("need at least one generator")
    return RingPresentation(ring, [g**n for g in gens],
                            max_monomials=max_monomials)


def is_square_zero(presentation, gens):
    """True when the ideal spanned by ``gens`` squares to zero in the
    presented quotient: every pairwise product reduces to 0."""
    gens = list(gens)
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            if not presentation.normal_form(gens[i] * gens[j]).is_zero():
                return False
    return True


def square_zero_filtration(ring, gens, n, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Per-stage square-zero checks for the order-``n`` thickening.

    Stage ``k`` (for ``k = n-1`` down to ``1``) checks that the products of
    ``k`` generators span a square-zero ideal in the quotient by the products
    of ``k+1`` generators together with the pure ``n``-th powers.  Returns the
    list of booleans in that order (expected all True).
    """
    n = int(n)
    if n < 1:
        raise ValidationError("thickening order n must be >= 1")
    gens = list(gens)
    if not gens:
        raise ValidationError("need at least one generator")

    def products(k):
        out = []
        for combo in combinations_with_replacement(range(len(gens)), k):
            p = ring.one()
            for i in combo:
                p = p * gens[i]
            out.append(p)
        return out

    pure = [g**n for g in gens]
    stages = []
    for k in range(n - 1, 0, -1):
        stage = RingPresentation(ring, products(k + 1) + pure,
                                 max_monomials=max_monomials)
        stages.append(is_square_zero(stage, products(k)))
    return stages

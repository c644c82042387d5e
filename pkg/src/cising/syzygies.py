"""Groebner bases and syzygies for free modules over a polynomial ring.

An element of a rank-``r`` free module is a plain list of ``r`` polynomials.
The order on module terms is term-over-position: ring monomials are compared
first, ties broken toward the smaller component index.  Everything is exact
and deterministic, mirroring the scalar routines in :mod:`cising.polyring`.

Syzygies are computed by the classical two-step scheme: build a module
Groebner basis while tracking how each basis vector was assembled from the
input columns, then convert the trivial relations among S-vectors (each one
reduces to zero, and the reduction is a certificate) into generators of the
full syzygy module of the inputs.
"""

import heapq
from dataclasses import dataclass

from .errors import ValidationError
from .polyring import (
    DEFAULT_MAX_MONOMIALS,
    Poly,
    PolyRing,
    _expo_divides,
    _expo_lcm,
    _expo_sub,
    _MonomialBudget,
)


def vec_zero(ring, rank):
    return [ring.zero() for _ in range(rank)]


def vec_is_zero(v):
    return all(p.is_zero() for p in v)


def vec_lead(v):
    """Leading ``(component, exponent, coefficient)`` of a module vector.

    The winning term has the largest ring monomial; among components sharing
    that monomial the smallest index wins.  Returns None for the zero vector.
    """
    best_key = None
    best = None
    for comp, p in enumerate(v):
        if p.is_zero():
            continue
        expo, coeff = p.lead()
        key = (p.ring.sort_key(expo), -comp)
        if best_key is None or key > best_key:
            best_key = key
            best = (comp, expo, coeff)
    return best


def _validate_columns(ring, rank, columns):
    columns = [list(c) for c in columns]
    for c in columns:
        if len(c) != rank:
            raise ValidationError("module vector length does not match the rank")
        for p in c:
            if not isinstance(p, Poly) or p.ring != ring:
                raise ValidationError("module entries must be polynomials in the ring")
    return columns


def _reduce_vec_with_cofactors(ring, v, reducers, counter=None):
    """Fully reduce a module vector, scanning reducers in order.

    Returns ``(remainder, cofactors)`` with
    ``v == sum(cofactors[k] * reducers[k]) + remainder`` componentwise and no
    remainder term divisible by a reducer's lead (same component, dividing
    monomial).
    """
    cofactors = [ring.zero() for _ in reducers]
    leads = [vec_lead(g) for g in reducers]
    rem = [ring.zero() for _ in v]
    cur = list(v)
    while True:
        led = vec_lead(cur)
        if led is None:
            break
        comp, expo, coeff = led
        hit = None
        for idx, gl in enumerate(leads):
            if gl is not None and gl[0] == comp and _expo_divides(gl[1], expo):
                hit = idx
                break
        if hit is None:
            t = ring.monomial(expo, coeff)
            rem[comp] = rem[comp] + t
            cur[comp] = cur[comp] - t
        else:
            q = ring.monomial(_expo_sub(expo, leads[hit][1]), coeff / leads[hit][2])
            cofactors[hit] = cofactors[hit] + q
            cur = [c - q * gc for c, gc in zip(cur, reducers[hit])]
            if counter is not None:
                counter.charge(sum(len(c.terms) for c in cur))
    return rem, cofactors


@dataclass
class ModuleGroebnerBasis:
    """A module Groebner basis with its build certificate.

    ``basis`` vectors are monic in their lead term.  Unlike the scalar case
    the basis is *not* interreduced -- redundant members are kept because the
    syzygy extraction needs reduction certificates against the full list.
    ``representation[i][k]`` are polynomials with
    ``basis[i] == sum_k representation[i][k] * generators[k]`` componentwise.
    """

    ring: PolyRing
    rank: int
    generators: list
    basis: list
    representation: list


def module_buchberger(ring, rank, columns, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Module Groebner basis of the span of ``columns`` inside ``R^rank``.

    Pair selection is deterministic: only pairs whose leads share a
    component are formed, lowest weighted lcm degree first, ties by index.
    """
    columns = _validate_columns(ring, rank, columns)
    budget = _MonomialBudget(max_monomials)

    basis = []
    reps = []
    leads = []
    pairs = []

    def add_element(v, rep):
        comp, expo, coeff = vec_lead(v)
        if coeff != 1:
            inv = 1 / coeff
            v = [p * inv for p in v]
            rep = [r * inv for r in rep]
        basis.append(v)
        reps.append(rep)
        budget.charge(sum(len(p.terms) for p in v))
        i = len(basis) - 1
        for j, (jcomp, jexpo) in enumerate(leads):
            if jcomp == comp:
                lcm = _expo_lcm(jexpo, expo)
                heapq.heappush(pairs, (ring.wdeg(lcm), j, i))
        leads.append((comp, expo))

    unit = [ring.zero() for _ in columns]
    for k, c in enumerate(columns):
        if vec_is_zero(c):
            continue
        row = list(unit)
        row[k] = ring.one()
        add_element(c, row)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        (ci, ei), (cj, ej) = leads[i], leads[j]
        lcm = _expo_lcm(ei, ej)
        mi = ring.monomial(_expo_sub(lcm, ei))
        mj = ring.monomial(_expo_sub(lcm, ej))
        s = [mi * a - mj * b for a, b in zip(basis[i], basis[j])]
        if vec_is_zero(s):
            continue
        remainder, cofs = _reduce_vec_with_cofactors(ring, s, basis, budget)
        if vec_is_zero(remainder):
            continue
        rep = [mi * a - mj * b for a, b in zip(reps[i], reps[j])]
        for k, q in enumerate(cofs):
            if not q.is_zero():
                rep = [r - q * s_k for r, s_k in zip(rep, reps[k])]
        add_element(remainder, rep)

    return ModuleGroebnerBasis(ring=ring, rank=rank, generators=columns,
                               basis=basis, representation=reps)


def module_normal_form_with_cofactors(ring, v, gb):
    """Normal form of a module vector plus cofactors against the basis."""
    reducers = gb.basis if isinstance(gb, ModuleGroebnerBasis) else list(gb)
    if not reducers:
        return list(v), []
    return _reduce_vec_with_cofactors(ring, v, reducers)


def module_normal_form(ring, v, gb):
    return module_normal_form_with_cofactors(ring, v, gb)[0]


def module_member(ring, v, gb):
    """True when ``v`` lies in the span of the basis ``gb`` was built from."""
    return vec_is_zero(module_normal_form(ring, v, gb))


def syzygies(ring, rank, columns, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Generators of the syzygy module of ``columns``.

    Returns vectors ``s`` of length ``len(columns)`` with
    ``sum_k s[k] * columns[k] == 0`` componentwise; together they generate
    every such relation.  Zero input columns contribute their unit vectors.
    The output order is deterministic: relations coming from basis pairs
    first (pair order), then one residual relation per input column.
    """
    columns = _validate_columns(ring, rank, columns)
    m = len(columns)
    mgb = module_buchberger(ring, rank, columns, max_monomials=max_monomials)
    budget = _MonomialBudget(max_monomials)
    t = len(mgb.basis)
    leads = [vec_lead(g) for g in mgb.basis]

    # Relations among the basis vectors: every same-component S-vector
    # reduces to zero, and the recorded reduction is the relation.
    basis_relations = []
    for i in range(t):
        for j in range(i + 1, t):
            if leads[i][0] != leads[j][0]:
                continue
            lcm = _expo_lcm(leads[i][1], leads[j][1])
            mi = ring.monomial(_expo_sub(lcm, leads[i][1]))
            mj = ring.monomial(_expo_sub(lcm, leads[j][1]))
            s = [mi * a - mj * b for a, b in zip(mgb.basis[i], mgb.basis[j])]
            remainder, cofs = _reduce_vec_with_cofactors(ring, s, mgb.basis, budget)
            if not vec_is_zero(remainder):
                raise AssertionError(
                    "S-vector failed to reduce to zero against a Groebner basis")
            z = [-q for q in cofs]
            z[i] = z[i] + mi
            z[j] = z[j] - mj
            if not vec_is_zero(z):
                basis_relations.append(z)

    # Express each input column in the basis (remainder must vanish).
    input_cofactors = []
    for c in columns:
        remainder, cofs = _reduce_vec_with_cofactors(ring, c, mgb.basis, budget)
        if not vec_is_zero(remainder):
            raise AssertionError(
                "input column failed to reduce against its own Groebner basis")
        input_cofactors.append(cofs)

    def through_representation(z):
        """Push a relation among basis vectors down to the input columns."""
        out = [ring.zero() for _ in range(m)]
        for i, zi in enumerate(z):
            if zi.is_zero():
                continue
            for k in range(m):
                r = mgb.representation[i][k]
                if not r.is_zero():
                    out[k] = out[k] + zi * r
        return out

    result = [through_representation(z) for z in basis_relations]
    for k in range(m):
        w = [-p for p in through_representation(input_cofactors[k])]
        w[k] = w[k] + ring.one()
        if not vec_is_zero(w):
            result.append(w)
    return result

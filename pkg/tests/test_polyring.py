import random
from fractions import Fraction

import pytest

from cising.errors import (
    GradingError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)
from cising.polyring import (
    PolyRing,
    RingPresentation,
    buchberger,
    hilbert_function,
    is_regular_sequence,
    is_square_zero,
    normal_form,
    normal_form_with_cofactors,
    square_zero_filtration,
    tower_ring,
)

F = Fraction


@pytest.fixture
def xy():
    return PolyRing(["x", "y"])


def rand_poly(rng, ring, max_deg=3, max_terms=4, span=3):
    terms = {}
    monos = [m for d in range(max_deg + 1) for m in ring.monomials_of_degree(d)]
    for _ in range(rng.randint(1, max_terms)):
        expo = rng.choice(monos)
        terms[expo] = F(rng.randint(-span, span))
    return sum((ring.monomial(e, c) for e, c in terms.items()), ring.zero())


# -- parsing and printing ----------------------------------------------------

def test_parse_basic(xy):
    p = xy.parse("x^2 + 2*x*y - 1/2*y^2")
    assert p == xy.var("x")**2 + 2 * xy.var("x") * xy.var("y") \
        - F(1, 2) * xy.var("y")**2


def test_parse_leading_minus_and_constants(xy):
    assert xy.parse("-x + 2") == -xy.var("x") + xy.constant(2)
    assert xy.parse("0").is_zero()
    assert xy.parse("3/4") == xy.constant(F(3, 4))


def test_parse_repeated_variable_factors(xy):
    assert xy.parse("x*x*y") == xy.var("x")**2 * xy.var("y")


def test_parse_errors(xy):
    with pytest.raises(ParseError):
        xy.parse("x^^2")
    with pytest.raises(ParseError):
        xy.parse("z + 1")
    with pytest.raises(ParseError):
        xy.parse("x*2")
    with pytest.raises(ParseError):
        xy.parse("")
    with pytest.raises(ParseError):
        xy.parse("1/0")
    with pytest.raises(ParseError):
        xy.parse("x + ")
    with pytest.raises(ParseError):
        xy.parse("x ? y")


def test_str_parse_round_trip_randomized(xy):
    rng = random.Random(7)
    for _ in range(60):
        p = rand_poly(rng, xy)
        assert xy.parse(str(p)) == p


# -- arithmetic, derivatives, evaluation --------------------------------------

def test_square_expansion(xy):
    x, y = xy.gens()
    assert (x + y)**2 == x**2 + 2 * x * y + y**2


def test_derivative_and_eval(xy):
    p = xy.parse("x^3 + x*y^2 - 2*y")
    assert p.diff("x") == xy.parse("3*x^2 + y^2")
    assert p.diff("y") == xy.parse("2*x*y - 2")
    assert p.subs([F(1, 2), F(2)]) == F(1, 8) + F(1, 2) * 4 - 4


def test_homogeneous_degree(xy):
    assert xy.parse("x^2 + y^2").homogeneous_degree() == 2
    with pytest.raises(GradingError):
        xy.parse("x^2 + y").homogeneous_degree()
    wring = PolyRing(["x", "y"], weights=(1, 2))
    assert wring.parse("x^2 + y").homogeneous_degree() == 2


# -- monomial orders ----------------------------------------------------------

def test_grevlex_leading_terms(xy):
    assert xy.parse("x^2 + y^2").lm == (2, 0)
    assert xy.parse("x*y + y^2").lm == (1, 1)
    assert xy.parse("x^2 - y").lm == (2, 0)


def test_lex_leading_terms():
    ring = PolyRing(["x", "y"], order="lex")
    assert ring.parse("x + y^5").lm == (1, 0)


def test_weighted_grevlex_degree_dominates():
    ring = PolyRing(["x", "y"], weights=(1, 3))
    # y has weighted degree 3, so it beats x^2
    assert ring.parse("x^2 + y").lm == (0, 1)


# -- Groebner bases -----------------------------------------------------------

def test_buchberger_frozen_example(xy):
    gb = buchberger([xy.parse("x^2 - y"), xy.parse("y^2 - x")])
    assert [str(g) for g in gb.basis] == ["y^2 - x", "x^2 - y"]


def test_buchberger_representation_identity(xy):
    gens = [xy.parse("x^2 - y"), xy.parse("y^2 - x")]
    gb = buchberger(gens)
    for g, row in zip(gb.basis, gb.representation):
        combo = sum((c * f for c, f in zip(row, gens)), xy.zero())
        assert combo == g


def test_buchberger_representation_identity_randomized(xy):
    rng = random.Random(19)
    for _ in range(15):
        gens = [rand_poly(rng, xy) for _ in range(2)]
        if all(g.is_zero() for g in gens):
            continue
        gb = buchberger(gens)
        for g, row in zip(gb.basis, gb.representation):
            combo = sum((c * f for c, f in zip(row, gens)), xy.zero())
            assert combo == g


def test_buchberger_spair_certificate_randomized(xy):
    rng = random.Random(29)
    for _ in range(12):
        gens = [rand_poly(rng, xy, max_deg=2), rand_poly(rng, xy, max_deg=3)]
        if all(g.is_zero() for g in gens):
            continue
        gb = buchberger(gens)
        basis = gb.basis
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                ei, ej = basis[i].lm, basis[j].lm
                lcm = tuple(max(a, b) for a, b in zip(ei, ej))
                mi = xy.monomial(tuple(l - e for l, e in zip(lcm, ei)))
                mj = xy.monomial(tuple(l - e for l, e in zip(lcm, ej)))
                s = mi * basis[i] - mj * basis[j]
                assert normal_form(s, gb).is_zero()


def test_ideal_membership_soundness_randomized(xy):
    rng = random.Random(31)
    gens = [xy.parse("x^2 - y"), xy.parse("y^2 - x")]
    gb = buchberger(gens)
    for _ in range(25):
        combo = sum((rand_poly(rng, xy) * g for g in gens), xy.zero())
        assert normal_form(combo, gb).is_zero()


def test_normal_form_frozen_lex():
    ring = PolyRing(["x", "y"], order="lex")
    gb = buchberger([ring.parse("x^2 - y")])
    assert str(normal_form(ring.parse("x^3"), gb)) == "x*y"


def test_normal_form_idempotent_randomized(xy):
    rng = random.Random(37)
    gb = buchberger([xy.parse("x^2 - y"), xy.parse("y^2 - x")])
    for _ in range(25):
        p = rand_poly(rng, xy, max_deg=4)
        nf = normal_form(p, gb)
        assert normal_form(nf, gb) == nf


def test_normal_form_cofactors_identity(xy):
    rng = random.Random(41)
    gb = buchberger([xy.parse("x^2"), xy.parse("y^2")])
    for _ in range(25):
        p = rand_poly(rng, xy, max_deg=4)
        r, cofs = normal_form_with_cofactors(p, gb)
        rebuilt = sum((c * b for c, b in zip(cofs, gb.basis)), r)
        assert rebuilt == p


def test_buchberger_deterministic(xy):
    gens = [xy.parse("x^2 - y"), xy.parse("y^2 - x"), xy.parse("x*y - 1")]
    first = buchberger(gens)
    second = buchberger(gens)
    assert [str(g) for g in first.basis] == [str(g) for g in second.basis]
    assert [[str(c) for c in row] for row in first.representation] == \
           [[str(c) for c in row] for row in second.representation]


def test_monomial_cap(xy):
    with pytest.raises(ResourceLimitError):
        buchberger([xy.parse("x^2 - y"), xy.parse("y^2 - x")], max_monomials=3)


# -- Hilbert functions ---------------------------------------------------------

def series_product(a, b, bound):
    out = [F(0)] * (bound + 1)
    for i, ai in enumerate(a):
        if i > bound:
            break
        for j, bj in enumerate(b):
            if i + j > bound:
                break
            out[i + j] += ai * bj
    return out


def series_quotient(num, den, bound):
    assert den[0] == 1
    out = []
    for k in range(bound + 1):
        val = F(num[k]) if k < len(num) else F(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            val -= den[i] * out[k - i]
        out.append(val)
    return out


def hilbert_series_oracle(weights, rel_degrees, bound):
    num = [F(1)]
    for d in rel_degrees:
        minus = [F(0)] * (d + 1)
        minus[0], minus[d] = F(1), F(-1)
        num = series_product(num, minus, bound)
    den = [F(1)]
    for w in weights:
        minus = [F(0)] * (w + 1)
        minus[0], minus[w] = F(1), F(-1)
        den = series_product(den, minus, bound)
    return [int(c) for c in series_quotient(num, den, bound)]


def test_hilbert_frozen_circle(xy):
    rp = RingPresentation(xy, [xy.parse("x^2 + y^2")])
    assert hilbert_function(rp, 4) == [1, 2, 2, 2, 2]


def test_hilbert_weighted_free_ring():
    ring = PolyRing(["x", "y"], weights=(1, 2))
    rp = RingPresentation(ring, [])
    assert hilbert_function(rp, 4) == [1, 1, 2, 2, 3]


def test_hilbert_rejects_inhomogeneous(xy):
    rp = RingPresentation(xy, [xy.parse("x^2 - y")])
    with pytest.raises(GradingError):
        hilbert_function(rp, 3)


def test_hilbert_matches_series_oracle():
    cases = [
        (PolyRing(["x", "y"]), ["x^2", "y^2"]),
        (PolyRing(["x", "y"]), ["x^2 + y^2"]),
        (PolyRing(["x", "y"], weights=(1, 2)), ["y^2 + x^4"]),
        (PolyRing(["x", "y", "z"]), ["x^2 + y*z", "z^3"]),
    ]
    for ring, rel_strings in cases:
        rels = [ring.parse(s) for s in rel_strings]
        assert is_regular_sequence(ring, rels)
        rp = RingPresentation(ring, rels)
        degrees = [g.homogeneous_degree() for g in rels]
        expected = hilbert_series_oracle(ring.weights, degrees, 10)
        assert hilbert_function(rp, 10) == expected


# -- regular sequences ----------------------------------------------------------

def test_regular_sequence_cases(xy):
    assert is_regular_sequence(xy, [xy.parse("x^2"), xy.parse("y^2")])
    assert is_regular_sequence(xy, [xy.parse("x^2 + y^2")])
    assert is_regular_sequence(xy, [xy.parse("x^2 + y^2"), xy.parse("x^2")])
    assert is_regular_sequence(xy, [])
    assert not is_regular_sequence(xy, [xy.parse("x"), xy.parse("x")])
    assert not is_regular_sequence(xy, [xy.parse("x^2"), xy.parse("x^3")])
    assert not is_regular_sequence(xy, [xy.parse("x"), xy.parse("y"),
                                        xy.parse("x + y")])


def test_regular_sequence_requires_homogeneous(xy):
    with pytest.raises(GradingError):
        is_regular_sequence(xy, [xy.parse("x^2 - y")])


# -- towers and square-zero stages ---------------------------------------------

def test_tower_frozen_example(xy):
    rp = tower_ring(xy, [xy.parse("x^2 + y^2")], 2)
    assert hilbert_function(rp, 10) == [1, 2, 3, 4, 4, 4, 4, 4, 4, 4, 4]


def test_tower_order_one_is_original(xy):
    f = xy.parse("x^2 + y^2")
    rp = tower_ring(xy, [f], 1)
    assert [str(g) for g in rp.gb.basis] == \
        [str(g) for g in RingPresentation(xy, [f]).gb.basis]


def test_tower_rejects_order_zero(xy):
    with pytest.raises(ValidationError):
        tower_ring(xy, [xy.parse("x")], 0)


def test_tower_monotone_and_stabilizing(xy):
    gens = [xy.parse("x^2"), xy.parse("y^3")]
    ambient = hilbert_function(RingPresentation(xy, []), 8)
    min_deg = 2
    previous = None
    for n in range(1, 4):
        hf = hilbert_function(tower_ring(xy, gens, n), 8)
        if previous is not None:
            assert all(a <= b for a, b in zip(previous, hf))
        for d in range(9):
            if n * min_deg > d:
                assert hf[d] == ambient[d]
        previous = hf


def test_square_zero_frozen():
    ring = PolyRing(["x"])
    quartic = RingPresentation(ring, [ring.parse("x^4")])
    assert is_square_zero(quartic, [ring.parse("x^2")])
    cubic = RingPresentation(ring, [ring.parse("x^3")])
    assert not is_square_zero(cubic, [ring.parse("x")])


def test_square_zero_filtration_frozen(xy):
    ring = PolyRing(["x"])
    assert square_zero_filtration(ring, [ring.parse("x")], 3) == [True, True]
    assert square_zero_filtration(xy, [xy.parse("x^2 + y^2")], 2) == [True]
    assert square_zero_filtration(ring, [ring.parse("x")], 1) == []


def test_square_zero_filtration_randomized():
    rng = random.Random(43)
    ring = PolyRing(["x", "y"])
    pool = ["x^2 + y^2", "x*y", "x^2 - y^2", "x^2", "y^2 + x*y"]
    for _ in range(6):
        count = rng.randint(1, 2)
        gens = [ring.parse(rng.choice(pool)) for _ in range(count)]
        n = rng.randint(1, 3)
        assert all(square_zero_filtration(ring, gens, n))

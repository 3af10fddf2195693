import random
from fractions import Fraction

import pytest

from bnskit import (
    Character,
    DomainError,
    GeneratorBasis,
    InputError,
    abelianize,
    canonical_class,
    dead_support,
    generic_point_avoiding,
    hermite_form,
    integer_kernel,
    integer_rank,
    kill_character,
    live_support,
    make_character,
    saturate,
    span_contains,
    word,
)

AB = GeneratorBasis(("a", "b"))
ABC = GeneratorBasis(("a", "b", "c"))


def test_basis_validation():
    with pytest.raises(InputError):
        GeneratorBasis(("a", "a"))
    with pytest.raises(InputError):
        GeneratorBasis(())
    assert AB.dim == 2 and AB.index("b") == 1
    with pytest.raises(InputError):
        AB.index("q")


def test_character_basics():
    c = make_character(AB, {"a": Fraction(1, 2), "b": -3})
    assert c("a") == Fraction(1, 2)
    assert c.values == (Fraction(1, 2), Fraction(-3))
    assert not c.is_zero()
    assert c.scaled(2).values == (Fraction(1), Fraction(-6))
    assert c.negated().values == (Fraction(-1, 2), Fraction(3))
    assert c.pair((2, 1)) == Fraction(-2)
    assert make_character(AB, {}).is_zero()
    with pytest.raises(InputError):
        make_character(AB, {"q": 1})
    with pytest.raises(InputError):
        Character(AB, (Fraction(1),))


def test_supports():
    c = make_character(ABC, {"a": 1})
    assert dead_support(c) == ("b", "c")
    assert live_support(c) == ("a",)


def test_abelianize():
    w = word(ABC.names, ["a", "a", "b", ("a", -1), ("c", -1)])
    assert abelianize(ABC, w) == (1, 1, -1)
    with pytest.raises(InputError):
        abelianize(AB, w)


def test_hermite_form_goldens():
    assert hermite_form([(2, 4), (1, 1)], 2) == ((1, 1), (0, 2))
    assert hermite_form([(0, 0)], 2) == ()
    assert hermite_form([(-1, 0), (0, -1)], 2) == ((1, 0), (0, 1))
    # pivots positive, entries above reduced into [0, pivot)
    rows = hermite_form([(3, 7), (0, 5)], 2)
    assert rows == ((3, 2), (0, 5))


def test_hermite_form_idempotent_and_span_preserving():
    rng = random.Random(53)
    for _ in range(200):
        dim = rng.randrange(1, 5)
        rows = [
            tuple(rng.randrange(-5, 6) for _ in range(dim))
            for _ in range(rng.randrange(4))
        ]
        h = hermite_form(rows, dim)
        assert hermite_form(h, dim) == h
        for row in rows:
            assert span_contains(h, row, dim)
        for row in h:
            assert span_contains(rows, row, dim)


def test_integer_kernel_goldens():
    assert integer_kernel([(1, 2, 3)], 3) == ((1, 1, -1), (0, 3, -2))
    assert integer_kernel([], 2) == ((1, 0), (0, 1))
    assert integer_kernel([(1, 0), (0, 1)], 2) == ()


def test_integer_kernel_properties():
    rng = random.Random(67)
    for _ in range(200):
        dim = rng.randrange(1, 5)
        rows = [
            tuple(rng.randrange(-4, 5) for _ in range(dim))
            for _ in range(rng.randrange(3))
        ]
        ker = integer_kernel(rows, dim)
        for k in ker:
            assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in rows)
        assert len(ker) == dim - integer_rank(rows, dim)
        # kernels are saturated: double kernel recovers the rational row space
        back = integer_kernel(ker, dim)
        for row in rows:
            assert span_contains(back, row, dim)


def test_span_contains():
    assert span_contains([(2, 0)], (1, 0), 2)  # rational span, not lattice
    assert not span_contains([(1, 0)], (0, 1), 2)
    assert span_contains([], (0, 0), 2)


def test_saturate():
    lat = saturate(AB, [(2, 0)])
    assert lat.rows == ((1, 0),)
    assert lat.contains((1, 0)) and not lat.contains((0, 1))
    lat2 = saturate(AB, [(2, 3)])
    assert lat2.rows == ((2, 3),)  # already primitive
    assert lat2.contains((4, 6)) and not lat2.contains((1, 1))
    assert saturate(AB, []).rank == 0
    with pytest.raises(InputError):
        saturate(AB, [(Fraction(1, 2), 0)])


def test_saturate_idempotent_random():
    rng = random.Random(29)
    for _ in range(150):
        dim = rng.randrange(1, 5)
        basis = GeneratorBasis(tuple(f"g{i}" for i in range(dim)))
        vecs = [
            tuple(rng.randrange(-4, 5) for _ in range(dim))
            for _ in range(rng.randrange(3))
        ]
        lat = saturate(basis, vecs)
        again = saturate(basis, lat.rows)
        assert lat.rows == again.rows
        for v in vecs:
            assert lat.contains(v)
        # membership in the saturation equals rational span membership
        probe = tuple(rng.randrange(-3, 4) for _ in range(dim))
        assert lat.contains(probe) == span_contains(vecs, probe, dim)


def test_kill_character():
    lat = saturate(AB, [(2, 3)])
    kc = kill_character(lat)
    assert [tuple(r.values) for r in kc.rows] == [(3, -2)]
    # empty lattice: the whole dual space survives
    full = kill_character(saturate(AB, []))
    assert [tuple(r.values) for r in full.rows] == [(1, 0), (0, 1)]
    # full lattice: nothing kills it
    assert kill_character(saturate(AB, [(1, 0), (0, 1)])).rows == ()


def test_kill_character_annihilates_exactly():
    rng = random.Random(71)
    for _ in range(150):
        dim = rng.randrange(1, 5)
        basis = GeneratorBasis(tuple(f"g{i}" for i in range(dim)))
        vecs = [
            tuple(rng.randrange(-4, 5) for _ in range(dim))
            for _ in range(rng.randrange(3))
        ]
        lat = saturate(basis, vecs)
        kc = kill_character(lat)
        assert len(kc.rows) == dim - lat.rank
        for row in kc.rows:
            for v in lat.rows:
                assert row.pair(v) == 0
        # the kernel of the killing rows is the lattice again
        kernel = integer_kernel([tuple(int(x) for x in r.values) for r in kc.rows], dim)
        assert kernel == lat.rows


def test_canonical_class():
    c = make_character(AB, {"a": Fraction(2, 3), "b": Fraction(-4, 3)})
    assert canonical_class(c).values == (Fraction(1), Fraction(-2))
    d = make_character(AB, {"a": -2, "b": 4})
    assert canonical_class(d).values == (Fraction(-1), Fraction(2))
    # positive scalings share a class, negation does not
    assert canonical_class(c.scaled(Fraction(7, 5))) == canonical_class(c)
    assert canonical_class(c.negated()) != canonical_class(c)
    with pytest.raises(DomainError):
        canonical_class(make_character(AB, {}))


def test_generic_point_frozen_schedule():
    # full plane, bad = x-axis: (1,0) rejected at t=0, (1,1) accepted at t=1
    gp = generic_point_avoiding(AB, [(1, 0), (0, 1)], [[(0, 1)]])
    assert gp.point.values == (Fraction(1), Fraction(1))
    assert gp.covering is None
    # no bad subspaces: the first basis vector wins immediately
    gp3 = generic_point_avoiding(ABC, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [])
    assert gp3.point.values == (Fraction(1), Fraction(0), Fraction(0))


def test_generic_point_covered():
    gp = generic_point_avoiding(AB, [(1, 0)], [[(0, 1)]])
    assert gp.point is None and gp.covering == 0
    # the first covering subspace is reported
    gp2 = generic_point_avoiding(AB, [(1, 0)], [[(1, 1)], [(0, 1)]])
    assert gp2.covering == 1


def test_generic_point_trivial_subspace():
    gp = generic_point_avoiding(AB, [], [])
    assert gp.point.is_zero()


def test_generic_point_random_avoids():
    rng = random.Random(83)
    for _ in range(100):
        dim = rng.randrange(1, 5)
        basis = GeneratorBasis(tuple(f"g{i}" for i in range(dim)))
        spanning = [
            tuple(rng.randrange(-3, 4) for _ in range(dim))
            for _ in range(rng.randrange(1, 3))
        ]
        bad = [
            [tuple(rng.randrange(-2, 3) for _ in range(dim))]
            for _ in range(rng.randrange(3))
        ]
        gp = generic_point_avoiding(basis, spanning, bad)
        if gp.point is not None:
            # inside the span
            denom = 1
            for v in gp.point.values:
                denom = denom * v.denominator
            scaled = tuple(int(v * denom) for v in gp.point.values)
            assert span_contains(spanning, scaled, dim)
            for eqs in bad:
                assert any(
                    sum(Fraction(e) * x for e, x in zip(eq, gp.point.values)) != 0
                    for eq in eqs
                )
        else:
            eqs = bad[gp.covering]
            rows = hermite_form(spanning, dim)
            for row in rows:
                for eq in eqs:
                    assert sum(e * x for e, x in zip(eq, row)) == 0

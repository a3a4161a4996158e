from fractions import Fraction

import pytest

from weylkit import alcove, reps
from weylkit.cartan import cartan_datum
from weylkit.cyclotomic import Cyc
from weylkit.errors import PreconditionError


A1 = cartan_datum("A1")


def _point(a):
    a = Fraction(a)
    return alcove.level_one_point(A1, (a, 1 - a))


def test_lift_characters_count():
    geo = alcove.geometry(A1, ())
    # interior point: no letters left, only the trivial character
    assert len(reps.lift_characters(geo, [])) == 1
    # vertex point: one letter, two sign characters
    assert len(reps.lift_characters(geo, [0])) == 2


def test_interior_point_dimension():
    d = _point(Fraction(1, 2))
    cell = alcove.cell_of(d)
    geo = alcove.geometry(A1, ())
    (rho,) = reps.lift_characters(geo, [])
    rep = reps.build_irreducible(A1, (), cell.S, d, rho)
    assert rep.dimension == 2


def test_vertex_point_dimension():
    d = _point(1)
    cell = alcove.cell_of(d)
    geo = alcove.geometry(A1, ())
    for rho in reps.lift_characters(geo, [1]):
        rep = reps.build_irreducible(A1, (), cell.S, d, rho)
        assert rep.dimension == 1


def test_character_norms_are_one():
    geo = alcove.geometry(A1, ())
    for a in (Fraction(1, 2), Fraction(1, 3), Fraction(1)):
        d = _point(a)
        cell = alcove.cell_of(d)
        letters = [k for k in geo.jcheck if k not in set(cell.S)]
        t = alcove.p_J(A1, (), d)
        for rho in reps.lift_characters(geo, letters):
            rep = reps.build_irreducible(A1, (), cell.S, d, rho)
            assert reps.character_norm(rep, t.order) == Cyc.rational(1)


def test_cell_mismatch_rejected():
    # S must be the cell label of d
    d = _point(1)  # vertex: lies in the cell {0}, not the interior
    geo = alcove.geometry(A1, ())
    (rho,) = reps.lift_characters(geo, [])
    with pytest.raises(PreconditionError):
        reps.build_irreducible(A1, (), (0, 1), d, rho)


def test_distinct_characters_give_distinct_modules():
    d = _point(1)
    cell = alcove.cell_of(d)
    geo = alcove.geometry(A1, ())
    rhos = reps.lift_characters(geo, [1])
    built = [reps.build_irreducible(A1, (), cell.S, d, rho) for rho in rhos]
    assert len(built) == 2
    # the two sign characters give modules that differ on the finite part
    images = [rep.finite_image(i) for rep in built for i in (0, 1)]
    traces = [reps.cyc_trace(m).render() for m in images]
    assert len(set(traces)) >= 2

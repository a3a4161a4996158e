from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylkit import alcove
from weylkit.cartan import cartan_datum
from weylkit.errors import PreconditionError, StructuralError, UnsupportedRegimeError


A1 = cartan_datum("A1")
A2 = cartan_datum("A2")


def test_level_constraint_enforced():
    with pytest.raises(StructuralError):
        alcove.level_one_point(A1, (1, 1))
    x = alcove.level_one_point(A1, (Fraction(1, 3), Fraction(2, 3)))
    assert x.is_real()


def test_cell_labels():
    interior = alcove.level_one_point(A1, (Fraction(1, 2), Fraction(1, 2)))
    assert alcove.cell_of(interior).S == (0, 1)
    vertex = alcove.level_one_point(A1, (0, 1))
    assert alcove.cell_of(vertex).S == (1,)
    outside = alcove.level_one_point(A1, (-1, 2))
    assert alcove.cell_of(outside) is None


def test_sample_grid_count_and_disjointness():
    grid = alcove.sample_grid(A1, (), 6)
    assert len(grid) == 13
    # each grid point lies in exactly one cell: labels partition by support
    for d in grid:
        cell = alcove.cell_of(d)
        assert cell is not None
        assert set(cell.S) == {i for i, c in enumerate(d.coords)
                               if c != (0, 0)}


def test_sample_grid_rejects_higher_rank():
    with pytest.raises(PreconditionError):
        alcove.sample_grid(A2, (), 4)


def test_translation_lattice_a2():
    lattice = alcove.translation_lattice(A2, ())
    assert lattice.rank == 2


def test_p_j_identity_at_base_vertex():
    d = alcove.level_one_point(A1, (1, 0))
    t = alcove.p_J(A1, (), d)
    assert t.is_identity()
    assert t.order == 1


def test_p_j_half_point_order():
    d = alcove.level_one_point(A1, (Fraction(1, 2), Fraction(1, 2)))
    t = alcove.p_J(A1, (), d)
    assert t.order == 4


def test_p_j_rejects_points_outside_cells():
    d = alcove.level_one_point(A1, (-1, 2))
    with pytest.raises(PreconditionError):
        alcove.p_J(A1, (), d)


def test_p_j_rejects_complex_points():
    d = alcove.level_one_point(
        A1, ((Fraction(1, 2), Fraction(1, 3)),
             (Fraction(1, 2), Fraction(-1, 3))))
    with pytest.raises(UnsupportedRegimeError):
        alcove.p_J(A1, (), d)


@given(st.integers(1, 12), st.integers(0, 12))
@settings(max_examples=50, deadline=None)
def test_torus_order_divides_denominator_lcm(q, p):
    p = p % (q + 1)
    a = Fraction(p, q)
    d = alcove.level_one_point(A1, (a, 1 - a))
    if alcove.cell_of(d) is None:
        return
    t = alcove.p_J(A1, (), d)
    # the point has denominator q, and the torus point order divides 2q
    assert (2 * q) % t.order == 0


def test_stabilizer_lift_on_grid():
    for d in alcove.sample_grid(A1, (), 4):
        cell = alcove.cell_of(d)
        t = alcove.p_J(A1, (), d)
        result = alcove.torus_stabilizer(A1, (), t, S=cell.S)
        assert result.lift_ok


def test_stabilizer_without_lift_check():
    d = alcove.level_one_point(A1, (1, 0))
    t = alcove.p_J(A1, (), d)
    result = alcove.torus_stabilizer(A1, (), t)
    assert 0 in result.elements
    assert result.lift_ok

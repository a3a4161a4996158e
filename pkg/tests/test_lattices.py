import pytest

from weylkit import lattices
from weylkit.errors import PreconditionError


def test_datum_self_checks():
    assert lattices.check_datum(3)
    assert lattices.check_datum(5)


def test_datum_rejects_characteristic_two():
    with pytest.raises(PreconditionError):
        lattices.check_datum(2)


def test_gram_matrix_matches_structure_constants():
    assert lattices.killing_gram() == lattices.GRAM


def test_bracket_antisymmetry_and_jacobi():
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for u in basis:
        for v in basis:
            buv = lattices.bracket(u, v)
            bvu = lattices.bracket(v, u)
            assert buv == tuple(-x for x in bvu)
            for w in basis:
                jac = tuple(
                    a + b + c for a, b, c in zip(
                        lattices.bracket(lattices.bracket(u, v), w),
                        lattices.bracket(lattices.bracket(v, w), u),
                        lattices.bracket(lattices.bracket(w, u), v)))
                assert jac == (0, 0, 0)


def test_pairing_invariance():
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for u in basis:
        for v in basis:
            for w in basis:
                assert (lattices.pairing(lattices.bracket(u, v), w)
                        == lattices.pairing(u, lattices.bracket(v, w)))


def test_base_lattice_is_a_fixed_point_of_sharp():
    for p in (3, 5):
        base = lattices.canonical(p, 1, [
            (p, 0, 0), (0, p, 0), (0, 0, p)])
        assert lattices.sharp(base).basis == base.basis
        assert lattices.d_invariant(base) == 3


def test_sharp_is_an_involution_on_enumerated_points():
    for z in lattices.enumerate_isotropic(3, 1):
        assert lattices.sharp(lattices.sharp(z)).basis == z.basis


def test_self_dual_points_are_fixed_by_sharp():
    for z in lattices.enumerate_isotropic(3, 1):
        assert lattices.sharp(z).basis == z.basis


def test_d_duality():
    for p in (3, 5):
        for z in lattices.enumerate_isotropic(p, 1):
            assert (lattices.d_invariant(z)
                    + lattices.d_of_complement(z)) == 6


def test_counts_match_at_small_sizes():
    for p, expected in ((3, 5), (5, 7)):
        points, direct = lattices.enumerate_X_n(p, 1)
        assert len(points) == expected
        assert direct == expected


def test_every_isotropic_point_is_lie_closed_at_small_sizes():
    for p in (3, 5):
        for z in lattices.enumerate_isotropic(p, 1):
            assert lattices.is_lie_closed(z)


def test_lie_closure_requires_isotropy():
    z = lattices.canonical(3, 1, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    if not lattices.is_self_dual_isotropic(z):
        with pytest.raises(PreconditionError):
            lattices.is_lie_closed(z)


def test_borel_fiber_counts():
    assert lattices.borel_fiber_count(3) == 4
    assert lattices.borel_fiber_count(5) == 6
    with pytest.raises(PreconditionError):
        lattices.borel_fiber_count(2)

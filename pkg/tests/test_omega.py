import pytest

from weylkit import omega, weyl
from weylkit.cartan import cartan_datum
from weylkit.errors import PreconditionError


def test_group_orders():
    for label, order in (("A1", 2), ("A2", 3), ("A3", 4),
                         ("D4", 4), ("G2", 1), ("C2", 2)):
        assert len(omega.omega_group(cartan_datum(label))) == order


def test_group_closure_and_inverses():
    datum = cartan_datum("A3")
    group = omega.omega_group(datum)
    for a in group:
        assert a.inverse() in group
        for b in group:
            assert a * b in group


def test_stabilizer_is_subgroup():
    datum = cartan_datum("A3")
    stab = omega.omega_stabilizer(datum, (1, 3))
    assert len(stab) == 2
    full = omega.omega_group(datum)
    assert all(x in full for x in stab)


def test_fixed_subgroup_requires_stabilizing():
    datum = cartan_datum("A2")
    rotation = next(x for x in omega.omega_group(datum)
                    if not x.is_identity())
    with pytest.raises(PreconditionError):
        omega.fixed_subgroup_generators(datum, (1,), rotation)


def test_single_orbit_gives_trivial_fixed_subgroup():
    datum = cartan_datum("A1")
    swap = next(x for x in omega.omega_group(datum) if not x.is_identity())
    assert omega.fixed_subgroup_generators(datum, (), swap) == []


def test_fixed_generators_are_fixed_and_minimal():
    datum = cartan_datum("A3")
    stab = omega.omega_stabilizer(datum, (1, 3))
    auto = next(x for x in stab if not x.is_identity())
    gens = omega.fixed_subgroup_generators(datum, (1, 3), auto)
    for K, w in gens:
        assert omega.conjugate_by_automorphism(w, auto) == w
        assert not w.is_identity()


def test_splitting_cases():
    a2 = cartan_datum("A2")
    split = omega.omega_splitting(a2, ())
    assert split.case in ("i", "ii", "iii")
    assert len(split.kernel) * len(split.complement) >= len(
        omega.omega_stabilizer(a2, ()))
    # every stabilizer element appears exactly once as a product
    products = [prod for (_, prod) in
                (((k, c), k * c) for k in split.kernel
                 for c in split.complement)]
    assert len(set(products)) == len(products)


def test_extended_elements_multiply():
    datum = cartan_datum("A2")
    auto = next(x for x in omega.omega_group(datum) if not x.is_identity())
    g = omega.extend(weyl.identity(datum), auto)
    assert (g * g.inverse()).is_identity()
    order = omega.extended_order(g)
    assert order == 3
    acc = g
    for _ in range(order - 1):
        acc = acc * g
    assert acc.is_identity()

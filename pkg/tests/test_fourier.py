from fractions import Fraction

from hypothesis import given, settings, strategies as st

from weylkit import fourier
from weylkit.cyclotomic import Cyc


def _squares_to_identity(matrix):
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            entry = sum((matrix[i][k] * matrix[k][j] for k in range(n)),
                        Cyc.rational(0))
            if not (entry == (1 if i == j else 0)):
                return False
    return True


def test_m_set_sizes():
    assert len(fourier.m_set(fourier.group_trivial())) == 1
    assert len(fourier.m_set(fourier.group_z2())) == 4
    assert len(fourier.m_set(fourier.cyclic_group(3))) == 9
    assert len(fourier.m_set(fourier.group_z2xz2())) == 16
    assert len(fourier.m_set(fourier.group_s3())) == 8


def test_all_curated_matrices_are_involutions():
    for name, build in sorted(fourier.GROUPS.items()):
        matrix = fourier.pairing_matrix(build())
        assert _squares_to_identity(matrix), name


def test_matrices_are_symmetric():
    for build in (fourier.group_z2, fourier.group_z2xz2, fourier.group_s3):
        matrix = fourier.pairing_matrix(build())
        n = len(matrix)
        for i in range(n):
            for j in range(n):
                assert matrix[i][j] == matrix[j][i]


def test_z2_matrix_entries():
    gamma = fourier.group_z2()
    pairs = fourier.m_set(gamma)
    matrix = fourier.pairing_matrix(gamma)
    half = Fraction(1, 2)
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            value = matrix[i][j]
            sign = 1
            if p.x == "r" and q.sigma == 1:
                sign = -sign
            if q.x == "r" and p.sigma == 1:
                sign = -sign
            assert value == Cyc.rational(sign * half)


def test_b2_component_matrix_is_involution():
    m = fourier.b2_component_matrix()
    mm = tuple(
        tuple(sum((m[i][k] * m[k][j] for k in range(4)), Cyc.rational(0))
              for j in range(4))
        for i in range(4))
    for i in range(4):
        for j in range(4):
            assert mm[i][j] == (1 if i == j else 0)


_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@given(st.tuples(*(_rationals for _ in range(4))))
@settings(max_examples=40, deadline=None)
def test_transform_involution_z2(values):
    gamma = fourier.group_z2()
    vec = [Cyc.rational(v) for v in values]
    twice = fourier.apply_transform(gamma, fourier.apply_transform(gamma, vec))
    assert all(a == b for a, b in zip(twice, vec))


@given(st.tuples(*(_rationals for _ in range(4))))
@settings(max_examples=40, deadline=None)
def test_b2_transform_involution_on_symmetric_input(values):
    a, b, c, d = (Cyc.rational(v) for v in values)
    # values agreeing on the +-1 classes of the identity component
    vec = (a, a, b, c, c, d)
    twice = fourier.b2_transform(fourier.b2_transform(vec))
    assert all(u == v for u, v in zip(twice, vec))


@given(st.tuples(*(_rationals for _ in range(6))))
@settings(max_examples=40, deadline=None)
def test_b2_double_transform_symmetrizes(values):
    vec = [Cyc.rational(v) for v in values]
    twice = fourier.b2_transform(fourier.b2_transform(vec))
    lookup = dict(zip(fourier.B2_PAIRS, vec))
    half = Fraction(1, 2)
    for (x, s), out in zip(fourier.B2_PAIRS, twice):
        if x in ("1", "-1"):
            expected = (lookup[("1", s)] + lookup[("-1", s)]) * half
        else:
            expected = lookup[(x, s)]
        assert out == expected


def test_trivial_group_transform_is_identity():
    gamma = fourier.group_trivial()
    matrix = fourier.pairing_matrix(gamma)
    assert matrix == ((Cyc.rational(1),),) or matrix[0][0] == Cyc.rational(1)


def test_characters_orthogonal():
    for build in (fourier.group_z2xz2, fourier.group_s3,
                  lambda: fourier.cyclic_group(3)):
        gamma = build()
        chars = gamma.characters()
        n = len(gamma.elements)
        for i, a in enumerate(chars):
            for j, b in enumerate(chars):
                inner = sum((a[g] * b[g].conjugate()
                             for g in gamma.elements), Cyc.rational(0))
                expected = n if i == j else 0
                assert inner == Cyc.rational(expected)

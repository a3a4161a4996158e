"""Affine Weyl group elements in matrix canonical form.

An element w of the affine Weyl group W' acts linearly on V-dagger in
the b'-basis; that integer matrix is the canonical form (the affine
translation behaviour is encoded by the level-1 slice, so no separate
translation vector is needed).  The contragredient action on V is
carried alongside so descent sets on either side are sign checks.

Simple reflections: s_i(b'_j) = b'_j - delta_ij h_i with h_i the i-th
column of the pairing matrix, and s_i(b_j) = b_j - a_ji b_i on V.
"""

import math
from dataclasses import dataclass

from . import linalg
from .errors import (
    DatumMismatchError,
    InfiniteGroupError,
    InternalConsistencyError,
    PreconditionError,
    UndecidedOrderError,
)

_STEP_CAP = 100000

_word_cache = {}


@dataclass(frozen=True, eq=False)
class WeylElement:
    datum: object
    mat: tuple   # action on V-dagger (b'-basis)
    dual: tuple  # action on V (b-basis)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.datum.label == other.datum.label and self.mat == other.mat

    def __hash__(self):
        return hash((self.datum.label, self.mat))

    def __mul__(self, other):
        return multiply(self, other)

    def apply(self, coords):
        """Image of a V-dagger vector given in b'-coordinates."""
        return linalg.mat_vec(self.mat, coords)

    def apply_v(self, coords):
        """Image of a V vector given in b-coordinates."""
        return linalg.mat_vec(self.dual, coords)

    def is_identity(self):
        return self.mat == linalg.identity_mat(self.datum.n + 1)

    @property
    def length(self):
        return len(self.word())

    def word(self):
        """Canonical ShortLex reduced word, as a tuple of node indices."""
        key = (self.datum.label, self.mat)
        cached = _word_cache.get(key)
        if cached is None:
            cached = _canonical_word(self)
            _word_cache[key] = cached
        return cached

    def inverse(self):
        return WeylElement(self.datum, linalg.mat_inv_int(self.mat),
                           linalg.mat_inv_int(self.dual))

    def __repr__(self):
        return f"WeylElement({self.datum.label}, {word_str(self)})"


def identity(datum):
    eye = linalg.identity_mat(datum.n + 1)
    return WeylElement(datum, eye, eye)


def simple_reflection(datum, i):
    size = datum.n + 1
    a = datum.pairing
    mat = tuple(
        tuple((1 if k == j else 0) - (a[k][i] if j == i else 0)
              for j in range(size))
        for k in range(size)
    )
    dual = tuple(
        tuple((1 if k == j else 0) - (a[j][i] if k == i else 0)
              for j in range(size))
        for k in range(size)
    )
    return WeylElement(datum, mat, dual)


def multiply(a, b):
    if a.datum.label != b.datum.label:
        raise DatumMismatchError(
            f"cannot multiply over {a.datum.label} and {b.datum.label}")
    return WeylElement(a.datum, linalg.mat_mul(a.mat, b.mat),
                       linalg.mat_mul(a.dual, b.dual))


def from_word(datum, word):
    w = identity(datum)
    for i in word:
        w = multiply(w, simple_reflection(datum, i))
    return w


def _root_sign(coords):
    """+1 or -1 for a sign-coherent nonzero integer vector, else 0."""
    if all(x >= 0 for x in coords) and any(x > 0 for x in coords):
        return 1
    if all(x <= 0 for x in coords) and any(x < 0 for x in coords):
        return -1
    return 0


def left_descents(w):
    """Nodes i with l(s_i w) < l(w): row i of the V-dagger matrix is <= 0."""
    out = []
    for i in range(w.datum.n + 1):
        sign = _root_sign(w.mat[i])
        if sign == 0:
            raise InternalConsistencyError("matrix row is not a root vector")
        if sign < 0:
            out.append(i)
    return out


def right_descents(w):
    """Nodes i with l(w s_i) < l(w): w(b_i) is a negative root."""
    out = []
    for i in range(w.datum.n + 1):
        col = tuple(w.dual[k][i] for k in range(w.datum.n + 1))
        sign = _root_sign(col)
        if sign == 0:
            raise InternalConsistencyError("matrix column is not a root vector")
        if sign < 0:
            out.append(i)
    return out


def _canonical_word(w):
    word = []
    u = w
    eye = linalg.identity_mat(w.datum.n + 1)
    for _ in range(_STEP_CAP):
        if u.mat == eye:
            return tuple(word)
        descents = left_descents(u)
        if not descents:
            raise InternalConsistencyError("no descent on a non-identity element")
        i = descents[0]
        word.append(i)
        u = multiply(simple_reflection(w.datum, i), u)
    raise InternalConsistencyError("word extraction exceeded the step cap")


def word_str(w):
    word = w.word()
    return "*".join(f"s{i}" for i in word) if word else "1"


def parse_word(datum, text):
    text = text.strip()
    if text in ("1", "e", ""):
        return identity(datum)
    letters = []
    for piece in text.split("*"):
        piece = piece.strip()
        if not piece.startswith("s"):
            raise PreconditionError(f"bad word letter {piece!r}")
        letters.append(int(piece[1:]))
    return from_word(datum, letters)


def longest_element(datum, J):
    """Longest element of the finite parabolic W_J, J a proper node subset."""
    J = sorted(set(J))
    if len(J) == datum.n + 1:
        raise InfiniteGroupError("W_J is infinite for J = all nodes")
    if any(j < 0 or j > datum.n for j in J):
        raise PreconditionError("node index out of range")
    w = identity(datum)
    for _ in range(_STEP_CAP):
        ascent = None
        for i in J:
            col = tuple(w.dual[k][i] for k in range(datum.n + 1))
            if _root_sign(col) > 0:
                ascent = i
                break
        if ascent is None:
            return w
        w = multiply(w, simple_reflection(datum, ascent))
    raise InternalConsistencyError("longest-element climb exceeded the step cap")


@dataclass(frozen=True)
class MinCosetResult:
    """Outcome of min_coset_generators: verified generators plus failures."""
    J: tuple
    generators: tuple  # pairs (k, WeylElement)
    failures: tuple    # nodes k whose candidate failed the membership check

    @property
    def ok(self):
        return not self.failures

    def __iter__(self):
        return iter(self.generators)


def _normalizes_parabolic(w, J):
    winv = w.inverse()
    for j in J:
        conj = multiply(multiply(w, simple_reflection(w.datum, j)), winv)
        if any(letter not in J for letter in conj.word()):
            return False
    return True


def _minimal_in_coset(w, J):
    return not any(j in J for j in right_descents(w)) or w.is_identity()


def min_coset_generators(datum, J):
    """Candidates ss_k = w0(J+k) w0(J) for k outside J, with membership checks.

    Total: failing candidates are reported in `failures` rather than raised,
    since some J genuinely admit none.
    """
    J = tuple(sorted(set(J)))
    if len(J) == datum.n + 1:
        raise PreconditionError("J must be a proper node subset")
    w0J = longest_element(datum, J)
    complement = [k for k in range(datum.n + 1) if k not in J]
    generators = []
    failures = []
    for k in complement:
        if len(J) + 1 == datum.n + 1:
            continue  # J + {k} = all nodes: skipped, the quotient is trivial
        ss = multiply(longest_element(datum, list(J) + [k]), w0J)
        if _normalizes_parabolic(ss, J) and _minimal_in_coset(ss, J):
            generators.append((k, ss))
        else:
            failures.append(k)
    return MinCosetResult(J=J, generators=tuple(generators),
                          failures=tuple(failures))


def level_restriction(datum, mat):
    """Linear part of a level-preserving map, restricted to the level-0
    subspace in the basis t_k = b'_k - n_k b'_0 (k = 1..n)."""
    n = datum.n
    marks = datum.marks
    cols = []
    for k in range(1, n + 1):
        img = tuple(mat[j][k] - marks[k] * mat[j][0] for j in range(n + 1))
        cols.append(img[1:])
    return tuple(tuple(cols[k][j] for k in range(n)) for j in range(n))


def translation_vector(datum, mat):
    """Displacement of the level-1 base point b'_0 under the map."""
    img = tuple(mat[j][0] for j in range(datum.n + 1))
    base = tuple(1 if j == 0 else 0 for j in range(datum.n + 1))
    return linalg.vec_sub(img, base)


def matrix_order(datum, mat, cap):
    """Order of a level-preserving integer matrix on V-dagger.

    Returns a positive integer, or math.inf when infinite order is
    certified through a nonzero translation part.  Raises
    UndecidedOrderError when the cap is exhausted without a certificate.
    """
    size = datum.n + 1
    eye = linalg.identity_mat(size)
    power = mat
    for k in range(1, cap + 1):
        if power == eye:
            return k
        power = linalg.mat_mul(power, mat)
    # Certify infinite order: finite order of the linear part on the
    # level-0 slice, then a nonzero translation of that power.
    restr = level_restriction(datum, mat)
    small_eye = linalg.identity_mat(datum.n)
    rpower = restr
    m0 = None
    for k in range(1, cap + 1):
        if rpower == small_eye:
            m0 = k
            break
        rpower = linalg.mat_mul(rpower, restr)
    if m0 is None:
        raise UndecidedOrderError("order cap exhausted on the linear part")
    candidate = linalg.mat_pow(mat, m0)
    if any(x != 0 for x in translation_vector(datum, candidate)):
        return math.inf
    raise UndecidedOrderError("translation certificate inconclusive")


def element_order(w, cap=24):
    return matrix_order(w.datum, w.mat, cap)


def quotient_coxeter_matrix(datum, J, order_cap=24):
    """Matrix of pairwise orders m(k, k') of the ss_k generators."""
    result = min_coset_generators(datum, J)
    if not result.ok:
        raise PreconditionError(
            f"min_coset_generators failed for k in {result.failures}")
    gens = result.generators
    size = len(gens)
    matrix = [[1] * size for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            order = element_order(multiply(gens[a][1], gens[b][1]), order_cap)
            matrix[a][b] = order
            matrix[b][a] = order
    return tuple(tuple(row) for row in matrix)

"""Level-1 geometry: cells C_S, the lattices L' and L, the torus T, the
map p_J and stabilizer computations.

Points of the level-1 hyperplane carry coordinates c_i in Q(sqrt(-1)),
stored as (re, im) pairs of Fractions; positivity uses the complex
ordering c > 0 iff re > 0, or re = 0 and im > 0.

For a node subset J with complement Jc, the subspace z_J is the
level-0 part of span{b'_k : k in Jc}, with basis
u_k = b'_k - (n_k / n_k0) b'_k0 for k in Jc - {k0}, k0 = min Jc.
The translation lattice L' inside z_J is computed exactly via Schreier
generators of the kernel of the quotient map to the finite group W_Jc.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg, weyl
from .errors import (
    BudgetError,
    IncompleteLatticeError,
    LiftCheckError,
    PreconditionError,
    StructuralError,
    UnsupportedRegimeError,
)

_QUOTIENT_CAP = 200000


@dataclass(frozen=True)
class LevelOnePoint:
    datum: object
    coords: tuple  # pairs (re, im) of Fractions, one per node

    def __post_init__(self):
        if len(self.coords) != self.datum.n + 1:
            raise StructuralError("wrong number of coordinates")
        marks = self.datum.marks
        re_level = sum(m * c[0] for m, c in zip(marks, self.coords))
        im_level = sum(m * c[1] for m, c in zip(marks, self.coords))
        if re_level != 1 or im_level != 0:
            raise StructuralError("point does not lie on the level-1 hyperplane")

    def is_real(self):
        return all(c[1] == 0 for c in self.coords)

    def real_vector(self):
        return tuple(c[0] for c in self.coords)


def level_one_point(datum, coords):
    """Build a LevelOnePoint from rationals or (re, im) pairs."""
    packed = []
    for c in coords:
        if isinstance(c, tuple):
            packed.append((Fraction(c[0]), Fraction(c[1])))
        else:
            packed.append((Fraction(c), Fraction(0)))
    return LevelOnePoint(datum, tuple(packed))


@dataclass(frozen=True)
class CellLabel:
    S: tuple

    def __post_init__(self):
        if not self.S:
            raise StructuralError("cell label must be nonempty")


def _complex_positive(c):
    re, im = c
    return re > 0 or (re == 0 and im > 0)


def cell_of(x):
    """Cell label of a level-1 point, or None if it lies in no cell."""
    support = []
    for i, c in enumerate(x.coords):
        if c == (0, 0):
            continue
        if not _complex_positive(c):
            return None
        support.append(i)
    return CellLabel(tuple(support)) if support else None


@dataclass(frozen=True)
class TranslationLattice:
    rank: int
    basis: tuple       # vectors in u-coordinates (Fractions), spanning L'
    dual_basis: tuple  # functionals on z_J (rows), spanning L


@dataclass(frozen=True)
class TorusPoint:
    lattice: TranslationLattice
    values: tuple  # Fractions in [0,1), values on the dual basis of L

    @property
    def order(self):
        out = 1
        for v in self.values:
            out = out * v.denominator // gcd(out, v.denominator)
        return out

    def is_identity(self):
        return all(v == 0 for v in self.values)


def _rational_hnf(vectors):
    """Canonical basis of the lattice spanned by rational vectors."""
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return ()
    denom = 1
    for v in vectors:
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    scaled = [tuple(int(x * denom) for x in v) for v in vectors]
    rows = linalg.hnf(scaled)
    return tuple(tuple(Fraction(x, denom) for x in row) for row in rows)


class CosetGeometry:
    """Everything attached to (datum, J): the ss_k generators, the finite
    quotient W_Jc acting on z_J, and the translation/character lattices."""

    def __init__(self, datum, J):
        self.datum = datum
        self.J = tuple(sorted(set(J)))
        result = weyl.min_coset_generators(datum, self.J)
        if not result.ok:
            raise PreconditionError(
                f"min-coset membership fails for k in {result.failures}")
        self.generators = result.generators
        self.jcheck = tuple(k for k in range(datum.n + 1) if k not in self.J)
        if len(self.jcheck) < 1:
            raise PreconditionError("complement of J is empty")
        self.k0 = self.jcheck[0]
        self.dim = len(self.jcheck) - 1
        self._build_ubasis()
        self._build_quotient()
        self._build_lattice()

    def _build_ubasis(self):
        n = self.datum.n
        marks = self.datum.marks
        self.ubasis = []
        for k in self.jcheck[1:]:
            vec = [Fraction(0)] * (n + 1)
            vec[k] = Fraction(1)
            vec[self.k0] = -Fraction(marks[k], marks[self.k0])
            self.ubasis.append(tuple(vec))

    def _to_ucoords(self, vec):
        """Coordinates in the u-basis of a level-0 vector supported on Jc."""
        marks = self.datum.marks
        for j in range(self.datum.n + 1):
            if j not in self.jcheck and vec[j] != 0:
                raise StructuralError("vector not supported on the complement of J")
        coords = tuple(Fraction(vec[k]) for k in self.jcheck[1:])
        rebuilt = -sum(Fraction(vec[k]) * marks[k] for k in self.jcheck[1:])
        if Fraction(vec[self.k0]) * marks[self.k0] != rebuilt:
            raise StructuralError("vector is not level 0")
        return coords

    def restriction(self, mat):
        """Matrix of a full V-dagger map on z_J in the u-basis."""
        cols = [self._to_ucoords(linalg.mat_vec(mat, u)) for u in self.ubasis]
        return tuple(tuple(cols[c][r] for c in range(self.dim))
                     for r in range(self.dim))

    def _build_quotient(self):
        eye = tuple(tuple(Fraction(1) if i == j else Fraction(0)
                          for j in range(self.dim)) for i in range(self.dim))
        gen_restrictions = [(k, self.restriction(w.mat))
                            for k, w in self.generators]
        elements = [eye]
        words = [()]
        index = {eye: 0}
        head = 0
        while head < len(elements):
            current = elements[head]
            word = words[head]
            for k, r in gen_restrictions:
                new = linalg.mat_mul(r, current)
                if new not in index:
                    index[new] = len(elements)
                    elements.append(new)
                    words.append((k,) + word)
                    if len(elements) > _QUOTIENT_CAP:
                        raise BudgetError("finite quotient exceeds the size cap")
            head += 1
        self.quotient = elements
        # words[i] multiplies left-to-right: elements[i] = prod of the letters.
        self.quotient_words = [tuple(w) for w in words]
        self.quotient_index = index
        self.gen_restrictions = dict(gen_restrictions)

    def quotient_element(self, letters):
        mat = self.quotient[0]
        for k in letters:
            mat = linalg.mat_mul(mat, self.gen_restrictions[k])
        return self.quotient_index[mat]

    def _lift(self, letters):
        w = weyl.identity(self.datum)
        gens = dict(self.generators)
        for k in letters:
            w = weyl.multiply(w, gens[k])
        return w

    def _translation_ucoords(self, w):
        """Displacement of the base point b'_k0 / n_k0 under w, or None
        if the linear part of w on z_J is nontrivial."""
        if self.dim and self.restriction(w.mat) != self.quotient[0]:
            return None
        n = self.datum.n
        base = [Fraction(0)] * (n + 1)
        base[self.k0] = Fraction(1, self.datum.marks[self.k0])
        base = tuple(base)
        moved = linalg.mat_vec(w.mat, base)
        return self._to_ucoords(linalg.vec_sub(moved, base))

    def _build_lattice(self):
        if self.dim == 0:
            self.lattice = TranslationLattice(rank=0, basis=(), dual_basis=())
            self.torus_actions = [()] * len(self.quotient)
            return
        # Schreier generators of the kernel of the quotient map.
        lifts = [self._lift(word) for word in self.quotient_words]
        vectors = []
        for k, g in self.generators:
            for i, r in enumerate(lifts):
                product = weyl.multiply(g, r)
                target = self.quotient_index[self.restriction(product.mat)]
                kernel_elt = weyl.multiply(lifts[target].inverse(), product)
                vec = self._translation_ucoords(kernel_elt)
                if vec is None:
                    raise StructuralError("Schreier element is not a translation")
                vectors.append(vec)
        basis = _rational_hnf(vectors)
        if len(basis) != self.dim:
            raise IncompleteLatticeError(
                "translation lattice has deficient rank", partial_basis=basis)
        bmat = tuple(tuple(basis[c][r] for c in range(self.dim))
                     for r in range(self.dim))
        binv = linalg.mat_inv(bmat)
        dual = tuple(tuple(row) for row in binv)
        self.lattice = TranslationLattice(rank=self.dim, basis=basis,
                                          dual_basis=dual)
        self._bmat = bmat
        self._binv = binv
        # Integer matrices of the quotient action in the L'-basis.
        actions = []
        for r in self.quotient:
            nmat = linalg.mat_mul(binv, linalg.mat_mul(r, bmat))
            rows = []
            for row in nmat:
                if any(x.denominator != 1 for x in row):
                    raise StructuralError("quotient action does not preserve L'")
                rows.append(tuple(int(x) for x in row))
            actions.append(tuple(rows))
        self.torus_actions = actions

    def lattice_coords(self, ucoords):
        """Coordinates over the L'-basis of a z_J vector in u-coordinates."""
        if self.dim == 0:
            return ()
        return linalg.mat_vec(self._binv, ucoords)

    def torus_act(self, element_index, t):
        action = self.torus_actions[element_index]
        if not action:
            return t
        values = tuple(v % 1 for v in linalg.mat_vec(action, t.values))
        return TorusPoint(lattice=t.lattice, values=values)


_geometry_cache = {}


def geometry(datum, J):
    key = (datum.label, tuple(sorted(set(J))))
    if key not in _geometry_cache:
        _geometry_cache[key] = CosetGeometry(datum, J)
    return _geometry_cache[key]


def translation_lattice(datum, J):
    return geometry(datum, J).lattice


def default_k(datum, J):
    """The base node k_J: 0 for empty J, else the smallest complement node."""
    J = set(J)
    if not J:
        return 0
    return min(k for k in range(datum.n + 1) if k not in J)


def p_J(datum, J, d, k_J=None):
    """Finite-order torus point attached to d in D_J (rational d only)."""
    geo = geometry(datum, J)
    if not isinstance(d, LevelOnePoint):
        d = level_one_point(datum, d)
    if not d.is_real():
        raise UnsupportedRegimeError(
            "p_J supports only rational real coordinates (finite order)")
    cell = cell_of(d)
    if cell is None or any(s not in geo.jcheck for s in cell.S):
        raise PreconditionError("d must lie in a cell C_S with S inside Jc")
    if k_J is None:
        k_J = default_k(datum, J)
    if k_J not in geo.jcheck:
        raise PreconditionError("k_J must lie in the complement of J")
    vec = list(d.real_vector())
    vec[k_J] -= Fraction(1, datum.marks[k_J])
    ucoords = geo._to_ucoords(tuple(vec))
    gamma = geo.lattice_coords(ucoords)
    values = tuple(g % 1 for g in gamma)
    return TorusPoint(lattice=geo.lattice, values=values)


@dataclass(frozen=True)
class StabilizerResult:
    elements: tuple  # indices into geometry.quotient
    lift_ok: bool


def torus_stabilizer(datum, J, t, S=None):
    """Stabilizer of a torus point in W_Jc, with the lift check
    against the subgroup generated by {ss_k : k in Sc - J} when S given."""
    geo = geometry(datum, J)
    stabilizer = tuple(
        i for i in range(len(geo.quotient))
        if geo.torus_act(i, t).values == t.values
    )
    if S is None:
        return StabilizerResult(elements=stabilizer, lift_ok=True)
    S = set(S)
    lift_letters = [k for k in geo.jcheck if k not in S]
    # Enumerate the subgroup of the full minimal-coset group generated by
    # the selected ss_k, tracking full matrices so injectivity is honest.
    gens = dict(geo.generators)
    seed = weyl.identity(datum)
    elements = {seed}
    frontier = [seed]
    while frontier:
        current = frontier.pop()
        for k in lift_letters:
            new = weyl.multiply(gens[k], current)
            if new not in elements:
                if len(elements) > _QUOTIENT_CAP:
                    raise LiftCheckError("lift subgroup is not finite")
                elements.add(new)
                frontier.append(new)
    images = {geo.quotient_index[geo.restriction(w.mat)] if geo.dim
              else 0 for w in elements}
    lift_ok = (len(images) == len(elements) and images == set(stabilizer))
    return StabilizerResult(elements=stabilizer, lift_ok=lift_ok)


def sample_grid(datum, J, max_denominator):
    """All rational points of D_J with denominators <= max_denominator.

    Only implemented for complements of size 2 (the configurations the
    verification suite samples); returns LevelOnePoints lying in cells
    C_S with S inside the complement of J.
    """
    geo = geometry(datum, J)
    if len(geo.jcheck) != 2:
        raise PreconditionError("grid sampling needs a rank-1 configuration")
    ka, kb = geo.jcheck
    na, nb = datum.marks[ka], datum.marks[kb]
    points = []
    seen = set()
    for q in range(1, max_denominator + 1):
        for p in range(0, q + 1):
            a = Fraction(p, q)
            if a in seen:
                continue
            seen.add(a)
            coords = [Fraction(0)] * (datum.n + 1)
            coords[ka] = a / na
            coords[kb] = (1 - a) / nb
            points.append(level_one_point(datum, coords))
    points.sort(key=lambda d: d.real_vector())
    return points

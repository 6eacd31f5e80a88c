"""Finite-dimensional associative unital algebras over Q.

An Algebra is a structure-constant tensor: table[i][j] holds the
coordinates of b_i * b_j in the distinguished basis, plus a unit vector.
Constructors cover explicit tensors, group/monoid multiplication tables,
products of polynomial quotients, companion-matrix subalgebras, full
matrix algebras and direct products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import BadUnit, EmptyDescription, NotAssociative
from .linalg import ONE, ZERO, Vec, vec
from .polynomials import Poly

__all__ = [
    "Algebra",
    "Element",
    "NonInvertible",
    "from_structure_constants",
    "monoid_algebra",
    "poly_quotient_product",
    "split_etale_algebra",
    "matrix_algebra",
    "direct_product",
    "companion_algebra",
    "min_poly",
    "poly_at",
]


class Algebra:
    """Unital associative algebra given by structure constants.

    Instances are immutable after construction and compared by identity;
    Elements are tied to the Algebra that created them.
    """

    def __init__(self, table, unit, label="", validate=True, split_etale=False,
                 source_table=None):
        self.table = tuple(tuple(vec(cell) for cell in row) for row in table)
        self.dim = len(self.table)
        self.unit = vec(unit)
        self.label = label
        self.split_etale = split_etale
        self.source_table = source_table
        self._commutative: bool | None = None
        if self.dim == 0:
            raise EmptyDescription("algebra must have positive dimension")
        for row in self.table:
            if len(row) != self.dim or any(len(c) != self.dim for c in row):
                raise EmptyDescription("structure-constant tensor is not n x n x n")
        if len(self.unit) != self.dim:
            raise BadUnit("unit vector has wrong length")
        if validate:
            self._validate()

    # -- construction-time checks -------------------------------------

    def _validate(self):
        n = self.dim
        for i in range(n):
            bi = self.basis_vec(i)
            if self.mul_coords(self.unit, bi) != bi or self.mul_coords(bi, self.unit) != bi:
                raise BadUnit(f"unit law fails on basis vector {i}")
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left = self.mul_coords(ij, self.basis_vec(k))
                    right = self.mul_coords(self.basis_vec(i), self.table[j][k])
                    if left != right:
                        raise NotAssociative(f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})")

    # -- coordinate arithmetic ----------------------------------------

    def basis_vec(self, i: int) -> Vec:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def mul_coords(self, x: Vec, y: Vec) -> Vec:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi:
                row = self.table[i]
                for j, yj in enumerate(y):
                    if yj:
                        c = xi * yj
                        for k, t in enumerate(row[j]):
                            if t:
                                out[k] += c * t
        return tuple(out)

    @property
    def commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = all(
                self.table[i][j] == self.table[j][i]
                for i in range(self.dim)
                for j in range(i + 1, self.dim)
            )
        return self._commutative

    # -- element factories --------------------------------------------

    def element(self, coords) -> "Element":
        coords = vec(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        return Element(self, self.basis_vec(i))

    def one(self) -> "Element":
        return Element(self, self.unit)

    def zero(self) -> "Element":
        return Element(self, linalg.zero_vec(self.dim))

    # -- multiplication operators --------------------------------------

    def right_mul_matrix(self, v: Vec):
        """Matrix of x -> x*v (columns indexed by basis of x)."""
        cols = [self.mul_coords(self.basis_vec(i), v) for i in range(self.dim)]
        return [tuple(cols[i][k] for i in range(self.dim)) for k in range(self.dim)]

    def left_mul_matrix(self, v: Vec):
        """Matrix of x -> v*x."""
        cols = [self.mul_coords(v, self.basis_vec(i)) for i in range(self.dim)]
        return [tuple(cols[i][k] for i in range(self.dim)) for k in range(self.dim)]

    def __repr__(self):
        return f"Algebra({self.label or 'anonymous'}, dim={self.dim})"


@dataclass(frozen=True)
class NonInvertible:
    """Failure value for inversion: witness satisfies x * witness = 0."""

    witness: "Element"


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coords: Vec

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra:
            from .errors import AlgebraMismatch

            raise AlgebraMismatch("elements belong to different algebras")

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, linalg.vec_add(self.coords, other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, linalg.vec_sub(self.coords, other.coords))

    def scale(self, c) -> "Element":
        return Element(self.algebra, linalg.vec_scale(Fraction(c), self.coords))

    def __neg__(self) -> "Element":
        return self.scale(-1)

    @property
    def is_zero(self) -> bool:
        return linalg.is_zero_vec(self.coords)

    def __pow__(self, k: int) -> "Element":
        acc = self.algebra.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def invert(self) -> "Element | NonInvertible":
        """Two-sided inverse, or a kernel witness if none exists."""
        alg = self.algebra
        lmat = alg.left_mul_matrix(self.coords)
        y = linalg.solve(lmat, alg.unit)
        if y is None:
            ker = linalg.nullspace(lmat, alg.dim)
            return NonInvertible(witness=Element(alg, ker[0]))
        inv = Element(alg, y)
        # regular one-sided invertibility is two-sided in finite dimension
        assert (inv * self).coords == alg.unit
        return inv

    @property
    def is_invertible(self) -> bool:
        return linalg.det(self.algebra.left_mul_matrix(self.coords)) != 0

    def __repr__(self):
        return f"Element({[str(c) for c in self.coords]})"


def min_poly(x: Element) -> Poly:
    """Monic minimal polynomial, from the first dependence among powers."""
    alg = x.algebra
    powers = [alg.unit]
    basis: list = []
    pivots: list = []
    cur = alg.one()
    while True:
        v = cur.coords
        residual = linalg.reduce_against(tuple(basis), tuple(pivots), v)
        if linalg.is_zero_vec(residual):
            # solve sum_i c_i powers[i] = v for the dependence
            k = len(powers) - 1
            mat = [tuple(powers[i][j] for i in range(k)) for j in range(alg.dim)]
            sol = linalg.solve(mat, v)
            assert sol is not None
            coeffs = [-c for c in sol] + [ONE]
            return Poly(tuple(coeffs))
        red, piv = linalg.rref(list(basis) + [v])
        basis, pivots = list(red), list(piv)
        cur = cur * x
        powers.append(cur.coords)


def poly_at(p: Poly, x: Element) -> Element:
    acc = x.algebra.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + x.algebra.one().scale(c)
    return acc


# -- constructors -----------------------------------------------------


def from_structure_constants(table, unit, label="", validate=True) -> Algebra:
    return Algebra(table, unit, label=label, validate=validate)


def monoid_algebra(mtable, label="") -> Algebra:
    """Q[M] with basis e_m indexed by table elements; e_x e_y = e_{xy}.

    The table is validated combinatorially, which implies associativity
    of the algebra, so the O(n^4) rational check is skipped.
    """
    n = mtable.size
    table = [
        [tuple(ONE if k == mtable.table[i][j] else ZERO for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    unit = tuple(ONE if k == mtable.unit_index else ZERO for k in range(n))
    return Algebra(table, unit, label=label or f"Q[{mtable.label}]", validate=False,
                   source_table=mtable)


def poly_quotient_product(polys, label="") -> Algebra:
    """Product of quotients Q[T]/(P_i), power basis per factor."""
    polys = [p.monic() for p in polys]
    if not polys:
        raise EmptyDescription("need at least one factor polynomial")
    for p in polys:
        if p.is_constant:
            raise EmptyDescription("factor polynomials must be non-constant")
    degs = [p.degree for p in polys]
    offsets = []
    acc = 0
    for d in degs:
        offsets.append(acc)
        acc += d
    n = acc
    table = [[linalg.zero_vec(n) for _ in range(n)] for _ in range(n)]
    for f, p in enumerate(polys):
        off, d = offsets[f], degs[f]
        for i in range(d):
            for j in range(d):
                rem = Poly.monomial(i + j) % p
                cell = [ZERO] * n
                for k, c in enumerate(rem.coeffs):
                    cell[off + k] = c
                table[off + i][off + j] = tuple(cell)
    unit = [ZERO] * n
    for off in offsets:
        unit[off] = ONE
    split = all(d == 1 for d in degs)
    if not label:
        label = " x ".join(f"Q[T]/({p})" for p in polys)
    return Algebra(table, unit, label=label, validate=False, split_etale=split)


def split_etale_algebra(n: int, label="") -> Algebra:
    """Q^n with its basis of orthogonal idempotents."""
    return poly_quotient_product([Poly.x()] * n, label=label or f"Q^{n}")


def matrix_algebra(n: int, label="") -> Algebra:
    """Full matrix algebra M_n(Q), basis E_ij at index i*n + j."""
    dim = n * n
    table = [[linalg.zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        cell = [ZERO] * dim
                        cell[i * n + l] = ONE
                        table[i * n + j][k * n + l] = tuple(cell)
    unit = [ZERO] * dim
    for i in range(n):
        unit[i * n + i] = ONE
    return Algebra(table, unit, label=label or f"M_{n}(Q)", validate=False)


def direct_product(a: Algebra, b: Algebra, label="") -> Algebra:
    n = a.dim + b.dim
    table = [[linalg.zero_vec(n) for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            table[i][j] = tuple(a.table[i][j]) + linalg.zero_vec(b.dim)
    for i in range(b.dim):
        for j in range(b.dim):
            table[a.dim + i][a.dim + j] = linalg.zero_vec(a.dim) + tuple(b.table[i][j])
    unit = tuple(a.unit) + tuple(b.unit)
    return Algebra(table, unit, label=label or f"({a.label}) x ({b.label})",
                   validate=False, split_etale=a.split_etale and b.split_etale)


def _companion_matrix(p: Poly):
    d = p.degree
    m = [[ZERO] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = ONE
    for i in range(d):
        m[i][d - 1] = -p.coeffs[i]
    return m


def companion_algebra(polys, label="") -> Algebra:
    """Subalgebra Q[M] of a matrix algebra, M block-diagonal companion.

    Q[M] is presented in the power basis of M, i.e. as Q[T]/(mu_M).
    """
    polys = [p.monic() for p in polys]
    if not polys:
        raise EmptyDescription("need at least one companion polynomial")
    r = sum(p.degree for p in polys)
    blocks = [_companion_matrix(p) for p in polys]
    m = [[ZERO] * r for _ in range(r)]
    off = 0
    for blk in blocks:
        d = len(blk)
        for i in range(d):
            for j in range(d):
                m[off + i][off + j] = blk[i][j]
        off += d
    # minimal polynomial of M via first dependence among vectorized powers
    def flat(mat):
        return tuple(mat[i][j] for i in range(r) for j in range(r))

    def matmul(a, b):
        return [
            [sum((a[i][k] * b[k][j] for k in range(r)), ZERO) for j in range(r)]
            for i in range(r)
        ]

    ident = [[ONE if i == j else ZERO for j in range(r)] for i in range(r)]
    powers = [flat(ident)]
    basis: list = []
    pivots: list = []
    cur = ident
    mu = None
    while mu is None:
        v = flat(cur)
        residual = linalg.reduce_against(tuple(basis), tuple(pivots), v)
        if linalg.is_zero_vec(residual):
            k = len(powers) - 1
            mat = [tuple(powers[i][j] for i in range(k)) for j in range(r * r)]
            sol = linalg.solve(mat, v)
            mu = Poly(tuple([-c for c in sol] + [ONE]))
            break
        red, piv = linalg.rref(list(basis) + [v])
        basis, pivots = list(red), list(piv)
        cur = matmul(cur, m)
        powers.append(flat(cur))
    return poly_quotient_product([mu], label=label or f"Q[M], mu = {mu}")

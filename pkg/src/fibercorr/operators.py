"""The exact integer operator of the one-coordinate-change correspondence on
the fiber module: minimal-equation, eigen-structure, subquotient and torsion
verification.

All identities are checked in exact integer or rational arithmetic; there is
no floating point on any verification path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .errors import ResourceLimitExceeded
from .exact import (
    BudgetExceeded,
    SparseIntMatrix,
    int_rank,
    lattice_unit_exponent,
)

DEFAULT_MAX_FIBER = 100_000
#: nnz ceiling for intermediate sparse products before falling back to
#: applying the factors column by column
DEFAULT_NNZ_BUDGET = 2_000_000
#: fiber-size ceiling for dense projector work (needs size^2 memory)
DEFAULT_DENSE_LIMIT = 2_048


class CorrespondenceOperator:
    """n^l x n^l 0/1 matrix: entry (t, u) = 1 iff t and u differ in exactly
    one coordinate (row-major tuple indexing)."""

    __slots__ = ("n", "ell", "matrix")

    def __init__(self, n, ell, matrix):
        self.n = n
        self.ell = ell
        self.matrix = matrix

    @property
    def fiber_size(self):
        return self.matrix.size

    @property
    def degree(self):
        return self.ell * (self.n - 1)

    @property
    def eigenvalues(self):
        """n*r - l for r = 0..l, ascending."""
        return tuple(self.n * r - self.ell for r in range(self.ell + 1))


def build_operator(n, ell, max_fiber=DEFAULT_MAX_FIBER):
    """Build the operator from index arithmetic alone.

    Independent of the tuple-level divisor map; the two are required to agree
    on every basis vector and the tests enforce it.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    size = n**ell
    if size > max_fiber:
        raise ResourceLimitExceeded("fiber", size, max_fiber)
    weights = [n ** (ell - 1 - c) for c in range(ell)]
    rows = []
    for m in range(size):
        row = {}
        for w in weights:
            d = (m // w) % n
            base = m - d * w
            for k in range(n):
                if k != d:
                    row[base + k * w] = 1
        rows.append(row)
    return CorrespondenceOperator(n, ell, SparseIntMatrix(size, rows))


def _shifted_factors(matrix, roots):
    return [matrix.shifted(-r) for r in roots]


def _columns_product_scan(factors, size, stop_at_nonzero):
    """Apply the factor list to every standard basis vector.

    Returns True iff the product is zero (stop_at_nonzero=False) or iff it is
    nonzero (stop_at_nonzero=True, early exit at the first nonzero column).
    The factors are symmetric, so row application equals column application.
    """
    for j in range(size):
        vec = {j: 1}
        for f in factors:
            vec = f.row_apply(vec)
            if not vec:
                break
        if vec:
            return True if stop_at_nonzero else False
    return False if stop_at_nonzero else True


def _product_is_zero(factors, size, nnz_budget):
    try:
        acc = factors[0]
        for f in factors[1:]:
            acc = acc.matmul(f, nnz_budget=nnz_budget)
        return acc.is_zero()
    except BudgetExceeded:
        return _columns_product_scan(factors, size, stop_at_nonzero=False)


def _product_is_nonzero(factors, size, nnz_budget):
    try:
        acc = factors[0]
        for f in factors[1:]:
            acc = acc.matmul(f, nnz_budget=nnz_budget)
        return not acc.is_zero()
    except BudgetExceeded:
        return _columns_product_scan(factors, size, stop_at_nonzero=True)


@dataclass(frozen=True)
class MinEquationReport:
    n: int
    ell: int
    roots: tuple
    full_product_zero: bool
    dropped_root_nonzero: tuple  # (root, bool) pairs, ascending root

    @property
    def minimal(self):
        # a vanishing proper subproduct would extend to a vanishing drop-one
        # product, so checking the l+1 maximal subproducts suffices
        return all(ok for _, ok in self.dropped_root_nonzero)

    @property
    def passed(self):
        return self.full_product_zero and self.minimal


def verify_min_equation(op, nnz_budget=DEFAULT_NNZ_BUDGET):
    """Check prod_r (M - (n*r - l) I) = 0 exactly, and its minimality."""
    roots = op.eigenvalues
    matrix = op.matrix
    size = op.fiber_size
    full = _product_is_zero(_shifted_factors(matrix, roots), size, nnz_budget)
    drops = []
    for r in roots:
        sub = _shifted_factors(matrix, [s for s in roots if s != r])
        drops.append((r, _product_is_nonzero(sub, size, nnz_budget)))
    return MinEquationReport(op.n, op.ell, roots, full, tuple(drops))


@dataclass(frozen=True)
class EigenComponent:
    """Exact rational projector onto one integer eigenvalue.

    Stored as an integer matrix over a common denominator.  The multiplicity
    is the rank, read off the trace after the idempotency identity
    num @ num == den * num has been verified exactly.
    """

    r: int
    eigenvalue: int
    multiplicity: int
    projector_num: SparseIntMatrix
    projector_den: int

    def projector_entry(self, i, j):
        return Fraction(self.projector_num.entry(i, j), self.projector_den)

    def projector_dense(self):
        den = self.projector_den
        return [
            [Fraction(v, den) for v in row]
            for row in self.projector_num.to_dense()
        ]

    def rank_by_elimination(self):
        """Independent rank of the projector by exact row reduction."""
        return int_rank(self.projector_num.to_dense())


@dataclass(frozen=True)
class EigenDecomposition:
    n: int
    ell: int
    components: tuple  # EigenComponent, ascending eigenvalue

    @property
    def multiplicities(self):
        return {c.eigenvalue: c.multiplicity for c in self.components}


def expected_multiplicity(n, ell, r):
    """C(l, r) * (n-1)^(l-r), the dimension of the n*r - l eigenspace."""
    return comb(ell, r) * (n - 1) ** (ell - r)


def eigen_decompose(op, dense_limit=DEFAULT_DENSE_LIMIT):
    """Lagrange projectors onto the integer roots, in exact rational arithmetic."""
    size = op.fiber_size
    if size > dense_limit:
        raise ResourceLimitExceeded("projector", size, dense_limit)
    roots = op.eigenvalues
    matrix = op.matrix
    comps = []
    for r, lam in enumerate(roots):
        others = [mu for mu in roots if mu != lam]
        num = SparseIntMatrix.identity(size)
        for mu in others:
            num = num.matmul(matrix.shifted(-mu))
        den = prod(lam - mu for mu in others)
        if den < 0:
            num, den = num.scaled(-1), -den
        if num.matmul(num) != num.scaled(den):
            raise ArithmeticError(f"projector for eigenvalue {lam} is not idempotent")
        tr = num.trace()
        if tr % den:
            raise ArithmeticError(f"projector trace {tr} not divisible by {den}")
        comps.append(EigenComponent(r, lam, tr // den, num, den))
    return EigenDecomposition(op.n, op.ell, tuple(comps))


@dataclass(frozen=True)
class EquivarianceReport:
    passed: bool
    failing_generators: tuple


def verify_equivariance(op, pc):
    """Check that the operator commutes with every product-action generator."""
    if (pc.n, pc.ell) != (op.n, op.ell):
        raise ValueError(
            f"(n, ell) mismatch: operator ({op.n}, {op.ell}), product ({pc.n}, {pc.ell})"
        )
    failing = []
    for j, sigma in enumerate(pc.product_images()):
        images0 = [sigma(i + 1) - 1 for i in range(op.fiber_size)]
        if op.matrix.permuted(images0) != op.matrix:
            failing.append(j)
    return EquivarianceReport(not failing, tuple(failing))


def _lift_vectors(n, ell, subset):
    """Indicator vectors of {t : t fixed on `subset`}: the span is the image
    of pullback along the projection onto those coordinates."""
    size = n**ell
    weights = [n ** (ell - 1 - c) for c in range(ell)]
    sub = [c - 1 for c in subset]
    free = [w for c, w in enumerate(weights) if c not in sub]
    vectors = []
    for assignment in itertools.product(range(n), repeat=len(sub)):
        base = sum(a * weights[c] for a, c in zip(assignment, sub))
        vec = [0] * size
        for combo in itertools.product(range(n), repeat=len(free)):
            vec[base + sum(a * w for a, w in zip(combo, free))] = 1
        vectors.append(vec)
    return vectors


@dataclass(frozen=True)
class SubquotientReport:
    subset: tuple
    r: int
    eigenvalue: int
    contained: bool
    lift_dim: int
    lower_span_rank: int


def verify_subquotient_action(op, subset):
    """Check (M - (n(l-r) - l) I) V_J inside the span of the proper lifts.

    V_J is spanned by tuples free on J and pulled back elsewhere; r = |J|.
    Containment is decided by exact integer rank comparison.
    """
    subset = tuple(sorted(set(int(c) for c in subset)))
    if subset and not (1 <= subset[0] and subset[-1] <= op.ell):
        raise ValueError(f"subset must be contained in 1..{op.ell}, got {subset}")
    r = len(subset)
    lam = op.n * (op.ell - r) - op.ell
    lifts = _lift_vectors(op.n, op.ell, subset)
    lower = []
    for c in subset:
        proper = tuple(x for x in subset if x != c)
        lower.extend(_lift_vectors(op.n, op.ell, proper))
    shifted = op.matrix.shifted(-lam)
    images = []
    for vec in lifts:
        out = shifted.row_apply({i: v for i, v in enumerate(vec) if v})
        images.append([out.get(i, 0) for i in range(op.fiber_size)])
    lower_rank = int_rank(lower)
    joint_rank = int_rank(lower + images)
    return SubquotientReport(
        subset=subset,
        r=r,
        eigenvalue=lam,
        contained=joint_rank == lower_rank,
        lift_dim=len(lifts),
        lower_span_rank=lower_rank,
    )


@dataclass(frozen=True)
class TorsionSystem:
    """Integer elimination system bounding the torsion of the new part.

    Row k, column r holds n^k * k! * C(r, k); e_r is the least positive
    multiple of the r-th unit vector inside the integer row span.
    """

    n: int
    ell: int
    relation_matrix: tuple  # rows k = 1..l over columns r = 1..l
    exponents: tuple  # e_1 .. e_l

    def bound(self, r):
        return factorial(r) * factorial(self.ell - r) * self.n**self.ell

    @property
    def bounds(self):
        return tuple(self.bound(r) for r in range(1, self.ell + 1))

    @property
    def bounds_hold(self):
        return all(b % e == 0 for e, b in zip(self.exponents, self.bounds))


def torsion_exponents(n, ell):
    """Annihilator exponents of the unit vectors modulo the relation lattice."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    rows = [
        [n**k * factorial(k) * comb(r, k) for r in range(1, ell + 1)]
        for k in range(1, ell + 1)
    ]
    exponents = []
    for r in range(1, ell + 1):
        e = lattice_unit_exponent(rows, r - 1)
        if e is None:
            raise ArithmeticError("relation lattice unexpectedly not of full rank")
        bound = factorial(r) * factorial(ell - r) * n**ell
        if bound % e:
            raise ArithmeticError(f"exponent e_{r} = {e} does not divide {bound}")
        if (factorial(ell) * n**ell) % e:
            raise ArithmeticError(f"exponent e_{r} = {e} does not divide l! n^l")
        exponents.append(e)
    return TorsionSystem(n, ell, tuple(tuple(row) for row in rows), tuple(exponents))

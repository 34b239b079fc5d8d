"""Polarised complex structures on integral lattices and their splitting.

A rank-2g lattice Z^N carries a rational complex-structure operator j
(square minus identity) and an integral alternating polarisation psi
with psi(jx, jy) = psi(x, y) and psi(x, jy) positive definite.  The
endomorphisms of this data form an involutive order: the saturated
integral commutant of j, with the adjoint involution a -> psi^-1 a^T
psi.  Splitting 1 in that order into orthogonal Hermitian idempotents
i_v splits the lattice into the unique family of j-stable, pairwise
psi-orthogonal indecomposable sublattices i_v(Z^N).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FiniteDimAlgebra, Involution, InvolutiveOrder, check_positive_involution
from .errors import (
    IncompleteDecompositionError,
    InternalError,
    InvalidHodgeStructureError,
    InvalidInputError,
    LatdecError,
    NoSolutionError,
    NotPositiveDefiniteError,
)
from .idempotents import decompose_unity
from .linalg import (
    as_fraction_matrix,
    first_nonpositive_minor,
    hnf_basis,
    identity,
    inverse,
    is_integral,
    is_symmetric,
    is_unimodular,
    left_integer_kernel,
    mat_mul,
    mat_neg,
    mat_vec,
    solve_rational,
    transpose,
)


@dataclass(frozen=True)
class PolarisedComplexStructure:
    """Operator j with j^2 = -1 and a compatible positive polarisation psi."""

    j: tuple
    psi: tuple

    def __post_init__(self):
        j = as_fraction_matrix(self.j)
        N = len(j)
        if N == 0 or any(len(row) != N for row in j):
            raise InvalidInputError("J: expected a nonempty square matrix")
        if N % 2:
            raise InvalidInputError("J: matrix dimension must be even")
        psi = as_fraction_matrix(self.psi)
        if len(psi) != N or any(len(row) != N for row in psi):
            raise InvalidInputError("psi: expected a %dx%d matrix" % (N, N))
        if not is_integral(psi):
            raise InvalidInputError("psi: entries must be integers")
        psi = tuple(tuple(int(x) for x in row) for row in psi)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "psi", psi)
        if mat_neg(transpose(psi)) != psi:
            raise InvalidInputError("psi: matrix is not alternating")
        if mat_mul(j, j) != mat_neg(identity(N)):
            raise InvalidInputError("J: square is not minus the identity")
        psi_f = as_fraction_matrix(psi)
        if mat_mul(mat_mul(transpose(j), psi_f), j) != psi_f:
            raise InvalidInputError("psi: form is not preserved by J")
        phi = mat_mul(psi_f, j)
        if not is_symmetric(phi):
            raise InvalidInputError("psi: pairing against J-images is not symmetric")
        k = first_nonpositive_minor(phi)
        if k is not None:
            raise NotPositiveDefiniteError(
                "psi: pairing x, y -> psi(x, Jy) has nonpositive leading "
                "principal minor %d" % k,
                minor_index=k)

    @property
    def rank(self):
        return len(self.j)

    @property
    def g(self):
        return len(self.j) // 2

    def positivity_form(self):
        return mat_mul(as_fraction_matrix(self.psi), self.j)


@dataclass(frozen=True)
class HodgeBlock:
    """An HNF sublattice basis with the restricted structure on it."""

    basis: tuple
    structure: PolarisedComplexStructure

    @property
    def rank(self):
        return len(self.basis)


@dataclass(frozen=True)
class HodgeDecomposition:
    blocks: tuple

    def bases(self):
        return frozenset(b.basis for b in self.blocks)


def _vec(M):
    return tuple(x for row in M for x in row)


def _unvec(v, N):
    return tuple(tuple(v[i * N + j] for j in range(N)) for i in range(N))


def _commutant_matrix_basis(j):
    """Saturated Z-basis of the integer matrices commuting with j."""
    N = len(j)
    eqs = []
    for i in range(N):
        for k in range(N):
            row = [Fraction(0)] * (N * N)
            for q in range(N):
                row[i * N + q] += j[q][k]
            for p in range(N):
                row[p * N + k] -= j[i][p]
            scale = math.lcm(*(x.denominator for x in row))
            eqs.append(tuple(int(x * scale) for x in row))
    kernel = left_integer_kernel(transpose(eqs))
    return tuple(_unvec(v, N) for v in hnf_basis(kernel))


def _endomorphism_order_with_basis(H):
    basis = _commutant_matrix_basis(H.j)
    d = len(basis)
    N = H.rank
    stacked = transpose(tuple(_vec(B) for B in basis))

    def integral_coords(M, error_message):
        try:
            x = solve_rational(stacked, _vec(M))
        except NoSolutionError:
            raise InternalError(
                "matrix expected inside the endomorphism algebra is not there")
        if any(c.denominator != 1 for c in x):
            raise error_message()
        return tuple(int(c) for c in x)

    def bug():
        return InternalError(
            "non-integral coordinates against a saturated basis; this is a bug")

    structure = tuple(
        tuple(
            integral_coords(
                tuple(tuple(sum(a * b for a, b in zip(row, col))
                            for col in zip(*basis[jj]))
                      for row in basis[ii]),
                bug)
            for jj in range(d)
        )
        for ii in range(d)
    )
    one = integral_coords(tuple(tuple(int(i == j) for j in range(N))
                                for i in range(N)), bug)
    algebra = FiniteDimAlgebra(structure, one)
    psi_f = as_fraction_matrix(H.psi)
    psi_inv = inverse(psi_f)

    def rosati_error():
        return InvalidHodgeStructureError(
            "psi: the adjoint involution does not preserve the "
            "endomorphism order")

    columns = [
        integral_coords(
            mat_mul(mat_mul(psi_inv, transpose(as_fraction_matrix(B))), psi_f),
            rosati_error)
        for B in basis
    ]
    S = tuple(tuple(columns[c][r] for c in range(d)) for r in range(d))
    involution = Involution(algebra, S)
    order = InvolutiveOrder(algebra, involution)
    if not check_positive_involution(algebra, involution):
        raise InvalidHodgeStructureError(
            "psi: the adjoint involution is not positive")
    return order, basis


def endomorphism_order(H):
    """Saturated integral commutant of j with the adjoint involution."""
    order, _ = _endomorphism_order_with_basis(H)
    return order


def _restrict_structure(H, rows):
    """Restricted (j, psi) on the saturated j-stable span of rows."""
    rows_f = as_fraction_matrix(rows)
    psi_r = tuple(
        tuple(sum(rows[a][p] * H.psi[p][q] * rows[b][q]
                  for p in range(H.rank) for q in range(H.rank))
              for b in range(len(rows)))
        for a in range(len(rows))
    )
    Mt = transpose(rows_f)
    cols = []
    for r in rows:
        try:
            cols.append(solve_rational(Mt, mat_vec(H.j, r)))
        except NoSolutionError:
            raise InternalError("block span is not j-stable; this is a bug")
    j_r = tuple(tuple(cols[c][r] for c in range(len(rows)))
                for r in range(len(rows)))
    return j_r, psi_r


def decompose_hodge(H, max_rank=None):
    """The unique splitting into indecomposable polarised sub-structures."""
    order, basis = _endomorphism_order_with_basis(H)
    idems = decompose_unity(order, max_rank).idems
    N = H.rank
    blocks = []
    for v in idems:
        M = [[0] * N for _ in range(N)]
        for coeff, B in zip(v, basis):
            if coeff:
                for a in range(N):
                    for b in range(N):
                        M[a][b] += coeff * B[a][b]
        span = hnf_basis(tuple(zip(*M)))
        j_r, psi_r = _restrict_structure(H, span)
        try:
            sub = PolarisedComplexStructure(j_r, psi_r)
        except LatdecError as exc:
            raise InternalError("restricted block structure is invalid: %s" % exc)
        blocks.append(HodgeBlock(basis=span, structure=sub))
    blocks.sort(key=lambda b: (len(b.basis), tuple(x for r in b.basis for x in r)))
    stacked = tuple(r for b in blocks for r in b.basis)
    if len(stacked) != N or not is_unimodular(stacked):
        raise IncompleteDecompositionError(
            "blocks do not stack to a unimodular basis; this is a bug")
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            for r in blocks[a].basis:
                for s in blocks[b].basis:
                    if sum(r[p] * H.psi[p][q] * s[q]
                           for p in range(N) for q in range(N)):
                        raise InternalError(
                            "blocks are not psi-orthogonal; this is a bug")
    return HodgeDecomposition(tuple(blocks))


def verify_hodge_decomposition(H, decomposition):
    """Read-only audit of a claimed splitting, independent of its origin."""
    N = H.rank
    blocks = decomposition.blocks
    for b in blocks:
        if hnf_basis(b.basis) != b.basis:
            return False
        try:
            j_r, psi_r = _restrict_structure(H, b.basis)
        except InternalError:
            return False
        if as_fraction_matrix(j_r) != as_fraction_matrix(b.structure.j):
            return False
        if psi_r != b.structure.psi:
            return False
        try:
            PolarisedComplexStructure(j_r, psi_r)
        except LatdecError:
            return False
    stacked = tuple(r for b in blocks for r in b.basis)
    if len(stacked) != N or not is_unimodular(stacked):
        return False
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            for r in blocks[a].basis:
                for s in blocks[b].basis:
                    if sum(r[p] * H.psi[p][q] * s[q]
                           for p in range(N) for q in range(N)):
                        return False
    return True

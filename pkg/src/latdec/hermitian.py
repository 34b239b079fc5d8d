"""Lattices in Hermitian modules over an involutive order.

The module V is presented as Q^N in a fixed basis with L = Z^N.  The
algebra acts through one integer matrix per order basis element, and
the form is tabulated as F[a][b] = f(b_a, b_b), each value a coordinate
vector in the order basis.  Decomposition runs the shared lattice
pipeline on the rational trace form; only the orthogonality predicate
is the finer, algebra-valued one.
"""

from fractions import Fraction

from .algebra import check_positive_involution, positivity_witness
from .errors import (
    InvalidInputError,
    NotPositiveDefiniteError,
    NotPositiveInvolutionError,
    OStabilityError,
)
from .lattice import (
    Block,
    OrthoDecomposition,
    ZLattice,
    decompose_pipeline,
    restrict_gram,
)
from .linalg import (
    as_fraction_matrix,
    first_nonpositive_minor,
    hnf_basis,
    identity,
    is_integral,
    is_symmetric,
    mat_mul,
    mat_vec,
    rational_rank,
    row_span_contains,
    vec_mat,
)


class HermitianModule:
    """Z^N with an algebra action and a compatible Hermitian form."""

    def __init__(self, order, action, form):
        self.order = order
        d = order.dim
        if len(action) != d:
            raise InvalidInputError(
                "action: expected %d matrices, got %d" % (d, len(action)))
        acts = []
        for i, A in enumerate(action):
            A = as_fraction_matrix(A)
            if not is_integral(A):
                raise InvalidInputError(
                    "action[%d]: matrix does not preserve the lattice" % i)
            acts.append(A)
        self.action = tuple(acts)
        N = len(self.action[0]) if d else 0
        for i, A in enumerate(self.action):
            if len(A) != N or any(len(row) != N for row in A):
                raise InvalidInputError(
                    "action[%d]: expected a %dx%d matrix" % (i, N, N))
        self.rank = N
        try:
            form = tuple(
                tuple(tuple(Fraction(x) for x in entry) for entry in row)
                for row in form
            )
        except (TypeError, ValueError):
            raise InvalidInputError("form: entries must be rational vectors")
        if len(form) != N or any(len(row) != N for row in form) or any(
                len(entry) != d for row in form for entry in row):
            raise InvalidInputError(
                "form: expected an %dx%d table of length-%d vectors" % (N, N, d))
        self.form = form
        self._validate()

    def _validate(self):
        R = self.order
        d, N = R.dim, self.rank
        if not check_positive_involution(R.algebra, R.involution):
            raise NotPositiveInvolutionError(
                "involution is not positive",
                witness=positivity_witness(R.algebra, R.involution))
        unit = _action_combination(self.action, R.one)
        if unit != identity(N):
            raise InvalidInputError("action: the unit does not act as the identity")
        for i in range(d):
            for j in range(i, d):
                prod = mat_mul(self.action[i], self.action[j])
                coords = R.mult(R.basis_element(i), R.basis_element(j))
                if prod != _action_combination(self.action, coords):
                    raise InvalidInputError(
                        "action: matrices do not respect the multiplication "
                        "table (pair %d, %d)" % (i, j))
                if i != j:
                    prod = mat_mul(self.action[j], self.action[i])
                    coords = R.mult(R.basis_element(j), R.basis_element(i))
                    if prod != _action_combination(self.action, coords):
                        raise InvalidInputError(
                            "action: matrices do not respect the multiplication "
                            "table (pair %d, %d)" % (j, i))
        flattened = tuple(tuple(x for row in A for x in row) for A in self.action)
        if rational_rank(flattened) != d:
            raise InvalidInputError("action: representation is not faithful")
        for a in range(N):
            for b in range(N):
                if self.form[b][a] != R.star(self.form[a][b]):
                    raise InvalidInputError(
                        "form: not conjugate-symmetric at (%d, %d)" % (a, b))
        for i in range(d):
            A = self.action[i]
            e = R.basis_element(i)
            for a in range(N):
                for b in range(N):
                    lhs = [Fraction(0)] * d
                    for g in range(N):
                        c = A[g][a]
                        if c:
                            entry = self.form[g][b]
                            for k in range(d):
                                lhs[k] += c * entry[k]
                    if tuple(lhs) != R.mult(e, self.form[a][b]):
                        raise InvalidInputError(
                            "form: not linear over the algebra at "
                            "(%d, %d, %d)" % (i, a, b))
        g = tuple(
            tuple(R.algebra.left_trace(self.form[a][b]) for b in range(N))
            for a in range(N)
        )
        if not is_symmetric(g):
            raise InvalidInputError("form: trace Gram is not symmetric")
        k = first_nonpositive_minor(g)
        if k is not None:
            raise NotPositiveDefiniteError(
                "form: trace Gram leading principal minor %d is not positive" % k,
                minor_index=k)
        self.trace_gram = g

    def form_value(self, x, y):
        """f(x, y) as a coordinate vector in the order basis."""
        d = self.order.dim
        acc = [Fraction(0)] * d
        for a, xa in enumerate(x):
            if not xa:
                continue
            row = self.form[a]
            for b, yb in enumerate(y):
                if not yb:
                    continue
                c = xa * yb
                entry = row[b]
                for k in range(d):
                    acc[k] += c * entry[k]
        return tuple(acc)


def _action_combination(action, coords):
    n = len(action[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, A in zip(coords, action):
        if c:
            for i in range(n):
                Ai = A[i]
                oi = out[i]
                for j in range(n):
                    oi[j] += c * Ai[j]
    return tuple(tuple(row) for row in out)


def regular_module(order):
    """The order acting on itself from the left, with f(x, y) = x y*."""
    d = order.dim
    action = tuple(order.algebra.lmul_matrix(order.basis_element(i))
                   for i in range(d))
    form = tuple(
        tuple(
            order.mult(order.basis_element(a), order.star(order.basis_element(b)))
            for b in range(d)
        )
        for a in range(d)
    )
    return HermitianModule(order, action, form)


def trace_form(module):
    return ZLattice(module.trace_gram)


def check_o_stability(module, block_rows):
    """True iff the row span is carried into itself by every action matrix."""
    rows = tuple(tuple(int(x) for x in r) for r in block_rows)
    H = hnf_basis(rows)
    for A in module.action:
        for r in rows:
            img = mat_vec(A, r)
            img = tuple(int(x) for x in img)
            if not row_span_contains(H, img):
                return False
    return True


def decompose_restriction(module, block_rows, max_rank=None):
    """Decomposition inside the sublattice spanned by block_rows.

    Returns block bases in block_rows coordinates.  The span must be
    saturated and action-stable for the restriction to make sense; both
    hold for pipeline output and for the span of R*i with i a Hermitian
    idempotent.  The action is not restricted (it may fail to stay
    faithful on a proper sublattice), only the forms are.
    """
    rows = tuple(tuple(int(x) for x in r) for r in block_rows)
    g = restrict_gram(module.trace_gram, rows)

    def pair_is_zero(u, v):
        return not any(module.form_value(vec_mat(u, rows), vec_mat(v, rows)))

    return decompose_pipeline(g, pair_is_zero, max_rank)


def decompose_hermitian(module, max_rank=None):
    """Unique splitting into pairwise f-orthogonal indecomposable sublattices.

    Pipeline bookkeeping (reduction, enumeration bound, primitivity
    norms) runs on the trace form; zero tests use the full form value.
    """

    def pair_is_zero(u, v):
        return not any(module.form_value(u, v))

    bases = decompose_pipeline(module.trace_gram, pair_is_zero, max_rank)
    for basis in bases:
        if not check_o_stability(module, basis):
            raise OStabilityError(
                "block span is not stable under the algebra action; this is a bug")
    g = module.trace_gram
    blocks = tuple(Block(basis=b, gram=restrict_gram(g, b)) for b in bases)
    return OrthoDecomposition(blocks)

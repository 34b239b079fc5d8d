"""Exact linear algebra over Z and Q.

Matrices are tuples of tuples (rows); integer matrices hold Python ints,
rational ones hold fractions.Fraction.  Everything here is exact: no
floating point appears in any code path, including the short-vector
enumeration bounds.  Vectors are plain coordinate tuples.  Row convention
throughout: a basis is a matrix whose rows are the basis vectors, and a
change of basis acts as G' = U * G * U^T.
"""

import math
from fractions import Fraction

from .errors import InvalidInputError, NoSolutionError, NotPositiveDefiniteError

LLL_DELTA = Fraction(99, 100)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(m, n):
    return tuple((0,) * n for _ in range(m))


def transpose(M):
    return tuple(zip(*M)) if M else ()


def mat_mul(A, B):
    """Matrix product, exact in whatever scalar type the entries carry."""
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def mat_vec(M, v):
    """Apply M to the column vector v, returning a coordinate tuple."""
    return tuple(sum(m * x for m, x in zip(row, v)) for row in M)


def vec_mat(v, M):
    """Row vector times matrix: the row-convention image of v under M."""
    return tuple(sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0]) if M else 0))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(A):
    return tuple(tuple(-a for a in row) for row in A)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def gram_value(G, u, v):
    """Evaluate the bilinear form with Gram matrix G at (u, v)."""
    return sum(u[i] * dot(G[i], v) for i in range(len(u)) if u[i])


def as_fraction_matrix(M):
    return tuple(tuple(Fraction(x) for x in row) for row in M)


def is_integral(M):
    return all(Fraction(x).denominator == 1 for row in M for x in row)


def to_int_matrix(M):
    """Cast a rational matrix known to be integral; raises if it is not."""
    out = []
    for row in M:
        r = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise InvalidInputError("matrix entry %s is not an integer" % (x,))
            r.append(f.numerator)
        out.append(tuple(r))
    return tuple(out)


def is_symmetric(M):
    n = len(M)
    return all(len(row) == n for row in M) and all(
        M[i][j] == M[j][i] for i in range(n) for j in range(i)
    )


def det(M):
    """Exact determinant via rational Gaussian elimination."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        result *= A[c][c]
        inv = A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return sign * result


def inverse(M):
    """Exact inverse of a square rational matrix."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            raise InvalidInputError("matrix is singular")
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return tuple(tuple(row[n:]) for row in A)


def is_unimodular(M):
    n = len(M)
    if n == 0:
        return True
    if any(len(row) != n for row in M):
        return False
    if not is_integral(M):
        return False
    return abs(det(M)) == 1


def leading_principal_minors(M):
    n = len(M)
    return [det([row[: k + 1] for row in M[: k + 1]]) for k in range(n)]


def first_nonpositive_minor(M):
    """1-based index of the first non-positive leading minor, or None."""
    for k, m in enumerate(leading_principal_minors(M), start=1):
        if m <= 0:
            return k
    return None


def is_positive_definite(M):
    return is_symmetric(M) and first_nonpositive_minor(M) is None


def rational_rank(M):
    """Row rank over Q by Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in M]
    if not rows:
        return 0
    rank = 0
    for c in range(len(rows[0])):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        pivot = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / pivot[c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_rational(M, b):
    """One exact solution x of M*x = b (x a column), free variables set to 0.

    Raises NoSolutionError when the system is inconsistent.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(M)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, m):
        if A[i][n] != 0:
            raise NoSolutionError("inconsistent linear system")
    x = [Fraction(0)] * n
    for i, c in pivots:
        x[c] = A[i][n]
    return tuple(x)


def hnf(M):
    """Row-style Hermite normal form with transform.

    Returns (H, U): U is unimodular with U*M equal to H stacked on zero
    rows; H has positive pivots, entries above each pivot reduced into
    [0, pivot), pivot columns strictly increasing, and zero rows trimmed
    (so an all-zero input yields an empty H).  H is the canonical
    identifier of the row span: equal spans give equal H.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[int(x) for x in row] for row in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if A[i][j] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(A[i][j]), i))
            if A[i0][j] < 0:
                A[i0] = [-a for a in A[i0]]
                U[i0] = [-a for a in U[i0]]
            if i0 != r:
                A[r], A[i0] = A[i0], A[r]
                U[r], U[i0] = U[i0], U[r]
            clean = True
            for i in range(r + 1, m):
                q = A[i][j] // A[r][j]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                if A[i][j]:
                    clean = False
            if clean:
                break
        if r < m and A[r][j] != 0:
            p = A[r][j]
            for i in range(r):
                q = A[i][j] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    H = tuple(tuple(row) for row in A[:r])
    return H, tuple(tuple(row) for row in U)


def hnf_basis(rows):
    """HNF of the span of the given integer vectors (transform dropped)."""
    return hnf(tuple(rows))[0]


def row_span_contains(H, v):
    """Membership of an integer vector in the row span of an HNF basis."""
    w = list(v)
    for row in H:
        j = next(k for k, x in enumerate(row) if x)
        q, rem = divmod(w[j], row[j])
        if rem:
            return False
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    return not any(w)


def left_integer_kernel(M):
    """Basis (rows) of {x in Z^m : x*M = 0}; always saturated."""
    H, U = hnf(M)
    return U[len(H):]


def _gso(G):
    """Gram-Schmidt data (squared norms B, coefficients mu) from a Gram matrix.

    Raises NotPositiveDefiniteError as soon as some orthogonalised norm
    fails to be positive; this doubles as the working PD test.
    """
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(G[i][j])
            for k in range(j):
                s -= mu[i][k] * mu[j][k] * B[k]
            mu[i][j] = s / B[j]
        s = Fraction(G[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * B[k]
        if s <= 0:
            raise NotPositiveDefiniteError(
                "Gram matrix is not positive definite (Gram-Schmidt norm %d is %s)"
                % (i + 1, s))
        B[i] = s
    return B, mu


def _congruence_row_op(A, U, k, j, q):
    # basis row k <- row k - q * row j, applied as a congruence on A
    n = len(A)
    for c in range(n):
        A[k][c] -= q * A[j][c]
    for r in range(n):
        A[r][k] -= q * A[r][j]
    U[k] = [a - q * b for a, b in zip(U[k], U[j])]


def _swap_rows(A, U, k):
    n = len(A)
    A[k], A[k - 1] = A[k - 1], A[k]
    for r in range(n):
        A[r][k], A[r][k - 1] = A[r][k - 1], A[r][k]
    U[k], U[k - 1] = U[k - 1], U[k]


def lll_reduce(G, delta=LLL_DELTA):
    """LLL reduction of a positive definite Gram matrix, fully rational.

    Returns (G', U) with G' = U*G*U^T LLL-reduced for the given delta
    (default 99/100) and U unimodular.  Works on the Gram matrix alone;
    no vector embedding and no floating point.
    """
    n = len(G)
    if not is_symmetric(G):
        raise InvalidInputError("gram: matrix is not symmetric")
    A = [[Fraction(x) for x in row] for row in G]
    U = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    _gso(A)  # PD check up front
    k = 1
    while k < n:
        B, mu = _gso(A)
        for j in range(k - 1, -1, -1):
            q = math.floor(mu[k][j] + Fraction(1, 2))
            if q:
                _congruence_row_op(A, U, k, j, q)
                B, mu = _gso(A)
        if B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            k += 1
        else:
            _swap_rows(A, U, k)
            k = max(k - 1, 1)
    Gred = tuple(tuple(x for x in row) for row in A)
    Ured = tuple(tuple(int(x) for x in row) for row in U)
    return Gred, Ured


def _floor_sqrt(r):
    # floor(sqrt(r)) for a nonnegative Fraction; isqrt(floor(r)) is exact
    # because (m+1)^2 > floor(r) already forces (m+1)^2 >= floor(r)+1 > r.
    return math.isqrt(r.numerator // r.denominator)


def _floor_sqrt_plus(r, c):
    """floor(sqrt(r) + c) for Fractions r >= 0, c arbitrary; exact."""
    m = _floor_sqrt(r)
    k = math.floor(m + c)
    t = k + 1 - c
    if t <= 0 or t * t <= r:
        return k + 1
    return k


def canonical_sign(v):
    """Pick the representative of {v, -v} whose first nonzero entry is > 0."""
    for x in v:
        if x:
            return v if x > 0 else tuple(-a for a in v)
    return v


def enumerate_short_vectors(G, bound):
    """All nonzero integer vectors with 0 < v*G*v^T <= bound, one per +- pair.

    G must be symmetric positive definite with rational entries.  The
    result is sorted by (norm, lexicographic order) and each vector is
    sign-normalised so its first nonzero coordinate is positive.  The
    interval bounds of the search are computed exactly (integer square
    roots), so acceptance never depends on rounding.
    """
    n = len(G)
    if not is_symmetric(G):
        raise InvalidInputError("gram: matrix is not symmetric")
    bound = Fraction(bound)
    if bound <= 0:
        return ()
    Gred, U = lll_reduce(G)
    B, mu = _gso(Gred)
    found = []
    x = [0] * n

    def descend(i, remaining):
        if i < 0:
            if any(x):
                found.append(tuple(x))
            return
        c = Fraction(0)
        for j in range(i + 1, n):
            if x[j]:
                c += mu[j][i] * x[j]
        r = remaining / B[i]
        hi = _floor_sqrt_plus(r, -c)
        lo = -_floor_sqrt_plus(r, c)
        for xi in range(lo, hi + 1):
            x[i] = xi
            descend(i - 1, remaining - B[i] * (xi + c) * (xi + c))
        x[i] = 0

    descend(n - 1, bound)
    Gf = as_fraction_matrix(G)
    seen = {canonical_sign(vec_mat(y, U)) for y in found}
    return tuple(sorted(seen, key=lambda v: (gram_value(Gf, v, v), v)))

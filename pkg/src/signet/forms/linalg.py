# src/signet/forms/linalg.py
"""Dense linear algebra over an exact field with involution.

Matrices are lists of rows. Entries may be Fractions, RatFuncs or
CycNumbers; ints are promoted to Fraction on entry. The involution is the
identity except on cyclotomic numbers, where it is complex conjugation.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from signet.errors import ShapeError, SingularError

Matrix = List[List[object]]


# -------------------- scalar helpers --------------------
def scalar(x):
    """Promote ints to Fraction; leave field elements alone."""
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def conj(x):
    """Involution on a scalar."""
    f = getattr(x, "conj", None)
    return f() if f is not None else x


def is_zero(x) -> bool:
    return x == 0


# -------------------- construction --------------------
def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    """Copy ``rows`` into a fresh rectangular matrix with promoted entries.

    :raises ShapeError: If rows have different lengths.
    """
    out = [[scalar(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeError("matrix rows must have equal length")
    return out


def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def shape(M: Matrix) -> Tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def conj_transpose(M: Matrix) -> Matrix:
    return [[conj(x) for x in col] for col in zip(*M)] if M else []


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Matrix product ``A B``.

    :raises ShapeError: On inner dimension mismatch.
    """
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise ShapeError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    out = []
    for i in range(ra):
        row = A[i]
        out_row = []
        for j in range(cb):
            acc = Fraction(0)
            for k in range(ca):
                a = row[k]
                if a != 0:
                    b = B[k][j]
                    if b != 0:
                        acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    if shape(A) != shape(B):
        raise ShapeError("cannot add matrices of different shapes")
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A: Matrix) -> Matrix:
    return [[c * x for x in row] for row in A]


def congruence(A: Matrix, S: Matrix) -> Matrix:
    """``A* S A``."""
    return mat_mul(mat_mul(conj_transpose(A), S), A)


def direct_sum(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[at + i][at + j] = x
        at += len(b)
    return out


def block(rows: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of compatible blocks."""
    out: Matrix = []
    for brow in rows:
        height = len(brow[0])
        for i in range(height):
            line = []
            for blk in brow:
                line.extend(blk[i])
            out.append(line)
    return out


def submatrix(M: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[M[i][j] for j in cols] for i in rows]


def column(M: Matrix, j: int) -> List[object]:
    return [row[j] for row in M]


def from_columns(cols: Sequence[Sequence[object]], height: int) -> Matrix:
    if not cols:
        return [[] for _ in range(height)]
    return [[c[i] for c in cols] for i in range(height)]


# -------------------- elimination --------------------
def row_echelon(M: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    R = [list(r) for r in M]
    nr, nc = shape(R)
    pivots: List[int] = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(nr):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return R, pivots


def rank(M: Matrix) -> int:
    return len(row_echelon(M)[1])


def determinant(M: Matrix):
    """Determinant by Gaussian elimination with nonzero-pivot search."""
    n, m = shape(M)
    if n != m:
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    R = [list(r) for r in M]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if R[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            R[c], R[p] = R[p], R[c]
            det = -det
        piv = R[c][c]
        det = det * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            if R[i][c] != 0:
                f = R[i][c] * inv
                R[i] = [a - f * b for a, b in zip(R[i], R[c])]
    return det


def inverse(M: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan.

    :raises SingularError: If ``M`` is singular.
    """
    n, m = shape(M)
    if n != m:
        raise ShapeError("inverse of a non-square matrix")
    aug = [list(M[i]) + identity(n)[i] for i in range(n)]
    R, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise SingularError("matrix is singular")
    return [row[n:] for row in R]


def kernel(M: Matrix, ncols: int = None) -> List[List[object]]:
    """Basis of ``{x : M x = 0}`` as a list of column vectors."""
    nc = shape(M)[1] if M else (ncols or 0)
    if not M:
        return [[Fraction(int(i == j)) for i in range(nc)] for j in range(nc)]
    R, pivots = row_echelon(M)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][f]
        basis.append(v)
    return basis


def column_echelon(cols: Sequence[Sequence[object]]) -> Tuple[Tuple[object, ...], ...]:
    """Canonical basis of a column span.

    Returns the nonzero rows of the reduced row echelon form of the matrix
    whose rows are the given columns; equal spans give equal results.
    """
    if not cols:
        return ()
    R, pivots = row_echelon([list(c) for c in cols])
    return tuple(tuple(R[i]) for i in range(len(pivots)))


def solve(M: Matrix, b: Sequence[object]) -> List[object]:
    """One solution of ``M x = b``.

    :raises SingularError: If the system is inconsistent.
    """
    nr, nc = shape(M)
    aug = [list(M[i]) + [b[i]] for i in range(nr)]
    R, pivots = row_echelon(aug)
    if nc in pivots:
        raise SingularError("linear system is inconsistent")
    x = [Fraction(0)] * nc
    for r, pc in enumerate(pivots):
        x[pc] = R[r][nc]
    return x

"""Dense exact linear algebra over Q, Q(i), or BigFloat entries.

Matrices are lists of lists; vectors are tuples.  Everything is small (at most
a few hundred rows), so plain fraction Gaussian elimination is the whole story.
Equality of exact matrices is entrywise.  For BigFloat matrices a pivot
tolerance must be supplied and partial pivoting kicks in; exact fields use the
first nonzero pivot so reduced echelon bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

Row = List
Mat = List[Row]


class DegenerateForm(Exception):
    """Symmetric form has nontrivial radical where a nondegenerate one is required."""


class SingularMatrix(Exception):
    """Matrix inversion requested for a singular matrix."""


def zeros(r: int, c: int) -> Mat:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Mat:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def copy_mat(m: Sequence[Sequence]) -> Mat:
    return [list(row) for row in m]


def _promote(m: Sequence[Sequence]) -> Mat:
    # plain ints are promoted so that pivot division stays exact; any other
    # entry type (Fraction, GaussianRational, BigFloat) is kept as is
    return [[Fraction(x) if type(x) is int else x for x in row] for row in m]


def transpose(m: Sequence[Sequence]) -> Mat:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def mat_add(a, b) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m) -> Mat:
    return [[c * x for x in row] for row in m]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_mat(m) -> bool:
    return all(not x for row in m for x in row)


def _default_is_zero(x) -> bool:
    return not x


def rref(m: Sequence[Sequence], tol=None) -> Tuple[Mat, List[int]]:
    """Reduced row echelon form.  Returns (R, pivot column list).

    With ``tol`` set (BigFloat matrices), entries of magnitude <= tol are
    treated as zero and rows are pivoted by largest magnitude for stability.
    """
    a = _promote(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if tol is None:
        is_zero: Callable = _default_is_zero
    else:
        is_zero = lambda x: abs(x) <= tol  # noqa: E731
    piv_cols: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        best = None
        if tol is None:
            for i in range(r, rows):
                if not is_zero(a[i][c]):
                    best = i
                    break
        else:
            mags = [(abs(a[i][c]), i) for i in range(r, rows)]
            mag, i = max(mags, key=lambda t: (t[0], -t[1]))
            if not is_zero(mag):
                best = i
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and not is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    return a, piv_cols


def rank(m: Sequence[Sequence], tol=None) -> int:
    return len(rref(m, tol)[1])


def nullspace(m: Sequence[Sequence], tol=None) -> List[tuple]:
    """Basis of the kernel as column vectors, free variables in ascending order.

    Exact over Q/Q(i): the vectors span the kernel and rank + len(basis) = cols.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return [tuple(Fraction(1) if i == j else Fraction(0) for i in range(cols)) for j in range(cols)]
    r, piv = rref(m, tol)
    one = Fraction(1)
    piv_set = set(piv)
    basis = []
    for free in range(cols):
        if free in piv_set:
            continue
        v = [Fraction(0)] * cols
        v[free] = one
        for row_idx, pc in enumerate(piv):
            v[pc] = -r[row_idx][free]
        basis.append(tuple(v))
    return basis


def solve(m: Sequence[Sequence], b: Sequence, tol=None) -> Optional[tuple]:
    """One solution of m x = b, or None if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    r, piv = rref(aug, tol)
    if cols in piv:
        return None
    x = [Fraction(0)] * cols
    for row_idx, pc in enumerate(piv):
        x[pc] = r[row_idx][cols]
    return tuple(x)


def inverse(m: Sequence[Sequence], tol=None) -> Mat:
    n = len(m)
    aug = [list(m[i]) + list(identity(n)[i]) for i in range(n)]
    r, piv = rref(aug, tol)
    if piv != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in r]


def det(m: Sequence[Sequence]):
    """Determinant by exact Gaussian elimination."""
    a = _promote(m)
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = None
        for i in range(c, n):
            if a[i][c]:
                p = i
                break
        if p is None:
            return Fraction(0) * result
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        result = result * a[c][c]
        inv = a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def sym_diagonalize(m: Sequence[Sequence]) -> Tuple[Mat, List]:
    """Congruence diagonalization of a symmetric matrix: P with P^t m P diagonal.

    Plain symmetric Gaussian elimination over the field; zero pivots are fixed
    by a symmetric row/column swap, or by adding e_i + e_j when the whole
    diagonal block vanishes.  No square roots are taken.  Returns (P, diag).
    """
    n = len(m)
    a = _promote(m)
    p = identity(n)

    def add_col(dst, src, f):
        # column op on a (and p) plus the symmetric row op on a
        for i in range(n):
            a[i][dst] += f * a[i][src]
            p[i][dst] += f * p[i][src]
        for j in range(n):
            a[dst][j] += f * a[src][j]

    def swap_cols(i, j):
        for r_ in range(n):
            a[r_][i], a[r_][j] = a[r_][j], a[r_][i]
            p[r_][i], p[r_][j] = p[r_][j], p[r_][i]
        a[i], a[j] = a[j], a[i]

    for k in range(n):
        if not a[k][k]:
            pivot = None
            for i in range(k + 1, n):
                if a[i][i]:
                    pivot = i
                    break
            if pivot is not None:
                swap_cols(k, pivot)
            else:
                found = False
                for i in range(k + 1, n):
                    if a[k][i]:
                        add_col(k, i, Fraction(1))
                        found = True
                        break
                if not found:
                    continue  # row/col k lies in the radical
        if not a[k][k]:
            continue
        for j in range(k + 1, n):
            if a[k][j]:
                add_col(j, k, -a[k][j] / a[k][k])
    return p, [a[i][i] for i in range(n)]


def sym_signature(m: Sequence[Sequence]) -> Tuple[int, int]:
    """Signature (n_minus, n_plus) of a nondegenerate symmetric matrix.

    Counts negative entries first: diag{-I4, I3} reports (4, 3).  Raises
    DegenerateForm when the rank falls short of the dimension.
    """
    _, d = sym_diagonalize(m)
    n_minus = sum(1 for x in d if x < 0)
    n_plus = sum(1 for x in d if x > 0)
    if n_minus + n_plus < len(d):
        raise DegenerateForm(f"rank {n_minus + n_plus} < dimension {len(d)}")
    return n_minus, n_plus


def span_rref(vectors: Sequence[Sequence]) -> Tuple[tuple, ...]:
    """Canonical form of a span: nonzero RREF rows, usable for subspace equality."""
    if not vectors:
        return ()
    r, piv = rref([list(v) for v in vectors])
    return tuple(tuple(row) for row in r[: len(piv)])


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return span_rref(a) == span_rref(b)


def span_contains(vectors: Sequence[Sequence], v: Sequence) -> bool:
    """True when v is a linear combination of the given vectors."""
    if not any(v):
        return True
    cols = [list(col) for col in zip(*vectors)] if vectors else [[] for _ in v]
    return solve(cols, list(v)) is not None


def coords_in_basis(basis: Sequence[Sequence], v: Sequence) -> Optional[tuple]:
    """Coordinates of v in the given (independent) spanning set, or None."""
    cols = [list(col) for col in zip(*basis)]
    return solve(cols, list(v))

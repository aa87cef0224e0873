"""Exact linear algebra over fields of Cyclotomic (or Fraction/int) entries.

Matrices are tuples of row tuples.  Two independent rank routines are
provided: ``rank_dense`` (fraction-free Bareiss elimination) and
``rank_sparse`` (pivot-dictionary elimination on sparse columns).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .cyclo import ONE, ZERO, Cyclotomic, root_of_unity, roots_of_unity_by_order

Matrix = tuple[tuple[Cyclotomic, ...], ...]
Vector = tuple[Cyclotomic, ...]


def as_matrix(rows: Iterable[Iterable[Any]]) -> Matrix:
    return tuple(tuple(Cyclotomic(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def scalar_matrix(n: int, c: Cyclotomic) -> Matrix:
    return tuple(tuple(c if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(a: Matrix, v: Sequence[Cyclotomic]) -> Vector:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a
        for rb in b
    )


def is_scalar(a: Matrix) -> bool:
    c = a[0][0]
    return all(a[i][j] == (c if i == j else ZERO) for i in range(len(a)) for j in range(len(a)))


def matrix_power(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    for _ in range(k):
        result = mat_mul(result, a)
    return result


def _inv(x: Any) -> Any:
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def rref(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Cyclotomic]], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : A x = 0}; each vector scaled so its first nonzero entry is 1."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        lead = next(x for x in v if x)
        if lead != ONE:
            inv = lead.inverse()
            v = [x * inv for x in v]
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Sequence[Cyclotomic]], b: Sequence[Cyclotomic]) -> Vector | None:
    """One solution of A x = b, or None if the system is inconsistent."""
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def _exact_div(a: Any, b: Any) -> Any:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("Bareiss division was not exact")
        return q
    return a / b


def rank_dense(rows: Sequence[Sequence[Any]]) -> int:
    """Rank by fraction-free (Bareiss) elimination on a dense copy."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev: Any = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            row_r = m[r]
            if f:
                m[i] = [_exact_div(p * x - f * y, prev) for x, y in zip(mi, row_r)]
            else:
                m[i] = [_exact_div(p * x, prev) for x in mi]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rank_sparse(columns: Iterable[Mapping[Any, Any]]) -> int:
    """Rank of a set of sparse vectors (dicts index -> value) by incremental elimination.

    Each stored pivot vector is normalized so its pivot entry is 1; a new
    vector is reduced against pivots until it vanishes or yields a new one.
    """
    pivots: dict[Any, dict[Any, Any]] = {}
    for col in columns:
        v = {k: x for k, x in col.items() if x}
        while v:
            k = min(v)
            if k not in pivots:
                inv = _inv(v[k])
                pivots[k] = {i: x * inv for i, x in v.items()}
                break
            f = v[k]
            for i, x in pivots[k].items():
                y = v.get(i)
                nv = (y - f * x) if y is not None else -f * x
                if nv:
                    v[i] = nv
                else:
                    v.pop(i, None)
    return len(pivots)


def classify_entries(values: Iterable[Cyclotomic]) -> tuple[bool, bool]:
    """(all rational, all integral) for a collection of entries."""
    rational = integral = True
    for x in values:
        if x.conductor != 1:
            return False, False
        if x.den != 1:
            integral = False
    return rational, integral


def downcast(x: Cyclotomic, integral: bool) -> Any:
    """Rational entries as int or Fraction for faster elimination."""
    if integral:
        return x.num[0]
    return Fraction(x.num[0], x.den)


def simultaneous_eigenbasis(
    ops: Sequence[Matrix], orders: Sequence[int], dim: int
) -> list[tuple[Vector, tuple[Cyclotomic, ...]]]:
    """Common eigenvectors of commuting finite-order matrices.

    The space is split by each operator in turn; within a split, eigenvalues
    are taken in (order, exponent) order of the root of unity, and each
    eigenspace basis comes from a reduced row echelon nullspace.  Returns
    (vector, eigenvalues) pairs, or raises ValueError if the operators are
    not simultaneously diagonalizable.
    """
    spaces: list[tuple[list[Vector], tuple[Cyclotomic, ...]]] = [
        ([tuple(ONE if i == j else ZERO for i in range(dim)) for j in range(dim)], ())
    ]
    for op, k in zip(ops, orders):
        refined = []
        for basis, vals in spaces:
            found = 0
            for zeta in roots_of_unity_by_order(k):
                shifted = [tuple(x - (zeta if i == j else ZERO) for j, x in enumerate(row))
                           for i, row in enumerate(op)]
                images = [mat_vec(shifted, b) for b in basis]
                # coefficients c with Σ c_k (A - ζ) b_k = 0
                system = [[images[kk][i] for kk in range(len(basis))] for i in range(dim)]
                coeffs = nullspace(system, len(basis))
                if not coeffs:
                    continue
                vecs = []
                for c in coeffs:
                    v = [ZERO] * dim
                    for ck, b in zip(c, basis):
                        if ck:
                            v = [x + ck * y for x, y in zip(v, b)]
                    vecs.append(_normalize_lead(v))
                refined.append((vecs, vals + (zeta,)))
                found += len(vecs)
            if found != len(basis):
                raise ValueError("operators are not simultaneously diagonalizable")
        spaces = refined
    return [(v, vals) for basis, vals in spaces for v in basis]


def _normalize_lead(v: Sequence[Cyclotomic]) -> Vector:
    lead = next(x for x in v if x)
    if lead == ONE:
        return tuple(v)
    inv = lead.inverse()
    return tuple(x * inv for x in v)


__all__ = [
    "Matrix",
    "Vector",
    "as_matrix",
    "identity",
    "scalar_matrix",
    "mat_mul",
    "mat_vec",
    "kron",
    "is_scalar",
    "matrix_power",
    "rref",
    "nullspace",
    "solve",
    "rank_dense",
    "rank_sparse",
    "simultaneous_eigenbasis",
    "root_of_unity",
]

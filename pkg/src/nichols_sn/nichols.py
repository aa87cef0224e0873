"""Graded dimensions of Nichols algebras as ranks of quantum symmetrizers.

Tensors in V^{⊗d} are sparse dicts mapping words (tuples of basis indices)
to coefficients.  The degree-d component of B(V) is the image of the
quantum symmetrizer S_d = Σ_{w in S_d} T_w, where T_w is the braid lift
of w along a reduced word.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .cyclo import ONE, ZERO, Cyclotomic
from .linalg import classify_entries, downcast, rank_dense, rank_sparse
from .ydmod import BraidingOperator, YDModule, braiding

__all__ = [
    "GradedDims",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "BUDGET_ENV",
    "braid_action",
    "braid_lift",
    "reduced_word",
    "quantum_symmetrizer",
    "naive_symmetrizer",
    "symmetrizer_rank",
    "hilbert_prefix",
]

Word = tuple[int, ...]
Tensor = dict[Word, Cyclotomic]

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "NICHOLS_SN_BUDGET"


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]
    exhausted: bool

    def __post_init__(self) -> None:
        if self.dims and self.dims[0] != 1:
            raise ValueError("degree 0 must have dimension 1")

    @property
    def total(self) -> int | None:
        """Sum of the dims, meaningful as dim B(V) only when exhausted."""
        return sum(self.dims) if self.exhausted else None


class BudgetExceeded(RuntimeError):
    def __init__(self, degree: int, size: int, budget: int, completed: GradedDims) -> None:
        super().__init__(
            f"degree {degree} needs {size} basis tensors, over the budget of {budget}; "
            f"completed through degree {len(completed.dims) - 1}")
        self.degree = degree
        self.completed = completed


def _add(out: Tensor, key: Word, val: Cyclotomic) -> None:
    new = out.get(key, ZERO) + val
    if new:
        out[key] = new
    else:
        out.pop(key, None)


def _sigma(c: BraidingOperator, vec: Mapping[Word, Cyclotomic], i: int) -> Tensor:
    """c on legs (i, i+1), 0-based i."""
    out: Tensor = {}
    for w, x in vec.items():
        for y0, y1, coef in c.image(w[i], w[i + 1]):
            _add(out, w[:i] + (y0, y1) + w[i + 2:], x * coef)
    return out


def braid_action(c: BraidingOperator, d: int, i: int) -> Callable[[Mapping[Word, Cyclotomic]], Tensor]:
    """σ_i on V^{⊗d}: c on legs i, i+1 (1-based), identity elsewhere."""
    if not 1 <= i <= d - 1:
        raise ValueError(f"strand index {i} out of range for degree {d}")
    return lambda vec: _sigma(c, vec, i - 1)


def braid_lift(c: BraidingOperator, word: Sequence[int], vec: Mapping[Word, Cyclotomic]) -> Tensor:
    """σ_{i_1} ∘ ... ∘ σ_{i_k} applied to vec (rightmost letter first); letters 1-based."""
    out = dict(vec)
    for i in reversed(word):
        out = _sigma(c, out, i - 1)
    return out


def reduced_word(perm: Sequence[int], last: bool = False) -> list[int]:
    """A reduced word i_1 ... i_k (1-based) with perm = s_{i_1} ... s_{i_k}.

    ``perm`` is in one-line notation (0-based images).  Descents are peeled
    off from the right, choosing the first (or with ``last``, the final)
    descent each time, so the two settings usually give different words.
    """
    w = list(perm)
    word: list[int] = []
    while True:
        descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not descents:
            break
        i = descents[-1] if last else descents[0]
        w[i], w[i + 1] = w[i + 1], w[i]
        word.append(i + 1)
    return word[::-1]


def _words(dim: int, d: int) -> Iterable[Word]:
    return itertools.product(range(dim), repeat=d)


def quantum_symmetrizer(c: BraidingOperator, d: int) -> dict[Word, Tensor]:
    """Columns of S_d on every basis word, via S_d = (S_{d-1} ⊗ id) ∘ T_d.

    T_d = Σ_k σ_{d-1} ∘ ... ∘ σ_k sums the braid lifts of the minimal
    coset representatives of S_{d-1} in S_d.
    """
    prev: dict[Word, Tensor] = {(): {(): ONE}}
    for k in range(1, d + 1):
        cur: dict[Word, Tensor] = {}
        for w in _words(c.dim, k):
            # T_k = 1 + σ_{k-1}(1 + σ_{k-2}(1 + ... (1 + σ_1)))
            shuffled: Tensor = {w: ONE}
            for i in range(1, k):
                shuffled = _sigma(c, shuffled, i - 1)
                _add(shuffled, w, ONE)
            col: Tensor = {}
            for u, x in shuffled.items():
                for v, y in prev[u[:-1]].items():
                    _add(col, v + (u[-1],), x * y)
            cur[w] = col
        prev = cur
    return prev


def naive_symmetrizer(c: BraidingOperator, d: int, last: bool = False) -> dict[Word, Tensor]:
    """Columns of Σ_{w in S_d} T_w with each T_w lifted from an explicit reduced word."""
    words = [reduced_word(p, last) for p in itertools.permutations(range(d))]
    out = {}
    for w in _words(c.dim, d):
        col: Tensor = {}
        for rw in words:
            for key, val in braid_lift(c, rw, {w: ONE}).items():
                _add(col, key, val)
        out[w] = col
    return out


def symmetrizer_rank(columns: Mapping[Word, Mapping[Word, Cyclotomic]], method: str = "sparse") -> int:
    """Rank of the symmetrizer from its columns, by sparse or dense exact elimination."""
    values = [x for col in columns.values() for x in col.values()]
    rational, integral = classify_entries(values)
    if rational:
        cols = [{k: downcast(x, integral) for k, x in col.items()} for col in columns.values()]
    else:
        cols = [dict(col) for col in columns.values()]
    if method == "sparse":
        return rank_sparse(cols)
    if method == "dense":
        index = {w: i for i, w in enumerate(sorted(columns))}
        zero = 0 if rational else ZERO
        rows = []
        for col in cols:
            row = [zero] * len(index)
            for k, x in col.items():
                row[index[k]] = x
            rows.append(row)
        return rank_dense(rows)
    raise ValueError(f"unknown elimination method {method!r}")


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def hilbert_prefix(
    m: YDModule | BraidingOperator,
    dmax: int,
    method: str = "sparse",
    budget: int | None = None,
) -> GradedDims:
    """dim B^k(V) for k = 0..dmax; stops early (exhausted) at the first zero."""
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    c = m if isinstance(m, BraidingOperator) else braiding(m)
    limit = _budget(budget)
    dims = [1]
    for k in range(1, dmax + 1):
        size = c.dim ** k
        if size > limit:
            raise BudgetExceeded(k, size, limit, GradedDims(tuple(dims), False))
        r = symmetrizer_rank(quantum_symmetrizer(c, k), method)
        dims.append(r)
        if r == 0:
            dims.extend([0] * (dmax - k))
            return GradedDims(tuple(dims), True)
    return GradedDims(tuple(dims), False)

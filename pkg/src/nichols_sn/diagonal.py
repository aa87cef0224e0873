"""Braidings of diagonal type: Cartan exponents, Dynkin components, finite type.

Indices are 0-based throughout; reports convert to 1-based vertex labels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cyclo import ONE, Cyclotomic, order_of, to_text

__all__ = [
    "DiagonalBraiding",
    "GCM",
    "ComponentType",
    "TypeVerdict",
    "DiagonalVerdict",
    "CartanError",
    "QiiOne",
    "NotARoot",
    "NotCartan",
    "cartan_exponents",
    "components",
    "is_finite_type",
    "verdict_from_diagonal",
    "leading_minors",
    "symmetrizer",
]


@dataclass(frozen=True)
class DiagonalBraiding:
    """c(v_i ⊗ v_j) = q[i][j] v_j ⊗ v_i; ``basis`` optionally records the v_i."""

    q: tuple[tuple[Cyclotomic, ...], ...]
    basis: tuple[tuple[Cyclotomic, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        q = tuple(tuple(Cyclotomic(x) for x in row) for row in self.q)
        object.__setattr__(self, "q", q)
        if any(len(row) != len(q) for row in q):
            raise ValueError("q-matrix must be square")
        if any(not x for row in q for x in row):
            raise ValueError("q-matrix entries must be nonzero")

    @property
    def rank(self) -> int:
        return len(self.q)

    def principal(self, indices: Sequence[int]) -> DiagonalBraiding:
        return DiagonalBraiding(tuple(tuple(self.q[i][j] for j in indices) for i in indices))

    def to_json(self) -> list[list[str]]:
        return [[to_text(x) for x in row] for row in self.q]


@dataclass(frozen=True)
class GCM:
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        object.__setattr__(self, "a", a)
        n = len(a)
        for i in range(n):
            if len(a[i]) != n:
                raise ValueError("GCM must be square")
            if a[i][i] != 2:
                raise ValueError("GCM diagonal entries must be 2")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError(f"positive off-diagonal entry at ({i}, {j})")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError(f"zero pattern not symmetric at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.a)

    def sub(self, indices: Sequence[int]) -> GCM:
        return GCM(tuple(tuple(self.a[i][j] for j in indices) for i in indices))


class CartanError(ValueError):
    pass


class QiiOne(CartanError):
    def __init__(self, i: int) -> None:
        super().__init__(f"q[{i}][{i}] = 1")
        self.i = i


class NotARoot(CartanError):
    def __init__(self, i: int) -> None:
        super().__init__(f"q[{i}][{i}] is not a root of unity")
        self.i = i


class NotCartan(CartanError):
    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"q[{i}][{j}] q[{j}][{i}] is not a power of q[{i}][{i}]")
        self.i, self.j = i, j


def cartan_exponents(d: DiagonalBraiding) -> GCM:
    """The GCM with q_ij q_ji = q_ii^{a_ij}, a_ij in (-ord q_ii, 0]."""
    n = d.rank
    orders = []
    for i in range(n):
        qii = d.q[i][i]
        if qii == ONE:
            raise QiiOne(i)
        k = order_of(qii)
        if k is None:
            raise NotARoot(i)
        orders.append(k)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        qii = d.q[i][i]
        inv_powers = [ONE]
        inv = qii.inverse()
        for _ in range(orders[i] - 1):
            inv_powers.append(inv_powers[-1] * inv)
        for j in range(n):
            if i == j:
                continue
            target = d.q[i][j] * d.q[j][i]
            for k, val in enumerate(inv_powers):
                if val == target:
                    a[i][j] = -k
                    break
            else:
                raise NotCartan(i, j)
    return GCM(tuple(map(tuple, a)))


def components(a: GCM) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin graph (edge i-j iff a_ij != 0)."""
    n = a.rank
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and a.a[i][j] and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def symmetrizer(a: GCM) -> list[Fraction] | None:
    """Positive d with d_i a_ij = d_j a_ji, or None if a is not symmetrizable."""
    n = a.rank
    d: list[Fraction | None] = [None] * n
    for comp in components(a):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or not a.a[i][j]:
                    continue
                want = d[i] * a.a[i][j] / a.a[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    return [x for x in d]  # type: ignore[misc]


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def leading_minors(s: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    return [_det([list(row[:k]) for row in s[:k]]) for k in range(1, len(s) + 1)]


@dataclass(frozen=True)
class ComponentType:
    vertices: tuple[int, ...]
    kind: str  # "finite" | "affine" | "indefinite"
    name: str | None

    def describe(self) -> str:
        label = self.name or self.kind
        verts = "{" + ", ".join(str(v + 1) for v in self.vertices) + "}"
        return f"{verts}: {label}" + ("" if self.name is None or self.kind == "finite" else f" ({self.kind})")


@dataclass(frozen=True)
class TypeVerdict:
    finite: bool
    components: tuple[ComponentType, ...]


def _classify_component(a: GCM) -> tuple[str, str | None]:
    d = symmetrizer(a)
    if d is None:
        return "indefinite", None
    s = [[d[i] * a.a[i][j] for j in range(a.rank)] for i in range(a.rank)]
    minors = leading_minors(s)
    if all(m > 0 for m in minors):
        return "finite", _finite_name(a)
    if all(m > 0 for m in minors[:-1]) and minors[-1] == 0:
        return "affine", _affine_name(a)
    return "indefinite", None


def is_finite_type(a: GCM) -> TypeVerdict:
    """Classify each Dynkin component; finite iff every component is finite.

    The criterion is positive definiteness of the symmetrized matrix
    (all leading principal minors positive), computed exactly.
    Non-symmetrizable components count as indefinite.
    """
    comps = []
    for verts in components(a):
        kind, name = _classify_component(a.sub(verts))
        comps.append(ComponentType(verts, kind, name))
    return TypeVerdict(all(c.kind == "finite" for c in comps), tuple(comps))


def _edges(a: GCM) -> dict[tuple[int, int], int]:
    n = a.rank
    return {(i, j): a.a[i][j] * a.a[j][i] for i in range(n) for j in range(i + 1, n) if a.a[i][j]}


def _finite_name(a: GCM) -> str:
    n = a.rank
    if n == 1:
        return "A1"
    edges = _edges(a)
    deg = Counter()
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    mults = sorted(edges.values())
    if mults[-1] == 3:
        return "G2"
    if mults[-1] == 2:
        if n == 2:
            return "B2"
        (i, j), = [e for e, m in edges.items() if m == 2]
        if deg[i] == 1 or deg[j] == 1:
            end, nbr = (i, j) if deg[i] == 1 else (j, i)
            return f"B{n}" if a.a[end][nbr] == -2 else f"C{n}"
        return "F4"
    if max(deg.values()) <= 2:
        return f"A{n}"
    center = next(v for v in range(n) if deg[v] == 3)
    arms = []
    for start in (j for j in range(n) if (min(center, j), max(center, j)) in edges):
        length, prev, cur = 1, center, start
        while True:
            nxt = [k for k in range(n) if k not in (prev, cur) and (min(cur, k), max(cur, k)) in edges]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms), "?")


def _affine_name(a: GCM) -> str | None:
    n = a.rank
    if n == 2:
        pair = sorted((a.a[0][1], a.a[1][0]))
        if pair == [-2, -2]:
            return "A1^(1)"
        if pair == [-4, -1]:
            return "A2^(2)"
        return None
    edges = _edges(a)
    if all(m == 1 for m in edges.values()) and len(edges) == n:
        deg = Counter()
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        if all(deg[v] == 2 for v in range(n)):
            return f"A{n - 1}^(1)"
    return None


@dataclass(frozen=True)
class DiagonalVerdict:
    outcome: str  # "infinite" | "finite-possible" | "inapplicable"
    reason: str
    gcm: GCM | None = None
    type_verdict: TypeVerdict | None = None


def verdict_from_diagonal(d: DiagonalBraiding) -> DiagonalVerdict:
    """What a diagonal braided subspace says about the ambient Nichols algebra.

    A diagonal entry q_ii = 1 gives a primitive line with trivial self-braiding,
    hence infinite dimension.  Otherwise, with all q_ii roots of unity and
    Cartan exponents available, the subspace obstructs finiteness exactly when
    its GCM is not of finite type.  Anything else draws no conclusion.
    """
    for i in range(d.rank):
        if d.q[i][i] == ONE:
            return DiagonalVerdict("infinite", f"q[{i + 1}][{i + 1}] = 1 (trivial self-braiding)")
    try:
        a = cartan_exponents(d)
    except NotARoot as exc:
        return DiagonalVerdict("inapplicable", str(exc))
    except NotCartan as exc:
        return DiagonalVerdict("inapplicable", f"not of Cartan type: {exc}")
    tv = is_finite_type(a)
    if tv.finite:
        return DiagonalVerdict("finite-possible", "Cartan matrix of finite type", a, tv)
    bad = ", ".join(c.describe() for c in tv.components if c.kind != "finite")
    return DiagonalVerdict("infinite", f"Cartan matrix not of finite type: {bad}", a, tv)

"""The Yetter-Drinfeld module M(C, ρ) over S_n, its braiding and braided subspaces.

Basis vectors are indexed by a = i * deg ρ + k, standing for g_i ⊗ v_k where
g_i is the i-th coset representative of the section (g_i ▷ s = t_i) and
v_k the k-th standard basis vector of the representation space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cyclo import ONE, ZERO, Cyclotomic, to_text
from .diagonal import DiagonalBraiding
from .linalg import Matrix, Vector, rank_dense, simultaneous_eigenbasis, solve
from .permcore import (
    CosetSection,
    Permutation,
    centralizer,
    compose,
    concat,
    conjugate,
    coset_section,
    is_orthogonal,
    order,
)
from .reps import Representation

__all__ = [
    "YDModule",
    "BraidingOperator",
    "AxiomReport",
    "EmbeddingReport",
    "NotClosed",
    "NotDiagonalizable",
    "build_module",
    "braiding",
    "verify_axioms",
    "restrict",
    "rank2_real_subspace",
    "diagonalize_blocks",
    "diagonalize_abelian_class",
    "cyclic_power_blocks",
    "product_embedding",
    "group_generators",
]

Sparse = dict[int, Cyclotomic]
Terms = tuple[tuple[int, int, Cyclotomic], ...]


class NotClosed(ValueError):
    """W ⊗ W is not stable under the braiding."""


class NotDiagonalizable(ValueError):
    """The requested diagonalization is not available for this module."""


def group_generators(n: int) -> list[Permutation]:
    """(1 2) and (1 2 ... n), which generate S_n."""
    if n < 2:
        return []
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return gens


class YDModule:
    """M(C, ρ) = ⊕ g_i ⊗ V with g·(g_i v) = g_j (γ·v) where g g_i = g_j γ."""

    def __init__(
        self,
        section: CosetSection,
        rho: Representation,
        overrides: Mapping[tuple[Permutation, int], tuple[int, Matrix]] | None = None,
    ) -> None:
        self.section = section
        self.rho = rho
        self.degree = section.base_point.degree
        self.rank = section.size
        self.rep_dim = rho.dim
        self.dim = self.rank * self.rep_dim
        self._factor_cache: dict[tuple[Permutation, int], tuple[int, Permutation]] = {}
        self._overrides = dict(overrides or {})

    @property
    def base_point(self) -> Permutation:
        return self.section.base_point

    def index(self, i: int, k: int) -> int:
        return i * self.rep_dim + k

    def split(self, a: int) -> tuple[int, int]:
        return divmod(a, self.rep_dim)

    def grading(self, a: int) -> Permutation:
        """Coaction degree t_i of the basis vector a."""
        return self.section.class_list[a // self.rep_dim]

    def factor(self, g: Permutation, i: int) -> tuple[int, Permutation]:
        """(j, γ) with g g_i = g_j γ and γ in the centralizer of s."""
        key = (g, i)
        hit = self._factor_cache.get(key)
        if hit is None:
            sec = self.section
            j = sec.index(conjugate(g, sec.class_list[i]))
            gamma = compose(sec.reps[j].inverse(), compose(g, sec.reps[i]))
            hit = (j, gamma)
            self._factor_cache[key] = hit
        return hit

    def action_entry(self, g: Permutation, i: int) -> tuple[int, Matrix]:
        """Target block and matrix ρ(γ) for g acting on the block g_i ⊗ V."""
        if (g, i) in self._overrides:
            return self._overrides[(g, i)]
        j, gamma = self.factor(g, i)
        return j, self.rho.matrix(gamma)

    def act_basis(self, g: Permutation, a: int) -> Sparse:
        i, k = self.split(a)
        j, m = self.action_entry(g, i)
        return {self.index(j, l): m[l][k] for l in range(self.rep_dim) if m[l][k]}

    def act(self, g: Permutation, v: Sequence[Cyclotomic]) -> Vector:
        out = [ZERO] * self.dim
        for a, x in enumerate(v):
            if x:
                for b, y in self.act_basis(g, a).items():
                    out[b] = out[b] + x * y
        return tuple(out)

    def with_override(self, g: Permutation, i: int, j: int, m: Matrix) -> YDModule:
        """Copy with one action-table entry replaced (for negative tests)."""
        over = dict(self._overrides)
        over[(g, i)] = (j, m)
        return YDModule(self.section, self.rho, over)

    def basis_label(self, a: int) -> str:
        i, k = self.split(a)
        g = self.section.reps[i]
        return f"{g}⊗v{k + 1}" if self.rep_dim > 1 else f"{g}"

    def __repr__(self) -> str:
        return (f"YDModule(s={self.base_point}, |C|={self.rank}, "
                f"rho={self.rho.label or '?'}, dim={self.dim})")


def build_module(
    class_list: Sequence[Permutation],
    s: Permutation,
    rho: Representation,
    section: CosetSection | None = None,
) -> YDModule:
    if rho.group != centralizer(s.degree, s):
        raise ValueError(f"representation group {rho.group.name} is not the centralizer of {s}")
    if section is None:
        section = coset_section(class_list, s)
    elif section.base_point != s or set(section.class_list) != set(class_list):
        raise ValueError("section does not match the class and base point")
    return YDModule(section, rho)


@dataclass(frozen=True)
class BraidingOperator:
    """c on W ⊗ W; ``columns[a * dim + b]`` lists (x, y, coef) with c(a⊗b) = Σ coef x⊗y."""

    dim: int
    columns: tuple[Terms, ...]
    source: str = field(default="", compare=False)

    def image(self, a: int, b: int) -> Terms:
        return self.columns[a * self.dim + b]

    def apply(self, vec: Mapping[tuple[int, int], Cyclotomic]) -> dict[tuple[int, int], Cyclotomic]:
        out: dict[tuple[int, int], Cyclotomic] = {}
        for (a, b), x in vec.items():
            for y0, y1, coef in self.image(a, b):
                key = (y0, y1)
                val = out.get(key, ZERO) + x * coef
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def matrix(self) -> Matrix:
        d2 = self.dim * self.dim
        rows = [[ZERO] * d2 for _ in range(d2)]
        for col, terms in enumerate(self.columns):
            for x, y, coef in terms:
                rows[x * self.dim + y][col] = coef
        return tuple(tuple(r) for r in rows)

    def as_diagonal(self) -> DiagonalBraiding | None:
        """The q-matrix if c(a⊗b) = q_ab b⊗a for all basis pairs, else None."""
        q = [[ONE] * self.dim for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(self.dim):
                terms = self.image(a, b)
                if len(terms) != 1 or terms[0][:2] != (b, a):
                    return None
                q[a][b] = terms[0][2]
        return DiagonalBraiding(tuple(map(tuple, q)))

    @classmethod
    def from_diagonal(cls, d: DiagonalBraiding, source: str = "diagonal") -> BraidingOperator:
        n = d.rank
        cols = tuple(((b, a, d.q[a][b]),) for a in range(n) for b in range(n))
        return cls(n, cols, source)

    def to_json(self) -> list[dict]:
        return [
            {"pair": [a + 1, b + 1],
             "image": [[[x + 1, y + 1], to_text(c)] for x, y, c in self.image(a, b)]}
            for a in range(self.dim) for b in range(self.dim)
        ]


def braiding(m: YDModule) -> BraidingOperator:
    """c(g_i v ⊗ g_j w) = g_h(γ·w) ⊗ g_i v where t_i g_j = g_h γ."""
    cols = []
    for a in range(m.dim):
        t = m.grading(a)
        for b in range(m.dim):
            cols.append(tuple((x, a, coef) for x, coef in sorted(m.act_basis(t, b).items())))
    return BraidingOperator(m.dim, tuple(cols), repr(m))


# -- axioms -------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    yd_compatible: bool
    braid_equation: bool
    triangular: bool
    triples_checked: int
    exhaustive: bool
    witness: str | None = None


def _apply_leg(c: BraidingOperator, vec: dict[tuple[int, ...], Cyclotomic], pos: int) -> dict:
    out: dict[tuple[int, ...], Cyclotomic] = {}
    for key, x in vec.items():
        for y0, y1, coef in c.image(key[pos], key[pos + 1]):
            nk = key[:pos] + (y0, y1) + key[pos + 2:]
            val = out.get(nk, ZERO) + x * coef
            if val:
                out[nk] = val
            else:
                out.pop(nk, None)
    return out


def braid_equation_holds(c: BraidingOperator, triple: tuple[int, int, int]) -> bool:
    start = {triple: ONE}
    lhs = _apply_leg(c, _apply_leg(c, _apply_leg(c, start, 0), 1), 0)
    rhs = _apply_leg(c, _apply_leg(c, _apply_leg(c, start, 1), 0), 1)
    return lhs == rhs


def verify_axioms(
    m: YDModule,
    exhaustive_limit: int = 12,
    samples: int = 2000,
    seed: int = 0,
) -> AxiomReport:
    """YD compatibility on generators of S_n and the braid equation on basis triples.

    Triples are exhaustive when dim M <= ``exhaustive_limit``, otherwise a
    seeded random sample of ``samples`` triples.  The report names the
    first failure found.
    """
    gens = group_generators(m.degree) + list(m.section.class_list)
    for g in gens:
        for a in range(m.dim):
            want = conjugate(g, m.grading(a))
            for b in m.act_basis(g, a):
                if m.grading(b) != want:
                    return AxiomReport(False, False, False, False, 0, False,
                                       f"delta({g}.e{a + 1}) has degree {m.grading(b)}, expected {want}")
    c = braiding(m)
    for a in range(m.dim):
        for b in range(m.dim):
            if any(y != a for _, y, _ in c.image(a, b)):
                return AxiomReport(False, True, False, False, 0, False,
                                   f"second leg of c(e{a + 1}⊗e{b + 1}) is not e{a + 1}")
    exhaustive = m.dim <= exhaustive_limit
    if exhaustive:
        triples: Iterable[tuple[int, int, int]] = (
            (a, b, d) for a in range(m.dim) for b in range(m.dim) for d in range(m.dim))
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.randrange(m.dim) for _ in range(3)) for _ in range(samples)]  # type: ignore[misc]
    count = 0
    for t in triples:
        count += 1
        if not braid_equation_holds(c, t):
            a, b, d = t
            return AxiomReport(False, True, False, True, count, exhaustive,
                               f"braid equation fails on e{a + 1}⊗e{b + 1}⊗e{d + 1}")
    return AxiomReport(True, True, True, True, count, exhaustive)


# -- braided subspaces --------------------------------------------------

def _operator(m: YDModule | BraidingOperator) -> BraidingOperator:
    return m if isinstance(m, BraidingOperator) else braiding(m)


def restrict(m: YDModule | BraidingOperator, w: Sequence[Sequence[Cyclotomic]]) -> BraidingOperator:
    """Braiding on span(W) in the basis W, or NotClosed if c(W⊗W) ⊄ W⊗W."""
    c = _operator(m)
    w = [tuple(Cyclotomic(x) for x in v) for v in w]
    r = len(w)
    if r == 0:
        return BraidingOperator(0, (), "empty")
    if rank_dense(w) != r:
        raise ValueError("W is linearly dependent")
    # pivot coordinates p with W[:, p] invertible; coordinates of u in W from u[p]
    pivots: list[int] = []
    for col in range(c.dim):
        trial = pivots + [col]
        if rank_dense([[v[p] for p in trial] for v in w]) == len(trial):
            pivots = trial
            if len(pivots) == r:
                break
    wp_t = [[w[k][pivots[a]] for k in range(r)] for a in range(r)]  # Wpᵀ
    cols = [solve(wp_t, [ONE if x == e else ZERO for x in range(r)]) for e in range(r)]
    g_inv = [[cols[b][k] for b in range(r)] for k in range(r)]
    supp = [{i: x for i, x in enumerate(v) if x} for v in w]
    out = []
    for k in range(r):
        for l in range(r):
            vec = {(a, b): x * y for a, x in supp[k].items() for b, y in supp[l].items()}
            image = c.apply(vec)
            coeffs = {}
            for x in range(r):
                for y in range(r):
                    acc = ZERO
                    for a in range(r):
                        if not g_inv[x][a]:
                            continue
                        for b in range(r):
                            t = image.get((pivots[a], pivots[b]))
                            if t and g_inv[y][b]:
                                acc = acc + g_inv[x][a] * g_inv[y][b] * t
                    if acc:
                        coeffs[(x, y)] = acc
            rebuilt: dict[tuple[int, int], Cyclotomic] = {}
            for (x, y), coef in coeffs.items():
                for a, u in supp[x].items():
                    for b, v in supp[y].items():
                        val = rebuilt.get((a, b), ZERO) + coef * u * v
                        if val:
                            rebuilt[(a, b)] = val
                        else:
                            rebuilt.pop((a, b), None)
            if rebuilt != image:
                raise NotClosed(f"c(w{k + 1}⊗w{l + 1}) leaves W⊗W")
            out.append(tuple((x, y, coef) for (x, y), coef in sorted(coeffs.items())))
    return BraidingOperator(r, tuple(out), f"restriction of {c.source}")


def rank2_real_subspace(m: YDModule, sigma: Permutation) -> BraidingOperator:
    """span{g_1 v, σ·(g_1 v)} for σ ▷ s = s⁻¹ ≠ s; diagonal with q-matrix [[q, q⁻¹], [q⁻¹, q]]."""
    s = m.base_point
    if s.inverse() == s:
        raise ValueError(f"{s} is an involution, so s⁻¹ = s")
    if conjugate(sigma, s) != s.inverse():
        raise ValueError(f"{sigma} does not conjugate {s} to its inverse")
    v1 = tuple(ONE if a == 0 else ZERO for a in range(m.dim))
    v2 = m.act(sigma, v1)
    op = restrict(m, [v1, v2])
    return BraidingOperator(op.dim, op.columns, f"real-class subspace of {m!r} via {sigma}")


def diagonalize_blocks(m: YDModule, blocks: Sequence[int]) -> DiagonalBraiding:
    """Diagonal braiding on ⊕_{j in blocks} g_j ⊗ V for pairwise commuting t_j.

    On block j the operators ρ(g_j⁻¹ t_i g_j), i in ``blocks``, are
    simultaneously diagonalized; c(g_i u ⊗ g_j u') is then λ_i(u') g_j u' ⊗ g_i u.
    """
    sec = m.section
    ts = [sec.class_list[i] for i in blocks]
    for x in ts:
        for y in ts:
            if compose(x, y) != compose(y, x):
                raise NotDiagonalizable(f"{x} and {y} do not commute")
    basis: list[Vector] = []
    eigen: list[tuple[int, tuple[Cyclotomic, ...]]] = []  # (position in blocks, eigenvalues)
    for pos, j in enumerate(blocks):
        g = sec.reps[j]
        elems = [compose(g.inverse(), compose(t, g)) for t in ts]
        ops = [m.rho.matrix(x) for x in elems]
        try:
            pairs = simultaneous_eigenbasis(ops, [order(x) for x in elems], m.rep_dim)
        except ValueError as exc:
            raise NotDiagonalizable(str(exc)) from None
        for u, vals in pairs:
            vec = [ZERO] * m.dim
            for k, x in enumerate(u):
                vec[m.index(j, k)] = x
            basis.append(tuple(vec))
            eigen.append((pos, vals))
    r = len(basis)
    q = [[eigen[b][1][eigen[a][0]] for b in range(r)] for a in range(r)]
    return DiagonalBraiding(tuple(map(tuple, q)), tuple(basis))


def diagonalize_abelian_class(m: YDModule) -> DiagonalBraiding:
    """Diagonal form of the whole module when the class is abelian."""
    try:
        return diagonalize_blocks(m, range(m.rank))  # type: ignore[arg-type]
    except NotDiagonalizable as exc:
        raise NotDiagonalizable(f"class is not abelian or not diagonalizable: {exc}") from None


def cyclic_power_blocks(m: YDModule) -> list[int]:
    """Indices of the class elements that are powers of s (these commute pairwise)."""
    s = m.base_point
    out = []
    p = s
    seen = set()
    while p not in seen:
        seen.add(p)
        if p in m.section:
            out.append(m.section.index(p))
        p = compose(p, s)
    return sorted(out)


# -- product construction ---------------------------------------------

@dataclass(frozen=True)
class EmbeddingReport:
    factor: Cyclotomic | None
    uniform: bool
    is_morphism: bool
    pairs_checked: int
    witness: str | None = None


def product_embedding(mpi: YDModule, mprod: YDModule, w: Sequence[Cyclotomic]) -> EmbeddingReport:
    """Compare c on ψ(M_π) ⊂ M_{π#τ} with c on M_π, ψ(g_i v) = (g_i # e)(v ⊗ w).

    The braidings agree up to one scalar factor (q_ττ); ψ is a morphism of
    braided vector spaces exactly when that factor is 1.
    """
    pi = mpi.base_point
    n = pi.degree
    total = mprod.degree
    p = total - n
    tau_images = mprod.base_point.images[n:]
    tau = Permutation(tuple(x - n for x in tau_images))
    if mprod.base_point != concat(pi, tau):
        raise ValueError("product base point is not π#τ")
    if not is_orthogonal(pi, tau):
        raise ValueError("π and τ are not orthogonal")
    w = tuple(Cyclotomic(x) for x in w)
    lam_dim = len(w)
    if not any(w):
        raise ValueError("w must be nonzero")
    if mprod.rep_dim != mpi.rep_dim * lam_dim:
        raise ValueError("dimensions of ρ ⊗ λ do not match")
    ep = Permutation.identity(p)
    base_block = mprod.section.index(mprod.base_point)
    psi: list[Vector] = []
    for a in range(mpi.dim):
        i, k = mpi.split(a)
        start = [ZERO] * mprod.dim
        for l, x in enumerate(w):
            if x:
                start[mprod.index(base_block, k * lam_dim + l)] = x
        psi.append(mprod.act(concat(mpi.section.reps[i], ep), start))
    c_pi, c_prod = braiding(mpi), braiding(mprod)
    supp = [{i: x for i, x in enumerate(v) if x} for v in psi]

    def tensor(terms: Mapping[tuple[int, int], Cyclotomic]) -> dict[tuple[int, int], Cyclotomic]:
        out: dict[tuple[int, int], Cyclotomic] = {}
        for (x, y), coef in terms.items():
            for a, u in supp[x].items():
                for b, v in supp[y].items():
                    val = out.get((a, b), ZERO) + coef * u * v
                    if val:
                        out[(a, b)] = val
                    else:
                        out.pop((a, b), None)
        return out

    factor: Cyclotomic | None = None
    count = 0
    for a in range(mpi.dim):
        for b in range(mpi.dim):
            count += 1
            lhs = c_prod.apply(tensor({(a, b): ONE}))
            rhs = tensor({(x, y): coef for x, y, coef in c_pi.image(a, b)})
            if factor is None:
                key = next(iter(rhs))
                factor = lhs.get(key, ZERO) / rhs[key]
            if lhs != {k: factor * v for k, v in rhs.items()}:
                return EmbeddingReport(factor, False, False, count,
                                       f"pair (e{a + 1}, e{b + 1}) breaks the uniform factor")
    return EmbeddingReport(factor, True, factor == ONE, count)

"""Representations of centralizers: characters, the D4 family, tensor products.

A ``Representation`` is fixed by matrices on a generating set of its group;
the full element table is filled in by walking the Cayley graph.  Labels
follow the grammar ``eps``, ``sgn``, ``chi{j}^{k}``, ``d4:(e1,e2)``,
``d4:rho2``, with ``*`` separating factors for the blocks of a centralizer
(blocks ordered by decreasing cycle length, fixed points last).
"""

from __future__ import annotations

import re
from functools import cached_property
from typing import Mapping, Sequence

from .cyclo import ONE, ZERO, Cyclotomic, root_of_unity
from .linalg import Matrix, as_matrix, identity, is_scalar, kron, mat_mul
from .permcore import (
    CentralizerBlock,
    Permutation,
    Subgroup,
    centralizer,
    concat,
    conjugate,
    is_orthogonal,
    order,
)

__all__ = [
    "Representation",
    "LabelError",
    "NonScalarAction",
    "build_character",
    "dihedral4_irreps",
    "d4_presentation",
    "outer_tensor",
    "q_ss",
    "verify_representation",
    "resolve_label",
    "block_labels",
    "registry_labels",
]


class LabelError(ValueError):
    """A representation label that cannot be resolved for the given group."""


class NonScalarAction(ValueError):
    """The base point does not act by a scalar (ρ reducible or wrong group)."""


class Representation:
    def __init__(
        self,
        group: Subgroup,
        generator_images: Mapping[Permutation, Matrix],
        label: str | None = None,
    ) -> None:
        if not generator_images:
            raise ValueError("a representation needs at least one generator image")
        self.group = group
        self.generator_images = {g: as_matrix(m) for g, m in generator_images.items()}
        dims = {len(m) for m in self.generator_images.values()}
        if len(dims) != 1:
            raise ValueError("generator matrices of different sizes")
        self.dim = dims.pop()
        self.label = label

    @cached_property
    def table(self) -> dict[Permutation, Matrix]:
        """Matrix of every group element, reached along first-found words."""
        e = Permutation.identity(self.group.degree)
        table = {e: identity(self.dim)}
        frontier = [e]
        gens = list(self.generator_images.items())
        while frontier:
            nxt = []
            for g in frontier:
                for x, mx in gens:
                    h = g * x
                    if h not in table:
                        table[h] = mat_mul(table[g], mx)
                        nxt.append(h)
            frontier = nxt
        return table

    def matrix(self, g: Permutation) -> Matrix:
        if g in self.generator_images:
            return self.generator_images[g]
        try:
            return self.table[g]
        except KeyError:
            raise ValueError(f"{g} is not in the group of this representation") from None

    def value(self, g: Permutation) -> Cyclotomic:
        """Scalar value for 1-dimensional representations."""
        if self.dim != 1:
            raise ValueError("value() needs a 1-dimensional representation")
        return self.matrix(g)[0][0]

    def same_as(self, other: Representation) -> bool:
        """Equal matrices on every element (not an isomorphism test)."""
        if self.dim != other.dim or self.group != other.group:
            return False
        return all(self.matrix(g) == other.matrix(g) for g in self.group.elements)

    def __repr__(self) -> str:
        return f"Representation({self.label or '?'}, dim={self.dim}, group={self.group.name})"


def verify_representation(rho: Representation) -> bool:
    """Check that the generator images extend to a homomorphism of the group.

    Every element reached in the Cayley graph must satisfy
    M(g x) = M(g) M(x) for each generator x, and the elements reached must be
    exactly the group.
    """
    table = rho.table
    if set(table) != rho.group.element_set:
        return False
    e = Permutation.identity(rho.group.degree)
    if table[e] != identity(rho.dim):
        return False
    for g, mg in table.items():
        for x, mx in rho.generator_images.items():
            if table.get(g * x) != mat_mul(mg, mx):
                return False
    return True


# -- characters ---------------------------------------------------------

_CHI = re.compile(r"chi(\d+)(?:\^(-?\d+))?")


def _one_dim(group: Subgroup, values: Mapping[Permutation, Cyclotomic], label: str) -> Representation:
    return Representation(group, {g: ((v,),) for g, v in values.items()}, label)


def build_character(label: str, group: Subgroup) -> Representation:
    """1-dimensional representation named by ``eps``, ``sgn`` or ``chi{j}^{k}``.

    ``sgn`` restricts the sign of S_n.  ``chi{j}^{k}`` sends τ_j to ω_j^k and
    needs a cyclic group of order j, or a block of j-cycles (each cycle
    then maps to ω_j^k and cycle-permuting generators to 1).
    """
    gens = group.generators or (Permutation.identity(group.degree),)
    if label == "eps":
        return _one_dim(group, {g: ONE for g in gens}, label)
    if label == "sgn":
        return _one_dim(group, {g: Cyclotomic(g.sign()) for g in gens}, label)
    m = _CHI.fullmatch(label)
    if m:
        j, k = int(m.group(1)), int(m.group(2) or 1)
        zeta = root_of_unity(j, k)
        blocks = group.nontrivial_blocks if group.blocks is not None else ()
        if len(blocks) == 1 and blocks[0].length == j:
            b = blocks[0]
            values = {g: zeta for g in b.cycle_generators}
            values.update({g: ONE for g in b.permuting_generators})
            return _one_dim(group, values, label)
        if group.blocks is None and len(gens) == 1 and order(gens[0]) == j and group.order == j:
            return _one_dim(group, {gens[0]: zeta}, label)
        raise LabelError(f"{label} needs a cyclic group of order {j} (got {group.name})")
    raise LabelError(f"unknown character label {label!r}")


# -- the dihedral group of order 8 --------------------------------------

_D4_BASE = Permutation.parse("(1 3)(2 4)", 4)
_D4_A = Permutation.parse("(1 2 3 4)", 4)
_D4_B = Permutation.parse("(1 3)", 4)


def d4_presentation(block: CentralizerBlock, n: int) -> tuple[Permutation, Permutation]:
    """Generators A (order 4) and B of the centralizer block of two 2-cycles.

    For the base point (1 3)(2 4) these are A = (1 2 3 4), B = (1 3); for
    other pairs of 2-cycles they are transported by a relabelling.
    """
    if (block.length, block.multiplicity) != (2, 2):
        raise LabelError("d4 labels need a block of exactly two 2-cycles")
    (x1, x2), (x3, x4) = block.cycles
    # g sends 1,3,2,4 to x1,x2,x3,x4 so that g ▷ (1 3)(2 4) = (x1 x2)(x3 x4)
    img = list(range(n))
    for src, dst in zip((1, 3, 2, 4), (x1, x2, x3, x4)):
        img[src - 1] = dst - 1
    # points 5..n of the base go to the remaining points in order
    rest_src = [p for p in range(1, n + 1) if p not in (1, 2, 3, 4)]
    rest_dst = [p for p in range(1, n + 1) if p not in (x1, x2, x3, x4)]
    for a, b in zip(rest_src, rest_dst):
        img[a - 1] = b - 1
    g = Permutation(tuple(img))
    pad = Permutation.identity(n - 4)
    a = concat(_D4_A, pad) if n > 4 else _D4_A
    b = concat(_D4_B, pad) if n > 4 else _D4_B
    return conjugate(g, a), conjugate(g, b)


_ROT = as_matrix([[0, -1], [1, 0]])
_REFL = as_matrix([[-1, 0], [0, 1]])


def dihedral4_irreps(group: Subgroup, a: Permutation, b: Permutation) -> dict[str, Representation]:
    """The five irreducible representations of a dihedral group of order 8.

    Keys are ``d4:(e1,e2)`` for the characters A ↦ e1, B ↦ e2 and
    ``d4:rho2`` for ρ(A) = [[0,-1],[1,0]], ρ(B) = [[-1,0],[0,1]].
    """
    if group.order != 8 or a not in group or b not in group:
        raise LabelError("not a dihedral group of order 8 with the given generators")
    if order(a) != 4 or order(b) != 2 or conjugate(b, a) != a.inverse():
        raise LabelError("A must have order 4 and B must invert it")
    out = {}
    for e1 in (1, -1):
        for e2 in (1, -1):
            key = f"d4:({e1},{e2})"
            out[key] = _one_dim(group, {a: Cyclotomic(e1), b: Cyclotomic(e2)}, key)
    out["d4:rho2"] = Representation(group, {a: _ROT, b: _REFL}, "d4:rho2")
    return out


# -- tensor products ----------------------------------------------------

def _tensor_on_blocks(group: Subgroup, parts: Sequence[Representation], label: str) -> Representation:
    """Internal tensor product of representations of commuting subgroups."""
    images: dict[Permutation, Matrix] = {}
    dims = [p.dim for p in parts]
    for idx, part in enumerate(parts):
        left = identity(_prod(dims[:idx]))
        right = identity(_prod(dims[idx + 1:]))
        for g, m in part.generator_images.items():
            images[g] = kron(kron(left, m), right)
    if not images:
        images = {Permutation.identity(group.degree): identity(_prod(dims))}
    return Representation(group, images, label)


def _prod(xs: Sequence[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def outer_tensor(rho: Representation, lam: Representation) -> Representation:
    """ρ ⊗ λ on the image of Sₙ^π × S_p^τ under #, matrix(g#h) = ρ(g) ⊗ λ(h)."""
    n, p = rho.group.degree, lam.group.degree
    pi = _central_point(rho.group)
    tau = _central_point(lam.group)
    if pi is not None and tau is not None and not is_orthogonal(pi, tau):
        raise ValueError("supports are not orthogonal")
    en, ep = Permutation.identity(n), Permutation.identity(p)
    gens = [concat(g, ep) for g in rho.group.generators] + [concat(en, h) for h in lam.group.generators]
    base = concat(pi, tau) if pi is not None and tau is not None else None
    group = Subgroup(n + p, gens, expected_order=rho.group.order * lam.group.order, base_point=base)
    images = {}
    for g, m in rho.generator_images.items():
        images[concat(g, ep)] = kron(m, identity(lam.dim))
    for h, m in lam.generator_images.items():
        images[concat(en, h)] = kron(identity(rho.dim), m)
    label = f"{rho.label}*{lam.label}" if rho.label and lam.label else None
    return Representation(group, images, label)


def _central_point(group: Subgroup) -> Permutation | None:
    """The permutation whose centralizer ``group`` was built from, if known."""
    return group.base_point


# -- q_ss -----------------------------------------------------------------

def q_ss(s: Permutation, rho: Representation) -> Cyclotomic:
    """The scalar by which s acts; raises NonScalarAction otherwise."""
    m = _matrix_via_cycles(s, rho)
    if not is_scalar(m):
        raise NonScalarAction(f"{s} does not act by a scalar under {rho.label or 'rho'}")
    return m[0][0]


def _matrix_via_cycles(s: Permutation, rho: Representation) -> Matrix:
    # s is the product of its cycles; use generator images when they cover them
    cycles = [Permutation.from_cycles(s.degree, [c]) for c in s.cycles()]
    if all(c in rho.generator_images for c in cycles):
        m = identity(rho.dim)
        for c in cycles:
            m = mat_mul(m, rho.generator_images[c])
        return m
    return rho.matrix(s)


# -- label resolution ----------------------------------------------------

def block_labels(label: str) -> list[str]:
    return [part.strip() for part in label.split("*")]


def _block_rep(label: str, block: CentralizerBlock, n: int) -> Representation:
    sub = Subgroup(n, block.generators, blocks=[block], expected_order=block.order)
    if label.startswith("d4:"):
        a, b = d4_presentation(block, n)
        sub = Subgroup(n, (a, b), blocks=[block], expected_order=8)
        irreps = dihedral4_irreps(sub, a, b)
        if label not in irreps:
            raise LabelError(f"unknown D4 label {label!r}")
        return irreps[label]
    return build_character(label, sub)


def resolve_label(label: str, s: Permutation) -> Representation:
    """Representation of the centralizer of s named by ``label``.

    A single factor applies to the whole centralizer; ``a*b*...`` gives one
    factor per nontrivial block, in block order.
    """
    n = s.degree
    group = centralizer(n, s)
    blocks = group.nontrivial_blocks
    factors = block_labels(label)
    if len(factors) == 1:
        lab = factors[0]
        if lab.startswith("d4:"):
            if len(blocks) != 1:
                raise LabelError("d4 labels apply to a single block of two 2-cycles")
            rep = _block_rep(lab, blocks[0], n)
            return Representation(group, rep.generator_images, label)
        if lab in ("eps", "sgn") or len(blocks) != 1:
            rep = build_character(lab, group)
            return Representation(group, rep.generator_images, label)
        rep = _block_rep(lab, blocks[0], n)
        return Representation(group, rep.generator_images, label)
    if len(factors) != len(blocks):
        raise LabelError(
            f"label {label!r} has {len(factors)} factors but the centralizer of {s} "
            f"has {len(blocks)} nontrivial blocks ({group.name})")
    parts = [_block_rep(f, b, n) for f, b in zip(factors, blocks)]
    return _tensor_on_blocks(group, parts, label)


def registry_labels(s: Permutation) -> list[str]:
    """Labels of the representations this registry can build for the centralizer of s.

    These are the products of block characters (all powers χ_j^k on cyclic
    blocks, eps/sgn on fixed points, χ_j^k on wreath blocks) and, on a block
    of two 2-cycles, the five D4 irreducibles.
    """
    group = centralizer(s.degree, s)
    options: list[list[str]] = []
    for b in group.nontrivial_blocks:
        if b.length == 1 or (b.length, b.multiplicity) == (2, 1):
            options.append(["eps", "sgn"])
        elif (b.length, b.multiplicity) == (2, 2):
            options.append(["d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)", "d4:rho2"])
        else:
            options.append(["eps"] + [f"chi{b.length}^{k}" for k in range(1, b.length)])
    if not options:
        return ["eps"]
    labels = [""]
    for opts in options:
        labels = [f"{p}*{o}" if p else o for p in labels for o in opts]
    return labels

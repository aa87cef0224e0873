"""Permutations of {1..n}, cycle types, conjugacy classes and centralizers.

Permutations are stored as 0-based image tuples; cycle notation such as
``(1 2)(3 4)`` is used only for parsing and printing.  Everything here is
immutable, and equality/ordering of permutations is lexicographic on the
image tuple.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "CycleType",
    "Subgroup",
    "CentralizerBlock",
    "CosetSection",
    "compose",
    "conjugate",
    "cycle_type",
    "order",
    "enumerate_class",
    "centralizer",
    "coset_section",
    "reversal_involution",
    "concat",
    "is_orthogonal",
    "canonical_representative",
    "conjugator",
    "BRUTE_FORCE_MAX_DEGREE",
]

# Above this degree, centralizers and coset sections are built structurally
# instead of by scanning all of S_n.
BRUTE_FORCE_MAX_DEGREE = 8


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def _make(cls, images: tuple[int, ...]) -> Permutation:
        # trusted constructor: skips the bijection check
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._make(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-based images, e.g. ``[2, 1, 3]`` is (1 2) in S_3."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ValueError(f"point {a} outside 1..{n}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse cycle notation ``"(1 2)(3 4)"``; ``"e"`` is the identity.

        Points inside a cycle are separated by whitespace or commas.  When
        ``n`` is omitted the degree is the largest point mentioned.
        """
        text = text.strip()
        if text in ("e", "()", ""):
            if n is None:
                raise ValueError("degree required to parse the identity")
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", re.sub(r"\)\s+\(", ")(", text)):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(tok) for tok in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        top = max(max(c) for c in cycles)
        if n is None:
            n = top
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._make(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based), each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p∘q``: apply q first, then p."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation._make(tuple(pi[j] for j in q.images))


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g ▷ h = g h g⁻¹."""
    _check_degrees(g, h)
    out = [0] * h.degree
    gi = g.images
    for i, j in enumerate(h.images):
        out[gi[i]] = gi[j]
    return Permutation._make(tuple(out))


@dataclass(frozen=True)
class CycleType:
    """Multiplicities ``m_j`` of j-cycles, fixed points counted as 1-cycles."""

    counts: tuple[tuple[int, int], ...]  # (length, multiplicity), ascending, m > 0

    def __post_init__(self) -> None:
        lengths = [j for j, _ in self.counts]
        if lengths != sorted(set(lengths)) or any(j < 1 or m < 1 for j, m in self.counts):
            raise ValueError(f"malformed cycle type {self.counts}")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> CycleType:
        c = Counter(lengths)
        return cls(tuple(sorted(c.items())))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> CycleType:
        """Parse the exponent grammar ``"2^2 3"``.

        Lengths are whitespace separated with optional ``^multiplicity``.
        With ``n`` given, missing fixed points are filled in; an explicit
        ``1^a`` must then agree with ``n``.
        """
        lengths: list[int] = []
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise ValueError("empty cycle type")
        for tok in tokens:
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"malformed cycle type token {tok!r}")
            j, mult = int(m.group(1)), int(m.group(2) or 1)
            if j < 1:
                raise ValueError(f"cycle length must be positive: {tok!r}")
            lengths.extend([j] * mult)
        total = sum(lengths)
        if n is not None:
            if total > n:
                raise ValueError(f"cycle type {text!r} does not fit in S_{n}")
            if 1 in lengths and total != n:
                raise ValueError(f"cycle type {text!r} has explicit fixed points but sums to {total} != {n}")
            lengths.extend([1] * (n - total))
        return cls.from_lengths(lengths)

    @property
    def degree(self) -> int:
        return sum(j * m for j, m in self.counts)

    def multiplicity(self, j: int) -> int:
        return dict(self.counts).get(j, 0)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(j for j, m in self.counts for _ in range(m))

    @property
    def order(self) -> int:
        return math.lcm(*(j for j, _ in self.counts)) if self.counts else 1

    @property
    def centralizer_order(self) -> int:
        return math.prod(j**m * math.factorial(m) for j, m in self.counts)

    @property
    def class_size(self) -> int:
        return math.factorial(self.degree) // self.centralizer_order

    def symbol(self) -> str:
        """Canonical text form, e.g. ``"1^2 2"``."""
        return " ".join(str(j) if m == 1 else f"{j}^{m}" for j, m in self.counts)

    def __str__(self) -> str:
        return self.symbol()


def cycle_type(p: Permutation) -> CycleType:
    return CycleType.from_lengths(len(c) for c in p.cycles(include_fixed=True))


def order(p: Permutation) -> int:
    return cycle_type(p).order


def canonical_representative(t: CycleType) -> Permutation:
    """Consecutive cycles, longest first: type 2^2 3 in S_7 gives (1 2 3)(4 5)(6 7)."""
    cycles = []
    nxt = 1
    for j in sorted(t.lengths, reverse=True):
        cycles.append(list(range(nxt, nxt + j)))
        nxt += j
    return Permutation.from_cycles(t.degree, [c for c in cycles if len(c) > 1])


def _class_members(n: int, lengths: Counter) -> Iterator[list[int]]:
    # Each permutation is produced once: every cycle starts at its smallest point.
    images = [-1] * n

    def rec(remaining: list[int]) -> Iterator[list[int]]:
        if not remaining:
            yield list(images)
            return
        start = remaining[0]
        rest = remaining[1:]
        for j in sorted(lengths):
            if lengths[j] == 0 or j - 1 > len(rest):
                continue
            lengths[j] -= 1
            for tail in itertools.permutations(rest, j - 1):
                cyc = (start,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    images[a] = b
                used = set(tail)
                yield from rec([x for x in rest if x not in used])
            lengths[j] += 1

    yield from rec(list(range(n)))


def enumerate_class(n: int, t: CycleType) -> list[Permutation]:
    """All permutations of the given type, sorted lexicographically by images."""
    if t.degree != n:
        raise ValueError(f"cycle type {t} has degree {t.degree}, expected {n}")
    members = [Permutation._make(tuple(img)) for img in _class_members(n, Counter(t.lengths))]
    members.sort()
    return members


@dataclass(frozen=True)
class CentralizerBlock:
    """One factor T_j = Γ_j ⋊ S_{m_j} of the centralizer of a permutation.

    ``cycles`` are the j-cycles of the permutation (fixed points when j = 1);
    ``cycle_generators`` generate Γ_j and ``permuting_generators`` move
    the cycles onto each other.
    """

    length: int
    cycles: tuple[tuple[int, ...], ...]
    cycle_generators: tuple[Permutation, ...]
    permuting_generators: tuple[Permutation, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.cycles)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.cycle_generators + self.permuting_generators

    @property
    def order(self) -> int:
        return self.length**self.multiplicity * math.factorial(self.multiplicity)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(a for c in self.cycles for a in c))

    @property
    def name(self) -> str:
        j, m = self.length, self.multiplicity
        if j == 1:
            return "1" if m == 1 else ("Z2" if m == 2 else f"S{m}")
        if m == 1:
            return f"Z{j}"
        if (j, m) == (2, 2):
            return "D4"
        return f"Z{j} wr S{m}"

    def subgroup(self) -> Subgroup:
        n = self.cycle_generators[0].degree if self.cycle_generators else (
            self.permuting_generators[0].degree if self.permuting_generators else 0)
        return Subgroup(n, self.generators, expected_order=self.order)


def _block_generators(n: int, j: int, cycles: list[tuple[int, ...]]) -> CentralizerBlock:
    cyc_gens = []
    if j > 1:
        cyc_gens = [Permutation.from_cycles(n, [c]) for c in cycles]
    perm_gens = []
    m = len(cycles)
    if m >= 2:
        # swap first two cycles pointwise, and shift all cycles one step
        swap = Permutation.from_cycles(
            n, [(a, b) for a, b in zip(cycles[0], cycles[1])])
        perm_gens.append(swap)
        if m >= 3:
            img = list(range(n))
            for k in range(m):
                src, dst = cycles[k], cycles[(k + 1) % m]
                for a, b in zip(src, dst):
                    img[a - 1] = b - 1
            perm_gens.append(Permutation(tuple(img)))
    return CentralizerBlock(j, tuple(cycles), tuple(cyc_gens), tuple(perm_gens))


class Subgroup:
    """A subgroup of S_n given by generators, with lazily enumerated elements."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        *,
        blocks: Sequence[CentralizerBlock] | None = None,
        elements: Iterable[Permutation] | None = None,
        expected_order: int | None = None,
        base_point: Permutation | None = None,
    ) -> None:
        self.degree = degree
        self.base_point = base_point
        self.generators = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise DegreeMismatch("generator degree differs from subgroup degree")
        self.blocks = tuple(blocks) if blocks is not None else None
        self._given = tuple(sorted(elements)) if elements is not None else None
        self._expected_order = expected_order

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        if self._given is not None:
            return self._given
        e = Permutation.identity(self.degree)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for g in frontier:
                for x in self.generators:
                    h = g * x
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        if self._given is None and self._expected_order is not None:
            return self._expected_order
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash((self.degree, self.element_set))

    @property
    def nontrivial_blocks(self) -> tuple[CentralizerBlock, ...]:
        return tuple(b for b in (self.blocks or ()) if not b.is_trivial)

    @property
    def structure(self) -> str:
        """Structure tag: cyclic, product-of-cyclics, dihedral-4, wreath, or generic."""
        blocks = self.nontrivial_blocks
        if self.blocks is None:
            return "generic"
        if not blocks:
            return "trivial"
        if len(blocks) == 1 and blocks[0].multiplicity == 1:
            return "cyclic"
        if len(blocks) == 1 and (blocks[0].length, blocks[0].multiplicity) == (2, 2):
            return "dihedral-4"
        if all(b.multiplicity == 1 or (b.length == 1 and b.multiplicity == 2) for b in blocks):
            return "product-of-cyclics"
        return "wreath"

    @property
    def name(self) -> str:
        if self.blocks is None:
            return f"<{len(self.generators)} generators>"
        blocks = self.nontrivial_blocks
        if not blocks:
            return "1"
        return "+".join(b.name for b in blocks)

    def __repr__(self) -> str:
        return f"Subgroup(S_{self.degree}, order={self.order}, {self.name})"


@lru_cache(maxsize=512)
def centralizer(n: int, p: Permutation) -> Subgroup:
    """Centralizer of p in S_n, with its decomposition into blocks T_j.

    Blocks are listed by decreasing cycle length, fixed points last.  For
    n up to BRUTE_FORCE_MAX_DEGREE the elements are found by filtering
    S_n; above that they are generated from the block generators.
    """
    if p.degree != n:
        raise DegreeMismatch(f"permutation of degree {p.degree} in S_{n}")
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in p.cycles(include_fixed=True):
        by_len.setdefault(len(c), []).append(c)
    blocks = [_block_generators(n, j, by_len[j]) for j in sorted(by_len, reverse=True)]
    gens = [g for b in blocks for g in b.generators]
    t = cycle_type(p)
    elements = None
    if n <= BRUTE_FORCE_MAX_DEGREE:
        elements = [
            q for q in (Permutation._make(img) for img in itertools.permutations(range(n)))
            if compose(q, p) == compose(p, q)
        ]
    return Subgroup(n, gens, blocks=blocks, elements=elements,
                    expected_order=t.centralizer_order, base_point=p)


def conjugator(s: Permutation, t: Permutation) -> Permutation:
    """Some g with g ▷ s = t, matching cycles of equal length in canonical order."""
    _check_degrees(s, t)
    cs = sorted(s.cycles(include_fixed=True), key=lambda c: (len(c), c))
    ct = sorted(t.cycles(include_fixed=True), key=lambda c: (len(c), c))
    if [len(c) for c in cs] != [len(c) for c in ct]:
        raise ValueError(f"{s} and {t} are not conjugate")
    img = [0] * s.degree
    for a, b in zip(cs, ct):
        for x, y in zip(a, b):
            img[x - 1] = y - 1
    return Permutation(tuple(img))


@dataclass(frozen=True)
class CosetSection:
    """Numeration t_1 = s, ..., t_M of a class with g_i ▷ s = t_i and g_1 = e."""

    base_point: Permutation
    class_list: tuple[Permutation, ...]
    reps: tuple[Permutation, ...]
    _index: dict[Permutation, int] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if len(self.class_list) != len(self.reps):
            raise ValueError("class list and representatives differ in length")
        if not self.class_list or self.class_list[0] != self.base_point:
            raise ValueError("t_1 must be the base point")
        if not self.reps[0].is_identity():
            raise ValueError("g_1 must be the identity")
        for g, t in zip(self.reps, self.class_list):
            if conjugate(g, self.base_point) != t:
                raise ValueError(f"{g} does not conjugate {self.base_point} to {t}")
        index = {t: i for i, t in enumerate(self.class_list)}
        if len(index) != len(self.class_list):
            raise ValueError("repeated class element")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_reps(cls, s: Permutation, reps: Sequence[Permutation]) -> CosetSection:
        """Section from chosen representatives; t_i is taken to be g_i ▷ s."""
        return cls(s, tuple(conjugate(g, s) for g in reps), tuple(reps))

    @property
    def size(self) -> int:
        return len(self.class_list)

    def index(self, t: Permutation) -> int:
        return self._index[t]

    def __contains__(self, t: Permutation) -> bool:
        return t in self._index


def coset_section(class_list: Sequence[Permutation], s: Permutation) -> CosetSection:
    """Canonical section: t_1 = s, then the class in the given order.

    Each g_i is the lexicographically first permutation with g_i ▷ s = t_i
    (for degree above BRUTE_FORCE_MAX_DEGREE, a cycle-matching conjugator).
    """
    if s not in class_list:
        raise ValueError(f"{s} is not in the class")
    ordered = [s] + [t for t in class_list if t != s]
    n = s.degree
    if n <= BRUTE_FORCE_MAX_DEGREE:
        wanted = set(ordered)
        found: dict[Permutation, Permutation] = {}
        for img in itertools.permutations(range(n)):
            g = Permutation._make(img)
            t = conjugate(g, s)
            if t in wanted and t not in found:
                found[t] = g
                if len(found) == len(wanted):
                    break
        if len(found) != len(wanted):
            raise ValueError("class list contains elements not conjugate to s")
        reps = [found[t] for t in ordered]
    else:
        reps = [Permutation.identity(n)] + [conjugator(s, t) for t in ordered[1:]]
    return CosetSection(s, tuple(ordered), tuple(reps))


def reversal_involution(p: Permutation) -> Permutation:
    """σ with σ p σ⁻¹ = p⁻¹, built cycle by cycle.

    On a cycle (c_1 ... c_j) with j = 2k or 2k + 1, σ swaps c_i and c_{j-i}
    for 1 <= i < j/2, i.e. it is (c_1 c_{j-1})(c_2 c_{j-2})..., leaving c_j
    (and c_k when j is even) fixed.
    """
    n = p.degree
    transpositions = []
    for cyc in p.cycles():
        j = len(cyc)
        for i in range(1, (j + 1) // 2):
            if i != j - i:
                transpositions.append((cyc[i - 1], cyc[j - i - 1]))
    sigma = Permutation.from_cycles(n, transpositions)
    if conjugate(sigma, p) != p.inverse():
        raise AssertionError(f"reversal construction failed for {p}")
    return sigma


def concat(pi: Permutation, tau: Permutation) -> Permutation:
    """π#τ in S_{n+p}: π on 1..n, τ shifted onto n+1..n+p."""
    n = pi.degree
    return Permutation._make(pi.images + tuple(i + n for i in tau.images))


def is_orthogonal(pi: Permutation, tau: Permutation) -> bool:
    """No cycle length (fixed points included) occurs in both π and τ."""
    a = {j for j, _ in cycle_type(pi).counts}
    b = {j for j, _ in cycle_type(tau).counts}
    return not (a & b)

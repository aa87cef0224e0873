"""Decision pipeline for dim B(O_π, ρ) over S_n with an auditable trace.

Rules, tried in this order for a pair (class, ρ):

``trivial-braiding``
    s acts trivially on V (q_ss = 1), so g_1 v spans a line with the flip
    braiding and the Nichols algebra contains a polynomial ring.
``registry``
    exact lookup of the finite cases printed in the S3 and S4 tables.
``real-class`` / ``odd-order``
    when s ≠ s⁻¹, the reversal involution σ gives a rank-2 diagonal
    subspace with q-matrix [[q, q⁻¹], [q⁻¹, q]]; it is of finite Cartan
    type only for q = -1 (named ``odd-order`` when s has odd order).
``degree-bound``
    deg ρ > 2 forces q_ss = -1, deg ρ = 2 forces q_ss in {-1, ω₃, ω₃²}.
``two-transpositions``
    types (1^a, 2^2, odd cycles) are infinite for every ρ; the base case
    n = 4 is settled by the diagonal analysis below.
``reduction``
    orthogonal splits π#τ with coprime orders and τ of odd order transfer
    infiniteness from π to π#τ.
``diagonal-cartan``
    diagonalize the braiding on the span of the blocks of pairwise
    commuting class elements (the whole class when it is abelian, the
    generators of ⟨s⟩ otherwise) and test the Cartan matrix.

Anything else is ``unknown``: no implemented criterion applies.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from .cyclo import ONE, Cyclotomic, root_of_unity, to_text
from .cyclo import parse as parse_cyclo
from .diagonal import DiagonalBraiding, GCM, cartan_exponents, is_finite_type, verdict_from_diagonal
from .permcore import (
    CycleType,
    Permutation,
    canonical_representative,
    centralizer,
    compose,
    conjugate,
    enumerate_class,
    reversal_involution,
)
from .reps import LabelError, Representation, block_labels, q_ss, resolve_label
from .ydmod import YDModule, build_module, cyclic_power_blocks, diagonalize_blocks, rank2_real_subspace

__all__ = [
    "INFINITE",
    "KNOWN_FINITE",
    "UNKNOWN",
    "INFINITE_FOR_ALL",
    "RULES",
    "RULE_TAGS",
    "ReasonStep",
    "Verdict",
    "OrbitVerdict",
    "Decomposition",
    "RegistryEntry",
    "REGISTRY",
    "pair_verdict",
    "orbit_verdict",
    "reduction_decompose",
    "known_finite_registry",
    "all_rule_outcomes",
    "check_trace",
    "parse_type",
    "orbit_symbol",
    "source_tag",
    "MODULE_CLASS_LIMIT",
    "clear_caches",
]

INFINITE = "infinite"
KNOWN_FINITE = "known-finite"
UNKNOWN = "unknown"
INFINITE_FOR_ALL = "infinite-for-all-rho"

RULES = (
    "trivial-braiding",
    "registry",
    "real-class",
    "odd-order",
    "degree-bound",
    "two-transpositions",
    "reduction",
    "diagonal-cartan",
)

RULE_TAGS = {
    "trivial-braiding": "trivial braiding",
    "real-class": "real class",
    "odd-order": "odd order",
    "degree-bound": "degree bound",
    "two-transpositions": "two transpositions",
    "reduction": "reduction",
    "diagonal-cartan": "diagonal type",
}

# classes larger than this are not turned into explicit modules
MODULE_CLASS_LIMIT = 2000


@dataclass(frozen=True)
class ReasonStep:
    rule: str
    applies: bool
    conclusion: str | None = None
    note: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "rule": self.rule,
            "applies": self.applies,
            "conclusion": self.conclusion,
            "note": self.note,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class Verdict:
    outcome: str
    trace: tuple[ReasonStep, ...]
    n: int
    cycle_type: CycleType
    label: str | None
    dim: int | None = None
    source: str | None = None

    @property
    def deciding_step(self) -> ReasonStep | None:
        for step in self.trace:
            if step.conclusion is not None:
                return step
        return None

    @property
    def rule(self) -> str | None:
        step = self.deciding_step
        return step.rule if step else None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": "pair",
            "n": self.n,
            "type": self.cycle_type.symbol(),
            "rep": self.label,
            "outcome": self.outcome,
        }
        if self.outcome == KNOWN_FINITE:
            out["dim"] = self.dim
            out["source"] = self.source
        out["trace"] = [s.to_json() for s in self.trace]
        return out


@dataclass(frozen=True)
class OrbitVerdict:
    outcome: str
    trace: tuple[ReasonStep, ...]
    n: int
    cycle_type: CycleType

    @property
    def deciding_step(self) -> ReasonStep | None:
        for step in self.trace:
            if step.conclusion is not None:
                return step
        return None

    @property
    def rule(self) -> str | None:
        step = self.deciding_step
        return step.rule if step else None

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "orbit",
            "n": self.n,
            "type": self.cycle_type.symbol(),
            "outcome": self.outcome,
            "trace": [s.to_json() for s in self.trace],
        }


# -- helpers --------------------------------------------------------------

def parse_type(n: int, t: CycleType | str) -> CycleType:
    ct = t if isinstance(t, CycleType) else CycleType.parse(t, n)
    if ct.degree != n:
        raise ValueError(f"cycle type {ct} is not a type of S_{n}")
    return ct


def orbit_symbol(t: CycleType) -> str:
    """``e`` for the identity, else O_j or O_{j,k,...} over the nontrivial lengths."""
    lengths = sorted((j for j in t.lengths if j > 1), reverse=True)
    if not lengths:
        return "e"
    if len(lengths) == 1:
        return f"O_{lengths[0]}"
    return "O_{" + ",".join(map(str, lengths)) + "}"


def _sub_type(t: CycleType, lengths: Sequence[int]) -> CycleType:
    keep = set(lengths)
    return CycleType(tuple((j, m) for j, m in t.counts if j in keep))


def _qmatrix_json(d: DiagonalBraiding) -> list[list[str]]:
    return d.to_json()


def _gcm_json(a: GCM) -> list[list[int]]:
    return [list(r) for r in a.a]


def _components_json(d_verdict) -> list[dict[str, Any]]:
    if d_verdict.type_verdict is None:
        return []
    return [
        {"vertices": [v + 1 for v in c.vertices], "kind": c.kind, "name": c.name}
        for c in d_verdict.type_verdict.components
    ]


def _is_two_transposition_type(t: CycleType) -> bool:
    return t.multiplicity(2) == 2 and all(j == 1 or j == 2 or j % 2 == 1 for j, _ in t.counts)


def source_tag(source: str) -> str:
    """Bracketed citation tag, e.g. ``AG2 6.12`` -> ``[AG2, 6.12]``."""
    parts = source.split()
    return "[" + ", ".join(parts) + "]"


# -- decompositions -------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    pi_part: CycleType
    tau_part: CycleType

    def to_json(self) -> dict[str, str]:
        return {"pi_part": self.pi_part.symbol(), "tau_part": self.tau_part.symbol()}


def reduction_decompose(t: CycleType) -> list[Decomposition]:
    """Splits of the cycle lengths into π and τ parts with τ of odd order.

    The parts share no cycle length (fixed points included), so π ⊥ τ,
    and their orders are coprime.  τ ranges over nonempty sets of odd
    lengths, smallest sets first; π must be nonempty too.
    """
    lengths = [j for j, _ in t.counts]
    odd = [j for j in lengths if j % 2 == 1]
    out = []
    for size in range(1, len(odd) + 1):
        for tau_lengths in itertools.combinations(odd, size):
            pi_lengths = [j for j in lengths if j not in tau_lengths]
            if not pi_lengths:
                continue
            if math.gcd(math.lcm(*pi_lengths), math.lcm(*tau_lengths)) != 1:
                continue
            out.append(Decomposition(_sub_type(t, pi_lengths), _sub_type(t, tau_lengths)))
    return out


# -- registry -------------------------------------------------------------

@dataclass(frozen=True)
class RegistryEntry:
    n: int
    type: str
    label: str
    dim: int
    source: str


REGISTRY: tuple[RegistryEntry, ...] = (
    RegistryEntry(3, "2", "sgn", 12, "ms"),
    RegistryEntry(4, "4", "chi4^2", 576, "AG2 6.12"),
    RegistryEntry(4, "2", "sgn*eps", 576, "FK"),
    RegistryEntry(4, "2", "sgn*sgn", 576, "ms"),
)


def known_finite_registry(n: int, t: CycleType | str, rho: Representation | str) -> RegistryEntry | None:
    """Exact lookup: same n, same type and the same representation matrices."""
    ct = parse_type(n, t)
    s = canonical_representative(ct)
    rep = resolve_label(rho, s) if isinstance(rho, str) else rho
    for entry in REGISTRY:
        if entry.n != n or CycleType.parse(entry.type, n) != ct:
            continue
        if resolve_label(entry.label, s).same_as(rep):
            return entry
    return None


# -- pair context ---------------------------------------------------------

@dataclass
class _Pair:
    n: int
    t: CycleType
    s: Permutation
    rho: Representation
    label: str | None
    q: Cyclotomic

    @property
    def block_factors(self) -> list[tuple[int, str]] | None:
        """(cycle length, label) per nontrivial centralizer block, when ρ is a labelled product."""
        if self.label is None:
            return None
        blocks = centralizer(self.n, self.s).nontrivial_blocks
        factors = block_labels(self.label)
        if len(factors) == len(blocks):
            return [(b.length, f) for b, f in zip(blocks, factors)]
        if len(factors) == 1 and factors[0] in ("eps", "sgn"):
            return [(b.length, factors[0]) for b in blocks]
        return None


def _make_pair(n: int, t: CycleType | str, rho: Representation | str) -> _Pair:
    ct = parse_type(n, t)
    s = canonical_representative(ct)
    if isinstance(rho, str):
        rep = resolve_label(rho, s)
        label: str | None = rho
    else:
        if rho.group != centralizer(n, s):
            raise LabelError(f"representation is not defined on the centralizer of {s}")
        rep, label = rho, rho.label
    return _Pair(n, ct, s, rep, label, q_ss(s, rep))


@lru_cache(maxsize=256)
def _module(n: int, t: CycleType, label: str) -> YDModule:
    s = canonical_representative(t)
    return build_module(enumerate_class(n, t), s, resolve_label(label, s))


def _module_for(p: _Pair) -> YDModule:
    if p.label is not None:
        return _module(p.n, p.t, p.label)
    return build_module(enumerate_class(p.n, p.t), p.s, p.rho)


# -- pair rules -----------------------------------------------------------

def _rule_trivial(p: _Pair) -> ReasonStep:
    if p.q == ONE:
        return ReasonStep("trivial-braiding", True, INFINITE,
                          "s acts trivially on V, so c(g_1 v ⊗ g_1 v) = g_1 v ⊗ g_1 v",
                          {"q_ss": "1"})
    return ReasonStep("trivial-braiding", False, note=f"q_ss = {to_text(p.q)}")


def _rule_registry(p: _Pair) -> ReasonStep:
    entry = known_finite_registry(p.n, p.t, p.rho)
    if entry is None:
        return ReasonStep("registry", False, note="not a tabulated finite case")
    return ReasonStep("registry", True, KNOWN_FINITE, f"tabulated: dimension {entry.dim}",
                      {"dim": entry.dim, "source": entry.source, "label": entry.label})


def _real_qmatrix(q: Cyclotomic) -> DiagonalBraiding:
    qi = q.inverse()
    return DiagonalBraiding(((q, qi), (qi, q)))


def _rule_real(p: _Pair) -> ReasonStep:
    if p.s.inverse() == p.s:
        return ReasonStep("real-class", False, note="s is an involution")
    rule = "odd-order" if p.t.order % 2 else "real-class"
    sigma = reversal_involution(p.s)
    d = _real_qmatrix(p.q)
    dv = verdict_from_diagonal(d)
    witness = {"sigma": str(sigma), "q_matrix": _qmatrix_json(d)}
    if dv.gcm is not None:
        witness["gcm"] = _gcm_json(dv.gcm)
        witness["components"] = _components_json(dv)
    if dv.outcome == INFINITE:
        return ReasonStep(rule, True, INFINITE,
                          f"span{{g_1 v, σ·g_1 v}} with σ = {sigma}: {dv.reason}", witness)
    return ReasonStep(rule, True, None, f"q_ss = -1, the rank-2 subspace is of type A1 x A1", witness)


def _rule_degree(p: _Pair) -> ReasonStep:
    deg = p.rho.dim
    w3 = root_of_unity(3)
    if deg > 2 and p.q != -1:
        return ReasonStep("degree-bound", True, INFINITE, f"deg ρ = {deg} > 2 needs q_ss = -1",
                          {"deg": deg, "q_ss": to_text(p.q)})
    if deg == 2 and p.q not in (Cyclotomic(-1), w3, w3 * w3):
        return ReasonStep("degree-bound", True, INFINITE, "deg ρ = 2 needs q_ss in {-1, ω₃, ω₃²}",
                          {"deg": deg, "q_ss": to_text(p.q)})
    if deg == 2 and p.q != -1:
        return ReasonStep("degree-bound", True, None,
                          "deg ρ = 2 with q_ss a primitive cube root: constraint met, no conclusion",
                          {"deg": deg, "q_ss": to_text(p.q)})
    return ReasonStep("degree-bound", False, note=f"deg ρ = {deg}, q_ss = {to_text(p.q)}")


def _rule_two_transpositions(p: _Pair) -> ReasonStep:
    if not _is_two_transposition_type(p.t):
        return ReasonStep("two-transpositions", False, note="type is not (1^a, 2^2, odd cycles)")
    base = CycleType(((2, 2),))
    if p.t == base:
        return ReasonStep("two-transpositions", True, None,
                          "base case n = 4: settled by the diagonal analysis of the class of (1 2)(3 4)",
                          {"pi_part": "2^2"})
    tau = _sub_type(p.t, [j for j, _ in p.t.counts if j != 2])
    return ReasonStep("two-transpositions", True, INFINITE,
                      "reduces to the class of two transpositions in S_4, infinite for every ρ",
                      {"pi_part": "2^2", "tau_part": tau.symbol()})


def _split_label(p: _Pair, d: Decomposition) -> str | None:
    factors = p.block_factors
    if factors is None:
        return None
    keep = {j for j, _ in d.pi_part.counts}
    chosen = [f for j, f in factors if j in keep]
    return "*".join(chosen) if chosen else "eps"


def _rule_reduction(p: _Pair) -> ReasonStep:
    splits = reduction_decompose(p.t)
    if not splits:
        return ReasonStep("reduction", False, note="no orthogonal split with τ of odd order")
    for d in splits:
        m = d.pi_part.degree
        ov = orbit_verdict(m, d.pi_part)
        if ov.outcome == INFINITE_FOR_ALL:
            return ReasonStep("reduction", True, INFINITE,
                              f"O_π infinite for every ρ with π of type {d.pi_part} in S_{m}",
                              {**d.to_json(), "via": "orbit", "sub_rule": ov.rule})
        sub_label = _split_label(p, d)
        if sub_label is None:
            continue
        try:
            sv = pair_verdict(m, d.pi_part, sub_label)
        except LabelError:
            continue
        if sv.outcome == INFINITE:
            return ReasonStep("reduction", True, INFINITE,
                              f"(O_π, {sub_label}) is infinite with π of type {d.pi_part} in S_{m}",
                              {**d.to_json(), "via": "pair", "sub_label": sub_label, "sub_rule": sv.rule})
    return ReasonStep("reduction", True, None,
                      "no split has an infinite π part",
                      {"splits": [d.to_json() for d in splits]})


def _class_is_abelian(cls: Sequence[Permutation]) -> bool:
    return all(compose(x, y) == compose(y, x) for x, y in itertools.combinations(cls, 2))


def _rule_diagonal(p: _Pair) -> ReasonStep:
    if p.t.class_size > MODULE_CLASS_LIMIT:
        return ReasonStep("diagonal-cartan", False,
                          note=f"class of size {p.t.class_size} is too large to build")
    m = _module_for(p)
    if _class_is_abelian(m.section.class_list):
        blocks, where = list(range(m.rank)), "whole module (abelian class)"
    else:
        blocks, where = cyclic_power_blocks(m), "blocks of the generators of ⟨s⟩"
    d = diagonalize_blocks(m, blocks)
    dv = verdict_from_diagonal(d)
    witness: dict[str, Any] = {
        "subspace": where,
        "blocks": [str(m.section.class_list[i]) for i in blocks],
        "q_matrix": _qmatrix_json(d),
    }
    if dv.gcm is not None:
        witness["gcm"] = _gcm_json(dv.gcm)
        witness["components"] = _components_json(dv)
    if dv.outcome == INFINITE:
        return ReasonStep("diagonal-cartan", True, INFINITE, dv.reason, witness)
    return ReasonStep("diagonal-cartan", True, None, dv.reason, witness)


_PAIR_RULES = (
    _rule_trivial,
    _rule_registry,
    _rule_real,
    _rule_degree,
    _rule_two_transpositions,
    _rule_reduction,
    _rule_diagonal,
)


def _verdict_from_steps(p: _Pair, steps: list[ReasonStep]) -> Verdict:
    for step in steps:
        if step.conclusion == KNOWN_FINITE:
            return Verdict(KNOWN_FINITE, tuple(steps), p.n, p.t, p.label,
                           step.witness["dim"], step.witness["source"])
        if step.conclusion == INFINITE:
            return Verdict(INFINITE, tuple(steps), p.n, p.t, p.label)
    return Verdict(UNKNOWN, tuple(steps), p.n, p.t, p.label)


def _run_pair(p: _Pair) -> Verdict:
    steps = []
    for rule in _PAIR_RULES:
        step = rule(p)
        steps.append(step)
        if step.conclusion is not None:
            break
    return _verdict_from_steps(p, steps)


@lru_cache(maxsize=1024)
def _pair_by_label(n: int, t: CycleType, label: str) -> Verdict:
    return _run_pair(_make_pair(n, t, label))


def pair_verdict(n: int, t: CycleType | str, rho: Representation | str) -> Verdict:
    """Verdict for M(O_t, ρ) in S_n: first concluding rule wins, all tried rules traced."""
    ct = parse_type(n, t)
    if isinstance(rho, str):
        return _pair_by_label(n, ct, rho)
    return _run_pair(_make_pair(n, ct, rho))


def all_rule_outcomes(n: int, t: CycleType | str, rho: Representation | str) -> dict[str, ReasonStep]:
    """Every pair rule evaluated independently (no early exit), keyed by rule id."""
    p = _make_pair(n, t, rho)
    return {step.rule: step for step in (rule(p) for rule in _PAIR_RULES)}


# -- orbit verdicts -----------------------------------------------------

_D4_LABELS = ("d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)", "d4:rho2")


@lru_cache(maxsize=512)
def _orbit(n: int, t: CycleType) -> OrbitVerdict:
    steps: list[ReasonStep] = []

    def done(step: ReasonStep) -> OrbitVerdict:
        steps.append(step)
        return OrbitVerdict(INFINITE_FOR_ALL, tuple(steps), n, t)

    if all(j == 1 for j, _ in t.counts):
        return done(ReasonStep("trivial-braiding", True, INFINITE_FOR_ALL,
                               "the trivial class: e acts trivially on every V", {}))
    steps.append(ReasonStep("trivial-braiding", False, note="class is not trivial"))

    if t.order % 2:
        s = canonical_representative(t)
        sigma = reversal_involution(s)
        return done(ReasonStep(
            "odd-order", True, INFINITE_FOR_ALL,
            f"ord = {t.order} is odd, so q_ss ≠ -1 for every ρ; σ = {sigma} reverses s",
            {"sigma": str(sigma), "order": t.order}))
    steps.append(ReasonStep("odd-order", False, note=f"ord = {t.order} is even"))

    if _is_two_transposition_type(t):
        base = CycleType(((2, 2),))
        tau = [j for j, _ in t.counts if j != 2]
        cases = []
        for label in _D4_LABELS:
            v = pair_verdict(4, base, label)
            cases.append({"label": label, "outcome": v.outcome, "rule": v.rule})
        if all(c["outcome"] == INFINITE for c in cases):
            witness: dict[str, Any] = {"pi_part": "2^2", "base_cases": cases}
            if tau:
                witness["tau_part"] = _sub_type(t, tau).symbol()
            return done(ReasonStep("two-transpositions", True, INFINITE_FOR_ALL,
                                   "every irreducible of D4 gives an infinite Nichols algebra on O_{2,2}",
                                   witness))
        steps.append(ReasonStep("two-transpositions", True, None, "base cases not all infinite",
                                {"base_cases": cases}))
    else:
        steps.append(ReasonStep("two-transpositions", False, note="type is not (1^a, 2^2, odd cycles)"))

    splits = reduction_decompose(t)
    for d in splits:
        ov = _orbit(d.pi_part.degree, d.pi_part)
        if ov.outcome == INFINITE_FOR_ALL:
            return done(ReasonStep("reduction", True, INFINITE_FOR_ALL,
                                   f"π of type {d.pi_part} is infinite for every ρ",
                                   {**d.to_json(), "sub_rule": ov.rule}))
    steps.append(ReasonStep("reduction", bool(splits), None,
                            "no split has a π part infinite for every ρ",
                            {"splits": [d.to_json() for d in splits]}))
    return OrbitVerdict(UNKNOWN, tuple(steps), n, t)


def orbit_verdict(n: int, t: CycleType | str) -> OrbitVerdict:
    """InfiniteForAllRho when an implemented criterion covers every ρ, else Unknown."""
    return _orbit(n, parse_type(n, t))


def clear_caches() -> None:
    """Forget memoized modules and verdicts (for cold timings)."""
    for f in (_module, _pair_by_label, _orbit):
        f.cache_clear()


# -- trace checking -------------------------------------------------------

def _parse_qmatrix(rows: list[list[str]]) -> DiagonalBraiding:
    return DiagonalBraiding(tuple(tuple(parse_cyclo(x) for x in r) for r in rows))


def _check_step(step: ReasonStep, n: int, t: CycleType, label: str | None) -> list[str]:
    problems: list[str] = []
    s = canonical_representative(t)
    w = step.witness
    if step.rule in ("real-class", "odd-order") and "sigma" in w:
        sigma = Permutation.parse(w["sigma"], n)
        if conjugate(sigma, s) != s.inverse() or s.inverse() == s:
            problems.append(f"{step.rule}: σ does not reverse s")
        if "q_matrix" in w:
            d = _parse_qmatrix(w["q_matrix"])
            if verdict_from_diagonal(d).outcome != INFINITE:
                problems.append(f"{step.rule}: q-matrix does not give an infinite verdict")
            if label is not None and t.class_size <= MODULE_CLASS_LIMIT:
                sub = rank2_real_subspace(_module(n, t, label), sigma).as_diagonal()
                if sub != d:
                    problems.append(f"{step.rule}: subspace re-extraction disagrees")
        elif t.order % 2 == 0:
            problems.append("odd-order: even order")
    elif step.rule == "diagonal-cartan":
        d = _parse_qmatrix(w["q_matrix"])
        a = cartan_exponents(d)
        if _gcm_json(a) != w.get("gcm"):
            problems.append("diagonal-cartan: GCM does not match the q-matrix")
        if is_finite_type(a).finite:
            problems.append("diagonal-cartan: GCM is of finite type")
        if label is not None:
            m = _module(n, t, label)
            blocks = [m.section.index(Permutation.parse(x, n)) for x in w["blocks"]]
            if diagonalize_blocks(m, blocks) != d:
                problems.append("diagonal-cartan: re-diagonalization disagrees")
    elif step.rule == "two-transpositions":
        if not _is_two_transposition_type(t):
            problems.append("two-transpositions: type does not match")
        if any(v.outcome != INFINITE
               for v in (pair_verdict(4, "2^2", lab) for lab in _D4_LABELS)):
            problems.append("two-transpositions: base case not infinite")
    elif step.rule == "reduction":
        pi = CycleType.parse(w["pi_part"])
        tau = CycleType.parse(w["tau_part"])
        if sorted(pi.lengths + tau.lengths) != sorted(t.lengths):
            problems.append("reduction: parts do not recombine to the type")
        if math.gcd(pi.order, tau.order) != 1 or tau.order % 2 == 0:
            problems.append("reduction: orders not coprime or τ of even order")
        if {j for j, _ in pi.counts} & {j for j, _ in tau.counts}:
            problems.append("reduction: parts are not orthogonal")
        if w.get("via") == "pair":
            sub = pair_verdict(pi.degree, pi, w["sub_label"])
            if sub.outcome != INFINITE:
                problems.append("reduction: π part is not infinite")
            problems.extend(check_trace(sub))
        elif orbit_verdict(pi.degree, pi).outcome != INFINITE_FOR_ALL:
            problems.append("reduction: π orbit is not infinite for every ρ")
    elif step.rule == "registry":
        if label is not None and known_finite_registry(n, t, label) is None:
            problems.append("registry: entry not found")
    elif step.rule == "trivial-braiding":
        if label is not None and q_ss(s, resolve_label(label, s)) != ONE:
            problems.append("trivial-braiding: q_ss ≠ 1")
        if label is None and any(j != 1 for j, _ in t.counts):
            problems.append("trivial-braiding: class is not trivial")
    return problems


def check_trace(v: Verdict | OrbitVerdict) -> list[str]:
    """Re-verify the witness of the deciding step; returns a list of problems."""
    step = v.deciding_step
    if step is None:
        return [] if v.outcome == UNKNOWN else ["no deciding step"]
    label = v.label if isinstance(v, Verdict) else None
    return _check_step(step, v.n, v.cycle_type, label)

"""The eight acceptance criteria, each timed cold and reported as PASS/FAIL."""

from __future__ import annotations

import io
import itertools
import json
import random
import time
from collections import deque

import numpy as np

from nichols_sn.cli import run
from nichols_sn.criteria import (
    INFINITE_FOR_ALL,
    UNKNOWN,
    check_trace,
    clear_caches,
    orbit_verdict,
    pair_verdict,
)
from nichols_sn.cyclo import ONE, ZERO, Cyclotomic
from nichols_sn.diagonal import GCM, cartan_exponents, components, is_finite_type
from nichols_sn.nichols import hilbert_prefix
from nichols_sn.permcore import (
    CosetSection,
    CycleType,
    Permutation,
    canonical_representative,
    conjugate,
    cycle_type,
    enumerate_class,
    reversal_involution,
)
from nichols_sn.reps import registry_labels, resolve_label
from nichols_sn.ydmod import YDModule, build_module, diagonalize_abelian_class, restrict, verify_axioms


def module(n: int, t: str, label: str) -> YDModule:
    ct = CycleType.parse(t, n)
    s = canonical_representative(ct)
    return build_module(enumerate_class(n, ct), s, resolve_label(label, s))


def types_of(n: int) -> list[CycleType]:
    return sorted({cycle_type(Permutation(p)) for p in itertools.permutations(range(n))},
                  key=lambda t: t.counts)


def cli_table(which: str) -> list[dict]:
    out = io.StringIO()
    assert run(["table", which, "--format", "json"], out, io.StringIO()) == 0
    return json.loads(out.getvalue())["payload"]["rows"]


def test_small_table(acceptance):
    clear_caches()
    start = time.perf_counter()
    rows = cli_table("s3")
    elapsed = time.perf_counter() - start
    dims = [r["dim"] for r in rows]
    tags = [r["reference"] for r in rows]
    ok = (len(rows) == 4
          and dims == ["infinite", "infinite", "infinite", 12]
          and tags == ["trivial braiding", "odd order", "trivial braiding", "[ms]"]
          and elapsed < 1.0)
    acceptance(1, "table s3", ok, f"{len(rows)} rows, dims {dims}, {elapsed:.3f}s (limit 1s)")
    assert ok


def test_large_table(acceptance):
    clear_caches()
    start = time.perf_counter()
    rows = cli_table("s4")
    elapsed = time.perf_counter() - start
    dims = [r["dim"] for r in rows]
    tags = [r["reference"] for r in rows]
    ok = (len(rows) == 9
          and dims == ["infinite"] * 4 + [576] + ["infinite"] * 2 + [576, 576]
          and tags == ["trivial braiding", "two transpositions", "trivial braiding", "real class",
                       "[AG2, 6.12]", "odd order", "trivial braiding", "[FK]", "[ms]"]
          and elapsed < 5.0)
    acceptance(2, "table s4", ok, f"{len(rows)} rows, {dims.count('infinite')}x infinite, "
                                  f"{dims.count(576)}x 576, {elapsed:.3f}s (limit 5s)")
    assert ok


def test_two_transposition_computation(acceptance):
    start = time.perf_counter()
    d = diagonalize_abelian_class(module(4, "2^2", "d4:rho2"))
    a = cartan_exponents(d)
    comps = components(a)
    tv = is_finite_type(a)
    elapsed = time.perf_counter() - start
    cycle = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    ok = (d.rank == 6
          and all(d.q[i][i] == -1 for i in range(6))
          and len(comps) == 2 and sorted(map(len, comps)) == [3, 3]
          and all(a.sub(c).a == cycle for c in comps)
          and not tv.finite
          and all(c.kind == "affine" and c.name == "A2^(1)" for c in tv.components)
          and elapsed < 1.0)
    # with the section e, (1 2), (2 3) and eigenvectors (1, 1), (1, -1) per block,
    # the components carry the labels {1, 4, 6} and {2, 3, 5}
    base = Permutation.parse("(1 3)(2 4)", 4)
    reps = [Permutation.identity(4), Permutation.parse("(1 2)", 4), Permutation.parse("(2 3)", 4)]
    m = YDModule(CosetSection.from_reps(base, reps), resolve_label("d4:rho2", base))
    basis = []
    for j in range(3):
        for v in ((1, 1), (1, -1)):
            vec = [0] * 6
            vec[2 * j], vec[2 * j + 1] = v
            basis.append(vec)
    labelled = [tuple(v + 1 for v in c) for c in components(cartan_exponents(restrict(m, basis).as_diagonal()))]
    ok = ok and labelled == [(1, 4, 6), (2, 3, 5)]
    acceptance(3, "O_{2,2} diagonal analysis", ok,
               f"components {[tuple(v + 1 for v in c) for c in comps]} (module basis), "
               f"{labelled} (original basis), {[c.name for c in tv.components]}, {elapsed:.3f}s (limit 1s)")
    assert ok


def test_hilbert_series(acceptance):
    start = time.perf_counter()
    g = hilbert_prefix(module(3, "2", "sgn"), 5)
    elapsed = time.perf_counter() - start
    m = module(4, "4", "chi4^2")
    sparse = hilbert_prefix(m, 3, method="sparse")
    dense = hilbert_prefix(m, 3, method="dense")
    ok = (g.dims == (1, 3, 4, 3, 1, 0) and g.exhausted and g.total == 12 and elapsed < 10.0
          and sparse.dims == dense.dims)
    acceptance(4, "Hilbert series", ok,
               f"S3 sgn dims {g.dims}, total {g.total}, {elapsed:.3f}s (limit 10s); "
               f"O_4 chi4^2 sparse {sparse.dims} / dense {dense.dims}")
    assert ok


def test_orbit_sweep(acceptance):
    clear_caches()
    start = time.perf_counter()
    cases = []
    for n in range(3, 7):
        cases += [(n, t) for t in types_of(n) if t.order % 2 == 1]
    for n in range(4, 9):
        for t in types_of(n):
            if t.multiplicity(2) == 2 and all(k == 2 or k % 2 == 1 for k in t.lengths):
                cases.append((n, t))
    failures = []
    for n, t in cases:
        v = orbit_verdict(n, t)
        if v.outcome != INFINITE_FOR_ALL or check_trace(v):
            failures.append((n, t.symbol(), v.outcome))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30.0
    acceptance(5, "orbit sweep", ok, f"{len(cases)} orbits, {len(failures)} failures "
                                     f"{failures[:3]}, {elapsed:.3f}s (limit 30s)")
    assert ok


def _random_cyclotomic(rng: random.Random) -> Cyclotomic:
    n = rng.choice([1, 3, 4, 5, 7, 8, 9, 12, 15])
    terms = {rng.randrange(n): rng.randint(-4, 4) for _ in range(rng.randint(0, 3))}
    return Cyclotomic.from_exponents(n, terms)


def test_axiom_suite(acceptance):
    start = time.perf_counter()
    modules = 0
    bad_modules = []
    for n in (3, 4):
        for t in types_of(n):
            s = canonical_representative(t)
            for label in registry_labels(s):
                m = build_module(enumerate_class(n, t), s, resolve_label(label, s))
                report = verify_axioms(m, exhaustive_limit=12)
                modules += 1
                if not (report.ok and report.exhaustive):
                    bad_modules.append((n, t.symbol(), label, report.witness))
    rng = random.Random(20240601)
    bad_field = 0
    for _ in range(10_000):
        x, y, z = (_random_cyclotomic(rng) for _ in range(3))
        good = (x + y == y + x and x * y == y * x
                and (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
                and x * (y + z) == x * y + x * z
                and x + (-x) == ZERO and x * ONE == x
                and (not x or x * x.inverse() == ONE))
        bad_field += not good
    bad_sigma = 0
    for n in range(3, 7):
        for img in itertools.permutations(range(n)):
            p = Permutation(img)
            sigma = reversal_involution(p)
            bad_sigma += not (conjugate(sigma, p) == p.inverse() and (sigma * sigma).is_identity())
    elapsed = time.perf_counter() - start
    ok = not bad_modules and bad_field == 0 and bad_sigma == 0
    acceptance(6, "axiom suite", ok,
               f"{modules} modules ({len(bad_modules)} bad), 10000 field cases ({bad_field} bad), "
               f"reversal over S3-S6 ({bad_sigma} bad), {elapsed:.3f}s")
    assert ok


def _oracle_finite(a: np.ndarray) -> bool:
    """Positive definiteness of D A for a symmetrizing D found by walking the graph."""
    n = len(a)
    d = [0.0] * n
    for root in range(n):
        if d[root]:
            continue
        d[root] = 1.0
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if a[i][j] and not d[j]:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * a[i][j] / a[j][i]
                    queue.append(j)
    sym = np.diag(d) @ a
    if not np.allclose(sym, sym.T, atol=1e-9):
        return False
    return bool(np.linalg.eigvalsh(sym).min() > 1e-9)


def test_finite_type_oracle(acceptance):
    start = time.perf_counter()
    checked = 0
    disagreements = []
    for n in (1, 2, 3):
        pairs = list(itertools.combinations(range(n), 2))
        choices = [(0, 0)] + [(x, y) for x in range(-4, 0) for y in range(-4, 0)]
        for pick in itertools.product(choices, repeat=len(pairs)):
            rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
            for (i, j), (x, y) in zip(pairs, pick):
                rows[i][j], rows[j][i] = x, y
            a = GCM(tuple(map(tuple, rows)))
            mine = is_finite_type(a).finite
            theirs = _oracle_finite(np.array(rows, dtype=float))
            checked += 1
            if mine != theirs:
                disagreements.append(rows)
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 10.0
    acceptance(7, "finite-type oracle", ok, f"{checked} GCMs, {len(disagreements)} disagreements, "
                                            f"{elapsed:.3f}s (limit 10s)")
    assert ok


def test_open_cases_stay_unknown(acceptance):
    outcomes = {label: pair_verdict(6, "2", label).outcome for label in ("sgn*eps", "sgn*sgn")}
    ok = all(o == UNKNOWN for o in outcomes.values())
    acceptance(8, "S6 transpositions", ok, f"{outcomes}")
    assert ok

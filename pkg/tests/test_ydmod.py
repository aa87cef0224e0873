from __future__ import annotations

import pytest

from nichols_sn.cyclo import ONE, ZERO, root_of_unity
from nichols_sn.diagonal import cartan_exponents, components, is_finite_type
from nichols_sn.linalg import rank_dense
from nichols_sn.permcore import (
    CosetSection,
    CycleType,
    Permutation,
    cycle_type,
    enumerate_class,
    reversal_involution,
)
from nichols_sn.reps import outer_tensor, q_ss, resolve_label
from nichols_sn.ydmod import (
    BraidingOperator,
    NotClosed,
    NotDiagonalizable,
    YDModule,
    braiding,
    build_module,
    cyclic_power_blocks,
    diagonalize_abelian_class,
    product_embedding,
    rank2_real_subspace,
    restrict,
    verify_axioms,
)


def module(n: int, s: str, label: str) -> YDModule:
    p = Permutation.parse(s, n)
    return build_module(enumerate_class(n, cycle_type(p)), p, resolve_label(label, p))


def unit(dim: int, a: int) -> tuple:
    return tuple(ONE if i == a else ZERO for i in range(dim))


def test_dimensions():
    assert module(4, "(1 3)(2 4)", "d4:rho2").dim == 6
    assert module(3, "(1 2)", "sgn").dim == 3
    m = module(3, "e", "eps")
    assert m.dim == 1
    assert braiding(m).image(0, 0) == ((0, 0, ONE),)


def test_representation_must_live_on_the_centralizer():
    s = Permutation.parse("(1 2)", 3)
    other = resolve_label("chi3", Permutation.parse("(1 2 3)", 3))
    with pytest.raises(ValueError):
        build_module(enumerate_class(3, CycleType.parse("2", 3)), s, other)


def test_action_factors_through_the_section():
    m = module(4, "(1 3)(2 4)", "d4:rho2")
    sec = m.section
    for g in enumerate_class(4, CycleType.parse("2", 4)):
        for i in range(m.rank):
            j, gamma = m.factor(g, i)
            assert g * sec.reps[i] == sec.reps[j] * gamma
            assert gamma * m.base_point == m.base_point * gamma


def test_one_dimensional_d4_characters_braid_trivially_on_the_base_vector():
    for label in ("d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)"):
        m = module(4, "(1 3)(2 4)", label)
        assert braiding(m).image(0, 0) == ((0, 0, ONE),)


def test_diagonal_part_is_q_ss():
    m = module(4, "(1 2 3 4)", "chi4")
    c = braiding(m)
    assert c.image(0, 0) == ((0, 0, root_of_unity(4)),)


@pytest.mark.parametrize("n,s,label", [
    (3, "(1 2)", "sgn"),
    (4, "(1 3)(2 4)", "d4:rho2"),
    (4, "(1 2 3 4)", "chi4^2"),
    (4, "(1 2)", "sgn*eps"),
    (4, "(1 2 3)", "chi3"),
])
def test_axioms_hold(n, s, label):
    report = verify_axioms(module(n, s, label))
    assert report.ok and report.exhaustive, report.witness


def test_corrupted_action_table_is_caught():
    m = module(3, "(1 2)", "sgn")
    g = Permutation.parse("(1 2)", 3)
    j, mat = m.action_entry(g, 1)
    bad = m.with_override(g, 1, (j + 1) % m.rank, mat)
    report = verify_axioms(bad)
    assert not report.ok and not report.yd_compatible
    assert "delta" in report.witness


def test_corrupted_coefficient_breaks_the_braid_equation():
    m = module(3, "(1 2)", "sgn")
    t = m.section.class_list[0]
    j, mat = m.action_entry(t, 1)
    scaled = tuple(tuple(2 * x for x in row) for row in mat)
    report = verify_axioms(m.with_override(t, 1, j, scaled))
    assert report.yd_compatible and not report.braid_equation
    assert "braid equation" in report.witness


def test_sampled_braid_check_above_the_exhaustive_limit():
    report = verify_axioms(module(4, "(1 2 3)", "chi3"), exhaustive_limit=4, samples=200)
    assert report.ok and not report.exhaustive and report.triples_checked == 200


def test_braiding_is_invertible():
    for n, s, label in [(3, "(1 2)", "sgn"), (4, "(1 3)(2 4)", "d4:rho2")]:
        c = braiding(module(n, s, label))
        assert rank_dense(c.matrix()) == c.dim**2


def test_restrict_single_vector_and_not_closed():
    m = module(4, "(1 3)(2 4)", "d4:(1,-1)")
    op = restrict(m, [unit(m.dim, 0)])
    assert op.as_diagonal().q == ((ONE,),)
    s3 = module(3, "(1 2)", "sgn")
    # c(e1 ⊗ e2) lands in the block of (1 2) ▷ (1 3) = (2 3)
    with pytest.raises(NotClosed):
        restrict(s3, [unit(3, 0), unit(3, 1)])
    with pytest.raises(ValueError):
        restrict(s3, [unit(3, 0), unit(3, 0)])


def test_rank2_real_subspace():
    w3 = root_of_unity(3)
    m = module(3, "(1 2 3)", "chi3")
    d = rank2_real_subspace(m, reversal_involution(m.base_point)).as_diagonal()
    assert d.q == ((w3, w3 * w3), (w3 * w3, w3))
    m4 = module(4, "(1 2 3 4)", "chi4^2")
    d4 = rank2_real_subspace(m4, reversal_involution(m4.base_point)).as_diagonal()
    assert d4.q == ((-1, -1), (-1, -1))
    with pytest.raises(ValueError):
        rank2_real_subspace(module(3, "(1 2)", "sgn"), Permutation.identity(3))
    with pytest.raises(ValueError):
        rank2_real_subspace(m, Permutation.identity(3))


@pytest.mark.parametrize("n,s,label", [
    (3, "(1 2 3)", "chi3"), (4, "(1 2 3 4)", "chi4"), (5, "(1 2 3 4 5)", "chi5^2"),
    (6, "(1 2 3)(4 5 6)", "chi3"), (5, "(1 2 3)(4 5)", "chi3*sgn"),
])
def test_rank2_pattern_holds_generally(n, s, label):
    m = module(n, s, label)
    q = q_ss(m.base_point, m.rho)
    d = rank2_real_subspace(m, reversal_involution(m.base_point)).as_diagonal()
    assert d.q[0][0] == d.q[1][1] == q
    assert d.q[0][1] == d.q[1][0] == q.inverse()


def test_two_transposition_module_diagonalizes():
    m = module(4, "(1 2)(3 4)", "d4:rho2")
    d = diagonalize_abelian_class(m)
    assert d.rank == 6
    assert all(d.q[i][i] == -1 for i in range(6))
    a = cartan_exponents(d)
    comps = components(a)
    assert sorted(len(c) for c in comps) == [3, 3]
    tv = is_finite_type(a)
    assert not tv.finite
    assert [c.name for c in tv.components] == ["A2^(1)", "A2^(1)"]
    for comp in comps:
        assert a.sub(comp).a == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_two_transpositions_with_the_original_section_and_basis():
    a = Permutation.parse("(1 3)(2 4)", 4)
    reps = [Permutation.identity(4), Permutation.parse("(1 2)", 4), Permutation.parse("(2 3)", 4)]
    m = YDModule(CosetSection.from_reps(a, reps), resolve_label("d4:rho2", a))
    # w_{2j-1} = g_j ⊗ (1, 1), w_{2j} = g_j ⊗ (1, -1)
    basis = []
    for j in range(3):
        for v in ((1, 1), (1, -1)):
            vec = [0] * 6
            vec[2 * j], vec[2 * j + 1] = v
            basis.append(vec)
    d = restrict(m, basis).as_diagonal()
    assert d is not None
    assert all(d.q[i][i] == -1 for i in range(6))
    assert d.q[0][3] * d.q[3][0] == -1
    assert d.q[0][2] * d.q[2][0] == 1
    comps = components(cartan_exponents(d))
    assert [tuple(v + 1 for v in c) for c in comps] == [(1, 4, 6), (2, 3, 5)]


def test_restriction_agrees_with_diagonalization():
    m = module(4, "(1 2)(3 4)", "d4:rho2")
    d = diagonalize_abelian_class(m)
    assert restrict(m, d.basis).as_diagonal() == d


def test_non_abelian_class_is_refused():
    with pytest.raises(NotDiagonalizable):
        diagonalize_abelian_class(module(3, "(1 2)", "sgn"))


def test_cyclic_power_blocks():
    m = module(4, "(1 2 3 4)", "chi4")
    blocks = cyclic_power_blocks(m)
    assert [str(m.section.class_list[i]) for i in blocks] == ["(1 2 3 4)", "(1 4 3 2)"]


def test_from_diagonal_round_trip():
    m = module(4, "(1 2)(3 4)", "d4:rho2")
    d = diagonalize_abelian_class(m)
    assert BraidingOperator.from_diagonal(d).as_diagonal() == d


def test_json_dump_is_stable():
    c = braiding(module(3, "(1 2)", "sgn"))
    dump = c.to_json()
    assert dump == c.to_json()
    assert dump[0] == {"pair": [1, 1], "image": [[[1, 1], "-1"]]}
    assert len(dump) == 9


def _product(label_pi: str, label_tau: str, tau_text: str, p: int):
    pi = Permutation.parse("(1 2)(3 4)", 4)
    tau = Permutation.parse(tau_text, p)
    rho, lam = resolve_label(label_pi, pi), resolve_label(label_tau, tau)
    mu = outer_tensor(rho, lam)
    joined = mu.group.base_point
    mpi = build_module(enumerate_class(4, CycleType.parse("2^2", 4)), pi, rho)
    t = CycleType.from_lengths(len(c) for c in joined.cycles(include_fixed=True))
    mprod = build_module(enumerate_class(4 + p, t), joined, mu)
    return mpi, mprod, lam


def test_product_embedding_with_trivial_tau_scalar():
    mpi, mprod, _ = _product("d4:(1,-1)", "eps", "(1 2 3)", 3)
    report = product_embedding(mpi, mprod, [ONE])
    assert report.uniform and report.is_morphism and report.factor == 1


def test_product_embedding_reports_the_tau_scalar():
    mpi, mprod, _ = _product("d4:(1,-1)", "chi3", "(1 2 3)", 3)
    report = product_embedding(mpi, mprod, [ONE])
    assert report.uniform and not report.is_morphism
    assert report.factor == root_of_unity(3)


def test_product_embedding_with_identity_tau():
    mpi, mprod, _ = _product("d4:rho2", "eps", "e", 1)
    report = product_embedding(mpi, mprod, [ONE])
    assert report.is_morphism and report.pairs_checked == 36

import random

import pytest

from thickrep.errors import CapExceeded, PreconditionFailed
from thickrep.fields import GF, QQ
from thickrep.linalg import Matrix, Subspace, random_invertible, unit_vector
from thickrep.repcore import (
    Caps,
    GROUP,
    LIE,
    NOT_THICK,
    THICK,
    Representation,
    all_submodules,
    burnside_dim,
    commutant,
    enumerate_subspaces,
    exterior_rep,
    gaussian_binomial,
    group_closure,
    is_invariant,
    is_m_dense,
    is_m_thick_criterion,
    is_m_thick_definition,
    isotypic_decomposition,
    r_number_bounds,
    restrict_to_invariant,
    spin,
    verify_not_thick_certificate,
)


def M(field, rows):
    return Matrix.from_ints(field, rows)


def group_rep(field, mats, label=""):
    mats = [M(field, rows) for rows in mats]
    return Representation(field, mats[0].nrows, GROUP, mats, label=label)


SWAP2 = [[0, 1], [1, 0]]
ROT = [[0, -1], [1, 0]]


def test_exterior_rep_m1_is_identity_functor():
    r = group_rep(QQ, [SWAP2])
    assert exterior_rep(r, 1).generators == r.generators


def test_exterior_rep_lie_top_degree_is_trace():
    x = M(QQ, [[3, 5], [7, 11]])
    r = Representation(QQ, 2, LIE, [x])
    top = exterior_rep(r, 2)
    assert top.generators[0] == Matrix(QQ, [[x.trace()]])


def test_exterior_rep_group_diag():
    r = group_rep(QQ, [[[1, 0, 0], [0, 2, 0], [0, 0, 3]]])
    assert exterior_rep(r, 2).generators[0] == Matrix.diagonal(
        QQ, [QQ.from_int(v) for v in (2, 3, 6)]
    )


def test_spin_examples():
    r = group_rep(QQ, [SWAP2])
    assert spin(r, [unit_vector(QQ, 2, 0)]) == Subspace.full(QQ, 2)
    r2 = group_rep(GF(2), [SWAP2])
    fixed = spin(r2, [(1, 1)])
    assert fixed == Subspace.from_vectors(GF(2), 2, [(1, 1)])
    assert spin(r, [(0, 0)]).dim == 0


def test_is_invariant():
    r = group_rep(QQ, [SWAP2])
    assert is_invariant(r, Subspace.zero(QQ, 2))
    assert is_invariant(r, Subspace.full(QQ, 2))
    assert not is_invariant(r, Subspace.from_vectors(QQ, 2, [(1, 0)]))
    assert is_invariant(r, Subspace.from_vectors(QQ, 2, [(1, 1)]))


def test_burnside_dim_examples():
    assert burnside_dim(group_rep(QQ, [ROT])) == 2
    assert burnside_dim(group_rep(QQ, [ROT, [[1, 1], [1, 0]]])) == 4
    assert burnside_dim(group_rep(QQ, [[[1, 0], [0, 1]]])) == 1


def test_burnside_dim_finite_field():
    assert burnside_dim(group_rep(GF(2), [[[1, 1], [0, 1]], SWAP2])) == 4


def test_group_closure_gl2_f2():
    r = group_rep(GF(2), [[[1, 1], [0, 1]], SWAP2])
    elems = group_closure(r, cap=100)
    assert len(elems) == 6  # GL_2(F_2) is S_3
    with pytest.raises(CapExceeded):
        group_closure(r, cap=3)


def test_all_submodules_swap_f2():
    r = group_rep(GF(2), [SWAP2])
    subs = all_submodules(r)
    assert [s.dim for s in subs] == [0, 1, 2]
    assert subs[1] == Subspace.from_vectors(GF(2), 2, [(1, 1)])


def test_all_submodules_irreducible():
    r = group_rep(GF(2), [[[1, 1], [0, 1]], SWAP2])
    subs = all_submodules(r)
    assert [s.dim for s in subs] == [0, 2]


def test_all_submodules_identity_rep():
    r = group_rep(GF(2), [[[1, 0], [0, 1]]])
    subs = all_submodules(r)
    assert len(subs) == 5  # 0, three lines, full


def test_all_submodules_invariant_and_closed():
    rng = random.Random(8)
    for _ in range(5):
        gens = [random_invertible(GF(3), 3, rng) for _ in range(2)]
        r = Representation(GF(3), 3, GROUP, gens)
        subs = all_submodules(r)
        keys = {s.mat.rows for s in subs}
        for s in subs:
            assert is_invariant(r, s)
            for t in subs:
                assert s.sum(t).mat.rows in keys
                assert s.intersect(t).mat.rows in keys


def test_commutant_absolutely_irreducible():
    dim, basis = commutant(group_rep(QQ, [ROT, [[1, 1], [1, 0]]]))
    assert dim == 1


def test_commutant_identity_rep():
    dim, _ = commutant(group_rep(QQ, [[[1, 0], [0, 1]]]))
    assert dim == 4


def test_commutant_diagonal_reduction_agrees():
    # same answer whether or not a diagonal generator lets us prune
    diag = M(QQ, [[1, 0], [0, 2]])
    other = M(QQ, [[0, 1], [1, 0]])
    dim1, _ = commutant(Representation(QQ, 2, GROUP, [diag, other]))
    # conjugate so nothing is diagonal
    p = M(QQ, [[1, 1], [0, 1]])
    pi = p.inverse()
    dim2, _ = commutant(
        Representation(QQ, 2, GROUP, [pi * diag * p, pi * other * p])
    )
    assert dim1 == dim2 == 1


def test_isotypic_absolutely_irreducible():
    r = group_rep(QQ, [ROT, [[1, 1], [1, 0]]])
    assert isotypic_decomposition(r) == [Subspace.full(QQ, 2)]


def test_isotypic_irrational_splitting_unknown():
    assert isotypic_decomposition(group_rep(QQ, [ROT])) is None


def test_isotypic_two_blocks():
    a = M(QQ, [[2, 0], [0, 3]])
    r = Representation(QQ, 2, GROUP, [a])
    dec = isotypic_decomposition(r)
    assert dec is not None and sorted(e.dim for e in dec) == [1, 1]


def test_restrict_to_invariant():
    r = group_rep(QQ, [[[2, 1], [0, 3]]])
    w = Subspace.from_vectors(QQ, 2, [(1, 0)])
    sub = restrict_to_invariant(r, w)
    assert sub.generators[0] == M(QQ, [[2]])


def test_is_m_dense_trivial_degrees():
    r = group_rep(QQ, [ROT])
    assert is_m_dense(r, 0) == "Yes"
    assert is_m_dense(r, 2) == "Yes"


def test_is_m_dense_finite_non_absolute():
    r = group_rep(GF(2), [[[1, 1], [0, 1]], SWAP2])
    assert is_m_dense(r, 1, absolute=False) == "Yes"
    red = group_rep(GF(2), [[[1, 1], [0, 1]]])
    assert is_m_dense(red, 1, absolute=False) == "No"


def test_gaussian_binomial():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 2, 3) == 130


def test_enumerate_subspaces_counts_and_canonical():
    for q, n, k in ((2, 4, 2), (3, 3, 1), (2, 3, 2)):
        subs = list(enumerate_subspaces(GF(q), n, k))
        assert len(subs) == gaussian_binomial(n, k, q)
        assert len({s.mat.rows for s in subs}) == len(subs)
        for s in subs:
            redone = Subspace.from_vectors(GF(q), n, s.basis_vectors())
            assert redone == s
    first = next(iter(enumerate_subspaces(GF(2), 4, 2)))
    assert first == Subspace.from_vectors(GF(2), 4, [(1, 0, 0, 0), (0, 1, 0, 0)])


def test_definition_thick_gl2_f2():
    r = group_rep(GF(2), [[[1, 1], [0, 1]], SWAP2])
    rep = is_m_thick_definition(r, 1)
    assert rep.verdict == THICK


def test_definition_not_thick_reducible():
    r = group_rep(GF(2), [[[1, 1], [0, 1]]])
    rep = is_m_thick_definition(r, 1)
    assert rep.verdict == NOT_THICK
    assert verify_not_thick_certificate(r, rep.certificate)


def test_definition_trivial_m():
    r = group_rep(GF(2), [SWAP2])
    assert is_m_thick_definition(r, 0).verdict == THICK
    assert is_m_thick_definition(r, 2).verdict == THICK


def test_definition_pair_cap():
    r = group_rep(GF(3), [SWAP2])
    caps = Caps()
    caps.pair_cap = 2
    with pytest.raises(CapExceeded):
        is_m_thick_definition(r, 1, caps)


def test_criterion_thick_gl2_f3():
    r = group_rep(GF(3), [[[1, 1], [0, 1]], [[0, 1], [1, 0]]])
    rep = is_m_thick_criterion(r, 1)
    assert rep.verdict == THICK
    assert rep.verdict == is_m_thick_definition(r, 1).verdict


def test_criterion_not_thick_reducible():
    r = group_rep(GF(2), [[[1, 1], [0, 1]]])
    rep = is_m_thick_criterion(r, 1)
    assert rep.verdict == NOT_THICK
    assert verify_not_thick_certificate(r, rep.certificate)


def test_criterion_definition_agreement_seeded():
    rng = random.Random(424)
    for q in (2, 3):
        field = GF(q)
        for _ in range(6):
            gens = [random_invertible(field, 3, rng) for _ in range(2)]
            r = Representation(field, 3, GROUP, gens)
            for m in (1, 2):
                a = is_m_thick_criterion(r, m)
                b = is_m_thick_definition(r, m)
                assert a.verdict == b.verdict, (q, m)


def test_duality_of_verdicts_seeded():
    rng = random.Random(11)
    field = GF(2)
    for _ in range(6):
        gens = [random_invertible(field, 4, rng) for _ in range(2)]
        r = Representation(field, 4, GROUP, gens)
        for m in (1, 2):
            assert (
                is_m_thick_definition(r, m).verdict
                == is_m_thick_definition(r, 4 - m).verdict
            )
            assert (
                is_m_thick_criterion(r, m).verdict
                == is_m_thick_criterion(r, 4 - m).verdict
            )


def test_implication_dense_thick_irreducible_seeded():
    rng = random.Random(5150)
    field = GF(3)
    for _ in range(6):
        gens = [random_invertible(field, 3, rng) for _ in range(2)]
        r = Representation(field, 3, GROUP, gens)
        irreducible = len(all_submodules(r)) == 2
        for m in (1, 2):
            dense = is_m_dense(r, m, absolute=False)
            thick = is_m_thick_definition(r, m).verdict
            if dense == "Yes":
                assert thick == THICK
            if thick == THICK:
                assert irreducible


def test_generator_subset_never_gains_thickness():
    rng = random.Random(77)
    field = GF(2)
    for _ in range(6):
        gens = [random_invertible(field, 3, rng) for _ in range(2)]
        full = Representation(field, 3, GROUP, gens)
        part = Representation(field, 3, GROUP, gens[:1])
        for m in (1, 2):
            if is_m_thick_definition(part, m).verdict == THICK:
                assert is_m_thick_definition(full, m).verdict == THICK


def test_extension_field_monotonicity():
    # thickness over an extension implies thickness over the base field
    rng = random.Random(31337)
    F2 = GF(2)
    F4 = GF(2, 2)
    for _ in range(5):
        gens2 = [random_invertible(F2, 3, rng) for _ in range(2)]
        gens4 = [
            Matrix(F4, [[F4.from_int(x) for x in row] for row in g.rows])
            for g in gens2
        ]
        r2 = Representation(F2, 3, GROUP, gens2)
        r4 = Representation(F4, 3, GROUP, gens4)
        for m in (1, 2):
            v4 = is_m_thick_definition(r4, m).verdict
            v2 = is_m_thick_definition(r2, m).verdict
            if v4 == THICK:
                assert v2 == THICK


def test_r_number_bounds_examples():
    b = r_number_bounds(6, 2)
    assert (b.lower, b.upper, b.exact) == (3, 6, 3)
    b = r_number_bounds(5, 2)
    assert b.exact == 4
    b = r_number_bounds(7, 3)
    assert (b.lower, b.upper, b.exact) == (3, 7, None)
    assert r_number_bounds(4, 0).exact == 1
    assert r_number_bounds(4, 1).exact == 4
    assert r_number_bounds(6, 4).exact == 3
    assert r_number_bounds(5, 3).exact == 4


def test_group_mode_requires_invertible():
    with pytest.raises(PreconditionFailed):
        group_rep(QQ, [[[1, 0], [0, 0]]])

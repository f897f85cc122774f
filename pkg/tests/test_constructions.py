import random

import pytest

from thickrep.errors import BadN, FieldTooSmall, PreconditionFailed
from thickrep.fields import GF, QQ
from thickrep.linalg import Matrix, Subspace
from thickrep.exterior import WedgeVector, is_decomposable
from thickrep.repcore import (
    GROUP,
    Representation,
    burnside_dim,
    exterior_rep,
    is_invariant,
    r_number_bounds,
    spin,
)
from thickrep.constructions import (
    BlockRepSpec,
    block_eigenvectors,
    block_rep,
    build_block_rep,
    companion_pair,
    e1_wedge_subspace,
    generic_diagonalizable,
    lie_generators,
    suggest_block_field,
    symplectic_form_matrix,
    split_orthogonal_form_matrix,
)


def test_companion_pair_burnside_absolutely_irreducible():
    res = companion_pair(QQ, 4, QQ.from_int(2), QQ.from_int(3))
    assert burnside_dim(res.rep) == 16
    assert res.roots_available is False  # no four rational 4th roots of 2


def test_companion_pair_windows():
    res = companion_pair(QQ, 4, QQ.from_int(2), QQ.from_int(3))
    w2 = res.windows[2]
    assert w2.dim == 4
    ext = exterior_rep(res.rep, 2)
    assert is_invariant(ext, w2)
    assert w2.contains_vector(WedgeVector.basis_element(QQ, 4, (1, 2)).coords)


def test_companion_pair_equal_scalars_rejected():
    with pytest.raises(PreconditionFailed):
        companion_pair(QQ, 3, QQ.from_int(2), QQ.from_int(2))


def test_companion_pair_roots_available_over_f5():
    # x^4 = a has 4 solutions in F_5 exactly when a = 1
    res = companion_pair(GF(5), 4, 1, 2)
    assert res.roots_available is False


def test_suggest_block_field():
    assert suggest_block_field(2, 2).p == 13


def test_block_rep_2x2_f13():
    F13 = GF(13)
    res = build_block_rep(2, 2, F13, alphas=(1, 4), betas=(3, 9), seed=0)
    assert res.rep.dim == 4
    assert burnside_dim(res.rep) == 16
    assert res.w.dim == 2
    assert res.y.dim == 4
    assert res.cramer_checked and res.cramer_nonzero
    # W is the span of the two block wedges
    expected = Subspace.from_vectors(
        F13,
        6,
        [
            WedgeVector.basis_element(F13, 4, (1, 2)).coords,
            WedgeVector.basis_element(F13, 4, (3, 4)).coords,
        ],
    )
    assert res.w == expected


def test_block_rep_dimensions_3x2():
    res = build_block_rep(3, 2, GF(13), alphas=(1, 5), betas=(8, 12), seed=1)
    assert res.rep.dim == 6
    assert res.w.dim == 3  # one wedge per block
    assert res.y.dim == 2**3


def test_block_spec_validation():
    F13 = GF(13)
    with pytest.raises(PreconditionFailed):
        BlockRepSpec(2, 2, (1, 1), Matrix.identity(F13, 2), F13)
    with pytest.raises(PreconditionFailed):
        # 2 has no square root in F_13
        BlockRepSpec(2, 2, (1, 2), Matrix.identity(F13, 2), F13)
    with pytest.raises(PreconditionFailed):
        BlockRepSpec(1, 2, (1,), Matrix.identity(F13, 1), F13)


def test_block_eigenvectors_scalar_case():
    F5 = GF(5)
    blocks = [Matrix(F5, [[1]]), Matrix(F5, [[4]])]
    pairs = block_eigenvectors(blocks)
    assert [(xi, v) for xi, v in pairs] == [(2, (2, 1)), (3, (3, 1))]


def test_block_eigenvectors_counts():
    F5 = GF(5)
    blocks = [Matrix.identity(F5, 2), Matrix.diagonal(F5, (1, 4))]
    pairs = block_eigenvectors(blocks)
    assert len(pairs) == 4
    assert sorted(xi for xi, _ in pairs) == [1, 2, 3, 4]


def test_block_eigenvectors_independent():
    F13 = GF(13)
    rng = random.Random(3)
    blocks = [Matrix.identity(F13, 2), Matrix.diagonal(F13, (3, 9))]
    pairs = block_eigenvectors(blocks)
    from thickrep.linalg import rank_of_rows

    assert rank_of_rows(F13, [v for _, v in pairs], 4) == 4


def test_generic_diagonalizable_postconditions():
    f, basis, betas = generic_diagonalizable(QQ, (1, 0), set(), seed=5)
    assert len(set(betas)) == 2
    total = tuple(map(sum, zip(*basis)))
    assert tuple(QQ.reduce(x) for x in total) == (1, 0)
    for b, v in zip(betas, basis):
        assert f.apply(v) == tuple(QQ.mul(b, x) for x in v)


def test_generic_diagonalizable_spin_full():
    fmat, _, _ = generic_diagonalizable(GF(7), (1, 1, 1), {1}, seed=9)
    rep = Representation(GF(7), 3, GROUP, [fmat])
    assert spin(rep, [(1, 1, 1)]).dim == 3


def test_generic_diagonalizable_restricted_pool():
    _, _, betas = generic_diagonalizable(GF(5), (1, 0), {1, 2}, seed=0)
    assert set(betas) == {3, 4}


def test_generic_diagonalizable_field_too_small():
    with pytest.raises(FieldTooSmall):
        generic_diagonalizable(GF(3), (1, 0, 1), {1}, seed=0)


def test_e1_wedge_subspace():
    w = e1_wedge_subspace(GF(2), 4)
    assert w.dim == 3
    for row in w.basis_vectors():
        ok, _ = is_decomposable(WedgeVector(GF(2), 4, 2, row))
        assert ok
    with pytest.raises(BadN):
        e1_wedge_subspace(QQ, 3)


def test_lie_generators_sl2():
    gens = lie_generators("sl", 2)
    assert len(gens) == 3


def test_lie_generators_sp2_dimension_and_form():
    gens = lie_generators("sp", 2)
    assert len(gens) == 10
    J = symplectic_form_matrix(QQ, 2)
    zero = Matrix.zero(QQ, 4, 4)
    for x in gens:
        assert x.transpose() * J + J * x == zero


def test_lie_generators_so5_dimension():
    gens = lie_generators("so_split", 5)
    assert len(gens) == 10
    S = split_orthogonal_form_matrix(QQ, 5)
    zero = Matrix.zero(QQ, 5, 5)
    for x in gens:
        assert x.transpose() * S + S * x == zero


def test_lie_generators_so4_dimension():
    assert len(lie_generators("so_split", 4)) == 6


def test_lie_generators_gl_and_span():
    gens = lie_generators("gl", 3)
    assert len(gens) == 9


def test_lie_generators_include_diagonal_cartan():
    for fam, n in (("sp", 2), ("so_split", 4), ("so_split", 5)):
        gens = lie_generators(fam, n)
        diag = [
            g
            for g in gens
            if all(
                g.rows[i][j] == QQ.zero
                for i in range(g.nrows)
                for j in range(g.ncols)
                if i != j
            )
        ]
        assert diag, fam


def test_window_block_witness_dims_match_r_number():
    res = build_block_rep(3, 2, GF(13), alphas=(1, 5), betas=(8, 12), seed=1)
    b = r_number_bounds(6, 2)
    assert res.w.dim == b.exact == b.lower

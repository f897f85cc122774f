import random
from math import comb

import pytest

from thickrep.errors import CodimMismatch, CodimTooLarge, PreconditionFailed
from thickrep.fields import GF, QQ
from thickrep.linalg import Subspace, rank_of_rows, unit_vector
from thickrep.exterior import WedgeVector, is_decomposable, perp, wedge_of_vectors
from thickrep.symplectic import (
    SymplecticSpace,
    contraction_is_equivariant,
    contraction_matrix,
    is_isotropic,
    isotropic_transversal,
    ker_fm,
    ker_perp_realizability_check,
    lagrangian_complement,
    symplectic_normal_basis,
)


def basis_wedge(field, n, subset):
    return WedgeVector.basis_element(field, n, subset).coords


def test_contraction_values_2n4():
    sp = SymplecticSpace(2, QQ)
    f2 = contraction_matrix(sp, 2)
    # e1 ^ e3 pairs to omega(e1, e3) = 1
    assert f2.apply(basis_wedge(QQ, 4, (1, 3))) == (QQ.one,)
    assert f2.apply(basis_wedge(QQ, 4, (1, 2))) == (QQ.zero,)
    assert f2.rank() == 1


def test_ker_f2_dim_and_members():
    sp = SymplecticSpace(2, QQ)
    k = ker_fm(sp, 2)
    assert k.dim == 5
    assert k.contains_vector(basis_wedge(QQ, 4, (1, 2)))
    v = WedgeVector.basis_element(QQ, 4, (1, 3)).add(
        WedgeVector.basis_element(QQ, 4, (2, 4))
    )
    assert not k.contains_vector(v.coords)


def test_ker_dims_up_to_2n8():
    for n in (2, 3, 4):
        sp = SymplecticSpace(n, QQ)
        for m in range(2, n + 1):
            k = ker_fm(sp, m)
            assert k.dim == comb(2 * n, m) - comb(2 * n, m - 2)


def test_contraction_equivariance():
    for n in (2, 3):
        sp = SymplecticSpace(n, QQ)
        for m in range(2, n + 1):
            assert contraction_is_equivariant(sp, m)


def test_isotropic_wedges_in_kernel():
    rng = random.Random(12)
    for field in (QQ, GF(5)):
        sp = SymplecticSpace(3, field)
        cm = contraction_matrix(sp, 2)
        for _ in range(20):
            # random isotropic plane via two orthogonal vectors
            while True:
                u = tuple(field.random(rng) for _ in range(6))
                v = tuple(field.random(rng) for _ in range(6))
                if (
                    rank_of_rows(field, [u, v], 6) == 2
                    and sp.omega(u, v) == field.zero
                ):
                    break
            w = wedge_of_vectors(field, 6, [u, v])
            assert all(c == field.zero for c in cm.apply(w.coords))


def test_normal_basis_small_cases():
    sp = SymplecticSpace(2, QQ)
    basis, k, l = symplectic_normal_basis(sp, Subspace.zero(QQ, 4))
    assert (k, l) == (0, 2)
    basis, k, l = symplectic_normal_basis(sp, Subspace.full(QQ, 4))
    assert (k, l) == (2, 0)
    w = Subspace.from_vectors(QQ, 4, [unit_vector(QQ, 4, 0), unit_vector(QQ, 4, 2)])
    basis, k, l = symplectic_normal_basis(sp, w)
    assert k == 1


def test_normal_basis_random_validated():
    rng = random.Random(5)
    for field in (GF(5), QQ):
        for n in (2, 3):
            sp = SymplecticSpace(n, field)
            for _ in range(15):
                d = rng.randint(0, 2 * n)
                vecs = [
                    tuple(field.random(rng) for _ in range(2 * n)) for _ in range(d)
                ]
                w = Subspace.from_vectors(field, 2 * n, vecs)
                basis, k, l = symplectic_normal_basis(sp, w)
                assert 0 <= k <= n and 0 <= l <= n
                assert w.dim == (sp.n - l) + k


def test_lagrangian_complement_validated():
    sp = SymplecticSpace(2, QQ)
    w = Subspace.from_vectors(QQ, 4, [unit_vector(QQ, 4, i) for i in (0, 1, 2)])
    L = lagrangian_complement(sp, w)
    assert L.dim == 2 and is_isotropic(sp, L)
    assert rank_of_rows(QQ, L.basis_vectors() + w.basis_vectors(), 4) == 4


def test_lagrangian_complement_of_lagrangian():
    sp = SymplecticSpace(2, QQ)
    L0 = Subspace.from_vectors(QQ, 4, [unit_vector(QQ, 4, 0), unit_vector(QQ, 4, 1)])
    assert is_isotropic(sp, L0)
    L = lagrangian_complement(sp, L0)
    assert rank_of_rows(QQ, L.basis_vectors() + L0.basis_vectors(), 4) == 4


def test_lagrangian_codim_too_large():
    sp = SymplecticSpace(2, QQ)
    w = Subspace.from_vectors(QQ, 4, [unit_vector(QQ, 4, 0)])
    with pytest.raises(CodimTooLarge):
        lagrangian_complement(sp, w)


def test_isotropic_transversal():
    sp = SymplecticSpace(2, QQ)
    w = Subspace.from_vectors(QQ, 4, [unit_vector(QQ, 4, i) for i in (0, 1, 2)])
    u = isotropic_transversal(sp, w, 1)
    assert u.dim == 1 and u.intersect(w).dim == 0
    with pytest.raises(CodimMismatch):
        isotropic_transversal(sp, w, 2)
    assert isotropic_transversal(sp, Subspace.full(QQ, 4), 0).dim == 0


def test_isotropic_transversal_of_lagrangian():
    sp = SymplecticSpace(2, GF(5))
    L0 = Subspace.from_vectors(GF(5), 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    u = isotropic_transversal(sp, L0, 2)
    assert u.dim == 2 and is_isotropic(sp, u) and u.intersect(L0).dim == 0


def test_seeded_constructions_over_f5():
    rng = random.Random(99)
    count = 0
    for n in (2, 3):
        sp = SymplecticSpace(n, GF(5))
        while count < 60 * (n - 1):
            i = rng.randint(0, n)
            vecs = []
            while len(vecs) < 2 * n - i:
                cand = tuple(GF(5).random(rng) for _ in range(2 * n))
                if rank_of_rows(GF(5), vecs + [cand], 2 * n) == len(vecs) + 1:
                    vecs.append(cand)
            w = Subspace.from_vectors(GF(5), 2 * n, vecs)
            L = lagrangian_complement(sp, w)
            assert L.dim == n and is_isotropic(sp, L)
            if i:
                u = isotropic_transversal(sp, w, i)
                assert u.dim == i and u.intersect(w).dim == 0
            count += 1


def test_ker_perp_line_not_decomposable_over_q():
    sp = SymplecticSpace(2, QQ)
    kp = perp(ker_fm(sp, 2), 4, 2)
    assert kp.dim == 1
    ok, _ = is_decomposable(WedgeVector(QQ, 4, 2, kp.basis_vectors()[0]))
    assert not ok


def test_ker_perp_report_2n4():
    sp = SymplecticSpace(2, GF(5))
    report = ker_perp_realizability_check(sp, 2, trials=50, seed=3)
    assert report.pairing_prong_pass and report.nonzero_pairings == 50
    assert report.scan_prong_ran and report.scan_prong_pass


def test_ker_perp_report_rejects_m1():
    sp = SymplecticSpace(2, GF(5))
    with pytest.raises(PreconditionFailed):
        ker_perp_realizability_check(sp, 1)


def test_ker_perp_exhaustive_f3():
    sp = SymplecticSpace(2, GF(3))
    report = ker_perp_realizability_check(sp, 2, trials=10, seed=0)
    assert report.scan_prong_ran and report.scan_prong_pass

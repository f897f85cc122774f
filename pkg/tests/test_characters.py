from fractions import Fraction
from math import factorial

import pytest

from thickrep.errors import NonIntegralMultiplicity
from thickrep.characters import (
    ClassFunction,
    class_size,
    decompose,
    distinct_parts_coeffs,
    exterior_square_char,
    gl2_wedge_identity,
    hook_dimension,
    inner_product,
    partitions,
    plethysm_component_count,
    square_cycle_type,
    sym_char,
)


def test_partitions_order_and_counts():
    assert partitions(5) == (
        (5,),
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
        (2, 1, 1, 1),
        (1, 1, 1, 1, 1),
    )
    assert len(partitions(6)) == 11
    assert len(partitions(8)) == 22


def test_class_sizes_sum_to_group_order():
    for d in range(1, 7):
        assert sum(class_size(mu) for mu in partitions(d)) == factorial(d)


def test_hook_dimensions():
    assert hook_dimension((3, 2)) == 5
    assert hook_dimension((3, 1, 1)) == 6
    assert hook_dimension((2, 1, 1, 1)) == 4


def test_degrees():
    assert sym_char((3, 2)).degree == 5
    assert sym_char((2, 1, 1, 1)).degree == 4
    assert sym_char((3, 1, 1)).degree == 6


def test_sign_character():
    d = 5
    chi = sym_char((1,) * d)
    for mu in partitions(d):
        assert chi.value_on(mu) == (-1) ** (d - len(mu))


def test_trivial_character():
    chi = sym_char((4,))
    assert all(v == 1 for v in chi.values)


def test_orthogonality_small_degrees():
    for d in range(1, 7):
        chars = {lam: sym_char(lam) for lam in partitions(d)}
        for lam, chi in chars.items():
            for mu, psi in chars.items():
                assert inner_product(chi, psi) == (1 if lam == mu else 0)


def test_sum_of_squares_of_degrees():
    for d in range(1, 7):
        assert sum(sym_char(lam).degree ** 2 for lam in partitions(d)) == factorial(d)


def test_square_cycle_type():
    assert square_cycle_type((4,)) == (2, 2)
    assert square_cycle_type((3,)) == (3,)
    assert square_cycle_type((2, 2, 1)) == (1, 1, 1, 1, 1)


def test_exterior_square_of_trivial_is_zero():
    chi = sym_char((3,))
    assert all(v == 0 for v in exterior_square_char(chi).values)


def test_exterior_square_degree():
    psi = exterior_square_char(sym_char((3, 2)))
    assert psi.degree == 10


def test_wedge_square_decomposition_of_five_dim_reps():
    for lam in ((3, 2), (2, 2, 1)):
        psi = exterior_square_char(sym_char(lam))
        assert decompose(psi) == [((3, 1, 1), 1), ((2, 1, 1, 1), 1)]


def test_decompose_irreducible():
    assert decompose(sym_char((3, 2))) == [((3, 2), 1)]


def test_decompose_rejects_non_character():
    d = 3
    bogus = ClassFunction(d, tuple(Fraction(1, 2) for _ in partitions(d)))
    with pytest.raises(NonIntegralMultiplicity):
        decompose(bogus)


def test_gl2_identity_base_cases():
    assert gl2_wedge_identity(1, 0)
    assert gl2_wedge_identity(3, 0)
    assert gl2_wedge_identity(4, 1)


def test_gl2_identity_full_range():
    for a in range(0, 9):
        for b in range(-3, 4):
            assert gl2_wedge_identity(a, b), (a, b)


def test_gl2_identity_shifted_range_fails():
    assert not gl2_wedge_identity(4, 0, shift=1)
    assert not gl2_wedge_identity(5, 1, shift=1)


def test_distinct_parts_coeffs():
    assert distinct_parts_coeffs(3) == [1, 1, 1, 2, 1, 1, 1]
    assert distinct_parts_coeffs(4) == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]


def test_distinct_parts_symmetry():
    for n in range(3, 10):
        coeffs = distinct_parts_coeffs(n)
        assert coeffs == coeffs[::-1]


def test_plethysm_examples():
    assert plethysm_component_count("sym2", 3, 3) == 2
    assert plethysm_component_count("wedge2", 4, 3) == 2
    assert plethysm_component_count("sym2", 3, 0) == 1


def test_plethysm_matches_generating_function():
    for n in range(1, 5):
        sym_coeffs = distinct_parts_coeffs(n)
        wedge_coeffs = distinct_parts_coeffs(n - 1) if n > 1 else [1]
        for m in range(0, 7):
            expect_sym = sym_coeffs[m] if m < len(sym_coeffs) else 0
            expect_wedge = wedge_coeffs[m] if m < len(wedge_coeffs) else 0
            assert plethysm_component_count("sym2", n, m) == expect_sym, (n, m)
            assert plethysm_component_count("wedge2", n, m) == expect_wedge, (n, m)

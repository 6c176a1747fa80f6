import random

import pytest

from gradedpi import _split
from gradedpi.cyclo import CycloScalar, zeta
from gradedpi.galg import center_basis, group_algebra, matrix_algebra
from gradedpi.groups import cyclic, symmetric
from gradedpi.structure import ungraded_view


def poly(m, *coeffs):
    return [CycloScalar.from_rational(m, c) if not isinstance(c, CycloScalar)
            else c for c in coeffs]


def test_factor_x2_plus_1_over_gaussian_field():
    f = poly(4, 1, 0, 1)
    roots, nonlinear = _split.roots_in_field(f, 4)
    assert not nonlinear
    assert sorted(map(str, roots)) == sorted(map(str, [zeta(4), -zeta(4)]))


def test_factor_x2_plus_1_over_rationals_is_irreducible():
    f = poly(1, 1, 0, 1)
    roots, nonlinear = _split.roots_in_field(f, 1)
    assert not roots
    assert len(nonlinear) == 1 and len(nonlinear[0]) == 3


@pytest.mark.parametrize("m", [3, 4, 6, 8, 12])
def test_xn_minus_1_splits_completely(m):
    f = poly(m, *([-1] + [0] * (m - 1) + [1]))
    roots, nonlinear = _split.roots_in_field(f, m)
    assert not nonlinear
    assert len(roots) == m
    # the roots are exactly the m-th roots of unity
    assert sorted(map(str, roots)) == sorted(str(zeta(m, k)) for k in range(m))


def test_mixed_factorization():
    i4 = zeta(4)
    lin = poly(4, -2, 1)
    quad = [-i4, CycloScalar.zero(4), CycloScalar.one(4)]  # x^2 - i
    f = _split._pmul(lin, quad, 4)
    roots, nonlinear = _split.roots_in_field(f, 4)
    assert [str(r) for r in roots] == [str(CycloScalar.from_rational(4, 2))]
    assert len(nonlinear) == 1


def test_factors_multiply_back():
    m = 6
    f = poly(m, 2, 0, -3, 0, 1)  # (x^2 - 1)(x^2 - 2)
    factors = _split.factor_over_field(f, m)
    prod = [CycloScalar.one(m)]
    for h in factors:
        prod = _split._pmul(prod, h, m)
    monic = _split._pmonic(list(f))
    assert len(prod) == len(monic)
    assert all((a - b).is_zero() for a, b in zip(prod, monic))


def test_split_commutative_group_algebra():
    A = ungraded_view(group_algebra(cyclic(4)))
    idems, field_degrees = _split.split_commutative(
        A, center_basis(A), rng=random.Random(0))
    assert field_degrees == [1, 1, 1, 1]
    total = {}
    for e in idems:
        assert A.mul(e, e) == e
        for k, v in e.items():
            total[k] = total.get(k, CycloScalar.zero(A.modulus)) + v
    total = {k: v for k, v in total.items() if v}
    assert total == A.unit


def test_split_commutative_detects_nonsplit_field():
    A = ungraded_view(group_algebra(cyclic(5), modulus=1))
    idems, field_degrees = _split.split_commutative(
        A, center_basis(A), rng=random.Random(0))
    # over Q: FC5 = Q x Q(zeta_5)
    assert sorted(field_degrees) == [1, 4]


def test_split_commutative_center_of_matrix_algebra():
    A = ungraded_view(matrix_algebra(3))
    idems, field_degrees = _split.split_commutative(A, center_basis(A))
    assert field_degrees == [1]
    assert idems[0] == A.unit


def test_split_commutative_noncommutative_center():
    A = ungraded_view(group_algebra(symmetric(3)))
    idems, field_degrees = _split.split_commutative(A, center_basis(A))
    assert len(idems) == 3  # three blocks
    assert field_degrees == [1, 1, 1]

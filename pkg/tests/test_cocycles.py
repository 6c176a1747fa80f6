import random

import pytest
from hypothesis import given, settings, strategies as st

from gradedpi.cocycles import (Bicharacter, TwoCocycle, bicharacter_mu,
                               coboundary, cocycle_from_extension,
                               heisenberg_cocycle, heisenberg_group,
                               is_nondegenerate, multiply, radical,
                               trivial_cocycle, validate)
from gradedpi.groups import (Subgroup, cyclic, direct_product, quaternion8,
                             sl2_3, are_isomorphic, alternating)


def test_validate_examples():
    C3 = cyclic(3)
    assert validate(trivial_cocycle(C3, 5)).ok
    h = heisenberg_cocycle(2, 1)
    assert validate(h).ok
    bad = TwoCocycle(C3, 3, [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
                     normalize=False)
    chk = validate(bad)
    assert not chk.ok and chk.witness == (0, 1)


def test_normalization_at_construction():
    C2 = cyclic(2)
    shifted = TwoCocycle(C2, 4, [[3, 3], [3, 3]])
    assert shifted.exps[0][0] == 0
    assert shifted.exps[0][1] == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(2, 4), st.data())
def test_coboundary_is_always_a_valid_cocycle(n, m, data):
    G = cyclic(n)
    b = [data.draw(st.integers(0, m - 1)) for _ in range(n)]
    b[G.identity] = 0
    c = coboundary(G, m, b)
    assert validate(c).ok


def test_coboundary_requires_base_point():
    C2 = cyclic(2)
    with pytest.raises(ValueError):
        coboundary(C2, 2, [1, 0])


def test_mu_trivial_and_heisenberg():
    h = heisenberg_cocycle(2, 1)
    mu = bicharacter_mu(h)
    assert mu.is_bilinear()
    sigma, tau = 2, 1
    assert mu.exponent(sigma, tau) == 1  # the value -1
    t = trivial_cocycle(h.group, 2)
    assert all(x == 0 for row in bicharacter_mu(t).exps for x in row)


def test_mu_kills_coboundaries():
    rng = random.Random(7)
    c = heisenberg_cocycle(3, 1)
    G = c.group
    base = bicharacter_mu(c).exps
    for _ in range(10):
        b = [rng.randrange(3) for _ in range(G.order)]
        b[G.identity] = 0
        assert bicharacter_mu(multiply(c, coboundary(G, 3, b))).exps == base


def test_mu_vanishes_on_cyclic_groups():
    rng = random.Random(3)
    for n in range(2, 7):
        G = cyclic(n)
        for m in (2, 3, 4):
            carry = [[((i + j) // n) % m for j in range(n)] for i in range(n)]
            base = TwoCocycle(G, m, carry)
            assert validate(base).ok
            b = [rng.randrange(m) for _ in range(n)]
            b[0] = 0
            c = multiply(base, coboundary(G, m, b))
            mu = bicharacter_mu(c)
            assert all(x == 0 for row in mu.exps for x in row), (n, m)


def test_radical_examples():
    h = heisenberg_cocycle(2, 1)
    assert radical(bicharacter_mu(h)).order == 1
    t = trivial_cocycle(h.group, 2)
    assert radical(bicharacter_mu(t)).order == 4

    # heisenberg plus a silent extra C_3 factor: radical is that factor
    G = direct_product(heisenberg_group(3, 1), cyclic(3))
    h3 = heisenberg_cocycle(3, 1)
    exps = [[h3.exps[a // 3][b // 3] for b in range(27)] for a in range(27)]
    big = TwoCocycle(G, 3, exps)
    assert validate(big).ok
    rad = radical(bicharacter_mu(big))
    assert rad.order == 3
    assert all(x % 3 == 0 or G.element_order(x) == 3 for x in rad.members)


def test_radical_is_a_subgroup():
    rng = random.Random(11)
    for p, n in ((2, 1), (3, 1), (2, 2)):
        c = heisenberg_cocycle(p, n)
        G = c.group
        b = [rng.randrange(p) for _ in range(G.order)]
        b[G.identity] = 0
        mixed = multiply(c, coboundary(G, p, b))
        rad = radical(bicharacter_mu(mixed))
        members = set(rad.members)
        for a in members:
            assert G.inverse(a) in members
            for bb in members:
                assert G.mul(a, bb) in members


def test_heisenberg_nondegenerate():
    for p in (2, 3, 5):
        assert is_nondegenerate(bicharacter_mu(heisenberg_cocycle(p, 1))), p
    assert is_nondegenerate(bicharacter_mu(heisenberg_cocycle(2, 2)))
    assert is_nondegenerate(bicharacter_mu(heisenberg_cocycle(3, 2)))


def test_bicharacter_requires_abelian():
    from gradedpi.groups import symmetric
    S3 = symmetric(3)
    with pytest.raises(ValueError):
        bicharacter_mu(trivial_cocycle(S3, 2))
    with pytest.raises(ValueError):
        Bicharacter(S3, 2, [[0] * 6 for _ in range(6)])


def test_quaternion_cocycle_has_symplectic_mu():
    Q8 = quaternion8()
    Z = Subgroup(Q8, Q8.center_members())
    c = cocycle_from_extension(Q8, Z)
    assert validate(c).ok and c.modulus == 2
    mu = bicharacter_mu(c)
    assert is_nondegenerate(mu)
    # the unique nondegenerate alternating pairing on C2 x C2
    for x in range(4):
        for y in range(4):
            expect = 1 if (x != y and x != 0 and y != 0) else 0
            assert mu.exponent(x, y) == expect


def test_sl23_gives_nontrivial_cocycle_on_a4():
    E = sl2_3()
    Z = Subgroup(E, E.center_members())
    c = cocycle_from_extension(E, Z)
    assert validate(c).ok
    assert c.group.order == 12
    assert are_isomorphic(c.group, alternating(4))
    assert not c.is_trivial()


def test_from_extension_rejects_noncentral():
    from gradedpi.groups import symmetric, all_subgroups
    S3 = symmetric(3)
    A3 = next(s for s in all_subgroups(S3) if s.order == 3)
    with pytest.raises(ValueError):
        cocycle_from_extension(S3, A3)

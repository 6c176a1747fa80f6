import pytest

from gradedpi.cocycles import heisenberg_cocycle, trivial_cocycle
from gradedpi.cyclo import CycloScalar
from gradedpi.galg import group_algebra
from gradedpi.groups import (Subgroup, all_subgroups, coset_reps, cyclic,
                             dihedral, right_cosets, symmetric)
from gradedpi.embed import (GradedMap, chain_embedding, clock_shift_rep,
                            regular_coset_embedding, regular_projective_rep,
                            untwist_embedding, verify_graded_map)
from gradedpi.structure import codimension


def test_identity_and_zero_maps():
    FC2 = group_algebra(cyclic(2))
    ident = GradedMap(FC2, FC2, [FC2.basis_vector(i) for i in range(FC2.dim)])
    r = verify_graded_map(ident)
    assert r.all_true()
    zero = GradedMap(FC2, FC2, [{} for _ in range(FC2.dim)])
    rz = verify_graded_map(zero)
    assert rz.multiplicative and not rz.unital and not rz.injective


def test_regular_embedding_full_and_trivial_subgroup():
    C4 = cyclic(4)
    m1 = regular_coset_embedding(C4, Subgroup.full(C4))
    assert verify_graded_map(m1).all_true()
    assert m1.target.dim == 4  # FH (x) M_1
    m2 = regular_coset_embedding(C4, Subgroup.trivial(C4))
    assert verify_graded_map(m2).all_true()
    assert m2.target.dim == 16  # elementary M_4


def test_regular_embedding_s3_a3():
    S3 = symmetric(3)
    A3 = next(s for s in all_subgroups(S3) if s.order == 3)
    m = regular_coset_embedding(S3, A3)
    r = verify_graded_map(m)
    assert r.all_true()
    assert m.target.dim == 3 * 4


def test_regular_embedding_rejects_bad_transversal():
    S3 = symmetric(3)
    A3 = next(s for s in all_subgroups(S3) if s.order == 3)
    inside = A3.members[:2]  # two elements of the same coset
    with pytest.raises(ValueError):
        regular_coset_embedding(S3, A3, reps=inside)


def test_untwist_trivial_cocycle():
    C2 = cyclic(2)
    m = untwist_embedding(C2, trivial_cocycle(C2, 1))
    r = verify_graded_map(m)
    assert r.all_true()
    assert m.target.dim == 2 * 4  # FH (x) M_|H|


@pytest.mark.parametrize("p", [2, 3])
def test_untwist_heisenberg_clock_shift(p):
    c = heisenberg_cocycle(p, 1)
    m = untwist_embedding(c.group, c, rho=clock_shift_rep(p))
    r = verify_graded_map(m)
    assert r.all_true()
    assert m.target.dim == p * p * p * p  # p^2 (x) M_p


def test_untwist_regular_rho():
    c = heisenberg_cocycle(2, 1)
    m = untwist_embedding(c.group, c)
    r = verify_graded_map(m)
    assert r.all_true()
    assert m.target.dim == 4 * 16


def test_transpose_is_load_bearing():
    c = heisenberg_cocycle(2, 1)
    m = untwist_embedding(c.group, c, rho=clock_shift_rep(2), transpose=False)
    r = verify_graded_map(m)
    assert not r.multiplicative


def test_rho_validation():
    c = heisenberg_cocycle(2, 1)
    with pytest.raises(ValueError):
        untwist_embedding(c.group, c, rho=clock_shift_rep(3))


def test_chain_embedding_examples():
    # H = G with the heisenberg twist
    c = heisenberg_cocycle(2, 1)
    G = c.group
    m = chain_embedding(G, Subgroup.full(G), c, rho=clock_shift_rep(2))
    r = verify_graded_map(m)
    assert r.all_true()
    assert m.target.dim == 4 * 1 * 4  # F^a G (x) M_1 (x) M_2

    S3 = symmetric(3)
    A3 = next(s for s in all_subgroups(S3) if s.order == 3)
    m2 = chain_embedding(S3, A3, trivial_cocycle(A3.as_group(), 1))
    r2 = verify_graded_map(m2)
    assert r2.all_true()


def test_factorization_cocycle_coherence():
    # h_{w,g1 g2} = h_{w,g1} h_{w^g1,g2} and w^(g1 g2) = (w^g1)^g2
    for G, H in [(symmetric(3), None), (dihedral(4), None)]:
        subs = all_subgroups(G)
        H = next(s for s in subs if 1 < s.order < G.order)
        reps = coset_reps(G, H)
        cosets = right_cosets(G, H)
        coset_of = {x: ci for ci, c in enumerate(cosets) for x in c}
        rep_of = {coset_of[w]: w for w in reps}

        def fact(w, g):
            wg = G.mul(w, g)
            wp = rep_of[coset_of[wg]]
            return G.mul(wg, G.inverse(wp)), wp

        for w in reps:
            for g1 in G.elements():
                for g2 in G.elements():
                    h1, w1 = fact(w, g1)
                    h2, w2 = fact(w1, g2)
                    h12, w12 = fact(w, G.mul(g1, g2))
                    assert h12 == G.mul(h1, h2)
                    assert w12 == w2


def test_image_degree_formula():
    # the image term of U_g over coset rep w_i sits in degree g
    S3 = symmetric(3)
    A3 = next(s for s in all_subgroups(S3) if s.order == 3)
    m = regular_coset_embedding(S3, A3)
    for g in S3.elements():
        d = m.target.degree_of_vector(m.images[g])
        assert d == g


def test_codimension_monotone_under_embedding():
    C2 = cyclic(2)
    m = regular_coset_embedding(C2, Subgroup.trivial(C2))
    src, tgt = m.source, m.target
    for n in (1, 2, 3):
        assert codimension(src, n) <= codimension(tgt, n)

"""Constructive graded embeddings: the regular coset embedding of a group
algebra into FH (x) M_k with elementary grading, the cocycle-removing
embedding FH -> F^alpha H (x) M_d, and their composition."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .cyclo import CycloMatrix, CycloScalar, Echelon, zeta
from .groups import FiniteGroup, Subgroup, coset_reps, right_cosets
from .cocycles import TwoCocycle, trivial_cocycle, validate as validate_cocycle
from .galg import (GradedAlgebra, GSimpleData, Vector, build_gsimple,
                   group_algebra, matrix_algebra, tensor_with_trivially_graded,
                   twisted_group_algebra)

__all__ = [
    "GradedMap",
    "MapReport",
    "verify_graded_map",
    "regular_coset_embedding",
    "untwist_embedding",
    "chain_embedding",
    "regular_projective_rep",
    "clock_shift_rep",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class MapReport:
    multiplicative: bool
    unital: bool
    injective: bool
    degree_preserving: bool
    failure: Optional[tuple] = None

    def all_true(self) -> bool:
        return (self.multiplicative and self.unital and self.injective
                and self.degree_preserving)


class GradedMap:
    """Linear map between graded algebras, recorded on source basis elements."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra,
                 images: Sequence[Vector]):
        if len(images) != source.dim:
            raise ValueError("one image per source basis element required")
        if source.modulus != target.modulus:
            raise ValueError("source and target must share the scalar modulus")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple(dict(v) for v in images))

    def __setattr__(self, nm, v):
        raise AttributeError("GradedMap is immutable")

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for i, a in v.items():
            if not a:
                continue
            for k, s in self.images[i].items():
                cur = out.get(k)
                nv = cur + a * s if cur is not None else a * s
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def __repr__(self):
        return f"GradedMap({self.source.name} -> {self.target.name})"


def verify_graded_map(m: GradedMap) -> MapReport:
    """Exhaustive verification: multiplicative on all basis pairs, unital,
    injective (exact rank), and degree preserving on every basis element."""
    src, tgt = m.source, m.target
    multiplicative = True
    failure = None
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = tgt.mul(m.images[i], m.images[j])
            rhs = m.apply(src.mul_basis(i, j))
            if lhs != rhs:
                multiplicative = False
                failure = ("multiplicative", i, j)
                break
        if not multiplicative:
            break
    unital = (src.unit is not None and tgt.unit is not None
              and m.apply(src.unit) == tgt.unit)
    ech = Echelon()
    imrank = 0
    for v in m.images:
        if ech.insert(dict(v)):
            imrank += 1
    injective = imrank == src.dim
    degree_preserving = True
    for i in range(src.dim):
        if not m.images[i]:
            continue
        d = tgt.degree_of_vector(m.images[i])
        # source and target share the grading group element indexing
        if d is None or d != src.degrees[i]:
            degree_preserving = False
            if failure is None:
                failure = ("degree", i)
            break
    return MapReport(multiplicative, unital, injective, degree_preserving,
                     failure)


# ---------------------------------------------------------------------------
# the regular coset embedding FG -> FH (x) M_k


def regular_coset_embedding(G: FiniteGroup, H: Subgroup,
                            reps: Optional[Sequence[int]] = None,
                            modulus: Optional[int] = None) -> GradedMap:
    """psi(U_g) = sum_i V_{h(w_i,g)} (x) E_{i, j(i)} where w_i g = h w_{j(i)}.

    The target is the graded-simple algebra built from (H, trivial cocycle,
    (w_1, ..., w_k)); the factorization data is validated per basis term.
    """
    if H.parent is not G:
        raise ValueError("H is not a subgroup of G")
    if reps is None:
        reps = coset_reps(G, H)
    reps = tuple(int(w) for w in reps)
    cosets = right_cosets(G, H)
    coset_of = {}
    for ci, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = ci
    if sorted(coset_of[w] for w in reps) != list(range(len(cosets))):
        raise ValueError("reps is not a right-coset transversal")
    m = modulus if modulus is not None else G.exponent()
    Hg = H.as_group()
    alpha = trivial_cocycle(Hg, 1)
    data = GSimpleData(G, H, alpha, reps)
    target = build_gsimple(data, modulus=m)
    source = group_algebra(G, modulus=m)
    k = len(reps)
    rep_index = {coset_of[w]: i for i, w in enumerate(reps)}
    one = CycloScalar.one(m)

    def tgt_idx(h, i, j):
        return (h * k + i) * k + j

    images = []
    for g in G.elements():
        vec: Vector = {}
        for i, w in enumerate(reps):
            wg = G.mul(w, g)
            j = rep_index[coset_of[wg]]
            wj = reps[j]
            h_par = G.mul(wg, G.inverse(wj))
            if h_par not in H:
                raise AssertionError("factorization left the subgroup")
            h = H.from_parent(h_par)
            # degree of the image term must be w_i^-1 h w_i^g = g
            term_degree = G.mul(G.mul(G.inverse(w), h_par), wj)
            if term_degree != g:
                raise AssertionError("image term has the wrong degree")
            vec[tgt_idx(h, i, j)] = one
        images.append(vec)
    return GradedMap(source, target, images)


# ---------------------------------------------------------------------------
# the cocycle-removing embedding FH -> F^alpha H (x) M_d


def regular_projective_rep(alpha: TwoCocycle,
                           modulus: Optional[int] = None) -> list[CycloMatrix]:
    """Left regular action of the twisted group algebra on itself:
    rho(V_h)[hl, l] = zeta^a(h, l)."""
    H = alpha.group
    m = modulus if modulus is not None else _lcm(H.exponent(), alpha.modulus)
    zero = CycloScalar.zero(m)
    mats = []
    for h in H.elements():
        entries = [[zero] * H.order for _ in range(H.order)]
        for l in H.elements():
            entries[H.mul(h, l)][l] = alpha.value(h, l, m)
        mats.append(CycloMatrix(entries))
    return mats


def clock_shift_rep(p: int, modulus: Optional[int] = None) -> list[CycloMatrix]:
    """The p-dimensional clock-and-shift assignment for the rank-1 Heisenberg
    cocycle on C_p x C_p: (i, j) -> X^i Y^j with X the cyclic shift and
    Y = diag(1, zeta_p, ..., zeta_p^{p-1}); then X Y = zeta^-1 Y X."""
    m = modulus if modulus is not None else p
    if m % p:
        raise ValueError("modulus must be divisible by p")
    zero = CycloScalar.zero(m)
    mats = []
    for i in range(p):
        for j in range(p):
            entries = [[zero] * p for _ in range(p)]
            for t in range(p):
                # X^i Y^j maps basis vector t to zeta^(j t) e_{t+i}
                entries[(t + i) % p][t] = zeta(m, (m // p) * j * t)
            mats.append(CycloMatrix(entries))
    return mats


def _check_projective(alpha: TwoCocycle, rho: Sequence[CycloMatrix],
                      m: int) -> None:
    H = alpha.group
    if len(rho) != H.order:
        raise ValueError("rho must assign one matrix per group element")
    d = rho[0].rows
    for M in rho:
        if M.rows != d or M.cols != d:
            raise ValueError("rho matrices must share one square size")
    for h1 in H.elements():
        for h2 in H.elements():
            lhs = rho[h1].matmul(rho[h2])
            scale = alpha.value(h1, h2, m)
            rhs = CycloMatrix([[scale * x for x in row]
                               for row in rho[H.mul(h1, h2)].entries])
            if lhs != rhs:
                raise ValueError(
                    f"rho fails alpha-multiplicativity at {(h1, h2)}")


def untwist_embedding(H: FiniteGroup, alpha: TwoCocycle,
                      rho: Optional[Sequence[CycloMatrix]] = None,
                      modulus: Optional[int] = None,
                      transpose: bool = True) -> GradedMap:
    """psi(U_h) = V_h (x) rho(V_h^-1)^t into F^alpha H (x) M_d (M_d trivially
    graded).  ``transpose=False`` builds the deliberately wrong variant used
    as a negative control in tests."""
    if alpha.group is not H and alpha.group.table != H.table:
        raise ValueError("cocycle is not defined on this group")
    check = validate_cocycle(alpha)
    if not check.ok:
        raise ValueError(f"invalid cocycle: {check.reason} at {check.witness}")
    m = modulus if modulus is not None else _lcm(H.exponent(), alpha.modulus)
    if rho is None:
        rho = regular_projective_rep(alpha, modulus=m)
    else:
        rho = [CycloMatrix([[x.with_modulus(m) for x in row] for row in M.entries])
               for M in rho]
    _check_projective(alpha, rho, m)
    d = rho[0].rows
    twisted = twisted_group_algebra(H, alpha, modulus=m)
    Md = matrix_algebra(d, modulus=m)
    target = tensor_with_trivially_graded(twisted, Md)
    source = group_algebra(H, modulus=m)

    images = []
    for h in H.elements():
        hinv = H.inverse(h)
        # V_h^-1 = zeta^-a(h, h^-1) V_{h^-1}
        scale = alpha.value(h, hinv, m).inverse()
        Mh = rho[hinv]
        vec: Vector = {}
        for r in range(d):
            for c in range(d):
                x = Mh.entries[r][c] * scale
                if not x:
                    continue
                if transpose:
                    i, j = c, r
                else:
                    i, j = r, c
                vec[h * (d * d) + (i * d + j)] = x
        images.append(vec)
    return GradedMap(source, target, images)


# ---------------------------------------------------------------------------
# composition: FG -> (F^alpha H (x) M_k) (x) M_d


def chain_embedding(G: FiniteGroup, H: Subgroup, alpha: TwoCocycle,
                    reps: Optional[Sequence[int]] = None,
                    rho: Optional[Sequence[CycloMatrix]] = None,
                    modulus: Optional[int] = None) -> GradedMap:
    """Compose the regular coset embedding with the cocycle-removing one:
    U_g -> sum_i zeta^-a(h_i, h_i^-1) V_{h_i} (x) E_{i,j(i)} (x) rho(V_{h_i}^-1)^t."""
    if H.parent is not G:
        raise ValueError("H is not a subgroup of G")
    Hg = H.as_group()
    if alpha.group is not Hg and alpha.group.table != Hg.table:
        raise ValueError("cocycle is not defined on the subgroup")
    if reps is None:
        reps = coset_reps(G, H)
    reps = tuple(int(w) for w in reps)
    m = modulus if modulus is not None else _lcm(
        G.exponent(), _lcm(alpha.modulus, Hg.exponent()))
    if rho is None:
        rho = regular_projective_rep(alpha, modulus=m)
    else:
        rho = [CycloMatrix([[x.with_modulus(m) for x in row] for row in M.entries])
               for M in rho]
    _check_projective(alpha, rho, m)
    d = rho[0].rows

    data = GSimpleData(G, H, alpha, reps)
    gsimple = build_gsimple(data, modulus=m)
    Md = matrix_algebra(d, modulus=m)
    target = tensor_with_trivially_graded(gsimple, Md)
    source = group_algebra(G, modulus=m)

    cosets = right_cosets(G, H)
    coset_of = {}
    for ci, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = ci
    if sorted(coset_of[w] for w in reps) != list(range(len(cosets))):
        raise ValueError("reps is not a right-coset transversal")
    rep_index = {coset_of[w]: i for i, w in enumerate(reps)}
    k = len(reps)

    images = []
    for g in G.elements():
        vec: Vector = {}
        for i, w in enumerate(reps):
            wg = G.mul(w, g)
            j = rep_index[coset_of[wg]]
            wj = reps[j]
            h_par = G.mul(wg, G.inverse(wj))
            h = H.from_parent(h_par)
            hinv = Hg.inverse(h)
            scale = alpha.value(h, hinv, m).inverse()
            Mh = rho[hinv]
            gs_idx = (h * k + i) * k + j
            for r in range(d):
                for c in range(d):
                    x = Mh.entries[r][c] * scale
                    if x:
                        vec[gs_idx * (d * d) + (c * d + r)] = x
        images.append(vec)
    return GradedMap(source, target, images)

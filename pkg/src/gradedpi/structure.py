"""PI invariants of finite-dimensional algebras: Wedderburn block degrees,
largest character degree of a group, the Giambruno-Zaicev exponent, the
codimension sequence, minimal identity degree, and the permutability link."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import isqrt
from typing import Optional, Sequence

from .cyclo import CycloScalar, Echelon
from .groups import FiniteGroup, ScanResult, cyclic, is_n_permutable
from .galg import (GradedAlgebra, Vector, center_basis, group_algebra,
                   is_strong, trace_radical, _semisimple_quotient_data)
from . import _split

__all__ = [
    "WedderburnReport",
    "ExponentReport",
    "PermutabilityReport",
    "SplittingFailure",
    "BudgetExceeded",
    "wedderburn_degrees",
    "pi_degree_semisimple",
    "gz_exponent",
    "b_of_group",
    "exp_group_algebra",
    "codimension",
    "min_identity_degree",
    "permutability_from_identity",
    "ungraded_view",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10_000_000
_DEGREE_CAP = 6


class SplittingFailure(RuntimeError):
    """The scalar field does not split the algebra: some Wedderburn block has
    a residue field of dimension > 1 over Q(zeta_m)."""

    def __init__(self, message: str, field_degrees: Sequence[int] = ()):
        super().__init__(message)
        self.field_degrees = tuple(field_degrees)


class BudgetExceeded(RuntimeError):
    """A codimension computation was aborted before producing any answer."""


@dataclass(frozen=True)
class WedderburnReport:
    num_blocks: int
    degrees: tuple[int, ...]          # sorted multiset of block degrees
    certified: bool                   # idempotents verified exactly
    idempotents: tuple = field(repr=False, default=())

    def max_degree(self) -> int:
        return max(self.degrees)


@dataclass(frozen=True)
class ExponentReport:
    value: int
    witness: tuple[int, ...]          # sequence of block indices realizing it
    component_dims: tuple[int, ...]   # dims of the simple components of A/J


@dataclass(frozen=True)
class PermutabilityReport:
    identity_degree: int
    codimension: int
    group_permutable: bool
    witness: Optional[tuple[int, ...]]


def ungraded_view(A: GradedAlgebra) -> GradedAlgebra:
    """The same algebra graded trivially (everything in the identity degree)."""
    triv = cyclic(1)
    return GradedAlgebra(A.modulus, A.labels, A.table, triv, [0] * A.dim,
                         A.unit, name=f"{A.name}|ungraded")


# ---------------------------------------------------------------------------
# Wedderburn decomposition


def _as_abelian_group_algebra(A: GradedAlgebra) -> Optional[FiniteGroup]:
    """Recognize an abelian group algebra from the multiplication table alone
    (grading-independent): basis closed under products with coefficient 1 and
    commutative.  Enables the character-formula fast path."""
    if A.unit is None or len(A.unit) != 1:
        return None
    (e, s), = A.unit.items()
    if s != 1:
        return None
    one = CycloScalar.one(A.modulus)
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            cell = A.table[i][j]
            if len(cell) != 1 or cell[0][1] != one:
                return None
            if A.table[j][i] != cell:
                return None
            row.append(cell[0][0])
        table.append(row)
    try:
        G = FiniteGroup(table, name="recognized")
    except ValueError:
        return None
    if G.identity != e or A.modulus % G.exponent():
        return None
    return G


def _extend_character(G: FiniteGroup, m: int, partial: dict[int, int],
                      g: int, k: int) -> Optional[dict[int, int]]:
    """Grow a partial homomorphism G -> Z/m by g -> k, closing under products."""
    new = dict(partial)
    frontier = [(g, k)]
    while frontier:
        x, v = frontier.pop()
        v %= m
        cur = new.get(x)
        if cur is not None:
            if cur != v:
                return None
            continue
        new[x] = v
        for y, w in list(new.items()):
            if y != x:
                frontier.append((G.mul(x, y), v + w))
        frontier.append((G.mul(x, x), v + v))
    return new


def _abelian_characters(G: FiniteGroup, m: int) -> Optional[list[tuple[int, ...]]]:
    """All homomorphisms G -> Z/m (characters into the m-th roots of unity),
    or None when m is not a multiple of exp(G)."""
    if m % G.exponent():
        return None
    chars: list[dict[int, int]] = [{G.identity: 0}]
    while True:
        missing = [g for g in G.elements() if g not in chars[0]]
        if not missing:
            break
        g = missing[0]
        o = G.element_order(g)
        step = m // o
        grown_chars = []
        for chi in chars:
            for k in range(0, m, step):
                grown = _extend_character(G, m, chi, g, k)
                if grown is not None:
                    grown_chars.append(grown)
        chars = grown_chars
        if not chars:
            return None
    if len(chars) != G.order or any(len(c) != G.order for c in chars):
        return None
    return [tuple(c[g] for g in G.elements()) for c in chars]


def _character_idempotents(A: GradedAlgebra, G: FiniteGroup) -> Optional[list[Vector]]:
    chars = _abelian_characters(G, A.modulus)
    if chars is None:
        return None
    from .cyclo import zeta
    m = A.modulus
    inv_order = CycloScalar.from_rational(m, 1) / CycloScalar.from_rational(m, G.order)
    idems = []
    for chi in chars:
        vec: Vector = {}
        for g in G.elements():
            vec[g] = inv_order * zeta(m, -chi[g])
        idems.append(vec)
    try:
        _split._verify_idempotents(A, idems)
    except _split.SplitError:
        return None
    return idems


def wedderburn_degrees(A: GradedAlgebra,
                       rng: Optional[random.Random] = None) -> WedderburnReport:
    """Exact block degrees of a semisimple algebra (ungraded view).

    Raises SplittingFailure when the scalar field leaves some block's center
    larger than one-dimensional, and ValueError on non-semisimple input.
    """
    if A.unit is None:
        raise ValueError("Wedderburn decomposition requires a unital algebra")
    if trace_radical(A):
        raise ValueError("algebra is not semisimple")
    G_ab = _as_abelian_group_algebra(A)
    idems: Optional[list[Vector]] = None
    if G_ab is not None:
        idems = _character_idempotents(A, G_ab)
    if idems is not None:
        field_degrees = [1] * len(idems)
    else:
        zbasis = center_basis(A)
        idems, field_degrees = _split.split_commutative(A, zbasis, rng=rng)
    bad = [d for d in field_degrees if d != 1]
    if bad:
        raise SplittingFailure(
            f"scalar field Q(zeta_{A.modulus}) fails to split {A.name}: "
            f"residue field degrees {sorted(field_degrees)}", field_degrees)
    degrees = []
    for e_i in idems:
        ech = Echelon()
        for j in range(A.dim):
            ech.insert(A.mul(e_i, A.basis_vector(j)))
        dim_block = ech.rank
        d = isqrt(dim_block)
        if d * d != dim_block:
            raise SplittingFailure(
                f"block of dimension {dim_block} is not a matrix algebra "
                f"over Q(zeta_{A.modulus})", field_degrees)
        degrees.append(d)
    return WedderburnReport(num_blocks=len(idems),
                            degrees=tuple(sorted(degrees)),
                            certified=True,
                            idempotents=tuple(idems))


def pi_degree_semisimple(A: GradedAlgebra) -> int:
    """2 * (largest block degree), per the standard-identity bound for M_d."""
    return 2 * wedderburn_degrees(A).max_degree()


def b_of_group(G: FiniteGroup) -> int:
    """Largest irreducible character degree, read off the group algebra."""
    return wedderburn_degrees(ungraded_view(group_algebra(G))).max_degree()


def exp_group_algebra(G: FiniteGroup) -> int:
    b = b_of_group(G)
    return b * b


# ---------------------------------------------------------------------------
# Giambruno-Zaicev exponent


def _vadd(a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for k, s in b.items():
        cur = out.get(k)
        nv = cur + s if cur is not None else s
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _vsub(a: Vector, b: Vector) -> Vector:
    return _vadd(a, {k: -s for k, s in b.items()})


def _vscale(a: Vector, c) -> Vector:
    return {k: s * c for k, s in a.items() if s * c}


def _lift_idempotents(A: GradedAlgebra, keep: Sequence[int],
                      ebars: Sequence[Vector]) -> list[Vector]:
    """Lift orthogonal idempotents of A/J to orthogonal idempotents of A.

    Each preimage is Newton-iterated (e <- 3e^2 - 2e^3) inside the corner
    (1-f)A(1-f) of the previously lifted ones; the last lift is 1 - sum.
    """
    unit = A.unit
    three = A.scalar(3)
    two = A.scalar(2)
    lifted: list[Vector] = []
    f: Vector = {}
    for t, ebar in enumerate(ebars):
        if t == len(ebars) - 1:
            lifted.append(_vsub(unit, f))
            break
        x: Vector = {}
        for q, s in ebar.items():
            x = _vadd(x, {keep[q]: s})
        u = _vsub(unit, f)
        y = A.mul(A.mul(u, x), u)
        for _ in range(64):
            y2 = A.mul(y, y)
            if y2 == y:
                break
            y3 = A.mul(y2, y)
            y = _vsub(_vscale(y2, three), _vscale(y3, two))
        else:
            raise RuntimeError("idempotent lifting did not converge")
        lifted.append(y)
        f = _vadd(f, y)
    return lifted


def gz_exponent(A: GradedAlgebra, rng: Optional[random.Random] = None
                ) -> ExponentReport:
    """max over sequences of distinct lifted idempotents e_{i1},...,e_{ik}
    with e_{i1} A e_{i2} A ... A e_{ik} != 0 of the sum of the corresponding
    simple-component dimensions of A/J."""
    if A.unit is None:
        raise ValueError("exponent computation requires a unital algebra")
    A0 = ungraded_view(A)
    Abar, keep, _jech = _semisimple_quotient_data(A0)
    report = wedderburn_degrees(Abar, rng=rng)
    idems_bar = list(report.idempotents)
    block_dims = []
    for e_i in idems_bar:
        ech = Echelon()
        for j in range(Abar.dim):
            ech.insert(Abar.mul(e_i, Abar.basis_vector(j)))
        block_dims.append(ech.rank)
    lifted = _lift_idempotents(A0, keep, idems_bar)
    # verify the lift exactly
    total: Vector = {}
    for e in lifted:
        if A0.mul(e, e) != e:
            raise RuntimeError("lifted element is not idempotent")
        total = _vadd(total, e)
    if total != A0.unit:
        raise RuntimeError("lifted idempotents do not sum to 1")
    for i in range(len(lifted)):
        for j in range(len(lifted)):
            if i != j and A0.mul(lifted[i], lifted[j]):
                raise RuntimeError("lifted idempotents are not orthogonal")

    s = len(lifted)
    basis_vecs = [A0.basis_vector(j) for j in range(A0.dim)]
    best = 0
    best_seq: tuple[int, ...] = ()

    def extend(span: list[Vector], used: set[int], acc: int, seq: tuple[int, ...]):
        nonlocal best, best_seq
        if acc > best:
            best, best_seq = acc, seq
        for i in range(s):
            if i in used:
                continue
            ech = Echelon()
            for v in span:
                for b in basis_vecs:
                    w = A0.mul(A0.mul(v, b), lifted[i])
                    if w:
                        ech.insert(w)
            nxt = ech.basis()
            if nxt:
                extend(nxt, used | {i}, acc + block_dims[i], seq + (i,))

    for i in range(s):
        extend([lifted[i]], {i}, block_dims[i], (i,))
    return ExponentReport(value=best, witness=best_seq,
                          component_dims=tuple(block_dims))


# ---------------------------------------------------------------------------
# codimension sequence


def codimension(A: GradedAlgebra, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """c_n(A): rank of the multilinear evaluation matrix whose rows are the n!
    permutation monomials and whose columns are (basis tuple, coordinate)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > _DEGREE_CAP:
        raise BudgetExceeded(f"degree {n} exceeds the hard cap {_DEGREE_CAP}")
    if A.dim ** n > budget:
        raise BudgetExceeded(
            f"dim^n = {A.dim ** n} exceeds the budget {budget}")
    perms = list(itertools.permutations(range(n)))
    nfact = len(perms)
    ech = Echelon()
    for tup in itertools.product(range(A.dim), repeat=n):
        evals = []
        for p in perms:
            v = A.basis_vector(tup[p[0]])
            for idx in p[1:]:
                v = A.mul(v, A.basis_vector(tup[idx]))
                if not v:
                    break
            evals.append(v)
        coords = set()
        for v in evals:
            coords.update(v)
        for k in coords:
            col = {pi: v[k] for pi, v in enumerate(evals) if k in v}
            ech.insert(col)
        if ech.rank == nfact:
            return nfact
    return ech.rank


def min_identity_degree(A: GradedAlgebra, cap: int,
                        budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Least n <= cap with c_n(A) < n!, or None if no identity shows up."""
    fact = 1
    for n in range(1, cap + 1):
        fact *= n
        if codimension(A, n, budget) < fact:
            return n
    return None


def permutability_from_identity(A: GradedAlgebra, n: int,
                                budget: int = DEFAULT_BUDGET
                                ) -> PermutabilityReport:
    """Check the implication instance: a multilinear identity of degree n on a
    strongly graded A forces the grading group to be n-permutable."""
    c = codimension(A, n, budget)
    fact = 1
    for t in range(1, n + 1):
        fact *= t
    if c >= fact:
        raise ValueError(f"degree {n} is not an identity degree: c_n = {c} = n!")
    if not is_strong(A):
        raise ValueError("grading is not strong; hypothesis unverified")
    scan: ScanResult = is_n_permutable(A.group, n)
    return PermutabilityReport(identity_degree=n, codimension=c,
                               group_permutable=scan.holds,
                               witness=scan.witness)

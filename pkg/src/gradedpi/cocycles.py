"""Normalized 2-cocycles valued in roots of unity, coboundaries, the
commutation bicharacter on abelian groups, and the Heisenberg family."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cyclo import CycloScalar, zeta
from .groups import FiniteGroup, Subgroup, cyclic, direct_product

__all__ = [
    "TwoCocycle",
    "Bicharacter",
    "CocycleCheck",
    "validate",
    "trivial_cocycle",
    "coboundary",
    "multiply",
    "bicharacter_mu",
    "radical",
    "is_nondegenerate",
    "heisenberg_cocycle",
    "heisenberg_group",
    "cocycle_from_extension",
]


@dataclass(frozen=True)
class CocycleCheck:
    ok: bool
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class TwoCocycle:
    """A 2-cocycle on a finite group with values zeta_m^a(g,h), stored by exponents.

    Construction normalizes at the identity by subtracting the constant
    coboundary a(e,e), so U_e is always the unit of the twisted algebra.
    """

    __slots__ = ("group", "modulus", "exps")

    def __init__(self, group: FiniteGroup, modulus: int,
                 exps: Sequence[Sequence[int]], normalize: bool = True):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        n = group.order
        table = [[int(x) % modulus for x in row] for row in exps]
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError("exponent table has wrong shape")
        if normalize:
            c = table[group.identity][group.identity]
            if c:
                table = [[(x - c) % modulus for x in row] for row in table]
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "exps", tuple(tuple(r) for r in table))

    def __setattr__(self, nm, v):
        raise AttributeError("TwoCocycle is immutable")

    def exponent(self, g: int, h: int) -> int:
        return self.exps[g][h]

    def value(self, g: int, h: int, modulus: Optional[int] = None) -> CycloScalar:
        """zeta_m^a(g,h), optionally embedded into a larger cyclotomic field."""
        v = zeta(self.modulus, self.exps[g][h])
        if modulus is not None and modulus != self.modulus:
            v = v.with_modulus(modulus)
        return v

    def with_modulus(self, m: int) -> "TwoCocycle":
        if m % self.modulus:
            raise ValueError("new modulus must be a multiple of the old one")
        step = m // self.modulus
        return TwoCocycle(self.group, m,
                          [[x * step for x in row] for row in self.exps],
                          normalize=False)

    def is_trivial(self) -> bool:
        return all(x == 0 for row in self.exps for x in row)

    def __eq__(self, other):
        return (isinstance(other, TwoCocycle) and other.group is self.group
                and other.modulus == self.modulus and other.exps == self.exps)

    def __hash__(self):
        return hash((id(self.group), self.modulus, self.exps))

    def __repr__(self):
        return f"TwoCocycle({self.group.name}, m={self.modulus})"


def validate(c: TwoCocycle) -> CocycleCheck:
    """Check normalization and the cocycle identity; returns a witness on failure."""
    G, m, a = c.group, c.modulus, c.exps
    e = G.identity
    for g in G.elements():
        if a[e][g] % m:
            return CocycleCheck(False, (e, g), "not normalized at (e, g)")
        if a[g][e] % m:
            return CocycleCheck(False, (g, e), "not normalized at (g, e)")
    for g in G.elements():
        for h in G.elements():
            gh = G.mul(g, h)
            for k in G.elements():
                if (a[g][h] + a[gh][k]) % m != (a[h][k] + a[g][G.mul(h, k)]) % m:
                    return CocycleCheck(False, (g, h, k), "cocycle identity fails")
    return CocycleCheck(True)


def trivial_cocycle(G: FiniteGroup, m: int = 1) -> TwoCocycle:
    zero = [[0] * G.order for _ in range(G.order)]
    return TwoCocycle(G, m, zero, normalize=False)


def coboundary(G: FiniteGroup, m: int, b: Sequence[int]) -> TwoCocycle:
    """(delta b)(g,h) = b(g) + b(h) - b(gh) mod m, for b with b(e) = 0."""
    if len(b) != G.order:
        raise ValueError("b must assign a value to every element")
    if b[G.identity] % m:
        raise ValueError("b(e) must be 0")
    exps = [[(b[g] + b[h] - b[G.mul(g, h)]) % m for h in G.elements()]
            for g in G.elements()]
    return TwoCocycle(G, m, exps, normalize=False)


def multiply(c1: TwoCocycle, c2: TwoCocycle) -> TwoCocycle:
    if c1.group is not c2.group:
        raise ValueError("cocycles live on different groups")
    if c1.modulus != c2.modulus:
        raise ValueError(f"modulus mismatch: {c1.modulus} vs {c2.modulus}")
    exps = [[(x + y) % c1.modulus for x, y in zip(r1, r2)]
            for r1, r2 in zip(c1.exps, c2.exps)]
    return TwoCocycle(c1.group, c1.modulus, exps, normalize=False)


class Bicharacter:
    """Antisymmetric pairing mu(g,h) = a(g,h) - a(h,g) on an abelian group."""

    __slots__ = ("group", "modulus", "exps")

    def __init__(self, group: FiniteGroup, modulus: int,
                 exps: Sequence[Sequence[int]]):
        if not group.is_abelian():
            raise ValueError("bicharacters require an abelian group")
        table = tuple(tuple(int(x) % modulus for x in row) for row in exps)
        for g in group.elements():
            if table[g][g] % modulus:
                raise ValueError("diagonal of an antisymmetric pairing must vanish")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "exps", table)

    def __setattr__(self, nm, v):
        raise AttributeError("Bicharacter is immutable")

    def exponent(self, g: int, h: int) -> int:
        return self.exps[g][h]

    def is_bilinear(self) -> bool:
        G, m, mu = self.group, self.modulus, self.exps
        for g1 in G.elements():
            for g2 in G.elements():
                g12 = G.mul(g1, g2)
                for h in G.elements():
                    if (mu[g12][h] - mu[g1][h] - mu[g2][h]) % m:
                        return False
                    if (mu[h][g12] - mu[h][g1] - mu[h][g2]) % m:
                        return False
        return True

    def __repr__(self):
        return f"Bicharacter({self.group.name}, m={self.modulus})"


def bicharacter_mu(c: TwoCocycle) -> Bicharacter:
    """The commutation pairing of a cocycle on an abelian group."""
    G = c.group
    if not G.is_abelian():
        raise ValueError("mu is defined only for abelian grading groups")
    m = c.modulus
    exps = [[(c.exps[g][h] - c.exps[h][g]) % m for h in G.elements()]
            for g in G.elements()]
    return Bicharacter(G, m, exps)


def radical(mu: Bicharacter) -> Subgroup:
    """Elements pairing trivially with the whole group; always a subgroup."""
    G, m = mu.group, mu.modulus
    members = [h for h in G.elements()
               if all(mu.exps[h][g] % m == 0 for g in G.elements())]
    return Subgroup(G, members)


def is_nondegenerate(mu: Bicharacter) -> bool:
    return radical(mu).order == 1


# ---------------------------------------------------------------------------
# Heisenberg family on C_p^(2n)


def heisenberg_group(p: int, n: int = 1) -> FiniteGroup:
    """C_p^(2n) with coordinates (i_1, j_1, ..., i_n, j_n) in mixed radix."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = [cyclic(p) for _ in range(2 * n)]
    G = direct_product(*factors)
    return G


def _heis_coords(p: int, n: int, x: int) -> list[int]:
    out = []
    for _ in range(2 * n):
        x, r = divmod(x, p)
        out.append(r)
    return out[::-1]


def heisenberg_cocycle(p: int, n: int = 1) -> TwoCocycle:
    """n-fold orthogonal sum of the rank-1 cocycle a((i,j),(i',j')) = j*i' mod p."""
    G = heisenberg_group(p, n)
    exps = []
    coords = [_heis_coords(p, n, x) for x in G.elements()]
    for u in G.elements():
        cu = coords[u]
        row = []
        for v in G.elements():
            cv = coords[v]
            row.append(sum(cu[2 * t + 1] * cv[2 * t] for t in range(n)) % p)
        exps.append(row)
    return TwoCocycle(G, p, exps, normalize=False)


# ---------------------------------------------------------------------------
# cocycles from central extensions


def cocycle_from_extension(E: FiniteGroup, Z: Subgroup,
                           reps: Optional[Sequence[int]] = None,
                           generator: Optional[int] = None) -> TwoCocycle:
    """Cocycle on E/Z from a section of a central cyclic Z, via s(g)s(h) = z^a s(gh).

    The returned cocycle lives on the quotient group built by ``groups.quotient``;
    the chosen generator of Z is identified with 1 in Z/m.
    """
    from .groups import quotient  # deferred: groups must not import cocycles

    if Z.parent is not E:
        raise ValueError("Z is not a subgroup of E")
    if not Z.is_central():
        raise ValueError("Z is not central in E")
    m = Z.order
    if generator is None:
        generator = next((x for x in Z.members if E.element_order(x) == m), None)
        if generator is None:
            raise ValueError("Z is not cyclic")
    elif E.element_order(generator) != m or generator not in Z:
        raise ValueError("generator does not generate Z")
    powers = {}
    x = E.identity
    for k in range(m):
        powers[x] = k
        x = E.mul(x, generator)
    Q, proj = quotient(E, Z)
    if reps is None:
        reps = [None] * Q.order
        reps[proj[E.identity]] = E.identity
        for x in sorted(E.elements()):
            if reps[proj[x]] is None:
                reps[proj[x]] = x
    else:
        reps = list(reps)
        if len(reps) != Q.order or sorted(proj[r] for r in reps) != list(Q.elements()):
            raise ValueError("reps is not a transversal of Z in E")
        if reps[proj[E.identity]] != E.identity:
            raise ValueError("the identity coset must be represented by the identity")
        reps = [reps[[proj[r] for r in reps].index(q)] for q in Q.elements()]
    section = list(reps)
    exps = []
    for g in Q.elements():
        row = []
        sg = section[g]
        for h in Q.elements():
            t = E.mul(sg, section[h])
            r = section[Q.mul(g, h)]
            delta = E.mul(t, E.inverse(r))
            if delta not in powers:
                raise ValueError("section is inconsistent with Z")
            row.append(powers[delta])
        exps.append(row)
    c = TwoCocycle(Q, m, exps, normalize=False)
    check = validate(c)
    if not check.ok:
        raise AssertionError(f"extension produced an invalid cocycle: {check}")
    return c

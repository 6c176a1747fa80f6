"""Finite groups as Cayley tables: constructors, subgroups, cosets, quotients,
central extensions and the tuple-permutability analyzers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "ScanResult",
    "make_group",
    "cyclic",
    "direct_product",
    "symmetric",
    "alternating",
    "dihedral",
    "quaternion8",
    "sl2_3",
    "from_table",
    "all_subgroups",
    "subgroups_up_to_index",
    "min_abelian_index",
    "right_cosets",
    "coset_reps",
    "quotient",
    "is_n_permutable",
    "is_n_rewritable",
    "central_extension",
    "are_isomorphic",
]


def _validate_table(table: Sequence[Sequence[int]]) -> int:
    """Check group axioms exhaustively; returns the identity index."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ValueError("malformed Cayley table")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")
    for a in range(n):
        if identity not in table[a]:
            raise ValueError(f"element {a} has no inverse")
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = ta[b]
            tb = table[b]
            for c in range(n):
                if table[tab][c] != ta[tb[c]]:
                    raise ValueError(f"table not associative at {(a, b, c)}")
    return identity


class FiniteGroup:
    """A finite group given by its Cayley table on element indices 0..n-1."""

    __slots__ = ("order", "table", "identity", "labels", "name",
                 "_inv", "_orders", "_abelian")

    def __init__(self, table: Sequence[Sequence[int]],
                 labels: Optional[Sequence[str]] = None,
                 name: str = "G", validate: bool = True):
        tbl = tuple(tuple(int(x) for x in row) for row in table)
        if validate:
            identity = _validate_table(tbl)
        else:
            n = len(tbl)
            identity = next(e for e in range(n)
                            if all(tbl[e][x] == x for x in range(n)))
        object.__setattr__(self, "order", len(tbl))
        object.__setattr__(self, "table", tbl)
        object.__setattr__(self, "identity", identity)
        if labels is None:
            labels = tuple(str(i) for i in range(len(tbl)))
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "name", name)
        inv = [None] * len(tbl)
        for a in range(len(tbl)):
            inv[a] = tbl[a].index(identity)
        object.__setattr__(self, "_inv", tuple(inv))
        object.__setattr__(self, "_orders", None)
        object.__setattr__(self, "_abelian", None)

    def __setattr__(self, nm, value):
        raise AttributeError("FiniteGroup is immutable")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(a), -k)
        r = self.identity
        while k:
            if k & 1:
                r = self.table[r][a]
            a = self.table[a][a]
            k >>= 1
        return r

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            object.__setattr__(self, "_orders",
                               tuple(self.element_order(a) for a in self.elements()))
        return self._orders

    def exponent(self) -> int:
        exp = 1
        for o in self.element_orders():
            exp = exp * o // _gcd(exp, o)
        return exp

    def is_abelian(self) -> bool:
        if self._abelian is None:
            ab = all(self.table[a][b] == self.table[b][a]
                     for a in self.elements() for b in range(a))
            object.__setattr__(self, "_abelian", ab)
        return self._abelian

    def center_members(self) -> tuple[int, ...]:
        return tuple(a for a in self.elements()
                     if all(self.table[a][b] == self.table[b][a]
                            for b in self.elements()))

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 a g."""
        return self.table[self.table[self.inverse(g)][a]][g]

    def label(self, a: int) -> str:
        return self.labels[a]

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, labels, name=f"C{n}")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    if len(factors) < 2:
        raise ValueError("need at least two factors")
    orders = [g.order for g in factors]
    n = 1
    for o in orders:
        n *= o

    def decode(x: int) -> list[int]:
        out = []
        for o in reversed(orders):
            x, r = divmod(x, o)
            out.append(r)
        return out[::-1]

    def encode(parts: Sequence[int]) -> int:
        x = 0
        for p, o in zip(parts, orders):
            x = x * o + p
        return x

    table = []
    for a in range(n):
        pa = decode(a)
        row = []
        for b in range(n):
            pb = decode(b)
            row.append(encode([g.mul(x, y) for g, x, y in zip(factors, pa, pb)]))
        table.append(row)
    labels = ["(" + ",".join(g.label(p) for g, p in zip(factors, decode(x))) + ")"
              for x in range(n)]
    name = "x".join(g.name for g in factors)
    return FiniteGroup(table, labels, name=name)


def _perm_mul(p: tuple, q: tuple) -> tuple:
    # (p*q)(x) = p(q(x))
    return tuple(p[q[i]] for i in range(len(p)))


def symmetric(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_perm_mul(p, q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels, name=f"S{n}")


def _perm_sign(p: tuple) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, clen = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                clen += 1
            if clen % 2 == 0:
                sign = -sign
    return sign


def alternating(n: int) -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_perm_mul(p, q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^i and reflections r^i s."""
    if n < 1:
        raise ValueError("n must be positive")

    def mul(a, b):
        i, si = a % n, a // n
        j, sj = b % n, b // n
        if si == 0:
            return ((i + j) % n) + n * sj
        return ((i - j) % n) + n * (1 - sj)

    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    labels = [f"r^{i}" for i in range(n)] + [f"r^{i}s" for i in range(n)]
    return FiniteGroup(table, labels, name=f"D{n}")


def quaternion8() -> FiniteGroup:
    # elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    axis = [0, 0, 1, 1, 2, 2, 3, 3]  # 0 = scalar, 1..3 = i, j, k
    sgn = [1, -1, 1, -1, 1, -1, 1, -1]
    prod = {  # quaternion unit products: (axis, axis) -> (axis, sign)
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (2, 0): (2, 1), (3, 0): (3, 1),
        (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
        (1, 2): (3, 1), (2, 1): (3, -1),
        (2, 3): (1, 1), (3, 2): (1, -1),
        (3, 1): (2, 1), (1, 3): (2, -1),
    }

    def enc(ax, s):
        base = {0: 0, 1: 2, 2: 4, 3: 6}[ax]
        return base if s == 1 else base + 1

    table = []
    for a in range(8):
        row = []
        for b in range(8):
            ax, s = prod[(axis[a], axis[b])]
            row.append(enc(ax, s * sgn[a] * sgn[b]))
        table.append(row)
    return FiniteGroup(table, names, name="Q8")


def sl2_3() -> FiniteGroup:
    """SL(2,3): 2x2 matrices of determinant 1 over Z/3, in lexicographic order."""
    mats = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 == 1:
            mats.append((a, b, c, d))
    index = {m: i for i, m in enumerate(mats)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = [[index[mul(x, y)] for y in mats] for x in mats]
    labels = [f"[{a}{b};{c}{d}]" for a, b, c, d in mats]
    return FiniteGroup(table, labels, name="SL(2,3)")


def from_table(table: Sequence[Sequence[int]],
               labels: Optional[Sequence[str]] = None,
               name: str = "G") -> FiniteGroup:
    return FiniteGroup(table, labels, name=name)


_KINDS = {
    "cyclic": lambda n: cyclic(int(n)),
    "symmetric": lambda n: symmetric(int(n)),
    "alternating": lambda n: alternating(int(n)),
    "dihedral": lambda n: dihedral(int(n)),
    "quaternion8": lambda: quaternion8(),
    "sl23": lambda: sl2_3(),
}


def make_group(kind: str, *params) -> FiniteGroup:
    """Constructor dispatch shared with the scenario format."""
    if kind == "direct_product":
        return direct_product(*params)
    if kind == "from_table":
        return from_table(*params)
    fn = _KINDS.get(kind)
    if fn is None:
        raise ValueError(f"unknown group kind {kind!r}")
    return fn(*params)


# ---------------------------------------------------------------------------
# subgroups


class Subgroup:
    """A validated subgroup of a parent group, stored as a sorted member tuple."""

    __slots__ = ("parent", "members", "_index", "_as_group")

    def __init__(self, parent: FiniteGroup, members: Iterable[int],
                 validate: bool = True):
        ms = tuple(sorted(set(int(x) for x in members)))
        if validate:
            mset = set(ms)
            if parent.identity not in mset:
                raise ValueError("subgroup must contain the identity")
            for a in ms:
                if parent.inverse(a) not in mset:
                    raise ValueError("subgroup not closed under inverse")
                for b in ms:
                    if parent.mul(a, b) not in mset:
                        raise ValueError("subgroup not closed under product")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(ms)})
        object.__setattr__(self, "_as_group", None)

    def __setattr__(self, nm, value):
        raise AttributeError("Subgroup is immutable")

    @classmethod
    def generated(cls, parent: FiniteGroup, gens: Iterable[int]) -> "Subgroup":
        members = {parent.identity}
        frontier = list(set(gens))
        members.update(frontier)
        while frontier:
            new = []
            for a in list(members):
                for b in frontier:
                    for x in (parent.mul(a, b), parent.mul(b, a)):
                        if x not in members:
                            members.add(x)
                            new.append(x)
            frontier = new
        # closure under inverse comes free for finite groups
        return cls(parent, members, validate=False)

    @classmethod
    def full(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, parent.elements(), validate=False)

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, (parent.identity,), validate=False)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, x: int) -> bool:
        return x in self._index

    def is_abelian(self) -> bool:
        g = self.parent
        return all(g.mul(a, b) == g.mul(b, a)
                   for a in self.members for b in self.members)

    def is_normal(self) -> bool:
        g = self.parent
        mset = set(self.members)
        return all(g.conjugate(a, x) in mset
                   for a in self.members for x in g.elements())

    def is_central(self) -> bool:
        g = self.parent
        return all(g.mul(a, x) == g.mul(x, a)
                   for a in self.members for x in g.elements())

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; element i is self.members[i]."""
        if self._as_group is None:
            idx = self._index
            tbl = [[idx[self.parent.mul(a, b)] for b in self.members]
                   for a in self.members]
            labels = [self.parent.label(a) for a in self.members]
            grp = FiniteGroup(tbl, labels, name=f"{self.parent.name}-sub{self.order}",
                              validate=False)
            object.__setattr__(self, "_as_group", grp)
        return self._as_group

    def to_parent(self, i: int) -> int:
        return self.members[i]

    def from_parent(self, x: int) -> int:
        return self._index[x]

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name})"


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All subgroups, by closure of cyclic subgroups under pairwise joins."""
    found: dict[tuple, frozenset] = {}

    def add(members: frozenset):
        key = tuple(sorted(members))
        if key not in found:
            found[key] = members

    add(frozenset({G.identity}))
    for a in G.elements():
        members = {G.identity}
        x = a
        while x != G.identity:
            members.add(x)
            x = G.mul(x, a)
        add(frozenset(members))
    changed = True
    while changed:
        changed = False
        keys = list(found.values())
        for h1 in keys:
            for h2 in keys:
                if h1 is h2 or h1 <= h2 or h2 <= h1:
                    continue
                join = Subgroup.generated(G, h1 | h2)
                fs = frozenset(join.members)
                key = tuple(sorted(fs))
                if key not in found:
                    found[key] = fs
                    changed = True
    return sorted((Subgroup(G, ms, validate=False) for ms in found.values()),
                  key=lambda s: (s.order, s.members))


def subgroups_up_to_index(G: FiniteGroup, d: int) -> list[Subgroup]:
    """All subgroups H with [G:H] <= d."""
    if d < 1:
        raise ValueError("index bound must be positive")
    return [H for H in all_subgroups(G) if H.index <= d]


def min_abelian_index(G: FiniteGroup) -> int:
    """Smallest index of an abelian subgroup."""
    best = G.order
    for H in all_subgroups(G):
        if H.index < best and H.is_abelian():
            best = H.index
    return best


def right_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Partition of G into right cosets Hg; the identity coset comes first."""
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    seen = set()
    cosets = []
    order = [G.identity] + [x for x in G.elements() if x != G.identity]
    for g in order:
        if g in seen:
            continue
        coset = tuple(sorted(G.mul(h, g) for h in H.members))
        seen.update(coset)
        cosets.append(coset)
    return cosets


def coset_reps(G: FiniteGroup, H: Subgroup) -> tuple[int, ...]:
    """One representative per right coset; the identity represents H itself."""
    reps = []
    for coset in right_cosets(G, H):
        reps.append(G.identity if G.identity in coset else min(coset))
    return tuple(reps)


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient group G/N together with the projection map on element indices."""
    if not N.is_normal():
        raise ValueError("subgroup is not normal")
    cosets = right_cosets(G, N)
    coset_of = {}
    for i, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = i
    table = [[coset_of[G.mul(cosets[i][0], cosets[j][0])]
              for j in range(len(cosets))] for i in range(len(cosets))]
    labels = ["[" + G.label(min(c)) + "]" for c in cosets]
    Q = FiniteGroup(table, labels, name=f"{G.name}/N{N.order}")
    projection = tuple(coset_of[x] for x in G.elements())
    return Q, projection


# ---------------------------------------------------------------------------
# permutability / rewritability


@dataclass(frozen=True)
class ScanResult:
    """Outcome of an exhaustive tuple scan, with a counterexample when false."""
    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _tuple_products(G: FiniteGroup, tup: Sequence[int], perms) -> Iterable[int]:
    for p in perms:
        x = tup[p[0]]
        for i in p[1:]:
            x = G.table[x][tup[i]]
        yield x


def is_n_permutable(G: FiniteGroup, n: int) -> ScanResult:
    """P_n: every n-tuple has a nontrivial reordering with the same product."""
    if n < 2:
        raise ValueError("n must be at least 2")
    perms = list(itertools.permutations(range(n)))[1:]  # skip identity
    table = G.table
    for tup in itertools.product(G.elements(), repeat=n):
        # cheap pre-check: an adjacent commuting pair settles the tuple
        if any(table[tup[i]][tup[i + 1]] == table[tup[i + 1]][tup[i]]
               for i in range(n - 1)):
            continue
        base = tup[0]
        for x in tup[1:]:
            base = table[base][x]
        ok = False
        for p in perms:
            y = tup[p[0]]
            for i in p[1:]:
                y = table[y][tup[i]]
            if y == base:
                ok = True
                break
        if not ok:
            return ScanResult(False, tup)
    return ScanResult(True)


def is_n_rewritable(G: FiniteGroup, n: int) -> ScanResult:
    """Q_n: every n-tuple has two distinct reorderings with equal products."""
    if n < 2:
        raise ValueError("n must be at least 2")
    perms = list(itertools.permutations(range(n)))
    table = G.table
    for tup in itertools.product(G.elements(), repeat=n):
        if any(table[tup[i]][tup[i + 1]] == table[tup[i + 1]][tup[i]]
               for i in range(n - 1)):
            continue
        seen = set()
        ok = False
        for p in perms:
            y = tup[p[0]]
            for i in p[1:]:
                y = table[y][tup[i]]
            if y in seen:
                ok = True
                break
            seen.add(y)
        if not ok:
            return ScanResult(False, tup)
    return ScanResult(True)


# ---------------------------------------------------------------------------
# central extensions


def central_extension(G: FiniteGroup, m: int, cocycle) -> FiniteGroup:
    """Group on pairs (z, g), z in Z/m, with (z1,g1)(z2,g2) = (z1+z2+a(g1,g2), g1*g2).

    The cocycle is any object with fields ``group``, ``modulus`` and ``exps``;
    its cocycle identity is revalidated here because associativity of the
    result is exactly that identity.
    """
    if cocycle.modulus != m:
        raise ValueError("cocycle modulus does not match m")
    a = cocycle.exps
    n = G.order
    e = G.identity
    for g in G.elements():
        if a[e][g] % m or a[g][e] % m:
            raise ValueError("cocycle is not normalized")
    for g in G.elements():
        for h in G.elements():
            for k in G.elements():
                if (a[g][h] + a[G.mul(g, h)][k]) % m != (a[h][k] + a[g][G.mul(h, k)]) % m:
                    raise ValueError(f"cocycle identity violated at {(g, h, k)}")

    def enc(z, g):
        return z * n + g

    table = []
    for z1 in range(m):
        for g1 in G.elements():
            row = []
            for z2 in range(m):
                for g2 in G.elements():
                    row.append(enc((z1 + z2 + a[g1][g2]) % m, G.mul(g1, g2)))
            table.append(row)
    labels = [f"z^{z}|{G.label(g)}" for z in range(m) for g in G.elements()]
    E = FiniteGroup(table, labels, name=f"Ext({G.name},{m})",
                    validate=(m * n <= 128))
    center = {enc(z, G.identity) for z in range(m)}
    for x in center:
        for y in E.elements():
            if E.mul(x, y) != E.mul(y, x):
                raise ValueError("fiber is not central; invalid cocycle data")
    return E


# ---------------------------------------------------------------------------
# isomorphism testing (used by the test suite on small orders)


def _generating_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = Subgroup.trivial(G)
    for x in sorted(G.elements(), key=lambda a: -G.element_order(a)):
        if x not in span:
            gens.append(x)
            span = Subgroup.generated(G, gens)
            if span.order == G.order:
                break
    return gens


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Backtracking search over generator images; intended for order <= 24."""
    if G.order != H.order:
        return False
    if sorted(G.element_orders()) != sorted(H.element_orders()):
        return False
    gens = _generating_sequence(G)
    h_by_order: dict[int, list[int]] = {}
    for x in H.elements():
        h_by_order.setdefault(H.element_order(x), []).append(x)

    def extend(mapping: dict[int, int], g: int, h: int) -> Optional[dict[int, int]]:
        # grow the partial homomorphism by g -> h, closing under products
        new = dict(mapping)
        if g in new:
            return new if new[g] == h else None
        new[g] = h
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(new):
                for p, q in ((G.mul(x, y), H.mul(new[x], new[y])),
                             (G.mul(y, x), H.mul(new[y], new[x]))):
                    cur = new.get(p)
                    if cur is None:
                        new[p] = q
                        frontier.append(p)
                    elif cur != q:
                        return None
        return new

    def search(i: int, mapping: dict[int, int]) -> bool:
        if i == len(gens):
            return len(mapping) == G.order and len(set(mapping.values())) == G.order
        g = gens[i]
        if g in mapping:
            return search(i + 1, mapping)
        for h in h_by_order.get(G.element_order(g), ()):
            if h in mapping.values():
                continue
            grown = extend(mapping, g, h)
            if grown is not None and search(i + 1, grown):
                return True
        return False

    return search(0, {G.identity: H.identity})

"""Internal engine: exact splitting of commutative semisimple subalgebras over
Q(zeta_m) into primitive idempotents.

The route is fully exact: pick a separating element z of the subalgebra,
compute its minimal polynomial by Krylov iteration, factor that polynomial
over Q(zeta_m) with a norm/resultant reduction to factoring over Q (sympy does
the rational factorization), and assemble the idempotents by CRT.  Linear
factors correspond to one-dimensional factor fields; higher-degree factors are
reported so callers can distinguish "split" from "merely decomposed".
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .cyclo import CycloMatrix, CycloScalar, Echelon, solve

Vector = dict[int, CycloScalar]
Poly = list[CycloScalar]  # dense, constant term first


class SplitError(RuntimeError):
    """Internal failure of the splitting engine (not a field obstruction)."""


# ---------------------------------------------------------------------------
# polynomials over Q(zeta_m)


def _ptrim(p: Poly) -> Poly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _padd(p: Poly, q: Poly, m: int) -> Poly:
    n = max(len(p), len(q))
    zero = CycloScalar.zero(m)
    out = [(p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero)
           for i in range(n)]
    return _ptrim(out)


def _pmul(p: Poly, q: Poly, m: int) -> Poly:
    if not p or not q:
        return []
    zero = CycloScalar.zero(m)
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return _ptrim(out)


def _pscale(p: Poly, c: CycloScalar) -> Poly:
    return _ptrim([a * c for a in p])


def _pdivmod(num: Poly, den: Poly, m: int) -> tuple[Poly, Poly]:
    num = list(num)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = den[-1].inverse()
    qlen = max(0, len(num) - len(den) + 1)
    q = [CycloScalar.zero(m)] * qlen
    for k in range(qlen - 1, -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] = num[k + i] - c * d
    return _ptrim(q), _ptrim(num[: len(den) - 1])


def _pmonic(p: Poly) -> Poly:
    if not p:
        return p
    inv = p[-1].inverse()
    return [a * inv for a in p]


def _pgcd(p: Poly, q: Poly, m: int) -> Poly:
    a, b = list(p), list(q)
    while b:
        _, r = _pdivmod(a, b, m)
        a, b = b, r
    return _pmonic(a)


def _pderiv(p: Poly, m: int) -> Poly:
    return _ptrim([p[i] * CycloScalar.from_rational(m, i)
                   for i in range(1, len(p))])


def _pshift(p: Poly, c: CycloScalar, m: int) -> Poly:
    """p(x + c) by Horner."""
    out: Poly = []
    for coeff in reversed(p):
        out = _padd(_pmul(out, [c, CycloScalar.one(m)], m), [coeff], m)
    return out


def _pxgcd_modinv(u: Poly, h: Poly, m: int) -> Poly:
    """Inverse of u modulo h (both in Q(zeta_m)[x]), assuming gcd(u, h) = 1."""
    r0, r1 = list(h), list(u)
    s0, s1 = [], [CycloScalar.one(m)]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1, m)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pscale(_pmul(q, s1, m), -CycloScalar.one(m)), m)
    if not r1:
        raise SplitError("factors are not coprime")
    inv = r1[0].inverse()
    _, red = _pdivmod(_pscale(s1, inv), h, m)
    return red


# ---------------------------------------------------------------------------
# norm-based factorization over Q(zeta_m) (Trager reduction)


def _galois_image(x: CycloScalar, j: int) -> CycloScalar:
    """The automorphism zeta -> zeta^j applied to x (j coprime to the modulus)."""
    from .cyclo import zeta
    m = x.modulus
    acc = CycloScalar.zero(m)
    for t, c in enumerate(x.coeffs):
        if c:
            acc = acc + c * zeta(m, j * t)
    return acc


def _norm_to_rationals(g: Poly, m: int) -> list[Fraction]:
    """prod over Gal(Q(zeta_m)/Q) of sigma_j(g), verified to have coefficients
    in Q; equals Res_y(Phi_m(y), g_y(x)) since Phi_m is monic."""
    from math import gcd
    prod: Poly = [CycloScalar.one(m)]
    for j in range(1, m + 1):
        if gcd(j, m) == 1:
            conj = [_galois_image(c, j) for c in g]
            prod = _pmul(prod, conj, m)
    out = []
    for c in prod:
        if not c.is_rational():
            raise SplitError("norm polynomial is not rational")
        out.append(c.rational_value())
    return out


def _rational_factor(coeffs: list[Fraction]) -> Optional[list[list[Fraction]]]:
    """Monic irreducible factors over Q, or None if not squarefree."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="QQ")
    factors = []
    for fac, mult in poly.factor_list()[1]:
        if mult != 1:
            return None
        fc = [Fraction(c.p, c.q) for c in reversed(fac.monic().all_coeffs())]
        factors.append(fc)
    return factors


def factor_over_field(f: Poly, m: int) -> list[Poly]:
    """Monic irreducible factors of a squarefree f over Q(zeta_m) (Trager)."""
    from .cyclo import zeta
    f = _pmonic(list(f))
    if len(f) <= 1:
        raise ValueError("constant polynomial")
    if len(f) == 2:
        return [f]
    one = CycloScalar.one(m)
    theta = zeta(m, 1)
    for shift in (0, 1, -1, 2, -2, 3, -3, 5, -5, 7):
        s = CycloScalar.from_rational(m, shift)
        g = _pshift(f, -s * theta, m) if shift else list(f)
        norm = _norm_to_rationals(g, m)
        rational_factors = _rational_factor(norm)
        if rational_factors is None:
            continue  # norm not squarefree: this shift does not separate
        out = []
        for rf in rational_factors:
            lifted = [CycloScalar.from_rational(m, c) for c in rf]
            shifted = _pshift(lifted, s * theta, m) if shift else lifted
            h = _pgcd(f, shifted, m)
            if len(h) > 1:
                out.append(h)
        # verify completeness exactly
        check = [one]
        for h in out:
            check = _pmul(check, h, m)
        if len(check) == len(f) and all((a - b).is_zero()
                                        for a, b in zip(check, f)):
            return out
    raise SplitError("no squarefree shift found (input may not be squarefree)")


def roots_in_field(f: Poly, m: int) -> tuple[list[CycloScalar], list[Poly]]:
    """(roots of f in Q(zeta_m), nonlinear irreducible factors)."""
    roots, nonlinear = [], []
    for h in factor_over_field(f, m):
        if len(h) == 2:
            roots.append(-h[0])
        else:
            nonlinear.append(h)
    return roots, nonlinear


# ---------------------------------------------------------------------------
# idempotent splitting of a commutative semisimple subalgebra


def _minimal_polynomial(A, z: Vector, unit: Vector) -> Poly:
    """Minimal polynomial of z within the unital subalgebra it generates."""
    m = A.modulus
    vecs = [dict(unit)]
    ech = Echelon()
    ech.insert(dict(unit))
    while True:
        nxt = A.mul(z, vecs[-1])
        if not ech.insert(dict(nxt)):
            break
        vecs.append(nxt)
    # solve sum_t c_t z^t = z^T over the collected powers
    coords = sorted({k for v in vecs for k in v} | {k for k in A.mul(z, vecs[-1])})
    pos = {k: i for i, k in enumerate(coords)}
    zero = CycloScalar.zero(m)
    target = A.mul(z, vecs[-1])
    mat = [[vecs[t].get(k, zero) for t in range(len(vecs))] for k in coords]
    rhs = [target.get(k, zero) for k in coords]
    sol = solve(CycloMatrix(mat), rhs)
    if sol is None:
        raise SplitError("Krylov solve failed")
    poly = [-c for c in sol] + [CycloScalar.one(m)]
    return _ptrim(poly) or [CycloScalar.one(m)]


def split_commutative(A, basis: Sequence[Vector],
                      rng: Optional[random.Random] = None,
                      max_tries: int = 64) -> tuple[list[Vector], list[int]]:
    """Primitive idempotents of the commutative semisimple subalgebra of A
    spanned by ``basis`` (which must contain the unit of A).

    Returns (idempotents, factor_degrees): factor_degrees[i] is the degree of
    the residue field of factor i over Q(zeta_m); an entry > 1 means the field
    does not split that factor.
    """
    if A.unit is None:
        raise ValueError("splitting requires a unital ambient algebra")
    rng = rng or random.Random(20260810)
    m = A.modulus
    ech = Echelon()
    for v in basis:
        ech.insert(dict(v))
    k = ech.rank
    if k == 0:
        raise ValueError("empty subalgebra")
    if k == 1:
        return [dict(A.unit)], [1]
    vecs = ech.basis()
    for attempt in range(max_tries):
        bound = 2 + attempt
        z: Vector = {}
        for v in vecs:
            c = rng.randint(-bound, bound)
            if c:
                for key, s in v.items():
                    cur = z.get(key)
                    nv = cur + s * c if cur is not None else s * c
                    if nv:
                        z[key] = nv
                    else:
                        z.pop(key, None)
        if not z:
            continue
        minpoly = _minimal_polynomial(A, z, A.unit)
        if len(minpoly) - 1 != k:
            continue  # not separating
        d = _pderiv(minpoly, m)
        if len(_pgcd(minpoly, d, m)) > 1:
            raise SplitError("minimal polynomial not squarefree: "
                             "subalgebra is not semisimple")
        factors = factor_over_field(minpoly, m)
        idems = []
        degrees = []
        for h in factors:
            u, _ = _pdivmod(minpoly, h, m)
            w = _pxgcd_modinv(u, h, m)
            uw = _pmul(u, w, m)
            # evaluate uw at z inside the algebra
            acc: Vector = {}
            for c in reversed(uw):
                acc = A.mul(z, acc)
                if c:
                    for key, s in A.unit.items():
                        cur = acc.get(key)
                        nv = cur + s * c if cur is not None else s * c
                        if nv:
                            acc[key] = nv
                        else:
                            acc.pop(key, None)
            idems.append(acc)
            degrees.append(len(h) - 1)
        _verify_idempotents(A, idems)
        return idems, degrees
    raise SplitError("no separating element found")


def _verify_idempotents(A, idems: list[Vector]):
    total: Vector = {}
    for e in idems:
        sq = A.mul(e, e)
        if sq != e:
            raise SplitError("candidate idempotent fails e*e = e")
        for key, s in e.items():
            cur = total.get(key)
            nv = cur + s if cur is not None else s
            if nv:
                total[key] = nv
            else:
                total.pop(key, None)
    if total != A.unit:
        raise SplitError("idempotents do not sum to the unit")
    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            if A.mul(idems[i], idems[j]):
                raise SplitError("idempotents are not orthogonal")

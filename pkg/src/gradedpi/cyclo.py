"""Exact arithmetic in cyclotomic fields Q(zeta_m) and exact linear algebra over them.

Scalars are stored on the power basis 1, zeta, ..., zeta^(phi(m)-1), reduced
modulo the m-th cyclotomic polynomial, with Fraction coefficients.  Nothing in
this module ever rounds; the only floating-point surface is ``complex()``,
provided as a sanity cross-check and never used to produce results.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "CycloScalar",
    "CycloMatrix",
    "Echelon",
    "cyclotomic_polynomial",
    "zeta",
    "scalar_arith",
    "matrix_rank",
    "nullspace",
    "solve",
]


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (dense lists, constant term first)

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _int_poly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to sign
    num = list(num)
    den = list(den)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("division not exact")
        q = c // lead
        out[k] = q
        if q:
            for i, d in enumerate(den):
                num[k + i] -= q * d
    if any(_trim(num)):
        raise ArithmeticError("division not exact")
    return out


def _int_poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


_CYCLOTOMIC_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    cached = _CYCLOTOMIC_CACHE.get(m)
    if cached is not None:
        return cached
    if m == 1:
        phi = (-1, 1)
    else:
        num = [0] * (m + 1)
        num[0] = -1
        num[m] = 1
        den = [1]
        for d in range(1, m):
            if m % d == 0:
                den = _int_poly_mul(den, cyclotomic_polynomial(d))
        phi = tuple(_int_poly_divexact(num, den))
    _CYCLOTOMIC_CACHE[m] = phi
    return phi


class _Context:
    """Per-modulus data: phi(m), Phi_m and reduction rows for zeta^t, t >= phi."""

    __slots__ = ("m", "phi", "poly", "reduction")

    def __init__(self, m: int):
        self.m = m
        self.poly = cyclotomic_polynomial(m)
        self.phi = len(self.poly) - 1
        # zeta^phi = -(lower coefficients of Phi); extend by multiply-by-zeta.
        # Rows must cover products of reduced scalars and bare powers zeta^k, k < m.
        top_degree = max(2 * self.phi - 2, m - 1)
        rows = []
        row = [Fraction(-c) for c in self.poly[:-1]]
        rows.append(tuple(row))
        for _ in range(self.phi, top_degree):
            shifted = [Fraction(0)] + row[:-1]
            top = row[-1]
            if top:
                shifted = [a + top * b for a, b in zip(shifted, rows[0])]
            row = shifted
            rows.append(tuple(row))
        self.reduction = rows  # index t-phi gives zeta^t over the power basis


_CONTEXTS: dict[int, _Context] = {}


def _context(m: int) -> _Context:
    ctx = _CONTEXTS.get(m)
    if ctx is None:
        ctx = _Context(m)
        _CONTEXTS[m] = ctx
    return ctx


def _reduce(m: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    ctx = _context(m)
    phi = ctx.phi
    for t in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[t]
        if c:
            row = ctx.reduction[t - phi]
            for i, r in enumerate(row):
                if r:
                    coeffs[i] += c * r
        coeffs.pop()
    while len(coeffs) < phi:
        coeffs.append(Fraction(0))
    return tuple(coeffs)


class CycloScalar:
    """An exact element of Q(zeta_m), reduced modulo the m-th cyclotomic polynomial."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        phi = _context(modulus).phi
        if len(cs) > phi:
            reduced = _reduce(modulus, cs)
        else:
            cs.extend([Fraction(0)] * (phi - len(cs)))
            reduced = tuple(cs)
        object.__setattr__(self, "coeffs", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("CycloScalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CycloScalar":
        return cls(m, ())

    @classmethod
    def one(cls, m: int) -> "CycloScalar":
        return cls(m, (Fraction(1),))

    @classmethod
    def from_rational(cls, m: int, value) -> "CycloScalar":
        return cls(m, (Fraction(value),))

    def with_modulus(self, m: int) -> "CycloScalar":
        """Embed into Q(zeta_m) for a multiple m of the current modulus."""
        if m == self.modulus:
            return self
        if m % self.modulus:
            raise ValueError(f"cannot embed modulus {self.modulus} into {m}")
        step = m // self.modulus
        out = [Fraction(0)] * (len(self.coeffs) * step)
        for t, c in enumerate(self.coeffs):
            if c:
                out[t * step] = c
        return CycloScalar(m, out)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(self.modulus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar(self.modulus,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar(self.modulus,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return CycloScalar(self.modulus, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_m)")
        if self.is_rational():
            return CycloScalar.from_rational(self.modulus, 1 / self.coeffs[0])
        # extended Euclid against Phi_m; gcd is a nonzero constant
        phi_poly = [Fraction(c) for c in _context(self.modulus).poly]
        r0, r1 = phi_poly, _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t_shift = [Fraction(0), Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r) or [Fraction(0)]
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1))) or [Fraction(0)]
        if not r1 or not r1[0]:
            raise ZeroDivisionError("element is a zero divisor modulo Phi_m")
        inv = [c / r1[0] for c in s1]
        return CycloScalar(self.modulus, inv)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "CycloScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloScalar.one(self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons / misc --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self) -> complex:
        root = cmath.exp(2j * cmath.pi / self.modulus)
        return sum(float(c) * root ** t for t, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for t, c in enumerate(self.coeffs):
            if not c:
                continue
            if t == 0:
                terms.append(str(c))
            elif t == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{t}" if c != 1 else f"z^{t}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclo({self.modulus}; {body})"


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, num[: len(den) - 1] or [Fraction(0)]


def zeta(m: int, k: int = 1) -> CycloScalar:
    """The root of unity zeta_m^k as an exact scalar."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    k %= m
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CycloScalar(m, coeffs)


def scalar_arith(a: CycloScalar, b: CycloScalar, op: str) -> CycloScalar:
    """Field operation dispatch; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# exact dense matrices


class CycloMatrix:
    """Dense matrix of CycloScalar entries sharing one modulus."""

    __slots__ = ("modulus", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[CycloScalar]]):
        rows = len(entries)
        if rows == 0:
            raise ValueError("matrix needs at least one row")
        cols = len(entries[0])
        modulus = None
        table = []
        for r in entries:
            if len(r) != cols:
                raise ValueError("inconsistent row lengths")
            row = []
            for x in r:
                if not isinstance(x, CycloScalar):
                    raise TypeError("entries must be CycloScalar")
                if modulus is None:
                    modulus = x.modulus
                elif x.modulus != modulus:
                    raise ValueError("entries do not share one modulus")
                row.append(x)
            table.append(tuple(row))
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(table))

    def __setattr__(self, name, value):
        raise AttributeError("CycloMatrix is immutable")

    @classmethod
    def identity(cls, m: int, n: int) -> "CycloMatrix":
        one, zero = CycloScalar.one(m), CycloScalar.zero(m)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, rows: int, cols: int) -> "CycloMatrix":
        zero = CycloScalar.zero(m)
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, m: int, rows: Sequence[Sequence]) -> "CycloMatrix":
        conv = [[x if isinstance(x, CycloScalar) else CycloScalar.from_rational(m, x)
                 for x in r] for r in rows]
        return cls(conv)

    def row(self, i: int) -> tuple[CycloScalar, ...]:
        return self.entries[i]

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix([[self.entries[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def matmul(self, other: "CycloMatrix") -> "CycloMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matmul")
        zero = CycloScalar.zero(self.modulus)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CycloMatrix(out)

    def __eq__(self, other):
        return (isinstance(other, CycloMatrix) and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CycloMatrix({self.rows}x{self.cols}, m={self.modulus})"


def _echelonize(rows: list[list[CycloScalar]]):
    """In-place row reduction; returns list of pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(M: CycloMatrix) -> int:
    """Exact rank by fraction-preserving elimination."""
    rows = [list(r) for r in M.entries]
    return len(_echelonize(rows))


def nullspace(M: CycloMatrix) -> list[tuple[CycloScalar, ...]]:
    """Basis of the right kernel of M, as coordinate tuples."""
    rows = [list(r) for r in M.entries]
    pivots = _echelonize(rows)
    m = M.modulus
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [CycloScalar.zero(m)] * M.cols
        vec[fc] = CycloScalar.one(m)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def sparse_nullspace(rows: Iterable[dict], ncols: int, modulus: int) -> list[dict]:
    """Kernel basis for a system given by sparse rows (dict col -> scalar)."""
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    one = CycloScalar.one(modulus)
    out = []
    for fc in range(ncols):
        if fc in ech.pivots:
            continue
        vec = {fc: one}
        for p, row in ech.pivots.items():
            s = row.get(fc)
            if s:
                vec[p] = -s
        out.append(vec)
    return out


def solve(M: CycloMatrix, v: Sequence[CycloScalar]) -> Optional[tuple[CycloScalar, ...]]:
    """One solution of M x = v, or None when the system is inconsistent."""
    if len(v) != M.rows:
        raise ValueError("dimension mismatch between matrix and vector")
    rows = [list(r) + [x] for r, x in zip(M.entries, v)]
    pivots = _echelonize(rows)
    m = M.modulus
    if M.cols in pivots:
        return None  # pivot in the augmented column
    x = [CycloScalar.zero(m)] * M.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# incremental echelon over sparse vectors (dict coordinate -> scalar)


class Echelon:
    """Incremental reduced spanning set for sparse vectors over Q(zeta_m).

    Vectors are dicts mapping coordinate -> CycloScalar.  Pivot rows are kept
    normalized so membership tests and rank queries are exact.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, CycloScalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict[int, CycloScalar]) -> dict[int, CycloScalar]:
        v = {k: s for k, s in vec.items() if s}
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                return v
            f = v[lead]
            for k, s in row.items():
                t = v.get(k)
                nv = (t - f * s) if t is not None else -f * s
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def insert(self, vec: dict[int, CycloScalar]) -> bool:
        """Reduce vec against the span; absorb the residual.  True if rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        inv = v[lead].inverse()
        row = {k: s * inv for k, s in v.items()}
        # keep existing rows reduced against the new pivot
        for plead, prow in self.pivots.items():
            c = prow.get(lead)
            if c:
                for k, s in row.items():
                    t = prow.get(k)
                    nv = (t - c * s) if t is not None else -c * s
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[lead] = row
        return True

    def contains(self, vec: dict[int, CycloScalar]) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict[int, CycloScalar]]:
        return [dict(row) for _, row in sorted(self.pivots.items())]

"""Exact arithmetic in cyclotomic fields Q(zeta_L), the numeric base of the package.

Elements are represented in Q[x]/Phi_L(x) with rational coefficient vectors of
length phi(L), so equality of field elements is decidable by comparing reduced
coefficient vectors.  All values are immutable and every operation is exact;
there is no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

# Rational coefficients are stdlib Fractions: arbitrary precision, always
# stored reduced with positive denominator.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; desk-scale moduli only."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials by a monic divisor; a nonzero
    # remainder is a bug in the caller.
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        q[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the order-th cyclotomic polynomial.

    Computed by exact division of x^order - 1 by the product of all lower
    cyclotomic polynomials.  Monic of degree phi(order).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (order - 1) + [1]
    for d in divisors(order):
        if d < order:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _deg(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    # Division with remainder in Q[x]; b must be nonzero.
    da, db = _deg(a), _deg(b)
    r = list(a)
    q = [_ZERO] * max(da - db + 1, 1)
    inv_lead = 1 / b[db]
    for i in range(da - db, -1, -1):
        c = r[i + db] * inv_lead
        q[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    return q, r


class CycloField:
    """The cyclotomic field Q(zeta_L), L = order, as Q[x]/Phi_L(x)."""

    __slots__ = ("order", "modulus", "degree", "_red", "_zeta_pows", "zero", "one")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("field order must be >= 1")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        # Reduction rows: x^k mod Phi_L for k = degree .. 2*degree-2, as
        # integer vectors (Phi_L is monic with integer coefficients).
        base = [-c for c in self.modulus[:-1]]
        rows = []
        cur = base[:]
        rows.append(tuple(cur))
        for _ in range(self.degree - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c + top * b for c, b in zip(cur, base)]
            rows.append(tuple(cur))
        self._red = rows
        self.zero = CycloNumber(self, (_ZERO,) * self.degree)
        self.one = CycloNumber(self, (_ONE,) + (_ZERO,) * (self.degree - 1))
        self._zeta_pows: list[CycloNumber] | None = None

    def from_rational(self, q) -> CycloNumber:
        return CycloNumber(self, (Fraction(q),) + (_ZERO,) * (self.degree - 1))

    def element(self, coeffs) -> CycloNumber:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError("coefficient vector has wrong length for this field")
        return CycloNumber(self, coeffs)

    def root(self, k: int) -> CycloNumber:
        """zeta_L^k, reduced mod Phi_L; k is taken mod L."""
        if self._zeta_pows is None:
            pows = [self.one]
            if self.degree >= 2:
                zeta = CycloNumber(
                    self, (_ZERO, _ONE) + (_ZERO,) * (self.degree - 2))
            else:
                zeta = CycloNumber(self, (Fraction(self._red[0][0]),))
            for _ in range(self.order - 1):
                pows.append(pows[-1] * zeta)
            self._zeta_pows = pows
        return self._zeta_pows[k % self.order]

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.order == self.order

    def __hash__(self):
        return hash(("CycloField", self.order))

    def __repr__(self):
        return f"CycloField({self.order})"


@lru_cache(maxsize=None)
def cyclo_field(order: int) -> CycloField:
    return CycloField(order)


class CycloNumber:
    """An element of Q(zeta_L): phi(L) rational coordinates w.r.t. 1, zeta, ..."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- coercion ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, CycloNumber):
            if other.field.order != self.field.order:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- ring/field operations --------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.field,
                           tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloNumber(self.field,
                           tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero
            f = Fraction(other)
            return CycloNumber(self.field, tuple(a * f for a in self.coeffs))
        if not isinstance(other, CycloNumber):
            return NotImplemented
        if other.field.order != self.field.order:
            raise ValueError("field mismatch")
        a, b = self.coeffs, other.coeffs
        deg = self.field.degree
        conv = [_ZERO] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:deg]
        red = self.field._red
        for k in range(deg, 2 * deg - 1):
            ck = conv[k]
            if ck:
                row = red[k - deg]
                for i, ri in enumerate(row):
                    if ri:
                        out[i] += ck * ri
        return CycloNumber(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("zero divisor")
        deg = self.field.degree
        if deg == 1:
            return CycloNumber(self.field, (1 / self.coeffs[0],))
        mod = [Fraction(c) for c in self.field.modulus]
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while _deg(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            # s_new = s0 - q*s1
            prod = [_ZERO] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        if sj:
                            prod[i + j] += qi * sj
            s_new = [_ZERO] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                s_new[i] += c
            for i, c in enumerate(prod):
                s_new[i] -= c
            s0, s1 = s1, s_new
        if _deg(r1) != 0:
            raise ArithmeticError("modulus is not coprime to the element")
        c = r1[0]
        out = [v / c for v in s1[:deg]]
        out += [_ZERO] * (deg - len(out))
        return CycloNumber(self.field, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("zero divisor")
            return self * (Fraction(1) / Fraction(other))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and hashing -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self == self.field.one

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return (other.field.order == self.field.order
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    # -- rational view ------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def multiplicative_order(self) -> int:
        """Exact order as a root of unity; raises if the element is not one."""
        if self.is_zero():
            raise ValueError("zero is not a root of unity")
        bound = self.field.order if self.field.order % 2 == 0 \
            else 2 * self.field.order
        x = self
        for k in range(1, bound + 1):
            if x.is_one():
                return k
            x = x * self
        raise ValueError("element is not a root of unity")

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"L": self.field.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_dict(d: dict) -> "CycloNumber":
        return cyclo_field(d["L"]).element([Fraction(s) for s in d["coeffs"]])

    def __repr__(self):
        return f"CycloNumber(L={self.field.order}, {list(map(str, self.coeffs))})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z{self.field.order}" if i == 1 \
                    else f"z{self.field.order}^{i}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def cyclo_root(field: CycloField, k: int) -> CycloNumber:
    """The k-th power of the canonical generator zeta_L of the field."""
    return field.root(k)


def embed_into(x: CycloNumber, field: CycloField) -> CycloNumber:
    """Embed x in a larger cyclotomic field via zeta_L -> zeta_L'^(L'/L).

    The target order must be a multiple of the source order; the map is a
    ring homomorphism.
    """
    if x.field.order == field.order:
        return CycloNumber(field, x.coeffs)
    if field.order % x.field.order:
        raise ValueError("target field order must be a multiple of the source")
    step = field.order // x.field.order
    acc = field.zero
    for i, c in enumerate(x.coeffs):
        if c:
            acc = acc + field.root(step * i) * c
    return acc


def field_join(a: CycloNumber, b: CycloNumber) -> tuple[CycloNumber, CycloNumber]:
    """Embed both arguments in Q(zeta_lcm(La, Lb))."""
    if a.field.order == b.field.order:
        return a, b
    target = cyclo_field(math.lcm(a.field.order, b.field.order))
    return embed_into(a, target), embed_into(b, target)

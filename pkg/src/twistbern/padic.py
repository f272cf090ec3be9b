"""Partial-sum realization of the defining integrals and p-adic convergence checks.

The integral attached to a context is the limit of the averages
(1/(d p^N)) * sum_{j < d p^N} chi(j) xi^j j^k.  This module computes those
partial sums exactly, measures their distance to the closed-form Bernoulli
coefficients with the pi-adic valuation on Q(zeta_{p^s}) (pi = 1 - zeta,
normalized so v(p) = 1), and checks the shift identity satisfied by the
integral.

Scope: contexts whose values lie in Q(zeta_{p^s}), i.e. xi of p-power order
and real-valued chi (order <= 2).  There p is totally ramified, so the
valuation extends uniquely and is computable by repeated division by pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import TwistContext, _bern_values, bernoulli_polynomial
from .cyclo import CycloField, CycloNumber, cyclo_field, euler_phi
from .report import CheckReport

INFINITE = math.inf


@dataclass(frozen=True)
class PadicContext:
    """Valuation data for Q(zeta_{p^s}): uniformizer pi = 1 - zeta, v(pi) = 1/e."""

    p: int
    s: int
    field: CycloField
    ramification: int  # e = phi(p^s); v(p) = 1


def padic_context(p: int, s: int) -> PadicContext:
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise ValueError("p must be prime")
    if s < 0:
        raise ValueError("s must be >= 0")
    order = p**s
    return PadicContext(p, s, cyclo_field(order), euler_phi(order))


def _rational_val(q: Fraction, p: int) -> int:
    # p-adic valuation of a nonzero rational
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def pi_valuation(alpha: CycloNumber, pctx: PadicContext):
    """v(alpha) with v(p) = 1, as a Fraction; v(0) is +infinity.

    The rational content's p-power is split off first; the remaining
    p-integral part is reduced through Z[zeta]/(pi) = F_p (coefficient sum
    mod p) and divided exactly by 1 - zeta until the reduction is nonzero,
    each division contributing 1/e.
    """
    if alpha.field.order != pctx.field.order:
        raise ValueError("element lies outside the stated field")
    if alpha.is_zero():
        return INFINITE
    p = pctx.p
    content = min(_rational_val(c, p) for c in alpha.coeffs if c)
    beta = alpha * Fraction(1, p**content) if content >= 0 \
        else alpha * Fraction(p**(-content))
    steps = 0
    if pctx.field.degree >= 2:
        pi = pctx.field.one - pctx.field.root(1)
        limit = pctx.ramification * (64 + pctx.field.degree)
        while True:
            residue = 0
            for c in beta.coeffs:
                if c:
                    residue = (residue + c.numerator
                               * pow(c.denominator, -1, p)) % p
            if residue:
                break
            beta = beta / pi
            steps += 1
            if steps > limit:
                raise ArithmeticError("pi-division did not terminate")
    return Fraction(content) + Fraction(steps, pctx.ramification)


def volkenborn_partial(ctx: TwistContext, k: int, level: int) -> CycloNumber:
    """(1/(d p^N)) * sum_{j<d p^N} chi(j) xi^j j^k, exactly (N = level)."""
    if ctx.p is None:
        raise ValueError("context carries no prime p")
    if k < 0 or level < 0:
        raise ValueError("k and level must be >= 0")
    d, p = ctx.d, ctx.p
    total = d * p**level
    acc = ctx.field.zero
    for j in range(total):
        cv = ctx.chi_at(j)
        if cv.is_zero():
            continue
        acc = acc + cv * ctx.xi_pow(j) * Fraction(j**k)
    return acc * Fraction(1, total)


@dataclass
class ConvergenceReport:
    """Valuations v(V_N - B_k) for N = 1..N_max and the monotonicity verdict."""

    params: dict
    rows: list  # (N, Fraction | math.inf)
    passed: bool
    detail: str | None = None

    def to_json_dict(self) -> dict:
        return {"check": "convergence_check", "params": self.params,
                "rows": [[n, "inf" if v == INFINITE else str(v)]
                         for n, v in self.rows],
                "verdict": "pass" if self.passed else "fail",
                "detail": self.detail}


def convergence_check(ctx: TwistContext, k: int, n_max: int) -> ConvergenceReport:
    """Witness p-adic convergence of the partial sums to B_k.

    Flags pass iff the finite valuations are strictly increasing.  Levels
    where the partial sum is already exact (valuation +infinity) are skipped:
    a constant integrand gives all-infinite rows, and an exact hit at a low
    level (it happens, e.g. the level-1 average of xi^j j^4 at xi = -1)
    does not impair the convergence the later levels witness.
    """
    if ctx.p is None:
        raise ValueError("context carries no prime p")
    if ctx.chi.order > 2:
        raise ValueError("unsupported: values outside Q(zeta_{p^s})")
    pctx = padic_context(ctx.p, ctx.s)
    if ctx.field.order != pctx.field.order:
        raise ValueError("unsupported: values outside Q(zeta_{p^s})")
    target = _bern_values(ctx, k)[k]
    rows = []
    for level in range(1, n_max + 1):
        diff = volkenborn_partial(ctx, k, level) - target
        rows.append((level, pi_valuation(diff, pctx)))
    passed = True
    detail = None
    finite = [(n, v) for n, v in rows if v != INFINITE]
    for (n1, v1), (n2, v2) in zip(finite, finite[1:]):
        if not v2 > v1:
            passed = False
            detail = f"valuation not increasing from N={n1} ({v1}) to N={n2} ({v2})"
            break
    params = dict(ctx.params(), p=ctx.p, s=ctx.s, k=k, n_max=n_max)
    return ConvergenceReport(params, rows, passed, detail)


def shift_identity_check(m: int, n: int) -> bool:
    """Exact check of the integral shift identity for f(z) = z^m, shift n.

    Both sides are exactly computable for d=1, xi=1:
    B_m(n) - B_m = m * sum_{a<n} a^(m-1), with 0^0 = 1.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    ctx = TwistContext.from_orders(1, 0, 1, 1)
    lhs = bernoulli_polynomial(ctx, m, Fraction(n)) - _bern_values(ctx, m)[m]
    if m == 0:
        rhs = Fraction(0)
    else:
        rhs = m * Fraction(sum(a ** (m - 1) for a in range(n)))
    return lhs == ctx.field.from_rational(rhs)


def shift_identity_report(m_max: int, n_max: int) -> CheckReport:
    """shift_identity_check over the rectangle m <= m_max, 1 <= n <= n_max."""
    for m in range(m_max + 1):
        for n in range(1, n_max + 1):
            if not shift_identity_check(m, n):
                return CheckReport("shift_identity_check",
                                   {"m": m, "n": n}, False,
                                   f"identity fails at m={m}, n={n}")
    return CheckReport("shift_identity_check",
                       {"m_max": m_max, "n_max": n_max}, True)

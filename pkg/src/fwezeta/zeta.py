"""Zeta polynomials of weight-enumerator-shaped polynomials.

Given a monic-in-x homogeneous polynomial W(x, y) = x^n + sum_{i>=d} A_i
x^(n-i) y^i and an integer q >= 2, there is a unique polynomial P(T) of
degree at most n - d whose product with the generating function

    f(T) = (y(1-T) + xT)^n / ((1-T)(1-qT))

has (W - x^n)/(q-1) as its T^(n-d) coefficient.  This module computes P
two independent ways: a fast triangular back-substitution
(:func:`compute_zeta`) and a deliberately different brute-force route
(:func:`zeta_oracle`) kept solely as a cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (HomogeneousPoly, Matrix2, UniPoly, solve_linear,
                      substitute_linear)


class EnumeratorContext:
    """A monic enumerator W with its degree n, minimum index d and field
    size q.  d is always inferred from W, never supplied by callers."""

    __slots__ = ("W", "n", "d", "q")

    def __init__(self, W: HomogeneousPoly, q: int = 2):
        if not isinstance(q, int) or q < 2:
            raise ValueError(f"q must be an integer >= 2, got {q!r}")
        if W.coefficient(0) != 1:
            raise ValueError("enumerator must be monic in x (coefficient of x^n is 1)")
        d = next((i for i in range(1, W.degree + 1) if W.coefficient(i)), None)
        if d is None:
            raise ValueError("W = x^n has no minimum index d and no zeta polynomial")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "n", W.degree)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("EnumeratorContext is immutable")

    def __repr__(self):
        return f"EnumeratorContext(n={self.n}, d={self.d}, q={self.q})"


@dataclass(frozen=True)
class ZetaPolynomial:
    """The zeta polynomial P(T) together with the enumerator it came from."""

    P: UniPoly
    context: EnumeratorContext

    @property
    def g(self) -> Optional[int]:
        """n/2 + 1 - d when the degree is even, else None."""
        if self.context.n % 2:
            return None
        return self.context.n // 2 + 1 - self.context.d


@dataclass(frozen=True)
class ZetaSolveSystem:
    """The exact linear system defining P(T).

    series[k] is the T^k coefficient 1 + q + ... + q^k of
    1/((1-T)(1-qT)); rows[i][m] is the coefficient of x^m y^(n-m) in the
    T^i coefficient of f(T), for m <= i (everything above the diagonal
    vanishes because that T^i coefficient has x-degree at most i); and
    target[m] is the x^m y^(n-m) coefficient of (W - x^n)/(q-1).
    """

    series: tuple
    rows: tuple
    target: tuple

    @classmethod
    def build(cls, ctx: EnumeratorContext) -> "ZetaSolveSystem":
        n, q, nd = ctx.n, ctx.q, ctx.n - ctx.d
        series = [(q ** (k + 1) - 1) // (q - 1) for k in range(nd + 1)]
        # beta[j][m]: coefficient of x^m in C(n,j) (x-y)^j
        beta = [[math.comb(n, j) * math.comb(j, m) * (-1 if (j - m) % 2 else 1)
                 for m in range(j + 1)] for j in range(nd + 1)]
        rows = [tuple(sum(series[i - j] * beta[j][m] for j in range(m, i + 1))
                      for m in range(i + 1)) for i in range(nd + 1)]
        target = tuple(Fraction(ctx.W.coefficient(n - m), q - 1) for m in range(nd + 1))
        return cls(tuple(series), tuple(rows), target)

    def diagonal(self) -> tuple:
        return tuple(row[i] for i, row in enumerate(self.rows))


def compute_zeta(ctx: EnumeratorContext) -> ZetaPolynomial:
    """Solve the defining triangular system by back-substitution.

    Matching the x^m y^(n-m) coefficients for m = n-d down to 0
    determines a_0, ..., a_{n-d} one at a time; the pivot for the new
    unknown at step m is the diagonal entry C(n, m), never zero.
    Trailing zero coefficients of the solution are trimmed.
    """
    nd = ctx.n - ctx.d
    sys_ = ZetaSolveSystem.build(ctx)
    a = [Fraction(0)] * (nd + 1)
    for m in range(nd, -1, -1):
        k = nd - m
        acc = sys_.target[m]
        for kk in range(k):
            acc -= a[kk] * sys_.rows[nd - kk][m]
        a[k] = acc / sys_.rows[m][m]
    return ZetaPolynomial(UniPoly(a), ctx)


def _series_term_polys(ctx: EnumeratorContext) -> list:
    """The T^i coefficients of f(T) for i = 0..n-d, as full degree-n
    polynomials, built from explicitly multiplied truncated power series."""
    n, q, nd = ctx.n, ctx.q, ctx.n - ctx.d
    ones = [1] * (nd + 1)
    qpow = [q ** k for k in range(nd + 1)]
    series = [sum(ones[k - j] * qpow[j] for j in range(k + 1)) for k in range(nd + 1)]
    xy = HomogeneousPoly(1, [1, -1])          # x - y
    xy_pows = [HomogeneousPoly(0, [1])]
    for _ in range(nd):
        xy_pows.append(xy_pows[-1] * xy)
    terms = []
    for i in range(nd + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for j in range(i + 1):
            scale = series[i - j] * math.comb(n, j)
            pw = xy_pows[j]
            for k2, c in enumerate(pw.coeffs):
                if c:
                    # x^(j-k2) y^k2 times y^(n-j) sits at index n-j+k2
                    coeffs[n - j + k2] += scale * c
        terms.append(HomogeneousPoly(n, coeffs))
    return terms


def zeta_oracle(ctx: EnumeratorContext) -> ZetaPolynomial:
    """Recompute P(T) by brute force, as an independent cross-check.

    Expands the truncated series product for f(T) term by term, assembles
    the dense (n-d+1) x (n-d+1) system over the monomials x^m y^(n-m) and
    solves it by generic exact elimination.  Shares no code path with
    :func:`compute_zeta` beyond the scalar types.
    """
    n, q, nd = ctx.n, ctx.q, ctx.n - ctx.d
    terms = _series_term_polys(ctx)
    A = [[terms[nd - k].coefficient(n - m) for k in range(nd + 1)]
         for m in range(nd + 1)]
    b = [Fraction(ctx.W.coefficient(n - m), q - 1) for m in range(nd + 1)]
    return ZetaPolynomial(UniPoly(solve_linear(A, b)), ctx)


def genus(n: int, d: int) -> int:
    """n/2 + 1 - d, defined only for even n."""
    if n % 2:
        raise ValueError(f"genus needs an even degree, got {n}")
    return n // 2 + 1 - d


def macwilliams_transform(W: HomogeneousPoly, q: int = 2) -> HomogeneousPoly:
    """q^(-n/2) * W(x + (q-1)y, x - y), computed entirely over Q.

    The even-degree restriction is what makes the q^(-n/2) scale rational;
    odd degrees would need sqrt(q) and are rejected.
    """
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    if W.degree % 2:
        raise ValueError("transform needs an even-degree polynomial")
    M = Matrix2(Fraction(1), Fraction(q - 1), Fraction(1), Fraction(-1))
    return substitute_linear(W, M, "column") * Fraction(1, q ** (W.degree // 2))


def functional_equation_sign(Z: ZetaPolynomial) -> Optional[int]:
    """+1 or -1 when P satisfies a_i <-> eps * q^(g-i) * a_(2g-i) with
    deg P = 2g; None when no such symmetry holds."""
    ctx = Z.context
    if ctx.n % 2:
        raise ValueError("functional equation sign needs an even degree")
    g = genus(ctx.n, ctx.d)
    if g < 0 or Z.P.degree != 2 * g:
        return None
    qf = Fraction(ctx.q)
    for eps in (1, -1):
        if all(Z.P.coefficient(2 * g - i) == eps * qf ** (g - i) * Z.P.coefficient(i)
               for i in range(2 * g + 1)):
            return eps
    return None

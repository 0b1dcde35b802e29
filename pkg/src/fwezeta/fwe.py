"""Formal weight enumerators: the rational part of the invariant ring of
the complex reflection group G8, generated by

    W8  = x^8 + 14 x^4 y^4 + y^8        (transform-invariant)
    W12 = x^12 - 33 x^8 y^4 - 33 x^4 y^8 + y^12   (transform-anti-invariant)

A formal weight enumerator is a monic combination W8^s W12^(2t+1) (or a
linear combination of those of equal degree): supported on indices
divisible by 4 and negated by the binary MacWilliams transform.  The
extremal one of each degree maximizes the first nonzero index d.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .algebra import (HomogeneousPoly, Matrix2, QuadRational,
                      SingularMatrixError, solve_linear, substitute_linear)
from .zeta import macwilliams_transform

W8 = HomogeneousPoly(8, [1, 0, 0, 0, 14, 0, 0, 0, 1])
W12 = HomogeneousPoly(12, [1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1])
# x^4 y^4 (x^4 - y^4)^4, equal to (W8^3 - W12^2)/108
W24_PRIME = (HomogeneousPoly(8, [0, 0, 0, 0, 1, 0, 0, 0, 0])
             * HomogeneousPoly(4, [1, 0, 0, 0, -1]) ** 4)

_GENERATORS = {"W8": W8, "W12": W12, "W24prime": W24_PRIME}


def generator(name: str) -> HomogeneousPoly:
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of "
                         f"{sorted(_GENERATORS)}") from None


@lru_cache(maxsize=None)
def _w8_power(s: int) -> HomogeneousPoly:
    return _w8_power(s - 1) * W8 if s else HomogeneousPoly(0, [1])


@lru_cache(maxsize=None)
def _w12_power(k: int) -> HomogeneousPoly:
    return _w12_power(k - 1) * W12 if k else HomogeneousPoly(0, [1])


@dataclass(frozen=True)
class FweBasisElement:
    """The product W8^s * W12^(2t+1)."""

    s: int
    t: int

    @property
    def degree(self) -> int:
        return 8 * self.s + 12 * (2 * self.t + 1)

    def expand(self) -> HomogeneousPoly:
        return _basis_expansion(self.s, self.t)

    def __str__(self):
        w8 = "" if not self.s else ("W8*" if self.s == 1 else f"W8^{self.s}*")
        k = 2 * self.t + 1
        return f"{w8}W12^{k}" if k > 1 else f"{w8}W12"


@lru_cache(maxsize=None)
def _basis_expansion(s: int, t: int) -> HomogeneousPoly:
    return _w8_power(s) * _w12_power(2 * t + 1)


@dataclass(frozen=True)
class FweCheck:
    """Verdict of the two defining conditions, with reasons on failure."""

    support_multiple_of_4: bool
    anti_invariant: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SymmetryReport:
    """Structural consequences every formal weight enumerator satisfies:
    degree congruent to 4 mod 8, an even number of terms, and symmetry
    under swapping x and y."""

    degree_mod_8_is_4: bool
    term_count_even: bool
    swap_symmetric: bool

    @property
    def ok(self) -> bool:
        return (self.degree_mod_8_is_4 and self.term_count_even
                and self.swap_symmetric)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FweCombination:
    """A monic linear combination of basis elements of one degree."""

    degree: int
    terms: tuple            # ((FweBasisElement, Fraction), ...)
    expanded: HomogeneousPoly
    d: int

    def coefficients(self) -> tuple:
        return tuple(c for _, c in self.terms)


def is_formal_weight_enumerator(W: HomogeneousPoly) -> FweCheck:
    """Check both defining conditions exactly.

    Condition one: nonzero coefficients only at indices divisible by 4.
    Condition two: the binary MacWilliams transform negates W.  The input
    must be monic in x and have rational coefficients.
    """
    failures = []
    if W.coefficient(0) != 1:
        failures.append("not monic in x")
    support_ok = all(i % 4 == 0 for i in W.support())
    if not support_ok:
        failures.append("support contains an index not divisible by 4")
    if W.degree % 2:
        anti = False
        failures.append("odd degree (transform undefined)")
    else:
        anti = macwilliams_transform(W, 2) == -W
        if not anti:
            failures.append("transform does not negate W")
    return FweCheck(support_ok, anti, tuple(failures))


def symmetry_checks(W: HomogeneousPoly) -> SymmetryReport:
    n = W.degree
    terms = len(W.support())
    palindrome = all(W.coefficient(i) == W.coefficient(n - i) for i in range(n + 1))
    return SymmetryReport(n % 8 == 4, terms % 2 == 0, palindrome)


# column-convention generators of G8 over Q(i); h = (1 - i)/2
_H = QuadRational(Fraction(1, 2), Fraction(-1, 2), -1)
_SIGMA_1 = Matrix2(_H, -_H, _H, _H)
_SIGMA_2 = Matrix2(QuadRational(0, -1, -1), QuadRational(0, 0, -1),
                   QuadRational(0, 0, -1), QuadRational(1, 0, -1))


def check_invariance_g8(W: HomogeneousPoly) -> bool:
    """Exact invariance of W under both generators of G8, computed in Q(i)."""
    lifted = W.lift_quadratic(-1)
    return (substitute_linear(lifted, _SIGMA_1, "column") == lifted
            and substitute_linear(lifted, _SIGMA_2, "column") == lifted)


def enumerate_basis(n: int) -> list:
    """All basis elements W8^s W12^(2t+1) of degree n, largest s first.

    Empty for n not congruent to 4 mod 8 or n < 12; the count is
    floor((n - 12)/24) + 1 otherwise.
    """
    out = []
    t = 0
    while 12 * (2 * t + 1) <= n:
        rem = n - 12 * (2 * t + 1)
        if rem % 8 == 0:
            out.append(FweBasisElement(rem // 8, t))
        t += 1
    out.sort(key=lambda e: -e.s)
    return out


def min_weight_index(W: HomogeneousPoly) -> int:
    """Smallest i >= 1 with a nonzero coefficient."""
    if W.coefficient(0) != 1:
        raise ValueError("enumerator must be monic in x")
    d = next((i for i in range(1, W.degree + 1) if W.coefficient(i)), None)
    if d is None:
        raise ValueError("W = x^n has no minimum index")
    return d


def extremal_min_index(n: int) -> int:
    """The largest d attainable at degree n: 4*floor((n-12)/24) + 4."""
    return 4 * ((n - 12) // 24) + 4


def build_extremal(n: int) -> FweCombination:
    """Construct the extremal formal weight enumerator of degree n.

    With m + 1 basis elements, the exact linear system {sum of the
    combination coefficients = 1; coefficient of x^(n-4j) y^(4j) = 0 for
    j = 1..m} kills every index below 4m + 4.  The system is solved
    exactly and the resulting minimum index is checked against the bound.
    """
    if n % 8 != 4 or n < 12:
        raise ValueError(f"no formal weight enumerators of degree {n}")
    basis = enumerate_basis(n)
    m = len(basis) - 1
    polys = [e.expand() for e in basis]
    A = [[Fraction(1)] * (m + 1)]
    A += [[p.coefficient(4 * j) for p in polys] for j in range(1, m + 1)]
    b = [Fraction(1)] + [Fraction(0)] * m
    try:
        sol = solve_linear(A, b)
    except SingularMatrixError as e:
        raise SingularMatrixError(
            f"no unique extremal combination at degree {n}") from e
    expanded = HomogeneousPoly.zero(n)
    for coeff, poly in zip(sol, polys):
        expanded = expanded + poly * coeff
    d = min_weight_index(expanded)
    expected = extremal_min_index(n)
    if d != expected:
        raise ArithmeticError(
            f"extremal construction at degree {n} reached d={d}, expected {expected}")
    return FweCombination(n, tuple(zip(basis, sol)), expanded, d)

"""Exact arithmetic: rationals, two quadratic extensions of Q, homogeneous
bivariate and univariate polynomials, and an exact linear solver.

Every value is immutable and every operation is exact; nothing in this
module ever rounds.  Rational scalars are plain ``fractions.Fraction``;
irrational scalars live in Q(i) or Q(sqrt 2) via :class:`QuadRational`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

Rational = Fraction

Scalar = Union[Fraction, "QuadRational"]

_QUAD_FIELDS = (-1, 2)


class SingularMatrixError(ValueError):
    """Raised when an exact linear system has no unique solution."""


class QuadRational:
    """An element a + b*sqrt(d) with rational a, b and fixed d in {-1, 2}.

    d = -1 gives Q(i), d = 2 gives Q(sqrt 2); these are the only two
    irrationalities needed anywhere in this package.  Values from
    different fields never mix: combining d = -1 with d = 2 raises.
    Since sqrt(d) is irrational for both tags, a + b*sqrt(d) = 0 iff
    a = b = 0, so equality and zero tests are exact.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=2):
        if d not in _QUAD_FIELDS:
            raise ValueError(f"unsupported quadratic field tag {d!r}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRational is immutable")

    def _coerce(self, other) -> Optional["QuadRational"]:
        if isinstance(other, QuadRational):
            if other.d != self.d:
                raise ValueError(
                    f"mixed quadratic fields: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRational(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.a * o.a + self.d * self.b * o.b,
                            self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        # 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - d b^2)
        return self * QuadRational(o.a / n, -o.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QuadRational(-self.a, -self.b, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadRational):
            if other.d != self.d:
                # values in different fields are comparable only through Q
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (zero only for the zero element)."""
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadRational":
        return QuadRational(self.a, -self.b, self.d)

    def __repr__(self):
        unit = "i" if self.d == -1 else "sqrt2"
        return f"({self.a} + {self.b}*{unit})"


def _as_scalar(value):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, QuadRational)):
        return value
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


class HomogeneousPoly:
    """Dense homogeneous bivariate polynomial of fixed nominal degree.

    ``coeffs[i]`` is the coefficient of x^(n-i) * y^i, so the vector has
    exactly ``degree + 1`` entries.  The degree is nominal: a zero
    polynomial keeps the degree it was created with, which preserves
    shape information for derivatives and quotients.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Iterable):
        coeffs = tuple(_as_scalar(c) for c in coeffs)
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if len(coeffs) != degree + 1:
            raise ValueError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousPoly is immutable")

    @classmethod
    def zero(cls, degree: int) -> "HomogeneousPoly":
        return cls(degree, [0] * (degree + 1))

    @classmethod
    def from_sparse(cls, degree: int, entries: Mapping[int, object]) -> "HomogeneousPoly":
        coeffs = [Fraction(0)] * (degree + 1)
        for i, c in entries.items():
            if not 0 <= i <= degree:
                raise ValueError(f"coefficient index {i} outside 0..{degree}")
            coeffs[i] = _as_scalar(c)
        return cls(degree, coeffs)

    def coefficient(self, i: int):
        """Coefficient of x^(n-i) y^i (zero outside the index range)."""
        if 0 <= i <= self.degree:
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(
                f"cannot add degree {self.degree} and degree {other.degree}")
        return HomogeneousPoly(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HomogeneousPoly(self.degree, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HomogeneousPoly):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return HomogeneousPoly(self.degree + other.degree, out)
        try:
            s = _as_scalar(other)
        except TypeError:
            return NotImplemented
        return HomogeneousPoly(self.degree, [c * s for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = HomogeneousPoly(0, [1])
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def map_coefficients(self, fn: Callable) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, [fn(c) for c in self.coeffs])

    def lift_quadratic(self, d: int) -> "HomogeneousPoly":
        """Reinterpret rational coefficients inside Q(sqrt d)."""
        return self.map_coefficients(lambda c: QuadRational(c, 0, d))

    def __repr__(self):
        return f"HomogeneousPoly({self.degree}, {list(self.coeffs)!r})"

    def __str__(self):
        n = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            xs = f"x^{n - i}" if n - i > 1 else ("x" if n - i == 1 else "")
            ys = f"y^{i}" if i > 1 else ("y" if i == 1 else "")
            mono = "*".join(p for p in (xs, ys) if p) or "1"
            if c == 1 and mono != "1":
                parts.append(mono)
            elif c == -1 and mono != "1":
                parts.append(f"-{mono}")
            elif mono == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


class UniPoly:
    """Univariate polynomial with ascending coefficients, kept canonical
    (no trailing zero coefficients; the zero polynomial is the empty
    vector and reports degree -1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = [_as_scalar(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly([])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return UniPoly(out)
        try:
            s = _as_scalar(other)
        except TypeError:
            return NotImplemented
        return UniPoly([c * s for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, z):
        """Horner evaluation; works for any scalar supporting * and +."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * z + c
        return acc if acc is not None else Fraction(0)

    def map_coefficients(self, fn: Callable) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def divmod_linear(self, root):
        """Synthetic division by (T - root): returns (quotient, remainder).

        The remainder equals ``self.evaluate(root)``; the division is exact
        whenever the remainder is zero.
        """
        if self.is_zero():
            return UniPoly([]), Fraction(0)
        quot = [None] * (len(self.coeffs) - 1)
        carry = self.coeffs[-1]
        for i in range(len(self.coeffs) - 2, -1, -1):
            quot[i] = carry
            carry = carry * root + self.coeffs[i]
        return UniPoly(quot), carry

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            t = "1" if i == 0 else ("T" if i == 1 else f"T^{i}")
            parts.append(str(c) if i == 0 else f"{c}*{t}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Matrix2:
    """A 2x2 matrix (a b; c d) over one scalar field."""

    a: object
    b: object
    c: object
    d: object

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def transpose(self) -> "Matrix2":
        return Matrix2(self.a, self.c, self.b, self.d)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)


def substitute_linear(W: HomogeneousPoly, M: Matrix2,
                      convention: str) -> HomogeneousPoly:
    """Evaluate W at a linear change of variables, exactly.

    convention="column" maps W(x, y) to W(a*x + b*y, c*x + d*y);
    convention="row" maps it to W(a*x + c*y, b*x + d*y), i.e. the column
    action of the transposed matrix.  Both appear in practice and silent
    transposition is a classic bug, so the caller must always say which
    one it wants.
    """
    if convention == "column":
        u = HomogeneousPoly(1, [M.a, M.b])
        v = HomogeneousPoly(1, [M.c, M.d])
    elif convention == "row":
        u = HomogeneousPoly(1, [M.a, M.c])
        v = HomogeneousPoly(1, [M.b, M.d])
    else:
        raise ValueError(f"convention must be 'row' or 'column', got {convention!r}")
    n = W.degree
    # Horner over the coefficient index: result = sum_i c_i u^(n-i) v^i
    acc = HomogeneousPoly(0, [W.coeffs[0]])
    vpow = HomogeneousPoly(0, [1])
    for i in range(1, n + 1):
        vpow = vpow * v
        acc = acc * u + vpow * W.coeffs[i]
    return acc


def apply_diff_operator(p: HomogeneousPoly, W: HomogeneousPoly) -> HomogeneousPoly:
    """Apply the constant-coefficient differential operator obtained from p
    by substituting d/dx for x and d/dy for y.

    Each monomial coefficient picks up the exact falling-factorial factors
    of repeated partial differentiation; the result is homogeneous of
    degree deg W - deg p.
    """
    if p.degree > W.degree:
        raise ValueError(
            f"operator degree {p.degree} exceeds target degree {W.degree}")
    n, m = W.degree, W.degree - p.degree
    out = [Fraction(0)] * (m + 1)
    for i, pc in enumerate(p.coeffs):
        if not pc:
            continue
        dx, dy = p.degree - i, i
        for k, wc in enumerate(W.coeffs):
            if not wc:
                continue
            if n - k < dx or k < dy:
                continue
            factor = math.perm(n - k, dx) * math.perm(k, dy)
            if factor:
                out[k - dy] += pc * wc * factor
    return HomogeneousPoly(m, out)


def _strip_y(W: HomogeneousPoly):
    """Split W = y^v * rest and dehomogenize rest at y = 1.

    Returns (v, ascending x-coefficients).  The returned list has a
    nonzero leading entry, so its length pins the x-degree exactly; any
    power of x dividing W shows up as low-order zeros.
    """
    v = next(i for i, c in enumerate(W.coeffs) if c)
    return v, list(reversed(W.coeffs[v:]))


def exact_divide(A: HomogeneousPoly, B: HomogeneousPoly) -> Optional[HomogeneousPoly]:
    """Exact quotient Q with A = B*Q, or None when B does not divide A.

    Works by factoring the pure power of y out of each operand,
    dehomogenizing at y = 1 and running exact univariate division with a
    zero-remainder check.
    """
    if B.is_zero():
        raise ValueError("division by the zero polynomial")
    if A.is_zero():
        if A.degree >= B.degree:
            return HomogeneousPoly.zero(A.degree - B.degree)
        return None
    if A.degree < B.degree:
        return None
    va, a = _strip_y(A)
    vb, b = _strip_y(B)
    if va < vb or len(a) < len(b):
        return None
    rem = list(a)
    lead = b[-1]
    qlen = len(a) - len(b) + 1
    q = [Fraction(0)] * qlen
    for k in range(qlen - 1, -1, -1):
        coef = rem[k + len(b) - 1] / lead
        q[k] = coef
        if coef:
            for j, bj in enumerate(b):
                rem[k + j] -= coef * bj
    if any(rem):
        return None
    # q[j] carries x^j y^(qlen-1-j); restoring y^(va-vb) gives the
    # homogeneous quotient of nominal degree deg A - deg B
    deg_q = A.degree - B.degree
    coeffs = [Fraction(0)] * (deg_q + 1)
    for j, c in enumerate(q):
        coeffs[(va - vb) + (qlen - 1 - j)] = c
    return HomogeneousPoly(deg_q, coeffs)


def solve_linear(A: Sequence[Sequence], b: Sequence) -> list:
    """Solve A x = b exactly over the rationals by Gaussian elimination.

    Pivots on the first nonzero entry of each column (magnitude-based
    pivoting is meaningless over an exact field).  Raises
    SingularMatrixError when the matrix is singular; never approximates.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_linear expects a square system")
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"singular matrix (column {col})")
        M[col], M[piv] = M[piv], M[col]
        pivval = M[col][col]
        M[col] = [e / pivval for e in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [er - f * ec for er, ec in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]

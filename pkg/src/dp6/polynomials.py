"""Univariate polynomials and binary forms over the rationals.

Only what the classifiers need: gcd, derivative, squarefree decomposition
(Yun) and root-multiplicity partitions of binary forms over the algebraic
closure.  Roots are never isolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .linalg import Q


def _trim(c: list[Fraction]) -> tuple[Fraction, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Coefficients in increasing degree; the zero polynomial has no coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: Sequence) -> "Poly":
        return cls(_trim([Q(c) for c in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, o: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(o.coeffs):
            a[i] += c
        return Poly(_trim(a))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, o: "Poly") -> "Poly":
        return self + (-o)

    def __mul__(self, o: "Poly") -> "Poly":
        if self.is_zero() or o.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(_trim(out))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, d: "Poly") -> tuple["Poly", "Poly"]:
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - len(d.coeffs) + 1, 0)
        lead = d.lead()
        for k in range(len(q) - 1, -1, -1):
            f = r[k + d.degree] / lead
            q[k] = f
            if f:
                for i, c in enumerate(d.coeffs):
                    r[k + i] -= f * c
        return Poly(_trim(q)), Poly(_trim(r[: d.degree] if d.degree > 0 else []))

    def __floordiv__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return self.divmod(d)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lead()
        return Poly(tuple(c / lc for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f = lc * prod a_i^i with a_i squarefree and coprime.

    Returns the non-constant factors with their multiplicities.
    """
    if f.degree < 1:
        return []
    out = []
    fp = f.derivative()
    a0 = gcd(f, fp)
    b = f // a0
    c = fp // a0
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = gcd(b, d)
        b = b // a
        c = d // a if not d.is_zero() else Poly(())
        d = c - b.derivative()
        if a.degree >= 1:
            out.append((a, i))
        i += 1
    return out


def root_partition(f: Poly) -> list[int]:
    """Multiplicities of the roots of f over the algebraic closure, descending."""
    parts: list[int] = []
    for a, mult in squarefree_decomposition(f):
        parts.extend([mult] * a.degree)
    return sorted(parts, reverse=True)


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form of fixed degree; coeffs[k] multiplies s^(d-k) t^k."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("binary form needs degree + 1 coefficients")

    @classmethod
    def of(cls, coeffs: Sequence) -> "BinaryForm":
        c = tuple(Q(x) for x in coeffs)
        return cls(len(c) - 1, c)

    @classmethod
    def linear(cls, a, b) -> "BinaryForm":
        """a*s + b*t."""
        return cls.of([a, b])

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, o: "BinaryForm") -> "BinaryForm":
        if self.degree != o.degree:
            raise ValueError("adding binary forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, o: "BinaryForm") -> "BinaryForm":
        return self + (-o)

    def __mul__(self, o: "BinaryForm") -> "BinaryForm":
        out = [Fraction(0)] * (self.degree + o.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return BinaryForm(self.degree + o.degree, tuple(out))

    def __call__(self, s, t) -> Fraction:
        d = self.degree
        return sum((c * Q(s) ** (d - k) * Q(t) ** k for k, c in enumerate(self.coeffs)), Fraction(0))

    def dehomogenize(self) -> Poly:
        """f(1, t)."""
        return Poly.of(self.coeffs)

    def multiplicity_at_infinity(self) -> int:
        """Order of vanishing at (s:t) = (0:1)."""
        return self.degree - self.dehomogenize().degree

    def root_partition(self) -> list[int]:
        if self.is_zero():
            raise ValueError("the zero form has every point as a root")
        parts = root_partition(self.dehomogenize())
        inf = self.multiplicity_at_infinity()
        if inf:
            parts.append(inf)
        return sorted(parts, reverse=True)

    def to_list(self) -> list[Fraction]:
        return list(self.coeffs)


def have_common_root(forms: Sequence[BinaryForm]) -> bool:
    """True iff the forms share a point of P^1 over the algebraic closure.

    Zero forms vanish everywhere and impose nothing.
    """
    live = [f for f in forms if not f.is_zero()]
    if not live:
        return True
    if all(f.multiplicity_at_infinity() > 0 for f in live):
        return True
    g = Poly(())
    for f in live:
        g = gcd(g, f.dehomogenize())
    return g.degree >= 1


def determinant_form(entries: Sequence[Sequence[BinaryForm]]) -> BinaryForm:
    """Leibniz expansion of a square matrix of linear forms."""
    n = len(entries)
    total = BinaryForm.zero(n)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = BinaryForm.of([1])
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total

"""Intersection theory on Pic of the minimal resolution, ZZ<h, e1, e2, e3>.

Sheaf classes are tracked as (rank, c1, chi).  On a rational surface the
Euler pairing of two such classes is

    chi(F, G) = r1*chi2 + r2*chi1 - r1*r2 + r2*(c1(F).K) - c1(F).c1(G)

which is what Hirzebruch-Riemann-Roch gives once ch2 is eliminated in
favour of chi.  It is integral, bilinear, and on line bundles reduces to
chi(O(D2 - D1)).  Classes of negative rank are handled by the same
bilinear formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotExceptional

K_SQUARED = 6


@dataclass(frozen=True, order=True)
class DivisorClass:
    """a*h + b1*e1 + b2*e2 + b3*e3."""

    a: int = 0
    b1: int = 0
    b2: int = 0
    b3: int = 0

    @classmethod
    def of(cls, coeffs) -> "DivisorClass":
        a, b1, b2, b3 = (int(x) for x in coeffs)
        return cls(a, b1, b2, b3)

    def __add__(self, o: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + o.a, self.b1 + o.b1, self.b2 + o.b2, self.b3 + o.b3)

    def __sub__(self, o: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - o.a, self.b1 - o.b1, self.b2 - o.b2, self.b3 - o.b3)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b1, -self.b2, -self.b3)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b1, n * self.b2, n * self.b3)

    __rmul__ = __mul__

    def dot(self, o: "DivisorClass") -> int:
        return self.a * o.a - self.b1 * o.b1 - self.b2 * o.b2 - self.b3 * o.b3

    def to_list(self) -> list[int]:
        return [self.a, self.b1, self.b2, self.b3]

    def __str__(self) -> str:
        terms = []
        for c, name in ((self.a, "h"), (self.b1, "e1"), (self.b2, "e2"), (self.b3, "e3")):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}{name}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


H = DivisorClass(1, 0, 0, 0)
E1 = DivisorClass(0, 1, 0, 0)
E2 = DivisorClass(0, 0, 1, 0)
E3 = DivisorClass(0, 0, 0, 1)
ZERO = DivisorClass()
BASIS = (H, E1, E2, E3)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    return d1.dot(d2)


def canonical_class() -> DivisorClass:
    return DivisorClass(-3, 1, 1, 1)


K = canonical_class()


def gram_matrix() -> list[list[int]]:
    return [[intersect(x, y) for y in BASIS] for x in BASIS]


def riemann_roch_chi(d: DivisorClass) -> int:
    twice = d.dot(d - K)
    if twice % 2:
        raise ArithmeticError(f"odd D.(D-K) for {d}")  # impossible: D.(D-K) = D^2 + D.K is even
    return 1 + twice // 2


@dataclass(frozen=True)
class NumericalClass:
    rank: int
    c1: DivisorClass
    chi: int

    def __add__(self, o: "NumericalClass") -> "NumericalClass":
        return NumericalClass(self.rank + o.rank, self.c1 + o.c1, self.chi + o.chi)

    def __sub__(self, o: "NumericalClass") -> "NumericalClass":
        return NumericalClass(self.rank - o.rank, self.c1 - o.c1, self.chi - o.chi)

    def __neg__(self) -> "NumericalClass":
        return NumericalClass(-self.rank, -self.c1, -self.chi)

    def __rmul__(self, n: int) -> "NumericalClass":
        return NumericalClass(n * self.rank, n * self.c1, n * self.chi)

    def is_zero(self) -> bool:
        return self.rank == 0 and self.c1 == ZERO and self.chi == 0

    def to_dict(self) -> dict:
        return {"rank": self.rank, "c1": self.c1.to_list(), "chi": self.chi}


ZERO_CLASS = NumericalClass(0, ZERO, 0)


def line_bundle(d: DivisorClass) -> NumericalClass:
    return NumericalClass(1, d, riemann_roch_chi(d))


O_CLASS = line_bundle(ZERO)


def torsion_class(curve: DivisorClass, chi: int = 0) -> NumericalClass:
    """Class of a sheaf supported on a curve; O_C(-1) on a smooth rational C has chi = 0."""
    return NumericalClass(0, curve, chi)


def euler_pairing(x: NumericalClass, y: NumericalClass) -> int:
    return x.rank * y.chi + y.rank * x.chi - x.rank * y.rank + y.rank * x.c1.dot(K) - x.c1.dot(y.c1)


def twist(x: NumericalClass, d: DivisorClass) -> NumericalClass:
    twice = x.rank * (d.dot(d) - d.dot(K))
    return NumericalClass(x.rank, x.c1 + x.rank * d, x.chi + twice // 2 + d.dot(x.c1))


def dual(x: NumericalClass) -> NumericalClass:
    """Class of the derived dual; chi is fixed by chi(F^v) = chi(F, O)."""
    return NumericalClass(x.rank, -x.c1, euler_pairing(x, O_CLASS))


def mutate_left(through: NumericalClass, x: NumericalClass) -> NumericalClass:
    if euler_pairing(through, through) != 1:
        raise NotExceptional(f"chi(E, E) = {euler_pairing(through, through)} for {through}")
    return x - euler_pairing(through, x) * through


def mutate_left_through(collection, x: NumericalClass) -> NumericalClass:
    """Left mutation through <E_1, ..., E_n>, i.e. L_{E_1} o ... o L_{E_n}."""
    for e in reversed(list(collection)):
        x = mutate_left(e, x)
    return x


def chi_E2(x: NumericalClass) -> int:
    return 2 * x.chi + twist(x, K).chi - 3 * x.rank


def chi_E3(x: NumericalClass) -> int:
    return x.chi + twist(x, K).chi - 2 * x.rank


@dataclass(frozen=True)
class HilbertPolynomial:
    """c2*t^2 + c1*t + c0; must take integer values at integers."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c2", "c1", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not self.is_integer_valued():
            raise ValueError(f"{self} is not integer valued")

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return (self.c2 * t + self.c1) * t + self.c0

    def is_integer_valued(self) -> bool:
        return all(self(t).denominator == 1 for t in range(-3, 4))

    def substitute(self, a, b) -> "HilbertPolynomial":
        """p(a*t + b)."""
        a, b = Fraction(a), Fraction(b)
        return HilbertPolynomial(self.c2 * a * a, 2 * self.c2 * a * b + self.c1 * a,
                                 self.c2 * b * b + self.c1 * b + self.c0)

    def __add__(self, o: "HilbertPolynomial") -> "HilbertPolynomial":
        return HilbertPolynomial(self.c2 + o.c2, self.c1 + o.c1, self.c0 + o.c0)

    def __sub__(self, o: "HilbertPolynomial") -> "HilbertPolynomial":
        return HilbertPolynomial(self.c2 - o.c2, self.c1 - o.c1, self.c0 - o.c0)

    def __rmul__(self, n) -> "HilbertPolynomial":
        return HilbertPolynomial(n * self.c2, n * self.c1, n * self.c0)

    def rank(self) -> Fraction:
        # leading coefficient is rank * K^2 / 2
        return self.c2 / (K_SQUARED // 2)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c2, self.c1, self.c0)

    def __str__(self) -> str:
        return f"{self.c2}t^2 + {self.c1}t + {self.c0}"


def hilbert_poly_of_class(x: NumericalClass) -> HilbertPolynomial:
    # chi(F(-tK)) = chi + t c1.(-K) + rank * K^2 * t(t+1)/2
    half = K_SQUARED // 2
    return HilbertPolynomial(half * x.rank, half * x.rank - x.c1.dot(K), x.chi)


def hd(d: int) -> HilbertPolynomial:
    """(3t + d)(t + 1)."""
    return HilbertPolynomial(3, 3 + d, d)


def hprime(d: int) -> HilbertPolynomial:
    """d*t + 1, the Hilbert polynomial of a degree d rational normal curve."""
    return HilbertPolynomial(0, d, 1)


def is_rank_one_polynomial(p: HilbertPolynomial) -> bool:
    """Leading term 3t^2 forces rank 1, the hypothesis under which semistable = stable = torsion-free."""
    return p.rank() == 1

"""Seeded generators of random classes and family inputs, shared by tests and `dp6 verify`."""

from __future__ import annotations

import random
from fractions import Fraction

from .families import BilinearPencil, ConfigP1P1, PointConfigP2, Tensor222
from .lattice import DivisorClass, NumericalClass
from .linalg import Mat


def divisor(rng: random.Random, bound: int = 6) -> DivisorClass:
    return DivisorClass(*(rng.randint(-bound, bound) for _ in range(4)))


def numerical_class(rng: random.Random, bound: int = 6) -> NumericalClass:
    return NumericalClass(rng.randint(-bound, bound), divisor(rng, bound), rng.randint(-3 * bound, 3 * bound))


def invertible(rng: random.Random, n: int, spread: int = 3) -> Mat:
    while True:
        m = Mat([[rng.randint(-spread, spread) for _ in range(n)] for _ in range(n)], n, n)
        if m.det() != 0:
            return m


def _jordan(partition, eigenvalues) -> Mat:
    rows = [[0] * 3 for _ in range(3)]
    pos = 0
    for size, lam in zip(partition, eigenvalues):
        for i in range(size):
            rows[pos + i][pos + i] = lam
            if i + 1 < size:
                rows[pos + i][pos + i + 1] = 1
        pos += size
    return Mat(rows, 3, 3)


PENCIL_PARTITIONS = ((1, 1, 1), (2, 1), (3,))


def pencil(rng: random.Random, partition=None) -> tuple[BilinearPencil, tuple[int, ...]]:
    """A valid pencil with prescribed root partition of its cubic, disguised by random changes of basis.

    The normal form is (I, J) with J nonderogatory, so no member has rank one;
    the cubic det(s + t J) has one root per eigenvalue with multiplicity the
    Jordan block size.
    """
    partition = partition or rng.choice(PENCIL_PARTITIONS)
    eig = rng.sample(range(-5, 6), len(partition))
    j = _jordan(partition, eig)
    left, right = invertible(rng, 3), invertible(rng, 3)
    a0, a1 = left @ Mat.identity(3) @ right, left @ j @ right
    g = invertible(rng, 2)
    b0 = a0.scale(g[0, 0]) + a1.scale(g[0, 1])
    b1 = a0.scale(g[1, 0]) + a1.scale(g[1, 1])
    return BilinearPencil(b0, b1), tuple(partition)


def tensor(rng: random.Random, spread: int = 3) -> Tensor222:
    while True:
        t = Tensor222.of([[[rng.randint(-spread, spread) for _ in range(2)] for _ in range(2)] for _ in range(2)])
        if not t.is_zero():
            return t


def w_tensor() -> Tensor222:
    return Tensor222.from_entries({(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1})


def ghz_tensor() -> Tensor222:
    return Tensor222.from_entries({(0, 0, 0): 1, (1, 1, 1): 1})


def p2_config(rng: random.Random, target_type: int) -> PointConfigP2:
    """A random configuration of the given type, in general position otherwise."""

    def vec():
        while True:
            v = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
            if any(v):
                return v

    def indep(*vs):
        return Mat([list(v) for v in vs], len(vs), 3).rank() == len(vs)

    while True:
        p, q, r = vec(), vec(), vec()
        if target_type in (0, 1):
            if target_type == 1:
                a, b = rng.randint(-3, 3), rng.randint(-3, 3)
                r = tuple(a * x + b * y for x, y in zip(p, q))
            if not all(indep(x, y) for x, y in ((p, q), (p, r), (q, r))):
                continue
            if (Mat([p, q, r], 3, 3).det() == 0) != (target_type == 1):
                continue
            return PointConfigP2("points", (p, q, r))
        if target_type in (2, 3):
            if target_type == 3:
                a, b = rng.randint(-3, 3), rng.randint(1, 3)
                r = tuple(a * x + b * y for x, y in zip(p, q))
            if not (indep(p, q) and indep(p, r)):
                continue
            if (Mat([p, q, r], 3, 3).det() == 0) != (target_type == 3):
                continue
            return PointConfigP2("jet2", (p, r), q)
        if target_type in (4, 5):
            if not indep(p, q):
                continue
            c = Fraction(0) if target_type == 5 else Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            return PointConfigP2("jet3", (p,), q, c)
        raise ValueError(f"no blowup configuration of type {target_type}")


def p1p1_config(rng: random.Random, target_type: int) -> ConfigP1P1:
    def pt():
        while True:
            v = (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            if any(v):
                return v

    def prop(a, b):
        return a[0] * b[1] == a[1] * b[0]

    while True:
        u1, v1, u2, v2 = pt(), pt(), pt(), pt()
        if target_type == 0 and not prop(u1, u2) and not prop(v1, v2):
            return ConfigP1P1("points", ((u1, v1), (u2, v2)))
        if target_type == 2:
            if rng.random() < 0.5:
                s = rng.choice([1, -1, 2])
                u2 = (s * u1[0], s * u1[1])
            else:
                s = rng.choice([1, -1, 2])
                v2 = (s * v1[0], s * v1[1])
            if prop(u1, u2) != prop(v1, v2):
                return ConfigP1P1("points", ((u1, v1), (u2, v2)))
        if target_type in (1, 3):
            w, z = u2, v2
            if target_type == 3:
                if rng.random() < 0.5:
                    w = u1
                else:
                    z = v1
            along = (not prop(u1, w), not prop(v1, z))
            if target_type == 1 and all(along):
                return ConfigP1P1("tangent", ((u1, v1),), (w, z))
            if target_type == 3 and along[0] != along[1]:
                return ConfigP1P1("tangent", ((u1, v1),), (w, z))
        if target_type not in (0, 1, 2, 3):
            raise ValueError(f"no quadric configuration of type {target_type}")

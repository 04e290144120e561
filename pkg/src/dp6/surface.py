"""The six types of sextic du Val del Pezzo surfaces and line-bundle cohomology.

Everything lives on the minimal resolution, an iterated blowup of P^2 in
three (possibly infinitely near) points, so a type is pure lattice data:
its (-2)-curves, its (-1)-curves and the resulting singularities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainRejection, InternalInvariantViolation
from .lattice import E1, E2, E3, H, K, DivisorClass

DELTA_12 = E1 - E2
DELTA_23 = E2 - E3
DELTA_123 = H - E1 - E2 - E3

DELTA_NAMES = {DELTA_12: "Delta12", DELTA_23: "Delta23", DELTA_123: "Delta123"}
DELTA_BY_NAME = {v: k for k, v in DELTA_NAMES.items()}

# Chosen so that A.C >= 1 for every curve of every inventory below.
REFERENCE_AMPLE = DivisorClass(7, -3, -2, -1)


@dataclass(frozen=True)
class CurveInventory:
    minus_one: tuple[DivisorClass, ...]
    minus_two: tuple[DivisorClass, ...]

    @property
    def curves(self) -> tuple[DivisorClass, ...]:
        return self.minus_one + self.minus_two


@dataclass(frozen=True)
class ZeroDimScheme:
    """Disjoint union of Spec k[t]/t^m, one part per connected component."""

    partition: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.partition):
            raise ValueError(f"bad partition {self.partition}")
        object.__setattr__(self, "partition", tuple(sorted(self.partition, reverse=True)))

    @property
    def length(self) -> int:
        return sum(self.partition)

    @property
    def support(self) -> int:
        return len(self.partition)

    def to_list(self) -> list[int]:
        return list(self.partition)


@dataclass(frozen=True)
class DP6Type:
    id: int
    delta_set: tuple[DivisorClass, ...]
    singularities: tuple[str, ...]
    toric: bool

    @property
    def singularity_label(self) -> str:
        return " + ".join(self.singularities) if self.singularities else "smooth"

    @property
    def delta_names(self) -> list[str]:
        return [DELTA_NAMES[d] for d in self.delta_set]


TYPES: tuple[DP6Type, ...] = (
    DP6Type(0, (), (), True),
    DP6Type(1, (DELTA_123,), ("A1",), False),
    DP6Type(2, (DELTA_12,), ("A1",), True),
    DP6Type(3, (DELTA_12, DELTA_123), ("A1", "A1"), True),
    DP6Type(4, (DELTA_12, DELTA_23), ("A2",), False),
    DP6Type(5, (DELTA_12, DELTA_23, DELTA_123), ("A2", "A1"), True),
)

_L12, _L13, _L23 = H - E1 - E2, H - E1 - E3, H - E2 - E3

_MINUS_ONE = {
    0: (E1, E2, E3, _L12, _L13, _L23),
    1: (E1, E2, E3),
    2: (E2, E3, _L12, _L13),
    3: (E2, E3),
    4: (E3, _L12),
    5: (E3,),
}

# (z2, z3) partitions per type
_Z_TABLE = {
    0: ((1, 1, 1), (1, 1)),
    1: ((1, 1, 1), (2,)),
    2: ((2, 1), (1, 1)),
    3: ((2, 1), (2,)),
    4: ((3,), (1, 1)),
    5: ((3,), (2,)),
}


def get_type(t) -> DP6Type:
    if isinstance(t, DP6Type):
        return t
    if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t <= 5:
        raise DomainRejection(f"no surface type {t!r}; expected 0..5", condition="BadType")
    return TYPES[t]


_inventory_override: dict[int, CurveInventory] = {}


_INVENTORIES = {t.id: CurveInventory(_MINUS_ONE[t.id], t.delta_set) for t in TYPES}


def negative_curves(t) -> CurveInventory:
    t = get_type(t)
    if t.id in _inventory_override:
        return _inventory_override[t.id]
    return _INVENTORIES[t.id]


def z_scheme(t, d: int) -> ZeroDimScheme:
    t = get_type(t)
    if d == 1:
        return ZeroDimScheme((1,))
    if d in (2, 3):
        return ZeroDimScheme(_Z_TABLE[t.id][d - 2])
    raise DomainRejection(f"Z_d is defined for d in 1..3, got {d}", condition="BadIndex")


def type_from_schemes(z2, z3) -> DP6Type:
    """The unique type with the given Z2 and Z3 partitions."""
    key = (tuple(sorted(z2, reverse=True)), tuple(sorted(z3, reverse=True)))
    hits = [t for t in TYPES if _Z_TABLE[t.id] == key]
    if len(hits) != 1:
        raise InternalInvariantViolation(f"{len(hits)} types match z2={key[0]}, z3={key[1]}")
    return hits[0]


def _chi(x: int, y1: int, y2: int, y3: int) -> int:
    # Riemann-Roch with K = (-3; 1, 1, 1)
    return 1 + (x * x - y1 * y1 - y2 * y2 - y3 * y3 + 3 * x + y1 + y2 + y3) // 2


def _h0(cs, x: int, y1: int, y2: int, y3: int) -> int:
    ax, a1, a2, a3 = REFERENCE_AMPLE.a, REFERENCE_AMPLE.b1, REFERENCE_AMPLE.b2, REFERENCE_AMPLE.b3
    while True:
        if x * ax - y1 * a1 - y2 * a2 - y3 * a3 < 0:
            return 0
        for c0, c1, c2, c3 in cs:
            if x * c0 - y1 * c1 - y2 * c2 - y3 * c3 < 0:
                x, y1, y2, y3 = x - c0, y1 - c1, y2 - c2, y3 - c3
                break
        else:
            return _chi(x, y1, y2, y3)


# one memo table per distinct inventory, keyed by the divisor coefficients
_MEMO: dict[tuple, dict[tuple[int, int, int, int], tuple[int, int, int]]] = {}


def cohomology(t, d: DivisorClass) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(d) on the minimal resolution of a surface of type t.

    Curves meeting d negatively are fixed components and are peeled off
    until d is nef (then all higher cohomology vanishes) or fails to meet
    the reference ample class non-negatively (then d is not effective).
    h2 comes from Serre duality and h1 from Riemann-Roch.
    """
    cs = tuple((c.a, c.b1, c.b2, c.b3) for c in negative_curves(t).curves)
    memo = _MEMO.setdefault(cs, {})
    key = (d.a, d.b1, d.b2, d.b3)
    hit = memo.get(key)
    if hit is not None:
        return hit
    x, y1, y2, y3 = key
    h0 = _h0(cs, x, y1, y2, y3)
    h2 = _h0(cs, -3 - x, 1 - y1, 1 - y2, 1 - y3)
    h1 = h0 + h2 - _chi(x, y1, y2, y3)
    if h1 < 0:
        raise InternalInvariantViolation(f"negative h1 {(h0, h1, h2)} for {d}")
    memo[key] = (h0, h1, h2)
    return (h0, h1, h2)


def graded_dims(triple) -> list[int]:
    """Cohomology triple as graded dimensions with trailing zeros dropped."""
    out = list(triple)
    while out and out[-1] == 0:
        out.pop()
    return out


def f1_invariants(t) -> tuple[int, int]:
    t = get_type(t)
    z2, z3 = z_scheme(t, 2), z_scheme(t, 3)
    length = z2.length * z3.length
    support = z2.support * z3.support
    lines = len(negative_curves(t).minus_one)
    if support != lines:
        raise InternalInvariantViolation(f"type {t.id}: {support} support points but {lines} (-1)-curves")
    return length, support


def check_inventory(t) -> list[str]:
    """Problems with the curve inventory of t; empty when it is consistent."""
    t = get_type(t)
    inv = negative_curves(t)
    problems = []
    for c in inv.minus_one:
        if c.dot(c) != -1 or c.dot(K) != -1:
            problems.append(f"{c} is not a (-1)-class")
    for c in inv.minus_two:
        if c.dot(c) != -2 or c.dot(K) != 0:
            problems.append(f"{c} is not a (-2)-class")
    curves = inv.curves
    for i, a in enumerate(curves):
        if a.dot(REFERENCE_AMPLE) < 1:
            problems.append(f"reference class is not positive on {a}")
        for b in curves[i + 1:]:
            if a.dot(b) < 0:
                problems.append(f"{a} and {b} meet negatively")
    if set(inv.minus_two) != set(t.delta_set):
        problems.append("(-2)-curves differ from the delta set")
    return problems


def type_table(t) -> dict:
    t = get_type(t)
    inv = negative_curves(t)
    return {
        "type": t.id,
        "delta_set": t.delta_names,
        "singularities": t.singularity_label,
        "toric": t.toric,
        "minus_one_curves": [c.to_list() for c in inv.minus_one],
        "minus_two_curves": [c.to_list() for c in inv.minus_two],
        "z1": z_scheme(t, 1).to_list(),
        "z2": z_scheme(t, 2).to_list(),
        "z3": z_scheme(t, 3).to_list(),
    }

"""Classification of concrete inputs from the three standard families.

* pencils of 3x3 bilinear forms (codimension two linear sections of P2 x P2),
* 2x2x2 tensors (hyperplane sections of P1 x P1 x P1),
* length three subschemes of P2 and length two subschemes of P1 x P1
  (blowup constructions).

Every classifier returns the type together with the Z2 and Z3 partitions it
derives from the input, and refuses to return if those disagree with the
type table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import (
    DomainRejection, FatPoint, InternalInvariantViolation, InvalidConfig, NotDelPezzo, ParseError, PencilInDiscriminant,
    PencilInDiscriminantWithRankOneMember, RankOneMember,
)
from .linalg import Mat, Q
from .polynomials import BinaryForm, determinant_form, have_common_root
from .surface import DP6Type, type_from_schemes, z_scheme

BRAUER_ORDERS = (2, 3)
FIBER_BUNDLE_DIMS = {"F2": 1, "F3": 2, "F4": 3}
FAMILIES = ("pencil", "tensor", "blowup-p2", "blowup-p1p1")


def rational_json(x) -> Any:
    """Integers stay integers, other rationals become "p/q" strings."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"expected an integer or a 'p/q' string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse rational {x!r}") from exc
    raise ParseError(f"expected an integer or a 'p/q' string, got {x!r}")


def _vector(x, n: int, what: str) -> list[Fraction]:
    if not isinstance(x, list) or len(x) != n:
        raise ParseError(f"{what} must be a list of {n} rationals")
    return [parse_rational(v) for v in x]


def _matrix(x, n: int, what: str) -> Mat:
    if not isinstance(x, list) or len(x) != n:
        raise ParseError(f"{what} must be a {n}x{n} array")
    return Mat([_vector(r, n, what) for r in x], n, n)


@dataclass
class ClassificationReport:
    family: str
    type: DP6Type
    z2: tuple[int, ...]
    z3: tuple[int, ...]
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        self.z2 = tuple(sorted(self.z2, reverse=True))
        self.z3 = tuple(sorted(self.z3, reverse=True))
        if self.z2 != z_scheme(self.type, 2).partition or self.z3 != z_scheme(self.type, 3).partition:
            raise InternalInvariantViolation(
                f"{self.family}: derived z2={list(self.z2)}, z3={list(self.z3)} disagree with type {self.type.id}"
            )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "type": self.type.id,
            "delta_set": self.type.delta_names,
            "singularities": self.type.singularity_label,
            "z1": z_scheme(self.type, 1).to_list(),
            "z2": list(self.z2),
            "z3": list(self.z3),
            "brauer_orders": list(BRAUER_ORDERS),
            "diagnostics": self.diagnostics,
            "fiber_bundle_dims": dict(FIBER_BUNDLE_DIMS),
        }


def _report(family: str, z2, z3, diagnostics: dict) -> ClassificationReport:
    t = type_from_schemes(z2, z3)
    return ClassificationReport(family, t, tuple(z2), tuple(z3), diagnostics)


# --- pencils of bilinear forms ------------------------------------------------


@dataclass(frozen=True)
class BilinearPencil:
    b0: Mat
    b1: Mat

    def member(self, s, t) -> Mat:
        return self.b0.scale(s) + self.b1.scale(t)

    def linear_entries(self) -> list[list[BinaryForm]]:
        return [[BinaryForm.linear(self.b0[i, j], self.b1[i, j]) for j in range(3)] for i in range(3)]

    @classmethod
    def from_json(cls, data) -> "BilinearPencil":
        if not isinstance(data, dict) or "b0" not in data or "b1" not in data:
            raise ParseError('pencil input needs "b0" and "b1"')
        return cls(_matrix(data["b0"], 3, "b0"), _matrix(data["b1"], 3, "b1"))


def pencil_cubic(p: BilinearPencil) -> BinaryForm:
    """det(s*b0 + t*b1)."""
    return determinant_form(p.linear_entries())


def pencil_minors(p: BilinearPencil) -> list[BinaryForm]:
    e = p.linear_entries()
    out = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    out.append(e[r1][c1] * e[r2][c2] - e[r1][c2] * e[r2][c1])
    return out


def pencil_validate(p: BilinearPencil) -> None:
    _validated_cubic(p)


def _validated_cubic(p: BilinearPencil) -> BinaryForm:
    flat = Mat([[p.b0[i, j] for i in range(3) for j in range(3)], [p.b1[i, j] for i in range(3) for j in range(3)]], 2, 9)
    if flat.rank() < 2:
        raise InvalidConfig("b0 and b1 are linearly dependent")
    violations = []
    cubic = pencil_cubic(p)
    if cubic.is_zero():
        violations.append("PencilInDiscriminant")
    if have_common_root(pencil_minors(p)):
        violations.append("RankOneMember")
    if violations == ["PencilInDiscriminant", "RankOneMember"]:
        raise PencilInDiscriminantWithRankOneMember(
            "the pencil lies in the discriminant cubic and meets the Segre variety", tuple(violations))
    if violations == ["PencilInDiscriminant"]:
        raise PencilInDiscriminant("every member of the pencil is degenerate", tuple(violations))
    if violations == ["RankOneMember"]:
        raise RankOneMember("the pencil contains a form of rank one", tuple(violations))
    return cubic


def _invertible_member(p: BilinearPencil) -> tuple[int, Mat]:
    for t in range(4):
        m = p.member(1, t)
        if m.det() != 0:
            return t, m
    raise InternalInvariantViolation("no invertible member among t/s = 0..3 although the cubic is nonzero")


def _nonderogatory(a: Mat) -> bool:
    powers = [Mat.identity(3), a, a @ a]
    return Mat([[x for r in pw.rows for x in r] for pw in powers], 3, 9).rank() == 3


_PENCIL_TYPES = {(1, 1, 1): 0, (2, 1): 2, (3,): 4}


def pencil_classify(p: BilinearPencil) -> ClassificationReport:
    cubic = _validated_cubic(p)
    partition = tuple(cubic.root_partition())
    t0, m0 = _invertible_member(p)
    # any member independent of m0; b1 works unless t0 = 0 makes m0 = b0
    other = p.b1 if t0 == 0 else p.b0
    a = m0.inverse() @ other
    if not _nonderogatory(a):
        raise InternalInvariantViolation("valid pencil with a derogatory normal form")
    if partition not in _PENCIL_TYPES:
        raise InternalInvariantViolation(f"cubic root partition {partition}")
    diagnostics = {
        "cubic": [rational_json(c) for c in cubic.to_list()],
        "root_partition": list(partition),
        "invertible_member_t": t0,
    }
    report = _report("pencil", partition, (1, 1), diagnostics)
    if report.type.id != _PENCIL_TYPES[partition]:
        raise InternalInvariantViolation("pencil type table disagrees with the Z-scheme table")
    return report


# --- 2x2x2 tensors ------------------------------------------------------------------


@dataclass(frozen=True)
class Tensor222:
    t: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @classmethod
    def of(cls, arr) -> "Tensor222":
        return cls(tuple(tuple(tuple(Q(arr[i][j][k]) for k in range(2)) for j in range(2)) for i in range(2)))

    @classmethod
    def from_entries(cls, entries: dict[tuple[int, int, int], Any]) -> "Tensor222":
        arr = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        for (i, j, k), v in entries.items():
            arr[i][j][k] = v
        return cls.of(arr)

    @classmethod
    def from_json(cls, data) -> "Tensor222":
        if not isinstance(data, dict) or "t" not in data:
            raise ParseError('tensor input needs "t"')
        arr = data["t"]
        try:
            ok = len(arr) == 2 and all(len(a) == 2 and all(len(b) == 2 for b in a) for a in arr)
        except TypeError:
            ok = False
        if not ok:
            raise ParseError('"t" must be a 2x2x2 array')
        return cls.of([[[parse_rational(x) for x in b] for b in a] for a in arr])

    def __getitem__(self, ijk) -> Fraction:
        i, j, k = ijk
        return self.t[i][j][k]

    def is_zero(self) -> bool:
        return all(x == 0 for a in self.t for b in a for x in b)

    def permute(self, perm: Sequence[int]) -> "Tensor222":
        """Tensor whose (i0, i1, i2) entry is self at the positions permuted by perm."""
        arr = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    idx = (i, j, k)
                    arr[idx[perm[0]]][idx[perm[1]]][idx[perm[2]]] = self.t[i][j][k]
        return Tensor222.of(arr)

    def act(self, g: Sequence[Mat]) -> "Tensor222":
        """(g0 x g1 x g2) applied to the tensor."""
        arr = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    arr[i][j][k] = sum(
                        (g[0][i, a] * g[1][j, b] * g[2][k, c] * self.t[a][b][c]
                         for a in range(2) for b in range(2) for c in range(2)),
                        Fraction(0),
                    )
        return Tensor222.of(arr)

    def slices(self, axis: int) -> tuple[Mat, Mat]:
        def entry(s, x, y):
            idx = [0, 0, 0]
            others = [a for a in range(3) if a != axis]
            idx[axis], idx[others[0]], idx[others[1]] = s, x, y
            return self.t[idx[0]][idx[1]][idx[2]]

        return tuple(Mat([[entry(s, x, y) for y in range(2)] for x in range(2)], 2, 2) for s in range(2))

    def flattening(self, axis: int) -> Mat:
        a0, a1 = self.slices(axis)
        return Mat([[x for r in a0.rows for x in r], [x for r in a1.rows for x in r]], 2, 4)

    def to_json(self) -> list:
        return [[[rational_json(x) for x in b] for b in a] for a in self.t]


def hyperdet(T: Tensor222) -> Fraction:
    """Cayley's hyperdeterminant of a 2x2x2 array."""
    a = T
    return (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
        - 2 * (
            a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
            + a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
            + a[0, 0, 0] * a[1, 0, 0] * a[0, 1, 1] * a[1, 1, 1]
            + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
            + a[0, 0, 1] * a[1, 0, 0] * a[0, 1, 1] * a[1, 1, 0]
            + a[0, 1, 0] * a[1, 0, 0] * a[0, 1, 1] * a[1, 0, 1]
        )
        + 4 * (a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0] + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1])
    )


def slice_discriminant(T: Tensor222, axis: int = 0) -> Fraction:
    """Discriminant of the binary quadratic det(x*A0 + y*A1) for the slices along axis."""
    a0, a1 = T.slices(axis)
    entries = [[BinaryForm.linear(a0[i, j], a1[i, j]) for j in range(2)] for i in range(2)]
    p, q, r = determinant_form(entries).coeffs
    return q * q - 4 * p * r


def flattening_ranks(T: Tensor222) -> tuple[int, int, int]:
    return tuple(T.flattening(axis).rank() for axis in range(3))


def tensor_classify(T: Tensor222) -> ClassificationReport:
    if T.is_zero():
        raise InvalidConfig("the zero tensor does not define a hyperplane section")
    ranks = flattening_ranks(T)
    det = hyperdet(T)
    if all(r == 1 for r in ranks):
        raise NotDelPezzo("O3", "decomposable tensor; the section is a union of three quadrics")
    if any(r == 1 for r in ranks):
        raise NotDelPezzo("O4", f"flattening ranks {list(ranks)}; the section contains a quadric")
    orbit, z3 = ("O7", (1, 1)) if det != 0 else ("O6", (2,))
    diagnostics = {"hyperdeterminant": rational_json(det), "flattening_ranks": list(ranks), "orbit": orbit}
    return _report("tensor", (1, 1, 1), z3, diagnostics)


# --- blowups of P2 ------------------------------------------------------------------


def _det3(u, v, w) -> Fraction:
    return Mat([u, v, w], 3, 3).det()


def _proportional(u, v) -> bool:
    return Mat([u, v], 2, len(u)).rank() < 2


def _nonzero(v, what: str) -> None:
    if all(x == 0 for x in v):
        raise InvalidConfig(f"{what} is the zero vector")


@dataclass(frozen=True)
class PointConfigP2:
    """A curvilinear length three subscheme of P2.

    kind "points": three distinct points.
    kind "jet2": a point, a second vector spanning the tangent line with it, and a third point.
    kind "jet3": a point, a tangent direction and the second order coefficient of a branch.
    kind "fat": the square of a maximal ideal, kept so it can be rejected.
    """

    kind: str
    points: tuple[tuple[Fraction, ...], ...] = ()
    direction: tuple[Fraction, ...] = ()
    curvature: Fraction = Fraction(0)

    @classmethod
    def from_json(cls, data) -> "PointConfigP2":
        if not isinstance(data, dict) or "kind" not in data:
            raise ParseError('blowup-p2 input needs "kind"')
        kind = data["kind"]
        try:
            if kind == "points":
                pts = data["points"]
                if not isinstance(pts, list) or len(pts) != 3:
                    raise ParseError('"points" must list three points')
                return cls(kind, tuple(tuple(_vector(p, 3, "point")) for p in pts))
            if kind == "jet2":
                return cls(kind, (tuple(_vector(data["point"], 3, "point")), tuple(_vector(data["third"], 3, "third"))),
                           tuple(_vector(data["direction"], 3, "direction")))
            if kind == "jet3":
                return cls(kind, (tuple(_vector(data["point"], 3, "point")),),
                           tuple(_vector(data["direction"], 3, "direction")), parse_rational(data["curvature"]))
            if kind == "fat":
                return cls(kind, (tuple(_vector(data["point"], 3, "point")),))
        except KeyError as exc:
            raise ParseError(f"blowup-p2 {kind!r} input is missing {exc.args[0]!r}") from exc
        raise ParseError(f"unknown blowup-p2 kind {kind!r}")


def blowup_p2_classify(y: PointConfigP2) -> ClassificationReport:
    if y.kind == "fat":
        raise FatPoint("the subscheme is the first infinitesimal neighbourhood of a point")
    for i, p in enumerate(y.points):
        _nonzero(p, f"point {i}")
    if y.kind == "points":
        p, q, r = y.points
        if _proportional(p, q) or _proportional(p, r) or _proportional(q, r):
            raise InvalidConfig("the three points are not distinct")
        on_line = _det3(p, q, r) == 0
        chain = (1, 1, 1)
        diagnostics = {"collinearity_det": rational_json(_det3(p, q, r))}
    elif y.kind in ("jet2", "jet3"):
        p = y.points[0]
        _nonzero(y.direction, "direction")
        if _proportional(p, y.direction):
            raise InvalidConfig("the direction does not span a line with the point")
        if y.kind == "jet2":
            r = y.points[1]
            if _proportional(p, r):
                raise InvalidConfig("the third point coincides with the first")
            value = _det3(p, y.direction, r)
            on_line = value == 0
            chain = (2, 1)
            diagnostics = {"tangent_line_value": rational_json(value)}
        else:
            on_line = y.curvature == 0
            chain = (3,)
            diagnostics = {"curvature": rational_json(y.curvature)}
    else:
        raise InvalidConfig(f"unknown configuration kind {y.kind!r}")
    diagnostics["on_a_line"] = on_line
    return _report("blowup-p2", chain, (2,) if on_line else (1, 1), diagnostics)


# --- blowups of P1 x P1 -----------------------------------------------------------------


@dataclass(frozen=True)
class ConfigP1P1:
    """Two distinct points, or a point with a tangent vector.

    A point is a pair (u, v) of homogeneous coordinates on the two factors.  A
    tangent vector is a pair (w, z) of vectors in k^2, read modulo u and v:
    its component along the first factor vanishes iff w is proportional to u.
    """

    kind: str
    points: tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]
    tangent: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None

    @classmethod
    def from_json(cls, data) -> "ConfigP1P1":
        if not isinstance(data, dict) or "kind" not in data:
            raise ParseError('blowup-p1p1 input needs "kind"')

        def pt(x):
            if not isinstance(x, list) or len(x) != 2:
                raise ParseError("a point of P1 x P1 is a pair of coordinate pairs")
            return (tuple(_vector(x[0], 2, "coordinate")), tuple(_vector(x[1], 2, "coordinate")))

        kind = data["kind"]
        try:
            if kind == "points":
                pts = data["points"]
                if not isinstance(pts, list) or len(pts) != 2:
                    raise ParseError('"points" must list two points')
                return cls(kind, (pt(pts[0]), pt(pts[1])))
            if kind == "tangent":
                return cls(kind, (pt(data["point"]),), pt(data["tangent"]))
        except KeyError as exc:
            raise ParseError(f"blowup-p1p1 {kind!r} input is missing {exc.args[0]!r}") from exc
        raise ParseError(f"unknown blowup-p1p1 kind {kind!r}")


def blowup_p1p1_classify(y: ConfigP1P1) -> ClassificationReport:
    for u, v in y.points:
        _nonzero(u, "first coordinate")
        _nonzero(v, "second coordinate")
    if y.kind == "points":
        (u1, v1), (u2, v2) = y.points
        same_first, same_second = _proportional(u1, u2), _proportional(v1, v2)
        if same_first and same_second:
            raise InvalidConfig("the two points coincide")
        shared = int(same_first) + int(same_second)
        z3 = (1, 1)
    elif y.kind == "tangent":
        (u, v), (w, z) = y.points[0], y.tangent
        along_first, along_second = not _proportional(u, w), not _proportional(v, z)
        if not (along_first or along_second):
            raise InvalidConfig("the tangent vector is zero")
        shared = int(along_first != along_second)
        z3 = (2,)
    else:
        raise InvalidConfig(f"unknown configuration kind {y.kind!r}")
    z2 = (2, 1) if shared else (1, 1, 1)
    report = _report("blowup-p1p1", z2, z3, {"shared_ruling": bool(shared)})
    if report.type.id not in (0, 1, 2, 3):
        raise InternalInvariantViolation(f"type {report.type.id} from a quadric configuration")
    return report


# --- dispatch -----------------------------------------------------------------------------


def parse_input(family: str, data):
    if family == "pencil":
        return BilinearPencil.from_json(data)
    if family == "tensor":
        return Tensor222.from_json(data)
    if family == "blowup-p2":
        return PointConfigP2.from_json(data)
    if family == "blowup-p1p1":
        return ConfigP1P1.from_json(data)
    raise ParseError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


_CLASSIFIERS = {
    "pencil": pencil_classify,
    "tensor": tensor_classify,
    "blowup-p2": blowup_p2_classify,
    "blowup-p1p1": blowup_p1p1_classify,
}


def classify(family: str, data) -> ClassificationReport:
    return _CLASSIFIERS[family](parse_input(family, data))


def classify_item(family: str, data) -> dict:
    """JSON-ready report, or an error payload for a domain rejection."""
    try:
        return classify(family, data).to_dict()
    except DomainRejection as exc:
        return exc.payload()


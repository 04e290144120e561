"""Independent reference computations used by the tests.

Nothing here imports the package's intersection, cohomology or linear
algebra code, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

# --- plain lattice arithmetic ------------------------------------------------

FORM = (1, -1, -1, -1)
K = (-3, 1, 1, 1)


def dot(x, y) -> int:
    return sum(f * a * b for f, a, b in zip(FORM, x, y))


def chi(d) -> int:
    dk = tuple(a - b for a, b in zip(d, K))
    return 1 + dot(d, dk) // 2


def rank(rows) -> int:
    """Row rank over Q by plain Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


# --- plane curves with base conditions ----------------------------------------
#
# X~ is P2 blown up in three (possibly infinitely near) points.  A section of
# a h + b1 e1 + b2 e2 + b3 e3 is a degree a form whose order along the k-th
# point of each curvilinear chain is at least the sum of -b over the chain up
# to that point.  Along a chain following the smooth branch w = y - g(x) = 0,
# the k-th valuation is the monomial valuation with weights (1, k) in (x, w).

# (base point, branch g as coefficient list, e-indices along the chain)
PLANE_MODELS = {
    0: [((0, 0), [], [1]), ((1, 0), [], [2]), ((0, 1), [], [3])],
    1: [((0, 0), [], [1]), ((1, 0), [], [2]), ((2, 0), [], [3])],
    2: [((0, 0), [], [1, 2]), ((0, 1), [], [3])],
    3: [((0, 0), [], [1, 2]), ((1, 0), [], [3])],
    4: [((0, 0), [0, 0, 1], [1, 2, 3])],
    5: [((0, 0), [], [1, 2, 3])],
}


def _pmul(p, q):
    out = {}
    for (i, j), a in p.items():
        for (k, l), b in q.items():
            out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
    return {k: v for k, v in out.items() if v}


def _ppow(p, n):
    out = {(0, 0): 1}
    for _ in range(n):
        out = _pmul(out, p)
    return out


def plane_h0(type_id: int, d) -> int:
    a, bs = d[0], d[1:]
    if a < 0:
        return 0
    monomials = [(i, j) for i in range(a + 1) for j in range(a + 1 - i)]
    rows = []
    for (x0, y0), g, chain in PLANE_MODELS[type_id]:
        # x = x0 + X, y = y0 + w + g(X)
        xs = {(0, 0): x0, (1, 0): 1} if x0 else {(1, 0): 1}
        ys = {(0, 1): 1}
        if y0:
            ys[(0, 0)] = y0
        for k, c in enumerate(g):
            if c:
                ys[(k, 0)] = ys.get((k, 0), 0) + c
        images = [_pmul(_ppow(xs, i), _ppow(ys, j)) for i, j in monomials]
        need = 0
        for k, idx in enumerate(chain, start=1):
            need += -bs[idx - 1]
            if need <= 0:
                continue
            for p in range(need):
                for q in range((need - p + k - 1) // k):
                    rows.append([img.get((p, q), 0) for img in images])
    return len(monomials) - rank(rows) if rows else len(monomials)


def plane_cohomology(type_id: int, d) -> tuple[int, int, int]:
    h0 = plane_h0(type_id, d)
    h2 = plane_h0(type_id, tuple(k - x for k, x in zip(K, d)))
    return h0, h0 + h2 - chi(d), h2


# --- toric models -------------------------------------------------------------
#
# Rays of P2 and the cones blown up in order; e_i is the pullback of the
# exceptional divisor created at step i, h the pullback of the line of ray (1, 0).

TORIC_BLOWUPS = {
    0: [((1, 0), (0, 1)), ((0, 1), (-1, -1)), ((-1, -1), (1, 0))],
    2: [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (-1, -1))],
    3: [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((-1, -1), (1, 0))],
    5: [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((1, 0), (2, 1))],
}


def _pullback(vec: dict, new_ray, cone):
    out = dict(vec)
    out[new_ray] = vec.get(cone[0], 0) + vec.get(cone[1], 0)
    return out


def toric_model(type_id: int):
    """Rays of the final fan and the divisor vectors of h, e1, e2, e3."""
    rays = [(1, 0), (0, 1), (-1, -1)]
    h = {(1, 0): 1}
    es = []
    for cone in TORIC_BLOWUPS[type_id]:
        new = (cone[0][0] + cone[1][0], cone[0][1] + cone[1][1])
        rays.append(new)
        h = _pullback(h, new, cone)
        es = [_pullback(e, new, cone) for e in es]
        es.append({new: 1})
    return rays, h, es


def toric_h0(type_id: int, d, bound: int = 30) -> int:
    rays, h, es = toric_model(type_id)
    coeff = {r: d[0] * h.get(r, 0) + sum(b * e.get(r, 0) for b, e in zip(d[1:], es)) for r in rays}
    return sum(
        1
        for m in product(range(-bound, bound + 1), repeat=2)
        if all(m[0] * u[0] + m[1] * u[1] >= -coeff[u] for u in rays)
    )


# --- Auslander algebras ----------------------------------------------------------


def sum_of_squares(m: int) -> int:
    return m * (m + 1) * (2 * m + 1) // 6

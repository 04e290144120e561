"""Auslander algebras of k[t]/t^m as quivers with relations.

The quiver has vertices 0..m-1, arrows beta_i: i-1 -> i and alpha_i: i -> i-1
for 1 <= i <= m-1, and relations

    beta_i alpha_i = alpha_{i+1} beta_{i+1}   (1 <= i <= m-2)
    beta_{m-1} alpha_{m-1} = 0.

In the matrix presentation the (k, j) slot, i.e. e_k R e_j, is
t^max(j-k, 0) k[t] / t^(m-k); alpha_i is t in slot (i-1, i) and beta_i is 1
in slot (i, i-1).  A module is a dimension vector with one rational matrix per
arrow; alpha[i-1] is the matrix of alpha_i and has shape (dim[i-1], dim[i]).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, InternalInvariantViolation, RelationViolation, UnsupportedSize
from .linalg import Mat, Q, column_space_basis, complement_basis

# --- the algebra -------------------------------------------------------------


def slot_range(m: int, k: int, j: int) -> range:
    """Exponents l with t^l a basis element of e_k R e_j."""
    return range(max(j - k, 0), m - k)


def slot_dim(m: int, k: int, j: int) -> int:
    return m - max(k, j)


@dataclass(frozen=True)
class AuslanderAlgebra:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise IndexOutOfRange(f"m must be positive, got {self.m}")

    @property
    def basis(self) -> list[tuple[int, int, int]]:
        """(k, j, l) for the element t^l of slot (k, j)."""
        return [(k, j, l) for k in range(self.m) for j in range(self.m) for l in slot_range(self.m, k, j)]

    @property
    def dimension(self) -> int:
        return sum(slot_dim(self.m, k, j) for k in range(self.m) for j in range(self.m))

    def multiply(self, x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int] | None:
        """Product of two basis elements, or None when it is zero."""
        k, j, l = x
        j2, i, l2 = y
        if j != j2:
            return None
        total = l + l2
        if total >= self.m - k:
            return None
        return (k, i, total)

    def alpha(self, i: int) -> tuple[int, int, int]:
        return (i - 1, i, 1)

    def beta(self, i: int) -> tuple[int, int, int]:
        return (i, i - 1, 0)

    def relations_hold(self) -> bool:
        m = self.m
        for i in range(1, m - 1):
            if self.multiply(self.beta(i), self.alpha(i)) != self.multiply(self.alpha(i + 1), self.beta(i + 1)):
                return False
        if m >= 2 and self.multiply(self.beta(m - 1), self.alpha(m - 1)) is not None:
            return False
        return True


def cartan_matrix(m: int) -> list[list[int]]:
    """C[i][j] = dim e_i R e_j = dim (P_j)_i."""
    return [[slot_dim(m, i, j) for j in range(m)] for i in range(m)]


# --- modules -----------------------------------------------------------------


@dataclass(frozen=True)
class QuiverModule:
    m: int
    dim: tuple[int, ...]
    alpha: tuple[Mat, ...]
    beta: tuple[Mat, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "dim", tuple(int(d) for d in self.dim))

    def validate(self) -> "QuiverModule":
        m, d = self.m, self.dim
        if m < 1 or len(d) != m or any(x < 0 for x in d):
            raise RelationViolation(f"bad dimension vector {d} for m={m}")
        if len(self.alpha) != m - 1 or len(self.beta) != m - 1:
            raise RelationViolation("need exactly m-1 alpha and m-1 beta matrices")
        for i in range(1, m):
            if self.alpha[i - 1].shape != (d[i - 1], d[i]):
                raise RelationViolation(f"alpha_{i} has shape {self.alpha[i - 1].shape}")
            if self.beta[i - 1].shape != (d[i], d[i - 1]):
                raise RelationViolation(f"beta_{i} has shape {self.beta[i - 1].shape}")
        for i in range(1, m - 1):
            if not (self.b(i) @ self.a(i) - self.a(i + 1) @ self.b(i + 1)).is_zero():
                raise RelationViolation(f"beta_{i} alpha_{i} != alpha_{i + 1} beta_{i + 1}")
        if m >= 2 and not (self.b(m - 1) @ self.a(m - 1)).is_zero():
            raise RelationViolation(f"beta_{m - 1} alpha_{m - 1} != 0")
        return self

    def a(self, i: int) -> Mat:
        return self.alpha[i - 1]

    def b(self, i: int) -> Mat:
        return self.beta[i - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def t_action(self, k: int) -> Mat:
        """Action of t in slot (k, k) on M_k."""
        if k <= self.m - 2:
            return self.a(k + 1) @ self.b(k + 1)
        if k >= 1:
            return self.b(k) @ self.a(k)
        return Mat.zeros(self.dim[k], self.dim[k])

    def slot_action(self, k: int, j: int, l: int) -> Mat:
        """Matrix M_j -> M_k of the basis element t^l of slot (k, j)."""
        lo = max(j - k, 0)
        if l < lo or l >= self.m - k:
            raise IndexOutOfRange(f"t^{l} is not in slot ({k}, {j})")
        path = Mat.identity(self.dim[j])
        if k > j:
            for i in range(j + 1, k + 1):
                path = self.b(i) @ path
        elif k < j:
            for i in range(j, k, -1):
                path = self.a(i) @ path
        t = self.t_action(k)
        for _ in range(l - lo):
            path = t @ path
        return path

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def to_dict(self) -> dict:
        def enc(mat: Mat):
            return [[str(x) for x in row] for row in mat.rows] if mat.nrows else []

        return {"dim": list(self.dim), "alpha": [enc(x) for x in self.alpha], "beta": [enc(x) for x in self.beta]}

    @classmethod
    def from_dict(cls, data: dict) -> "QuiverModule":
        d = [int(x) for x in data["dim"]]
        m = len(d)

        def dec(rows, nr, nc):
            return Mat([[Fraction(x) for x in r] for r in rows] if nr else [], nr, nc)

        alpha = tuple(dec(data["alpha"][i - 1], d[i - 1], d[i]) for i in range(1, m))
        beta = tuple(dec(data["beta"][i - 1], d[i], d[i - 1]) for i in range(1, m))
        return cls(m, tuple(d), alpha, beta).validate()


def _check_index(m: int, i: int) -> None:
    if m < 1:
        raise IndexOutOfRange(f"m must be positive, got {m}")
    if not 0 <= i <= m - 1:
        raise IndexOutOfRange(f"vertex {i} outside 0..{m - 1}")


def _from_dims(m: int, dim: Sequence[int], alpha_fn, beta_fn) -> QuiverModule:
    alpha = tuple(alpha_fn(i) if dim[i - 1] and dim[i] else Mat.zeros(dim[i - 1], dim[i]) for i in range(1, m))
    beta = tuple(beta_fn(i) if dim[i - 1] and dim[i] else Mat.zeros(dim[i], dim[i - 1]) for i in range(1, m))
    return QuiverModule(m, tuple(dim), alpha, beta)


def make_simple(m: int, i: int) -> QuiverModule:
    _check_index(m, i)
    dim = [1 if j == i else 0 for j in range(m)]
    return _from_dims(m, dim, lambda k: None, lambda k: None)


def make_standard(m: int, i: int) -> QuiverModule:
    _check_index(m, i)
    dim = [1 if j <= i else 0 for j in range(m)]
    return _from_dims(m, dim, lambda k: Mat.identity(1), lambda k: Mat.zeros(1, 1))


def make_projective(m: int, i: int) -> QuiverModule:
    """P_i = R e_i; (P_i)_j = slot (j, i) with basis t^l, l in slot_range(m, j, i)."""
    _check_index(m, i)
    ranges = [slot_range(m, j, i) for j in range(m)]
    dim = [len(r) for r in ranges]

    def alpha(k):  # (P_i)_k -> (P_i)_{k-1}, t^l -> t^(l+1)
        src, tgt = ranges[k], ranges[k - 1]
        out = [[0] * len(src) for _ in tgt]
        for c, l in enumerate(src):
            out[tgt.index(l + 1)][c] = 1
        return Mat(out, len(tgt), len(src))

    def beta(k):  # (P_i)_{k-1} -> (P_i)_k, t^l -> t^l, zero once l >= m - k
        src, tgt = ranges[k - 1], ranges[k]
        out = [[0] * len(src) for _ in tgt]
        for c, l in enumerate(src):
            if l in tgt:
                out[tgt.index(l)][c] = 1
        return Mat(out, len(tgt), len(src))

    return QuiverModule(m, tuple(dim), tuple(alpha(k) for k in range(1, m)), tuple(beta(k) for k in range(1, m)))


def direct_sum(modules: Sequence[QuiverModule], m: int | None = None) -> QuiverModule:
    if not modules:
        if m is None:
            raise ValueError("empty direct sum needs m")
        return QuiverModule(m, (0,) * m, tuple(Mat.zeros(0, 0) for _ in range(m - 1)), tuple(Mat.zeros(0, 0) for _ in range(m - 1)))
    m = modules[0].m
    dim = tuple(sum(x.dim[j] for x in modules) for j in range(m))
    alpha = tuple(Mat.block_diag([x.a(i) for x in modules]) for i in range(1, m))
    beta = tuple(Mat.block_diag([x.b(i) for x in modules]) for i in range(1, m))
    return QuiverModule(m, dim, alpha, beta)


def projective_sum(m: int, vertices: Sequence[int]) -> QuiverModule:
    return direct_sum([make_projective(m, v) for v in vertices], m)


def conjugate(M: QuiverModule, changes: Sequence[Mat]) -> QuiverModule:
    """Isomorphic module after the change of basis g_k on each M_k."""
    inv = [g.inverse() for g in changes]
    alpha = tuple(changes[i - 1] @ M.a(i) @ inv[i] for i in range(1, M.m))
    beta = tuple(changes[i] @ M.b(i) @ inv[i - 1] for i in range(1, M.m))
    return QuiverModule(M.m, M.dim, alpha, beta)


# --- homomorphisms, kernels, quotients ----------------------------------------


def hom_from_generators(vertices: Sequence[int], target: QuiverModule, images: Sequence[Sequence]) -> list[Mat]:
    """Per-vertex matrices of the map (+)_g P_{v_g} -> target with e_g -> images[g]."""
    m = target.m
    out = []
    for k in range(m):
        cols = []
        for v, img in zip(vertices, images):
            for l in slot_range(m, k, v):
                cols.append(target.slot_action(k, v, l).apply(list(img)))
        out.append(Mat.from_columns(cols, target.dim[k]))
    return out


def is_homomorphism(f: Sequence[Mat], M: QuiverModule, N: QuiverModule) -> bool:
    for i in range(1, M.m):
        if N.a(i) @ f[i] != f[i - 1] @ M.a(i):
            return False
        if N.b(i) @ f[i - 1] != f[i] @ M.b(i):
            return False
    return all(f[k].shape == (N.dim[k], M.dim[k]) for k in range(M.m))


def submodule(M: QuiverModule, bases: Sequence[Mat]) -> QuiverModule:
    """Submodule spanned columnwise by bases[k] (assumed independent and closed)."""
    m = M.m
    dim = tuple(b.ncols for b in bases)
    try:
        alpha = tuple(bases[i - 1].solve_matrix(M.a(i) @ bases[i]) for i in range(1, m))
        beta = tuple(bases[i].solve_matrix(M.b(i) @ bases[i - 1]) for i in range(1, m))
    except ValueError as exc:
        raise InternalInvariantViolation("subspaces are not closed under the arrows") from exc
    return QuiverModule(m, dim, alpha, beta)


def kernel(f: Sequence[Mat], M: QuiverModule) -> tuple[QuiverModule, list[Mat]]:
    """Kernel of f: M -> N, with its inclusion matrices."""
    bases = [Mat.from_columns(fk.nullspace(), M.dim[k]) for k, fk in enumerate(f)]
    return submodule(M, bases), bases


def quotient(M: QuiverModule, spans: Sequence[Mat]) -> tuple[QuiverModule, list[Mat]]:
    """M modulo the submodule whose k-th component is the column span of spans[k].

    Returns the quotient and the projection matrices.
    """
    m = M.m
    projections: list[Mat] = []
    lifts: list[Mat] = []
    for k in range(m):
        sub = column_space_basis(spans[k]) if spans[k].ncols else []
        comp = complement_basis(sub, M.dim[k])
        full = Mat.from_columns(sub + comp, M.dim[k]) if M.dim[k] else Mat.zeros(0, 0)
        inv = full.inverse() if M.dim[k] else Mat.zeros(0, 0)
        proj = Mat(inv.rows[len(sub):], len(comp), M.dim[k])
        projections.append(proj)
        lifts.append(Mat.from_columns(comp, M.dim[k]))
    alpha = tuple(projections[i - 1] @ M.a(i) @ lifts[i] for i in range(1, m))
    beta = tuple(projections[i] @ M.b(i) @ lifts[i - 1] for i in range(1, m))
    q = QuiverModule(m, tuple(p.nrows for p in projections), alpha, beta)
    return q, projections


def radical_basis(M: QuiverModule, k: int) -> list[list[Fraction]]:
    """Basis of (rad M)_k = alpha_{k+1}(M_{k+1}) + beta_k(M_{k-1})."""
    parts = []
    if k + 1 <= M.m - 1:
        parts.append(M.a(k + 1))
    if k >= 1:
        parts.append(M.b(k))
    parts = [p for p in parts if p.ncols]
    if not parts or M.dim[k] == 0:
        return []
    return column_space_basis(Mat.hstack(parts))


def top_generators(M: QuiverModule) -> list[tuple[int, list[Fraction]]]:
    """(vertex, vector) pairs whose images span the top M / rad M."""
    gens = []
    for k in range(M.m):
        for v in complement_basis(radical_basis(M, k), M.dim[k]):
            gens.append((k, v))
    return gens


def hom_dimension(M: QuiverModule, N: QuiverModule) -> int:
    """dim Hom(M, N) from the linear system of commuting squares."""
    m = M.m
    offsets = []
    n = 0
    for k in range(m):
        offsets.append(n)
        n += N.dim[k] * M.dim[k]
    if n == 0:
        return 0

    def var(k, r, c):
        return offsets[k] + r * M.dim[k] + c

    rows = []

    def square(src, tgt, arrow_m: Mat, arrow_n: Mat):
        # arrow_n f_src - f_tgt arrow_m = 0, entries (r, c) with r in N_tgt, c in M_src
        for r in range(N.dim[tgt]):
            for c in range(M.dim[src]):
                row = [Fraction(0)] * n
                for s in range(N.dim[src]):
                    if arrow_n[r, s]:
                        row[var(src, s, c)] += arrow_n[r, s]
                for s in range(M.dim[tgt]):
                    if arrow_m[s, c]:
                        row[var(tgt, r, s)] -= arrow_m[s, c]
                rows.append(row)

    for i in range(1, m):
        square(i, i - 1, M.a(i), N.a(i))
        square(i - 1, i, M.b(i), N.b(i))
    if not rows:
        return n
    return n - Mat(rows, len(rows), n).rank()


# --- projective resolutions and Ext --------------------------------------------


@dataclass
class ResolutionStep:
    """One term (+)_g P_{vertices[g]} with the images of its generators.

    For step 0 the images live in M; for step p > 0 they live in the
    previous projective term (its standard basis, ordered by generator then
    by exponent).
    """

    vertices: list[int]
    images: list[list[Fraction]]
    module: QuiverModule
    to_previous: list[Mat]


@dataclass
class Resolution:
    source: QuiverModule
    steps: list[ResolutionStep]

    @property
    def multiplicities(self) -> list[list[int]]:
        return [[s.vertices.count(v) for v in range(self.source.m)] for s in self.steps]

    @property
    def terms(self) -> list[list[int]]:
        return [sorted(s.vertices) for s in self.steps]

    @property
    def length(self) -> int:
        return len(self.steps) - 1


def projective_resolution(M: QuiverModule) -> Resolution:
    M.validate()
    m = M.m
    steps: list[ResolutionStep] = []
    current = M
    inclusion = [Mat.identity(d) for d in M.dim]  # current -> previous term
    while not current.is_zero():
        if len(steps) > 2 * m - 2:
            raise InternalInvariantViolation(f"resolution longer than the global dimension bound {2 * m - 2}")
        gens = top_generators(current)
        vertices = [v for v, _ in gens]
        local = [vec for _, vec in gens]
        cover = hom_from_generators(vertices, current, local)
        P = projective_sum(m, vertices)
        images = [inclusion[v].apply(vec) for v, vec in gens]
        to_prev = [inclusion[k] @ cover[k] for k in range(m)]
        steps.append(ResolutionStep(vertices, images, P, to_prev))
        current, inclusion = kernel(cover, P)
    return Resolution(M, steps)


def _coefficients(m: int, vertices: Sequence[int], at: int, vec: Sequence) -> list[list[tuple[int, Fraction]]]:
    """Split a vector of ((+)_g P_{v_g})_at into per-generator (exponent, coefficient) lists."""
    out = []
    pos = 0
    for v in vertices:
        r = slot_range(m, at, v)
        out.append([(l, Q(vec[pos + c])) for c, l in enumerate(r) if vec[pos + c]])
        pos += len(r)
    return out


def cochain_differentials(res: Resolution, N: QuiverModule) -> tuple[list[int], list[Mat]]:
    """Dimensions of Hom(P_p, N) and the differentials delta^p: C^p -> C^{p+1}."""
    m = N.m
    dims = [sum(N.dim[v] for v in s.vertices) for s in res.steps]
    deltas = []
    for p in range(len(res.steps) - 1):
        src, tgt = res.steps[p], res.steps[p + 1]
        blocks = []
        for v2, img in zip(tgt.vertices, tgt.images):
            coeffs = _coefficients(m, src.vertices, v2, img)
            row = []
            for v, cl in zip(src.vertices, coeffs):
                acc = Mat.zeros(N.dim[v2], N.dim[v])
                for l, c in cl:
                    acc = acc + N.slot_action(v2, v, l).scale(c)
                row.append(acc)
            blocks.append(Mat.hstack(row, N.dim[v2]) if row else Mat.zeros(N.dim[v2], 0))
        deltas.append(Mat.vstack(blocks, dims[p]) if blocks else Mat.zeros(0, dims[p]))
    return dims, deltas


def _trim(xs: list[int]) -> list[int]:
    while xs and xs[-1] == 0:
        xs.pop()
    return xs


def ext(M: QuiverModule, N: QuiverModule, res: Resolution | None = None) -> list[int]:
    """Graded dimensions of Ext^*(M, N), trailing zeros dropped."""
    N.validate()
    if M.m != N.m:
        raise RelationViolation("modules over different algebras")
    res = res or projective_resolution(M)
    dims, deltas = cochain_differentials(res, N)
    ranks = [d.rank() for d in deltas]
    out = []
    for p, c in enumerate(dims):
        out.append(c - (ranks[p] if p < len(ranks) else 0) - (ranks[p - 1] if p >= 1 else 0))
    return _trim(out)


def euler_form(M: QuiverModule, N: QuiverModule) -> int:
    return sum((-1) ** k * x for k, x in enumerate(ext(M, N)))


def euler_matrix(m: int) -> list[list[int]]:
    E = [make_standard(m, i) for i in range(m)]
    res = [projective_resolution(e) for e in E]
    return [[sum((-1) ** k * x for k, x in enumerate(ext(E[i], E[j], res[i]))) for j in range(m)] for i in range(m)]


# --- Yoneda products ------------------------------------------------------------


def _cocycles(res: Resolution, N: QuiverModule, p: int):
    dims, deltas = cochain_differentials(res, N)
    n = dims[p] if p < len(dims) else 0
    if n == 0:
        return [], Mat.zeros(0, 0), n
    z = deltas[p].nullspace() if p < len(deltas) else [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    b = column_space_basis(deltas[p - 1]) if p >= 1 and deltas[p - 1].ncols else []
    reps = []
    rows = [list(x) for x in b]
    for v in z:
        trial = Mat(rows + [v], len(rows) + 1, n)
        if trial.rank() > len(rows):
            rows.append(v)
            reps.append(v)
    coboundaries = Mat.from_columns(b, n) if b else Mat.zeros(n, 0)
    return reps, coboundaries, n


def _split(vertices: Sequence[int], dims: Sequence[int], vec: Sequence) -> list[list[Fraction]]:
    out, pos = [], 0
    for v in vertices:
        out.append(list(vec[pos:pos + dims[v]]))
        pos += dims[v]
    return out


def _lift_chain_map(res_a: Resolution, res_b: Resolution, p: int, phi: Sequence, depth: int) -> list[list[list[Fraction]]]:
    """Lift a p-cocycle phi: P^A_p -> B to chain maps Phi_s: P^A_{p+s} -> P^B_s, s <= depth.

    Each Phi_s is stored as the images of the generators of P^A_{p+s}.
    """
    b0 = res_b.steps[0]
    gens = res_a.steps[p]
    values = _split(gens.vertices, res_b.source.dim, phi)
    lifted = []
    current = []
    for v, val in zip(gens.vertices, values):
        sol = b0.to_previous[v].solve(val)
        if sol is None:
            raise InternalInvariantViolation("projective cover is not surjective")
        current.append(sol)
    lifted.append(current)
    for s in range(1, depth + 1):
        if p + s >= len(res_a.steps) or s >= len(res_b.steps):
            break
        prev_map = hom_from_generators(res_a.steps[p + s - 1].vertices, res_b.steps[s - 1].module, lifted[-1])
        nxt = []
        for v, img in zip(res_a.steps[p + s].vertices, res_a.steps[p + s].images):
            target = prev_map[v].apply(img)
            sol = res_b.steps[s].to_previous[v].solve(target)
            if sol is None:
                raise InternalInvariantViolation("chain map lift failed")
            nxt.append(sol)
        lifted.append(nxt)
    return lifted


def yoneda_rank(A: QuiverModule, B: QuiverModule, C: QuiverModule, p: int, q: int) -> tuple[int, int, int, int]:
    """(dim Ext^p(A,B), dim Ext^q(B,C), dim Ext^{p+q}(A,C), rank of the product map)."""
    ra, rb = projective_resolution(A), projective_resolution(B)
    reps_ab, _, _ = _cocycles(ra, B, p)
    reps_bc, _, _ = _cocycles(rb, C, q)
    reps_ac, bound_ac, n_ac = _cocycles(ra, C, p + q)
    products = []
    for phi in reps_ab:
        lift = _lift_chain_map(ra, rb, p, phi, q)
        if len(lift) <= q:
            continue
        gens_out = ra.steps[p + q]
        for psi in reps_bc:
            psi_vals = _split(rb.steps[q].vertices, C.dim, psi)
            psi_map = hom_from_generators(rb.steps[q].vertices, C, psi_vals)
            prod = []
            for v, x in zip(gens_out.vertices, lift[q]):
                prod.extend(psi_map[v].apply(x))
            products.append(prod)
    if not products or n_ac == 0:
        return len(reps_ab), len(reps_bc), len(reps_ac), 0
    base = bound_ac.rank() if bound_ac.ncols else 0
    stack = Mat.hstack([bound_ac, Mat.from_columns(products, n_ac)]) if bound_ac.ncols else Mat.from_columns(products, n_ac)
    return len(reps_ab), len(reps_bc), len(reps_ac), stack.rank() - base


def compose_check(m: int, i: int | None = None, j: int | None = None, k: int | None = None) -> bool:
    """Products Ext^p(E_i,E_j) x Ext^q(E_j,E_k) -> Ext^{p+q}(E_i,E_k) are isomorphisms for pq = 0.

    With no indices given, every triple i < j < k is checked.
    """
    if m > 4:
        raise UnsupportedSize(f"chain-level composition is implemented for m <= 4, got {m}")
    if m < 1:
        raise IndexOutOfRange(f"m must be positive, got {m}")
    if i is None:
        triples = [(a, b, c) for a in range(m) for b in range(a + 1, m) for c in range(b + 1, m)]
    else:
        for x in (i, j, k):
            _check_index(m, x)
        if not i < j < k:
            raise IndexOutOfRange(f"need i < j < k, got {(i, j, k)}")
        triples = [(i, j, k)]
    for a, b, c in triples:
        A, B, C = make_standard(m, a), make_standard(m, b), make_standard(m, c)
        for p, q in ((0, 0), (0, 1), (1, 0)):
            d_ab, d_bc, d_ac, r = yoneda_rank(A, B, C, p, q)
            if not (d_ab * d_bc == d_ac == r):
                return False
    return True


# --- restriction to vertex 0 -----------------------------------------------------


def pi_star(M: QuiverModule) -> list[int]:
    """Jordan type of t on e_0 M, i.e. the k[t]/t^m-module Hom(P_0, M)."""
    M.validate()
    n = M.dim[0]
    if n == 0:
        return []
    t = M.t_action(0)
    ranks = [n]
    power = Mat.identity(n)
    while ranks[-1] > 0:
        power = power @ t
        ranks.append(power.rank())
        if len(ranks) > n + 2:
            raise RelationViolation("t does not act nilpotently on M_0")
    # number of blocks of size >= s is ranks[s-1] - ranks[s]
    at_least = [ranks[s - 1] - ranks[s] for s in range(1, len(ranks))]
    parts = []
    for s in range(len(at_least), 0, -1):
        exact = at_least[s - 1] - (at_least[s] if s < len(at_least) else 0)
        parts.extend([s] * exact)
    return parts


def standard_sequence(m: int, i: int) -> tuple[list[Mat], list[Mat]]:
    """Per-vertex matrices of E_{i-1} -> E_i -> S_i."""
    if not 1 <= i <= m - 1:
        raise IndexOutOfRange(f"need 1 <= i <= m-1, got {i}")
    A, B, C = make_standard(m, i - 1), make_standard(m, i), make_simple(m, i)
    incl = [Mat.identity(1) if k <= i - 1 else Mat.zeros(B.dim[k], A.dim[k]) for k in range(m)]
    proj = [Mat.identity(1) if k == i else Mat.zeros(C.dim[k], B.dim[k]) for k in range(m)]
    return incl, proj


def is_short_exact(f: Sequence[Mat], g: Sequence[Mat], A: QuiverModule, B: QuiverModule, C: QuiverModule) -> bool:
    if not (is_homomorphism(f, A, B) and is_homomorphism(g, B, C)):
        return False
    for k in range(A.m):
        if f[k].rank() != A.dim[k] or g[k].rank() != C.dim[k]:
            return False
        if not (g[k] @ f[k]).is_zero() or A.dim[k] + C.dim[k] != B.dim[k]:
            return False
    return True


def random_module(m: int, rng, max_gens: int = 3, max_rels: int = 3) -> QuiverModule:
    """Cokernel of a random map between small sums of projectives."""
    top = [rng.randrange(m) for _ in range(rng.randint(1, max_gens))]
    P = projective_sum(m, top)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        v = rng.randrange(m)
        rels.append((v, [Fraction(rng.randint(-2, 2)) for _ in range(P.dim[v])]))
    if rels:
        spans = hom_from_generators([v for v, _ in rels], P, [x for _, x in rels])
    else:
        spans = [Mat.zeros(P.dim[k], 0) for k in range(m)]
    q, _ = quotient(P, spans)
    return q.validate()


def random_basis_change(n: int, rng) -> Mat:
    """Random invertible n x n rational matrix (unit lower times unit upper triangular)."""
    lower = Mat([[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(n)] for i in range(n)], n, n)
    upper = Mat([[rng.choice([1, -1, 2]) if i == j else (rng.randint(-2, 2) if i < j else 0) for j in range(n)] for i in range(n)], n, n)
    return lower @ upper

"""The self-verification suite behind `dp6 verify`.

Each check is a named boolean.  Random sample counts scale with ``quick``;
exhaustive checks over bounded ranges always run in full.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import auslander as aus
from . import families as fam
from . import lattice as lat
from . import random_inputs as rnd
from . import sod
from . import surface as srf
from .errors import DomainRejection, DP6Error, PencilInDiscriminant, RankOneMember
from .linalg import Mat

EXPECTED_BLOCKS = {
    0: ("Pt", "Pt x Pt x Pt", "Pt x Pt"),
    1: ("Pt", "Pt x Pt x Pt", "R2"),
    2: ("Pt", "R2 x Pt", "Pt x Pt"),
    3: ("Pt", "R2 x Pt", "R2"),
    4: ("Pt", "R3", "Pt x Pt"),
    5: ("Pt", "R3", "R2"),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


class Suite:
    def __init__(self, seed: int = 0, quick: bool = False):
        self.seed = seed
        self.quick = quick
        self.checks: list[Check] = []

    def n(self, full: int) -> int:
        return max(1, full // 10) if self.quick else full

    def rng(self, label: str) -> random.Random:
        return random.Random(f"{self.seed}:{label}")

    def run(self, name: str, fn: Callable[[], bool | tuple[bool, str]]) -> bool:
        try:
            res = fn()
            passed, detail = res if isinstance(res, tuple) else (bool(res), "")
        except DP6Error as exc:
            passed, detail = False, f"{exc.code}: {exc}"
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


BOX = range(-4, 5)


def _box():
    return (lat.DivisorClass(*c) for c in itertools.product(BOX, repeat=4))


# --- lattice ---------------------------------------------------------------------


def lattice_checks(s: Suite) -> None:
    g = lat.gram_matrix()
    s.run("lattice: Gram matrix is diag(1,-1,-1,-1)", lambda: g == [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    s.run("lattice: K^2 = 6", lambda: lat.intersect(lat.K, lat.K) == 6)

    def parity():
        r = s.rng("parity")
        return all(lat.intersect(d, d - lat.K) % 2 == 0 for d in (rnd.divisor(r, 50) for _ in range(s.n(10_000))))

    s.run("lattice: D.(D-K) is even", parity)

    def bilinear():
        r = s.rng("bilinear")
        for _ in range(s.n(2000)):
            a, b, c = rnd.divisor(r), rnd.divisor(r), rnd.divisor(r)
            k = r.randint(-5, 5)
            if lat.intersect(a, b) != lat.intersect(b, a) or lat.intersect(a + k * b, c) != lat.intersect(a, c) + k * lat.intersect(b, c):
                return False
        return True

    s.run("lattice: intersection form is symmetric bilinear", bilinear)

    def serre():
        r = s.rng("serre")
        for _ in range(s.n(10_000)):
            x, y = rnd.numerical_class(r), rnd.numerical_class(r)
            if lat.euler_pairing(x, y) != lat.euler_pairing(y, lat.twist(x, lat.K)):
                return False
        return True

    s.run("lattice: chi(x, y) = chi(y, x (x) omega)", serre)

    def line_bundles():
        r = s.rng("line-bundles")
        partners = [rnd.divisor(r, 4) for _ in range(s.n(10))]
        for d1 in _box():
            l1 = lat.line_bundle(d1)
            for d2 in partners:
                if lat.euler_pairing(l1, lat.line_bundle(d2)) != lat.riemann_roch_chi(d2 - d1):
                    return False
        return True

    s.run("lattice: chi(O(D1), O(D2)) = chi(D2 - D1) on the box", line_bundles)

    def mutation():
        r = s.rng("mutation")
        for _ in range(s.n(2000)):
            e = lat.line_bundle(rnd.divisor(r))
            x = rnd.numerical_class(r)
            if lat.euler_pairing(e, lat.mutate_left(e, x)) != 0:
                return False
        return True

    s.run("lattice: left mutation orthogonalizes", mutation)
    s.run("lattice: hilbert identities", lambda: not hilbert_problems())


def hilbert_problems() -> list[str]:
    problems = []
    for d in (2, 3, 4):
        if lat.hd(d).substitute(-1, -1) != lat.hd(6 - d).substitute(1, -1):
            problems.append(f"h_{d}(-t-1) != h_{6 - d}(t-1)")
    ho = lat.hilbert_poly_of_class(lat.O_CLASS)
    for d in (1, 2, 3):
        if ho.substitute(1, 1) - lat.hprime(d).substitute(1, 1) != lat.hd(6 - d):
            problems.append(f"ideal sheaf identity for d = {d}")
    h2, h3, h4 = lat.hd(2), lat.hd(3), lat.hd(4)
    for t in range(1, 101):
        if not h4(t) > h3(t) > h2(t) > ho(t) > h4(t - 1) > h3(t - 1) > h2(t - 1):
            problems.append(f"ordering fails at t = {t}")
            break
    return problems


# --- surface model ---------------------------------------------------------------


def surface_checks(s: Suite) -> None:
    for t in srf.TYPES:
        s.run(f"surface {t.id}: curve inventory", lambda t=t: (not srf.check_inventory(t), "; ".join(srf.check_inventory(t))))

        def duality(t=t):
            for d in _box():
                h = srf.cohomology(t, d)
                if h != tuple(reversed(srf.cohomology(t, lat.K - d))) or h[0] - h[1] + h[2] != lat.riemann_roch_chi(d):
                    return False, f"fails at {d}"
            return True

        s.run(f"surface {t.id}: Serre duality and Euler characteristic on the box", duality)

        def monotone(t=t):
            curves = srf.negative_curves(t).curves
            r = s.rng(f"monotone-{t.id}")
            for _ in range(s.n(3000)):
                d = rnd.divisor(r, 4)
                h0 = srf.cohomology(t, d)[0]
                if h0 > 0 and any(srf.cohomology(t, d + c)[0] < h0 for c in curves):
                    return False, f"fails at {d}"
            return True

        s.run(f"surface {t.id}: h0 grows along curves", monotone)
        s.run(f"surface {t.id}: Z1, Z2, Z3 have lengths 1, 6/2, 6/3",
              lambda t=t: [srf.z_scheme(t, d).length for d in (1, 2, 3)] == [1, 6 // 2, 6 // 3])
        s.run(f"surface {t.id}: F1 length and support", lambda t=t: srf.f1_invariants(t)[0] == 6)


# --- Auslander algebras ------------------------------------------------------------


def auslander_checks(s: Suite) -> None:
    for m in range(1, 7):
        s.run(f"auslander m={m}: algebra dimension and relations", lambda m=m: aus.AuslanderAlgebra(m).relations_hold()
              and len(aus.AuslanderAlgebra(m).basis) == aus.AuslanderAlgebra(m).dimension)

        def ext_table(m=m):
            E = [aus.make_standard(m, i) for i in range(m)]
            res = [aus.projective_resolution(e) for e in E]
            for i in range(m):
                for j in range(m):
                    want = [1] if i == j else ([1, 1] if i < j else [])
                    if aus.ext(E[i], E[j], res[i]) != want:
                        return False, f"Ext(E{i}, E{j})"
            return True

        s.run(f"auslander m={m}: Ext between standard modules", ext_table)
        s.run(f"auslander m={m}: Euler matrix is the identity",
              lambda m=m: aus.euler_matrix(m) == [[int(i == j) for j in range(m)] for i in range(m)])
        s.run(f"auslander m={m}: pi_* of S_0, P_0 and S_l",
              lambda m=m: aus.pi_star(aus.make_simple(m, 0)) == [1] and aus.pi_star(aus.make_projective(m, 0)) == [m]
              and all(aus.pi_star(aus.make_simple(m, l)) == [] for l in range(1, m)))

        def resolutions(m=m):
            for i in range(m - 1):
                if aus.projective_resolution(aus.make_standard(m, i)).terms != [[i], [i + 1]]:
                    return False, f"E{i}"
            for l in range(1, m - 1):
                if aus.projective_resolution(aus.make_simple(m, l)).terms != [[l], [l - 1, l + 1], [l]]:
                    return False, f"S{l}"
            for i in range(m):
                if aus.projective_resolution(aus.make_projective(m, i)).terms != [[i]]:
                    return False, f"P{i}"
            return True

        s.run(f"auslander m={m}: projective resolutions", resolutions)

        def sequences(m=m):
            for i in range(1, m):
                f, g = aus.standard_sequence(m, i)
                if not aus.is_short_exact(f, g, aus.make_standard(m, i - 1), aus.make_standard(m, i), aus.make_simple(m, i)):
                    return False
            return True

        s.run(f"auslander m={m}: 0 -> E_(i-1) -> E_i -> S_i -> 0 is exact", sequences)
        s.run(f"auslander m={m}: Ext(S_l, E_k) = 0 for 1 <= l < k",
              lambda m=m: all(aus.ext(aus.make_simple(m, l), aus.make_standard(m, k)) == []
                              for k in range(m) for l in range(1, k)))
    for m in range(1, 5):
        s.run(f"auslander m={m}: Yoneda products are isomorphisms", lambda m=m: aus.compose_check(m))

    def fuzz():
        r = s.rng("modules")
        for _ in range(s.n(40)):
            m = r.randint(1, 5)
            M, N = aus.random_module(m, r), aus.random_module(m, r)
            res = aus.projective_resolution(M)
            if res.length > 2 * m - 2:
                return False, "resolution too long"
            e = aus.ext(M, N, res)
            if (e[0] if e else 0) != aus.hom_dimension(M, N):
                return False, "Ext^0 differs from Hom"
            cinv = Mat(aus.cartan_matrix(m), m, m).inverse()
            cartan = sum(a * b for a, b in zip(cinv.apply(list(M.dim)), N.dim))
            if sum((-1) ** k * x for k, x in enumerate(e)) != cartan:
                return False, "Euler form differs from the Cartan pairing"
            i = r.randrange(m)
            if aus.ext(aus.make_projective(m, i), N) != ([N.dim[i]] if N.dim[i] else []):
                return False, "Ext(P_i, N)"
            moved = aus.conjugate(M, [aus.random_basis_change(d, r) for d in M.dim]).validate()
            if aus.ext(moved, N) != e:
                return False, "Ext changed under a change of basis"
        return True

    s.run("auslander: random modules", fuzz)


# --- exceptional collection ----------------------------------------------------------


def sod_checks(s: Suite) -> None:
    for t in srf.TYPES:
        s.run(f"collection {t.id}: Gram matrix is semiorthogonal", lambda t=t: sod.gram_is_semiorthogonal(sod.gram(t)))
        s.run(f"collection {t.id}: blocks", lambda t=t: tuple(b.label for b in sod.matched_blocks(t)) == EXPECTED_BLOCKS[t.id])
        s.run(f"collection {t.id}: Z-schemes from the blocks match the table",
              lambda t=t: all(z == srf.z_scheme(t, d + 1) for d, z in enumerate(sod.z_from_blocks(t))))
        s.run(f"collection {t.id}: (-2)-curves go to simple modules",
              lambda t=t: set(sod.simple_matching(t)) == set(t.delta_names))
        s.run(f"collection {t.id}: bundles on Z_d", lambda t=t: (not sod.check_e_bundles(t), "; ".join(sod.check_e_bundles(t))))

        def chi(t=t):
            r = s.rng(f"chi-{t.id}")
            samples = sod.collection_classes() + [lat.torsion_class(d) for d in t.delta_set]
            samples += [rnd.numerical_class(r) for _ in range(s.n(100))]
            return sod.verify_chi_identities(t, samples)

        s.run(f"collection {t.id}: chi against the bundles on Z2 and Z3", chi)
        s.run(f"collection {t.id}: chi per length of the F4 class is 4", lambda t=t: sod.f4_chi_per_length(t) == 4)
        s.run(f"collection {t.id}: duality", lambda t=t: sod.verify_duality(t))


# --- families -----------------------------------------------------------------------------


def family_checks(s: Suite) -> None:
    I = Mat.identity(3)
    canon = [
        (Mat([[0, 0, 0], [0, 1, 0], [0, 0, 2]], 3, 3), 0, (1, 1, 1)),
        (Mat([[0, 1, 0], [0, 0, 0], [0, 0, 1]], 3, 3), 2, (2, 1)),
        (Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 3, 3), 4, (3,)),
    ]
    s.run("pencils: canonical examples", lambda: all(
        (fam.pencil_classify(fam.BilinearPencil(I, b)).type.id, fam.pencil_classify(fam.BilinearPencil(I, b)).z2) == (t, z)
        for b, t, z in canon))

    def rejections():
        def e(i, j):
            return Mat([[int((a, b) == (i, j)) for b in range(3)] for a in range(3)], 3, 3)

        cases = [((e(0, 0), e(1, 1)), RankOneMember), ((e(0, 1), e(1, 2)), PencilInDiscriminant), ((I, e(0, 0)), RankOneMember)]
        for (b0, b1), err in cases:
            try:
                fam.pencil_validate(fam.BilinearPencil(b0, b1))
                return False
            except err:
                pass
        return True

    s.run("pencils: rejections", rejections)

    def pencils():
        r = s.rng("pencils")
        for _ in range(s.n(1000)):
            p, part = rnd.pencil(r)
            rep = fam.pencil_classify(p)
            if rep.z2 != part or rep.z2 != srf.z_scheme(rep.type, 2).partition or rep.z3 != srf.z_scheme(rep.type, 3).partition:
                return False, "consistency"
            g = rnd.invertible(r, 2)
            q = fam.BilinearPencil(p.b0.scale(g[0, 0]) + p.b1.scale(g[0, 1]), p.b0.scale(g[1, 0]) + p.b1.scale(g[1, 1]))
            rep2 = fam.pencil_classify(q)
            left, right = rnd.invertible(r, 3), rnd.invertible(r, 3)
            rep3 = fam.pencil_classify(fam.BilinearPencil(left @ p.b0 @ right, left @ p.b1 @ right))
            if {(x.type.id, x.z2) for x in (rep, rep2, rep3)} != {(rep.type.id, rep.z2)}:
                return False, "invariance"
        return True

    s.run("pencils: random valid pencils", pencils)

    def tensors():
        r = s.rng("tensors")
        for _ in range(s.n(1000)):
            t = rnd.tensor(r)
            h = fam.hyperdet(t)
            if any(fam.slice_discriminant(t, a) != h for a in range(3)):
                return False, "slice oracle"
            try:
                rep = fam.tensor_classify(t)
                key = ("ok", rep.type.id, rep.diagnostics["orbit"])
                if rep.z2 != srf.z_scheme(rep.type, 2).partition or rep.z3 != srf.z_scheme(rep.type, 3).partition:
                    return False, "consistency"
            except DomainRejection as exc:
                key = ("rejected", exc.condition)
            g = [rnd.invertible(r, 2) for _ in range(3)]
            perm = r.choice(list(itertools.permutations(range(3))))
            moved = t.act(g).permute(perm)
            try:
                rep = fam.tensor_classify(moved)
                key2 = ("ok", rep.type.id, rep.diagnostics["orbit"])
            except DomainRejection as exc:
                key2 = ("rejected", exc.condition)
            if key != key2:
                return False, "invariance"
        return True

    s.run("tensors: random tensors", tensors)

    def tensor_examples():
        a = fam.tensor_classify(rnd.ghz_tensor())
        b = fam.tensor_classify(rnd.w_tensor())
        codes = []
        for t in (fam.Tensor222.from_entries({(0, 0, 0): 1}), fam.Tensor222.from_entries({(0, 0, 0): 1, (0, 1, 1): 1})):
            try:
                fam.tensor_classify(t)
                codes.append(None)
            except DomainRejection as exc:
                codes.append(exc.condition)
        return a.type.id == 0 and b.type.id == 1 and b.z3 == (2,) and codes == ["O3", "O4"]

    s.run("tensors: named examples", tensor_examples)

    def blowups():
        r = s.rng("blowups")
        seen_p2, seen_quadric = set(), set()
        for _ in range(s.n(60)):
            t = r.randrange(6)
            rep = fam.blowup_p2_classify(rnd.p2_config(r, t))
            if rep.type.id != t:
                return False, f"P2 type {t}"
            seen_p2.add(t)
            q = r.randrange(4)
            rep = fam.blowup_p1p1_classify(rnd.p1p1_config(r, q))
            if rep.type.id != q:
                return False, f"P1xP1 type {q}"
            seen_quadric.add(q)
        for t in range(6):
            if fam.blowup_p2_classify(rnd.p2_config(r, t)).type.id != t:
                return False, f"P2 type {t}"
        for q in range(4):
            if fam.blowup_p1p1_classify(rnd.p1p1_config(r, q)).type.id != q:
                return False, f"P1xP1 type {q}"
        return True

    s.run("blowups: every type is reached", blowups)


def run_suite(seed: int = 0, quick: bool = False) -> Suite:
    s = Suite(seed, quick)
    lattice_checks(s)
    surface_checks(s)
    auslander_checks(s)
    sod_checks(s)
    family_checks(s)
    return s


def type_reports() -> list[dict]:
    """Per-type computed data for the verification report."""
    out = []
    for t in srf.TYPES:
        entry = {"type": t.id}
        try:
            entry["gram"] = sod.gram(t)
            entry["blocks"] = [b.label for b in sod.matched_blocks(t)]
            entry["z_schemes"] = [z.to_list() for z in sod.z_from_blocks(t)]
        except DP6Error as exc:
            entry["error"] = exc.payload()["error"]
        out.append(entry)
    return out

import random

import pytest

import oracles
from dp6 import lattice as lat
from dp6 import sod
from dp6 import surface as srf
from dp6.errors import IndexOutOfRange, UnrecognizedPattern
from dp6.lattice import E1, E2, E3, H, K

TABLE = {
    0: ("Pt", "Pt x Pt x Pt", "Pt x Pt"),
    1: ("Pt", "Pt x Pt x Pt", "R2"),
    2: ("Pt", "R2 x Pt", "Pt x Pt"),
    3: ("Pt", "R2 x Pt", "R2"),
    4: ("Pt", "R3", "Pt x Pt"),
    5: ("Pt", "R3", "R2"),
}


@pytest.mark.parametrize("t", range(6))
def test_gram_from_plane_model(t):
    g = sod.gram(t)
    for i, di in enumerate(sod.COLLECTION):
        for j, dj in enumerate(sod.COLLECTION):
            h = oracles.plane_cohomology(t, (dj - di).to_list())
            assert g[i][j] == srf.graded_dims(h)
    assert sod.gram_is_semiorthogonal(g)


def test_gram_examples():
    g0 = sod.gram(0)
    for b in sod.BLOCKS:
        for i in b:
            for j in b:
                if i != j:
                    assert g0[i][j] == []
    assert sod.gram(5)[4][5] == [1, 1]
    for t in range(6):
        assert all(sod.gram(t)[i][i] == [1] for i in range(6))


@pytest.mark.parametrize("t", range(6))
def test_blocks(t):
    blocks = sod.identify_blocks(t)
    assert tuple(b.label for b in blocks) == TABLE[t]
    assert [b.size for b in blocks] == [1, 3, 2]
    assert sod.matched_blocks(t) == blocks


@pytest.mark.parametrize("t", range(6))
def test_z_from_blocks_matches_table(t):
    for d, z in enumerate(sod.z_from_blocks(t), start=1):
        assert z == srf.z_scheme(t, d)


def test_z_from_blocks_examples():
    assert [z.to_list() for z in sod.z_from_blocks(5)] == [[1], [3], [2]]
    assert [z.to_list() for z in sod.z_from_blocks(1)] == [[1], [1, 1, 1], [2]]
    assert [z.to_list() for z in sod.z_from_blocks(0)] == [[1], [1, 1, 1], [1, 1]]


def test_simple_matching():
    assert sod.simple_matching(5) == {"Delta12": (2, 1), "Delta23": (2, 2), "Delta123": (3, 1)}
    assert sod.simple_matching(0) == {}
    for t in srf.TYPES:
        assert set(sod.simple_matching(t)) == set(t.delta_names)


def test_curve_sheaves_pair_as_expected():
    for e in (E1, E2, E3):
        assert lat.euler_pairing(lat.line_bundle(H - e), lat.torsion_class(H - E1 - E2 - E3)) == 0
    assert lat.euler_pairing(lat.line_bundle(H - E1), lat.torsion_class(E1 - E2)) == -1


def test_bundle_classes():
    for i in range(3):
        c = sod.e_bundle_class(0, 2, i)
        assert (c.rank, c.chi) == (1, 2)
        assert c.c1 in (H - E1, H - E2, H - E3)
    c = sod.e_bundle_class(4, 2, 0)
    assert (c.rank, c.chi) == (3, 6)
    c = sod.e_bundle_class(1, 3, 0)
    assert (c.rank, c.chi) == (2, 6)
    with pytest.raises(IndexOutOfRange):
        sod.e_bundle_class(4, 2, 1)
    with pytest.raises(IndexOutOfRange):
        sod.e_bundle_class(0, 4, 0)


@pytest.mark.parametrize("t", range(6))
def test_bundle_checks(t):
    assert sod.check_e_bundles(t) == []


@pytest.mark.parametrize("t", range(6))
def test_chi_identities(t):
    rng = random.Random(t)
    samples = sod.collection_classes() + [lat.torsion_class(d) for d in srf.get_type(t).delta_set]
    samples += [
        lat.NumericalClass(rng.randint(-5, 5), lat.DivisorClass(*(rng.randint(-5, 5) for _ in range(4))), rng.randint(-9, 9))
        for _ in range(100)
    ]
    assert sod.verify_chi_identities(t, samples)
    assert lat.chi_E2(lat.O_CLASS) == lat.chi_E3(lat.O_CLASS) == 0
    for d in srf.get_type(t).delta_set:
        assert lat.chi_E2(lat.torsion_class(d)) == 0


@pytest.mark.parametrize("t", range(6))
def test_f4_and_duality(t):
    assert sod.f4_chi_per_length(t) == 4
    checks = sod.duality_checks(t)
    assert all(ok for _, ok in checks), [n for n, ok in checks if not ok]
    assert sod.verify_duality(t)


def test_duality_lattice_facts():
    assert H + K == -(2 * H - E1 - E2 - E3)
    o = lat.O_CLASS
    assert lat.euler_pairing(o, lat.mutate_left(o, lat.line_bundle(H - E1))) == 0
    first = [o] + [lat.line_bundle(H - e) for e in (E1, E2, E3)]
    mutated = {lat.mutate_left_through(first, lat.line_bundle(d)).c1 for d in (H, 2 * H - E1 - E2 - E3)}
    assert mutated == {-(2 * H - E1 - E2 - E3), -H}


def test_block_table_layout():
    row = sod.block_table(3)
    assert row["blocks"] == ["Pt", "R2 x Pt", "R2"]
    assert row["simples"] == {"Delta12": {"block": 2, "simple": 1}, "Delta123": {"block": 3, "simple": 1}}


def test_corrupted_inventory_is_detected(monkeypatch):
    bad = srf.CurveInventory(srf.negative_curves(5).minus_one, (srf.DELTA_12, srf.DELTA_123))
    monkeypatch.setitem(srf._inventory_override, 5, bad)
    assert srf.check_inventory(5)
    with pytest.raises(UnrecognizedPattern):
        sod.matched_blocks(5)

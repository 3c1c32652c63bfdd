import itertools
import json

import pytest

import cohomoring as cr


def test_groups():
    d4 = cr.dihedral(4)
    assert d4.order == 8
    assert not d4.is_abelian()
    assert d4.generators == [4, 1]
    assert cr.direct_product(cr.cyclic(2), cr.cyclic(3)).is_abelian()
    g = cr.group_from_json(json.dumps({"cyclic": 5}))
    assert g.element_order(1) == 5
    with pytest.raises(cr.CohomoringError):
        cr.group_from_json(json.dumps({"order": 2, "table": [[0, 1], [1, 1]]}))


def test_dihedral_ring_formulas():
    n = 5
    ext = cr.dihedral_extension(n)
    endo = cr.endo_ring(ext)
    assert endo["size"] == n * n
    assert len(endo["ideal"]) == n
    ring = cr.dihedral_ring(n)
    for (k, l), (p, q) in itertools.product(itertools.product(range(n), repeat=2), repeat=2):
        a, b = k + n * l, p + n * q
        assert ring.add(a, b) == (k + p) % n + n * ((l + q) % n)
        assert ring.mul(a, b) == (l * p) % n + n * ((l * q) % n)


def test_cohomology():
    c4_over_c2 = cr.quadruple({"cyclic": 2}, {"cyclic": 2}, "trivial", [[0, 0], [0, 1]])
    lin = cr.h2(c4_over_c2)
    brute = cr.h2(c4_over_c2, "brute")
    assert lin["invariant_factors"] == [2] == brute["invariant_factors"]
    assert lin["extension_class"]["coefficients"] == [1]
    split = cr.dihedral_extension(6)
    assert cr.h2(split)["extension_class"]["coefficients"] == [0]
    assert cr.h2(split)["invariant_factors"] == [2]


def test_crossed_homs():
    ext = cr.dihedral_extension(4)
    assert len(cr.z1(ext)) == cr.endo_ring(ext)["size"] == 16
    assert len(cr.z1(ext, over="Q")) == 4
    assert cr.z1(ext)[0] == [0] * 8


def test_rings_and_quasi_regular():
    z6 = cr.zn_ring(6)
    assert sorted(z6.quasi_regular()) == [0, 4]
    assert sorted(z6.units()) == [1, 5]
    assert z6.qr_to_units_is_isomorphism()
    ring, s_elems, r_elems, s_ideal = cr.ring_s_r()
    assert ring.order == 432 and len(s_elems) == 72 and sorted(r_elems) == [0, 2, 4, 6, 8, 10]
    assert all((m + n) % 2 == 0 for m, n in s_elems)
    assert ring.is_square_zero_ideal(s_ideal)
    assert not ring.is_square_zero_ideal(list(range(ring.order)))
    again = cr.ring_from_json(z6.to_json())
    assert again.order == 6 and again.mul(5, 5) == 1
    z4, z2 = cr.zn_ring(4), cr.zn_ring(2)
    assert cr.prop_qr(z4, z2, [0, 1, 0, 1], [0, 2])


def test_verification():
    report = cr.verify_extension(cr.dihedral_extension(3))
    assert report["passed"]
    assert report["orders"] == {"N": 3, "G": 6, "Q": 2}
    skipped = cr.verify_extension(cr.dihedral_extension(3), check_h2g=False)
    statuses = [c["status"] for r in skipped["reports"] for c in r["checks"]]
    assert "not_checked" in statuses
    faulty = cr.verify_catalog([{"name": "d3", "builtin": "dihedral", "n": 3, "fault": "boxtimes"}])
    assert faulty["failed"] == 1
    assert cr.verify_catalog([])["instances"] == 0
    with pytest.raises(cr.CohomoringError):
        cr.verify_catalog([{"name": "bad", "builtin": "dihedral", "n": 2}])

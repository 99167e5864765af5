"""Compute/verify paths: golden witnesses, negatives, counterexamples."""

import pytest

import dualcore as dc
from dualcore.errors import NotInvertible


@pytest.fixture(scope="module")
def z6():
    return dc.ring_from_descriptor(dc.descriptor_from_json("Zn:6"))


@pytest.fixture(scope="module")
def q2():
    return dc.rational_matrix_ring(2)


def test_z6_golden_witness(z6):
    a, b, c = z6.el(1), z6.el(2), z6.el(2)
    x = dc.left_dual_bc_core(a, b, c)
    assert x.payload == 2
    rep = dc.verify("left-dual-bc-core", (a, b, c), x)
    assert rep.overall
    assert [t for t, _ in rep.verdicts] == ["x in Rc", "bxab = b", "(xab)* = xab"]


def test_z6_negative_case(z6):
    assert dc.left_dual_bc_core(z6.el(5), z6.el(4), z6.el(3)) is None


def test_z6_dual_core_of_unit(z6):
    assert dc.left_dual_core(z6.el(5)).payload == 5


def test_matrix_swap_golden(q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    x = dc.left_dual_bc_core(a, b, c)
    assert q2.fmt_payload(x) == [["0", "1"], ["0", "0"]]
    al = dc.left_bc_inverse(a, b, c)
    assert q2.fmt_payload(al) == [["0", "1"], ["0", "0"]]
    z = dc.right_bc_inverse(a.star, c.star, b.star)
    assert z is not None and (b.star * a.star * z) == b.star
    assert q2.in_right_ideal(z, c.star)


def test_inv_14_golden(q2):
    g = dc.inv_14(q2.el([[1, 1], [0, 0]]))
    assert q2.fmt_payload(g) == [["1/2", "0"], ["1/2", "0"]]
    a = q2.el([[1, 1], [0, 0]])
    assert a * g * a == a
    assert (g * a).star == g * a


def test_inv_13_and_mp_golden(q2):
    a = q2.el([[1, 1], [0, 0]])
    g13 = dc.inv_13(a)
    assert a * g13 * a == a and (a * g13).star == a * g13
    mp = dc.moore_penrose(a)
    assert dc.verify("mp", (a,), mp).overall
    assert q2.fmt_payload(mp) == [["1/2", "0"], ["1/2", "0"]]


def test_14_missing_over_gf2():
    d = dc.descriptor_from_json(
        {"kind": "matrix-ring", "field": "gf(2)", "n": 2, "involution": "transpose"}
    )
    ring = dc.ring_from_descriptor(d)
    a = ring.el([[1, 1], [0, 0]])
    # a·a* = 0 over GF(2), so a·a*·y = a is unsolvable
    assert dc.inv_14(a) is None
    assert dc.moore_penrose(a) is None


def test_degenerate_b_zero(z6, q2):
    for ring, a, c in ((z6, z6.el(1), z6.el(2)), (q2, q2.one, q2.one)):
        x = dc.left_dual_bc_core(a, ring.zero, c)
        assert x is not None
        assert dc.verify("left-dual-bc-core", (a, ring.zero, c), x).overall


def test_pseudo_core_golden(q2):
    n = q2.el([[0, 1], [0, 0]])
    res = dc.left_dual_pseudo_core(n)
    assert res.k == 2
    assert res.x == q2.zero
    assert dc.verify("left-dual-pseudo-core", (n,), res.x, k=2).overall
    assert dc.left_dual_core(n) is None


def test_pseudo_core_refuses_bad_kmax(q2):
    with pytest.raises(dc.ParseError):
        dc.left_dual_pseudo_core(q2.one, k_max=0)


def test_left_invertible(q2, z6):
    assert dc.left_invertible(q2.el([[1, 0], [0, 0]])) is None
    assert dc.left_invertible(z6.el(5)).payload == 5
    x = dc.left_invertible(q2.el([[2, 0], [0, 1]]))
    assert x * q2.el([[2, 0], [0, 1]]) == q2.one


def test_all_formulas_verify_and_raise(q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    forms = dc.left_dual_bc_core_all_formulas(a, b, c)
    assert [t for t, _ in forms] == [
        "b14-al",
        "ab14-a-al",
        "cab14-c",
        "b14-b-cabinner-c",
        "q-abinner-p",
    ]
    for _, w in forms:
        assert dc.verify("left-dual-bc-core", (a, b, c), w).overall
    with pytest.raises(NotInvertible):
        dc.left_dual_bc_core_all_formulas(q2.el([[0, 1], [0, 0]]), q2.one, q2.one)


def test_verify_only_kinds(z6):
    # 5 is a unit of Z_6: x = 5 is simultaneously a dual (1,1)-core and (1,1)-core
    one = z6.one
    assert dc.verify("dual-bc-core", (z6.el(5), one, one), z6.el(5)).overall
    assert dc.verify("bc-core", (z6.el(5), one, one), z6.el(5)).overall
    assert dc.verify("right-bc-core", (z6.el(5), one, one), z6.el(5)).overall
    assert not dc.verify("dual-bc-core", (z6.el(3), one, one), z6.el(3)).overall


def test_verify_rejects_unknown_kind(z6):
    with pytest.raises(dc.ParseError):
        dc.verify("nonsense", (z6.el(1),), z6.el(1))


def test_strongly_left_bc(z6, q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    w = dc.strongly_left_bc_inverse(a, b, c)
    assert dc.verify("strongly-left-bc", (a, b, c), w).overall
    # left-invertible but not strongly: needs cab regular, always true here;
    # a Z_6 negative: (5,4,3) is not even left (b,c)-invertible
    assert dc.strongly_left_bc_inverse(z6.el(5), z6.el(4), z6.el(3)) is None


def test_exists_by_criteria_tags(z6):
    tags = [t for t, _ in dc.exists_by_criteria(z6.el(1), z6.el(2), z6.el(2))]
    assert tags == [
        "left-bc-and-b-14",
        "left-bc-and-ab-14",
        "left-bc-and-cab-14",
        "b-in-b-cab-star-R",
        "b-in-Rcab-and-b-in-bbstar-R",
        "direct-sum-cab-star-r-b",
        "sum-cab-star-r-b",
    ]


def test_final_equivalence_counterexample_z4():
    # a = b = c = 2 in Z_4: cab = 0 is MP invertible (0† = 0) yet a is not
    # (b,c)-invertible, so the unamended "cab in R†" route would disagree
    ring = dc.ring_from_descriptor(dc.descriptor_from_json("Zn:4"))
    two = ring.el(2)
    assert dc.moore_penrose(ring.zero) == ring.zero
    assert dc.left_bc_inverse(two, two, two) is None
    pairs = dict(dc.final_equivalences(two, two, two))
    assert set(pairs.values()) == {False}


def test_final_equivalence_counterexample_z6():
    # (5,4,3): cab = 0, every element of Z_6 is MP invertible, decision False
    ring = dc.ring_from_descriptor(dc.descriptor_from_json("Zn:6"))
    for x in ring.elements():
        assert dc.moore_penrose(x) is not None
    a, b, c = ring.el(5), ring.el(4), ring.el(3)
    assert (c * a * b) == ring.zero
    pairs = dict(dc.final_equivalences(a, b, c))
    assert set(pairs.values()) == {False}


def test_final_equivalence_counterexample_matrix():
    # (cab)* = e11 here, so "b in (cab)*R" fails even though every route
    # succeeds; only the corrected "b in b(cab)*R" keeps all six in agreement
    q2 = dc.rational_matrix_ring(2)
    a = q2.one
    b = q2.el([[0, 0], [1, 0]])
    c = q2.el([[0, 1], [0, 0]])
    cab = c * a * b
    assert not q2.in_right_ideal(b, cab.star)
    assert q2.solve_right_mul(b * cab.star, b) is not None
    pairs = dict(dc.final_equivalences(a, b, c))
    assert set(pairs.values()) == {True}
    assert dc.left_dual_bc_core(a, b, c) is not None


def test_pierce_representation_golden(q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    x = dc.left_dual_bc_core(a, b, c)
    rep = dc.pierce_representation_check(a, b, c, x)
    assert rep.overall
    names = [t for t, _ in rep.verdicts]
    assert "block equation q" in names and "complementary equation 1-p" in names


def test_pierce_detects_corruption(q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    x = dc.left_dual_bc_core(a, b, c)
    q_true = x * a * b
    bad = x + q2.el([[0, 0], [0, 3]])
    rep = dc.pierce_representation_check(a, b, c, bad, q_override=q_true)
    assert not rep.overall


def test_coincidence_check(q2):
    a = q2.el([[0, 1], [1, 0]])
    b = q2.el([[1, 0], [0, 0]])
    c = q2.el([[0, 0], [0, 1]])
    r1, r2 = dc.coincidence_check(a, b, c)
    assert r1.overall and r2.overall


def test_mixed_identities_trivial_and_none(z6):
    one = z6.one
    out = dict(dc.mixed_inverse_identities(one, one, one, one))
    assert all(rep.overall for rep in out.values())
    out = dict(dc.mixed_inverse_identities(z6.el(5), z6.el(3), z6.el(4), z6.el(3)))
    assert out["dual-core-of-a"] is None


def test_nilpotent_decomposition_golden(q2):
    # projection a with v = 1: a1 = a, a2 = 0
    a = q2.el([[1, 0], [0, 0]])
    dec = dc.nilpotent_decomposition(a, q2.one)
    assert dec.a1 == a and dec.a2 == q2.zero
    # v = 0 with a nonzero: no v-core witness, no decomposition
    assert dc.nilpotent_decomposition(a, q2.zero) is None


def test_witness_report_to_json(z6):
    rep = dc.verify("left-dual-bc-core", (z6.el(1), z6.el(2), z6.el(2)), z6.el(2))
    doc = rep.to_json()
    assert doc["overall"] is True
    assert doc["candidate"] == 2
    assert doc["inputs"] == [1, 2, 2]

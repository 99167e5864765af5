"""Theorem batteries: sweep a corpus and cross-check every claimed equivalence.

Each battery tag names one theorem-scale statement. A tag's check function
receives one input tuple and evaluates every route the statement offers
(constructive compute, independent criteria, brute-force witness scans on
finite rings, consequence identities on matrix rings); any mismatch becomes
a disagreement entry. A clean report means zero disagreements over the whole
corpus, which is the strongest falsification pressure the exact setting can
apply.

Corpora are either an entire finite ring (exhaustive tuple product, budget
guarded) or a seeded random matrix corpus over the rationals. Reports are
deterministic for a fixed (theorem, corpus, seed) modulo wall time.
"""

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import ginverse as gi
from .errors import CorpusTooLarge, DualcoreError, ParseError
from .finite import FiniteRing
from .oracle import brute_force, member_mask, random_matrix_corpus
from .rings import (
    El,
    RingDescriptor,
    descriptor_from_json,
    is_idempotent,
    is_projection,
    pierce_blocks,
    ring_from_descriptor,
)

# exhaustive sweeps pay an O(|R|) inner-scan factor per tuple
TUPLE_BUDGET = 10**7
# full converse scans (structure => witness) only below this order
SCAN_ORDER_LIMIT = 64
PREWARM_ORDER_LIMIT = 256
CHUNK = 64

RELATION_MN = ((1, 0), (0, 1), (1, 1))


@dataclass
class TheoremBatteryReport:
    """Outcome of one battery run; byte-stable except for wall_ms."""

    theorem: str
    corpus: str
    tuples: int
    agreements: int
    disagreements: list
    seed: int
    wall_ms: int

    @property
    def clean(self) -> bool:
        return not self.disagreements

    def to_json(self):
        return {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "tuples": self.tuples,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "seed": self.seed,
            "wall_ms": self.wall_ms,
        }


def _mismatch(pairs):
    """None when all boolean routes agree, else a readable route dump."""
    vals = {bool(v) for _, v in pairs}
    if len(vals) > 1:
        return "; ".join(f"{tag}={bool(v)}" for tag, v in pairs)
    return None


# ---------------------------------------------------------------------------
# per-tag checks; each returns None (agreement) or a detail string


def _chk_existence(els, finite):
    a, b, c = els
    pairs = gi.exists_by_criteria(a, b, c)
    x = gi.left_dual_bc_core(a, b, c)
    pairs.append(("compute", x is not None))
    if finite:
        sol = brute_force("left-dual-bc-core", els)
        pairs.append(("brute", bool(sol)))
        d = _mismatch(pairs)
        if d:
            return d
        if x is not None and x.payload not in sol.witnesses:
            return "canonical witness missing from the exhaustive witness set"
        return None
    return _mismatch(pairs)


def _seven_items_finite(A, b, c):
    """The seven existential conditions for A being left dual (b,c)-core
    invertible, each scanned over the whole ring."""
    ring = A.ring
    gs = ring.all_encodings()
    Ab = A * b
    bs = b.star
    xAb = ring.mul_vec(gs, Ab.payload)
    eq = ring.mul_rvec(b.payload, xAb) == b.payload
    symm = ring.star_vec(xAb) == xAb
    mem_rc = member_mask(ring, ring.left_ideal_set(c))
    mem_bsr = member_mask(ring, ring.right_ideal_set(bs))
    items = [("defn", bool(np.any(eq & symm & mem_rc)))]

    refl = ring.mul_pairwise(xAb, gs) == gs
    items.append(("reflexive", bool(np.any(eq & symm & mem_rc & refl))))

    base = np.flatnonzero(eq & mem_rc)
    hit3 = any(ring.right_ideal_equal(ring.el(int(e)), bs) for e in base)
    items.append(("right-ideal-eq", hit3))

    hit4 = False
    for e in base:
        x = ring.el(int(e))
        if ring.left_annihilator_contained(
            x, bs
        ) and ring.left_annihilator_contained(bs, x):
            hit4 = True
            break
    items.append(("annihilator-eq", hit4))

    items.append(("right-ideal-le", bool(np.any(eq & mem_rc & mem_bsr))))

    hit6 = any(
        ring.left_annihilator_contained(bs, ring.el(int(e))) for e in base
    )
    items.append(("annihilator-le", hit6))

    idem = ring.mul_pairwise(gs, gs) == gs
    proj = idem & (ring.star_vec(gs) == gs)
    mem_rab = member_mask(ring, ring.left_ideal_set(Ab))
    q_ok = any(
        mem_rab[qe] and b.payload in ring.left_ideal_set(ring.el(int(qe)))
        for qe in np.flatnonzero(proj)
    )
    p_ok = any(
        mem_rc[pe] and ring.in_right_ideal(Ab, ring.el(int(pe)))
        for pe in np.flatnonzero(idem)
    )
    items.append(("pierce-pair", q_ok and p_ok))
    return items


def _seven_consequence_matrix(A, b, c):
    """Items 2-7 hold for x' = x·Ab·x whenever the canonical witness exists."""
    ring = A.ring
    x = gi.left_dual_bc_core(A, b, c)
    if x is None:
        return None
    Ab = A * b
    xp = x * Ab * x
    bs = b.star
    xpAb = xp * Ab
    checks = [
        ("defn", gi.verify("left-dual-bc-core", (A, b, c), x).overall),
        (
            "reflexive",
            b * xpAb == b
            and xpAb.star == xpAb
            and xpAb * xp == xp
            and ring.in_left_ideal(xp, c),
        ),
        ("right-ideal-eq", ring.right_ideal_equal(xp, bs)),
        (
            "annihilator-eq",
            ring.left_annihilator_contained(xp, bs)
            and ring.left_annihilator_contained(bs, xp),
        ),
        ("right-ideal-le", ring.in_right_ideal(xp, bs)),
        ("annihilator-le", ring.left_annihilator_contained(bs, xp)),
    ]
    q, p = x * Ab, Ab * x
    checks.append(
        (
            "pierce-pair",
            is_projection(q)
            and ring.in_left_ideal(b, q)
            and ring.in_left_ideal(q, Ab)
            and is_idempotent(p)
            and ring.in_left_ideal(p, c)
            and ring.in_right_ideal(Ab, p),
        )
    )
    bad = [tag for tag, ok in checks if not ok]
    return f"items failed: {', '.join(bad)}" if bad else None


def _chk_seven(els, finite):
    A, b, c = els
    if finite:
        return _mismatch(_seven_items_finite(A, b, c))
    return _seven_consequence_matrix(A, b, c)


def _chk_equivalence_14(els, finite):
    a, b, c = els
    ring = a.ring
    ab, cab = a * b, c * a * b
    lbc = ring.solve_left_mul(cab, b) is not None
    pairs = [
        ("compute", gi.left_dual_bc_core(a, b, c) is not None),
        ("left-bc-and-b-14", lbc and gi.inv_14(b) is not None),
        ("left-bc-and-ab-14", lbc and gi.inv_14(ab) is not None),
        ("left-bc-and-cab-14", lbc and gi.inv_14(cab) is not None),
    ]
    d = _mismatch(pairs)
    if d:
        return d
    # {1,4}-existence lemma: u has a {1,4}-inverse iff u lies in u·u*·R
    for name, u in (("b", b), ("ab", ab), ("cab", cab)):
        has = gi.inv_14(u) is not None
        memb = ring.in_right_ideal(u, u * u.star)
        if has != memb:
            return f"{{1,4}} lemma fails for {name}: solver={has}, membership={memb}"
        if finite and bool(brute_force("14", (u,))) != has:
            return f"{{1,4}} brute scan disagrees for {name}"
    return None


def _chk_formula_family(els, finite):
    a, b, c = els
    ring = a.ring
    x = gi.left_dual_bc_core(a, b, c)
    if x is None:
        try:
            gi.left_dual_bc_core_all_formulas(a, b, c)
        except gi.NotInvertible:
            return None
        return "formula family produced output despite non-invertibility"
    forms = gi.left_dual_bc_core_all_formulas(a, b, c)
    for tag, w in forms:
        if not gi.verify("left-dual-bc-core", els, w).overall:
            return f"formula {tag} fails verification"
    if finite:
        ab, cab = a * b, c * a * b
        b14 = gi.inv_14(b)
        q, p = x * ab, ab * x
        ref = x * ab * x
        for g in ring.inner_inverses(ab):
            w = q * g * p
            if w != ref:
                return "q·(ab)⁻·p varies with the chosen inner inverse"
        if not gi.verify("left-dual-bc-core", els, ref).overall:
            return "q·(ab)⁻·p fails verification"
        for g in ring.inner_inverses(cab):
            w = b14 * b * g * c
            if not gi.verify("left-dual-bc-core", els, w).overall:
                return "b14·b·(cab)⁻·c fails for some inner inverse"
    return None


def _chk_power_identities(els, finite):
    a, b, c = els
    ring = a.ring
    if gi.left_dual_bc_core(a, b, c) is None:
        return None
    ab = a * b
    if finite:
        sol = brute_force("left-dual-bc-core", els)
        ws = np.fromiter(sol.witnesses.encodings, np.int64, len(sol.witnesses))
        t = ring.mul_vec(ws, ab.payload)
        acc = t.copy()
        for n in range(1, 5):
            if (ring.mul_rvec(b.payload, acc) != b.payload).any():
                return f"b·(xab)^{n} != b for some exhaustive witness"
            if (ring.star_vec(acc) != acc).any():
                return f"(xab)^{n} not symmetric for some exhaustive witness"
            acc = ring.mul_pairwise(acc, t)
        return None
    for tag, w in gi.left_dual_bc_core_all_formulas(a, b, c):
        t = w * ab
        acc = t
        for n in range(1, 5):
            if b * acc != b:
                return f"b·(xab)^{n} != b for formula {tag}"
            if acc.star != acc:
                return f"(xab)^{n} not symmetric for formula {tag}"
            acc = acc * t
    return None


def _chk_direct_sum(els, finite):
    a, b, c = els
    ring = a.ring
    cab = c * a * b
    dec = gi.left_dual_bc_core(a, b, c) is not None
    is_sum, is_direct = ring.direct_sum_right(cab.star, b)
    return _mismatch(
        [("compute", dec), ("direct-sum", is_direct), ("sum", is_sum)]
    )


def _chk_pierce(els, finite):
    a, b, c = els
    x = gi.left_dual_bc_core(a, b, c)
    if x is None:
        return None
    try:
        rep = gi.pierce_representation_check(a, b, c, x)
    except DualcoreError as exc:
        return f"pierce check raised: {exc}"
    if not rep.overall:
        bad = [tag for tag, ok in rep.verdicts if not ok]
        return f"pierce verdicts failed for the canonical witness: {', '.join(bad)}"
    if finite:
        sol = brute_force("left-dual-bc-core", els)
        if not sol:
            return "exhaustive witness set empty despite compute success"
        alt = a.ring.el(int(sol.witnesses.encodings[-1]))
        try:
            rep = gi.pierce_representation_check(a, b, c, alt)
        except DualcoreError as exc:
            return f"pierce check raised on an exhaustive witness: {exc}"
        if not rep.overall:
            return "pierce verdicts failed for an exhaustive witness"
    return None


def _chk_lattice(els, finite):
    (a,) = els
    ring = a.ring
    one = ring.one
    s = a.star
    w = gi.left_dual_core(a)
    core = w is not None
    routes = [
        ("dual-core", core),
        ("dual-aa-core", gi.left_dual_bc_core(a, a, a) is not None),
        ("dual-a1-core", gi.left_dual_bc_core(a, a, one) is not None),
        ("one-dual-aa-core", gi.left_dual_bc_core(one, a, a) is not None),
        ("v-core-v-eq-a", gi.left_dual_v_core(a, a) is not None),
        ("v-core-v-eq-1", gi.left_dual_v_core(a, one) is not None),
        ("left-astar-a", gi.left_bc_inverse(a, s, a) is not None),
        ("strongly-a2-astar-a", gi.strongly_left_bc_inverse(a * a, s, a) is not None),
        ("strongly-a2-astar-1", gi.strongly_left_bc_inverse(a * a, s, one) is not None),
        ("strongly-a-astar-a", gi.strongly_left_bc_inverse(a, s, a) is not None),
    ]
    for m, n in RELATION_MN:
        routes.append(
            (
                f"power-m{m}-n{n}",
                gi.left_dual_bc_core(a**m, a, a**n) is not None,
            )
        )
    if finite:
        routes.append(("brute", bool(brute_force("left-dual-core", (a,)))))
    d = _mismatch(routes)
    if d:
        return d
    li = [
        ("left-invertible", gi.left_invertible(a) is not None),
        ("solve-xa-1", ring.solve_left_mul(a, one) is not None),
    ]
    if finite:
        li.append(("brute-left-invertible", bool(brute_force("left-invertible", (a,)))))
    d = _mismatch(li)
    if d:
        return d
    if not core:
        return None
    # witness formulas for a dual core invertible (index 1) element
    for m, n in RELATION_MN:
        y = gi.left_dual_bc_core(a**m, a, a**n)
        if not gi.verify("left-dual-bc-core", (a**m, a, a**n), w ** (1 + m)).overall:
            return f"w^(1+m) fails as a (a,a^{n})-core of a^{m}"
        if m >= 1:
            z = y * a**m
            if not gi.verify("left-dual-core", (a,), z).overall:
                return f"composite y·a^{m} fails the dual core axioms"
    return None


def _chk_mp(els, finite):
    (a,) = els
    ring = a.ring
    s = a.star
    pairs = gi.mp_equivalences(a)
    pairs.append(
        ("strongly-astara-astar-a", gi.strongly_left_bc_inverse(s * a, s, a) is not None)
    )
    pairs.append(
        ("strongly-aastar-a-astar", gi.strongly_left_bc_inverse(a * s, a, s) is not None)
    )
    if finite:
        pairs.append(("brute-mp", bool(brute_force("mp", (a,)))))
    d = _mismatch(pairs)
    if d:
        return d
    mp = gi.moore_penrose(a)
    if mp is None:
        return None
    if not gi.verify("mp", (a,), mp).overall:
        return "computed Moore-Penrose candidate fails its axioms"
    if gi.moore_penrose(s) != mp.star:
        return "mp(a*) != mp(a)* breaks uniqueness"
    if finite:
        sol = brute_force("mp", (a,))
        if sol.witnesses.encodings != (mp.payload,):
            return "Moore-Penrose witness is not unique in the exhaustive scan"
    # decomposition corollary at v = a: a·a* splits and a*·a is core invertible
    dec = gi.nilpotent_decomposition(s, a)
    if dec is None:
        return "decomposition of a·a* missing despite a being MP invertible"
    if not gi.verify("left-dual-core", (s * a,), mp * mp.star).overall:
        return "a†·(a†)* fails as a left dual core inverse of a*·a"
    return None


def _chk_coincidence(els, finite):
    a, b, c = els
    ab = a * b
    bs = b.star
    pairs = [
        ("dual-bc-core", gi.left_dual_bc_core(a, b, c) is not None),
        ("left-bstar-c-of-ab", gi.left_bc_inverse(ab, bs, c) is not None),
        ("strongly-bstar-c-of-ab", gi.strongly_left_bc_inverse(ab, bs, c) is not None),
    ]
    d = _mismatch(pairs)
    if d:
        return d
    r1, r2 = gi.coincidence_check(a, b, c)
    if pairs[0][1]:
        if not (r1.overall and r2.overall):
            return "cross-verification reports fail"
        w = gi.strongly_left_bc_inverse(ab, bs, c)
        if not gi.verify("left-bc", (ab, bs, c), w).overall:
            return "strongly witness fails as a left (b*,c)-inverse"
        if not gi.verify("left-dual-bc-core", els, w).overall:
            return "strongly witness fails as a dual (b,c)-core inverse"
    if finite:
        s_core = brute_force("left-dual-bc-core", els).witnesses
        s_left = brute_force("left-bc", (ab, bs, c)).witnesses
        if s_core != s_left:
            return "witness sets differ between the core and left forms"
        s_strong = brute_force("strongly-left-bc", (ab, bs, c)).witnesses
        if not s_strong._as_set() <= s_left._as_set():
            return "a strongly witness escapes the left witness set"
    return None


def _distinct_powers(a, cap):
    powers = [a]
    seen = {a.payload}
    while len(powers) < cap:
        nxt = powers[-1] * a
        if nxt.payload in seen:
            break
        seen.add(nxt.payload)
        powers.append(nxt)
    return powers


def _chk_pseudo_core(els, finite):
    (a,) = els
    ring = a.ring
    one = ring.one
    cap = ring.order if finite else ring.n
    res = gi.left_dual_pseudo_core(a)
    powers = _distinct_powers(a, cap)
    if res is None:
        if finite:
            for k in range(1, len(powers) + 1):
                if brute_force("left-dual-pseudo-core", (a,), k=k):
                    return f"witness exists at k={k} but compute found none"
                for m, n in RELATION_MN:
                    if gi.left_dual_bc_core(a**m, powers[k - 1], a**n) is not None:
                        return f"power route m={m},n={n} succeeds at k={k}"
        else:
            for j in range(1, cap + 1):
                if ring.in_left_ideal(a**j, a ** (j + 1)):
                    return f"row-space route succeeds at k={j}"
        return None
    x, k = res.x, res.k
    if not gi.verify("left-dual-pseudo-core", (a,), x, k=k).overall:
        return "computed pseudo-core witness fails its axioms"
    if finite:
        sol = brute_force("left-dual-pseudo-core", (a,), k=k)
        if x.payload not in sol.witnesses:
            return "canonical witness missing from the exhaustive set"
        if k > 1 and brute_force("left-dual-pseudo-core", (a,), k=k - 1):
            return "a witness exists one index below the reported minimum"
        for j in range(1, min(k, len(powers) + 1)):
            if gi.left_dual_bc_core(a, powers[j - 1], one) is not None:
                return f"(a^{j},1)-core route succeeds below the index"
    else:
        if not ring.in_left_ideal(a**k, a ** (k + 1)):
            return "row-space route disagrees at the reported index"
        if k > 1 and ring.in_left_ideal(a ** (k - 1), a**k):
            return "row-space route succeeds one index below the minimum"
    ak = a**k
    for m, n in RELATION_MN + ((2, 1),):
        am, an = a**m, a**n
        y = gi.left_dual_bc_core(am, ak, an)
        if y is None:
            return f"(a^{k},a^{n})-core of a^{m} missing despite the index"
        if not gi.verify("left-dual-bc-core", (am, ak, an), x ** (k + m)).overall:
            return f"x_D^(k+m) fails as a (a^{k},a^{n})-core of a^{m}"
        if m >= 1:
            z = y * a ** (k + m - 1)
            if not gi.verify("left-dual-pseudo-core", (a,), z, k=k).overall:
                return f"composite y·a^(k+m-1) fails at m={m},n={n}"
    for m in (0, 1, 2):
        yv = gi.left_dual_v_core(ak, a**m)
        if yv is None:
            return f"a^{m}-core of a^{k} missing despite the index"
        if not gi.verify("left-dual-v-core", (ak, a**m), x ** (k + m)).overall:
            return f"x_D^(k+m) fails as the a^{m}-core of a^{k}"
        if m >= 1:
            z = yv * a ** (k + m - 1)
            if not gi.verify("left-dual-pseudo-core", (a,), z, k=k).overall:
                return f"v-core composite fails at m={m}"
    if gi.nilpotent_decomposition(ak, one) is None:
        return "decomposition of a^k missing despite the index"
    u = x * a ** (k + 1)
    if not gi.verify("left-dual-core", (u,), x**k).overall:
        return "x_D^k fails as a left dual core inverse of x_D·a^(k+1)"
    return None


def _chk_decomposition(els, finite):
    a, v = els
    ring = a.ring
    x = gi.left_dual_v_core(a, v)
    dec = gi.nilpotent_decomposition(a, v)
    if x is None:
        return None if dec is None else "decomposition exists without a v-core witness"
    if dec is None:
        return "decomposition missing despite a v-core witness"
    va = v * a
    checks = [
        ("va = a1 + a2", dec.a1 + dec.a2 == va),
        ("a2^2 = 0", dec.a2 * dec.a2 == ring.zero),
        ("a2*·a1 = 0", dec.a2.star * dec.a1 == ring.zero),
        ("a1·a2 = 0", dec.a1 * dec.a2 == ring.zero),
        (
            "x dual core inverse of a1",
            gi.verify("left-dual-core", (dec.a1,), dec.x).overall,
        ),
    ]
    bad = [tag for tag, ok in checks if not ok]
    return f"identities failed: {', '.join(bad)}" if bad else None


def _chk_final(els, finite):
    a, b, c = els
    pairs = gi.final_equivalences(a, b, c)
    if finite:
        pairs = pairs + [
            (
                "brute-left-and-right",
                bool(brute_force("left-dual-bc-core", els))
                and bool(brute_force("right-bc-core", els)),
            ),
            (
                "brute-dual-and-core",
                bool(brute_force("dual-bc-core", els))
                and bool(brute_force("bc-core", els)),
            ),
        ]
    d = _mismatch(pairs)
    if d:
        return d
    if finite:
        ring = a.ring
        s_right = brute_force("right-bc-core", els).witnesses
        s_dual = brute_force(
            "left-dual-bc-core", (a.star, c.star, b.star)
        ).witnesses
        if len(s_dual):
            encs = np.fromiter(s_dual.encodings, np.int64, len(s_dual))
            starred = tuple(sorted(int(e) for e in ring.star_vec(encs)))
        else:
            starred = ()
        if starred != s_right.encodings:
            return "right witnesses are not the stars of the dual witnesses of a*"
    return None


def _chk_mixed(els, finite):
    a, d, b, c = els
    for tag, rep in gi.mixed_inverse_identities(a, d, b, c):
        if rep is not None and not rep.overall:
            return f"composite witness {tag} fails verification"
    return None


def _chk_vcore_char(els, finite):
    a, v = els
    d_v = gi.left_dual_v_core(a, v) is not None
    d_bc = gi.left_dual_bc_core(v, a, a) is not None
    if d_v != d_bc:
        return f"v-core route gives {d_v}, (a,a)-core of v gives {d_bc}"
    if finite:
        s_v = brute_force("left-dual-v-core", (a, v)).witnesses
        s_bc = brute_force("left-dual-bc-core", (v, a, a)).witnesses
        if s_v != s_bc:
            return "witness sets differ between the v-core and (a,a)-core forms"
    return _chk_seven((v, a, a), finite)


def _chk_vcore_representation(els, finite):
    a, v = els
    ring = a.ring
    x = gi.left_dual_v_core(a, v)
    if x is not None:
        va = v * a
        q = x * va
        if not is_projection(q):
            return "q = x·v·a is not a projection"
        if a * q != a:
            return "column condition a = a·q fails"
        if x * q != x:
            return "column condition x = x·q fails"
        vb, ab_, xb = pierce_blocks(v, q), pierce_blocks(a, q), pierce_blocks(x, q)
        m = vb.a1 * ab_.a1 + vb.a2 * ab_.a3
        if xb.a1 * m != q:
            return "block equation x1(v1a1 + v2a3) = q fails"
        if xb.a3 * m != ring.zero:
            return "block equation x3(v1a1 + v2a3) = 0 fails"
        p = ring.one - q
        vc, ac, xc = pierce_blocks(v, p), pierce_blocks(a, p), pierce_blocks(x, p)
        mc = vc.a3 * ac.a2 + vc.a4 * ac.a4
        if xc.a2 * mc != ring.zero:
            return "complementary equation x2(v3a2 + v4a4) = 0 fails"
        if xc.a4 * mc != ring.one - p:
            return "complementary equation x4(v3a2 + v4a4) = 1-p fails"
    if finite and ring.order <= SCAN_ORDER_LIMIT:
        # converse: every structural (q, y) pair certifies y as a witness
        target = brute_force("left-dual-v-core", (a, v)).witnesses
        gs = ring.all_encodings()
        idem = ring.mul_pairwise(gs, gs) == gs
        proj = idem & (ring.star_vec(gs) == gs)
        for qe in np.flatnonzero(proj):
            qel = ring.el(int(qe))
            if a * qel != a:
                continue
            vb, ab_ = pierce_blocks(v, qel), pierce_blocks(a, qel)
            m = vb.a1 * ab_.a1 + vb.a2 * ab_.a3
            for ye in range(ring.order):
                yel = ring.el(ye)
                if yel * qel != yel:
                    continue
                yb = pierce_blocks(yel, qel)
                if yb.a1 * m != qel or yb.a3 * m != ring.zero:
                    continue
                if ye not in target:
                    return f"structural pair (q={int(qe)}, x={ye}) is not a witness"
    return None


def _chk_annihilator_char(els, finite):
    a, v = els
    ring = a.ring
    dec = gi.left_dual_v_core(a, v) is not None
    if finite:
        gs = ring.all_encodings()
        xva = ring.mul_vec(gs, (v * a).payload)
        eq = ring.mul_rvec(a.payload, xva) == a.payload
        mem = member_mask(ring, ring.left_ideal_set(a))
        astar = a.star
        hit = False
        for e in np.flatnonzero(eq & mem):
            xe = ring.el(int(e))
            if ring.left_annihilator_contained(
                xe, astar
            ) and ring.left_annihilator_contained(astar, xe):
                hit = True
                break
        if hit != dec:
            return f"corrected annihilator item gives {hit}, decision gives {dec}"
        return None
    if not dec:
        return None
    x = gi.left_dual_v_core(a, v)
    xp = x * (v * a) * x
    ok = (
        a * xp * (v * a) == a
        and ring.in_left_ideal(xp, a)
        and ring.left_annihilator_contained(xp, a.star)
        and ring.left_annihilator_contained(a.star, xp)
    )
    return None if ok else "corrected annihilator item fails for x·va·x"


def _vcore_pair_filter(els):
    return gi.left_dual_v_core(els[0], els[1]) is not None


@dataclass(frozen=True)
class TheoremSpec:
    tag: str
    arity: int
    check: object
    description: str
    matrix_filter: object = None


THEOREMS = {
    spec.tag: spec
    for spec in [
        TheoremSpec(
            "existence-criteria",
            3,
            _chk_existence,
            "every existence criterion, the compute path and the brute scan agree",
        ),
        TheoremSpec(
            "seven-condition",
            3,
            _chk_seven,
            "the seven equivalent characterizations decide together",
        ),
        TheoremSpec(
            "equivalence-14",
            3,
            _chk_equivalence_14,
            "core invertibility = left (b,c)-invertibility plus a {1,4} condition",
        ),
        TheoremSpec(
            "formula-family",
            3,
            _chk_formula_family,
            "all closed-form witnesses verify; q·(ab)⁻·p is inner-inverse independent",
        ),
        TheoremSpec(
            "power-identities",
            3,
            _chk_power_identities,
            "b·(xab)^n = b and (xab)^n symmetric for n = 1..4 and every witness",
        ),
        TheoremSpec(
            "direct-sum",
            3,
            _chk_direct_sum,
            "invertibility = R = (cab)*R (+) r(b), directness and sum separately",
        ),
        TheoremSpec(
            "pierce",
            3,
            _chk_pierce,
            "corner-block equations hold for valid witnesses",
        ),
        TheoremSpec(
            "specialization-lattice",
            1,
            _chk_lattice,
            "all parameter specializations of the dual core decide together",
        ),
        TheoremSpec(
            "mp-equivalences",
            1,
            _chk_mp,
            "the seven Moore-Penrose routes decide together; the witness is unique",
        ),
        TheoremSpec(
            "coincidence",
            3,
            _chk_coincidence,
            "dual (b,c)-core of a = left/strongly (b*,c) of ab, with equal witness sets",
        ),
        TheoremSpec(
            "pseudo-core",
            1,
            _chk_pseudo_core,
            "minimal index, power-formula witnesses and the per-index biconditional",
        ),
        TheoremSpec(
            "decomposition",
            2,
            _chk_decomposition,
            "va = a1 + a2 with a2 square-zero and x a dual core inverse of a1",
            matrix_filter=_vcore_pair_filter,
        ),
        TheoremSpec(
            "final-equivalence",
            3,
            _chk_final,
            "two-sided existence routes agree, with the amended items",
        ),
        TheoremSpec(
            "mixed-identities",
            4,
            _chk_mixed,
            "composite witnesses built from two elements verify",
        ),
        TheoremSpec(
            "v-core-characterization",
            2,
            _chk_vcore_char,
            "v-core of a = (a,a)-core of v, witness sets equal, seven items agree",
        ),
        TheoremSpec(
            "v-core-representation",
            2,
            _chk_vcore_representation,
            "column-block structure at q = x·v·a, with the complementary form",
        ),
        TheoremSpec(
            "annihilator-characterization",
            2,
            _chk_annihilator_char,
            "the corrected annihilator characterization matches the decision",
        ),
    ]
}


def theorem_tags():
    return list(THEOREMS)


def _parse_matrix_corpus(spec: str):
    parts = spec.split(":")
    if parts[0] != "rationals":
        raise ParseError(
            f"unsupported matrix corpus field {parts[0]!r}; use 'rationals'"
        )
    dims, bound, count = None, 5, 200
    for part in parts[1:]:
        key, _, val = part.partition("=")
        try:
            if key == "dims":
                lo, _, hi = val.partition("-")
                dims = list(range(int(lo), int(hi or lo) + 1))
            elif key == "bound":
                bound = int(val)
            elif key == "count":
                count = int(val)
            else:
                raise ParseError(f"unknown corpus key {key!r}")
        except ValueError as exc:
            raise ParseError(f"bad corpus component {part!r}") from exc
    if dims is None:
        dims = [1, 2, 3]
    return {"dims": dims, "bound": bound, "count": count}


def resolve_corpus(corpus):
    """Returns ('finite', ring, label) or ('matrix', params, label)."""
    if isinstance(corpus, FiniteRing):
        return "finite", corpus, corpus.descriptor.short()
    if isinstance(corpus, RingDescriptor):
        return "finite", ring_from_descriptor(corpus), corpus.short()
    if isinstance(corpus, str):
        if corpus.startswith(("Zn:", "MatZp:")):
            ring = ring_from_descriptor(descriptor_from_json(corpus))
            return "finite", ring, corpus
        return "matrix", _parse_matrix_corpus(corpus), corpus
    raise ParseError(f"cannot interpret corpus {corpus!r}")


def _prewarm(ring: FiniteRing):
    if ring.order > PREWARM_ORDER_LIMIT:
        return
    for enc in range(ring.order):
        e = ring.el(enc)
        ring.left_ideal_set(e)
        ring.right_ideal_set(e)
        ring.left_annihilator_set(e)
        ring.right_annihilator_set(e)


def _tuple_key(entry):
    return json.dumps(entry["tuple"], sort_keys=True)


def run_battery(
    theorem: str,
    corpus,
    seed: int = 0,
    workers: int = None,
    sample: int = None,
    budget: int = TUPLE_BUDGET,
) -> TheoremBatteryReport:
    """Sweep `corpus` with the named theorem battery.

    Finite corpora enumerate all order^arity tuples unless `sample` asks for
    that many seeded random tuples instead; exhaustive sweeps are rejected
    when tuples × order exceeds the budget, since each check may scan the
    whole ring per tuple. Matrix corpora are seeded random draws, so `sample`
    is ignored there.
    """
    if theorem not in THEOREMS:
        raise ParseError(
            f"unknown theorem tag {theorem!r}; known: {', '.join(THEOREMS)}"
        )
    spec = THEOREMS[theorem]
    mode, payload, label = resolve_corpus(corpus)
    t0 = time.monotonic()
    if mode == "finite":
        ring = payload
        finite = True
        if sample is None:
            n_tuples = ring.order**spec.arity
            if n_tuples * ring.order > budget:
                raise CorpusTooLarge(
                    f"{label} needs {n_tuples} tuples x order {ring.order} "
                    f"scans > budget {budget}; pass a sample size"
                )
            raw = itertools.product(range(ring.order), repeat=spec.arity)
            count = n_tuples
        else:
            rng = random.Random(seed)
            raw = [
                tuple(rng.randrange(ring.order) for _ in range(spec.arity))
                for _ in range(sample)
            ]
            count = sample
            label = f"{label}:sample={sample}"
        _prewarm(ring)

        def materialize(t):
            return tuple(ring.el(e) for e in t)

        def describe(t):
            return list(t)

    else:
        finite = False
        raw = random_matrix_corpus(
            payload["dims"],
            payload["bound"],
            payload["count"],
            seed,
            arity=spec.arity,
            filter_fn=spec.matrix_filter,
        )
        count = len(raw)

        def materialize(t):
            return t

        def describe(t):
            return [t[0].ring.fmt_payload(e) for e in t]

    check = spec.check

    def run_chunk(chunk):
        out = []
        for t in chunk:
            els = materialize(t)
            try:
                detail = check(els, finite)
            except (AssertionError, DualcoreError) as exc:
                detail = f"check raised {type(exc).__name__}: {exc}"
            if detail is not None:
                out.append({"tuple": describe(els), "detail": detail})
        return out

    chunks = []
    it = iter(raw)
    while True:
        chunk = list(itertools.islice(it, CHUNK))
        if not chunk:
            break
        chunks.append(chunk)

    disagreements = []
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(run_chunk, chunks):
                disagreements.extend(part)
    else:
        for chunk in chunks:
            disagreements.extend(run_chunk(chunk))
    disagreements.sort(key=_tuple_key)
    wall_ms = int((time.monotonic() - t0) * 1000)
    return TheoremBatteryReport(
        theorem=theorem,
        corpus=label,
        tuples=count,
        agreements=count - len(disagreements),
        disagreements=disagreements,
        seed=seed,
        wall_ms=wall_ms,
    )

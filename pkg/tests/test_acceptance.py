"""Acceptance criteria, one test per criterion.

Each test prints a single "ACCEPTANCE n: PASS/FAIL" verdict line; the
batteries behind them treat any route disagreement as a failure, so a pass
means zero disagreements on the stated corpora.
"""

import json
import time
from pathlib import Path

import pytest

import dualcore as dc
from dualcore.battery import run_battery, theorem_tags
from dualcore.cli import main
from dualcore import exactmat

GOLD = Path(__file__).parent / "golden"
ZN_RANGE = [f"Zn:{n}" for n in range(2, 13)]
FINITE_SWEEPS = ZN_RANGE + ["MatZp:2x2:p2"]
CORPUS_SPEC = "rationals:dims=1-4:bound=5:count=500"


def _emit(num, ok, detail=""):
    line = f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, detail


def _sweep(tag, corpora):
    bad = []
    total = 0
    for corpus in corpora:
        rep = run_battery(tag, corpus)
        total += rep.tuples
        if not rep.clean:
            bad.append((corpus, rep.disagreements[:2]))
    return total, bad


def test_criterion_01_existence_criteria():
    t0 = time.monotonic()
    total, bad = _sweep("existence-criteria", FINITE_SWEEPS)
    wall = time.monotonic() - t0
    ok = not bad and wall < 300 and total == sum(n**3 for n in range(2, 13)) + 4096
    _emit(1, ok, f"{total} triples, {wall:.1f}s" if ok else f"{bad} wall={wall:.1f}s")


def test_criterion_02_constructive_formulas():
    total, bad = _sweep("formula-family", FINITE_SWEEPS)
    rep = run_battery("formula-family", CORPUS_SPEC)
    total += rep.tuples
    if not rep.clean:
        bad.append((CORPUS_SPEC, rep.disagreements[:2]))
    # the corpus itself must carry enough singular factors
    corpus = dc.random_matrix_corpus([1, 2, 3, 4], bound=5, count=500, seed=0)
    singular = sum(
        1
        for tup in corpus
        if any(exactmat.rank(t.ring.F, t.payload) < t.ring.n for t in tup)
    )
    ok = not bad and rep.tuples == 500 and singular >= 150
    _emit(2, ok, f"{total} tuples, {singular}/500 singular" if ok else str(bad))


def test_criterion_03_power_identities():
    total, bad = _sweep("power-identities", FINITE_SWEEPS)
    rep = run_battery("power-identities", CORPUS_SPEC)
    total += rep.tuples
    if not rep.clean:
        bad.append((CORPUS_SPEC, rep.disagreements[:2]))
    _emit(3, not bad, f"{total} tuples, n = 1..4" if not bad else str(bad))


def test_criterion_04_specialization_lattice():
    total_l, bad_l = _sweep("specialization-lattice", FINITE_SWEEPS)
    total_m, bad_m = _sweep("mp-equivalences", FINITE_SWEEPS)
    bad = bad_l + bad_m
    _emit(4, not bad, f"{total_l}+{total_m} elements" if not bad else str(bad))


def _nilpotent_family():
    """Seeded strictly upper triangular rational matrices, dims 2..4."""
    import random
    from fractions import Fraction

    rng = random.Random(42)
    out = []
    for n in (2, 3, 4):
        ring = dc.rational_matrix_ring(n)
        for _ in range(12):
            rows = [
                [
                    Fraction(rng.randint(-3, 3)) if j > i else Fraction(0)
                    for j in range(n)
                ]
                for i in range(n)
            ]
            out.append(ring.el(rows))
        shift = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)]
        out.append(ring.el(shift))
    return out


def test_criterion_05_pseudo_core_index():
    checked, bad = 0, []
    for a in _nilpotent_family():
        ring = a.ring
        res = dc.left_dual_pseudo_core(a)
        # nilpotency index by direct powering
        p, idx = a, 1
        while p != ring.zero:
            p, idx = p * a, idx + 1
        if res is None or res.k != idx or res.x != ring.zero:
            bad.append(("index", ring.n, idx, res))
            continue
        if not dc.verify("left-dual-pseudo-core", (a,), res.x, k=res.k).overall:
            bad.append(("verify", ring.n, idx))
        if res.k > 1 and ring.in_left_ideal(a ** (res.k - 1), a**res.k):
            bad.append(("k-1 admits a witness", ring.n, idx))
        y = dc.left_dual_bc_core(a, a**res.k, ring.one)
        z = y * a**res.k
        if z != res.x or not dc.verify(
            "left-dual-pseudo-core", (a,), z, k=res.k
        ).overall:
            bad.append(("composite", ring.n, idx))
        checked += 1
    _emit(5, not bad and checked >= 36, f"{checked} nilpotents" if not bad else str(bad))


def test_criterion_06_decomposition():
    rep = run_battery("decomposition", "rationals:dims=1-3:bound=5:count=200", seed=0)
    bad = [] if rep.clean else [rep.disagreements[:2]]
    # MP corollary: v = a* splits a*a for every (MP invertible) rational matrix
    mp_cases = 0
    for (a,) in dc.random_matrix_corpus([1, 2, 3], bound=4, count=60, seed=9, arity=1):
        ring = a.ring
        dec = dc.nilpotent_decomposition(a, a.star)
        if dec is None:
            bad.append(("mp corollary missing", ring.fmt_payload(a)))
            continue
        va = a.star * a
        ok = (
            dec.a1 + dec.a2 == va
            and dec.a2 * dec.a2 == ring.zero
            and dec.a2.star * dec.a1 == ring.zero
            and dec.a1 * dec.a2 == ring.zero
            and dc.verify("left-dual-core", (dec.a1,), dec.x).overall
        )
        if not ok:
            bad.append(("mp corollary identities", ring.fmt_payload(a)))
        mp_cases += 1
    # pseudo-core corollary: a^k splits at v = 1 for the nilpotent family
    pc_cases = 0
    for a in _nilpotent_family()[:12]:
        res = dc.left_dual_pseudo_core(a)
        dec = dc.nilpotent_decomposition(a**res.k, a.ring.one)
        if dec is None:
            bad.append(("pseudo-core corollary", a.ring.n))
        pc_cases += 1
    ok = not bad and rep.tuples == 200 and mp_cases == 60 and pc_cases == 12
    _emit(6, ok, f"200 pairs + {mp_cases} MP + {pc_cases} pseudo-core" if ok else str(bad))


def test_criterion_07_coincidence_and_strong():
    total, bad = _sweep("coincidence", FINITE_SWEEPS)
    _emit(7, not bad, f"{total} triples" if not bad else str(bad))


def test_criterion_08_pierce_blocks():
    rep = run_battery("pierce", CORPUS_SPEC)
    bad = [] if rep.clean else [rep.disagreements[:2]]
    corrupted = 0
    blocks = (
        "block equation q",
        "block equation zero",
        "complementary equation zero",
        "complementary equation 1-p",
    )
    for a, b, c in dc.random_matrix_corpus([1, 2, 3, 4], bound=5, count=500, seed=0):
        if corrupted >= 120:
            break
        ring = a.ring
        x = dc.left_dual_bc_core(a, b, c)
        if x is None or b == ring.zero:
            continue
        q_true = x * a * b
        # x + x stays inside Rc but scales q, so a block equation must break
        wrong = dc.pierce_representation_check(a, b, c, x + x, q_override=q_true)
        failed = [name for name, val in wrong.verdicts if name in blocks and not val]
        if wrong.overall or not failed:
            bad.append(("corruption passed", ring.fmt_payload(x)))
        corrupted += 1
    ok = not bad and corrupted >= 100
    _emit(8, ok, f"{rep.tuples} tuples + {corrupted} corrupted" if ok else str(bad))


def test_criterion_09_final_equivalence():
    total, bad = _sweep("final-equivalence", ["MatZp:2x2:p2", "Zn:6"])
    _emit(9, not bad and total == 4096 + 216, f"{total} triples" if not bad else str(bad))


def test_criterion_10_cli_contract(tmp_path, capsys):
    bad = []

    def cli(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, out

    code, out = cli(
        "compute",
        "--kind",
        "left-dual-bc-core",
        "--a",
        str(GOLD / "z6_a1.json"),
        "--b",
        str(GOLD / "z6_b2.json"),
        "--c",
        str(GOLD / "z6_b2.json"),
    )
    doc = json.loads(out)
    if code != 0 or doc["witness"] != 2:
        bad.append("Z6 (1,2,2) golden")
    code, out = cli(
        "compute",
        "--kind",
        "left-dual-bc-core",
        "--a",
        str(GOLD / "mat_swap_a.json"),
        "--b",
        str(GOLD / "mat_swap_b.json"),
        "--c",
        str(GOLD / "mat_swap_c.json"),
    )
    doc = json.loads(out)
    if code != 0 or doc["witness"] != [["0", "1"], ["0", "0"]]:
        bad.append("matrix swap golden")
    code, out = cli(
        "verify",
        "--kind",
        "left-dual-bc-core",
        "--a",
        str(GOLD / "z6_a1.json"),
        "--b",
        str(GOLD / "z6_b2.json"),
        "--c",
        str(GOLD / "z6_b2.json"),
        "--witness",
        str(GOLD / "z6_x4.json"),
    )
    if code != 2 or json.loads(out)["overall"]:
        bad.append("verify negative golden")
    code, out = cli(
        "decompose",
        "--a",
        str(GOLD / "mat_proj.json"),
        "--v",
        str(GOLD / "mat_one.json"),
    )
    if code != 0 or json.loads(out)["status"] != "found":
        bad.append("decompose golden")
    f1, f2 = tmp_path / "b1.json", tmp_path / "b2.json"
    code1, _ = cli("battery", "--theorem", "all", "--ring", "Zn:6", "--out", str(f1))
    code2, _ = cli("battery", "--theorem", "all", "--ring", "Zn:6", "--out", str(f2))
    if code1 != 0 or code2 != 0:
        bad.append("battery all exit code")
    d1, d2 = json.loads(f1.read_text()), json.loads(f2.read_text())
    if len(d1["reports"]) != len(theorem_tags()):
        bad.append("battery report count")
    for r in d1["reports"] + d2["reports"]:
        r["wall_ms"] = 0
    if json.dumps(d1, sort_keys=True) != json.dumps(d2, sort_keys=True):
        bad.append("battery reports not byte-stable")
    _emit(10, not bad, "compute/verify/decompose/battery goldens" if not bad else str(bad))

"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Values are checked literally as stated in the requirements.  Where a literal
value disagrees with direct enumeration the test stays red; see the README.
"""
import math
import time
from fractions import Fraction

import pytest

from derangements import atlas, registry
from derangements.affine import (
    affine_corpus, as_permutation_group, agl2, exponent_criterion, star_conditions,
    star_property_affine, sylow_reduction,
)
from derangements.analysis import derangement_stats, fks_witness, sharply_two_transitive, star_property
from derangements.numtheory import (
    TABLE2_EXPECTED, gcd_qpow, nagell_check, prime_power, solve_prime_power_eq, table2_sweep,
)
from derangements.perm import closure, symmetric_group


@pytest.fixture
def report(capsys):
    def _report(n, failures, detail=""):
        verdict = "FAIL" if failures else "PASS"
        text = "; ".join(failures) if failures else detail
        with capsys.disabled():
            print(f"\ncriterion {n}: {verdict} {text}".rstrip())
        assert not failures, failures
    return _report


def _l2(action, q, family="L2"):
    return lambda: atlas.build_action(family, q, action)


# (label, builder, r, E) exactly as listed in the requirements
TABLE_VALUES = [
    ("L2(4)/P1", _l2("P1", 4), 5, [5]),
    ("L2(4)/D6", _l2("D_split", 4), 5, [5]),
    ("L2(4)/D10", _l2("D_nonsplit", 4), 5, [5]),
    ("L2(7)/P1", _l2("P1", 7), 2, [2, 4]),
    ("L2(7)/S4", _l2("S4", 7), 7, [7]),
    ("PGL2(7)/N(P1)", _l2("P1", 7, "PGL2"), 2, [2, 4, 8]),
    ("L2(8)/P1", _l2("P1", 8), 3, [3, 9]),
    ("L2(8)/D14", _l2("D_split", 8), 3, [3, 9]),
    ("L2(8)/D18", _l2("D_nonsplit", 8), 7, [7]),
    ("GammaL2(8)/N(P1)", _l2("P1", 8, "GammaL2"), 3, [3, 9]),
    ("GammaL2(8)/N(D14)", _l2("D_split", 8, "GammaL2"), 3, [3, 9]),
    ("GammaL2(8)/N(D18)", _l2("D_nonsplit", 8, "GammaL2"), 7, [7]),
    ("L2(9)/P1", _l2("P1", 9), 5, [5]),
    ("L2(17)/P1", _l2("P1", 17), 3, [3, 9]),
    ("L3(2)/P1", lambda: atlas.projective_plane_group(2), 2, [2, 4]),
    ("L3(3)/P1", lambda: atlas.projective_plane_group(3), 13, [13]),
    ("L3(4)/P1", lambda: atlas.projective_plane_group(4), 7, [7]),
    ("L3(5)/P1", lambda: atlas.projective_plane_group(5), 31, [31]),
    ("M11/L2(11)", atlas.m11_degree12, 2, [4, 8]),
]


def test_criterion_1_table_regression(report, table1_results):
    failures = []
    start = time.perf_counter()
    for label, build, r, es in TABLE_VALUES:
        star = star_property(build())
        if not (star.holds and star.r == r and star.order_set == es):
            failures.append(f"{label} expected ({r},{es}) got ({star.r},{star.order_set})")
    elapsed = time.perf_counter() - start
    counts = registry.summary(table1_results)
    if counts["fail"]:
        failures.append(f"verify table1 has {counts['fail']} failing rows")
    if elapsed > 120:
        failures.append(f"took {elapsed:.0f}s")
    report(1, failures, f"{len(TABLE_VALUES)} actions in {elapsed:.1f}s; verify table1 "
                        f"{counts['pass']}/{counts['fail']}/{counts['skipped']}")


NEGATIVE = [
    ("L2(11)/P1", _l2("P1", 11)),
    ("L2(13)/P1", _l2("P1", 13)),
    ("S5 natural", lambda: symmetric_group(5)),
    ("GL2(3) on F3^2", lambda: as_permutation_group(agl2(3))),
]


def test_criterion_2_negative_controls(report):
    failures, shown = [], []
    for label, build in NEGATIVE:
        star = star_property(build())
        pair = star.coprime_pair
        if star.holds:
            failures.append(f"{label} holds with r={star.r} E={star.order_set}")
        elif pair is None:
            failures.append(f"{label} fails only through mixed order {star.mixed_order}, "
                            f"E={star.order_set}, no coprime pair")
        else:
            a, b = pair
            if math.gcd(a, b) != 1 or a not in star.order_set or b not in star.order_set:
                failures.append(f"{label} bad witness {pair}")
            shown.append(f"{label} {pair}")
    report(2, failures, ", ".join(shown))


def test_criterion_3_affine_equivalence(report):
    failures = []
    start = time.perf_counter()
    corpus = affine_corpus()
    if len(corpus) < 8:
        failures.append(f"corpus has {len(corpus)} pairs")
    for pair in corpus:
        if not star_conditions(pair).agree:
            failures.append(f"{pair.name}: three conditions disagree")
        thm = star_property_affine(pair)
        if pair.degree <= 81:
            direct = star_property(as_permutation_group(pair))
            if (thm.holds, thm.r) != (direct.holds, direct.r):
                failures.append(f"{pair.name}: criterion {thm.holds} vs direct {direct.holds}")
        if thm.holds and not sylow_reduction(pair).agrees:
            failures.append(f"{pair.name}: E(G) differs from E_K(P)")
        if not exponent_criterion(pair).agree:
            failures.append(f"{pair.name}: exponent biconditional fails")
    elapsed = time.perf_counter() - start
    if elapsed > 30:
        failures.append(f"took {elapsed:.0f}s")
    report(3, failures, f"{len(corpus)} pairs in {elapsed:.1f}s")


def test_criterion_4_number_theory(report):
    failures = []
    start = time.perf_counter()
    for q in range(2, 10):
        for n in range(1, 13):
            for m in range(1, 13):
                for sn, sm in ((-1, -1), (1, -1), (1, 1)):
                    want = math.gcd(q**n + sn, q**m + sm)
                    if gcd_qpow(q, n, m, sn, sm) != want:
                        failures.append(f"gcd q={q} n={n} m={m} signs {sn},{sm}")
    sols = solve_prime_power_eq(99, 20)
    brute = {(r, s, m, n) for r in range(2, 100) for s in range(2, 100)
             if prime_power(r) == (r, 1) and prime_power(s) == (s, 1)
             for m in range(1, 21) for n in range(1, 21) if r**m + 1 == s**n}
    if {(x.r, x.s, x.m, x.n) for x in sols} != brute:
        failures.append("prime-power equation solutions differ from brute force")
    failures += [f"untagged solution {x}" for x in sols if x.case is None]
    if table2_sweep(50) != TABLE2_EXPECTED:
        failures.append("Table 2 exceptions differ")
    for q, want in ((4, (3, 7, 1)), (313, (3, 181, 2))):
        got = nagell_check(q)
        if (got.d, got.r, got.e) != want:
            failures.append(f"nagell({q}) = {(got.d, got.r, got.e)}")
    elapsed = time.perf_counter() - start
    if elapsed > 10:
        failures.append(f"took {elapsed:.1f}s")
    report(4, failures, f"{len(sols)} equation solutions; {elapsed:.1f}s")


def test_criterion_5_foundations(report, corpus):
    failures, equality, checked = [], [], 0
    for name, g in corpus.items():
        st = derangement_stats(g)
        if st.fixed_point_total != st.group_order:
            failures.append(f"{name}: Burnside sum {st.fixed_point_total} != {st.group_order}")
        delta = Fraction(st.count, st.group_order)
        if delta < Fraction(1, g.degree):
            failures.append(f"{name}: delta below 1/n")
        elif delta == Fraction(1, g.degree):
            equality.append(name)
            if not sharply_two_transitive(g):
                failures.append(f"{name}: equality without sharp 2-transitivity")
        w = fks_witness(st.orders)
        if w is None or prime_power(w) is None:
            failures.append(f"{name}: no prime-power derangement")
        if st.group_order <= 5000:
            checked += 1
            if len(closure(g.generators)) != st.group_order:
                failures.append(f"{name}: BSGS order differs from closure")
    agl1 = {"S3", "A4"} | {n for n in corpus if n.startswith("affine:AGL1(")}
    if set(equality) != agl1:
        failures.append(f"equality set {sorted(equality)} != AGL1 members {sorted(agl1)}")
    report(5, failures, f"{len(corpus)} groups, equality on {len(equality)}, "
                        f"{checked} closure checks")


def test_criterion_6_documented_skips(report, table1_results):
    failures = []
    skipped = {r.row_id: r.reason for r in table1_results if r.verdict == "SKIPPED"}
    if not any(k.startswith("table1.L3.P1P2.r2") and "313" in v for k, v in skipped.items()):
        failures.append("q=313 row not SKIPPED")
    aff = {r.row_id: r for r in registry.run_affine()}
    sl27 = aff.get("affine.SL2(7)-on-F3^12")
    if sl27 is None or sl27.verdict != "SKIPPED" or not sl27.reason:
        failures.append("SL2(7) on F3^12 not SKIPPED")
    nag = nagell_check(313)
    if not nag.consistent:
        failures.append("q=313 parameter condition fails")
    cited = [k for k in skipped if ".cited." in k]
    for key in ("table3-sporadic", "higher-rank-classical", "exceptional"):
        if not any(key in k for k in cited):
            failures.append(f"no cited-only row for {key}")
    report(6, failures, f"{len(skipped)} table1 rows SKIPPED, "
                        f"{len(cited)} of them cited-only")

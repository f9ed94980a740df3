"""Data-driven row registry for the classification tables and the sweeps over it.

Each ``Row`` is one line of a table: its parameter condition, and a list of
instances.  An instance either builds a permutation group whose (r, E) is
compared with the row's formula, or is SKIPPED with a reason.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import atlas
from .affine import (
    AffineError, affine_corpus, affine_order_set, as_permutation_group, exponent_criterion,
    star_conditions, reducible_corpus, star_property_affine, sylow_reduction,
)
from .analysis import star_property
from .numtheory import (
    TABLE2_EXPECTED, classify_power_solution, gcd_qpow, is_fermat_prime, is_mersenne_prime,
    is_prime, nagell_check, ppd, prime_power, solve_prime_power_eq, table2_sweep,
)
from .perm import CapExceeded, GroupError, PermGroup


@dataclass
class Instance:
    parameters: dict
    expected_r: int | None
    expected_E: list[int] | None
    build: Callable[[], PermGroup] | None = None
    skip: str | None = None
    large: bool = False


@dataclass
class Row:
    row_id: str
    tables: tuple[str, ...]
    group: str
    subgroup: str
    condition: str
    instances: list[Instance] = field(default_factory=list)


@dataclass
class TableRowResult:
    row_id: str
    parameters: dict
    constructed: bool
    expected_E: list | None
    computed_E: list | None
    expected_r: int | None
    computed_r: int | None
    verdict: str
    reason: str | None = None

    def to_json(self) -> dict:
        out = {"row_id": self.row_id, "parameters": self.parameters,
               "constructed": self.constructed, "expected_E": self.expected_E,
               "computed_E": self.computed_E, "expected_r": self.expected_r,
               "computed_r": self.computed_r, "verdict": self.verdict}
        if self.reason:
            out["reason"] = self.reason
        return out


def _prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if prime_power(q)]


SWEEP_Q = 64


def _line(q, flavor="PSL"):
    return lambda: atlas.projective_line_group(q, flavor)


def _torus(q, flavor, split):
    return lambda: atlas.torus_normalizer_cosets(q, flavor, split).induced


def _rows() -> list[Row]:
    rows: list[Row] = []

    # L3(q) on points or lines, q^2+q+1 = (3,q-1) r
    r1 = Row("L3.P1P2.r", ("table1",), "L3(q)", "P1,P2", "q^2+q+1 = (3,q-1) r")
    for q in (2, 3, 4, 5, 7, 8):
        d = math.gcd(3, q - 1)
        r = (q * q + q + 1) // d
        if (q * q + q + 1) % d or not is_prime(r):
            continue
        large = q in atlas.LARGE_PLANE_Q
        r1.instances.append(Instance({"q": q, "H": "P1"}, r, [r],
                                     lambda q=q: atlas.projective_plane_group(q, allow_large=q > 5),
                                     large=large))
        if q <= 3:
            r1.instances.append(Instance({"q": q, "H": "P2"}, r, [r],
                                         lambda q=q: atlas.projective_plane_group(q, dual=True)))
    rows.append(r1)

    r2 = Row("L3.P1P2.r2", ("table1",), "L3(q)", "P1,P2", "q^2+q+1 = 3 r^2")
    nag = nagell_check(313)
    r2.instances.append(Instance(
        {"q": 313, "nagell": nag.to_json()}, 181, [181, 181**2],
        skip=f"smallest instance q=313 has degree 98283 and |G| about 10^13; "
             f"parameter condition checked only (313^2+313+1 = 3*181^2: {nag.consistent})"))
    rows.append(r2)

    # PGammaL2(q), q = 2^f, H = N(D_{2(q+1)}), r = q-1 Mersenne
    r3 = Row("GammaL2.N(D2(q+1)).mersenne", ("table1", "table4"), "GammaL2(q)",
             "N_G(D_2(q+1))", "r = q-1 Mersenne prime")
    for q in (8, 32, 128):
        inst = Instance({"q": q}, q - 1, [q - 1], _torus(q, "GammaL", False))
        if q == 128:
            inst.build = None
            inst.skip = "|PGammaL2(128)| = 14680064 with a degree-8128 coset action; beyond desk scale"
        r3.instances.append(inst)
    rows.append(r3)

    r4 = Row("GammaL2(8).N(P1),N(D14)", ("table1", "table4"), "GammaL2(8)",
             "N_G(P1), N_G(D14)", "")
    r4.instances.append(Instance({"q": 8, "H": "N(P1)"}, 3, [3, 9], _line(8, "GammaL")))
    r4.instances.append(Instance({"q": 8, "H": "N(D14)"}, 3, [3, 9], _torus(8, "GammaL", True)))
    rows.append(r4)

    # PGL2(q) on P1, q = 2^(e+1) - 1 Mersenne, E = {2^i : 1 <= i <= e+1}
    r5 = Row("PGL2.N(P1).mersenne", ("table1", "table4"), "PGL2(q)", "N_G(P1)",
             "q = 2^(e+1)-1 Mersenne prime")
    for q in (7, 31, 127):
        e1 = (q + 1).bit_length() - 1
        inst = Instance({"q": q, "e": e1 - 1}, 2, [2**i for i in range(1, e1 + 1)],
                        _line(q, "PGL"), large=q > 100)
        r5.instances.append(inst)
    rows.append(r5)

    # L2(q) on P1, q = 2 r^e - 1
    r6 = Row("L2.P1.2r^e-1", ("table1", "table4"), "L2(q)", "P1", "q = 2 r^e - 1")
    for q in _prime_powers(4, SWEEP_Q):
        pp = prime_power((q + 1) // 2) if q % 2 else None
        if pp is None:
            continue
        r, e = pp
        tables = ("table1",) if q == 5 else ("table1", "table4")
        r6.instances.append(Instance({"q": q, "r": r, "e": e, "tables": list(tables)}, r,
                                     [r**i for i in range(1, e + 1)], _line(q)))
    rows.append(r6)

    r7 = Row("L2.P1,D2(q-1).fermat", ("table1", "table4"), "L2(q)", "P1, D_2(q-1)",
             "r = q+1 Fermat prime")
    for q in (4, 16, 256):
        if not is_fermat_prime(q + 1):
            continue
        for h, build in (("P1", _line(q)), ("D2(q-1)", _torus(q, "PSL", True))):
            inst = Instance({"q": q, "H": h}, q + 1, [q + 1], build)
            if q == 256:
                inst.build = None
                inst.skip = "|L2(256)| = 16776960; beyond the default sweep budget"
            r7.instances.append(inst)
    rows.append(r7)

    r8 = Row("L2.D2(q+1).mersenne", ("table1", "table4"), "L2(q)", "D_2(q+1)",
             "r = q-1 Mersenne prime")
    for q in (4, 8, 32, 128):
        if not is_mersenne_prime(q - 1):
            continue
        r8.instances.append(Instance({"q": q}, q - 1, [q - 1], _torus(q, "PSL", False),
                                     large=q == 128))
    rows.append(r8)

    r9 = Row("L2(8).P1,D14", ("table1", "table4"), "L2(8)", "P1, D14", "")
    r9.instances.append(Instance({"q": 8, "H": "P1"}, 3, [3, 9], _line(8)))
    r9.instances.append(Instance({"q": 8, "H": "D14"}, 3, [3, 9], _torus(8, "PSL", True)))
    rows.append(r9)

    r10 = Row("L2(9).P1", ("table4",), "L2(9)", "P1", "")
    r10.instances.append(Instance({"q": 9}, 5, [5], _line(9)))
    rows.append(r10)

    r11 = Row("L2(7).S4", ("table4",), "L2(7)", "S4", "")
    r11.instances.append(Instance({"q": 7}, 7, [7], lambda: atlas.build_action("L2", 7, "S4")))
    rows.append(r11)

    r12 = Row("M11.L2(11)", ("table1",), "M11", "L2(11)", "")
    r12.instances.append(Instance({}, 2, [4, 8], atlas.m11_degree12))
    rows.append(r12)

    # results taken on citation only: listed so a sweep reports them as SKIPPED
    for rid, group, reason in CITED_ONLY:
        rows.append(Row(rid, ("table1",), group, "", "",
                        [Instance({"cited_only": True}, None, None, skip=reason)]))
    return rows


CITED_ONLY = [
    ("cited.table3-sporadic", "sporadic (G0, M) pairs other than (M11, L2(11))",
     "settled by permutation characters of sporadic groups up to the Monster; no construction "
     "here, accepted on citation"),
    ("cited.higher-rank-classical", "classical groups of rank above L3(q)",
     "negative results rest on maximal-torus case analysis over unbounded q; accepted on citation"),
    ("cited.exceptional", "exceptional groups of Lie type",
     "negative results rest on maximal-torus case analysis over unbounded q; accepted on citation"),
]


ROWS = _rows()


def predicted_star(q: int, flavor: str, subgroup: str) -> tuple[int | None, list[int] | None]:
    """(r, E) predicted by the tables for a primitive action of L2(q) or PGL2(q), else (None, None)."""
    if flavor == "PGL":
        if q % 2 and is_mersenne_prime(q) and subgroup == "P1":
            e1 = (q + 1).bit_length() - 1
            return 2, [2**i for i in range(1, e1 + 1)]
        if q % 2 == 0:
            return predicted_star(q, "PSL", subgroup)
        return None, None
    if q == 7 and subgroup == "S4":
        return 7, [7]
    if q == 8 and subgroup in ("P1", "D_split"):
        return 3, [3, 9]
    if subgroup == "P1":
        if q % 2 and prime_power((q + 1) // 2):
            r, e = prime_power((q + 1) // 2)
            return r, [r**i for i in range(1, e + 1)]
        if is_fermat_prime(q + 1):
            return q + 1, [q + 1]
    if subgroup == "D_split" and is_fermat_prime(q + 1):
        return q + 1, [q + 1]
    if subgroup == "D_nonsplit" and is_mersenne_prime(q - 1):
        return q - 1, [q - 1]
    return None, None


CONVERSE_Q = 32


def converse_instances() -> list[tuple[str, Instance]]:
    """Every constructed primitive action with socle L2(q), 4 <= q <= 32, q != 5.

    The tables claim the star property exactly on their rows, so each instance
    expects either the row's (r, E) or failure (expected r None).
    """
    out = []
    for q in _prime_powers(4, CONVERSE_Q):
        if q == 5:
            continue
        flavors = ["PSL"] + (["PGL"] if q % 2 else [])
        for flavor in flavors:
            for sub in ("P1", "D_split", "D_nonsplit"):
                r, es = predicted_star(q, flavor, sub)
                if sub == "P1":
                    build = _line(q, flavor)
                else:
                    build = _torus(q, flavor, sub == "D_split")
                name = {"PSL": "L2", "PGL": "PGL2"}[flavor]
                out.append((f"converse.{name}({q:03d}).{sub}",
                            Instance({"q": q, "group": f"{name}({q})", "H": sub,
                                      "primitive_only": True}, r, es, build)))
        if q == 7:
            r, es = predicted_star(7, "PSL", "S4")
            out.append(("converse.L2(007).S4",
                        Instance({"q": 7, "group": "L2(7)", "H": "S4", "primitive_only": True},
                                 r, es, lambda: atlas.build_action("L2", 7, "S4"))))
    return out


# -- running ---------------------------------------------------------------

def _instance_ids(scope: str) -> list[tuple[str, Instance]]:
    out = []
    if scope in ("table1", "table4"):
        for row in ROWS:
            if scope not in row.tables:
                continue
            for k, inst in enumerate(row.instances):
                tabs = inst.parameters.get("tables")
                if tabs is not None and scope not in tabs:
                    continue
                out.append((f"{scope}.{row.row_id}#{k:02d}", inst))
        if scope == "table4":
            out.extend((f"table4.{rid}", inst) for rid, inst in converse_instances())
    return out


def run_instance(row_id: str, inst: Instance, include_large: bool = False) -> TableRowResult:
    params = {k: v for k, v in inst.parameters.items() if k != "tables"}
    base = dict(row_id=row_id, parameters=params, expected_E=inst.expected_E,
                expected_r=inst.expected_r)
    if inst.skip or inst.build is None:
        return TableRowResult(constructed=False, computed_E=None, computed_r=None,
                              verdict="SKIPPED", reason=inst.skip, **base)
    if inst.large and not include_large:
        return TableRowResult(constructed=False, computed_E=None, computed_r=None,
                              verdict="SKIPPED",
                              reason="large instance; rerun with --include-large", **base)
    try:
        g = inst.build()
        if params.get("primitive_only") and not g.is_primitive():
            return TableRowResult(constructed=True, computed_E=None, computed_r=None,
                                  verdict="SKIPPED", reason="action is imprimitive", **base)
        star = star_property(g)
    except CapExceeded as exc:
        return TableRowResult(constructed=False, computed_E=None, computed_r=None,
                              verdict="SKIPPED", reason=str(exc), **base)
    if inst.expected_r is None:
        ok = not star.holds
    else:
        ok = star.holds and star.r == inst.expected_r and star.order_set == inst.expected_E
    return TableRowResult(constructed=True, computed_E=star.order_set, computed_r=star.r,
                          verdict="PASS" if ok else "FAIL", **base)


def _run_by_id(args) -> TableRowResult:
    scope, row_id, include_large = args
    inst = dict(_instance_ids(scope))[row_id]
    return run_instance(row_id, inst, include_large)


def run_table(scope: str, include_large: bool = False, jobs: int = 1) -> list[TableRowResult]:
    items = _instance_ids(scope)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_by_id, [(scope, rid, include_large) for rid, _ in items]))
    else:
        results = [run_instance(rid, inst, include_large) for rid, inst in items]
    return sorted(results, key=lambda r: r.row_id)


# -- affine and number-theory sweeps ------------------------------------------

# E(G) for the affine corpus; the ASL2 values are the reference ones, the rest
# were computed by full enumeration of the permutation realization.
AFFINE_EXPECTED = {
    "ASL2(2)": (2, [2, 4]),
    "ASL2(3)": (3, [3]),
    "ASL2(5)": (5, [5]),
    "AGL1(3)": (3, [3]),
    "AGL1(4)": (2, [2]),
    "AGL1(5)": (5, [5]),
    "AGL1(7)": (7, [7]),
    "AGL1(8)": (2, [2]),
    "SL2(4)-natural": (2, [2, 4]),
    "AGL2(3)": (None, [3, 6]),
    "Z5<GL1(11)": (11, [11]),
    "Z13<GL3(3)": (3, [3]),
}


def run_affine() -> list[TableRowResult]:
    out = []
    for pair in affine_corpus():
        exp_r, exp_e = AFFINE_EXPECTED[pair.name]
        checks = []
        es = affine_order_set(pair)
        eq = star_conditions(pair)
        checks.append(("equivalence", eq.agree))
        thm = star_property_affine(pair)
        if pair.degree <= 81:
            direct = star_property(as_permutation_group(pair))
            checks.append(("criterion_vs_direct", (thm.holds, thm.r) == (direct.holds, direct.r)
                           and direct.order_set == es))
        if thm.holds:
            red = sylow_reduction(pair)
            checks.append(("sylow_reduction", red.agrees))
        checks.append(("exponent_criterion", exponent_criterion(pair).agree))
        ok = all(c for _, c in checks) and es == exp_e and thm.r == exp_r
        failed = [name for name, c in checks if not c]
        out.append(TableRowResult(f"affine.{pair.name}", {"p": pair.p, "k": pair.k,
                                                          "H_order": pair.h_order()},
                                  True, exp_e, es, exp_r, thm.r, "PASS" if ok else "FAIL",
                                  f"failed checks: {failed}" if failed else None))
    for pair in reducible_corpus():
        try:
            star_property_affine(pair)
            verdict, reason = "FAIL", "reducible module was accepted"
        except AffineError:
            eq = star_conditions(pair)
            verdict = "PASS" if eq.agree else "FAIL"
            reason = "rejected at the primitivity precondition"
        out.append(TableRowResult(f"affine.{pair.name}", {"p": pair.p, "k": pair.k,
                                                          "H_order": pair.h_order()},
                                  True, None, affine_order_set(pair), None, None, verdict, reason))
    out.append(TableRowResult("affine.SL2(7)-on-F3^12", {"p": 3, "k": 12}, False, [3, 9], None,
                              3, None, "SKIPPED",
                              "needs a 12-dimensional irreducible module of SL2(7) over GF(3); "
                              "supply generator matrices through 'affine FILE'"))
    return sorted(out, key=lambda r: r.row_id)


def _nt_row(row_id, params, ok, reason=None) -> TableRowResult:
    return TableRowResult(f"nt.{row_id}", params, True, None, None, None, None,
                          "PASS" if ok else "FAIL", reason)


def gcd_sweep_ok(max_q: int = 9, max_exp: int = 12) -> bool:
    for q in range(2, max_q + 1):
        for n in range(1, max_exp + 1):
            for m in range(1, max_exp + 1):
                for sn in (1, -1):
                    for sm in (1, -1):
                        if gcd_qpow(q, n, m, sn, sm) != math.gcd(q**n + sn, q**m + sm):
                            return False
    return True


def zsigmondy_ok(max_q: int = 32, max_e: int = 12) -> bool:
    for q in _prime_powers(2, max_q):
        for e in range(2, max_e + 1):
            exists = ppd(q, e).largest_ppd is not None
            expected = not ((q, e) == (2, 6) or (e == 2 and is_mersenne_prime(q)))
            if exists != expected:
                return False
    return True


def run_nt() -> list[TableRowResult]:
    sols = solve_prime_power_eq(99, 20)
    n4, n313 = nagell_check(4), nagell_check(313)
    rows = [
        _nt_row("gcd_formulas", {"q<=": 9, "n,m<=": 12}, gcd_sweep_ok()),
        _nt_row("prime_power_equation", {"r,s<": 100, "m,n<=": 20},
                bool(sols) and all(s.case is not None for s in sols)
                and all(classify_power_solution(s.r, s.s, s.m, s.n) == s.case for s in sols)),
        _nt_row("table2_sweep", {"q<=": 50}, table2_sweep(50) == TABLE2_EXPECTED),
        _nt_row("nagell(4)", {"q": 4}, (n4.d, n4.r, n4.e) == (3, 7, 1)),
        _nt_row("nagell(313)", {"q": 313}, (n313.d, n313.r, n313.e) == (3, 181, 2)),
        _nt_row("zsigmondy", {"q<=": 32, "e<=": 12}, zsigmondy_ok()),
    ]
    return sorted(rows, key=lambda r: r.row_id)


def run_scope(scope: str, include_large: bool = False, jobs: int = 1) -> list[TableRowResult]:
    if scope in ("table1", "table4"):
        return run_table(scope, include_large, jobs)
    if scope == "affine":
        return run_affine()
    if scope == "nt":
        return run_nt()
    raise GroupError(f"unknown scope {scope!r}")


def summary(results: list[TableRowResult]) -> dict:
    return {v.lower(): sum(r.verdict == v for r in results) for v in ("PASS", "FAIL", "SKIPPED")}

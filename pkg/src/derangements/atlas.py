"""Named groups and actions: projective lines and planes, torus normalizers, M11.

Point labels on the projective line: 0 is the point at infinity <(1,0)>, and
1 + c is <(c,1)> for the field element with integer code c.  Matrices act on
row vectors from the right, so (x, 1) M gives the image of x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .gf import GF, gf, identity_matrix, vec_mat
from .numtheory import prime_power
from .perm import (
    CosetAction, GroupError, PermGroup, Permutation, coset_action, element_orders,
    normalizer, rows_to_perms, subgroup_from_elements, symmetric_group,
)

FLAVORS = ("PSL", "PGL", "GammaL")
MAX_LINE_Q = 128
PLANE_Q = (2, 3, 4, 5)
LARGE_PLANE_Q = (7, 8)


def _field(q: int) -> GF:
    pp = prime_power(q)
    if pp is None:
        raise GroupError(f"{q} is not a prime power")
    return gf(*pp)


def _generating_scalars(F: GF) -> list[int]:
    # omega^0 .. omega^(f-1) span the field over the prime field
    return [F.pow(F.primitive_element, i) for i in range(F.f)]


# -- projective line --------------------------------------------------------

def _line_point(F: GF, x: int, y: int) -> int:
    if y == 0:
        return 0
    return 1 + F.div(x, y)


def _line_perm(F: GF, m) -> Permutation:
    (a, b), (c, d) = m
    images = [_line_point(F, a, b)]
    for x in range(F.q):
        images.append(_line_point(F, F.add(F.mul(x, a), c), F.add(F.mul(x, b), d)))
    return Permutation(images)


def _line_frobenius(F: GF) -> Permutation:
    return Permutation([0] + [1 + F.frobenius(x) for x in range(F.q)])


def line_closed_order(q: int, flavor: str) -> int:
    p, f = prime_power(q)
    base = q * (q * q - 1)
    if flavor == "PSL":
        return base // math.gcd(2, q - 1)
    if flavor == "PGL":
        return base
    return base * f


@lru_cache(maxsize=None)
def projective_line_group(q: int, flavor: str = "PSL") -> PermGroup:
    """L2(q), PGL2(q) or PGammaL2(q) on the q+1 points of the projective line."""
    if flavor not in FLAVORS:
        raise GroupError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    F = _field(q)
    if q > MAX_LINE_Q or (flavor == "PSL" and q < 4):
        raise GroupError(f"unsupported q={q} for {flavor} (need 4 <= q <= {MAX_LINE_Q})"
                         if flavor == "PSL" else f"unsupported q={q} (q <= {MAX_LINE_Q})")
    gens = []
    for s in _generating_scalars(F):
        gens.append(_line_perm(F, ((1, 0), (s, 1))))
        gens.append(_line_perm(F, ((1, s), (0, 1))))
    if flavor in ("PGL", "GammaL"):
        gens.append(_line_perm(F, ((F.primitive_element, 0), (0, 1))))
    if flavor == "GammaL" and F.f > 1:
        gens.append(_line_frobenius(F))
    name = {"PSL": "L2", "PGL": "PGL2", "GammaL": "PGammaL2"}[flavor]
    gens = [g for g in dict.fromkeys(gens) if not g.is_identity()]
    grp = PermGroup(gens, degree=q + 1, name=f"{name}({q})")
    if grp.order() != line_closed_order(q, flavor):
        raise AssertionError(f"{grp.name} has order {grp.order()}")
    return grp


# -- projective plane -------------------------------------------------------

def plane_points(F: GF) -> list[tuple[int, int, int]]:
    """Normalized representatives (first nonzero coordinate 1) in a fixed order."""
    q = F.q
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, b) for b in range(q)]
    pts.append((0, 0, 1))
    return pts


def _normalize(F: GF, v) -> tuple:
    lead = next(x for x in v if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in v)


def _plane_perm(F: GF, m, index: dict) -> Permutation:
    return Permutation([index[_normalize(F, vec_mat(v, m, F))] for v in index])


def plane_closed_order(q: int) -> int:
    return q**3 * (q**2 - 1) * (q**3 - 1) // math.gcd(3, q - 1)


@lru_cache(maxsize=None)
def projective_plane_group(q: int, dual: bool = False, allow_large: bool = False) -> PermGroup:
    """L3(q) on the q^2+q+1 points (or, with ``dual``, lines) of the projective plane.

    Lines are labelled by their normal vectors, on which a matrix acts by the
    inverse transpose.
    """
    allowed = PLANE_Q + (LARGE_PLANE_Q if allow_large else ())
    if q not in allowed:
        raise GroupError(f"L3({q}) unsupported; q must be one of {allowed}")
    F = _field(q)
    pts = plane_points(F)
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for s in _generating_scalars(F):
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                m = [list(r) for r in identity_matrix(3)]
                if dual:
                    # inverse transpose of I + s E_ij is I - s E_ji
                    m[j][i] = F.neg(s)
                else:
                    m[i][j] = s
                gens.append(_plane_perm(F, m, index))
    name = f"L3({q})" + ("/lines" if dual else "")
    grp = PermGroup(list(dict.fromkeys(gens)), degree=len(pts), name=name)
    if grp.order() != plane_closed_order(q):
        raise AssertionError(f"{name} has order {grp.order()}")
    return grp


# -- subgroups and coset actions -------------------------------------------

def first_element_of_order(g: PermGroup, order: int) -> Permutation:
    """Deterministic scan of the element stream."""
    for chunk in g.element_chunks():
        hits = np.nonzero(element_orders(chunk) == order)[0]
        if hits.size:
            return rows_to_perms(chunk[hits[:1]])[0]
    raise AssertionError(f"{g.name} has no element of order {order}")


def split_torus_normalizer(g: PermGroup) -> PermGroup:
    """Setwise stabilizer of {infinity, 0} (labels 0 and 1)."""
    kept = []
    for chunk in g.element_chunks():
        a, b = chunk[:, 0], chunk[:, 1]
        kept.append(chunk[((a == 0) & (b == 1)) | ((a == 1) & (b == 0))])
    rows = np.concatenate(kept, axis=0)
    return subgroup_from_elements(g.degree, rows_to_perms(rows), order=rows.shape[0])


def nonsplit_torus_normalizer(g: PermGroup, q: int) -> PermGroup:
    d = math.gcd(2, q - 1)
    x = first_element_of_order(g, (q + 1) // d)
    return normalizer(g, [x])


def s4_in_l2_7() -> PermGroup:
    """S4 inside L2(7) on 8 points, as the normalizer of a Klein four-group."""
    g = projective_line_group(7)
    invols = [x for x in g.elements() if x.order() == 2]
    x = invols[0]
    y = next(t for t in invols if t != x and x * t == t * x)
    n = normalizer(g, [x, y])
    if n.order() != 24:
        raise AssertionError("normalizer of a four-group in L2(7) is not S4")
    return n


def torus_normalizer_cosets(q: int, flavor: str = "PSL", split: bool = True) -> CosetAction:
    """Action on the cosets of N_G(D) for the dihedral torus normalizer D of L2(q).

    For PGL and PGammaL the dihedral subgroup is taken inside L2(q) and its
    normalizer in the larger group is used.
    """
    g = projective_line_group(q, flavor)
    g0 = projective_line_group(q, "PSL")
    d0 = split_torus_normalizer(g0) if split else nonsplit_torus_normalizer(g0, q)
    h = d0 if flavor == "PSL" else normalizer(g, d0.generators)
    tag = "D_split" if split else "D_nonsplit"
    return coset_action(g, h.generators, name=f"{g.name}/N({tag})")


def parabolic_cosets(q: int, flavor: str = "PSL") -> CosetAction:
    """Action on the cosets of the stabilizer of infinity (the natural action)."""
    g = projective_line_group(q, flavor)
    return coset_action(g, g.point_stabilizer(0).generators, name=f"{g.name}/P1")


# -- M11 ---------------------------------------------------------------------

# M11 on 11 points: the standard generators (1,...,11) and (3,7,11,8)(4,10,5,6)
# shifted to 0-based points.
M11_DEGREE11 = (
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0),
    (0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7),
)
# Action of those two generators on the 12 right cosets of L2(11) = <a, b'>,
# a the 11-cycle and b' the first involution (in element-stream order) with
# |<a, b'>| = 660; cosets numbered by ascending lex-least representative.
# Re-derived in the test suite.
M11_DEGREE12 = (
    (0, 7, 1, 4, 8, 9, 11, 3, 10, 2, 6, 5),
    (7, 8, 4, 11, 3, 10, 5, 0, 1, 6, 9, 2),
)


def m11_degree11() -> PermGroup:
    return PermGroup([Permutation(g) for g in M11_DEGREE11], name="M11")


def m11_l2_11_subgroup(m11: PermGroup | None = None) -> PermGroup:
    """L2(11) in M11 (degree 11): the 11-cycle with the first suitable involution."""
    m11 = m11 or m11_degree11()
    a = m11.generators[0]
    for x in m11.elements():
        if x.order() == 2 and PermGroup([a, x]).order() == 660:
            return PermGroup([a, x], name="L2(11)")
    raise AssertionError("no L2(11) found in M11")


def m11_degree12() -> PermGroup:
    grp = PermGroup([Permutation(g) for g in M11_DEGREE12], name="M11/L2(11)")
    if grp.order() != 7920:
        raise AssertionError("embedded M11 generators are corrupt")
    return grp


# -- catalog -----------------------------------------------------------------

@dataclass
class AtlasEntry:
    key: str
    family: str
    q: int | None
    action: str
    degree: int
    order: int
    star_r: int | None
    order_set: list[int] | None
    note: str = ""
    build: object = field(default=None, repr=False)

    def construct(self) -> PermGroup:
        return self.build()

    def to_json(self) -> dict:
        return {"key": self.key, "family": self.family, "q": self.q, "action": self.action,
                "degree": self.degree, "order": self.order,
                "star": {"holds": self.star_r is not None, "r": self.star_r},
                "order_set": self.order_set, "note": self.note}


def _induced(fn, *args):
    return lambda: fn(*args).induced


def catalog() -> list[AtlasEntry]:
    """Constructible actions with their expected metadata."""
    e: list[AtlasEntry] = []

    def add(key, family, q, action, degree, order, r, es, build, note=""):
        e.append(AtlasEntry(key, family, q, action, degree, order, r, es, note, build))

    for q, r, es in [(4, 5, [5]), (7, 2, [2, 4]), (8, 3, [3, 9]), (9, 5, [5]),
                     (11, None, None), (13, 7, [7]), (16, 17, [17]), (17, 3, [3, 9])]:
        add(f"L2({q})/P1", "L2", q, "P1", q + 1, line_closed_order(q, "PSL"), r, es,
            lambda q=q: projective_line_group(q, "PSL"))
    add("L2(4)/D_split", "L2", 4, "COSETS_OF(D_split)", 10, 60, 5, [5],
        _induced(torus_normalizer_cosets, 4, "PSL", True))
    add("L2(4)/D_nonsplit", "L2", 4, "COSETS_OF(D_nonsplit)", 6, 60, 3, [3],
        _induced(torus_normalizer_cosets, 4, "PSL", False))
    add("L2(7)/S4", "L2", 7, "COSETS_OF(S4)", 7, 168, 7, [7],
        lambda: coset_action(projective_line_group(7), s4_in_l2_7().generators).induced)
    add("L2(8)/D_split", "L2", 8, "COSETS_OF(D_split)", 36, 504, 3, [3, 9],
        _induced(torus_normalizer_cosets, 8, "PSL", True))
    add("L2(8)/D_nonsplit", "L2", 8, "COSETS_OF(D_nonsplit)", 28, 504, 7, [7],
        _induced(torus_normalizer_cosets, 8, "PSL", False))
    add("PGL2(7)/P1", "PGL2", 7, "P1", 8, 336, 2, [2, 4, 8],
        lambda: projective_line_group(7, "PGL"))
    add("GammaL2(8)/P1", "GammaL2", 8, "COSETS_OF(N(P1))", 9, 1512, 3, [3, 9],
        lambda: projective_line_group(8, "GammaL"))
    add("GammaL2(8)/D_split", "GammaL2", 8, "COSETS_OF(N(D_split))", 36, 1512, 3, [3, 9],
        _induced(torus_normalizer_cosets, 8, "GammaL", True))
    add("GammaL2(8)/D_nonsplit", "GammaL2", 8, "COSETS_OF(N(D_nonsplit))", 28, 1512, 7, [7],
        _induced(torus_normalizer_cosets, 8, "GammaL", False))
    for q, r in [(2, 7), (3, 13), (4, 7), (5, 31)]:
        add(f"L3({q})/P1", "L3", q, "P1", q * q + q + 1, plane_closed_order(q), r, [r],
            lambda q=q: projective_plane_group(q))
    add("L3(7)/P1", "L3", 7, "P1", 57, plane_closed_order(7), 19, [19],
        lambda: projective_plane_group(7, allow_large=True), note="large; behind a flag")
    add("M11/L2(11)", "M11", None, "COSETS_OF(L2(11))", 12, 7920, 2, [4, 8], m11_degree12)
    add("S5/natural", "S5", None, "NATURAL", 5, 120, None, None, lambda: symmetric_group(5))
    return e


def find_entry(key: str) -> AtlasEntry:
    for entry in catalog():
        if entry.key == key:
            return entry
    raise KeyError(key)


def build_action(family: str, q: int | None, action: str) -> PermGroup:
    """Construct the permutation group named by (family, q, action)."""
    fam = family.upper()
    act = action.upper()
    if fam in ("L2", "PGL2", "GAMMAL2"):
        flavor = {"L2": "PSL", "PGL2": "PGL", "GAMMAL2": "GammaL"}[fam]
        if act == "P1":
            return projective_line_group(q, flavor)
        if act in ("D_SPLIT", "COSETS_OF(D_SPLIT)", "N(D_SPLIT)"):
            return torus_normalizer_cosets(q, flavor, True).induced
        if act in ("D_NONSPLIT", "COSETS_OF(D_NONSPLIT)", "N(D_NONSPLIT)"):
            return torus_normalizer_cosets(q, flavor, False).induced
        if act in ("S4", "COSETS_OF(S4)") and fam == "L2" and q == 7:
            return coset_action(projective_line_group(7), s4_in_l2_7().generators).induced
    if fam == "L3":
        if act == "P1":
            return projective_plane_group(q, allow_large=q in LARGE_PLANE_Q)
        if act == "P2":
            return projective_plane_group(q, dual=True, allow_large=q in LARGE_PLANE_Q)
    if fam == "M11":
        if act in ("NATURAL", "P1"):
            return m11_degree11()
        if act in ("L2(11)", "COSETS_OF(L2(11))"):
            return m11_degree12()
    raise GroupError(f"no atlas construction for family={family} q={q} action={action}")


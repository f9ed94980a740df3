"""Derangement predicates on transitive permutation groups.

Everything here streams the group's elements in numpy chunks, so the cost is
the group order times the degree.  Groups are assumed to be small enough to
enumerate (see ``perm.max_order``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .numtheory import prime_factors, prime_power
from .perm import (
    GroupError, PermGroup, Permutation, centralizer_size, compose, coset_action,
    diagonal_group, element_orders, fixed_point_counts, intersection, rows_to_perms,
    sylow_subgroup,
    _row_keys,
)


def _require_transitive(g: PermGroup) -> None:
    if not g.is_transitive():
        raise GroupError("group is not transitive")


def derangement_chunks(g: PermGroup, cap: int | None = None) -> Iterator[np.ndarray]:
    _require_transitive(g)
    for chunk in g.element_chunks(cap):
        yield chunk[fixed_point_counts(chunk) == 0]


def derangement_set(g: PermGroup, cap: int | None = None) -> Iterator[Permutation]:
    """Elements of ``g`` without fixed points."""
    for chunk in derangement_chunks(g, cap):
        yield from rows_to_perms(chunk)


@dataclass
class DerangementStats:
    group_order: int
    degree: int
    count: int
    order_counts: dict[int, int]
    fixed_point_total: int

    @property
    def orders(self) -> list[int]:
        return sorted(self.order_counts)


def derangement_stats(g: PermGroup, cap: int | None = None) -> DerangementStats:
    """One pass over ``g``: derangement count, their orders, and the Burnside sum."""
    _require_transitive(g)
    count = 0
    fix_total = 0
    orders: dict[int, int] = {}
    for chunk in g.element_chunks(cap):
        fc = fixed_point_counts(chunk)
        fix_total += int(fc.sum())
        der = chunk[fc == 0]
        count += der.shape[0]
        if der.shape[0]:
            vals, cnt = np.unique(element_orders(der), return_counts=True)
            for v, c in zip(vals.tolist(), cnt.tolist()):
                orders[v] = orders.get(v, 0) + c
    return DerangementStats(g.order(), g.degree, count, dict(sorted(orders.items())), fix_total)


def order_set(g: PermGroup, cap: int | None = None) -> list[int]:
    """E(G): the distinct orders of derangements, ascending."""
    return derangement_stats(g, cap).orders


@dataclass
class StarResult:
    holds: bool
    r: int | None
    order_set: list[int]
    coprime_pair: tuple[int, int] | None = None
    mixed_order: int | None = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "r": self.r}


def star_from_orders(orders: Sequence[int]) -> StarResult:
    """Decide whether all the given orders are powers of one prime."""
    orders = sorted(orders)
    if not orders or orders[0] < 2:
        # a transitive group always has derangements, all of order >= 2
        raise AssertionError(f"invalid derangement order set {orders}")
    primes = set()
    mixed = None
    for m in orders:
        pp = prime_power(m)
        if pp is None:
            mixed = mixed if mixed is not None else m
            primes.update(prime_factors(m))
        else:
            primes.add(pp[0])
    pair = next(((a, b) for a, b in combinations(orders, 2) if math.gcd(a, b) == 1), None)
    if len(primes) == 1:
        return StarResult(True, primes.pop(), list(orders))
    return StarResult(False, None, list(orders), pair, mixed)


def star_property(g: PermGroup, cap: int | None = None) -> StarResult:
    return star_from_orders(order_set(g, cap))


def is_elusive(g: PermGroup, cap: int | None = None) -> bool:
    """True when no derangement has prime order."""
    return not any(prime_power(m)[1] == 1 for m in order_set(g, cap))


def fks_witness(orders: Sequence[int]) -> int | None:
    """Smallest prime-power derangement order, if any."""
    return next((m for m in sorted(orders) if prime_power(m) is not None), None)


def sharply_two_transitive(g: PermGroup) -> bool:
    n = g.degree
    return g.order() == n * (n - 1) and g.transitivity_degree(2) >= 2


# -- report ----------------------------------------------------------------

@dataclass
class DerangementReport:
    degree: int
    group_order: int
    transitive: bool
    primitive: bool
    derangement_count: int
    delta: Fraction
    order_set: list[int]
    star: StarResult
    elusive: bool
    fks_witness: int | None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "group_order": self.group_order,
            "transitive": self.transitive,
            "primitive": self.primitive,
            "derangement_count": self.derangement_count,
            "delta": {"num": self.delta.numerator, "den": self.delta.denominator},
            "order_set": self.order_set,
            "star": self.star.to_json(),
            "elusive": self.elusive,
            "fks_witness": self.fks_witness,
        }


def analyze(g: PermGroup, cap: int | None = None) -> DerangementReport:
    stats = derangement_stats(g, cap)
    if stats.fixed_point_total != stats.group_order:
        raise AssertionError("Burnside count failed for a transitive group")
    orders = stats.orders
    star = star_from_orders(orders)
    witness = fks_witness(orders)
    if witness is None:
        raise AssertionError("no prime-power derangement: enumeration bug")
    return DerangementReport(
        degree=g.degree,
        group_order=stats.group_order,
        transitive=True,
        primitive=g.is_primitive(),
        derangement_count=stats.count,
        delta=Fraction(stats.count, stats.group_order),
        order_set=orders,
        star=star,
        elusive=not any(prime_power(m)[1] == 1 for m in orders),
        fks_witness=witness,
    )


# -- cross checks ----------------------------------------------------------

def derangements_by_conjugates(g: PermGroup, cap: int | None = None) -> set[bytes]:
    """G minus the union of the conjugates of the stabilizer of point 0.

    Independent of fixed-point counting: conjugates are formed by group
    multiplication u^-1 h u over a transversal u of the orbit of 0.
    """
    _require_transitive(g)
    h = g.point_stabilizer(0)
    h_rows = h.element_array(cap)
    covered: set[bytes] = set()
    ident = Permutation.identity(g.degree)
    reps = {0: ident}
    queue = [0]
    for pt in queue:
        for s in g.generators:
            nxt = s.images[pt]
            if nxt not in reps:
                reps[nxt] = compose(reps[pt], s)
                queue.append(nxt)
    for u in reps.values():
        uv = np.asarray(u.images, dtype=h_rows.dtype)
        ui = np.asarray(u.inverse().images, dtype=h_rows.dtype)
        # u^-1 h u applied left to right: i -> u(h(u^-1(i)))
        conj = uv[h_rows[:, ui]]
        covered.update(_row_keys(conj))
    out = set()
    for chunk in g.element_chunks(cap):
        for key in _row_keys(chunk):
            if key not in covered:
                out.add(key)
    return out


def is_two_covering(g: PermGroup, h_gens: Sequence[Permutation],
                    k_gens: Sequence[Permutation], cap: int | None = None) -> bool:
    """Whether every element of ``g`` is conjugate into <h_gens> or <k_gens>.

    x is conjugate into H exactly when x fixes a right coset of H, so the test
    runs on the joint action on both coset spaces.
    """
    ha = coset_action(g, h_gens)
    ka = coset_action(g, k_gens)
    joint = diagonal_group([ha.induced, ka.induced])
    n1 = ha.degree
    for chunk in joint.element_chunks(cap):
        ar = np.arange(joint.degree, dtype=chunk.dtype)
        fixed = chunk == ar
        if not (fixed[:, :n1].any(axis=1) | fixed[:, n1:].any(axis=1)).all():
            return False
    return True


@dataclass
class PrimeGraph:
    vertices: list[int]
    edges: list[tuple[int, int]]

    @property
    def isolated(self) -> list[int]:
        touched = {p for e in self.edges for p in e}
        return [p for p in self.vertices if p not in touched]

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges],
                "isolated": self.isolated}


def prime_graph(g: PermGroup, cap: int | None = None) -> PrimeGraph:
    verts = prime_factors(g.order())
    seen = set()
    for chunk in g.element_chunks(cap):
        seen.update(np.unique(element_orders(chunk)).tolist())
    edges = [(a, b) for a, b in combinations(verts, 2) if any(m % (a * b) == 0 for m in seen)]
    return PrimeGraph(verts, edges)


@dataclass
class CosetFixedPointResult:
    derangement_free: bool
    all_unique_fixed_point: bool

    @property
    def consistent(self) -> bool:
        return self.derangement_free == self.all_unique_fixed_point


def coset_unique_fixed_point_check(g: PermGroup, n_gens: Sequence[Permutation],
                                   coset_rep: Permutation) -> CosetFixedPointResult:
    """Compare "N x has no derangement" with "every element of N x fixes exactly one point".

    Requires N normal and transitive with G/N cyclic generated by N x.
    """
    n = PermGroup(list(n_gens), degree=g.degree)
    if not n.is_transitive():
        raise GroupError("normal subgroup is not transitive")
    if not n.is_subgroup_of(g):
        raise GroupError("subgroup generators are not in the group")
    for s in g.generators:
        for t in n.generators:
            if not n.contains(compose(compose(s.inverse(), t), s)):
                raise GroupError("subgroup is not normal")
    if not g.contains(coset_rep):
        raise GroupError("coset representative is not in the group")
    if PermGroup([*n.generators, coset_rep], degree=g.degree).order() != g.order():
        raise GroupError("G/N is not generated by the given coset")
    xv = np.asarray(coset_rep.images)
    free = True
    unique = True
    for chunk in n.element_chunks():
        fc = fixed_point_counts(xv[chunk])
        free &= bool((fc > 0).all())
        unique &= bool((fc == 1).all())
    return CosetFixedPointResult(free, unique)


def centralizer_condition(g: PermGroup, r: int, cap: int | None = None) -> bool:
    """Every derangement has an r-group centralizer."""
    seen: set[bytes] = set()
    for chunk in derangement_chunks(g, cap):
        for x in rows_to_perms(chunk):
            key = bytes(np.asarray(x.images, dtype=np.int32))
            if key in seen:
                continue
            size = centralizer_size(g, x, cap)
            pp = prime_power(size)
            if pp is None or pp[0] != r:
                return False
            # the whole class has the same centralizer order
            seen.update(_conjugacy_keys(g, x))
    return True


def _conjugacy_keys(g: PermGroup, x: Permutation) -> set[bytes]:
    xv = np.asarray(x.images)
    out = set()
    for chunk in g.element_chunks():
        inv = np.argsort(chunk, axis=1)
        conj = np.take_along_axis(chunk, xv[inv], axis=1)
        out.update(bytes(r) for r in conj.astype(np.int32))
    return out


def stabilizer_prime_cover(g: PermGroup, r: int) -> bool:
    """pi(G) is contained in pi(H) together with r, H the stabilizer of point 0."""
    h = g.point_stabilizer(0)
    return set(prime_factors(g.order())) <= set(prime_factors(h.order())) | {r}


def derangement_inclusion(g: PermGroup, h_gens: Sequence[Permutation],
                          n_gens: Sequence[Permutation], cap: int | None = None) -> bool:
    """Derangements of N on N/(H ∩ N) are derangements of G on G/H.

    N must be transitive on G/H; both actions are computed independently and
    compared element by element.
    """
    big = coset_action(g, h_gens)
    n = PermGroup(list(n_gens), degree=g.degree)
    h = PermGroup(list(h_gens), degree=g.degree)
    k = intersection(h, n, cap)
    if n.order() == k.order():
        raise GroupError("H ∩ N is all of N")
    small = coset_action(n, k.generators)
    if small.degree != big.degree:
        raise GroupError("N is not transitive on the cosets of H")
    for x in n.elements(cap):
        if small.image(x).fixed_points() == 0 and big.image(x).fixed_points() != 0:
            return False
    return True


def covering_primes(g: PermGroup, cap: int | None = None) -> list[int]:
    """Primes r for which (point stabilizer, Sylow r-subgroup) is a 2-covering.

    When G is itself an r-group the Sylow subgroup is all of G; r is listed as
    a degenerate cover since every element then lies in K.
    """
    h = g.point_stabilizer(0)
    out = []
    for r in prime_factors(g.order()):
        k = sylow_subgroup(g, r, cap)
        if k.order() == g.order():
            out.append(r)
            continue
        if is_two_covering(g, h.generators, k.generators, cap):
            out.append(r)
    return out


def star_two_covering_agree(g: PermGroup, cap: int | None = None) -> bool:
    """Star property with prime r holds iff (point stabilizer, Sylow r) covers."""
    star = star_property(g, cap)
    primes = covering_primes(g, cap)
    if star.holds:
        return star.r in primes
    return not primes

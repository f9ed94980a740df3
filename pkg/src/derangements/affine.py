"""Affine groups G = H ⋉ V with H a matrix group over GF(p) and V = GF(p)^k.

Elements are pairs (t, v) acting on row vectors by x -> x t + v, so
(t1, v1)(t2, v2) = (t1 t2, v1 t2 + v2).  The vector x is identified with the
point sum(x[i] * p**i): coordinate 0 is the least significant digit.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .analysis import DerangementReport, StarResult, fks_witness, star_from_orders
from .analysis import order_set as perm_order_set
from .gf import (
    Matrix, gf, identity_matrix, mat, mat_det, mat_fixed_space, mat_inv, mat_mul,
    mat_sub_identity, restrict_scalars, row_space, vec_mat,
)
from .numtheory import is_prime, prime_power
from .perm import (
    CapExceeded, PermGroup, Permutation, centralizer, coset_action, group_exponent,
    max_order, sylow_subgroup,
)

MAX_H_ORDER = 10**6
MAX_POINTS = 10**4


class AffineError(ValueError):
    pass


@dataclass(frozen=True)
class AffineElement:
    t: Matrix
    v: tuple
    p: int

    def __mul__(self, other: AffineElement) -> AffineElement:
        F = gf(self.p)
        w = vec_mat(self.v, other.t, F)
        return AffineElement(mat_mul(self.t, other.t, F),
                             tuple((a + b) % self.p for a, b in zip(w, other.v)), self.p)

    def is_identity(self) -> bool:
        return self.t == identity_matrix(len(self.t)) and not any(self.v)

    def order(self) -> int:
        x, k = self, 1
        while not x.is_identity():
            x = x * self
            k += 1
        return k

    def inverse(self) -> AffineElement:
        F = gf(self.p)
        ti = mat_inv(self.t, F)
        w = vec_mat(self.v, ti, F)
        return AffineElement(ti, tuple((-a) % self.p for a in w), self.p)

    def apply(self, x: Sequence[int]) -> tuple:
        w = vec_mat(x, self.t, gf(self.p))
        return tuple((a + b) % self.p for a, b in zip(w, self.v))


class AffinePair:
    """A matrix group H <= GL_k(p) together with its natural module V."""

    def __init__(self, p: int, k: int, h_generators: Sequence, name: str | None = None):
        if not is_prime(p):
            raise AffineError(f"field 'p': {p} is not prime")
        if k < 1:
            raise AffineError("field 'k' must be positive")
        self.p = p
        self.k = k
        self.field = gf(p)
        gens = []
        for i, g in enumerate(h_generators):
            m = mat([[x % p for x in row] for row in g])
            if len(m) != k or any(len(row) != k for row in m):
                raise AffineError(f"field 'generators[{i}]' is not a {k}x{k} matrix")
            if mat_det(m, self.field) == 0:
                raise AffineError(f"field 'generators[{i}]' is not invertible mod {p}")
            gens.append(m)
        self.h_generators = tuple(gens) or (identity_matrix(k),)
        self.name = name

    def __repr__(self) -> str:
        return f"<AffinePair {self.name or ''} p={self.p} k={self.k}>"

    @property
    def degree(self) -> int:
        return self.p**self.k

    @cached_property
    def h_elements(self) -> list[Matrix]:
        """H by breadth-first closure, in discovery order."""
        ident = identity_matrix(self.k)
        seen = {ident}
        out = [ident]
        for x in out:
            for g in self.h_generators:
                y = mat_mul(x, g, self.field)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    if len(out) > MAX_H_ORDER:
                        raise CapExceeded("matrix group order", len(out), MAX_H_ORDER)
        return out

    @cached_property
    def _h_set(self) -> frozenset:
        return frozenset(self.h_elements)

    def h_order(self) -> int:
        return len(self.h_elements)

    def order(self) -> int:
        return self.h_order() * self.degree

    def vectors(self) -> Iterator[tuple]:
        """All of V in point-index order."""
        for digits in product(range(self.p), repeat=self.k):
            yield tuple(reversed(digits))

    def index(self, v: Sequence[int]) -> int:
        return sum(x * self.p**i for i, x in enumerate(v))

    def matrix_order(self, t: Matrix) -> int:
        ident = identity_matrix(self.k)
        x, k = t, 1
        while x != ident:
            x = mat_mul(x, t, self.field)
            k += 1
        return k

    def span(self, basis: Sequence[Sequence[int]]) -> set[tuple]:
        out = set()
        for coeffs in product(range(self.p), repeat=len(basis)):
            out.add(tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % self.p
                          for i in range(self.k)))
        return out

    # -- module structure ----------------------------------------------

    def invariant_subspace(self) -> list[tuple] | None:
        """A proper nonzero H-invariant subspace, or None if V is irreducible.

        Every invariant subspace contains the span of the H-orbit of one of its
        vectors, so spinning one representative of each 1-space is enough.
        """
        F = self.field
        for v in self.vectors():
            lead = next((x for x in v if x), None)
            if lead != 1:
                continue
            basis = row_space([v], F)
            while True:
                imgs = [vec_mat(b, g, F) for b in basis for g in self.h_generators]
                nxt = row_space(basis + imgs, F)
                if len(nxt) == len(basis):
                    break
                basis = nxt
            if len(basis) < self.k:
                return basis
        return None

    def is_irreducible(self) -> bool:
        return self.invariant_subspace() is None

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        out = {}
        if self.name:
            out["name"] = self.name
        out.update({"p": self.p, "k": self.k, "module_dim": self.k,
                    "generators": [[list(r) for r in g] for g in self.h_generators]})
        return out

    @classmethod
    def from_json(cls, data: dict) -> AffinePair:
        if not isinstance(data, dict):
            raise AffineError("matrix-group file must hold a JSON object")
        p = data.get("p")
        if not isinstance(p, int):
            raise AffineError("field 'p' must be an integer prime")
        k = data.get("k", data.get("module_dim"))
        if not isinstance(k, int):
            raise AffineError("field 'k' (or 'module_dim') must be an integer")
        if "module_dim" in data and data["module_dim"] != k:
            raise AffineError("fields 'k' and 'module_dim' disagree")
        gens = data.get("generators")
        if not isinstance(gens, list) or not gens:
            raise AffineError("field 'generators' must be a nonempty list of matrices")
        for i, g in enumerate(gens):
            if not (isinstance(g, list) and all(isinstance(r, list) and
                                                all(isinstance(x, int) for x in r) for r in g)):
                raise AffineError(f"field 'generators[{i}]' must be a list of integer rows")
        return cls(p, k, gens, name=data.get("name"))

    @classmethod
    def load(cls, path) -> AffinePair:
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise AffineError(f"invalid JSON in {path}: {exc}") from None
        return cls.from_json(data)


# -- permutation realization ----------------------------------------------

def _vector_table(pair: AffinePair) -> np.ndarray:
    return np.array(list(pair.vectors()), dtype=np.int64)


def matrix_perm(pair: AffinePair, t: Matrix, v: Sequence[int] | None = None) -> Permutation:
    X = _vector_table(pair)
    img = X @ np.array(t, dtype=np.int64)
    if v is not None:
        img = img + np.array(v, dtype=np.int64)
    img %= pair.p
    weights = pair.p ** np.arange(pair.k, dtype=np.int64)
    return Permutation((img @ weights).tolist())


def perm_matrix(pair: AffinePair, g: Permutation) -> Matrix:
    """Inverse of ``matrix_perm`` for linear maps: row i is the image of e_i."""
    vecs = list(pair.vectors())
    return mat([vecs[g.images[pair.p**i]] for i in range(pair.k)])


def _check_points(pair: AffinePair) -> None:
    if pair.degree > MAX_POINTS:
        raise CapExceeded("affine degree", pair.degree, MAX_POINTS)


def as_permutation_group(pair: AffinePair) -> PermGroup:
    """H ⋉ V acting on the p^k points of V."""
    _check_points(pair)
    gens = [matrix_perm(pair, t) for t in pair.h_generators]
    ident = identity_matrix(pair.k)
    for i in range(pair.k):
        e = tuple(1 if j == i else 0 for j in range(pair.k))
        gens.append(matrix_perm(pair, ident, e))
    gens = [g for g in dict.fromkeys(gens) if not g.is_identity()]
    return PermGroup(gens, degree=pair.degree, name=pair.name)


def h_as_permutation_group(pair: AffinePair) -> PermGroup:
    _check_points(pair)
    gens = [g for g in (matrix_perm(pair, t) for t in pair.h_generators) if not g.is_identity()]
    return PermGroup(gens, degree=pair.degree)


# -- derangements ------------------------------------------------------------

def commutator_image(t: Matrix, pair: AffinePair) -> list[tuple]:
    """Basis of [V, t] = V (t - I)."""
    t = mat(t)
    if t not in pair._h_set:
        raise AffineError("matrix is not in H")
    return row_space(list(mat_sub_identity(t, pair.field)), pair.field)


def affine_derangements(pair: AffinePair) -> Iterator[AffineElement]:
    """All t v with t in H and v outside [V, t]."""
    if pair.order() > max_order():
        raise CapExceeded("group order", pair.order(), max_order())
    vecs = list(pair.vectors())
    for t in pair.h_elements:
        image = pair.span(commutator_image(t, pair))
        for v in vecs:
            if v not in image:
                yield AffineElement(t, v, pair.p)


def affine_order_counts(pair: AffinePair) -> dict[int, int]:
    counts: dict[int, int] = {}
    for x in affine_derangements(pair):
        o = x.order()
        counts[o] = counts.get(o, 0) + 1
    return dict(sorted(counts.items()))


def affine_order_set(pair: AffinePair) -> list[int]:
    return sorted(affine_order_counts(pair))


# -- semiregularity and two-point stabilizers -------------------------------

@dataclass
class SemiregularResult:
    holds: bool
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_rprime_semiregular(pair: AffinePair, r: int) -> SemiregularResult:
    """No nontrivial r'-element of H has eigenvalue 1 on V."""
    for h in pair.h_elements:
        o = pair.matrix_order(h)
        if o == 1 or o % r == 0:
            continue
        if mat_fixed_space(h, pair.field)[0] > 0:
            return SemiregularResult(False, h)
    return SemiregularResult(True)


def semiregular_violations(pair: AffinePair, r: int) -> list[Matrix]:
    return [h for h in pair.h_elements
            if pair.matrix_order(h) % r and pair.matrix_order(h) > 1
            and mat_fixed_space(h, pair.field)[0] > 0]


def vector_stabilizer(pair: AffinePair, v: Sequence[int]) -> list[Matrix]:
    v = tuple(v)
    return [h for h in pair.h_elements if vec_mat(v, h, pair.field) == v]


def two_point_stabilizer_check(pair: AffinePair, r: int) -> bool:
    """Every stabilizer C_H(v), v nonzero, is an r-group."""
    for v in pair.vectors():
        if not any(v):
            continue
        size = len(vector_stabilizer(pair, v))
        if size > 1 and (prime_power(size) or (None,))[0] != r:
            return False
    return True


def star_property_affine(pair: AffinePair) -> StarResult:
    """Star property via the semiregularity criterion; the module must be irreducible."""
    if not pair.is_irreducible():
        raise AffineError("V is a reducible H-module; the affine group is not primitive")
    holds = bool(is_rprime_semiregular(pair, pair.p))
    return StarResult(holds, pair.p if holds else None, [])


@dataclass
class EquivalenceResult:
    star: bool
    stabilizers: bool
    semiregular: bool

    @property
    def agree(self) -> bool:
        return self.star == self.stabilizers == self.semiregular


def star_conditions(pair: AffinePair) -> EquivalenceResult:
    """The three equivalent conditions for H ⋉ V with V a p-group, evaluated separately."""
    star = star_from_orders(affine_order_set(pair))
    return EquivalenceResult(
        star=star.holds and star.r == pair.p,
        stabilizers=two_point_stabilizer_check(pair, pair.p),
        semiregular=bool(is_rprime_semiregular(pair, pair.p)),
    )


# -- Sylow reduction and the exponent criterion ------------------------------

def sylow_of_h(pair: AffinePair, r: int) -> list[Matrix]:
    """Generators of a Sylow r-subgroup of H (empty if r does not divide |H|)."""
    if pair.h_order() % r:
        return []
    hp = h_as_permutation_group(pair)
    return [perm_matrix(pair, g) for g in sylow_subgroup(hp, r).generators]


@dataclass
class SylowReduction:
    k_order: int
    p_order: int
    coset_degree: int
    coset_group: PermGroup
    order_set: list[int]
    full_order_set: list[int]

    @property
    def agrees(self) -> bool:
        return self.order_set == self.full_order_set


def sylow_reduction(pair: AffinePair) -> SylowReduction:
    """K = Sylow_p(H), P = K ⋉ V acting on the cosets of K; compare E_K(P) with E(G)."""
    star = star_property_affine(pair)
    if not star.holds:
        raise AffineError("star property fails; the reduction needs it")
    k_gens = sylow_of_h(pair, pair.p)
    kp = [matrix_perm(pair, t) for t in k_gens]
    ident = identity_matrix(pair.k)
    trans = [matrix_perm(pair, ident, tuple(1 if j == i else 0 for j in range(pair.k)))
             for i in range(pair.k)]
    p_group = PermGroup(kp + trans, degree=pair.degree)
    k_group = PermGroup(kp, degree=pair.degree)
    action = coset_action(p_group, k_group.generators, max_degree=MAX_POINTS)
    e_kp = perm_order_set(action.induced)
    return SylowReduction(k_group.order(), p_group.order(), action.degree,
                          action.induced, e_kp, affine_order_set(pair))


@dataclass
class ExponentCriterion:
    all_derangements_order_r: bool
    conditions_hold: bool
    stabilizers_r_groups: bool
    sylow_exponent: int

    @property
    def agree(self) -> bool:
        return self.all_derangements_order_r == self.conditions_hold

    def to_json(self) -> dict:
        return {"all_derangements_order_r": self.all_derangements_order_r,
                "conditions_hold": self.conditions_hold,
                "sylow_exponent": self.sylow_exponent}


def exponent_criterion(pair: AffinePair) -> ExponentCriterion:
    """E(G) = {p} against (two-point stabilizers are p-groups and exp(Sylow_p(G)) = p)."""
    r = pair.p
    lhs = affine_order_set(pair) == [r]
    stab = two_point_stabilizer_check(pair, r)
    sylow = sylow_subgroup(as_permutation_group(pair), r)
    exp = group_exponent(sylow)
    return ExponentCriterion(lhs, stab and exp == r, stab, exp)


# -- the structural facts about semidirect products ---------------------------

def centralizer_decomposition(pair: AffinePair) -> bool:
    """C_G(h) = C_H(h) C_V(h) for every h in H, compared as permutation sets."""
    g = as_permutation_group(pair)
    F = pair.field
    for h in pair.h_elements:
        direct = {x for x in centralizer(g, matrix_perm(pair, h)).elements()}
        c_h = [s for s in pair.h_elements if mat_mul(s, h, F) == mat_mul(h, s, F)]
        c_v = [w for w in pair.vectors() if vec_mat(w, h, F) == w]
        built = {matrix_perm(pair, s, w) for s in c_h for w in c_v}
        if direct != built:
            return False
    return True


def stabilizer_intersection(pair: AffinePair) -> bool:
    """H ∩ H^v = C_H(v) for every nonzero v."""
    ident = identity_matrix(pair.k)
    zero = tuple([0] * pair.k)
    hs = pair._h_set
    for v in pair.vectors():
        if not any(v):
            continue
        n = AffineElement(ident, v, pair.p)
        ninv = n.inverse()
        conj = {(ninv * AffineElement(h, zero, pair.p) * n) for h in pair.h_elements}
        meet = {x.t for x in conj if not any(x.v) and x.t in hs}
        if meet != set(vector_stabilizer(pair, v)):
            return False
    return True


# -- report ---------------------------------------------------------------------

@dataclass
class AffineReport:
    base: DerangementReport
    semiregular: bool
    sylow_exponent: int
    frobenius: bool

    def to_json(self) -> dict:
        out = self.base.to_json()
        out.update({"semiregular": self.semiregular, "sylow_exponent": self.sylow_exponent,
                    "frobenius": self.frobenius})
        return out


def is_frobenius(pair: AffinePair) -> bool:
    """Only the identity of G fixes two points: H acts semiregularly on V minus 0."""
    return pair.h_order() > 1 and all(
        mat_fixed_space(h, pair.field)[0] == 0 for h in pair.h_elements[1:])


def analyze_affine(pair: AffinePair) -> AffineReport:
    counts = affine_order_counts(pair)
    orders = sorted(counts)
    star = star_from_orders(orders)
    total = sum(counts.values())
    base = DerangementReport(
        degree=pair.degree,
        group_order=pair.order(),
        transitive=True,
        primitive=pair.is_irreducible(),
        derangement_count=total,
        delta=Fraction(total, pair.order()),
        order_set=orders,
        star=star,
        elusive=not any(prime_power(m)[1] == 1 for m in orders),
        fks_witness=fks_witness(orders),
    )
    crit = exponent_criterion(pair)
    return AffineReport(base, bool(is_rprime_semiregular(pair, pair.p)),
                        crit.sylow_exponent, is_frobenius(pair))


# -- constructors ------------------------------------------------------------------

def agl1(q: int) -> AffinePair:
    """F_q^* acting on F_q, written over the prime field."""
    pp = prime_power(q)
    if pp is None:
        raise AffineError(f"{q} is not a prime power")
    F = gf(*pp)
    gen = F.basis_matrix(F.primitive_element) if q > 2 else [[1]]
    return AffinePair(pp[0], pp[1], [gen], name=f"AGL1({q})")


def _sl2_generators(q: int) -> list:
    pp = prime_power(q)
    F = gf(*pp)
    gens = []
    for i in range(F.f):
        s = F.pow(F.primitive_element, i)
        gens.append(mat([[1, s], [0, 1]]))
        gens.append(mat([[1, 0], [s, 1]]))
    return gens


def asl2(p: int) -> AffinePair:
    if not is_prime(p):
        raise AffineError(f"{p} is not prime")
    return AffinePair(p, 2, _sl2_generators(p), name=f"ASL2({p})")


def agl2(p: int) -> AffinePair:
    F = gf(p)
    gens = _sl2_generators(p) + [mat([[F.primitive_element, 0], [0, 1]])]
    return AffinePair(p, 2, gens, name=f"AGL2({p})")


def sl2_natural(q: int) -> AffinePair:
    """SL2(q) on F_q^2, viewed as a 2f-dimensional space over the prime field."""
    p, f = prime_power(q)
    F = gf(p, f)
    gens = [restrict_scalars(m, F) for m in _sl2_generators(q)]
    return AffinePair(p, 2 * f, gens, name=f"SL2({q})-natural")


def cyclic_semilinear(p: int, k: int, order: int) -> AffinePair:
    """The subgroup of order ``order`` of the Singer cycle F_{p^k}^* on F_p^k."""
    F = gf(p, k)
    if (F.q - 1) % order:
        raise AffineError(f"{order} does not divide {F.q - 1}")
    g = F.pow(F.primitive_element, (F.q - 1) // order)
    return AffinePair(p, k, [F.basis_matrix(g)], name=f"Z{order}<GL{k}({p})")


def diagonal_klein(p: int) -> AffinePair:
    """Z2 x Z2 as diagonal sign matrices on F_p^2: a reducible module."""
    return AffinePair(p, 2, [[[p - 1, 0], [0, 1]], [[1, 0], [0, p - 1]]], name=f"Z2xZ2<GL2({p})")


def affine_corpus() -> list[AffinePair]:
    return [
        asl2(2), asl2(3), asl2(5),
        agl1(3), agl1(4), agl1(5), agl1(7), agl1(8),
        sl2_natural(4),
        agl2(3),
        cyclic_semilinear(11, 1, 5),
        cyclic_semilinear(3, 3, 13),
    ]


def reducible_corpus() -> list[AffinePair]:
    return [diagonal_klein(3)]

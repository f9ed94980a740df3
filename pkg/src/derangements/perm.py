"""Permutations and permutation groups.

Composition is left-to-right: ``a * b`` applies ``a`` first, then ``b``, so
``(a * b)(i) == b(a(i))``. Points are ``0..n-1``.

Groups carry a base and strong generating set built by a deterministic
Schreier-Sims run. Element enumeration walks the transversals and is also
exposed in batched form (numpy arrays, one element per row) for the counting
kernels used by the derangement analysis.
"""
from __future__ import annotations

import json
import math
import os
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 20_000_000
DEFAULT_MAX_INDEX = 100_000
CHUNK_ROWS = 1 << 15


class GroupError(ValueError):
    """Malformed input or violated precondition."""


class CapExceeded(RuntimeError):
    """A resource cap (group order, coset index, action degree) was hit."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} {value} exceeds cap {cap}; too large to enumerate")
        self.what = what
        self.value = value
        self.cap = cap


def max_order() -> int:
    return int(os.environ.get("DERANGEMENTS_MAX_ORDER", DEFAULT_MAX_ORDER))


def max_index() -> int:
    return int(os.environ.get("DERANGEMENTS_MAX_DEGREE", DEFAULT_MAX_INDEX))


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n == 0 or sorted(images) != list(range(n)):
            raise GroupError(f"not a bijection on 0..{n - 1}: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(n))
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            c = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                c.append(j)
                j = self.images[j]
            out.append(tuple(c))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return element_order(self)

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self.images) if i == x)

    def smallest_moved_point(self) -> int | None:
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Permutation(id, n={self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if len(a.images) != len(b.images):
        raise GroupError(f"degree mismatch: {len(a.images)} vs {len(b.images)}")
    bi = b.images
    return Permutation._raw(tuple(bi[i] for i in a.images))


def element_order(a: Permutation) -> int:
    return math.lcm(*(len(c) for c in a.cycles()))


def _sift(levels, g: Permutation) -> tuple[Permutation, int]:
    """Strip ``g`` through the stabilizer chain; return residue and level reached."""
    for i, (b, trans, _) in enumerate(levels):
        beta = g.images[b]
        u = trans.get(beta)
        if u is None:
            return g, i
        g = compose(g, u.inverse())
    return g, len(levels)


def _orbit_transversal(b: int, gens: Sequence[Permutation], n: int) -> dict[int, Permutation]:
    trans = {b: Permutation.identity(n)}
    queue = [b]
    for pt in queue:
        u = trans[pt]
        for s in gens:
            nxt = s.images[pt]
            if nxt not in trans:
                trans[nxt] = compose(u, s)
                queue.append(nxt)
    return trans


class PermGroup:
    """A permutation group given by generators; BSGS built lazily."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 name: str | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise GroupError("empty generator list needs an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator degree {g.degree} differs from {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} ngens={len(self.generators)}>"

    # -- BSGS -------------------------------------------------------------

    @cached_property
    def _levels(self):
        """Stabilizer chain as a list of (base point, transversal, strong gens)."""
        n = self.degree
        base: list[int] = []
        strong: list[list[Permutation]] = []
        for g in self.generators:
            if g.is_identity():
                continue
            if not any(g.images[b] != b for b in base):
                base.append(g.smallest_moved_point())
                strong.append([])
            strong[0].append(g)
        if not base:
            return []

        def gens_at(i):
            out = []
            for j in range(i + 1):
                out.extend(s for s in strong[j]
                           if all(s.images[b] == b for b in base[:i]))
            return out

        # level i stores strong gens fixing base[:i]; recompute transversals on change
        gen_lists = [gens_at(i) for i in range(len(base))]
        transversals = [_orbit_transversal(base[i], gen_lists[i], n) for i in range(len(base))]

        def levels_view():
            return [(base[i], transversals[i], gen_lists[i]) for i in range(len(base))]

        i = len(base) - 1
        while i >= 0:
            restart = False
            trans = transversals[i]
            for beta, u in list(trans.items()):
                for s in gen_lists[i]:
                    ubs = trans[s.images[beta]]
                    schreier = compose(compose(u, s), ubs.inverse())
                    if schreier.is_identity():
                        continue
                    residue, j = _sift(levels_view()[i + 1:], schreier)
                    j += i + 1
                    if residue.is_identity():
                        continue
                    if j == len(base):
                        base.append(residue.smallest_moved_point())
                        gen_lists.append([])
                        transversals.append({})
                    for lev in range(i + 1, j + 1):
                        gen_lists[lev].append(residue)
                        transversals[lev] = _orbit_transversal(base[lev], gen_lists[lev], n)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1
        return levels_view()

    @property
    def base(self) -> list[int]:
        return [b for b, _, _ in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for _, _, gens in self._levels:
            for g in gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def transversal_sizes(self) -> list[int]:
        return [len(t) for _, t, _ in self._levels]

    @cached_property
    def _order(self) -> int:
        return math.prod(self.transversal_sizes())

    def order(self) -> int:
        return self._order

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = _sift(self._levels, g)
        return residue.is_identity()

    __contains__ = contains

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    # -- orbits and blocks ------------------------------------------------

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done = set()
        out = []
        for x in range(self.degree):
            if x not in done:
                orb = self.orbit(x)
                done.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def minimal_block(self, alpha: int, beta: int) -> list[int]:
        """Smallest block containing ``alpha`` and ``beta`` (union-find closure)."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        pending = [(alpha, beta)]
        while pending:
            a, b = pending.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[max(ra, rb)] = min(ra, rb)
            for g in self.generators:
                pending.append((g.images[a], g.images[b]))
        root = find(alpha)
        return [x for x in range(self.degree) if find(x) == root]

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            raise GroupError("primitivity is only defined for transitive groups")
        if self.degree <= 2:
            return True
        return all(len(self.minimal_block(0, b)) == self.degree
                   for b in range(1, self.degree))

    def transitivity_degree(self, limit: int = 6) -> int:
        """Largest k <= limit such that the group is k-transitive."""
        k = 0
        group = self
        fixed: list[int] = []
        while k < min(limit, self.degree):
            rest = [x for x in range(self.degree) if x not in fixed]
            if group.orbit(rest[0]) != rest:
                break
            k += 1
            fixed.append(rest[0])
            group = self.pointwise_stabilizer(fixed)
        return k

    # -- subgroups --------------------------------------------------------

    def pointwise_stabilizer(self, points: Sequence[int]) -> PermGroup:
        """Stabilizer of ``points`` via a BSGS whose base starts with them."""
        g = self
        for p in points:
            g = g.point_stabilizer(p)
        return g

    def point_stabilizer(self, point: int) -> PermGroup:
        trans = _orbit_transversal(point, self.generators, self.degree)
        gens = set()
        for beta, u in trans.items():
            for s in self.generators:
                sg = compose(compose(u, s), trans[s.images[beta]].inverse())
                if not sg.is_identity():
                    gens.add(sg)
        stab = PermGroup(sorted(gens), degree=self.degree)
        return reduce_generators(stab, expected_order=self.order() // len(trans))

    # -- enumeration ------------------------------------------------------

    def _check_cap(self, cap: int | None) -> None:
        cap = max_order() if cap is None else cap
        if self.order() > cap:
            raise CapExceeded("group order", self.order(), cap)

    def element_chunks(self, cap: int | None = None,
                       chunk_rows: int = CHUNK_ROWS) -> Iterator[np.ndarray]:
        """Yield all elements as int arrays of shape (m, degree), each row once."""
        self._check_cap(cap)
        n = self.degree
        dtype = np.int16 if n < 2**15 else np.int32
        levels = self._levels
        if not levels:
            yield np.arange(n, dtype=dtype)[None, :]
            return
        trans = [[np.asarray(u.images, dtype=dtype) for _, u in sorted(t.items())]
                 for _, t, _ in levels]
        # split: deepest levels materialised, top levels walked in Python
        split = len(trans)
        rows = 1
        while split > 0 and rows * len(trans[split - 1]) <= chunk_rows:
            split -= 1
            rows *= len(trans[split])
        block = np.arange(n, dtype=dtype)[None, :]
        # element = u_k ... u_1 (left-to-right), deepest level applied first
        for lev in range(len(trans) - 1, split - 1, -1):
            block = np.concatenate([u[block] for u in trans[lev]], axis=0)
        if split == 0:
            yield block
            return
        ident = np.arange(n, dtype=dtype)
        for combo in product(*(range(len(trans[lev])) for lev in range(split - 1, -1, -1))):
            w = ident
            for lev, idx in zip(range(split - 1, -1, -1), combo):
                w = trans[lev][idx][w]
            yield w[block]

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        for chunk in self.element_chunks(cap):
            for row in chunk.tolist():
                yield Permutation._raw(tuple(row))

    def element_array(self, cap: int | None = None) -> np.ndarray:
        return np.concatenate(list(self.element_chunks(cap)), axis=0)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out = {}
        if self.name is not None:
            out["name"] = self.name
        out["degree"] = self.degree
        out["generators"] = [list(g.images) for g in self.generators]
        return out

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        if not isinstance(data, dict):
            raise GroupError("group file must hold a JSON object")
        if "degree" not in data or not isinstance(data["degree"], int) or data["degree"] < 1:
            raise GroupError("field 'degree' must be a positive integer")
        gens = data.get("generators")
        if not isinstance(gens, list) or not gens:
            raise GroupError("field 'generators' must be a nonempty list")
        perms = []
        for k, g in enumerate(gens):
            if not isinstance(g, list) or len(g) != data["degree"]:
                raise GroupError(f"field 'generators[{k}]' must list {data['degree']} images")
            try:
                perms.append(Permutation(g))
            except GroupError as exc:
                raise GroupError(f"field 'generators[{k}]': {exc}") from None
        return cls(perms, degree=data["degree"], name=data.get("name"))

    @classmethod
    def load(cls, path) -> PermGroup:
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise GroupError(f"invalid JSON in {path}: {exc}") from None
        return cls.from_json(data)


# -- helpers on arrays -----------------------------------------------------

def rows_to_perms(arr: np.ndarray) -> list[Permutation]:
    return [Permutation._raw(tuple(r)) for r in arr.tolist()]


def fixed_point_counts(arr: np.ndarray) -> np.ndarray:
    return (arr == np.arange(arr.shape[1], dtype=arr.dtype)).sum(axis=1)


def element_orders(arr: np.ndarray) -> np.ndarray:
    """Orders of the permutations stored row-wise in ``arr``."""
    m, n = arr.shape
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    ident = np.arange(n, dtype=arr.dtype)
    lens = np.zeros((m, n), dtype=np.int64)
    cur = arr.copy()
    for k in range(1, n + 1):
        hit = (cur == ident) & (lens == 0)
        lens[hit] = k
        if k % 8 == 0 and not (lens == 0).any():
            break
        cur = np.take_along_axis(arr, cur.astype(np.intp), axis=1)
    return np.lcm.reduce(lens, axis=1)


def inverse_rows(arr: np.ndarray) -> np.ndarray:
    inv = np.empty_like(arr)
    rows = np.arange(arr.shape[0])[:, None]
    inv[rows, arr] = np.arange(arr.shape[1], dtype=arr.dtype)
    return inv


def _row_keys(arr: np.ndarray) -> list[bytes]:
    arr = np.ascontiguousarray(arr.astype(np.int32))
    return [r.tobytes() for r in arr]


# -- group constructions ---------------------------------------------------

def closure(gens: Sequence[Permutation], limit: int = 10**6) -> set[Permutation]:
    """Brute-force closure of ``gens`` under composition (test oracle)."""
    n = gens[0].degree
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise CapExceeded("closure size", len(seen), limit)
        frontier = nxt
    return seen


def reduce_generators(group: PermGroup, expected_order: int | None = None) -> PermGroup:
    """Deterministic short generating set drawn from ``group.generators``."""
    target = group.order() if expected_order is None else expected_order
    chosen: list[Permutation] = []
    sub = PermGroup([], degree=group.degree)
    for g in sorted(group.generators):
        if sub.order() == target:
            break
        if not sub.contains(g):
            chosen.append(g)
            sub = PermGroup(chosen, degree=group.degree)
    sub.name = group.name
    return sub


def subgroup_from_elements(degree: int, elements: Iterable[Permutation],
                           order: int | None = None) -> PermGroup:
    """Subgroup generated greedily by ``elements`` in the given order."""
    chosen: list[Permutation] = []
    sub = PermGroup([], degree=degree)
    for x in elements:
        if order is not None and sub.order() == order:
            break
        if not sub.contains(x):
            chosen.append(x)
            sub = PermGroup(chosen, degree=degree)
    return sub


def _subgroup_from_rows(degree: int, arr: np.ndarray) -> PermGroup:
    return subgroup_from_elements(degree, rows_to_perms(arr), order=arr.shape[0])


def normalizer(g: PermGroup, s_gens: Sequence[Permutation], cap: int | None = None) -> PermGroup:
    """N_G(<s_gens>) by filtering the element stream of ``g``."""
    s = PermGroup(list(s_gens), degree=g.degree)
    s_keys = set(_row_keys(s.element_array(cap)))
    kept = []
    for chunk in g.element_chunks(cap):
        inv = inverse_rows(chunk)
        ok = np.ones(chunk.shape[0], dtype=bool)
        for gen in s.generators:
            sv = np.asarray(gen.images, dtype=chunk.dtype)
            # x^-1 s x applied left-to-right: i -> x(s(x^-1(i)))
            conj = np.take_along_axis(chunk, sv[inv].astype(np.intp), axis=1)
            keys = _row_keys(conj)
            ok &= np.fromiter((k in s_keys for k in keys), dtype=bool, count=len(keys))
        kept.append(chunk[ok])
    return _subgroup_from_rows(g.degree, np.concatenate(kept, axis=0))


def centralizer(g: PermGroup, x: Permutation, cap: int | None = None) -> PermGroup:
    xv = np.asarray(x.images)
    kept = []
    for chunk in g.element_chunks(cap):
        ok = (xv[chunk] == chunk[:, xv]).all(axis=1)
        kept.append(chunk[ok])
    return _subgroup_from_rows(g.degree, np.concatenate(kept, axis=0))


def centralizer_size(g: PermGroup, x: Permutation, cap: int | None = None) -> int:
    xv = np.asarray(x.images)
    return int(sum(((xv[c] == c[:, xv]).all(axis=1)).sum() for c in g.element_chunks(cap)))


def intersection(g: PermGroup, h: PermGroup, cap: int | None = None) -> PermGroup:
    """g ∩ h by filtering the smaller group's elements through the other's BSGS."""
    small, big = (g, h) if g.order() <= h.order() else (h, g)
    return subgroup_from_elements(g.degree, (x for x in small.elements(cap) if big.contains(x)))


def group_exponent(g: PermGroup, cap: int | None = None) -> int:
    e = 1
    for chunk in g.element_chunks(cap):
        e = math.lcm(e, int(np.lcm.reduce(element_orders(chunk))))
    return e


def _prime_part(n: int, r: int) -> int:
    out = 1
    while n % r == 0:
        n //= r
        out *= r
    return out


def _is_power_of(n: int, r: int) -> bool:
    while n % r == 0:
        n //= r
    return n == 1


def sylow_subgroup(g: PermGroup, r: int, cap: int | None = None) -> PermGroup:
    """Sylow r-subgroup grown by climbing normalizers."""
    target = _prime_part(g.order(), r)
    if target == 1:
        raise GroupError(f"{r} does not divide the group order {g.order()}")
    g._check_cap(cap)
    p = PermGroup([], degree=g.degree)
    while p.order() < target:
        ambient = g if p.order() == 1 else normalizer(g, p.generators, cap)
        found = None
        for chunk in ambient.element_chunks(cap):
            orders = element_orders(chunk)
            for row, o in zip(chunk.tolist(), orders.tolist()):
                if o > 1 and _is_power_of(o, r):
                    x = Permutation._raw(tuple(row))
                    if not p.contains(x):
                        found = x
                        break
            if found is not None:
                break
        if found is None:
            raise AssertionError("normalizer climb stalled; Sylow theory violated")
        p = PermGroup([*p.generators, found] if p.order() > 1 else [found], degree=g.degree)
    return reduce_generators(p)


# -- coset actions ---------------------------------------------------------

class CosetAction:
    """Action of ``parent`` on the right cosets of a subgroup by right multiplication."""

    def __init__(self, parent: PermGroup, subgroup: PermGroup,
                 labels: list[Permutation], induced: PermGroup):
        self.parent = parent
        self.subgroup = subgroup
        self.subgroup_generators = subgroup.generators
        self.coset_labels = labels
        self.induced = induced
        self._canon = None
        self._pos = None

    def image(self, x: Permutation) -> Permutation:
        """Permutation of coset indices induced by an element of the parent group."""
        return Permutation._raw(tuple(self._pos[self._canon(compose(lab, x))]
                                      for lab in self.coset_labels))

    @property
    def degree(self) -> int:
        return self.induced.degree


def coset_action(g: PermGroup, h_gens: Sequence[Permutation],
                 max_degree: int | None = None, name: str | None = None) -> CosetAction:
    """Induced action on right cosets H x; coset label = lex-least element of the coset."""
    h = PermGroup(list(h_gens), degree=g.degree)
    if not h.is_subgroup_of(g):
        raise GroupError("subgroup generators are not in the group")
    if h.order() == g.order():
        raise GroupError("subgroup generators generate the whole group")
    index = g.order() // h.order()
    cap = max_index() if max_degree is None else max_degree
    if index > cap:
        raise CapExceeded("coset index", index, cap)
    h_elems = h.element_array()

    def canon(x: Permutation) -> tuple:
        xv = np.asarray(x.images, dtype=h_elems.dtype)
        rows = xv[h_elems]  # h * x for every h
        for col in range(rows.shape[1]):
            m = rows[:, col].min()
            rows = rows[rows[:, col] == m]
            if rows.shape[0] == 1:
                break
        return tuple(rows[0].tolist())

    ident = Permutation.identity(g.degree)
    reps = {canon(ident): ident}
    queue = [ident]
    for x in queue:
        for s in g.generators:
            y = compose(x, s)
            key = canon(y)
            if key not in reps:
                reps[key] = Permutation._raw(key)
                queue.append(reps[key])
    if len(reps) != index:
        raise AssertionError(f"found {len(reps)} cosets, expected {index}")
    keys = sorted(reps)
    pos = {k: i for i, k in enumerate(keys)}
    labels = [Permutation._raw(k) for k in keys]
    induced_gens = []
    for s in g.generators:
        induced_gens.append(Permutation._raw(tuple(pos[canon(compose(lab, s))] for lab in labels)))
    induced = PermGroup(induced_gens, degree=index, name=name)
    action = CosetAction(g, h, labels, induced)
    action._canon = canon
    action._pos = pos
    return action


def diagonal_group(parts: Sequence[PermGroup]) -> PermGroup:
    """Disjoint-union action of groups given by matching generator lists."""
    ngens = len(parts[0].generators)
    if any(len(p.generators) != ngens for p in parts):
        raise GroupError("generator lists must align")
    gens = []
    for k in range(ngens):
        img = []
        off = 0
        for p in parts:
            img.extend(x + off for x in p.generators[k].images)
            off += p.degree
        gens.append(Permutation._raw(tuple(img)))
    return PermGroup(gens)


# -- small named groups used throughout -------------------------------------

def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], degree=1, name="S1")
    gens = [Permutation.from_cycles(n, tuple(range(n)))]
    if n > 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    return PermGroup(gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    gens = [Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return PermGroup(gens, degree=n, name=f"A{n}")


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles(n, tuple(range(n)))] if n > 1 else [],
                     degree=n, name=f"C{n}")


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order 2n on n points."""
    rot = Permutation.from_cycles(n, tuple(range(n)))
    refl = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, refl], name=f"D{2 * n}")

"""Brute-force G-set engine.

Everything here is computed from first principles on explicit objects:
groups are full element sets, actions are verified point maps, orbits come
from breadth-first search, and isomorphism classes of transitive G-sets are
identified by exhaustive conjugacy search over stabilizers.  The point is
to have an oracle whose only inputs are the definitions, so that the closed
formulas elsewhere in the package can be checked against it.

Scale is deliberately small (desk scale): group orders are capped, point
counts are capped, and every cap violation raises a structured error naming
the offending construction instead of truncating silently.
"""

from __future__ import annotations

import itertools
import os
import re
from functools import lru_cache
from math import factorial, prod

from .partitions import Partition, enumerate_partitions, multinomial, pad
from .schur import SchurElement

DEFAULT_GROUP_CAP = 10080
GROUP_CAP_ENV = "BURNSIDE_GROUP_CAP"
DEFAULT_POINT_CAP = 200_000


def group_cap_default() -> int:
    raw = os.environ.get(GROUP_CAP_ENV)
    if raw is None:
        return DEFAULT_GROUP_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{GROUP_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{GROUP_CAP_ENV} must be positive, got {cap}")
    return cap


class CapExceeded(Exception):
    """A construction would exceed a configured resource cap."""

    def __init__(self, kind: str, cap: int, construction: str):
        self.kind = kind
        self.cap = cap
        self.construction = construction
        super().__init__(f"{kind} cap {cap} exceeded while building {construction}")


class GroupFileError(ValueError):
    """Malformed group input file; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class Permutation:
    """A permutation of {1..n}, stored as the tuple of images of 1..n.

    Products compose right-to-left: (a*b)(x) = a(b(x)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                images[a - 1] = b
        perm = cls(images)
        moved = [p for cycle in cycles for p in cycle if len(cycle) > 1]
        if len(moved) != len(set(moved)):
            raise ValueError(f"cycles are not disjoint: {cycles}")
        return perm

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        im = self.images
        return Permutation(im[b - 1] for b in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for k, v in enumerate(self.images):
            inv[v - 1] = k + 1
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its
        least element, ordered by least element."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            p = self(start)
            while p != start:
                cyc.append(p)
                seen[p - 1] = True
                p = self(p)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self):
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in moved)

    def __repr__(self):
        return f"<Permutation {self} deg={self.degree}>"

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse disjoint-cycle notation like ``(1 2)(3 4)``; ``()`` is the
    identity.  Degree defaults to the largest point mentioned."""
    stripped = text.strip()
    cycles = []
    consumed = _CYCLE_RE.sub("", stripped)
    if consumed.strip():
        raise ValueError(f"unparsable permutation text: {text!r}")
    for body in _CYCLE_RE.findall(stripped):
        entries = body.replace(",", " ").split()
        if not entries:
            continue
        try:
            cyc = tuple(int(e) for e in entries)
        except ValueError:
            raise ValueError(f"non-integer point in cycle ({body})") from None
        if any(p < 1 for p in cyc):
            raise ValueError(f"points must be >= 1 in cycle ({body})")
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated point in cycle ({body})")
        cycles.append(cyc)
    largest = max((p for c in cycles for p in c), default=1)
    if degree is None:
        degree = largest
    elif largest > degree:
        raise ValueError(f"point {largest} exceeds declared degree {degree}")
    return Permutation.from_cycles(cycles, degree)


def parse_group_file(text: str) -> tuple[list[Permutation], int]:
    """Parse the group input format: one permutation per line in cycle
    notation, optional ``degree N`` header, blank lines and ``#`` comments
    ignored.  Returns (generators, degree).  Errors carry line numbers."""
    degree = None
    raw: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.lower().startswith("degree"):
            if raw or degree is not None:
                raise GroupFileError(lineno, "degree header must come first")
            parts = body.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise GroupFileError(lineno, f"bad degree header: {body!r}")
            degree = int(parts[1])
            continue
        raw.append((lineno, body))
    if degree is None:
        degree = 1
        for lineno, body in raw:
            try:
                degree = max(degree, parse_permutation(body).degree)
            except ValueError as exc:
                raise GroupFileError(lineno, str(exc)) from None
    gens = []
    for lineno, body in raw:
        try:
            gens.append(parse_permutation(body, degree))
        except ValueError as exc:
            raise GroupFileError(lineno, str(exc)) from None
    return gens, degree


class PermGroup:
    """An explicit finite permutation group: the full sorted element tuple,
    plus caches for the expensive classification queries (canonical
    stabilizer fingerprints, coset spaces, pairwise class products).

    Construct through group_closure or the named constructors; the direct
    constructor trusts its input to be closed.
    """

    def __init__(self, degree: int, elements, generators=None):
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(sorted(set(elements)))
        if not self.elements:
            raise ValueError("a group needs at least the identity")
        for g in self.elements:
            if g.degree != degree:
                raise ValueError(f"element degree {g.degree} != group degree {degree}")
        self.identity = Permutation.identity(degree)
        if self.identity not in set(self.elements):
            raise ValueError("element set lacks the identity")
        self._index = {g: k for k, g in enumerate(self.elements)}
        self._gens = tuple(generators) if generators is not None else None
        self._words: dict[Permutation, tuple[int, ...]] | None = None
        self._inverse_index: list[int] | None = None
        self._key_cache: dict[frozenset, tuple[int, ...]] = {}
        self._coset_cache: dict[tuple[int, ...], GSet] = {}
        self._class_product_cache: dict[tuple, dict] = {}
        self._young_key_cache: dict[Partition, tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def index_of(self, g: Permutation) -> int:
        return self._index[g]

    def inverse_index(self, k: int) -> int:
        if self._inverse_index is None:
            inv = [0] * self.order
            for i, g in enumerate(self.elements):
                inv[i] = self._index[g.inverse()]
            self._inverse_index = inv
        return self._inverse_index[k]

    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set: greedy sweep in element order, adding an
        element whenever it is not generated by those already kept."""
        self._ensure_words()
        return self._gens

    def word(self, g: Permutation) -> tuple[int, ...]:
        """g as a product of generators, left to right, by generator index."""
        self._ensure_words()
        return self._words[g]

    def _ensure_words(self):
        if self._words is not None:
            return
        if self._gens is None:
            gens: list[Permutation] = []
            known = {self.identity}
            for g in self.elements:
                if g not in known:
                    gens.append(g)
                    known = _closure_set(known | {g}, gens)
            self._gens = tuple(gens)
        words = {self.identity: ()}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for cur in frontier:
                for gi, s in enumerate(self._gens):
                    new = cur * s
                    if new not in words:
                        words[new] = words[cur] + (gi,)
                        nxt.append(new)
            frontier = nxt
        if len(words) != self.order:
            raise ValueError("generators do not generate the whole group")
        self._words = words

    def subgroup_indices(self, elements) -> frozenset:
        return frozenset(self._index[g] for g in elements)

    def canonical_key(self, subgroup_elements) -> tuple[int, ...]:
        """Conjugation-invariant fingerprint of a subgroup: the lexicographic
        minimum, over all conjugates, of the sorted element-index tuple.
        The full conjugation sweep caches the key for every conjugate seen.
        """
        members = frozenset(subgroup_elements)
        hit = self._key_cache.get(members)
        if hit is not None:
            return hit
        if len(members) == 1:
            key = (self._index[self.identity],)
            self._key_cache[members] = key
            return key
        if len(members) == self.order:
            key = tuple(range(self.order))
            self._key_cache[members] = key
            return key
        best = None
        conjugates = []
        for g in self.elements:
            ginv = g.inverse()
            conj = frozenset(g * h * ginv for h in members)
            conjugates.append(conj)
            fingerprint = tuple(sorted(self._index[h] for h in conj))
            if best is None or fingerprint < best:
                best = fingerprint
        for conj in conjugates:
            self._key_cache[conj] = best
        return best

    def coset_space(self, key: tuple[int, ...]) -> GSet:
        """The transitive G-set G/H for the subgroup with the given element
        indices; the canonical representative of its isomorphism class."""
        key = tuple(key)
        hit = self._coset_cache.get(key)
        if hit is not None:
            return hit
        members = [self.elements[i] for i in key]
        member_set = set(members)
        coset_of = [-1] * self.order
        points = []
        for i, g in enumerate(self.elements):
            if coset_of[i] >= 0:
                continue
            cid = len(points)
            indices = sorted(self._index[g * h] for h in member_set)
            for j in indices:
                coset_of[j] = cid
            points.append(frozenset(indices))

        def act(g: Permutation, coset: frozenset):
            rep = self.elements[min(coset)]
            return points[coset_of[self._index[g * rep]]]

        gset = GSet.from_point_action(
            self, points, act, label=f"coset space G/H, |H|={len(key)}"
        )
        self._coset_cache[key] = gset
        return gset

    def young_keys(self) -> dict[Partition, tuple[int, ...]]:
        """Canonical keys of the block stabilizers Y_mu (elements preserving
        each consecutive block of sizes mu_j), for every mu of weight n.
        Only meaningful when this group is the full symmetric group."""
        if self._young_key_cache is None:
            table = {}
            for mu in enumerate_partitions(self.degree):
                blocks = []
                start = 1
                for part in mu:
                    blocks.append(frozenset(range(start, start + part)))
                    start += part
                members = [
                    g
                    for g in self.elements
                    if all(frozenset(g(p) for p in b) == b for b in blocks)
                ]
                table[mu] = self.canonical_key(members)
            self._young_key_cache = table
        return self._young_key_cache

    def is_full_symmetric(self) -> bool:
        return self.order == factorial(self.degree)


def _closure_set(seed: set, gens) -> set:
    out = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                new = g * s
                if new not in out:
                    out.add(new)
                    nxt.append(new)
        frontier = nxt
    return out


def group_closure(generators, cap: int | None = None, degree: int | None = None) -> PermGroup:
    """Close a generator list into an explicit PermGroup, failing with a
    structured error once the element count would pass the cap."""
    if cap is None:
        cap = group_cap_default()
    generators = list(generators)
    if degree is None:
        if not generators:
            degree = 1
        else:
            degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise ValueError(
                f"inconsistent generator degrees: {g.degree} vs {degree}"
            )
    identity = Permutation.identity(degree)
    words = {identity: ()}
    frontier = [identity]
    while frontier:
        nxt = []
        for cur in frontier:
            for gi, s in enumerate(generators):
                new = cur * s
                if new not in words:
                    if len(words) + 1 > cap:
                        raise CapExceeded(
                            "group-order", cap, f"closure of {len(generators)} generators"
                        )
                    words[new] = words[cur] + (gi,)
                    nxt.append(new)
        frontier = nxt
    group = PermGroup(degree, words.keys(), generators=generators or None)
    group._words = {g: words[g] for g in group.elements}
    if group._gens is None:
        group._gens = ()
        group._words = {identity: ()}
    return group


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n == 1:
        return group_closure([], degree=1)
    gens = [parse_permutation("(1 2)", n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return group_closure(gens)


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n == 1:
        return group_closure([], degree=1)
    return group_closure([Permutation.from_cycles([tuple(range(1, n + 1))], n)])


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the regular n-gon on vertices 1..n, order 2n."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    rotation = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    reflection = Permutation([n + 1 - k for k in range(1, n + 1)])
    return group_closure([rotation, reflection])


@lru_cache(maxsize=None)
def young_subgroup(i: int, n: int) -> PermGroup:
    """The subgroup of S_n preserving {1..i} (hence also {i+1..n}) setwise:
    the image of S_i x S_{n-i}."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    block = set(range(1, i + 1))
    members = [
        g for g in symmetric_group(n).elements if {g(p) for p in block} == block
    ]
    return PermGroup(n, members)


class GSet:
    """A finite G-set: an indexed point list plus a verified action.

    Single-point application goes through ``act``; orbit searches use the
    eagerly built generator tables; full per-element tables are composed
    lazily from generator tables along the group's word tree and cached.
    """

    def __init__(self, group: PermGroup, points, act_fn, label: str = "gset"):
        self.group = group
        self.points = tuple(points)
        self.label = label
        self._index = {p: k for k, p in enumerate(self.points)}
        if len(self._index) != len(self.points):
            raise ValueError(f"duplicate points in {label}")
        self._act_fn = act_fn
        self._gen_tables: dict[Permutation, list[int]] | None = None
        self._tables: dict[Permutation, list[int]] = {}

    @classmethod
    def from_point_action(
        cls,
        group: PermGroup,
        points,
        act_fn,
        label: str = "gset",
        verify: bool = True,
        point_cap: int = DEFAULT_POINT_CAP,
    ) -> GSet:
        points = list(points)
        if len(points) > point_cap:
            raise CapExceeded("point-count", point_cap, label)
        gset = cls(group, points, act_fn, label=label)
        if verify:
            gset._verify_action()
        return gset

    @property
    def size(self) -> int:
        return len(self.points)

    def index_of(self, point) -> int:
        return self._index[point]

    def act(self, g: Permutation, point):
        """Apply one group element to one point."""
        table = self._tables.get(g)
        if table is not None:
            return self.points[table[self._index[point]]]
        return self._act_fn(g, point)

    def act_index(self, g: Permutation, idx: int) -> int:
        table = self._tables.get(g)
        if table is not None:
            return table[idx]
        return self._index[self._act_fn(g, self.points[idx])]

    def generator_tables(self) -> dict[Permutation, list[int]]:
        if self._gen_tables is None:
            tables = {}
            for s in self.group.generators():
                tables[s] = [
                    self._index[self._act_fn(s, p)] for p in self.points
                ]
            self._gen_tables = tables
            self._tables.update(tables)
        return self._gen_tables

    def table(self, g: Permutation) -> list[int]:
        """Full point-index table of one element, composed from generator
        tables along g's word in the group's generators."""
        hit = self._tables.get(g)
        if hit is not None:
            return hit
        gens = self.group.generators()
        gen_tables = self.generator_tables()
        word = self.group.word(g)
        if not word:
            tbl = list(range(self.size))
        else:
            tbl = list(gen_tables[gens[word[-1]]])
            for gi in word[-2::-1]:
                step = gen_tables[gens[gi]]
                tbl = [step[x] for x in tbl]
        self._tables[g] = tbl
        return tbl

    def _verify_action(self):
        """Check the action axioms on the explicit element set: the identity
        fixes everything, and T_{s·g} = T_s ∘ T_g for every generator s and
        every group element g.  The general axiom T_{gh} = T_g ∘ T_h follows
        by induction on the word length of g in the generators."""
        e = self.group.identity
        for p in self.points:
            if self._act_fn(e, p) != p:
                raise ValueError(f"identity moves point {p!r} in {self.label}")
        gens = self.group.generators()
        for s in gens:
            for g in self.group.elements:
                sg = s * g
                for p in self.points:
                    left = self._act_fn(sg, p)
                    right = self._act_fn(s, self._act_fn(g, p))
                    if left != right:
                        raise ValueError(
                            f"action axiom fails in {self.label}: "
                            f"({s})*({g}) on {p!r}: {left!r} != {right!r}"
                        )

    def __repr__(self):
        return f"<GSet {self.label}: {self.size} points, {self.group!r}>"


def natural_gset(group: PermGroup) -> GSet:
    """The defining action on {1..degree}."""
    return GSet.from_point_action(
        group,
        range(1, group.degree + 1),
        lambda g, p: g(p),
        label=f"natural({{1..{group.degree}}})",
    )


def trivial_gset(group: PermGroup) -> GSet:
    return GSet.from_point_action(group, ["*"], lambda g, p: p, label="one-point")


def empty_gset(group: PermGroup) -> GSet:
    return GSet.from_point_action(group, [], lambda g, p: p, label="empty")


def product_gset(s: GSet, t: GSet) -> GSet:
    """Cartesian product with the diagonal action.  The action map is built
    from the two verified component actions, so the axioms hold by
    construction and are not re-verified."""
    if s.group is not t.group and s.group != t.group:
        raise ValueError("product requires the same group")
    points = [(p, q) for p in s.points for q in t.points]
    act = lambda g, pq: (s.act(g, pq[0]), t.act(g, pq[1]))
    return GSet.from_point_action(
        s.group, points, act, label=f"({s.label}) x ({t.label})", verify=False
    )


def disjoint_union(s: GSet, t: GSet) -> GSet:
    """Disjoint union with componentwise action; axioms inherited from the
    verified components, so not re-verified."""
    if s.group is not t.group and s.group != t.group:
        raise ValueError("disjoint union requires the same group")
    points = [(0, p) for p in s.points] + [(1, q) for q in t.points]

    def act(g, tagged):
        tag, p = tagged
        return (tag, (s if tag == 0 else t).act(g, p))

    return GSet.from_point_action(
        s.group, points, act, label=f"({s.label}) + ({t.label})", verify=False
    )


def symmetric_power(s: GSet, i: int, point_cap: int = DEFAULT_POINT_CAP) -> GSet:
    """The G-set of size-i multisets over s, as weakly increasing tuples of
    point indices."""
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    points = itertools.combinations_with_replacement(range(s.size), i)

    def act(g, multiset):
        return tuple(sorted(s.act_index(g, k) for k in multiset))

    return GSet.from_point_action(
        s.group,
        points,
        act,
        label=f"sym^{i}({s.label})",
        point_cap=point_cap,
    )


def p_mu_gset(s: GSet, mu, point_cap: int = DEFAULT_POINT_CAP) -> GSet:
    """The G-set of tuples of pairwise disjoint subsets of s with block j of
    size mu_j.  Blocks are ordered (tuples, not sets of blocks); each block
    is a sorted tuple of point indices.  Empty when weight(mu) > |s|."""
    mu = Partition(mu)

    def tuples(remaining, parts):
        if not parts:
            yield ()
            return
        head, tail = parts[0], parts[1:]
        for block in itertools.combinations(remaining, head):
            rest = [x for x in remaining if x not in block]
            for suffix in tuples(rest, tail):
                yield (block,) + suffix

    points = tuples(list(range(s.size)), tuple(mu)) if mu.weight <= s.size else []

    def act(g, blocks):
        return tuple(
            tuple(sorted(s.act_index(g, k) for k in block)) for block in blocks
        )

    body = ",".join(str(p) for p in mu)
    return GSet.from_point_action(
        s.group,
        points,
        act,
        label=f"P_({body})({s.label})",
        point_cap=point_cap,
    )


def orbits(s: GSet, group: PermGroup | None = None) -> list[list[int]]:
    """Orbits as sorted lists of point indices, ordered by least element."""
    group = _resolve_group(s, group)
    tables = list(s.generator_tables().values())
    seen = [False] * s.size
    out = []
    for start in range(s.size):
        if seen[start]:
            continue
        component = [start]
        seen[start] = True
        queue = [start]
        while queue:
            idx = queue.pop()
            for table in tables:
                nxt = table[idx]
                if not seen[nxt]:
                    seen[nxt] = True
                    component.append(nxt)
                    queue.append(nxt)
        out.append(sorted(component))
    return out


def stabilizer(s: GSet, point, group: PermGroup | None = None) -> PermGroup:
    """The subgroup fixing one point, by direct sweep over the group."""
    group = _resolve_group(s, group)
    members = [g for g in group.elements if s.act(g, point) == point]
    return PermGroup(group.degree, members)


def fixed_point_count(s: GSet, g: Permutation) -> int:
    table = s.table(g)
    return sum(1 for k, v in enumerate(table) if k == v)


def _resolve_group(s: GSet, group: PermGroup | None) -> PermGroup:
    if group is not None and group != s.group:
        raise ValueError("group does not match the G-set's group")
    return s.group


class BurnsideElement:
    """An integer combination of transitive G-set classes for a fixed group,
    keyed by canonical stabilizer fingerprints.  Immutable in use; zero
    coefficients are dropped."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: PermGroup, coeffs=None):
        clean = {}
        for key, c in (coeffs or {}).items():
            c = int(c)
            if c:
                key = tuple(key)
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.group = group
        self.coeffs = clean

    @classmethod
    def zero(cls, group: PermGroup) -> BurnsideElement:
        return cls(group, {})

    @classmethod
    def one(cls, group: PermGroup) -> BurnsideElement:
        return cls(group, {tuple(range(group.order)): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[tuple, int]]:
        """(key, coefficient) sorted by descending stabilizer order, then
        fingerprint; i.e. smallest orbits first."""
        return [
            (key, self.coeffs[key])
            for key in sorted(self.coeffs, key=lambda k: (-len(k), k))
        ]

    def __eq__(self, other):
        return (
            isinstance(other, BurnsideElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    def _check(self, other):
        if not isinstance(other, BurnsideElement):
            raise TypeError(f"expected BurnsideElement, got {type(other).__name__}")
        if self.group != other.group:
            raise ValueError("group mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BurnsideElement(self.group, out)

    def __neg__(self):
        return BurnsideElement(self.group, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(
                self.group, {k: c * other for k, c in self.coeffs.items()}
            )
        if isinstance(other, BurnsideElement):
            return burnside_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def cardinality(self) -> int:
        order = self.group.order
        return sum(c * (order // len(key)) for key, c in self.coeffs.items())

    def render(self) -> str:
        """One term per line: ``+c * [orbit: stabilizer-order o,
        fingerprint i,j,k]``, long fingerprints elided; Schur names appended
        over a full symmetric group when the class is a block-tuple class."""
        if self.is_zero():
            return "0"
        young = None
        if self.group.is_full_symmetric():
            young = {key: mu for mu, key in self.group.young_keys().items()}
        lines = []
        for key, c in self.terms():
            sign = "+" if c > 0 else "-"
            shown = ",".join(str(i) for i in key[:8]) + (",…" if len(key) > 8 else "")
            line = f"{sign}{abs(c)} * [orbit: stabilizer-order {len(key)}, fingerprint {shown}]"
            if young is not None and key in young:
                body = ",".join(str(p) for p in young[key])
                line += f" = P({body})"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> dict:
        young = None
        if self.group.is_full_symmetric():
            young = {key: mu for mu, key in self.group.young_keys().items()}
        return {
            "group_order": self.group.order,
            "degree": self.group.degree,
            "terms": [
                {
                    "coefficient": c,
                    "stabilizer_order": len(key),
                    "fingerprint": list(key),
                    "schur": list(young[key]) if young and key in young else None,
                }
                for key, c in self.terms()
            ],
        }

    def __repr__(self):
        return f"<BurnsideElement over {self.group!r}: {len(self.coeffs)} classes>"


def decompose(s: GSet, group: PermGroup | None = None) -> BurnsideElement:
    """Express a G-set in the transitive basis: one pass over orbits,
    classifying each by the canonical key of a point stabilizer."""
    group = _resolve_group(s, group)
    coeffs: dict[tuple, int] = {}
    for orbit in orbits(s):
        point = s.points[orbit[0]]
        members = [g for g in group.elements if s.act(g, point) == point]
        key = group.canonical_key(members)
        coeffs[key] = coeffs.get(key, 0) + 1
    return BurnsideElement(group, coeffs)


def burnside_mul(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Product in the Burnside ring: basis classes multiply by decomposing
    the Cartesian product of their canonical coset spaces; results are
    cached on the group."""
    a._check(b)
    group = a.group
    out: dict[tuple, int] = {}
    for k1, c1 in a.coeffs.items():
        for k2, c2 in b.coeffs.items():
            pair = (k1, k2) if k1 <= k2 else (k2, k1)
            hit = group._class_product_cache.get(pair)
            if hit is None:
                product = product_gset(group.coset_space(pair[0]), group.coset_space(pair[1]))
                hit = decompose(product).coeffs
                group._class_product_cache[pair] = hit
            c = c1 * c2
            for key, mult in hit.items():
                out[key] = out.get(key, 0) + c * mult
    return BurnsideElement(group, out)


def lambda_general(s: GSet, i: int, group: PermGroup | None = None) -> BurnsideElement:
    """Exterior-power classes of an arbitrary G-set via the recursion
    opposite to the symmetric powers, entirely inside the engine: symmetric
    powers are decomposed by brute force and multiplied in the transitive
    basis.  Vanishing above |s| is asserted, not assumed."""
    group = _resolve_group(s, group)
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    sig = [BurnsideElement.one(group)]
    for m in range(1, i + 1):
        sig.append(decompose(symmetric_power(s, m)))
    lam = [BurnsideElement.one(group)]
    for m in range(1, i + 1):
        total = BurnsideElement.zero(group)
        for j in range(m):
            term = lam[j] * sig[m - j]
            total = total + (term if j % 2 == 0 else -term)
        value = total if m % 2 == 1 else -total
        if m > s.size:
            assert value.is_zero(), (
                f"lambda^{m} of {s.label} (size {s.size}) must vanish"
            )
        lam.append(value)
    return lam[i]


def eq6_general(s: GSet, i: int, group: PermGroup | None = None) -> BurnsideElement:
    """Exterior-power classes by the closed signed sum over partitions:
    (-1)^i sum over mu |- i of (-1)^len(mu) multinomial(mu) [P_mu(s)]."""
    group = _resolve_group(s, group)
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    if i == 0:
        return BurnsideElement.one(group)
    if i > s.size:
        return BurnsideElement.zero(group)
    total = BurnsideElement.zero(group)
    for mu in enumerate_partitions(i):
        sign = -1 if (i + mu.length) % 2 else 1
        total = total + decompose(p_mu_gset(s, mu)) * (sign * multinomial(mu))
    return total


def extend_homomorphism(
    h: PermGroup, gen_images: dict, target_degree: int | None = None
) -> dict:
    """Extend a map on a generating set of h to all of h by word expansion,
    rejecting anything that is not a homomorphism.  Every product extension
    step is checked against previously assigned values, which covers the
    full multiplication table by induction on word length.

    The target degree is read off the images; it must be given explicitly
    when gen_images is empty (h trivial) and the target differs from h.
    """
    gens = list(gen_images)
    for g in gens:
        if g not in h:
            raise ValueError(f"generator {g} is not in the group")
    degrees = {img.degree for img in gen_images.values()}
    if len(degrees) > 1:
        raise ValueError("generator images have inconsistent degrees")
    if degrees:
        found = degrees.pop()
        if target_degree is not None and found != target_degree:
            raise ValueError(
                f"generator images have degree {found}, expected {target_degree}"
            )
        target_degree = found
    elif target_degree is None:
        target_degree = h.degree
    phi = {h.identity: Permutation.identity(target_degree)}
    frontier = [h.identity]
    while frontier:
        nxt = []
        for cur in frontier:
            for s in gens:
                new = cur * s
                image = phi[cur] * gen_images[s]
                known = phi.get(new)
                if known is None:
                    phi[new] = image
                    nxt.append(new)
                elif known != image:
                    raise ValueError(
                        f"generator images do not define a homomorphism: "
                        f"conflicting images for {new}"
                    )
        frontier = nxt
    if len(phi) != h.order:
        raise ValueError("gen_images keys do not generate the group")
    return phi


def restrict(s: GSet, h: PermGroup, gen_images: dict | None = None) -> GSet:
    """Pull the action back along a homomorphism into s's group, given by
    images of a generating set of h; omitted, h must be a subgroup of s's
    group and the inclusion is used."""
    if gen_images is None:
        for g in h.elements:
            if g not in s.group:
                raise ValueError(
                    f"{g} is not in the acting group; supply gen_images"
                )
        phi = {g: g for g in h.elements}
    else:
        phi = extend_homomorphism(h, gen_images, target_degree=s.group.degree)
        for image in phi.values():
            if image not in s.group:
                raise ValueError(f"image {image} is not in the acting group")
    return GSet.from_point_action(
        h,
        s.points,
        lambda g, p: s.act(phi[g], p),
        label=f"res({s.label})",
        verify=False,
    )


def induce(s: GSet, group: PermGroup, coset_reps: list | None = None) -> GSet:
    """Induce an H-set up to a supergroup: points are (transversal index,
    point) pairs, and g sends (g_i, x) to (g_j, h·x) where g·g_i = g_j·h."""
    h = s.group
    for g in h.elements:
        if g not in group:
            raise ValueError("the acting group of s is not a subgroup")
    members = set(h.elements)
    side = {}
    reps = []
    if coset_reps is None:
        for g in group.elements:
            if g not in side:
                j = len(reps)
                reps.append(g)
                for m in members:
                    side[g * m] = j
    else:
        reps = [g if isinstance(g, Permutation) else parse_permutation(g, group.degree) for g in coset_reps]
        for j, g in enumerate(reps):
            if g not in group:
                raise ValueError(f"transversal element {g} is not in the group")
            for m in members:
                gm = g * m
                if gm in side:
                    raise ValueError(
                        f"invalid transversal: {reps[side[gm]]} and {g} share a coset"
                    )
                side[gm] = j
        if len(side) != group.order:
            raise ValueError("invalid transversal: cosets do not cover the group")
    rep_inverse = [g.inverse() for g in reps]
    points = [(j, p) for j in range(len(reps)) for p in s.points]

    def act(g, point):
        j, p = point
        moved = g * reps[j]
        j2 = side[moved]
        hh = rep_inverse[j2] * moved
        return (j2, s.act(hh, p))

    return GSet.from_point_action(
        group, points, act, label=f"ind({s.label})"
    )


def _young_projection_images(i: int, n: int) -> dict:
    """Generator images for the projection of the {1..i}-block stabilizer in
    S_n onto S_i (forget the action on {i+1..n})."""
    h = young_subgroup(i, n)
    images = {}
    for g in h.generators():
        images[g] = Permutation(g(p) for p in range(1, i + 1))
    return images


def verify_lemma74(mu, i: int, n: int) -> dict:
    """Induce the block-tuple G-set of mu from S_i up to S_n through the
    block stabilizer and compare with the block-tuple G-set built in S_n
    directly: sizes and stabilizer classes must match."""
    mu = Partition(mu)
    if mu.weight != i or i > n:
        raise ValueError(f"need mu |- i <= n, got mu={mu}, i={i}, n={n}")
    small = p_mu_gset(natural_gset(symmetric_group(i)), mu)
    h = young_subgroup(i, n)
    restricted = restrict(small, h, _young_projection_images(i, n))
    big_group = symmetric_group(n)
    induced = induce(restricted, big_group)
    target = p_mu_gset(natural_gset(big_group), mu)
    expected_size = factorial(n) // (
        prod(factorial(p) for p in mu) * factorial(n - i)
    )
    lhs = decompose(induced)
    rhs = decompose(target)
    return {
        "mu": list(mu),
        "i": i,
        "n": n,
        "size": induced.size,
        "target_size": target.size,
        "expected_size": expected_size,
        "isomorphic": lhs == rhs and induced.size == expected_size,
        "lhs": lhs.to_json(),
        "rhs": rhs.to_json(),
    }


def verify_lemma73(i: int, n: int) -> dict:
    """Check that inducing the top exterior-power class of {1..i} from S_i
    (through the block stabilizer) gives the i-th exterior-power class of
    {1..n}: induction is additive, so the class is pushed up term by term
    on canonical coset representatives."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    small_group = symmetric_group(i)
    ell_small = lambda_general(natural_gset(small_group), i)
    h = young_subgroup(i, n)
    images = _young_projection_images(i, n)
    big_group = symmetric_group(n)
    pushed = BurnsideElement.zero(big_group)
    for key, c in ell_small.terms():
        rep = small_group.coset_space(key)
        induced = induce(restrict(rep, h, images), big_group)
        pushed = pushed + decompose(induced) * c
    ell_big = lambda_general(natural_gset(big_group), i)
    return {
        "i": i,
        "n": n,
        "pass": pushed == ell_big,
        "lhs": pushed.to_json(),
        "rhs": ell_big.to_json(),
    }


def schur_membership(s: GSet) -> list[dict]:
    """For each orbit of a full-symmetric-group action, name the block-tuple
    class it is isomorphic to, or report that its stabilizer class is not a
    block stabilizer (not a Schur set)."""
    group = s.group
    if not group.is_full_symmetric():
        raise ValueError("schur_membership needs the full symmetric group")
    young = {key: mu for mu, key in group.young_keys().items()}
    verdicts = []
    for orbit in orbits(s):
        point = s.points[orbit[0]]
        members = [g for g in group.elements if s.act(g, point) == point]
        key = group.canonical_key(members)
        mu = young.get(key)
        verdicts.append(
            {
                "representative_index": orbit[0],
                "orbit_size": len(orbit),
                "stabilizer_order": len(members),
                "schur": mu is not None,
                "mu": list(mu) if mu is not None else None,
            }
        )
    return verdicts


def schur_to_burnside(x: SchurElement, group: PermGroup | None = None) -> BurnsideElement:
    """Reinterpret a block-tuple basis combination inside the Burnside ring
    of the full symmetric group, via the block stabilizer classes."""
    if group is None:
        group = symmetric_group(x.ambient)
    if group.degree != x.ambient or not group.is_full_symmetric():
        raise ValueError(f"need the full symmetric group of degree {x.ambient}")
    keys = group.young_keys()
    return BurnsideElement(group, {keys[mu]: c for mu, c in x.coeffs.items()})


def burnside_to_schur(x: BurnsideElement) -> SchurElement:
    """Inverse of schur_to_burnside on its image; rejects classes whose
    stabilizers are not block stabilizers."""
    group = x.group
    if not group.is_full_symmetric():
        raise ValueError("burnside_to_schur needs the full symmetric group")
    young = {key: mu for mu, key in group.young_keys().items()}
    coeffs = {}
    for key, c in x.coeffs.items():
        mu = young.get(key)
        if mu is None:
            raise ValueError(
                f"class with stabilizer order {len(key)} is not a block-tuple class"
            )
        coeffs[mu] = c
    return SchurElement(group.degree, coeffs)

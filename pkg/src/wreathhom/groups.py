"""Finite groups as element-indexed multiplication tables.

Construction (explicit tables or permutation generators), subgroup
conjugacy classes, coset actions, and abelianizations.  Elements are the
integers 0..order-1 with 0 the identity; every derived structure is
immutable and cached per group.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_SIZE_CAP = 20000

BUILTIN_GROUP_NAMES = ("C1", "C2", "C3", "C4", "V4", "S3", "D4", "Q8")


class GroupTableError(ValueError):
    """Input data does not describe a valid finite group."""


class UnknownGroupError(ValueError):
    """Requested builtin group name is not in the library."""


class SizeCapError(RuntimeError):
    """A computation would exceed its configured size cap."""


class FiniteGroup:
    """A finite group on elements 0..order-1, identity 0, given by tables.

    ``eval_order`` and ``parent_word`` record one factorization of every
    element into generators, discovered by breadth-first closure: element
    ``x = parent * generators[gen_idx]``.  Walking ``eval_order`` therefore
    lets a caller push any map of the generators forward to all elements.
    """

    identity = 0

    def __init__(
        self,
        mul_table: Sequence[Sequence[int]],
        generators: Sequence[int],
        name: str = "G",
        element_names: Optional[Sequence[str]] = None,
        check_associativity: bool = True,
    ) -> None:
        self.name = str(name)
        self.mul_table = tuple(tuple(int(x) for x in row) for row in mul_table)
        self.order = len(self.mul_table)
        self.element_names = tuple(element_names) if element_names is not None else None
        _validate_table_shape(self.mul_table)
        _validate_identity(self.mul_table)
        self.inv_table = _inverse_table(self.mul_table)
        if check_associativity:
            _validate_associativity(self.mul_table)
        self.generators = tuple(dict.fromkeys(int(g) for g in generators))
        for g in self.generators:
            if not 0 <= g < self.order:
                raise GroupTableError(f"generator {g} out of range")
        self.eval_order, self.parent_word = _generator_words(self.mul_table, self.generators)
        self._hash = hash((self.mul_table, self.generators))

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul_table[self.mul_table[g][x]][self.inv_table[g]]

    def power(self, a: int, m: int) -> int:
        if m < 0:
            return self.power(self.inv_table[a], -m)
        result = 0
        for _ in range(m):
            result = self.mul_table[result][a]
        return result

    def element_order(self, a: int) -> int:
        order = 1
        x = a
        while x != 0:
            x = self.mul_table[x][a]
            order += 1
        return order

    def elements(self) -> range:
        return range(self.order)

    def element_name(self, a: int) -> str:
        if self.element_names is not None:
            return self.element_names[a]
        return str(a)

    def subgroup_closure(self, seed: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``seed`` (closure of words, identity included)."""
        gens = sorted(set(seed) | {0})
        elems = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                row = self.mul_table[x]
                for s in gens:
                    y = row[s]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.mul_table == other.mul_table and self.generators == other.generators

    def __hash__(self) -> int:
        return self._hash


def _validate_table_shape(table: tuple[tuple[int, ...], ...]) -> None:
    d = len(table)
    if d == 0:
        raise GroupTableError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != d:
            raise GroupTableError(f"row {i} has length {len(row)}, expected {d}")
        for x in row:
            if not 0 <= x < d:
                raise GroupTableError(f"table entry {x} in row {i} out of range 0..{d - 1}")


def _validate_identity(table: tuple[tuple[int, ...], ...]) -> None:
    d = len(table)
    if any(table[0][j] != j for j in range(d)) or any(table[j][0] != j for j in range(d)):
        raise GroupTableError("element 0 is not an identity")


def _inverse_table(table: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    d = len(table)
    inv = []
    for a in range(d):
        b = next((x for x in range(d) if table[a][x] == 0 and table[x][a] == 0), None)
        if b is None:
            raise GroupTableError(f"no inverse for element {a}")
        inv.append(b)
    return tuple(inv)


def _validate_associativity(table: tuple[tuple[int, ...], ...]) -> None:
    d = len(table)
    for a in range(d):
        row_a = table[a]
        for b in range(d):
            ab = row_a[b]
            row_b = table[b]
            row_ab = table[ab]
            for c in range(d):
                if row_ab[c] != row_a[row_b[c]]:
                    raise GroupTableError(f"table is not associative at ({a},{b},{c})")


def _generator_words(
    table: tuple[tuple[int, ...], ...], generators: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """BFS factorizations: eval_order + (parent, generator index) per element."""
    d = len(table)
    parent: list[Optional[tuple[int, int]]] = [None] * d
    order = [0]
    seen = {0}
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for gi, g in enumerate(generators):
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                parent[y] = (x, gi)
                order.append(y)
    if len(order) != d:
        raise GroupTableError(
            f"generators {list(generators)} generate only {len(order)} of {d} elements"
        )
    filled = tuple(p if p is not None else (-1, -1) for p in parent)
    return tuple(order), filled


# ---------------------------------------------------------------------------
# construction


@dataclass(frozen=True)
class GroupSpec:
    """Input description of a finite group: a full table or permutation generators."""

    name: str
    table: Optional[tuple[tuple[int, ...], ...]] = None
    perm_generators: Optional[tuple[tuple[int, ...], ...]] = None
    size_cap: int = DEFAULT_SIZE_CAP

    @staticmethod
    def from_json(data: dict, size_cap: int = DEFAULT_SIZE_CAP) -> "GroupSpec":
        name = data.get("name", "G")
        table = data.get("table")
        perms = data.get("permGenerators")
        if (table is None) == (perms is None):
            raise GroupTableError("group spec needs exactly one of 'table' or 'permGenerators'")
        if table is not None:
            return GroupSpec(name, table=tuple(tuple(int(x) for x in r) for r in table), size_cap=size_cap)
        return GroupSpec(
            name, perm_generators=tuple(tuple(int(x) for x in p) for p in perms), size_cap=size_cap
        )

    @staticmethod
    def from_path(path: str | Path, size_cap: int = DEFAULT_SIZE_CAP) -> "GroupSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return GroupSpec.from_json(json.load(fh), size_cap=size_cap)

    def to_json(self) -> dict:
        if self.table is not None:
            return {"name": self.name, "table": [list(r) for r in self.table]}
        return {"name": self.name, "permGenerators": [list(p) for p in self.perm_generators]}


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Construct a validated FiniteGroup from a GroupSpec."""
    if (spec.table is None) == (spec.perm_generators is None):
        raise GroupTableError("group spec needs exactly one of 'table' or 'permGenerators'")
    if spec.table is not None:
        return group_from_table(spec.table, name=spec.name, size_cap=spec.size_cap)
    return group_from_permutations(spec.perm_generators, name=spec.name, size_cap=spec.size_cap)


def group_from_table(
    table: Sequence[Sequence[int]],
    name: str = "G",
    generators: Optional[Sequence[int]] = None,
    element_names: Optional[Sequence[str]] = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> FiniteGroup:
    """Build a group from an explicit table, relabeling so the identity is 0.

    Runs the full O(d^3) associativity check; intended for small explicit input.
    """
    rows = tuple(tuple(int(x) for x in row) for row in table)
    _validate_table_shape(rows)
    if len(rows) > size_cap:
        raise SizeCapError(f"table has {len(rows)} elements, exceeding cap {size_cap}")
    d = len(rows)
    ident = next(
        (e for e in range(d) if all(rows[e][j] == j for j in range(d)) and all(rows[j][e] == j for j in range(d))),
        None,
    )
    if ident is None:
        raise GroupTableError("no identity element in table")
    if ident != 0:
        rows = _relabel_table(rows, ident)
        if element_names is not None:
            element_names = list(element_names)
            element_names[0], element_names[ident] = element_names[ident], element_names[0]
        if generators is not None:
            swap = {0: ident, ident: 0}
            generators = [swap.get(g, g) for g in generators]
    probe = FiniteGroup(rows, generators=range(d), name=name, element_names=element_names)
    if generators is None:
        generators = _greedy_generators(probe)
    return FiniteGroup(rows, generators=generators, name=name, element_names=element_names,
                       check_associativity=False)


def _relabel_table(rows: tuple[tuple[int, ...], ...], ident: int) -> tuple[tuple[int, ...], ...]:
    d = len(rows)
    relabel = list(range(d))
    relabel[0], relabel[ident] = ident, 0
    out = [[0] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            out[relabel[a]][relabel[b]] = relabel[rows[a][b]]
    return tuple(tuple(r) for r in out)


def _greedy_generators(group: FiniteGroup) -> list[int]:
    """Small generating set: repeatedly adjoin a maximal-order missing element."""
    gens: list[int] = []
    closure = frozenset({0})
    by_order = sorted(range(group.order), key=lambda a: (-group.element_order(a), a))
    while len(closure) < group.order:
        cand = next(a for a in by_order if a not in closure)
        gens.append(cand)
        closure = group.subgroup_closure(gens)
    return gens


def group_from_permutations(
    perm_generators: Sequence[Sequence[int]],
    name: str = "G",
    size_cap: int = DEFAULT_SIZE_CAP,
) -> FiniteGroup:
    """Build a group by BFS closure of permutation generators on 0..m-1."""
    gens = [tuple(int(x) for x in p) for p in perm_generators]
    if not gens:
        raise GroupTableError("need at least one permutation generator")
    m = len(gens[0])
    for p in gens:
        if len(p) != m or sorted(p) != list(range(m)):
            raise GroupTableError(f"invalid permutation generator {list(p)}")
    ident = tuple(range(m))
    index: dict[tuple[int, ...], int] = {ident: 0}
    elems = [ident]
    head = 0
    while head < len(elems):
        base = elems[head]
        head += 1
        for p in gens:
            prod = tuple(base[p[i]] for i in range(m))
            if prod not in index:
                if len(elems) >= size_cap:
                    raise SizeCapError(f"closure exceeded size cap {size_cap}")
                index[prod] = len(elems)
                elems.append(prod)
    d = len(elems)
    table = [
        tuple(index[tuple(pa[pb[i]] for i in range(m))] for pb in elems)
        for pa in elems
    ]
    gen_indices = [index[p] for p in gens]
    return FiniteGroup(table, generators=gen_indices, name=name, check_associativity=False)


# ---------------------------------------------------------------------------
# builtin library


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _quaternion_table() -> tuple[list[list[int]], list[str]]:
    # elements 2u+s: unit u in (1,i,j,k), sign s (0 -> +, 1 -> -)
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
        (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
        (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
        (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
    }
    table = [[0] * 8 for _ in range(8)]
    for u1, s1, u2, s2 in itertools.product(range(4), range(2), range(4), range(2)):
        u, s = unit_mul[(u1, u2)]
        table[2 * u1 + s1][2 * u2 + s2] = 2 * u + ((s1 + s2 + s) % 2)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return table, names


@lru_cache(maxsize=None)
def builtin_group(name: str) -> FiniteGroup:
    """One of the builtin groups C1, C2, C3, C4, V4, S3, D4, Q8."""
    key = name.strip().upper()
    if key == "C1":
        return group_from_table([[0]], name="C1")
    if key == "C2":
        return group_from_table(_cyclic_table(2), name="C2")
    if key == "C3":
        return group_from_table(_cyclic_table(3), name="C3")
    if key == "C4":
        return group_from_table(_cyclic_table(4), name="C4")
    if key == "V4":
        return group_from_table([[i ^ j for j in range(4)] for i in range(4)], name="V4")
    if key == "S3":
        return group_from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")
    if key == "D4":
        return group_from_permutations([(1, 2, 3, 0), (3, 2, 1, 0)], name="D4")
    if key == "Q8":
        table, names = _quaternion_table()
        return group_from_table(table, name="Q8", generators=[2, 4], element_names=names)
    raise UnknownGroupError(f"unknown builtin group {name!r}; known: {', '.join(BUILTIN_GROUP_NAMES)}")


# ---------------------------------------------------------------------------
# abelian groups by invariant factors


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group as a chain of invariant factors e1 | e2 | ... | es.

    Elements are mixed-radix vectors, addressed big-endian so that
    lexicographic order on vectors equals numeric order on indices.
    The empty chain is the trivial group.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = tuple(int(e) for e in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for e in fs:
            if e < 2:
                raise ValueError(f"invariant factor {e} must be at least 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factor {a} does not divide successor {b}")

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.invariant_factors)

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % e for a, b, e in zip(x, y, self.invariant_factors))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % e for a, e in zip(x, self.invariant_factors))

    def scalar_mul(self, c: int, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((c * a) % e for a, e in zip(x, self.invariant_factors))

    def index_of(self, x: Sequence[int]) -> int:
        idx = 0
        for a, e in zip(x, self.invariant_factors):
            idx = idx * e + (a % e)
        return idx

    def vector_of(self, idx: int) -> tuple[int, ...]:
        out = []
        for e in reversed(self.invariant_factors):
            idx, r = divmod(idx, e)
            out.append(r)
        return tuple(reversed(out))

    def vectors(self) -> Iterator[tuple[int, ...]]:
        return iter(itertools.product(*(range(e) for e in self.invariant_factors)))

    @staticmethod
    def from_json(data: dict) -> "AbelianGroup":
        return AbelianGroup(tuple(int(e) for e in data["invariantFactors"]))

    def to_json(self) -> dict:
        return {"invariantFactors": list(self.invariant_factors)}


@lru_cache(maxsize=None)
def abelian_index_tables(coeffs: AbelianGroup) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """(add, neg) tables on element indices of a finite abelian group."""
    vecs = list(coeffs.vectors())
    idx = coeffs.index_of
    add = tuple(tuple(idx(coeffs.add(x, y)) for y in vecs) for x in vecs)
    neg = tuple(idx(coeffs.neg(x)) for x in vecs)
    return add, neg


# ---------------------------------------------------------------------------
# subgroup conjugacy classes


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups, held by its canonical representative."""

    elements: tuple[int, ...]
    index: int
    normalizer_order: int
    centralizer_order: int
    conjugate_count: int
    is_full_group: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def _conjugate_set(group: FiniteGroup, subgroup: frozenset[int], g: int) -> frozenset[int]:
    gi = group.inv(g)
    return frozenset(group.mul(group.mul(g, u), gi) for u in subgroup)


def _all_subgroups(group: FiniteGroup) -> set[frozenset[int]]:
    """All subgroups: cyclic subgroups closed under pairwise joins."""
    subs: set[frozenset[int]] = set()
    for a in range(group.order):
        subs.add(group.subgroup_closure([a]))
    while True:
        new: set[frozenset[int]] = set()
        current = sorted(subs, key=lambda s: (len(s), sorted(s)))
        for h, k in itertools.combinations(current, 2):
            if h <= k or k <= h:
                continue
            join = group.subgroup_closure(h | k)
            if join not in subs:
                new.add(join)
        if not new:
            return subs
        subs |= new


@lru_cache(maxsize=None)
def subgroup_classes(group: FiniteGroup) -> tuple[SubgroupClass, ...]:
    """All subgroups up to conjugacy, ordered by size with the full group last."""
    subs = _all_subgroups(group)
    seen: set[frozenset[int]] = set()
    classes: list[SubgroupClass] = []
    for rep in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if rep in seen:
            continue
        orbit = {_conjugate_set(group, rep, g) for g in range(group.order)}
        seen |= orbit
        canonical = min(orbit, key=lambda s: sorted(s))
        normalizer = sum(1 for g in range(group.order) if _conjugate_set(group, canonical, g) == canonical)
        classes.append(
            SubgroupClass(
                elements=tuple(sorted(canonical)),
                index=group.order // len(canonical),
                normalizer_order=normalizer,
                centralizer_order=normalizer // len(canonical),
                conjugate_count=group.order // normalizer,
                is_full_group=len(canonical) == group.order,
            )
        )
    classes.sort(key=lambda c: (c.order, c.elements))
    return tuple(classes)


def full_group_class(group: FiniteGroup) -> SubgroupClass:
    """The class record for U = G itself, without enumerating all subgroups."""
    return SubgroupClass(
        elements=tuple(range(group.order)),
        index=1,
        normalizer_order=group.order,
        centralizer_order=1,
        conjugate_count=1,
        is_full_group=True,
    )


# ---------------------------------------------------------------------------
# coset actions


@dataclass(frozen=True)
class PermutationAction:
    """Transitive action of a group on the cosets of a subgroup.

    ``perms[g][j]`` is the image of point j under group element g; point j
    corresponds to the coset ``transversal[j] * U``, with point 0 the
    subgroup itself.
    """

    degree: int
    perms: tuple[tuple[int, ...], ...]
    transversal: tuple[int, ...]


@lru_cache(maxsize=None)
def coset_action(group: FiniteGroup, cls: SubgroupClass) -> PermutationAction:
    """Left action of the group on cosets of the class representative."""
    subgroup = cls.elements
    point_of: dict[int, int] = {}
    transversal: list[int] = []

    def add_coset(rep: int) -> None:
        j = len(transversal)
        transversal.append(rep)
        for u in subgroup:
            point_of[group.mul(rep, u)] = j

    add_coset(0)
    head = 0
    while head < len(transversal):
        t = transversal[head]
        head += 1
        for g in group.generators:
            x = group.mul(g, t)
            if x not in point_of:
                add_coset(x)
    k = len(transversal)
    if k * len(subgroup) != group.order:
        raise GroupTableError("coset enumeration failed; input is not a subgroup")
    perms = tuple(
        tuple(point_of[group.mul(g, t)] for t in transversal) for g in range(group.order)
    )
    return PermutationAction(degree=k, perms=perms, transversal=tuple(transversal))


def coset_point_map(group: FiniteGroup, cls: SubgroupClass) -> dict[int, int]:
    """Element -> coset point, matching the canonical coset_action numbering."""
    action = coset_action(group, cls)
    point_of: dict[int, int] = {}
    for j, t in enumerate(action.transversal):
        for u in cls.elements:
            point_of[group.mul(t, u)] = j
    return point_of


# ---------------------------------------------------------------------------
# abelianization


@dataclass
class Abelianization:
    """Quotient U/[U,U] in invariant-factor form plus the projection map.

    ``projection`` sends each element of U to its mixed-radix vector in
    ``group``; it is a surjective homomorphism with kernel ``commutator``.
    """

    group: AbelianGroup
    projection: dict[int, tuple[int, ...]]
    commutator: frozenset[int]


@lru_cache(maxsize=None)
def abelianization(group: FiniteGroup, cls: SubgroupClass) -> Abelianization:
    subgroup = cls.elements
    comms = {
        group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b))
        for a in subgroup
        for b in subgroup
    }
    commutator = group.subgroup_closure(comms)
    # quotient cosets, represented by their minimal element
    rep_of: dict[int, int] = {}
    reps: list[int] = []
    for u in subgroup:
        if u in rep_of:
            continue
        coset = sorted(group.mul(u, c) for c in commutator)
        r = coset[0]
        reps.append(r)
        for x in coset:
            rep_of[x] = r
    reps.sort()

    def qmul(a: int, b: int) -> int:
        return rep_of[group.mul(a, b)]

    factors, _, vec_of = _abelian_decomposition(reps, qmul, rep_of[0])
    projection = {u: vec_of[rep_of[u]] for u in subgroup}
    return Abelianization(group=AbelianGroup(factors), projection=projection, commutator=commutator)


def _fn_power(mul, identity: int, a: int, m: int) -> int:
    x = identity
    for _ in range(m):
        x = mul(x, a)
    return x


def _fn_order(mul, identity: int, a: int) -> int:
    order = 1
    x = a
    while x != identity:
        x = mul(x, a)
        order += 1
    return order


def _abelian_decomposition(
    labels: Sequence[int], mul, identity: int
) -> tuple[tuple[int, ...], tuple[int, ...], dict[int, tuple[int, ...]]]:
    """Invariant factors, generators, and coordinates of a small abelian group.

    Primary decomposition per prime, then greedy peeling: repeatedly take a
    maximal-order element whose cyclic group meets the current span
    trivially.  The mixed-radix coordinate map is built by full enumeration,
    which doubles as a bijectivity check of the decomposition.
    """
    n = len(labels)
    if n == 1:
        return (), (), {identity: ()}
    orders = {x: _fn_order(mul, identity, x) for x in labels}
    primes = sorted({p for x in labels for p in _prime_factors(orders[x])})
    per_prime: dict[int, list[tuple[int, int]]] = {}
    for p in primes:
        component = [x for x in labels if _is_prime_power_order(orders[x], p)]
        picked: list[tuple[int, int]] = []
        span = {identity}
        while len(span) < len(component):
            best = None
            for x in component:
                o = orders[x]
                if o == 1 or _fn_power(mul, identity, x, o // p) in span:
                    continue
                if best is None or o > orders[best]:
                    best = x
            assert best is not None, "abelian decomposition stalled"
            picked.append((best, orders[best]))
            span = {mul(s, _fn_power(mul, identity, best, t)) for s in span for t in range(orders[best])}
        per_prime[p] = picked
    width = max(len(v) for v in per_prime.values())
    factors_desc: list[int] = []
    gens_desc: list[int] = []
    for j in range(width):
        f = 1
        g = identity
        for p in primes:
            if j < len(per_prime[p]):
                gen, o = per_prime[p][j]
                f *= o
                g = mul(g, gen)
        factors_desc.append(f)
        gens_desc.append(g)
    factors = tuple(reversed(factors_desc))
    gens = tuple(reversed(gens_desc))
    vec_of: dict[int, tuple[int, ...]] = {}
    for combo in itertools.product(*(range(e) for e in factors)):
        x = identity
        for g, c in zip(gens, combo):
            x = mul(x, _fn_power(mul, identity, g, c))
        vec_of[x] = combo
    assert len(vec_of) == n, "invariant-factor coordinates are not a bijection"
    return factors, gens, vec_of


def _prime_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _is_prime_power_order(order: int, p: int) -> bool:
    while order % p == 0:
        order //= p
    return order == 1

"""Ground truth at desk scale.

Explicit construction of A wr S_n with element decoding, exhaustive
enumeration of homomorphisms by generator images, and brute-force
centralizer orders.  Everything here is a verifier for the counting
engine, not a production path.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .groups import (
    AbelianGroup,
    FiniteGroup,
    PermutationAction,
    SizeCapError,
    abelian_index_tables,
)
from .homs import hom_group
from .counting import DistributionTable

DEFAULT_WREATH_CAP = 10**6
DEFAULT_TUPLE_CAP = 10**8
DEFAULT_DEGREE_CAP = 8


class ExplicitWreath:
    """A wr S_n with elements encoded as integers.

    An element (sigma; a_1..a_n) has index ``rank(sigma) * |A|^n + packed
    decorations``; permutations are ranked lexicographically so index 0 is
    the identity.  Multiplication permutes the left factor's decorations by
    the right factor's permutation.
    """

    def __init__(self, coeffs: AbelianGroup, degree: int, size_cap: int = DEFAULT_WREATH_CAP):
        a = coeffs.order
        order = a**degree * math.factorial(degree)
        if order > size_cap:
            raise SizeCapError(
                f"wreath product order {order} = {a}^{degree} * {degree}! exceeds cap {size_cap}"
            )
        self.coeffs = coeffs
        self.degree = degree
        self.order = order
        self.identity = 0
        self._a = a
        self._decor_size = a**degree
        self.perms = tuple(sorted(itertools.permutations(range(degree))))
        self._perm_rank = {p: r for r, p in enumerate(self.perms)}
        self._add, self._neg = abelian_index_tables(coeffs)
        self._decoded: list = [None] * order

    def decode(self, e: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(permutation, decoration indices) of element e."""
        cached = self._decoded[e]
        if cached is None:
            q, r = divmod(e, self._decor_size)
            decor = []
            for _ in range(self.degree):
                r, digit = divmod(r, self._a)
                decor.append(digit)
            cached = (self.perms[q], tuple(reversed(decor)))
            self._decoded[e] = cached
        return cached

    def encode(self, perm, decor) -> int:
        r = 0
        for digit in decor:
            r = r * self._a + digit
        return self._perm_rank[tuple(perm)] * self._decor_size + r

    def mul(self, x: int, y: int) -> int:
        p1, d1 = self.decode(x)
        p2, d2 = self.decode(y)
        add = self._add
        perm = tuple(p1[i] for i in p2)
        decor = tuple(add[d1[p2[i]]][d2[i]] for i in range(self.degree))
        return self.encode(perm, decor)

    def inv(self, x: int) -> int:
        p, d = self.decode(x)
        pinv = [0] * self.degree
        for i, j in enumerate(p):
            pinv[j] = i
        decor = tuple(self._neg[d[pinv[i]]] for i in range(self.degree))
        return self.encode(pinv, decor)

    def power(self, x: int, m: int) -> int:
        out = self.identity
        for _ in range(m):
            out = self.mul(out, x)
        return out

    def active(self, e: int) -> tuple[int, ...]:
        """Projection to the symmetric group."""
        return self.decode(e)[0]

    def fold(self, e: int) -> int:
        """Sum of decorations, as an element index of A."""
        acc = 0
        add = self._add
        for digit in self.decode(e)[1]:
            acc = add[acc][digit]
        return acc

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"ExplicitWreath({list(self.coeffs.invariant_factors)} wr S_{self.degree}, order={self.order})"


def build_wreath_group(
    coeffs: AbelianGroup, degree: int, size_cap: int = DEFAULT_WREATH_CAP
) -> ExplicitWreath:
    return ExplicitWreath(coeffs, degree, size_cap=size_cap)


def enumerate_homs(group: FiniteGroup, target, tuple_cap: int = DEFAULT_TUPLE_CAP) -> list[tuple[int, ...]]:
    """All homomorphisms from ``group`` into a mul-capable target, as full maps.

    Depth-first over generator-image tuples, pruned by element order; each
    surviving tuple is pushed to a full map along the stored generator
    words and accepted iff the map respects every product.
    """
    gens = group.generators
    if target.order ** len(gens) > tuple_cap:
        raise SizeCapError(
            f"search space {target.order}^{len(gens)} exceeds cap {tuple_cap}"
        )
    candidates = []
    for g in gens:
        o = group.element_order(g)
        candidates.append([t for t in range(target.order) if target.power(t, o) == target.identity])
    d = group.order
    mul = target.mul
    homs: list[tuple[int, ...]] = []
    for images in itertools.product(*candidates):
        img = [0] * d
        img[0] = target.identity
        for x in group.eval_order[1:]:
            p, gi = group.parent_word[x]
            img[x] = mul(img[p], images[gi])
        ok = True
        for a in range(1, d):
            row = group.mul_table[a]
            ia = img[a]
            for b in range(1, d):
                if mul(ia, img[b]) != img[row[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            homs.append(tuple(img))
    return homs


def oracle_delta(
    group: FiniteGroup,
    coeffs: AbelianGroup,
    n: int,
    size_cap: int = DEFAULT_WREATH_CAP,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> DistributionTable:
    """Exact fold-value distribution by exhaustive enumeration."""
    target = build_wreath_group(coeffs, n, size_cap=size_cap)
    homs = enumerate_homs(group, target, tuple_cap=tuple_cap)
    hg = hom_group(group, coeffs)
    fibers = [0] * hg.size
    for img in homs:
        values = tuple(target.fold(img[g]) for g in range(group.order))
        fibers[hg.index_of(values)] += 1
    total = len(homs)
    return DistributionTable(
        n=n,
        probs=tuple(Fraction(f, total) for f in fibers),
        fiber_counts=tuple(fibers),
    )


def fixed_point_strata_uniform(
    group: FiniteGroup, coeffs: AbelianGroup, target: ExplicitWreath, homs: list
) -> bool:
    """Whether every fixed-point stratum has exactly equal fold fibers.

    Homomorphisms are stratified by their active part; a stratum counts as
    fixed-point if some point is fixed by every generator image.  Within
    such a stratum the fold values must hit each element of Hom(G, A)
    equally often.
    """
    hg = hom_group(group, coeffs)
    strata: dict[tuple, list] = {}
    for img in homs:
        key = tuple(target.active(img[g]) for g in group.generators)
        strata.setdefault(key, []).append(img)
    for key, members in strata.items():
        has_fixed = any(all(p[i] == i for p in key) for i in range(target.degree))
        if not has_fixed:
            continue
        fibers = [0] * hg.size
        for img in members:
            values = tuple(target.fold(img[g]) for g in range(group.order))
            fibers[hg.index_of(values)] += 1
        if len(set(fibers)) != 1:
            return False
    return True


def centralizer_order(action: PermutationAction, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Order of the centralizer of the action's image in the symmetric group."""
    k = action.degree
    if k > degree_cap:
        raise SizeCapError(f"centralizer search degree {k} exceeds cap {degree_cap}")
    distinct = sorted(set(action.perms))
    count = 0
    for sigma in itertools.permutations(range(k)):
        commutes = True
        for p in distinct:
            for i in range(k):
                if sigma[p[i]] != p[sigma[i]]:
                    commutes = False
                    break
            if not commutes:
                break
        if commutes:
            count += 1
    return count

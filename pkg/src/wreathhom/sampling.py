"""Exactly uniform random homomorphisms into A wr S_n.

Backward sampling on the counting recurrence picks an orbit-type multiset
with its exact stratum probability; orbits are then placed by a uniform
shuffle-and-cut and decorated through the per-orbit extension
parametrization.  All randomness flows through an injected Random
instance and integer draws, so results are exactly uniform and
reproducible per seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .counting import counter_for
from .groups import (
    AbelianGroup,
    FiniteGroup,
    abelian_index_tables,
    abelianization,
    coset_action,
)
from .homs import abelian_homs, evaluate_abelian_hom


@dataclass(frozen=True)
class WreathHom:
    """A homomorphism G -> A wr S_n stored as generator images.

    Per generator: a permutation of 0..n-1 and a length-n vector of
    A-element indices.  The full map on G is derived on demand.
    """

    n: int
    perms: tuple[tuple[int, ...], ...]
    decors: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "perm": [list(p) for p in self.perms],
            "decor": [list(d) for d in self.decors],
        }


@dataclass(frozen=True)
class _ClassAssembly:
    """Precomputed per-class data for decorating one orbit."""

    k: int
    gen_points: tuple[tuple[int, ...], ...]
    # u_eval[u][gen][j]: A-index of u applied to the coset cocycle at (gen, j)
    u_eval: tuple[tuple[tuple[int, ...], ...], ...]


@lru_cache(maxsize=None)
def _assemblies(group: FiniteGroup, coeffs: AbelianGroup) -> tuple[_ClassAssembly, ...]:
    counter = counter_for(group, coeffs)
    out = []
    for cls in counter.classes:
        action = coset_action(group, cls)
        ab = abelianization(group, cls)
        k = action.degree
        gen_points = tuple(action.perms[g] for g in group.generators)
        cocycle_vecs = []
        for g in group.generators:
            perm = action.perms[g]
            vecs = []
            for j in range(k):
                x = group.mul(
                    group.inv(action.transversal[perm[j]]),
                    group.mul(g, action.transversal[j]),
                )
                vecs.append(ab.projection[x])
            cocycle_vecs.append(vecs)
        u_eval = tuple(
            tuple(
                tuple(
                    coeffs.index_of(evaluate_abelian_hom(coeffs, images, vec))
                    for vec in per_gen
                )
                for per_gen in cocycle_vecs
            )
            for images in abelian_homs(ab.group, coeffs)
        )
        out.append(_ClassAssembly(k=k, gen_points=gen_points, u_eval=u_eval))
    return tuple(out)


def sample_orbit_type(
    group: FiniteGroup, coeffs: AbelianGroup, n: int, rng: random.Random
) -> tuple[int, ...]:
    """Orbit-type multiset (m_1..m_l) with its exact stratum probability.

    Backward walk on the recurrence: at size s, class i is chosen with
    probability k_i a_i h_{s-k_i} / (s h_s), realized by integer draws over
    a common denominator.
    """
    counter = counter_for(group, coeffs)
    counter.extend_to(n)
    data = counter.orbit_data
    denom = math.lcm(*(od.c for od in data))
    m = [0] * len(data)
    s = n
    while s > 0:
        weights = []
        for od in data:
            if od.k > s:
                weights.append(0)
                continue
            falling = 1
            for t in range(od.k - 1):
                falling *= s - 1 - t
            weights.append(od.k * od.weight * falling * counter.count(s - od.k) * (denom // od.c))
        total = counter.count(s) * denom
        assert sum(weights) == total
        r = rng.randrange(total)
        for i, w in enumerate(weights):
            if r < w:
                m[i] += 1
                s -= data[i].k
                break
            r -= w
    return tuple(m)


def sample_hom(
    group: FiniteGroup, coeffs: AbelianGroup, n: int, rng: random.Random
) -> WreathHom:
    """One uniform draw from Hom(G, A wr S_n).

    Samples a stratum, shuffles points into typed orbit blocks, then per
    orbit draws u in Hom(U, A) and free decorations x and assembles the
    coordinates x[g.j] + u(cocycle) - x[j].
    """
    m = sample_orbit_type(group, coeffs, n, rng)
    assemblies = _assemblies(group, coeffs)
    add, neg = abelian_index_tables(coeffs)
    a_order = coeffs.order
    num_gens = len(group.generators)
    perms = [list(range(n)) for _ in range(num_gens)]
    decors = [[0] * n for _ in range(num_gens)]
    points = list(range(n))
    rng.shuffle(points)
    pos = 0
    for ci, count in enumerate(m):
        asm = assemblies[ci]
        for _ in range(count):
            block = points[pos : pos + asm.k]
            pos += asm.k
            u_idx = rng.randrange(len(asm.u_eval))
            u_tab = asm.u_eval[u_idx]
            xs = [0] + [rng.randrange(a_order) for _ in range(asm.k - 1)]
            for gi in range(num_gens):
                act = asm.gen_points[gi]
                u_gen = u_tab[gi]
                for j in range(asm.k):
                    p = block[j]
                    perms[gi][p] = block[act[j]]
                    decors[gi][p] = add[add[xs[act[j]]][u_gen[j]]][neg[xs[j]]]
    return WreathHom(
        n=n,
        perms=tuple(tuple(p) for p in perms),
        decors=tuple(tuple(d) for d in decors),
    )


def _wreath_mul(e1, e2, add):
    p1, d1 = e1
    p2, d2 = e2
    n = len(p1)
    return (
        tuple(p1[i] for i in p2),
        tuple(add[d1[p2[i]]][d2[i]] for i in range(n)),
    )


def full_images(group: FiniteGroup, coeffs: AbelianGroup, hom: WreathHom) -> list:
    """Image of every group element, pushed along the stored generator words."""
    add, _ = abelian_index_tables(coeffs)
    identity = (tuple(range(hom.n)), (0,) * hom.n)
    imgs = [identity] * group.order
    for x in group.eval_order[1:]:
        parent, gi = group.parent_word[x]
        imgs[x] = _wreath_mul(imgs[parent], (hom.perms[gi], hom.decors[gi]), add)
    return imgs


def verify_wreath_hom(group: FiniteGroup, coeffs: AbelianGroup, hom: WreathHom) -> bool:
    """Check the generator images satisfy every relation of the group."""
    add, _ = abelian_index_tables(coeffs)
    imgs = full_images(group, coeffs, hom)
    for a in range(group.order):
        for b in range(group.order):
            if _wreath_mul(imgs[a], imgs[b], add) != imgs[group.mul(a, b)]:
                return False
    return True


def fold_values(group: FiniteGroup, coeffs: AbelianGroup, hom: WreathHom) -> tuple[int, ...]:
    """Fold (decoration sum) of every element's image, as A-element indices."""
    add, _ = abelian_index_tables(coeffs)
    imgs = full_images(group, coeffs, hom)
    out = []
    for _, decor in imgs:
        acc = 0
        for digit in decor:
            acc = add[acc][digit]
        out.append(acc)
    return tuple(out)

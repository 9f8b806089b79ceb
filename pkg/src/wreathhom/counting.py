"""Exact counting of homomorphisms into wreath products A wr S_n.

Two independent evaluations of the stratified orbit-type sum: direct
enumeration of weighted compositions, and a linear recurrence obtained as
the log-derivative of exp(sum_i a_i x^{k_i}) run in exact rational
arithmetic.  The same recurrence run in the group algebra of Hom(G, A)
yields the exact fold-value distribution, fixed-point-free probabilities,
and the count of homomorphisms with trivial fold (type-D Weyl groups for
A = C2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import AbelianGroup, FiniteGroup, SizeCapError, abelianization, subgroup_classes
from .homs import HomGroup, hom_count_abelian, hom_group
from .orbits import OrbitTypeData, orbit_type_data

DEFAULT_RECURRENCE_CAP = 10**5
DEFAULT_DIRECT_CAP = 60


@dataclass(frozen=True)
class CountTable:
    """t[n] = |Hom(G, A wr S_n)| for n = 0..n_max, with the per-class weights."""

    n_max: int
    counts: tuple[int, ...]
    strata_coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class DistributionTable:
    """Exact fold-value distribution at one n, indexed by HomGroup order."""

    n: int
    probs: tuple[Fraction, ...]
    fiber_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        assert sum(self.probs, Fraction(0)) == 1
        assert all(p >= 0 for p in self.probs)

    @property
    def total(self) -> int:
        return sum(self.fiber_counts)

    def sup_distance_to_uniform(self) -> Fraction:
        u = Fraction(1, len(self.probs))
        return max(abs(p - u) for p in self.probs)


@dataclass(frozen=True)
class DecayConstant:
    """Exponential decay rate for the fixed-point-free probability.

    ``reference_value`` is the real constant 1/(e * d * l * |A| * max|Hom(U,A)|);
    ``conservative`` is the strictly smaller rational obtained by replacing
    e with 3, safe for exact comparisons.
    """

    conservative: Fraction
    reference_value: float


class WreathHomCounter:
    """Shared exact tables for one (G, A) pair, extended on demand.

    ``totals[n]`` is |Hom(G, A wr S_n)|; ``free[n]`` counts the
    homomorphisms whose active permutation image has no fixed point;
    ``fibers[n]`` refines totals by fold value.  All three satisfy the same
    recurrence; integrality is asserted at every step.
    """

    def __init__(self, group: FiniteGroup, coeffs: AbelianGroup):
        self.group = group
        self.coeffs = coeffs
        self.classes = subgroup_classes(group)
        self.homs: HomGroup = hom_group(group, coeffs)
        self.orbit_data: tuple[OrbitTypeData, ...] = tuple(
            orbit_type_data(group, coeffs, cls, self.homs, class_id=i)
            for i, cls in enumerate(self.classes)
        )
        self._full_idx = next(i for i, c in enumerate(self.classes) if c.is_full_group)
        h = self.homs.size
        self._totals: list[int] = [1]
        self._free: list[int] = [1]
        self._fibers: list[tuple[int, ...]] = [tuple(1 if i == 0 else 0 for i in range(h))]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def _convolve(self, fiber: tuple[int, ...], dist: tuple[int, ...]) -> list[int]:
        homs = self.homs
        out = [0] * homs.size
        for i, a in enumerate(fiber):
            if a == 0:
                continue
            row = homs.add_table[i]
            for j, b in enumerate(dist):
                if b:
                    out[row[j]] += a * b
        return out

    def extend_to(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        h = self.homs.size
        while len(self._totals) <= n:
            s = len(self._totals)
            total = Fraction(0)
            free = Fraction(0)
            fiber = [Fraction(0)] * h
            for i, od in enumerate(self.orbit_data):
                if od.k > s:
                    continue
                falling = 1
                for t in range(od.k - 1):
                    falling *= s - 1 - t
                coef = Fraction(od.k * falling, od.c)
                total += coef * od.weight * self._totals[s - od.k]
                if i != self._full_idx:
                    free += coef * od.weight * self._free[s - od.k]
                conv = self._convolve(od.fiber, self._fibers[s - od.k])
                for psi in range(h):
                    if conv[psi]:
                        fiber[psi] += coef * conv[psi]
            assert total.denominator == 1, f"non-integral count at n={s}"
            assert free.denominator == 1, f"non-integral fixed-point-free count at n={s}"
            assert all(f.denominator == 1 for f in fiber), f"non-integral fiber at n={s}"
            fiber_ints = tuple(int(f) for f in fiber)
            assert sum(fiber_ints) == int(total), f"fiber sum mismatch at n={s}"
            self._totals.append(int(total))
            self._free.append(int(free))
            self._fibers.append(fiber_ints)

    def count(self, n: int) -> int:
        self.extend_to(n)
        return self._totals[n]

    def fixed_point_free_probability(self, n: int) -> Fraction:
        self.extend_to(n)
        return Fraction(self._free[n], self._totals[n])

    def fiber_counts(self, n: int) -> tuple[int, ...]:
        self.extend_to(n)
        return self._fibers[n]

    def delta(self, n: int) -> DistributionTable:
        self.extend_to(n)
        total = self._totals[n]
        fibers = self._fibers[n]
        return DistributionTable(
            n=n,
            probs=tuple(Fraction(f, total) for f in fibers),
            fiber_counts=fibers,
        )

    def strata_coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(od.weight, od.c) for od in self.orbit_data)


@lru_cache(maxsize=None)
def counter_for(group: FiniteGroup, coeffs: AbelianGroup) -> WreathHomCounter:
    return WreathHomCounter(group, coeffs)


def hom_count_wreath(
    group: FiniteGroup, coeffs: AbelianGroup, n: int, cap: int = DEFAULT_RECURRENCE_CAP
) -> int:
    """|Hom(G, A wr S_n)| by the exact recurrence."""
    if n > cap:
        raise SizeCapError(f"n={n} exceeds recurrence cap {cap}")
    return counter_for(group, coeffs).count(n)


def hom_count_direct(
    group: FiniteGroup, coeffs: AbelianGroup, n: int, cap: int = DEFAULT_DIRECT_CAP
) -> int:
    """|Hom(G, A wr S_n)| by direct enumeration of orbit-type multisets.

    Sums n! * prod_i w_i^{m_i} / (m_i! c_i^{m_i}) over all (m_i) whose orbit
    sizes tile n.  Exponential in the number of classes; capped accordingly.
    """
    if n > cap:
        raise SizeCapError(
            f"direct enumeration capped at n={cap}; use hom_count_wreath for n={n}"
        )
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    counter = counter_for(group, coeffs)
    data = counter.orbit_data
    total = Fraction(0)

    def recurse(idx: int, remaining: int, acc: Fraction) -> None:
        nonlocal total
        if idx == len(data):
            if remaining == 0:
                total += acc
            return
        od = data[idx]
        m = 0
        factor = Fraction(1)
        while m * od.k <= remaining:
            recurse(idx + 1, remaining - m * od.k, acc * factor)
            m += 1
            factor = Fraction(od.weight**m, math.factorial(m) * od.c**m)

    recurse(0, n, Fraction(1))
    result = total * math.factorial(n)
    assert result.denominator == 1
    return int(result)


def count_table(group: FiniteGroup, coeffs: AbelianGroup, n_max: int) -> CountTable:
    counter = counter_for(group, coeffs)
    counter.extend_to(n_max)
    return CountTable(
        n_max=n_max,
        counts=tuple(counter._totals[: n_max + 1]),
        strata_coefficients=counter.strata_coefficients(),
    )


def fixed_point_free_probability(group: FiniteGroup, coeffs: AbelianGroup, n: int) -> Fraction:
    """Probability that the active image of a uniform homomorphism has no fixed point."""
    return counter_for(group, coeffs).fixed_point_free_probability(n)


def delta_distribution(group: FiniteGroup, coeffs: AbelianGroup, n: int) -> DistributionTable:
    """Exact distribution of the fold value of a uniform homomorphism."""
    return counter_for(group, coeffs).delta(n)


def weyl_hom_count(group: FiniteGroup, n: int) -> int:
    """|Hom(G, W_n)| where W_n <= C2 wr S_n is the kernel of the fold map."""
    c2 = AbelianGroup((2,))
    return counter_for(group, c2).fiber_counts(n)[0]


def weyl_limit_ratio(group: FiniteGroup) -> Fraction:
    """1 / |Hom(G, C2)|, the limiting fraction of homomorphisms with trivial fold."""
    c2 = AbelianGroup((2,))
    return Fraction(1, hom_group(group, c2).size)


def index_two_subgroup_count(group: FiniteGroup) -> int:
    """Number of index-2 subgroups, summed over conjugates (each is normal)."""
    return sum(c.conjugate_count for c in subgroup_classes(group) if c.index == 2)


def decay_constant(group: FiniteGroup, coeffs: AbelianGroup) -> DecayConstant:
    """Decay rate of the fixed-point-free probability in exp(-c n^(1/d))."""
    classes = subgroup_classes(group)
    d = group.order
    num_classes = len(classes)
    max_homs = max(
        hom_count_abelian(abelianization(group, cls).group, coeffs) for cls in classes
    )
    a = max(coeffs.order, 1)
    denominator = d * num_classes * a * max_homs
    return DecayConstant(
        conservative=Fraction(1, 3 * denominator),
        reference_value=1.0 / (math.e * denominator),
    )


# ---------------------------------------------------------------------------
# JSON forms: big integers as decimal strings, rationals as num/den strings


def int_to_json(x: int) -> str:
    return str(x)


def int_from_json(s: str) -> int:
    return int(s)


def fraction_to_json(fr: Fraction) -> dict:
    return {"num": str(fr.numerator), "den": str(fr.denominator)}


def fraction_from_json(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def distribution_to_json(table: DistributionTable) -> dict:
    return {
        "n": table.n,
        "fibers": [int_to_json(f) for f in table.fiber_counts],
        "probs": [fraction_to_json(p) for p in table.probs],
        "supDistance": fraction_to_json(table.sup_distance_to_uniform()),
    }


def count_table_to_json(table: CountTable) -> dict:
    return {
        "nMax": table.n_max,
        "counts": [int_to_json(c) for c in table.counts],
        "strata": [fraction_to_json(a) for a in table.strata_coefficients],
    }

import random
from collections import Counter

import pytest
from scipy import stats

from wreathhom import (
    AbelianGroup,
    build_wreath_group,
    builtin_group,
    delta_distribution,
    enumerate_homs,
    fold_values,
    full_images,
    hom_group,
    sample_hom,
    sample_orbit_type,
    verify_wreath_hom,
)

C2 = AbelianGroup((2,))
V4A = AbelianGroup((2, 2))


def test_orbit_type_trivial_group():
    g = builtin_group("C1")
    rng = random.Random(1)
    for n in (1, 3, 7):
        assert sample_orbit_type(g, C2, n, rng) == (n,)


def test_orbit_type_distribution_c2_n2():
    g = builtin_group("C2")
    rng = random.Random(42)
    draws = Counter(sample_orbit_type(g, C2, 2, rng) for _ in range(30000))
    # exact stratum probabilities 1/3 for the 2-orbit, 2/3 for two fixed points
    observed = [draws[(1, 0)], draws[(0, 2)]]
    result = stats.chisquare(observed, f_exp=[30000 / 3, 2 * 30000 / 3])
    assert result.pvalue > 0.001


def test_orbit_type_distribution_c2_n3():
    g = builtin_group("C2")
    rng = random.Random(7)
    draws = Counter(sample_orbit_type(g, C2, 3, rng) for _ in range(20000))
    observed = [draws[(1, 1)], draws[(0, 3)]]
    result = stats.chisquare(observed, f_exp=[20000 * 12 / 20, 20000 * 8 / 20])
    assert result.pvalue > 0.001


def test_sample_trivial_group():
    g = builtin_group("C1")
    hom = sample_hom(g, C2, 4, random.Random(0))
    assert hom.n == 4
    assert hom.perms == () and hom.decors == ()
    assert verify_wreath_hom(g, C2, hom)


@pytest.mark.parametrize(
    "name,coeffs,n",
    [
        ("C2", C2, 4),
        ("C4", C2, 5),
        ("S3", C2, 6),
        ("S3", V4A, 4),
        ("V4", AbelianGroup((3,)), 5),
        ("Q8", C2, 4),
        ("D4", V4A, 3),
    ],
)
def test_samples_are_homomorphisms(name, coeffs, n):
    g = builtin_group(name)
    rng = random.Random(1234)
    for _ in range(40):
        hom = sample_hom(g, coeffs, n, rng)
        assert verify_wreath_hom(g, coeffs, hom)


def test_sampler_uniform_over_all_homs_c2_n2():
    g = builtin_group("C2")
    target = build_wreath_group(C2, 2)
    all_homs = enumerate_homs(g, target)
    assert len(all_homs) == 6
    gen = g.generators[0]
    rng = random.Random(99)
    draws = Counter()
    total = 30000
    for _ in range(total):
        hom = sample_hom(g, C2, 2, rng)
        draws[target.encode(hom.perms[0], hom.decors[0])] += 1
    observed = [draws[img[gen]] for img in all_homs]
    assert sum(observed) == total
    result = stats.chisquare(observed)
    assert result.pvalue > 0.001


def test_sampler_uniform_over_all_homs_s3_n3():
    g = builtin_group("S3")
    target = build_wreath_group(C2, 3)
    all_homs = enumerate_homs(g, target)
    index = {h: i for i, h in enumerate(all_homs)}
    rng = random.Random(31337)
    total = 30000
    counts = [0] * len(all_homs)
    for _ in range(total):
        hom = sample_hom(g, C2, 3, rng)
        imgs = full_images(g, C2, hom)
        key = tuple(target.encode(p, d) for p, d in imgs)
        counts[index[key]] += 1
    assert sum(counts) == total
    result = stats.chisquare(counts)
    assert result.pvalue > 0.001


def test_sampler_fold_matches_exact_distribution():
    g = builtin_group("C2")
    n = 4
    table = delta_distribution(g, C2, n)
    hg = hom_group(g, C2)
    rng = random.Random(2718)
    total = 20000
    counts = [0] * hg.size
    for _ in range(total):
        hom = sample_hom(g, C2, n, rng)
        counts[hg.index_of(fold_values(g, C2, hom))] += 1
    expected = [float(p) * total for p in table.probs]
    result = stats.chisquare(counts, f_exp=expected)
    assert result.pvalue > 0.001


def test_sampler_determinism():
    g = builtin_group("S3")
    a = sample_hom(g, C2, 5, random.Random(5))
    b = sample_hom(g, C2, 5, random.Random(5))
    assert a == b
    c = sample_hom(g, C2, 5, random.Random(6))
    assert a != c  # overwhelmingly likely for distinct seeds


def test_full_images_identity_and_closure():
    g = builtin_group("S3")
    hom = sample_hom(g, C2, 4, random.Random(3))
    imgs = full_images(g, C2, hom)
    assert imgs[0] == (tuple(range(4)), (0,) * 4)
    for gi, gen in enumerate(g.generators):
        assert imgs[gen] == (hom.perms[gi], hom.decors[gi])


def test_hom_json_shape():
    g = builtin_group("V4")
    hom = sample_hom(g, V4A, 3, random.Random(11))
    data = hom.to_json()
    assert set(data) == {"perm", "decor"}
    assert len(data["perm"]) == len(g.generators)
    assert all(len(p) == 3 for p in data["perm"])
    assert all(len(d) == 3 for d in data["decor"])

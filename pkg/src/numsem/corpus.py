"""Reproducible random semigroup instances for property testing.

Instances are drawn from a seeded generator and reduced to their minimal
generating sets, so a fixed seed always yields the same corpus.
"""

from __future__ import annotations

import math
import random

from ._bitset import closure_bits, shift_sum, window_mask, bits_to_tuple
from .core import NumericalSemigroup, build

__all__ = ["minimalize", "random_corpus", "random_semigroup", "symmetric_pairs"]


def minimalize(values: list[int]) -> tuple[int, ...]:
    """Minimal generating set of the submonoid generated by ``values``."""
    vals = sorted(set(values))
    limit = max(vals)
    mask = window_mask(limit)
    bits = closure_bits(vals, limit)
    level1 = bits & ~1
    level2 = shift_sum(level1, vals, mask)
    return bits_to_tuple(level1 & ~level2)


def random_semigroup(
    rng: random.Random,
    e_min: int = 10,
    e_max: int = 40,
    span: int = 6,
    picks: tuple[int, int] = (2, 9),
) -> NumericalSemigroup:
    """One random semigroup: multiplicity in [e_min, e_max], extra generators
    drawn from (e, span*e], topped up until the gcd is 1, then minimalized."""
    e = rng.randint(e_min, e_max)
    count = rng.randint(*picks)
    pool = [rng.randint(e + 1, span * e) for _ in range(count)]
    values = [e] + pool
    while math.gcd(*values) != 1:
        values.append(rng.randint(e + 1, span * e))
    return build(minimalize(values))


def random_dense_semigroup(
    rng: random.Random, e_min: int = 10, e_max: int = 30
) -> NumericalSemigroup:
    """A random semigroup with many generators packed just above e.

    Dense instances keep the Apery orders low, which exercises the small-d
    side of the filtration (empty third stratum, near-maximal embedding
    dimension).
    """
    e = rng.randint(e_min, e_max)
    count = rng.randint(max(2, e // 2), e - 1)
    pool = rng.sample(range(e + 1, 3 * e), min(count, 2 * e - 2))
    values = [e] + pool
    while math.gcd(*values) != 1:
        values.append(rng.randint(e + 1, 3 * e))
    return build(minimalize(values))


def random_corpus(
    seed: int, count: int, dense_every: int = 0, **kwargs
) -> list[NumericalSemigroup]:
    """A fixed-seed corpus of ``count`` random semigroups.

    With ``dense_every`` = n > 0, every n-th instance is drawn dense.
    """
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        if dense_every and idx % dense_every == dense_every - 1:
            out.append(random_dense_semigroup(rng))
        else:
            out.append(random_semigroup(rng, **kwargs))
    return out


def symmetric_pairs(limit: int = 9) -> list[NumericalSemigroup]:
    """All two-generator semigroups with multiplicity <= limit.

    Two-generator semigroups are always symmetric, which makes them a cheap
    stock of Gorenstein instances.
    """
    out = []
    for a in range(2, limit + 1):
        for b in range(a + 1, 3 * a):
            if math.gcd(a, b) == 1:
                out.append(build([a, b]))
    return out

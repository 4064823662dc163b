"""Shared inputs for the test suite.

The generated corpus is built from polynomials of a single random base
matrix: powers of one matrix always commute, so {p(B), q(B), ...} is a valid
family by construction, and rejection sampling keeps entries small and rows
nonzero. Everything is seeded, so the corpus is identical on every run.
"""

from __future__ import annotations

import random
from functools import lru_cache

from kgraphsem import KGraphPresentation
from kgraphsem import fixtures
from kgraphsem.model import Tri, is_cofinal

MAX_ENTRY = 3
FAMILY_COUNT = 200
SEED = 20240815

# generated families have up to 8 vertices, so the direct cofinality
# cross-check needs a drain degree of at least 7 per coordinate
FAMILY_DIRECT_BOUND = 8


def _matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _poly(base, coeffs):
    """coeffs[0] * I + coeffs[1] * B + coeffs[2] * B^2 + ..."""
    n = len(base)
    out = [[0] * n for _ in range(n)]
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in coeffs:
        for i in range(n):
            for j in range(n):
                out[i][j] += c * power[i][j]
        power = _matmul(power, base)
    return out


def _random_base(rng: random.Random, n: int):
    if rng.random() < 0.6:
        # permutation base: all powers stay 0/1
        perm = list(range(n))
        rng.shuffle(perm)
        return [[1 if j == perm[i] else 0 for j in range(n)] for i in range(n)]
    base = [[0] * n for _ in range(n)]
    for i in range(n):
        base[i][rng.randrange(n)] = 1
        if rng.random() < 0.3:
            base[i][rng.randrange(n)] += 1
    return base


def _try_family(rng: random.Random) -> KGraphPresentation | None:
    n = rng.randint(1, 8)
    k = rng.choice((1, 2, 3))
    base = _random_base(rng, n)
    mats = []
    for _ in range(k):
        degree = rng.randint(1, 3)
        coeffs = [rng.choice((0, 0, 1, 1, 2)) for _ in range(degree)]
        if not any(coeffs):
            coeffs[rng.randrange(degree)] = 1
        mat = _poly(base, coeffs)
        if any(x > MAX_ENTRY for row in mat for x in row):
            return None
        if any(not any(row) for row in mat):
            return None
        mats.append(tuple(tuple(row) for row in mat))
    return KGraphPresentation(
        k=k,
        vertices=tuple(f"v{j}" for j in range(n)),
        matrices=tuple(mats),
    )


@lru_cache(maxsize=1)
def generated_families() -> tuple[KGraphPresentation, ...]:
    rng = random.Random(SEED)
    out = []
    attempts = 0
    while len(out) < FAMILY_COUNT:
        attempts += 1
        if attempts > 200_000:
            raise AssertionError("family generation stalled")
        g = _try_family(rng)
        if g is not None:
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=1)
def named_corpus() -> tuple[KGraphPresentation, ...]:
    return (
        fixtures.o2(),
        fixtures.circle1(),
        fixtures.hereditary2(),
        fixtures.funnel2(),
        fixtures.funnel3(),
        fixtures.funnel2c(),
        fixtures.torus(1, 1),
        fixtures.torus(2, 3),
        fixtures.torus(2, 1, 3),
        fixtures.cycle(1, 4),
        fixtures.cycle(2, 3),
        fixtures.cycle(3, 2),
    )


@lru_cache(maxsize=1)
def cofinal_corpus() -> tuple[KGraphPresentation, ...]:
    return tuple(g for g in named_corpus() if is_cofinal(g)[0] is Tri.YES)


@lru_cache(maxsize=1)
def oracle_corpus() -> tuple[KGraphPresentation, ...]:
    # default-box tables stay cheap for up to four vertices (universe 7^4)
    return tuple(g for g in named_corpus() if g.size <= 4)

"""Seeded random term generation for property suites and experiments.

Only scattered terms are produced.  Sizes stay small by construction:
bounded depth, bounded branching, ordinal levels drawn from a fixed
pool of representable limits and small offsets.
"""

from __future__ import annotations

import random

from . import ordinal as ord_mod
from .ordinal import Ordinal
from .term import EMPTY, Glue, MaxFn, MinFn, ONE, Omega, PglSet, Term, Wedge

LIMIT_POOL = (
    Ordinal(((1, 1),), 0),  # w
    Ordinal(((1, 2),), 0),  # w*2
    Ordinal(((2, 1),), 0),  # w^2
)


def random_ordinal(rng: random.Random, allow_zero: bool = True) -> Ordinal:
    roll = rng.random()
    if roll < 0.45:
        n = rng.randint(0 if allow_zero else 1, 4)
        return ord_mod.from_int(max(n, 0 if allow_zero else 1))
    base = rng.choice(LIMIT_POOL)
    return Ordinal(base.terms, rng.randint(0, 3))


def random_successor(rng: random.Random) -> Ordinal:
    o = random_ordinal(rng)
    return o if o.is_successor else ord_mod.succ(o)


def random_term(rng: random.Random, depth: int = 5) -> Term:
    if depth <= 0:
        return rng.choice(
            [EMPTY, ONE, MinFn(random_successor(rng)), MaxFn(random_ordinal(rng))]
        )
    roll = rng.random()
    if roll < 0.18:
        return rng.choice([EMPTY, ONE])
    if roll < 0.30:
        return MinFn(random_successor(rng))
    if roll < 0.42:
        return MaxFn(random_ordinal(rng))
    if roll < 0.58:
        width = rng.randint(2, 3)
        return Glue([random_term(rng, depth - 1) for _ in range(width)])
    if roll < 0.72:
        return Omega(random_term(rng, depth - 1))
    if roll < 0.88:
        width = rng.randint(1, 2)
        return PglSet({random_term(rng, depth - 1) for _ in range(width)})
    return _random_wedge(rng, depth)


def _random_wedge(rng: random.Random, depth: int) -> Term:
    families: set[tuple[Term, ...]] = set()
    for _ in range(rng.randint(1, 2)):
        fam = PglSet({random_term(rng, depth - 1) for _ in range(rng.randint(1, 2))})
        families.add(fam.members)
    diagonal = [random_term(rng, depth - 1) for _ in range(rng.randint(0, 2))]
    return Wedge(list(families), diagonal)


def random_nonempty_members(rng: random.Random, depth: int = 3, width: int = 3) -> list[Term]:
    out = []
    for _ in range(rng.randint(1, width)):
        t = random_term(rng, depth)
        if t != EMPTY:
            out.append(t)
    return out or [ONE]

"""Exhaustive small-poset catalogs and deterministic labeling batteries.

Posets on n elements are generated up to isomorphism by enumerating every
subset of the upward pairs (i, j), i < j, as a candidate cover relation,
closing transitively, and deduplicating by canonical form.  Every
isomorphism class contains a representative whose order respects the index
order (take any linear extension), so this enumeration is exhaustive.

Labelings per poset: one natural, one reversed, plus a seeded batch of
pseudo-random injections, so suites exercise mixed labelings reproducibly.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from posetpoly.posets import (
    LabeledPoset,
    Poset,
    natural_labeling,
    reversed_labeling,
    unlabeled_canonical_key,
)

__all__ = [
    "all_posets",
    "posets_up_to",
    "standard_labelings",
    "labeled_catalog",
]

_LABEL_SEED = 20260815


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[Poset, ...]:
    """All posets with n elements, one representative per isomorphism class."""
    if n == 0:
        return (Poset([]),)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen_relations: set[tuple[int, ...]] = set()
    by_key: dict[tuple, Poset] = {}
    for picks in itertools.product((False, True), repeat=len(pairs)):
        direct = [0] * n
        for chosen, (i, j) in zip(picks, pairs):
            if chosen:
                direct[i] |= 1 << j
        closed = _close_upward(direct)
        relation = tuple(closed)
        if relation in seen_relations:
            continue
        seen_relations.add(relation)
        poset = Poset(closed)
        key = unlabeled_canonical_key(poset)
        if key not in by_key:
            by_key[key] = poset
    return tuple(by_key[key] for key in sorted(by_key))


def _close_upward(direct: list[int]) -> list[int]:
    # all arcs go from smaller to larger index, so one back-to-front pass closes
    closed = list(direct)
    for i in range(len(closed) - 1, -1, -1):
        reach = closed[i]
        j_mask = closed[i]
        while j_mask:
            low = j_mask & -j_mask
            reach |= closed[low.bit_length() - 1]
            j_mask ^= low
        closed[i] = reach
    return closed


def posets_up_to(max_size: int) -> list[Poset]:
    return [p for n in range(max_size + 1) for p in all_posets(n)]


def standard_labelings(p: Poset, random_count: int = 3, seed: int = _LABEL_SEED) -> list[tuple[int, ...]]:
    """Natural, reversed, then random_count seeded random labelings."""
    batch = [natural_labeling(p), reversed_labeling(p)]
    rng = random.Random(f"{seed}:{p.above}")
    for _ in range(random_count):
        labels = list(range(1, p.size + 1))
        rng.shuffle(labels)
        batch.append(tuple(labels))
    return batch


def labeled_catalog(max_size: int, random_count: int = 3) -> list[LabeledPoset]:
    """Every catalog poset of size <= max_size under the standard labelings."""
    out = []
    for p in posets_up_to(max_size):
        for omega in standard_labelings(p, random_count):
            out.append(LabeledPoset(p, omega))
    return out

"""Elementary moves on Seifert invariants and random instance generation.

The moves are the ones that do not change the fibration up to
fiber-preserving diffeomorphism: permuting pairs, inserting or deleting a
``(1, 0)`` pair, and trading ``a`` between two pairs via
``(ai, bi), (aj, bj) -> (ai, bi + ai), (aj, bj - aj)``.
"""

from __future__ import annotations

import random
from math import gcd

from .seifert import SeifertInvariants

__all__ = [
    "permute",
    "insert_trivial",
    "delete_trivial",
    "shift",
    "random_move",
    "random_move_sequence",
    "random_invariants",
]


def permute(s: SeifertInvariants, order) -> SeifertInvariants:
    order = list(order)
    if sorted(order) != list(range(len(s.pairs))):
        raise ValueError(f"{order} is not a permutation of {len(s.pairs)} pairs")
    return SeifertInvariants(s.genus, tuple(s.pairs[i] for i in order))


def insert_trivial(s: SeifertInvariants, index: int | None = None) -> SeifertInvariants:
    pairs = list(s.pairs)
    pairs.insert(len(pairs) if index is None else index, (1, 0))
    return SeifertInvariants(s.genus, tuple(pairs))


def delete_trivial(s: SeifertInvariants, index: int) -> SeifertInvariants:
    if s.pairs[index] != (1, 0):
        raise ValueError(f"pair {index} is {s.pairs[index]}, not (1,0)")
    return SeifertInvariants(s.genus, s.pairs[:index] + s.pairs[index + 1:])


def shift(s: SeifertInvariants, i: int, j: int, times: int = 1) -> SeifertInvariants:
    """Add ``times * ai`` to ``bi`` and subtract ``times * aj`` from ``bj``."""
    if i == j:
        raise ValueError("shift needs two distinct pairs")
    pairs = list(s.pairs)
    ai, bi = pairs[i]
    aj, bj = pairs[j]
    pairs[i] = (ai, bi + times * ai)
    pairs[j] = (aj, bj - times * aj)
    return SeifertInvariants(s.genus, tuple(pairs))


def random_move(s: SeifertInvariants, rng: random.Random) -> SeifertInvariants:
    n = len(s.pairs)
    kinds = ["insert"]
    if n >= 2:
        kinds += ["permute", "shift", "shift"]
    if (1, 0) in s.pairs:
        kinds.append("delete")
    kind = rng.choice(kinds)
    if kind == "insert":
        return insert_trivial(s, rng.randint(0, n))
    if kind == "delete":
        idx = [k for k, p in enumerate(s.pairs) if p == (1, 0)]
        return delete_trivial(s, rng.choice(idx))
    if kind == "permute":
        order = list(range(n))
        rng.shuffle(order)
        return permute(s, order)
    i, j = rng.sample(range(n), 2)
    return shift(s, i, j, rng.choice([-2, -1, 1, 2]))


def random_move_sequence(s, rng, length):
    """Apply ``length`` random moves and return every intermediate state."""
    out = [s]
    for _ in range(length):
        s = random_move(s, rng)
        out.append(s)
    return out


def random_invariants(
    rng: random.Random,
    max_pairs: int = 5,
    max_a: int = 12,
    max_b: int | None = None,
    genus_range: tuple[int, int] = (-3, 3),
) -> SeifertInvariants:
    """Draw valid invariants with up to ``max_pairs`` pairs and ``a <= max_a``."""
    if max_b is None:
        max_b = 2 * max_a
    pairs = []
    for _ in range(rng.randint(0, max_pairs)):
        a = rng.randint(1, max_a)
        while True:
            b = rng.randint(-max_b, max_b)
            if a == 1 or gcd(a, b) == 1:
                break
        pairs.append((a, b))
    return SeifertInvariants(rng.randint(*genus_range), tuple(pairs))

"""Shared test utilities: random vectors, independent oracles, timing fits."""

from __future__ import annotations

import itertools
import math
import random

from lorenzlinks import BraidWord, LorenzVector


def random_normalized_vector(
    rng: random.Random,
    max_p: int = 30,
    max_r: int = 12,
    max_k: int = 4,
    k: int | None = None,
) -> LorenzVector:
    """A uniform-ish normalized vector: r strictly increasing from 2, s_k >= 2."""
    while True:
        kk = k if k is not None else rng.randint(1, max_k)
        if kk > max_r - 1:
            continue
        rs = sorted(rng.sample(range(2, max_r + 1), kk))
        ss = [1] * (kk - 1) + [2]
        budget = max_p - sum(ss)
        if budget < 0:
            continue
        for _ in range(rng.randint(0, budget)):
            ss[rng.randrange(kk)] += 1
        entries = [r for r, s in zip(rs, ss) for _ in range(s)]
        return LorenzVector(tuple(entries))


def rewrite_neighbors(word: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Single applications of the braid relations, in both directions."""
    out = []
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) >= 2:
            out.append(word[:k] + (b, a) + word[k + 2:])
    for k in range(len(word) - 2):
        a, b, c = word[k], word[k + 1], word[k + 2]
        if a == c and abs(a - b) == 1:
            out.append(word[:k] + (b, a, b) + word[k + 3:])
    return out


def rewrite_classes(strands: int, length: int) -> list[set[tuple[int, ...]]]:
    """Partition of all positive words of one length by braid-relation closure."""
    words = list(itertools.product(range(1, strands), repeat=length))
    unseen = set(words)
    classes = []
    while unseen:
        seed = unseen.pop()
        cls = {seed}
        stack = [seed]
        while stack:
            w = stack.pop()
            for nb in rewrite_neighbors(w):
                if nb not in cls:
                    cls.add(nb)
                    stack.append(nb)
        unseen -= cls
        classes.append(cls)
    return classes


def random_rewrite(rng: random.Random, word: BraidWord, steps: int = 40) -> BraidWord:
    """A word equal to the input as a braid element, via random relation moves."""
    letters = word.letters
    for _ in range(steps):
        nbs = rewrite_neighbors(letters)
        if not nbs:
            break
        letters = rng.choice(nbs)
    return BraidWord(word.strands, letters)


def braid_index_k1(r: int, s: int) -> int:
    return min(r, s)


def braid_index_k2(r1: int, s1: int, r2: int, s2: int) -> int:
    if r1 <= s2:
        return min(s2, r2)
    return min(s1 + s2, r1)


def fitted_exponent(sizes: list[int], times: list[float]) -> float:
    """Least-squares slope of log(time) against log(size)."""
    xs = [math.log(s) for s in sizes]
    ys = [math.log(max(t, 1e-9)) for t in times]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
        (x - mx) ** 2 for x in xs
    )

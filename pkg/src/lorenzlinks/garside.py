"""
Left-greedy normal form for positive braid words, and the word problem.

A canonical factor is a permutation braid, stored as its Permutation.  Every
positive braid has a unique factorisation D_1 D_2 ... D_k into nonidentity
permutation braids that is left weighted: for each adjacent pair (A, B), no
generator can be moved from the front of B into A while keeping A a
permutation braid.  Comparing factor sequences therefore decides equality of
positive words in the braid group.

The left-weighting test is the descent criterion: (A, B) is left weighted iff
S(B) is contained in F(A), where S(X) is the set of sigma_i dividing X on the
left (the descents of X) and F(X) the set dividing it on the right (the
descents of X^{-1}).  When the pair is not left weighted, the transferable
part of B is the weak-order meet of B with the right complement of A, the
permutation A^{-1} Delta.

Since every word here is positive, no Delta^{-k} prefix bookkeeping is
needed: a normal form is just the strand count and the factor tuple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .braid import (
    BraidWord,
    Permutation,
    bracket,
    concat_all,
    permutation_braid_word,
    power,
)


def starting_set(p: Permutation) -> frozenset[int]:
    """Generators sigma_i that divide the permutation braid of p on the left."""
    return p.descents


def finishing_set(p: Permutation) -> frozenset[int]:
    """Generators sigma_i that divide the permutation braid of p on the right."""
    return p.inverse.descents


def right_complement(p: Permutation) -> Permutation:
    """The permutation c with p.then(c) = Delta and additive lengths."""
    n = p.size
    inv = p.inverse.image
    return Permutation(tuple(n + 1 - x for x in inv))


def meet(u: Permutation, v: Permutation) -> Permutation:
    """
    Greatest common left divisor of two permutation braids (weak-order meet).

    Strips common left-dividing generators until none remain; any common left
    divisor generator divides the meet, so greedy stripping is exact.
    """
    if u.size != v.size:
        raise ValueError("size mismatch")
    n = u.size
    u_img, v_img = list(u.image), list(v.image)
    letters: list[int] = []
    while True:
        common = 0
        for i in range(1, n):
            if u_img[i - 1] > u_img[i] and v_img[i - 1] > v_img[i]:
                common = i
                break
        if not common:
            break
        letters.append(common)
        i = common
        u_img[i - 1], u_img[i] = u_img[i], u_img[i - 1]
        v_img[i - 1], v_img[i] = v_img[i], v_img[i - 1]
    return Permutation.from_letters(n, letters)


def left_slide(a: Permutation, b: Permutation) -> Optional[tuple[Permutation, Permutation]]:
    """
    Make the pair (a, b) left weighted by moving the head of b into a.

    Returns the new pair, or None when the pair is already left weighted.
    The moved part is c = meet(b, right_complement(a)); the result is
    (a.then(c), c^{-1}.then(b)) and the second entry may be the identity.
    """
    if b.descents <= a.inverse.descents:
        return None
    c = meet(b, right_complement(a))
    return a.then(c), c.inverse.then(b)


def is_left_weighted(a: Permutation, b: Permutation) -> bool:
    return b.descents <= a.inverse.descents


class _Node:
    __slots__ = ("perm", "prev", "next")

    def __init__(self, perm: Permutation):
        self.perm = perm
        self.prev: Optional[_Node] = None
        self.next: Optional[_Node] = None


def _renormalize(factors: Iterable[Permutation]) -> tuple[Permutation, ...]:
    """
    Left-weight an arbitrary factor sequence.

    Factors live in a doubly linked list; a worklist holds the left nodes of
    pairs that may violate left-weighting.  A successful slide grows the left
    factor and shrinks (possibly empties) the right one, so only the two
    neighbouring pairs need rechecking.  Every slide strictly moves letters
    toward the front, which bounds the total work.
    """
    head: Optional[_Node] = None
    tail: Optional[_Node] = None
    for p in factors:
        if p.is_identity():
            continue
        node = _Node(p)
        if tail is None:
            head = tail = node
        else:
            tail.next = node
            node.prev = tail
            tail = node

    work: deque[_Node] = deque()
    node = head
    while node is not None and node.next is not None:
        work.append(node)
        node = node.next

    while work:
        left = work.popleft()
        if left.perm is None:  # unlinked earlier
            continue
        right = left.next
        if right is None:
            continue
        slid = left_slide(left.perm, right.perm)
        if slid is None:
            continue
        left.perm, moved = slid
        if moved.is_identity():
            nxt = right.next
            right.perm = None  # mark unlinked
            left.next = nxt
            if nxt is not None:
                nxt.prev = left
                work.append(left)
        else:
            right.perm = moved
            work.append(right)
        if left.prev is not None:
            work.append(left.prev)

    out = []
    node = head
    while node is not None:
        out.append(node.perm)
        node = node.next
    return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy normal form: strand count plus the canonical factor tuple."""

    strands: int
    factors: tuple[Permutation, ...]

    @property
    def letter_count(self) -> int:
        return sum(f.inversions() for f in self.factors)

    def word(self) -> BraidWord:
        return concat_all(
            self.strands, (permutation_braid_word(f) for f in self.factors)
        )

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)


def normal_form(w: BraidWord) -> NormalForm:
    """The unique left-weighted factorisation of a positive word."""
    simples = (Permutation.simple(i, w.strands) for i in w.letters)
    return NormalForm(w.strands, _renormalize(simples))


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} != {b.strands}")
    return NormalForm(a.strands, _renormalize(a.factors + b.factors))


def nf_power(a: NormalForm, k: int) -> NormalForm:
    """k-th power computed factor-wise, by repeated squaring of normal forms."""
    if k < 0:
        raise ValueError("negative powers of positive braids do not exist")
    result = NormalForm(a.strands, ())
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        base_needed = k > 1
        if base_needed:
            base = multiply(base, base)
        k >>= 1
    return result


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two positive words represent the same element of the braid group."""
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} != {b.strands}")
    if len(a) != len(b):
        return False  # positive words admit no cancellation
    return normal_form(a) == normal_form(b)


def periodic_word(t: int, q: int) -> BraidWord:
    """The word delta^q in B_t, where delta = sigma_1 ... sigma_{t-1}."""
    if t < 2:
        raise ValueError("periodic words need at least two strands")
    return power(bracket(1, t, t), q)


def central_power(t: int, q: int) -> NormalForm:
    """
    Normal form of delta^(t*q), the q-th power of the centre generator of B_t.

    delta^t equals Delta^2, so the factor sequence is 2q copies of the half
    twist, which is already left weighted.
    """
    if t < 2:
        raise ValueError("periodic words need at least two strands")
    if q < 0:
        raise ValueError("negative powers of positive braids do not exist")
    return NormalForm(t, (Permutation.longest(t),) * (2 * q))

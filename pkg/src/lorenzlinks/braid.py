"""
Positive braid words and the permutations they induce.

Conventions used throughout the package:

- Strand positions are numbered 1..n, and a braid word is a sequence of
  generator indices, letter i standing for sigma_i, the crossing of the
  strands occupying positions i and i+1.  Only positive words exist here, so
  the letter count of a word is its crossing number and no cancellation is
  ever possible.
- Words act on positions left to right.  A Permutation records where each
  strand ends up: image[a-1] is the end position of the strand that starts
  at position a.  Under this convention perm(a * b) = perm(a).then(perm(b)).
- A permutation braid is a positive braid in which any two strands cross at
  most once; it is determined by its permutation, and its positive words are
  exactly the reduced words.  permutation_braid_word picks a deterministic
  reduced word (strands inserted by increasing start position, each emitting
  a descending run of letters).

Text format for words: a header token "n=<strands>" followed by whitespace
separated letters, e.g. "n=3 1 2 1" for sigma_1 sigma_2 sigma_1 in B_3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in image form: image[a-1] = pi(a)."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.image!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition (i, i+1), the permutation of sigma_i."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for {n} strands")
        image = list(range(1, n + 1))
        image[i - 1], image[i] = image[i], image[i - 1]
        return cls(tuple(image))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing permutation, i.e. the half twist Delta."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[int]) -> "Permutation":
        """Trace the strands of a positive word given by its letters."""
        # arrangement[pos-1] = label of the strand currently at position pos
        arrangement = list(range(1, n + 1))
        for i in letters:
            arrangement[i - 1], arrangement[i] = arrangement[i], arrangement[i - 1]
        image = [0] * n
        for pos, label in enumerate(arrangement, start=1):
            image[label - 1] = pos
        return cls(tuple(image))

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, a: int) -> int:
        return self.image[a - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """The permutation of 'self followed by other' (braid concatenation)."""
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.image[x - 1] for x in self.image))

    @cached_property
    def inverse(self) -> "Permutation":
        image = [0] * self.size
        for a, b in enumerate(self.image, start=1):
            image[b - 1] = a
        return Permutation(tuple(image))

    @cached_property
    def descents(self) -> frozenset[int]:
        """Letters i with pi(i) > pi(i+1): the sigma_i dividing this braid on the left."""
        img = self.image
        return frozenset(i for i in range(1, len(img)) if img[i - 1] > img[i])

    def inversions(self) -> int:
        img = self.image
        n = len(img)
        return sum(1 for a in range(n) for b in range(a + 1, n) if img[a] > img[b])

    def is_identity(self) -> bool:
        return all(x == a for a, x in enumerate(self.image, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        out = []
        for a in range(1, self.size + 1):
            if seen[a - 1]:
                continue
            cycle = []
            x = a
            while not seen[x - 1]:
                seen[x - 1] = True
                cycle.append(x)
                x = self(x)
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word: a strand count and a sequence of letters."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for i in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(
                    f"letter {i} out of range 1..{self.strands - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def permutation(self) -> Permutation:
        return permutation_of_word(self)

    def __str__(self) -> str:
        return format_word(self)


def bracket(v: int, w: int, strands: int) -> BraidWord:
    """
    The generator run between positions v and w.

    Ascending, bracket(v, w) with v < w, is sigma_v sigma_{v+1} ... sigma_{w-1};
    descending, with v > w, is sigma_{v-1} ... sigma_{w+1} sigma_w.  Either way
    the word has |v - w| letters and moves one strand across the interval.
    """
    if not (1 <= v <= strands and 1 <= w <= strands):
        raise ValueError(f"bracket endpoints {v},{w} out of range 1..{strands}")
    if v == w:
        raise ValueError("bracket endpoints must differ")
    if v < w:
        letters = tuple(range(v, w))
    else:
        letters = tuple(range(v - 1, w - 1, -1))
    return BraidWord(strands, letters)


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} != {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def power(a: BraidWord, k: int) -> BraidWord:
    if k < 0:
        raise ValueError("negative powers of positive words do not exist")
    return BraidWord(a.strands, a.letters * k)


def concat_all(strands: int, words: Iterable[BraidWord]) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise ValueError(f"strand counts differ: {w.strands} != {strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def permutation_of_word(w: BraidWord) -> Permutation:
    return Permutation.from_letters(w.strands, w.letters)


def cycle_count(p: Permutation) -> int:
    """Number of cycles; the component count of the closure of any word inducing p."""
    return len(p.cycles())


def flip_word(w: BraidWord) -> BraidWord:
    """Replace each letter i by n-i: conjugation by the half twist Delta."""
    n = w.strands
    return BraidWord(n, tuple(n - i for i in w.letters))


def permutation_braid_word(p: Permutation) -> BraidWord:
    """
    A deterministic reduced positive word for the permutation braid of p.

    Strands are inserted in increasing start position; strand a enters at
    position a and descends past every already placed strand b < a with
    p(b) > p(a), emitting a descending run of letters.  The word length is the
    inversion count of p, so any two strands cross at most once.
    """
    n = p.size
    letters: list[int] = []
    for a in range(2, n + 1):
        crossings = sum(1 for b in range(1, a) if p(b) > p(a))
        letters.extend(range(a - 1, a - 1 - crossings, -1))
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    if not w.letters:
        return f"n={w.strands}"
    return f"n={w.strands} " + " ".join(str(i) for i in w.letters)


def parse_word(text: str) -> BraidWord:
    """Parse the "n=<strands> i j k ..." text format."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("n="):
        raise ParseError(f"word must start with a strand header n=<int>: {text!r}")
    try:
        strands = int(tokens[0][2:])
        letters = tuple(int(t) for t in tokens[1:])
    except ValueError as exc:
        raise ParseError(f"malformed braid word {text!r}") from exc
    try:
        return BraidWord(strands, letters)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

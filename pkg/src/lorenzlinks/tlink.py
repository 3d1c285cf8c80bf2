"""
T-links: repeated positive twisting of torus braids.

T((r_1,s_1),...,(r_k,s_k)) is the closure of the r_k-strand word
prod_i (sigma_1 ... sigma_{r_i-1})^{s_i}, with 2 <= r_1 <= ... <= r_k and
s_i >= 1.  The run-length pairs of a Lorenz vector transfer verbatim to
T-parameters and back, so T-links and Lorenz links coincide; the X, Y, Z
words built here realise that identity inside the braid group and are checked
against the T-braid word through the normal-form engine.

k is not an invariant of the link: adjacent pairs with equal r merge, and the
torus rewrite (see torus_simplify) can change k.  Canonical parameters have
strictly increasing r.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import BraidWord, bracket, concat_all, power
from .errors import ParseError
from .lorenz import LorenzVector, _require_normalized, dual_vector, trip_number


@dataclass(frozen=True)
class TParams:
    """Pairs ((r_1,s_1),...,(r_k,s_k)) with r nondecreasing, r_1 >= 2, s_i >= 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("empty T-parameters")
        for r, s in self.pairs:
            if r < 2:
                raise ValueError(f"r must be at least 2: {self.pairs}")
            if s < 1:
                raise ValueError(f"s must be at least 1: {self.pairs}")
        rs = [r for r, _ in self.pairs]
        if any(a > b for a, b in zip(rs, rs[1:])):
            raise ValueError(f"r values must be nondecreasing: {self.pairs}")

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def r_max(self) -> int:
        return self.pairs[-1][0]

    @property
    def is_canonical(self) -> bool:
        rs = [r for r, _ in self.pairs]
        return all(a < b for a, b in zip(rs, rs[1:]))

    def canonical(self) -> "TParams":
        """Merge adjacent pairs with equal r (their s values add)."""
        merged: list[tuple[int, int]] = []
        for r, s in self.pairs:
            if merged and merged[-1][0] == r:
                merged[-1] = (r, merged[-1][1] + s)
            else:
                merged.append((r, s))
        return TParams(tuple(merged))

    def __str__(self) -> str:
        return format_tparams(self)


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_tparams(text: str) -> TParams:
    """Parse "(r,s)(r,s)..." text."""
    body = text.strip()
    pairs = [(int(r), int(s)) for r, s in _PAIR.findall(body)]
    if not pairs or _PAIR.sub("", body).strip():
        raise ParseError(f"bad T-parameters {text!r}")
    try:
        return TParams(tuple(pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_tparams(t: TParams) -> str:
    return "".join(f"({r},{s})" for r, s in t.pairs)


def tbraid_word(t: TParams) -> BraidWord:
    """The word prod_i [1, r_i]^{s_i} on r_k strands; length sum s_i (r_i - 1)."""
    n = t.r_max
    return concat_all(n, (power(bracket(1, r, n), s) for r, s in t.pairs))


def vector_to_tparams(v: LorenzVector) -> TParams:
    """Run-length pairs of a normalized vector, read as T-parameters."""
    _require_normalized(v)
    return TParams(v.rle)


def tparams_to_vector(t: TParams) -> LorenzVector:
    """The Lorenz vector whose run-length form is the (canonical) parameters."""
    entries: list[int] = []
    for r, s in t.canonical().pairs:
        entries.extend([r] * s)
    return LorenzVector(tuple(entries))


def x_word(v: LorenzVector) -> BraidWord:
    """The LL part on r_k strands: prod_{i<=p-t} [1, d_i]."""
    t = trip_number(v)
    n = v.dp
    return concat_all(n, (bracket(1, v.d[i - 1], n) for i in range(1, v.p - t + 1)))


def y_word(v: LorenzVector) -> BraidWord:
    """The LR part on r_k strands: [1, t]^t."""
    t = trip_number(v)
    return power(bracket(1, t, v.dp), t)


def z_word(v: LorenzVector) -> BraidWord:
    """
    The RL/RR part: Z_t Z_{t-1} ... Z_1 with Z_{t-i} = [t-i, d_{p-i} - i].

    A factor with equal endpoints crosses nothing and contributes the empty
    word (this happens exactly when the corresponding strand has d = t).
    """
    t = trip_number(v)
    n = v.dp
    parts = []
    for i in range(t):
        lo, hi = t - i, v.d[v.p - i - 1] - i
        if lo != hi:
            parts.append(bracket(lo, hi, n))
    return concat_all(n, parts)


def dual_tparams(t: TParams) -> TParams:
    """
    The dual parameters: rbar_j = s_k + ... + s_{k-j+1},
    sbar_j = r_{k-j+1} - r_{k-j} (r_0 = 0).  Requires s_k >= 2 so that the
    dual again has r_1 >= 2; both parameter lists close to the same link.
    """
    t = t.canonical()
    if t.pairs[-1][1] < 2:
        raise ValueError("dual needs s_k >= 2")
    return vector_to_tparams(dual_vector(tparams_to_vector(t)))


def braid_index(t: TParams) -> int:
    """
    The braid index of the T-link, straight from the parameters.

    With r_0 = rbar_0 = 0, i_0 = min{i : r_i >= rbar_{k-i}} and symmetrically
    j_0 for the dual; the index is min(r_{i_0}, rbar_{j_0}).  It equals the
    trip number of the corresponding Lorenz vector.
    """
    t = t.canonical()
    k = t.k
    r = [0] + [pr[0] for pr in t.pairs]
    s = [pr[1] for pr in t.pairs]
    r_bar = [0]
    acc = 0
    for j in range(1, k + 1):
        acc += s[k - j]
        r_bar.append(acc)
    i0 = min(i for i in range(1, k + 1) if r[i] >= r_bar[k - i])
    j0 = min(j for j in range(1, k + 1) if r_bar[j] >= r[k - j])
    return min(r[i0], r_bar[j0])


def torus_simplify(t: TParams) -> tuple[TParams, bool]:
    """
    One application of the torus rewrite at the tail.

    When r_{k-1} <= s_k and every r_i divides s_i (i < k), the last pair
    (r_k, s_k) may be replaced by (s_k, r_k) without changing the link.
    Returns (params, True) when the rule applied, (input, False) otherwise.
    """
    t = t.canonical()
    r_prev = t.pairs[-2][0] if t.k >= 2 else 0
    r_k, s_k = t.pairs[-1]
    if s_k < 2 or r_prev > s_k or any(s % r for r, s in t.pairs[:-1]):
        return t, False
    rewritten = TParams(t.pairs[:-1] + ((s_k, r_k),))
    return rewritten.canonical(), True


def torus_simplify_all(t: TParams) -> TParams:
    """Apply the torus rewrite until it no longer helps (k = 1 is terminal)."""
    current = t.canonical()
    while current.k > 1:
        simplified, applied = torus_simplify(current)
        if not applied or simplified.k == current.k:
            break
        current = simplified
    return current

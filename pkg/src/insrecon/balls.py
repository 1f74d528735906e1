"""Insertion/deletion balls, their closed-form sizes, and pairwise intersections.

The t-insertion ball of x is the set of all length-(n+t) supersequences of x;
the deletion ball is the dual.  Everything here is exact, computed over packed
values, and returned through SeqSet so iteration order is always lexicographic.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

from .seqs import MAX_LEN, BitSeq, SequenceTooLongError, _mask


class SeqSet:
    """A deduplicated set of equal-length sequences with sorted iteration."""

    __slots__ = ("n", "_vals", "_sorted")

    def __init__(self, n: int, seqs: Iterable[BitSeq] = ()) -> None:
        vals = set()
        for s in seqs:
            if s.n != n:
                raise ValueError(f"member length {s.n} != common length {n}")
            vals.add(s.val)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_vals", frozenset(vals))
        object.__setattr__(self, "_sorted", None)

    @classmethod
    def _from_vals(cls, n: int, vals: Iterable[int]) -> "SeqSet":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "_vals", frozenset(vals))
        object.__setattr__(obj, "_sorted", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("SeqSet is immutable")

    def values(self) -> frozenset:
        """Packed member values (unordered)."""
        return self._vals

    def _ordered(self) -> Tuple[int, ...]:
        if self._sorted is None:
            object.__setattr__(self, "_sorted", tuple(sorted(self._vals)))
        return self._sorted

    def __len__(self) -> int:
        return len(self._vals)

    def __iter__(self) -> Iterator[BitSeq]:
        for v in self._ordered():
            yield BitSeq.from_int(v, self.n)

    def __contains__(self, s: BitSeq) -> bool:
        return isinstance(s, BitSeq) and s.n == self.n and s.val in self._vals

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeqSet) and self.n == other.n and self._vals == other._vals
        )

    def __hash__(self) -> int:
        return hash((self.n, self._vals))

    def __and__(self, other: "SeqSet") -> "SeqSet":
        self._check_len(other)
        return SeqSet._from_vals(self.n, self._vals & other._vals)

    def __or__(self, other: "SeqSet") -> "SeqSet":
        self._check_len(other)
        return SeqSet._from_vals(self.n, self._vals | other._vals)

    def __sub__(self, other: "SeqSet") -> "SeqSet":
        self._check_len(other)
        return SeqSet._from_vals(self.n, self._vals - other._vals)

    def isdisjoint(self, other: "SeqSet") -> bool:
        return self._vals.isdisjoint(other._vals)

    def _check_len(self, other: "SeqSet") -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")

    def __repr__(self) -> str:
        return f"SeqSet(n={self.n}, size={len(self._vals)})"

    def to_lines(self) -> str:
        """One sequence per line, lexicographically sorted, trailing newline."""
        if self.n == 0:
            return "\n" * len(self._vals)
        return "".join(format(v, f"0{self.n}b") + "\n" for v in self._ordered())

    @classmethod
    def parse_lines(cls, text: str, n: Optional[int] = None) -> "SeqSet":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if n is None:
            if not lines:
                raise ValueError("cannot infer length from empty input")
            n = len(lines[0])
        vals = set()
        for ln in lines:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise ValueError(f"bad sequence line: {ln!r}")
            vals.add(int(ln, 2))
        return cls._from_vals(n, vals)


def _insertion_vals(n: int, val: int, t: int) -> List[int]:
    """Distinct supersequence values of length n+t, each generated once.

    Canonical rule: build left to right and match greedily against x; a char
    equal to the next unmatched symbol of x always counts as matched, so an
    inserted char is forced to differ from it (trailing inserts are free once
    x is exhausted).  This is exactly one generation per distinct element.
    """
    out: List[int] = []

    def rec(i: int, r: int, acc: int) -> None:
        if i == n and r == 0:
            out.append(acc)
            return
        if i < n:
            nxt = (val >> (n - 1 - i)) & 1
            rec(i + 1, r, (acc << 1) | nxt)
            if r > 0:
                rec(i, r - 1, (acc << 1) | (1 - nxt))
        elif r > 0:
            rec(i, r - 1, acc << 1)
            rec(i, r - 1, (acc << 1) | 1)

    rec(0, t, 0)
    return out


def _deletion_vals(n: int, val: int, t: int) -> Set[int]:
    if t == 0:
        return {val}
    out: Set[int] = set()
    for positions in combinations(range(n), t):
        v = val
        m = n
        # delete from the right so earlier indices stay valid
        for i in reversed(positions):
            high = v >> (m - i)
            v = (high << (m - 1 - i)) | (v & _mask(m - 1 - i))
            m -= 1
        out.add(v)
    return out


def insertion_ball(x: BitSeq, t: int) -> SeqSet:
    """All supersequences of x of length n+t."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if x.n + t > MAX_LEN:
        raise SequenceTooLongError(f"ball length {x.n + t} exceeds MAX_LEN")
    return SeqSet._from_vals(x.n + t, _insertion_vals(x.n, x.val, t))


def deletion_ball(y: BitSeq, t: int) -> SeqSet:
    """All distinct subsequences of y of length n-t."""
    if t < 0 or t > y.n:
        raise ValueError(f"t must be in 0..{y.n}")
    return SeqSet._from_vals(y.n - t, _deletion_vals(y.n, y.val, t))


def ball_size_formula(n: int, t: int) -> int:
    """Closed-form |I_t(x)| = sum_{i<=t} C(n+t, i), independent of x."""
    if n < 0 or t < 0:
        raise ValueError("n, t must be >= 0")
    return sum(comb(n + t, i) for i in range(t + 1))


def nplus_formula(n: int, t: int) -> int:
    """Maximum |I_t(x) cap I_t(y)| over distinct pairs in {0,1}^n."""
    if n < 1 or t < 0:
        raise ValueError("require n >= 1, t >= 0")
    return sum(comb(n + t, i) * (1 - (-1) ** (t - i)) for i in range(t))


def nplus_ell_formula(n: int, t: int, ell: int) -> int:
    """Maximum |I_t cap I_t| over pairs at insertion distance >= ell."""
    if not 0 <= ell <= t:
        raise ValueError("require 0 <= ell <= t")
    total = 0
    for j in range(ell, t + 1):
        for i in range(t - j + 1):
            total += (
                comb(2 * j, j)
                * comb(t + j - i, 2 * j)
                * comb(n + t, i)
                * (-1) ** (t + j - i)
            )
    return total


def t_insertion_bound(n: int, t: int) -> int:
    """Upper bound on |I_t cap I_t| for pairs with |I_1 cap I_1| = 1."""
    if t < 2 or n < 3:
        raise ValueError("require t >= 2 and n >= 3")
    return ball_size_formula(n + 1, t - 1) + nplus_formula(n - 1, t - 1)


def intersect_balls(x: BitSeq, y: BitSeq, t: int) -> SeqSet:
    """Exact I_t(x) cap I_t(y) for equal-length x, y."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return insertion_ball(x, t) & insertion_ball(y, t)


class _BallCache:
    """Per-(sequence) insertion-ball value sets, reused across pair scans."""

    def __init__(self, n: int, t: int) -> None:
        self.n = n
        self.t = t
        self._cache: Dict[int, frozenset] = {}

    def get(self, val: int) -> frozenset:
        s = self._cache.get(val)
        if s is None:
            s = frozenset(_insertion_vals(self.n, val, self.t))
            self._cache[val] = s
        return s


def read_coverage(code: SeqSet, t: int) -> int:
    """Exact max |I_t(x) cap I_t(y)| over distinct codewords (no pair skipped)."""
    if len(code) < 2:
        raise ValueError("read coverage needs at least two codewords")
    cache = _BallCache(code.n, t)
    best = 0
    vals = sorted(code.values())
    for i, xv in enumerate(vals):
        bx = cache.get(xv)
        for yv in vals[i + 1 :]:
            size = len(bx & cache.get(yv))
            if size > best:
                best = size
    return best


def coverage_argmax(code: SeqSet, t: int) -> Tuple[int, BitSeq, BitSeq]:
    """(max intersection size, x, y) attaining the read coverage."""
    if len(code) < 2:
        raise ValueError("read coverage needs at least two codewords")
    cache = _BallCache(code.n, t)
    best = -1
    arg = None
    vals = sorted(code.values())
    for i, xv in enumerate(vals):
        bx = cache.get(xv)
        for yv in vals[i + 1 :]:
            size = len(bx & cache.get(yv))
            if size > best:
                best = size
                arg = (xv, yv)
    return best, BitSeq.from_int(arg[0], code.n), BitSeq.from_int(arg[1], code.n)


def _close_pairs(code: SeqSet, t1: int = 1) -> Set[Tuple[int, int]]:
    """Pairs of codewords whose 1-insertion balls meet (d_L <= 1)."""
    buckets: Dict[int, List[int]] = {}
    for xv in sorted(code.values()):
        for z in _insertion_vals(code.n, xv, t1):
            buckets.setdefault(z, []).append(xv)
    pairs: Set[Tuple[int, int]] = set()
    for members in buckets.values():
        if len(members) > 1:
            members = sorted(set(members))
            for a, b in combinations(members, 2):
                pairs.add((a, b))
    return pairs


def coverage_less_than(code: SeqSet, t: int, bound: int) -> bool:
    """Threshold query: is the read coverage < bound?

    For t = 1 and for t = 2 with bound > 6 (and n >= 4), only pairs whose
    1-insertion balls meet can reach the bound, so the scan is restricted to
    those; every skipped pair has intersection 0 (t=1) or at most 6 (t=2).
    Other cases fall back to the full scan with early exit.
    """
    if len(code) < 2:
        return True
    if bound < 1:
        return False
    if nplus_formula(code.n, t) < bound:
        return True
    cache = _BallCache(code.n, t)
    if t == 1 or (t == 2 and bound > 6 and code.n >= 4):
        candidates = _close_pairs(code)
    else:
        vals = sorted(code.values())
        candidates = combinations(vals, 2)
    for xv, yv in candidates:
        if len(cache.get(xv) & cache.get(yv)) >= bound:
            return False
    return True

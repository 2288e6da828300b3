"""Compositions, partitions, and the interval statistics behind the
closed chromatic-symmetric-function formulas.

Everything here is exact integer arithmetic on tuples.  A composition
of n is an ordered tuple of positive parts summing to n; a partition is
the same with parts weakly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def compositions(n: int) -> Iterator[Composition]:
    """Yield the 2**(n-1) compositions of n, each exactly once.

    The order is lexicographic on the cut-point bitmask: composition
    number m (0 <= m < 2**(n-1)), read as an (n-1)-bit string from the
    most significant end, has a part boundary after position j exactly
    when bit j of that string is set.  So n comes first, then (n-1, 1),
    and (1,)*n comes last.  The stream is deterministic, and a scan can
    resume from any mask index.
    """
    if n < 1:
        raise ValueError(f"compositions are indexed by n >= 1, got {n}")
    for mask in range(1 << (n - 1)):
        parts = []
        prev = 0
        for cut in range(1, n):
            if mask >> (n - 1 - cut) & 1:
                parts.append(cut - prev)
                prev = cut
        parts.append(n - prev)
        yield tuple(parts)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of n in descending lexicographic order.

    partitions(0) yields exactly the empty partition.  max_part, when
    given, caps the largest part.
    """
    if n < 0:
        raise ValueError(f"partitions are indexed by n >= 0, got {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_of(parts: Composition) -> Partition:
    """Underlying partition: the parts sorted weakly decreasing."""
    return tuple(sorted(parts, reverse=True))


def reverse(comp: Composition) -> Composition:
    return comp[::-1]


def reverse_tail(comp: Composition) -> Composition:
    """Fix the first part and reverse the rest.

    An involution on compositions that preserves both the underlying
    partition and composition_weight, and swaps the two split indices
    used by the chord-weight formula.
    """
    return comp[:1] + comp[:0:-1]


def composition_weight(comp: Composition) -> int:
    """First part times (part - 1) over the remaining parts.

    Zero exactly when some part after the first equals 1.
    """
    w = comp[0]
    for p in comp[1:]:
        if p == 1:
            return 0
        w *= p - 1
    return w


def _check_point(comp: Composition, a: int) -> int:
    n = sum(comp)
    if not isinstance(a, int):
        raise TypeError(f"reference point must be an integer, got {a!r}")
    if not 0 <= a <= n:
        raise ValueError(f"reference point must lie in [0, {n}], got {a}")
    return n


def surplus(comp: Composition, a: int) -> int:
    """Distance from a up to the nearest prefix sum of comp.

    Prefix sums include 0 and the total, so the value is defined for
    any a in [0, n] and is zero exactly when a is itself a prefix sum.
    """
    _check_point(comp, a)
    acc = 0
    for p in comp:
        if acc >= a:
            break
        acc += p
    return acc - a


def deficiency(comp: Composition, a: int) -> int:
    """Distance from a down to the nearest prefix sum of comp.

    Mirror of surplus: deficiency(comp, a) equals
    surplus(reverse(comp), n - a).
    """
    _check_point(comp, a)
    acc = 0
    for p in comp:
        if acc + p > a:
            break
        acc += p
    return a - acc


class SplitParams(NamedTuple):
    """Where a cut point b lands inside a composition, read two ways.

    (p, s): b sits at offset s inside part p, so b = i_1 + ... +
    i_(p-1) + s with 1 <= s <= i_p.
    (q, t): the same point located by prefix sums of the rotated
    sequence i_2, ..., i_z, i_1, so b = i_2 + ... + i_q + t with
    1 <= t <= i_(q+1), indices cyclic (part z+1 means part 1).
    """

    p: int
    s: int
    q: int
    t: int


def split_params(comp: Composition, b: int) -> SplitParams:
    """Locate b in [1, n-1] inside comp by both prefix-sum readings."""
    n = sum(comp)
    if not 1 <= b <= n - 1:
        raise ValueError(f"cut point must lie in [1, {n - 1}], got {b}")
    z = len(comp)
    acc = 0
    for p, part in enumerate(comp, start=1):
        if acc + part >= b:
            s = b - acc
            break
        acc += part
    acc = 0
    for q in range(1, z + 1):
        # part q+1 in the rotated reading, cyclically
        nxt = comp[q % z]
        if acc + nxt >= b:
            t = b - acc
            break
        acc += nxt
    return SplitParams(p, s, q, t)


def e2_sym(values) -> int:
    """Second elementary symmetric polynomial: sum of products of pairs."""
    xs = tuple(values)
    if len(xs) < 2:
        raise ValueError(f"need at least two values, got {len(xs)}")
    total = sum(xs)
    return (total * total - sum(x * x for x in xs)) // 2


def chord_weight(comp: Composition, b: int) -> int:
    """Coefficient weight of a composition in the cycle-with-chord
    expansion, for a chord splitting the cycle at distance b.

    Case split on the two readings of split_params: when the rotated
    index lags (q = p - 1, equivalently i_1 <= i_p - s) the weight is
    s * (i_p - s - i_1); otherwise it is e2_sym of the chain
    (i_p - s, i_(p+1), ..., i_q, t).  Always nonnegative;
    chord_weight_by_segments computes the same number geometrically.
    """
    n = sum(comp)
    if not 2 <= b <= n - 2:
        raise ValueError(f"chord distance must lie in [2, {n - 2}], got {b}")
    p, s, q, t = split_params(comp, b)
    i1 = comp[0]
    ip = comp[p - 1]
    if i1 <= ip - s:
        return s * (ip - s - i1)
    return e2_sym((ip - s,) + comp[p:q] + (t,))


@dataclass(frozen=True)
class SegmentDissection:
    """The interval (0, n + i_1] tiled by segments of lengths i_1, i_2,
    ..., i_z, i_1, together with the window (b, b + i_1].

    Segments and window are half-open integer intervals (x, y].
    """

    segments: tuple[tuple[int, int], ...]
    window: tuple[int, int]

    def window_inside(self) -> tuple[int, int] | None:
        """The segment containing the whole window, if there is one."""
        lo, hi = self.window
        for x, y in self.segments:
            if x <= lo and hi <= y:
                return (x, y)
        return None

    def overlaps(self) -> tuple[int, ...]:
        """Lengths of the nonempty intersections of window and segments."""
        lo, hi = self.window
        out = []
        for x, y in self.segments:
            length = min(y, hi) - max(x, lo)
            if length > 0:
                out.append(length)
        return tuple(out)


def segment_dissection(comp: Composition, b: int) -> SegmentDissection:
    n = sum(comp)
    if not 1 <= b <= n - 1:
        raise ValueError(f"cut point must lie in [1, {n - 1}], got {b}")
    i1 = comp[0]
    segs = []
    x = 0
    for length in comp + (i1,):
        segs.append((x, x + length))
        x += length
    return SegmentDissection(tuple(segs), (b, b + i1))


def chord_weight_by_segments(comp: Composition, b: int) -> int:
    """chord_weight computed from the segment picture.

    If the window lies inside a single segment the weight is the
    product of the two leftover lengths on either side (zero exactly
    when the window is flush against a segment boundary); otherwise it
    is e2_sym of the nonempty window-segment intersection lengths.
    """
    n = sum(comp)
    if not 2 <= b <= n - 2:
        raise ValueError(f"chord distance must lie in [2, {n - 2}], got {b}")
    d = segment_dissection(comp, b)
    seg = d.window_inside()
    if seg is not None:
        lo, hi = d.window
        return (lo - seg[0]) * (seg[1] - hi)
    return e2_sym(d.overlaps())


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Dominance order on partitions of the same number: every prefix
    sum of mu is at most the corresponding prefix sum of lam."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of the same number")
    acc_m = acc_l = 0
    for k in range(max(len(mu), len(lam))):
        acc_m += mu[k] if k < len(mu) else 0
        acc_l += lam[k] if k < len(lam) else 0
        if acc_m > acc_l:
            return False
    return True

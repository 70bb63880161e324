"""Integer partitions as plain tuples of positive ints, weakly decreasing.

The empty partition is ``()``. Functions here never pad with zeros; the number
of variables, when it matters, is passed separately.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import CellOutside, PartitionParseError, UnequalSize

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonical form of ``parts``: sorted decreasing, zeros dropped."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts) -> bool:
    return (isinstance(parts, tuple)
            and all(isinstance(p, int) and p >= 1 for p in parts)
            and all(a >= b for a, b in zip(parts, parts[1:])))


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def double(lam: Partition) -> Partition:
    return tuple(2 * p for p in lam)


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of ``inner`` sits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu is dominated by lam (prefix sums of mu never exceed those of lam)."""
    if sum(mu) != sum(lam):
        raise UnequalSize(f"|{mu}| = {sum(mu)} but |{lam}| = {sum(lam)}")
    s_mu = s_lam = 0
    for k in range(max(len(mu), len(lam))):
        s_mu += mu[k] if k < len(mu) else 0
        s_lam += lam[k] if k < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def _check_cell(lam: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    i, j = cell
    if i < 1 or j < 1 or i > len(lam) or j > lam[i - 1]:
        raise CellOutside(f"cell {cell} is not in {lam}")
    return i, j


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """Cells (row, col), 1-based, in reading order."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def arm(lam: Partition, cell: tuple[int, int]) -> int:
    i, j = _check_cell(lam, cell)
    return lam[i - 1] - j


def leg(lam: Partition, cell: tuple[int, int]) -> int:
    i, j = _check_cell(lam, cell)
    return sum(1 for p in lam if p >= j) - i


def zee(lam: Partition) -> int:
    """z_lam = prod_i i^{m_i} m_i!, the centralizer size in S_|lam|."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, largest first.

    This order is a linear extension of dominance read from the top: if mu is
    strictly dominated by lam then lam appears before mu.
    """
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def order_key(lam: Partition) -> tuple:
    """Sort key for graded reverse-lex order: by size, then largest-first."""
    return (sum(lam), tuple(-p for p in lam))


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(parts, key=order_key)


def horizontal_strips(lam: Partition, k: int, max_len: int | None = None) -> list[Partition]:
    """All nu obtained from lam by adding a horizontal strip of k cells.

    Equivalently nu_1 >= lam_1 >= nu_2 >= lam_2 >= ..., with |nu| = |lam| + k
    and len(nu) <= max_len. Returned in reverse-lexicographic order.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if max_len is None:
        max_len = len(lam) + 1
    if max_len < len(lam):
        raise ValueError(f"max_len {max_len} < length of {lam}")
    rows = min(len(lam) + 1, max_len)
    # upper bound for each row of nu: nu_1 unbounded, nu_i <= lam_{i-1}
    padded = list(lam) + [0] * (rows - len(lam))
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == rows:
            if left == 0:
                out.append(make_partition(acc))
            return
        lo = padded[i]
        hi = lo + left if i == 0 else min(padded[i - 1], lo + left)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - lo), acc)
            acc.pop()

    rec(0, k, [])
    return out


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; ``""`` and ``"0"`` give the empty partition."""
    s = text.strip()
    if s in ("", "0", "()"):
        return ()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = []
    pos = 0
    for chunk in s.split(","):
        token = chunk.strip()
        if not token.isdigit():
            raise PartitionParseError(text, pos, f"expected a nonnegative integer, got {token!r}")
        parts.append(int(token))
        pos += len(chunk) + 1
    for idx, (a, b) in enumerate(zip(parts, parts[1:])):
        if a < b:
            raise PartitionParseError(text, idx + 1, "parts must be weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    if 0 in parts:
        raise PartitionParseError(text, parts.index(0), "zero part before a positive part")
    return tuple(parts)

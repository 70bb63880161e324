"""Littlewood-Richardson coefficients and the LR-side identities.

``lr_coeff`` counts LR tableaux directly; ``lr_oracle`` multiplies Schur
polynomials in the monomial basis and reads off the Schur expansion. The two
share nothing but the partition helpers, which is the point.
"""

from __future__ import annotations

from functools import lru_cache

from .partition import (Partition, conjugate, contains, double, horizontal_strips,
                        partitions_of)
from .symring import mono_product, mono_to_schur, schur_to_mono


@lru_cache(maxsize=None)
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR tableaux of shape nu/lam and content mu."""
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    lam_p = tuple(lam) + (0,) * (rows - len(lam))
    # cells in reverse reading order: rows top to bottom, each right to left
    order = [(r, c) for r in range(rows) for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(mu)

    def rec(idx: int) -> int:
        if idx == len(order):
            return 1
        r, c = order[idx]
        # weakly increasing rows: the cell to the right (already filled) bounds us above
        hi = filling.get((r, c + 1), len(mu))
        # strictly increasing columns: the cell above in the skew shape bounds below
        above = filling.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        # an entry cannot exceed its row index (lattice words force this)
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            i = v - 1
            if counts[i] >= mu[i]:
                continue
            if i > 0 and counts[i] + 1 > counts[i - 1]:
                continue
            counts[i] += 1
            filling[r, c] = v
            total += rec(idx + 1)
            del filling[r, c]
            counts[i] -= 1
        return total

    return rec(0)


@lru_cache(maxsize=None)
def schur_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """s_lam * s_mu in the Schur basis, via monomial expansion in |lam|+|mu| variables."""
    n = max(1, sum(lam) + sum(mu))
    prod_ = mono_product(schur_to_mono(lam, n), schur_to_mono(mu, n))
    return dict(mono_to_schur(prod_).terms)


def lr_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return int(schur_product(lam, mu).get(nu, 0))


def lr_expand(lam: Partition, mu: Partition, max_len: int | None = None) -> dict[Partition, int]:
    """All nonzero c^nu_{lam,mu}, nu in reverse-lex order."""
    n = sum(lam) + sum(mu)
    out = {}
    for nu in partitions_of(n, max_len=max_len):
        c = lr_coeff(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def check_duality(lam: Partition, mu: Partition, nu: Partition) -> bool:
    return lr_coeff(lam, mu, nu) == lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu))


def check_saturation(lam: Partition, mu: Partition, nu: Partition) -> bool:
    return (lr_coeff(lam, mu, nu) != 0) == (lr_coeff(double(lam), double(mu), double(nu)) != 0)


def rank2_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Closed form for GL_2: 1 iff c = a+b-2k, k >= 0, with c >= |a-b|.

    Here a, b, c are the first-row excesses lam_1 - lam_2 etc.
    """
    if max(len(lam), len(mu), len(nu)) > 2:
        raise ValueError("rank2_coeff needs partitions of length at most 2")
    if sum(nu) != sum(lam) + sum(mu):
        return 0

    def gap(p):
        p = tuple(p) + (0, 0)
        return p[0] - p[1]

    a, b, c = gap(lam), gap(mu), gap(nu)
    return int(abs(a - b) <= c <= a + b and (a + b - c) % 2 == 0)


def pieri_expand(lam: Partition, k: int, max_len: int | None = None) -> list[Partition]:
    return horizontal_strips(lam, k, max_len)

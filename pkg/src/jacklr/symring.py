"""Symmetric polynomials in a fixed number of variables.

A :class:`SymPoly` is a coefficient map on partitions in one of the monomial,
power-sum, Schur or Jack bases. Coefficients are anything supporting ``+``,
``*`` and truthiness: ``int``/``Fraction`` for Schur and LR work,
:class:`~jacklr.alg.AlphaRat` for Jack work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .alg import AlphaPoly, AlphaRat, to_rat
from .errors import BasisMismatch, LengthExceedsVars, NvarsMismatch, UnstableTruncation
from .partition import Partition, format_partition, order_key, partitions_of, zee

MONOMIAL = "monomial"
POWERSUM = "powersum"
SCHUR = "schur"
JACK = "jack"
BASES = (MONOMIAL, POWERSUM, SCHUR, JACK)

_PREFIX = {MONOMIAL: "m", POWERSUM: "p", SCHUR: "s", JACK: "P"}


@dataclass(frozen=True)
class SymPoly:
    basis: str
    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        for lam, c in self.terms.items():
            if not c:
                continue
            if self.basis != POWERSUM and len(lam) > self.nvars:
                raise LengthExceedsVars(f"{lam} has more than {self.nvars} parts")
            clean[lam] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: order_key(kv[0]))))

    @classmethod
    def mono(cls, lam: Partition, nvars: int, coeff=1) -> SymPoly:
        return cls(MONOMIAL, nvars, {lam: coeff})

    @classmethod
    def power(cls, rho: Partition, nvars: int, coeff=1) -> SymPoly:
        return cls(POWERSUM, nvars, {rho: coeff})

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.basis, self.nvars, self.terms) == (other.basis, other.nvars, other.terms)

    def __hash__(self):
        return hash((self.basis, self.nvars, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def _same_space(self, other: SymPoly) -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")
        if self.nvars != other.nvars:
            raise NvarsMismatch(f"{self.nvars} vs {other.nvars}")

    def __add__(self, other: SymPoly) -> SymPoly:
        self._same_space(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymPoly(self.basis, self.nvars, out)

    def __neg__(self):
        return SymPoly(self.basis, self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def scale(self, c) -> SymPoly:
        return SymPoly(self.basis, self.nvars, {k: v * c for k, v in self.terms.items()})

    def map_coeffs(self, fn) -> SymPoly:
        return SymPoly(self.basis, self.nvars, {k: fn(v) for k, v in self.terms.items()})

    def truncate(self, nvars: int) -> SymPoly:
        """Set variables beyond ``nvars`` to zero (monomial/Schur/Jack bases)."""
        if self.basis == POWERSUM:
            raise BasisMismatch("truncate a power-sum expression via power_to_mono first")
        return SymPoly(self.basis, nvars, {k: v for k, v in self.terms.items() if len(k) <= nvars})

    def evaluate_alpha(self, x) -> SymPoly:
        """Specialize AlphaRat coefficients at a = x."""
        return self.map_coeffs(lambda c: to_rat(c)(x) if isinstance(c, (AlphaRat, AlphaPoly)) else Fraction(c))

    def __str__(self):
        return format_sympoly(self)


def format_coeff(c) -> str:
    if isinstance(c, AlphaRat):
        return str(c) if c.den.degree == 0 and len([x for x in c.num.coeffs if x]) <= 1 else f"({c})"
    return str(c)


def format_sympoly(f: SymPoly) -> str:
    if not f.terms:
        return "0"
    prefix = _PREFIX[f.basis]
    out = []
    for lam, c in f.terms.items():
        basis_el = f"{prefix}[{format_partition(lam)}]"
        if c == 1:
            out.append(basis_el)
        else:
            out.append(f"{format_coeff(c)}·{basis_el}")
    return " + ".join(out)


# ------------------------------------------------------------------ products

@lru_cache(maxsize=None)
def _exponent_vectors(lam: Partition, nvars: int) -> tuple[tuple[int, ...], ...]:
    # distinct rearrangements, generated without materializing all n! orders
    padded = list(lam) + [0] * (nvars - len(lam))
    counts: dict[int, int] = {}
    for p in padded:
        counts[p] = counts.get(p, 0) + 1
    values = sorted(counts, reverse=True)
    out = []

    def rec(acc):
        if len(acc) == nvars:
            out.append(tuple(acc))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                acc.append(v)
                rec(acc)
                acc.pop()
                counts[v] += 1

    rec([])
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_product_table(lam: Partition, mu: Partition, nvars: int) -> tuple[tuple[Partition, int], ...]:
    """Integer coefficients of m_lam * m_mu in the monomial basis, n variables."""
    if len(lam) > nvars or len(mu) > nvars:
        return ()
    out: dict[Partition, int] = {}
    # coefficient of m_nu = number of pairs (a, b) of rearrangements with a + b
    # equal to the decreasing vector nu itself
    targets: dict[tuple[int, ...], int] = {}
    for b in _exponent_vectors(mu, nvars):
        for a in _exponent_vectors(lam, nvars):
            s = tuple(x + y for x, y in zip(a, b))
            if all(s[i] >= s[i + 1] for i in range(nvars - 1)):
                targets[s] = targets.get(s, 0) + 1
    for vec, cnt in targets.items():
        nu = tuple(v for v in vec if v)
        out[nu] = out.get(nu, 0) + cnt
    return tuple(sorted(out.items(), key=lambda kv: order_key(kv[0])))


def mono_product(f: SymPoly, g: SymPoly) -> SymPoly:
    f._same_space(g)
    if f.basis != MONOMIAL:
        raise BasisMismatch(f"mono_product needs the monomial basis, got {f.basis}")
    n = f.nvars
    out: dict = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            ab = a * b
            for nu, k in monomial_product_table(lam, mu, n):
                term = ab * k
                out[nu] = out[nu] + term if nu in out else term
    return SymPoly(MONOMIAL, n, out)


# ----------------------------------------------------------- basis changes

@lru_cache(maxsize=None)
def power_in_mono(rho: Partition, nvars: int) -> tuple[tuple[Partition, int], ...]:
    """p_rho expanded in the monomial basis of ``nvars`` variables."""
    cur = {(): 1}
    for part in rho:
        nxt: dict[Partition, int] = {}
        for lam, c in cur.items():
            for nu, k in monomial_product_table(lam, (part,), nvars):
                nxt[nu] = nxt.get(nu, 0) + c * k
        cur = nxt
    return tuple(sorted(((k, v) for k, v in cur.items() if v), key=lambda kv: order_key(kv[0])))


def power_to_mono(f: SymPoly) -> SymPoly:
    if f.basis != POWERSUM:
        raise BasisMismatch(f"expected power-sum basis, got {f.basis}")
    out: dict = {}
    for rho, c in f.terms.items():
        for lam, k in power_in_mono(rho, f.nvars):
            term = c * k
            out[lam] = out[lam] + term if lam in out else term
    return SymPoly(MONOMIAL, f.nvars, out)


@lru_cache(maxsize=None)
def mono_in_power(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """m_lam in the power-sum basis (stable: computed with |lam| variables).

    p_rho = sum over lam dominating rho of R[rho, lam] m_lam, with R[rho, rho]
    nonzero, so the inverse is found by back-substitution from the top of the
    dominance order.
    """
    n = sum(lam)
    if n == 0:
        return (((), Fraction(1)),)
    parts = partitions_of(n)
    # inverse rows, most dominant first
    inv: dict[Partition, dict[Partition, Fraction]] = {}
    for rho in parts:
        row = dict(power_in_mono(rho, n))
        diag = Fraction(row.pop(rho))
        # m_rho = (p_rho - sum_{lam > rho} R[rho, lam] m_lam) / diag
        expr: dict[Partition, Fraction] = {rho: Fraction(1)}
        for mu, r in row.items():
            for sigma, c in inv[mu].items():
                expr[sigma] = expr.get(sigma, Fraction(0)) - r * c
        inv[rho] = {k: v / diag for k, v in expr.items() if v}
        if rho == lam:
            break
    return tuple(sorted(inv[lam].items(), key=lambda kv: order_key(kv[0])))


def mono_to_power(f: SymPoly) -> SymPoly:
    if f.basis != MONOMIAL:
        raise BasisMismatch(f"expected monomial basis, got {f.basis}")
    if f.nvars < f.degree():
        raise UnstableTruncation(
            f"{f.nvars} variables cannot represent degree {f.degree()} faithfully in power sums")
    out: dict = {}
    for lam, c in f.terms.items():
        for rho, k in mono_in_power(lam):
            term = c * k
            out[rho] = out[rho] + term if rho in out else term
    return SymPoly(POWERSUM, f.nvars, out)


# ------------------------------------------------------------------- Schur

def _ssyt_count(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content.

    Filled one letter at a time: the cells holding letter i form a horizontal
    strip, so we add strips of size content[i] to a growing shape.
    """
    if sum(shape) != sum(content):
        return 0

    @lru_cache(maxsize=None)
    def rec(cur: Partition, i: int) -> int:
        if i == len(content):
            return 1 if cur == shape else 0
        total = 0
        k = content[i]
        for nxt in _strips_inside(cur, k, shape):
            total += rec(nxt, i + 1)
        return total

    return rec((), 0)


def _strips_inside(lam: Partition, k: int, outer: Partition) -> list[Partition]:
    rows = len(outer)
    padded = list(lam) + [0] * (rows - len(lam))
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(tuple(v for v in acc if v))
            return
        lo = padded[i]
        hi = min(outer[i], lo + left)
        if i > 0:
            hi = min(hi, padded[i - 1])
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - lo), acc)
            acc.pop()

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    return _ssyt_count(lam, mu)


def schur_to_mono(lam: Partition, nvars: int) -> SymPoly:
    if len(lam) > nvars:
        raise LengthExceedsVars(f"{lam} has more than {nvars} parts")
    terms = {}
    for mu in partitions_of(sum(lam), max_len=nvars):
        k = kostka(lam, mu)
        if k:
            terms[mu] = k
    return SymPoly(MONOMIAL, nvars, terms)


def mono_to_schur(f: SymPoly) -> SymPoly:
    """Re-express a monomial-basis polynomial in the Schur basis.

    Unitriangular solve: the most dominant remaining m_nu must be the leading
    term of s_nu.
    """
    if f.basis != MONOMIAL:
        raise BasisMismatch(f"expected monomial basis, got {f.basis}")
    rem = dict(f.terms)
    out = {}
    while rem:
        nu = min(rem, key=order_key_desc)
        c = rem[nu]
        out[nu] = c
        for mu, k in schur_to_mono(nu, f.nvars).terms.items():
            v = rem.get(mu, 0) - c * k
            if v:
                rem[mu] = v
            else:
                rem.pop(mu, None)
    return SymPoly(SCHUR, f.nvars, out)


def order_key_desc(lam: Partition) -> tuple:
    """Largest degree first, then reverse-lex largest first."""
    return (-sum(lam), tuple(-p for p in lam))


# -------------------------------------------------------------- inner product

@lru_cache(maxsize=None)
def power_norm(rho: Partition) -> AlphaPoly:
    """<p_rho, p_rho> = z_rho a^len(rho)."""
    return AlphaPoly.monomial(len(rho), zee(rho))


def power_inner(f: SymPoly, g: SymPoly) -> AlphaRat:
    """Bilinear pairing with <p_lam, p_mu> = delta z_lam a^len(lam)."""
    fp = f if f.basis == POWERSUM else _to_power(f)
    gp = g if g.basis == POWERSUM else _to_power(g)
    total = AlphaRat()
    for rho, c in fp.terms.items():
        d = gp.terms.get(rho)
        if d:
            total = total + to_rat(c) * to_rat(d) * AlphaRat.from_poly(power_norm(rho))
    return total


def _to_power(f: SymPoly) -> SymPoly:
    if f.basis == MONOMIAL:
        return mono_to_power(f)
    if f.basis == SCHUR:
        acc = SymPoly(MONOMIAL, f.nvars)
        for lam, c in f.terms.items():
            acc = acc + schur_to_mono(lam, f.nvars).scale(c)
        return mono_to_power(acc)
    raise BasisMismatch(f"cannot pair a {f.basis}-basis polynomial directly; expand it first")


@lru_cache(maxsize=None)
def mono_gram(n: int) -> dict[tuple[Partition, Partition], AlphaPoly]:
    """Gram matrix <m_lam, m_mu> over partitions of n, as polynomials in a."""
    parts = partitions_of(n)
    vecs = {lam: dict(mono_in_power(lam)) for lam in parts}
    out = {}
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            acc = AlphaPoly()
            vl, vm = vecs[lam], vecs[mu]
            for rho, c in vl.items():
                d = vm.get(rho)
                if d:
                    acc = acc + power_norm(rho) * (c * d)
            out[lam, mu] = out[mu, lam] = acc
    return out

"""Jack polynomials P_lam with a symbolic parameter.

P_lam is built by Gram-Schmidt in the monomial basis under the power-sum
pairing <p_rho, p_sigma> = delta z_rho a^len(rho). All partitions of |lam|
are processed together, in increasing reverse-lex order, with |lam|
variables; fewer variables are obtained by dropping long keys (the
expansions are stable). The constant-term pairing in :func:`ct_inner` is an
independent check that only works at a = 1/k.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .alg import ONE, AlphaPoly, AlphaRat, ZERO
from .errors import BasisMismatch, LengthExceedsVars
from .partition import Partition, arm, cells, dominance_leq, leg, order_key, partitions_of
from .symring import MONOMIAL, SymPoly, _exponent_vectors, mono_gram


@dataclass(frozen=True)
class JackExpansion:
    lam: Partition
    nvars: int
    coeffs: dict  # Partition -> AlphaRat, reverse-lex order

    def as_sympoly(self) -> SymPoly:
        return SymPoly(MONOMIAL, self.nvars, self.coeffs)

    def at(self, x) -> SymPoly:
        """Monomial expansion with a specialized to the rational ``x``."""
        return SymPoly(MONOMIAL, self.nvars, {mu: c(x) for mu, c in self.coeffs.items()})

    def check_triangular(self) -> None:
        if self.coeffs.get(self.lam) != ONE:
            raise AssertionError(f"P{self.lam} is not monic")
        for mu in self.coeffs:
            if len(mu) > self.nvars or not dominance_leq(mu, self.lam):
                raise AssertionError(f"P{self.lam} has a term m{mu} outside the dominance down-set")


# Store for full expansions (nvars = |lam|). The default is in-memory; the CLI
# swaps in a disk-backed store with the same get_or_compute contract.
class MemoryStore:
    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key, producer):
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
        value = producer()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)


_store = MemoryStore()


def set_store(store) -> None:
    """Install the expansion store used by :func:`jack_expand`."""
    global _store
    _store = store
    _degree_cache.clear()


def get_store():
    return _store


_degree_cache: dict[int, dict[Partition, dict[Partition, AlphaRat]]] = {}
_degree_lock = threading.Lock()


def _gram_schmidt(n: int) -> dict[Partition, dict[Partition, AlphaRat]]:
    """Full expansions of every P_lam with |lam| = n, in n variables."""
    gram = mono_gram(n)
    parts = partitions_of(n)[::-1]  # dominance-minimal first
    done: dict[Partition, dict[Partition, AlphaRat]] = {}
    norms: dict[Partition, AlphaRat] = {}
    for lam in parts:
        def produce(lam=lam):
            vec = {lam: ONE}
            for nu, pnu in done.items():
                if not dominance_leq(nu, lam) or nu == lam:
                    continue
                # <m_lam, P_nu> / <P_nu, P_nu>
                ip = ZERO
                for mu, c in pnu.items():
                    g = gram[lam, mu]
                    if g:
                        ip = ip + c * AlphaRat.from_poly(g)
                if not ip:
                    continue
                coef = -(ip / norms[nu])
                for mu, c in pnu.items():
                    vec[mu] = vec[mu] + coef * c if mu in vec else coef * c
            return {mu: c for mu, c in sorted(vec.items(), key=lambda kv: order_key(kv[0])) if c}
        vec = _store.get_or_compute((lam, n), produce)
        done[lam] = vec
        # lower terms of P_lam are orthogonal to it, so <P, P> = <m_lam, P>
        norms[lam] = _pairing({lam: ONE}, vec, gram)
    return done


def _pairing(f: dict, g: dict, gram) -> AlphaRat:
    total = ZERO
    for mu, a in f.items():
        for nu, b in g.items():
            w = gram[mu, nu]
            if w:
                total = total + a * b * AlphaRat.from_poly(w)
    return total


def _full_degree(n: int) -> dict[Partition, dict[Partition, AlphaRat]]:
    with _degree_lock:
        if n not in _degree_cache:
            _degree_cache[n] = _gram_schmidt(n)
        return _degree_cache[n]


def jack_expand(lam: Partition, nvars: int | None = None) -> JackExpansion:
    """Monic expansion P_lam = sum_mu v_{lam,mu}(a) m_mu in ``nvars`` variables."""
    n = sum(lam)
    if nvars is None:
        nvars = max(1, n)
    if len(lam) > nvars:
        raise LengthExceedsVars(f"{lam} has more than {nvars} parts")
    full = _full_degree(n)[lam]
    coeffs = {mu: c for mu, c in full.items() if len(mu) <= nvars}
    return JackExpansion(lam, nvars, coeffs)


def jack_norm(lam: Partition) -> AlphaRat:
    """<P_lam, P_lam> under the power-sum pairing."""
    n = sum(lam)
    vec = _full_degree(n)[lam]
    return _pairing(vec, vec, mono_gram(n))


@lru_cache(maxsize=None)
def hook_c(lam: Partition) -> AlphaPoly:
    """prod over cells of (a*arm + leg + 1)."""
    out = AlphaPoly.const(1)
    for s in cells(lam):
        out = out * AlphaPoly((leg(lam, s) + 1, arm(lam, s)))
    return out


@lru_cache(maxsize=None)
def hook_cprime(lam: Partition) -> AlphaPoly:
    """prod over cells of (a*(arm + 1) + leg)."""
    out = AlphaPoly.const(1)
    for s in cells(lam):
        out = out * AlphaPoly((leg(lam, s), arm(lam, s) + 1))
    return out


# ------------------------------------------------------ constant-term check

@lru_cache(maxsize=None)
def _delta_power(nvars: int, k: int) -> dict[tuple[int, ...], int]:
    """prod_{i != j} (1 - x_i/x_j)^k as {exponent vector: coefficient}."""
    poly = {(0,) * nvars: 1}
    for i, j in product(range(nvars), repeat=2):
        if i == j:
            continue
        step = [0] * nvars
        step[i], step[j] = 1, -1
        step = tuple(step)
        for _ in range(k):
            nxt: dict[tuple[int, ...], int] = {}
            for e, c in poly.items():
                nxt[e] = nxt.get(e, 0) + c
                e2 = tuple(x + y for x, y in zip(e, step))
                nxt[e2] = nxt.get(e2, 0) - c
            poly = {e: c for e, c in nxt.items() if c}
    return poly


def _laurent(f: SymPoly) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for lam, c in f.terms.items():
        for e in _exponent_vectors(lam, f.nvars):
            out[e] = out.get(e, 0) + Fraction(c)
    return out


def ct_inner(f: SymPoly, g: SymPoly, inv_alpha: int) -> Fraction:
    """Constant term of f(x) g(1/x) prod_{i != j} (1 - x_i/x_j)^inv_alpha."""
    if f.basis != MONOMIAL or g.basis != MONOMIAL:
        raise BasisMismatch("ct_inner needs monomial-basis inputs")
    if f.nvars != g.nvars:
        raise BasisMismatch(f"nvars differ: {f.nvars} vs {g.nvars}")
    if inv_alpha < 1:
        raise ValueError("inv_alpha must be a positive integer")
    delta = _delta_power(f.nvars, inv_alpha)
    fx, gx = _laurent(f), _laurent(g)
    total = Fraction(0)
    for a, ca in fx.items():
        for b, cb in gx.items():
            # x^a * x^-b * x^e has zero exponent iff e = b - a
            w = delta.get(tuple(y - x for x, y in zip(a, b)))
            if w:
                total += ca * cb * w
    return total

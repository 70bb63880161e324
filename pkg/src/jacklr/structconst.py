"""Structure constants f^nu_{lam,mu}(a) of Jack polynomials and their checks.

P_lam * P_mu = sum_nu f^nu_{lam,mu}(a) P_nu. The product is formed in the
monomial basis and peeled off from the dominance-top down; the remainder must
vanish, which doubles as the reconstruction check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .alg import ZERO, AlphaRat, NotPolynomial, try_as_polynomial
from .errors import LengthExceedsVars, PoleAtPoint
from .jack import hook_c, hook_cprime, jack_expand
from .lr import lr_coeff
from .partition import Partition, horizontal_strips, order_key
from .symring import MONOMIAL, SymPoly, mono_product, order_key_desc


@dataclass(frozen=True)
class StructTable:
    lam: Partition
    mu: Partition
    nvars: int
    entries: dict  # nu -> AlphaRat, reverse-lex order, zeros omitted

    def get(self, nu: Partition) -> AlphaRat:
        return self.entries.get(nu, ZERO)

    def support(self) -> list[Partition]:
        return list(self.entries)

    def truncate(self, rank: int) -> StructTable:
        return StructTable(self.lam, self.mu, self.nvars,
                           {nu: f for nu, f in self.entries.items() if len(nu) <= rank})

    def at(self, x) -> dict[Partition, Fraction]:
        out = {}
        for nu, f in self.entries.items():
            v = f(x)
            if v:
                out[nu] = v
        return out


def _product_mono(lam, mu, nvars):
    p = jack_expand(lam, nvars).as_sympoly()
    q = jack_expand(mu, nvars).as_sympoly()
    return mono_product(p, q)


@lru_cache(maxsize=4096)
def structure_constants(lam: Partition, mu: Partition, nvars: int | None = None) -> StructTable:
    if nvars is None:
        nvars = max(1, sum(lam) + sum(mu))
    if len(lam) > nvars or len(mu) > nvars:
        raise LengthExceedsVars(f"{lam} or {mu} has more than {nvars} parts")
    rem = dict(_product_mono(lam, mu, nvars).terms)
    entries = {}
    while rem:
        nu = min(rem, key=order_key_desc)
        f = rem[nu]
        entries[nu] = f
        for kappa, c in jack_expand(nu, nvars).coeffs.items():
            v = rem.get(kappa, ZERO) - f * c
            if v:
                rem[kappa] = v
            else:
                rem.pop(kappa, None)
    return StructTable(lam, mu, nvars, dict(sorted(entries.items(), key=lambda kv: order_key(kv[0]))))


def reconstruct(table: StructTable):
    """sum_nu f^nu P_nu in the monomial basis."""
    acc = SymPoly(MONOMIAL, table.nvars)
    for nu, f in table.entries.items():
        acc = acc + jack_expand(nu, table.nvars).as_sympoly().scale(f)
    return acc


def product_mono(lam: Partition, mu: Partition, nvars: int):
    """P_lam * P_mu in the monomial basis."""
    return _product_mono(lam, mu, nvars)


def struct_coeff(lam: Partition, mu: Partition, nu: Partition) -> AlphaRat:
    """f^nu_{lam,mu} computed with |lam|+|mu| variables (0 on size mismatch)."""
    if sum(nu) != sum(lam) + sum(mu):
        return ZERO
    return structure_constants(lam, mu).get(nu)


def stanley_product(lam: Partition, mu: Partition, nu: Partition) -> AlphaRat:
    f = struct_coeff(lam, mu, nu)
    if not f:
        return ZERO
    hooks = hook_c(lam) * hook_c(mu) * hook_cprime(nu)
    return f * AlphaRat.from_poly(hooks)


class StanleyClass(enum.Enum):
    POLYNOMIAL_NONNEG = "PolynomialNonneg"
    POLYNOMIAL_NEGATIVE = "PolynomialNegative"
    NOT_POLYNOMIAL = "NotPolynomial"


def check_stanley(lam: Partition, mu: Partition, nu: Partition) -> StanleyClass:
    p = try_as_polynomial(stanley_product(lam, mu, nu))
    if isinstance(p, NotPolynomial):
        return StanleyClass.NOT_POLYNOMIAL
    if p.has_nonneg_int_coeffs():
        return StanleyClass.POLYNOMIAL_NONNEG
    return StanleyClass.POLYNOMIAL_NEGATIVE


def stanley_evidence(lam: Partition, mu: Partition, nu: Partition) -> dict:
    f = struct_coeff(lam, mu, nu)
    return {
        "lam": lam, "mu": mu, "nu": nu,
        "f": str(f),
        "c_lam": str(hook_c(lam)), "c_mu": str(hook_c(mu)), "cprime_nu": str(hook_cprime(nu)),
        "product": str(stanley_product(lam, mu, nu)),
        "class": check_stanley(lam, mu, nu).value,
    }


@dataclass
class NonvanishingReport:
    lam: Partition
    mu: Partition
    nu: Partition
    lr: int
    f: AlphaRat
    values: dict = field(default_factory=dict)  # m -> Fraction, or the string "pole"
    agree: bool = True

    def evidence(self) -> dict:
        return {
            "lam": self.lam, "mu": self.mu, "nu": self.nu, "lr": self.lr, "f": str(self.f),
            "values": {str(m): str(v) for m, v in self.values.items()},
            "c_lam": str(hook_c(self.lam)), "c_mu": str(hook_c(self.mu)),
            "cprime_nu": str(hook_cprime(self.nu)),
        }


def check_nonvanishing(lam: Partition, mu: Partition, nu: Partition, m_values=(1, 2, 4, 8)) -> NonvanishingReport:
    """Nonvanishing of c^nu, of f^nu as a function, and of f^nu(2/m) must coincide."""
    c = lr_coeff(lam, mu, nu)
    f = struct_coeff(lam, mu, nu)
    report = NonvanishingReport(lam, mu, nu, c, f)
    expected = c != 0
    if bool(f) != expected:
        report.agree = False
    for m in m_values:
        try:
            v = f(Fraction(2, m))
        except PoleAtPoint:
            report.values[m] = "pole"
            report.agree = False
            continue
        report.values[m] = v
        if (v != 0) != expected:
            report.agree = False
    return report


@dataclass
class PieriReport:
    lam: Partition
    k: int
    nvars: int
    support: list
    expected: list

    @property
    def equal(self) -> bool:
        return set(self.support) == set(self.expected)


def check_jack_pieri(lam: Partition, k: int, nvars: int | None = None) -> PieriReport:
    if nvars is None:
        nvars = len(lam) + 1
    if len(lam) > nvars:
        raise LengthExceedsVars(f"{lam} has more than {nvars} parts")
    row = (k,) if k else ()
    table = structure_constants(lam, row, max(nvars, 1))
    return PieriReport(lam, k, nvars, table.support(), horizontal_strips(lam, k, nvars))

"""Irreducible Hermitian symmetric spaces as data, plus the decision procedures.

Each case carries its rank r, the restricted-root multiplicity m of its
tube-type reduction, and that reduction. Products S_lam * S_mu are decided by
whether the Jack structure constant is nonzero at a = 2/m; tensor-product
multiplicities [V_lam (x) V_mu : V_nu] come from LR coefficients case by case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .alg import AlphaRat
from .errors import (ConjecturalCase, InvalidParameters, RankExceeded, SizeMismatch)
from .lr import lr_coeff
from .partition import Partition, conjugate, double
from .structconst import struct_coeff

SU = "su"
SP = "sp"
SOSTAR = "sostar"
SO2 = "so2"
EIII = "eiii"
EVII = "evii"

EXCEPTIONAL = frozenset({EIII, EVII})


@dataclass(frozen=True)
class HermitianCase:
    family: str
    params: tuple[int, ...]
    rank: int
    mult: int
    tube: bool
    tube_reduction: tuple[str, tuple[int, ...]]

    @property
    def alpha(self) -> Fraction:
        """Jack parameter 2/m governing spherical functions of the tube case."""
        return Fraction(2, self.mult)

    @property
    def literal(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"

    @property
    def label(self) -> str:
        return _label(self.family, self.params)

    @property
    def exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    def __str__(self):
        return self.label


def _label(family, params) -> str:
    if family == SU:
        return f"SU({params[0]},{params[1]})"
    if family == SP:
        return f"Sp({params[0]},R)"
    if family == SOSTAR:
        return f"SO*({params[0]})"
    if family == SO2:
        return f"SO0({params[0]},2)"
    return {EIII: "E III", EVII: "E VII"}[family]


def su_pq(p: int, q: int) -> HermitianCase:
    if p < 1 or q < 1:
        raise InvalidParameters(f"SU(p,q) needs p, q >= 1, got ({p},{q})")
    r = min(p, q)
    return HermitianCase(SU, (p, q), r, 2, p == q, (SU, (r, r)))


def sp_n(n: int) -> HermitianCase:
    if n < 1:
        raise InvalidParameters(f"Sp(n,R) needs n >= 1, got {n}")
    return HermitianCase(SP, (n,), n, 1, True, (SP, (n,)))


def sostar(order: int) -> HermitianCase:
    """SO*(order); ``order`` = 2n is even, rank floor(n/2), tube iff n is even."""
    if order < 4 or order % 2:
        raise InvalidParameters(f"SO*(2n) needs an even order >= 4, got {order}")
    n = order // 2
    tube = n % 2 == 0
    target = order if tube else order - 2
    return HermitianCase(SOSTAR, (order,), n // 2, 4, tube, (SOSTAR, (target,)))


def so_n2(n: int) -> HermitianCase:
    if n < 3:
        raise InvalidParameters(f"SO0(n,2) needs n >= 3, got {n}")
    return HermitianCase(SO2, (n,), 2, n - 2, True, (SO2, (n,)))


def e_iii() -> HermitianCase:
    # not of tube type; its rank-2 tube-type reduction is so(8,2), m = 6
    return HermitianCase(EIII, (), 2, 6, False, (SO2, (8,)))


def e_vii() -> HermitianCase:
    return HermitianCase(EVII, (), 3, 8, True, (EVII, ()))


_CONSTRUCTORS = {SU: su_pq, SP: sp_n, SOSTAR: sostar, SO2: so_n2, EIII: e_iii, EVII: e_vii}


def case_registry() -> dict:
    """Family literal -> constructor."""
    return dict(_CONSTRUCTORS)


def make_case(family: str, *params: int) -> HermitianCase:
    try:
        ctor = _CONSTRUCTORS[family]
    except KeyError:
        raise InvalidParameters(f"unknown family {family!r}; expected one of {sorted(_CONSTRUCTORS)}") from None
    try:
        return ctor(*params)
    except TypeError:
        raise InvalidParameters(f"wrong number of parameters for {family}: {params}") from None


def parse_case(text: str) -> HermitianCase:
    """``"su:3,5"``, ``"sp:4"``, ``"sostar:8"``, ``"so2:6"``, ``"eiii"``, ``"evii"``."""
    s = text.strip().lower()
    family, _, rest = s.partition(":")
    params = []
    if rest:
        for tok in rest.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise InvalidParameters(f"bad parameter {tok!r} in case literal {text!r}")
            params.append(int(tok))
    return make_case(family, *params)


def split_case_list(text: str) -> list[HermitianCase]:
    """Parse a comma-separated list of case literals, e.g. ``"sp:2,su:2,2,evii"``.

    Bare integers continue the parameter list of the preceding literal.
    """
    literals: list[str] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.isdigit() and literals:
            sep = "," if ":" in literals[-1] else ":"
            literals[-1] += sep + tok
        else:
            literals.append(tok)
    return [parse_case(lit) for lit in literals]


def table_rows() -> list[HermitianCase]:
    """Representative instances for display."""
    return [su_pq(3, 5), su_pq(2, 2), sp_n(4), sostar(8), sostar(10), so_n2(6), e_iii(), e_vii()]


# ------------------------------------------------------------------ decisions

class Verdict(enum.Enum):
    IN_SUPPORT = "InSupport"
    NOT_IN_SUPPORT = "NotInSupport"


@dataclass(frozen=True)
class SupportEvidence:
    case: str
    f: AlphaRat | None
    alpha: Fraction
    value: Fraction | None
    lr: int

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "f": None if self.f is None else str(self.f),
            "alpha": str(self.alpha),
            "value": None if self.value is None else str(self.value),
            "lr": self.lr,
        }


def _check_rank(case: HermitianCase, *parts: Partition) -> None:
    for p in parts:
        if len(p) > case.rank:
            raise RankExceeded(f"{p} has more than rank {case.rank} parts for {case.label}")


def decide_product_support(case: HermitianCase, lam: Partition, mu: Partition,
                           nu: Partition) -> tuple[Verdict, SupportEvidence]:
    """Is S_nu inside S_lam * S_mu? Decided by f^nu_{lam,mu}(2/m) != 0."""
    _check_rank(case, lam, mu, nu)
    c = lr_coeff(lam, mu, nu)
    if sum(nu) != sum(lam) + sum(mu):
        return Verdict.NOT_IN_SUPPORT, SupportEvidence(case.literal, None, case.alpha, None, c)
    f = struct_coeff(lam, mu, nu)
    v = f(case.alpha)
    verdict = Verdict.IN_SUPPORT if v != 0 else Verdict.NOT_IN_SUPPORT
    return verdict, SupportEvidence(case.literal, f, case.alpha, v, c)


@dataclass(frozen=True)
class MultiplicityResult:
    value: int
    formula: str
    conjectural: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("multiplicity must be nonnegative")


def _doubled_conj(p: Partition) -> Partition:
    return conjugate(double(conjugate(p)))


def so_branching_multiplicity(a: int, b: int, c: int) -> int:
    """Multiplicity of E_{c e1} in E_{a e1} (x) E_{b e1} for so_n, n >= 4.

    Sum over 0 <= k <= b, 0 <= l <= b - k of E_{(a+b-2k-l) e1 + l e2}, with
    the smaller of a, b playing the role of b.
    """
    a, b = max(a, b), min(a, b)
    count = 0
    for k in range(b + 1):
        for l in range(b - k + 1):
            if l == 0 and a + b - 2 * k == c:
                count += 1
    return count


def tensor_multiplicity(case: HermitianCase, lam: Partition, mu: Partition,
                        nu: Partition) -> MultiplicityResult:
    _check_rank(case, lam, mu, nu)
    fam = case.family
    if fam == SU:
        c = lr_coeff(lam, mu, nu)
        return MultiplicityResult(c * c, "(c^nu_{lam,mu})^2")
    if fam == SP:
        return MultiplicityResult(lr_coeff(double(lam), double(mu), double(nu)),
                                  "c^{2nu}_{2lam,2mu}")
    if fam == SOSTAR:
        return MultiplicityResult(
            lr_coeff(_doubled_conj(lam), _doubled_conj(mu), _doubled_conj(nu)),
            "c^{(2nu')'}_{(2lam')',(2mu')'}")
    if fam == SO2:
        n = case.params[0]
        if n == 3:
            raise InvalidParameters("SO0(3,2) is locally Sp(2,R); use sp:2")
        if sum(nu) != sum(lam) + sum(mu):
            return MultiplicityResult(0, "so_n branching lemma")

        def gap(p):
            p = tuple(p) + (0, 0)
            return p[0] - p[1]

        return MultiplicityResult(so_branching_multiplicity(gap(lam), gap(mu), gap(nu)),
                                  "so_n branching lemma")
    c = lr_coeff(lam, mu, nu)
    if fam == EIII:
        return MultiplicityResult(c, "c^nu_{lam,mu} (conjectural)", conjectural=True)
    return MultiplicityResult(c * (c + 1) // 2, "c(c+1)/2 (conjectural)", conjectural=True)


def check_multiplicity_nonvanishing(case: HermitianCase, lam: Partition, mu: Partition, nu: Partition) -> bool:
    """Tensor multiplicity is nonzero exactly when c^nu_{lam,mu} is."""
    if sum(nu) != sum(lam) + sum(mu):
        raise SizeMismatch(f"|{nu}| != |{lam}| + |{mu}|")
    if case.exceptional:
        raise ConjecturalCase(f"{case.label} is conjectural; no theorem to check")
    m = tensor_multiplicity(case, lam, mu, nu)
    return (m.value != 0) == (lr_coeff(lam, mu, nu) != 0)

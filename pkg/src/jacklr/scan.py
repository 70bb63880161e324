"""Exhaustive sweeps over triples (lam, mu, nu) and the report they produce.

Work is split into independent (lam, mu[, case]) tasks. Each task returns its
check outcomes; the driver sorts them by task key before assembling the
report, so the output does not depend on the number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import jack
from .cache import DiskStore
from .hermitian import (HermitianCase, Verdict, check_multiplicity_nonvanishing, decide_product_support,
                        parse_case, so_n2, sostar, sp_n, su_pq, e_vii, tensor_multiplicity)
from .lr import check_duality, check_saturation, lr_coeff
from .partition import Partition, conjugate, double, format_partition, order_key, partitions_of
from .structconst import (StanleyClass, check_nonvanishing, check_jack_pieri, check_stanley,
                          stanley_evidence)

FORMAT_VERSION = 1
DEFAULT_CAP = 8
KINDS = ("stanley", "nonvanishing", "pieri", "multiplicity", "conjB", "saturation", "duality")

CHECK_CLASSES = {
    "stanley": ("knop_sahi", "stanley_positivity"),
    "nonvanishing": ("nonvanishing",),
    "pieri": ("pieri",),
    "multiplicity": ("multiplicity",),
    "conjB": ("conjB",),
    "saturation": ("saturation",),
    "duality": ("duality",),
}

# a failure in these classes is evidence against a conjecture, not a bug
EVIDENCE_CLASSES = frozenset({"stanley_positivity", "conjB"})


def default_cases(kind: str) -> list[HermitianCase]:
    if kind == "multiplicity":
        return [su_pq(2, 2), su_pq(2, 3), sp_n(2), sp_n(3), sostar(8), so_n2(6)]
    if kind == "conjB":
        return [sp_n(2), sp_n(3), su_pq(2, 2), su_pq(3, 3), sostar(8), so_n2(5), so_n2(6), e_vii()]
    return []


class ScanError(Exception):
    pass


@dataclass
class ScanParams:
    kind: str
    max_size: int
    rank: int | None = None
    cases: tuple[str, ...] = ()
    m_values: tuple[int, ...] = (1, 2, 4, 8)

    def command(self) -> str:
        parts = ["scan", self.kind, "--max-size", str(self.max_size)]
        if self.rank is not None:
            parts += ["--rank", str(self.rank)]
        if self.cases:
            parts += ["--cases", ";".join(self.cases)]
        if self.kind == "nonvanishing":
            parts += ["--m-values", ",".join(map(str, self.m_values))]
        return " ".join(parts)

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "max_size": self.max_size, "rank": self.rank}
        if self.kind in ("multiplicity", "conjB"):
            d["cases"] = list(self.cases)
        if self.kind == "nonvanishing":
            d["m_values"] = list(self.m_values)
        return d


@dataclass
class Outcome:
    check: str
    size: int
    passed: bool
    evidence: dict | None = None


@dataclass
class ScanReport:
    params: ScanParams
    checks: dict = field(default_factory=dict)       # class -> {attempted, passed, failed}
    by_size: dict = field(default_factory=dict)      # class -> size -> {attempted, passed}
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    cache_hits: int = 0
    cache_misses: int = 0

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_dict(self, include_runtime: bool = False) -> dict:
        d = {
            "format_version": FORMAT_VERSION,
            "command": self.params.command(),
            "parameters": self.params.as_dict(),
            "checks": self.checks,
            "by_size": self.by_size,
            "counterexamples": self.counterexamples,
            "status": "clean" if self.clean else "counterexamples",
        }
        if include_runtime:
            d["runtime"] = self.runtime()
        return d

    def runtime(self) -> dict:
        return {"wall_time_s": round(self.wall_time, 3),
                "cache_hits": self.cache_hits, "cache_misses": self.cache_misses}


# -------------------------------------------------------------- enumeration

def _parts_upto(n: int, rank: int | None):
    return partitions_of(n, max_len=rank)


def pair_tasks(max_size: int, rank: int | None = None) -> list[tuple[Partition, Partition]]:
    out = []
    for total in range(max_size + 1):
        for s in range(total + 1):
            for lam in _parts_upto(s, rank):
                for mu in _parts_upto(total - s, rank):
                    out.append((lam, mu))
    return out


def triples(max_size: int, rank: int | None = None):
    """All (lam, mu, nu) with |lam| + |mu| = |nu| <= max_size and lengths <= rank."""
    for lam, mu in pair_tasks(max_size, rank):
        for nu in _parts_upto(sum(lam) + sum(mu), rank):
            yield lam, mu, nu


def _fp(p: Partition) -> str:
    return format_partition(p) or "0"


def _triple(lam, mu, nu) -> dict:
    return {"lam": _fp(lam), "mu": _fp(mu), "nu": _fp(nu)}


def _jsonable(obj):
    if isinstance(obj, tuple) and all(isinstance(x, int) for x in obj):
        return _fp(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


# -------------------------------------------------------------------- tasks

def _run_task_counted(task):
    outcomes = _run_task(task)
    store = jack.get_store()
    return outcomes, os.getpid(), store.hits, store.misses


def _run_task(task) -> list[Outcome]:
    kind, lam, mu, extra, params = task
    n = sum(lam) + sum(mu)
    rank = params.rank
    out: list[Outcome] = []
    if kind == "stanley":
        for nu in _parts_upto(n, rank):
            cls = check_stanley(lam, mu, nu)
            ev = _jsonable(stanley_evidence(lam, mu, nu)) if cls is not StanleyClass.POLYNOMIAL_NONNEG else None
            out.append(Outcome("knop_sahi", n, cls is not StanleyClass.NOT_POLYNOMIAL,
                               ev if cls is StanleyClass.NOT_POLYNOMIAL else None))
            out.append(Outcome("stanley_positivity", n, cls is not StanleyClass.POLYNOMIAL_NEGATIVE,
                               ev if cls is StanleyClass.POLYNOMIAL_NEGATIVE else None))
    elif kind == "nonvanishing":
        for nu in _parts_upto(n, rank):
            rep = check_nonvanishing(lam, mu, nu, params.m_values)
            out.append(Outcome("nonvanishing", n, rep.agree, None if rep.agree else _jsonable(rep.evidence())))
    elif kind == "pieri":
        k = extra
        lam_size = sum(lam)
        choices = {len(lam) + 1, max(1, lam_size + k)}
        if rank is not None:
            choices = {max(len(lam), 1, min(v, rank)) for v in choices}
        for nvars in sorted(choices):
            rep = check_jack_pieri(lam, k, nvars)
            ev = None if rep.equal else _jsonable({
                "lam": lam, "k": k, "nvars": nvars,
                "support": rep.support, "expected": rep.expected})
            out.append(Outcome("pieri", lam_size + k, rep.equal, ev))
    elif kind in ("multiplicity", "conjB"):
        case = parse_case(extra)
        for nu in _parts_upto(n, case.rank):
            c = lr_coeff(lam, mu, nu)
            if kind == "multiplicity":
                ok = check_multiplicity_nonvanishing(case, lam, mu, nu)
                ev = None if ok else {"case": case.literal, **_triple(lam, mu, nu), "lr": c,
                                      "multiplicity": tensor_multiplicity(case, lam, mu, nu).value}
                out.append(Outcome("multiplicity", n, ok, ev))
            else:
                verdict, evidence = decide_product_support(case, lam, mu, nu)
                ok = (verdict is Verdict.IN_SUPPORT) == (c != 0)
                ev = None if ok else {**_triple(lam, mu, nu), "verdict": verdict.value, **evidence.as_dict()}
                out.append(Outcome("conjB", n, ok, ev))
    elif kind == "saturation":
        for nu in _parts_upto(n, rank):
            ok = check_saturation(lam, mu, nu)
            ev = None if ok else {**_triple(lam, mu, nu), "c": lr_coeff(lam, mu, nu),
                                  "c_doubled": lr_coeff(double(lam), double(mu), double(nu))}
            out.append(Outcome("saturation", n, ok, ev))
    elif kind == "duality":
        for nu in _parts_upto(n, rank):
            ok = check_duality(lam, mu, nu)
            ev = None if ok else {**_triple(lam, mu, nu), "c": lr_coeff(lam, mu, nu),
                                  "c_conjugate": lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu))}
            out.append(Outcome("duality", n, ok, ev))
    else:
        raise ScanError(f"unknown scan kind {kind!r}")
    return out


def build_tasks(params: ScanParams) -> list[tuple]:
    kind = params.kind
    if kind == "pieri":
        tasks = []
        for total in range(params.max_size + 1):
            for k in range(total + 1):
                for lam in _parts_upto(total - k, params.rank):
                    tasks.append((kind, lam, (), k, params))
        return tasks
    if kind in ("multiplicity", "conjB"):
        tasks = []
        for lit in params.cases:
            case = parse_case(lit)
            for lam, mu in pair_tasks(params.max_size, case.rank):
                tasks.append((kind, lam, mu, lit, params))
        return tasks
    return [(kind, lam, mu, None, params) for lam, mu in pair_tasks(params.max_size, params.rank)]


def _task_key(task):
    kind, lam, mu, extra, _ = task
    return (str(extra) if extra is not None else "", order_key(lam), order_key(mu))


def _init_worker(cache_dir):
    if cache_dir is not None:
        jack.set_store(DiskStore(cache_dir))


def run_scan(params: ScanParams, workers: int = 1, cache_dir=None, cap: int = DEFAULT_CAP,
             override_cap: bool = False) -> ScanReport:
    if params.kind not in KINDS:
        raise ScanError(f"unknown scan kind {params.kind!r}; choose from {', '.join(KINDS)}")
    if params.max_size > cap and not override_cap:
        raise ScanError(f"--max-size {params.max_size} exceeds the cap of {cap}; exact Gram-Schmidt "
                        f"over Q(a) grows fast past size 9. Pass --i-know-what-im-doing to proceed.")
    if params.kind in ("multiplicity", "conjB") and not params.cases:
        params.cases = tuple(c.literal for c in default_cases(params.kind))
    start = time.perf_counter()
    tasks = sorted(build_tasks(params), key=_task_key)
    store_before = jack.get_store()
    hits0, misses0 = store_before.hits, store_before.misses
    if workers <= 1:
        if cache_dir is not None and not isinstance(store_before, DiskStore):
            jack.set_store(DiskStore(cache_dir))
        results = [_run_task(t) for t in tasks]
        store = jack.get_store()
        hits = store.hits - (hits0 if store is store_before else 0)
        misses = store.misses - (misses0 if store is store_before else 0)
    else:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(cache_dir,)) as pool:
            counted = list(pool.map(_run_task_counted, tasks,
                                    chunksize=max(1, len(tasks) // (workers * 8))))
        results = [c[0] for c in counted]
        # counters are cumulative per worker process: keep the last value of each
        per_pid: dict[int, tuple[int, int]] = {}
        for _, pid, h, m in counted:
            old = per_pid.get(pid, (0, 0))
            per_pid[pid] = (max(old[0], h), max(old[1], m))
        hits = sum(h for h, _ in per_pid.values())
        misses = sum(m for _, m in per_pid.values())
    report = ScanReport(params)
    for cls in CHECK_CLASSES[params.kind]:
        report.checks[cls] = {"attempted": 0, "passed": 0, "failed": 0}
        report.by_size[cls] = {}
    for outcomes in results:
        for o in outcomes:
            chk = report.checks[o.check]
            chk["attempted"] += 1
            bucket = report.by_size[o.check].setdefault(str(o.size), {"attempted": 0, "passed": 0})
            bucket["attempted"] += 1
            if o.passed:
                chk["passed"] += 1
                bucket["passed"] += 1
            else:
                chk["failed"] += 1
                report.counterexamples.append({
                    "check": o.check,
                    "kind": "evidence" if o.check in EVIDENCE_CLASSES else "bug",
                    **(o.evidence or {}),
                })
    for cls in report.by_size:
        report.by_size[cls] = dict(sorted(report.by_size[cls].items(), key=lambda kv: int(kv[0])))
    report.wall_time = time.perf_counter() - start
    report.cache_hits, report.cache_misses = hits, misses
    return report

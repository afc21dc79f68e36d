"""Exhaustive scans of symmetric functions and report serialization.

Per-function records (immunity, degree, balance, the coefficient
condition) over full or filtered enumerations, plus the aggregate
verification that the majority pair is exactly the set of
maximum-immunity trivial-balanced functions.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import boolfn
from .boolfn import algebraic_immunity, moebius
from .constructions import max_ai_necessary_condition, refute_max_ai
from .symfn import (
    SymValueVector,
    SanfVector,
    expand,
    is_trivial_balanced,
    majority_family,
    sym_degree,
    sym_weight,
    value_to_sanf,
)

# 2^14 functions x one immunity computation each is minutes at the limit.
FULL_SCAN_MAX = 13

FILTERS = ("all", "trivial_balanced", "balanced")


@dataclass(frozen=True)
class SurveyRecord:
    n: int
    value_vector: SymValueVector
    sanf: SanfVector
    degree: int
    weight: int
    balanced: bool
    trivial_balanced: bool
    ai: int
    theorem3_ok: bool  # external report field name


@dataclass(frozen=True)
class VerificationReport:
    n: int
    total: int
    max_ai_functions: tuple[str, ...]  # value vectors as bit strings
    trivial_balanced_max_ai: tuple[str, ...]
    theorem2_holds: bool
    lemma2_holds: bool
    theorem3_holds: bool


def enumerate_symmetric(n: int) -> Iterator[SymValueVector]:
    """All 2^(n+1) value vectors, ascending as integers (v(0) = LSB)."""
    if not 1 <= n <= FULL_SCAN_MAX:
        raise ValueError(
            f"full scans are capped at n <= {FULL_SCAN_MAX}; "
            "use the trivial-balanced filter beyond that"
        )
    for bits in range(1 << (n + 1)):
        yield SymValueVector(n, bits)


def trivial_balanced_vectors(n: int) -> list[SymValueVector]:
    """The 2^((n+1)/2) trivial-balanced vectors, ascending; odd n only."""
    if n % 2 == 0:
        raise ValueError(f"trivial balance is defined for odd n, got {n}")
    m = n // 2
    out = []
    for low in range(1 << (m + 1)):
        v = low
        for idx in range(m + 1):  # upper half forced: v(n-i) = v(i) + 1
            if not (low >> idx) & 1:
                v |= 1 << (n - idx)
        out.append(SymValueVector(n, v))
    out.sort(key=lambda s: s.v)
    return out


def balanced_nontrivial_vectors(n: int) -> list[SymValueVector]:
    """Balanced but not trivial-balanced vectors, full scan; odd n only."""
    if n % 2 == 0:
        raise ValueError(f"odd n only, got {n}")
    half = 1 << (n - 1)
    return [
        v
        for v in enumerate_symmetric(n)
        if sym_weight(v) == half and not is_trivial_balanced(v)
    ]


def count_trivial_balanced(n: int) -> int:
    """2^((n+1)/2): one free bit per weight pair {i, n-i}."""
    if n % 2 == 0:
        raise ValueError(f"trivial balance is defined for odd n, got {n}")
    return 1 << ((n + 1) // 2)


def _make_record(vec: SymValueVector) -> SurveyRecord:
    n = vec.n
    lam = value_to_sanf(vec)
    wt = sym_weight(vec)
    ai = algebraic_immunity(expand(vec)).ai
    bound = (n + 1) // 2
    if ai > bound:
        raise AssertionError("immunity exceeded ceil(n/2)")
    balanced = wt == 1 << (n - 1)
    if n % 2 and ai == bound and not balanced:
        raise AssertionError("maximum immunity on odd n forces balance")
    return SurveyRecord(
        n=n,
        value_vector=vec,
        sanf=lam,
        degree=sym_degree(lam),
        weight=wt,
        balanced=balanced,
        trivial_balanced=bool(is_trivial_balanced(vec)),
        ai=ai,
        theorem3_ok=max_ai_necessary_condition(lam) if n >= 2 else True,
    )


def survey(n: int, filter: str = "all", jobs: int = 1) -> list[SurveyRecord]:
    """One record per function, ordered by value-vector integer.

    filter: one of all | trivial_balanced | balanced.  jobs > 1 fans
    record construction out to a thread pool; the output is identical
    for any job count (records are keyed by vector, order preserved).
    """
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if filter == "trivial_balanced" and n > FULL_SCAN_MAX:
        vecs = trivial_balanced_vectors(n)  # families stay enumerable past the cap
    else:
        vecs = list(enumerate_symmetric(n))
        if filter == "trivial_balanced":
            vecs = [v for v in vecs if is_trivial_balanced(v)]
        elif filter == "balanced":
            half = 1 << (n - 1)
            vecs = [v for v in vecs if sym_weight(v) == half]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_make_record, vecs))
    return [_make_record(v) for v in vecs]


def verify_theorems(
    n: int, jobs: int = 1, records: Optional[Sequence[SurveyRecord]] = None
) -> VerificationReport:
    """Full-scan aggregate check, odd 3 <= n <= 13.

    theorem2_holds: the trivial-balanced functions at immunity (n+1)/2
    are exactly the majority pair.  lemma2_holds: every maximum-immunity
    function is balanced.  theorem3_holds: every maximum-immunity
    function passes the coefficient condition.  Additionally every
    trivial-balanced non-majority vector must yield a pointwise-verified
    refutation annihilator of degree <= n//2 (and the majority pair must
    not); a failure raises instead of flagging.

    records may carry a precomputed survey(n, "all") to reuse work.
    """
    if n % 2 == 0 or not 3 <= n <= FULL_SCAN_MAX:
        raise ValueError(f"n must be odd with 3 <= n <= {FULL_SCAN_MAX}, got {n}")
    if records is None:
        records = survey(n, "all", jobs=jobs)
    if len(records) != 1 << (n + 1):
        raise ValueError("records must come from a full scan at this n")
    bound = (n + 1) // 2
    top = [r for r in records if r.ai == bound]
    tb_top = [r for r in top if r.trivial_balanced]
    majority = {majority_family(n, 0).v, majority_family(n, 1).v}
    ones = boolfn.ones_mask(n)
    for vec in trivial_balanced_vectors(n):
        got = refute_max_ai(vec)
        if vec.v in majority:
            if got is not None:
                raise AssertionError("majority vector produced a refutation")
            continue
        if got is None:
            raise AssertionError("non-majority vector lacks a refutation")
        table, side = got
        if table.bits == 0 or moebius(table).degree() > n // 2:
            raise AssertionError("refutation witness is unusable")
        target = expand(vec).bits ^ (ones if side else 0)
        if target & table.bits:
            raise AssertionError("refutation witness fails pointwise")
    return VerificationReport(
        n=n,
        total=len(records),
        max_ai_functions=tuple(r.value_vector.bits_str() for r in top),
        trivial_balanced_max_ai=tuple(r.value_vector.bits_str() for r in tb_top),
        theorem2_holds={r.value_vector.v for r in tb_top} == majority,
        lemma2_holds=all(r.balanced for r in top),
        theorem3_holds=all(r.theorem3_ok for r in top),
    )


CSV_COLUMNS = (
    "n",
    "value_vector",
    "sanf",
    "degree",
    "weight",
    "balanced",
    "trivial_balanced",
    "ai",
    "theorem3_ok",
)


def _b(x: bool) -> str:
    return "true" if x else "false"


def records_to_csv(records: Sequence[SurveyRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(
            [
                r.n,
                r.value_vector.bits_str(),
                r.sanf.bits_str(),
                r.degree,
                r.weight,
                _b(r.balanced),
                _b(r.trivial_balanced),
                r.ai,
                _b(r.theorem3_ok),
            ]
        )
    return buf.getvalue()


def record_to_dict(r: SurveyRecord) -> dict:
    return {
        "n": r.n,
        "value_vector": r.value_vector.bits_str(),
        "sanf": r.sanf.bits_str(),
        "degree": r.degree,
        "weight": r.weight,
        "balanced": r.balanced,
        "trivial_balanced": r.trivial_balanced,
        "ai": r.ai,
        "theorem3_ok": r.theorem3_ok,
    }


def records_to_json(records: Sequence[SurveyRecord]) -> str:
    return json.dumps([record_to_dict(r) for r in records], indent=2) + "\n"


def report_to_json(rep: VerificationReport) -> str:
    return (
        json.dumps(
            {
                "n": rep.n,
                "total": rep.total,
                "max_ai_functions": list(rep.max_ai_functions),
                "trivial_balanced_max_ai": list(rep.trivial_balanced_max_ai),
                "theorem2_holds": rep.theorem2_holds,
                "lemma2_holds": rep.lemma2_holds,
                "theorem3_holds": rep.theorem3_holds,
            },
            indent=2,
        )
        + "\n"
    )

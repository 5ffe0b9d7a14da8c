"""Cross-checks closed forms against enumeration and assembles psi tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional

from wheelcensus.counting import (
    bracelets,
    has_closed_form,
    max_case_distance,
    necklaces,
    necklaces_gcd_form,
    nearest_twelfth,
    partition_count,
    psi4_case_counts,
    psi_closed,
)
from wheelcensus.dihedral import (
    MAX_ENUMERATION_N,
    check_budget,
    enumerate_representatives,
    orbit_size,
    weight_counts,
)
from wheelcensus.distance import check_key_lemma, distance_tuple, min_pair_distance
from wheelcensus.errors import BudgetExceededError
from wheelcensus.wheel import RimSignature, SignedWheel, normalize_to_rim

ClosedForm = Callable[[int, int], int]

# psi_p(n) for 4 <= n <= 10, keyed by n; index p
GOLDEN_PSI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 2, 1, 1),
    5: (1, 1, 2, 2, 1, 1),
    6: (1, 1, 3, 3, 3, 1, 1),
    7: (1, 1, 3, 4, 4, 3, 1, 1),
    8: (1, 1, 4, 5, 8, 5, 4, 1, 1),
    9: (1, 1, 4, 7, 10, 10, 7, 4, 1, 1),
    10: (1, 1, 5, 8, 16, 16, 16, 8, 5, 1, 1),
}
GOLDEN_TOTALS: dict[int, int] = {4: 6, 5: 8, 6: 13, 7: 18, 8: 30, 9: 46, 10: 78}

CLOSED = "closed"
ENUMERATED = "enumerated"
AGREE = "both-agree"
DISAGREE = "disagree"


def _check_census_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"census needs n >= 4, got n={n}")
    if n > MAX_ENUMERATION_N:
        raise BudgetExceededError(f"census supports 4 <= n <= {MAX_ENUMERATION_N}, got n={n}")


def psi_enumerated(p: int, n: int) -> int:
    """psi_p(n) counted as dihedral orbits of weight-p rim words."""
    _check_census_n(n)
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got p={p}")
    return weight_counts(n)[p]


@dataclass(frozen=True)
class Cell:
    value: int
    method: str
    discrepancy: Optional[tuple[int, int]] = None  # (closed, enumerated)

    def to_dict(self) -> dict:
        out = {"value": self.value, "method": self.method}
        if self.discrepancy is not None:
            out["discrepancy"] = {"closed": self.discrepancy[0], "enumerated": self.discrepancy[1]}
        return out


@dataclass
class CensusTable:
    min_n: int
    max_n: int
    cells: dict[tuple[int, int], Cell] = field(default_factory=dict)
    totals: dict[int, int] = field(default_factory=dict)
    bracelet_totals: dict[int, int] = field(default_factory=dict)

    def value(self, p: int, n: int) -> int:
        return self.cells[(p, n)].value

    def column(self, n: int) -> list[int]:
        return [self.cells[(p, n)].value for p in range(n + 1)]

    def discrepancies(self) -> list[tuple[int, int, Cell]]:
        """Disagreeing cells ordered by n, then p."""
        bad = [(p, n, c) for (p, n), c in self.cells.items() if c.method == DISAGREE]
        return sorted(bad, key=lambda t: (t[1], t[0]))

    def total_mismatches(self) -> list[int]:
        return [n for n in sorted(self.totals) if self.totals[n] != self.bracelet_totals[n]]

    @property
    def ok(self) -> bool:
        return not self.discrepancies() and not self.total_mismatches()

    def _rows(self) -> list[list[str]]:
        ns = range(self.min_n, self.max_n + 1)
        rows = [["p", *map(str, ns)]]
        for p in range(self.max_n + 1):
            rows.append([str(p), *(str(self.value(p, n)) if p <= n else "" for n in ns)])
        rows.append(["psi(n)", *(str(self.totals[n]) for n in ns)])
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self._rows())
        return buf.getvalue()

    def to_markdown(self) -> str:
        rows = self._rows()
        lines = ["| " + " | ".join(rows[0]) + " |", "|" + "---|" * len(rows[0])]
        lines += ["| " + " | ".join(r) + " |" for r in rows[1:]]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "min_n": self.min_n,
            "max_n": self.max_n,
            "ok": self.ok,
            "columns": [
                {
                    "n": n,
                    "cells": [{"p": p, **self.cells[(p, n)].to_dict()} for p in range(n + 1)],
                    "psi": self.totals[n],
                    "bracelets": self.bracelet_totals[n],
                }
                for n in range(self.min_n, self.max_n + 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def build_table(min_n: int, max_n: int, closed_form: ClosedForm = psi_closed) -> CensusTable:
    """Fill every psi_p(n) cell by enumeration, cross-checked by closed form where one exists."""
    _check_census_n(min_n)
    _check_census_n(max_n)
    if min_n > max_n:
        raise ValueError(f"min_n ({min_n}) must not exceed max_n ({max_n})")
    table = CensusTable(min_n, max_n)
    for n in range(min_n, max_n + 1):
        counts = weight_counts(n)
        for p in range(n + 1):
            enumerated = counts[p]
            if not has_closed_form(p, n):
                table.cells[(p, n)] = Cell(enumerated, ENUMERATED)
                continue
            closed = closed_form(p, n)
            if closed == enumerated:
                table.cells[(p, n)] = Cell(enumerated, AGREE)
            else:
                table.cells[(p, n)] = Cell(enumerated, DISAGREE, (closed, enumerated))
        table.totals[n] = sum(counts)
        table.bracelet_totals[n] = bracelets(n, 2)
    return table


@dataclass(frozen=True)
class ClassRecord:
    """One switching-isomorphism class: its canonical rim word and invariants."""

    n: int
    p: int
    word: str
    distance_tuple: tuple[int, ...]
    orbit_size: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "word": self.word,
            "distance_tuple": list(self.distance_tuple),
            "orbit_size": self.orbit_size,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassRecord":
        return cls(
            int(data["n"]),
            int(data["p"]),
            str(data["word"]),
            tuple(int(x) for x in data["distance_tuple"]),
            int(data["orbit_size"]),
        )


@dataclass(frozen=True)
class Document:
    name: str
    content: str


def class_records(n: int, p: int) -> list[ClassRecord]:
    return [
        ClassRecord(n, p, w, distance_tuple(w).counts, orbit_size(w))
        for w in enumerate_representatives(n, p)
    ]


def export_representatives(n: int, p: int, fmt: str = "json") -> list[Document]:
    """One JSON or DOT document per weight-p class of W_n."""
    if fmt not in ("json", "dot"):
        raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'dot'")
    check_budget(n)
    docs = []
    for record in class_records(n, p):
        name = f"W{n}_p{p}_{record.word}"
        if fmt == "json":
            content = json.dumps(record.to_dict(), sort_keys=True) + "\n"
            docs.append(Document(name + ".json", content))
        else:
            wheel = RimSignature(n, record.word).to_wheel()
            docs.append(Document(name + ".dot", wheel.to_dot(name)))
    return docs


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return head if self.passed else f"{head}: {'; '.join(self.details[:5])}"


@dataclass
class VerificationReport:
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks],
        }

    def to_text(self) -> str:
        return "\n".join(c.line() for c in self.checks) + "\n"


def _result(name: str, failures: list[str]) -> CheckResult:
    return CheckResult(name, not failures, failures)


def _golden_check(table: CensusTable) -> CheckResult:
    failures = []
    for n, column in GOLDEN_PSI.items():
        if not table.min_n <= n <= table.max_n:
            continue
        for p, expected in enumerate(column):
            got = table.value(p, n)
            if got != expected:
                failures.append(f"p={p} n={n}: expected {expected}, got {got}")
        if table.totals[n] != GOLDEN_TOTALS[n]:
            failures.append(f"psi({n}): expected {GOLDEN_TOTALS[n]}, got {table.totals[n]}")
    return _result("golden-tables", failures)


def _closed_vs_enumerated(table: CensusTable) -> CheckResult:
    failures = [
        f"p={p} n={n}: closed={c.discrepancy[0]} enumerated={c.discrepancy[1]}"
        for p, n, c in table.discrepancies()
    ]
    return _result("closed-vs-enumerated", failures)


def _bracelet_identity(table: CensusTable) -> CheckResult:
    failures = [
        f"n={n}: sum of psi_p = {table.totals[n]}, bracelets(n,2) = {table.bracelet_totals[n]}"
        for n in table.total_mismatches()
    ]
    for n in range(1, table.max_n + 1):
        for k in (1, 2, 3):
            if necklaces(n, k) != necklaces_gcd_form(n, k):
                failures.append(f"necklaces({n},{k}): divisor and gcd forms differ")
    return _result("bracelet-identity", failures)


def _symmetry(table: CensusTable, closed_form: ClosedForm) -> CheckResult:
    failures = []
    for n in range(table.min_n, table.max_n + 1):
        for p in range(n // 2 + 1):
            if table.value(p, n) != table.value(n - p, n):
                failures.append(f"n={n}: psi_{p} != psi_{n - p} (enumerated)")
            if has_closed_form(p, n) and closed_form(p, n) != closed_form(n - p, n):
                failures.append(f"n={n}: psi_{p} != psi_{n - p} (closed)")
    return _result("symmetry", failures)


def _min_distance_bound(max_n: int) -> CheckResult:
    failures = []
    for n in range(8, max_n + 1):
        bound = max_case_distance(n)
        for edges in combinations(range(n), 4):
            d = min_pair_distance(RimSignature.from_edges(n, edges))
            if d > bound:
                failures.append(f"n={n} edges={edges}: min distance {d} > {bound}")
    return _result("min-distance-bound", failures)


def _case_split(max_n: int, closed_form: ClosedForm) -> CheckResult:
    failures = []
    for n in range(8, max_n + 1):
        split = [psi4_case_counts(n, r) for r in range(max_case_distance(n) + 1)]
        if sum(split) != closed_form(4, n):
            failures.append(f"n={n}: case counts sum to {sum(split)}, closed form gives {closed_form(4, n)}")
        observed = [0] * len(split)
        for word in enumerate_representatives(n, 4):
            observed[min_pair_distance(word)] += 1
        if observed != split:
            failures.append(f"n={n}: case counts {split}, enumeration {observed}")
    return _result("psi4-case-split", failures)


def _key_lemma(max_n: int) -> CheckResult:
    failures = []
    for n in range(4, max_n + 1):
        for p in range(min(4, n) + 1):
            report = check_key_lemma(n, p)
            for v in report.violations:
                failures.append(f"n={n} p={p}: tuple {v['tuple']} shared by {v['orbits']}")
            for w in report.invariance_failures:
                failures.append(f"n={n} p={p}: tuple not invariant on orbit of {w}")
    return _result("key-lemma-p<=4", failures)


def _partition_identity(limit: int = 200) -> CheckResult:
    failures = [
        f"m={m}: p(m;3)={partition_count(m, 3)}, nearest(m^2/12)={nearest_twelfth(m * m)}"
        for m in range(limit + 1)
        if partition_count(m, 3) != nearest_twelfth(m * m)
    ]
    return _result("partition-identity", failures)


def _switching_classes(max_n: int) -> CheckResult:
    failures = []
    for n in range(3, min(8, max_n) + 1):
        words = ["".join(bits) for bits in product("01", repeat=n)]
        images = {normalize_to_rim(SignedWheel(n, rim, spokes)).word for rim in words for spokes in words}
        if len(images) != 2**n:
            failures.append(f"n={n}: {len(images)} normal forms, expected {2**n}")
    return _result("switching-classes", failures)


def verify_all(max_n: int, closed_form: ClosedForm = psi_closed) -> VerificationReport:
    """Run every cross-check up to ``max_n``; failures are reported, never raised."""
    _check_census_n(max_n)
    table = build_table(4, max_n, closed_form)
    report = VerificationReport(max_n)
    report.checks += [
        _golden_check(table),
        _closed_vs_enumerated(table),
        _bracelet_identity(table),
        _symmetry(table, closed_form),
        _min_distance_bound(max_n),
        _case_split(max_n, closed_form),
        _key_lemma(max_n),
        _partition_identity(),
        _switching_classes(max_n),
    ]
    return report

"""Prime-range scans: per-prime ordinariness verdicts and the ordinary density.

Each record is a pure function of (surface, p, depth, budgets), so the report
does not depend on how the primes are spread over workers.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .gf import is_prime
from .surface import BudgetExceeded, QuarticSurface, is_ordinary

__all__ = [
    "SCHEMA_VERSION",
    "STATUSES",
    "CSV_FIELDS",
    "ScanConfig",
    "PrimeRecord",
    "ScanReport",
    "scan_prime",
    "run_scan",
    "summarize",
    "records_from_csv",
]

SCHEMA_VERSION = 1
STATUSES = ("good_presumed", "bad_singular", "bad_weil_violation", "degenerate", "skipped_budget")
CSV_FIELDS = ("p", "status", "count", "s1", "a1_mod_p", "ordinary")


@dataclass(frozen=True)
class ScanConfig:
    surface: QuarticSurface
    p_min: int
    p_max: int
    depth: int = 2
    workers: int = 1
    budget: Optional[int] = None
    scan_budget: Optional[int] = None

    def __post_init__(self):
        if self.p_min < 2 or self.p_max < self.p_min:
            raise ValueError("need 2 <= p_min <= p_max")
        if self.depth < 1 or self.workers < 1:
            raise ValueError("depth and workers must be >= 1")

    def primes(self):
        return [p for p in range(self.p_min, self.p_max + 1) if is_prime(p)]

    def echo(self):
        return {
            "surface": self.surface.name,
            "p_min": self.p_min,
            "p_max": self.p_max,
            "depth": self.depth,
            "budget": self.budget,
            "scan_budget": self.scan_budget,
        }


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    status: str
    count: Optional[int] = None
    s1: Optional[int] = None
    a1_mod_p: Optional[int] = None
    ordinary: Optional[bool] = None

    def csv_row(self):
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return [fmt(getattr(self, f)) for f in CSV_FIELDS]


def scan_prime(surface, p, depth=2, budget=None, scan_budget=None) -> PrimeRecord:
    try:
        verdict = is_ordinary(surface, p, depth, budget=budget, scan_budget=scan_budget)
    except BudgetExceeded:
        return PrimeRecord(p, "skipped_budget")
    if verdict.status == "bad_reduction":
        status = {"degenerate": "degenerate", "singular": "bad_singular",
                  "weil_violation": "bad_weil_violation"}[verdict.reason]
        res = verdict.count
        if res is None:
            return PrimeRecord(p, status)
        return PrimeRecord(p, status, res.count, res.s1, -res.s1 % p)
    res = verdict.count
    return PrimeRecord(p, "good_presumed", res.count, res.s1, -res.s1 % p, verdict.ordinary)


def _scan_task(args):
    return scan_prime(*args)


def summarize(records):
    records = list(records)
    hist = Counter(r.status for r in records)
    good = [r for r in records if r.status == "good_presumed"]
    n_ord = sum(1 for r in good if r.ordinary)
    fraction = Fraction(n_ord, len(good)) if good else None
    return {
        "records": len(records),
        "status_counts": {s: hist.get(s, 0) for s in STATUSES},
        "good": len(good),
        "ordinary": n_ord,
        "ordinary_fraction": None if fraction is None else f"{fraction.numerator}/{fraction.denominator}",
        "ordinary_fraction_decimal": None if fraction is None else round(float(fraction), 12),
        "non_ordinary_primes": sorted(r.p for r in good if not r.ordinary),
    }


@dataclass
class ScanReport:
    config: dict
    records: list
    summary: dict = field(default_factory=dict)

    @property
    def fraction(self):
        f = self.summary.get("ordinary_fraction")
        return None if f is None else Fraction(f)

    def to_csv(self):
        buf = io.StringIO()
        buf.write(f"# schema_version={SCHEMA_VERSION}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.records:
            w.writerow(r.csv_row())
        return buf.getvalue()

    def summary_document(self):
        doc = {"schema_version": SCHEMA_VERSION, "config": self.config, "summary": self.summary}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def as_dict(self):
        return {"config": self.config, "records": [asdict(r) for r in self.records], "summary": self.summary}


def run_scan(config: ScanConfig) -> ScanReport:
    tasks = [(config.surface, p, config.depth, config.budget, config.scan_budget) for p in config.primes()]
    if config.workers > 1 and len(tasks) > 1:
        # largest primes first so the slow tasks start early; order restored below
        order = sorted(range(len(tasks)), key=lambda i: -tasks[i][1])
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            done = list(pool.map(_scan_task, [tasks[i] for i in order]))
        records = [None] * len(tasks)
        for i, rec in zip(order, done):
            records[i] = rec
    else:
        records = [_scan_task(t) for t in tasks]
    records.sort(key=lambda r: r.p)
    return ScanReport(config.echo(), records, summarize(records))


def records_from_csv(text):
    """Parse the CSV written by :meth:`ScanReport.to_csv`."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    out = []
    for row in csv.DictReader(lines):
        def opt_int(v):
            return int(v) if v != "" else None

        ordinary = {"true": True, "false": False, "": None}[row["ordinary"]]
        out.append(PrimeRecord(int(row["p"]), row["status"], opt_int(row["count"]), opt_int(row["s1"]),
                               opt_int(row["a1_mod_p"]), ordinary))
    return out

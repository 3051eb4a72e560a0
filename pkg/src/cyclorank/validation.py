"""Ingestion of external class-group truth tables for cross-validation.

The table format is UTF-8 CSV with LF line endings, header `N,p,rank` or
`N,p,rank,rank_f`, integer fields only, and `#`-prefixed comment lines (used
to record the provenance of the data).  For p = 3 rows the observed rank is
compared against the exact criterion; for p >= 5 rows the observed rank is
checked against the [lower, upper] window, and when rank_f is supplied the
regular-prime relation rank >= 2*rank_f + (p-7)/2 is checked as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .errors import DomainError, TruthTableError
from .primes import is_prime
from .rank import bounds, rank3

_HEADERS = ("N,p,rank", "N,p,rank,rank_f")


@dataclass(frozen=True)
class TruthRow:
    """One externally computed rank record."""

    n: int
    p: int
    rank: int
    rank_f: int | None = None
    line: int = 0


@dataclass(frozen=True)
class Mismatch:
    n: int
    p: int
    line: int
    expected: str  # exact prediction, or a bound the observation violated
    observed: int


@dataclass
class ValidationReport:
    """Outcome of checking a truth table against the criteria and bounds."""

    rows_checked: int = 0
    rank3_rows: int = 0
    matches: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    bounds_rows: int = 0
    bound_violations: list[Mismatch] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.bound_violations


def parse_truth_table(path: Union[str, Path]) -> list[TruthRow]:
    """Parse rows; malformed content raises with the offending line number."""
    rows: list[TruthRow] = []
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if not header_seen:
                if line not in _HEADERS:
                    raise TruthTableError(
                        f"line {lineno}: expected header one of {_HEADERS}, got {line!r}"
                    )
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) not in (3, 4):
                raise TruthTableError(f"line {lineno}: expected 3 or 4 fields, got {len(parts)}")
            try:
                values = [int(s) for s in parts]
            except ValueError as exc:
                raise TruthTableError(f"line {lineno}: non-integer field ({exc})") from None
            rank_f = values[3] if len(values) == 4 else None
            rows.append(TruthRow(values[0], values[1], values[2], rank_f, line=lineno))
    if not header_seen:
        raise TruthTableError("line 1: missing header")
    return rows


def validate_rows(rows: list[TruthRow]) -> ValidationReport:
    report = ValidationReport()
    for row in rows:
        if not is_prime(row.n) or row.n % row.p != 1 or row.n == row.p:
            report.skipped.append(
                (row.line, f"N={row.n} is not a prime splitting for p={row.p}")
            )
            continue
        if row.rank < 1:
            report.skipped.append((row.line, f"rank {row.rank} below the genus-theory floor"))
            continue
        if row.p == 3:
            report.rows_checked += 1
            report.rank3_rows += 1
            predicted = rank3(row.n, "cornacchia")
            if predicted == row.rank:
                report.matches += 1
            else:
                report.mismatches.append(
                    Mismatch(row.n, row.p, row.line, str(predicted), row.rank)
                )
            continue
        try:
            rb = bounds(row.n, row.p)
        except DomainError as exc:
            report.skipped.append((row.line, str(exc)))
            continue
        report.rows_checked += 1
        report.bounds_rows += 1
        if not rb.lower <= row.rank <= rb.upper:
            report.bound_violations.append(
                Mismatch(row.n, row.p, row.line, f"[{rb.lower},{rb.upper}]", row.rank)
            )
        if row.rank_f is not None:
            floor = 2 * row.rank_f + (row.p - 7) // 2
            if row.rank < floor:
                report.bound_violations.append(
                    Mismatch(row.n, row.p, row.line, f">={floor} (from rank_f)", row.rank)
                )
    return report


def ingest_truth(path: Union[str, Path]) -> ValidationReport:
    """Parse and validate a truth table file."""
    return validate_rows(parse_truth_table(path))

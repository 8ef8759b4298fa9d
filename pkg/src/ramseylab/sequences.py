"""Subadditivity checks and finite-window limit estimation.

Everything runs on exact rationals so band boundaries (half and double) and
ceilings never suffer float rounding. A window is only ever a finite prefix:
limit estimates are labelled as such and never claim convergence.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


class PrerequisiteFailed(Exception):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))


@dataclass
class SequenceWindow:
    """Finite prefix a_1..a_M with an additive slack C and a threshold N."""

    values: list[Fraction]
    C: Fraction = Fraction(0)
    N: int = 0

    def __post_init__(self):
        if not self.values:
            raise ValueError("window needs at least one value")
        self.values = [_as_fraction(v) for v in self.values]
        self.C = _as_fraction(self.C)

    @property
    def M(self) -> int:
        return len(self.values)

    def a(self, n: int) -> Fraction:
        return self.values[n - 1]


@dataclass
class CheckReport:
    mode: str
    passed: bool
    violation: Optional[tuple[int, int]] = None
    pairs_checked: int = 0
    vacuous: bool = False

    def to_dict(self) -> dict:
        return {"mode": self.mode, "pass": self.passed,
                "violation": list(self.violation) if self.violation else None,
                "pairs_checked": self.pairs_checked, "vacuous": self.vacuous}


def _scan(w: SequenceWindow, mode: str, in_scope) -> CheckReport:
    slack = w.C if mode != "subadditive" else Fraction(0)
    checked = 0
    for m in range(1, w.M):
        for n in range(m, w.M - m + 1):
            if not in_scope(m, n):
                continue
            checked += 1
            if w.a(m + n) > w.a(m) + w.a(n) + slack:
                return CheckReport(mode, False, (m, n), checked)
    return CheckReport(mode, True, None, checked, vacuous=checked == 0)


def check_subadditive(w: SequenceWindow) -> CheckReport:
    """a_{m+n} <= a_m + a_n over every pair with m+n inside the window."""
    return _scan(w, "subadditive", lambda m, n: True)


def check_almost_subadditive(w: SequenceWindow) -> CheckReport:
    """Slack C, pairs restricted to the band 0.5*n <= m <= 2*n.

    With m <= n (symmetric condition) the band reduces to 2m >= n.
    """
    return _scan(w, "almost-subadditive", lambda m, n: 2 * m >= n)


def check_eventually_almost_subadditive(w: SequenceWindow) -> CheckReport:
    """Band check additionally requiring min(m, n) > N; a window too short to
    contain any eligible pair passes but is flagged vacuous."""
    return _scan(w, "eventually-almost-subadditive",
                 lambda m, n: 2 * m >= n and m > w.N)


@dataclass
class LimitEstimate:
    upper: Fraction     # min over the window of (a_n + C)/n
    argmin: int
    best_ratio: Fraction  # min a_n/n, as observed context
    window: int
    finite_window: bool = True

    def to_dict(self) -> dict:
        return {"upper_estimate": str(self.upper), "argmin": self.argmin,
                "best_ratio": str(self.best_ratio), "window": self.window,
                "finite_window": self.finite_window,
                "upper_estimate_float": float(self.upper)}


def limit_estimate(w: SequenceWindow) -> LimitEstimate:
    """Finite-window stand-in for the limit of a_n/n of an almost subadditive
    sequence: the minimum of (a_n + C)/n over the window bounds the limit
    from above; the true infimum may lie beyond M."""
    pre = check_almost_subadditive(w)
    if not pre.passed:
        raise PrerequisiteFailed(
            f"window is not almost subadditive with C={w.C}: "
            f"violated at {pre.violation}")
    best, arg = None, 0
    ratio = None
    for n in range(1, w.M + 1):
        val = (w.a(n) + w.C) / n
        if best is None or val < best:
            best, arg = val, n
        r = w.a(n) / n
        if ratio is None or r < ratio:
            ratio = r
    return LimitEstimate(best, arg, ratio, w.M)


# --------------------------------------------------------------------------
# input parsing: CSV rows of (n, value) or an inline JSON array


def window_from_csv(text: str, C=0, N: int = 0) -> SequenceWindow:
    rows = []
    for row in csv.reader(io.StringIO(text)):
        if not row or not row[0].strip():
            continue
        head = row[0].strip()
        if not head.lstrip("-").replace("/", "").replace(".", "").isdigit():
            continue  # header line
        rows.append((int(head), _as_fraction(row[1].strip())))
    if not rows:
        raise ValueError("no (n, value) rows found")
    rows.sort()
    indices = [n for n, _ in rows]
    if indices != list(range(1, len(rows) + 1)):
        raise ValueError("rows must cover n = 1..M without gaps")
    return SequenceWindow([v for _, v in rows], C=C, N=N)


def window_from_json(data, C=0, N: int = 0) -> SequenceWindow:
    if isinstance(data, str):
        data = json.loads(data)
    return SequenceWindow([_as_fraction(v) for v in data], C=C, N=N)

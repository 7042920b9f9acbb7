"""Exhaustive and periodic scans: first occurrences of each value, value
distributions over all words of a length, and long periodic runs with
power-of-two milestones.

The exhaustive engine stores one value array per word length, indexed by
lexicographic rank.  Rank doubles as a content key, and the ranks of a
word's prefixes, suffixes and reversed prefixes all obey one-step
recurrences in the Fibonacci base, so a full sweep of length m costs O(m)
array operations per word with every subword value shared across words.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import __version__
from .grundy import PeriodicTable, PeriodReport, detect_period
from .words import PeriodicPattern, Word, count_words

_MAX_SCAN_LENGTH = 60  # value bitmasks live in uint64


@dataclass
class FirstOccurrenceTable:
    """Least length attaining each value, with one witness word per value.
    Monotonicity in the value is observed, not assumed."""

    lengths: dict = field(default_factory=dict)    # value -> least length
    witnesses: dict = field(default_factory=dict)  # value -> Word
    max_length_scanned: int = 0


@dataclass
class DistributionRow:
    """Exact value counts over all valid words of one length."""

    length: int
    counts: dict
    total: int

    def proportions(self) -> dict:
        return {v: c / self.total for v, c in sorted(self.counts.items())}


@dataclass
class PeriodicScanResult:
    pattern: PeriodicPattern
    max_length: int
    values: np.ndarray                       # indexed by length, 0..max
    milestones: dict                         # 2**alpha -> least length
    report: Optional[PeriodReport]


def two_sig_figs(x: float) -> float:
    """Round to two significant figures (for percentage tables)."""
    if x == 0:
        return 0.0
    import math
    return round(x, 1 - int(math.floor(math.log10(abs(x)))))


class ScanTables:
    """Per-length value and colon-class arrays over all valid words.

    EPS[m][r] is the value of the rank-r word of length m.  CL[m] is a
    (2, count) array of colon classes for tails of length m, indexed by
    the colon-file flag and the tail's rank; -1 encodes loony.  Tiers are
    filled in rank chunks, and chunks are independent, so worker threads
    and sequential runs produce identical tables.
    """

    def __init__(self, chunk_size: int = 1 << 20, workers: int = 1):
        self.chunk_size = chunk_size
        self.workers = max(1, workers)
        self.C = [1, 2]  # valid word counts by length
        self.EPS = [np.zeros(1, dtype=np.int8)]
        self.CL = [np.full((2, 1), -1, dtype=np.int8)]

    def _count(self, n: int) -> int:
        while len(self.C) <= n:
            self.C.append(self.C[-1] + self.C[-2])
        return self.C[n]

    @property
    def max_length(self) -> int:
        return len(self.EPS) - 1

    def build(self, max_m: int) -> None:
        if max_m > _MAX_SCAN_LENGTH:
            raise ValueError(f"scan lengths above {_MAX_SCAN_LENGTH} are "
                             f"not supported")
        for m in range(self.max_length + 1, max_m + 1):
            self._tier(m)

    def _tier(self, m: int) -> None:
        n_words = self._count(m)
        eps = np.empty(n_words, dtype=np.int8)
        if m == 1:
            eps[:] = 1
        else:
            self._run_chunks(n_words,
                             lambda lo, hi: self._eps_chunk(m, lo, hi, eps))
        self.EPS.append(eps)
        cl = np.full((2, n_words), -1, dtype=np.int8)
        if m >= 2:
            self._run_chunks(n_words,
                             lambda lo, hi: self._cl_chunk(m, lo, hi, cl))
        self.CL.append(cl)

    def _run_chunks(self, total: int, fn) -> None:
        spans = [(lo, min(lo + self.chunk_size, total))
                 for lo in range(0, total, self.chunk_size)]
        if self.workers == 1 or len(spans) == 1:
            for lo, hi in spans:
                fn(lo, hi)
            return
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            list(pool.map(lambda span: fn(*span), spans))

    def _eps_chunk(self, m: int, lo: int, hi: int, out: np.ndarray) -> None:
        C = self.C
        EPS, CL = self.EPS, self.CL
        s_cur = np.arange(lo, hi, dtype=np.int64)  # rank of suffix w[j:]
        s_prev = None
        bits = []

        def advance():
            nonlocal s_cur, s_prev
            j = len(bits)
            b = s_cur >= C[m - 1 - j]
            bits.append(b.astype(np.int8))
            s_prev, s_cur = s_cur, s_cur - b * C[m - 1 - j]

        def fold(mask, cls):
            ok = cls >= 0
            sh = np.where(ok, cls, 0).astype(np.uint64)
            return mask | np.where(ok, np.uint64(1) << sh, np.uint64(0))

        advance()  # bits[0]; s_cur = rank of w[1:]
        mask = np.zeros(hi - lo, dtype=np.uint64)
        mask = fold(mask, CL[m - 1][bits[0], s_cur])  # end move at file 0
        advance()  # bits[1]; s_cur = rank of w[2:]
        a_pre = np.zeros(hi - lo, dtype=np.int64)   # prefix rank A[k-1]
        b_aux = np.zeros(hi - lo, dtype=np.int64)
        rr = bits[0].astype(np.int64) * C[0]        # reversed-prefix rank rr[k]
        for k in range(1, m - 1):
            advance()  # bits[k+1]; s_prev = rank w[k+1:], s_cur = rank w[k+2:]
            a, c, b = bits[k - 1], bits[k], bits[k + 1]
            side_rev = CL[k][c, rr]
            side_fwd = CL[m - k - 1][c, s_prev]
            ok = ((a == 1) | (side_rev >= 0)) & ((b == 1) | (side_fwd >= 0))
            val = (EPS[k - 1][a_pre] ^ EPS[m - k - 2][s_cur]).astype(np.uint64)
            mask |= np.where(ok, np.uint64(1) << val, np.uint64(0))
            a_new = a_pre + b_aux + bits[k - 1]
            b_aux = a_pre + bits[k - 1]
            a_pre = a_new
            rr = rr + bits[k].astype(np.int64) * C[k]
        mask = fold(mask, CL[m - 1][bits[m - 1], rr])  # mirror end move
        low_zero = (~mask) & (mask + np.uint64(1))
        out[lo:hi] = np.log2(low_zero.astype(np.float64)).astype(np.int8)

    def _cl_chunk(self, m: int, lo: int, hi: int, out: np.ndarray) -> None:
        C = self.C
        R = np.arange(lo, hi, dtype=np.int64)
        first = (R >= C[m - 1]).astype(np.int8)
        sub = np.where(first == 1, R - C[m - 1], R)  # rank of tail[1:]
        cap = self.EPS[m - 1][sub]
        adv = self.CL[m - 1][first, sub]
        out[0, lo:hi] = np.where(adv == cap, -1, cap)
        if m >= 3:
            # stopped colon file: tail starts with 0, i.e. rank < C[m-1]
            keep = R < C[m - 1]
            Ru = R[keep]
            i2 = (Ru >= C[m - 2]).astype(np.int8)
            wsub = np.where(i2 == 1, Ru - C[m - 2], Ru)
            cap_u = self.EPS[m - 1][Ru]
            adv_u = self.CL[m - 2][i2, wsub]
            out[1, lo:hi][keep] = np.where(adv_u == cap_u, cap_u, -1)

    # -- queries ------------------------------------------------------------

    def epsilon_of_rank(self, m: int, rank: int) -> int:
        return int(self.EPS[m][rank])

    def unrank(self, m: int, rank: int) -> Word:
        flags = []
        n, r = m, int(rank)
        while n > 0:
            if r < self._count(n - 1):
                flags.append(0)
                n -= 1
            else:
                r -= self._count(n - 1)
                flags.append(1)
                if n >= 2:
                    flags.append(0)
                n -= 2
        return Word(flags)

    def rank(self, word: Word) -> int:
        r = 0
        n = len(word)
        for i, flag in enumerate(word):
            if flag:
                r += self._count(n - 1 - i)
        return r


def first_occurrence(max_k: int, max_m: int,
                     tables: Optional[ScanTables] = None,
                     workers: int = 1) -> FirstOccurrenceTable:
    """Scan lengths 1..max_m for the least length attaining each value
    1..max_k, with a witness word; stops early once all are found."""
    tables = tables or ScanTables(workers=workers)
    result = FirstOccurrenceTable()
    for m in range(1, max_m + 1):
        missing = [k for k in range(1, max_k + 1) if k not in result.lengths]
        if not missing:
            break
        tables.build(m)
        eps = tables.EPS[m]
        for k in missing:
            hits = np.flatnonzero(eps == k)
            if hits.size:
                result.lengths[k] = m
                result.witnesses[k] = tables.unrank(m, int(hits[0]))
        result.max_length_scanned = m
    return result


def value_distribution(m: int, tables: Optional[ScanTables] = None,
                       workers: int = 1) -> DistributionRow:
    """Exact counts of each value over all valid words of length m."""
    tables = tables or ScanTables(workers=workers)
    tables.build(m)
    counts = np.bincount(tables.EPS[m].astype(np.int64))
    return DistributionRow(
        length=m,
        counts={v: int(c) for v, c in enumerate(counts) if c},
        total=count_words(m))


def periodic_scan(pattern: PeriodicPattern, max_length: int,
                  table: Optional[PeriodicTable] = None,
                  detect: bool = True) -> PeriodicScanResult:
    """Values of the pattern family up to max_length, the least length
    attaining each power of two, and the detected period if any."""
    if table is None:
        table = PeriodicTable(pattern, max_length)
    else:
        table.extend(max_length)
    values = table.values()[:max_length + 1]
    milestones = power_milestones(values)
    report = detect_period(values, pattern, table) if detect else None
    return PeriodicScanResult(pattern, max_length, values, milestones, report)


def power_milestones(values: np.ndarray) -> dict:
    """Least length attaining each power-of-two value present."""
    out = {}
    top = int(values.max(initial=0))
    power = 1
    while power <= top:
        hits = np.flatnonzero(values == power)
        if hits.size:
            out[power] = int(hits[0])
        power *= 2
    return out


# ---------------------------------------------------------------------------
# serialization: CSV or JSON-lines, deterministic, each file starting with
# a '#' provenance line recording what produced it.

def _provenance(kind: str, params: str) -> str:
    return f"# pawnnim {__version__} {kind} {params}"


def export(result, format: str = "csv", path: str = "-") -> None:
    """Write a scan result; ``path`` '-' means standard output."""
    if format not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {format!r}")
    if path == "-":
        write_report(result, format, sys.stdout)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            write_report(result, format, fh)


def write_report(result, format: str, fh) -> None:
    if isinstance(result, FirstOccurrenceTable):
        fh.write(_provenance(
            "first-occurrence",
            f"max_length={result.max_length_scanned}") + "\n")
        items = sorted(result.lengths.items())
        if format == "csv":
            fh.write("k,m,witness\n")
            for k, m in items:
                fh.write(f"{k},{m},{result.witnesses[k]}\n")
        else:
            for k, m in items:
                fh.write(json.dumps({"k": k, "m": m,
                                     "witness": str(result.witnesses[k])})
                         + "\n")
        return
    if isinstance(result, DistributionRow):
        fh.write(_provenance("distribution", f"length={result.length}") + "\n")
        if format == "csv":
            fh.write("value,count,percent\n")
            for v, c in sorted(result.counts.items()):
                pct = two_sig_figs(100.0 * c / result.total)
                fh.write(f"{v},{c},{pct}\n")
        else:
            fh.write(json.dumps({
                "length": result.length,
                "counts": {str(v): c for v, c in sorted(result.counts.items())},
                "total": result.total}) + "\n")
        return
    if isinstance(result, PeriodicScanResult):
        fh.write(_provenance("periodic", result.pattern.describe()
                             + f" max_length={result.max_length}") + "\n")
        meta = {"period": result.pattern.period,
                "stopped": sorted(result.pattern.stopped),
                "file_origin": result.pattern.file_origin,
                "max_length": result.max_length}
        fh.write(f"#phase-table: {json.dumps(meta, sort_keys=True)}\n")
        if format == "csv":
            for length, value in enumerate(result.values):
                fh.write(f"{length},{int(value)}\n")
        else:
            for length, value in enumerate(result.values):
                fh.write(json.dumps({"length": length, "value": int(value)})
                         + "\n")
        return
    raise TypeError(f"cannot export {type(result).__name__}")

"""Nim values of components: the general recursion, the closed form for
unstopped components, and the (phase, length) engine for periodic stopping
patterns with period detection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import engine
from .words import PeriodicPattern, Word, reverse_bits, validate


def mex(values) -> int:
    """Least nonnegative integer not in ``values``."""
    seen = 0
    for v in values:
        if v >= 0:
            seen |= 1 << v
    m = 0
    while seen & 1:
        seen >>= 1
        m += 1
    return m


def nim_sum(a: int, b: int) -> int:
    """Value of a sum of two Nim heaps: bitwise exclusive or."""
    if a < 0 or b < 0:
        raise ValueError("Nim values are nonnegative")
    return a ^ b


class GrundyTable:
    """Content-keyed memo of component values and colon classifications.

    Keys are packed words, so equal subwords are shared across different
    root words; sweeping all words of one length then costs O(m) per word
    because every proper subword is already present.  Filling is bottom-up
    by subword length, which keeps recursion depth flat and lets one
    length tier be computed concurrently once the previous tiers are
    frozen.
    """

    def __init__(self):
        self.eps = {1: 0}  # packed empty word -> 0
        self.colon = {}
        self._done = set()

    def ensure(self, word: Word) -> None:
        """Fill values for every contiguous subword of ``word``, in both
        orientations (mirror-image tails arise from moves near the left
        end)."""
        key = word.key
        if key in self._done:
            return
        if not word.is_valid:
            raise ValueError("invalid word: adjacent stopped files at index "
                             f"{validate(word)}")
        bits, n = word.bits, word.length
        rbits = reverse_bits(bits, n)
        eps = self.eps
        for ln in range(1, n + 1):
            mask = (1 << ln) - 1
            top = 1 << ln
            for s in range(n - ln + 1):
                sub = (bits >> s) & mask
                if sub | top not in eps:
                    eps[sub | top] = self._compute(sub, ln)
                # the reversed subword is a plain slice of the reversed word
                rsub = (rbits >> (n - s - ln)) & mask
                if rsub | top not in eps:
                    eps[rsub | top] = self._compute(rsub, ln)
        self._done.add(key)

    def _compute(self, bits: int, n: int) -> int:
        return mex(engine.move_values_int(self, bits, n))

    def epsilon(self, word: Word) -> int:
        value = self.eps.get(word.key)
        if value is not None:
            return value
        self.ensure(word)
        return self.eps[word.key]

    def __len__(self) -> int:
        return len(self.eps)


def epsilon(word: "Word | str", table: Optional[GrundyTable] = None) -> int:
    """Nim value of the component ``word`` (empty word counts 0)."""
    w = word if isinstance(word, Word) else Word(word)
    if table is None:
        table = GrundyTable()
    return table.epsilon(w)


_PLAIN_ZERO_RESIDUES = frozenset({0, 2, 3, 6, 9})


def epsilon_plain(m: int) -> int:
    """Closed form for a run of m unstopped files; period 10 in m."""
    if m < 0:
        raise ValueError("length must be nonnegative")
    return 0 if m % 10 in _PLAIN_ZERO_RESIDUES else 1


def loony_plain(m: int) -> bool:
    """Whether the end move leaving m unstopped files behind the colon is
    loony; true exactly for m = 5k +- 1."""
    if m < 1:
        raise ValueError("length must be positive")
    return m % 5 in (1, 4)


# ---------------------------------------------------------------------------
# periodic families
#
# For a word cut from a periodic stopping pattern, a subword's content is
# fixed by (start phase, length), so the whole family of lengths 1..n needs
# only p entries per length.  Three arrays indexed [phase, length] carry the
# values and the colon classes of forward and reversed tails; the implicit
# colon flag of an entry is the flag of the file adjacent to the tail, which
# the phase determines.

class InsufficientTableError(ValueError):
    pass


class PeriodicTable:
    """Value and colon-class arrays for one stopping pattern, filled bottom
    up over lengths and extendable in place."""

    def __init__(self, pattern: PeriodicPattern, max_length: int = 0):
        self.pattern = pattern
        self.p = pattern.period
        self.flags = np.array([pattern.phase_flag(q) for q in range(self.p)],
                              dtype=np.int64)
        self.n = 0
        p = self.p
        self.E = np.zeros((p, 1), dtype=np.int32)
        self.CF = np.full((p, 1), -1, dtype=np.int32)
        self.CR = np.full((p, 1), -1, dtype=np.int32)
        if max_length:
            self.extend(max_length)

    def extend(self, n: int) -> None:
        if n <= self.n:
            return
        p = self.p
        grown = np.zeros((p, n + 1), dtype=np.int32)
        grown[:, :self.n + 1] = self.E
        self.E = grown
        for name in ("CF", "CR"):
            arr = np.full((p, n + 1), -1, dtype=np.int32)
            arr[:, :self.n + 1] = getattr(self, name)
            setattr(self, name, arr)
        start = self.n + 1
        if start <= 1 <= n:
            self.E[:, 1] = 1
            start = 2
        for length in range(start, n + 1):
            self._fill(length)
        self.n = n

    def _fill(self, L: int) -> None:
        p, flags = self.p, self.flags
        E, CF, CR = self.E, self.CF, self.CR
        q = np.arange(p)
        v0 = CF[(q + 1) % p, L - 1]
        vL = CR[q, L - 1]
        if L >= 3:
            kk = np.arange(1, L - 1)[None, :]
            qq = q[:, None]
            a = flags[(qq + kk - 1) % p]
            b = flags[(qq + kk + 1) % p]
            e1 = E[qq, kk - 1]
            e2 = E[(qq + kk + 2) % p, L - 2 - kk]
            sf = CF[(qq + kk + 1) % p, L - 1 - kk]
            sr = CR[qq, kk]
            ok = ((a == 1) | (sr >= 0)) & ((b == 1) | (sf >= 0))
            xval = e1 ^ e2
        present = np.empty(L + 2, dtype=bool)
        for i in range(p):
            present[:] = False
            if 0 <= v0[i] <= L + 1:
                present[v0[i]] = True
            if 0 <= vL[i] <= L + 1:
                present[vL[i]] = True
            if L >= 3:
                vv = xval[i][ok[i]]
                present[vv[vv <= L + 1]] = True
            E[i, L] = int(np.argmin(present))
        # colon classes for tails of length L, both reading directions
        und_f = flags[(q - 1) % p]
        cap = E[(q + 1) % p, L - 1]
        adv = CF[(q + 1) % p, L - 1]
        cf_plain = np.where(adv == cap, -1, cap)
        if L >= 3:
            adv_u = CF[(q + 2) % p, L - 2]
            cf_und = np.where(adv_u == cap, cap, -1)
        else:
            cf_und = np.full(p, -1)
        CF[:, L] = np.where(und_f == 1, cf_und, cf_plain)

        und_r = flags[(q + L) % p]
        cap = E[q, L - 1]
        adv = CR[q, L - 1]
        cr_plain = np.where(adv == cap, -1, cap)
        if L >= 3:
            adv_u = CR[q, L - 2]
            cr_und = np.where(adv_u == cap, cap, -1)
        else:
            cr_und = np.full(p, -1)
        CR[:, L] = np.where(und_r == 1, cr_und, cr_plain)

    def values(self, phase: Optional[int] = None) -> np.ndarray:
        """Component values for lengths 0..n at the given start phase
        (default: the pattern's file origin)."""
        if phase is None:
            phase = self.pattern.file_origin % self.p
        return self.E[phase % self.p].copy()

    def save(self, path) -> None:
        np.savez_compressed(
            path, E=self.E, CF=self.CF, CR=self.CR, n=self.n,
            period=self.pattern.period,
            stopped=np.array(sorted(self.pattern.stopped), dtype=np.int64),
            file_origin=self.pattern.file_origin)

    @classmethod
    def load(cls, path) -> "PeriodicTable":
        data = np.load(path)
        pattern = PeriodicPattern(int(data["period"]),
                                  frozenset(int(r) for r in data["stopped"]),
                                  int(data["file_origin"]))
        table = cls(pattern)
        table.E = data["E"]
        table.CF = data["CF"]
        table.CR = data["CR"]
        table.n = int(data["n"])
        return table


def epsilon_periodic(pattern: PeriodicPattern, max_length: int,
                     table: Optional[PeriodicTable] = None) -> np.ndarray:
    """Values of word_from_pattern(pattern, len) for len = 0..max_length,
    as an array indexed by length."""
    if table is None:
        table = PeriodicTable(pattern, max_length)
    else:
        table.extend(max_length)
    return table.values()[:max_length + 1]


@dataclass
class PeriodReport:
    """Observed eventual periodicity of a value sequence.  ``verified``
    is set only when the doubling-window check passed on every phase."""

    pattern: PeriodicPattern
    preperiod: int
    period: int
    verified: bool
    window: tuple


def detect_period(values, pattern: PeriodicPattern,
                  table: Optional[PeriodicTable] = None):
    """Smallest (period, preperiod) with the matched stretch spanning at
    least two periods; None when nothing repeats within the data.

    With a phase table the search runs over every start phase at once:
    the recursion for one phase reads the others, so only a simultaneous
    repeat supports the window argument (single rows can settle into a
    proper divisor of the family period).  Without a table only the given
    value row is examined, which is an observation, never verified.
    """
    if table is not None:
        rows = table.E[:, :table.n + 1]
    else:
        rows = np.asarray(values)[None, :]
    nmax = rows.shape[1] - 1
    for P in range(1, nmax // 2 + 1):
        eq = (rows[:, P:] == rows[:, :-P]).all(axis=0)
        bad = np.flatnonzero(~eq)
        n0 = 0 if bad.size == 0 else int(bad[-1]) + 1
        if n0 + 2 * P <= nmax:
            window = (n0 + P, 2 * (n0 + P) + 3)
            verified = False
            if table is not None and table.n >= window[1]:
                verified = verify_period_window(table, pattern, n0, P)
            return PeriodReport(pattern, n0, P, verified, window)
    return None


def verify_period_window(table: PeriodicTable, pattern: PeriodicPattern,
                         preperiod: int, period: int) -> bool:
    """Doubling-window proof check: values must repeat with the claimed
    period, on every start phase, for all lengths from preperiod+period up
    to twice (preperiod+period) plus three.  Three is the most files one
    compound move removes (interior exchanges delete three, end exchanges
    two), so agreement on this window forces agreement everywhere above
    the preperiod."""
    hi = 2 * (preperiod + period) + 3
    lo = preperiod + period
    if table.n < hi:
        raise InsufficientTableError(
            f"table filled to {table.n}, need {hi}")
    E = table.E
    return bool(np.array_equal(E[:, lo:hi + 1], E[:, lo - period:hi + 1 - period]))


# ---------------------------------------------------------------------------
# value-dump format: '#' provenance line, a '#phase-table:' checkpoint that
# records what was computed (enough to rebuild and extend a run), then one
# 'length,value' record per line.

def dump_values(values, pattern: PeriodicPattern, fh, version: str = "") -> None:
    meta = {"period": pattern.period,
            "stopped": sorted(pattern.stopped),
            "file_origin": pattern.file_origin,
            "max_length": len(values) - 1}
    fh.write(f"# pawnnim{(' ' + version) if version else ''} periodic values "
             f"{pattern.describe()}\n")
    fh.write(f"#phase-table: {json.dumps(meta, sort_keys=True)}\n")
    for length, value in enumerate(values):
        fh.write(f"{length},{int(value)}\n")


def load_dump(fh):
    """Read a value dump back: returns (pattern, values array).  Lines
    starting '#' other than the checkpoint are ignored."""
    pattern = None
    lengths = []
    vals = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#phase-table:"):
            meta = json.loads(line.split(":", 1)[1])
            pattern = PeriodicPattern(meta["period"],
                                      frozenset(meta["stopped"]),
                                      meta["file_origin"])
            continue
        if line.startswith("#"):
            continue
        a, b = line.split(",")
        lengths.append(int(a))
        vals.append(int(b))
    if lengths != list(range(len(lengths))):
        raise ValueError("dump records must cover lengths 0..n in order")
    return pattern, np.array(vals, dtype=np.int64)

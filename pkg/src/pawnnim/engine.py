"""Move classification for pawn-game components.

Every move from a quiescent component [w] is entailing, but after the
forced exchanges it is either loony (loses against best play regardless of
the rest of the position) or equivalent to a non-entailing move to a Nim
value.  The classification is a recursion over the colon components that
the forced replies produce; this module implements it and the taxonomy of
entailing components with their forced options.

Value lookups go through a table object (see grundy.GrundyTable) that maps
packed subwords to their Nim values and caches colon classifications.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import Word, reverse_bits, validate

LOONY = -1  # internal encoding of the loony class; values are >= 0


@dataclass(frozen=True)
class MoveClass:
    """Outcome class of a move: loony, or equivalent to a move to *value."""

    value: Optional[int]

    @classmethod
    def loony(cls) -> "MoveClass":
        return cls(None)

    @classmethod
    def of(cls, value: int) -> "MoveClass":
        if value < 0:
            raise ValueError("Nim value must be nonnegative")
        return cls(value)

    @property
    def is_loony(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "loony" if self.value is None else f"*{self.value}"


def _from_int(c: int) -> MoveClass:
    return MoveClass(None) if c < 0 else MoveClass(c)


@dataclass(frozen=True)
class ColonContext:
    """A colon component [:w] (plain) or an underlined one (stopped colon
    file).  ``tail`` runs from the file next to the colon inward."""

    underlined: bool
    tail: Word

    def __post_init__(self):
        if self.underlined and self.tail and self.tail[0] == 1:
            raise ValueError("file next to a stopped colon file cannot be "
                             "stopped")


@dataclass(frozen=True)
class ColonDot:
    """[:.] or its underlined form: colon pawn plus one unopposed pawn;
    entails the closing exchange."""

    underlined: bool = False


@dataclass(frozen=True)
class DotColon:
    """[.:w]: an unopposed pawn next to the colon file; the single forced
    move recaptures, producing [:w]."""

    underlined: bool
    tail: Word


@dataclass(frozen=True)
class StoppedPairColon:
    """A closed stopped file still guarding the adjacent colon file; the
    attacked pawn must advance, never capture."""

    tail: Word


@dataclass(frozen=True)
class InteriorColon:
    """Colon file strictly inside a component: ``left`` and ``right`` are
    the nonempty file runs on either side of the colon."""

    left: Word
    colon_stopped: bool
    right: Word

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValueError("interior colon needs files on both sides")
        if self.colon_stopped and (self.left[-1] == 1 or self.right[0] == 1):
            raise ValueError("stopped colon file next to a stopped file")


@dataclass(frozen=True)
class MoveSite:
    """A move in component ``word``: advance the pawn on file ``k``
    (0-based)."""

    word: Word
    k: int

    def __post_init__(self):
        if not 0 <= self.k < len(self.word):
            raise IndexError("file index out of range")


@dataclass(frozen=True)
class EntailedOption:
    """One forced reply: the component list it leaves behind (empty tuple
    means a move to 0)."""

    components: tuple


def entailed_options(ctx) -> "list[EntailedOption]":
    """Forced options of an entailing component, one per legal reply.

    Components inside an option are reported in canonical orientation
    (colon at the left end); mirror images are identified.
    """
    if isinstance(ctx, ColonDot):
        return [EntailedOption(())]
    if isinstance(ctx, DotColon):
        return [EntailedOption((ColonContext(ctx.underlined, ctx.tail),))]
    if isinstance(ctx, StoppedPairColon):
        t = ctx.tail
        if len(t) == 0:
            raise ValueError("malformed component: empty tail")
        if len(t) == 1:
            return [EntailedOption(())]
        return [EntailedOption((ColonContext(t[0] == 1, t[1:]),))]
    if isinstance(ctx, ColonContext):
        t = ctx.tail
        if len(t) == 0:
            raise ValueError("malformed component: empty tail")
        rest = t[1:]
        capture = (ColonDot(ctx.underlined),) + ((rest,) if rest else ())
        if not ctx.underlined:
            advance = (ColonContext(t[0] == 1, rest),) if rest else ()
        else:
            advance = (StoppedPairColon(rest),) if rest else ()
        return [EntailedOption(capture), EntailedOption(advance)]
    if isinstance(ctx, InteriorColon):
        w1, w2 = ctx.left[:-1], ctx.right[1:]
        left_cap = ((w1,) if w1 else ()) + (
            DotColon(ctx.colon_stopped, ctx.right),)
        right_cap = (DotColon(ctx.colon_stopped, ctx.left.reversed()),) + (
            (w2,) if w2 else ())
        return [EntailedOption(left_cap), EntailedOption(right_cap)]
    raise TypeError(f"not an entailing component: {ctx!r}")


# ---------------------------------------------------------------------------
# int-level classification core
#
# Words travel as (bits, n) pairs; classes as ints with LOONY == -1.  The
# table supplies eps[packed word] and caches colon[packed key].  Everything
# is iterative so kilofile words do not hit the recursion limit.

def _colon_key(und: int, bits: int, n: int) -> int:
    return ((bits | (1 << n)) << 1) | und


def colon_class_int(table, und: int, bits: int, n: int) -> int:
    """Class of a move to the colon component (und, tail=(bits, n)).

    Plain colon with tail i.w: the capture interprets the move as a move
    to [w]; the advance hands the shorter colon back to the mover.  The
    move is loony exactly when the advance is a non-loony move worth the
    capture value.  Underlined colon with tail 0.i.w: the interposed
    stopped pair flips the parity of the advance line, so the move is
    non-loony exactly when the advance matches the capture value.
    """
    if und and n >= 1 and (bits & 1):
        raise ValueError("file next to a stopped colon file cannot be "
                         "stopped")
    colon = table.colon
    key = _colon_key(und, bits, n)
    val = colon.get(key)
    if val is not None:
        return val
    stack = []
    while True:
        if (n <= 1 and not und) or (n <= 2 and und):
            val = LOONY
            colon[key] = val
            break
        stack.append((und, bits, n, key))
        if und:
            und, bits, n = (bits >> 1) & 1, bits >> 2, n - 2
        else:
            und, bits, n = bits & 1, bits >> 1, n - 1
        key = _colon_key(und, bits, n)
        val = colon.get(key)
        if val is not None:
            break
    eps = table.eps
    for und, bits, n, key in reversed(stack):
        cap = eps[(bits >> 1) | (1 << (n - 1))]
        if und:
            val = cap if val == cap else LOONY
        else:
            val = LOONY if val == cap else cap
        colon[key] = val
    return val


def move_values_int(table, wbits: int, wn: int):
    """Yield the class of the move at each file k = 0..wn-1 of the word."""
    if wn == 1:
        yield 0
        return
    eps = table.eps
    # k = 0: end move, colon on file 0 with the rest as tail
    yield colon_class_int(table, wbits & 1, wbits >> 1, wn - 1)
    revpref = wbits & 1  # reverse of w[0:1]
    for k in range(1, wn - 1):
        a = (wbits >> (k - 1)) & 1
        b = (wbits >> (k + 1)) & 1
        c = (wbits >> k) & 1
        ok = True
        if a == 0:
            # rev(w[0:k]) starts with a == 0; colon read outward to the left
            if colon_class_int(table, c, revpref, k) == LOONY:
                ok = False
        if ok and b == 0:
            if colon_class_int(table, c, wbits >> (k + 1), wn - k - 1) == LOONY:
                ok = False
        if ok:
            e1 = eps[(wbits & ((1 << (k - 1)) - 1)) | (1 << (k - 1))]
            e2 = eps[(wbits >> (k + 2)) | (1 << (wn - k - 2))]
            yield e1 ^ e2
        else:
            yield LOONY
        revpref = (revpref << 1) | ((wbits >> k) & 1)
    # k = wn-1: mirror end move
    yield colon_class_int(table, (wbits >> (wn - 1)) & 1, revpref, wn - 1)


def move_class_int(table, wbits: int, wn: int, k: int) -> int:
    if wn == 1:
        return 0
    if k == 0:
        return colon_class_int(table, wbits & 1, wbits >> 1, wn - 1)
    if k == wn - 1:
        return colon_class_int(table, (wbits >> (wn - 1)) & 1,
                               reverse_bits(wbits & ((1 << (wn - 1)) - 1),
                                            wn - 1), wn - 1)
    a = (wbits >> (k - 1)) & 1
    b = (wbits >> (k + 1)) & 1
    c = (wbits >> k) & 1
    if a == 0:
        side = colon_class_int(table, c,
                               reverse_bits(wbits & ((1 << k) - 1), k), k)
        if side == LOONY:
            return LOONY
    if b == 0:
        side = colon_class_int(table, c, wbits >> (k + 1), wn - k - 1)
        if side == LOONY:
            return LOONY
    e1 = table.eps[(wbits & ((1 << (k - 1)) - 1)) | (1 << (k - 1))]
    e2 = table.eps[(wbits >> (k + 2)) | (1 << (wn - k - 2))]
    return e1 ^ e2


# ---------------------------------------------------------------------------
# public wrappers

def classify_colon(underlined: bool, tail: Word, table) -> MoveClass:
    """Classify a move to the colon component with the given tail.

    The table must cover the proper subwords of ``tail``; it is filled on
    demand.
    """
    if not tail.is_valid:
        raise ValueError("invalid word: adjacent stopped files at index "
                         f"{validate(tail)}")
    table.ensure(tail)
    return _from_int(colon_class_int(table, int(underlined), tail.bits,
                                     tail.length))


def classify_move(word: Word, k: int, table) -> MoveClass:
    """Classify the move at file k (0-based) of the component ``word``."""
    if not word.is_valid:
        raise ValueError("invalid word: adjacent stopped files at index "
                         f"{validate(word)}")
    if not 0 <= k < len(word):
        raise IndexError("file index out of range")
    table.ensure(word)
    return _from_int(move_class_int(table, word.bits, word.length, k))


def classify_site(site: MoveSite, table) -> MoveClass:
    return classify_move(site.word, site.k, table)

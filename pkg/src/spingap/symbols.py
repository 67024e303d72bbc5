"""Symbol combinatorics behind the unipotent character parametrisation.

A symbol is a pair (X, Y) of strictly increasing sequences of
non-negative integers.  Unipotent characters of the classical groups
handled here are parametrised by equivalence classes of symbols of rank
n, with the admissible defect residue selecting the series:

* odd-dimensional spin / symplectic groups (family ``B``): odd defect,
* split even spin groups (family ``D+``): defect = 0 mod 4,
* non-split even spin groups (family ``D-``): defect = 2 mod 4.

Defect-zero symbols with X == Y are "degenerate" and carry two
characters each; enumeration emits both copies, tagged ' and ''.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import WrongDefectParity

__all__ = [
    "Family",
    "FamilyTag",
    "Symbol",
    "SymbolClass",
    "rank",
    "defect",
    "shift",
    "reduce",
    "canonical",
    "enumerate_symbols",
    "unipotent_count",
    "bipartition_count",
    "predicted_count",
    "parse_symbol",
    "format_symbol",
]


class Family(Enum):
    """Which classical series the symbols parametrise."""

    BC = "B"
    DPLUS = "D+"
    DMINUS = "D-"

    def allows_defect(self, d: int) -> bool:
        if self is Family.BC:
            return d % 2 == 1
        if self is Family.DPLUS:
            return d % 4 == 0
        return d % 4 == 2

    @property
    def epsilon(self) -> int | None:
        """Type sign of the even-dimensional groups; None for family B."""
        if self is Family.BC:
            return None
        return 1 if self is Family.DPLUS else -1

    @classmethod
    def from_string(cls, s: str) -> "Family":
        for fam in cls:
            if fam.value == s:
                return fam
        raise ValueError(f"unknown family {s!r} (expected B, D+ or D-)")


@dataclass(frozen=True)
class FamilyTag:
    """A family together with the rank n it is instantiated at."""

    kind: Family
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank must be at least 2")


@dataclass(frozen=True, order=True)
class Symbol:
    """Pair of strictly increasing sequences of non-negative integers."""

    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self):
        for row in (self.X, self.Y):
            if any(a < 0 for a in row):
                raise ValueError(f"negative entry in {row}")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")

    def swapped(self) -> "Symbol":
        return Symbol(self.Y, self.X)

    def __str__(self) -> str:
        return format_symbol(self)


def rank(s: Symbol) -> int:
    """Entry sum minus the floor of ((r+s-1)/2)^2."""
    t = len(s.X) + len(s.Y) - 1
    return sum(s.X) + sum(s.Y) - (t * t) // 4


def defect(s: Symbol) -> int:
    return abs(len(s.X) - len(s.Y))


def shift(s: Symbol) -> Symbol:
    """The equivalent symbol ({0} u (X+1), {0} u (Y+1))."""
    return Symbol(
        (0,) + tuple(x + 1 for x in s.X),
        (0,) + tuple(y + 1 for y in s.Y),
    )


def reduce(s: Symbol) -> Symbol:
    """Strip common leading zeros (inverse shifts) until none remain."""
    X, Y = s.X, s.Y
    while X and Y and X[0] == 0 and Y[0] == 0:
        X = tuple(x - 1 for x in X[1:])
        Y = tuple(y - 1 for y in Y[1:])
    return Symbol(X, Y)


def _kind(f) -> Family:
    return f.kind if isinstance(f, FamilyTag) else f


def canonical(s: Symbol, f) -> Symbol:
    """Unique class representative: reduced, with orientation fixed.

    Nonzero defect puts the longer row first; defect zero puts the
    lexicographically smaller row first.  Raises WrongDefectParity when
    the defect residue is not admissible for the family.
    """
    fam = _kind(f)
    d = defect(s)
    if not fam.allows_defect(d):
        raise WrongDefectParity(f"defect {d} not admissible for family {fam.value}")
    r = reduce(s)
    if d != 0:
        if len(r.X) < len(r.Y):
            r = r.swapped()
    elif r.Y < r.X:
        r = r.swapped()
    return r


@dataclass(frozen=True, order=True)
class SymbolClass:
    """One unipotent character: a canonical symbol plus copy marker.

    Degenerate defect-zero symbols (X == Y) carry two characters; the
    copies are marked ' and ''.  Non-degenerate classes have copy == "".
    """

    symbol: Symbol
    copy: str = ""

    @property
    def degenerate(self) -> bool:
        return self.copy != ""

    def label(self) -> str:
        return format_symbol(self.symbol) + self.copy


def _distinct_rows(length: int, total: int, cap: int):
    """Strictly increasing rows of given length and entry sum, entries <= cap.

    Built descending from the largest entry; emitted ascending.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    # largest entry m: the remaining length-1 distinct entries lie in [0, m-1]
    k = length - 1
    for m in range(min(cap, total), -1, -1):
        rest = total - m
        if rest < k * (k - 1) // 2:
            continue
        if rest > k * (m - 1) - k * (k - 1) // 2:
            continue
        for tail in _distinct_rows(k, rest, m - 1):
            yield tail + (m,)


def _reduced_pairs(r: int, s: int, total: int):
    """Reduced symbols with |X| = r, |Y| = s and given entry sum."""
    for sx in range(total + 1):
        sy = total - sx
        if sx < r * (r - 1) // 2 or sy < s * (s - 1) // 2:
            continue
        for X in _distinct_rows(r, sx, sx):
            for Y in _distinct_rows(s, sy, sy):
                if r and s and X[0] == 0 and Y[0] == 0:
                    continue
                yield Symbol(X, Y)


def _allowed_defects(fam: Family, n: int):
    """Defects admissible for the family that can occur at rank n."""
    d = {Family.BC: 1, Family.DPLUS: 0, Family.DMINUS: 2}[fam]
    step = 2 if fam is Family.BC else 4
    while True:
        min_rank = (d * d - 1) // 4 if d % 2 else (d * d) // 4
        if min_rank > n:
            return
        yield d
        d += step


def enumerate_symbols(f: FamilyTag) -> list[SymbolClass]:
    """All unipotent characters of the family at rank n.

    Complete and duplicate-free: one canonical symbol per equivalence
    class, with degenerate defect-zero symbols emitted twice.  The
    search over row sizes (a, b) is bounded because a reduced symbol of
    sizes (a, b) has entry sum at least C(a,2) + C(b,2) + min(a, b).
    """
    fam, n = f.kind, f.n
    out: list[SymbolClass] = []
    for d in _allowed_defects(fam, n):
        b = 0
        while True:
            r, s = b + d, b
            t = r + s - 1
            total = n + (t * t) // 4
            min_sum = r * (r - 1) // 2 + s * (s - 1) // 2 + (min(r, s) if s else 0)
            if min_sum > total:
                break
            for sym in _reduced_pairs(r, s, total):
                if d == 0:
                    if sym.X > sym.Y:
                        continue  # keep one orientation per unordered pair
                    if sym.X == sym.Y:
                        out.append(SymbolClass(sym, "'"))
                        out.append(SymbolClass(sym, "''"))
                        continue
                out.append(SymbolClass(sym))
            b += 1
    out.sort()
    return out


def unipotent_count(f: FamilyTag) -> int:
    """Number of unipotent characters (degenerate symbols counted twice)."""
    return len(enumerate_symbols(f))


@lru_cache(maxsize=None)
def _partition_counts(limit: int) -> tuple[int, ...]:
    """p(0..limit) by the classic coin-style DP."""
    counts = [0] * (limit + 1)
    counts[0] = 1
    for part in range(1, limit + 1):
        for m in range(part, limit + 1):
            counts[m] += counts[m - part]
    return tuple(counts)


def bipartition_count(m: int) -> int:
    """Number of ordered pairs of partitions with total size m."""
    if m < 0:
        return 0
    p = _partition_counts(m)
    return sum(p[k] * p[m - k] for k in range(m + 1))


def predicted_count(f: FamilyTag) -> int:
    """Character count predicted by bipartition bookkeeping.

    Redundant cross-check for enumerate_symbols, never the primary
    enumerator: defect d contributes the bipartitions of n minus the
    minimal rank at that defect; defect 0 is counted as unordered pairs
    with symmetric pairs (degenerate symbols) weighted twice.
    """
    fam, n = f.kind, f.n
    total = 0
    for d in _allowed_defects(fam, n):
        min_rank = (d * d - 1) // 4 if d % 2 else (d * d) // 4
        m = n - min_rank
        ordered = bipartition_count(m)
        if d == 0:
            sym = _partition_counts(m)[m // 2] if m % 2 == 0 else 0
            total += (ordered + 3 * sym) // 2
        else:
            total += ordered
    return total


def parse_symbol(text: str) -> Symbol:
    """Parse the "x1,x2,...;y1,y2,..." wire syntax."""
    if ";" not in text:
        raise ValueError(f"symbol text {text!r} lacks the ';' row separator")
    xs, ys = text.split(";", 1)
    to_row = lambda part: tuple(int(tok) for tok in part.split(",") if tok.strip() != "")
    return Symbol(to_row(xs), to_row(ys))


def format_symbol(s: Symbol) -> str:
    return ",".join(map(str, s.X)) + ";" + ",".join(map(str, s.Y))

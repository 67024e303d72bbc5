"""Character degree engine.

Three layers:

* `generic_degree` computes the degree polynomial of the unipotent
  character attached to a symbol, from the standard product formula over
  the symbol's entries (validated row-by-row against the small-character
  catalogues below, which is the module's central regression).
* catalogue tables of the small unipotent characters per family
  (`unipotent_rows`), with symbol templates in n, closed-form degrees,
  and applicability conditions.
* the small-character tables of the full groups (`family_table`),
  combining unipotent rows with semisimple series built by Jordan
  assembly from literal centraliser order data.

All arithmetic is exact; any NonExactDivision escaping from here means a
formula/symbol mismatch and is deliberately fatal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import BadInput, NonExactDivision, WrongDefectParity
from .qpoly import ONE, QPoly, q_minus, q_plus, q_power
from .symbols import (
    Family,
    FamilyTag,
    Symbol,
    SymbolClass,
    canonical,
    defect,
    enumerate_symbols,
    format_symbol,
    rank,
)

__all__ = [
    "order_part",
    "generic_degree",
    "jordan_degree",
    "UnipotentCharacter",
    "unipotent_characters",
    "UnipRow",
    "unipotent_rows",
    "instantiate_row",
    "expected_small_unipotent",
    "CharacterEntry",
    "family_table",
]

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# integer coefficient lists: fast internal arithmetic for the product formula
# ---------------------------------------------------------------------------


def _mul_binom(cs: list[int], k: int, sign: int) -> list[int]:
    """cs * (q^k + sign) on dense integer coefficient lists."""
    out = [0] * (len(cs) + k)
    for i, c in enumerate(cs):
        if c:
            out[i + k] += c
            out[i] += sign * c
    return out


def _product(binoms) -> list[int]:
    cs = [1]
    for k, sign in binoms:
        cs = _mul_binom(cs, k, sign)
    return cs


def _divide_exact_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials with monic divisor."""
    while num and num[-1] == 0:
        num = num[:-1]
    while den and den[-1] == 0:
        den = den[:-1]
    assert den and den[-1] == 1, "internal divisor must be monic"
    if len(num) < len(den):
        raise NonExactDivision("degree of quotient would be negative")
    rem = list(num)
    dd = len(den) - 1
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            rem[i - dd + j] -= c * dj
    if any(rem):
        raise NonExactDivision("nonzero remainder in degree formula")
    return quot


# ---------------------------------------------------------------------------
# group orders and the symbol degree formula
# ---------------------------------------------------------------------------


def _split(f: FamilyTag) -> tuple[Family, int]:
    if not isinstance(f, FamilyTag):
        raise BadInput("expected a FamilyTag")
    return f.kind, f.n


def _order_binoms(kind: Family, n: int) -> list[tuple[int, int]]:
    if kind is Family.BC:
        return [(2 * i, -1) for i in range(1, n + 1)]
    eps = kind.epsilon
    return [(n, -eps)] + [(2 * i, -1) for i in range(1, n)]


def order_part(f: FamilyTag) -> QPoly:
    """Part of the group order coprime to the defining characteristic."""
    kind, n = _split(f)
    return QPoly(_product(_order_binoms(kind, n)))


def generic_degree(s: Symbol, f: FamilyTag) -> QPoly:
    """Degree of the unipotent character attached to a symbol.

    Product formula over the entries: the group-order part times the
    row-difference and cross-sum products, divided by a power of 2, a
    power of q, and the entry-indexed order factors.  Division must be
    exact.  Degenerate defect-zero symbols get the extra factor 1/2
    applied here, so downstream consumers always see correct degrees.
    """
    kind, n = _split(f)
    d = defect(s)
    if not kind.allows_defect(d):
        raise WrongDefectParity(
            f"defect {d} of {format_symbol(s)} not admissible for {kind.value}"
        )
    if rank(s) != n:
        raise BadInput(f"symbol {format_symbol(s)} has rank {rank(s)}, not {n}")

    X, Y = s.X, s.Y
    a, b = len(X), len(Y)
    num_binoms = list(_order_binoms(kind, n))
    num_shift = 0
    num_scalar = 1
    for row in (X, Y):
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                num_shift += row[i]
                num_binoms.append((row[j] - row[i], -1))
    for x in X:
        for y in Y:
            if x == y:
                num_scalar *= 2
                num_shift += x
            else:
                num_shift += min(x, y)
                num_binoms.append((abs(x - y), +1))

    den_binoms = [(2 * k, -1) for x in X for k in range(1, x + 1)]
    den_binoms += [(2 * k, -1) for y in Y for k in range(1, y + 1)]
    den_shift = 0
    i = 1
    while a + b - 2 * i >= 2:
        den_shift += comb(a + b - 2 * i, 2)
        i += 1
    two_power = (a + b - 1) // 2

    num = [0] * num_shift + _product(num_binoms)
    den = [0] * den_shift + _product(den_binoms)
    quot = _divide_exact_int(num, den)
    scale = Fraction(num_scalar, 2**two_power)
    if a == b and X == Y:
        scale *= HALF
    return QPoly([c * scale for c in quot])


def jordan_degree(index_num: QPoly, index_den: QPoly, unip_degree: QPoly) -> QPoly:
    """Degree of a series member: centraliser-index part times unipotent part.

    The quotient index_num/index_den need not be polynomial on its own;
    the product with the unipotent degree must divide exactly.
    """
    return (index_num * unip_degree).divide_exact(index_den)


@dataclass(frozen=True)
class UnipotentCharacter:
    """A unipotent character with its degree and q-valuation."""

    symbol: Symbol
    family: FamilyTag
    degree: QPoly
    a_value: int
    copy: str = ""

    def label(self) -> str:
        return format_symbol(self.symbol) + self.copy


def unipotent_characters(f: FamilyTag) -> list[UnipotentCharacter]:
    """Every unipotent character at this rank, with exact degrees."""
    out = []
    for sc in enumerate_symbols(f):
        deg = generic_degree(sc.symbol, f)
        out.append(
            UnipotentCharacter(sc.symbol, f, deg, deg.q_valuation(), sc.copy)
        )
    return out


@lru_cache(maxsize=None)
def enumerate_symbols_cached(f: FamilyTag) -> tuple[SymbolClass, ...]:
    return tuple(enumerate_symbols(f))


@lru_cache(maxsize=None)
def unipotent_characters_cached(f: FamilyTag) -> tuple[UnipotentCharacter, ...]:
    return tuple(unipotent_characters(f))


# ---------------------------------------------------------------------------
# catalogue of small unipotent characters (one table per family)
# ---------------------------------------------------------------------------


class _N:
    """Symbolic n + offset entry inside a symbol template."""

    __slots__ = ("offset",)

    def __init__(self, offset: int = 0):
        self.offset = offset

    def __repr__(self):
        if self.offset == 0:
            return "n"
        return f"n{self.offset:+d}"


N = _N(0)
N1 = _N(-1)
N2 = _N(-2)
N3 = _N(-3)


@dataclass(frozen=True)
class UnipRow:
    """One catalogue row: symbol template, closed-form degree, conditions."""

    xs: tuple
    ys: tuple
    degree: Callable[[int], QPoly]
    deg_q: Callable[[int], int]
    n_min: int
    applies_n: Callable[[int], bool]
    q_ok: Callable[[int, int], bool] = lambda n, q: True
    q_note: str = ""
    two_copies: bool = False

    def label(self) -> str:
        fmt = lambda row: ",".join(repr(e) if isinstance(e, _N) else str(e) for e in row)
        return fmt(self.xs) + ";" + fmt(self.ys)


def instantiate_row(row: UnipRow, n: int) -> Symbol:
    inst = lambda seq: tuple(n + e.offset if isinstance(e, _N) else e for e in seq)
    return Symbol(inst(row.xs), inst(row.ys))


def _row(xs, ys, degree, deg_q, n_min, applies_n=None, q_ok=None, q_note="", two=False):
    return UnipRow(
        xs=tuple(xs),
        ys=tuple(ys),
        degree=degree,
        deg_q=deg_q,
        n_min=n_min,
        applies_n=applies_n or (lambda n, m=n_min: n >= m),
        q_ok=q_ok or (lambda n, q: True),
        q_note=q_note,
        two_copies=two,
    )


_BC_ROWS = [
    _row((N,), (), lambda n: ONE, lambda n: 0, 2),
    _row(
        (0, 1, N), (),
        lambda n: HALF * q_power(1) * q_minus(n) * q_minus(n - 1) / q_plus(1),
        lambda n: 2 * n - 1, 2,
    ),
    _row(
        (0, 1), (N,),
        lambda n: HALF * q_power(1) * q_plus(n) * q_plus(n - 1) / q_plus(1),
        lambda n: 2 * n - 1, 2,
    ),
    _row(
        (1, N), (0,),
        lambda n: HALF * q_power(1) * q_plus(n) * q_minus(n - 1) / q_minus(1),
        lambda n: 2 * n - 1, 2,
    ),
    _row(
        (0, N), (1,),
        lambda n: HALF * q_power(1) * q_minus(n) * q_plus(n - 1) / q_minus(1),
        lambda n: 2 * n - 1, 2,
    ),
    _row(
        (0, 2, N1), (),
        lambda n: HALF * q_power(2) * q_minus(2 * n) * q_minus(n - 1) * q_minus(n - 3) / q_minus(4),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (0, 2), (N1,),
        lambda n: HALF * q_power(2) * q_minus(2 * n) * q_plus(n - 1) * q_plus(n - 3) / q_minus(4),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (2, N1), (0,),
        lambda n: HALF * q_power(2) * q_minus(2 * n) * q_plus(n - 1) * q_minus(n - 3) / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (0, N1), (2,),
        lambda n: HALF * q_power(2) * q_minus(2 * n) * q_minus(n - 1) * q_plus(n - 3) / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (1, N1), (1,),
        lambda n: q_power(3) * q_plus(n) * q_minus(n) * q_minus(2 * n - 4) / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 5, 6,
    ),
    _row(
        (0, 1, 2, N), (1,),
        lambda n: HALF * q_power(4) * q_minus(n) * q_minus(2 * n - 2) * q_minus(n - 2) / q_minus(4),
        lambda n: 4 * n - 4, 3,
        applies_n=lambda n: n > 5 or n == 3,
        q_ok=lambda n, q: n > 5 or q == 2, q_note="n>5, or n=3 with q=2",
    ),
    _row(
        (0, 1, 2), (1, N),
        lambda n: HALF * q_power(4) * q_plus(n) * q_minus(2 * n - 2) * q_plus(n - 2) / q_minus(4),
        lambda n: 4 * n - 4, 6,
    ),
    _row(
        (1, 2, N), (0, 1),
        lambda n: HALF * q_power(4) * q_plus(n) * q_minus(2 * n - 2) * q_minus(n - 2) / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 4, 6,
    ),
    _row(
        (0, 1, N), (1, 2),
        lambda n: HALF * q_power(4) * q_minus(n) * q_minus(2 * n - 2) * q_plus(n - 2) / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 4, 6,
    ),
    _row(
        (0, 2), (2,),
        lambda n: q_power(2) * q_minus(6) / q_minus(2),
        lambda n: 6, 3,
        applies_n=lambda n: n == 3,
    ),
]


_DPLUS_ROWS = [
    _row((N,), (0,), lambda n: ONE, lambda n: 0, 4),
    _row(
        (N1,), (1,),
        lambda n: q_power(1) * q_minus(n) * q_plus(n - 2) / q_minus(2),
        lambda n: 2 * n - 3, 4,
    ),
    _row(
        (1, N), (0, 1),
        lambda n: q_power(2) * q_minus(2 * n - 2) / q_minus(2),
        lambda n: 2 * n - 2, 4,
    ),
    _row(
        (N2,), (2,),
        lambda n: q_power(2) * q_minus(n) * q_minus(2 * n - 2) * q_plus(n - 4) / (q_minus(2) * q_minus(4)),
        lambda n: 4 * n - 10, 5,
    ),
    _row(
        (0, 1, 2, N1), (),
        lambda n: HALF * q_power(3) * q_minus(n) * q_minus(n - 1) * q_minus(n - 2) * q_minus(n - 3)
        / (q_plus(1) * q_plus(1) * q_plus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (0, N1), (1, 2),
        lambda n: HALF * q_power(3) * q_minus(n) * q_minus(n - 1) * q_plus(n - 2) * q_plus(n - 3)
        / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (1, N1), (0, 2),
        lambda n: HALF * q_power(3) * q_minus(n) * q_plus(n - 1) * q_minus(n - 2) * q_plus(n - 3)
        / (q_minus(1) * q_minus(1) * q_plus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (2, N1), (0, 1),
        lambda n: HALF * q_power(3) * q_minus(n) * q_plus(n - 1) * q_plus(n - 2) * q_minus(n - 3)
        / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (1, 2, N), (0, 1, 2),
        lambda n: q_power(6) * q_minus(2 * n - 2) * q_minus(2 * n - 4) / (q_minus(2) * q_minus(4)),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (N3,), (3,),
        lambda n: q_power(3) * q_minus(n) * q_minus(2 * n - 2) * q_minus(2 * n - 4) * q_plus(n - 6)
        / (q_minus(2) * q_minus(4) * q_minus(6)),
        lambda n: 6 * n - 21, 7,
    ),
    _row(
        (2,), (2,),
        lambda n: q_power(2) * q_minus(6) / q_minus(2),
        lambda n: 6, 4, applies_n=lambda n: n == 4, two=True,
    ),
    _row(
        (1, 2), (1, 2),
        lambda n: q_power(6) * q_minus(6) / q_minus(2),
        lambda n: 10, 4, applies_n=lambda n: n == 4, two=True,
    ),
    _row(
        (0, 3), (1, 3),
        lambda n: q_power(4) * q_minus(8) * q_minus(5) / (q_minus(1) * q_minus(2)),
        lambda n: 14, 5, applies_n=lambda n: n == 5,
        q_ok=lambda n, q: q > 2, q_note="q>2",
    ),
    _row(
        (0, 1, 2, 3, 4), (1,),
        lambda n: HALF * q_power(7) * q_minus(5) * q_minus(3) * q_minus(1) * q_minus(1),
        lambda n: 17, 5, applies_n=lambda n: n == 5,
        q_ok=lambda n, q: q == 2, q_note="q=2",
    ),
    _row(
        (3,), (3,),
        lambda n: q_power(3) * q_plus(4) * q_minus(10) / q_minus(2),
        lambda n: 15, 6, applies_n=lambda n: n == 6, two=True,
    ),
    _row(
        (0, 1, 3, 4), (),
        lambda n: HALF * q_power(4) * q_minus(10) * q_minus(3) * q_minus(3) * q_minus(1) / q_plus(1),
        lambda n: 20, 6, applies_n=lambda n: n == 6,
        q_ok=lambda n, q: q in (2, 3), q_note="q=2,3",
    ),
    _row(
        (0, 1, 3, 5), (),
        lambda n: HALF * q_power(4) * q_minus(12) * q_minus(7) * q_minus(5) * q_minus(1) / q_plus(3),
        lambda n: 26, 7, applies_n=lambda n: n == 7,
    ),
    _row(
        (4,), (4,),
        lambda n: q_power(4) * q_minus(14) * q_minus(10) * q_plus(6) / (q_minus(2) * q_minus(4)),
        lambda n: 28, 8, applies_n=lambda n: n == 8, two=True,
    ),
    _row(
        (5,), (4,),
        lambda n: q_power(4) * q_minus(9) * q_plus(8) * q_minus(14) * q_plus(6) / (q_minus(1) * q_minus(4)),
        lambda n: 36, 9, applies_n=lambda n: n == 9,
        q_ok=lambda n, q: q > 2, q_note="q>2",
    ),
]


_DMINUS_ROWS = [
    _row((0, N), (), lambda n: ONE, lambda n: 0, 4),
    _row(
        (1, N1), (),
        lambda n: q_power(1) * q_plus(n) * q_minus(n - 2) / q_minus(2),
        lambda n: 2 * n - 3, 4,
    ),
    _row(
        (0, 1, N), (1,),
        lambda n: q_power(2) * q_minus(2 * n - 2) / q_minus(2),
        lambda n: 2 * n - 2, 4,
    ),
    _row(
        (2, N2), (),
        lambda n: q_power(2) * q_plus(n) * q_minus(2 * n - 2) * q_minus(n - 4) / (q_minus(4) * q_minus(2)),
        lambda n: 4 * n - 10, 5,
    ),
    _row(
        (1, 2, N1), (0,),
        lambda n: HALF * q_power(3) * q_plus(n) * q_plus(n - 1) * q_minus(n - 2) * q_minus(n - 3)
        / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (0, 2, N1), (1,),
        lambda n: HALF * q_power(3) * q_plus(n) * q_minus(n - 1) * q_plus(n - 2) * q_minus(n - 3)
        / (q_minus(1) * q_minus(1) * q_plus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (0, 1, N1), (2,),
        lambda n: HALF * q_power(3) * q_plus(n) * q_minus(n - 1) * q_minus(n - 2) * q_plus(n - 3)
        / (q_minus(2) * q_minus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (0, 1, 2), (N1,),
        lambda n: HALF * q_power(3) * q_plus(n) * q_plus(n - 1) * q_plus(n - 2) * q_plus(n - 3)
        / (q_plus(1) * q_plus(1) * q_plus(2)),
        lambda n: 4 * n - 7, 4,
    ),
    _row(
        (0, 1, 2, N), (1, 2),
        lambda n: q_power(6) * q_minus(2 * n - 2) * q_minus(2 * n - 4) / (q_minus(2) * q_minus(4)),
        lambda n: 4 * n - 6, 4,
    ),
    _row(
        (3, N3), (),
        lambda n: q_power(3) * q_plus(n) * q_minus(2 * n - 2) * q_minus(2 * n - 4) * q_minus(n - 6)
        / (q_minus(2) * q_minus(4) * q_minus(6)),
        lambda n: 6 * n - 21, 7,
    ),
    _row(
        (4, 5), (),
        lambda n: q_power(4) * q_plus(9) * q_plus(8) * q_minus(14) * q_plus(6) * q_minus(1)
        / (q_minus(2) * q_minus(4)),
        lambda n: 36, 9, applies_n=lambda n: n == 9,
    ),
    _row(
        (0, 1, 3), (3,),
        lambda n: q_power(4) * q_minus(8) * q_plus(5) / (q_plus(1) * q_minus(2)),
        lambda n: 14, 5, applies_n=lambda n: n == 5,
    ),
]


def unipotent_rows(kind: Family) -> list[UnipRow]:
    """The catalogue of small unipotent characters for the family."""
    return {
        Family.BC: _BC_ROWS,
        Family.DPLUS: _DPLUS_ROWS,
        Family.DMINUS: _DMINUS_ROWS,
    }[kind]


def expected_small_unipotent(f: FamilyTag) -> list[SymbolClass]:
    """Catalogue rows instantiated at rank n, as canonical symbol classes."""
    kind, n = _split(f)
    out: list[SymbolClass] = []
    for row in unipotent_rows(kind):
        if not row.applies_n(n):
            continue
        sym = canonical(instantiate_row(row, n), kind)
        if row.two_copies:
            out.append(SymbolClass(sym, "'"))
            out.append(SymbolClass(sym, "''"))
        else:
            out.append(SymbolClass(sym))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# small-character tables of the full groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JordanData:
    """Centraliser order data for one Lusztig-series member."""

    centraliser: str
    index_num: QPoly
    index_den: QPoly
    unip_factor: QPoly
    prefactor: Fraction  # 1 normally; 1/2 for the split semisimple pairs


@dataclass(frozen=True)
class CharacterEntry:
    """One row of the small-character table of the full group."""

    label: str
    series: str  # "unipotent" | "s" | "t"
    degree: QPoly
    deg_q: int
    count_odd: QPoly
    count_even: QPoly
    symbol: Symbol | None = None
    jordan: JordanData | None = None

    def jordan_check(self) -> bool:
        """Does Jordan assembly from centraliser data reproduce the degree?"""
        if self.jordan is None:
            return True
        jd = self.jordan
        built = jordan_degree(jd.index_num, jd.index_den, jd.unip_factor)
        return built * jd.prefactor == self.degree


def _order_poly(kind: Family, n: int) -> QPoly:
    return QPoly(_product(_order_binoms(kind, n)))


def _bc_entry(label, series, degree, deg_q, count_odd, count_even, symbol=None, jordan=None):
    entry = CharacterEntry(label, series, degree, deg_q, count_odd, count_even, symbol, jordan)
    if entry.degree.degree() != deg_q:
        raise AssertionError(f"deg_q mismatch in table row {label}")
    return entry


def family_table(f: FamilyTag) -> list[CharacterEntry]:
    """The table of smallest ordinary characters of the group.

    Family B needs n >= 3, families D need n >= 4.  Multiplicity columns
    are exact polynomial expressions in q, one for odd q and one for
    even q.
    """
    kind, n = _split(f)
    if kind is Family.BC:
        if n < 3:
            raise BadInput("family B table needs n >= 3")
        return _bc_table(n)
    if n < 4:
        raise BadInput("family D tables need n >= 4")
    return _d_table(kind, n)


def _bc_table(n: int) -> list[CharacterEntry]:
    one = ONE
    f = FamilyTag(Family.BC, n)
    order_n = _order_poly(Family.BC, n)
    order_sub = _order_poly(Family.BC, n - 1)
    idx_s_den = q_minus(2) * order_sub  # Sp2 x Sp_{2n-2} centraliser order part
    idx_s = JordanData("Sp2 x Sp_{2n-2}", order_n, idx_s_den, one, Fraction(1))
    idx_s_st = JordanData("Sp2 x Sp_{2n-2}", order_n, idx_s_den, q_power(1), Fraction(1))
    idx_tm = JordanData("Sp_{2n-2} x GU1", order_n, q_plus(1) * order_sub, one, Fraction(1))
    idx_tp = JordanData("Sp_{2n-2} x GL1", order_n, q_minus(1) * order_sub, one, Fraction(1))

    unip = {i: _BC_ROWS[i] for i in range(5)}
    sym = lambda i: canonical(instantiate_row(unip[i], n), Family.BC)

    half_qm1 = QPoly([Fraction(-1, 2), HALF])  # (q-1)/2
    half_qm3 = QPoly([Fraction(-3, 2), HALF])  # (q-3)/2
    half_q = QPoly([0, HALF])  # q/2
    half_qm2 = QPoly([-1, HALF])  # (q-2)/2

    rows = [
        _bc_entry("1", "unipotent", ONE, 0, one, one, sym(0)),
        _bc_entry(
            "rho_s1", "s", q_minus(2 * n) / q_minus(2), 2 * n - 2, one, QPoly(), None, idx_s
        ),
        _bc_entry("rho1", "unipotent", unip[1].degree(n), 2 * n - 1, one, one, sym(1)),
        _bc_entry("rho2", "unipotent", unip[2].degree(n), 2 * n - 1, one, one, sym(2)),
        _bc_entry("rho3", "unipotent", unip[3].degree(n), 2 * n - 1, one, one, sym(3)),
        _bc_entry("rho4", "unipotent", unip[4].degree(n), 2 * n - 1, one, one, sym(4)),
        _bc_entry(
            "rho_t-", "t", q_minus(2 * n) / q_plus(1), 2 * n - 1, half_qm1, half_q, None, idx_tm
        ),
        _bc_entry(
            "rho_sq", "s", q_power(1) * q_minus(2 * n) / q_minus(2), 2 * n - 1,
            one, QPoly(), None, idx_s_st,
        ),
        _bc_entry(
            "rho_t+", "t", q_minus(2 * n) / q_minus(1), 2 * n - 1, half_qm3, half_qm2, None, idx_tp
        ),
    ]
    return rows


def _d_index(eps: int, n: int, eta_sub: int, eta_torus: int) -> tuple[QPoly, QPoly]:
    """Centraliser index data for type-D involutions and semisimple elements.

    The reductive part O^{eta_sub} in dimension 2n-2 pairs with a rank-one
    torus of order q - eta_torus; the signs multiply to the group's type.
    """
    assert eta_sub * eta_torus == eps
    num = _order_poly(Family.DPLUS if eps == 1 else Family.DMINUS, n)
    sub = QPoly(_product([(n - 1, -eta_sub)] + [(2 * i, -1) for i in range(1, n - 1)]))
    den = sub * (q_minus(1) if eta_torus == 1 else q_plus(1))
    return num, den


def _d_table(kind: Family, n: int) -> list[CharacterEntry]:
    eps = kind.epsilon
    one = ONE
    rows_src = unipotent_rows(kind)
    sym = lambda i: canonical(instantiate_row(rows_src[i], n), kind)

    num_m, den_m = _d_index(eps, n, -eps, -1)
    num_p, den_p = _d_index(eps, n, eps, 1)
    so_m = f"O^{'-' if eps == 1 else '+'}_{{2n-2}} x O^-_2"
    so_p = f"O^{'+' if eps == 1 else '-'}_{{2n-2}} x O^+_2"
    jd_sm = JordanData(so_m + " (disconnected)", num_m, den_m, one, HALF)
    jd_sp = JordanData(so_p + " (disconnected)", num_p, den_p, one, HALF)
    jd_tm = JordanData(so_m, num_m, den_m, one, Fraction(1))
    jd_tp = JordanData(so_p, num_p, den_p, one, Fraction(1))

    deg_sm = jordan_degree(num_m, den_m, one) * HALF
    deg_sp = jordan_degree(num_p, den_p, one) * HALF
    deg_tm = jordan_degree(num_m, den_m, one)
    deg_tp = jordan_degree(num_p, den_p, one)

    half_qm1 = QPoly([Fraction(-1, 2), HALF])
    half_qm3 = QPoly([Fraction(-3, 2), HALF])
    half_q = QPoly([0, HALF])
    half_qm2 = QPoly([-1, HALF])
    two = QPoly([2])

    rows = [
        _bc_entry("1", "unipotent", ONE, 0, one, one, sym(0)),
        _bc_entry("rho1", "unipotent", rows_src[1].degree(n), 2 * n - 3, one, one, sym(1)),
        _bc_entry("rho_sa-/rho_sb-", "s", deg_sm, 2 * n - 2, two, QPoly(), None, jd_sm),
        _bc_entry("rho_sa+/rho_sb+", "s", deg_sp, 2 * n - 2, two, QPoly(), None, jd_sp),
        _bc_entry("rho_t-", "t", deg_tm, 2 * n - 2, half_qm1, half_q, None, jd_tm),
        _bc_entry("rho2", "unipotent", rows_src[2].degree(n), 2 * n - 2, one, one, sym(2)),
        _bc_entry("rho_t+", "t", deg_tp, 2 * n - 2, half_qm3, half_qm2, None, jd_tp),
    ]
    return rows

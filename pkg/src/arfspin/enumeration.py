"""Exhaustive enumeration and counting of real m-Arf functions.

The free coordinates of a value set, in lexicographic order, are: the
alpha values, the beta values, the free oval values gamma_1..gamma_{k-1}
(even m only, each in {0, m/2}), and the delta values.  Everything else
is forced: for even m and eps = 0 the last oval value gamma_k is derived
from the sum constraint, twist values are 0, and for odd m every
invariant-curve value is 0.  Enumeration therefore visits exactly
m^g * 2^(k-1) value sets for even m (m^g for k = 0, and for odd m),
whenever the genus is admissible, and nothing otherwise.

Counting is exact (Python integers).  Closed forms come from the count
formulas N(g, k, eps, m, delta); brute force and closed form are
cross-checked in :func:`verify_range`.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .arf import ArfValueSet, RealArfFunction, complete, spin_admissible
from .topology import (
    Decomposition,
    TopologicalType,
    admissible_n_values,
    canonical_decomposition,
    make_decomposition,
)

__all__ = [
    "CountReport",
    "CSV_HEADER",
    "closed_form_count",
    "enumerate_real_arf_functions",
    "brute_force_counts",
    "verify_range",
]

CSV_HEADER = "g,k,eps,m,n,total,even,odd,cf_even,cf_odd,match"


@dataclass(frozen=True)
class CountReport:
    """Exact brute-force tallies for one (type, m, n) cell, with the
    closed-form predictions and a match flag."""

    ttype: TopologicalType
    m: int
    n_used: int
    total: int
    even_count: int
    odd_count: int
    closed_form_even: int
    closed_form_odd: int
    match: bool

    def __post_init__(self) -> None:
        if self.total != self.even_count + self.odd_count:
            raise ValueError("total must equal even_count + odd_count")

    def to_dict(self) -> dict:
        return {
            "g": self.ttype.g,
            "k": self.ttype.k,
            "eps": self.ttype.eps,
            "m": self.m,
            "n": self.n_used,
            "total": self.total,
            "even": self.even_count,
            "odd": self.odd_count,
            "cf_even": self.closed_form_even,
            "cf_odd": self.closed_form_odd,
            "match": self.match,
        }

    def to_csv_row(self) -> str:
        d = self.to_dict()
        d["match"] = "true" if self.match else "false"
        return ",".join(str(d[col]) for col in CSV_HEADER.split(","))


def closed_form_count(ttype: TopologicalType, m: int, arf_invariant: int) -> int:
    """The closed-form count N(g, k, eps, m, delta) of real m-Arf
    functions with the given Arf invariant; 0 whenever the existence
    condition fails (and always 0 for odd m with invariant 1).
    """
    if arf_invariant not in (0, 1):
        raise ValueError(f"arf_invariant must be 0 or 1, got {arf_invariant}")
    g, k, eps = ttype.g, ttype.k, ttype.eps
    if not spin_admissible(g, m):
        return 0
    if m % 2 == 1:
        return m**g if arf_invariant == 0 else 0
    if eps == 0:
        if k == 0:
            return m**g // 2
        return m**g * 2 ** (k - 1) // 2
    if m % 4 == 0:
        return m**g * 2 ** (k - 1) // 2
    # eps = 1, m == 2 (mod 4): the parities split asymmetrically.
    half = m**g // 2
    return half * (2 ** (k - 1) + (1 if arf_invariant == 0 else -1))


def _resolve_decomposition(ttype: TopologicalType, n: int | None) -> Decomposition:
    if n is None:
        return canonical_decomposition(ttype)
    if n not in admissible_n_values(ttype):
        raise ValueError(
            f"n={n} is not admissible for (g={ttype.g}, k={ttype.k}, eps={ttype.eps})"
        )
    if ttype.eps == 0 and n < 2:
        raise ValueError(
            "n=1 is excluded for non-separating types: with a single invariant "
            "curve there are no bridge coordinates and the parity count degenerates"
        )
    return make_decomposition(ttype, n)


def _value_axes(decomp: Decomposition, m: int) -> list[tuple[int, ...]]:
    """Axes of the free-coordinate product, in lexicographic order."""
    gt = decomp.half_genus
    k = decomp.ttype.k
    residues = tuple(range(m))
    axes: list[tuple[int, ...]] = [residues] * (2 * gt)
    if m % 2 == 0:
        axes += [(0, m // 2)] * max(k - 1, 0)
    axes += [residues] * (decomp.n - 1)
    return axes


def _assemble(decomp: Decomposition, m: int, flat: tuple[int, ...]) -> RealArfFunction:
    gt = decomp.half_genus
    n = decomp.n
    k = decomp.ttype.k
    eps = decomp.ttype.eps
    alpha = flat[:gt]
    beta = flat[gt : 2 * gt]
    if m % 2 == 1:
        ovals: tuple[int, ...] = ()
        gamma = (0,) * (n - 1)
    else:
        ovals = flat[2 * gt : 2 * gt + max(k - 1, 0)]
        if eps == 1:
            gamma = ovals
        elif k == 0:
            gamma = (0,) * (n - 1)
        else:
            derived = (1 - decomp.ttype.g - sum(ovals)) % m
            gamma = ovals + (derived,) + (0,) * (n - 1 - k)
    delta = flat[len(flat) - (n - 1) :] if n > 1 else ()
    return complete(ArfValueSet(decomp, m, alpha, beta, gamma, delta))


def _stream(
    decomp: Decomposition, m: int, first: int | None
) -> Iterator[RealArfFunction]:
    if not spin_admissible(decomp.ttype.g, m):
        return
    axes = _value_axes(decomp, m)
    if first is not None:
        axes = [(first,)] + axes[1:]
    for flat in itertools.product(*axes):
        yield _assemble(decomp, m, flat)


def enumerate_real_arf_functions(
    ttype: TopologicalType, m: int, n: int | None = None
) -> Iterator[RealArfFunction]:
    """Yield every real m-Arf function of the given type, in a fixed
    deterministic order (lexicographic over the free coordinates).

    ``n`` defaults to the canonical decomposition; an inadmissible n
    raises ``ValueError``.  If the genus fails the existence condition
    the stream is empty.
    """
    decomp = _resolve_decomposition(ttype, n)
    return _stream(decomp, m, None)


def _tally(decomp: Decomposition, m: int, first: int | None) -> tuple[int, int, int]:
    total = even = 0
    for fn in _stream(decomp, m, first):
        total += 1
        even += 1 - fn.arf_invariant
    return total, even, total - even


def _tally_partition(args: tuple[Decomposition, int, int]) -> tuple[int, int, int]:
    decomp, m, first = args
    return _tally(decomp, m, first)


def brute_force_counts(
    ttype: TopologicalType, m: int, n: int | None = None, workers: int = 1
) -> CountReport:
    """Tally the enumeration by Arf invariant and compare with the closed
    forms.

    With ``workers > 1`` the value-set space is partitioned along its
    first free coordinate and the per-partition tallies are merged; the
    result is identical to the sequential one.
    """
    decomp = _resolve_decomposition(ttype, n)
    axes = _value_axes(decomp, m)
    if workers > 1 and spin_admissible(ttype.g, m) and axes and len(axes[0]) > 1:
        parts = [(decomp, m, v) for v in axes[0]]
        with ProcessPoolExecutor(max_workers=min(workers, len(parts))) as pool:
            tallies = list(pool.map(_tally_partition, parts))
        total = sum(t[0] for t in tallies)
        even = sum(t[1] for t in tallies)
        odd = sum(t[2] for t in tallies)
    else:
        total, even, odd = _tally(decomp, m, None)
    cf_even = closed_form_count(ttype, m, 0)
    cf_odd = closed_form_count(ttype, m, 1)
    return CountReport(
        ttype=ttype,
        m=m,
        n_used=decomp.n,
        total=total,
        even_count=even,
        odd_count=odd,
        closed_form_even=cf_even,
        closed_form_odd=cf_odd,
        match=(even == cf_even and odd == cf_odd),
    )


def _sweep_cells(g_max: int, m_max: int) -> list[tuple[int, int, int, int, int]]:
    cells = []
    for g in range(2, g_max + 1):
        for eps in (0, 1):
            k_values = range(0, g + 1) if eps == 0 else range(1, g + 2)
            for k in k_values:
                try:
                    ttype = TopologicalType(g, k, eps)
                except ValueError:
                    continue
                for m in range(2, m_max + 1):
                    for n in admissible_n_values(ttype):
                        if n >= 2:
                            cells.append((g, k, eps, m, n))
    cells.sort()
    return cells


def _cell_report(cell: tuple[int, int, int, int, int]) -> CountReport:
    g, k, eps, m, n = cell
    return brute_force_counts(TopologicalType(g, k, eps), m, n=n)


def verify_range(g_max: int, m_max: int, workers: int = 1) -> list[CountReport]:
    """Brute-force-vs-closed-form reports for every valid type with
    2 <= g <= g_max, every 2 <= m <= m_max, and every admissible n >= 2.

    Mismatches are recorded in the reports, never raised.  The report
    list is sorted by (g, k, eps, m, n) regardless of ``workers``.
    """
    if g_max < 2:
        raise ValueError(f"g_max must be at least 2, got {g_max}")
    if m_max < 2:
        raise ValueError(f"m_max must be at least 2, got {m_max}")
    cells = _sweep_cells(g_max, m_max)
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(cells) // (4 * workers))
            return list(pool.map(_cell_report, cells, chunksize=chunk))
    return [_cell_report(cell) for cell in cells]

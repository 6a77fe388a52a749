"""Topological types of Klein surfaces and their curve decompositions.

A Klein surface is a compact genus-g Riemann surface P together with an
anti-holomorphic involution.  Its topological type is the triple
``(g, k, eps)``: the genus, the number of ovals (connected fixed-point
circles of the involution), and the separability bit (``eps = 1`` when
the complement of the invariant circles is disconnected).  The
admissible triples are the classical ones:

    eps = 1:  1 <= k <= g + 1  and  k == g + 1 (mod 2)
    eps = 0:  0 <= k <= g

Only hyperbolic surfaces (g >= 2) are in scope.

A :class:`Decomposition` records a choice of n invariant simple closed
curves cutting P into two halves, each of genus ``(g + 1 - n) / 2`` with
n holes.  The first k curves are the ovals; any remaining ones are
twists (invariant circles without fixed points), which only exist in
the non-separating case.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfScopeError

__all__ = [
    "BoundaryKind",
    "TopologicalType",
    "Decomposition",
    "is_valid_topological_type",
    "admissible_n_values",
    "make_decomposition",
    "canonical_decomposition",
]


class BoundaryKind(enum.Enum):
    """Kind of an invariant curve in a decomposition."""

    OVAL = "oval"
    TWIST = "twist"


def _weichold_violation(g: int, k: int, eps: int) -> str | None:
    """Return a human-readable description of the violated admissibility
    clause, or None if (g, k, eps) is a valid topological type.

    Malformed inputs (negative k, eps outside {0, 1}, g < 2) raise instead
    of returning a clause: those are usage errors, not classification
    results.
    """
    if g < 2:
        raise OutOfScopeError(
            f"genus must be at least 2, got g={g} "
            "(genus 0 and 1 surfaces need different methods)"
        )
    if eps not in (0, 1):
        raise ValueError(f"eps must be 0 or 1, got {eps!r}")
    if k < 0:
        raise ValueError(f"oval count must be non-negative, got k={k}")
    if eps == 1:
        if not 1 <= k <= g + 1:
            return f"separating type requires 1 <= k <= g+1; got k={k} for g={g}"
        if (k - (g + 1)) % 2 != 0:
            return f"separating type requires k == g+1 (mod 2); got k={k} for g={g}"
    else:
        if k > g:
            return f"non-separating type requires 0 <= k <= g; got k={k} for g={g}"
    return None


def is_valid_topological_type(g: int, k: int, eps: int) -> bool:
    """True iff (g, k, eps) is an admissible Klein-surface type.

    Raises :class:`OutOfScopeError` for g < 2 and ``ValueError`` for
    malformed k or eps.
    """
    return _weichold_violation(g, k, eps) is None


@dataclass(frozen=True)
class TopologicalType:
    """An admissible topological type (g, k, eps); validated on creation."""

    g: int
    k: int
    eps: int

    def __post_init__(self) -> None:
        violation = _weichold_violation(self.g, self.k, self.eps)
        if violation is not None:
            raise ValueError(violation)


def admissible_n_values(ttype: TopologicalType) -> list[int]:
    """All curve counts n admitting a decomposition of the given type.

    Separating types decompose along their ovals only (n = k).  For
    non-separating types any n in {k+1, ..., g+1} with n == g+1 (mod 2)
    works; the list is ascending.  Note that n = 1 can appear here (for
    eps = 0, k = 0, g even) although enumeration refuses it — see
    :func:`arfspin.enumeration.enumerate_real_arf_functions`.
    """
    g, k = ttype.g, ttype.k
    if ttype.eps == 1:
        return [k]
    return [n for n in range(k + 1, g + 2) if (g + 1 - n) % 2 == 0]


@dataclass(frozen=True)
class Decomposition:
    """A choice of n invariant curves splitting the surface into halves.

    ``boundary_kinds`` is stored explicitly rather than inferred so that
    per-curve bookkeeping stays local; it must agree with the type: all
    ovals when eps = 1, exactly k ovals followed by twists when eps = 0.
    """

    ttype: TopologicalType
    n: int
    boundary_kinds: tuple[BoundaryKind, ...]

    def __post_init__(self) -> None:
        g, k, eps = self.ttype.g, self.ttype.k, self.ttype.eps
        if self.n < 1 or self.n > g + 1 or (g + 1 - self.n) % 2 != 0:
            raise ValueError(
                f"n={self.n} does not satisfy n <= g+1 and n == g+1 (mod 2) for g={g}"
            )
        if eps == 1 and self.n != k:
            raise ValueError(f"separating decomposition requires n = k; got n={self.n}, k={k}")
        if eps == 0 and self.n < k + 1:
            raise ValueError(
                f"non-separating decomposition requires n >= k+1; got n={self.n}, k={k}"
            )
        if len(self.boundary_kinds) != self.n:
            raise ValueError(
                f"expected {self.n} boundary kinds, got {len(self.boundary_kinds)}"
            )
        expected_ovals = k if eps == 0 else self.n
        for i, kind in enumerate(self.boundary_kinds):
            expected = BoundaryKind.OVAL if i < expected_ovals else BoundaryKind.TWIST
            if kind is not expected:
                raise ValueError(
                    f"boundary kind {i + 1} must be {expected.value} for this type"
                )

    @property
    def half_genus(self) -> int:
        """Genus of each half after cutting along the n curves."""
        return (self.ttype.g + 1 - self.n) // 2


def make_decomposition(ttype: TopologicalType, n: int) -> Decomposition:
    """Build the decomposition of ``ttype`` along n invariant curves."""
    if n not in admissible_n_values(ttype):
        raise ValueError(
            f"n={n} is not admissible for (g={ttype.g}, k={ttype.k}, eps={ttype.eps}); "
            f"admissible values are {admissible_n_values(ttype)}"
        )
    ovals = ttype.k if ttype.eps == 0 else n
    kinds = (BoundaryKind.OVAL,) * ovals + (BoundaryKind.TWIST,) * (n - ovals)
    return Decomposition(ttype, n, kinds)


def canonical_decomposition(ttype: TopologicalType) -> Decomposition:
    """The default decomposition: n = k for separating types, otherwise
    the smallest admissible n that is at least 2.

    n = 1 is never chosen: with a single invariant curve there are no
    bridge coordinates, the parity bookkeeping degenerates, and the
    counting theory below is silent.  For g >= 2 a choice with n >= 2
    always exists (n = 2 when g is odd, n = 3 when g is even).
    """
    if ttype.eps == 1:
        return make_decomposition(ttype, ttype.k)
    for n in admissible_n_values(ttype):
        if n >= 2:
            return make_decomposition(ttype, n)
    raise ValueError(
        f"no decomposition with n >= 2 exists for (g={ttype.g}, k={ttype.k}, eps=0)"
    )

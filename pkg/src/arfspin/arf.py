"""Real m-Arf functions represented by their values on generators.

An m-Arf function sigma assigns residues mod m to simple closed curves on
a genus-g surface.  On a Klein surface decomposed along n invariant
curves, a *real* m-Arf function is pinned down by its values on a
symmetric generating set:

* ``alpha[i] = sigma(a_i)`` and ``beta[i] = sigma(b_i)`` on the
  half-genus handle pairs of one half (the values on the mirror-image
  handles are equal and never stored),
* ``gamma[i] = sigma(c_{i+1})`` on the first n-1 invariant curves,
* ``delta[i] = sigma(d_{i+1})`` on the bridges connecting consecutive
  invariant curves.

The value on the last invariant curve is derived, not stored:

    gamma_n = (1 - g) - (gamma_1 + ... + gamma_{n-1})   (mod m).

Residues live canonically in [0, m); every parity statement in this
module is about those canonical representatives.

The constraints a value set must satisfy depend on the parity of m:

* any m: the surface carries real m-Arf functions at all only when
  g == 1 (mod m) for odd m, g == 1 (mod m/2) for even m
  (:func:`spin_admissible`);
* odd m: every invariant-curve value is 0;
* even m: oval values lie in {0, m/2}, twist values are 0, and for
  non-separating surfaces with k >= 1 ovals the oval values satisfy
  gamma_1 + ... + gamma_k == 1 - g (mod m).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import OutOfScopeError
from .topology import Decomposition

__all__ = [
    "SpinModulus",
    "ValidationCode",
    "ArfValidationError",
    "ArfValueSet",
    "RealArfFunction",
    "spin_admissible",
    "validate_real_value_set",
    "complete",
    "arf_invariant_symmetric",
    "validate_hole_values",
    "arf_invariant_with_holes",
]

# The spin modulus is a plain integer >= 2; the alias is documentation.
SpinModulus = int


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"spin modulus must be at least 2, got m={m}")


class ValidationCode(enum.Enum):
    """Outcome of validating a value set, naming the violated constraint."""

    OK = "ok"
    GENUS_INADMISSIBLE = "genus does not satisfy the existence condition for this modulus"
    OVAL_VALUE_NOT_HALF_PERIOD = "an oval value lies outside {0, m/2}"
    TWIST_VALUE_NONZERO = "a twist value is nonzero"
    SUM_CONSTRAINT_VIOLATED = "the oval values do not sum to 1 - g (mod m)"


class ArfValidationError(ValueError):
    """An invalid value set was used where a valid one is required."""

    def __init__(self, code: ValidationCode):
        self.code = code
        super().__init__(code.value)


def spin_admissible(g: int, m: SpinModulus) -> bool:
    """True iff a genus-g surface carries any real m-Arf function.

    The condition is g == 1 (mod m) for odd m and g == 1 (mod m/2) for
    even m.
    """
    _check_modulus(m)
    if g < 2:
        raise OutOfScopeError(f"genus must be at least 2, got g={g}")
    modulus = m if m % 2 == 1 else m // 2
    return (g - 1) % modulus == 0


@dataclass(frozen=True)
class ArfValueSet:
    """Values of a real m-Arf function on a symmetric generating set.

    ``alpha`` and ``beta`` have length ``decomp.half_genus``; ``gamma``
    and ``delta`` have length ``decomp.n - 1``.  All residues are
    canonicalized into [0, m) on construction.
    """

    decomp: Decomposition
    m: SpinModulus
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_modulus(self.m)
        gt = self.decomp.half_genus
        n = self.decomp.n
        for name, values, want in (
            ("alpha", self.alpha, gt),
            ("beta", self.beta, gt),
            ("gamma", self.gamma, n - 1),
            ("delta", self.delta, n - 1),
        ):
            if len(values) != want:
                raise ValueError(
                    f"{name} must have length {want} for this decomposition, "
                    f"got {len(values)}"
                )
            object.__setattr__(self, name, tuple(int(v) % self.m for v in values))

    def to_dict(self) -> dict:
        """Flat JSON-ready representation."""
        t = self.decomp.ttype
        return {
            "m": self.m,
            "g": t.g,
            "k": t.k,
            "eps": t.eps,
            "n": self.decomp.n,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "delta": list(self.delta),
        }


@dataclass(frozen=True)
class RealArfFunction:
    """A validated value set together with its derived data."""

    values: ArfValueSet
    gamma_n: int
    arf_invariant: int

    def to_dict(self) -> dict:
        out = self.values.to_dict()
        out["gamma_n"] = self.gamma_n
        out["arf_invariant"] = self.arf_invariant
        return out


def validate_real_value_set(v: ArfValueSet) -> ValidationCode:
    """Check every constraint on a value set; return the first violation.

    Checks run in a fixed order: genus admissibility, oval values, the
    non-separating sum constraint (the stored value of the last oval must
    equal the one derived from the others), twist values.
    """
    t = v.decomp.ttype
    g, k, eps, m = t.g, t.k, t.eps, v.m
    if not spin_admissible(g, m):
        return ValidationCode.GENUS_INADMISSIBLE

    if m % 2 == 1:
        # Odd modulus: every invariant-curve value vanishes.
        for i, value in enumerate(v.gamma):
            if value != 0:
                if i < k:
                    return ValidationCode.OVAL_VALUE_NOT_HALF_PERIOD
                return ValidationCode.TWIST_VALUE_NONZERO
        return ValidationCode.OK

    half = m // 2
    if eps == 1:
        # All stored gamma values are ovals (gamma_k = gamma_n is derived).
        for value in v.gamma:
            if value not in (0, half):
                return ValidationCode.OVAL_VALUE_NOT_HALF_PERIOD
        return ValidationCode.OK

    # eps = 0: ovals gamma_1..gamma_k, then twists.
    for value in v.gamma[: max(k - 1, 0)]:
        if value not in (0, half):
            return ValidationCode.OVAL_VALUE_NOT_HALF_PERIOD
    if k >= 1:
        derived = (1 - g - sum(v.gamma[: k - 1])) % m
        if v.gamma[k - 1] != derived:
            return ValidationCode.SUM_CONSTRAINT_VIOLATED
        if derived not in (0, half):
            # Cannot happen when the genus is admissible; kept as a guard.
            return ValidationCode.OVAL_VALUE_NOT_HALF_PERIOD
    for value in v.gamma[k:]:
        if value != 0:
            return ValidationCode.TWIST_VALUE_NONZERO
    return ValidationCode.OK


def arf_invariant_symmetric(v: ArfValueSet) -> int:
    """Arf invariant of the real m-Arf function with these values.

    0 by convention for odd m; for even m it is the parity of
    sum((1 - gamma_i) * (1 - delta_i)) over the stored curve/bridge
    pairs, computed on canonical representatives.
    """
    if v.m % 2 == 1:
        return 0
    return sum((1 - c) * (1 - d) for c, d in zip(v.gamma, v.delta)) % 2


def complete(v: ArfValueSet) -> RealArfFunction:
    """Validate ``v`` and fill in the derived last curve value and the
    Arf invariant.  Raises :class:`ArfValidationError` on invalid input.
    """
    code = validate_real_value_set(v)
    if code is not ValidationCode.OK:
        raise ArfValidationError(code)
    gamma_n = (1 - v.decomp.ttype.g - sum(v.gamma)) % v.m
    return RealArfFunction(v, gamma_n, arf_invariant_symmetric(v))


def validate_hole_values(
    g: int,
    m: SpinModulus,
    alpha: Sequence[int],
    beta: Sequence[int],
    gamma: Sequence[int],
) -> bool:
    """Check the boundary-sum condition for an m-Arf function on a
    genus-g surface with len(gamma) holes:

        gamma_1 + ... + gamma_n == (2 - 2g) - n   (mod m).

    This is the condition relevant to one half of a decomposed Klein
    surface, where alpha/beta are the handle values and gamma the hole
    values.
    """
    _check_modulus(m)
    if g < 1:
        raise OutOfScopeError(f"genus must be at least 1 here, got g={g}")
    if len(alpha) != g or len(beta) != g:
        raise ValueError(f"alpha and beta must each have length g={g}")
    n = len(gamma)
    return (sum(int(x) for x in gamma) - ((2 - 2 * g) - n)) % m == 0


def arf_invariant_with_holes(
    g: int,
    m: SpinModulus,
    alpha: Sequence[int],
    beta: Sequence[int],
    gamma: Sequence[int],
) -> int:
    """Arf invariant of an m-Arf function on a genus-g surface with holes.

    For g >= 2: always 0 for odd m; for even m it is 0 as soon as some
    hole value is even, and otherwise the parity of
    sum((1 - alpha_i) * (1 - beta_i)).  For g = 1 the invariant is the
    divisor gcd(m, alpha_1, beta_1, gamma_1 + 1, ..., gamma_n + 1).

    Genus 0 is out of scope.  Note this computes the invariant from the
    values as given; it does not require :func:`validate_hole_values`.
    """
    _check_modulus(m)
    if g < 1:
        raise OutOfScopeError(f"genus must be at least 1, got g={g}")
    if len(alpha) != g or len(beta) != g:
        raise ValueError(f"alpha and beta must each have length g={g}")
    a = [int(x) % m for x in alpha]
    b = [int(x) % m for x in beta]
    c = [int(x) % m for x in gamma]
    if g == 1:
        return math.gcd(m, a[0], b[0], *[x + 1 for x in c])
    if m % 2 == 1:
        return 0
    if any(x % 2 == 0 for x in c):
        return 0
    return sum((1 - x) * (1 - y) for x, y in zip(a, b)) % 2

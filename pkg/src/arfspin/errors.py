"""Exception types shared across the package."""
from __future__ import annotations


class OutOfScopeError(ValueError):
    """Raised when an input is outside the domain this package models.

    Examples: genus below 2 in the Klein-surface topology (the sphere and
    the torus need different methods and are deliberately not handled,
    except for the genus-1 holed-surface invariant), elliptic isometries
    in the canonical-lift and level machinery.
    """


class BranchContinuationError(ArithmeticError):
    """Raised when a branch value drifts off the expected root of unity.

    The level computation snaps a branch ratio to the nearest m-th root of
    unity.  If the residual exceeds tolerance, the analytic continuation
    went wrong somewhere upstream and we fail loudly rather than snap
    silently.
    """

"""The m-fold covering group of the isometries of the hyperbolic plane.

An isometry of the upper half-plane H is a real 2x2 matrix with |det| = 1
up to sign, acting as z -> (az+b)/(cz+d) when det = +1 and as the same
formula applied to conj(z) when det = -1.  An element of the m-fold cover
G_m over such an isometry g carries a branch function delta on H with
delta^m = g' (the conjugate-analytic derivative in the reversing case);
we store only its value at the basepoint z0 = i, which determines it.

The product rule of the cover is

    (g2, d2) * (g1, d1) = (g2 o g1, (d2 o g1) . d1),

with d1 conjugated when g2 reverses orientation.  Evaluating d2 at g1(i)
from its stored value at i is branch continuation:

    d2(w) / d2(i) = exp((-2/m) (Log(c w + d) - Log(c i + d)))

with w and i conjugated first when g2 reverses.  Both logarithm arguments
lie in one open half-plane (c times a half-plane plus d; or the same real
constant twice when c = 0), so the principal branch never jumps — no
case analysis is needed and the c = 0 difference is exactly zero.

The canonical lift of a non-elliptic orientation-preserving isometry is
the endpoint of the lift of any one-parameter path from the identity.
On the trace-positive det = +1 representative that endpoint has the
closed form

    delta(i) = exp((-2/m) Log(c i + d)),

because along the standard paths (multiplier lambda^t for hyperbolics,
parameter t*lambda for parabolics) c_t i + d_t stays inside one
principal-log half-plane and starts at 1.  The level of an element is
the root-of-unity offset of its branch value from the canonical one.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .errors import BranchContinuationError, OutOfScopeError

__all__ = [
    "TOL",
    "Isometry",
    "CoverElement",
    "IdentityCheckResult",
    "make_hyperbolic",
    "make_parabolic",
    "make_J",
    "central",
    "canonical_lift",
    "multiply",
    "invert",
    "level",
    "conjugation_sign_check",
    "twist_companion",
    "run_identity_suite",
]

TOL = 1e-9  # default snapping / comparison tolerance
_SIGN_EPS = 1e-12  # matrix entry treated as zero when fixing the global sign
# Constructor consistency gate for branch values.  Deliberately looser
# than TOL: level() must be able to see (and reject) drift between the
# two thresholds instead of the constructor masking it.
_BRANCH_GATE = 1e-6
# Rejection margin for elliptic matrices in the canonical lift.  Coarser
# than TOL on purpose: conjugating a parabolic (trace exactly 2) in
# floating point jiggles the trace by more than a comparison tolerance,
# and such an element must still be treated as parabolic.  Only matrices
# elliptic by a clear margin are out of scope.
_ELLIPTIC_GATE = 1e-6

_BASEPOINT = 1j


@dataclass(frozen=True)
class Isometry:
    """A hyperbolic-plane isometry as a projective real 2x2 matrix.

    Entries are normalized to |det| = 1 and the overall sign is fixed so
    the first entry exceeding a small threshold is positive; two equal
    isometries therefore have equal entries.  det = +1 acts as a Mobius
    map, det = -1 acts on conj(z).
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        a, b, c, d = float(self.a), float(self.b), float(self.c), float(self.d)
        det = a * d - b * c
        if abs(det) < 1e-12:
            raise ValueError("matrix is singular (|det| too small)")
        s = math.sqrt(abs(det))
        a, b, c, d = a / s, b / s, c / s, d / s
        for entry in (a, b, c, d):
            if abs(entry) > _SIGN_EPS:
                if entry < 0.0:
                    a, b, c, d = -a, -b, -c, -d
                break
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def orientation(self) -> int:
        """+1 for Mobius action, -1 for the orientation-reversing action."""
        return 1 if self.det > 0 else -1

    def __call__(self, z: complex) -> complex:
        if self.orientation < 0:
            z = z.conjugate()
        return (self.a * z + self.b) / (self.c * z + self.d)

    def compose(self, other: "Isometry") -> "Isometry":
        # Matrix product implements composition for every orientation
        # combination because the entries are real (conjugating the input
        # of the right factor commutes with a real matrix).
        return Isometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Isometry":
        # The adjugate: exact projective inverse for det = +-1.
        return Isometry(self.d, -self.b, -self.c, self.a)

    def is_identity(self, tol: float = TOL) -> bool:
        return (
            abs(self.a - 1.0) <= tol
            and abs(self.b) <= tol
            and abs(self.c) <= tol
            and abs(self.d - 1.0) <= tol
        )

    def classify(self, tol: float = TOL) -> str:
        """'identity' | 'hyperbolic' | 'parabolic' | 'elliptic'.

        Only meaningful for orientation-preserving isometries.
        """
        if self.orientation < 0:
            raise ValueError("classification applies to orientation-preserving isometries")
        if self.is_identity(tol):
            return "identity"
        t = abs(self.a + self.d)
        if t > 2.0 + tol:
            return "hyperbolic"
        if t >= 2.0 - tol:
            return "parabolic"
        return "elliptic"

    def derivative_at(self, z: complex) -> complex:
        """Conformal derivative of the action at a finite fixed point
        (derivative in conj(z) for reversing elements)."""
        w = z.conjugate() if self.orientation < 0 else z
        return self.det / (self.c * w + self.d) ** 2

    def fixed_points(self) -> tuple[float, float]:
        """(repelling, attracting) boundary fixed points of a hyperbolic
        isometry; math.inf marks the point at infinity."""
        if self.classify() != "hyperbolic":
            raise OutOfScopeError("fixed points are computed for hyperbolic isometries only")
        a, b, c, d = self.a, self.b, self.c, self.d
        if abs(c) < _SIGN_EPS:
            finite = b / (d - a)
            # Derivative at the finite point is a/d = a^2; |a| > 1 means
            # the finite point repels and infinity attracts.
            if a * a > 1.0:
                return (finite, math.inf)
            return (math.inf, finite)
        disc = math.sqrt((a + d) ** 2 - 4.0)
        z1 = (a - d + disc) / (2.0 * c)
        z2 = (a - d - disc) / (2.0 * c)
        # c z + d at the fixed points is (a + d -+ disc)/2; the repelling
        # point is where |derivative| = 1/(c z + d)^2 exceeds 1.
        if abs(a + d + disc) < abs(a + d - disc):
            return (z1, z2)
        return (z2, z1)


def make_hyperbolic(alpha: float, beta: float, lam: float) -> Isometry:
    """Hyperbolic isometry with repelling point alpha, attracting point
    beta (boundary points, math.inf allowed) and multiplier lam > 0.

    lam = 1 degenerates to the identity and lam < 1 swaps the roles of
    the fixed points.
    """
    if lam <= 0.0:
        raise ValueError(f"multiplier must be positive, got {lam}")
    a_inf = math.isinf(alpha)
    b_inf = math.isinf(beta)
    if a_inf and b_inf:
        raise ValueError("fixed points must be distinct")
    if a_inf:
        return Isometry(1.0, (lam - 1.0) * beta, 0.0, lam)
    if b_inf:
        return Isometry(lam, -(lam - 1.0) * alpha, 0.0, 1.0)
    if alpha == beta:
        raise ValueError("fixed points must be distinct")
    return Isometry(
        lam * beta - alpha,
        -(lam - 1.0) * alpha * beta,
        lam - 1.0,
        beta - lam * alpha,
    )


def make_parabolic(alpha: float, lam: float) -> Isometry:
    """Parabolic isometry fixing the boundary point alpha; the parameter
    lam is additive: compose(make_parabolic(a, x), make_parabolic(a, y))
    equals make_parabolic(a, x + y)."""
    return Isometry(1.0 - lam * alpha, lam * alpha * alpha, -lam, 1.0 + lam * alpha)


@dataclass(frozen=True)
class CoverElement:
    """An element of the m-fold cover: an isometry plus the value of its
    branch function at the basepoint i.  The constructor checks the
    defining relation branch_value^m = derivative-at-i (coarsely; exact
    drift control happens in :func:`level`)."""

    base: Isometry
    m: int
    branch_value: complex

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"cover degree must be at least 2, got m={self.m}")
        bv = complex(self.branch_value)
        object.__setattr__(self, "branch_value", bv)
        if bv == 0:
            raise ValueError("branch value must be nonzero")
        target = self.derivative
        if abs(bv**self.m - target) > _BRANCH_GATE * max(1.0, abs(target)):
            raise ValueError(
                "branch value is not an m-th root of the derivative at the basepoint"
            )

    @property
    def derivative(self) -> complex:
        """The m-th power the branch value must have: the (conjugate-)
        analytic derivative of the action at the basepoint."""
        o = self.base.orientation
        w = _BASEPOINT if o > 0 else -_BASEPOINT
        return o / (self.base.c * w + self.base.d) ** 2


def _branch_ratio(base: Isometry, w: complex, m: int) -> complex:
    """delta(w)/delta(i) for any lift of `base` (all lifts share it)."""
    if base.orientation < 0:
        w = w.conjugate()
        z0 = -_BASEPOINT
    else:
        z0 = _BASEPOINT
    num = base.c * w + base.d
    den = base.c * z0 + base.d
    return cmath.exp((-2.0 / m) * (cmath.log(num) - cmath.log(den)))


def central(m: int, k: int) -> CoverElement:
    """U^k: the identity isometry with branch value exp(2*pi*i*k/m).
    U = central(m, 1) generates the centre of the cover; k is taken
    mod m."""
    return CoverElement(Isometry(1.0, 0.0, 0.0, 1.0), m, cmath.exp(2j * math.pi * k / m))


def make_J(m: int, branch_choice: int = 0) -> CoverElement:
    """A lift J of the reflection j: z -> -conj(z).

    The branch value is an m-th root of -1 (the derivative of j in
    conj(z)), indexed by branch_choice from the principal root
    exp(i*pi/m).  J * J is the identity for every choice.
    """
    bv = cmath.exp(1j * math.pi * (2 * branch_choice + 1) / m)
    return CoverElement(Isometry(-1.0, 0.0, 0.0, 1.0), m, bv)


def canonical_lift(iso: Isometry, m: int) -> CoverElement:
    """The level-0 lift of a non-elliptic orientation-preserving isometry:
    the endpoint of the lifted one-parameter path from the identity.

    Computed in closed form on the trace-positive det = +1 representative
    (see the module docstring).  For z -> lam*z the branch value is the
    positive real root lam^(1/m).
    """
    if m < 2:
        raise ValueError(f"cover degree must be at least 2, got m={m}")
    if iso.orientation < 0:
        raise OutOfScopeError("canonical lift requires an orientation-preserving isometry")
    if iso.classify(_ELLIPTIC_GATE) == "elliptic":
        raise OutOfScopeError("elliptic isometries are out of scope for the canonical lift")
    c, d = iso.c, iso.d
    if iso.a + iso.d < 0.0:
        c, d = -c, -d
    bv = cmath.exp((-2.0 / m) * cmath.log(c * _BASEPOINT + d))
    return CoverElement(iso, m, bv)


def multiply(x: CoverElement, y: CoverElement) -> CoverElement:
    """Group product x * y (x applied after y)."""
    if x.m != y.m:
        raise ValueError(f"cover degrees differ: {x.m} != {y.m}")
    base = x.base.compose(y.base)
    w = y.base(_BASEPOINT)
    dx_at_w = x.branch_value * _branch_ratio(x.base, w, x.m)
    dy = y.branch_value.conjugate() if x.base.orientation < 0 else y.branch_value
    return CoverElement(base, x.m, dx_at_w * dy)


def invert(x: CoverElement) -> CoverElement:
    """Group inverse: multiply(x, invert(x)) is the identity element."""
    base_inv = x.base.inverse()
    w = base_inv(_BASEPOINT)
    # delta_x evaluated at x^{-1}(i); the inverse's branch value at i must
    # cancel it in the product rule.
    val = x.branch_value * _branch_ratio(x.base, w, x.m)
    if x.base.orientation < 0:
        val = val.conjugate()
    return CoverElement(base_inv, x.m, 1.0 / val)


def level(x: CoverElement, tol: float = TOL) -> int:
    """The residue k mod m with x = canonical_lift(x.base) * U^k.

    Defined for orientation-preserving, non-elliptic elements.  The
    branch ratio to the canonical lift is snapped to the nearest m-th
    root of unity; a residual above ``tol`` raises
    :class:`BranchContinuationError`.
    """
    if x.base.orientation < 0:
        raise OutOfScopeError("level is defined on orientation-preserving elements")
    reference = canonical_lift(x.base, x.m)
    ratio = x.branch_value / reference.branch_value
    k = round(x.m * cmath.phase(ratio) / (2.0 * math.pi)) % x.m
    residual = abs(ratio - cmath.exp(2j * math.pi * k / x.m))
    if residual > tol:
        raise BranchContinuationError(
            f"branch ratio is {residual:.3e} away from the nearest root of unity "
            f"(tolerance {tol:.1e})"
        )
    return k


def conjugation_sign_check(f: CoverElement, c: CoverElement, tol: float = TOL) -> bool:
    """True iff level(f * c * f^{-1}) == -level(c) mod m, for an
    orientation-reversing conjugator f."""
    if f.base.orientation >= 0:
        raise ValueError("expected an orientation-reversing conjugator")
    conjugated = multiply(multiply(f, c), invert(f))
    return level(conjugated, tol) == (-level(c, tol)) % c.m


def _axis_reflection(p: float, q: float) -> Isometry:
    """Reflection in the geodesic with boundary endpoints p, q."""
    if math.isinf(p) or math.isinf(q):
        x = q if math.isinf(p) else p
        # Vertical mirror: z -> 2x - conj(z).
        return Isometry(-1.0, 2.0 * x, 0.0, 1.0)
    center = (p + q) / 2.0
    radius = abs(q - p) / 2.0
    # Inversion in the half-circle: z -> center + radius^2/conj(z - center).
    return Isometry(center, radius * radius - center * center, 1.0, -center)


def twist_companion(c: Isometry) -> Isometry:
    """The orientation-reversing square root of a hyperbolic isometry:
    reflection in its axis composed with the half-multiplier translation
    along it.  Satisfies compose(result, result) == c."""
    if c.orientation < 0 or c.classify() != "hyperbolic":
        raise OutOfScopeError("twist companion requires a hyperbolic isometry")
    rep, att = c.fixed_points()
    if math.isinf(rep):
        lam = 1.0 / abs(c.derivative_at(complex(att)))
    else:
        lam = abs(c.derivative_at(complex(rep)))
    half_step = make_hyperbolic(rep, att, math.sqrt(lam))
    return _axis_reflection(rep, att).compose(half_step)


# --- randomized identity suite ---------------------------------------------


@dataclass(frozen=True)
class IdentityCheckResult:
    identity: str
    samples: int
    max_residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "pass": self.passed,
        }


def _frobenius(x: Isometry, y: Isometry, sign: float) -> float:
    return math.sqrt(
        (x.a - sign * y.a) ** 2
        + (x.b - sign * y.b) ** 2
        + (x.c - sign * y.c) ** 2
        + (x.d - sign * y.d) ** 2
    )


def _element_distance(x: CoverElement, y: CoverElement) -> float:
    mat = min(_frobenius(x.base, y.base, 1.0), _frobenius(x.base, y.base, -1.0))
    return max(mat, abs(x.branch_value - y.branch_value))


def _rand_endpoints(rng: random.Random) -> tuple[float, float]:
    roll = rng.random()
    if roll < 0.08:
        return (math.inf, rng.uniform(-3.0, 3.0))
    if roll < 0.16:
        return (rng.uniform(-3.0, 3.0), math.inf)
    p = rng.uniform(-3.0, 3.0)
    q = rng.uniform(-3.0, 3.0)
    while abs(q - p) < 0.2:
        q = rng.uniform(-3.0, 3.0)
    return (p, q)


def _rand_multiplier(rng: random.Random) -> float:
    lam = math.exp(rng.uniform(math.log(1.2), math.log(6.0)))
    return 1.0 / lam if rng.random() < 0.5 else lam


def _rand_hyperbolic(rng: random.Random) -> Isometry:
    p, q = _rand_endpoints(rng)
    return make_hyperbolic(p, q, _rand_multiplier(rng))


def _rand_parabolic(rng: random.Random) -> Isometry:
    lam = rng.uniform(0.2, 4.0)
    if rng.random() < 0.5:
        lam = -lam
    return make_parabolic(rng.uniform(-3.0, 3.0), lam)


def _rand_nonelliptic(rng: random.Random) -> Isometry:
    return _rand_parabolic(rng) if rng.random() < 0.3 else _rand_hyperbolic(rng)


# Conjugating C by B scales matrix entries by up to |B|^2 |C|, and the
# absolute floating-point error of the conjugate grows with them; the
# snap tolerance in level() leaves roughly a 1e-9 budget.  Capping the
# sampled norms keeps the worst-case drift an order of magnitude below
# that.  (Nearly-degenerate fixed-point pairs produce huge entries, so
# plain resampling is the simplest control.)
_NORM_CAP = 8.0


def _fro_norm(iso: Isometry) -> float:
    return math.sqrt(iso.a**2 + iso.b**2 + iso.c**2 + iso.d**2)


def _rand_bounded_nonelliptic(rng: random.Random) -> Isometry:
    while True:
        iso = _rand_nonelliptic(rng)
        if _fro_norm(iso) <= _NORM_CAP:
            return iso


def _rand_plus_element(rng: random.Random, m: int) -> CoverElement:
    """A random orientation-preserving cover element (a short product of
    canonical lifts and a central factor), with bounded matrix norm."""
    while True:
        e = canonical_lift(_rand_bounded_nonelliptic(rng), m)
        for _ in range(rng.randrange(0, 2)):
            e = multiply(e, canonical_lift(_rand_bounded_nonelliptic(rng), m))
        e = multiply(e, central(m, rng.randrange(m)))
        if _fro_norm(e.base) <= _NORM_CAP:
            return e


def _rand_level_element(rng: random.Random, m: int) -> CoverElement:
    """A random non-elliptic element with a well-defined level."""
    return multiply(
        canonical_lift(_rand_bounded_nonelliptic(rng), m), central(m, rng.randrange(m))
    )


def _level_residual(observed: int, expected: int, m: int) -> float:
    return 0.0 if observed == expected % m else float(abs(observed - expected % m))


def _check_j_squared(rng: random.Random, m: int) -> float:
    j = make_J(m, rng.randrange(m))
    return _element_distance(multiply(j, j), central(m, 0))


def _check_j_fixes_axis_hyperbolic(rng: random.Random, m: int) -> float:
    j = make_J(m, rng.randrange(m))
    t = canonical_lift(make_hyperbolic(0.0, math.inf, _rand_multiplier(rng)), m)
    return _element_distance(multiply(multiply(j, t), invert(j)), t)


def _check_j_negates_parabolic(rng: random.Random, m: int) -> float:
    j = make_J(m, rng.randrange(m))
    lam = rng.uniform(0.2, 4.0) * (1 if rng.random() < 0.5 else -1)
    p = canonical_lift(make_parabolic(0.0, lam), m)
    expected = canonical_lift(make_parabolic(0.0, -lam), m)
    return _element_distance(multiply(multiply(j, p), invert(j)), expected)


def _check_j_inverts_central(rng: random.Random, m: int) -> float:
    j = make_J(m, rng.randrange(m))
    u = central(m, 1)
    return _element_distance(multiply(multiply(j, u), invert(j)), central(m, m - 1))


def _check_level_conjugation_invariant(rng: random.Random, m: int) -> float:
    c = _rand_level_element(rng, m)
    b = _rand_plus_element(rng, m)
    conjugated = multiply(multiply(b, c), invert(b))
    return _level_residual(level(conjugated), level(c), m)


def _check_level_negated_by_j(rng: random.Random, m: int) -> float:
    c = _rand_level_element(rng, m)
    j = make_J(m, rng.randrange(m))
    conjugated = multiply(multiply(j, c), j)  # J is its own inverse
    return _level_residual(level(conjugated), -level(c), m)


def _check_level_negated_by_reversing(rng: random.Random, m: int) -> float:
    c = _rand_level_element(rng, m)
    f = multiply(_rand_plus_element(rng, m), make_J(m, rng.randrange(m)))
    conjugated = multiply(multiply(f, c), invert(f))
    return _level_residual(level(conjugated), -level(c), m)


def _check_twist_lift_square(rng: random.Random, m: int) -> float:
    lam = math.exp(rng.uniform(math.log(1.2), math.log(6.0)))
    whole = canonical_lift(make_hyperbolic(0.0, math.inf, lam), m)
    half = canonical_lift(make_hyperbolic(0.0, math.inf, math.sqrt(lam)), m)
    j = make_J(m, rng.randrange(m))
    worst = 0.0
    for q in range(m):
        s = multiply(multiply(j, half), central(m, q))
        worst = max(worst, _element_distance(multiply(s, s), whole))
    return worst


_IDENTITY_CHECKS = [
    ("J_squared_is_identity", _check_j_squared),
    ("J_conjugation_fixes_axis_hyperbolic", _check_j_fixes_axis_hyperbolic),
    ("J_conjugation_negates_parabolic_parameter", _check_j_negates_parabolic),
    ("J_conjugation_inverts_central", _check_j_inverts_central),
    ("level_invariant_under_conjugation", _check_level_conjugation_invariant),
    ("level_negated_by_J_conjugation", _check_level_negated_by_j),
    ("level_negated_by_reversing_conjugation", _check_level_negated_by_reversing),
    ("twist_lift_square_recovers_hyperbolic", _check_twist_lift_square),
]


def run_identity_suite(
    m: int, samples: int = 1000, seed: int = 0, tol: float = TOL
) -> list[IdentityCheckResult]:
    """Run every covering-group identity check with `samples` random
    trials each and report the worst residual per identity.

    Deterministic for a fixed (m, samples, seed, tol).
    """
    if m < 2:
        raise ValueError(f"cover degree must be at least 2, got m={m}")
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    rng = random.Random(seed)
    results = []
    for name, check in _IDENTITY_CHECKS:
        worst = 0.0
        for _ in range(samples):
            try:
                residual = check(rng, m)
            except BranchContinuationError:
                residual = math.inf
            worst = max(worst, residual)
        results.append(IdentityCheckResult(name, samples, worst, worst <= tol))
    return results

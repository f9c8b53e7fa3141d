"""Binary quartics on the pencil parameter line, cross-ratios, and the
j-invariant identity tying members of the quartic pencil to squares of
elliptic curves.

For a point x off the base locus, restricting the degree-4 invariant to
the pencil of trivectors spanned by the two partial evaluations at x
gives a binary quartic in (s, t).  Its four roots form the quadruple
{[s:t], [s:-t], [t:s], [t:-s]}; the same j-invariant must come out of
the half-period data (4 s^2 t^2, (s^2 - t^2)^2, -(s^2 + t^2)^2).  Both
sides are computed exactly and compared as field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .cyclotomic import Cyc8, ONE, ZERO, as_cyc8
from .exterior import pencil_at_point
from .invariant import quartic_q
from .pencil import DegenerateMember, PencilParams, ProjPoint, rational_member_point
from .poly import Poly


class DegenerateParameters(ValueError):
    """Pencil parameters landing on a tetrahedral member."""

    def __init__(self, message: str, tetrahedron: str):
        super().__init__(message)
        self.tetrahedron = tetrahedron


def check_pencil_parameters(s0, t0) -> Tuple[Cyc8, Cyc8]:
    """Validate s*t*(s^4 - t^4) != 0, naming the tetrahedron hit on failure."""
    s0, t0 = as_cyc8(s0), as_cyc8(t0)
    if not s0 or not t0:
        raise DegenerateParameters("degenerate: member is tetrahedron T1", "T1")
    if s0 * s0 == t0 * t0:
        raise DegenerateParameters("degenerate: member is tetrahedron T2", "T2")
    if s0 * s0 == -(t0 * t0):
        raise DegenerateParameters("degenerate: member is tetrahedron T3", "T3")
    return s0, t0


def member_params_for(s0, t0) -> PencilParams:
    """[A : B] = [3(s^4 + t^4) : 6 s^2 t^2] of the member through the
    Cartan point with pencil parameters (s0, t0)."""
    s0, t0 = as_cyc8(s0), as_cyc8(t0)
    return PencilParams(3 * (s0 ** 4 + t0 ** 4), 6 * s0 ** 2 * t0 ** 2)


@dataclass(frozen=True)
class P1Point:
    """Point [u : v] of the projective line, canonicalized to v = 1 or [1 : 0]."""

    u: Cyc8
    v: Cyc8

    def __post_init__(self):
        u, v = as_cyc8(self.u), as_cyc8(self.v)
        if not u and not v:
            raise ValueError("[0 : 0] is not a projective point")
        if v:
            u, v = u / v, ONE
        else:
            u, v = ONE, ZERO
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(ONE, ZERO)

    def is_infinity(self) -> bool:
        return not self.v

    def __str__(self) -> str:
        return "inf" if self.is_infinity() else str(self.u)


def _det2(p: P1Point, q: P1Point) -> Cyc8:
    return p.u * q.v - q.u * p.v


def cross_ratio(p1: P1Point, p2: P1Point, p3: P1Point, p4: P1Point) -> Cyc8:
    """((p1 - p3)(p2 - p4)) / ((p1 - p4)(p2 - p3)), projectively.

    This ordering convention is fixed library-wide; any reordering moves
    the value inside its six-element orbit under lam -> 1/lam, 1 - lam,
    which the j-invariant does not see.
    """
    points = (p1, p2, p3, p4)
    for i in range(4):
        for j in range(i + 1, 4):
            if not _det2(points[i], points[j]):
                raise ValueError("cross-ratio requires four distinct points")
    return (_det2(p1, p3) * _det2(p2, p4)) / (_det2(p1, p4) * _det2(p2, p3))


@dataclass(frozen=True)
class BinaryQuartic:
    """a0 s^4 + 4 a1 s^3 t + 6 a2 s^2 t^2 + 4 a3 s t^3 + a4 t^4."""

    a0: Cyc8
    a1: Cyc8
    a2: Cyc8
    a3: Cyc8
    a4: Cyc8

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, as_cyc8(getattr(self, name)))
        if not any((self.a0, self.a1, self.a2, self.a3, self.a4)):
            raise ValueError("binary quartic must not vanish identically")

    @classmethod
    def from_poly(cls, p: Poly) -> "BinaryQuartic":
        if any(v not in ("s", "t") for v in p.variables()):
            raise ValueError("polynomial is not binary in (s, t)")
        coeff = [p.coefficient({"s": 4 - k, "t": k}) for k in range(5)]
        return cls(coeff[0], coeff[1] / 4, coeff[2] / 6, coeff[3] / 4, coeff[4])

    def poly(self) -> Poly:
        s, t = Poly.variable("s"), Poly.variable("t")
        return (s ** 4 * self.a0 + s ** 3 * t * (4 * self.a1)
                + s ** 2 * t ** 2 * (6 * self.a2) + s * t ** 3 * (4 * self.a3)
                + t ** 4 * self.a4)

    def evaluate(self, p: P1Point) -> Cyc8:
        s, t = p.u, p.v
        return (self.a0 * s ** 4 + 4 * self.a1 * s ** 3 * t + 6 * self.a2 * s ** 2 * t ** 2
                + 4 * self.a3 * s * t ** 3 + self.a4 * t ** 4)

    def invariant_i(self) -> Cyc8:
        return self.a0 * self.a4 - 4 * self.a1 * self.a3 + 3 * self.a2 ** 2

    def invariant_j(self) -> Cyc8:
        return (self.a0 * self.a2 * self.a4 + 2 * self.a1 * self.a2 * self.a3
                - self.a2 ** 3 - self.a0 * self.a3 ** 2 - self.a1 ** 2 * self.a4)


def quartic_from_roots(points: Sequence[P1Point]) -> BinaryQuartic:
    """Binary quartic with the four given roots, product of (v_i s - u_i t)."""
    if len(points) != 4:
        raise ValueError("need exactly four roots")
    s, t = Poly.variable("s"), Poly.variable("t")
    prod = Poly.const(1)
    for p in points:
        prod = prod * (s * p.v - t * p.u)
    return BinaryQuartic.from_poly(prod)


def j_from_lambda(lam) -> Cyc8:
    """j = 256 (lam^2 - lam + 1)^3 / (lam^2 (1 - lam)^2)."""
    lam = as_cyc8(lam)
    if not lam or lam == ONE:
        raise ValueError("cross-ratio 0 or 1 corresponds to a degenerate quadruple")
    numerator = 256 * (lam * lam - lam + 1) ** 3
    return numerator / (lam * lam * (1 - lam) ** 2)


def j_from_binary_quartic(f: BinaryQuartic) -> Cyc8:
    """Root-free j via the degree-2 and degree-3 invariants: 1728 I^3 / (I^3 - 27 J^2).

    The leading constant 1728 is calibrated against quartics with roots
    {0, 1, lam, inf} and frozen in the test suite.
    """
    i_inv = f.invariant_i()
    j_inv = f.invariant_j()
    disc = i_inv ** 3 - 27 * j_inv ** 2
    if not disc:
        raise ValueError("binary quartic has a repeated root")
    return 1728 * i_inv ** 3 / disc


def symmetric_roots(s0, t0) -> Tuple[P1Point, P1Point, P1Point, P1Point]:
    """{[s:t], [s:-t], [t:s], [t:-s]} — the root quadruple of
    B(s^4 + t^4) - 2 A s^2 t^2 at [A : B] = [s0^4 + t0^4 : 2 s0^2 t0^2]."""
    s0, t0 = check_pencil_parameters(s0, t0)
    return (
        P1Point(s0, t0), P1Point(s0, -t0), P1Point(t0, s0), P1Point(t0, -s0),
    )


def member_binary_quartic(x: ProjPoint | Sequence) -> BinaryQuartic:
    """Restriction of the quartic invariant to the trivector pencil of x."""
    coords = x.coords if isinstance(x, ProjPoint) else tuple(as_cyc8(c) for c in x)
    restriction = quartic_q(pencil_at_point(coords))
    if not restriction:
        raise ValueError("restriction vanishes identically: point is on the base locus")
    return BinaryQuartic.from_poly(restriction)


def half_period_differences(s0, t0) -> Tuple[Cyc8, Cyc8, Cyc8]:
    """(e1 - e2, e3 - e1, e2 - e3), proportional to
    (4 s^2 t^2, (s^2 - t^2)^2, -(s^2 + t^2)^2); the three sum to zero."""
    s0, t0 = check_pencil_parameters(s0, t0)
    d12 = 4 * s0 ** 2 * t0 ** 2
    d31 = (s0 ** 2 - t0 ** 2) ** 2
    d23 = -((s0 ** 2 + t0 ** 2) ** 2)
    return d12, d31, d23


def half_period_cross_ratio(s0, t0) -> Cyc8:
    """(e3 - e1) / (e2 - e1) = -(s^2 - t^2)^2 / (4 s^2 t^2)."""
    d12, d31, _ = half_period_differences(s0, t0)
    return d31 / (-d12)


@dataclass(frozen=True)
class KummerReport:
    s0: Cyc8
    t0: Cyc8
    params: PencilParams
    lambda_curve: Cyc8
    lambda_periods: Cyc8
    j_curve: Cyc8
    j_periods: Cyc8
    member_point: ProjPoint | None
    j_member: Cyc8 | None

    @property
    def j_equal(self) -> bool:
        routes = [self.j_periods]
        if self.j_member is not None:
            routes.append(self.j_member)
        return all(j == self.j_curve for j in routes)


def verify_kummer_correspondence(s0, t0, with_member_route: bool = True) -> KummerReport:
    """Exact agreement of the curve-side and period-side j-invariants.

    The curve side is the cross-ratio of the four symmetric roots; the
    period side comes from the half-period differences.  Optionally a
    third route restricts the invariant along the pencil of an
    explicitly constructed rational point of the member and extracts j
    root-free from the degree-2/3 invariants.
    """
    s0, t0 = check_pencil_parameters(s0, t0)
    params = member_params_for(s0, t0)
    lam_curve = cross_ratio(*symmetric_roots(s0, t0))
    lam_periods = half_period_cross_ratio(s0, t0)
    j_curve = j_from_lambda(lam_curve)
    j_periods = j_from_lambda(lam_periods)
    if j_curve != j_periods:
        raise AssertionError(
            f"j mismatch at (s, t) = ({s0}, {t0}): {j_curve} vs {j_periods}"
        )
    member_point = None
    j_member = None
    if with_member_route:
        member_point = rational_member_point(params)
        j_member = j_from_binary_quartic(member_binary_quartic(member_point))
        if j_member != j_curve:
            raise AssertionError(
                f"member-route j mismatch at (s, t) = ({s0}, {t0}): "
                f"{j_member} vs {j_curve}"
            )
    return KummerReport(
        s0, t0, params, lam_curve, lam_periods, j_curve, j_periods,
        member_point, j_member,
    )

"""The desmic pencil of quartic surfaces in P^3 and its combinatorics.

Members are 8*A*x1x2x3x4 - B*(2 sum_{i<j} xi^2 xj^2 - sum_k xk^4) for a
projective parameter [A : B].  The module builds the three tetrahedra,
the 12 desmic points, the 16 base-locus lines and their (16_3, 12_4)
incidence, tangent planes and residual conics along the lines, the
conjugate pencil in y-coordinates, the two-dimensional spans of
tetrahedral products, and the S3 x S3 quotient of the 1152-element
symmetry group together with the tetrahedron stabilizer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import Cyc8, ONE, ZERO, as_cyc8
from .matrix import Matrix, MatrixGroup, rref, solve_exact
from .poly import Poly, S, T, X, Y, proportional
from . import roots as roots_mod
from .roots import LONG, SHORT, RootSystemF4, fraction_rows


class DegenerateMember(RuntimeError):
    """An operation hit a completely reducible (tetrahedral) member."""


# -- pencil members ----------------------------------------------------

def monomial_product() -> Poly:
    x1, x2, x3, x4 = X
    return x1 * x2 * x3 * x4


def square_form() -> Poly:
    """g = 2 sum_{i<j} xi^2 xj^2 - sum_k xk^4."""
    squares = [xi * xi for xi in X]
    pair_sum = Poly.zero()
    for i in range(4):
        for j in range(i + 1, 4):
            pair_sum = pair_sum + squares[i] * squares[j]
    quartic_sum = sum((sq * sq for sq in squares), Poly.zero())
    return pair_sum * 2 - quartic_sum


_M = monomial_product()
_G = square_form()

_M_MONO = {"x1": 1, "x2": 1, "x3": 1, "x4": 1}


@dataclass(frozen=True)
class PencilParams:
    a: Cyc8
    b: Cyc8

    def __post_init__(self):
        object.__setattr__(self, "a", as_cyc8(self.a))
        object.__setattr__(self, "b", as_cyc8(self.b))
        if not self.a and not self.b:
            raise ValueError("pencil parameters must not both vanish")

    def normalized(self) -> "PencilParams":
        """Scale so b = 1 when b != 0, else a = 1."""
        scale = ONE / self.b if self.b else ONE / self.a
        return PencilParams(self.a * scale, self.b * scale)

    def same_member(self, other: "PencilParams") -> bool:
        return not (self.a * other.b - self.b * other.a)

    def __str__(self) -> str:
        return f"[{self.a} : {self.b}]"


@dataclass(frozen=True)
class QuarticMember:
    form: Poly
    params: PencilParams

    def __str__(self) -> str:
        return f"member {self.params}: {self.form}"


def pencil_member(params: PencilParams) -> QuarticMember:
    form = _M * (params.a * 8) - _G * params.b
    return QuarticMember(form, params)


def member_params_of(form: Poly) -> PencilParams:
    """Recover [A : B] from a quartic equal to 8*A*m - B*g."""
    a = form.coefficient(_M_MONO) / 8
    b = form.coefficient({"x1": 4})
    if _M * (a * 8) - _G * b != form:
        raise ValueError("form does not belong to the desmic pencil")
    return PencilParams(a, b)


def params_of_proportional(form: Poly) -> PencilParams:
    """[A : B] of a form proportional to a pencil member, b-normalized."""
    a = form.coefficient(_M_MONO) / 8
    b = form.coefficient({"x1": 4})
    params = PencilParams(a, b).normalized()
    if proportional(form, pencil_member(params).form) is None:
        raise ValueError("form is not proportional to a pencil member")
    return params


# -- projective points and lines ----------------------------------------

@dataclass(frozen=True)
class ProjPoint:
    coords: Tuple[Cyc8, Cyc8, Cyc8, Cyc8]

    def __post_init__(self):
        vals = tuple(as_cyc8(c) for c in self.coords)
        lead = next((v for v in vals if v), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = ONE / lead
        object.__setattr__(self, "coords", tuple(v * inv for v in vals))

    def poly_values(self) -> Dict[str, Cyc8]:
        return {f"x{i + 1}": c for i, c in enumerate(self.coords)}

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


def _point(*coords) -> ProjPoint:
    return ProjPoint(tuple(as_cyc8(c) for c in coords))


@dataclass(frozen=True)
class ProjLine:
    """A line in P^3 as the row-reduced basis of its rank-2 coordinate span."""

    basis: Tuple[Tuple[Cyc8, ...], Tuple[Cyc8, ...]]

    @classmethod
    def through(cls, p: Sequence, q: Sequence) -> "ProjLine":
        rows, _ = rref([
            [as_cyc8(v) for v in p],
            [as_cyc8(v) for v in q],
        ])
        if len(rows) != 2:
            raise ValueError("points do not span a line")
        return cls((rows[0], rows[1]))

    def contains(self, point: ProjPoint) -> bool:
        rows, _ = rref([self.basis[0], self.basis[1], point.coords])
        return len(rows) == 2

    def meet(self, other: "ProjLine") -> Optional[ProjPoint]:
        """Intersection point of two distinct lines, or None if skew."""
        rows, _ = rref([*self.basis, *other.basis])
        if len(rows) != 3:
            return None
        stacked = (*self.basis, *other.basis)
        # kernel of the 4x4 matrix whose columns are the four basis vectors
        mat = [[stacked[j][i] for j in range(4)] for i in range(4)]
        reduced, pivots = rref(mat)
        free = next(j for j in range(4) if j not in pivots)
        coeffs = [ZERO] * 4
        coeffs[free] = ONE
        for row, p in zip(reduced, pivots):
            coeffs[p] = -row[free]
        point = [
            coeffs[0] * self.basis[0][k] + coeffs[1] * self.basis[1][k]
            for k in range(4)
        ]
        return ProjPoint(tuple(point))

    def parametrize(self) -> Tuple[Poly, Poly, Poly, Poly]:
        """Symbolic point s*b1 + t*b2 of the line."""
        return tuple(S * self.basis[0][k] + T * self.basis[1][k] for k in range(4))

    def __str__(self) -> str:
        b1, b2 = self.basis
        return ("line span{(" + ", ".join(map(str, b1)) + "), ("
                + ", ".join(map(str, b2)) + ")}")


# -- tetrahedra ---------------------------------------------------------

@dataclass(frozen=True)
class Tetrahedron:
    name: str
    faces: Tuple[Poly, Poly, Poly, Poly]
    vertices: Tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    params: PencilParams

    def face_product(self) -> Poly:
        prod = Poly.const(1)
        for f in self.faces:
            prod = prod * f
        return prod

    def edges(self) -> Tuple[ProjLine, ...]:
        return tuple(
            ProjLine.through(p.coords, q.coords)
            for p, q in itertools.combinations(self.vertices, 2)
        )


def _signed_face(signs: Sequence[int]) -> Poly:
    total = Poly.zero()
    for sgn, xi in zip(signs, X):
        total = total + (xi if sgn > 0 else -xi)
    return total


def tetrahedra() -> Tuple[Tetrahedron, Tetrahedron, Tetrahedron]:
    """The three completely reducible members.

    The member parameters are recovered from the expanded face products
    rather than hard-coded; the suite cross-checks them against
    A = 3(s^4 + t^4), B = 6 s^2 t^2 on st = 0, s^2 = t^2, s^2 = -t^2.
    """
    sign_vectors = [sgns for sgns in itertools.product((1, -1), repeat=4) if sgns[0] == 1]
    plus = [s for s in sign_vectors if s[1] * s[2] * s[3] == 1]
    minus = [s for s in sign_vectors if s[1] * s[2] * s[3] == -1]

    spec = (
        ("T1", tuple(X),
         (_point(1, 0, 0, 0), _point(0, 1, 0, 0), _point(0, 0, 1, 0), _point(0, 0, 0, 1))),
        ("T2", tuple(_signed_face(s) for s in plus),
         (_point(1, 1, 1, 1), _point(1, 1, -1, -1), _point(1, -1, 1, -1), _point(1, -1, -1, 1))),
        ("T3", tuple(_signed_face(s) for s in minus),
         (_point(1, 1, 1, -1), _point(1, 1, -1, 1), _point(1, -1, 1, 1), _point(1, -1, -1, -1))),
    )
    out = []
    for name, faces, vertices in spec:
        prod = Poly.const(1)
        for f in faces:
            prod = prod * f
        params = params_of_proportional(prod)
        out.append(Tetrahedron(name, faces, vertices, params))
    return tuple(out)


# -- desmic points and singularity ---------------------------------------

def desmic_points() -> Tuple[ProjPoint, ...]:
    """The 12 singular points: two coordinates zero, the other two = (1, +-1)."""
    points = []
    for zeros in itertools.combinations(range(4), 2):
        live = [i for i in range(4) if i not in zeros]
        for sign in (1, -1):
            coords = [0, 0, 0, 0]
            coords[live[0]] = 1
            coords[live[1]] = sign
            points.append(_point(*coords))
    return tuple(points)


def gradient(form: Poly) -> Tuple[Poly, Poly, Poly, Poly]:
    return tuple(form.diff(f"x{i}") for i in range(1, 5))


def is_singular_at(member: QuarticMember, point: ProjPoint) -> bool:
    values = point.poly_values()
    if member.form.evaluate(values):
        return False
    return all(not d.evaluate(values) for d in gradient(member.form))


# -- base locus and the (16_3, 12_4) incidence ----------------------------

@dataclass(frozen=True)
class BaseLine:
    """A base-locus line x_i = 0, sum_j eps_j x_j = 0 (eps normalized, lead +1)."""

    plane: int                      # the vanishing coordinate, 0-based
    signs: Tuple[int, int, int]     # signs on the remaining coordinates
    line: ProjLine

    def defining_forms(self) -> Tuple[Poly, Poly]:
        others = [i for i in range(4) if i != self.plane]
        form = Poly.zero()
        for sgn, idx in zip(self.signs, others):
            form = form + (X[idx] if sgn > 0 else -X[idx])
        return X[self.plane], form

    def contains(self, point: ProjPoint) -> bool:
        f1, f2 = self.defining_forms()
        vals = point.poly_values()
        return not f1.evaluate(vals) and not f2.evaluate(vals)

    def __str__(self) -> str:
        f1, f2 = self.defining_forms()
        return f"{{{f1} = 0, {f2} = 0}}"


def base_locus_lines() -> Tuple[BaseLine, ...]:
    """All 16 lines lying on every member.

    Candidates come from all four coordinate planes with all sign
    patterns; each is verified by substituting a symbolic parametrization
    into both pencil generators, so the count 16 is computed, not assumed.
    """
    found: List[BaseLine] = []
    seen = set()
    for plane in range(4):
        others = [i for i in range(4) if i != plane]
        for signs in itertools.product((1, -1), repeat=3):
            if signs[0] != 1:      # eps and -eps cut the same line
                continue
            p = [0, 0, 0, 0]
            q = [0, 0, 0, 0]
            p[others[0]], p[others[1]] = signs[1], -signs[0]
            q[others[1]], q[others[2]] = signs[2], -signs[1]
            line = ProjLine.through(p, q)
            if line.basis in seen:
                continue
            seen.add(line.basis)
            subs = {f"x{i + 1}": c for i, c in enumerate(line.parametrize())}
            if _M.substitute(subs) or _G.substitute(subs):
                continue
            found.append(BaseLine(plane, signs, line))
    return tuple(found)


@dataclass(frozen=True)
class ReyeIncidence:
    lines: Tuple[BaseLine, ...]
    points: Tuple[ProjPoint, ...]
    points_on_line: Tuple[Tuple[int, ...], ...]
    lines_through_point: Tuple[Tuple[int, ...], ...]

    @property
    def incidence_count(self) -> int:
        return sum(len(t) for t in self.points_on_line)


def reye_incidence() -> ReyeIncidence:
    lines = base_locus_lines()
    points = desmic_points()
    on_line = tuple(
        tuple(pi for pi, p in enumerate(points) if bl.contains(p))
        for bl in lines
    )
    through = tuple(
        tuple(li for li, bl in enumerate(lines) if bl.contains(p))
        for p in points
    )
    return ReyeIncidence(lines, points, on_line, through)


# -- tangent planes and residual conics ---------------------------------

def tangent_covector_along_line(member: QuarticMember, base_line: BaseLine) -> Tuple[Cyc8, ...]:
    """The fixed covector h with grad(F) proportional to h along the line.

    Computed on a symbolic parametrization, so constancy is checked as a
    polynomial identity.  Raises DegenerateMember if the gradient
    vanishes identically along the line.
    """
    subs = {f"x{i + 1}": c for i, c in enumerate(base_line.line.parametrize())}
    grads = [d.substitute(subs) for d in gradient(member.form)]
    pivot = next((g for g in grads if g), None)
    if pivot is None:
        raise DegenerateMember("gradient vanishes identically along the line")
    h: List[Cyc8] = []
    for g in grads:
        if not g:
            h.append(ZERO)
            continue
        ratio = proportional(g, pivot)
        if ratio is None:
            raise AssertionError("gradient direction is not constant along a base line")
        h.append(ratio)
    lead = next(v for v in h if v)
    inv = ONE / lead
    return tuple(v * inv for v in h)


@dataclass(frozen=True)
class TangentPlaneSection:
    covector: Tuple[Cyc8, Cyc8, Cyc8, Cyc8]
    plane_basis: Tuple[Tuple[Cyc8, ...], Tuple[Cyc8, ...], Tuple[Cyc8, ...]]
    conic: Poly                      # quadratic in the plane coordinates y1, y2, y3

    def plane_point_to_p3(self, y: Sequence[Cyc8]) -> ProjPoint:
        coords = [
            y[0] * self.plane_basis[0][k] + y[1] * self.plane_basis[1][k]
            + y[2] * self.plane_basis[2][k]
            for k in range(4)
        ]
        return ProjPoint(tuple(coords))

    def p3_point_to_plane(self, point: ProjPoint) -> Tuple[Cyc8, Cyc8, Cyc8]:
        columns = [self.plane_basis[i] for i in range(3)]
        sol = solve_exact(columns, point.coords)
        if sol is None:
            raise ValueError("point does not lie on the tangent plane")
        return sol


def _plane_complement_vector(h: Sequence[Cyc8], line: ProjLine) -> Tuple[Cyc8, ...]:
    """A vector of {h = 0} completing the line basis to a plane basis."""
    k = next(i for i in range(4) if h[i])
    for l in range(4):
        if l == k:
            continue
        cand = [ZERO] * 4
        cand[l] = h[k]
        cand[k] = -h[l]
        rows, _ = rref([line.basis[0], line.basis[1], tuple(cand)])
        if len(rows) == 3:
            return tuple(cand)
    raise AssertionError("tangent plane collapsed onto the line")


_Y3_SLOT = 8  # exponent slot of y3 in the fixed variable order


def tangent_plane_along_line(member: QuarticMember, base_line: BaseLine) -> TangentPlaneSection:
    """Constant tangent plane along a base line plus the residual conic.

    Restricting the member to the tangent plane yields (line form)^2
    times a conic; the plane is coordinatized by (y1, y2, y3) with the
    line at y3 = 0.
    """
    h = tangent_covector_along_line(member, base_line)
    v1, v2 = base_line.line.basis
    v3 = _plane_complement_vector(h, base_line.line)
    subs = {
        f"x{k + 1}": Y[0] * v1[k] + Y[1] * v2[k] + Y[2] * v3[k]
        for k in range(4)
    }
    section = member.form.substitute(subs)
    if not section:
        raise DegenerateMember("plane section vanishes identically")
    conic_terms = {}
    for mono, coeff in section.terms.items():
        if mono[_Y3_SLOT] < 2:
            raise AssertionError("plane section does not vanish doubly along the line")
        new = list(mono)
        new[_Y3_SLOT] -= 2
        conic_terms[tuple(new)] = coeff
    return TangentPlaneSection(tuple(h), (v1, v2, v3), Poly(conic_terms))


# -- rational points on members ------------------------------------------

_CONIC_DIRECTIONS = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 1, 1), (1, 2, 0), (2, 1, 1),
)


def rational_member_point(params: PencilParams) -> ProjPoint:
    """A point with coordinates in the scalar field on the member, off the
    base locus.

    Works inside the tangent plane along {x1 = 0, x2 + x3 + x4 = 0}: the
    plane section is (line)^2 * conic, the conic inherits a seed point
    from a second base line crossing the plane, and sweeping lines
    through the seed parametrizes the conic.  Conic points are member
    points, and away from finitely many parameters they avoid the base
    locus.
    """
    a, b = params.a, params.b
    if not a or not b:
        raise DegenerateMember("tetrahedral member: no residual conic available")
    member = pencil_member(params)
    base = next(bl for bl in base_locus_lines() if bl.plane == 0 and bl.signs == (1, 1, 1))
    section = tangent_plane_along_line(member, base)
    conic = section.conic

    seeds = []
    if a + b:
        seeds.append(_point(-2 * b, 0, a + b, a - b))       # from {x2=0, x1+x3-x4=0}
    if a - b:
        seeds.append(_point(2 * b, 0, b - a, -(a + b)))     # from {x2=0, x1-x3+x4=0}
    root = None
    for seed in seeds:
        y = section.p3_point_to_plane(seed)
        if not conic.evaluate({"y1": y[0], "y2": y[1], "y3": y[2]}):
            root = y
            break
    if root is None:
        raise AssertionError("no rational seed point found on the residual conic")

    sweep = Poly.variable("s")
    for direction in _CONIC_DIRECTIONS:
        d = tuple(as_cyc8(v) for v in direction)
        subs = {f"y{i + 1}": Poly.const(root[i]) + sweep * d[i] for i in range(3)}
        restricted = conic.substitute(subs)
        if restricted.coefficient({}):
            raise AssertionError("conic seed point is not on the conic")
        c2 = restricted.coefficient({"s": 2})
        c1 = restricted.coefficient({"s": 1})
        if not c2 or not c1:
            continue
        u_star = -c1 / c2
        y_star = tuple(root[i] + u_star * d[i] for i in range(3))
        if not any(y_star):
            continue
        point = section.plane_point_to_p3(y_star)
        vals = point.poly_values()
        if not _M.evaluate(vals) and not _G.evaluate(vals):
            continue  # landed back on the base locus; try another sweep line
        if member.form.evaluate(vals):
            raise AssertionError("conic parametrization left the member")
        return point
    raise AssertionError("all sweep directions degenerated")


# -- conjugate pencil -----------------------------------------------------

def conjugate_member(a, b, c) -> Poly:
    """Member of the conjugate pencil in y-coordinates, for a + b + c = 0.

    Returned in the normal form
        (b-c)(y1^2 y2^2 + y3^2 y4^2) + (c-a)(y1^2 y3^2 + y2^2 y4^2)
            + (a-b)(y1^2 y4^2 + y2^2 y3^2);
    the three-term product form expands to exactly minus this.
    """
    a, b, c = as_cyc8(a), as_cyc8(b), as_cyc8(c)
    if a + b + c:
        raise ValueError("conjugate pencil parameters must satisfy a + b + c = 0")
    y1, y2, y3, y4 = Y
    p12 = y1 ** 2 * y2 ** 2 + y3 ** 2 * y4 ** 2
    p13 = y1 ** 2 * y3 ** 2 + y2 ** 2 * y4 ** 2
    p14 = y1 ** 2 * y4 ** 2 + y2 ** 2 * y3 ** 2
    return p12 * (b - c) + p13 * (c - a) + p14 * (a - b)


def conjugate_product_form(a, b, c) -> Poly:
    """a(y1^2-y2^2)(y3^2-y4^2) - b(y1^2-y3^2)(y2^2-y4^2) + c(y1^2-y4^2)(y2^2-y3^2)."""
    a, b, c = as_cyc8(a), as_cyc8(b), as_cyc8(c)
    y1, y2, y3, y4 = Y
    q1 = (y1 ** 2 - y2 ** 2) * (y3 ** 2 - y4 ** 2)
    q2 = (y1 ** 2 - y3 ** 2) * (y2 ** 2 - y4 ** 2)
    q3 = (y1 ** 2 - y4 ** 2) * (y2 ** 2 - y3 ** 2)
    return q1 * a - q2 * b + q3 * c


# -- Macdonald spans -------------------------------------------------------

@dataclass(frozen=True)
class SpanReport:
    kind: str
    products: Tuple[Poly, Poly, Poly]
    dimension: int
    relation: Tuple[Cyc8, Cyc8, Cyc8]   # sum_i relation[i] * products[i] == 0


def _root_linear_form(root: roots_mod.RootVec, variables: Sequence[Poly]) -> Poly:
    total = Poly.zero()
    for coord, var in zip(root.coords, variables):
        if coord:
            total = total + var * as_cyc8(coord)
    return total


def _poly_matrix_rows(polys: Sequence[Poly]):
    monomials = sorted({m for p in polys for m in p.terms})
    return [[p.terms.get(m, ZERO) for p in polys] for m in monomials]


def span_dimension(polys: Sequence[Poly]) -> int:
    _, pivots = rref(_poly_matrix_rows(polys))
    return len(pivots)


def in_span(target: Poly, basis: Sequence[Poly]) -> bool:
    monomials = sorted({m for p in (*basis, target) for m in p.terms})
    columns = [[p.terms.get(m, ZERO) for m in monomials] for p in basis]
    vec = [target.terms.get(m, ZERO) for m in monomials]
    return solve_exact(columns, vec) is not None


def _unit_lead(form: Poly) -> Poly:
    """Scale a linear form so its earliest variable has coefficient 1."""
    lead_mono = min(form.terms, key=lambda m: tuple(-e for e in m))
    return form / form.terms[lead_mono]


def _order_products(kind: str, products: Sequence[Poly]) -> Tuple[Poly, Poly, Poly]:
    if kind == SHORT:
        m_prod = next(p for p in products if p == _M)
        plus = next(p for p in products if p is not m_prod
                    and p.coefficient(_M_MONO).sort_key() > ZERO.sort_key())
        minus = next(p for p in products if p is not m_prod and p is not plus)
        return m_prod, plus, minus
    # long kind: q1 misses y1^2 y2^2, q2 misses y1^2 y3^2, q3 misses y1^2 y4^2
    def slot(p: Poly) -> int:
        for pos, mono in enumerate(({"y1": 2, "y2": 2}, {"y1": 2, "y3": 2}, {"y1": 2, "y4": 2})):
            if not p.coefficient(mono):
                return pos
        raise AssertionError("unrecognized long-root product")
    ordered = sorted(products, key=slot)
    return tuple(ordered)


def _integer_scaled(coeffs: Sequence[Cyc8]) -> Tuple[Cyc8, ...]:
    """Scale a rational relation vector to coprime integers, lead positive."""
    fractions = [c.as_fraction() for c in coeffs]
    from math import gcd
    denom = 1
    for f in fractions:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [f * denom for f in fractions]
    g = 0
    for v in ints:
        g = gcd(g, int(v))
    if g:
        ints = [v / g for v in ints]
    lead = next((v for v in ints if v), None)
    if lead and lead < 0:
        ints = [-v for v in ints]
    return tuple(as_cyc8(v) for v in ints)


def macdonald_span(kind: str, rs: RootSystemF4 | None = None) -> SpanReport:
    """Span of the three per-group products of root linear forms.

    Each group of four mutually orthogonal positive roots contributes the
    product of its root forms, normalized to unit leading coefficients
    (for the short kind this gives the tetrahedron face products, so the
    relation reads 16 p1 - p2 + p3 = 0; the long kind gives
    q1 - q2 + q3 = 0).  Short products live in x, long products in y.
    """
    if rs is None:
        rs = roots_mod.build_f4()
    splitting = roots_mod.orthogonal_splitting(rs, kind)
    variables = Y if kind == LONG else X
    products = []
    for group in splitting.groups:
        prod = Poly.const(1)
        for idx in group:
            prod = prod * _unit_lead(_root_linear_form(rs.roots[idx], variables))
        products.append(prod)
    ordered = _order_products(kind, products)
    rows = _poly_matrix_rows(ordered)
    reduced, pivots = rref(rows)
    dimension = len(pivots)
    free = [j for j in range(3) if j not in pivots]
    if len(free) != 1:
        raise AssertionError(f"expected exactly one relation, got pivots {pivots}")
    f = free[0]
    coeffs = [ZERO] * 3
    coeffs[f] = ONE
    for row, p in zip(reduced, pivots):
        coeffs[p] = -row[f]
    return SpanReport(kind, ordered, dimension, _integer_scaled(coeffs))


# -- the S3 x S3 quotient and the tetrahedron stabilizer -------------------

_SPLIT_TABLES: Dict[str, tuple] = {}


def _splitting_tables():
    """coords -> group id lookup and per-kind group coordinate lists."""
    if _SPLIT_TABLES:
        return _SPLIT_TABLES
    rs = roots_mod.build_f4()
    lookup: Dict[Tuple[Fraction, ...], Tuple[str, int]] = {}
    groups = {}
    for kind in (LONG, SHORT):
        splitting = roots_mod.orthogonal_splitting(rs, kind)
        coord_groups = []
        for gi, group in enumerate(splitting.groups):
            coords_list = []
            for idx in group:
                coords = rs.roots[idx].coords
                lookup[coords] = (kind, gi)
                lookup[tuple(-c for c in coords)] = (kind, gi)
                coords_list.append(coords)
            coord_groups.append(tuple(coords_list))
        groups[kind] = tuple(coord_groups)
    _SPLIT_TABLES["lookup"] = lookup
    _SPLIT_TABLES["groups"] = groups
    return _SPLIT_TABLES


def _induced_group_permutation(rows, kind: str) -> Tuple[int, ...]:
    tables = _splitting_tables()
    perm = []
    for group in tables["groups"][kind]:
        targets = set()
        for coords in group:
            image = roots_mod._apply_rows(rows, coords)
            hit = tables["lookup"].get(image)
            if hit is None or hit[0] != kind:
                raise AssertionError("matrix does not permute the splitting roots")
            targets.add(hit[1])
        if len(targets) != 1:
            raise AssertionError("matrix maps one orthogonal group across several")
        perm.append(targets.pop())
    if sorted(perm) != [0, 1, 2]:
        raise AssertionError("induced map on groups is not a permutation")
    return tuple(perm)


def element_s3s3_pair(m: Matrix) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(long-group permutation, short-group permutation) induced by m."""
    rows = fraction_rows(m)
    return (_induced_group_permutation(rows, LONG),
            _induced_group_permutation(rows, SHORT))


@dataclass(frozen=True)
class ExtensionReport:
    kernel_order: int
    image_order: int
    generator_pairs: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]

    @property
    def generator_long_trivial(self) -> Tuple[bool, ...]:
        return tuple(p[0] == (0, 1, 2) for p in self.generator_pairs)


def weyl_to_s3s3(group: MatrixGroup) -> ExtensionReport:
    """The quotient of the symmetry group onto S3 x S3 via the two splittings."""
    identity = ((0, 1, 2), (0, 1, 2))
    kernel = 0
    images = set()
    for m in group:
        pair = element_s3s3_pair(m)
        images.add(pair)
        if pair == identity:
            kernel += 1
    gen_pairs = tuple(element_s3s3_pair(g) for g in group.generators)
    return ExtensionReport(kernel, len(images), gen_pairs)


@dataclass(frozen=True)
class StabilizerReport:
    matrix_order: int
    projective_order: int
    all_signed_permutations: bool
    long_image_order: int


def tetrahedron_stabilizer(group: MatrixGroup) -> StabilizerReport:
    """Stabilizer of the coordinate-tetrahedron face set inside the group.

    An element preserves {x_i = 0} as a set of planes iff each of its
    columns is supported on a single coordinate; for these orthogonal
    matrices the surviving entries are +-1, i.e. signed permutations.
    """
    stab = []
    all_signed = True
    for m in group:
        rows = fraction_rows(m)
        monomial = True
        for j in range(4):
            col = [rows[i][j] for i in range(4)]
            nonzero = [v for v in col if v]
            if len(nonzero) != 1:
                monomial = False
                break
            if abs(nonzero[0]) != 1:
                all_signed = False
        if monomial:
            stab.append(m)
    projective = set()
    long_perms = set()
    for m in stab:
        projective.add(min(m.key(), (-m).key()))
        long_perms.add(element_s3s3_pair(m)[0])
    return StabilizerReport(len(stab), len(projective), all_signed, len(long_perms))

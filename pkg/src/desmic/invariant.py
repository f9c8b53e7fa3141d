"""The quadratic moment map into sl6, the degree-4 invariant it squares
to, and the four explicit normalizer lifts with their induced action on
the Cartan basis.

The pairing on sl6 is realized by the trace form Tr(XY).  With the
volume trivialization e_123456 -> 1 this normalization reproduces the
restricted quartic

    Q(w(s,t,x)) = 24 (s^4 + t^4) x1 x2 x3 x4
                  - 6 s^2 t^2 (2 sum_{i<j} xi^2 xj^2 - sum_k xk^4)

with proportionality constant exactly 1 (frozen in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .cyclotomic import Cyc8, HALF_SQRT2, ONE, ZERO, ZETA, as_cyc8
from .matrix import Matrix, MatrixGroup, group_closure
from .exterior import (
    PencilTrivector,
    Trivector,
    cartan_basis,
    gl6_act,
    group_act,
    omega_pairing,
    pencil_trivector,
)
from .poly import Poly, S, T, X, proportional


def _unit_matrix(i: int, j: int) -> Matrix:
    """The endomorphism e_i |-> e_j of C^6 (matrix unit with 1 at row j, col i)."""
    rows = [[ZERO] * 6 for _ in range(6)]
    rows[j - 1][i - 1] = ONE
    return Matrix(rows)


def moment_map(w: Trivector) -> Matrix:
    """The traceless 6x6 matrix P(w) with Tr(P(w) X) = Omega(Xw, w) for X in sl6.

    Entry-wise: P_ij = Omega((e_i^ (x) e_j) w, w).  The diagonal needs no
    separate trace correction because sum_k Omega((e_k^ (x) e_k) w, w)
    = 3 Omega(w, w) = 0.
    """
    rows = []
    for i in range(1, 7):
        row = []
        for j in range(1, 7):
            row.append(omega_pairing(gl6_act(_unit_matrix(i, j), w), w))
        rows.append(row)
    return Matrix(rows)


def quartic_q(w: Trivector) -> Poly:
    """The quartic invariant Tr(P(w)^2), cross-checked against Omega(P(w)w, w)."""
    p = moment_map(w)
    first = (p * p).trace()
    second = omega_pairing(gl6_act(p, w), w)
    if first != second:
        raise AssertionError(
            "the two quartic expressions disagree; moment-map plumbing is broken"
        )
    return first


def restricted_formula() -> Poly:
    """24 (s^4+t^4) x1x2x3x4 - 6 s^2 t^2 (2 sum xi^2 xj^2 - sum xk^4)."""
    x1, x2, x3, x4 = X
    m = x1 * x2 * x3 * x4
    square_sum = Poly.zero()
    xs = [x1, x2, x3, x4]
    for i in range(4):
        for j in range(i + 1, 4):
            square_sum = square_sum + xs[i] ** 2 * xs[j] ** 2
    quartic_sum = sum((xi ** 4 for xi in xs), Poly.zero())
    return (S ** 4 + T ** 4) * m * 24 - S ** 2 * T ** 2 * (square_sum * 2 - quartic_sum) * 6


@lru_cache(maxsize=1)
def restricted_quartic() -> Poly:
    """The quartic invariant evaluated on the generic Cartan pencil element."""
    return quartic_q(pencil_trivector())


def restriction_constant() -> Cyc8:
    """Proportionality constant between the computed restriction and the
    24/-6 reference formula (exactly 1 with the trace-form normalization)."""
    ratio = proportional(restricted_quartic(), restricted_formula())
    if ratio is None:
        raise AssertionError("restricted quartic is not proportional to the reference formula")
    return ratio


@dataclass(frozen=True)
class LiftPair:
    """An SL2 x SL6 element normalizing the Cartan subspace."""

    sl2_part: Matrix
    sl6_part: Matrix
    label: int

    def act(self, p: PencilTrivector) -> PencilTrivector:
        return group_act(self.sl2_part, self.sl6_part, p)


def _perm_matrix(images: Tuple[int, ...]) -> Matrix:
    """6x6 permutation matrix sending e_j to e_{images[j-1]}."""
    rows = [[ZERO] * 6 for _ in range(6)]
    for j, i in enumerate(images, start=1):
        rows[i - 1][j - 1] = ONE
    return Matrix(rows)


@lru_cache(maxsize=1)
def lifts() -> Tuple[LiftPair, LiftPair, LiftPair, LiftPair]:
    minus_i2 = Matrix([[-ONE, ZERO], [ZERO, -ONE]])
    z = ZETA
    zinv = ONE / ZETA
    r = HALF_SQRT2

    sigma1 = LiftPair(minus_i2, _perm_matrix((5, 6, 3, 4, 1, 2)), 1)
    sigma2 = LiftPair(minus_i2, _perm_matrix((1, 2, 5, 6, 3, 4)), 2)

    diag = [ONE, -(z * z), -(z * z), ONE, z ** 3, z]
    rows = [[diag[i] if i == j else ZERO for j in range(6)] for i in range(6)]
    sigma3 = LiftPair(Matrix([[z, ZERO], [ZERO, zinv]]), Matrix(rows), 3)

    block = ((r, -r), (r, r))
    rows6 = [[ZERO] * 6 for _ in range(6)]
    for base in (0, 2, 4):
        for i in range(2):
            for j in range(2):
                rows6[base + i][base + j] = block[i][j]
    sigma4 = LiftPair(Matrix([[r, -r], [r, r]]), Matrix(rows6), 4)

    return sigma1, sigma2, sigma3, sigma4


class CartanNotPreserved(RuntimeError):
    """A lift failed to map the Cartan subspace into itself."""


def induced_cartan_matrix(lift: LiftPair) -> Matrix:
    """Matrix of the lift's action in the Cartan basis (c1..c4), read in columns."""
    basis = cartan_basis()
    u_triples = [next(iter(c.part1.coeffs)) for c in basis]
    v_triples = [next(iter(c.part2.coeffs)) for c in basis]
    columns = []
    for j, c in enumerate(basis):
        image = lift.act(c)
        col = []
        part1 = dict(image.part1.coeffs)
        part2 = dict(image.part2.coeffs)
        for i in range(4):
            a = part1.pop(u_triples[i], Poly.zero()).as_constant()
            b = part2.pop(v_triples[i], Poly.zero()).as_constant()
            if a != b:
                raise CartanNotPreserved(
                    f"image of c{j + 1} has mismatched f1/f2 components on c{i + 1}: "
                    f"{a} vs {b}"
                )
            col.append(a)
        if part1 or part2:
            raise CartanNotPreserved(
                f"image of c{j + 1} leaves the Cartan span; stray components "
                f"{dict(part1)} / {dict(part2)}"
            )
        columns.append(col)
    return Matrix([[columns[j][i] for j in range(4)] for i in range(4)])


@lru_cache(maxsize=1)
def sl2_image_group() -> MatrixGroup:
    """Closure of the four 2x2 lift factors: the binary octahedral group."""
    return group_closure([lf.sl2_part for lf in lifts()], cap=10 ** 3)


def klein_form() -> Poly:
    """st(s^4 - t^4), the degree-6 relative invariant of the 2x2 image group."""
    return S * T * (S ** 4 - T ** 4)


def klein_character(g: Matrix) -> Cyc8:
    """The scalar chi(g) with f(g.(s, t)) = chi(g) f(s, t) for f = st(s^4 - t^4)."""
    group = sl2_image_group()
    if g not in group:
        raise ValueError("matrix is not an element of the 2x2 image group")
    a, b = g.entries[0]
    c, d = g.entries[1]
    f = klein_form()
    image = f.substitute({
        "s": S * a + T * b,
        "t": S * c + T * d,
    })
    ratio = proportional(image, f)
    if ratio is None:
        raise AssertionError("Klein form is not relatively invariant; wrong group element?")
    if ratio != ONE and ratio != -ONE:
        raise AssertionError(f"Klein character {ratio} is not a sign")
    return ratio

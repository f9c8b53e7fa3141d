"""The F4 root system: 48 roots, positivity, simple roots, orthogonal
splittings, reflections, the 1152-element Weyl matrix group, and the
long/short duality matrix.

Roots live in the epsilon-basis of a rank-4 Euclidean space with the
standard inner product:

    long:  +-e_i +- e_j  (norm^2 = 2, 24 roots)
    short: +-e_k and (+-e1 +- e2 +- e3 +- e4)/2  (norm^2 = 1, 8 + 16 roots)

Everything here is immutable after construction and safe for concurrent
reads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .cyclotomic import HALF_SQRT2, ZERO, as_cyc8
from .matrix import Matrix, MatrixGroup, group_closure

Coords = Tuple[Fraction, Fraction, Fraction, Fraction]

LONG = "long"
SHORT = "short"

DEFAULT_ELL = (Fraction(1000), Fraction(100), Fraction(10), Fraction(1))


@dataclass(frozen=True)
class RootVec:
    coords: Coords
    length_class: str

    def dot(self, other: "RootVec") -> Fraction:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "RootVec":
        return RootVec(tuple(-c for c in self.coords), self.length_class)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _norm2(coords: Coords) -> Fraction:
    return sum(c * c for c in coords)


def _all_root_coords() -> List[Coords]:
    out: List[Coords] = []
    for i, j in itertools.combinations(range(4), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Fraction(0)] * 4
                v[i], v[j] = Fraction(si), Fraction(sj)
                out.append(tuple(v))
    for k in range(4):
        for sk in (1, -1):
            v = [Fraction(0)] * 4
            v[k] = Fraction(sk)
            out.append(tuple(v))
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=4):
        out.append(tuple(half * s for s in signs))
    return out


@dataclass(frozen=True)
class PositivityForm:
    """A generic real linear form selecting the positive roots."""

    coefficients: Coords

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        for coords in _all_root_coords():
            if not sum(a * b for a, b in zip(coeffs, coords)):
                raise ValueError(f"form {coeffs} vanishes on the root {coords}")

    def value(self, root: RootVec) -> Fraction:
        return sum(a * b for a, b in zip(self.coefficients, root.coords))


@dataclass(frozen=True)
class RootSystemF4:
    roots: Tuple[RootVec, ...]
    positive_indices: Tuple[int, ...]
    simple_indices: Tuple[int, ...]
    ell: PositivityForm

    def index_of(self, coords: Coords) -> int:
        return _ROOT_LOOKUP[tuple(coords)]

    def positives(self) -> Tuple[RootVec, ...]:
        return tuple(self.roots[i] for i in self.positive_indices)

    def simples(self) -> Tuple[RootVec, ...]:
        return tuple(self.roots[i] for i in self.simple_indices)


_ROOT_LIST: Tuple[RootVec, ...] = tuple(
    RootVec(c, LONG if _norm2(c) == 2 else SHORT)
    for c in sorted(_all_root_coords(), reverse=True)
)
_ROOT_LOOKUP: Dict[Coords, int] = {r.coords: i for i, r in enumerate(_ROOT_LIST)}


def positive_root_indices(ell: PositivityForm) -> Tuple[int, ...]:
    return tuple(i for i, r in enumerate(_ROOT_LIST) if ell.value(r) > 0)


def simple_root_indices(positives: Sequence[int]) -> Tuple[int, ...]:
    """Indecomposable positive roots: not a sum of two positive roots."""
    pos_coords = {_ROOT_LIST[i].coords for i in positives}
    simples = []
    for i in positives:
        c = _ROOT_LIST[i].coords
        decomposable = False
        for j in positives:
            d = _ROOT_LIST[j].coords
            rest = tuple(a - b for a, b in zip(c, d))
            if rest != (0, 0, 0, 0) and rest in pos_coords:
                decomposable = True
                break
        if not decomposable:
            simples.append(i)
    return tuple(simples)


def build_f4(ell: PositivityForm | None = None) -> RootSystemF4:
    if ell is None:
        ell = PositivityForm(DEFAULT_ELL)
    positives = positive_root_indices(ell)
    simples = simple_root_indices(positives)
    return RootSystemF4(_ROOT_LIST, positives, simples, ell)


def orthogonality_profile(rs: RootSystemF4, root: RootVec) -> Tuple[int, int]:
    """Counts of positive roots orthogonal to ``root``: (same class, other class)."""
    same = other = 0
    for i in rs.positive_indices:
        r = rs.roots[i]
        if root.dot(r):
            continue
        if r.length_class == root.length_class:
            same += 1
        else:
            other += 1
    return same, other


@dataclass(frozen=True)
class OrthogonalSplitting:
    kind: str
    groups: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    def group_roots(self, rs: RootSystemF4):
        return tuple(tuple(rs.roots[i] for i in g) for g in self.groups)


def _orthogonal_partitions(rs: RootSystemF4, kind: str) -> List[Tuple[Tuple[int, ...], ...]]:
    members = [i for i in rs.positive_indices if rs.roots[i].length_class == kind]
    orth = {
        (i, j): rs.roots[i].dot(rs.roots[j]) == 0
        for i in members for j in members if i != j
    }

    def quads_within(pool: Tuple[int, ...], forced: int):
        """4-subsets of pool containing ``forced``, pairwise orthogonal."""
        rest = [p for p in pool if p != forced and orth[(forced, p)]]
        for combo in itertools.combinations(rest, 3):
            if all(orth[(a, b)] for a, b in itertools.combinations(combo, 2)):
                yield tuple(sorted((forced,) + combo))

    partitions: List[Tuple[Tuple[int, ...], ...]] = []

    def extend(remaining: Tuple[int, ...], acc: List[Tuple[int, ...]]):
        if not remaining:
            partitions.append(tuple(acc))
            return
        head = remaining[0]
        for quad in quads_within(remaining, head):
            acc.append(quad)
            extend(tuple(i for i in remaining if i not in quad), acc)
            acc.pop()

    extend(tuple(members), [])
    return partitions


def orthogonal_splitting(rs: RootSystemF4, kind: str) -> OrthogonalSplitting:
    """The unique partition of the 12 positive roots of one length class
    into three groups of four mutually orthogonal roots (exhaustive search)."""
    if kind not in (LONG, SHORT):
        raise ValueError(f"kind must be {LONG!r} or {SHORT!r}")
    partitions = _orthogonal_partitions(rs, kind)
    if len(partitions) != 1:
        raise RuntimeError(
            f"expected a unique orthogonal splitting for {kind}, found {len(partitions)}"
        )
    return OrthogonalSplitting(kind, partitions[0])


def splitting_count(rs: RootSystemF4, kind: str) -> int:
    """Number of valid partitions found by the exhaustive search."""
    return len(_orthogonal_partitions(rs, kind))


def reflection(root: RootVec) -> Matrix:
    """The hyperplane reflection r(v) = v - 2<v,a>/<a,a> * a, as a 4x4 matrix."""
    coords = root.coords
    norm2 = _norm2(coords)
    if not norm2:
        raise ValueError("cannot reflect in the zero vector")
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            val = Fraction(1 if i == j else 0) - 2 * coords[i] * coords[j] / norm2
            row.append(as_cyc8(val))
        rows.append(row)
    return Matrix(rows)


# the classical simple-root labels for the default positivity form
CLASSICAL_SIMPLE_COORDS: Tuple[Coords, ...] = (
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
)


def classical_simples(rs: RootSystemF4) -> Tuple[RootVec, ...]:
    """The simple roots in the order (e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2).

    Raises if the system's simple roots differ from that set (custom
    positivity forms may select a different chamber)."""
    have = {rs.roots[i].coords for i in rs.simple_indices}
    if have != set(CLASSICAL_SIMPLE_COORDS):
        raise ValueError("simple roots do not match the default chamber")
    return tuple(rs.roots[_ROOT_LOOKUP[c]] for c in CLASSICAL_SIMPLE_COORDS)


def simple_reflections(rs: RootSystemF4) -> Tuple[Matrix, ...]:
    """Reflections in the simple roots, in the classical order when the
    default chamber is in force, else in root-list order."""
    try:
        simples = classical_simples(rs)
    except ValueError:
        simples = tuple(rs.roots[i] for i in rs.simple_indices)
    return tuple(reflection(r) for r in simples)


def weyl_group(rs: RootSystemF4 | None = None) -> MatrixGroup:
    """Closure of the four simple reflections; order 1152."""
    if rs is None:
        rs = build_f4()
    return group_closure(simple_reflections(rs), cap=10 ** 4)


def fraction_rows(m: Matrix) -> Tuple[Tuple[Fraction, ...], ...]:
    """Entries of a rational matrix as plain Fractions (fast arithmetic path)."""
    return tuple(tuple(v.as_fraction() for v in row) for row in m.entries)


def _apply_rows(rows, coords: Coords) -> Coords:
    return tuple(
        r[0] * coords[0] + r[1] * coords[1] + r[2] * coords[2] + r[3] * coords[3]
        for r in rows
    )


def root_image_index(m: Matrix, root: RootVec) -> int:
    """Index of m * root in the root list (raises if the image is not a root)."""
    coords = _apply_rows(fraction_rows(m), root.coords)
    return _ROOT_LOOKUP[coords]


def permutes_roots(m: Matrix) -> bool:
    rows = fraction_rows(m)
    seen = set()
    for r in _ROOT_LIST:
        idx = _ROOT_LOOKUP.get(_apply_rows(rows, r.coords))
        if idx is None:
            return False
        seen.add(idx)
    return len(seen) == len(_ROOT_LIST)


def short_long_duality() -> Matrix:
    """Orthogonal matrix exchanging short and long roots (up to scalars)."""
    h = HALF_SQRT2
    z = ZERO
    return Matrix([
        [h, -h, z, z],
        [h, h, z, z],
        [z, z, h, -h],
        [z, z, h, h],
    ])

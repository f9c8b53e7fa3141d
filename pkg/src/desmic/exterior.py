"""The third exterior power of C^6 with polynomial coefficients.

Trivectors are stored densely over the 20 sorted triples {i<j<k} of
{1..6}; all signs flow from sorted-triple normalization plus permutation
parity.  The volume pairing Omega(u, v) is the coefficient of e_123456
in u ^ v.  The gl6 action is by derivations, the SL6 action by the
exterior cube on decomposables (column-wise, never via a 20x20 matrix).

A pencil element f1 (x) u + f2 (x) v of C^2 (x) Lambda^3 C^6 is identified
with the pencil of trivectors s*u + t*v.  A pair (g, h) of invertible
2x2 / 6x6 matrices acts so that h transforms trivectors by its exterior
cube while g transforms the pencil coordinates (s, t); on the basis
(f1, f2) this is the contragredient action (g^T)^{-1}.  This is the
convention under which the four explicit normalizer lifts induce the
simple reflections on the Cartan basis below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .cyclotomic import Cyc8, ONE, ZERO
from .matrix import Matrix
from .poly import Poly, S, T, X

Triple = Tuple[int, int, int]

TRIPLES: Tuple[Triple, ...] = tuple(itertools.combinations(range(1, 7), 3))
TRIPLE_INDEX: Dict[Triple, int] = {t: i for i, t in enumerate(TRIPLES)}


def permutation_sign(seq: Sequence[int]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


# complement triple and the sign of e_T ^ e_{T^c} = sign * e_123456
_COMPLEMENT: Dict[Triple, Triple] = {
    t: tuple(sorted(set(range(1, 7)) - set(t))) for t in TRIPLES
}
_COMPLEMENT_SIGN: Dict[Triple, int] = {
    t: permutation_sign(t + _COMPLEMENT[t]) for t in TRIPLES
}


def wedge(u: Mapping[Tuple[int, ...], Poly], v: Mapping[Tuple[int, ...], Poly]) -> Dict[Tuple[int, ...], Poly]:
    """Wedge product of multivectors given as {sorted index tuple: coefficient}."""
    out: Dict[Tuple[int, ...], Poly] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            seq = a + b
            if len(set(seq)) != len(seq):
                continue
            sign = permutation_sign(seq)
            key = tuple(sorted(seq))
            term = ca * cb if sign > 0 else -(ca * cb)
            acc = out.get(key)
            out[key] = term if acc is None else acc + term
    return {k: c for k, c in out.items() if c}


class Trivector:
    """Element of Lambda^3 C^6 with Poly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Triple, Poly] | None = None):
        clean: Dict[Triple, Poly] = {}
        if coeffs:
            for t, c in coeffs.items():
                if t not in TRIPLE_INDEX:
                    raise ValueError(f"{t} is not a sorted triple in 1..6")
                if c:
                    clean[t] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Trivector values are immutable")

    @classmethod
    def basis(cls, i: int, j: int, k: int) -> "Trivector":
        seq = (i, j, k)
        if len(set(seq)) != 3:
            raise ValueError("repeated index in basis triple")
        sign = permutation_sign(seq)
        coeff = Poly.const(1 if sign > 0 else -1)
        return cls({tuple(sorted(seq)): coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trivector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Trivector") -> "Trivector":
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            acc = out.get(t)
            if acc is None:
                out[t] = c
            else:
                acc = acc + c
                if acc:
                    out[t] = acc
                else:
                    del out[t]
        return Trivector(out)

    def __neg__(self) -> "Trivector":
        return Trivector({t: -c for t, c in self.coeffs.items()})

    def __sub__(self, other: "Trivector") -> "Trivector":
        return self + (-other)

    def scale(self, factor) -> "Trivector":
        if not isinstance(factor, Poly):
            factor = Poly.const(factor)
        return Trivector({t: c * factor for t, c in self.coeffs.items()})

    def coefficient(self, triple: Triple) -> Poly:
        return self.coeffs.get(tuple(triple), Poly.zero())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for t in TRIPLES:
            if t in self.coeffs:
                parts.append(f"({self.coeffs[t]})*e{t[0]}{t[1]}{t[2]}")
        return " + ".join(parts)

    __repr__ = __str__


def omega_pairing(u: Trivector, v: Trivector) -> Poly:
    """Coefficient of e_123456 in u ^ v; antisymmetric in (u, v)."""
    total = Poly.zero()
    for t, cu in u.coeffs.items():
        comp = _COMPLEMENT[t]
        cv = v.coeffs.get(comp)
        if cv is None:
            continue
        term = cu * cv
        total = total + (term if _COMPLEMENT_SIGN[t] > 0 else -term)
    return total


def gl6_act(m: Matrix, u: Trivector) -> Trivector:
    """Derivation action of a 6x6 matrix: X.(a^b^c) = Xa^b^c + a^Xb^c + a^b^Xc."""
    if (m.rows, m.cols) != (6, 6):
        raise ValueError("gl6_act expects a 6x6 matrix")
    out: Dict[Triple, Poly] = {}
    for (a, b, c), coeff in u.coeffs.items():
        triple = (a, b, c)
        for pos in range(3):
            i = triple[pos]
            others = triple[:pos] + triple[pos + 1:]
            for j in range(1, 7):
                entry = m.entries[j - 1][i - 1]
                if not entry:
                    continue
                if j in others:
                    continue
                seq = list(triple)
                seq[pos] = j
                sign = permutation_sign(seq)
                key = tuple(sorted(seq))
                term = coeff * entry
                if sign < 0:
                    term = -term
                acc = out.get(key)
                if acc is None:
                    out[key] = term
                else:
                    acc = acc + term
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
    return Trivector(out)


def _column_1vector(h: Matrix, j: int) -> Dict[Tuple[int, ...], Poly]:
    col: Dict[Tuple[int, ...], Poly] = {}
    for i in range(1, 7):
        entry = h.entries[i - 1][j - 1]
        if entry:
            col[(i,)] = entry if isinstance(entry, Poly) else Poly.const(entry)
    return col


def exterior_cube_act(h: Matrix, u: Trivector) -> Trivector:
    """Group action of an invertible 6x6 matrix: Lambda^3 h on decomposables."""
    if (h.rows, h.cols) != (6, 6):
        raise ValueError("exterior_cube_act expects a 6x6 matrix")
    cols = [_column_1vector(h, j) for j in range(1, 7)]
    out: Dict[Triple, Poly] = {}
    for (a, b, c), coeff in u.coeffs.items():
        prod = wedge(wedge(cols[a - 1], cols[b - 1]), cols[c - 1])
        for key, val in prod.items():
            term = val * coeff
            acc = out.get(key)
            if acc is None:
                out[key] = term
            else:
                acc = acc + term
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return Trivector(out)


@dataclass(frozen=True)
class PencilTrivector:
    """f1 (x) part1 + f2 (x) part2, i.e. the pencil s*part1 + t*part2."""

    part1: Trivector
    part2: Trivector

    def __add__(self, other: "PencilTrivector") -> "PencilTrivector":
        return PencilTrivector(self.part1 + other.part1, self.part2 + other.part2)

    def __sub__(self, other: "PencilTrivector") -> "PencilTrivector":
        return PencilTrivector(self.part1 - other.part1, self.part2 - other.part2)

    def scale(self, factor) -> "PencilTrivector":
        return PencilTrivector(self.part1.scale(factor), self.part2.scale(factor))

    def at_pencil_parameter(self) -> Trivector:
        """The trivector s*part1 + t*part2 with symbolic pencil coordinates."""
        return self.part1.scale(S) + self.part2.scale(T)

    def __str__(self) -> str:
        return f"f1 (x) [{self.part1}] + f2 (x) [{self.part2}]"


def group_act(g: Matrix, h: Matrix, p: PencilTrivector) -> PencilTrivector:
    """Action of (g, h) in SL2 x SL6 on a pencil element.

    h acts through its exterior cube; g acts on the pencil coordinates
    (s, t), equivalently by (g^T)^{-1} on the basis (f1, f2).
    """
    if (g.rows, g.cols) != (2, 2):
        raise ValueError("group_act expects a 2x2 first factor")
    det = g.det()
    if not det:
        raise ValueError("singular 2x2 factor")
    if not h.det():
        raise ValueError("singular 6x6 factor")
    a, b = g.entries[0]
    c, d = g.entries[1]
    inv_det = ONE / det if isinstance(det, Cyc8) else 1 / det
    u = exterior_cube_act(h, p.part1)
    v = exterior_cube_act(h, p.part2)
    # (g^T)^{-1} = [[d, -c], [-b, a]] / det
    new1 = u.scale(d * inv_det) + v.scale(-c * inv_det)
    new2 = u.scale(-b * inv_det) + v.scale(a * inv_det)
    return PencilTrivector(new1, new2)


# Cartan subspace basis: four pencils of isotropic decomposable triples.
_U_TRIPLES: Tuple[Triple, ...] = ((1, 3, 5), (1, 4, 6), (2, 4, 5), (2, 3, 6))
_V_TRIPLES: Tuple[Triple, ...] = ((2, 4, 6), (2, 3, 5), (1, 3, 6), (1, 4, 5))


def cartan_basis() -> Tuple[PencilTrivector, PencilTrivector, PencilTrivector, PencilTrivector]:
    return tuple(
        PencilTrivector(Trivector.basis(*u), Trivector.basis(*v))
        for u, v in zip(_U_TRIPLES, _V_TRIPLES)
    )


def pencil_trivector() -> Trivector:
    """The generic Cartan element as a trivector over Q(zeta8)[s, t, x1..x4]:

    s*(x1 e135 + x2 e146 + x3 e245 + x4 e236)
      + t*(x1 e246 + x2 e235 + x3 e136 + x4 e145)
    """
    coeffs: Dict[Triple, Poly] = {}
    for xi, tri in zip(X, _U_TRIPLES):
        coeffs[tri] = S * xi
    for xi, tri in zip(X, _V_TRIPLES):
        coeffs[tri] = T * xi
    return Trivector(coeffs)


def pencil_at_point(coords: Sequence) -> Trivector:
    """Pencil trivector with numeric x-coordinates, symbolic in (s, t) only."""
    if len(coords) != 4:
        raise ValueError("expected 4 coordinates")
    vals = [c if isinstance(c, Poly) else Poly.const(c) for c in coords]
    coeffs: Dict[Triple, Poly] = {}
    for val, tri in zip(vals, _U_TRIPLES):
        coeffs[tri] = S * val
    for val, tri in zip(vals, _V_TRIPLES):
        p = coeffs.get(tri, Poly.zero()) + T * val
        coeffs[tri] = p
    return Trivector({t: c for t, c in coeffs.items() if c})


# the fixed symplectic form e1^ ^ e2^ + e3^ ^ e4^ + e5^ ^ e6^ on C^6
_OMEGA_PAIRS = ((1, 2), (3, 4), (5, 6))


def _symplectic_matrix() -> Matrix:
    rows = [[ZERO] * 6 for _ in range(6)]
    for a, b in _OMEGA_PAIRS:
        rows[a - 1][b - 1] = ONE
        rows[b - 1][a - 1] = -ONE
    return Matrix(rows)


SYMPLECTIC_FORM = _symplectic_matrix()


def is_omega_isotropic_triple(indices: Iterable[int]) -> bool:
    """True iff the symplectic form vanishes on span(e_i, e_j, e_k)."""
    idx = tuple(sorted(indices))
    if len(idx) != 3 or len(set(idx)) != 3 or not all(1 <= i <= 6 for i in idx):
        raise ValueError(f"need three distinct indices in 1..6, got {indices}")
    for a, b in itertools.combinations(idx, 2):
        if (a, b) in _OMEGA_PAIRS or (b, a) in _OMEGA_PAIRS:
            return False
    return True

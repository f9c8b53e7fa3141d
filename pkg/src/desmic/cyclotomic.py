"""Exact arithmetic in the cyclotomic field Q(zeta8).

Every matrix entry and polynomial coefficient in this package lives in
Q(zeta8), the smallest field containing a primitive 8th root of unity
zeta (zeta^4 = -1) and hence sqrt(2) = zeta - zeta^3.  Elements are
stored as degree-<4 polynomials in zeta with Fraction coefficients, so
all computations are exact; there is no floating point anywhere.

Values are immutable and hashable, and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

# (i, j) -> (k, sign): zeta^i * zeta^j = sign * zeta^k with zeta^4 = -1
_MUL_TABLE = tuple(
    tuple(((i + j) % 4, -1 if i + j >= 4 else 1) for j in range(4)) for i in range(4)
)

_F0 = Fraction(0)
_F1 = Fraction(1)


class Cyc8:
    """An element a0 + a1*zeta + a2*zeta^2 + a3*zeta^3 of Q(zeta8)."""

    __slots__ = ("coeffs", "is_rational", "_hash")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        c = (Fraction(a0), Fraction(a1), Fraction(a2), Fraction(a3))
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "is_rational", not (c[1] or c[2] or c[3]))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc8 values are immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def _raw(c0: Fraction, c1: Fraction, c2: Fraction, c3: Fraction) -> "Cyc8":
        out = object.__new__(Cyc8)
        object.__setattr__(out, "coeffs", (c0, c1, c2, c3))
        object.__setattr__(out, "is_rational", not (c1 or c2 or c3))
        object.__setattr__(out, "_hash", None)
        return out

    @classmethod
    def rational(cls, value: RationalLike) -> "Cyc8":
        return cls._raw(Fraction(value), _F0, _F0, _F0)

    # -- predicates ---------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyc8):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self):
        """Total order key (coefficient-wise); fixes canonical orderings."""
        return self.coeffs

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Cyc8":
        other = as_cyc8(other)
        a, b = self.coeffs, other.coeffs
        return Cyc8._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __neg__(self) -> "Cyc8":
        a = self.coeffs
        return Cyc8._raw(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other) -> "Cyc8":
        return self + (-as_cyc8(other))

    def __rsub__(self, other) -> "Cyc8":
        return as_cyc8(other) + (-self)

    def __mul__(self, other) -> "Cyc8":
        other = as_cyc8(other)
        a, b = self.coeffs, other.coeffs
        if self.is_rational:
            r = a[0]
            if not r:
                return ZERO
            if other.is_rational:
                return Cyc8._raw(r * b[0], _F0, _F0, _F0)
            return Cyc8._raw(r * b[0], r * b[1], r * b[2], r * b[3])
        if other.is_rational:
            r = b[0]
            if not r:
                return ZERO
            return Cyc8._raw(a[0] * r, a[1] * r, a[2] * r, a[3] * r)
        out = [_F0, _F0, _F0, _F0]
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            row = _MUL_TABLE[i]
            for j in range(4):
                bj = b[j]
                if not bj:
                    continue
                k, sign = row[j]
                out[k] = out[k] + ai * bj if sign > 0 else out[k] - ai * bj
        return Cyc8._raw(out[0], out[1], out[2], out[3])

    __rmul__ = __mul__

    def inverse(self) -> "Cyc8":
        """Multiplicative inverse, via the 4x4 linear system over Q.

        Solves M(x) * y = 1 where M(x) is the matrix of multiplication
        by x on the basis (1, zeta, zeta^2, zeta^3).
        """
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta8)")
        # columns of M: x * zeta^j expressed in the basis
        cols = []
        zj = ONE
        for _ in range(4):
            cols.append((self * zj).coeffs)
            zj = zj * ZETA
        # augmented Gaussian elimination on rows of M (rows i of M are cols[j][i])
        rows = [[cols[j][i] for j in range(4)] + [(_F1 if i == 0 else _F0)] for i in range(4)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            inv_p = 1 / rows[col][col]
            rows[col] = [v * inv_p for v in rows[col]]
            for r in range(4):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [rv - f * cv for rv, cv in zip(rows[r], rows[col])]
        return Cyc8._raw(rows[0][4], rows[1][4], rows[2][4], rows[3][4])

    def __truediv__(self, other) -> "Cyc8":
        other = as_cyc8(other)
        if other.is_rational:
            r = other.coeffs[0]
            if not r:
                raise ZeroDivisionError("division by zero in Q(zeta8)")
            a = self.coeffs
            return Cyc8._raw(a[0] / r, a[1] / r, a[2] / r, a[3] / r)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Cyc8":
        return as_cyc8(other) / self

    def __pow__(self, n: int) -> "Cyc8":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- conversions / display ---------------------------------------

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"Cyc8({self})"

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    piece = mono
                elif c == -1:
                    piece = f"-{mono}"
                else:
                    piece = f"{c}*{mono}"
                parts.append(piece)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def as_cyc8(value) -> Cyc8:
    if isinstance(value, Cyc8):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc8.rational(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Cyc8")


ZERO = Cyc8()
ONE = Cyc8(1)
ZETA = Cyc8(0, 1)
SQRT2 = ZETA - ZETA ** 3          # (zeta - zeta^3)^2 == 2
HALF_SQRT2 = SQRT2 / 2            # exact 1/sqrt(2)

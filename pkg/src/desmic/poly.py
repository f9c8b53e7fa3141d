"""Sparse multivariate polynomials over Q(zeta8).

The variable set is fixed package-wide: the pencil parameters s, t, the
quartic-surface coordinates x1..x4 and the conjugate-pencil coordinates
y1..y4.  Monomials are exponent tuples over that ordered set; terms are
kept in a dict with no stored zero coefficients, so equality of the
representation is equality of the polynomial.  Printing uses the fixed
degree-lexicographic order (higher total degree first, then lexicographic
preference for earlier variables), which makes textual output
byte-for-byte reproducible.

Polynomials are immutable once built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .cyclotomic import Cyc8, ONE, ZERO, as_cyc8

VARIABLES: Tuple[str, ...] = ("s", "t", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")
NVARS = len(VARIABLES)
VAR_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

Monomial = Tuple[int, ...]
_ZERO_MONO: Monomial = (0,) * NVARS


def _scalar(value) -> Cyc8:
    if isinstance(value, Cyc8):
        return value
    return as_cyc8(value)


class Poly:
    """Sparse polynomial; ``terms`` maps exponent tuples to Cyc8 coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Cyc8]] = None):
        clean: Dict[Monomial, Cyc8] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return _P_ZERO

    @classmethod
    def const(cls, value) -> "Poly":
        c = _scalar(value)
        if not c:
            return _P_ZERO
        return cls({_ZERO_MONO: c})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        idx = VAR_INDEX[name]
        mono = tuple(1 if i == idx else 0 for i in range(NVARS))
        return cls({mono: ONE})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff=1) -> "Poly":
        c = _scalar(coeff)
        if not c:
            return _P_ZERO
        exps = [0] * NVARS
        for name, e in exponents.items():
            exps[VAR_INDEX[name]] = e
        return cls({tuple(exps): c})

    # -- predicates ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_MONO in self.terms)

    def as_constant(self) -> Cyc8:
        if not self.terms:
            return ZERO
        if self.is_constant():
            return self.terms[_ZERO_MONO]
        raise ValueError(f"{self} is not constant")

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyc8)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return Poly(out) if out else _P_ZERO

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, Cyc8)):
            c = _scalar(other)
            if not c:
                return _P_ZERO
            return Poly({m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _P_ZERO
        out: Dict[Monomial, Cyc8] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                acc = out.get(mono)
                if acc is None:
                    out[mono] = prod
                else:
                    acc = acc + prod
                    if acc:
                        out[mono] = acc
                    else:
                        del out[mono]
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        c = _scalar(scalar)
        inv = ONE / c
        return self * inv

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------

    def coefficient(self, exponents: Mapping[str, int]) -> Cyc8:
        exps = [0] * NVARS
        for name, e in exponents.items():
            exps[VAR_INDEX[name]] = e
        return self.terms.get(tuple(exps), ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        idx = VAR_INDEX[name]
        if not self.terms:
            return 0
        return max(m[idx] for m in self.terms)

    def variables(self) -> Tuple[str, ...]:
        used = [False] * NVARS
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return tuple(v for i, v in enumerate(VARIABLES) if used[i])

    def diff(self, name: str) -> "Poly":
        idx = VAR_INDEX[name]
        out: Dict[Monomial, Cyc8] = {}
        for mono, coeff in self.terms.items():
            e = mono[idx]
            if not e:
                continue
            new = list(mono)
            new[idx] = e - 1
            out[tuple(new)] = coeff * e
        return Poly(out)

    def substitute(self, mapping: Mapping[str, "Poly"]) -> "Poly":
        """Substitute polynomials for variables; unmapped variables stay themselves."""
        images: Dict[int, Poly] = {}
        for name, img in mapping.items():
            images[VAR_INDEX[name]] = _as_poly(img)
        result = _P_ZERO
        for mono, coeff in self.terms.items():
            passthrough = [0] * NVARS
            factors = []
            for i, e in enumerate(mono):
                if not e:
                    continue
                if i in images:
                    factors.append(images[i] ** e)
                else:
                    passthrough[i] = e
            term = Poly({tuple(passthrough): coeff})
            for f in factors:
                term = term * f
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, Cyc8]) -> Cyc8:
        """Evaluate at scalar values; every variable occurring must be assigned."""
        values: Dict[int, Cyc8] = {VAR_INDEX[n]: _scalar(v) for n, v in assignment.items()}
        total = ZERO
        for mono, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(mono):
                if not e:
                    continue
                if i not in values:
                    raise KeyError(f"no value assigned to variable {VARIABLES[i]!r}")
                term = term * values[i] ** e
            total = total + term
        return total

    # -- display ------------------------------------------------------

    def sorted_terms(self):
        """Terms in the fixed degree-lexicographic order, leading term first."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            vars_part = "*".join(
                (VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}")
                for i, e in enumerate(mono) if e
            )
            coeff_str = str(coeff)
            if coeff.is_rational:
                if vars_part:
                    if coeff_str == "1":
                        piece = vars_part
                    elif coeff_str == "-1":
                        piece = f"-{vars_part}"
                    else:
                        piece = f"{coeff_str}*{vars_part}"
                else:
                    piece = coeff_str
            else:
                piece = f"({coeff_str})*{vars_part}" if vars_part else f"({coeff_str})"
            pieces.append(piece)
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, Cyc8)):
        return Poly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly")


def proportional(p: Poly, q: Poly) -> Optional[Cyc8]:
    """Return lambda != 0 with p == lambda * q, or None if no such scalar.

    The pair (0, 0) returns 1 by convention.
    """
    if not p.terms and not q.terms:
        return ONE
    if not p.terms or not q.terms:
        return None
    if p.terms.keys() != q.terms.keys():
        return None
    mono = next(iter(q.terms))
    ratio = p.terms[mono] / q.terms[mono]
    for m, qc in q.terms.items():
        if p.terms[m] != qc * ratio:
            return None
    return ratio


_P_ZERO = Poly()
_P_ONE = Poly({_ZERO_MONO: ONE})

S = Poly.variable("s")
T = Poly.variable("t")
X = tuple(Poly.variable(f"x{i}") for i in range(1, 5))
Y = tuple(Poly.variable(f"y{i}") for i in range(1, 5))

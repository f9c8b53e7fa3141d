"""Exact matrices and finite matrix-group closure.

Matrices are generic over their entry ring: group elements carry Cyc8
entries, while the moment-map values carry polynomial entries.  Group
elements are canonicalized by lexicographic comparison of their entry
coefficient vectors, which gives closure enumeration a schedule-independent
canonical ordering.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .cyclotomic import Cyc8, ONE, ZERO, as_cyc8


class ClosureCapExceeded(RuntimeError):
    """Raised when a closure enumeration grows past its element cap."""


def _entry_key(entry):
    if isinstance(entry, Cyc8):
        return entry.sort_key()
    if isinstance(entry, (int, Fraction)):
        return as_cyc8(entry).sort_key()
    raise TypeError(f"entries of type {type(entry).__name__} have no canonical key")


class Matrix:
    """Immutable rows x cols matrix with exact entries."""

    __slots__ = ("rows", "cols", "entries", "_key", "_hash")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], scalar=as_cyc8) -> "Matrix":
        return cls([[scalar(v) for v in row] for row in rows])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- basic structure ----------------------------------------------

    def __getitem__(self, idx: Tuple[int, int]):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    def map_entries(self, fn) -> "Matrix":
        return Matrix([[fn(v) for v in row] for row in self.entries])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        total = self.entries[0][0]
        for i in range(1, self.rows):
            total = total + self.entries[i][i]
        return total

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        return Matrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self) -> "Matrix":
        return Matrix([[-v for v in row] for row in self.entries])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch in matrix product")
            bt = tuple(zip(*other.entries))
            out = []
            for row in self.entries:
                new_row = []
                for col in bt:
                    acc = row[0] * col[0]
                    for a, b in zip(row[1:], col[1:]):
                        acc = acc + a * b
                    new_row.append(acc)
                out.append(new_row)
            return Matrix(out)
        return NotImplemented

    def scale(self, scalar) -> "Matrix":
        return Matrix([[v * scalar for v in row] for row in self.entries])

    def apply(self, vector: Sequence) -> Tuple:
        """Matrix-vector product (vector as a coordinate tuple)."""
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for row in self.entries:
            acc = row[0] * vector[0]
            for a, v in zip(row[1:], vector[1:]):
                acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        cache = {}

        def minor(row: int, cols: Tuple[int, ...]):
            if len(cols) == 1:
                return self.entries[row][cols[0]]
            key = (row, cols)
            if key in cache:
                return cache[key]
            total = None
            for pos, c in enumerate(cols):
                entry = self.entries[row][c]
                if not entry:
                    continue
                rest = cols[:pos] + cols[pos + 1:]
                sub = minor(row + 1, rest)
                term = entry * sub
                if pos % 2:
                    term = -term
                total = term if total is None else total + term
            if total is None:
                total = self.entries[row][cols[0]] * 0
            cache[key] = total
            return total

        return minor(0, tuple(range(n)))

    # -- canonical identity --------------------------------------------

    def key(self):
        k = self._key
        if k is None:
            k = tuple(_entry_key(v) for row in self.entries for v in row)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.key()))
            object.__setattr__(self, "_hash", h)
        return h

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if i == j:
                    if v != ONE and v != 1:
                        return False
                elif v:
                    return False
        return True

    def __str__(self) -> str:
        body = [[str(v) for v in row] for row in self.entries]
        width = max(len(s) for row in body for s in row)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in row) + "]" for row in body)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


class MatrixGroup:
    """A finite matrix group, stored as a canonically sorted element list."""

    def __init__(self, generators: Sequence[Matrix], elements: Iterable[Matrix]):
        self.generators = tuple(generators)
        self.elements: Tuple[Matrix, ...] = tuple(sorted(elements, key=Matrix.key))
        self._members = {m.key() for m in self.elements}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m: Matrix) -> bool:
        return m.key() in self._members

    def element_order(self, m: Matrix) -> int:
        if m not in self:
            raise ValueError("matrix is not a group element")
        acc = m
        for n in range(1, self.order + 1):
            if acc.is_identity():
                return n
            acc = acc * m
        raise RuntimeError("element order exceeded group order")  # pragma: no cover

    def __repr__(self) -> str:
        return f"MatrixGroup(order={self.order})"


def rref(rows: Sequence[Sequence[Cyc8]]) -> Tuple[Tuple[Tuple[Cyc8, ...], ...], Tuple[int, ...]]:
    """Reduced row echelon form over Q(zeta8); returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = as_cyc8(1) / work[r][col]
        work[r] = [v * inv for v in work[r]]
        for i in range(nrows):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def solve_exact(columns: Sequence[Sequence[Cyc8]], target: Sequence[Cyc8]):
    """Coefficients c with sum_j c_j * columns[j] == target, or None."""
    ncols = len(columns)
    nrows = len(target)
    rows = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    reduced, pivots = rref(rows)
    if ncols in pivots:
        return None
    coeffs = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        coeffs[p] = row[-1]
    return tuple(coeffs)


def group_closure(generators: Sequence[Matrix], cap: int = 10 ** 6) -> MatrixGroup:
    """Close a generator list under multiplication.

    For invertible generators of finite order the closure automatically
    contains the identity and all inverses.  The element ordering of the
    result is canonical and independent of the generation schedule.
    """
    gens: List[Matrix] = []
    seen = set()
    for g in generators:
        if g.rows != g.cols:
            raise ValueError("generators must be square")
        if gens and g.rows != gens[0].rows:
            raise ValueError("generators must share one dimension")
        if not g.det():
            raise ValueError("generators must be invertible")
        if g.key() not in seen:
            seen.add(g.key())
            gens.append(g)
    if not gens:
        raise ValueError("no generators supplied")

    elements = {g.key(): g for g in gens}
    frontier = list(gens)
    while frontier:
        fresh = []
        for a in gens:
            for b in frontier:
                c = a * b
                k = c.key()
                if k not in elements:
                    elements[k] = c
                    fresh.append(c)
                    if len(elements) > cap:
                        raise ClosureCapExceeded(
                            f"closure exceeded cap of {cap} elements "
                            f"({len(elements)} found, frontier {len(fresh)})"
                        )
        frontier = fresh
    return MatrixGroup(gens, elements.values())

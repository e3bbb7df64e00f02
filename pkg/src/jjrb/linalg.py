"""
Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are plain tuples of fractions; matrices are immutable
:class:`Matrix` objects.  Nothing here ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContainmentViolation, DimensionMismatch, ParseError

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def Q(value) -> Fraction:
    """Coerce ints, fractions and rational strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``p`` or ``p/q`` with ``q > 0``."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Q(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, v: Sequence) -> Vector:
    s = Q(s)
    return tuple(s * a for a in v)


def vlincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero_vec(v: Sequence) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix of Fractions.

    When a matrix represents a linear map, column ``j`` is the image of the
    ``j``-th basis vector.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(Q(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols

    # construction -----------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        nrows = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(nrows)],
                   cols=len(columns))

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)], cols=cols)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        nr = sum(b.rows for b in blocks)
        nc = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * nc for _ in range(nr)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b._data[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(out, cols=nc)

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatch("vstack blocks need equal column counts")
        return cls([row for b in blocks for row in b._data], cols=cols)

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> tuple[Vector, ...]:
        return self._data

    def entries(self) -> Vector:
        """Row-major flattening."""
        return tuple(x for r in self._data for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # arithmetic -------------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._trusted([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                               self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._trusted([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                               self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted([[-a for a in r] for r in self._data], self.cols)

    def scale(self, s) -> "Matrix":
        s = Q(s)
        return Matrix._trusted([[s * a for a in r] for r in self._data], self.cols)

    def __rmul__(self, s) -> "Matrix":
        return self.scale(s)

    @classmethod
    def _trusted(cls, rows: list, cols: int) -> "Matrix":
        # rows already hold Fractions of equal length; skips coercion
        m = cls.__new__(cls)
        m._data = tuple(tuple(r) for r in rows)
        m.rows = len(m._data)
        m.cols = cols
        return m

    def _nonzero_rows(self):
        return [[(k, a) for k, a in enumerate(r) if a] for r in self._data]

    def __matmul__(self, other):
        zero = Fraction(0)
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            orows = other._data
            out = []
            for nz in self._nonzero_rows():
                acc = [zero] * other.cols
                for k, a in nz:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
                out.append(acc)
            return Matrix._trusted(out, other.cols)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(sum((a * v[k] for k, a in nz if v[k]), zero) for nz in self._nonzero_rows())

    def apply(self, v: Sequence) -> Vector:
        return self @ v

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for r in self._data:
            for s in other._data:
                out.append([a * b for a in r for b in s])
        return Matrix(out, cols=self.cols * other.cols)

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("only square matrices are invertible")
        n = self.rows
        aug = Matrix([list(r) + list(unit_vec(n, i)) for i, r in enumerate(self._data)], cols=2 * n)
        red, rank, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([red.row(i)[n:] for i in range(n)], cols=n)

    # comparison / display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._data]


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns of ``m``."""
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(rows, cols=ncols), r, pivots


@dataclass(frozen=True)
class SubspaceBasis:
    """Subspace of Q^n stored as the nonzero rows of a reduced echelon form.

    Two subspaces are equal exactly when their stored vectors are equal.
    """

    ambient_dim: int
    vectors: tuple

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "SubspaceBasis":
        vs = [tuple(Q(x) for x in v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        if not vs:
            return cls(ambient_dim, ())
        red, rank, _ = rref(Matrix(vs, cols=ambient_dim))
        return cls(ambient_dim, tuple(red.row(i) for i in range(rank)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(v) if x != 0) for v in self.vectors]

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        w = list(Q(x) for x in v)
        for b, p in zip(self.vectors, self.pivots()):
            if w[p] != 0:
                f = w[p]
                w = [a - f * c for a, c in zip(w, b)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        return is_zero_vec(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the stored basis (``v`` must lie in the span)."""
        if not self.contains(v):
            raise ContainmentViolation("vector is not in the subspace")
        return tuple(Q(v[p]) for p in self.pivots())

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in v] for v in self.vectors]


def kernel_basis(m: Matrix) -> SubspaceBasis:
    """Echelonized basis of ``{x : m x = 0}``."""
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    vectors = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -red[i, f]
        vectors.append(x)
    return SubspaceBasis.span(m.cols, vectors)


def image_basis(m: Matrix) -> SubspaceBasis:
    """Echelonized basis of the column space of ``m``."""
    return SubspaceBasis.span(m.rows, m.columns())


def quotient_representatives(z: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Vectors of ``z`` whose classes form a basis of ``z / b``.

    The representatives are reduced modulo ``b`` (zero on every pivot
    coordinate of ``b``), which makes the choice canonical.
    """
    if z.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    for v in b.vectors:
        if not z.contains(v):
            raise ContainmentViolation("coboundary-side vector is not in the larger subspace")
    residues = [b.reduce(v) for v in z.vectors]
    return SubspaceBasis.span(z.ambient_dim, [r for r in residues if not is_zero_vec(r)])

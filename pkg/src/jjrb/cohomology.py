"""
Cochain complexes attached to an RB representation and the low-degree
RB cohomology.

A degree-``n`` cochain with values in ``V = Q^m`` is stored densely as a
flat tuple indexed by ``(i_1, ..., i_n, out)`` in row-major order, so a
degree-1 cochain ``f`` has ``f(e_i)_k`` at position ``i*m + k``.  RB
cochains of degree 1 are pairs ``(f, g)`` flattened as ``f`` followed by
``g``; every assembled matrix uses this order for rows and columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import JJAlgebra
from .errors import PrerequisiteFailed, ShapeMismatch, UnsupportedDegree
from .linalg import (
    Matrix,
    Q,
    SubspaceBasis,
    Vector,
    image_basis,
    kernel_basis,
    quotient_representatives,
    unit_vec,
)
from .representations import (
    RBRepresentation,
    Representation,
    check_rb_representation,
    tilde_rep,
)


@dataclass(frozen=True)
class Cochain:
    degree: int
    algebra_dim: int
    value_dim: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Q(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.degree < 0:
            raise ShapeMismatch("negative cochain degree")
        if len(coeffs) != self.size(self.degree, self.algebra_dim, self.value_dim):
            raise ShapeMismatch(
                f"degree-{self.degree} cochain on dim {self.algebra_dim} with values in "
                f"Q^{self.value_dim} needs {self.size(self.degree, self.algebra_dim, self.value_dim)} "
                f"coefficients, got {len(coeffs)}")

    @staticmethod
    def size(degree: int, algebra_dim: int, value_dim: int) -> int:
        return algebra_dim ** degree * value_dim

    @classmethod
    def zero(cls, degree: int, algebra_dim: int, value_dim: int) -> "Cochain":
        return cls(degree, algebra_dim, value_dim, (0,) * cls.size(degree, algebra_dim, value_dim))

    @classmethod
    def from_vector(cls, algebra_dim: int, v: Sequence) -> "Cochain":
        return cls(0, algebra_dim, len(v), tuple(v))

    @classmethod
    def from_matrix(cls, eta: Matrix) -> "Cochain":
        """Degree-1 cochain whose value on ``e_j`` is column ``j`` of ``eta``."""
        m, n = eta.shape
        return cls(1, n, m, tuple(eta[k, j] for j in range(n) for k in range(m)))

    def to_matrix(self) -> Matrix:
        if self.degree != 1:
            raise ShapeMismatch("only degree-1 cochains are linear maps")
        return Matrix.from_columns([self.value((j,)) for j in range(self.algebra_dim)],
                                   rows=self.value_dim)

    def _offset(self, idx: Sequence[int]) -> int:
        pos = 0
        for i in idx:
            pos = pos * self.algebra_dim + i
        return pos * self.value_dim

    def value(self, idx: Sequence[int]) -> Vector:
        """``f(e_{i_1}, ..., e_{i_n})``."""
        if len(idx) != self.degree:
            raise ShapeMismatch(f"expected {self.degree} arguments")
        off = self._offset(idx)
        return self.coeffs[off:off + self.value_dim]


@dataclass(frozen=True)
class RBCochain:
    """Degree-1 RB cochain ``(f, g)``: ``f`` linear ``A -> V`` and ``g`` in ``V``."""

    f: Cochain
    g: tuple

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(Q(x) for x in self.g))
        if self.f.degree != 1 or len(self.g) != self.f.value_dim:
            raise ShapeMismatch("RB 1-cochain needs a degree-1 cochain and a vector of matching length")

    def flat(self) -> Vector:
        return self.f.coeffs + self.g

    @classmethod
    def from_flat(cls, algebra_dim: int, value_dim: int, coords: Sequence) -> "RBCochain":
        split = algebra_dim * value_dim
        if len(coords) != split + value_dim:
            raise ShapeMismatch("wrong number of coordinates for an RB 1-cochain")
        return cls(Cochain(1, algebra_dim, value_dim, tuple(coords[:split])), tuple(coords[split:]))


RBCochain1 = RBCochain


# -- the two differentials -----------------------------------------------------


def _check_shape(r: Representation, f: Cochain) -> None:
    if f.algebra_dim != r.algebra.dim or f.value_dim != r.dim_v:
        raise ShapeMismatch(
            f"cochain lives on ({f.algebra_dim}, {f.value_dim}), representation on "
            f"({r.algebra.dim}, {r.dim_v})")


def _differential(a: JJAlgebra, action: Sequence[Matrix], f: Cochain, sign: int) -> Cochain:
    n, m, deg = f.algebra_dim, f.value_dim, f.degree
    out = []
    for idx in itertools.product(range(n), repeat=deg + 1):
        acc = [Fraction(0)] * m
        for pos in range(deg + 1):
            fv = f.value(idx[:pos] + idx[pos + 1:])
            if any(fv):
                for k, val in enumerate(action[idx[pos]] @ fv):
                    acc[k] += val
        for p in range(deg + 1):
            for q in range(p + 1, deg + 1):
                rest = tuple(t for s, t in enumerate(idx) if s != p and s != q)
                prod = a.basis_product(idx[p], idx[q])
                for t, c in enumerate(prod):
                    if c:
                        for k, val in enumerate(f.value((t,) + rest)):
                            if val:
                                acc[k] += sign * c * val
        out.extend(acc)
    return Cochain(deg + 1, n, m, tuple(out))


def d_n(r: Representation, f: Cochain) -> Cochain:
    """``sum_i rho(x_i) f(.., ^x_i, ..) + sum_{i<j} f(x_i*x_j, ..)``."""
    _check_shape(r, f)
    return _differential(r.algebra, r.action, f, 1)


def delta_n(r: Representation, g: Cochain) -> Cochain:
    """As :func:`d_n` with the product-insertion sum subtracted."""
    _check_shape(r, g)
    return _differential(r.algebra, r.action, g, -1)


def d_tilde_n(rr: RBRepresentation, f: Cochain) -> Cochain:
    return d_n(tilde_rep(rr).rep, f)


def delta_tilde_n(rr: RBRepresentation, f: Cochain) -> Cochain:
    return delta_n(tilde_rep(rr).rep, f)


def phi1(rr: RBRepresentation, f: Cochain) -> Cochain:
    """Degree 0: identity.  Degree 1: ``f . I - T . f``."""
    return _phi(rr, f, -1)


def phi2(rr: RBRepresentation, f: Cochain) -> Cochain:
    """Degree 0: identity.  Degree 1: ``f . I + T . f``."""
    return _phi(rr, f, 1)


def _phi(rr: RBRepresentation, f: Cochain, sign: int) -> Cochain:
    _check_shape(rr.rep, f)
    if f.degree == 0:
        return f
    if f.degree != 1:
        raise UnsupportedDegree("the comparison maps are defined in degrees 0 and 1 only")
    fm = f.to_matrix()
    t = rr.t_op.scale(sign)
    return Cochain.from_matrix(fm @ rr.rb.op + t @ fm)


# -- RB differentials ----------------------------------------------------------


def d_rb(rr: RBRepresentation, c):
    """Degree 0 (``c`` a vector): ``(d0 v, -v)``.
    Degree 1 (``c`` an RBCochain): ``(d1 f, -d~0 g - phi1(f))``.
    """
    n, m = rr.algebra.dim, rr.rep.dim_v
    if isinstance(c, RBCochain):
        _check_shape(rr.rep, c.f)
        first = d_n(rr.rep, c.f)
        dg = d_tilde_n(rr, Cochain.from_vector(n, c.g))
        ph = phi1(rr, c.f)
        second = Cochain(1, n, m, tuple(-x - y for x, y in zip(dg.coeffs, ph.coeffs)))
        return first, second
    v = tuple(Q(x) for x in c)
    if len(v) != m:
        raise ShapeMismatch(f"degree-0 RB cochain must have length {m}")
    return RBCochain(d_n(rr.rep, Cochain.from_vector(n, v)), tuple(-x for x in v))


def delta_rb(rr: RBRepresentation, v: Sequence) -> RBCochain:
    """``(delta0 v, -v)``."""
    n, m = rr.algebra.dim, rr.rep.dim_v
    v = tuple(Q(x) for x in v)
    if len(v) != m:
        raise ShapeMismatch(f"degree-0 RB cochain must have length {m}")
    return RBCochain(delta_n(rr.rep, Cochain.from_vector(n, v)), tuple(-x for x in v))


# -- assembled matrices --------------------------------------------------------


def _assemble(fn, in_dim: int) -> Matrix:
    cols = [fn(unit_vec(in_dim, j)) for j in range(in_dim)]
    if not cols:
        return Matrix.zeros(0, 0)
    return Matrix.from_columns(cols)


def differential_matrix(r: Representation, degree: int, sign: int = 1) -> Matrix:
    """Matrix of ``d^degree`` (``sign=1``) or ``delta^degree`` (``sign=-1``)."""
    n, m = r.algebra.dim, r.dim_v
    size = Cochain.size(degree, n, m)
    op = d_n if sign == 1 else delta_n
    return _assemble(lambda e: op(r, Cochain(degree, n, m, e)).coeffs, size)


def phi_matrix(rr: RBRepresentation, degree: int, which: int = 1) -> Matrix:
    n, m = rr.algebra.dim, rr.rep.dim_v
    fn = phi1 if which == 1 else phi2
    return _assemble(lambda e: fn(rr, Cochain(degree, n, m, e)).coeffs, Cochain.size(degree, n, m))


def d_rb0_matrix(rr: RBRepresentation) -> Matrix:
    """``(nm + m) x m``."""
    return _assemble(lambda e: d_rb(rr, e).flat(), rr.rep.dim_v)


def delta_rb0_matrix(rr: RBRepresentation) -> Matrix:
    """``(nm + m) x m``."""
    return _assemble(lambda e: delta_rb(rr, e).flat(), rr.rep.dim_v)


def d_rb1_matrix(rr: RBRepresentation) -> Matrix:
    """``(n^2 m + n m) x (n m + m)``, assembled blockwise::

        [ d1       0    ]
        [ -phi1  -d~0   ]
    """
    n, m = rr.algebra.dim, rr.rep.dim_v
    top = differential_matrix(rr.rep, 1, 1)
    bottom_left = -phi_matrix(rr, 1, 1)
    bottom_right = -differential_matrix(tilde_rep(rr).rep, 0, 1)
    rows = [list(r) + [Fraction(0)] * m for r in top.to_rows()]
    rows += [list(a) + list(b) for a, b in zip(bottom_left.to_rows(), bottom_right.to_rows())]
    return Matrix(rows, cols=n * m + m)


def d_rb1_matrix_elementwise(rr: RBRepresentation) -> Matrix:
    """Same matrix built by applying :func:`d_rb` to unit cochains."""
    n, m = rr.algebra.dim, rr.rep.dim_v

    def apply(e):
        first, second = d_rb(rr, RBCochain.from_flat(n, m, e))
        return first.coeffs + second.coeffs

    return _assemble(apply, n * m + m)


# -- antiderivations -----------------------------------------------------------


def is_antiderivation(rr: RBRepresentation, eta: Matrix, v: Sequence) -> bool:
    """Both antiderivation identities on basis elements:

    ``eta(x*y) = -rho(x) eta(y) - rho(y) eta(x)`` and
    ``eta(I x) - T eta(x) = T rho(x) v - rho(I x) v``.
    """
    a, rep = rr.algebra, rr.rep
    n, m = a.dim, rep.dim_v
    if eta.shape != (m, n) or len(v) != m:
        raise ShapeMismatch(f"eta must be {m}x{n} and v of length {m}")
    v = tuple(Q(x) for x in v)
    cols = eta.columns()
    for i in range(n):
        for j in range(i, n):
            lhs = eta @ a.basis_product(i, j)
            rhs = [-p - q for p, q in zip(rep.action[i] @ cols[j], rep.action[j] @ cols[i])]
            if lhs != tuple(rhs):
                return False
    t = rr.t_op
    for i in range(n):
        ix = rr.rb.op.column(i)
        lhs = [p - q for p, q in zip(eta @ ix, t @ cols[i])]
        rhs = [p - q for p, q in zip(t @ (rep.action[i] @ v), rep.rho(ix) @ v)]
        if lhs != rhs:
            return False
    return True


def inner_antiderivation(rr: RBRepresentation, v: Sequence) -> tuple[Matrix, Vector]:
    """``(D_v, -v)`` where column ``j`` of ``D_v`` is ``rho(e_j) v``."""
    v = tuple(Q(x) for x in v)
    if len(v) != rr.rep.dim_v:
        raise ShapeMismatch(f"v must have length {rr.rep.dim_v}")
    if rr.algebra.dim == 0:
        return Matrix.zeros(rr.rep.dim_v, 0), tuple(-x for x in v)
    d = Matrix.from_columns([p @ v for p in rr.rep.action], rows=rr.rep.dim_v)
    return d, tuple(-x for x in v)


# -- cohomology ----------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyReport:
    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    cocycle_basis: SubspaceBasis
    coboundary_basis: SubspaceBasis
    representative_basis: SubspaceBasis

    def is_cocycle(self, coords: Sequence) -> bool:
        return self.cocycle_basis.contains(coords)

    def is_nontrivial_class(self, coords: Sequence) -> bool:
        """A cocycle not lying in the coboundaries."""
        return self.is_cocycle(coords) and not self.coboundary_basis.contains(coords)


def _require_valid(rr: RBRepresentation) -> None:
    if not check_rb_representation(rr):
        raise PrerequisiteFailed("T is not compatible with the Rota-Baxter operator")


def cohomology_rb(rr: RBRepresentation, degree: int) -> CohomologyReport:
    if degree not in (0, 1):
        raise UnsupportedDegree(
            f"RB cohomology is only defined here in degrees 0 and 1 (asked for {degree})")
    _require_valid(rr)
    n, m = rr.algebra.dim, rr.rep.dim_v
    if degree == 0:
        z = kernel_basis(d_rb0_matrix(rr)) if m else SubspaceBasis.zero(0)
        b = SubspaceBasis.zero(m)
    else:
        z = kernel_basis(d_rb1_matrix(rr)) if n * m + m else SubspaceBasis.zero(0)
        b = image_basis(delta_rb0_matrix(rr)) if m else SubspaceBasis.zero(n * m + m)
    reps = quotient_representatives(z, b)
    return CohomologyReport(degree, z.dim, b.dim, z.dim - b.dim, z, b, reps)


def ader_basis(rr: RBRepresentation) -> SubspaceBasis:
    return cohomology_rb(rr, 1).cocycle_basis


def innader_basis(rr: RBRepresentation) -> SubspaceBasis:
    return cohomology_rb(rr, 1).coboundary_basis


def flatten_pair(eta: Matrix, v: Sequence) -> Vector:
    """Coordinates of ``(eta, v)`` in the RB 1-cochain ordering."""
    return RBCochain(Cochain.from_matrix(eta), tuple(v)).flat()

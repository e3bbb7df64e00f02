"""
Finite-dimensional Jacobi-Jordan algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j`` (0-based).
A Jacobi-Jordan algebra is commutative and satisfies
``(x*y)*z + (y*z)*x + (z*x)*y = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import AxiomViolation, DimensionMismatch
from .linalg import (
    Matrix,
    SubspaceBasis,
    Q,
    Vector,
    is_zero_vec,
    unit_vec,
    vadd,
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check; truthy iff the identity holds.

    ``witness`` names the first failing basis tuple (0-based indices) and
    ``residual`` the nonzero difference found there.
    """

    ok: bool
    witness: tuple | None = None
    residual: tuple | None = None
    identity: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class JJReport:
    commutative: bool
    jacobi: bool
    commutative_witness: tuple | None = None
    jacobi_witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.commutative and self.jacobi

    def __bool__(self):
        return self.ok

    @property
    def witnesses(self) -> dict:
        return {"commutative": self.commutative_witness, "jacobi": self.jacobi_witness}


class JJAlgebra:
    """Algebra on ``Q^dim`` defined by dense structure constants."""

    __slots__ = ("dim", "c", "_terms", "_table")

    def __init__(self, dim: int, constants: Sequence[Sequence[Sequence]]):
        if len(constants) != dim or any(len(row) != dim for row in constants) or any(
            len(cell) != dim for row in constants for cell in row
        ):
            raise DimensionMismatch(f"structure constants must have shape {dim}x{dim}x{dim}")
        self.dim = dim
        self.c = tuple(tuple(tuple(Q(x) for x in cell) for cell in row) for row in constants)
        # sparse view used by multiply(); products are the hot loop everywhere
        self._terms = tuple(
            (i, j, k, self.c[i][j][k])
            for i in range(dim) for j in range(dim) for k in range(dim)
            if self.c[i][j][k] != 0
        )
        self._table = tuple(tuple(self.c[i][j] for j in range(dim)) for i in range(dim))

    @classmethod
    def zero(cls, dim: int) -> "JJAlgebra":
        return cls(dim, [[[0] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_products(cls, dim: int, products: Mapping[tuple[int, int], Mapping[int, object]],
                      symmetrize: bool = True) -> "JJAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` (0-based).

        With ``symmetrize`` the mirror ``(j, i)`` of every listed pair is
        filled in unless it is listed itself.
        """
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), result in products.items():
            for k, coeff in result.items():
                c[i][j][k] = Q(coeff)
        if symmetrize:
            for (i, j), result in products.items():
                if (j, i) not in products:
                    for k, coeff in result.items():
                        c[j][i][k] = Q(coeff)
        return cls(dim, c)

    def basis_product(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def multiply(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"expected vectors of length {self.dim}")
        out = [Fraction(0)] * self.dim
        for i, j, k, c in self._terms:
            xi = x[i]
            if xi:
                yj = y[j]
                if yj:
                    out[k] += xi * yj * c
        return tuple(out)

    def left_multiplication(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x * y``."""
        return Matrix.from_columns([self.multiply(x, unit_vec(self.dim, j)) for j in range(self.dim)]) \
            if self.dim else Matrix.zeros(0, 0)

    def basis(self) -> list[Vector]:
        return [unit_vec(self.dim, i) for i in range(self.dim)]

    def is_symmetric(self) -> bool:
        return all(self.c[i][j] == self.c[j][i] for i in range(self.dim) for j in range(i + 1, self.dim))

    def nonzero_products(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                cell = {k: v for k, v in enumerate(self.c[i][j]) if v != 0}
                if cell:
                    out[(i, j)] = cell
        return out

    def __eq__(self, other):
        return isinstance(other, JJAlgebra) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        prods = ", ".join(
            f"e{i + 1}*e{j + 1}=" + "+".join(f"{v}e{k + 1}" for k, v in cell.items())
            for (i, j), cell in self.nonzero_products().items() if i <= j
        )
        return f"JJAlgebra(dim={self.dim}{', ' if prods else ''}{prods})"


def multiply(a: JJAlgebra, x: Sequence, y: Sequence) -> Vector:
    return a.multiply(x, y)


def left_multiplication(a: JJAlgebra, x: Sequence) -> Matrix:
    return a.left_multiplication(x)


def jacobi_sum(a: JJAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    m = a.multiply
    return vadd(vadd(m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y))


def check_jj_axioms(a: JJAlgebra) -> JJReport:
    n = a.dim
    comm_witness = None
    for i in range(n):
        for j in range(i + 1, n):
            if a.c[i][j] != a.c[j][i]:
                comm_witness = (i, j)
                break
        if comm_witness:
            break
    commutative = comm_witness is None
    # the cyclic sum is symmetric once * is commutative, so sorted triples suffice
    triples = (itertools.combinations_with_replacement(range(n), 3) if commutative
               else itertools.product(range(n), repeat=3))
    basis = a.basis()
    jac_witness = None
    for i, j, l in triples:
        if not is_zero_vec(jacobi_sum(a, basis[i], basis[j], basis[l])):
            jac_witness = (i, j, l)
            break
    return JJReport(commutative, jac_witness is None, comm_witness, jac_witness)


def require_jj(a: JJAlgebra) -> None:
    rep = check_jj_axioms(a)
    if not rep:
        raise AxiomViolation(f"not a Jacobi-Jordan algebra: {rep.witnesses}")


@dataclass(frozen=True)
class AlgebraMorphism:
    source: JJAlgebra
    target: JJAlgebra
    map: Matrix

    def __post_init__(self):
        if self.map.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                f"morphism matrix must be {self.target.dim}x{self.source.dim}, got {self.map.shape}")

    def __call__(self, x: Sequence) -> Vector:
        return self.map @ x


def check_morphism(phi: AlgebraMorphism) -> CheckResult:
    """``phi(e_i * e_j) == phi(e_i) *' phi(e_j)`` for all ``i <= j``."""
    src, tgt = phi.source, phi.target
    images = phi.map.columns()
    for i in range(src.dim):
        for j in range(i, src.dim):
            lhs = phi.map @ src.basis_product(i, j)
            rhs = tgt.multiply(images[i], images[j])
            if lhs != rhs:
                return CheckResult(False, (i, j), tuple(l - r for l, r in zip(lhs, rhs)), "morphism")
    return CheckResult(True, identity="morphism")


def is_subalgebra(a: JJAlgebra, span: SubspaceBasis) -> bool:
    if span.ambient_dim != a.dim:
        raise DimensionMismatch("subspace and algebra dimensions differ")
    vs = span.vectors
    symmetric = a.is_symmetric()
    for p in range(len(vs)):
        for q in range(p if symmetric else 0, len(vs)):
            if not span.contains(a.multiply(vs[p], vs[q])):
                return False
    return True

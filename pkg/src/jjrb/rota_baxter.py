"""
Weighted Rota-Baxter operators on Jacobi-Jordan algebras.

An operator ``I`` of weight ``lam`` satisfies, for all ``x, y``::

    I(x) * I(y) == I(I(x) * y + x * I(y) + lam * (x * y))
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraMorphism, CheckResult, JJAlgebra, check_morphism, require_jj
from .errors import DimensionMismatch, HypothesisNotMet, NotAutomorphism, NotRotaBaxter
from .linalg import Matrix, Q, Vector, image_basis, vadd, vscale, vsub
from .polynomial import Poly


@dataclass(frozen=True)
class RBOperator:
    algebra: JJAlgebra
    weight: Fraction
    op: Matrix

    def __post_init__(self):
        object.__setattr__(self, "weight", Q(self.weight))
        n = self.algebra.dim
        if self.op.shape != (n, n):
            raise DimensionMismatch(f"operator must be {n}x{n}, got {self.op.shape}")

    def __call__(self, x: Sequence) -> Vector:
        return self.op @ x


def _pairs(a: JJAlgebra):
    n = a.dim
    sym = a.is_symmetric()
    for i in range(n):
        for j in range(i if sym else 0, n):
            yield i, j


def rb_defect(a: JJAlgebra, weight, op: Matrix, x: Sequence, y: Sequence) -> Vector:
    """``I(x)*I(y) - I(I(x)*y + x*I(y) + weight*(x*y))``."""
    ix, iy = op @ x, op @ y
    inner = vadd(vadd(a.multiply(ix, y), a.multiply(x, iy)), vscale(weight, a.multiply(x, y)))
    return vsub(a.multiply(ix, iy), op @ inner)


def check_rb(r: RBOperator) -> CheckResult:
    a = r.algebra
    basis = a.basis()
    for i, j in _pairs(a):
        d = rb_defect(a, r.weight, r.op, basis[i], basis[j])
        if any(d):
            return CheckResult(False, (i, j), d, "rota-baxter")
    return CheckResult(True, identity="rota-baxter")


def require_rb(r: RBOperator) -> None:
    res = check_rb(r)
    if not res:
        raise NotRotaBaxter(f"Rota-Baxter identity fails at basis pair {res.witness}")


def derived_algebra(r: RBOperator) -> JJAlgebra:
    """Algebra on the same space with ``x *_I y = I(x)*y + x*I(y) + lam*(x*y)``."""
    require_rb(r)
    a, n = r.algebra, r.algebra.dim
    basis = a.basis()
    cols = r.op.columns()
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c[i][j] = vadd(vadd(a.multiply(cols[i], basis[j]), a.multiply(basis[i], cols[j])),
                           vscale(r.weight, a.basis_product(i, j)))
    return JJAlgebra(n, c)


def scale_rb(r: RBOperator, mu) -> RBOperator:
    require_rb(r)
    mu = Q(mu)
    return RBOperator(r.algebra, mu * r.weight, r.op.scale(mu))


def conjugate_rb(r: RBOperator, psi: AlgebraMorphism) -> RBOperator:
    """``psi^-1 . I . psi`` for an automorphism ``psi`` of the algebra."""
    if psi.source != r.algebra or psi.target != r.algebra:
        raise NotAutomorphism("conjugating map must be an endomorphism of the operator's algebra")
    if not check_morphism(psi):
        raise NotAutomorphism("map is not multiplicative")
    try:
        inv = psi.map.inverse()
    except ZeroDivisionError:
        raise NotAutomorphism("map is not invertible") from None
    return RBOperator(r.algebra, r.weight, inv @ r.op @ psi.map)


def reflect_rb(r: RBOperator) -> RBOperator:
    """``-lam*id - I``, again of weight ``lam``."""
    require_rb(r)
    n = r.algebra.dim
    return RBOperator(r.algebra, r.weight, Matrix.identity(n).scale(-r.weight) - r.op)


def check_quasi_idempotent_identity(r: RBOperator) -> CheckResult:
    """For ``I^2 == -I``: ``I(x)*I(y) == -lam*I(x*y)`` on the image of ``I``."""
    if r.op @ r.op != -r.op:
        raise HypothesisNotMet("operator is not quasi-idempotent (I^2 != -I)")
    if not check_rb(r):
        raise HypothesisNotMet("operator is not a Rota-Baxter operator")
    a = r.algebra
    img = image_basis(r.op).vectors
    for p in range(len(img)):
        for q in range(p, len(img)):
            x, y = img[p], img[q]
            lhs = a.multiply(r.op @ x, r.op @ y)
            rhs = vscale(-r.weight, r.op @ a.multiply(x, y))
            if lhs != rhs:
                return CheckResult(False, (p, q), vsub(lhs, rhs), "quasi-idempotent")
    return CheckResult(True, identity="quasi-idempotent")


# -- constraint systems --------------------------------------------------------


def unknown(r: int, c: int) -> str:
    return f"x_{{{r},{c}}}"


@dataclass(frozen=True)
class PolySystem:
    """Quadratic equations on the entries of an unknown ``dim x dim`` operator.

    ``origins[t]`` is the ``(i, j, k)`` (basis pair, coordinate) that produced
    ``polys[t]``.  Variables are ordered row-major: ``x_{r,c}`` has index
    ``r*dim + c``.
    """

    dim: int
    weight: Fraction
    polys: tuple
    origins: tuple

    @property
    def num_vars(self) -> int:
        return self.dim * self.dim

    @property
    def variables(self) -> list[str]:
        return [unknown(r, c) for r in range(self.dim) for c in range(self.dim)]

    def assignment(self, values: Sequence) -> dict[str, Fraction]:
        if len(values) != self.num_vars:
            raise DimensionMismatch(f"expected {self.num_vars} values, got {len(values)}")
        return dict(zip(self.variables, (Q(v) for v in values)))

    def to_text(self) -> str:
        return "".join(p.to_text() + "\n" for p in self.polys)

    def __len__(self):
        return len(self.polys)


def rb_constraint_system(a: JJAlgebra, weight) -> PolySystem:
    require_jj(a)
    weight = Q(weight)
    n = a.dim
    op = [[Poly.var(unknown(r, c)) for c in range(n)] for r in range(n)]

    def mul(x, y):
        out = [Poly() for _ in range(n)]
        for i, j, k, c in a._terms:
            if not x[i].is_zero() and not y[j].is_zero():
                out[k] = out[k] + c * x[i] * y[j]
        return out

    def apply(v):
        return [sum((op[r][c] * v[c] for c in range(n) if not v[c].is_zero()), Poly()) for r in range(n)]

    basis = [[Poly.const(1 if t == i else 0) for t in range(n)] for i in range(n)]
    cols = [[op[r][i] for r in range(n)] for i in range(n)]
    polys, origins = [], []
    for i in range(n):
        for j in range(i, n):
            lhs = mul(cols[i], cols[j])
            inner = [p + q + weight * s for p, q, s in
                     zip(mul(cols[i], basis[j]), mul(basis[i], cols[j]), mul(basis[i], basis[j]))]
            rhs = apply(inner)
            for k in range(n):
                p = lhs[k] - rhs[k]
                if not p.is_zero():
                    polys.append(p)
                    origins.append((i, j, k))
    return PolySystem(n, weight, tuple(polys), tuple(origins))


def eval_constraints(s: PolySystem, assignment: Sequence) -> tuple:
    values = s.assignment(assignment)
    return tuple(p.evaluate(values) for p in s.polys)


def _thread_cap() -> int | None:
    raw = os.environ.get("JJRB_THREADS")
    if not raw:
        return None
    try:
        return max(1, int(raw))
    except ValueError:
        return None


def eval_grid(s: PolySystem, assignments: Iterable[Sequence], threads: int | None = None) -> list[tuple]:
    """``eval_constraints`` over many assignments; result order follows input order."""
    assignments = list(assignments)
    threads = threads or _thread_cap()
    if not threads or threads == 1:
        return [eval_constraints(s, v) for v in assignments]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda v: eval_constraints(s, v), assignments))


def operator_from_assignment(a: JJAlgebra, weight, values: Sequence) -> RBOperator:
    n = a.dim
    return RBOperator(a, Q(weight), Matrix.from_flat(n, n, [Q(v) for v in values]))

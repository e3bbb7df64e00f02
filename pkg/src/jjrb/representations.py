"""
Representations of Jacobi-Jordan algebras and of weighted Rota-Baxter
Jacobi-Jordan algebras, together with the constructions that produce new
ones (direct sums, gl(V), duals, derived-algebra twists, semidirect
products, doublings) and the paired-operator test.

Conventions: a representation ``rho`` of ``A`` on ``V = Q^m`` is stored as
the ``m x m`` matrices ``rho(e_i)``, and must satisfy
``rho(x*y) = -rho(x) rho(y) - rho(y) rho(x)``.  An RB representation adds
``T`` on ``V`` with
``rho(I x) T = T (rho(I x) + rho(x) T + lam rho(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import CheckResult, JJAlgebra, check_jj_axioms, is_subalgebra, require_jj
from .errors import (
    AxiomViolation,
    DimensionMismatch,
    MixedBase,
    NonzeroWeight,
    PrerequisiteFailed,
)
from .linalg import Matrix, Q, SubspaceBasis, unit_vec, zero_vec
from .rota_baxter import RBOperator, check_rb, derived_algebra, rb_defect, reflect_rb, require_rb


@dataclass(frozen=True)
class Representation:
    algebra: JJAlgebra
    dim_v: int
    action: tuple

    def __post_init__(self):
        action = tuple(self.action)
        object.__setattr__(self, "action", action)
        if len(action) != self.algebra.dim:
            raise DimensionMismatch(
                f"need one action matrix per basis vector ({self.algebra.dim}), got {len(action)}")
        for m in action:
            if m.shape != (self.dim_v, self.dim_v):
                raise DimensionMismatch(f"action matrices must be {self.dim_v}x{self.dim_v}")

    def rho(self, x: Sequence) -> Matrix:
        """Action matrix of an arbitrary element ``x`` (coordinates)."""
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for coeff, m in zip(x, self.action):
            if coeff:
                out = out + m.scale(coeff)
        return out


@dataclass(frozen=True)
class RBRepresentation:
    rep: Representation
    rb: RBOperator
    t_op: Matrix

    def __post_init__(self):
        if self.rep.algebra != self.rb.algebra:
            raise MixedBase("representation and operator live over different algebras")
        m = self.rep.dim_v
        if self.t_op.shape != (m, m):
            raise DimensionMismatch(f"T must be {m}x{m}, got {self.t_op.shape}")

    @property
    def algebra(self) -> JJAlgebra:
        return self.rep.algebra

    @property
    def weight(self) -> Fraction:
        return self.rb.weight


def _pairs(a: JJAlgebra):
    sym = a.is_symmetric()
    for i in range(a.dim):
        for j in range(i if sym else 0, a.dim):
            yield i, j


def _first_nonzero_column(m: Matrix):
    for j in range(m.cols):
        col = m.column(j)
        if any(col):
            return j, col
    return None


def check_representation(r: Representation) -> CheckResult:
    a = r.algebra
    act = r.action
    for i, j in _pairs(a):
        defect = r.rho(a.basis_product(i, j)) + act[i] @ act[j] + act[j] @ act[i]
        if not defect.is_zero():
            col, res = _first_nonzero_column(defect)
            return CheckResult(False, (i, j), res, "representation")
    return CheckResult(True, identity="representation")


def compatibility_defect(rep: Representation, op: Matrix, weight, t_op: Matrix, i: int) -> Matrix:
    """Matrix (over u) of ``rho(I e_i) T u - T(rho(I e_i) u + rho(e_i) T u + lam rho(e_i) u)``."""
    rho_i = rep.action[i]
    rho_ix = rep.rho(op.column(i))
    return rho_ix @ t_op - t_op @ (rho_ix + rho_i @ t_op + rho_i.scale(weight))


def _compatibility(rep: Representation, op: Matrix, weight, t_op: Matrix) -> CheckResult:
    for i in range(rep.algebra.dim):
        defect = compatibility_defect(rep, op, weight, t_op, i)
        if not defect.is_zero():
            u, res = _first_nonzero_column(defect)
            return CheckResult(False, (i, u), res, "rb-representation")
    return CheckResult(True, identity="rb-representation")


def check_rb_representation(rr: RBRepresentation) -> CheckResult:
    """Witness is ``(i, u)``: basis element of A, basis element of V."""
    if not check_representation(rr.rep):
        raise PrerequisiteFailed("underlying action is not a representation")
    if not check_rb(rr.rb):
        raise PrerequisiteFailed("underlying operator is not Rota-Baxter")
    return _compatibility(rr.rep, rr.rb.op, rr.weight, rr.t_op)


def _require_valid(rr: RBRepresentation) -> None:
    require_rb(rr.rb)
    if not check_representation(rr.rep):
        raise AxiomViolation("underlying action is not a representation")
    if not _compatibility(rr.rep, rr.rb.op, rr.weight, rr.t_op):
        raise AxiomViolation("T is not compatible with the Rota-Baxter operator")


# -- basic constructions -------------------------------------------------------


def adjoint_rep(a: JJAlgebra) -> Representation:
    require_jj(a)
    return Representation(a, a.dim, tuple(a.left_multiplication(e) for e in a.basis()))


def adjoint_rb_rep(r: RBOperator) -> RBRepresentation:
    require_rb(r)
    return RBRepresentation(adjoint_rep(r.algebra), r, r.op)


def zero_rep(a: JJAlgebra, dim_v: int) -> Representation:
    return Representation(a, dim_v, tuple(Matrix.zeros(dim_v, dim_v) for _ in range(a.dim)))


def direct_sum(rrs: Sequence[RBRepresentation]) -> RBRepresentation:
    if not rrs:
        raise ValueError("direct sum of no summands")
    base = rrs[0].rb
    for rr in rrs[1:]:
        if rr.rb != base:
            raise MixedBase("summands must share one Rota-Baxter operator")
    a = base.algebra
    action = tuple(Matrix.block_diag([rr.rep.action[i] for rr in rrs]) for i in range(a.dim))
    dim_v = sum(rr.rep.dim_v for rr in rrs)
    return RBRepresentation(Representation(a, dim_v, action), base,
                            Matrix.block_diag([rr.t_op for rr in rrs]))


def hat_gl_rep(rr: RBRepresentation, sign: int = 1) -> RBRepresentation:
    """Representation on gl(V), flattened row-major (``f[r][c]`` at ``r*m + c``).

    ``rho_hat(x) f = sign * f . rho(x)`` and ``T_hat(f) = -lam f - f . T``.
    Only ``sign = +1`` yields a representation in general; ``-1`` breaks the
    anticommutator identity whenever ``rho(x*y) != 0``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = rr.rep.dim_v
    eye = Matrix.identity(m)
    action = tuple(eye.kron(p.T).scale(sign) for p in rr.rep.action)
    t_hat = Matrix.identity(m * m).scale(-rr.weight) - eye.kron(rr.t_op.T)
    return RBRepresentation(Representation(rr.algebra, m * m, action), rr.rb, t_hat)


def dual_rep(rr: RBRepresentation) -> RBRepresentation:
    """``rho*(x) = rho(x)^T`` and ``T* = -T^T``; weight must be zero."""
    if rr.weight != 0:
        raise NonzeroWeight("the dual construction needs weight 0")
    action = tuple(p.T for p in rr.rep.action)
    return RBRepresentation(Representation(rr.algebra, rr.rep.dim_v, action), rr.rb, -rr.t_op.T)


def bar_rep(rr: RBRepresentation) -> RBRepresentation:
    """``rho_bar(x) = rho(I x) + rho(x) T + lam rho(x)`` over the derived algebra."""
    derived = derived_algebra(rr.rb)
    rep, t, lam = rr.rep, rr.t_op, rr.weight
    action = tuple(rep.rho(rr.rb.op.column(i)) + p @ t + p.scale(lam) for i, p in enumerate(rep.action))
    new_rb = RBOperator(derived, lam, rr.rb.op)
    return RBRepresentation(Representation(derived, rep.dim_v, action), new_rb, t)


def tilde_rep(rr: RBRepresentation) -> RBRepresentation:
    """``rho_tilde(x) = rho(I x) - T rho(x)`` over the derived algebra."""
    derived = derived_algebra(rr.rb)
    rep, t = rr.rep, rr.t_op
    action = tuple(rep.rho(rr.rb.op.column(i)) - t @ p for i, p in enumerate(rep.action))
    new_rb = RBOperator(derived, rr.weight, rr.rb.op)
    return RBRepresentation(Representation(derived, rep.dim_v, action), new_rb, t)


def reflect_rep(rr: RBRepresentation) -> RBRepresentation:
    """``(V, -lam id - T)`` over ``(A, -lam id - I)``."""
    new_rb = reflect_rb(rr.rb)
    m = rr.rep.dim_v
    return RBRepresentation(rr.rep, new_rb, Matrix.identity(m).scale(-rr.weight) - rr.t_op)


# -- semidirect products and doublings -----------------------------------------


def semidirect_algebra(rep: Representation) -> JJAlgebra:
    """``A + V`` with ``(x,u)*(y,v) = (x*y, rho(x)v + rho(y)u)``."""
    a, n, m = rep.algebra, rep.algebra.dim, rep.dim_v
    size = n + m
    c = [[[Fraction(0)] * size for _ in range(size)] for _ in range(size)]
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(a.c[i][j]):
                c[i][j][k] = v
        for b in range(m):
            col = rep.action[i].column(b)
            for k, v in enumerate(col):
                c[i][n + b][n + k] = v
                c[n + b][i][n + k] = v
    return JJAlgebra(size, c)


def semidirect_product(rr: RBRepresentation) -> RBOperator:
    """Operator ``I (+) T`` on the semidirect product algebra (no validation)."""
    return RBOperator(semidirect_algebra(rr.rep), rr.weight, Matrix.block_diag([rr.rb.op, rr.t_op]))


@dataclass(frozen=True)
class SemidirectReport:
    representation: bool
    semidirect_jacobi: bool
    rb_representation: bool
    semidirect_rb: bool

    @property
    def consistent(self) -> bool:
        return (self.representation == self.semidirect_jacobi
                and self.rb_representation == self.semidirect_rb)


def semidirect_converse(rr: RBRepresentation) -> SemidirectReport:
    """Evaluate both sides of the semidirect-product characterization.

    Assumes the operator on A is Rota-Baxter; each pair of flags must agree.
    """
    semi = semidirect_product(rr)
    return SemidirectReport(
        representation=check_representation(rr.rep).ok,
        semidirect_jacobi=check_jj_axioms(semi.algebra).ok,
        rb_representation=_compatibility(rr.rep, rr.rb.op, rr.weight, rr.t_op).ok,
        semidirect_rb=check_rb(semi).ok,
    )


def doubling(a: JJAlgebra, weight) -> JJAlgebra:
    """``(x,x')*(y,y') = (x*y, x*y' + x'*y + lam x'*y')`` on ``A + A``."""
    require_jj(a)
    lam = Q(weight)
    n = a.dim
    c = [[[Fraction(0)] * (2 * n) for _ in range(2 * n)] for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(a.c[i][j]):
                if v:
                    c[i][j][k] = v
                    c[i][n + j][n + k] = v
                    c[n + i][j][n + k] = v
                    c[n + i][n + j][n + k] = lam * v
    return JJAlgebra(2 * n, c)


def doubling_as_printed(a: JJAlgebra, weight) -> JJAlgebra:
    """The product with the second slot ``x*y' + x*y' + lam x'*y'`` taken literally."""
    lam = Q(weight)
    n = a.dim
    c = [[[Fraction(0)] * (2 * n) for _ in range(2 * n)] for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(a.c[i][j]):
                if v:
                    c[i][j][k] = v
                    c[i][n + j][n + k] = 2 * v
                    c[n + i][n + j][n + k] = lam * v
    return JJAlgebra(2 * n, c)


def doubled_rep(r: Representation, weight) -> Representation:
    """``rho_lam(x,y)(u,v) = (rho(x)u, rho(x)v + rho(y)u + lam rho(y)v)``."""
    lam = Q(weight)
    m = r.dim_v
    zero = Matrix.zeros(m, m)
    first = [Matrix.block_diag([p, p]) for p in r.action]
    second = []
    for p in r.action:
        rows = [list(zero.row(i)) + list(zero.row(i)) for i in range(m)]
        rows += [list(p.row(i)) + list(p.scale(lam).row(i)) for i in range(m)]
        second.append(Matrix(rows, cols=2 * m))
    return Representation(doubling(r.algebra, lam), 2 * m, tuple(first + second))


def quadruple_semidirect(r: Representation, weight) -> JJAlgebra:
    """Semidirect product of the doubling by the doubled representation.

    Coordinates are ordered ``(x, x', u, u')``.
    """
    if not check_representation(r):
        raise AxiomViolation("action is not a representation")
    return semidirect_algebra(doubled_rep(r, weight))


# -- paired operators ----------------------------------------------------------


@dataclass(frozen=True)
class PairedReport:
    paired: bool
    graph_subalgebra: bool
    rb_identity: bool
    compatibility: bool

    @property
    def agree(self) -> bool:
        return self.paired == self.graph_subalgebra


def graph_subspace(r: Representation, op: Matrix, t_op: Matrix) -> SubspaceBasis:
    """Span of ``(I x, x, T u, u)`` inside ``A + A + V + V``."""
    n, m = r.algebra.dim, r.dim_v
    gens = []
    for i in range(n):
        gens.append(op.column(i) + unit_vec(n, i) + zero_vec(2 * m))
    for b in range(m):
        gens.append(zero_vec(2 * n) + t_op.column(b) + unit_vec(m, b))
    return SubspaceBasis.span(2 * n + 2 * m, gens)


def check_paired(r: Representation, weight, op: Matrix, t_op: Matrix) -> PairedReport:
    """Decide whether ``(I, T)`` is a weighted Rota-Baxter paired operator, twice:
    from the two defining identities, and from the graph being a subalgebra
    of the quadruple semidirect product."""
    if not check_representation(r):
        raise PrerequisiteFailed("action is not a representation")
    a, lam = r.algebra, Q(weight)
    n, m = a.dim, r.dim_v
    if op.shape != (n, n) or t_op.shape != (m, m):
        raise DimensionMismatch("operator shapes do not match the algebra and module")
    basis = a.basis()
    rb_ok = all(not any(rb_defect(a, lam, op, basis[i], basis[j]))
                for i in range(n) for j in range(n))
    compat_ok = True
    for i in range(n):
        rho_i = r.action[i]
        rho_ix = r.rho(op.column(i))
        for b in range(m):
            u = unit_vec(m, b)
            tu = t_op @ u
            lhs = rho_ix @ tu
            inner = [p + q + lam * s for p, q, s in zip(rho_ix @ u, rho_i @ tu, rho_i @ u)]
            if lhs != t_op @ inner:
                compat_ok = False
                break
        if not compat_ok:
            break
    graph = is_subalgebra(quadruple_semidirect(r, lam), graph_subspace(r, op, t_op))
    return PairedReport(rb_ok and compat_ok, graph, rb_ok, compat_ok)

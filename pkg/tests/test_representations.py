from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jjrb import catalog
from jjrb.algebra import JJAlgebra, check_jj_axioms, is_subalgebra
from jjrb.errors import (
    AxiomViolation,
    DimensionMismatch,
    MixedBase,
    NonzeroWeight,
    PrerequisiteFailed,
)
from jjrb.linalg import Matrix
from jjrb.representations import (
    RBRepresentation,
    Representation,
    adjoint_rb_rep,
    adjoint_rep,
    bar_rep,
    check_paired,
    check_rb_representation,
    check_representation,
    direct_sum,
    doubled_rep,
    doubling,
    doubling_as_printed,
    dual_rep,
    graph_subspace,
    hat_gl_rep,
    quadruple_semidirect,
    reflect_rep,
    semidirect_converse,
    semidirect_product,
    tilde_rep,
    zero_rep,
)
from jjrb.rota_baxter import RBOperator, check_rb, derived_algebra

DIM2 = catalog.get("dim2").algebra
DIM3 = catalog.get("dim3").algebra
ALGEBRAS = [e.algebra for e in catalog.list_entries()]
R2 = RBOperator(DIM2, 0, Matrix([[0, 0], [1, 2]]))
VALID = [rr for _, rr in catalog.standard_rb_representations()]


def both_checks(rr):
    return bool(check_representation(rr.rep)) and bool(check_rb(rr.rb)) and bool(check_rb_representation(rr))


def test_adjoint_and_zero_actions_are_representations():
    for a in ALGEBRAS:
        assert check_representation(adjoint_rep(a))
        assert check_representation(zero_rep(a, 3))
    assert adjoint_rep(DIM2).action == (Matrix([[0, 0], [1, 0]]), Matrix.zeros(2, 2))
    assert adjoint_rep(DIM3).action[0] @ (0, 1, 0) == (0, 0, 1)


def test_identity_action_is_not_a_representation():
    r = Representation(DIM2, 2, (Matrix.identity(2), Matrix.zeros(2, 2)))
    res = check_representation(r)
    assert not res and res.witness == (0, 0)


def test_shape_and_base_errors():
    with pytest.raises(DimensionMismatch):
        Representation(DIM2, 2, (Matrix.identity(2),))
    with pytest.raises(DimensionMismatch):
        Representation(DIM2, 2, (Matrix.identity(3), Matrix.identity(3)))
    with pytest.raises(MixedBase):
        RBRepresentation(adjoint_rep(DIM3), R2, Matrix.identity(3))
    with pytest.raises(DimensionMismatch):
        RBRepresentation(adjoint_rep(DIM2), R2, Matrix.identity(3))


def test_rb_representation_examples():
    assert check_rb_representation(adjoint_rb_rep(R2))
    for a in ALGEBRAS:
        ident = RBOperator(a, -1, Matrix.identity(a.dim))
        for rep in (adjoint_rep(a), zero_rep(a, 2)):
            assert check_rb_representation(RBRepresentation(rep, ident, Matrix.identity(rep.dim_v)))
    res = check_rb_representation(RBRepresentation(adjoint_rep(DIM2), R2, Matrix.identity(2)))
    assert not res and res.witness == (0, 0)


def test_rb_representation_prerequisites():
    bad_rep = Representation(DIM2, 2, (Matrix.identity(2), Matrix.zeros(2, 2)))
    with pytest.raises(PrerequisiteFailed):
        check_rb_representation(RBRepresentation(bad_rep, R2, Matrix.zeros(2, 2)))
    bad_rb = RBOperator(DIM2, 0, Matrix([[1, 0], [0, 0]]))
    with pytest.raises(PrerequisiteFailed):
        check_rb_representation(RBRepresentation(adjoint_rep(DIM2), bad_rb, Matrix.zeros(2, 2)))


def test_direct_sum_examples():
    rr = adjoint_rb_rep(R2)
    assert direct_sum([rr]) == rr
    big = direct_sum([rr, rr])
    assert big.rep.dim_v == 4 and both_checks(big)
    z = RBRepresentation(zero_rep(DIM2, 3), R2, Matrix.zeros(3, 3))
    assert both_checks(direct_sum([rr, z]))
    other = adjoint_rb_rep(RBOperator(DIM2, 0, Matrix.zeros(2, 2)))
    with pytest.raises(MixedBase):
        direct_sum([rr, other])


def test_hat_rep_small_cases():
    rr = RBRepresentation(zero_rep(DIM2, 2), R2, Matrix.zeros(2, 2))
    assert all(m.is_zero() for m in hat_gl_rep(rr).rep.action)
    one = RBRepresentation(Representation(DIM2, 1, (Matrix([[0]]), Matrix([[0]]))),
                           RBOperator(DIM2, 3, Matrix.zeros(2, 2)), Matrix([[5]]))
    assert hat_gl_rep(one).t_op == Matrix([[-8]])
    with pytest.raises(ValueError):
        hat_gl_rep(rr, 2)


def test_hat_rep_sign_on_adjoint_and_shift_module():
    rr = adjoint_rb_rep(R2)
    assert both_checks(hat_gl_rep(rr, 1))
    # the adjoint action of e1*e1 = e2 is zero, so the sign cannot matter there
    assert check_representation(hat_gl_rep(rr, -1).rep)
    shift = catalog.get("dim2").representations["shift3"]
    srr = RBRepresentation(shift, R2, Matrix.zeros(3, 3))
    assert both_checks(srr)
    assert both_checks(hat_gl_rep(srr, 1))
    res = check_representation(hat_gl_rep(srr, -1).rep)
    assert not res and res.witness == (0, 0)


def test_dual_rep():
    rr = adjoint_rb_rep(R2)
    d = dual_rep(rr)
    assert d.t_op == -R2.op.T
    assert both_checks(d)
    with pytest.raises(NonzeroWeight):
        dual_rep(adjoint_rb_rep(RBOperator(DIM2, -1, Matrix.identity(2))))


def test_bar_rep_examples():
    zero = RBRepresentation(adjoint_rep(DIM2), RBOperator(DIM2, 0, Matrix.zeros(2, 2)), Matrix.zeros(2, 2))
    assert all(m.is_zero() for m in bar_rep(zero).rep.action)
    for rr in VALID:
        if rr.rep == adjoint_rep(rr.algebra) and rr.t_op == rr.rb.op:
            bar = bar_rep(rr)
            assert bar.rep == adjoint_rep(derived_algebra(rr.rb))


def test_tilde_rep_examples():
    zero = RBRepresentation(adjoint_rep(DIM2), RBOperator(DIM2, 5, Matrix.zeros(2, 2)), Matrix.zeros(2, 2))
    assert all(m.is_zero() for m in tilde_rep(zero).rep.action)
    ident = RBOperator(DIM3, -1, Matrix.identity(3))
    t = tilde_rep(RBRepresentation(adjoint_rep(DIM3), ident, Matrix.identity(3)))
    assert all(m.is_zero() for m in t.rep.action)
    rr = adjoint_rb_rep(R2)
    tr = tilde_rep(rr)
    assert tr.rep.action[0] == rr.rep.rho(R2.op.column(0)) - R2.op @ rr.rep.action[0]
    assert both_checks(tr)


def test_reflect_rep():
    rr = adjoint_rb_rep(RBOperator(DIM2, 1, Matrix([[1, 0], [0, Fraction(1, 3)]])))
    ref = reflect_rep(rr)
    assert both_checks(ref)
    assert reflect_rep(ref) == rr
    zero = RBRepresentation(adjoint_rep(DIM2), R2, Matrix.zeros(2, 2))
    assert reflect_rep(zero).t_op.is_zero()


def test_semidirect_product_examples():
    rb = R2
    empty = RBRepresentation(zero_rep(DIM2, 0), rb, Matrix.zeros(0, 0))
    semi0 = semidirect_product(empty)
    assert semi0.algebra == DIM2 and semi0.op == rb.op
    semi = semidirect_product(adjoint_rb_rep(rb))
    assert semi.algebra.dim == 4 and check_jj_axioms(semi.algebra).ok and check_rb(semi)
    bad = RBRepresentation(adjoint_rep(DIM2), rb, Matrix.identity(2))
    assert not check_rb(semidirect_product(bad))
    rep = semidirect_converse(bad)
    assert rep.consistent and not rep.rb_representation


def test_doubling_examples():
    d = doubling(DIM2, 1)
    assert check_jj_axioms(d).ok and d.dim == 4
    d0 = doubling(DIM2, 0)
    e1 = (1, 0, 0, 0)
    assert d0.multiply(e1, e1) == (0, 1, 0, 0)
    assert check_representation(doubled_rep(adjoint_rep(DIM2), 1))
    with pytest.raises(AxiomViolation):
        doubling(JJAlgebra.from_products(2, {(1, 1): {1: 1}}), 0)
    printed = check_jj_axioms(doubling_as_printed(DIM2, 1))
    assert not printed.commutative


def test_quadruple_examples():
    empty = zero_rep(DIM2, 0)
    assert quadruple_semidirect(empty, 2) == doubling(DIM2, 2)
    z = JJAlgebra.zero(2)
    assert quadruple_semidirect(zero_rep(z, 1), 1) == JJAlgebra.zero(6)
    q = quadruple_semidirect(adjoint_rep(DIM2), 1)
    assert q.dim == 8 and check_jj_axioms(q).ok
    with pytest.raises(AxiomViolation):
        quadruple_semidirect(Representation(DIM2, 2, (Matrix.identity(2), Matrix.zeros(2, 2))), 0)


def test_paired_examples():
    for a in ALGEBRAS:
        rep = adjoint_rep(a)
        n = a.dim
        rep1 = check_paired(rep, -1, Matrix.identity(n), Matrix.identity(n))
        assert rep1.paired and rep1.graph_subalgebra
        for lam in (0, 3):
            rep0 = check_paired(rep, lam, Matrix.zeros(n, n), Matrix.zeros(n, n))
            assert rep0.paired and rep0.graph_subalgebra
    bad = check_paired(adjoint_rep(DIM2), 0, R2.op, Matrix.identity(2))
    assert not bad.paired and not bad.graph_subalgebra and bad.rb_identity and not bad.compatibility
    with pytest.raises(PrerequisiteFailed):
        check_paired(Representation(DIM2, 2, (Matrix.identity(2), Matrix.zeros(2, 2))), 0, R2.op, R2.op)


def test_graph_subspace_is_subalgebra_for_valid_pair():
    rep = adjoint_rep(DIM2)
    g = graph_subspace(rep, R2.op, R2.op)
    assert g.dim == 4
    assert is_subalgebra(quadruple_semidirect(rep, 0), g)


@given(st.sampled_from(VALID))
def test_constructions_revalidate(rr):
    assert both_checks(rr)
    for out in (tilde_rep(rr), reflect_rep(rr), hat_gl_rep(rr, 1), direct_sum([rr, rr])):
        assert both_checks(out)
    bar = bar_rep(rr)
    assert both_checks(bar)
    for i in range(rr.algebra.dim):
        assert rr.t_op @ bar.rep.action[i] == rr.rep.rho(rr.rb.op.column(i)) @ rr.t_op
    if rr.weight == 0:
        assert both_checks(dual_rep(rr))
    assert semidirect_converse(rr).consistent
    assert check_rb(semidirect_product(rr))


@given(st.sampled_from(VALID), st.integers(0, 10 ** 6))
def test_paired_matches_both_identities_under_perturbation(rr, seed):
    import random
    rng = random.Random(seed)
    m = rr.rep.dim_v
    t = Matrix([[rr.t_op[i, j] + (rng.choice((0, 0, 1, -1)) if i == j else 0) for j in range(m)]
                for i in range(m)])
    report = check_paired(rr.rep, rr.weight, rr.rb.op, t)
    expected = bool(check_rb_representation(RBRepresentation(rr.rep, rr.rb, t)))
    assert report.paired == expected == report.graph_subalgebra

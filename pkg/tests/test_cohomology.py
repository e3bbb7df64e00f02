import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals, vectors
from jjrb import catalog
from jjrb.algebra import AlgebraMorphism
from jjrb.cohomology import (
    Cochain,
    RBCochain,
    ader_basis,
    cohomology_rb,
    d_n,
    d_rb,
    d_rb0_matrix,
    d_rb1_matrix,
    d_rb1_matrix_elementwise,
    d_tilde_n,
    delta_n,
    delta_rb,
    delta_rb0_matrix,
    differential_matrix,
    flatten_pair,
    innader_basis,
    inner_antiderivation,
    is_antiderivation,
    phi1,
    phi2,
    phi_matrix,
)
from jjrb.errors import PrerequisiteFailed, ShapeMismatch, UnsupportedDegree
from jjrb.linalg import Matrix, image_basis, kernel_basis, rref, unit_vec
from jjrb.representations import RBRepresentation, adjoint_rb_rep, adjoint_rep, tilde_rep
from jjrb.rota_baxter import RBOperator, conjugate_rb

DIM2 = catalog.get("dim2").algebra
CANT = adjoint_rb_rep(catalog.instantiate("dim2", "zero-weight-cant", {"b": 1, "d": 1}))
DIM3_H1 = adjoint_rb_rep(catalog.instantiate(
    "dim3", "main", {"lambda": 1, "r11": 1, "r12": 1, "r31": 0, "r32": 0}))
VALID = [rr for _, rr in catalog.standard_rb_representations()]
SMALL = [rr for rr in VALID if rr.algebra.dim * rr.rep.dim_v <= 9]


# an independent evaluation of the differentials on arbitrary (non-basis) arguments

def evaluate(f: Cochain, xs):
    total = [Fraction(0)] * f.value_dim
    for idx in itertools.product(range(f.algebra_dim), repeat=f.degree):
        w = Fraction(1)
        for x, i in zip(xs, idx):
            w *= x[i]
        if w:
            total = [t + w * v for t, v in zip(total, f.value(idx))]
    return tuple(total)


def oracle_differential(rep, f, xs, sign):
    a = rep.algebra
    out = [Fraction(0)] * rep.dim_v
    for i in range(len(xs)):
        val = rep.rho(xs[i]) @ evaluate(f, xs[:i] + xs[i + 1:])
        out = [o + v for o, v in zip(out, val)]
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            rest = [x for k, x in enumerate(xs) if k not in (i, j)]
            val = evaluate(f, [a.multiply(xs[i], xs[j])] + rest)
            out = [o + sign * v for o, v in zip(out, val)]
    return tuple(out)


@st.composite
def cochain_case(draw, max_degree=2):
    rr = draw(st.sampled_from(SMALL))
    deg = draw(st.integers(0, max_degree))
    n, m = rr.algebra.dim, rr.rep.dim_v
    coeffs = draw(vectors(Cochain.size(deg, n, m), st.sampled_from([0, 0, 1, -1, 2]).map(Fraction)))
    xs = [draw(vectors(n)) for _ in range(deg + 1)]
    return rr, Cochain(deg, n, m, coeffs), xs


@given(cochain_case())
def test_differentials_match_direct_evaluation(case):
    rr, f, xs = case
    assert evaluate(d_n(rr.rep, f), xs) == oracle_differential(rr.rep, f, xs, 1)
    assert evaluate(delta_n(rr.rep, f), xs) == oracle_differential(rr.rep, f, xs, -1)
    trep = tilde_rep(rr).rep
    assert evaluate(d_tilde_n(rr, f), xs) == oracle_differential(trep, f, xs, 1)


@given(st.sampled_from(SMALL))
def test_low_degree_complex_identities(rr):
    rep, trep = rr.rep, tilde_rep(rr).rep
    assert (differential_matrix(rep, 1, 1) @ differential_matrix(rep, 0, -1)).is_zero()
    assert (differential_matrix(trep, 1, 1) @ differential_matrix(trep, 0, -1)).is_zero()
    lhs = differential_matrix(trep, 0, 1) @ phi_matrix(rr, 0, 2)
    rhs = phi_matrix(rr, 1, 1) @ differential_matrix(rep, 0, -1)
    assert lhs == rhs and lhs.shape == (rr.algebra.dim * rep.dim_v, rep.dim_v)
    assert (d_rb1_matrix(rr) @ delta_rb0_matrix(rr)).is_zero()


@given(st.sampled_from(SMALL))
def test_blockwise_and_elementwise_assembly_agree(rr):
    n, m = rr.algebra.dim, rr.rep.dim_v
    blk = d_rb1_matrix(rr)
    assert blk == d_rb1_matrix_elementwise(rr)
    assert blk.shape == (n * n * m + n * m, n * m + m)


def test_zero_data_gives_zero_maps():
    rr = RBRepresentation(adjoint_rep(DIM2), RBOperator(DIM2, 0, Matrix.zeros(2, 2)), Matrix.zeros(2, 2))
    assert d_tilde_n(rr, Cochain.from_vector(2, (1, 1))).coeffs == (0,) * 4
    assert delta_rb(rr, (0, 0)).flat() == (0,) * 6
    assert d_rb(rr, (0, 0)).flat() == (0,) * 6


def test_phi_maps():
    v = Cochain.from_vector(2, (3, 4))
    assert phi1(CANT, v) == v and phi2(CANT, v) == v
    rr = RBRepresentation(adjoint_rep(DIM2), RBOperator(DIM2, -1, Matrix.identity(2)), Matrix.zeros(2, 2))
    f = Cochain.from_matrix(Matrix([[1, 2], [3, 4]]))
    assert phi1(rr, f) == f and phi2(rr, f) == f
    with pytest.raises(UnsupportedDegree):
        phi1(CANT, Cochain.zero(2, 2, 2))


def test_delta_rb0_on_basis_vectors():
    # adjoint action: e1*e1 = e2 and every other product vanishes
    first = delta_rb(CANT, (1, 0))
    assert first.f.to_matrix() == Matrix([[0, 0], [1, 0]]) and first.g == (-1, 0)
    second = delta_rb(CANT, (0, 1))
    assert second.f.to_matrix().is_zero() and second.g == (0, -1)


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        Cochain(1, 2, 2, (1, 2, 3))
    with pytest.raises(ShapeMismatch):
        d_n(CANT.rep, Cochain.zero(1, 3, 2))
    with pytest.raises(ShapeMismatch):
        RBCochain.from_flat(2, 2, (0,) * 5)
    with pytest.raises(ShapeMismatch):
        is_antiderivation(CANT, Matrix.identity(3), (0, 0))


def test_two_dimensional_instance():
    rep = cohomology_rb(CANT, 1)
    assert (rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology) == (3, 2, 1)
    assert kernel_basis(d_rb1_matrix(CANT)).dim == 3
    assert image_basis(delta_rb0_matrix(CANT)).dim == 2
    # the antiderivation system restricted to its six unknowns
    system = Matrix([r for r in d_rb1_matrix(CANT).to_rows() if any(r)])
    assert rref(system)[1] == 3
    eta = Matrix([[1, 0], [0, -2]])
    assert is_antiderivation(CANT, eta, (-3, 0))
    assert not is_antiderivation(CANT, eta, (3, 0))
    assert rep.is_nontrivial_class(flatten_pair(eta, (-3, 0)))
    assert not rep.is_cocycle(flatten_pair(eta, (3, 0)))


@given(st.sampled_from([-2, -1, 1, 2, 3]).map(Fraction), st.sampled_from([-2, -1, 1, 3]).map(Fraction))
def test_two_dimensional_family_has_one_dimensional_h1(b, d):
    rr = adjoint_rb_rep(catalog.instantiate("dim2", "zero-weight-cant", {"b": b, "d": d}))
    rep = cohomology_rb(rr, 1)
    assert (rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology) == (3, 2, 1)
    a11, a21 = Fraction(1), Fraction(5)
    eta = Matrix([[a11, 0], [a21, -2 * a11]])
    assert is_antiderivation(rr, eta, (-a21 - 3 * a11 * b / d, 0))


def test_three_dimensional_instance():
    rep = cohomology_rb(DIM3_H1, 1)
    assert (rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology) == (4, 3, 1)
    assert ader_basis(DIM3_H1).dim == 4 and innader_basis(DIM3_H1).dim == 3
    assert cohomology_rb(DIM3_H1, 0).dim_cohomology == 0


def test_degree_zero_vanishes_everywhere():
    for rr in VALID:
        rep = cohomology_rb(rr, 0)
        assert rep.dim_cocycles == 0 and rep.dim_cohomology == 0
        assert kernel_basis(d_rb0_matrix(rr)).dim == 0


def test_unsupported_degree_and_invalid_input():
    with pytest.raises(UnsupportedDegree):
        cohomology_rb(CANT, 2)
    bad = RBRepresentation(CANT.rep, CANT.rb, Matrix.identity(2))
    with pytest.raises(PrerequisiteFailed):
        cohomology_rb(bad, 1)


def test_inner_antiderivations():
    rr = RBRepresentation(adjoint_rep(DIM2), CANT.rb, CANT.t_op)
    d, w = inner_antiderivation(rr, (1, 0))
    assert d == Matrix([[0, 0], [1, 0]]) and w == (-1, 0)
    assert inner_antiderivation(rr, (0, 0)) == (Matrix.zeros(2, 2), (0, 0))
    d3, _ = inner_antiderivation(DIM3_H1, (1, 2, 3))
    assert d3 == adjoint_rep(DIM3_H1.algebra).rho((1, 2, 3))


def test_ader_of_trivial_module_is_everything():
    from jjrb.algebra import JJAlgebra
    from jjrb.representations import zero_rep
    a = JJAlgebra.zero(1)
    rr = RBRepresentation(zero_rep(a, 1), RBOperator(a, 0, Matrix.zeros(1, 1)), Matrix.zeros(1, 1))
    assert ader_basis(rr).dim == 2


@given(st.sampled_from(SMALL), st.data())
def test_antiderivation_iff_cocycle(rr, data):
    n, m = rr.algebra.dim, rr.rep.dim_v
    z = ader_basis(rr)
    coeffs = data.draw(st.lists(st.sampled_from([0, 1, -1, 2]), min_size=z.dim, max_size=z.dim))
    vec = [sum(c * b[k] for c, b in zip(coeffs, z.vectors)) for k in range(n * m + m)]
    if data.draw(st.booleans()):
        vec[data.draw(st.integers(0, n * m + m - 1))] += data.draw(rationals)
    c = RBCochain.from_flat(n, m, vec)
    assert is_antiderivation(rr, c.f.to_matrix(), c.g) == z.contains(vec)


@given(st.sampled_from(SMALL), st.data())
def test_inner_antiderivations_are_coboundaries(rr, data):
    v = data.draw(vectors(rr.rep.dim_v))
    d, w = inner_antiderivation(rr, v)
    assert is_antiderivation(rr, d, w)
    assert innader_basis(rr).contains(flatten_pair(d, w))
    assert delta_rb(rr, v).flat() == flatten_pair(d, w)


@given(st.sampled_from([Fraction(1), Fraction(-2), Fraction(1, 3)]))
def test_h1_dimension_invariant_under_conjugation(t):
    psi = AlgebraMorphism(DIM2, DIM2, Matrix([[1, 0], [t, 1]]))
    conj = adjoint_rb_rep(conjugate_rb(CANT.rb, psi))
    assert cohomology_rb(conj, 1).dim_cohomology == cohomology_rb(CANT, 1).dim_cohomology


def test_rb_differential_degree_one_layout():
    n, m = 2, 2
    for j in range(n * m + m):
        e = unit_vec(n * m + m, j)
        first, second = d_rb(CANT, RBCochain.from_flat(n, m, e))
        assert first.coeffs + second.coeffs == d_rb1_matrix(CANT).column(j)
    assert d_rb0_matrix(CANT).shape == (n * m + m, m)

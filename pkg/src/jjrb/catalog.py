"""
Built-in algebras with parametric Rota-Baxter operator families.

Each family stores its operator as a matrix of rational functions in named
parameters (columns are images of basis vectors).  The weight is either a
fixed rational or the parameter ``lambda``.  A family is excluded wherever
one of its ``nonzero`` polynomials vanishes.

Families tagged ``source="displayed"`` are recorded exactly as they are
usually stated for these algebras; ``source="corrected"`` families replace
displayed ones that fail the Rota-Baxter identity on part of their
parameter space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import JJAlgebra
from .errors import ExcludedParameters, UnknownId
from .linalg import Matrix, Q
from .polynomial import Poly, RationalFunction
from .representations import RBRepresentation, Representation, adjoint_rb_rep
from .rota_baxter import RBOperator, unknown

SAMPLE_VALUES = (Fraction(-2), Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3))
WEIGHT = "lambda"


@dataclass(frozen=True)
class Family:
    name: str
    weight: object  # Fraction, or the parameter name WEIGHT
    params: tuple
    entries: tuple  # rows of RationalFunction
    nonzero: tuple = ()
    excluded_text: str = ""
    source: str = "displayed"

    def weight_value(self, values: Mapping[str, Fraction]) -> Fraction:
        return values[WEIGHT] if self.weight == WEIGHT else Q(self.weight)

    def excluded(self, values: Mapping[str, Fraction]) -> bool:
        return any(p.evaluate(values) == 0 for p in self.nonzero)

    def matrix(self, values: Mapping[str, Fraction]) -> Matrix:
        return Matrix([[e.evaluate(values) for e in row] for row in self.entries])


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    algebra: JJAlgebra
    families: tuple
    expected: dict = field(default_factory=dict)
    displayed_system: tuple = ()
    generated_families: tuple = ()
    representations: dict = field(default_factory=dict)
    system_weight: object = None  # weight the displayed system is stated for, if fixed

    def family(self, name: str) -> Family:
        for f in self.families:
            if f.name == name:
                return f
        raise UnknownId(f"entry {self.id!r} has no family {name!r}")


# -- helpers for writing families ----------------------------------------------


def _p(name):
    return Poly.var(name)


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return RationalFunction(_p(x))
    return RationalFunction(x)


def _mat(rows):
    return tuple(tuple(_rf(x) for x in row) for row in rows)


def _x(r, c):
    return _p(unknown(r, c))


LAM = _p(WEIGHT)


def _dim2() -> CatalogEntry:
    a = JJAlgebra.from_products(2, {(0, 0): {1: 1}})
    a1 = _p("a1")
    fams = (
        Family("zero-weight-A", Fraction(0), ("a2", "b2"), _mat([[0, 0], ["a2", "b2"]])),
        Family("zero-weight-B", Fraction(0), ("a1", "a2"),
               _mat([[RationalFunction(2 * a1), 0], ["a2", "a1"]]), (a1,), "a1 = 0"),
        Family("lambda-family", WEIGHT, (WEIGHT, "a1", "a2"),
               _mat([["a1", 0], ["a2", RationalFunction(a1 * a1, 2 * a1 + LAM)]]),
               (2 * a1 + LAM,), "2*a1 + lambda = 0"),
        Family("zero-weight-cant", Fraction(0), ("b", "d"), _mat([[0, 0], ["b", "d"]]),
               (_p("d"),), "d = 0"),
    )
    x00, x01, x11 = _x(0, 0), _x(0, 1), _x(1, 1)
    shown = (
        (2 * x00 + LAM) * x01,
        x00 * x00 - (2 * x00 + LAM) * x11,
        x00 * x01 - x01 * x11,
        x01,
    )
    # a faithful module on which rho(A*A) != 0: rho(e1) = J (nilpotent shift), rho(e2) = -2 J^2
    j = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    shift = Representation(a, 3, (j, (j @ j).scale(-2)))
    expected = {
        "h1_instance": ("zero-weight-cant", {"b": Fraction(1), "d": Fraction(1)}),
        "dim_cocycles": 3,
        "dim_coboundaries": 2,
        "dim_cohomology": 1,
        "displayed_ader_dim": 5,
        "displayed_representative": (Matrix([[1, 0], [0, -2]]), (Fraction(3), Fraction(0))),
        "corrected_representative": (Matrix([[1, 0], [0, -2]]), (Fraction(-3), Fraction(0))),
    }
    return CatalogEntry("dim2", "e1*e1 = e2", a, fams, expected, shown,
                        ("zero-weight-A", "zero-weight-B", "lambda-family"), {"shift3": shift})


def _dim4_g() -> CatalogEntry:
    a = JJAlgebra.from_products(4, {(0, 0): {1: 1}})
    a1 = _p("a1")
    half_sq = RationalFunction(a1 * a1, Poly.const(2))
    lam_sq = RationalFunction(a1 * a1, 2 * a1 + LAM)
    half = RationalFunction(a1, Poly.const(2))
    free = ["a2", "a3", "a4", "b2", "b3", "b4", "c2", "c3", "c4", "d2", "d3", "d4"]
    fams = (
        Family("zero-weight-A", Fraction(0), tuple(free),
               _mat([[0, 0, 0, 0], ["a2", "b2", "c2", "d2"], ["a3", "b3", "c3", "d3"],
                     ["a4", "b4", "c4", "d4"]])),
        Family("zero-weight-B", Fraction(0),
               ("a1", "a2", "a3", "a4", "b3", "c2", "c3", "c4", "d2", "d3", "d4"),
               _mat([["a1", 0, 0, 0], ["a2", half_sq, "c2", "d2"], ["a3", "b3", "c3", "d3"],
                     ["a4", "b3", "c4", "d4"]]), (a1,), "a1 = 0"),
        Family("lambda-family", WEIGHT,
               (WEIGHT, "a1", "a2", "a3", "a4", "b3", "c2", "c3", "c4", "d2", "d3", "d4"),
               _mat([["a1", 0, 0, 0], ["a2", lam_sq, "c2", "d2"], ["a3", "b3", "c3", "d3"],
                     ["a4", "b3", "c4", "d4"]]), (2 * a1 + LAM,), "2*a1 + lambda = 0"),
        Family("zero-weight-B-corrected", Fraction(0),
               ("a1", "a2", "a3", "a4", "c2", "c3", "c4", "d2", "d3", "d4"),
               _mat([["a1", 0, 0, 0], ["a2", half, "c2", "d2"], ["a3", 0, "c3", "d3"],
                     ["a4", 0, "c4", "d4"]]), (a1,), "a1 = 0", source="corrected"),
        Family("lambda-family-corrected", WEIGHT,
               (WEIGHT, "a1", "a2", "a3", "a4", "c2", "c3", "c4", "d2", "d3", "d4"),
               _mat([["a1", 0, 0, 0], ["a2", lam_sq, "c2", "d2"], ["a3", 0, "c3", "d3"],
                     ["a4", 0, "c4", "d4"]]), (2 * a1 + LAM,), "2*a1 + lambda = 0",
               source="corrected"),
    )
    x = _x
    shown = (
        x(0, 1), x(0, 2), x(0, 3),
        x(0, 0) * x(0, 0) - (2 * x(0, 0) + LAM) * x(1, 1),
        (2 * x(0, 0) + LAM) * (x(2, 1) - x(3, 1)),
    )
    return CatalogEntry("dim4-G", "e1*e1 = e2 in dimension 4", a, fams, {}, shown,
                        ("zero-weight-A", "zero-weight-B-corrected", "lambda-family-corrected"))


def _dim4_h() -> CatalogEntry:
    a = JJAlgebra.from_products(4, {(0, 0): {1: 1}, (2, 2): {1: 1}})
    b2, b4 = _p("b2"), _p("b4")
    fams = (
        Family("zero-weight-A", Fraction(0), ("a2", "a4", "b4", "c2", "c4", "d2", "d4"),
               _mat([[0, 0, 0, 0], ["a2", 0, "c2", "d2"], [0, 0, 0, 0], ["a4", "b4", "c4", "d4"]])),
        Family("zero-weight-B", Fraction(0), ("a2", "a4", "b2", "b4", "c2", "c4", "d2", "d4"),
               _mat([[0, 0, 0, 0], ["a2", "b2", "c2", "d2"], [0, 0, 0, 0], ["a4", "b4", "c4", "d4"]]),
               (b2 * b4,), "b2*b4 = 0"),
    )
    x = _x
    a1, a3, c1, c3, bb2, bb4 = x(0, 0), x(2, 0), x(0, 2), x(2, 2), x(1, 1), x(3, 1)
    shown = (
        x(0, 1), x(2, 1), x(0, 3), x(2, 3),
        a1 * bb4, c3 * bb4, (c1 + a3) * bb4,
        a1 * a1 + a3 * a3 - 2 * a1 * bb2,
        c1 * c1 + c3 * c3 - 2 * c3 * bb2,
        a1 * c1 + a3 * c3 - bb2 * (c1 + a3),
    )
    return CatalogEntry("dim4-H", "e1*e1 = e2, e3*e3 = e2", a, fams, {}, shown, (),
                        system_weight=Fraction(0))


def _dim3() -> CatalogEntry:
    a = JJAlgebra.from_products(3, {(0, 1): {2: 1}})
    r11, r12 = _p("r11"), _p("r12")
    fams = (
        Family("main", WEIGHT, (WEIGHT, "r11", "r12", "r31", "r32"),
               _mat([["r11", "r12", 0],
                     [RationalFunction((LAM + r11) * r11, r12), "r11", 0],
                     ["r31", "r32", "r11"]]),
               (r12, r11, r11 + LAM), "r12 = 0 or r11 = 0 or r11 + lambda = 0"),
    )
    x = _x
    shown = (
        x(0, 2), x(1, 2),
        x(0, 0) * x(1, 0) - x(1, 0) * x(2, 2),
        x(0, 1) * x(1, 1) - x(0, 1) * x(2, 2),
        (x(1, 1) + x(0, 0) + LAM) * x(2, 2) - x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0),
    )
    expected = {
        "h1_instance": ("main", {WEIGHT: Fraction(1), "r11": Fraction(1), "r12": Fraction(1),
                                 "r31": Fraction(0), "r32": Fraction(0)}),
        "dim_cocycles": 4,
        "dim_coboundaries": 3,
        "dim_cohomology": 1,
    }
    return CatalogEntry("dim3", "e1*e2 = e3", a, fams, expected, shown, ())


_ENTRIES = {e.id: e for e in (_dim2(), _dim4_g(), _dim4_h(), _dim3())}


# -- public API ----------------------------------------------------------------


def list_entries() -> list[CatalogEntry]:
    return list(_ENTRIES.values())


def get(entry_id: str) -> CatalogEntry:
    try:
        return _ENTRIES[entry_id]
    except KeyError:
        raise UnknownId(f"no catalog entry {entry_id!r}") from None


def resolve_params(fam: Family, params: Mapping[str, object]) -> dict[str, Fraction]:
    """Unlisted parameters default to 0; unknown names are rejected."""
    unknown_names = set(params) - set(fam.params)
    if unknown_names:
        raise UnknownId(f"family {fam.name!r} has no parameter(s) {sorted(unknown_names)}")
    return {p: Q(params.get(p, 0)) for p in fam.params}


def instantiate(entry_id: str, family: str, params: Mapping[str, object]) -> RBOperator:
    """Concrete operator of a family.

    Raises ExcludedParameters on the excluded locus.  The operator is not
    re-checked here; displayed families are instantiated as recorded.
    """
    entry = get(entry_id)
    fam = entry.family(family)
    values = resolve_params(fam, params)
    if fam.excluded(values):
        raise ExcludedParameters(f"{entry_id}/{family}: excluded where {fam.excluded_text}")
    return RBOperator(entry.algebra, fam.weight_value(values), fam.matrix(values))


def samples(entry_id: str, family: str, count: int = 10) -> list[dict[str, Fraction]]:
    """``count`` deterministic parameter points off the excluded locus."""
    fam = get(entry_id).family(family)
    rng = random.Random(f"{entry_id}/{family}")
    out = []
    while len(out) < count:
        values = {p: rng.choice(SAMPLE_VALUES) for p in fam.params}
        if not fam.excluded(values):
            out.append(values)
    return out


def standard_instances() -> list[tuple[str, RBOperator]]:
    """One or two concrete operators per family, used as the fixed instance set."""
    out = []
    for entry in list_entries():
        for fam in entry.families:
            for k, values in enumerate(samples(entry.id, fam.name, 2)):
                out.append((f"{entry.id}/{fam.name}#{k}", instantiate(entry.id, fam.name, values)))
    for entry in list_entries():
        if "h1_instance" in entry.expected:
            fam, values = entry.expected["h1_instance"]
            out.append((f"{entry.id}/{fam}@expected", instantiate(entry.id, fam, values)))
    return out


def standard_rb_representations() -> list[tuple[str, RBRepresentation]]:
    """Adjoint RB representations of every valid standard instance, plus the
    extra modules of each entry paired with ``T = 0``."""
    from .rota_baxter import check_rb

    out = []
    for label, r in standard_instances():
        if not check_rb(r):
            continue
        out.append((label + "/adjoint", adjoint_rb_rep(r)))
        entry = next(e for e in list_entries() if e.algebra == r.algebra)
        for name, rep in entry.representations.items():
            out.append((f"{label}/{name}", RBRepresentation(rep, r, Matrix.zeros(rep.dim_v, rep.dim_v))))
    return out


def flat_values(op: Matrix) -> dict[str, Fraction]:
    """``x_{r,c}`` assignment read off a concrete operator."""
    n = op.rows
    return {unknown(r, c): op[r, c] for r in range(n) for c in range(n)}


def system_assignments(entry_id: str, count: int = 20) -> list[tuple[Fraction, dict[str, Fraction]]]:
    """Deterministic ``(weight, x-assignment)`` points for comparing two systems.

    Points cycle through: a displayed family, a family from the generated
    side, and a generic point.  Family points lie on a variety, so both
    vanishing and non-vanishing cases are exercised.
    """
    entry = get(entry_id)
    rng = random.Random(f"{entry_id}/system")
    n = entry.algebra.dim
    displayed = [f for f in entry.families if f.source == "displayed"]
    generated = [entry.family(name) for name in entry.generated_families] or displayed
    out = []
    for k in range(count):
        kind = k % 3
        if kind == 2:
            weight = rng.choice((Fraction(0),) + SAMPLE_VALUES)
            if entry.system_weight is not None:
                weight = Q(entry.system_weight)
            values = {unknown(r, c): rng.choice((Fraction(0),) + SAMPLE_VALUES)
                      for r in range(n) for c in range(n)}
            out.append((weight, values))
            continue
        pool = displayed if kind == 0 else generated
        fam = pool[(k // 3) % len(pool)]
        params = samples_from(rng, fam)
        out.append((fam.weight_value(params), flat_values(fam.matrix(params))))
    return out


def samples_from(rng: random.Random, fam: Family) -> dict[str, Fraction]:
    while True:
        values = {p: rng.choice(SAMPLE_VALUES) for p in fam.params}
        if not fam.excluded(values):
            return values

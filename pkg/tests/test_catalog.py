from fractions import Fraction

import pytest

from jjrb import catalog
from jjrb.algebra import check_jj_axioms
from jjrb.errors import ExcludedParameters, UnknownId
from jjrb.linalg import Matrix
from jjrb.representations import check_representation
from jjrb.rota_baxter import check_rb, eval_constraints, rb_constraint_system


def test_entries_and_lookup():
    ids = [e.id for e in catalog.list_entries()]
    assert ids == ["dim2", "dim4-G", "dim4-H", "dim3"]
    with pytest.raises(UnknownId):
        catalog.get("dim5")
    with pytest.raises(UnknownId):
        catalog.get("dim2").family("nope")


def test_algebras_and_modules_are_valid():
    for e in catalog.list_entries():
        assert check_jj_axioms(e.algebra).ok
        for rep in e.representations.values():
            assert check_representation(rep)


def test_instantiate_and_defaults():
    r = catalog.instantiate("dim2", "zero-weight-A", {"a2": 1, "b2": 2})
    assert r.op == Matrix([[0, 0], [1, 2]]) and r.weight == 0
    r = catalog.instantiate("dim2", "lambda-family", {"lambda": 1, "a1": 1})
    assert r.op == Matrix([[1, 0], [0, Fraction(1, 3)]]) and r.weight == 1
    with pytest.raises(UnknownId):
        catalog.instantiate("dim2", "zero-weight-A", {"zz": 1})


def test_excluded_loci():
    with pytest.raises(ExcludedParameters):
        catalog.instantiate("dim2", "lambda-family", {"lambda": 2, "a1": -1})
    with pytest.raises(ExcludedParameters):
        catalog.instantiate("dim2", "zero-weight-B", {"a1": 0})
    with pytest.raises(ExcludedParameters):
        catalog.instantiate("dim3", "main", {"lambda": 1, "r11": -1, "r12": 1})
    with pytest.raises(ExcludedParameters):
        catalog.instantiate("dim3", "main", {"lambda": 1, "r11": 1, "r12": 0})


def test_samples_are_deterministic_and_avoid_exclusions():
    for e in catalog.list_entries():
        for f in e.families:
            first = catalog.samples(e.id, f.name)
            assert first == catalog.samples(e.id, f.name) and len(first) == 10
            assert not any(f.excluded(v) for v in first)


def test_recorded_families_against_constraint_system():
    """Every family except the two displayed G families with a1 != 0 satisfies the system."""
    known_bad = {("dim4-G", "zero-weight-B"), ("dim4-G", "lambda-family")}
    for e in catalog.list_entries():
        for f in e.families:
            results = []
            for v in catalog.samples(e.id, f.name):
                r = catalog.instantiate(e.id, f.name, v)
                by_system = not any(eval_constraints(rb_constraint_system(e.algebra, r.weight), r.op.entries()))
                assert by_system == bool(check_rb(r))
                results.append(by_system)
            assert all(results) == ((e.id, f.name) not in known_bad)


def test_corrected_g_family_values():
    r = catalog.instantiate("dim4-G", "zero-weight-B-corrected", {"a1": 2, "a2": 1})
    assert r.op[1, 1] == 1 and check_rb(r)
    r = catalog.instantiate("dim4-G", "zero-weight-B", {"a1": 2, "b3": 0})
    # b2 recorded as a1^2/2 instead of a1/2
    assert r.op[1, 1] == 2 and not check_rb(r)


def test_h1_instances_and_standard_sets():
    labels = [label for label, _ in catalog.standard_instances()]
    assert "dim2/zero-weight-cant@expected" in labels and "dim3/main@expected" in labels
    reps = catalog.standard_rb_representations()
    assert any(label.endswith("/shift3") for label, _ in reps)
    assert all(check_rb(rr.rb) for _, rr in reps)


def test_flat_values_layout():
    vals = catalog.flat_values(Matrix([[1, 2], [3, 4]]))
    assert vals == {"x_{0,0}": 1, "x_{0,1}": 2, "x_{1,0}": 3, "x_{1,1}": 4}


def test_system_assignments_deterministic():
    assert catalog.system_assignments("dim2") == catalog.system_assignments("dim2")
    assert len(catalog.system_assignments("dim4-G", 20)) == 20

"""
Reproduction suite over the catalog.

Each claim either holds (PASS) or does not.  A claim that is known to be
misstated in its usual form is marked ``known_discrepancy``; when it does
not hold it is reported as FLAGGED rather than FAIL, and a corrected
companion claim is reported next to it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import check_jj_axioms
from .catalog import (
    SAMPLE_VALUES,
    WEIGHT,
    CatalogEntry,
    get,
    instantiate,
    list_entries,
    samples,
    standard_rb_representations,
    system_assignments,
)
from .cohomology import (
    cohomology_rb,
    d_rb1_matrix,
    delta_rb0_matrix,
    differential_matrix,
    flatten_pair,
    is_antiderivation,
    phi_matrix,
)
from .errors import PrerequisiteFailed
from .linalg import Matrix, format_rational
from .polynomial import Poly
from .representations import (
    RBRepresentation,
    adjoint_rb_rep,
    bar_rep,
    check_paired,
    check_rb_representation,
    check_representation,
    direct_sum,
    doubled_rep,
    doubling,
    doubling_as_printed,
    dual_rep,
    hat_gl_rep,
    quadruple_semidirect,
    reflect_rep,
    semidirect_converse,
    semidirect_product,
    tilde_rep,
    zero_rep,
)
from .rota_baxter import RBOperator, check_rb, derived_algebra, rb_constraint_system, unknown

PASS, FAIL, FLAGGED = "PASS", "FAIL", "FLAGGED"


@dataclass(frozen=True)
class Claim:
    claim: str
    ref: str
    holds: bool
    witness: object = None
    known_discrepancy: bool = False

    @property
    def status(self) -> str:
        if self.holds:
            return PASS
        return FLAGGED if self.known_discrepancy else FAIL

    def to_json(self) -> dict:
        out = {"claim": self.claim, "paper_ref": self.ref, "status": self.status}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Matrix):
        return x.to_strings()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# -- cohomology claims ---------------------------------------------------------


def _h1_instance(entry: CatalogEntry) -> RBRepresentation:
    fam, values = entry.expected["h1_instance"]
    return adjoint_rb_rep(instantiate(entry.id, fam, values))


def cohomology_claims() -> list[Claim]:
    out = []
    bad = []
    for label, rr in standard_rb_representations():
        rep = cohomology_rb(rr, 0)
        if rep.dim_cohomology != 0 or rep.dim_cocycles != 0:
            bad.append(label)
    out.append(Claim("H0_RB = 0 on every catalog instance", "rb-cohomology degree 0", not bad,
                     {"failing": bad} if bad else None))

    for entry_id in ("dim2", "dim3"):
        entry = get(entry_id)
        exp = entry.expected
        rep = cohomology_rb(_h1_instance(entry), 1)
        got = (rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology)
        want = (exp["dim_cocycles"], exp["dim_coboundaries"], exp["dim_cohomology"])
        out.append(Claim(f"{entry_id}: dim ADer = {want[0]}, dim InnADer = {want[1]}, dim H1_RB = {want[2]}",
                         "rb-cohomology degree 1", got == want,
                         None if got == want else {"computed": list(got)}))

    entry = get("dim2")
    rr = _h1_instance(entry)
    rep = cohomology_rb(rr, 1)
    stated = entry.expected["displayed_ader_dim"]
    out.append(Claim(f"dim2: dim ADer = {stated} as stated", "antiderivation space dimension",
                     rep.dim_cocycles == stated, {"stated": stated, "computed": rep.dim_cocycles},
                     known_discrepancy=True))
    for key, label, flagged in (("displayed_representative", "displayed", True),
                                ("corrected_representative", "sign-corrected", False)):
        eta, v = entry.expected[key]
        coords = flatten_pair(eta, v)
        ok = rep.is_nontrivial_class(coords)
        out.append(Claim(f"dim2: {label} representative (diag(1,-2), ({format_rational(v[0])},0)) "
                         "is a cocycle outside the coboundaries",
                         "first cohomology representative", ok,
                         None if ok else {"is_cocycle": rep.is_cocycle(coords),
                                          "is_antiderivation": is_antiderivation(rr, eta, v)},
                         known_discrepancy=flagged))
    return out


def _dim2_family_holds(sign: int):
    """Antiderivations ``(delta, x)`` of ``I = [[0,0],[b,d]]`` with
    ``x1 = -a21 + sign*3*a11*b/d``, sampled deterministically."""
    rng = random.Random("dim2/antiderivations")
    for _ in range(12):
        b, d = rng.choice(SAMPLE_VALUES), rng.choice(SAMPLE_VALUES)
        a11, a21, x2 = (rng.choice(SAMPLE_VALUES) for _ in range(3))
        rr = adjoint_rb_rep(instantiate("dim2", "zero-weight-cant", {"b": b, "d": d}))
        eta = Matrix([[a11, 0], [a21, -2 * a11]])
        x = (-a21 + sign * 3 * a11 * b / d, x2)
        if not is_antiderivation(rr, eta, x):
            return False, {"b": b, "d": d, "a11": a11, "a21": a21, "x2": x2}
    return True, None


def _dim3_family_holds():
    rng = random.Random("dim3/antiderivations")
    for _ in range(12):
        params = next(iter(samples_rng(rng, "dim3", "main")))
        lam, r11, r12, r31, r32 = (params[k] for k in (WEIGHT, "r11", "r12", "r31", "r32"))
        rr = adjoint_rb_rep(instantiate("dim3", "main", params))
        d11, d31, d32, x3 = (rng.choice(SAMPLE_VALUES) for _ in range(4))
        eta = Matrix([[d11, 0, 0], [0, d11, 0], [d31, d32, -2 * d11]])
        alpha = -d32 + 3 * d11 * r12 * r31 / (r11 * (r11 + lam))
        beta = -d31 + 3 * d11 * r32 / r12
        if not is_antiderivation(rr, eta, (alpha, beta, x3)):
            return False, dict(params, d11=d11, d31=d31, d32=d32)
    return True, None


def samples_rng(rng: random.Random, entry_id: str, family: str):
    fam = get(entry_id).family(family)
    while True:
        values = {p: rng.choice(SAMPLE_VALUES) for p in fam.params}
        if not fam.excluded(values):
            yield values


def antiderivation_claims() -> list[Claim]:
    shown, w1 = _dim2_family_holds(+1)
    fixed, w2 = _dim2_family_holds(-1)
    dim3, w3 = _dim3_family_holds()
    return [
        Claim("dim2: antiderivations have x1 = -a21 + 3*a11*b/d", "antiderivation family", shown, w1,
              known_discrepancy=True),
        Claim("dim2: antiderivations have x1 = -a21 - 3*a11*b/d", "antiderivation family", fixed, w2),
        Claim("dim3: antiderivations (diag(d11,d11,-2d11) + d31,d32 entries, alpha, beta, x3)",
              "antiderivation family", dim3, w3),
    ]


# -- operator families and constraint systems ----------------------------------


def family_claims() -> list[Claim]:
    out = []
    for entry in list_entries():
        for fam in entry.families:
            witness = None
            for values in samples(entry.id, fam.name, 10):
                res = check_rb(instantiate(entry.id, fam.name, values))
                if not res:
                    witness = {"params": values, "basis_pair": [i + 1 for i in res.witness]}
                    break
            flagged = entry.id == "dim4-G" and fam.source == "displayed" and fam.name != "zero-weight-A"
            out.append(Claim(f"{entry.id}/{fam.name} ({fam.source}): check_rb on 10 samples",
                             "rota-baxter identity", witness is None, witness, known_discrepancy=flagged))
    return out


def systems_agree(entry: CatalogEntry, displayed) -> tuple[bool, object]:
    cache = {}
    for weight, xv in system_assignments(entry.id, 20):
        if weight not in cache:
            cache[weight] = rb_constraint_system(entry.algebra, weight)
        values = dict(xv)
        values[WEIGHT] = weight
        shown = all(p.evaluate(values) == 0 for p in displayed)
        generated = all(p.evaluate(values) == 0 for p in cache[weight].polys)
        if shown != generated:
            return False, {"weight": weight, "assignment": xv,
                           "displayed_vanishes": shown, "generated_vanishes": generated}
    return True, None


def corrected_g_system() -> tuple:
    x = lambda r, c: Poly.var(unknown(r, c))  # noqa: E731
    lam = Poly.var(WEIGHT)
    s = 2 * x(0, 0) + lam
    return (x(0, 1), x(0, 2), x(0, 3), x(0, 0) * x(0, 0) - s * x(1, 1), s * x(2, 1), s * x(3, 1))


def system_claims() -> list[Claim]:
    out = []
    for entry in list_entries():
        ok, w = systems_agree(entry, entry.displayed_system)
        out.append(Claim(f"{entry.id}: generated constraint system matches the displayed one",
                         "constraint system", ok, w, known_discrepancy=entry.id == "dim4-G"))
    ok, w = systems_agree(get("dim4-G"), corrected_g_system())
    out.append(Claim("dim4-G: generated system matches {b1=c1=d1=0, a1^2=(2a1+lam)b2, "
                     "(2a1+lam)b3=0, (2a1+lam)b4=0}", "constraint system", ok, w))
    return out


def condition_claims() -> list[Claim]:
    """The dim2 weighted family is valid exactly off ``2*a1 + lam = 0``."""
    a = get("dim2").algebra
    lam, a1 = Fraction(2), Fraction(1)
    op = Matrix([[a1, 0], [0, a1 * a1 / (2 * a1 + lam)]])
    allowed_but_excluded = bool(check_rb(RBOperator(a, lam, op)))
    # a1 = -lam/2 satisfies a1 != lam/2 yet makes the entry undefined
    stated_ok = not allowed_but_excluded and (2 * -1 + lam) != 0
    fam_ok = all(check_rb(instantiate("dim2", "lambda-family", v)) for v in samples("dim2", "lambda-family"))
    return [
        Claim("dim2 weighted family: validity condition a1 != lam/2", "excluded locus", stated_ok,
              {"valid_at": {"lambda": lam, "a1": a1}, "undefined_at": {"lambda": lam, "a1": Fraction(-1)}},
              known_discrepancy=True),
        Claim("dim2 weighted family: validity condition 2*a1 + lam != 0", "excluded locus", fam_ok),
    ]


# -- constructions -------------------------------------------------------------


def _both(rr: RBRepresentation) -> tuple[bool, object]:
    rep = check_representation(rr.rep)
    if not rep:
        return False, {"representation": [i + 1 for i in rep.witness]}
    if not check_rb(rr.rb):
        return False, {"rota_baxter": True}
    comp = check_rb_representation(rr)
    return comp.ok, None if comp.ok else {"rb_representation": [i + 1 for i in comp.witness]}


def construction_results(rr: RBRepresentation) -> dict[str, tuple[bool, object]]:
    """Every construction applicable to ``rr`` and whether its output re-validates."""
    res = {}
    r, lam, a = rr.rb, rr.weight, rr.algebra
    derived = derived_algebra(r)
    res["derived_algebra"] = (check_jj_axioms(derived).ok and check_rb(RBOperator(derived, lam, r.op)).ok, None)
    semi = semidirect_product(rr)
    res["semidirect_product"] = (check_jj_axioms(semi.algebra).ok and check_rb(semi).ok, None)
    res["doubling"] = (check_jj_axioms(doubling(a, lam)).ok, None)
    res["doubled_rep"] = (check_representation(doubled_rep(rr.rep, lam)).ok, None)
    res["quadruple_semidirect"] = (check_jj_axioms(quadruple_semidirect(rr.rep, lam)).ok, None)
    bar = bar_rep(rr)
    ok, w = _both(bar)
    ident = all(rr.t_op @ bar.rep.action[i] == rr.rep.rho(r.op.column(i)) @ rr.t_op for i in range(a.dim))
    res["bar_rep"] = (ok and ident, w)
    res["tilde_rep"] = _both(tilde_rep(rr))
    if lam == 0:
        res["dual_rep"] = _both(dual_rep(rr))
    res["reflect_rep"] = _both(reflect_rep(rr))
    res["direct_sum"] = _both(direct_sum([rr, rr]))
    zero = RBRepresentation(zero_rep(a, 2), r, Matrix.zeros(2, 2))
    res["direct_sum_with_zero"] = _both(direct_sum([rr, zero]))
    res["hat_gl_rep(+1)"] = _both(hat_gl_rep(rr, 1))
    return res


def hat_minus_witness(rr: RBRepresentation):
    res = check_representation(hat_gl_rep(rr, -1).rep)
    return None if res.ok else [i + 1 for i in res.witness]


def construction_claims() -> list[Claim]:
    failures: dict[str, list] = {}
    order: list[str] = []
    minus_fail = None
    for label, rr in standard_rb_representations():
        for name, (ok, w) in construction_results(rr).items():
            if name not in failures:
                failures[name] = []
                order.append(name)
            if not ok:
                failures[name].append({"instance": label, "detail": w})
        if minus_fail is None:
            w = hat_minus_witness(rr)
            if w is not None:
                minus_fail = {"instance": label, "basis_pair": w}
    out = [Claim(f"{name} re-validates on every catalog instance", "construction", not failures[name],
                 failures[name][0] if failures[name] else None) for name in order]
    out.append(Claim("gl(V) action with sign -1 is a representation on every catalog instance",
                     "gl(V) representation sign", minus_fail is None, minus_fail, known_discrepancy=True))
    a = get("dim2").algebra
    printed = doubling_as_printed(a, 1)
    rep = check_jj_axioms(printed)
    out.append(Claim("doubling product with second slot x*y' + x*y' + lam x'*y' is commutative",
                     "doubling product", rep.commutative,
                     {"asymmetric_pair": [i + 1 for i in rep.commutative_witness]}
                     if rep.commutative_witness else None, known_discrepancy=True))
    sym_ok = all(check_jj_axioms(doubling(e.algebra, lam)).ok
                 for e in list_entries() for lam in (Fraction(0), Fraction(1), Fraction(-2)))
    out.append(Claim("symmetric doubling x*y' + x'*y + lam x'*y' is Jacobi-Jordan", "doubling product", sym_ok))
    return out


# -- randomized property suite -------------------------------------------------


def valid_families(entry: CatalogEntry) -> list:
    return [f for f in entry.families
            if all(check_rb(instantiate(entry.id, f.name, v)) for v in samples(entry.id, f.name, 10))]


def _random_rank_one(rng: random.Random, n: int) -> Matrix:
    vals = (Fraction(-1), Fraction(1), Fraction(2))
    u = [rng.choice(vals) for _ in range(n)]
    v = [rng.choice(vals) for _ in range(n)]
    return Matrix([[ui * vj for vj in v] for ui in u])


def random_trial(rng: random.Random, entry: CatalogEntry, families: list):
    """``(rep, weight, I, T)`` around a valid instance; about half perturbed."""
    fam = rng.choice(families)
    params = next(samples_rng(rng, entry.id, fam.name))
    r = instantiate(entry.id, fam.name, params)
    lam, n = r.weight, entry.algebra.dim
    mods = [("adjoint", None)] + sorted(entry.representations.items())
    name, rep = rng.choice(mods)
    if rep is None:
        rep = adjoint_rb_rep(r).rep
        choices = [r.op, Matrix.zeros(n, n), Matrix.identity(n).scale(-lam)]
    else:
        m = rep.dim_v
        choices = [Matrix.zeros(m, m), Matrix.identity(m).scale(-lam)]
    t = rng.choice(choices)
    op = r.op
    roll = rng.random()
    if roll < 0.35:
        t = t + _random_rank_one(rng, rep.dim_v)
    elif roll < 0.5:
        op = op + _random_rank_one(rng, n)
    return rep, lam, op, t


def property_failures(rep, lam, op, t) -> list[str]:
    a = rep.algebra
    bad = []
    rb = RBOperator(a, lam, op)
    rb_ok = check_rb(rb).ok
    try:
        compat = check_rb_representation(RBRepresentation(rep, rb, t)).ok
    except PrerequisiteFailed:
        compat = False
    paired = check_paired(rep, lam, op, t)
    if paired.paired != (rb_ok and compat):
        bad.append("paired <=> rb and rb-representation")
    if paired.paired != paired.graph_subalgebra:
        bad.append("graph subalgebra <=> paired")
    rr = RBRepresentation(rep, rb, t)
    if rb_ok and not semidirect_converse(rr).consistent:
        bad.append("semidirect converse")
    if rb_ok and compat:
        n, m = a.dim, rep.dim_v
        if not (differential_matrix(rep, 1, 1) @ differential_matrix(rep, 0, -1)).is_zero():
            bad.append("d1 delta0 = 0")
        trep = tilde_rep(rr).rep
        if not (differential_matrix(trep, 1, 1) @ differential_matrix(trep, 0, -1)).is_zero():
            bad.append("d~1 delta~0 = 0")
        lhs = differential_matrix(trep, 0, 1) @ phi_matrix(rr, 0, 2)
        rhs = phi_matrix(rr, 1, 1) @ differential_matrix(rep, 0, -1)
        if lhs != rhs:
            bad.append("d~0 phi0_2 = phi1_1 delta0")
        if not (d_rb1_matrix(rr) @ delta_rb0_matrix(rr)).is_zero():
            bad.append("d_RB1 delta_RB0 = 0")
        if d_rb1_matrix(rr).shape != (n * n * m + n * m, n * m + m):
            bad.append("d_RB1 shape")
    return bad


def property_claims(trials: int = 100) -> list[Claim]:
    out = []
    for entry in list_entries():
        rng = random.Random(f"{entry.id}/properties")
        fams = valid_families(entry)
        bad = []
        for k in range(trials):
            for name in property_failures(*random_trial(rng, entry, fams)):
                bad.append({"trial": k, "property": name})
        out.append(Claim(f"{entry.id}: {trials} randomized trials of the complex, pairing and "
                         "semidirect identities", "property suite", not bad, bad[0] if bad else None))
    return out


def verify_paper(trials: int = 100) -> list[Claim]:
    return (cohomology_claims() + antiderivation_claims() + family_claims() + system_claims()
            + condition_claims() + construction_claims() + property_claims(trials))

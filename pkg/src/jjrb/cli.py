"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check fails, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .algebra import AlgebraMorphism, CheckResult, check_jj_axioms
from .cohomology import cohomology_rb
from .errors import (
    AxiomViolation,
    ExcludedParameters,
    JJRBError,
    MixedBase,
    NonzeroWeight,
    NotAutomorphism,
    ParseError,
    PrerequisiteFailed,
    UnknownId,
    UnsupportedDegree,
)
from .instance import InstanceFile, algebra_to_json, dump_instance, dumps, instance_to_json, read_instance
from .linalg import Matrix, format_rational, parse_rational
from .representations import (
    RBRepresentation,
    adjoint_rb_rep,
    adjoint_rep,
    bar_rep,
    check_paired,
    check_rb_representation,
    check_representation,
    doubling,
    dual_rep,
    hat_gl_rep,
    quadruple_semidirect,
    reflect_rep,
    semidirect_product,
    tilde_rep,
)
from .rota_baxter import RBOperator, check_rb, conjugate_rb, derived_algebra, rb_constraint_system, scale_rb
from .verify import verify_paper

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECKS = ("algebra", "rb", "rep", "rbrep", "paired")
KINDS = ("derived", "semidirect", "doubling", "quadruple", "dual", "hat", "bar", "tilde",
         "reflect", "scale", "conjugate")


class UsageError(JJRBError):
    pass


# -- report helpers ------------------------------------------------------------


def _entry(claim: str, ref: str, ok: bool, witness=None) -> dict:
    out = {"claim": claim, "paper_ref": ref, "status": "PASS" if ok else "FAIL"}
    if witness is not None:
        out["witness"] = witness
    return out


def _basis_witness(res: CheckResult, prefixes=("e", "e", "e")):
    if res.ok or res.witness is None:
        return None
    names = [f"{p}{i + 1}" for p, i in zip(prefixes, res.witness)]
    out = {"basis": names}
    if res.residual is not None:
        out["residual"] = [format_rational(x) for x in res.residual]
    return out


def _jj_entries(a) -> list[dict]:
    rep = check_jj_axioms(a)
    comm = {"basis": [f"e{i + 1}" for i in rep.commutative_witness]} if rep.commutative_witness else None
    jac = {"basis": [f"e{i + 1}" for i in rep.jacobi_witness]} if rep.jacobi_witness else None
    return [_entry("commutativity", "commutativity", rep.commutative, comm),
            _entry("Jacobi identity (x*y)*z + (y*z)*x + (z*x)*y = 0", "jacobi identity", rep.jacobi, jac)]


def _rb_entry(r: RBOperator) -> dict:
    return _entry("Rota-Baxter identity of weight " + format_rational(r.weight), "rota-baxter identity",
                  *_ok_w(check_rb(r)))


def _ok_w(res: CheckResult, prefixes=("e", "e")):
    return res.ok, _basis_witness(res, prefixes)


def _rep_entry(rep) -> dict:
    return _entry("representation identity rho(x*y) = -rho(x)rho(y) - rho(y)rho(x)",
                  "representation identity", *_ok_w(check_representation(rep)))


def _rbrep_entry(rr: RBRepresentation) -> dict:
    try:
        ok, w = _ok_w(check_rb_representation(rr), ("e", "u"))
    except PrerequisiteFailed as exc:
        ok, w = False, {"prerequisite": str(exc)}
    return _entry("compatibility rho(Ix)Tu = T(rho(Ix)u + rho(x)Tu + lam rho(x)u)",
                  "rb-representation identity", ok, w)


def _rb(inst: InstanceFile) -> RBOperator:
    inst.require("rb_operator")
    return RBOperator(inst.algebra, inst.weight_or_zero, inst.rb_operator)


def _rbrep(inst: InstanceFile, default_adjoint: bool) -> RBRepresentation:
    r = _rb(inst)
    if inst.action is None and default_adjoint:
        if inst.t_operator is not None:
            raise UsageError("t_operator given without a representation")
        return RBRepresentation(adjoint_rep(inst.algebra), r, r.op)
    inst.require("representation", "t_operator")
    return RBRepresentation(inst.representation(), r, inst.t_operator)


def _report(command: str, path, results: list[dict], data=None) -> dict:
    doc = {"command": command, "input": path, "results": results}
    if data is not None:
        doc["data"] = data
    return doc


def _status(results: list[dict]) -> int:
    return EXIT_OK if all(r["status"] != "FAIL" for r in results) else EXIT_FAIL


# -- commands ------------------------------------------------------------------


def cmd_check(args) -> tuple[dict, int]:
    inst = read_instance(args.path, strict=args.strict)
    what = args.what
    results = _jj_entries(inst.algebra)
    if what in ("rb", "rbrep", "paired"):
        inst.require("rb_operator")
    if what in ("rep", "rbrep", "paired"):
        inst.require("representation")
    if what in ("rbrep", "paired"):
        inst.require("t_operator")
    if what == "rb":
        results.append(_rb_entry(_rb(inst)))
    elif what == "rep":
        results.append(_rep_entry(inst.representation()))
    elif what == "rbrep":
        rr = _rbrep(inst, False)
        results += [_rb_entry(rr.rb), _rep_entry(rr.rep), _rbrep_entry(rr)]
    elif what == "paired":
        rep = inst.representation()
        results.append(_rep_entry(rep))
        if check_representation(rep):
            rb = _rb(inst)
            pr = check_paired(rep, rb.weight, rb.op, inst.t_operator)
            results.append(_entry("(I, T) is a paired operator", "paired operators", pr.paired))
            results.append(_entry("graph {(Ix, x, Tu, u)} is a subalgebra of the quadruple product",
                                  "paired operators", pr.graph_subalgebra))
            results.append(_entry("both characterizations agree", "paired operators", pr.agree))
    return _report(f"check {what}", args.path, results), None


def _construct(inst: InstanceFile, args) -> tuple[InstanceFile, list[dict]]:
    kind, lam = args.kind, inst.weight_or_zero
    if kind == "derived":
        r = _rb(inst)
        d = derived_algebra(r)
        new_r = RBOperator(d, r.weight, r.op)
        return InstanceFile(d, r.weight, r.op), _jj_entries(d) + [_rb_entry(new_r)]
    if kind == "doubling":
        d = doubling(inst.algebra, lam)
        return InstanceFile(d, lam), _jj_entries(d)
    if kind == "quadruple":
        rep = inst.representation() if inst.action is not None else adjoint_rep(inst.algebra)
        q = quadruple_semidirect(rep, lam)
        return InstanceFile(q, lam), _jj_entries(q)
    if kind == "scale":
        if args.mu is None:
            raise UsageError("--mu is required for scale")
        r = scale_rb(_rb(inst), args.mu)
        return InstanceFile(r.algebra, r.weight, r.op), _jj_entries(r.algebra) + [_rb_entry(r)]
    if kind == "conjugate":
        if args.psi is None:
            raise UsageError("--psi is required for conjugate")
        psi = AlgebraMorphism(inst.algebra, inst.algebra, _parse_matrix(args.psi, inst.algebra.dim))
        r = conjugate_rb(_rb(inst), psi)
        return InstanceFile(r.algebra, r.weight, r.op), _jj_entries(r.algebra) + [_rb_entry(r)]
    rr = _rbrep(inst, default_adjoint=True)
    if kind == "semidirect":
        s = semidirect_product(rr)
        return InstanceFile(s.algebra, s.weight, s.op), _jj_entries(s.algebra) + [_rb_entry(s)]
    builders = {"dual": dual_rep, "bar": bar_rep, "tilde": tilde_rep, "reflect": reflect_rep,
                "hat": lambda x: hat_gl_rep(x, args.sign)}
    out = builders[kind](rr)
    new = InstanceFile(out.algebra, out.weight, out.rb.op, out.rep.dim_v, out.rep.action, out.t_op)
    results = _jj_entries(out.algebra) + [_rb_entry(out.rb), _rep_entry(out.rep), _rbrep_entry(out)]
    return new, results


def cmd_construct(args) -> tuple[dict, int]:
    inst = read_instance(args.path, strict=args.strict)
    try:
        new, results = _construct(inst, args)
    except (AxiomViolation, PrerequisiteFailed, NotAutomorphism) as exc:
        return _report(f"construct {args.kind}", args.path,
                       [_entry("preconditions of the construction", "construction", False,
                               {"error": str(exc)})]), None
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump_instance(new))
    return _report(f"construct {args.kind}", args.path, results, instance_to_json(new)), None


def _basis_strings(basis) -> list[list[str]]:
    return basis.to_strings()


def cmd_cohomology(args) -> tuple[dict, int]:
    inst = read_instance(args.path, strict=args.strict)
    if args.degree not in (0, 1):
        raise UnsupportedDegree(f"RB cohomology is defined only in degrees 0 and 1, not {args.degree}")
    rr = _rbrep(inst, default_adjoint=True)
    prereq = [_rb_entry(rr.rb), _rep_entry(rr.rep), _rbrep_entry(rr)]
    if any(e["status"] == "FAIL" for e in prereq):
        return _report(f"cohomology {args.degree}", args.path, prereq), None
    rep = cohomology_rb(rr, args.degree)
    data = {
        "degree": rep.degree,
        "dim_cocycles": rep.dim_cocycles,
        "dim_coboundaries": rep.dim_coboundaries,
        "dim_cohomology": rep.dim_cohomology,
        "coordinates": "f(e_i)_k at i*m + k, then g" if args.degree == 1 else "v",
        "cocycle_basis": _basis_strings(rep.cocycle_basis),
        "coboundary_basis": _basis_strings(rep.coboundary_basis),
        "representative_basis": _basis_strings(rep.representative_basis),
    }
    results = prereq + [_entry(f"dim H^{args.degree}_RB = dim Z - dim B", "rb-cohomology",
                               rep.dim_cohomology == rep.dim_cocycles - rep.dim_coboundaries >= 0)]
    return _report(f"cohomology {args.degree}", args.path, results, data), None


def cmd_constraints(args) -> tuple[str, int]:
    inst = read_instance(args.path, strict=args.strict)
    try:
        system = rb_constraint_system(inst.algebra, inst.weight_or_zero)
    except AxiomViolation as exc:
        sys.stderr.write(f"error: {exc}\n")
        return "", EXIT_FAIL
    return system.to_text(), EXIT_OK


def _parse_params(text: str | None) -> dict[str, Fraction]:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"--params: expected name=value, got {item!r}")
        name, value = item.split("=", 1)
        out[name.strip()] = parse_rational(value)
    return out


def _parse_matrix(text: str, n: int) -> Matrix:
    """``"1,0;1,1"`` (rows separated by ``;``) or a JSON array of rows."""
    text = text.strip()
    try:
        rows = json.loads(text) if text.startswith("[") else [r.split(",") for r in text.split(";")]
    except json.JSONDecodeError as exc:
        raise ParseError(f"--psi: {exc.msg}") from None
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"--psi: expected a {n}x{n} matrix")
    return Matrix([[parse_rational(str(x)) for x in r] for r in rows])


def _family_json(f: catalog.Family) -> dict:
    return {
        "name": f.name,
        "weight": f.weight if isinstance(f.weight, str) else format_rational(f.weight),
        "params": list(f.params),
        "operator": [[e.to_text() for e in row] for row in f.entries],
        "excluded": f.excluded_text,
        "source": f.source,
    }


def cmd_catalog(args):
    if args.action == "list":
        data = [{"id": e.id, "description": e.description, "dim": e.algebra.dim,
                 "families": [f.name for f in e.families]} for e in catalog.list_entries()]
        return dumps(data), EXIT_OK
    if not args.id:
        raise UsageError(f"catalog {args.action} needs an entry id")
    entry = catalog.get(args.id)
    if args.action == "show":
        data = {"id": entry.id, "description": entry.description,
                "algebra": algebra_to_json(entry.algebra),
                "families": [_family_json(f) for f in entry.families],
                "modules": sorted(entry.representations)}
        return dumps(data), EXIT_OK
    # export
    if args.family is None:
        if args.params:
            raise UsageError("--params needs --family")
        return dump_instance(InstanceFile(entry.algebra)), EXIT_OK
    r = catalog.instantiate(entry.id, args.family, _parse_params(args.params))
    inst = InstanceFile(r.algebra, r.weight, r.op)
    if args.module:
        rep = entry.representations.get(args.module)
        if rep is None:
            raise UnknownId(f"entry {entry.id!r} has no module {args.module!r}")
        inst = InstanceFile(r.algebra, r.weight, r.op, rep.dim_v, rep.action,
                            Matrix.zeros(rep.dim_v, rep.dim_v))
    elif args.adjoint:
        rr = adjoint_rb_rep(r) if check_rb(r) else RBRepresentation(adjoint_rep(r.algebra), r, r.op)
        inst = InstanceFile(r.algebra, r.weight, r.op, rr.rep.dim_v, rr.rep.action, rr.t_op)
    return dump_instance(inst), EXIT_OK


def cmd_verify_paper(args) -> tuple[dict, int]:
    claims = verify_paper(args.trials)
    return _report("verify-paper", None, [c.to_json() for c in claims]), None


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jjrb", description="Rota-Baxter Jacobi-Jordan algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check axioms of an instance file")
    c.add_argument("path")
    c.add_argument("--what", choices=CHECKS, default="algebra")
    c.add_argument("--strict", action="store_true", help="reject non-commutative structure constants")

    c = sub.add_parser("construct", help="build a derived instance")
    c.add_argument("path")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--sign", type=int, choices=(1, -1), default=1, help="sign of the gl(V) action")
    c.add_argument("--mu", type=parse_rational, help="scalar for --kind scale")
    c.add_argument("--psi", help="automorphism for --kind conjugate, e.g. '1,0;1,1'")
    c.add_argument("--output", help="also write the constructed instance file here")
    c.add_argument("--strict", action="store_true")

    c = sub.add_parser("cohomology", help="RB cohomology in degree 0 or 1")
    c.add_argument("path")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--strict", action="store_true")

    c = sub.add_parser("constraints", help="polynomial system for Rota-Baxter operators")
    c.add_argument("path")
    c.add_argument("--strict", action="store_true")

    c = sub.add_parser("catalog", help="built-in instances")
    c.add_argument("action", choices=("list", "show", "export"))
    c.add_argument("id", nargs="?")
    c.add_argument("--family")
    c.add_argument("--params", help="e.g. a1=1,b2=1/3")
    c.add_argument("--adjoint", action="store_true", help="include the adjoint RB representation")
    c.add_argument("--module", help="include a named module of the entry with T = 0")

    c = sub.add_parser("verify-paper", help="run the reproduction suite over the catalog")
    c.add_argument("--trials", type=int, default=100)
    return p


HANDLERS = {
    "check": cmd_check,
    "construct": cmd_construct,
    "cohomology": cmd_cohomology,
    "constraints": cmd_constraints,
    "catalog": cmd_catalog,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out, code = HANDLERS[args.command](args)
    except (ParseError, UnknownId, UsageError, ExcludedParameters, UnsupportedDegree, NonzeroWeight, MixedBase) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except JJRBError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    if isinstance(out, dict):
        sys.stdout.write(dumps(out))
        return code if code is not None else _status(out["results"])
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

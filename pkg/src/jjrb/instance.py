"""
JSON instance files.

Layout (indices are 1-based on disk, rationals are strings such as ``"-3/4"``)::

    {
      "algebra": {"dim": 2, "products": [{"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]}]},
      "weight": "0",
      "rb_operator": [["0", "0"], ["1", "2"]],
      "representation": {"dim": 2, "action": [<matrix>, <matrix>]},
      "t_operator": [["0", "0"], ["1", "2"]]
    }

Only ``algebra`` is required.  Unlisted products are zero and the mirror
``(j, i)`` of a listed ``(i, j)`` is implied unless listed itself.
Matrices are row-major; column ``j`` is the image of basis vector ``j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import JJAlgebra
from .errors import MissingSection, ParseError
from .linalg import Matrix, format_rational, parse_rational
from .representations import Representation


@dataclass(frozen=True)
class InstanceFile:
    algebra: JJAlgebra
    weight: Fraction | None = None
    rb_operator: Matrix | None = None
    rep_dim: int | None = None
    action: tuple | None = None
    t_operator: Matrix | None = None

    def require(self, *sections: str) -> None:
        attrs = {"weight": self.weight, "rb_operator": self.rb_operator,
                 "representation": self.action, "t_operator": self.t_operator}
        for s in sections:
            if attrs[s] is None:
                raise MissingSection(f"instance has no {s!r} section")

    @property
    def weight_or_zero(self) -> Fraction:
        return self.weight if self.weight is not None else Fraction(0)

    def representation(self) -> Representation:
        self.require("representation")
        return Representation(self.algebra, self.rep_dim, self.action)


# -- parsing -------------------------------------------------------------------


def _fail(path: str, msg: str):
    raise ParseError(f"{path}: {msg}")


def _int(x, path: str, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(path, "expected an integer")
    if x < lo or (hi is not None and x > hi):
        _fail(path, f"integer {x} out of range [{lo}, {hi if hi is not None else 'inf'}]")
    return x


def _rational(x, path: str) -> Fraction:
    if isinstance(x, bool):
        _fail(path, "expected a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_rational(x)
        except ParseError as exc:
            _fail(path, str(exc))
    _fail(path, "expected a rational string such as \"-3/4\"")


def _matrix(x, path: str, rows: int, cols: int) -> Matrix:
    if not isinstance(x, list) or len(x) != rows:
        _fail(path, f"expected {rows} rows")
    out = []
    for r, row in enumerate(x):
        if not isinstance(row, list) or len(row) != cols:
            _fail(f"{path}[{r}]", f"expected {cols} entries")
        out.append([_rational(v, f"{path}[{r}][{c}]") for c, v in enumerate(row)])
    return Matrix(out, cols=cols)


def _object(x, path: str, allowed: set[str]) -> dict:
    if not isinstance(x, dict):
        _fail(path, "expected an object")
    extra = set(x) - allowed
    if extra:
        _fail(path, f"unknown key(s) {sorted(extra)}")
    return x


def parse_instance(text: str, strict: bool = False) -> InstanceFile:
    """Parse an instance document.

    With ``strict`` the structure constants must be commutative: a pair
    listed in both orders with different values is a ParseError instead of
    an algebra that later fails the commutativity check.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    doc = _object(doc, "$", {"algebra", "weight", "rb_operator", "representation", "t_operator"})
    if "algebra" not in doc:
        raise MissingSection("$: instance has no 'algebra' section")
    alg = _object(doc["algebra"], "$.algebra", {"dim", "products"})
    if "dim" not in alg:
        _fail("$.algebra", "missing 'dim'")
    n = _int(alg["dim"], "$.algebra.dim", 0)
    prods = alg.get("products", [])
    if not isinstance(prods, list):
        _fail("$.algebra.products", "expected a list")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for t, p in enumerate(prods):
        path = f"$.algebra.products[{t}]"
        p = _object(p, path, {"i", "j", "result"})
        for key in ("i", "j"):
            if key not in p:
                _fail(path, f"missing {key!r}")
        i = _int(p["i"], path + ".i", 1, n) - 1
        j = _int(p["j"], path + ".j", 1, n) - 1
        if (i, j) in table:
            _fail(path, f"product e{i + 1}*e{j + 1} listed twice")
        res = p.get("result", [])
        if not isinstance(res, list):
            _fail(path + ".result", "expected a list")
        cell: dict[int, Fraction] = {}
        for u, term in enumerate(res):
            tpath = f"{path}.result[{u}]"
            term = _object(term, tpath, {"k", "c"})
            if "k" not in term or "c" not in term:
                _fail(tpath, "needs 'k' and 'c'")
            k = _int(term["k"], tpath + ".k", 1, n) - 1
            if k in cell:
                _fail(tpath, f"coefficient of e{k + 1} given twice")
            cell[k] = _rational(term["c"], tpath + ".c")
        table[(i, j)] = cell
    if strict:
        for (i, j), cell in table.items():
            mirror = table.get((j, i))
            if mirror is not None and {k: v for k, v in mirror.items() if v} != {k: v for k, v in cell.items() if v}:
                raise ParseError(f"$.algebra.products: e{i + 1}*e{j + 1} != e{j + 1}*e{i + 1} (strict mode)")
    algebra = JJAlgebra.from_products(n, table)

    weight = _rational(doc["weight"], "$.weight") if "weight" in doc else None
    op = _matrix(doc["rb_operator"], "$.rb_operator", n, n) if "rb_operator" in doc else None
    rep_dim = action = None
    if "representation" in doc:
        rep = _object(doc["representation"], "$.representation", {"dim", "action"})
        if "dim" not in rep or "action" not in rep:
            _fail("$.representation", "needs 'dim' and 'action'")
        rep_dim = _int(rep["dim"], "$.representation.dim", 0)
        if not isinstance(rep["action"], list) or len(rep["action"]) != n:
            _fail("$.representation.action", f"expected {n} matrices")
        action = tuple(_matrix(m, f"$.representation.action[{i}]", rep_dim, rep_dim)
                       for i, m in enumerate(rep["action"]))
    t_op = None
    if "t_operator" in doc:
        if rep_dim is None:
            _fail("$.t_operator", "needs a 'representation' section")
        t_op = _matrix(doc["t_operator"], "$.t_operator", rep_dim, rep_dim)
    return InstanceFile(algebra, weight, op, rep_dim, action, t_op)


def read_instance(path: str, strict: bool = False) -> InstanceFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_instance(text, strict)


# -- serialization -------------------------------------------------------------


def algebra_to_json(a: JJAlgebra) -> dict:
    sym = a.is_symmetric()
    products = []
    for (i, j), cell in sorted(a.nonzero_products().items()):
        if sym and j < i:
            continue
        products.append({"i": i + 1, "j": j + 1,
                         "result": [{"k": k + 1, "c": format_rational(v)} for k, v in sorted(cell.items())]})
    return {"dim": a.dim, "products": products}


def instance_to_json(inst: InstanceFile) -> dict:
    doc: dict = {"algebra": algebra_to_json(inst.algebra)}
    if inst.weight is not None:
        doc["weight"] = format_rational(inst.weight)
    if inst.rb_operator is not None:
        doc["rb_operator"] = inst.rb_operator.to_strings()
    if inst.action is not None:
        doc["representation"] = {"dim": inst.rep_dim, "action": [m.to_strings() for m in inst.action]}
    if inst.t_operator is not None:
        doc["t_operator"] = inst.t_operator.to_strings()
    return doc


def dumps(doc) -> str:
    """Canonical JSON text: two-space indent, keys in insertion order, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_instance(inst: InstanceFile) -> str:
    return dumps(instance_to_json(inst))

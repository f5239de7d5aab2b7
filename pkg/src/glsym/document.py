"""JSON documents describing an algebra, optional modules, cochains and series.

Shape of a document::

    {
      "field": "rational" | "gaussian",
      "group": [2],                       # cyclic orders, 0 for Z
      "epsilon": [["-1"]],                # values on generator pairs
      "basis": [{"name": "x", "degree": [0]}, ...],
      "products": [{"left": "x", "right": "x", "value": {"x": "2"}}, ...],
      "modules": {"M": {"basis": [...], "left": [...], "right": [...]}},
      "cochains": {"F": {"arity": 2, "records": [...]}},
      "series": {"f": ["F", null, ...]},
      "deformation_basis": ["F", ...]
    }

Module actions are lists of ``{"algebra": a, "module": m, "value": {...}}``.
A cochain record is ``{"monomial": [...], "last": name, "value": {...},
"degree": [...]}``.  In a series, ``null`` stands for a zero term.
``deformation_basis`` names the 2-cochains that ``specialize`` combines.
Unlisted products and actions are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .algebra import GradedAlgebra
from .bimodule import Bimodule
from .cochains import Cochain, complex_for
from .errors import GlsymError, ValidationError
from .grading import GradingGroup, validate_factor
from .scalar import ZERO, scalar_parse

__all__ = ["Document", "DocumentError", "parse_document", "load_document", "dump_document",
           "cochain_records", "cochain_from_records", "module_from_json", "fixture_path",
           "list_fixtures"]


class DocumentError(ValidationError):
    """A document problem located by a JSON path such as ``$.basis[2].degree``."""

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}", where=path)


@dataclass
class Document:
    field_mode: str
    group: GradingGroup
    epsilon: list
    algebra: GradedAlgebra
    modules: dict = field(default_factory=dict)      # name -> Bimodule
    cochains: dict = field(default_factory=dict)     # name -> Cochain (regular coefficients)
    series: dict = field(default_factory=dict)       # name -> list of cochain names or None
    deformation_basis: list = field(default_factory=list)
    name: str = None

    def series_terms(self, name):
        if name not in self.series:
            raise DocumentError(f"$.series.{name}", "no such series")
        out = []
        for k, ref in enumerate(self.series[name]):
            if ref is None:
                arity = self._series_arity(name)
                out.append(Cochain(complex_for(self.algebra).space(arity)))
            else:
                out.append(self.cochains[ref])
        return out

    def _series_arity(self, name):
        for ref in self.series[name]:
            if ref is not None:
                return self.cochains[ref].arity
        return 2


# -- low-level checks ---------------------------------------------------------

def _expect(cond, path, reason):
    if not cond:
        raise DocumentError(path, reason)


def _obj(value, path):
    _expect(isinstance(value, dict), path, "expected an object")
    return value


def _list(value, path):
    _expect(isinstance(value, list), path, "expected a list")
    return value


def _str(value, path):
    _expect(isinstance(value, str) and value, path, "expected a non-empty string")
    return value


def _scalar(text, path, mode):
    _expect(isinstance(text, str), path, "scalars are written as strings")
    try:
        s = scalar_parse(text)
    except GlsymError as exc:
        raise DocumentError(path, str(exc)) from None
    _expect(mode == "gaussian" or s.is_real, path,
            f"imaginary scalar {text!r} in a rational document")
    return s


def _ints(value, path, length=None):
    _list(value, path)
    for k, x in enumerate(value):
        _expect(isinstance(x, int) and not isinstance(x, bool), f"{path}[{k}]", "expected an integer")
    if length is not None:
        _expect(len(value) == length, path, f"expected {length} components, got {len(value)}")
    return value


def _vector(value, path, names, mode):
    _obj(value, path)
    out = {}
    for name, text in value.items():
        _expect(name in names, f"{path}.{name}", f"unknown basis element {name!r}")
        s = _scalar(text, f"{path}.{name}", mode)
        if s:
            out[names[name]] = s
    return out


def _basis(value, path, group):
    _list(value, path)
    basis = []
    for k, item in enumerate(value):
        p = f"{path}[{k}]"
        _obj(item, p)
        name = _str(item.get("name"), f"{p}.name")
        _ints(item.get("degree"), f"{p}.degree", group.rank)
        basis.append((name, tuple(item["degree"])))
    names = [b[0] for b in basis]
    for k, name in enumerate(names):
        _expect(names.index(name) == k, f"{path}[{k}].name", f"duplicate name {name!r}")
    return basis


# -- parsing ------------------------------------------------------------------

_KEYS = {"field", "group", "epsilon", "basis", "products", "modules", "cochains", "series",
         "deformation_basis", "name"}


def parse_document(text, name=None):
    """Parse and validate a document; errors carry the JSON path of the problem."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    _obj(data, "$")
    for key in data:
        _expect(key in _KEYS, f"$.{key}", "unknown section")
    mode = data.get("field", "rational")
    _expect(mode in ("rational", "gaussian"), "$.field", "expected 'rational' or 'gaussian'")
    orders = _ints(data.get("group"), "$.group")
    for k, m in enumerate(orders):
        _expect(m >= 0, f"$.group[{k}]", "cyclic orders must be non-negative")
    group = GradingGroup(tuple(orders))
    eps_rows = _list(data.get("epsilon"), "$.epsilon")
    _expect(len(eps_rows) == group.rank, "$.epsilon", f"expected {group.rank} rows")
    table = []
    for j, row in enumerate(eps_rows):
        _list(row, f"$.epsilon[{j}]")
        _expect(len(row) == group.rank, f"$.epsilon[{j}]", f"expected {group.rank} entries")
        table.append([_scalar(x, f"$.epsilon[{j}][{l}]", mode) for l, x in enumerate(row)])
    try:
        factor = validate_factor(group, table)
    except ValidationError as exc:
        where = exc.where
        path = f"$.epsilon[{where[0]}][{where[1]}]" if isinstance(where, tuple) else "$.epsilon"
        raise DocumentError(path, str(exc)) from None

    basis = _basis(data.get("basis"), "$.basis", group)
    names = {b[0]: k for k, b in enumerate(basis)}
    products = {}
    for k, item in enumerate(_list(data.get("products", []), "$.products")):
        p = f"$.products[{k}]"
        _obj(item, p)
        left, right = _str(item.get("left"), f"{p}.left"), _str(item.get("right"), f"{p}.right")
        _expect(left in names, f"{p}.left", f"unknown basis element {left!r}")
        _expect(right in names, f"{p}.right", f"unknown basis element {right!r}")
        key = (names[left], names[right])
        _expect(key not in products, p, f"duplicate product {left}*{right}")
        products[key] = _vector(item.get("value", {}), f"{p}.value", names, mode)
    try:
        algebra = GradedAlgebra(factor, basis, products, name=data.get("name") or name)
    except ValidationError as exc:
        i, j = exc.where
        k = next(n for n, item in enumerate(data["products"])
                 if (names[item["left"]], names[item["right"]]) == (i, j))
        raise DocumentError(f"$.products[{k}].value",
                            f"{exc} (products must respect the grading)") from None

    doc = Document(mode, group, table, algebra, name=data.get("name") or name)
    for mname, entry in _obj(data.get("modules", {}), "$.modules").items():
        doc.modules[mname] = module_from_json(algebra, entry, f"$.modules.{mname}", mode, mname)
    for cname, entry in _obj(data.get("cochains", {}), "$.cochains").items():
        p = f"$.cochains.{cname}"
        _obj(entry, p)
        arity = entry.get("arity")
        _expect(isinstance(arity, int) and arity >= 1, f"{p}.arity", "expected an integer >= 1")
        doc.cochains[cname] = cochain_from_records(
            algebra, None, arity, _list(entry.get("records", []), f"{p}.records"), f"{p}.records", mode)
    for sname, refs in _obj(data.get("series", {}), "$.series").items():
        p = f"$.series.{sname}"
        _list(refs, p)
        arities = set()
        for k, ref in enumerate(refs):
            if ref is None:
                continue
            _expect(isinstance(ref, str) and ref in doc.cochains, f"{p}[{k}]",
                    f"unknown cochain {ref!r}")
            arities.add(doc.cochains[ref].arity)
        _expect(len(arities) <= 1, p, "series terms must share one arity")
        doc.series[sname] = list(refs)
    for k, ref in enumerate(_list(data.get("deformation_basis", []), "$.deformation_basis")):
        p = f"$.deformation_basis[{k}]"
        _expect(isinstance(ref, str) and ref in doc.cochains, p, f"unknown cochain {ref!r}")
        _expect(doc.cochains[ref].arity == 2, p, "deformation basis cochains must have arity 2")
        doc.deformation_basis.append(ref)
    return doc


def module_from_json(algebra, entry, path="$", mode="gaussian", name=None):
    _obj(entry, path)
    group = algebra.factor.group
    basis = _basis(entry.get("basis"), f"{path}.basis", group)
    mnames = {b[0]: k for k, b in enumerate(basis)}
    actions = {}
    for side in ("left", "right"):
        table = {}
        for k, item in enumerate(_list(entry.get(side, []), f"{path}.{side}")):
            p = f"{path}.{side}[{k}]"
            _obj(item, p)
            a = _str(item.get("algebra"), f"{p}.algebra")
            m = _str(item.get("module"), f"{p}.module")
            _expect(a in algebra.index, f"{p}.algebra", f"unknown basis element {a!r}")
            _expect(m in mnames, f"{p}.module", f"unknown module element {m!r}")
            key = (algebra.index[a], mnames[m]) if side == "left" else (mnames[m], algebra.index[a])
            table[key] = _vector(item.get("value", {}), f"{p}.value", mnames, mode)
        actions[side] = table
    try:
        return Bimodule(algebra, basis, actions["left"], actions["right"], name=name)
    except ValidationError as exc:
        raise DocumentError(path, str(exc)) from None


def cochain_from_records(algebra, module, arity, records, path="$", mode="gaussian"):
    """Build a cochain of C^arity(S, M) from JSON records (``module=None`` is regular)."""
    cx = complex_for(algebra, module)
    space = cx.space(arity)
    M = cx.module
    values = {}
    for k, rec in enumerate(records):
        p = f"{path}[{k}]"
        _obj(rec, p)
        mono = _list(rec.get("monomial", []), f"{p}.monomial")
        _expect(len(mono) == arity - 1, f"{p}.monomial", f"expected {arity - 1} names")
        word = []
        for q, nm in enumerate(mono + [rec.get("last")]):
            where = f"{p}.monomial[{q}]" if q < len(mono) else f"{p}.last"
            _expect(isinstance(nm, str) and nm in algebra.index, where, f"unknown basis element {nm!r}")
            word.append(algebra.index[nm])
        word = tuple(word)
        hit = space.lookup(word)
        _expect(hit is not None, f"{p}.monomial", "monomial is zero (repeated even-type element)")
        _expect(space.keys[hit[1]] == word, f"{p}.monomial", "monomial is not in canonical order")
        vec = _vector(rec.get("value", {}), f"{p}.value", M.index, mode)
        if "degree" in rec:
            deg = tuple(_ints(rec["degree"], f"{p}.degree", algebra.factor.group.rank))
            deg = algebra.factor.group.degree(deg)
            for m in vec:
                _expect(space.col_degree[space.col(word, m)] == deg, f"{p}.value.{M.names[m]}",
                        f"component has degree {list(space.col_degree[space.col(word, m)])}, "
                        f"record says {list(deg)}")
        acc = values.setdefault(word, {})
        for m, x in vec.items():
            acc[m] = acc.get(m, ZERO) + x
    return Cochain.from_values(space, values)


def cochain_records(f):
    """JSON records of a cochain, one per (word, degree) component, in basis order."""
    space = f.space
    A, M = space.algebra, space.module
    out = []
    for word, vec in f.values().items():
        by_deg = {}
        for m, x in sorted(vec.items()):
            by_deg.setdefault(space.col_degree[space.col(word, m)], {})[M.names[m]] = str(x)
        for deg, value in sorted(by_deg.items()):
            out.append({"monomial": [A.names[a] for a in word[:-1]], "last": A.names[word[-1]],
                        "value": value, "degree": list(deg)})
    return out


def _vec_json(names, vec):
    return {names[k]: str(x) for k, x in sorted(vec.items())}


def dump_document(doc):
    """Canonical JSON text; parsing it gives back an equal document."""
    A = doc.algebra
    data = {}
    if doc.name:
        data["name"] = doc.name
    data["field"] = doc.field_mode
    data["group"] = list(doc.group.factors)
    data["epsilon"] = [[str(x) for x in row] for row in doc.epsilon]
    data["basis"] = [{"name": n, "degree": list(d)} for n, d in zip(A.names, A.degrees)]
    data["products"] = [{"left": A.names[i], "right": A.names[j], "value": _vec_json(A.names, v)}
                        for (i, j), v in A.table_items()]
    if doc.modules:
        data["modules"] = {}
        for mname, M in doc.modules.items():
            data["modules"][mname] = {
                "basis": [{"name": n, "degree": list(d)} for n, d in zip(M.names, M.degrees)],
                "left": [{"algebra": A.names[i], "module": M.names[j], "value": _vec_json(M.names, v)}
                         for (i, j), v in M.left_items()],
                "right": [{"algebra": A.names[i], "module": M.names[j], "value": _vec_json(M.names, v)}
                          for (j, i), v in M.right_items()],
            }
    if doc.cochains:
        data["cochains"] = {c: {"arity": f.arity, "records": cochain_records(f)}
                            for c, f in doc.cochains.items()}
    if doc.series:
        data["series"] = {s: list(refs) for s, refs in doc.series.items()}
    if doc.deformation_basis:
        data["deformation_basis"] = list(doc.deformation_basis)
    return _pretty(data, 0) + "\n"


def _pretty(value, level):
    """Indented JSON with short scalar lists and small records kept on one line."""
    flat = json.dumps(value, ensure_ascii=False)
    if not isinstance(value, (dict, list)) or len(flat) + 2 * level <= 96:
        return flat
    pad = "  " * (level + 1)
    if isinstance(value, list):
        inner = (pad + _pretty(v, level + 1) for v in value)
        return "[\n" + ",\n".join(inner) + "\n" + "  " * level + "]"
    inner = (pad + json.dumps(k, ensure_ascii=False) + ": " + _pretty(v, level + 1)
             for k, v in value.items())
    return "{\n" + ",\n".join(inner) + "\n" + "  " * level + "}"


# -- fixtures -----------------------------------------------------------------

def list_fixtures():
    root = resources.files("glsym") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name):
    """Path of a bundled fixture given ``name`` or ``name.json``; None if absent."""
    stem = name[:-5] if name.endswith(".json") else name
    p = resources.files("glsym") / "fixtures" / f"{stem}.json"
    return p if p.is_file() else None


def load_document(ref):
    """Load a document from a file path, falling back to a bundled fixture name."""
    import os

    if os.path.isfile(ref):
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
        stem = os.path.basename(ref)
    else:
        p = fixture_path(ref)
        if p is None:
            raise DocumentError("$", f"no such file or bundled fixture: {ref!r}")
        text = p.read_text(encoding="utf-8")
        stem = p.name
    return parse_document(text, name=stem[:-5] if stem.endswith(".json") else stem)

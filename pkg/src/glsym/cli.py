"""Command line interface: ``glsym <command> <document> [options]``.

Exit codes: 0 success or positive verdict, 1 negative mathematical verdict,
2 input error.  ``--json`` prints a machine-readable report instead of text.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import associated_lie, check_left_symmetric, is_simple
from .bimodule import check_bimodule, classify, hom_bimodule, regular_bimodule
from .cochains import Cochain, complex_for
from .cohomology import cohomology_at, in_coboundaries, remark42_check, theorem41_check
from .deformation import (DeformationSeries, extend, first_order_equivalent, infinitesimal_space,
                          normalize_leading_term, obstruction, specialize, verify_equivalence)
from .document import (DocumentError, cochain_records, list_fixtures, load_document,
                       module_from_json)
from .errors import GlsymError
from .scalar import ONE, scalar

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- formatting ---------------------------------------------------------------

def fmt_vector(names, vec):
    if not vec:
        return "0"
    parts = []
    for k, c in sorted(vec.items()):
        if c == ONE:
            term = names[k]
        elif c == -ONE:
            term = "-" + names[k]
        elif c.is_real:
            term = f"{c}*{names[k]}"
        else:
            term = f"({c})*{names[k]}"
        parts.append(term)
    return " + ".join(parts).replace("+ -", "- ")


def vec_json(names, vec):
    return {names[k]: str(c) for k, c in sorted(vec.items())}


def deg_key(deg):
    return ",".join(str(x) for x in deg)


def cochain_json(f):
    return cochain_records(f)


def cochain_text(f, indent="    "):
    A, M = f.space.algebra, f.space.module
    lines = []
    for word, vec in f.values().items():
        args = ", ".join(A.names[a] for a in word)
        lines.append(f"{indent}({args}) -> {fmt_vector(M.names, vec)}")
    return lines or [f"{indent}0"]


def emit(report, lines, as_json, out):
    if as_json:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


# -- argument resolution -------------------------------------------------------

def resolve_module(doc, ref):
    """``None``/"regular", "hom", a module declared in the document, or a JSON file."""
    A = doc.algebra
    if ref in (None, "regular"):
        return None, "regular"
    if ref == "hom":
        return hom_bimodule(regular_bimodule(A)), "hom"
    if ref in doc.modules:
        return doc.modules[ref], ref
    try:
        with open(ref, encoding="utf-8") as fh:
            entry = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"unknown module {ref!r}: not 'regular', 'hom', a declared module or a file")
    except json.JSONDecodeError as exc:
        raise InputError(f"{ref}: invalid JSON: {exc.msg}")
    return module_from_json(A, entry, "$", doc.field_mode, name=ref), ref


def resolve_terms(doc, ref, arity=2):
    """Series name, cochain name, or "0" for the zero series."""
    if ref in ("0", "trivial"):
        return []
    if ref in doc.series:
        terms = doc.series_terms(ref)
    elif ref in doc.cochains:
        terms = [doc.cochains[ref]]
    else:
        raise InputError(f"unknown series or cochain {ref!r}")
    for f in terms:
        if f.arity != arity:
            raise InputError(f"{ref!r} has terms of arity {f.arity}, expected {arity}")
    return terms


def parse_scalars(text):
    try:
        return [scalar(t.strip()) for t in text.split(",") if t.strip()]
    except GlsymError as exc:
        raise InputError(str(exc))


# -- commands -----------------------------------------------------------------

def cmd_check(doc, args, out):
    A = doc.algebra
    rep = check_left_symmetric(A)
    viol = [{"triple": [A.names[i] for i in t], "residual": vec_json(A.names, r)}
            for t, r, _ in rep.violations]
    report = {"command": "check", "algebra": A.name, "dim": A.dim, "passed": rep.passed,
              "triples_checked": rep.checked, "violations": len(viol), "residuals": viol[:20]}
    lines = [f"algebra {A.name}: dim {A.dim}",
             f"left-symmetry: {rep.checked} basis triples checked, {len(viol)} nonzero residuals"]
    for t, r, _ in rep.violations[:20]:
        lines.append(f"  ({', '.join(A.names[i] for i in t)}): residual {fmt_vector(A.names, r)}")
    lines.append("PASS" if rep.passed else "FAIL")
    emit(report, lines, args.json, out)
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_lie(doc, args, out):
    A = doc.algebra
    g = associated_lie(A)
    brackets = [{"left": A.names[i], "right": A.names[j], "value": vec_json(A.names, v)}
                for (i, j), v in g.table_items() if i < j or (i == j)]
    skew, jac = g.skew_violations(), g.jacobi_violations()
    report = {"command": "lie", "algebra": A.name, "brackets": brackets,
              "skew_violations": len(skew), "jacobi_violations": len(jac),
              "passed": not skew and not jac}
    lines = [f"associated eps-Lie algebra of {A.name}:"]
    lines += [f"  [{b['left']}, {b['right']}] = {fmt_vector(A.names, g.bracket(A.index[b['left']], A.index[b['right']]))}"
              for b in brackets] or ["  abelian"]
    lines += [f"eps-skew symmetry residuals: {len(skew)}", f"eps-Jacobi residuals: {len(jac)}",
              "PASS" if report["passed"] else "FAIL"]
    emit(report, lines, args.json, out)
    return EXIT_OK if report["passed"] else EXIT_NEGATIVE


def cmd_bimodule_check(doc, args, out):
    A = doc.algebra
    M, label = resolve_module(doc, args.module)
    M = M if M is not None else regular_bimodule(A)
    rep = check_bimodule(M)
    flags = classify(M)
    report = {"command": "bimodule-check", "module": label, "dim": M.dim, "passed": rep.passed,
              "checked": rep.checked, "violations": len(rep.violations),
              "antisymmetric": flags.antisymmetric, "special": flags.special}
    lines = [f"bimodule {label} over {A.name}: dim {M.dim}",
             f"bimodule identities: {rep.checked} cases checked, {len(rep.violations)} nonzero residuals",
             f"antisymmetric: {'yes' if flags.antisymmetric else 'no'}",
             f"special: {'yes' if flags.special else 'no'}",
             "PASS" if rep.passed else "FAIL"]
    emit(report, lines, args.json, out)
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_cohomology(doc, args, out):
    if args.n < 0:
        raise InputError("--n must be non-negative")
    A = doc.algebra
    M, label = resolve_module(doc, args.module)
    res = cohomology_at(A, M, args.n)
    M0 = complex_for(A, M).module
    if res.n == 0:
        reps = [vec_json(M0.names, f.evaluate(())) for f in res.H_representatives]
    else:
        reps = [cochain_json(f) for f in res.H_representatives]
    report = {"command": "cohomology", "algebra": A.name, "module": label, "n": res.n,
              "dim_C": res.dim_C, "dim_Z": res.dim_Z, "dim_B": res.dim_B, "dim_H": res.dim_H,
              "by_degree": {deg_key(d): {"dim_C": b.dim_C, "dim_Z": b.dim_Z, "dim_B": b.dim_B,
                                         "dim_H": b.dim_H}
                            for d, b in res.by_degree.items()},
              "representatives": reps}
    lines = [f"H^{res.n}({A.name}, {label}): dim C = {res.dim_C}, dim Z = {res.dim_Z}, "
             f"dim B = {res.dim_B}, dim H = {res.dim_H}"]
    if args.by_degree:
        for d, b in res.by_degree.items():
            lines.append(f"  degree ({deg_key(d)}): dim Z = {b.dim_Z}, dim B = {b.dim_B}, dim H = {b.dim_H}")
    if res.n >= 1:
        for k, f in enumerate(res.H_representatives, 1):
            lines.append(f"  representative {k}:")
            lines += cochain_text(f, "    ")
    else:
        for k, f in enumerate(res.H_representatives, 1):
            lines.append(f"  representative {k}: {fmt_vector(M0.names, f.evaluate(()))}")
    emit(report, lines, args.json, out)
    return EXIT_OK


def cmd_theorem41(doc, args, out):
    if args.i < 1:
        raise InputError("--i must be at least 1")
    A = doc.algebra
    M, label = resolve_module(doc, args.module)
    rep = theorem41_check(A, M, args.i)
    report = {"command": "theorem41", "algebra": A.name, "module": label, "i": rep.i,
              "dim_H_left_symmetric": rep.dim_H_ls, "dim_H_lie": rep.dim_H_ce,
              "residuals": rep.residuals, "passed": rep.passed}
    lines = [f"dim H^{rep.i + 1}({A.name}, {label}) = {rep.dim_H_ls}",
             f"dim H^{rep.i}_Lie(g, C^1({A.name}, {label})) = {rep.dim_H_ce}"]
    lines += [f"  residual {name}: {v}" for name, v in rep.residuals.items()]
    lines.append("PASS" if rep.passed else "FAIL")
    emit(report, lines, args.json, out)
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_remark42(doc, args, out):
    A = doc.algebra
    M, label = resolve_module(doc, args.module)
    rep = remark42_check(A, M)
    report = {"command": "remark42", "algebra": A.name, "module": label,
              "dim_Z0": rep.dim_Z0, "dim_C0": rep.dim_C0, "dim_H0_lie": rep.dim_H0_ce,
              "dim_H1": rep.dim_H1, "alternating_sum": rep.alternating_sum, "passed": rep.passed}
    lines = [f"dim Z^0 = {rep.dim_Z0}, dim C^0 = {rep.dim_C0}, dim H^0_Lie = {rep.dim_H0_ce}, "
             f"dim H^1 = {rep.dim_H1}",
             f"alternating sum: {rep.alternating_sum}",
             "PASS" if rep.passed else "FAIL"]
    emit(report, lines, args.json, out)
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def _extend_to(A, terms, order):
    terms = list(terms)
    while len(terms) < order:
        res = extend(A, terms)
        if not res.ok:
            return terms, res
        terms.append(res.term)
    return terms, None


def cmd_deform(doc, args, out):
    A = doc.algebra
    if args.order < 1:
        raise InputError("--order must be at least 1")
    if args.series is None:
        reps = infinitesimal_space(A)
        report = {"command": "deform", "algebra": A.name, "order": args.order,
                  "infinitesimal_dim": len(reps), "deformations": []}
        lines = [f"degree-zero H^2({A.name}): dimension {len(reps)}"
                 + (" (rigid)" if not reps else "")]
        for k, F in enumerate(reps, 1):
            terms, fail = _extend_to(A, [F], args.order)
            entry = {"F1": cochain_json(F), "terms": [cochain_json(t) for t in terms],
                     "obstructed_at": fail.certificate["order"] if fail else None}
            report["deformations"].append(entry)
            lines.append(f"  infinitesimal deformation {k}:")
            lines += cochain_text(F, "    ")
            if fail:
                lines.append(f"    obstructed at order {fail.certificate['order']}")
            else:
                nonzero = [i + 1 for i, t in enumerate(terms) if not t.is_zero()]
                lines.append(f"    extends to order {args.order}; nonzero terms at orders {nonzero}")
        emit(report, lines, args.json, out)
        return EXIT_OK
    terms = resolve_terms(doc, args.series)
    if args.normalize:
        res = normalize_leading_term(A, DeformationSeries(A, terms))
        report = {"command": "deform", "series": args.series, "normalize": True,
                  "trivial": res.trivial, "leading_order": res.leading_order,
                  "steps": [{"order": n, "phi": cochain_json(phi)} for n, phi in res.steps],
                  "terms": [cochain_json(t) for t in res.series.terms]}
        lines = [f"series {args.series}: {len(res.steps)} trivialization step(s)"]
        lines.append("trivial to the given order" if res.trivial else
                     f"leading term at order {res.leading_order} is not a coboundary")
        for k, t in enumerate(res.series.terms, 1):
            lines.append(f"  F_{k}:")
            lines += cochain_text(t, "    ")
        emit(report, lines, args.json, out)
        return EXIT_OK
    full, fail = _extend_to(A, terms, args.order)
    report = {"command": "deform", "series": args.series, "order": args.order,
              "terms": [cochain_json(t) for t in full],
              "obstructed_at": fail.certificate["order"] if fail else None}
    lines = []
    for k, t in enumerate(full, 1):
        lines.append(f"F_{k}:")
        lines += cochain_text(t)
    if fail:
        c = fail.certificate
        report["certificate"] = c
        lines.append(f"obstructed at order {c['order']}: rank B^3 = {c['rank_B3']}, "
                     f"rank with mu = {c['rank_augmented']}")
    else:
        lines.append(f"integrable to order {args.order}")
    emit(report, lines, args.json, out)
    return EXIT_NEGATIVE if fail else EXIT_OK


def cmd_obstruction(doc, args, out):
    A = doc.algebra
    terms = resolve_terms(doc, args.series)
    mu = obstruction(A, terms)
    p = len(terms) + 1
    cob = in_coboundaries(A, None, mu)
    report = {"command": "obstruction", "series": args.series, "order": p,
              "mu": cochain_json(mu), "mu_is_zero": mu.is_zero(), "mu_is_coboundary": cob}
    lines = [f"mu_{p}:"] + cochain_text(mu, "  ")
    lines.append("mu is a coboundary: the series extends" if cob else
                 "mu is not a coboundary: the series is obstructed")
    emit(report, lines, args.json, out)
    return EXIT_OK if cob else EXIT_NEGATIVE


def cmd_equivalent(doc, args, out):
    A = doc.algebra
    f = resolve_terms(doc, args.f)
    g = resolve_terms(doc, args.g)
    if args.phi is None:
        zero = Cochain(complex_for(A).space(2))
        F = f[0] if f else zero
        G = g[0] if g else zero
        v = first_order_equivalent(A, F, G)
        report = {"command": "equivalent", "f": args.f, "g": args.g, "first_order": True,
                  "equivalent": v.equivalent, "phi": cochain_json(v.phi) if v.phi else None}
        lines = [f"F_1 - G_1 {'is' if v.equivalent else 'is not'} a coboundary"]
        if v.equivalent:
            lines.append("  phi_1 with d phi_1 = F_1 - G_1:")
            lines += cochain_text(v.phi, "    ")
        lines.append("EQUIVALENT" if v.equivalent else "INEQUIVALENT")
        emit(report, lines, args.json, out)
        return EXIT_OK if v.equivalent else EXIT_NEGATIVE
    phis = resolve_terms(doc, args.phi, arity=1)
    p = args.order if args.order is not None else max(len(f), len(g), len(phis), 1)
    ok = verify_equivalence(A, f, g, phis, p)
    report = {"command": "equivalent", "f": args.f, "g": args.g, "phi": args.phi,
              "order": p, "equivalent": ok}
    lines = [f"f = Phi^-1 g(Phi x, Phi y) modulo t^{p + 1}: {'holds' if ok else 'fails'}",
             "EQUIVALENT" if ok else "NOT VERIFIED"]
    emit(report, lines, args.json, out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_specialize(doc, args, out):
    A = doc.algebra
    lam = parse_scalars(args.lam)
    if len(lam) != 1:
        raise InputError("--lambda takes one scalar")
    params = parse_scalars(args.params)
    if args.basis:
        basis = [resolve_terms(doc, b.strip())[0] for b in args.basis.split(",")]
    else:
        basis = [doc.cochains[c] for c in doc.deformation_basis] or infinitesimal_space(A)
    if len(params) != len(basis):
        raise InputError(f"--params has {len(params)} entries for {len(basis)} basis cochains")
    F = Cochain(complex_for(A).space(2))
    for c, b in zip(params, basis):
        F = F + b.scale(c)
    try:
        B = specialize(A, [F], lam[0])
    except GlsymError as exc:
        report = {"command": "specialize", "left_symmetric": False, "error": str(exc)}
        emit(report, [str(exc), "FAIL"], args.json, out)
        return EXIT_NEGATIVE
    simple, cert = is_simple(B)
    report = {"command": "specialize", "lambda": str(lam[0]), "params": [str(p) for p in params],
              "products": [{"left": B.names[i], "right": B.names[j], "value": vec_json(B.names, v)}
                           for (i, j), v in B.table_items()],
              "left_symmetric": True, "simple": simple}
    lines = [f"{B.names[i]}.{B.names[j]} = {fmt_vector(B.names, v)}" for (i, j), v in B.table_items()]
    lines += ["left-symmetric: yes", f"simple: {'yes' if simple else 'no'}"]
    emit(report, lines, args.json, out)
    return EXIT_OK


def cmd_simple(doc, args, out):
    A = doc.algebra
    simple, cert = is_simple(A)
    report = {"command": "simple", "algebra": A.name, "simple": simple, "reason": cert["reason"]}
    lines = [f"{A.name}: {'simple' if simple else 'not simple'} ({cert['reason']})"]
    if "dimension" in cert:
        report["multiplication_algebra_dim"] = cert["dimension"]
        lines.append(f"multiplication algebra dimension: {cert['dimension']} (full: {A.dim ** 2})")
    ideal = cert.get("ideal")
    if ideal:
        report["ideal"] = [vec_json(A.names, v) for v in ideal]
        lines.append("proper ideal spanned by:")
        lines += [f"  {fmt_vector(A.names, v)}" for v in ideal]
    emit(report, lines, args.json, out)
    return EXIT_OK if simple else EXIT_NEGATIVE


COMMANDS = {
    "check": cmd_check, "lie": cmd_lie, "bimodule-check": cmd_bimodule_check,
    "cohomology": cmd_cohomology, "theorem41": cmd_theorem41, "remark42": cmd_remark42,
    "deform": cmd_deform, "obstruction": cmd_obstruction, "equivalent": cmd_equivalent,
    "specialize": cmd_specialize, "simple": cmd_simple,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("document", help="document path or bundled fixture name")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    parser = _Parser(prog="glsym", description="Exact computations for generalized left-symmetric algebras.")
    parser.add_argument("--version", action="version", version=f"glsym {__version__}")
    parser.add_argument("--list-fixtures", action="store_true", help="list bundled fixtures")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("check", parents=[common], help="left-symmetry identity")
    sub.add_parser("lie", parents=[common], help="associated eps-Lie algebra")
    p = sub.add_parser("bimodule-check", parents=[common], help="bimodule identities and flags")
    p.add_argument("--module", default=None)
    p = sub.add_parser("cohomology", parents=[common], help="H^n(S, M)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--module", default=None)
    p.add_argument("--by-degree", action="store_true")
    p = sub.add_parser("theorem41", parents=[common], help="compare with Lie cohomology")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--module", default=None)
    p = sub.add_parser("remark42", parents=[common], help="low-degree dimension identity")
    p.add_argument("--module", default=None)
    p = sub.add_parser("deform", parents=[common], help="extend or normalize deformations")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--series", default=None)
    p.add_argument("--normalize", action="store_true")
    p = sub.add_parser("obstruction", parents=[common], help="obstruction cochain of a series")
    p.add_argument("--series", required=True)
    p = sub.add_parser("equivalent", parents=[common], help="equivalence of two deformations")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--phi", default=None)
    p.add_argument("--order", type=int, default=None)
    p = sub.add_parser("specialize", parents=[common], help="evaluate a first-order deformation")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--basis", default=None)
    sub.add_parser("simple", parents=[common], help="simplicity with certificate")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.list_fixtures:
            out.write("\n".join(list_fixtures()) + "\n")
            return EXIT_OK
        if not args.command:
            raise InputError("a command is required (see --help)")
        doc = load_document(args.document)
        return COMMANDS[args.command](doc, args, out)
    except (InputError, DocumentError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except GlsymError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

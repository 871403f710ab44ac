"""Command-line front end: problem files in, deterministic reports out.

Problem files are TOML with a [ring] section (variables, weights, f) or a
[curve] section (semigroup generators, lambda complement), plus optional
[module], [connection], [connection2], and [options] sections.  Matrix
entries and f are polynomial strings in the documented grammar.  Reports
come in a text rendering and a JSON mirror (--json) carrying identical
numeric content; reruns are byte-identical.

Exit codes: 0 = computed and every assertion passed; 1 = computed but
some assertion failed; 2 = unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import curves as curvemod
from . import milnor as milnormod
from .derlie import bracket as derlie_bracket
from .derlie import derivation_algebra
from .modconn import (Connection, GENERATOR_NAMES, PresentedModule,
                      ScalarExtractionError, check_connection, curvature,
                      equivalent, find_connection, integrability_class)
from .parser import PolynomialSyntaxError
from .polyring import Polynomial, WeightedRing
from .rincomplex import default_window, verify_degree_zero_concentration


class InputError(Exception):
    """Bad problem file or flags: exit code 2."""


# -- problem files ---------------------------------------------------------


def load_problem(path: str) -> dict:
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if ("ring" in data) == ("curve" in data):
        raise InputError(f"{path}: exactly one of [ring] or [curve] is required")
    return data


def build_ring(problem: dict) -> WeightedRing:
    section = problem.get("ring")
    if section is None:
        raise InputError("this command needs a [ring] section")
    try:
        return WeightedRing(section["variables"], section["weights"], section["f"])
    except KeyError as exc:
        raise InputError(f"[ring] is missing {exc}") from exc
    except (PolynomialSyntaxError, ValueError) as exc:
        raise InputError(f"[ring]: {exc}") from exc


def build_module(problem: dict, ring: WeightedRing) -> PresentedModule:
    section = problem.get("module")
    if section is None:
        raise InputError("this command needs a [module] section")
    try:
        return PresentedModule(ring, section["generator_degrees"],
                               section["presentation"])
    except KeyError as exc:
        raise InputError(f"[module] is missing {exc}") from exc
    except (PolynomialSyntaxError, ValueError) as exc:
        raise InputError(f"[module]: {exc}") from exc


def build_connection(problem: dict, module: PresentedModule,
                     key: str = "connection") -> Connection:
    section = problem.get(key)
    if section is None:
        raise InputError(f"this command needs a [{key}] section "
                         f"with matrices E, D1, D2, D3")
    try:
        return Connection.from_mapping(module, section)
    except (PolynomialSyntaxError, ValueError) as exc:
        raise InputError(f"[{key}]: {exc}") from exc


def build_curve(problem: dict) -> tuple[curvemod.LambdaModule, Fraction | None]:
    section = problem.get("curve")
    if section is None:
        raise InputError("this command needs a [curve] section")
    try:
        semigroup = curvemod.analyze_semigroup(section["generators"])
        module = curvemod.LambdaModule(semigroup, tuple(section.get("lambda_complement", ())))
    except KeyError as exc:
        raise InputError(f"[curve] is missing {exc}") from exc
    except ValueError as exc:
        raise InputError(f"[curve]: {exc}") from exc
    c = section.get("c")
    if c is not None:
        try:
            c = Fraction(str(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"[curve]: bad scalar c: {exc}") from exc
    return module, c


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        window = (int(lo), int(hi))
    except ValueError as exc:
        raise InputError(f"--window expects LO..HI, got {text!r}") from exc
    if window[0] > window[1]:
        raise InputError(f"empty window {text!r}")
    return window


def choose_window(args, problem: dict, ring: WeightedRing) -> tuple[int, int]:
    if getattr(args, "window", None):
        return parse_window(args.window)
    options = problem.get("options", {})
    if "window" in options:
        lo, hi = options["window"]
        return (int(lo), int(hi))
    return default_window(ring)


# -- report assembly -------------------------------------------------------


def ring_summary(ring: WeightedRing) -> dict:
    return {
        "variables": list(ring.variable_names),
        "weights": list(ring.weights),
        "f": ring.poly_str(ring.f),
        "d": ring.d,
        "delta": str(ring.delta),
    }


def assertion_dict(a) -> dict:
    return {"name": a.name, "statement": a.statement,
            "passed": a.passed, "details": a.details}


def table_dict(table) -> dict:
    return {
        "window": list(table.window),
        "degrees": [{
            "w": r.degree, "dim_c0": r.dim_c0, "dim_c1": r.dim_c1,
            "dim_c2": r.dim_c2, "rank_d0": r.rank_d0, "rank_d1": r.rank_d1,
            "dim_h0": r.dim_h0, "dim_h1": r.dim_h1, "dim_h2": r.dim_h2,
        } for r in table.records],
        "totals": dict(zip(("h0", "h1", "h2"), table.totals())),
        "notes": list(table.notes),
    }


def cochain_dict(ring, chain) -> dict:
    return {name: ring.poly_str(value.rep)
            for name, value in zip(GENERATOR_NAMES, chain.values)}


def matrix_strings(ring, matrix) -> list[list[str]]:
    return [[ring.poly_str(e.rep) for e in row] for row in matrix]


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _is_table(data) -> bool:
    return (isinstance(data, list) and data
            and all(isinstance(v, dict) for v in data)
            and len({tuple(v.keys()) for v in data}) == 1
            and all(not isinstance(x, (dict, list)) for v in data for x in v.values()))


def _render_table(lines: list[str], rows: list[dict], indent: int):
    pad = " " * indent
    headers = list(rows[0].keys())
    widths = {h: max(len(str(h)), *(len(str(r[h])) for r in rows)) for h in headers}
    lines.append(pad + "  ".join(str(h).rjust(widths[h]) for h in headers))
    for r in rows:
        lines.append(pad + "  ".join(str(r[h]).rjust(widths[h]) for h in headers))


def _render_block(lines: list[str], data, indent: int = 2):
    pad = " " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if _is_table(value):
                lines.append(f"{pad}{key}:")
                _render_table(lines, value, indent + 2)
            elif isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                _render_block(lines, value, indent + 2)
            else:
                rendered = value if not isinstance(value, (dict, list)) else "(none)"
                lines.append(f"{pad}{key}: {rendered}")
    elif isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            lines.append(f"{pad}{', '.join(str(v) for v in data)}")
        else:
            for value in data:
                _render_block(lines, value, indent)
    else:
        lines.append(f"{pad}{data}")


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key, value in report.items():
        if key in ("command", "assertions"):
            continue
        lines.append(f"{key}:")
        _render_block(lines, value)
    assertions = report.get("assertions", [])
    if assertions:
        lines.append("assertions:")
        for a in assertions:
            flag = "PASS" if a["passed"] else "FAIL"
            lines.append(f"  [{flag}] {a['name']}: {a['statement']}")
            lines.append(f"         {a['details']}")
    passed = all(a["passed"] for a in assertions)
    lines.append(f"result: {'all assertions passed' if passed else 'ASSERTION FAILURES'}"
                 if assertions else "result: computed")
    return "\n".join(lines) + "\n"


def emit(report: dict, args) -> int:
    text = render_json(report) if args.json else render_text(report)
    sys.stdout.write(text)
    assertions = report.get("assertions", [])
    return 0 if all(a["passed"] for a in assertions) else 1


# -- commands ---------------------------------------------------------------


def cmd_cohomology(args) -> int:
    problem = load_problem(args.file)
    ring = build_ring(problem)
    window = choose_window(args, problem, ring)
    result = verify_degree_zero_concentration(ring, window)
    table = result.table
    report = {
        "command": f"cohomology {args.file}",
        "ring": ring_summary(ring),
        "tables": {"cohomology": table_dict(table)},
        "representatives": {
            "h1_degree0": [{"combination": rep.label,
                            "values": cochain_dict(ring, rep.cochain)}
                           for rep in table.h1_representatives],
            "h2_degree0": table.h2_representatives,
        },
        "assertions": [assertion_dict(a) for a in result.assertions],
    }
    return emit(report, args)


def cmd_derivations(args) -> int:
    problem = load_problem(args.file)
    ring = build_ring(problem)
    algebra = derivation_algebra(ring)
    fact = algebra.factorization
    f_id = [[ring.f if i == j else Polynomial.zero(3) for j in range(4)] for i in range(4)]
    phi_psi_ok = fact.product(fact.phi, fact.psi) == f_id
    psi_phi_ok = fact.product(fact.psi, fact.phi) == f_id
    wedges = {}
    for i in range(4):
        for j in range(i + 1, 4):
            key = f"{GENERATOR_NAMES[i]}^{GENERATOR_NAMES[j]}"
            wedges[key] = ring.poly_str(algebra.wedge_scalar(i, j).rep)
    brackets = {}
    bracket_ok = True
    weight_pairs = {1: (0, 1), 2: (0, 2), 3: (1, 2)}
    for j in (1, 2, 3):
        a, b = weight_pairs[j]
        expected = Fraction(1) - ring.omega[a] - ring.omega[b]
        lie = derlie_bracket(algebra.generators[0], algebra.generators[j])
        ok = lie == algebra.generators[j].scale(expected)
        brackets[f"[E,{GENERATOR_NAMES[j]}]"] = f"({expected})*{GENERATOR_NAMES[j]}"
        bracket_ok = bracket_ok and ok
    report = {
        "command": f"derivations {args.file}",
        "ring": ring_summary(ring),
        "tables": {
            "generators": {
                name: " , ".join(ring.poly_str(c.rep) for c in g.coeffs)
                for name, g in zip(GENERATOR_NAMES, algebra.generators)},
            "generator_degrees": dict(zip(GENERATOR_NAMES, algebra.generator_degrees)),
            "psi_row_degrees": list(algebra.psi_row_degrees),
            "wedge_scalars": wedges,
            "bracket_relations": brackets,
        },
        "representatives": {},
        "assertions": [
            {"name": "matrix_factorization",
             "statement": "phi*psi = psi*phi = f*I4 as exact polynomial identities",
             "passed": phi_psi_ok and psi_phi_ok,
             "details": f"phi*psi: {phi_psi_ok}, psi*phi: {psi_phi_ok}"},
            {"name": "euler_bracket_relations",
             "statement": "[E, D_i] = (1 - omega_a - omega_b) D_i for the"
                          " matching weight pair of each Koszul derivation",
             "passed": bracket_ok, "details": f"scalars as expected: {bracket_ok}"},
        ],
    }
    return emit(report, args)


def cmd_invariants(args) -> int:
    problem = load_problem(args.file)
    ring = build_ring(problem)
    window = choose_window(args, problem, ring)
    try:
        result = milnormod.verify_mu_tau_cohomology(ring, window)
    except milnormod.NotIsolatedError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": f"invariants {args.file}",
        "ring": ring_summary(ring),
        "tables": {
            "milnor": result.mu,
            "tjurina": result.tau,
            "socle_bound": milnormod.jacobian_data(ring).socle_bound,
            "cohomology": table_dict(result.table),
        },
        "representatives": {},
        "assertions": [assertion_dict(a) for a in result.assertions],
    }
    return emit(report, args)


def _connection_report_header(args, action, ring) -> dict:
    return {
        "command": f"connection {action} {args.file}",
        "ring": ring_summary(ring),
    }


def cmd_connection(args) -> int:
    problem = load_problem(args.file)
    ring = build_ring(problem)
    module = build_module(problem, ring)
    action = args.action
    report = _connection_report_header(args, action, ring)
    module_block = {
        "generator_degrees": list(module.generator_degrees),
        "presentation": matrix_strings(ring, module.presentation),
    }

    if action == "find":
        found = find_connection(module)
        if found is None:
            report["tables"] = {"module": module_block, "found": False}
            report["representatives"] = {}
            report["assertions"] = [{
                "name": "connection_exists",
                "statement": "a homogeneous connection exists on the module "
                             "(solved jointly from descent and linearity)",
                "passed": False, "details": "the exact linear system is inconsistent"}]
            return emit(report, args)
        checked = check_connection(found)
        integrable = curvature(found).integrable
        report["tables"] = {
            "module": module_block,
            "found": True,
            "matrices": {name: matrix_strings(ring, m)
                         for name, m in zip(GENERATOR_NAMES, found.matrices)},
        }
        report["representatives"] = {}
        report["assertions"] = [
            {"name": "found_connection_valid",
             "statement": "the solved matrices satisfy descent and linearity",
             "passed": checked.passed, "details": "; ".join(checked.failures) or "ok"},
            {"name": "found_connection_integrable",
             "statement": "every homogeneous connection on a graded rank-one "
                          "module over such R is integrable",
             "passed": integrable, "details": f"curvature vanishes: {integrable}"},
        ]
        return emit(report, args)

    conn = build_connection(problem, module)
    if action == "check":
        checked = check_connection(conn)
        report["tables"] = {
            "module": module_block,
            "descent": dict(zip(GENERATOR_NAMES, checked.descent)),
            "linearity_on_phi_columns": list(checked.linearity),
        }
        report["representatives"] = {}
        report["assertions"] = [{
            "name": "is_connection",
            "statement": "the matrices define a connection: Leibniz descent "
                         "through the presentation and R-linearity over the "
                         "phi relations",
            "passed": checked.passed,
            "details": "; ".join(checked.failures) or "ok"}]
        return emit(report, args)

    if action == "curvature":
        record = curvature(conn)
        report["tables"] = {
            "module": module_block,
            "pairs": {
                f"{GENERATOR_NAMES[i]}^{GENERATOR_NAMES[j]}": {
                    "matrix": matrix_strings(ring, record.matrices[(i, j)]),
                    "zero_endomorphism": record.zero[(i, j)],
                    "scalar": (ring.poly_str(record.scalars[(i, j)].rep)
                               if record.scalars[(i, j)] is not None else None),
                } for i, j in record.matrices},
            "integrable": record.integrable,
        }
        report["representatives"] = {}
        report["assertions"] = []
        return emit(report, args)

    if action == "class":
        try:
            result = integrability_class(conn)
        except ScalarExtractionError as exc:
            raise InputError(str(exc)) from exc
        report["tables"] = {
            "module": module_block,
            "vanishes": result.vanishes,
            "scalar_curvature": {
                f"{GENERATOR_NAMES[i]}^{GENERATOR_NAMES[j]}":
                    ring.poly_str(result.scalar_curvature[(i, j)].rep)
                for i, j in result.scalar_curvature},
        }
        report["representatives"] = {
            "witness_potential": (cochain_dict(ring, result.witness)
                                  if result.witness is not None else None)}
        assertions = [{
            "name": "integrability_class_decided",
            "statement": "the curvature class in H^2 vanishes iff the module "
                         "admits an integrable connection",
            "passed": True,
            "details": f"vanishes: {result.vanishes}"}]
        if result.vanishes:
            assertions.append({
                "name": "witness_corrects_connection",
                "statement": "subtracting the witness potential yields an "
                             "integrable connection",
                "passed": bool(result.corrected_integrable),
                "details": f"corrected curvature vanishes: {result.corrected_integrable}"})
        report["assertions"] = assertions
        return emit(report, args)

    if action == "equiv":
        conn2 = build_connection(problem, module, key="connection2")
        try:
            same = equivalent(conn, conn2)
        except (ScalarExtractionError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        report["tables"] = {"module": module_block, "equivalent": same}
        report["representatives"] = {}
        report["assertions"] = [{
            "name": "graded_equivalence_decided",
            "statement": "integrable connections are equivalent iff their "
                         "difference potential is a coboundary d0(r) "
                         "(graded form of the H^1 torsor classification)",
            "passed": True, "details": f"equivalent: {same}"}]
        return emit(report, args)

    raise InputError(f"unknown connection action {action!r}")


def cmd_curve(args) -> int:
    problem = load_problem(args.file)
    module, c = build_curve(problem)
    semigroup = module.semigroup
    trichotomy = curvemod.classify_connections(module)
    oracle = curvemod.brute_force_connection_search(module)
    oracle_matches = (
        oracle.exists == trichotomy.admits_connection
        and (trichotomy.kind != "all_scalars" or oracle.scalar_freedom)
        and (trichotomy.kind != "unique"
             or (not oracle.scalar_freedom and oracle.forced_constant == trichotomy.c)))
    report = {
        "command": f"curve {args.file}",
        "curve": {
            "generators": list(semigroup.generators),
            "gaps": list(semigroup.gaps),
            "frobenius": semigroup.frobenius,
            "gamma1": list(semigroup.gamma1),
            "derivation_degrees": list(semigroup.derivation_degrees()),
            "lambda_complement": list(module.complement),
        },
        "tables": {
            "obstruction_set": list(trichotomy.obstruction_set),
            "verdict": trichotomy.kind,
            "c": str(trichotomy.c) if trichotomy.c is not None else None,
            "brute_force": {
                "exists": oracle.exists,
                "scalar_freedom": oracle.scalar_freedom,
                "forced_constant": (str(oracle.forced_constant)
                                    if oracle.forced_constant is not None else None),
                "degree_bound": oracle.bound,
            },
        },
        "representatives": {},
    }
    assertions = [{
        "name": "trichotomy_matches_brute_force",
        "statement": "the obstruction-set trichotomy (none / unique scalar / "
                     "all scalars) agrees with the brute-force potential search",
        "passed": oracle_matches,
        "details": f"verdict {trichotomy.kind}, oracle exists={oracle.exists}, "
                   f"scalar freedom={oracle.scalar_freedom}"}]
    if trichotomy.admits_connection:
        if c is None:
            c = trichotomy.c if trichotomy.kind == "unique" else Fraction(-1)
        try:
            cohomology = curvemod.curve_cohomology(module, c)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        report["tables"]["connection"] = {
            "c": str(c),
            "action": f"nabla_E(t^lam) = (lam - ({c})) t^lam, "
                      f"nabla_(t^w E) = t^w nabla_E for w in Gamma1",
        }
        report["tables"]["cohomology"] = {
            "bound": cohomology.bound,
            "degrees": [{"lam": r.degree, "dim_c0": r.dim_c0, "dim_c1": r.dim_c1,
                         "rank_d0": r.rank_d0, "dim_h0": r.dim_h0, "dim_h1": r.dim_h1}
                        for r in cohomology.records],
            "h1_total": cohomology.h1_total(),
        }
        assertions.append({
            "name": "h1_vanishes",
            "statement": "H^1 of the twisted complex vanishes in every degree "
                         "up to the stabilization bound for the chosen connection",
            "passed": cohomology.h1_all_zero,
            "details": f"c = {c}, nonzero H^1 degrees: "
                       f"{[r.degree for r in cohomology.records if r.dim_h1]}"})
        integrable = curvemod.curvature_vanishes_symbolically(module, c, cohomology.bound)
        assertions.append({
            "name": "curvature_vanishes",
            "statement": "on a curve every connection is integrable: the "
                         "curvature on each generator pair cancels exactly",
            "passed": integrable, "details": f"symbolic expansion zero: {integrable}"})
    report["assertions"] = assertions
    return emit(report, args)


# -- entry point -------------------------------------------------------------


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rinehart",
        description="Exact Lie-Rinehart cohomology and connection calculus "
                    "for quasi-homogeneous surface singularities and "
                    "monomial curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="problem file (TOML)")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--window", help="degree window LO..HI", default=None)

    p = sub.add_parser("cohomology", help="graded cohomology table and the "
                                          "degree-0 concentration checks")
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("derivations", help="generators, matrix factorization, "
                                           "brackets, wedge table")
    common(p)
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("invariants", help="Milnor/Tjurina numbers and the "
                                          "mu - tau cohomology cross-check")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("connection", help="connection calculus on a presented module")
    p.add_argument("action", choices=["find", "check", "curvature", "class", "equiv"])
    common(p)
    p.set_defaults(func=cmd_connection)

    p = sub.add_parser("curve", help="monomial curve trichotomy and cohomology")
    common(p)
    p.set_defaults(func=cmd_curve)
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolynomialSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

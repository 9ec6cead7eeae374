"""Command-line entry point.

Exit codes: 0 all checks passed, 1 at least one verification failure,
2 input or usage error, 3 resource limit exceeded.  Output is byte-stable
for identical inputs and options.
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys

from . import atlas as atlas_mod
from .coverfile import GroupRecord, parse_cover_file, parse_document
from .errors import CoverFileError, Error, ResourceLimitExceeded
from .fiberprod import irreducibility_report
from .homology import cover_h1_dim, cover_h1_dim_cw, dimension_table, verify_formulas
from .monodromy import components, validate
from .operators import (
    build_operator,
    eigen_decompose,
    expected_multiplicity,
    torsion_exponents,
    verify_equivariance,
    verify_min_equation,
    verify_subquotient_action,
)
from .perms import PermGroup
from .report import Report

USAGE_ERROR = 2
RESOURCE_ERROR = 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fibercorr",
        description="Exact verification of the one-coordinate-change correspondence "
        "on fiber products of surface covers.",
    )
    parser.add_argument("--out", metavar="PATH", default=None, help="also write a machine-readable JSON report")
    parser.add_argument(
        "--max-fiber",
        type=int,
        default=100_000,
        metavar="N",
        help="resource limit on the fiber size n^l (default 100000)",
    )
    # the same options are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--max-fiber", type=int, metavar="N", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("validate", help="check a cover file: degrees and the surface relation")
    p.add_argument("file")

    p = sub.add_parser("components", help="components and genera of the product cover")
    p.add_argument("file")

    p = sub.add_parser("transitivity", help="k-transitivity of the base monodromy group")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("minpoly", help="minimal equation and eigen multiplicities of the operator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("dims", help="eigenvalue-refined dimension table for a cover file")
    p.add_argument("file")

    p = sub.add_parser("torsion", help="torsion annihilator exponents of the elimination system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("subquotient", help="one subquotient containment check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument(
        "--subset",
        default="",
        help="comma-separated coordinates in 1..ell; empty for the empty set",
    )

    p = sub.add_parser("atlas", help="list or check the builtin group fixtures")
    p.add_argument("action", choices=["list", "check"])
    p.add_argument("name", nargs="?", help="check a single entry by name")
    p.add_argument("--file", help="check a 'type group' file instead of builtins")

    p = sub.add_parser("report", help="the full verification pipeline for a cover file")
    p.add_argument("file")

    return parser


def _load_cover(path, max_fiber):
    cf = parse_cover_file(path)
    return cf, cf.product(max_fiber=max_fiber)


def _add_validate_records(report, cf):
    covers = cf.factor_covers()
    for i, cover in enumerate(covers, 1):
        v = validate(cover)
        report.check(
            f"validate.factor[{i}]",
            "generator degrees match and the surface relation holds",
            v.ok,
            failures=list(v.failures),
        )
    return all(validate(c).ok for c in covers)


def cmd_validate(args, report):
    cf = parse_cover_file(args.file)
    _add_validate_records(report, cf)


def cmd_components(args, report):
    _, pc = _load_cover(args.file, args.max_fiber)
    comp = components(pc.as_cover())
    report.add(
        "components.count",
        "orbit decomposition of the product fiber",
        "pass",
        components=comp.component_count,
        degrees=comp.degrees,
        genera=comp.genera,
        total_genus=comp.total_genus,
    )
    euler = sum(2 * g - 2 for g in comp.genera)
    expected = pc.fiber_size * (2 * pc.genus - 2)
    report.check(
        "components.euler",
        "component Euler characteristics sum to degree times base Euler characteristic",
        euler == expected,
        expected=expected,
        actual=euler,
    )


def cmd_transitivity(args, report):
    cf, pc = _load_cover(args.file, args.max_fiber)
    group = PermGroup(pc.n, pc.factors[0].gen_images)
    if not 1 <= args.k <= pc.n:
        raise ValueError(f"--k must be in 1..{pc.n}, got {args.k}")
    # definitional orbit route when the tuple count fits the limit
    method = "orbit" if math.perm(pc.n, args.k) <= args.max_fiber else "chain"
    result = group.is_k_transitive(args.k, method=method)
    report.add(
        "transitivity.k",
        f"single orbit on injective {args.k}-tuples",
        "pass",
        k=args.k,
        transitive=result,
        method=method,
        max_transitivity=group.max_transitivity(),
    )


def _add_operator_records(report, op):
    mat = op.matrix
    eq = verify_min_equation(op)
    report.check(
        "min_equation.zero",
        "the product of (M - (n*r - ell)*I) over r = 0..ell is the zero matrix",
        eq.full_product_zero,
        roots=eq.roots,
    )
    report.check(
        "min_equation.minimal",
        "every drop-one subproduct is nonzero",
        eq.minimal,
        nonzero_after_dropping={str(r): ok for r, ok in eq.dropped_root_nonzero},
    )
    report.check(
        "operator.symmetric",
        "the operator matrix equals its transpose",
        mat.is_symmetric(),
    )
    report.check(
        "operator.zero_diagonal",
        "the correspondence is fixed-point free",
        all(v == 0 for v in mat.diagonal()),
    )
    row_sums = set(mat.row_sums())
    report.check(
        "operator.row_sums",
        "every row sums to the correspondence degree ell*(n-1)",
        row_sums == {op.degree},
        expected=op.degree,
    )
    return eq


def _add_eigen_records(report, op):
    dec = eigen_decompose(op)
    mults = [c.multiplicity for c in dec.components]
    roots = [c.eigenvalue for c in dec.components]
    report.add(
        "eigen.summary",
        "roots and multiplicities of the operator",
        "pass",
        roots=roots,
        multiplicities=mults,
    )
    for c in dec.components:
        report.check(
            f"eigen.multiplicity[r={c.r}]",
            "projector rank equals C(ell,r)*(n-1)^(ell-r)",
            c.multiplicity == expected_multiplicity(op.n, op.ell, c.r),
            eigenvalue=c.eigenvalue,
            rank=c.multiplicity,
            expected=expected_multiplicity(op.n, op.ell, c.r),
        )
    report.check(
        "eigen.total",
        "multiplicities sum to the fiber size",
        sum(mults) == op.fiber_size,
        total=sum(mults),
        fiber=op.fiber_size,
    )
    return dec


def cmd_minpoly(args, report):
    op = build_operator(args.n, args.ell, max_fiber=args.max_fiber)
    _add_operator_records(report, op)
    _add_eigen_records(report, op)


def _add_dims_records(report, pc):
    table = dimension_table(pc, max_fiber=pc.fiber_size)
    formulas = verify_formulas(table)
    report.add(
        "dims.table",
        "d_r = half the twisted first-cohomology dimension per eigenvalue",
        "pass",
        eigenvalues=table.eigenvalues,
        dims=table.dims,
        genus_total=table.genus_total,
        components=table.component_count,
    )
    for check in formulas.checks:
        if check.status == "hypothesis_not_met":
            report.flag(
                f"dims.{check.name}",
                "hypothesis not met: the product cover is not irreducible",
                components=table.component_count,
            )
        else:
            report.check(
                f"dims.{check.name}",
                "dimension identity",
                check.status == "pass",
                expected=check.expected,
                actual=check.actual,
            )
    report.add(
        "dims.isogeny_factors",
        "lower bound on the number of isogeny factors",
        "pass",
        bound=formulas.isogeny_factor_lower_bound,
    )
    return table


def cmd_dims(args, report):
    _, pc = _load_cover(args.file, args.max_fiber)
    _add_dims_records(report, pc)


def cmd_torsion(args, report):
    system = torsion_exponents(args.n, args.ell)
    report.check(
        "torsion.bounds",
        "every annihilator exponent e_r divides r!(ell-r)!*n^ell",
        system.bounds_hold,
        exponents=system.exponents,
        bounds=system.bounds,
        relation_matrix=[list(row) for row in system.relation_matrix],
    )


def cmd_subquotient(args, report):
    subset = tuple(int(tok) for tok in args.subset.replace(",", " ").split())
    op = build_operator(args.n, args.ell, max_fiber=args.max_fiber)
    result = verify_subquotient_action(op, subset)
    report.check(
        f"subquotient[{','.join(map(str, result.subset)) or 'empty'}]",
        "(M - eigenvalue*I) maps the lift span into the span of proper lifts",
        result.contained,
        subset=result.subset,
        eigenvalue=result.eigenvalue,
        lift_dim=result.lift_dim,
    )


def cmd_atlas(args, report):
    if args.file is not None:
        doc = parse_document(args.file)
        if not isinstance(doc, GroupRecord):
            raise CoverFileError("expected a 'type group' file")
        entries = [
            atlas_mod.AtlasEntry(
                name=doc.name or "user group",
                degree=doc.degree,
                generators=doc.generators,
                expected_order=doc.expected_order,
                expected_max_transitivity=doc.expected_max_transitivity,
                provenance="user file",
            )
        ]
    else:
        entries = list(atlas_mod.builtin_entries())
        if args.name is not None:
            entries = [atlas_mod.entry_by_name(args.name)]
    if args.action == "list":
        for entry in entries:
            report.add(
                f"atlas.entry[{entry.name}]",
                entry.provenance,
                "pass",
                degree=entry.degree,
                expected_order=entry.expected_order,
                expected_max_transitivity=entry.expected_max_transitivity,
                generators=[str(g) for g in entry.generators],
            )
        return
    for entry in entries:
        result = atlas_mod.check_entry(entry)
        report.check(
            f"atlas.check[{entry.name}]",
            "recomputed order and max transitivity match the expectations",
            result.passed,
            order=result.computed_order,
            max_transitivity=result.computed_max_transitivity,
            mismatches=list(result.mismatches),
        )


def cmd_report(args, report):
    cf, pc = _load_cover(args.file, args.max_fiber)
    _add_validate_records(report, cf)

    irr = irreducibility_report(pc)
    values = {
        "transitive_on_fiber": irr.transitive_on_fiber,
        "orbit_sizes": irr.orbit_sizes,
        "factors_all_equal": irr.factors_all_equal,
        "ell_transitive": irr.monodromy_ell_transitive,
        "injective_tuple_transitive": irr.injective_tuple_transitive,
        "note": irr.note,
    }
    if irr.flagged:
        report.flag(
            "irreducibility.consistency",
            "full-fiber transitivity disagrees with ell-transitivity",
            **values,
        )
    else:
        report.check(
            "irreducibility.consistency",
            "orbit facts are internally consistent",
            True,
            **values,
        )

    op = build_operator(pc.n, pc.ell, max_fiber=args.max_fiber)
    _add_operator_records(report, op)
    _add_eigen_records(report, op)

    equiv = verify_equivariance(op, pc)
    report.check(
        "operator.equivariance",
        "the operator commutes with every product-action generator",
        equiv.passed,
        failing_generators=equiv.failing_generators,
    )

    for r in range(pc.ell + 1):
        for subset in itertools.combinations(range(1, pc.ell + 1), r):
            result = verify_subquotient_action(op, subset)
            report.check(
                f"subquotient[{','.join(map(str, subset)) or 'empty'}]",
                "(M - eigenvalue*I) maps the lift span into the span of proper lifts",
                result.contained,
                eigenvalue=result.eigenvalue,
            )

    _add_dims_records(report, pc)

    cover = pc.as_cover()
    fox = cover_h1_dim(cover)
    cw = cover_h1_dim_cw(cover)
    report.check(
        "h1.oracle_agreement",
        "Fox-calculus and CW-chain H^1 dimensions agree on the product cover",
        fox == cw,
        fox=fox,
        cw=cw,
    )

    system = torsion_exponents(pc.n, pc.ell)
    report.check(
        "torsion.bounds",
        "every annihilator exponent e_r divides r!(ell-r)!*n^ell",
        system.bounds_hold,
        exponents=system.exponents,
        bounds=system.bounds,
    )


_HANDLERS = {
    "validate": cmd_validate,
    "components": cmd_components,
    "transitivity": cmd_transitivity,
    "minpoly": cmd_minpoly,
    "dims": cmd_dims,
    "torsion": cmd_torsion,
    "subquotient": cmd_subquotient,
    "atlas": cmd_atlas,
    "report": cmd_report,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(command=args.command)
    try:
        _HANDLERS[args.command](args, report)
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except CoverFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    sys.stdout.write(report.render_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
Command implementations. Each cmd_* takes parsed arguments, prints to
stdout and returns the process exit code; SednErrors propagate to main().
"""
import json

from common.errors import (
    EXIT_CONFLICT,
    EXIT_INVALID_LABELING,
    EXIT_MISMATCH,
    EXIT_OK,
)
from common.settings import get_settings
from modules.constructor.construct import construct
from modules.constructor.plans import quota_plan
from modules.graph_core.models.params import TripartiteParams
from modules.graph_core.verifier import verify
from modules.oracle.dispatch import gamma
from modules.reports.pdf_export import create_table_pdf
from modules.solver.lemma_scan import optimum_vertex_weight_scan
from modules.solver.models.solve_report import SolveConfig
from modules.solver.search import solve_exact
from services.data_service import DataService
from views.sweep import (
    CONJECTURE_HEADER,
    CSV_HEADER,
    CSV_VERSION,
    MISMATCH,
    conjecture_rows,
    parse_range,
    run_sweep,
    summarize,
    triples_up_to,
)

MAX_LISTED_VIOLATIONS = 10


def params_from(args):
    return TripartiteParams(args.m, args.n, args.p)


def _print_json(data):
    print(json.dumps(data, indent=2))


def cmd_gamma(args):
    result = gamma(params_from(args))
    if args.json:
        _print_json(result.to_dict())
    elif result.is_conflict:
        pairs = ", ".join(f"{tag} = {value}" for tag, value in result.conflict)
        print(f"conflict: {pairs}")
    else:
        print(f"{result.value} [{', '.join(str(tag) for tag in result.tags)}]")
    if result.is_disputed and not args.json:
        print(f"exhaustive search proves {result.proven_optimum}")
    if args.report:
        DataService().save_report(result.to_dict(), args.report)
    return EXIT_CONFLICT if result.is_conflict else EXIT_OK


def cmd_construct(args):
    params = params_from(args)
    if args.show_plan:
        print(quota_plan(params).describe())
    labeling, tag = construct(params)
    result = gamma(params)
    claimed = result.value_for(tag)
    suffix = f" (not minimum: exhaustive search proves {result.proven_optimum})" if result.is_disputed else ""
    print(f"weight {labeling.weight}, {tag}{suffix}")

    out = args.out
    if out is None and args.save:
        out = DataService().default_path("certificates", params)
    if out is not None:
        DataService().save_labeling(labeling, out, case_tag=tag, claimed_gamma=claimed)
        print(f"certificate written to {out}")
    return EXIT_OK


def cmd_verify(args):
    labeling, sidecar = DataService().load_labeling(args.file)
    report = verify(labeling)
    if args.json:
        data = report.to_dict()
        data.update(sidecar)
        _print_json(data)
    elif report.is_sedf:
        print(f"SEDF, weight {report.weight}")
    else:
        print(f"NOT SEDF, {len(report.violations)} violations")
        for edge, value in report.violations[:MAX_LISTED_VIOLATIONS]:
            print(f"  edge {edge} ({labeling.params.edge_name(edge)}): f[e] = {value}")
        if len(report.violations) > MAX_LISTED_VIOLATIONS:
            print(f"  ... {len(report.violations) - MAX_LISTED_VIOLATIONS} more")

    claimed = sidecar.get("claimed_gamma")
    if claimed is not None and report.is_sedf and claimed != report.weight and not args.json:
        print(f"note: file claims gamma {claimed}, verified weight is {report.weight}")
    return EXIT_OK if report.is_sedf else EXIT_INVALID_LABELING


def cmd_solve(args):
    params = params_from(args)
    config = SolveConfig.from_settings(
        get_settings(),
        max_edges=args.max_edges,
        parallel_width=args.threads,
        symmetry_pruning=not args.no_symmetry,
        bound_pruning=not args.no_bound,
    )
    report = solve_exact(params, config)
    scan = optimum_vertex_weight_scan(report) if args.scan and report.exhausted else None

    data = report.to_dict()
    if scan is not None:
        data["vertex_weight_scan"] = scan.to_dict()
    if args.report:
        DataService().save_report(data, args.report)

    if args.json:
        _print_json(data)
    else:
        state = "proven" if report.exhausted else "not proven (cancelled)"
        print(f"optimum {report.optimum} ({state})")
        print(f"  start {report.initial_incumbent}, nodes {report.nodes_explored}, "
              f"pruned: bound {report.pruned_bound}, symmetry {report.pruned_symmetry}, "
              f"feasibility {report.pruned_feasibility}; {report.elapsed_seconds:.3f}s")
        if scan is not None:
            bound = f">= {scan.bound.bound} ({scan.bound.parity_class})" if scan.bound else "none"
            print(f"  min vertex weight {scan.minima} (raw {scan.raw_minima}); W bound {bound}: {scan.status}")

    out = args.out
    if out is None and args.save:
        out = DataService().default_path("solver", params)
    if out is not None:
        DataService().save_labeling(report.certificate, out, claimed_gamma=report.optimum)
    return EXIT_OK


def cmd_sweep(args):
    if args.range:
        triples = parse_range(args.range)
    else:
        triples = triples_up_to(args.max_sum)

    config = None
    if args.with_solver:
        config = SolveConfig.from_settings(get_settings(), max_edges=args.max_edges)
    rows = run_sweep(triples, with_solver=args.with_solver, solver_config=config, workers=args.workers)

    service = DataService()
    if args.csv:
        service.save_table(args.csv, CSV_HEADER, [r.csv_fields() for r in rows], comment=CSV_VERSION)
    else:
        print(f"# {CSV_VERSION}")
        print(",".join(CSV_HEADER))
        for row in rows:
            print(",".join(str(x) for x in row.csv_fields()))
    summary = summarize(rows)
    print(f"# {len(rows)} rows: {summary}")

    if args.pdf:
        create_table_pdf(args.pdf, "Sweep: closed forms, constructions and exact search",
                         CSV_HEADER, [r.csv_fields() for r in rows],
                         summary_lines=[f"{len(rows)} rows: {summary}"], status_column=6)
    return EXIT_MISMATCH if any(row.status == MISMATCH for row in rows) else EXIT_OK


def cmd_conjecture(args):
    rows = conjecture_rows(args.max_sum)
    for row in rows:
        if row.status in ("TIGHT", "EXCEEDS", "CONFLICT", "UNCOVERED") or row.finding or args.all:
            label = " (expected family)" if row.expected_tight else ""
            if row.searched:
                label += " [exhaustive search]"
            slack = "" if row.slack is None else f", slack {row.slack}"
            print(f"{row.m} {row.n} {row.p}: {row.status}{slack}{label}")

    tight = [r for r in rows if r.status == "TIGHT"]
    findings = [r for r in rows if r.finding]
    exceeds = [r for r in rows if r.status == "EXCEEDS"]
    skipped = [r for r in rows if r.status in ("CONFLICT", "UNCOVERED")]
    summary = (f"{len(rows)} triples, {len(tight)} tight, {len(findings)} findings, "
               f"{len(exceeds)} above the bound, {len(skipped)} without a single value")
    print(summary)

    if args.pdf:
        create_table_pdf(args.pdf, "Conjectured bound gamma <= |V| - 1", CONJECTURE_HEADER,
                         [r.fields() for r in rows], summary_lines=[summary], status_column=6)
    return EXIT_MISMATCH if exceeds else EXIT_OK

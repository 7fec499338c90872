#!/usr/bin/env python3
"""CLI for the graph symmetry toolkit"""
import json
import sys
from typing import List, Optional

import click
import typer
from rich.console import Console
from rich.table import Table

from distinguish.predicted import predicted_for_entry
from distinguish.search import distinguishing_number, graph_distinguishing_index, graph_distinguishing_number
from graphs.graph6 import iter_graph6_file, to_graph6
from graphs.io import read_edge_list, save_witness, witness_record, write_edge_list
from graphs.witnesses import asymmetric_witness, construct_example1, construct_figure1, figure1_labels
from groups.catalog import default_catalog
from groups.subgroups import is_simple
from harness.runner import CAMPAIGNS, EXIT_USAGE, exit_code, graph6_corpus, run_all, run_campaign
from models.campaign_models import CampaignReport, CampaignSuite
from models.config_models import ToolkitConfig
from models.distinguish_models import DistinguishingVerdict
from models.graph_models import Graph
from symmetry.automorphisms import automorphism_group
from symmetry.orbits import orbit_structure, uniformity
from symmetry.uniform import uniform_decomposition
from utils.config_loader import ConfigLoader
from utils.errors import SymmetryToolkitError

app = typer.Typer(
    name="symkit",
    help="Automorphism groups, distinguishing numbers and distinguishing indices of graphs",
    add_completion=False
)
console = Console()


def _fail(message: str, code: int = EXIT_USAGE):
    console.print(f"[bold red]Error: {message}[/bold red]")
    raise typer.Exit(code=code)


def _load_config(config: Optional[str], budget_order: Optional[int] = None,
                 workers: Optional[int] = None) -> ToolkitConfig:
    toolkit = ConfigLoader.load_toolkit_config(config)
    if budget_order is not None:
        toolkit.budgets.max_group_order = budget_order
    if workers is not None:
        toolkit.harness.workers = workers
    return toolkit


def _load_graph(graph6: Optional[str], edges: Optional[str]) -> Graph:
    if (graph6 is None) == (edges is None):
        _fail("give exactly one of --graph6 FILE or --edges FILE")
    if edges is not None:
        return read_edge_list(edges)
    for graph in iter_graph6_file(graph6):
        return graph
    _fail(f"no graph in {graph6}")


def _write_json(path: str, data):
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True, default=str)
    console.print(f"[green]✓ Saved to {path}[/green]")


GRAPH6_OPTION = typer.Option(None, "--graph6", help="graph6 file (first graph is used)")
EDGES_OPTION = typer.Option(None, "--edges", help="Edge list file: 'u v' per line, optional 'n=' header")
JSON_OPTION = typer.Option(None, "--json", help="Write the result as JSON")
CONFIG_OPTION = typer.Option(None, "--config", "-c", help="Config file (YAML/JSON)")
WORKERS_OPTION = typer.Option(None, "--workers", help="Worker processes")


@app.command()
def aut(
    graph6: Optional[str] = GRAPH6_OPTION,
    edges: Optional[str] = EDGES_OPTION,
    output: Optional[str] = JSON_OPTION,
    config: Optional[str] = CONFIG_OPTION,
):
    """Automorphism group of a graph"""
    try:
        toolkit = _load_config(config)
        graph = _load_graph(graph6, edges)
        G = automorphism_group(graph, toolkit.budgets.max_vertices)
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))
    console.print(f"[bold blue]Aut[/bold blue] of a graph on {graph.vertex_count} vertices, {graph.edge_count} edges")
    console.print(f"Order: [bold]{G.order()}[/bold]")
    for g in G.generators:
        console.print(f"  {g.cycle_string()}")
    console.print(f"Orbits: {G.orbits()}")
    if output:
        _write_json(output, {"order": G.order(), "generators": [list(g.images) for g in G.generators],
                             "orbits": G.orbits()})


@app.command()
def orbits(
    graph6: Optional[str] = GRAPH6_OPTION,
    edges: Optional[str] = EDGES_OPTION,
    output: Optional[str] = JSON_OPTION,
):
    """Vertex orbits, edge-orbits, orbitals and uniformity of a graph"""
    try:
        graph = _load_graph(graph6, edges)
        G = automorphism_group(graph)
        structure = orbit_structure(graph, G)
        report = uniformity(graph, G)
        decomposition = uniform_decomposition(graph, G)
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))

    table = Table(title="Orbit Structure")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Aut order", str(G.order()))
    table.add_row("Vertex orbits", str(structure.vertex_orbits))
    table.add_row("Edge-orbit sizes", str(structure.edge_orbit_sizes()))
    table.add_row("Orbital sizes", str(structure.orbital_sizes()))
    table.add_row("Uniform (strict)", str(report.strict))
    table.add_row("Uniform (essential)", str(report.essential))
    if decomposition.applicable:
        table.add_row("Decomposition", decomposition.shape())
        table.add_row("Bijections", "ok" if decomposition.bijections_ok else "broken")
        table.add_row("Matches group", str(decomposition.matches_prediction))
    else:
        table.add_row("Decomposition", decomposition.reason or "n/a")
    console.print(table)
    if output:
        _write_json(output, {"structure": structure.model_dump(), "uniformity": report.model_dump(),
                             "decomposition": decomposition.model_dump()})


def _print_verdict(label: str, verdict: DistinguishingVerdict):
    if verdict.value is not None:
        console.print(f"{label}: [bold green]{verdict.value}[/bold green]")
    else:
        console.print(f"{label}: [bold yellow]{verdict.lower_bound} <= value <= {verdict.upper_bound}[/bold yellow]")
    if verdict.witness is not None:
        console.print(f"Witness colors: {list(verdict.witness.colors)}")
    console.print(f"Minimality: {verdict.proof_of_minimality.value}, nodes expanded: {verdict.nodes_expanded}")
    for note in verdict.notes:
        console.print(f"[yellow]{note}[/yellow]")


@app.command()
def dist(
    graph6: Optional[str] = GRAPH6_OPTION,
    edges: Optional[str] = EDGES_OPTION,
    catalog: Optional[str] = typer.Option(None, "--catalog", help="Named group instead of a graph"),
    budget_order: Optional[int] = typer.Option(None, "--budget-order", help="Largest group order searched"),
    workers: Optional[int] = WORKERS_OPTION,
    seed: int = typer.Option(0, "--seed", help="Scheduling seed; never changes results"),
    output: Optional[str] = JSON_OPTION,
    config: Optional[str] = CONFIG_OPTION,
):
    """Distinguishing number of a graph or of a named group"""
    toolkit = _load_config(config, budget_order, workers)
    try:
        if catalog:
            G = default_catalog().group(catalog)
            verdict = distinguishing_number(G, toolkit.budgets, toolkit.harness.workers)
        else:
            graph = _load_graph(graph6, edges)
            verdict = graph_distinguishing_number(graph, toolkit.budgets, toolkit.harness.workers)
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))
    _print_verdict("distinguishing number", verdict)
    if output:
        _write_json(output, verdict.summary())


@app.command("dist-index")
def dist_index(
    graph6: Optional[str] = GRAPH6_OPTION,
    edges: Optional[str] = EDGES_OPTION,
    budget_order: Optional[int] = typer.Option(None, "--budget-order", help="Largest group order searched"),
    workers: Optional[int] = WORKERS_OPTION,
    seed: int = typer.Option(0, "--seed", help="Scheduling seed; never changes results"),
    output: Optional[str] = JSON_OPTION,
    config: Optional[str] = CONFIG_OPTION,
):
    """Distinguishing index of a graph (colors on edges)"""
    toolkit = _load_config(config, budget_order, workers)
    try:
        graph = _load_graph(graph6, edges)
        verdict = graph_distinguishing_index(graph, toolkit.budgets, toolkit.harness.workers)
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))
    _print_verdict("distinguishing index", verdict)
    if output:
        _write_json(output, verdict.summary())


@app.command()
def simple(
    catalog: Optional[str] = typer.Option(None, "--catalog", help="Named group"),
    graph6: Optional[str] = GRAPH6_OPTION,
    edges: Optional[str] = EDGES_OPTION,
    config: Optional[str] = CONFIG_OPTION,
):
    """Is the named group (or the automorphism group of a graph) simple?"""
    toolkit = _load_config(config)
    try:
        if catalog:
            G = default_catalog().group(catalog)
        else:
            G = automorphism_group(_load_graph(graph6, edges), toolkit.budgets.max_vertices)
        result = is_simple(G, toolkit.budgets.simplicity_order)
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))
    console.print("true" if result else "false")


@app.command("catalog")
def catalog_command(
    check_orders: bool = typer.Option(False, "--check-orders", help="Rebuild groups and compare orders"),
    budget_order: Optional[int] = typer.Option(None, "--budget-order", help="Largest order rebuilt"),
):
    """List the named groups"""
    groups = default_catalog()
    checked = groups.verify_orders(budget_order or ToolkitConfig().budgets.max_group_order) if check_orders else {}
    table = Table(title="Group Catalog")
    table.add_column("Name", style="cyan")
    table.add_column("Degree", style="green")
    table.add_column("Order", style="green")
    table.add_column("Family")
    table.add_column("Predicted D", style="green")
    if check_orders:
        table.add_column("Order check")
    for name in groups.names():
        entry = groups.entry(name)
        row = [name, str(entry.degree), str(entry.order), entry.family,
               str(predicted_for_entry(entry)) + ("" if entry.d_verified else " (unverified)")]
        if check_orders:
            row.append({True: "ok", False: "MISMATCH"}.get(checked.get(name), "skipped"))
        table.add_row(*row)
    console.print(table)
    if check_orders and not all(checked.values()):
        raise typer.Exit(code=1)


@app.command()
def witness(
    kind: str = typer.Argument(..., help="example1, figure1 or asymmetric"),
    r: int = typer.Option(2, "--r", help="Copies (example1)"),
    m: int = typer.Option(6, "--m", help="Vertices per copy (example1, asymmetric)"),
    n: int = typer.Option(5, "--n", help="Orbit size (figure1)"),
    no_xy: bool = typer.Option(False, "--no-xy", help="Drop the x-y edge (figure1)"),
    output: Optional[str] = JSON_OPTION,
    edges_out: Optional[str] = typer.Option(None, "--edges-out", help="Write an edge list"),
):
    """Construct a witness graph"""
    labels: List[str] = []
    try:
        if kind == "example1":
            graph, params = construct_example1(r, m), {"r": r, "m": m}
        elif kind == "figure1":
            graph, params = construct_figure1(n, with_xy_edge=not no_xy), {"n": n}
            labels = figure1_labels(n)
        elif kind == "asymmetric":
            graph, params = asymmetric_witness(m), {"m": m}
        else:
            _fail(f"unknown witness {kind!r} (choose example1, figure1 or asymmetric)")
    except (SymmetryToolkitError, OSError) as e:
        _fail(str(e))
    console.print(f"[bold blue]{kind}[/bold blue] {params}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    console.print(to_graph6(graph))
    if output:
        save_witness(output, witness_record(kind, graph, params, labels))
        console.print(f"[green]✓ Witness saved to {output}[/green]")
    if edges_out:
        write_edge_list(edges_out, graph)


def _campaign_table(reports: List[CampaignReport]) -> Table:
    table = Table(title="Verification Campaigns")
    table.add_column("Campaign", style="cyan")
    table.add_column("Status")
    table.add_column("Records", style="green")
    table.add_column("Passed", style="green")
    table.add_column("Out of scope")
    table.add_column("Unknown", style="yellow")
    table.add_column("Counterexamples", style="red")
    for report in reports:
        colour = {"passed": "green", "failed": "red"}.get(report.status.value, "yellow")
        table.add_row(report.campaign, f"[{colour}]{report.status.value.upper()}[/{colour}]",
                      str(report.total_records), str(report.passed_records),
                      str(report.out_of_scope_records), str(report.unknown_records),
                      ", ".join(report.counterexamples) or "-")
    return table


@app.command()
def verify(
    target: str = typer.Argument(..., help=f"{', '.join(CAMPAIGNS)} or all"),
    graph6: Optional[str] = typer.Option(None, "--graph6", help="graph6 corpus for the main campaign "
                                                              "instead of the enumerated graphs"),
    budget_order: Optional[int] = typer.Option(None, "--budget-order", help="Largest group order searched"),
    workers: Optional[int] = WORKERS_OPTION,
    seed: int = typer.Option(0, "--seed", help="Scheduling seed; never changes results"),
    extended: bool = typer.Option(False, "--extended", help="Include slow catalog groups"),
    corpus_max: Optional[int] = typer.Option(None, "--corpus-max", help="Largest corpus graph order"),
    output: Optional[str] = JSON_OPTION,
    config: Optional[str] = CONFIG_OPTION,
):
    """Run verification campaigns; exit 1 on a counterexample, 2 when a budget left records unknown"""
    toolkit = _load_config(config, budget_order, workers)
    if corpus_max is not None:
        toolkit.harness.corpus_max_vertices = corpus_max
    if target != "all" and target not in CAMPAIGNS:
        _fail(f"unknown campaign {target!r} (choose {', '.join(CAMPAIGNS)} or all)")
    corpus = None
    if graph6 is not None:
        try:
            corpus = graph6_corpus(iter_graph6_file(graph6))
        except (SymmetryToolkitError, OSError) as e:
            _fail(str(e))
        console.print(f"Read {len(corpus)} graphs from {graph6}")

    console.print(f"[bold blue]Verifying {target}[/bold blue]\n")
    if target == "all":
        suite = run_all(toolkit, toolkit.harness.workers, seed, extended, corpus=corpus)
    else:
        suite = CampaignSuite(campaigns=[run_campaign(target, toolkit, toolkit.harness.workers, seed,
                                                      extended, corpus)])
    console.print(_campaign_table(suite.campaigns))
    if output:
        data = suite.deterministic_dump()
        data["status"] = suite.status.value
        data["timing"] = {c.campaign: {"started_at": c.started_at, "completed_at": c.completed_at,
                                       "elapsed_seconds": c.elapsed_seconds}
                          for c in suite.campaigns}
        _write_json(output, data)
    code = exit_code(suite.status)
    if code:
        console.print(f"[bold red]Verification {suite.status.value}[/bold red]")
    else:
        console.print("[green]✓ Verification passed[/green]")
    raise typer.Exit(code=code)


@app.command()
def generate_config(
    output: str = typer.Option("symkit_config.yaml", "--output", "-o", help="Output config file"),
):
    """Generate a template configuration file"""
    ConfigLoader.save_config(ConfigLoader.create_default_config(), output)
    console.print(f"[green]✓ Configuration template saved to {output}[/green]")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        result = app(args=argv, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .centrality import MEASURE_CATALOG, DampingConfig
from .evaluation import (
    BASELINE_MEASURES,
    EvalConfig,
    all_configs,
    default_configs,
    export_pr_curve,
    load_corpus_dir,
    load_gold_file,
    parse_config_id,
    sweep,
)
from .pipeline import ExtractionRequest, extract

_MEASURE_NAMES = [row["measure"] for row in MEASURE_CATALOG]


@click.group()
@click.version_option(package_name="termnet")
def main():
    """Keyword and keyphrase extraction from collocation networks."""


@main.command("extract")
@click.argument("input_file", type=click.Path(allow_dash=True), default="-")
@click.option("--unit", type=click.Choice(["word", "phrase"]), default="word",
              show_default=True, help="Rank words or noun phrases.")
@click.option("--measure", default="degree", show_default=True,
              help=f"Centrality measure ({', '.join(_MEASURE_NAMES)}).")
@click.option("--variant", default=None,
              help="Full variant id (e.g. directed_weighted); overrides the flags below.")
@click.option("--mode", type=click.Choice(["in", "out", "all"]), default="all",
              show_default=True, help="Edge side for degree-family and closeness measures.")
@click.option("--weighted/--unweighted", default=True, show_default=True,
              help="Use edge weights where the measure supports it.")
@click.option("--graph", type=click.Choice(["directed", "undirected"]),
              default="directed", show_default=True)
@click.option("--simplified/--full", default=False, show_default=True,
              help="Drop self-loops from the network.")
@click.option("--top", "k_percent", type=int, default=5, show_default=True,
              help="Percentage of ranked terms to return.")
@click.option("--phrase-file", type=click.Path(exists=True), default=None,
              help="Sidecar file with one pre-chunked noun phrase per line.")
@click.option("--stopwords", "stopwords_file", type=click.Path(exists=True),
              default=None, help="Alternative stopword list.")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--dump-graph", type=click.Path(), default=None,
              help="Also write the collocation network as edge-list text.")
def extract_command(input_file, unit, measure, variant, mode, weighted, graph,
                    simplified, k_percent, phrase_file, stopwords_file,
                    output_format, dump_graph):
    """Extract the top k% key terms from a document (file or stdin)."""
    if input_file == "-":
        text = sys.stdin.read()
    else:
        path = Path(input_file)
        if not path.exists():
            raise click.UsageError(f"input file not found: {input_file}")
        text = path.read_text(encoding="utf-8")

    if variant is None:
        variant = _compose_variant(measure, mode, weighted, graph)

    request = ExtractionRequest(
        text=text,
        unit=unit,
        measure=measure,
        variant=variant,
        graph=graph,
        simplified=simplified,
        k_percent=k_percent,
        phrase_file=phrase_file,
        stopwords_file=stopwords_file,
    )
    try:
        outcome = extract(request)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc

    if dump_graph:
        Path(dump_graph).write_text(outcome.network.dumps(), encoding="utf-8")
    for warning in outcome.warnings:
        click.echo(f"warning: {warning}", err=True)

    if output_format == "json":
        click.echo(json.dumps([
            {"term": label, "score": score, "rank": rank}
            for rank, (label, score) in enumerate(outcome.terms.terms, start=1)
        ]))
    else:
        for label, score in outcome.terms.terms:
            click.echo(f"{label}\t{score:.12g}")


def _compose_variant(measure, mode, weighted, graph) -> str | None:
    """Build a variant id from the generic flags."""
    kind = "weighted" if weighted else "unweighted"
    if measure in ("degree", "strength", "neighborhood_size", "coreness"):
        return mode
    if measure in ("clustering_coefficient", "hub", "authority"):
        return kind
    if measure == "structural_diversity":
        return "na"
    if measure == "closeness":
        return f"{kind}_{mode}"
    if measure in ("pagerank", "betweenness", "eigenvector"):
        return f"{graph}_{kind}"
    return None  # unknown measure; let validation report it


@main.command("evaluate")
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False))
@click.argument("gold_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--unit", type=click.Choice(["word", "phrase"]), default="word",
              show_default=True)
@click.option("--configs", default="default", show_default=True,
              help='"all", "default", or comma-separated config ids '
                   '(measure.variant@network).')
@click.option("--baselines", default="", help='Comma list from "tf,tfidf".')
@click.option("--gold-set", default="combined", show_default=True,
              help="Which annotation set to score against.")
@click.option("--out-dir", type=click.Path(file_okay=False), default="eval-out",
              show_default=True)
@click.option("--stopwords", "stopwords_file", type=click.Path(exists=True),
              default=None)
def evaluate_command(corpus_dir, gold_file, unit, configs, baselines, gold_set,
                     out_dir, stopwords_file):
    """Sweep configs over a corpus and write report CSV/JSON plus PR curves."""
    from .textprep import load_stopwords

    corpus = load_corpus_dir(corpus_dir)
    if not corpus:
        raise click.UsageError(f"no documents found in {corpus_dir}")
    gold = load_gold_file(gold_file)

    if configs == "all":
        config_list = all_configs(unit)
    elif configs == "default":
        config_list = default_configs(unit)
    else:
        try:
            config_list = [parse_config_id(_qualify(c.strip(), unit))
                           for c in configs.split(",") if c.strip()]
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    for name in [b.strip() for b in baselines.split(",") if b.strip()]:
        if name not in BASELINE_MEASURES:
            raise click.UsageError(f"unknown baseline {name!r}")
        config_list.append(EvalConfig(unit, name))

    stopwords = load_stopwords(stopwords_file) if stopwords_file else None
    report = sweep(corpus, gold, config_list, gold_set=gold_set,
                   stopwords=stopwords, damping=DampingConfig())

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.csv").write_text(report.to_csv(), encoding="utf-8")
    (out / "summary.csv").write_text(report.summary_csv(), encoding="utf-8")
    (out / "report.json").write_text(report.to_json(), encoding="utf-8")
    for config in config_list:
        cid = config.config_id
        if cid in report.errors:
            continue
        curve = export_pr_curve(report, cid)
        (out / f"pr_{_sanitize(cid)}.csv").write_text(curve, encoding="utf-8")
    for cid, message in sorted(report.errors.items()):
        click.echo(f"warning: config {cid} failed: {message}", err=True)
    click.echo(f"wrote report for {len(report.summaries)} config(s) to {out}")


def _qualify(config_id: str, unit: str) -> str:
    return config_id if ":" in config_id else f"{unit}:{config_id}"


def _sanitize(config_id: str) -> str:
    return config_id.replace(":", "_").replace("@", "_").replace(".", "_")


@main.command("measures")
def measures_command():
    """List every measure and its variants per network orientation."""
    for row in MEASURE_CATALOG:
        click.echo(f"{row['measure']}")
        click.echo(f"  directed networks:   {', '.join(row['directed'])}")
        click.echo(f"  undirected networks: {', '.join(row['undirected'])}")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None,
              help="Defaults to $TERMNET_PORT or 8000.")
@click.option("--max-bytes", type=int, default=None,
              help="Request size limit; defaults to $TERMNET_MAX_BYTES or 1 MiB.")
def serve_command(host, port, max_bytes):
    """Run the HTTP extraction service."""
    from .service import serve

    serve(host=host, port=port, max_bytes=max_bytes)


if __name__ == "__main__":
    main()

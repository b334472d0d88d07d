"""Evaluation harness: gold standards, P/R/F scoring, and k% sweeps.

Keyword-mode evaluation compares against the unigram subset of the gold
standard; keyphrase mode uses the full annotation sets.  Matching is
exact string equality on normalized, unstemmed terms.  Sweeps report
corpus-level micro-averaged P/R/F per k (counts summed over documents
before division) alongside per-document macro averages, because either
aggregation is a defensible reading of the published tables.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from statistics import fmean, pstdev
from typing import Iterable, Mapping

from .baselines import CorpusStats, build_corpus_stats, tf_rank, tfidf_rank
from .builders import (
    WindowSpec,
    build_phrase_network,
    build_word_network,
    median_window,
    phrase_occurrence_counts,
)
from .centrality import (
    CentralityResult,
    ConvergenceError,
    DampingConfig,
    compute,
    variant_catalog,
)
from .ranking import rank_terms
from .textprep import (
    Chunker,
    chunk_noun_phrases,
    default_stopwords,
    fallback_chunker,
    preprocess_words,
    segment_sentences,
    sidecar_chunker,
)

logger = logging.getLogger(__name__)

K_GRID = tuple(range(5, 101, 5))

NETWORK_TYPES = (
    "directed",
    "directed_simplified",
    "undirected",
    "undirected_simplified",
)

BASELINE_MEASURES = ("tf", "tfidf")


class MissingGoldError(ValueError):
    """Raised when scored documents lack gold annotations."""


@dataclass
class GoldStandard:
    """Named annotation sets for one document; "combined" is their union."""

    doc_id: str
    annotation_sets: dict[str, set[str]]

    def set_names(self) -> list[str]:
        return sorted(self.annotation_sets) + ["combined"]

    def get(self, name: str) -> set[str]:
        if name == "combined":
            combined: set[str] = set()
            for terms in self.annotation_sets.values():
                combined |= terms
            return combined
        if name not in self.annotation_sets:
            raise ValueError(f"document {self.doc_id!r} has no gold set {name!r}")
        return set(self.annotation_sets[name])


def normalize_term(term: str) -> str:
    """Lowercase and collapse internal whitespace to single spaces."""
    return " ".join(term.lower().split())


def score(predicted: set[str], gold: set[str]) -> tuple[float, float, float]:
    """Precision, recall, F1 by exact matching; empty sets score 0."""
    true_positives = len(predicted & gold)
    precision = true_positives / len(predicted) if predicted else 0.0
    recall = true_positives / len(gold) if gold else 0.0
    if precision + recall == 0.0:
        return precision, recall, 0.0
    return precision, recall, 2 * precision * recall / (precision + recall)


def unigram_gold(gold: set[str]) -> set[str]:
    """The single-word subset of a gold set, used for keyword-mode scoring."""
    return {term for term in gold if len(term.split()) == 1}


# -- configurations -----------------------------------------------------------


@dataclass(frozen=True)
class EvalConfig:
    """One (unit, measure, variant, network-type) evaluation cell."""

    unit: str
    measure: str
    variant: str = ""
    network: str = ""

    def __post_init__(self):
        if self.unit not in ("word", "phrase"):
            raise ValueError(f"unknown unit {self.unit!r}")
        if self.is_baseline:
            if self.variant or self.network:
                raise ValueError("baseline configs take no variant/network")
        else:
            if self.network not in NETWORK_TYPES:
                raise ValueError(f"unknown network type {self.network!r}")
            directed = self.network.startswith("directed")
            if (self.measure, self.variant) not in variant_catalog(directed):
                raise ValueError(
                    f"measure/variant {self.measure}.{self.variant} not applicable "
                    f"to {self.network} networks"
                )

    @property
    def is_baseline(self) -> bool:
        return self.measure in BASELINE_MEASURES

    @property
    def config_id(self) -> str:
        if self.is_baseline:
            return f"{self.unit}:{self.measure}"
        return f"{self.unit}:{self.measure}.{self.variant}@{self.network}"


def parse_config_id(text: str) -> EvalConfig:
    """Parse "unit:measure.variant@network" (baselines: "unit:tf")."""
    unit, _, rest = text.partition(":")
    if not rest:
        raise ValueError(f"malformed config id {text!r}")
    if rest in BASELINE_MEASURES:
        return EvalConfig(unit, rest)
    head, _, network = rest.partition("@")
    measure, _, variant = head.partition(".")
    if not (network and variant):
        raise ValueError(f"malformed config id {text!r}")
    return EvalConfig(unit, measure, variant, network)


def all_configs(unit: str, include_baselines: bool = False) -> list[EvalConfig]:
    """The full measure-variant matrix over all four network types."""
    configs = []
    for network in NETWORK_TYPES:
        directed = network.startswith("directed")
        for measure, variant in variant_catalog(directed):
            configs.append(EvalConfig(unit, measure, variant, network))
    if include_baselines:
        configs.extend(EvalConfig(unit, m) for m in BASELINE_MEASURES)
    return configs


def default_configs(unit: str) -> list[EvalConfig]:
    """A small representative config set for quick runs."""
    return [
        EvalConfig(unit, "degree", "all", "directed"),
        EvalConfig(unit, "strength", "all", "directed"),
        EvalConfig(unit, "neighborhood_size", "all", "directed"),
        EvalConfig(unit, "pagerank", "directed_weighted", "directed"),
        EvalConfig(unit, "pagerank", "undirected_unweighted", "undirected"),
    ]


# -- corpus and gold loading --------------------------------------------------


@dataclass
class CorpusDocument:
    """A raw document plus an optional pre-chunked phrase sidecar file."""

    doc_id: str
    text: str
    phrase_file: Path | None = None


def load_corpus_dir(directory: str | Path, extension: str = ".txt") -> list[CorpusDocument]:
    """Load a directory of plain-text documents; doc_id = file stem.

    A sidecar "<doc_id>.phrases" file, when present, supplies the
    document's noun phrases (one per line); otherwise the naive fallback
    chunker is used in phrase mode.  Dataset-specific preparation (e.g.
    stripping titles/authors/references from academic corpora) is up to
    the caller.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {directory}")
    documents = []
    for path in sorted(directory.glob(f"*{extension}")):
        sidecar = path.with_suffix(".phrases")
        documents.append(
            CorpusDocument(
                doc_id=path.stem,
                text=path.read_text(encoding="utf-8"),
                phrase_file=sidecar if sidecar.exists() else None,
            )
        )
    return documents


def load_gold_file(path: str | Path) -> dict[str, GoldStandard]:
    """Load JSON Lines gold annotations: {"doc_id": ..., "sets": {...}}.

    Terms are normalized; "combined" may not be stored since it is
    always computed as the union of the stored sets.
    """
    gold: dict[str, GoldStandard] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        record = json.loads(line)
        doc_id = record["doc_id"]
        sets = {}
        for name, terms in record["sets"].items():
            if name == "combined":
                raise ValueError(
                    f"line {lineno}: 'combined' is computed, not stored"
                )
            sets[name] = {normalize_term(t) for t in terms}
        gold[doc_id] = GoldStandard(doc_id, sets)
    return gold


def load_inspec(directory: str | Path) -> tuple[list[CorpusDocument], dict[str, GoldStandard]]:
    """Load a Hulth/INSPEC-style directory of .abstr/.contr/.uncontr files.

    Gold terms are semicolon-separated and may wrap across lines; the
    controlled and uncontrolled sets are stored separately so "combined"
    can be requested at evaluation time.
    """
    directory = Path(directory)
    documents = []
    gold = {}
    for abstr in sorted(directory.rglob("*.abstr")):
        doc_id = abstr.stem
        documents.append(CorpusDocument(doc_id, abstr.read_text(encoding="utf-8", errors="replace")))
        sets = {}
        for suffix, name in ((".contr", "controlled"), (".uncontr", "uncontrolled")):
            key_file = abstr.with_suffix(suffix)
            if key_file.exists():
                raw = key_file.read_text(encoding="utf-8", errors="replace")
                sets[name] = {
                    normalize_term(t) for t in raw.split(";") if normalize_term(t)
                }
        gold[doc_id] = GoldStandard(doc_id, sets)
    return documents, gold


# -- sweep --------------------------------------------------------------------


@dataclass
class ReportRow:
    config: str
    k: int
    precision: float
    recall: float
    f1: float
    macro_precision: float
    macro_recall: float
    macro_f1: float


@dataclass
class ConfigSummary:
    config: str
    best_f: float
    best_k: int
    mean_f: float
    std_f: float
    macro_best_f: float
    macro_best_k: int
    macro_mean_f: float
    macro_std_f: float


@dataclass
class EvalReport:
    gold_set: str
    rows: list[ReportRow]
    summaries: dict[str, ConfigSummary]
    skipped: dict[str, list[str]] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)

    def rows_for(self, config_id: str) -> list[ReportRow]:
        rows = [row for row in self.rows if row.config == config_id]
        if not rows:
            raise ValueError(f"unknown config {config_id!r}")
        return rows

    def to_csv(self) -> str:
        lines = [
            "config,k,precision,recall,f1,macro_precision,macro_recall,macro_f1"
        ]
        for r in self.rows:
            lines.append(
                f"{r.config},{r.k},{r.precision:.6f},{r.recall:.6f},{r.f1:.6f},"
                f"{r.macro_precision:.6f},{r.macro_recall:.6f},{r.macro_f1:.6f}"
            )
        return "\n".join(lines) + "\n"

    def summary_csv(self) -> str:
        lines = [
            "config,best_f,best_k,mean_f,std_f,"
            "macro_best_f,macro_best_k,macro_mean_f,macro_std_f"
        ]
        for config_id in sorted(self.summaries):
            s = self.summaries[config_id]
            lines.append(
                f"{config_id},{s.best_f:.6f},{s.best_k},{s.mean_f:.6f},{s.std_f:.6f},"
                f"{s.macro_best_f:.6f},{s.macro_best_k},{s.macro_mean_f:.6f},"
                f"{s.macro_std_f:.6f}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "gold_set": self.gold_set,
            "k_grid": list(K_GRID),
            "rows": [
                {
                    "config": r.config,
                    "k": r.k,
                    "precision": round(r.precision, 10),
                    "recall": round(r.recall, 10),
                    "f1": round(r.f1, 10),
                    "macro_precision": round(r.macro_precision, 10),
                    "macro_recall": round(r.macro_recall, 10),
                    "macro_f1": round(r.macro_f1, 10),
                }
                for r in self.rows
            ],
            "summaries": {
                cid: {
                    "best_f": round(s.best_f, 10),
                    "best_k": s.best_k,
                    "mean_f": round(s.mean_f, 10),
                    "std_f": round(s.std_f, 10),
                    "macro_best_f": round(s.macro_best_f, 10),
                    "macro_best_k": s.macro_best_k,
                    "macro_mean_f": round(s.macro_mean_f, 10),
                    "macro_std_f": round(s.macro_std_f, 10),
                }
                for cid, s in sorted(self.summaries.items())
            },
            "skipped": {unit: sorted(ids) for unit, ids in self.skipped.items()},
            "errors": dict(sorted(self.errors.items())),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def export_pr_curve(report: EvalReport, config_id: str) -> str:
    """CSV rows (k, precision, recall) for one config, k = 5..100 step 5."""
    lines = ["k,precision,recall"]
    for row in report.rows_for(config_id):
        lines.append(f"{row.k},{row.precision:.6f},{row.recall:.6f}")
    return "\n".join(lines) + "\n"


def export_distribution(result: CentralityResult) -> str:
    """CSV of (score, frequency) pairs over nodes, for log-log plotting."""
    counts = Counter(result.scores.values())
    lines = ["score,frequency"]
    for value, frequency in sorted(counts.items()):
        lines.append(f"{value:.12g},{frequency}")
    return "\n".join(lines) + "\n"


class _DocData:
    """Per-document artifacts shared by all configs of a sweep."""

    def __init__(self):
        self.word_counts: dict[str, int] = {}
        self.word_doc = None
        self.phrase_doc = None
        self.phrases = None
        self.phrase_counts: dict[str, int] = {}
        self.networks: dict[tuple[str, str], object] = {}


def _network_flags(network: str) -> tuple[bool, bool]:
    return network.startswith("directed"), network.endswith("simplified")


def _prepare_doc(
    doc: CorpusDocument,
    units: set[str],
    stopwords: frozenset[str],
    chunker: Chunker | None,
) -> _DocData:
    data = _DocData()
    if "word" in units:
        data.word_doc = preprocess_words(doc.text, stopwords, doc_id=doc.doc_id)
        data.word_counts = dict(Counter(data.word_doc.tokens))
    if "phrase" in units:
        data.phrase_doc = segment_sentences(doc.text, doc_id=doc.doc_id)
        doc_chunker = chunker
        if doc.phrase_file is not None:
            doc_chunker = sidecar_chunker(doc.phrase_file)
        elif doc_chunker is None:
            doc_chunker = fallback_chunker(stopwords)
        data.phrases = chunk_noun_phrases(doc.text, doc_chunker, doc_id=doc.doc_id)
        data.phrase_counts = phrase_occurrence_counts(
            data.phrase_doc, data.phrases, stopwords
        )
    return data


def _doc_network(data: _DocData, unit: str, network: str, stopwords):
    key = (unit, network)
    if key not in data.networks:
        directed, simplified = _network_flags(network)
        if unit == "word":
            net = build_word_network(data.word_doc, directed, simplified)
        else:
            if data.phrase_doc.tokens:
                window = median_window(data.phrase_doc)
            else:
                window = WindowSpec(2)  # empty document, no occurrences anyway
            net = build_phrase_network(
                data.phrase_doc, data.phrases, window, directed, simplified,
                stopwords=stopwords,
            )
        data.networks[key] = net
    return data.networks[key]


def _ranking_labels(
    config: EvalConfig,
    data: _DocData,
    stats: CorpusStats | None,
    stopwords,
    damping: DampingConfig | None,
) -> list[str]:
    counts = data.word_counts if config.unit == "word" else data.phrase_counts
    if config.measure == "tf":
        return [term for term, _ in tf_rank(counts)]
    if config.measure == "tfidf":
        return [term for term, _ in tfidf_rank(counts, stats)]
    net = _doc_network(data, config.unit, config.network, stopwords)
    result = compute(net, config.measure, config.variant, damping)
    return [label for label, _ in rank_terms(result, net)]


def sweep(
    corpus: Iterable[CorpusDocument],
    gold: Mapping[str, GoldStandard],
    configs: Iterable[EvalConfig],
    *,
    gold_set: str = "combined",
    stopwords: frozenset[str] | None = None,
    chunker: Chunker | None = None,
    damping: DampingConfig | None = None,
) -> EvalReport:
    """Evaluate every config at every k in 5..100 step 5 over a corpus.

    Micro P/R/F sums true-positive/predicted/gold counts over documents
    before dividing; macro averages per-document P/R/F.  Documents whose
    gold set is empty for the evaluation mode (e.g. no unigram gold in
    keyword mode) are skipped and recorded.  Per-config computation
    failures are collected in ``report.errors`` without aborting the
    batch.
    """
    corpus = list(corpus)
    configs = list(configs)
    if stopwords is None:
        stopwords = default_stopwords()
    missing = sorted(d.doc_id for d in corpus if d.doc_id not in gold)
    if missing:
        raise MissingGoldError(f"gold annotations missing for documents: {missing}")

    units = {c.unit for c in configs}
    doc_data = {d.doc_id: _prepare_doc(d, units, stopwords, chunker) for d in corpus}

    # gold terms per unit, skipping documents with nothing to match
    gold_terms: dict[str, dict[str, set[str]]] = {}
    skipped: dict[str, list[str]] = {}
    for unit in sorted(units):
        per_doc = {}
        unit_skipped = []
        for d in corpus:
            terms = gold[d.doc_id].get(gold_set)
            if unit == "word":
                terms = unigram_gold(terms)
            if terms:
                per_doc[d.doc_id] = terms
            else:
                unit_skipped.append(d.doc_id)
        gold_terms[unit] = per_doc
        if unit_skipped:
            skipped[unit] = sorted(unit_skipped)
            logger.warning(
                "%s-mode evaluation skipping %d document(s) with empty gold: %s",
                unit, len(unit_skipped), ", ".join(sorted(unit_skipped)),
            )

    stats_by_unit: dict[str, CorpusStats] = {}
    for config in configs:
        if config.measure == "tfidf" and config.unit not in stats_by_unit:
            counts_key = "word_counts" if config.unit == "word" else "phrase_counts"
            stats_by_unit[config.unit] = build_corpus_stats(
                [getattr(doc_data[d.doc_id], counts_key) for d in corpus]
            )

    micro: dict[str, dict[int, list[float]]] = {}
    macro: dict[str, dict[int, list[tuple[float, float, float]]]] = {}
    errors: dict[str, str] = {}

    for document in corpus:
        data = doc_data[document.doc_id]
        for config in configs:
            cid = config.config_id
            if cid in errors:
                continue
            doc_gold = gold_terms[config.unit].get(document.doc_id)
            if doc_gold is None:
                continue
            try:
                labels = _ranking_labels(
                    config, data, stats_by_unit.get(config.unit), stopwords, damping
                )
            except (ConvergenceError, ValueError) as exc:
                errors[cid] = f"{document.doc_id}: {exc}"
                continue
            total = len(labels)
            micro_acc = micro.setdefault(cid, {k: [0.0, 0.0, 0.0] for k in K_GRID})
            macro_acc = macro.setdefault(cid, {k: [] for k in K_GRID})
            for k in K_GRID:
                kept = (k * total + 99) // 100
                predicted = set(labels[:kept])
                true_positives = len(predicted & doc_gold)
                acc = micro_acc[k]
                acc[0] += true_positives
                acc[1] += len(predicted)
                acc[2] += len(doc_gold)
                macro_acc[k].append(score(predicted, doc_gold))

    rows: list[ReportRow] = []
    summaries: dict[str, ConfigSummary] = {}
    for config in configs:
        cid = config.config_id
        if cid in errors or cid not in micro:
            micro.pop(cid, None)
            if cid not in errors:
                errors[cid] = "no documents evaluated"
            continue
        config_rows = []
        for k in K_GRID:
            tp, n_predicted, n_gold = micro[cid][k]
            precision = tp / n_predicted if n_predicted else 0.0
            recall = tp / n_gold if n_gold else 0.0
            f1 = (
                2 * precision * recall / (precision + recall)
                if precision + recall
                else 0.0
            )
            doc_scores = macro[cid][k]
            config_rows.append(
                ReportRow(
                    config=cid,
                    k=k,
                    precision=precision,
                    recall=recall,
                    f1=f1,
                    macro_precision=fmean(s[0] for s in doc_scores),
                    macro_recall=fmean(s[1] for s in doc_scores),
                    macro_f1=fmean(s[2] for s in doc_scores),
                )
            )
        rows.extend(config_rows)
        micro_f = [r.f1 for r in config_rows]
        macro_f = [r.macro_f1 for r in config_rows]
        best_i = max(range(len(config_rows)), key=lambda i: micro_f[i])
        macro_best_i = max(range(len(config_rows)), key=lambda i: macro_f[i])
        summaries[cid] = ConfigSummary(
            config=cid,
            best_f=micro_f[best_i],
            best_k=config_rows[best_i].k,
            mean_f=fmean(micro_f),
            std_f=pstdev(micro_f),
            macro_best_f=macro_f[macro_best_i],
            macro_best_k=config_rows[macro_best_i].k,
            macro_mean_f=fmean(macro_f),
            macro_std_f=pstdev(macro_f),
        )

    return EvalReport(
        gold_set=gold_set,
        rows=rows,
        summaries=summaries,
        skipped=skipped,
        errors=errors,
    )

"""The shared extraction path used by both the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass, field

from .builders import (
    WindowSpec,
    build_phrase_network,
    build_word_network,
    median_window,
)
from .centrality import DampingConfig, compute, variant_catalog
from .graph import CollocationNetwork
from .ranking import RankedTerms, rank_terms, threshold
from .textprep import (
    chunk_noun_phrases,
    default_stopwords,
    fallback_chunker,
    load_stopwords,
    preprocess_words,
    segment_sentences,
    sidecar_chunker,
    static_chunker,
)

UNITS = ("word", "phrase")
GRAPH_KINDS = ("directed", "undirected")


@dataclass
class ExtractionRequest:
    """Everything needed to extract key terms from one document."""

    text: str
    unit: str = "word"
    measure: str = "degree"
    variant: str | None = None  # None picks the measure's default
    graph: str = "directed"
    simplified: bool = False
    k_percent: int = 5
    phrases: list[str] | None = None  # pre-chunked phrases, wins over file
    phrase_file: str | None = None
    stopwords_file: str | None = None


@dataclass
class ExtractionOutcome:
    terms: RankedTerms
    network: CollocationNetwork
    measure: str
    variant: str
    warnings: list[str] = field(default_factory=list)


def default_variant(measure: str, directed: bool) -> str:
    """The variant used when a request names only the measure."""
    if measure in ("degree", "strength", "neighborhood_size", "coreness"):
        return "all"
    if measure in ("clustering_coefficient", "hub", "authority"):
        return "weighted"
    if measure == "structural_diversity":
        return "na"
    if measure == "closeness":
        return "weighted_all"
    if measure in ("pagerank", "betweenness", "eigenvector"):
        return "directed_weighted" if directed else "undirected_weighted"
    raise ValueError(f"unknown measure {measure!r}")


def validate_request(request: ExtractionRequest) -> tuple[str, str]:
    """Check a request against the measure catalog; returns (measure, variant)."""
    if request.unit not in UNITS:
        raise ValueError(f"unit must be one of {UNITS}, got {request.unit!r}")
    if request.graph not in GRAPH_KINDS:
        raise ValueError(f"graph must be one of {GRAPH_KINDS}, got {request.graph!r}")
    if not 1 <= request.k_percent <= 100:
        raise ValueError(f"k_percent must be in [1, 100], got {request.k_percent}")
    directed = request.graph == "directed"
    variant = request.variant or default_variant(request.measure, directed)
    if (request.measure, variant) not in variant_catalog(directed):
        raise ValueError(
            f"measure/variant {request.measure}.{variant} is not applicable to "
            f"{request.graph} networks"
        )
    return request.measure, variant


def build_network(request: ExtractionRequest) -> tuple[CollocationNetwork, list[str]]:
    """Build the collocation network a request asks for."""
    warnings: list[str] = []
    stopwords = (
        load_stopwords(request.stopwords_file)
        if request.stopwords_file
        else default_stopwords()
    )
    directed = request.graph == "directed"
    if request.unit == "word":
        doc = preprocess_words(request.text, stopwords)
        net = build_word_network(doc, directed, request.simplified)
    else:
        doc = segment_sentences(request.text)
        if request.phrases is not None:
            chunker = static_chunker(request.phrases)
        elif request.phrase_file:
            chunker = sidecar_chunker(request.phrase_file)
        else:
            chunker = fallback_chunker(stopwords)
        phrases = chunk_noun_phrases(request.text, chunker)
        window = median_window(doc) if doc.tokens else WindowSpec(2)
        net = build_phrase_network(
            doc, phrases, window, directed, request.simplified, stopwords=stopwords
        )
    if net.node_count == 0:
        warnings.append("document is empty after preprocessing; no terms to rank")
    return net, warnings


def extract(
    request: ExtractionRequest, damping: DampingConfig | None = None
) -> ExtractionOutcome:
    """Run the full pipeline: network, centrality, ranking, threshold."""
    measure, variant = validate_request(request)
    net, warnings = build_network(request)
    if net.node_count == 0:
        return ExtractionOutcome(
            RankedTerms([], request.k_percent), net, measure, variant, warnings
        )
    result = compute(net, measure, variant, damping)
    ranked = rank_terms(result, net)
    return ExtractionOutcome(
        threshold(ranked, request.k_percent), net, measure, variant, warnings
    )

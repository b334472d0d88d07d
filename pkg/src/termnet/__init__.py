"""termnet: keyword and keyphrase extraction from collocation networks.

Build word or noun-phrase collocation networks from single documents,
rank terms with eleven centrality measures and their directed/weighted
variants, threshold the top k%, and evaluate against gold standards
with tf / tf-idf baselines.
"""

from .baselines import CorpusStats, build_corpus_stats, tf_rank, tfidf_rank
from .builders import (
    WindowSpec,
    build_phrase_network,
    build_word_network,
    find_phrase_occurrences,
    median_window,
    phrase_occurrence_counts,
)
from .centrality import (
    CentralityResult,
    ConvergenceError,
    DampingConfig,
    MEASURE_CATALOG,
    betweenness,
    closeness,
    clustering_coefficient,
    compute,
    compute_all,
    coreness,
    degree,
    eigenvector,
    hits,
    neighborhood_size,
    pagerank,
    strength,
    structural_diversity,
    variant_catalog,
)
from .evaluation import (
    EvalConfig,
    EvalReport,
    GoldStandard,
    MissingGoldError,
    all_configs,
    export_distribution,
    export_pr_curve,
    load_corpus_dir,
    load_gold_file,
    load_inspec,
    score,
    sweep,
    unigram_gold,
)
from .graph import CollocationNetwork, TermNode, loads
from .pipeline import ExtractionOutcome, ExtractionRequest, extract
from .ranking import RankedTerms, centrality_csv, rank_terms, threshold
from .textprep import (
    ChunkerError,
    PhraseList,
    TokenizedDocument,
    chunk_noun_phrases,
    default_stopwords,
    fallback_chunker,
    load_stopwords,
    preprocess_words,
    segment_sentences,
    sidecar_chunker,
    static_chunker,
)

__version__ = "0.1.0"

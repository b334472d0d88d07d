"""tf and tf-idf ranking baselines with corpus-level idf."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping


@dataclass
class CorpusStats:
    """Document count and per-term document frequencies of a corpus."""

    document_count: int
    doc_frequency: dict[str, int]

    def __post_init__(self):
        if self.document_count < 1:
            raise ValueError("document_count must be positive")
        for term, df in self.doc_frequency.items():
            if not 1 <= df <= self.document_count:
                raise ValueError(
                    f"doc frequency out of range for {term!r}: {df} "
                    f"(corpus has {self.document_count} documents)"
                )

    def idf(self, term: str) -> float:
        """ln(N / df); raises on terms the corpus never saw."""
        df = self.doc_frequency.get(term)
        if df is None:
            raise ValueError(f"term {term!r} absent from corpus stats")
        return math.log(self.document_count / df)

    def save(self, path: str | Path) -> None:
        payload = {"N": self.document_count, "df": self.doc_frequency}
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "CorpusStats":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(payload["N"], {t: int(v) for t, v in payload["df"].items()})


def build_corpus_stats(term_sets: Iterable[Iterable[str]]) -> CorpusStats:
    """Count document frequencies over per-document term collections.

    Each element is the term multiset of one document, produced by the
    same preprocessing (or chunking) used at extraction time; a term
    counts once per document no matter how often it occurs.
    """
    document_count = 0
    doc_frequency: dict[str, int] = {}
    for terms in term_sets:
        document_count += 1
        for term in set(terms):
            doc_frequency[term] = doc_frequency.get(term, 0) + 1
    if document_count == 0:
        raise ValueError("corpus is empty")
    return CorpusStats(document_count, doc_frequency)


def tf_rank(counts: Mapping[str, int]) -> list[tuple[str, float]]:
    """Rank terms by raw frequency, ties broken lexicographically."""
    return [
        (term, float(count))
        for term, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ]


def tfidf_rank(
    counts: Mapping[str, int], stats: CorpusStats
) -> list[tuple[str, float]]:
    """Rank terms by tf * ln(N / df), ties broken by tf then label."""
    scored = []
    for term, count in counts.items():
        scored.append((term, count * stats.idf(term), count))
    scored.sort(key=lambda row: (-row[1], -row[2], row[0]))
    return [(term, score) for term, score, _ in scored]

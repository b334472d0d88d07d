"""Builders for word and noun-phrase collocation networks.

Word networks link adjacent tokens (bigrams) of the preprocessed
document.  Phrase networks link phrase occurrences whose start positions
fall within a window of each other; the window defaults to the median
sentence length.  Both come in directed / undirected and simplified /
non-simplified variants.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable

from .graph import CollocationNetwork, TermNode
from .textprep import TokenizedDocument, default_stopwords

_END = object()  # trie terminal marker


@dataclass(frozen=True)
class WindowSpec:
    """Co-occurrence window measured in tokens between phrase starts."""

    size: int

    def __post_init__(self):
        if self.size < 2:
            raise ValueError(f"window size must be >= 2, got {self.size}")


def build_word_network(
    doc: TokenizedDocument, directed: bool = True, simplified: bool = False
) -> CollocationNetwork:
    """Build the bigram collocation network of a preprocessed document.

    One node per unique token (even if edgeless); for each adjacent
    token pair an edge from first to second weighted by bigram count.
    The undirected variant merges reciprocal edges by weight sum, the
    simplified variant drops self-loops.
    """
    counts = Counter(doc.tokens)
    nodes = [TermNode(token, tf) for token, tf in counts.items()]
    bigrams = Counter(zip(doc.tokens, doc.tokens[1:]))
    edges = {pair: float(count) for pair, count in bigrams.items()}
    net = CollocationNetwork(nodes, edges, directed=True)
    if not directed:
        net = net.to_undirected()
    if simplified:
        net = net.simplify()
    return net


def median_window(doc: TokenizedDocument) -> WindowSpec:
    """Window spec = median sentence length in raw tokens, clamped to >= 2.

    An even number of sentences takes the mean of the two middle
    lengths, rounded half up.
    """
    lengths = sorted(doc.sentence_lengths())
    if not lengths:
        raise ValueError(f"document {doc.doc_id!r} has no sentences")
    mid = len(lengths) // 2
    if len(lengths) % 2:
        median = float(lengths[mid])
    else:
        median = (lengths[mid - 1] + lengths[mid]) / 2.0
    size = int(median + 0.5)  # round half up; lengths are nonnegative
    return WindowSpec(max(2, size))


def _phrase_trie(phrases: Iterable[str]) -> dict:
    trie: dict = {}
    for phrase in phrases:
        node = trie
        for word in phrase.split():
            node = node.setdefault(word, {})
        node[_END] = phrase
    return trie


def find_phrase_occurrences(
    tokens: list[str], phrases: Iterable[str]
) -> list[tuple[str, int]]:
    """Locate phrase occurrences as (phrase, 1-based start position).

    At each token position the longest listed phrase matching there is
    recorded; shorter listed phrases still match at their own start
    positions, so overlapping occurrences are all kept.
    """
    trie = _phrase_trie(phrases)
    occurrences = []
    n = len(tokens)
    for start in range(n):
        node = trie
        match = None
        j = start
        while j < n and tokens[j] in node:
            node = node[tokens[j]]
            j += 1
            if _END in node:
                match = node[_END]
        if match is not None:
            occurrences.append((match, start + 1))
    return occurrences


def _count_cooccurrence_pairs(
    tokens: list[str], phrases: Iterable[str], window: int
) -> tuple[Counter, Counter]:
    """Single pass over the token stream counting in-window occurrence pairs.

    Maintains a FIFO of active occurrences; an occurrence expires once
    the scan position is more than ``window`` tokens past its start, at
    which point it pairs (earlier -> later) with everything still queued.
    Each ordered pair of occurrences whose starts differ by <= window is
    counted exactly once, either at expiry or at the end-of-document
    flush.  Matching uses a token trie with lookahead bounded by the
    five-word phrase cap.
    """
    trie = _phrase_trie(phrases)
    queue: deque[tuple[str, int]] = deque()
    pair_counts: Counter = Counter()
    occurrence_counts: Counter = Counter()
    n = len(tokens)

    for pos in range(1, n + 1):
        while queue and pos - queue[0][1] > window:
            expired_phrase, _ = queue.popleft()
            for other_phrase, _ in queue:
                pair_counts[(expired_phrase, other_phrase)] += 1
        node = trie
        match = None
        j = pos - 1
        while j < n and tokens[j] in node:
            node = node[tokens[j]]
            j += 1
            if _END in node:
                match = node[_END]
        if match is not None:
            queue.append((match, pos))
            occurrence_counts[match] += 1

    while queue:
        expired_phrase, _ = queue.popleft()
        for other_phrase, _ in queue:
            pair_counts[(expired_phrase, other_phrase)] += 1

    return pair_counts, occurrence_counts


def _passes_post_filter(phrase: str, stopwords: frozenset[str]) -> bool:
    words = phrase.split()
    if any(len(word) <= 2 for word in words):
        return False
    if len(words) == 1 and words[0] in stopwords:
        return False
    return True


def phrase_occurrence_counts(
    doc: TokenizedDocument,
    phrases: Iterable[str],
    stopwords: frozenset[str] | None = None,
) -> dict[str, int]:
    """Occurrence counts of listed phrases in the document.

    Applies the same post-filters as :func:`build_phrase_network`, so the
    counted candidate set matches the phrase-network node set.  Used by
    the tf / tf-idf baselines.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    counts = Counter(phrase for phrase, _ in find_phrase_occurrences(doc.tokens, phrases))
    return {
        phrase: count
        for phrase, count in counts.items()
        if _passes_post_filter(phrase, stopwords)
    }


def build_phrase_network(
    doc: TokenizedDocument,
    phrases: Iterable[str],
    window: WindowSpec,
    directed: bool = True,
    simplified: bool = False,
    stopwords: frozenset[str] | None = None,
) -> CollocationNetwork:
    """Build the phrase collocation network of a segmented document.

    One node per unique phrase occurring in the text; for every ordered
    pair of occurrences whose start positions differ by at most
    ``window.size`` tokens, the earlier -> later edge gains weight 1
    (the same phrase twice in a window yields a self-loop).  Counting is
    a single pass with a FIFO of active occurrences.  Post-processing
    then removes phrase nodes containing any word of two characters or
    less and single-word phrases that are stopwords.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    pair_counts, occurrence_counts = _count_cooccurrence_pairs(
        doc.tokens, phrases, window.size
    )
    kept = {
        phrase
        for phrase in occurrence_counts
        if _passes_post_filter(phrase, stopwords)
    }
    nodes = [TermNode(phrase, occurrence_counts[phrase]) for phrase in sorted(kept)]
    edges = {
        (u, v): float(count)
        for (u, v), count in pair_counts.items()
        if u in kept and v in kept
    }
    net = CollocationNetwork(nodes, edges, directed=True)
    if not directed:
        net = net.to_undirected()
    if simplified:
        net = net.simplify()
    return net

"""Text preparation: tokenization, stopword filtering, sentence splitting,
and the pluggable noun-phrase chunker interface.

Tokens are produced by splitting on whitespace and keeping only
alphanumeric characters, so "egypt's" becomes "egypts" and trailing
punctuation is dropped.  No stemming is applied anywhere: "learning"
and "learnability" stay distinct terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

_SENTENCE_END = re.compile(r'[.!?]["\')\]}»”’]*$')


class ChunkerError(Exception):
    """Raised when a noun-phrase chunker fails on a document."""


@dataclass
class TokenizedDocument:
    """A document as an ordered token stream with sentence boundaries.

    ``sentence_boundaries`` holds 1-based token indices where sentences
    end; it is strictly increasing and, for nonempty documents, its last
    entry equals the token count.
    """

    doc_id: str
    tokens: list[str]
    sentence_boundaries: list[int] = field(default_factory=list)

    def sentence_lengths(self) -> list[int]:
        lengths, previous = [], 0
        for boundary in self.sentence_boundaries:
            lengths.append(boundary - previous)
            previous = boundary
        return lengths


@dataclass
class PhraseList:
    """Unique candidate phrases, each 1-5 space-joined tokens."""

    phrases: list[str]

    def __post_init__(self):
        seen = set()
        for phrase in self.phrases:
            n_words = len(phrase.split())
            if not 1 <= n_words <= 5:
                raise ValueError(f"phrase must have 1-5 words: {phrase!r}")
            if phrase in seen:
                raise ValueError(f"duplicate phrase: {phrase!r}")
            seen.add(phrase)

    def __iter__(self):
        return iter(self.phrases)

    def __len__(self) -> int:
        return len(self.phrases)


def clean_token(raw: str) -> str:
    """Keep only alphanumeric characters of a whitespace-delimited token."""
    return "".join(ch for ch in raw if ch.isalnum())


def is_numeric(token: str) -> bool:
    """A token counts as numeric when it contains no alphabetic character."""
    return not any(ch.isalpha() for ch in token)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a stopword file: one lowercase token per line, UTF-8."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word:
            words.add(word)
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    """The English stoplist bundled with the package (pinned by checksum in tests)."""
    text = resources.files("termnet").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(word for word in text.split() if word)


def preprocess_words(
    text: str, stopwords: frozenset[str] | None = None, doc_id: str = ""
) -> TokenizedDocument:
    """Lowercase and filter a document down to its content-word stream.

    Removes punctuation, numeric tokens, stopwords, and tokens of two
    characters or less; original token order is preserved.  Empty or
    whitespace-only input yields an empty token list.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    tokens = []
    for raw in text.split():
        token = clean_token(raw.lower())
        if not token or len(token) <= 2:
            continue
        if is_numeric(token) or token in stopwords:
            continue
        tokens.append(token)
    boundaries = [len(tokens)] if tokens else []
    return TokenizedDocument(doc_id, tokens, boundaries)


def segment_sentences(text: str, doc_id: str = "") -> TokenizedDocument:
    """Split on terminal punctuation (. ! ?) followed by whitespace.

    Boundaries are recorded on the raw token stream, before any stopword
    or length filtering; tokens themselves are normalized (lowercased,
    non-alphanumerics stripped) and may be empty strings for
    punctuation-only positions.  Text without terminal punctuation forms
    a single sentence.  The splitter is deliberately naive: "Dr. Smith"
    triggers a boundary after "Dr.".
    """
    tokens: list[str] = []
    boundaries: list[int] = []
    for position, raw in enumerate(text.split(), start=1):
        tokens.append(clean_token(raw.lower()))
        if _SENTENCE_END.search(raw):
            boundaries.append(position)
    if tokens and (not boundaries or boundaries[-1] != len(tokens)):
        boundaries.append(len(tokens))
    return TokenizedDocument(doc_id, tokens, boundaries)


# -- noun-phrase chunkers ---------------------------------------------------

# A chunker maps raw document text to a list of phrase strings.
Chunker = Callable[[str], list[str]]


def sidecar_chunker(path: str | Path) -> Chunker:
    """Chunker that reads pre-computed phrases from a file, one per line.

    Used to feed the output of an external chunking tool into the
    pipeline.
    """
    phrase_path = Path(path)

    def chunk(text: str) -> list[str]:
        return [
            line.strip()
            for line in phrase_path.read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]

    return chunk


def fallback_chunker(stopwords: frozenset[str] | None = None) -> Chunker:
    """Naive chunker: maximal runs of non-stopword, non-numeric tokens."""
    if stopwords is None:
        stopwords = default_stopwords()

    def chunk(text: str) -> list[str]:
        phrases, run = [], []
        for token in segment_sentences(text).tokens:
            if not token or is_numeric(token) or token in stopwords:
                if run:
                    phrases.append(" ".join(run))
                    run = []
            else:
                run.append(token)
        if run:
            phrases.append(" ".join(run))
        return phrases

    return chunk


def static_chunker(phrases: Iterable[str]) -> Chunker:
    """Chunker that returns a fixed phrase list regardless of input."""
    fixed = list(phrases)
    return lambda text: list(fixed)


def chunk_noun_phrases(
    text: str, chunker: Chunker, doc_id: str = ""
) -> PhraseList:
    """Run a chunker and normalize its output.

    Phrase tokens are lowercased and stripped of non-alphanumerics,
    duplicates are dropped (first occurrence wins), and phrases longer
    than five words are removed.  Zero phrases is a valid outcome.
    """
    try:
        raw_phrases = chunker(text)
    except Exception as exc:
        raise ChunkerError(f"chunker failed for document {doc_id!r}: {exc}") from exc
    seen = set()
    phrases = []
    for raw in raw_phrases:
        words = [clean_token(w) for w in raw.lower().split()]
        words = [w for w in words if w]
        if not words or len(words) > 5:
            continue
        phrase = " ".join(words)
        if phrase not in seen:
            seen.add(phrase)
            phrases.append(phrase)
    return PhraseList(phrases)

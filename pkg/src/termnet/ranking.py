"""Turning per-node scores into ranked term lists with percentage thresholds."""

from __future__ import annotations

from dataclasses import dataclass

from .centrality import ASCENDING, CentralityResult
from .graph import CollocationNetwork


@dataclass
class RankedTerms:
    """The top slice of a ranking: (label, score) pairs for a given k%."""

    terms: list[tuple[str, float]]
    k_percent: int

    def labels(self) -> list[str]:
        return [label for label, _ in self.terms]


def rank_terms(
    result: CentralityResult, net: CollocationNetwork
) -> list[tuple[str, float]]:
    """Order all network nodes by score.

    Descending by default, ascending for the structural diversity index.
    Ties break toward the higher term frequency, then lexicographically.
    """
    missing = [label for label in net.labels() if label not in result.scores]
    if missing:
        raise ValueError(f"scores missing for nodes: {missing[:5]}")
    ascending = result.rank_direction == ASCENDING

    def sort_key(label: str):
        score = result.scores[label]
        return (
            score if ascending else -score,
            -net.term_frequency(label),
            label,
        )

    ordered = sorted(net.labels(), key=sort_key)
    return [(label, result.scores[label]) for label in ordered]


def threshold(ranked: list[tuple[str, float]], k_percent: int) -> RankedTerms:
    """Keep the top k% of a ranking (ceiling, so nonempty input stays nonempty)."""
    if not 1 <= k_percent <= 100:
        raise ValueError(f"k_percent must be in [1, 100], got {k_percent}")
    count = (k_percent * len(ranked) + 99) // 100  # ceil without float error
    return RankedTerms(list(ranked[:count]), k_percent)


def centrality_csv(result: CentralityResult, net: CollocationNetwork) -> str:
    """CSV export of one result: node,score rows in rank order."""
    lines = [
        f"# measure={result.measure} variant={result.variant} "
        f"rank_direction={result.rank_direction}",
        "node,score",
    ]
    for label, score in rank_terms(result, net):
        lines.append(f"{label},{score:.12g}")
    return "\n".join(lines) + "\n"

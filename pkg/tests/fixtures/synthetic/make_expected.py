#!/usr/bin/env python3
"""Regenerate the expected evaluation report for the synthetic fixture.

Rankings come from the library (those have their own oracles), but every
evaluation number here - intersections, precision/recall/F, micro and
macro aggregation, best/mean/std - is recomputed with direct set
arithmetic, independent of the evaluation harness.  The emitted files
must stay byte-identical to what `termnet evaluate` produces; CI
compares them.

Run from this directory:  python3 make_expected.py
"""

import json
import sys
from collections import Counter
from pathlib import Path
from statistics import fmean, pstdev

from termnet.baselines import build_corpus_stats, tf_rank, tfidf_rank
from termnet.builders import (
    build_phrase_network,
    build_word_network,
    median_window,
    phrase_occurrence_counts,
)
from termnet.centrality import compute
from termnet.ranking import rank_terms
from termnet.textprep import (
    chunk_noun_phrases,
    default_stopwords,
    fallback_chunker,
    preprocess_words,
    segment_sentences,
    sidecar_chunker,
)

HERE = Path(__file__).parent
K_GRID = list(range(5, 101, 5))

CONFIGS = [
    ("word", "degree", "all", "directed"),
    ("word", "pagerank", "directed_weighted", "directed"),
    ("word", "tf", "", ""),
    ("word", "tfidf", "", ""),
    ("phrase", "strength", "all", "undirected"),
    ("phrase", "tf", "", ""),
]


def config_id(unit, measure, variant, network):
    if measure in ("tf", "tfidf"):
        return f"{unit}:{measure}"
    return f"{unit}:{measure}.{variant}@{network}"


def load_gold():
    gold = {}
    for line in (HERE / "gold.jsonl").read_text().splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        combined = set()
        for terms in record["sets"].values():
            combined |= {" ".join(t.lower().split()) for t in terms}
        gold[record["doc_id"]] = combined
    return gold


def main():
    stopwords = default_stopwords()
    docs = sorted((HERE / "docs").glob("*.txt"))
    gold_combined = load_gold()

    word_docs, word_counts = {}, {}
    phrase_docs, phrase_lists, phrase_counts = {}, {}, {}
    for path in docs:
        doc_id = path.stem
        text = path.read_text()
        word_docs[doc_id] = preprocess_words(text, stopwords, doc_id=doc_id)
        word_counts[doc_id] = dict(Counter(word_docs[doc_id].tokens))
        phrase_docs[doc_id] = segment_sentences(text, doc_id=doc_id)
        sidecar = path.with_suffix(".phrases")
        chunker = sidecar_chunker(sidecar) if sidecar.exists() else fallback_chunker(stopwords)
        phrase_lists[doc_id] = chunk_noun_phrases(text, chunker, doc_id=doc_id)
        phrase_counts[doc_id] = phrase_occurrence_counts(
            phrase_docs[doc_id], phrase_lists[doc_id], stopwords
        )

    doc_ids = [p.stem for p in docs]
    word_stats = build_corpus_stats([word_counts[d] for d in doc_ids])

    # gold per unit: unigram subset for words, full sets for phrases
    gold_by_unit = {
        "word": {
            d: {t for t in gold_combined[d] if len(t.split()) == 1} for d in doc_ids
        },
        "phrase": {d: set(gold_combined[d]) for d in doc_ids},
    }

    def full_ranking(unit, measure, variant, network, doc_id):
        if measure == "tf":
            counts = word_counts[doc_id] if unit == "word" else phrase_counts[doc_id]
            return [t for t, _ in tf_rank(counts)]
        if measure == "tfidf":
            return [t for t, _ in tfidf_rank(word_counts[doc_id], word_stats)]
        directed = network.startswith("directed")
        simplified = network.endswith("simplified")
        if unit == "word":
            net = build_word_network(word_docs[doc_id], directed, simplified)
        else:
            window = median_window(phrase_docs[doc_id])
            net = build_phrase_network(
                phrase_docs[doc_id], phrase_lists[doc_id], window,
                directed, simplified, stopwords=stopwords,
            )
        return [t for t, _ in rank_terms(compute(net, measure, variant), net)]

    rows = []
    summaries = {}
    for unit, measure, variant, network in CONFIGS:
        cid = config_id(unit, measure, variant, network)
        config_rows = []
        for k in K_GRID:
            tp_total = pred_total = gold_total = 0
            per_doc = []
            for doc_id in doc_ids:
                gold_terms = gold_by_unit[unit][doc_id]
                if not gold_terms:
                    continue
                labels = full_ranking(unit, measure, variant, network, doc_id)
                kept = -(-k * len(labels) // 100)  # ceil
                predicted = set(labels[:kept])
                tp = len(predicted & gold_terms)
                tp_total += tp
                pred_total += len(predicted)
                gold_total += len(gold_terms)
                p = tp / len(predicted) if predicted else 0.0
                r = tp / len(gold_terms) if gold_terms else 0.0
                f = 2 * p * r / (p + r) if p + r else 0.0
                per_doc.append((p, r, f))
            precision = tp_total / pred_total if pred_total else 0.0
            recall = tp_total / gold_total if gold_total else 0.0
            f1 = (
                2 * precision * recall / (precision + recall)
                if precision + recall
                else 0.0
            )
            config_rows.append({
                "config": cid,
                "k": k,
                "precision": precision,
                "recall": recall,
                "f1": f1,
                "macro_precision": fmean(s[0] for s in per_doc),
                "macro_recall": fmean(s[1] for s in per_doc),
                "macro_f1": fmean(s[2] for s in per_doc),
            })
        rows.extend(config_rows)
        micro_f = [r["f1"] for r in config_rows]
        macro_f = [r["macro_f1"] for r in config_rows]
        best = max(range(len(config_rows)), key=lambda i: micro_f[i])
        macro_best = max(range(len(config_rows)), key=lambda i: macro_f[i])
        summaries[cid] = {
            "best_f": micro_f[best],
            "best_k": config_rows[best]["k"],
            "mean_f": fmean(micro_f),
            "std_f": pstdev(micro_f),
            "macro_best_f": macro_f[macro_best],
            "macro_best_k": config_rows[macro_best]["k"],
            "macro_mean_f": fmean(macro_f),
            "macro_std_f": pstdev(macro_f),
        }

    out = HERE / "expected"
    out.mkdir(exist_ok=True)

    csv_lines = ["config,k,precision,recall,f1,macro_precision,macro_recall,macro_f1"]
    for r in rows:
        csv_lines.append(
            f"{r['config']},{r['k']},{r['precision']:.6f},{r['recall']:.6f},"
            f"{r['f1']:.6f},{r['macro_precision']:.6f},{r['macro_recall']:.6f},"
            f"{r['macro_f1']:.6f}"
        )
    (out / "report.csv").write_text("\n".join(csv_lines) + "\n")

    summary_lines = [
        "config,best_f,best_k,mean_f,std_f,"
        "macro_best_f,macro_best_k,macro_mean_f,macro_std_f"
    ]
    for cid in sorted(summaries):
        s = summaries[cid]
        summary_lines.append(
            f"{cid},{s['best_f']:.6f},{s['best_k']},{s['mean_f']:.6f},"
            f"{s['std_f']:.6f},{s['macro_best_f']:.6f},{s['macro_best_k']},"
            f"{s['macro_mean_f']:.6f},{s['macro_std_f']:.6f}"
        )
    (out / "summary.csv").write_text("\n".join(summary_lines) + "\n")

    payload = {
        "gold_set": "combined",
        "k_grid": K_GRID,
        "rows": [
            {
                "config": r["config"],
                "k": r["k"],
                "precision": round(r["precision"], 10),
                "recall": round(r["recall"], 10),
                "f1": round(r["f1"], 10),
                "macro_precision": round(r["macro_precision"], 10),
                "macro_recall": round(r["macro_recall"], 10),
                "macro_f1": round(r["macro_f1"], 10),
            }
            for r in rows
        ],
        "summaries": {
            cid: {
                "best_f": round(s["best_f"], 10),
                "best_k": s["best_k"],
                "mean_f": round(s["mean_f"], 10),
                "std_f": round(s["std_f"], 10),
                "macro_best_f": round(s["macro_best_f"], 10),
                "macro_best_k": s["macro_best_k"],
                "macro_mean_f": round(s["macro_mean_f"], 10),
                "macro_std_f": round(s["macro_std_f"], 10),
            }
            for cid, s in sorted(summaries.items())
        },
        "skipped": {},
        "errors": {},
    }
    (out / "report.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")

    by_config = {}
    for r in rows:
        by_config.setdefault(r["config"], []).append(r)
    for cid, config_rows in by_config.items():
        name = cid.replace(":", "_").replace("@", "_").replace(".", "_")
        lines = ["k,precision,recall"]
        for r in config_rows:
            lines.append(f"{r['k']},{r['precision']:.6f},{r['recall']:.6f}")
        (out / f"pr_{name}.csv").write_text("\n".join(lines) + "\n")

    print(f"wrote expected report files to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

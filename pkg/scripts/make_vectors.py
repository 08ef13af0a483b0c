"""Derive the shipped word vectors from the seed text corpus.

PPMI-weighted co-occurrence counts (symmetric window) factored with a
truncated SVD; rows are written in GloVe text format so the engine can
swap in any externally trained file of the same shape. Deterministic:
rerunning on the same corpus reproduces data/vectors.txt.

    python3 scripts/make_vectors.py [--dim 48] [--window 4]
"""

import argparse
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from haikai.textutil import corpus_tokens

DATA = Path(__file__).resolve().parent.parent / "data"


def cooccurrence(sentences, window):
    vocab = sorted({w for s in sentences for w in s})
    idx = {w: i for i, w in enumerate(vocab)}
    counts = np.zeros((len(vocab), len(vocab)), dtype=np.float64)
    for sent in sentences:
        for i, w in enumerate(sent):
            for j in range(max(0, i - window), min(len(sent), i + window + 1)):
                if j != i:
                    counts[idx[w], idx[sent[j]]] += 1.0 / abs(j - i)
    return vocab, counts


def ppmi(counts):
    total = counts.sum()
    row = counts.sum(axis=1, keepdims=True)
    col = counts.sum(axis=0, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        pmi = np.log((counts * total) / (row * col))
    pmi[~np.isfinite(pmi)] = 0.0
    return np.maximum(pmi, 0.0)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", default=str(DATA / "text_corpus.txt"))
    parser.add_argument("--out", default=str(DATA / "vectors.txt"))
    parser.add_argument("--dim", type=int, default=48)
    parser.add_argument("--window", type=int, default=4)
    args = parser.parse_args()

    sentences = corpus_tokens(Path(args.corpus).read_text(encoding="utf-8"))
    vocab, counts = cooccurrence(sentences, args.window)
    matrix = ppmi(counts)

    u, s, _ = np.linalg.svd(matrix, full_matrices=False)
    dim = min(args.dim, len(s))
    vectors = u[:, :dim] * np.sqrt(s[:dim])

    # sign convention: make each component's largest-magnitude loading positive
    for k in range(dim):
        pivot = np.argmax(np.abs(vectors[:, k]))
        if vectors[pivot, k] < 0:
            vectors[:, k] = -vectors[:, k]

    with open(args.out, "w", encoding="utf-8") as f:
        for word, vec in zip(vocab, vectors):
            f.write(word + " " + " ".join(f"{x:.6f}" for x in vec) + "\n")
    print(f"{len(vocab)} vectors of dimension {dim} written to {args.out}")


if __name__ == "__main__":
    main()

import numpy as np
import pytest

from haikai.generator import GenConfig, generate_batch
from haikai.pipeline import build_model_set, load_model_set, save_model_set


@pytest.fixture(scope="module")
def cache_dir(tmp_path_factory, data_dir):
    out = tmp_path_factory.mktemp("models")
    ms = build_model_set(
        haiku_corpus=data_dir / "haiku_corpus.txt",
        text_corpus=data_dir / "text_corpus.txt",
        vectors=data_dir / "vectors.txt",
        cmudict=data_dir / "cmudict.txt",
        afinn=data_dir / "afinn.txt",
        tag_lexicon=data_dir / "tag_lexicon.tsv",
    )
    save_model_set(ms, out)
    return out


def test_roundtrip_preserves_models(cache_dir, models):
    loaded = load_model_set(cache_dir)
    assert loaded.ngram.counts == models.ngram.counts
    assert loaded.ngram.total_unigrams == models.ngram.total_unigrams
    assert len(loaded.pool.five) == len(models.pool.five)
    assert loaded.pool.seven[0] == models.pool.seven[0]
    assert loaded.taglex.words == models.taglex.words
    assert loaded.affect.words == models.affect.words
    assert set(loaded.lex.entries) == set(models.lex.entries)
    assert loaded.space.dimension == models.space.dimension
    for word in ("moon", "frog", "love"):
        assert np.array_equal(loaded.space.get(word), models.space.get(word))


def test_loaded_models_generate_identically(cache_dir, models):
    loaded = load_model_set(cache_dir)
    cfg = GenConfig(rng_seed=13)
    a = generate_batch([["frog", "pond"]], 3, loaded, cfg)
    b = generate_batch([["frog", "pond"]], 3, models, cfg)
    assert [h.text() for h in a] == [h.text() for h in b]


def test_missing_manifest(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_model_set(tmp_path)

import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "haikai.cli", *args],
        capture_output=True,
        input=stdin,
        text=True,
        cwd=ROOT,
        env={"PYTHONPATH": str(ROOT / "src"), "PATH": "/usr/bin:/bin"},
    )


@pytest.fixture(scope="module")
def model_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("cli-models")
    result = run_cli(
        "build-models",
        "--haiku-corpus", str(DATA / "haiku_corpus.txt"),
        "--text-corpus", str(DATA / "text_corpus.txt"),
        "--vectors", str(DATA / "vectors.txt"),
        "--cmudict", str(DATA / "cmudict.txt"),
        "--afinn", str(DATA / "afinn.txt"),
        "--tag-lexicon", str(DATA / "tag_lexicon.tsv"),
        "--out", str(out),
    )
    assert result.returncode == 0, result.stderr
    assert "models written" in result.stdout
    return out


def test_haiku_command_shape(model_dir):
    result = run_cli("haiku", "--t1", "frog pond", "--t2", "moon", "-n", "3",
                     "--seed", "7", "--models", str(model_dir))
    assert result.returncode == 0, result.stderr
    poems = [p for p in result.stdout.split("\n\n") if p.strip()]
    assert len(poems) == 3
    for poem in poems:
        lines = [l for l in poem.splitlines() if l and not l.startswith("#")]
        assert len(lines) == 3
    assert "# ngram=" in result.stdout


def test_haiku_missing_t1_usage_error():
    result = run_cli("haiku")
    assert result.returncode == 2


def test_haiku_output_feeds_back_as_corpus(model_dir, tmp_path, models):
    from haikai.grammar import extract_skeletons

    result = run_cli("haiku", "--t1", "moon", "-n", "4", "--seed", "3",
                     "--models", str(model_dir))
    pool = extract_skeletons(result.stdout, models.taglex, models.lex)
    assert len(pool.five) == 8 and len(pool.seven) == 4


def test_haiku_deterministic(model_dir):
    args = ("haiku", "--t1", "frog pond", "--t2", "moon", "-n", "10",
            "--seed", "7", "--models", str(model_dir))
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.stdout == b.stdout and a.returncode == 0


def test_renga_command(model_dir):
    result = run_cli("renga", "--ruleset", str(DATA / "rulesets" / "blossom_party_positive.json"),
                     "--seed", "1", "--models", str(model_dir))
    assert result.returncode == 0, result.stderr
    assert result.stdout.count("# link") == 4
    assert "# renga complete" in result.stdout


def test_renga_interactive_eof(model_dir):
    result = run_cli("renga", "--ruleset", str(DATA / "rulesets" / "blossom_party_positive.json"),
                     "--seed", "1", "--interactive", "--models", str(model_dir), stdin="")
    assert result.returncode == 0
    assert "your verse (3 lines):" in result.stdout
    assert "# session left open" in result.stdout


def test_renga_interactive_violation_echo(model_dir):
    verse = "cold cold rain falls on stone\nthe river turns at the bridge\nreeds bend in the wind\n"
    result = run_cli("renga", "--ruleset", str(DATA / "rulesets" / "blossom_party_positive.json"),
                     "--seed", "1", "--interactive", "--models", str(model_dir), stdin=verse)
    assert result.returncode == 0
    assert "violation:" in result.stdout


def test_score_command(model_dir, tmp_path):
    poem = tmp_path / "poem.txt"
    poem.write_text("cold rain falls on stone\nthe river turns at the bridge\nreeds bend in the wind\n")
    result = run_cli("score", "--poem", str(poem), "--topic", "rain",
                     "--models", str(model_dir))
    assert result.returncode == 0, result.stderr
    for field in ("sense:", "topic:", "emotion:", "variety:"):
        assert field in result.stdout


def test_missing_models_dir_exits_nonzero(tmp_path):
    result = run_cli("haiku", "--t1", "moon", "--models", str(tmp_path / "nowhere"))
    assert result.returncode == 1
    assert "build-models" in result.stderr

"""Command-line front door: build model caches, generate haikus and
rengas, score poems, run the HTTP server.

Poem output is corpus-format plain text ('#' comment lines, one blank
line between haikus), so generated output can be fed back in as a
corpus.
"""

import argparse
import json
import os
import sys

from .errors import EngineError
from .evaluation import score_report
from .generator import GenConfig, generate_batch, haiku_from_lines
from .pipeline import build_model_set, load_model_set, save_model_set
from .renga import (
    HUMAN,
    new_session,
    next_link,
    ruleset_from_dict,
    submit_link,
)
from .semantics import topic_vector

DEFAULT_MODELS_DIR = os.environ.get("HAIKAI_MODELS", "models")


def _load_models(path):
    try:
        return load_model_set(path)
    except FileNotFoundError as exc:
        raise SystemExit(f"error: {exc}")


def _print_haiku(h, comment=None, out=sys.stdout):
    if comment:
        print(f"# {comment}", file=out)
    print(h.text(), file=out)
    print(file=out)


def cmd_build_models(args):
    models = build_model_set(
        haiku_corpus=args.haiku_corpus,
        text_corpus=args.text_corpus,
        vectors=args.vectors,
        cmudict=args.cmudict,
        afinn=args.afinn,
        tag_lexicon=args.tag_lexicon,
        ngram_order=args.ngram_order,
    )
    issues = models.lex.parse_issues + models.space.parse_issues + models.affect.parse_issues
    for issue in issues:
        print(f"warning: {issue}", file=sys.stderr)
    manifest = save_model_set(models, args.out)
    print(f"models written to {args.out}")
    for key, value in manifest["stats"].items():
        print(f"  {key}: {value}")
    return 0


def cmd_haiku(args):
    models = _load_models(args.models)
    prompts = [args.t1.split()] + ([args.t2.split()] if args.t2 else [])
    cfg = GenConfig(rng_seed=args.seed, batch_size=args.n, dither_temperature=args.dither)
    batch = generate_batch(prompts, args.n, models, cfg)
    for h in batch:
        ngram_total, topic_cos = h.score_breakdown
        _print_haiku(h, comment=f"ngram={ngram_total:.4f} topic={topic_cos:.4f}")
    return 0


def _read_verse(prompt):
    print(prompt, flush=True)
    lines = []
    for _ in range(3):
        raw = sys.stdin.readline()
        if raw == "":
            return None
        lines.append(raw.rstrip("\n"))
    return lines


def cmd_renga(args):
    models = _load_models(args.models)
    with open(args.ruleset, encoding="utf-8") as f:
        ruleset = ruleset_from_dict(json.load(f))
    session = new_session(ruleset, seed=args.seed)

    while not session.is_complete():
        haiku, _ = next_link(session, models)
        link = session.links[-1]
        _print_haiku(
            haiku,
            comment=(
                f"link {session.cursor - 1} author=machine criterion={link.criterion} "
                f"constraint={' '.join(link.constraint)}"
            ),
        )
        if args.interactive and not session.is_complete():
            while True:
                verse = _read_verse("your verse (3 lines):")
                if verse is None:
                    print("# session left open (end of input)")
                    return 0
                violations = submit_link(session, verse, models, author=HUMAN)
                if not violations:
                    _print_haiku(session.links[-1].haiku, comment=f"link {session.cursor - 1} author=human")
                    break
                for v in violations:
                    print(f"violation: {v.message}")
    print("# renga complete")
    return 0


def cmd_score(args):
    models = _load_models(args.models)
    with open(args.poem, encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip() and not line.startswith("#")]
    haiku = haiku_from_lines([line.split() for line in lines])
    topic = topic_vector(models.space, args.topic.split())
    report = score_report(models, haiku, topic)
    print(f"sense: {report.sense:.4f}")
    print(f"topic: {report.topic:.4f}")
    print(f"emotion: {report.emotion}")
    print(f"variety: {report.variety:.4f}")
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import app_from_model_dir

    app = app_from_model_dir(args.models, session_log=args.session_log)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="haikai", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-models", help="parse corpora and cache the model set")
    p.add_argument("--haiku-corpus", required=True)
    p.add_argument("--text-corpus", required=True)
    p.add_argument("--vectors", required=True)
    p.add_argument("--cmudict", required=True)
    p.add_argument("--afinn", required=True)
    p.add_argument("--tag-lexicon", required=True)
    p.add_argument("--ngram-order", type=int, default=3)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_models)

    p = sub.add_parser("haiku", help="generate a batch of haikus")
    p.add_argument("--t1", required=True, help="primary topic words")
    p.add_argument("--t2", help="secondary topic words to blend")
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dither", type=float, default=0.0)
    p.add_argument("--models", default=DEFAULT_MODELS_DIR)
    p.set_defaults(func=cmd_haiku)

    p = sub.add_parser("renga", help="compose a renga from a ruleset file")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--interactive", action="store_true", help="alternate machine links with verses typed on stdin")
    p.add_argument("--models", default=DEFAULT_MODELS_DIR)
    p.set_defaults(func=cmd_renga)

    p = sub.add_parser("score", help="score a poem file against a topic")
    p.add_argument("--poem", required=True)
    p.add_argument("--topic", required=True)
    p.add_argument("--models", default=DEFAULT_MODELS_DIR)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--models", default=DEFAULT_MODELS_DIR)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--session-log", help="append accepted links to this JSONL file")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

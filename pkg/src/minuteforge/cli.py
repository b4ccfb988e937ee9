"""minuteforge command line: summarize / evaluate / inspect / config.

Exit codes: 0 success, 2 usage or validation failure, 3 empty meeting,
4 embeddings handshake failure. Verbosity comes from MINUTEFORGE_LOG
(quiet | info | debug).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import affinity, embedding, meaningfulness, minutes as minutes_mod, phrases as phrases_mod
from .errors import EmbeddingHandshakeError, EmptyMeetingError, IngestionError
from .ingest import parse_transcript, serialize_utterances

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EMPTY_MEETING = 3
EXIT_EMBEDDINGS = 4

_LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging() -> None:
    level = _LOG_LEVELS.get(os.environ.get("MINUTEFORGE_LOG", "quiet").lower(), logging.ERROR)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="transcript text file")
    parser.add_argument("--ratio", type=float, default=minutes_mod.DEFAULT_SELECTION_RATIO)
    parser.add_argument("--damping", type=float, default=0.9)
    parser.add_argument("--max-iterations", type=int, default=1000)
    parser.add_argument("--convergence-iterations", type=int, default=50)
    parser.add_argument("--preference", type=float, default=None,
                        help="explicit AP preference (default: median off-diagonal)")
    parser.add_argument("--embeddings", default=None, help="external embeddings JSONL")
    parser.add_argument("--lexicons", default=None, help="lexicon JSON overriding defaults")
    parser.add_argument("--stfidf-grams", type=int, choices=(1, 3), default=3)
    parser.add_argument("--dim", type=int, default=embedding.DEFAULT_BUILTIN_DIM,
                        help="builtin embedding dimension")
    parser.add_argument("--ordering", choices=("exemplar", "earliest-member"),
                        default="exemplar")
    parser.add_argument("--seed", type=int, default=0,
                        help="tie-breaking jitter seed; 0 disables")


def _run_pipeline(args):
    """Shared ingest->phrases->scores->clustering path for summarize/inspect."""
    path = Path(args.input)
    if not path.is_file():
        raise FileNotFoundError(f"input file not found: {path}")
    if not (0.0 < args.ratio <= 1.0):
        raise ValueError(f"--ratio must be in (0, 1], got {args.ratio}")

    lexicons = (phrases_mod.Lexicons.from_file(args.lexicons)
                if args.lexicons else phrases_mod.Lexicons())
    transcript = parse_transcript(path.read_bytes(), meeting_id=path.stem)
    phrases = phrases_mod.extract_phrases(transcript, lexicons)
    corpus = meaningfulness.build_corpus(phrases)
    scores = meaningfulness.score_all(phrases, corpus, max_ngram=args.stfidf_grams)

    if args.embeddings:
        emb = embedding.load_embeddings(args.embeddings, phrases)
    else:
        emb = embedding.builtin_embed(phrases, corpus, dim=args.dim)
    sim = embedding.similarity_matrix(emb)

    config = affinity.ApConfig(
        damping=args.damping,
        max_iterations=args.max_iterations,
        convergence_iterations=args.convergence_iterations,
        preference=args.preference,
        noise_seed=args.seed,
    )
    solution = affinity.cluster(sim, config)
    return transcript, phrases, scores, solution


def cmd_summarize(args) -> int:
    transcript, phrases, scores, solution = _run_pipeline(args)
    ranked = minutes_mod.rank_clusters(solution, scores)
    selected = minutes_mod.select_minutes(
        ranked, args.ratio, phrases,
        meeting_id=transcript.meeting_id, ordering=args.ordering,
    )
    document = minutes_mod.render(selected, args.format)
    if args.output:
        Path(args.output).write_text(document, encoding="utf-8")
    else:
        sys.stdout.write(document)
    return EXIT_OK


def cmd_inspect(args) -> int:
    transcript, phrases, scores, solution = _run_pipeline(args)
    ranked = minutes_mod.rank_clusters(solution, scores)
    score_by_id = {s.phrase_id: s for s in scores}

    if args.phrases_out:
        with open(args.phrases_out, "w", encoding="utf-8") as fh:
            for p in phrases:
                fh.write(json.dumps({"phrase_id": p.phrase_id, "text": p.text}) + "\n")

    report = {
        "meeting_id": transcript.meeting_id,
        "utterances": serialize_utterances(transcript),
        "phrases": [
            {
                "phrase_id": p.phrase_id,
                "utterance_index": p.utterance_index,
                "tokens": p.tokens,
                "text": p.text,
                "stfidf": score_by_id[p.phrase_id].stfidf,
                "exemplar": solution.assignment[p.phrase_id],
            }
            for p in phrases
        ],
        "clusters": [
            {
                "exemplar_phrase_id": c.exemplar_phrase_id,
                "member_phrase_ids": c.member_phrase_ids,
                "meaningfulness": c.meaningfulness,
            }
            for c in ranked
        ],
        "diagnostics": {
            "iterations_run": solution.iterations_run,
            "converged": solution.converged,
            "exemplar_count": len(solution.exemplars),
            "net_similarity": solution.net_similarity,
            "preference": solution.preference,
            "damping": args.damping,
            "max_iterations": args.max_iterations,
            "convergence_iterations": args.convergence_iterations,
        },
    }
    payload = json.dumps(report, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    from . import rouge

    cand_path = Path(args.candidate)
    if not cand_path.is_file():
        raise FileNotFoundError(f"candidate file not found: {cand_path}")
    refs = []
    for ref in args.reference:
        ref_path = Path(ref)
        if not ref_path.is_file():
            raise FileNotFoundError(f"reference file not found: {ref_path}")
        refs.append(ref_path.read_text(encoding="utf-8"))
    report = rouge.evaluate(cand_path.read_text(encoding="utf-8"), refs, args.aggregation)
    payload = json.dumps(report.to_dict(), indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_config(args) -> int:
    if args.dump_lexicons:
        sys.stdout.write(json.dumps(phrases_mod.Lexicons().to_dict(), indent=2) + "\n")
        return EXIT_OK
    print("nothing to do; try --dump-lexicons", file=sys.stderr)
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minuteforge",
                                     description="unsupervised meeting minuting")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="produce meeting minutes")
    _add_pipeline_flags(p_sum)
    p_sum.add_argument("--output", default=None)
    p_sum.add_argument("--format", choices=("text", "json"), default="text")
    p_sum.set_defaults(func=cmd_summarize)

    p_ins = sub.add_parser("inspect", help="dump phrases, scores, clusters as JSON")
    _add_pipeline_flags(p_ins)
    p_ins.add_argument("--output", default=None)
    p_ins.add_argument("--phrases-out", default=None,
                       help="write the phrase list JSONL for the embeddings exporter")
    p_ins.set_defaults(func=cmd_inspect)

    p_eval = sub.add_parser("evaluate", help="score a candidate against references")
    p_eval.add_argument("--candidate", required=True)
    p_eval.add_argument("--reference", action="append", required=True)
    p_eval.add_argument("--aggregation", choices=("max", "mean"), default="max")
    p_eval.add_argument("--output", default=None)
    p_eval.set_defaults(func=cmd_evaluate)

    p_cfg = sub.add_parser("config", help="show built-in configuration")
    p_cfg.add_argument("--dump-lexicons", action="store_true")
    p_cfg.set_defaults(func=cmd_config)

    return parser


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyMeetingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_MEETING
    except EmbeddingHandshakeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMBEDDINGS
    except (FileNotFoundError, IngestionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

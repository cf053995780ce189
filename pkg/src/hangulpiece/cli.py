"""Command-line interface: train, tokenize, compare, analyze, detok.

Flag values override config-file values, which override built-in
defaults. In human mode the effective config is echoed to stderr under
``#config`` lines so every reported number is reproducible; stdout
carries only data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources
from pathlib import Path
from typing import Sequence

from .analysis import (
    compare_tokenizers,
    composition_report,
    format_comparison,
    format_composition,
    format_stats,
    unk_ratio,
)
from .corpus import CorpusReader, count_words, read_sentences
from .errors import HangulpieceError
from .tokenizer import Tokenizer, TokenizerConfig, TokenizerMode, detokenize
from .vocab import (
    GranularityLevel,
    augment_vocab,
    load_vocab,
    save_merges,
    save_vocab,
    train_bpe,
)

DEFAULTS = {
    "level": "character",
    "mode": "forward",
    "vocab_size": 10000,
    "min_pair_freq": 2,
    "scoring": "mean_log",
}


def _effective_config(args: argparse.Namespace, keys: Sequence[str]) -> dict:
    """flags > config file > defaults, for the given keys."""
    file_cfg = {}
    if getattr(args, "config", None):
        file_cfg = json.loads(Path(args.config).read_text(encoding="utf-8"))
    cfg = {}
    for key in keys:
        value = getattr(args, key, None)
        if value is None:
            value = file_cfg.get(key, DEFAULTS.get(key))
        cfg[key] = value
    return cfg


def _echo_config(cfg: dict, jsonl: bool) -> None:
    if jsonl:
        return
    for key in sorted(cfg):
        print(f"#config {key}={cfg[key]}", file=sys.stderr)


def _read_lines(path: str | None):
    if path:
        with open(path, encoding="utf-8") as fh:
            yield from (line.rstrip("\n") for line in fh)
    else:
        yield from (line.rstrip("\n") for line in sys.stdin)


def default_symbols() -> list[str]:
    """The bundled heuristic augmentation symbol list."""
    text = resources.files("hangulpiece.data").joinpath("default_symbols.txt").read_text("utf-8")
    return [line for line in text.splitlines() if line]


def cmd_train(args: argparse.Namespace) -> int:
    cfg = _effective_config(args, ["level", "vocab_size", "min_pair_freq"])
    cfg["corpus"] = args.corpus
    cfg["out_vocab"] = args.out_vocab
    _echo_config(cfg, args.jsonl)
    level = GranularityLevel(cfg["level"])
    reader = CorpusReader(sources=list(args.corpus))
    counts = count_words(read_sentences(reader), level)
    vocab, merges = train_bpe(counts, level, int(cfg["vocab_size"]), int(cfg["min_pair_freq"]))

    symbols: list[str] = []
    if args.symbols_file:
        symbols = [s for s in Path(args.symbols_file).read_text("utf-8").splitlines() if s]
    elif args.augment_default:
        symbols = default_symbols()
    skipped = 0
    if symbols:
        vocab, skipped = augment_vocab(vocab, symbols)

    save_vocab(vocab, args.out_vocab)
    if args.out_merges:
        save_merges(merges, args.out_merges)

    report = {
        "corpus_words": sum(counts.values()),
        "distinct_words": len(counts),
        "merges_executed": len(merges),
        "symbols_skipped": skipped,
        "vocab_size": len(vocab),
    }
    if args.jsonl:
        print(json.dumps(report, ensure_ascii=False))
    else:
        for key, value in report.items():
            print(f"{key:<16} {value}")
    return 0


def _build_tokenizer(vocab_path: str, mode: str, level: str | None, scoring: str) -> Tokenizer:
    vocab = load_vocab(vocab_path)
    cfg_level = GranularityLevel(level) if level else vocab.level
    config = TokenizerConfig(level=cfg_level, mode=TokenizerMode(mode), scoring=scoring)
    return Tokenizer(vocab, config)


def cmd_tokenize(args: argparse.Namespace) -> int:
    cfg = _effective_config(args, ["mode", "level", "scoring"])
    cfg["vocab"] = args.vocab
    _echo_config(cfg, args.jsonl)
    tok = _build_tokenizer(args.vocab, cfg["mode"], args.level, cfg["scoring"])
    for line in _read_lines(args.input):
        result = tok.tokenize(line)
        if args.jsonl:
            record = {
                "tokens": result.token_strings(),
                "ids": result.ids(),
                "spans": [[t.start, t.end] for t in result.tokens],
                "unk": [t.is_unknown for t in result.tokens],
            }
            print(json.dumps(record, ensure_ascii=False))
        else:
            print(" ".join(result.token_strings()))
    return 0


def _parse_variant(spec: str) -> tuple[str, str, str]:
    """NAME=VOCAB_PATH:MODE (mode optional, default forward)."""
    name, _, rest = spec.partition("=")
    if not name or not rest:
        raise HangulpieceError(f"bad variant spec {spec!r}; expected NAME=VOCAB[:MODE]")
    path, _, mode = rest.rpartition(":")
    if not path:
        path, mode = rest, "forward"
    return name, path, mode


def cmd_compare(args: argparse.Namespace) -> int:
    cfg = _effective_config(args, ["scoring"])
    cfg["variants"] = args.variant
    _echo_config(cfg, args.jsonl)
    variants = []
    for spec in args.variant:
        name, path, mode = _parse_variant(spec)
        variants.append((name, _build_tokenizer(path, mode, None, cfg["scoring"])))
    words = [w for w in _read_lines(args.words) if w]
    rows = compare_tokenizers(words, variants)
    if args.jsonl:
        for row in rows:
            for name, tokens in row.segmentations.items():
                record = {
                    "word": row.word,
                    "variant": name,
                    "tokens": tokens,
                    "is_unk": tokens == ["[UNK]"],
                }
                print(json.dumps(record, ensure_ascii=False))
    else:
        print(format_comparison(rows))
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _effective_config(args, ["mode", "scoring"])
    cfg["vocab"] = args.vocab
    cfg["corpus"] = args.corpus
    _echo_config(cfg, args.jsonl)
    tok = _build_tokenizer(args.vocab, cfg["mode"], None, cfg["scoring"])
    report = composition_report(tok.vocab)
    if args.jsonl:
        record = {"record": "composition", **asdict(report), "percentages": report.percentages()}
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(format_composition(report))
    if args.corpus:
        reader = CorpusReader(sources=list(args.corpus))
        stats = unk_ratio(read_sentences(reader), tok)
        if args.jsonl:
            record = {
                "record": "unk",
                "total_words": stats.total_words,
                "unk_words": stats.unk_words,
                "total_tokens": stats.total_tokens,
                "unk_ratio": round(stats.unk_ratio, 5),
            }
            print(json.dumps(record, ensure_ascii=False))
        else:
            print(format_stats(stats))
    return 0


def cmd_detok(args: argparse.Namespace) -> int:
    cfg = _effective_config(args, ["level"])
    if args.vocab:
        cfg["level"] = load_vocab(args.vocab).level.value
    _echo_config(cfg, args.jsonl)
    level = GranularityLevel(cfg["level"])
    for lineno, line in enumerate(_read_lines(args.input), start=1):
        if line.startswith("#config"):
            continue
        tokens = line.split(" ") if line else []
        if any(not t for t in tokens):
            raise HangulpieceError(f"line {lineno}: malformed token record (empty token)")
        print(detokenize(tokens, level))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hangulpiece",
        description="Korean subword tokenization: BPE training, WordPiece inference, corpus analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file; flags take precedence")
        p.add_argument("--jsonl", action="store_true", help="machine mode: line-delimited JSON records")

    p = sub.add_parser("train", help="train a BPE vocabulary from plain-text corpora")
    common(p)
    p.add_argument("--corpus", nargs="+", required=True, help="input text files (gzip detected)")
    p.add_argument("--level", choices=["character", "subcharacter"])
    p.add_argument("--vocab-size", dest="vocab_size", type=int)
    p.add_argument("--min-pair-freq", dest="min_pair_freq", type=int)
    p.add_argument("--symbols-file", help="augmentation symbols, one per line")
    p.add_argument("--augment-default", action="store_true", help="append the bundled symbol list")
    p.add_argument("--out-vocab", required=True)
    p.add_argument("--out-merges")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("tokenize", help="tokenize line-delimited text on stdin")
    common(p)
    p.add_argument("--vocab", required=True)
    p.add_argument("--mode", choices=["forward", "backward", "bidirectional"])
    p.add_argument("--level", choices=["character", "subcharacter"],
                   help="must match the vocab level when given")
    p.add_argument("--scoring", choices=["mean_log", "sum_log", "min_freq"])
    p.add_argument("--input", help="read from file instead of stdin")
    p.set_defaults(func=cmd_tokenize)

    p = sub.add_parser("compare", help="side-by-side segmentations across variants")
    common(p)
    p.add_argument("--variant", action="append", required=True,
                   metavar="NAME=VOCAB[:MODE]")
    p.add_argument("--words", help="word list file; defaults to stdin")
    p.add_argument("--scoring", choices=["mean_log", "sum_log", "min_freq"])
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("analyze", help="vocabulary composition and [UNK] ratio")
    common(p)
    p.add_argument("--vocab", required=True)
    p.add_argument("--mode", choices=["forward", "backward", "bidirectional"])
    p.add_argument("--corpus", nargs="*", default=[], help="corpus files for the [UNK] ratio")
    p.add_argument("--scoring", choices=["mean_log", "sum_log", "min_freq"])
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("detok", help="invert tokenize output back to text")
    common(p)
    p.add_argument("--level", choices=["character", "subcharacter"])
    p.add_argument("--vocab", help="take the level from a vocab file")
    p.add_argument("--input", help="read from file instead of stdin")
    p.set_defaults(func=cmd_detok)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HangulpieceError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

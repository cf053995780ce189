"""Corpus ingestion: plain-text reading, sentence splitting, word counting."""

from __future__ import annotations

import gzip
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import EncodingError, IoError
from .hangul import compose_text
from .tokenizer import pre_tokenize
from .vocab import GranularityLevel

# Sentence boundary: terminal punctuation followed by whitespace or EOL.
_SENTENCE_END = re.compile(r"(?<=[.!?。！？])\s+")
_CONTROL = re.compile(r"[\x00-\x08\x0b-\x1f\x7f]")

GZIP_MAGIC = b"\x1f\x8b"


@dataclass
class CorpusReader:
    """Line/sentence source over plain-text (optionally gzipped) files."""

    sources: list[str | Path | IO]
    normalization: str = "precompose"  # "none" | "precompose"
    sentence_split: bool = True

    def __post_init__(self):
        if self.normalization not in ("none", "precompose"):
            raise ValueError(f"unknown normalization {self.normalization!r}")


def _open_source(source: str | Path | IO) -> tuple[str, IO]:
    if hasattr(source, "read"):
        return str(getattr(source, "name", "<stream>")), source
    path = Path(source)
    try:
        return str(path), open(path, "rb")
    except OSError as exc:
        raise IoError(str(path), exc) from exc


def _decode_lines(name: str, stream: IO) -> Iterator[str]:
    data = stream.read()
    if isinstance(data, str):
        yield from data.splitlines()
        return
    if data[:2] == GZIP_MAGIC:
        data = gzip.decompress(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(name, exc.start) from exc
    yield from text.splitlines()


def read_sentences(r: CorpusReader) -> Iterator[str]:
    """Emit sentences in source order.

    Splits on sentence-final punctuation followed by whitespace and on
    blank lines; a run with no terminal punctuation stays one sentence.
    """
    for source in r.sources:
        name, stream = _open_source(source)
        try:
            for line in _decode_lines(name, stream):
                line = _CONTROL.sub("", line).strip()
                if not line:
                    continue
                if r.normalization == "precompose":
                    line = compose_text(line)
                if r.sentence_split:
                    for sentence in _SENTENCE_END.split(line):
                        sentence = sentence.strip()
                        if sentence:
                            yield sentence
                else:
                    yield line
        finally:
            if not hasattr(source, "read"):
                stream.close()


def count_words(
    sentences: Iterable[str], level: GranularityLevel
) -> dict[str, int]:
    """Exact word-frequency map; words are jamo-decomposed at sub-character level."""
    from .hangul import decompose_text

    counts: dict[str, int] = {}
    for sentence in sentences:
        for word, _, _ in pre_tokenize(sentence):
            if level is GranularityLevel.SUBCHARACTER:
                word = decompose_text(word)
            counts[word] = counts.get(word, 0) + 1
    return counts

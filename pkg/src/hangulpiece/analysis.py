"""Evaluation utilities: unknown-token ratio, vocabulary composition, comparisons."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .hangul import CharClass, classify_char
from .tokenizer import Tokenizer, pre_tokenize
from .vocab import CompositionReport, Vocabulary, classify_vocab


@dataclass
class CorpusStats:
    """Aggregate counts over a tokenized corpus.

    ``unk_words`` counts source words that mapped to the unknown token
    (the numerator of the ratio); ``total_tokens`` counts tokenizer
    output tokens including unknowns.
    """

    total_words: int = 0
    unk_words: int = 0
    total_tokens: int = 0
    per_class: dict[CharClass, int] = field(default_factory=dict)

    @property
    def unk_ratio(self) -> float:
        return self.unk_words / self.total_words if self.total_words else 0.0


@dataclass(frozen=True)
class ComparisonRow:
    word: str
    segmentations: dict[str, list[str]]
    agreement: bool


def unk_ratio(sentences: Iterable[str], tok: Tokenizer) -> CorpusStats:
    """Exact unknown-word counts over a sentence stream."""
    stats = CorpusStats()
    for sentence in sentences:
        for word, _, _ in pre_tokenize(sentence):
            pieces = tok.tokenize_word(word)
            stats.total_words += 1
            stats.total_tokens += len(pieces)
            cls = classify_char(word[0])
            stats.per_class[cls] = stats.per_class.get(cls, 0) + 1
            if pieces == [tok.config.unk_token]:
                stats.unk_words += 1
    return stats


def composition_report(v: Vocabulary) -> CompositionReport:
    return classify_vocab(v)


def format_composition(report: CompositionReport) -> str:
    """Aligned human-readable table, percentages to 3 decimals."""
    pct = report.percentages()
    rows = [
        ("hangul words", report.hangul_words, pct["hangul_words"]),
        ("hangul subwords", report.hangul_subwords, pct["hangul_subwords"]),
        ("symbols/other", report.symbols_other, pct["symbols_other"]),
        ("special tokens", report.special, pct["special"]),
    ]
    lines = [f"{name:<16} {count:>8} {p:>8.3f}%" for name, count, p in rows]
    lines.append(f"{'total':<16} {report.total:>8} {100.0:>8.3f}%")
    return "\n".join(lines)


def format_stats(stats: CorpusStats) -> str:
    lines = [
        f"total words     {stats.total_words}",
        f"unk words       {stats.unk_words}",
        f"total tokens    {stats.total_tokens}",
        f"unk ratio       {stats.unk_ratio:.5f}",
    ]
    for cls in CharClass:
        if cls in stats.per_class:
            lines.append(f"  {cls.value:<16} {stats.per_class[cls]}")
    return "\n".join(lines)


def compare_tokenizers(
    words: Sequence[str], variants: Sequence[tuple[str, Tokenizer]]
) -> list[ComparisonRow]:
    """One row per word with each variant's segmentation side by side."""
    if not variants:
        raise ValueError("at least one tokenizer variant is required")
    rows = []
    for word in words:
        segs = {name: tok.tokenize_word(word) for name, tok in variants}
        values = list(segs.values())
        agreement = all(v == values[0] for v in values[1:])
        rows.append(ComparisonRow(word, segs, agreement))
    return rows


def format_comparison(rows: Sequence[ComparisonRow]) -> str:
    if not rows:
        return ""
    names = list(rows[0].segmentations)
    header = f"{'word':<16} " + " ".join(f"{n:<24}" for n in names) + " agree"
    lines = [header]
    for row in rows:
        cells = " ".join(f"{' '.join(row.segmentations[n]):<24}" for n in names)
        lines.append(f"{row.word:<16} {cells} {'yes' if row.agreement else 'no'}")
    return "\n".join(lines)

"""BPE vocabulary training, composition analysis, and file formats.

A vocabulary is an ordered token inventory: five special tokens at ids
0-4, then the observed base alphabet, then one token per executed merge.
Continuation tokens carry a ``##`` prefix, BERT-style. Training is fully
deterministic: equal-frequency merge candidates break ties by
lexicographic order of the (left, right) token strings.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import EmptyCorpus, ParseError, TargetTooSmall
from .hangul import decompose_text, is_hangul, normalize_compat_jamo

SPECIAL_TOKENS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")
CONTINUATION = "##"

VOCAB_MAGIC = "#hpv1"


class GranularityLevel(Enum):
    CHARACTER = "character"
    SUBCHARACTER = "subcharacter"


@dataclass(frozen=True)
class VocabEntry:
    token: str
    id: int
    frequency: int


@dataclass(frozen=True)
class MergeRule:
    left: str
    right: str
    merged: str
    rank: int
    frequency: int = 0


class Vocabulary:
    """Immutable ordered token inventory with an inverse lookup."""

    def __init__(self, level: GranularityLevel, tokens: Iterable[tuple[str, int]]):
        self.level = level
        entries = []
        lookup: dict[str, int] = {}
        for token, freq in tokens:
            stripped = token.removeprefix(CONTINUATION)
            if not stripped:
                raise ValueError(f"empty token at id {len(entries)}")
            if token in lookup:
                raise ValueError(f"duplicate token {token!r}")
            lookup[token] = len(entries)
            entries.append(VocabEntry(token, len(entries), freq))
        for special in SPECIAL_TOKENS:
            if special not in lookup:
                raise ValueError(f"missing special token {special}")
        self.entries: tuple[VocabEntry, ...] = tuple(entries)
        self._lookup = lookup

    @classmethod
    def from_tokens(
        cls,
        level: GranularityLevel,
        tokens: Iterable[str],
        freqs: Mapping[str, int] | None = None,
    ) -> "Vocabulary":
        """Build a vocabulary from plain tokens, prepending the five specials."""
        freqs = freqs or {}
        ordered = [t for t in SPECIAL_TOKENS]
        seen = set(ordered)
        for t in tokens:
            if t not in seen:
                ordered.append(t)
                seen.add(t)
        return cls(level, ((t, freqs.get(t, 0)) for t in ordered))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, token: str) -> bool:
        return token in self._lookup

    def __iter__(self) -> Iterator[VocabEntry]:
        return iter(self.entries)

    def id_of(self, token: str) -> int:
        return self._lookup[token]

    def token_of(self, id: int) -> str:
        return self.entries[id].token

    def freq_of(self, token: str) -> int:
        return self.entries[self._lookup[token]].frequency

    @property
    def unk_token(self) -> str:
        return "[UNK]"

    @property
    def unk_id(self) -> int:
        return self._lookup["[UNK]"]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vocabulary):
            return NotImplemented
        return self.level == other.level and self.entries == other.entries


@dataclass(frozen=True)
class CompositionReport:
    """Vocabulary breakdown into Hangul words, Hangul subwords, other, special."""

    hangul_words: int
    hangul_subwords: int
    symbols_other: int
    special: int

    @property
    def total(self) -> int:
        return self.hangul_words + self.hangul_subwords + self.symbols_other + self.special

    def percentages(self) -> dict[str, float]:
        total = self.total
        if total == 0:
            return {k: 0.0 for k in ("hangul_words", "hangul_subwords", "symbols_other", "special")}
        return {
            "hangul_words": 100.0 * self.hangul_words / total,
            "hangul_subwords": 100.0 * self.hangul_subwords / total,
            "symbols_other": 100.0 * self.symbols_other / total,
            "special": 100.0 * self.special / total,
        }


def _word_units(word: str) -> list[str]:
    return [word[0]] + [CONTINUATION + c for c in word[1:]]


def _merge_units(units: list[str], left: str, right: str, merged: str) -> list[str]:
    out = []
    i = 0
    n = len(units)
    while i < n:
        if i + 1 < n and units[i] == left and units[i + 1] == right:
            out.append(merged)
            i += 2
        else:
            out.append(units[i])
            i += 1
    return out


def train_bpe(
    word_freqs: Mapping[str, int] | Iterable[tuple[str, int]],
    level: GranularityLevel,
    target_size: int,
    min_pair_freq: int = 2,
) -> tuple[Vocabulary, list[MergeRule]]:
    """Learn a BPE vocabulary of at most ``target_size`` tokens.

    ``word_freqs`` maps words to corpus counts. Words are decomposed to
    jamo first when training at sub-character level, so callers may pass
    either precomposed or already-decomposed text.
    """
    items = word_freqs.items() if isinstance(word_freqs, Mapping) else word_freqs
    agg: dict[str, int] = {}
    for word, freq in items:
        if not word or freq <= 0:
            continue
        if level is GranularityLevel.SUBCHARACTER:
            word = decompose_text(word)
        agg[word] = agg.get(word, 0) + freq
    if not agg:
        raise EmptyCorpus("training corpus contains no words")

    words: list[tuple[list[str], int]] = [(_word_units(w), f) for w, f in agg.items()]
    alphabet = sorted({u for units, _ in words for u in units})
    minimum = len(SPECIAL_TOKENS) + len(alphabet) + 1
    if target_size < minimum:
        raise TargetTooSmall(target_size, minimum)

    pair_counts: Counter[tuple[str, str]] = Counter()
    pair_words: dict[tuple[str, str], set[int]] = defaultdict(set)
    for idx, (units, freq) in enumerate(words):
        for pair in zip(units, units[1:]):
            pair_counts[pair] += freq
            pair_words[pair].add(idx)

    # Max-heap with lazy invalidation; tuple order gives the lexicographic
    # tie-break on (left, right) for equal counts.
    heap = [(-c, l, r) for (l, r), c in pair_counts.items()]
    heapq.heapify(heap)

    merges: list[MergeRule] = []
    size = len(SPECIAL_TOKENS) + len(alphabet)
    while size < target_size and heap:
        neg, left, right = heapq.heappop(heap)
        count = -neg
        if pair_counts.get((left, right), 0) != count:
            continue  # stale entry
        if count < min_pair_freq:
            break
        merged = left + right.removeprefix(CONTINUATION)
        merges.append(MergeRule(left, right, merged, len(merges), count))
        size += 1

        touched: set[tuple[str, str]] = set()
        for idx in sorted(pair_words.pop((left, right), ())):
            units, freq = words[idx]
            if not any(a == left and b == right for a, b in zip(units, units[1:])):
                continue  # stale index entry
            for pair in zip(units, units[1:]):
                pair_counts[pair] -= freq
                touched.add(pair)
            new_units = _merge_units(units, left, right, merged)
            words[idx] = (new_units, freq)
            for pair in zip(new_units, new_units[1:]):
                pair_counts[pair] += freq
                touched.add(pair)
                pair_words[pair].add(idx)
        for pair in touched:
            c = pair_counts[pair]
            if c > 0:
                heapq.heappush(heap, (-c, pair[0], pair[1]))
            else:
                pair_counts.pop(pair, None)
                pair_words.pop(pair, None)

    # Token frequencies are counted under the final segmentation state.
    final_counts: Counter[str] = Counter()
    for units, freq in words:
        for u in units:
            final_counts[u] += freq

    ordered = [(t, 0) for t in SPECIAL_TOKENS]
    ordered += [(t, final_counts.get(t, 0)) for t in alphabet]
    ordered += [(m.merged, final_counts.get(m.merged, 0)) for m in merges]
    return Vocabulary(level, ordered), merges


def augment_vocab(v: Vocabulary, symbols: Iterable[str]) -> tuple[Vocabulary, int]:
    """Append heuristic symbols not already present; returns the skip count."""
    tokens = [(e.token, e.frequency) for e in v.entries]
    present = {e.token for e in v.entries}
    skipped = 0
    for sym in symbols:
        if not sym:
            continue
        if sym in present:
            skipped += 1
            continue
        tokens.append((sym, 0))
        present.add(sym)
    return Vocabulary(v.level, tokens), skipped


def classify_vocab(v: Vocabulary) -> CompositionReport:
    """Assign every entry to exactly one composition category."""
    specials = set(SPECIAL_TOKENS)
    words = subwords = other = special = 0
    for entry in v.entries:
        token = entry.token
        if token in specials:
            special += 1
            continue
        is_continuation = token.startswith(CONTINUATION)
        body = token.removeprefix(CONTINUATION)
        if body and all(is_hangul(c) for c in body):
            if is_continuation:
                subwords += 1
            else:
                words += 1
        else:
            other += 1
    return CompositionReport(words, subwords, other, special)


def save_vocab(v: Vocabulary, path: str | Path) -> None:
    lines = [VOCAB_MAGIC, f"level={v.level.value}", f"count={len(v)}"]
    lines += [f"{e.token}\t{e.frequency}" for e in v.entries]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def save_vocab_txt(v: Vocabulary, path: str | Path) -> None:
    """Plain one-token-per-line vocab.txt for BERT interop."""
    Path(path).write_text("".join(e.token + "\n" for e in v.entries), encoding="utf-8")


def load_vocab(path: str | Path) -> Vocabulary:
    """Load a vocab file; headerless files are accepted as interop mode."""
    raw = Path(path).read_text(encoding="utf-8")
    lines = raw.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if lines and lines[0] == VOCAB_MAGIC:
        return _load_headered(lines)
    return _load_interop(lines)


def _load_headered(lines: list[str]) -> Vocabulary:
    if len(lines) < 3 or not lines[1].startswith("level="):
        raise ParseError("expected 'level=' header", 2)
    level_value = lines[1].removeprefix("level=")
    try:
        level = GranularityLevel(level_value)
    except ValueError:
        raise ParseError(f"unknown level {level_value!r}", 2) from None
    if not lines[2].startswith("count="):
        raise ParseError("expected 'count=' header", 3)
    try:
        count = int(lines[2].removeprefix("count="))
    except ValueError:
        raise ParseError("count is not an integer", 3) from None

    tokens: list[tuple[str, int]] = []
    seen: set[str] = set()
    for i, line in enumerate(lines[3:], start=4):
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected 'token<TAB>frequency'", i)
        token, freq_s = parts
        if not token:
            raise ParseError("empty token", i)
        try:
            freq = int(freq_s)
        except ValueError:
            raise ParseError(f"frequency is not an integer: {freq_s!r}", i) from None
        if freq < 0:
            raise ParseError("negative frequency", i)
        if token in seen:
            raise ParseError(f"duplicate token {token!r}", i)
        seen.add(token)
        tokens.append((token, freq))
    if len(tokens) != count:
        raise ParseError(f"count header says {count} but file has {len(tokens)} entries", 3)
    for pos, special in enumerate(SPECIAL_TOKENS):
        if pos >= len(tokens) or tokens[pos][0] != special:
            raise ParseError(f"special token {special} missing at id {pos}", 4 + pos)
    try:
        return Vocabulary(level, tokens)
    except ValueError as exc:
        raise ParseError(str(exc), 4) from None


def _load_interop(lines: list[str]) -> Vocabulary:
    tokens: list[tuple[str, int]] = []
    seen: set[str] = set()
    for i, line in enumerate(lines, start=1):
        token = line.strip()
        if not token:
            continue
        if token not in SPECIAL_TOKENS:
            token = normalize_compat_jamo(token)
        if token in seen:
            raise ParseError(f"duplicate token {token!r}", i)
        seen.add(token)
        tokens.append((token, 0))
    if not tokens:
        raise ParseError("empty vocab file", 1)
    for special in SPECIAL_TOKENS:
        if special not in seen:
            tokens.append((special, 0))
    return Vocabulary(GranularityLevel.CHARACTER, tokens)


def save_merges(merges: Iterable[MergeRule], path: str | Path) -> None:
    Path(path).write_text(
        "".join(f"{m.left}\t{m.right}\n" for m in merges), encoding="utf-8"
    )


def load_merges(path: str | Path) -> list[MergeRule]:
    merges = []
    for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError("expected 'left<TAB>right'", i)
        left, right = parts
        merges.append(MergeRule(left, right, left + right.removeprefix(CONTINUATION), len(merges)))
    return merges

"""Subword tokenization: forward, backward, and bidirectional WordPiece.

Both scan directions are greedy longest-match over one shared vocabulary
with position-based ``##`` continuation markers: a piece is looked up
bare when it starts at the first unit of the word and ``##``-prefixed
otherwise. The bidirectional mode runs both scans and keeps the
candidate whose tokens are more frequent in the training corpus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, NamedTuple, Sequence

from .errors import LevelMismatch
from .hangul import CharClass, classify_char, compose_text, decompose_syllable, is_syllable
from .vocab import CONTINUATION, GranularityLevel, Vocabulary


class TokenizerMode(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    BIDIRECTIONAL = "bidirectional"


@dataclass(frozen=True)
class TokenizerConfig:
    level: GranularityLevel = GranularityLevel.CHARACTER
    mode: TokenizerMode = TokenizerMode.FORWARD
    max_word_units: int = 100
    unk_token: str = "[UNK]"
    lowercase_latin: bool = False
    scoring: str = "mean_log"

    def __post_init__(self):
        if self.max_word_units <= 0:
            raise ValueError("max_word_units must be positive")
        if self.scoring not in SCORING_STRATEGIES:
            raise ValueError(f"unknown scoring strategy {self.scoring!r}")


class Token(NamedTuple):
    text: str
    id: int
    start: int
    end: int
    is_unknown: bool


@dataclass(frozen=True)
class Tokenization:
    """Token sequence for one input text, with spans into the original."""

    text: str
    tokens: tuple[Token, ...] = field(default_factory=tuple)

    def token_strings(self) -> list[str]:
        return [t.text for t in self.tokens]

    def ids(self) -> list[int]:
        return [t.id for t in self.tokens]


def pre_tokenize(text: str) -> list[tuple[str, int, int]]:
    """Whitespace-split words with every punctuation scalar isolated.

    Returns (word, start, end) with spans into ``text``.
    """
    out = []
    start = None
    for i, ch in enumerate(text):
        cls = classify_char(ch)
        if cls is CharClass.WHITESPACE:
            if start is not None:
                out.append((text[start:i], start, i))
                start = None
        elif cls is CharClass.PUNCTUATION:
            if start is not None:
                out.append((text[start:i], start, i))
                start = None
            out.append((ch, i, i + 1))
        elif start is None:
            start = i
    if start is not None:
        out.append((text[start:], start, len(text)))
    return out


def _units(word: str | Sequence[str]) -> list[str]:
    return list(word)


def wordpiece_forward(
    word: str | Sequence[str], v: Vocabulary, cfg: TokenizerConfig
) -> list[str]:
    """Greedy longest-match left to right; failure maps the whole word to UNK."""
    units = _units(word)
    n = len(units)
    if n == 0 or n > cfg.max_word_units:
        return [cfg.unk_token]
    tokens = []
    start = 0
    while start < n:
        match = None
        for end in range(n, start, -1):
            piece = "".join(units[start:end])
            if start > 0:
                piece = CONTINUATION + piece
            if piece in v:
                match = piece
                start = end
                break
        if match is None:
            return [cfg.unk_token]
        tokens.append(match)
    return tokens


def wordpiece_backward(
    word: str | Sequence[str], v: Vocabulary, cfg: TokenizerConfig
) -> list[str]:
    """Greedy longest-match right to left; tokens come out in left-to-right order."""
    units = _units(word)
    n = len(units)
    if n == 0 or n > cfg.max_word_units:
        return [cfg.unk_token]
    tokens = []
    end = n
    while end > 0:
        match = None
        for start in range(0, end):
            piece = "".join(units[start:end])
            if start > 0:
                piece = CONTINUATION + piece
            if piece in v:
                match = piece
                end = start
                break
        if match is None:
            return [cfg.unk_token]
        tokens.append(match)
    tokens.reverse()
    return tokens


def _freq_product(tokens: list[str], v: Vocabulary) -> int:
    p = 1
    for t in tokens:
        p *= v.freq_of(t)
    return p


def _mean_log(tokens: list[str], v: Vocabulary) -> float:
    total = 0.0
    for t in tokens:
        f = v.freq_of(t)
        if f == 0:
            return float("-inf")
        total += math.log(f)
    return total / len(tokens)


def _sum_log(tokens: list[str], v: Vocabulary) -> float:
    total = 0.0
    for t in tokens:
        f = v.freq_of(t)
        if f == 0:
            return float("-inf")
        total += math.log(f)
    return total


def _min_freq(tokens: list[str], v: Vocabulary) -> float:
    return min(v.freq_of(t) for t in tokens)


SCORING_STRATEGIES: dict[str, Callable[[list[str], Vocabulary], float]] = {
    "mean_log": _mean_log,
    "sum_log": _sum_log,
    "min_freq": _min_freq,
}


def _cmp_mean_log(a: list[str], b: list[str], v: Vocabulary) -> int:
    # mean log f(a) vs mean log f(b)  <=>  prod(a)^len(b) vs prod(b)^len(a),
    # done in exact integer arithmetic so that scaling every frequency by a
    # positive constant can never flip the comparison
    pa, pb = _freq_product(a, v), _freq_product(b, v)
    if pa == 0 or pb == 0:
        return (pa > 0) - (pb > 0)
    ka, kb = pa ** len(b), pb ** len(a)
    return (ka > kb) - (ka < kb)


def _cmp_sum_log(a: list[str], b: list[str], v: Vocabulary) -> int:
    pa, pb = _freq_product(a, v), _freq_product(b, v)
    return (pa > pb) - (pa < pb)


def _cmp_min_freq(a: list[str], b: list[str], v: Vocabulary) -> int:
    ma = min(v.freq_of(t) for t in a)
    mb = min(v.freq_of(t) for t in b)
    return (ma > mb) - (ma < mb)


_COMPARATORS: dict[str, Callable[[list[str], list[str], Vocabulary], int]] = {
    "mean_log": _cmp_mean_log,
    "sum_log": _cmp_sum_log,
    "min_freq": _cmp_min_freq,
}


def compare_candidates(
    a: list[str], b: list[str], v: Vocabulary, scoring: str = "mean_log"
) -> int:
    """Sign of score(a) - score(b) under the given strategy, computed exactly."""
    return _COMPARATORS[scoring](a, b, v)


def tokenize_bidirectional(
    word: str | Sequence[str], v: Vocabulary, cfg: TokenizerConfig
) -> list[str]:
    """Pick the higher-frequency candidate of the two scan directions.

    Exact score ties resolve to the candidate with fewer tokens, then to
    the forward one.
    """
    forward = wordpiece_forward(word, v, cfg)
    backward = wordpiece_backward(word, v, cfg)
    fwd_unk = forward == [cfg.unk_token]
    bwd_unk = backward == [cfg.unk_token]
    if fwd_unk:
        return backward
    if bwd_unk:
        return forward
    if forward == backward:
        return forward
    cmp = _COMPARATORS[cfg.scoring](forward, backward, v)
    if cmp != 0:
        return forward if cmp > 0 else backward
    if len(forward) != len(backward):
        return forward if len(forward) < len(backward) else backward
    return forward


_WORD_OPS = {
    TokenizerMode.FORWARD: wordpiece_forward,
    TokenizerMode.BACKWARD: wordpiece_backward,
    TokenizerMode.BIDIRECTIONAL: tokenize_bidirectional,
}


def tokenize(text: str, v: Vocabulary, cfg: TokenizerConfig) -> Tokenization:
    """Full pipeline: pre-tokenize, decompose if sub-character, segment.

    Spans always reference the original text; a token covering part of a
    syllable maps to that syllable's full span.
    """
    if cfg.level is not v.level:
        raise LevelMismatch(
            f"tokenizer level {cfg.level.value} != vocabulary level {v.level.value}"
        )
    word_op = _WORD_OPS[cfg.mode]
    tokens: list[Token] = []
    for word, w_start, w_end in pre_tokenize(text):
        if cfg.lowercase_latin:
            # per-char so offsets into the original text stay aligned
            word = "".join(c.lower() if len(c.lower()) == 1 else c for c in word)
        units: list[str] = []
        unit_char: list[int] = []  # unit index -> char offset within word
        for off, ch in enumerate(word):
            if cfg.level is GranularityLevel.SUBCHARACTER and is_syllable(ch):
                for jamo in decompose_syllable(ch).as_jamo():
                    units.append(jamo)
                    unit_char.append(off)
            else:
                units.append(ch)
                unit_char.append(off)
        pieces = word_op(units, v, cfg)
        if pieces == [cfg.unk_token]:
            tokens.append(Token(cfg.unk_token, v.unk_id, w_start, w_end, True))
            continue
        cursor = 0
        for piece in pieces:
            width = len(piece.removeprefix(CONTINUATION))
            start = w_start + unit_char[cursor]
            end = w_start + unit_char[cursor + width - 1] + 1
            tokens.append(Token(piece, v.id_of(piece), start, end, False))
            cursor += width
    return Tokenization(text, tuple(tokens))


def detokenize(
    t: Tokenization | Sequence[str], level: GranularityLevel
) -> str:
    """Strip markers, join pieces per word, single-space between words.

    Recomposes jamo into syllables at sub-character level.
    """
    pieces = t.token_strings() if isinstance(t, Tokenization) else list(t)
    words: list[str] = []
    for piece in pieces:
        if piece.startswith(CONTINUATION) and words:
            words[-1] += piece[len(CONTINUATION):]
        else:
            words.append(piece.removeprefix(CONTINUATION))
    if level is GranularityLevel.SUBCHARACTER:
        words = [compose_text(w) for w in words]
    return " ".join(words)


class Tokenizer:
    """Immutable (vocabulary, config) bundle; safe for concurrent use."""

    def __init__(self, vocab: Vocabulary, config: TokenizerConfig | None = None):
        config = config or TokenizerConfig(level=vocab.level)
        if config.level is not vocab.level:
            raise LevelMismatch(
                f"tokenizer level {config.level.value} != vocabulary level {vocab.level.value}"
            )
        self.vocab = vocab
        self.config = config

    @classmethod
    def from_file(cls, path, mode: TokenizerMode = TokenizerMode.FORWARD, **kwargs) -> "Tokenizer":
        from .vocab import load_vocab

        vocab = load_vocab(path)
        return cls(vocab, TokenizerConfig(level=vocab.level, mode=mode, **kwargs))

    def with_mode(self, mode: TokenizerMode) -> "Tokenizer":
        return Tokenizer(self.vocab, replace(self.config, mode=mode))

    def tokenize(self, text: str) -> Tokenization:
        return tokenize(text, self.vocab, self.config)

    def tokenize_word(self, word: str) -> list[str]:
        """Segment one already pre-tokenized word into subword pieces."""
        from .hangul import decompose_text

        if self.config.level is GranularityLevel.SUBCHARACTER:
            word = decompose_text(word)
        return _WORD_OPS[self.config.mode](word, self.vocab, self.config)

    def detokenize(self, t: Tokenization | Sequence[str]) -> str:
        return detokenize(t, self.config.level)

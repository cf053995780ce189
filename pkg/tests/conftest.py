from pathlib import Path

from hangulpiece.vocab import CONTINUATION, GranularityLevel, Vocabulary

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def make_vocab(tokens, level=GranularityLevel.CHARACTER, freqs=None):
    """Fixture vocabulary: given tokens plus the five specials."""
    return Vocabulary.from_tokens(level, tokens, freqs)


def brute_force_forward(units, vocab_tokens, unk="[UNK]"):
    """Independent longest-match re-implementation used as a test oracle.

    Enumerates every candidate piece at each position instead of scanning
    lengths downward.
    """
    units = list(units)
    n = len(units)
    out = []
    pos = 0
    while pos < n:
        candidates = []
        for end in range(pos + 1, n + 1):
            piece = "".join(units[pos:end])
            key = piece if pos == 0 else CONTINUATION + piece
            if key in vocab_tokens:
                candidates.append((end - pos, key, end))
        if not candidates:
            return [unk]
        _, key, end = max(candidates)
        out.append(key)
        pos = end
    return out

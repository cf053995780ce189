"""Generate the bundled deterministic sample corpus.

Builds synthetic Korean sentences from fixed word pools (noun + particle,
stem + ending) so that every pool item occurs in the training file; the
held-out file draws from the same pools, which guarantees sub-character
alphabet coverage for the end-to-end tests.

Usage: python tools/make_sample_corpus.py [out_dir]
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hangulpiece.hangul import JamoTriple, compose_syllable  # noqa: E402

SEED = 20240501

LEADINGS = [0, 2, 3, 5, 6, 7, 9, 11, 12, 14, 15, 16, 17, 18]
VOWELS = [0, 1, 4, 5, 6, 8, 13, 17, 18, 20]
TRAILINGS = [0, 0, 0, 1, 4, 8, 16, 17, 19, 21]

PARTICLES = ["은", "는", "이", "가", "을", "를", "에", "에서", "으로", "로",
             "와", "과", "도", "만", "의", "까지", "부터", "처럼"]
ENDINGS = ["다", "고", "지만", "았다", "었다", "습니다", "는데", "어요", "아요",
           "네요", "거든요", "더라", "던데", "려고", "면서", "다가", "어서",
           "았어요", "었어요", "겠다", "는다", "자", "게", "며", "든지"]
LATIN = ["bus", "radio", "piano", "hello", "lol", "ok", "web", "app", "game", "test"]


def make_syllables(rng):
    pool = []
    for lead in LEADINGS:
        for vowel in VOWELS:
            trail = rng.choice(TRAILINGS)
            pool.append(compose_syllable(JamoTriple(lead, vowel, trail)))
    return sorted(set(pool))


def make_words(rng, syllables, count, min_syl, max_syl):
    words = set()
    while len(words) < count:
        n = rng.randint(min_syl, max_syl)
        words.add("".join(rng.choice(syllables) for _ in range(n)))
    return sorted(words)


def sentence(rng, nouns, stems):
    words = []
    for _ in range(rng.randint(2, 6)):
        noun = rng.choice(nouns)
        if rng.random() < 0.8:
            noun += rng.choice(PARTICLES)
        words.append(noun)
    if rng.random() < 0.08:
        words.append(rng.choice(LATIN))
    if rng.random() < 0.05:
        words.append(str(rng.randint(0, 9999)))
    words.append(rng.choice(stems) + rng.choice(ENDINGS))
    return " ".join(words) + rng.choice([".", ".", ".", "!", "?"])


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    syllables = make_syllables(rng)
    nouns = make_words(rng, syllables, 260, 2, 3)
    stems = make_words(rng, syllables, 160, 1, 2)

    coverage = []
    for i, noun in enumerate(nouns):
        coverage.append(f"{noun}{PARTICLES[i % len(PARTICLES)]} {stems[i % len(stems)]}{ENDINGS[i % len(ENDINGS)]}.")
    for i, stem in enumerate(stems):
        coverage.append(f"{nouns[i % len(nouns)]} {stem}{ENDINGS[(i * 7) % len(ENDINGS)]}.")
    for i, particle in enumerate(PARTICLES):
        coverage.append(f"{nouns[(i * 13) % len(nouns)]}{particle} {stems[0]}{ENDINGS[i % len(ENDINGS)]}.")

    train_lines = coverage + [sentence(rng, nouns, stems) for _ in range(18000)]
    heldout_lines = [sentence(rng, nouns, stems) for _ in range(800)]

    train = out_dir / "sample_corpus.txt"
    heldout = out_dir / "sample_heldout.txt"
    train.write_text("\n".join(train_lines) + "\n", encoding="utf-8")
    heldout.write_text("\n".join(heldout_lines) + "\n", encoding="utf-8")
    print(f"{train}: {train.stat().st_size} bytes, {len(train_lines)} lines")
    print(f"{heldout}: {heldout.stat().st_size} bytes, {len(heldout_lines)} lines")


if __name__ == "__main__":
    main()

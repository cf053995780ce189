"""Unicode arithmetic for Hangul syllables and conjoining jamo.

Decomposition follows the canonical formula: for a syllable at codepoint
``0xAC00 + i``, the leading consonant is ``i // 588``, the vowel is
``(i % 588) // 28`` and the trailing consonant is ``i % 28`` (0 = none).
Internally everything is conjoining jamo (U+1100 block); compatibility
jamo (U+3131 block) are accepted on input and normalized.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum

from .errors import NotASyllable

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3
SYLLABLE_COUNT = 11172

LEADING_BASE = 0x1100   # 19 initial consonants
VOWEL_BASE = 0x1161     # 21 medial vowels
TRAILING_BASE = 0x11A7  # trailing index i (1..27) lives at TRAILING_BASE + i

LEADING_COUNT = 19
VOWEL_COUNT = 21
TRAILING_COUNT = 28  # index 0 means "no trailing consonant"


@dataclass(frozen=True)
class JamoTriple:
    """Decomposed syllable: (leading, vowel, trailing) indices."""

    leading: int
    vowel: int
    trailing: int

    def __post_init__(self):
        if not (0 <= self.leading < LEADING_COUNT):
            raise ValueError(f"leading index out of range: {self.leading}")
        if not (0 <= self.vowel < VOWEL_COUNT):
            raise ValueError(f"vowel index out of range: {self.vowel}")
        if not (0 <= self.trailing < TRAILING_COUNT):
            raise ValueError(f"trailing index out of range: {self.trailing}")

    @property
    def leading_char(self) -> str:
        return chr(LEADING_BASE + self.leading)

    @property
    def vowel_char(self) -> str:
        return chr(VOWEL_BASE + self.vowel)

    @property
    def trailing_char(self) -> str:
        """Trailing jamo character, or '' when there is none."""
        return chr(TRAILING_BASE + self.trailing) if self.trailing else ""

    def as_jamo(self) -> str:
        return self.leading_char + self.vowel_char + self.trailing_char


class CharClass(Enum):
    HANGUL_SYLLABLE = "hangul_syllable"
    HANGUL_JAMO = "hangul_jamo"
    LATIN = "latin"
    DIGIT = "digit"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"
    OTHER_CJK = "other_cjk"
    OTHER = "other"


def is_syllable(ch: str) -> bool:
    return SYLLABLE_BASE <= ord(ch) <= SYLLABLE_LAST


def is_jamo(ch: str) -> bool:
    """Conjoining (U+1100..U+11FF) or compatibility (U+3131..U+318E) jamo."""
    cp = ord(ch)
    return 0x1100 <= cp <= 0x11FF or 0x3131 <= cp <= 0x318E


def is_hangul(ch: str) -> bool:
    return is_syllable(ch) or is_jamo(ch)


def decompose_syllable(ch: str) -> JamoTriple:
    """Split one precomposed syllable into its jamo indices."""
    cp = ord(ch)
    if not (SYLLABLE_BASE <= cp <= SYLLABLE_LAST):
        raise NotASyllable(ch)
    i = cp - SYLLABLE_BASE
    return JamoTriple(i // 588, (i % 588) // 28, i % 28)


def compose_syllable(t: JamoTriple) -> str:
    """Inverse of :func:`decompose_syllable`."""
    return chr(SYLLABLE_BASE + (t.leading * VOWEL_COUNT + t.vowel) * TRAILING_COUNT + t.trailing)


def decompose_text(s: str) -> str:
    """Replace every precomposed syllable by its 2-3 conjoining jamo."""
    out = []
    for ch in s:
        if is_syllable(ch):
            out.append(decompose_syllable(ch).as_jamo())
        else:
            out.append(ch)
    return "".join(out)


def compose_text(s: str) -> str:
    """Recompose maximal (leading, vowel[, trailing]) jamo runs into syllables.

    Jamo that cannot head a valid syllable pass through unchanged, so the
    function is a left inverse of :func:`decompose_text` on precomposed input.
    """
    out = []
    i = 0
    n = len(s)
    while i < n:
        cp = ord(s[i])
        if (
            LEADING_BASE <= cp < LEADING_BASE + LEADING_COUNT
            and i + 1 < n
            and VOWEL_BASE <= ord(s[i + 1]) < VOWEL_BASE + VOWEL_COUNT
        ):
            leading = cp - LEADING_BASE
            vowel = ord(s[i + 1]) - VOWEL_BASE
            trailing = 0
            i += 2
            if i < n and TRAILING_BASE < ord(s[i]) < TRAILING_BASE + TRAILING_COUNT:
                trailing = ord(s[i]) - TRAILING_BASE
                i += 1
            out.append(compose_syllable(JamoTriple(leading, vowel, trailing)))
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


# Compatibility jamo (U+3131..) in block order; '' marks vowels handled below.
_COMPAT_CONSONANTS = "ㄱㄲㄳㄴㄵㄶㄷㄸㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅃㅄㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ"
_LEADING_CHARS = "ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ"
_TRAILING_CHARS = "ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ"

_COMPAT_TO_LEADING = {
    c: chr(LEADING_BASE + _LEADING_CHARS.index(c)) for c in _COMPAT_CONSONANTS if c in _LEADING_CHARS
}
_COMPAT_TO_TRAILING = {
    c: chr(TRAILING_BASE + 1 + _TRAILING_CHARS.index(c))
    for c in _COMPAT_CONSONANTS
    if c in _TRAILING_CHARS
}
_COMPAT_VOWEL_BASE = 0x314F  # ㅏ..ㅣ, same order as conjoining medials


def normalize_compat_jamo(s: str) -> str:
    """Map compatibility jamo to conjoining form.

    Consonants are ambiguous between leading and trailing position; a
    consonant directly after a medial vowel becomes trailing, otherwise
    leading (cluster-only consonants like ㄳ always become trailing).
    Best-effort interop for human-authored vocab files.
    """
    out = []
    prev_is_vowel = False
    for ch in s:
        cp = ord(ch)
        if _COMPAT_VOWEL_BASE <= cp <= 0x3163:
            ch = chr(VOWEL_BASE + cp - _COMPAT_VOWEL_BASE)
            prev_is_vowel = True
        elif ch in _COMPAT_TO_LEADING or ch in _COMPAT_TO_TRAILING:
            if prev_is_vowel and ch in _COMPAT_TO_TRAILING:
                ch = _COMPAT_TO_TRAILING[ch]
            elif ch in _COMPAT_TO_LEADING:
                ch = _COMPAT_TO_LEADING[ch]
            else:
                ch = _COMPAT_TO_TRAILING[ch]
            prev_is_vowel = False
        else:
            prev_is_vowel = VOWEL_BASE <= cp < VOWEL_BASE + VOWEL_COUNT
        out.append(ch)
    return "".join(out)


def classify_char(ch: str) -> CharClass:
    """Total, deterministic character classification."""
    cp = ord(ch)
    if SYLLABLE_BASE <= cp <= SYLLABLE_LAST:
        return CharClass.HANGUL_SYLLABLE
    if is_jamo(ch):
        return CharClass.HANGUL_JAMO
    if ch.isspace():
        return CharClass.WHITESPACE
    cat = unicodedata.category(ch)
    if cat == "Nd":
        return CharClass.DIGIT
    if cat.startswith("P"):
        return CharClass.PUNCTUATION
    if (
        0x4E00 <= cp <= 0x9FFF      # CJK unified ideographs
        or 0x3400 <= cp <= 0x4DBF   # CJK extension A
        or 0x3040 <= cp <= 0x30FF   # Hiragana + Katakana
        or 0xF900 <= cp <= 0xFAFF   # CJK compatibility ideographs
    ):
        return CharClass.OTHER_CJK
    if cat.startswith("L"):
        name = unicodedata.name(ch, "")
        if name.startswith("LATIN"):
            return CharClass.LATIN
    return CharClass.OTHER

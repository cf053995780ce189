import unicodedata

import pytest
from hypothesis import given, strategies as st

from hangulpiece.errors import NotASyllable
from hangulpiece.hangul import (
    CharClass,
    JamoTriple,
    SYLLABLE_BASE,
    SYLLABLE_LAST,
    classify_char,
    compose_syllable,
    compose_text,
    decompose_syllable,
    decompose_text,
    normalize_compat_jamo,
)


class TestDecomposeSyllable:
    @pytest.mark.parametrize(
        "char,triple",
        [
            ("갔", (0, 0, 20)),
            ("가", (0, 0, 0)),
            ("뜀", (4, 16, 16)),
            ("감", (0, 0, 16)),
            ("간", (0, 0, 4)),
            ("갈", (0, 0, 8)),
        ],
    )
    def test_known_syllables(self, char, triple):
        t = decompose_syllable(char)
        assert (t.leading, t.vowel, t.trailing) == triple

    def test_out_of_range_raises(self):
        with pytest.raises(NotASyllable):
            decompose_syllable("a")
        with pytest.raises(NotASyllable):
            decompose_syllable("ᄀ")

    def test_matches_nfd_on_every_syllable(self):
        for cp in range(SYLLABLE_BASE, SYLLABLE_LAST + 1):
            ch = chr(cp)
            assert decompose_syllable(ch).as_jamo() == unicodedata.normalize("NFD", ch)


class TestComposeSyllable:
    def test_inverse_examples(self):
        assert compose_syllable(JamoTriple(0, 0, 20)) == "갔"
        assert compose_syllable(JamoTriple(0, 0, 0)) == "가"
        assert compose_syllable(JamoTriple(4, 16, 16)) == "뜀"

    def test_exhaustive_round_trip(self):
        for cp in range(SYLLABLE_BASE, SYLLABLE_LAST + 1):
            assert compose_syllable(decompose_syllable(chr(cp))) == chr(cp)

    def test_invalid_indices_rejected(self):
        with pytest.raises(ValueError):
            JamoTriple(19, 0, 0)
        with pytest.raises(ValueError):
            JamoTriple(0, 21, 0)
        with pytest.raises(ValueError):
            JamoTriple(0, 0, 28)


class TestDecomposeText:
    def test_two_syllables(self):
        out = decompose_text("갔다")
        assert len(out) == 5
        assert unicodedata.normalize("NFC", out) == "갔다"

    def test_empty(self):
        assert decompose_text("") == ""

    def test_mixed_passthrough(self):
        out = decompose_text("a뜀!")
        assert out == "a" + decompose_syllable("뜀").as_jamo() + "!"

    def test_idempotent(self):
        s = decompose_text("한국어 텍스트 abc 123!")
        assert decompose_text(s) == s

    @given(st.text(alphabet=st.characters(codec="utf-8"), max_size=50))
    def test_never_shorter(self, s):
        assert len(decompose_text(s)) >= len(s)


class TestComposeText:
    def test_round_trip_single(self):
        assert compose_text(decompose_text("갔")) == "갔"

    def test_lone_leading_jamo_unchanged(self):
        assert compose_text("ᄀ") == "ᄀ"

    def test_exhaustive_round_trip(self):
        # all 11,172 syllables in blocks to keep the string manageable
        for base in range(SYLLABLE_BASE, SYLLABLE_LAST + 1, 1000):
            s = "".join(chr(c) for c in range(base, min(base + 1000, SYLLABLE_LAST + 1)))
            assert compose_text(decompose_text(s)) == s

    @given(st.text(alphabet="가힣돐 abc.!가", max_size=30))
    def test_round_trip_on_precomposed(self, s):
        precomposed = compose_text(s)
        assert compose_text(decompose_text(precomposed)) == precomposed


class TestClassifyChar:
    @pytest.mark.parametrize(
        "char,cls",
        [
            ("힉", CharClass.HANGUL_SYLLABLE),
            ("ᅡ", CharClass.HANGUL_JAMO),
            ("ㄱ", CharClass.HANGUL_JAMO),
            ("7", CharClass.DIGIT),
            ("a", CharClass.LATIN),
            ("é", CharClass.LATIN),
            (".", CharClass.PUNCTUATION),
            (" ", CharClass.WHITESPACE),
            ("\t", CharClass.WHITESPACE),
            ("中", CharClass.OTHER_CJK),
            ("カ", CharClass.OTHER_CJK),
            ("♥", CharClass.OTHER),
            ("Ω", CharClass.OTHER),
        ],
    )
    def test_classes(self, char, cls):
        assert classify_char(char) == cls

    @given(st.characters(codec="utf-8"))
    def test_total(self, ch):
        assert classify_char(ch) in CharClass


class TestNormalizeCompatJamo:
    def test_vowel(self):
        assert normalize_compat_jamo("ㅏ") == "ᅡ"

    def test_consonant_after_vowel_becomes_trailing(self):
        # ᄇ ᅢ ㅅ: the ㅅ after a medial vowel maps to the jongseong form
        assert normalize_compat_jamo(decompose_text("배") + "ㅅ") == decompose_text("뱃")

    def test_leading_position(self):
        assert normalize_compat_jamo("ㅅ") == "ᄉ"

    def test_cluster_only_consonant(self):
        assert normalize_compat_jamo("ㄳ") == "ᆪ"

    def test_passthrough(self):
        assert normalize_compat_jamo("abc 가") == "abc 가"

import random

import pytest

from hangulpiece.errors import EmptyCorpus, ParseError, TargetTooSmall
from hangulpiece.hangul import decompose_text, is_syllable
from hangulpiece.tokenizer import TokenizerConfig, wordpiece_forward
from hangulpiece.vocab import (
    CompositionReport,
    GranularityLevel,
    SPECIAL_TOKENS,
    Vocabulary,
    augment_vocab,
    classify_vocab,
    load_merges,
    load_vocab,
    save_merges,
    save_vocab,
    save_vocab_txt,
    train_bpe,
)

from conftest import make_vocab


def random_corpus(rng, n_words=20, alphabet="가나다라마바"):
    return {
        "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 6))): rng.randint(1, 20)
        for _ in range(n_words)
    }


class TestTrainBpe:
    def test_desk_example_first_merge(self):
        vocab, merges = train_bpe({"가다": 5, "가고": 3}, GranularityLevel.CHARACTER, 9)
        assert merges[0].left == "가"
        assert merges[0].right == "##다"
        assert merges[0].merged == "가다"
        assert merges[0].frequency == 5
        assert len(merges) == 1
        assert set(e.token for e in vocab) == set(SPECIAL_TOKENS) | {"가", "##다", "##고", "가다"}

    def test_desk_example_final_frequencies(self):
        vocab, _ = train_bpe({"가다": 5, "가고": 3}, GranularityLevel.CHARACTER, 9)
        assert vocab.freq_of("가다") == 5
        assert vocab.freq_of("가") == 3
        assert vocab.freq_of("##고") == 3
        assert vocab.freq_of("##다") == 0  # consumed by the merge

    def test_single_unit_word_admits_no_merges(self):
        vocab, merges = train_bpe({"가": 1}, GranularityLevel.CHARACTER, 7, min_pair_freq=1)
        assert merges == []
        assert set(e.token for e in vocab) == set(SPECIAL_TOKENS) | {"가"}

    def test_specials_occupy_first_five_ids(self):
        vocab, _ = train_bpe({"가다": 5}, GranularityLevel.CHARACTER, 8, min_pair_freq=1)
        assert tuple(vocab.token_of(i) for i in range(5)) == SPECIAL_TOKENS

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            train_bpe({}, GranularityLevel.CHARACTER, 100)

    def test_target_too_small(self):
        with pytest.raises(TargetTooSmall):
            train_bpe({"가다": 5}, GranularityLevel.CHARACTER, 7)

    def test_merge_frequencies_non_increasing_random(self):
        rng = random.Random(7)
        for _ in range(100):
            corpus = random_corpus(rng)
            try:
                _, merges = train_bpe(corpus, GranularityLevel.CHARACTER, 200, min_pair_freq=1)
            except TargetTooSmall:
                continue
            freqs = [m.frequency for m in merges]
            assert all(a >= b for a, b in zip(freqs, freqs[1:]))

    def test_tie_break_is_lexicographic(self):
        # both pairs occur exactly twice; (가, ##나) < (다, ##라)
        _, merges = train_bpe({"가나": 2, "다라": 2}, GranularityLevel.CHARACTER, 10, min_pair_freq=1)
        assert (merges[0].left, merges[0].right) == ("가", "##나")

    def test_determinism(self):
        rng = random.Random(3)
        corpus = random_corpus(rng, n_words=60)
        a = train_bpe(corpus, GranularityLevel.CHARACTER, 120, min_pair_freq=1)
        b = train_bpe(corpus, GranularityLevel.CHARACTER, 120, min_pair_freq=1)
        assert a[0] == b[0]
        assert a[1] == b[1]

    def test_subcharacter_tokens_contain_no_syllables(self):
        vocab, _ = train_bpe({"가다": 5, "먹었다": 4, "갔다": 3}, GranularityLevel.SUBCHARACTER, 40, min_pair_freq=1)
        for entry in vocab:
            if entry.token in SPECIAL_TOKENS:
                continue
            assert not any(is_syllable(c) for c in entry.token)

    def test_alphabet_closure_no_unk_on_training_words(self):
        rng = random.Random(11)
        corpus = random_corpus(rng, n_words=40)
        vocab, _ = train_bpe(corpus, GranularityLevel.CHARACTER, 100, min_pair_freq=1)
        cfg = TokenizerConfig(level=GranularityLevel.CHARACTER)
        for word in corpus:
            assert wordpiece_forward(word, vocab, cfg) != ["[UNK]"]

    def test_merge_ranks_dense(self):
        _, merges = train_bpe({"가나다라": 5, "가나다": 4}, GranularityLevel.CHARACTER, 20, min_pair_freq=1)
        assert [m.rank for m in merges] == list(range(len(merges)))


class TestAugmentVocab:
    def test_skips_existing(self):
        v = make_vocab(["가", "ㅋ"])
        out, skipped = augment_vocab(v, ["…", "ㅋ", "♥"])
        assert len(out) == len(v) + 2
        assert skipped == 1
        assert "…" in out and "♥" in out

    def test_empty_symbol_list(self):
        v = make_vocab(["가"])
        out, skipped = augment_vocab(v, [])
        assert out == v
        assert skipped == 0

    def test_latin_block(self):
        v = make_vocab(["가"])
        letters = [chr(c) for c in range(ord("a"), ord("z") + 1)]
        out, skipped = augment_vocab(v, letters)
        assert len(out) == len(v) + 26
        assert skipped == 0

    def test_existing_ids_unchanged(self):
        v = make_vocab(["가", "나"])
        out, _ = augment_vocab(v, ["x"])
        for entry in v:
            assert out.id_of(entry.token) == entry.id


class TestClassifyVocab:
    def test_specials_only(self):
        v = Vocabulary.from_tokens(GranularityLevel.CHARACTER, [])
        assert classify_vocab(v) == CompositionReport(0, 0, 0, 5)

    def test_mixed(self):
        v = make_vocab(["가", "##다", "!"])
        assert classify_vocab(v) == CompositionReport(1, 1, 1, 5)

    def test_jamo_counts_as_hangul(self):
        v = make_vocab([decompose_text("추"), "##" + decompose_text("다"), "##a"])
        report = classify_vocab(v)
        assert report.hangul_words == 1
        assert report.hangul_subwords == 1
        assert report.symbols_other == 1

    def test_partition_sums_to_total(self):
        vocab, _ = train_bpe({"가다": 5, "abc!": 3, "가고": 2}, GranularityLevel.CHARACTER, 30, min_pair_freq=1)
        report = classify_vocab(vocab)
        assert report.total == len(vocab)
        assert report.special == 5
        assert abs(sum(report.percentages().values()) - 100.0) < 0.01


class TestVocabFiles:
    def test_round_trip(self, tmp_path):
        vocab, _ = train_bpe({"가다": 5, "가고": 3}, GranularityLevel.SUBCHARACTER, 25, min_pair_freq=1)
        path = tmp_path / "vocab.hpv"
        save_vocab(vocab, path)
        assert load_vocab(path) == vocab

    def test_round_trip_is_byte_stable(self, tmp_path):
        vocab, _ = train_bpe({"가다": 5}, GranularityLevel.CHARACTER, 8, min_pair_freq=1)
        p1, p2 = tmp_path / "a", tmp_path / "b"
        save_vocab(vocab, p1)
        save_vocab(load_vocab(p1), p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_duplicate_token_reports_line(self, tmp_path):
        path = tmp_path / "vocab.hpv"
        lines = ["#hpv1", "level=character", "count=7"]
        lines += [f"{t}\t0" for t in SPECIAL_TOKENS] + ["가\t1", "가\t2"]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_vocab(path)
        assert exc.value.line == 10

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "vocab.hpv"
        lines = ["#hpv1", "level=character", "count=6"]
        lines += [f"{t}\t0" for t in SPECIAL_TOKENS] + ["no-tab-here"]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_vocab(path)
        assert exc.value.line == 9

    def test_bad_level_header(self, tmp_path):
        path = tmp_path / "vocab.hpv"
        path.write_text("#hpv1\nlevel=bogus\ncount=0\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_vocab(path)
        assert exc.value.line == 2

    def test_count_mismatch(self, tmp_path):
        path = tmp_path / "vocab.hpv"
        lines = ["#hpv1", "level=character", "count=99"]
        lines += [f"{t}\t0" for t in SPECIAL_TOKENS]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_vocab(path)

    def test_interop_plain_vocab_txt(self, tmp_path):
        path = tmp_path / "vocab.txt"
        path.write_text("".join(t + "\n" for t in SPECIAL_TOKENS) + "가\n##다\n", encoding="utf-8")
        vocab = load_vocab(path)
        assert vocab.level == GranularityLevel.CHARACTER
        assert all(e.frequency == 0 for e in vocab)
        assert "가" in vocab and "##다" in vocab

    def test_interop_missing_specials_appended(self, tmp_path):
        path = tmp_path / "vocab.txt"
        path.write_text("가\n나\n", encoding="utf-8")
        vocab = load_vocab(path)
        for special in SPECIAL_TOKENS:
            assert special in vocab
        assert vocab.id_of("가") == 0  # original ids preserved

    def test_interop_export(self, tmp_path):
        vocab = make_vocab(["가", "##다"])
        path = tmp_path / "vocab.txt"
        save_vocab_txt(vocab, path)
        assert load_vocab(path) == vocab

    def test_interop_compat_jamo_normalized(self, tmp_path):
        path = tmp_path / "vocab.txt"
        path.write_text("##ㅏ\n", encoding="utf-8")
        vocab = load_vocab(path)
        assert "##ᅡ" in vocab

    def test_merges_round_trip(self, tmp_path):
        _, merges = train_bpe({"가나다라": 5, "가나다": 4}, GranularityLevel.CHARACTER, 20, min_pair_freq=1)
        path = tmp_path / "merges.txt"
        save_merges(merges, path)
        loaded = load_merges(path)
        assert [(m.left, m.right, m.merged, m.rank) for m in loaded] == [
            (m.left, m.right, m.merged, m.rank) for m in merges
        ]

"""Korean-aware subword tokenization toolkit."""

from .analysis import (
    ComparisonRow,
    CorpusStats,
    compare_tokenizers,
    composition_report,
    unk_ratio,
)
from .corpus import CorpusReader, count_words, read_sentences
from .errors import (
    EmptyCorpus,
    EncodingError,
    HangulpieceError,
    IoError,
    LevelMismatch,
    NotASyllable,
    ParseError,
    TargetTooSmall,
)
from .estimator import SubwordTokenizer
from .hangul import (
    CharClass,
    JamoTriple,
    classify_char,
    compose_syllable,
    compose_text,
    decompose_syllable,
    decompose_text,
)
from .tokenizer import (
    Token,
    Tokenization,
    Tokenizer,
    TokenizerConfig,
    TokenizerMode,
    compare_candidates,
    detokenize,
    pre_tokenize,
    tokenize,
    tokenize_bidirectional,
    wordpiece_backward,
    wordpiece_forward,
)
from .vocab import (
    CompositionReport,
    GranularityLevel,
    MergeRule,
    SPECIAL_TOKENS,
    VocabEntry,
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

__version__ = "0.1.0"

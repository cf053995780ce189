"""scikit-learn style estimator wrapping training and tokenization.

``fit`` learns a BPE vocabulary from an iterable of sentences;
``transform`` maps sentences to subword token lists. Composes with
sklearn pipelines and ``clone`` via the standard get/set_params
contract.
"""

from __future__ import annotations

from typing import Iterable

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .corpus import count_words
from .tokenizer import Tokenizer, TokenizerConfig, TokenizerMode, detokenize
from .vocab import GranularityLevel, Vocabulary, load_vocab, train_bpe


class SubwordTokenizer(BaseEstimator, TransformerMixin):
    """BPE-trained WordPiece tokenizer with a fit/transform interface."""

    def __init__(
        self,
        level: str = "character",
        mode: str = "forward",
        vocab_size: int = 8000,
        min_pair_freq: int = 2,
        max_word_units: int = 100,
        scoring: str = "mean_log",
    ):
        self.level = level
        self.mode = mode
        self.vocab_size = vocab_size
        self.min_pair_freq = min_pair_freq
        self.max_word_units = max_word_units
        self.scoring = scoring

    def _config(self, level: GranularityLevel) -> TokenizerConfig:
        return TokenizerConfig(
            level=level,
            mode=TokenizerMode(self.mode),
            max_word_units=self.max_word_units,
            scoring=self.scoring,
        )

    def fit(self, X: Iterable[str], y=None) -> "SubwordTokenizer":
        """Train the vocabulary on an iterable of sentences."""
        level = GranularityLevel(self.level)
        counts = count_words(X, level)
        self.vocab_, self.merges_ = train_bpe(
            counts, level, self.vocab_size, self.min_pair_freq
        )
        self.tokenizer_ = Tokenizer(self.vocab_, self._config(level))
        return self

    def _check_fitted(self) -> Tokenizer:
        if not hasattr(self, "tokenizer_"):
            raise NotFittedError(
                "This SubwordTokenizer instance is not fitted yet; "
                "call fit or from_vocab before using it."
            )
        return self.tokenizer_

    def from_vocab(self, vocab: Vocabulary | str) -> "SubwordTokenizer":
        """Attach a pre-trained vocabulary (object or file path) instead of fitting."""
        if not isinstance(vocab, Vocabulary):
            vocab = load_vocab(vocab)
        self.vocab_ = vocab
        self.merges_ = []
        self.tokenizer_ = Tokenizer(vocab, self._config(vocab.level))
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        """Map each sentence to its subword token sequence."""
        tok = self._check_fitted()
        return [tok.tokenize(text).token_strings() for text in X]

    def inverse_transform(self, X: Iterable[list[str]]) -> list[str]:
        tok = self._check_fitted()
        return [detokenize(tokens, tok.config.level) for tokens in X]

    def tokenize(self, text: str):
        """Full tokenization of one text, with spans and vocab ids."""
        return self._check_fitted().tokenize(text)

"""Exception types shared across the package."""


class HangulpieceError(Exception):
    """Base class for all package errors."""


class NotASyllable(HangulpieceError):
    """Raised when a codepoint outside U+AC00..U+D7A3 is decomposed."""

    def __init__(self, char: str):
        self.char = char
        super().__init__(f"not a precomposed Hangul syllable: {char!r} (U+{ord(char):04X})")


class EmptyCorpus(HangulpieceError):
    """Raised when a trainer receives no words at all."""


class TargetTooSmall(HangulpieceError):
    """Raised when the requested vocabulary size cannot hold the base alphabet."""

    def __init__(self, target: int, minimum: int):
        self.target = target
        self.minimum = minimum
        super().__init__(
            f"target vocabulary size {target} is too small; "
            f"need at least {minimum} (specials + base alphabet + 1)"
        )


class ParseError(HangulpieceError):
    """Malformed vocab or merges file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class LevelMismatch(HangulpieceError):
    """Tokenizer configured at a different granularity than its vocabulary."""


class IoError(HangulpieceError):
    """Unreadable corpus source; carries the path."""

    def __init__(self, path: str, cause: Exception):
        self.path = path
        super().__init__(f"cannot read {path}: {cause}")


class EncodingError(HangulpieceError):
    """Invalid UTF-8 in a corpus source; carries the byte offset."""

    def __init__(self, path: str, offset: int):
        self.path = path
        self.offset = offset
        super().__init__(f"{path}: invalid UTF-8 at byte offset {offset}")

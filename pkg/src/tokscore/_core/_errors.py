class EmptyInputError(ValueError):
    """Raised when an input holds no non-empty texts."""


class DegenerateVocabularyError(ValueError):
    """Raised when a ratio needs ``log V`` but the vocabulary has one type."""


class DegenerateVarianceError(ValueError):
    """Raised when a correlation receives a constant variable."""


class RoundTripError(ValueError):
    """Raised when a token sequence cannot be mapped back to text."""


class CoverageError(ValueError):
    """
    Raised when a token or character is missing from a code or dictionary.

    Parameters
    ----------
    symbol : str
        The token or character that is not covered.
    where : str, optional
        Short description of what was searched, by default 'code'.

    """

    def __init__(self, symbol: str, where: str = 'code') -> None:
        self.symbol = symbol
        self.where = where
        super().__init__(symbol)

    def __str__(self) -> str:
        return f"{self.symbol!r} is not covered by the {self.where}."

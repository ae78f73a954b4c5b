import logging
import warnings

from typing import Iterable

from tqdm import tqdm


class ProgressBar(tqdm):
    """Progress bar."""

    def __init__(self, iterable: Iterable = None, desc: str = None,
                 ncols: int = 80, **kwargs) -> None:
        """
        Wraps the progress bar from ``tqdm``, with different defaults. The bar
        writes to stderr so that stdout stays machine-parseable.

        Parameters
        ----------
        iterable : Iterable, optional
            The iterable to wrap, by default None. When None, a 'total'
            keyword is required and progress is advanced with ``update()``.
        desc : str, optional
            Prefix description, by default None.
        ncols : int, optional
            Terminal column width, by default 80. The special case of zero will
            display limited stats and time, with no progress bar.
        **kwargs : dict, optional
            Extra keyword arguments passed through to ``tqdm``.

        Raises
        ------
        ValueError
            'iterable' and 'total' cannot both be None.

        """

        if iterable is None and kwargs.get('total') is None:
            raise ValueError("'iterable' and 'total' cannot both be None.")

        kwargs.setdefault('desc', desc)
        kwargs.setdefault('ncols', ncols)
        kwargs.setdefault('ascii', ' 2468█')
        kwargs.setdefault('leave', False)

        super().__init__(iterable, **kwargs)


def progress(iterable: Iterable, bar: bool, desc: str = None) -> Iterable:
    """Wrap 'iterable' in a ``ProgressBar`` when 'bar' is True."""
    return ProgressBar(iterable, desc=desc) if bar else iterable


def formatwarning(message, category, filename, lineno, line=None):
    """Shortened warning format - used for parameter/pre warnings."""
    return f"\n[tokscore {category.__name__}] {message}\n\n"


def short_warn(message, category=UserWarning, filename='None', lineno=0):
    """Print a warning with the short format from ``formatwarning``."""
    original_format = warnings.formatwarning

    warnings.formatwarning = formatwarning
    warnings.warn_explicit(message, category, filename, lineno)

    warnings.formatwarning = original_format


def get_logger(name: str = 'tokscore') -> logging.Logger:
    """Return a package logger; handlers are configured by the CLI only."""
    logger = logging.getLogger(name)
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())
    return logger


def configure_logging(verbosity: int) -> None:
    """
    Send package log records to stderr.

    Parameters
    ----------
    verbosity : int
        0 for warnings only, 1 for INFO, 2 or more for DEBUG.

    Returns
    -------
    None.

    """

    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter('[tokscore %(levelname)s] '
                                           '%(message)s'))

    logger = logging.getLogger('tokscore')
    logger.handlers = [h for h in logger.handlers
                       if not isinstance(h, logging.StreamHandler)]
    logger.addHandler(handler)
    logger.setLevel(level)

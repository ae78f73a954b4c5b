import logging
import warnings

import pytest

from tokscore._utils import (
    ProgressBar,
    configure_logging,
    formatwarning,
    get_logger,
    progress,
    short_warn,
)


def test_progbar_initialization():

    with pytest.raises(ValueError, match='cannot both be None'):
        _ = ProgressBar(iterable=None)

    bar = ProgressBar(iterable=[1, 2, 3])
    assert bar.total == 3
    assert bar.leave is False
    bar.close()

    bar = ProgressBar(total=5, desc='merges')
    assert bar.total == 5
    assert bar.desc.startswith('merges')
    bar.close()


def test_iterable_progbar():
    iterable = range(10)

    bar = ProgressBar(iterable)
    seen = [i for i in bar]

    assert seen == list(iterable)


def test_manual_progbar():

    bar = ProgressBar(total=10)
    for _ in range(10):
        bar.update(1)

    assert bar.n == 10
    bar.close()


def test_progress_wrapper():
    items = [1, 2, 3]

    assert progress(items, False) is items
    assert isinstance(progress(items, True), ProgressBar)
    assert list(progress(items, True)) == items


def test_short_warn():
    message = formatwarning('hi', UserWarning, 'None', 0)
    assert '[tokscore UserWarning] hi' in message

    original = warnings.formatwarning
    with pytest.warns(UserWarning, match='careful'):
        short_warn('careful')

    assert warnings.formatwarning is original


def test_logging_setup():
    logger = get_logger('tokscore.test')
    get_logger('tokscore.test')

    handlers = [h for h in logger.handlers
                if isinstance(h, logging.NullHandler)]
    assert len(handlers) == 1

    configure_logging(0)
    assert logging.getLogger('tokscore').level == logging.WARNING

    configure_logging(1)
    assert logging.getLogger('tokscore').level == logging.INFO

    configure_logging(2)
    root = logging.getLogger('tokscore')
    assert root.level == logging.DEBUG

    streams = [h for h in root.handlers
               if isinstance(h, logging.StreamHandler)
               and not isinstance(h, logging.NullHandler)]
    assert len(streams) == 1

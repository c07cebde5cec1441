#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Utility functions and constants."""

import logging
import random
from math import comb


def binom(n: int, k: int) -> int:
    """Return binomial coefficient, 0 when ``k`` is out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def instance_rng(seed: int, index: int) -> random.Random:
    """Return random generator of the ``index``-th instance of a stream.

    Each instance gets its own generator derived only from ``seed`` and
    ``index``, so a stream is reproducible regardless of which worker thread
    draws which instance.
    """
    return random.Random('arlab:{}:{}'.format(seed, index))


def suppress_logging() -> None:
    """Suppress log output to stdout.

    This function is intended to be used in test's setup. This function removes
    log handler of ``arlab`` logger and set NullHandler to suppress log.
    """
    from arlab import options
    options.root_logger.removeHandler(options._log_handler)
    options.root_logger.addHandler(logging.NullHandler())


def restore_logging() -> None:
    """Restore log handler removed by :func:`suppress_logging`."""
    from arlab import options
    for handler in list(options.root_logger.handlers):
        if isinstance(handler, logging.NullHandler):
            options.root_logger.removeHandler(handler)
    if options._log_handler not in options.root_logger.handlers:
        options.root_logger.addHandler(options._log_handler)

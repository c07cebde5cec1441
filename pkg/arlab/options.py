#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""This module defines global options for arlab.

When this module is loaded, automatically parse command line options.
If need to parse command line optionas again, call ``parse_command_line``
function. Sub-command options live in :mod:`arlab.cli`, which reuses
``parser`` defined here as a parent parser.
"""

import logging
import os
from argparse import ArgumentParser, Namespace
from typing import List, Optional, Sequence, Tuple, Union

from tornado.log import LogFormatter

__all__ = [
    'parser',
    'config',
    'root_logger',
    'set_loglevel',
    'parse_command_line',
    'split_command_line',
    'get_threads',
    'get_budget',
    'DEFAULT_BUDGET',
]

#: Default node limit of exhaustive searches.
DEFAULT_BUDGET = 10 ** 8
THREADS_ENV = 'ARLAB_THREADS'

# Setup root logger
root_logger = logging.getLogger('arlab')  # Root logger
_log_handler = logging.StreamHandler()
fmt = '%(color)s[%(levelname)1.1s:%(name)s]%(end_color)s '
fmt += '%(message)s'
formatter = LogFormatter(fmt=fmt)
_log_handler.setFormatter(formatter)
root_logger.addHandler(_log_handler)
root_logger.propagate = False

# local logger
logger = logging.getLogger(__name__)

# setup argument parser
config = Namespace()
parser = ArgumentParser(prog='arlab', argument_default=None, add_help=False,
                        allow_abbrev=False)
parser.add_argument(
    '--logging', choices=['debug', 'info', 'warn', 'error'],
    help='Set the log level (default: `info`).',
)
parser.add_argument(
    '--debug', default=False, action='store_const', const=True,
    help='Enable debug mode (default: False).'
    ' Debug mode sets default log level to `debug`.'
)
parser.add_argument(
    '--seed', default=0, type=int,
    help='Seed of sampled instance streams (default: 0).',
)
parser.add_argument(
    '--threads', default=None, type=int,
    help='Number of worker threads for searches and verification runs.'
    ' Falls back to the ARLAB_THREADS environment variable, then 1.',
)
parser.add_argument(
    '--budget', default=DEFAULT_BUDGET, type=int,
    help='Node limit of exhaustive searches (default: 10**8).'
    ' Exceeded searches report inexact results.',
)
parser.add_argument(
    '--format', default='csv', choices=['csv', 'json'],
    help='Output format of tables (default: csv).',
)


def level_to_int(level: Union[str, int]) -> int:
    if isinstance(level, int):
        if logging.NOTSET <= level <= logging.FATAL:
            return level
        else:
            raise ValueError('Log level must be 0 <= level <= 50,'
                             'but got: {}'.format(level))
    elif isinstance(level, str):
        try:
            return getattr(logging, level.upper())
        except AttributeError:
            raise ValueError('Invalid log level: {}'.format(level))
    else:
        raise TypeError(
            'Log level must be int (0 ~ 50) or string,'
            'but got type: {}'.format(type(level)))


def set_loglevel(level: Union[int, str, None] = None) -> None:
    """Set proper log-level.

    :arg Optional[int, str] level: Level to be set. If None, use proper log
    level from command line option. Default value is ``logging.INFO``.
    """
    if level is not None:
        lv = level_to_int(level)
    elif getattr(config, 'logging', None):
        lv = level_to_int(config.logging)
    elif getattr(config, 'debug', False):
        lv = logging.DEBUG
    else:
        lv = logging.INFO
    root_logger.setLevel(lv)
    _log_handler.setLevel(lv)


def _positive_int(value: Union[str, int], name: str) -> int:
    try:
        num = int(value)
    except (TypeError, ValueError):
        raise ValueError('{} must be an integer, but got: {!r}'.format(
            name, value))
    if num < 1:
        raise ValueError('{} must be positive, but got: {}'.format(name, num))
    return num


def get_threads(threads: Optional[int] = None) -> int:
    """Return number of worker threads.

    Resolution order: ``threads`` argument, ``--threads`` option,
    ``ARLAB_THREADS`` environment variable, then 1.
    """
    if threads is not None:
        return _positive_int(threads, 'threads')
    if getattr(config, 'threads', None) is not None:
        return _positive_int(config.threads, '--threads')
    env = os.environ.get(THREADS_ENV)
    if env:
        return _positive_int(env, THREADS_ENV)
    return 1


def get_budget(budget: Optional[int] = None) -> int:
    """Return node limit of exhaustive searches."""
    if budget is not None:
        return _positive_int(budget, 'budget')
    return _positive_int(getattr(config, 'budget', None) or DEFAULT_BUDGET,
                         '--budget')


def parse_command_line(args: Optional[Sequence[str]] = None) -> Namespace:
    """Parse global command line options and set them to ``config``.

    This function skips unknown command line options (sub-commands and their
    options). After parsing options, set log level.
    """
    parser.parse_known_args(args=args, namespace=config)
    set_loglevel()  # set new log level based on commanline option
    return config


def split_command_line(args: Optional[Sequence[str]] = None
                       ) -> Tuple[Namespace, List[str]]:
    """Reset ``config`` from ``args`` and return remaining arguments.

    Unlike :func:`parse_command_line`, options missing from ``args`` fall
    back to their defaults instead of keeping earlier values.
    """
    parsed, rest = parser.parse_known_args(args=args)
    vars(config).clear()
    vars(config).update(vars(parsed))
    set_loglevel()
    return config, rest


parse_command_line()

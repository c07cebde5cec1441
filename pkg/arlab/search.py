#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Shared incumbent and subtree scheduling for exhaustive searches.

A search tree is split at a fixed depth into subtrees numbered in
depth-first order. Subtrees may run on worker threads; they share one
:class:`Incumbent`. Ties are broken by subtree number, and each subtree keeps
the first optimum of its own depth-first order, so the final
``(value, witness)`` does not depend on the schedule or on the number of
threads.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Generic, List, Optional, Sequence, TypeVar

__all__ = [
    'BudgetExhausted',
    'Incumbent',
    'run_subtrees',
    'map_ordered',
    'first_in_order',
]

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

#: Subtree number used for seeded solutions; seeds win ties.
SEED_INDEX = -1
_FLUSH_EVERY = 1024


class BudgetExhausted(Exception):
    """Raised inside a subtree when the shared node budget is used up."""


class Incumbent(Generic[T]):
    """Monotone best solution shared by concurrent subtrees.

    The pair ``(value, index)`` only improves: larger value, or equal value
    found by a lower-numbered subtree.
    """

    def __init__(self, budget: int, value: int = -1,
                 witness: Optional[T] = None) -> None:
        self._lock = threading.Lock()
        self._best = (value, SEED_INDEX)
        self.witness = witness
        self.budget = budget
        self.nodes = 0
        self.exhausted = False

    @property
    def value(self) -> int:
        return self._best[0]

    def should_prune(self, bound: int, index: int) -> bool:
        """Return True if subtree ``index`` cannot beat the incumbent.

        ``bound`` is an upper bound of any solution below the current node.
        """
        value, best_index = self._best  # single read, tuple is immutable
        return bound < value or (bound == value and index >= best_index)

    def offer(self, value: int, index: int, witness: T) -> bool:
        """Offer solution found by subtree ``index``; return True if taken."""
        with self._lock:
            best_value, best_index = self._best
            if value > best_value or (value == best_value and
                                      index < best_index):
                self._best = (value, index)
                self.witness = witness
                return True
        return False

    def counter(self) -> 'NodeCounter':
        """Return a node counter for one subtree."""
        return NodeCounter(self)

    def add_nodes(self, count: int) -> None:
        with self._lock:
            self.nodes += count
            if self.nodes > self.budget:
                self.exhausted = True


class NodeCounter:
    """Per-subtree node counter.

    Counts flush to the shared total in batches; calling the counter raises
    :class:`BudgetExhausted` once the shared budget is exceeded.
    """

    def __init__(self, incumbent: Incumbent) -> None:
        self.incumbent = incumbent
        self.local = 0

    def __call__(self) -> None:
        if self.incumbent.exhausted:
            raise BudgetExhausted
        self.local += 1
        if self.local >= _FLUSH_EVERY:
            self.flush()
            if self.incumbent.exhausted:
                raise BudgetExhausted

    def flush(self) -> None:
        self.incumbent.add_nodes(self.local)
        self.local = 0


def _run_guarded(task: Callable[[], None]) -> None:
    try:
        task()
    except BudgetExhausted:
        pass


def run_subtrees(tasks: Sequence[Callable[[], None]], threads: int = 1
                 ) -> None:
    """Run subtree tasks; a task stops early by raising BudgetExhausted."""
    if threads <= 1 or len(tasks) <= 1:
        for task in tasks:
            _run_guarded(task)
        return
    with ThreadPoolExecutor(max_workers=threads) as executor:
        list(executor.map(_run_guarded, tasks))


def map_ordered(func: Callable[[T], R], items: Sequence[T],
                threads: int = 1) -> List[R]:
    """Return ``[func(item) for item in items]``, maybe using threads."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def first_in_order(func: Callable[[T], Optional[R]], items: Sequence[T],
                   threads: int = 1) -> Optional[R]:
    """Return first non-None ``func(item)`` in item order.

    With threads, items after an already found position are skipped, so the
    answer equals the sequential one.
    """
    if threads <= 1 or len(items) <= 1:
        for item in items:
            result = func(item)
            if result is not None:
                return result
        return None

    found = [len(items)]
    lock = threading.Lock()

    def call(pair: Any) -> Optional[R]:
        index, item = pair
        if index > found[0]:
            return None
        result = func(item)
        if result is not None:
            with lock:
                found[0] = min(found[0], index)
        return result

    with ThreadPoolExecutor(max_workers=threads) as executor:
        results = list(executor.map(call, enumerate(items)))
    for result in results:
        if result is not None:
            return result
    return None

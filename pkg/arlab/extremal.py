#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Exact Turan numbers of ``K_n`` by exhaustive search.

The search walks the edges of ``K_n`` in index order and decides
include/exclude for each edge, include first. A branch is pruned when

* including the newest edge completes an embedding of a forbidden pattern
  (only embeddings whose highest edge is the newest one are checked), or
* ``current + remaining`` edges cannot beat the incumbent.

Witnesses are re-verified by :func:`contains_pattern`, which uses networkx's
VF2 matcher instead of the bitmask tables of the search.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from networkx.algorithms.isomorphism import GraphMatcher

from arlab.graph import (ArlabError, ParameterOrderError, SimpleGraph,
                         UnsupportedParameterError, check_interior, mask_of)
from arlab.options import get_budget, get_threads
from arlab.search import BudgetExhausted, Incumbent, run_subtrees
from arlab.util import binom

__all__ = [
    'ForbiddenFamily',
    'ExtremalResult',
    'kst_pattern',
    'kst_family',
    'minus_one_edge_family',
    'contains_pattern',
    'turan_exact',
    'kst_upper_bound',
]

logger = logging.getLogger(__name__)


def kst_pattern(s: int, t: int) -> SimpleGraph:
    """Return labeled ``K_{s,t}`` with interior ``0..s-1``."""
    return SimpleGraph.from_edges(
        s + t, ((x, y) for x in range(s) for y in range(s, s + t)))


def _active(pattern: SimpleGraph) -> SimpleGraph:
    """Drop isolated vertices (they are ignored by embeddings)."""
    active = sorted({v for e in pattern.edges for v in e})
    rename = {v: i for i, v in enumerate(active)}
    return SimpleGraph.from_edges(
        len(active), ((rename[u], rename[v]) for u, v in pattern.edges))


def contains_pattern(host: SimpleGraph, pattern: SimpleGraph) -> bool:
    """Return True if ``pattern`` embeds into ``host`` (non-induced).

    Isolated vertices of the pattern are ignored, so an edgeless pattern is
    contained in every graph.
    """
    core = _active(pattern)
    if core.num_edges == 0:
        return True
    if core.n > host.n or core.num_edges > host.num_edges:
        return False
    matcher = GraphMatcher(host.to_networkx(), core.to_networkx())
    return matcher.subgraph_is_monomorphic()


@dataclass(frozen=True)
class ForbiddenFamily:
    """Reduced family of forbidden patterns.

    ``name`` and ``params`` describe the family in certificates, for example
    ``('kst', (2, 2))`` or ``('minus-one-edge', (2, 3))``.
    """

    members: Tuple[SimpleGraph, ...]
    name: str = 'custom'
    params: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError('Forbidden family must not be empty')
        for i, a in enumerate(self.members):
            for j, b in enumerate(self.members):
                if i != j and _active(a).n <= _active(b).n and \
                        contains_pattern(_active(b), a):
                    raise ValueError(
                        'Family is not reduced: member {} is a subgraph of'
                        ' member {}'.format(i, j))

    @property
    def has_edgeless_member(self) -> bool:
        return any(m.num_edges == 0 for m in self.members)

    def is_free(self, G: SimpleGraph) -> bool:
        """Return True if ``G`` contains no member (independent checker)."""
        return not any(contains_pattern(G, m) for m in self.members)

    def to_dict(self) -> Dict[str, object]:
        return {'name': self.name, 'params': list(self.params)}


def kst_family(s: int, t: int) -> ForbiddenFamily:
    """Return ``{K_{s,t}}``."""
    if s < 1 or t < 1:
        raise UnsupportedParameterError(
            'Part sizes must be >= 1: ({}, {})'.format(s, t))
    return ForbiddenFamily((kst_pattern(s, t),), 'kst', (s, t))


def minus_one_edge_family(s: int, t: int) -> ForbiddenFamily:
    """Return ``{K_{s,t} - e}``.

    All edge deletions of a complete bipartite graph are isomorphic, so the
    family has the single pattern with edge ``(0, s)`` removed. Isolated
    vertices stay in the labeled pattern.
    """
    if s < 1 or t < 1:
        raise UnsupportedParameterError(
            'Part sizes must be >= 1: ({}, {})'.format(s, t))
    full = kst_pattern(s, t)
    pattern = SimpleGraph(full.n, full.mask & ~mask_of(full.n, [(0, s)]))
    return ForbiddenFamily((pattern,), 'minus-one-edge', (s, t))


def family_from_dict(data: Dict[str, object]) -> ForbiddenFamily:
    """Rebuild family described by :meth:`ForbiddenFamily.to_dict`."""
    name = data.get('name')
    params = [int(p) for p in data.get('params', [])]  # type: ignore
    if name == 'kst' and len(params) == 2:
        return kst_family(*params)
    if name == 'minus-one-edge' and len(params) == 2:
        return minus_one_edge_family(*params)
    raise ValueError('Unknown family description: {!r}'.format(data))


@lru_cache(maxsize=64)
def pattern_masks(n: int, pattern: SimpleGraph) -> Tuple[int, ...]:
    """Return edge masks of all embeddings of ``pattern`` into ``K_n``."""
    core = _active(pattern)
    if core.n > n:
        return ()
    masks = set()
    for image in permutations(range(n), core.n):
        masks.add(mask_of(n, ((image[u], image[v]) for u, v in core.edges)))
    return tuple(sorted(masks))


@dataclass(frozen=True)
class ExtremalResult:
    """Result of :func:`turan_exact`.

    The witness is re-verified on construction: it has ``value`` edges and
    embeds no member of ``family``.
    """

    value: int
    witness: SimpleGraph
    exact: bool
    family: ForbiddenFamily
    nodes: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.witness.num_edges != self.value:
            raise ArlabError('Witness has {} edges, expected {}'.format(
                self.witness.num_edges, self.value))
        if not self.family.has_edgeless_member and \
                not self.family.is_free(self.witness):
            raise ArlabError('Witness contains a forbidden pattern')


class _TuranSearch:
    """Include/exclude search over the edges of ``K_n``."""

    def __init__(self, n: int, masks: Sequence[int],
                 incumbent: Incumbent[int]) -> None:
        self.m = binom(n, 2)
        self.incumbent = incumbent
        self.by_max = [[] for _ in range(self.m)]  # type: List[List[int]]
        for mask in masks:
            self.by_max[mask.bit_length() - 1].append(mask)

    def violates(self, i: int, current: int) -> bool:
        return any(mask & current == mask for mask in self.by_max[i])

    def prefixes(self, depth: int) -> List[Tuple[int, int]]:
        """Return feasible ``(mask, count)`` after ``depth`` decisions."""
        layer = [(0, 0)]
        for i in range(min(depth, self.m)):
            nxt = []
            for current, count in layer:
                added = current | 1 << i
                if not self.violates(i, added):
                    nxt.append((added, count + 1))
                nxt.append((current, count))
            layer = nxt
        return layer

    def task(self, index: int, start: int, current: int,
             count: int) -> Callable[[], None]:
        tick = self.incumbent.counter()
        m = self.m
        incumbent = self.incumbent

        def dfs(i: int, current: int, count: int) -> None:
            tick()
            if incumbent.should_prune(count + m - i, index):
                return
            if i == m:
                incumbent.offer(count, index, current)
                return
            added = current | 1 << i
            if not self.violates(i, added):
                dfs(i + 1, added, count + 1)
            dfs(i + 1, current, count)

        def run() -> None:
            try:
                dfs(start, current, count)
            finally:
                tick.flush()
        return run


def _split_depth(m: int, threads: int) -> int:
    if threads <= 1:
        return 0
    return min(m, max(2, (4 * threads).bit_length()))


def turan_exact(n: int, family: ForbiddenFamily, budget: int = None,
                threads: int = None) -> ExtremalResult:
    """Return ``ex(K_n, family)`` with the canonical witness.

    The canonical witness is, among all family-free subgraphs with the
    maximum number of edges, the one whose sorted edge indices are
    lexicographically smallest. When the node budget is exceeded the best
    graph found so far is returned with ``exact=False``.
    """
    if n < 1:
        raise UnsupportedParameterError('n must be >= 1, but got: {}'.format(
            n))
    if family.has_edgeless_member:
        return ExtremalResult(0, SimpleGraph.empty(n), True, family)
    masks = sorted({mask for member in family.members
                    for mask in pattern_masks(n, member)})
    if not masks:
        return ExtremalResult(binom(n, 2), SimpleGraph.complete(n), True,
                              family)

    budget = get_budget(budget)
    threads = get_threads(threads)
    incumbent = Incumbent(budget, value=-1, witness=0)  # type: Incumbent[int]
    search = _TuranSearch(n, masks, incumbent)
    depth = _split_depth(search.m, threads)
    tasks = [search.task(index, depth, mask, count)
             for index, (mask, count) in enumerate(search.prefixes(depth))]
    logger.debug('ex(K_{}, {}{}): {} subtrees on {} threads'.format(
        n, family.name, family.params, len(tasks), threads))
    try:
        run_subtrees(tasks, threads)
    except BudgetExhausted:  # pragma: no cover - guarded in run_subtrees
        pass
    exact = not incumbent.exhausted
    if not exact:
        logger.warning('ex(K_{}, {}{}): budget of {} nodes exceeded,'
                       ' best so far {}'.format(n, family.name, family.params,
                                                budget, incumbent.value))
    value = max(incumbent.value, 0)
    witness = SimpleGraph(n, incumbent.witness or 0)
    return ExtremalResult(value, witness, exact, family, incumbent.nodes)


def kst_upper_bound(n: int, s: int, t: int) -> float:
    """Return explicit Kovari-Sos-Turan bound on ``ex(K_n, K_{s,t})``.

    ``(1/2) * ((t-1)^(1/s) * (n-s+1) * n^(1-1/s) + (s-1) * n)``
    """
    check_interior(s)
    if s > t:
        raise ParameterOrderError(
            'Need s <= t, but got s={}, t={}'.format(s, t))
    if n < s:
        raise UnsupportedParameterError(
            'Need n >= s, but got n={}, s={}'.format(n, s))
    return 0.5 * ((t - 1) ** (1 / s) * (n - s + 1) * n ** (1 - 1 / s) +
                  (s - 1) * n)


def ex_value(n: int, s: int, t: int, budget: Optional[int] = None,
             threads: Optional[int] = None) -> ExtremalResult:
    """Shortcut of ``turan_exact(n, kst_family(s, t))``."""
    return turan_exact(n, kst_family(s, t), budget=budget, threads=threads)

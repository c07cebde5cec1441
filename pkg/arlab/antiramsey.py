#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Exact anti-Ramsey numbers ``AR(K_n, K_{s,t})`` and their bounds.

``ar_exact`` colors the edges of ``K_n`` in index order. Edge ``i`` may take
any color already used or the next new one, so colorings are enumerated up
to renaming of colors. A branch dies when

* a copy of ``K_{s,t}`` whose highest edge is ``i`` becomes rainbow, or
* ``colors used + edges left`` cannot beat the incumbent, or
* the incumbent already reached ``ex(K_n, K_{s,t})``: a representing graph
  of a coloring without rainbow ``K_{s,t}`` is ``K_{s,t}``-free, so no
  coloring uses more colors.

The search is seeded with the lower-bound construction, so it only looks
for strictly better colorings.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from arlab.extremal import (ExtremalResult, kst_family, kst_upper_bound,
                            minus_one_edge_family, turan_exact)
from arlab.graph import (ArlabError, EdgeColoring, ParameterOrderError,
                         SimpleGraph, UnsupportedParameterError,
                         check_interior, copies_with_masks, has_rainbow_copy,
                         iter_bits)
from arlab.options import get_budget, get_threads
from arlab.search import Incumbent, run_subtrees
from arlab.util import binom

__all__ = [
    'ARResult',
    'BoundReport',
    'ar_exact',
    'ar_lower_construction',
    'ar_upper_bound',
    'theorem_bound',
    'corollary_bound',
    'theorem_slack',
]

logger = logging.getLogger(__name__)


def _check_order(s: int, t: int) -> None:
    check_interior(s)
    if s > t:
        raise ParameterOrderError(
            'Need s <= t, but got s={}, t={}'.format(s, t))


@dataclass(frozen=True)
class ARResult:
    """Result of :func:`ar_exact`.

    The witness is re-verified on construction: it uses ``value`` colors and
    contains no rainbow copy of ``K_{s,t}``.
    """

    value: int
    witness: EdgeColoring
    exact: bool
    s: int
    t: int
    nodes: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.witness.num_colors != self.value:
            raise ArlabError('Witness uses {} colors, expected {}'.format(
                self.witness.num_colors, self.value))
        copy = has_rainbow_copy(self.witness, self.s, self.t)
        if copy is not None:
            raise ArlabError('Witness has a rainbow copy: {}'.format(copy))

    @property
    def n(self) -> int:
        return self.witness.host.n


def _lower_construction(n: int, s: int, t: int, budget: Optional[int],
                        threads: Optional[int]
                        ) -> Tuple[EdgeColoring, Optional[ExtremalResult]]:
    host = SimpleGraph.complete(n)
    if n < s + t:
        return EdgeColoring.rainbow(host), None
    ex_h = turan_exact(n, minus_one_edge_family(s, t), budget=budget,
                       threads=threads)
    if not ex_h.exact:
        logger.warning('Inexact lower bound: ex(K_{}, K_{{{},{}}} - e) search'
                       ' exceeded its budget'.format(n, s, t))
    fresh = ex_h.value  # ids 0..value-1 go to the witness edges
    colors = []
    distinct = 0
    for i in host.edge_indices:
        if ex_h.witness.mask >> i & 1:
            colors.append(distinct)
            distinct += 1
        else:
            colors.append(fresh)
    coloring = EdgeColoring.from_colors(host, colors)
    copy = has_rainbow_copy(coloring, s, t)
    if copy is not None:
        raise ArlabError('Lower construction has a rainbow copy {}'.format(
            copy))
    return coloring, ex_h


def ar_lower_construction(n: int, s: int, t: int, budget: int = None,
                          threads: int = None) -> EdgeColoring:
    """Color an extremal ``(K_{s,t} - e)``-free subgraph rainbow, rest alike.

    Uses ``ex(K_n, K_{s,t} - e) + 1`` colors and has no rainbow ``K_{s,t}``.
    For ``n < s + t`` every edge gets its own color.
    """
    _check_order(s, t)
    return _lower_construction(n, s, t, budget, threads)[0]


def ar_upper_bound(n: int, s: int, t: int, budget: int = None,
                   threads: int = None) -> ExtremalResult:
    """Return ``ex(K_n, K_{s,t})``, an upper bound of ``AR(K_n, K_{s,t})``.

    Keeping one edge per color of a coloring without rainbow ``K_{s,t}``
    gives a ``K_{s,t}``-free graph with as many edges as colors.
    """
    _check_order(s, t)
    return turan_exact(n, kst_family(s, t), budget=budget, threads=threads)


class _ColoringSearch:
    """Branch-and-prune over normalized colorings of ``K_n``."""

    def __init__(self, n: int, s: int, t: int, cutoff: int,
                 incumbent: Incumbent[Tuple[int, ...]]) -> None:
        host = SimpleGraph.complete(n)
        self.m = host.num_edges
        self.size = s * t
        self.cutoff = cutoff
        self.incumbent = incumbent
        # copies grouped by their highest edge: checked when it gets a color
        self.closing = [[] for _ in range(self.m)
                        ]  # type: List[List[Tuple[int, ...]]]
        for _, mask in copies_with_masks(host, s, t):
            edges = tuple(iter_bits(mask))
            self.closing[edges[-1]].append(edges)

    def rainbow_closed(self, i: int, colors: List[int]) -> bool:
        size = self.size
        for edges in self.closing[i]:
            if len({colors[j] for j in edges}) == size:
                return True
        return False

    def choices(self, used: int) -> List[int]:
        # new color first, so good incumbents appear early
        return [used] + list(range(used))

    def prefixes(self, depth: int) -> List[Tuple[List[int], int]]:
        layer = [([], 0)]  # type: List[Tuple[List[int], int]]
        for i in range(min(depth, self.m)):
            nxt = []
            for colors, used in layer:
                for color in self.choices(used):
                    new = colors + [color]
                    if not self.rainbow_closed(i, new):
                        nxt.append((new, max(used, color + 1)))
            layer = nxt
        return layer

    def task(self, index: int, prefix: List[int], used: int
             ) -> Callable[[], None]:
        tick = self.incumbent.counter()
        incumbent = self.incumbent
        m = self.m
        cutoff = self.cutoff
        colors = prefix + [0] * (m - len(prefix))

        def dfs(i: int, used: int) -> None:
            tick()
            if incumbent.should_prune(min(used + m - i, cutoff), index):
                return
            if i == m:
                incumbent.offer(used, index, tuple(colors))
                return
            for color in self.choices(used):
                colors[i] = color
                if self.rainbow_closed(i, colors):
                    continue
                dfs(i + 1, max(used, color + 1))

        def run() -> None:
            try:
                dfs(len(prefix), used)
            finally:
                tick.flush()
        return run


def _split_depth(m: int, threads: int) -> int:
    if threads <= 1:
        return 0
    return min(m, 4)


def ar_exact(n: int, s: int, t: int, budget: int = None,
             threads: int = None) -> ARResult:
    """Return ``AR(K_n, K_{s,t})`` with a canonical witness.

    For ``n < s + t`` no copy exists and every edge gets its own color.
    When the node budget is exceeded the best coloring found so far is
    returned with ``exact=False``.
    """
    _check_order(s, t)
    host = SimpleGraph.complete(n)
    if n < s + t:
        return ARResult(binom(n, 2), EdgeColoring.rainbow(host), True, s, t)

    budget = get_budget(budget)
    threads = get_threads(threads)
    upper = ar_upper_bound(n, s, t, budget=budget, threads=threads)
    cutoff = upper.value if upper.exact else binom(n, 2)
    seed, _ = _lower_construction(n, s, t, budget, threads)
    incumbent = Incumbent(budget, value=seed.num_colors,
                          witness=seed.colors
                          )  # type: Incumbent[Tuple[int, ...]]
    search = _ColoringSearch(n, s, t, cutoff, incumbent)
    if seed.num_colors < cutoff:
        depth = _split_depth(search.m, threads)
        tasks = [search.task(index, prefix, used) for index, (prefix, used)
                 in enumerate(search.prefixes(depth))]
        logger.debug('AR(K_{}, K_{{{},{}}}): seed {}, cutoff {}, {} subtrees'
                     .format(n, s, t, seed.num_colors, cutoff, len(tasks)))
        run_subtrees(tasks, threads)
    exact = not incumbent.exhausted
    if not exact:
        logger.warning('AR(K_{}, K_{{{},{}}}): budget of {} nodes exceeded,'
                       ' best so far {}'.format(n, s, t, budget,
                                                incumbent.value))
    witness = EdgeColoring(host, tuple(incumbent.witness))
    return ARResult(incumbent.value, witness, exact, s, t, incumbent.nodes)


def theorem_slack(n: int, s: int, t: int) -> int:
    """Return ``s*(t-1)*(n-1)``, the linear term of the main bound."""
    return s * (t - 1) * (n - 1)


def corollary_bound(n: int, s: int, t: int) -> float:
    """Return explicit upper bound of ``AR(K_n, K_{s,t})`` of order n^(2-1/s).

    ``kst_upper_bound(n, s, max(t-1, s)) + s*(t-1)*(n-1)``; when ``t-1 < s``
    the exterior is raised to ``s``, which only weakens the bound since
    ``ex(K_n, K_{s,t-1}) <= ex(K_n, K_{s,s})``.
    """
    _check_order(s, t)
    return kst_upper_bound(n, s, max(t - 1, s)) + theorem_slack(n, s, t)


@dataclass(frozen=True)
class BoundReport:
    """All bounds around ``AR(K_n, K_{s,t})`` for one ``n``.

    ``lower`` is the color count of :func:`ar_lower_construction`
    (``ex(K_n, K_{s,t} - e) + 1``, or ``C(n, 2)`` for vacuous hosts),
    ``upper_rep`` is ``ex(K_n, K_{s,t})``, ``upper_thm`` is
    ``ex(K_n, K_{s,t-1}) + slack`` and ``upper_kst`` is
    :func:`corollary_bound`. ``ar`` is None unless the exact search
    completed within budget; ``witness`` is then its coloring.
    """

    n: int
    s: int
    t: int
    lower: int
    upper_rep: int
    ex_sub: int
    slack: int
    upper_kst: float
    ar: Optional[int] = None
    lower_exact: bool = True
    upper_rep_exact: bool = True
    ex_sub_exact: bool = True
    witness: Optional[EdgeColoring] = field(default=None, compare=False,
                                            repr=False)

    @property
    def upper_thm(self) -> int:
        return self.ex_sub + self.slack

    @property
    def slack_literal(self) -> int:
        """Return ``s*t*(n-1)``, the term as stated for a single lemma."""
        return self.s * self.t * (self.n - 1)

    @property
    def vacuous(self) -> bool:
        return self.n < self.s + self.t

    @property
    def exact(self) -> bool:
        return (self.ar is not None and self.lower_exact and
                self.upper_rep_exact and self.ex_sub_exact)

    @property
    def gap_rep(self) -> Optional[int]:
        """Return ``AR - ex(K_n, K_{s,t})``."""
        return None if self.ar is None else self.ar - self.upper_rep

    @property
    def gap_sub(self) -> Optional[int]:
        """Return ``AR - ex(K_n, K_{s,t-1})``."""
        return None if self.ar is None else self.ar - self.ex_sub

    def violations(self) -> List[str]:
        """Return names of violated inequalities among exact quantities."""
        result = []
        if self.lower_exact and self.upper_rep_exact and \
                self.lower > self.upper_rep:
            result.append('proposition')
        if self.ar is not None:
            if self.lower_exact and self.lower > self.ar:
                result.append('sandwich-lower')
            if self.upper_rep_exact and self.ar > self.upper_rep:
                result.append('sandwich-upper')
            if self.ex_sub_exact and self.ar > self.upper_thm:
                result.append('theorem')
            if self.ar > self.upper_kst:
                result.append('corollary')
        return result

    def as_row(self) -> Dict[str, object]:
        return {
            'n': self.n,
            's': self.s,
            't': self.t,
            'lower': self.lower,
            'ar': '' if self.ar is None else self.ar,
            'upper_rep': self.upper_rep,
            'upper_thm': self.upper_thm,
            'upper_kst': '{:.4f}'.format(self.upper_kst),
            'slack': self.slack,
            'slack_literal': self.slack_literal,
            'exact': int(self.exact),
            'vacuous': int(self.vacuous),
        }


def theorem_bound(n: int, s: int, t: int, budget: int = None,
                  threads: int = None, compute_ar: bool = True
                  ) -> BoundReport:
    """Fill a :class:`BoundReport` for ``(n, s, t)``.

    ``t == s`` is allowed; the sub-pattern is then ``K_{s,s-1}``.
    """
    if t < 2:
        raise UnsupportedParameterError(
            'Need t >= 2, but got: {}'.format(t))
    _check_order(s, t)
    lower_coloring, ex_h = _lower_construction(n, s, t, budget, threads)
    rep = ar_upper_bound(n, s, t, budget=budget, threads=threads)
    sub = turan_exact(n, kst_family(s, t - 1), budget=budget,
                      threads=threads)
    ar = None  # type: Optional[int]
    witness = None  # type: Optional[EdgeColoring]
    if compute_ar:
        result = ar_exact(n, s, t, budget=budget, threads=threads)
        if result.exact:
            ar, witness = result.value, result.witness
        else:
            logger.warning('AR(K_{}, K_{{{},{}}}) is inexact; left out'
                           .format(n, s, t))
    return BoundReport(
        n=n, s=s, t=t,
        lower=lower_coloring.num_colors,
        upper_rep=rep.value,
        ex_sub=sub.value,
        slack=theorem_slack(n, s, t),
        upper_kst=corollary_bound(n, s, t),
        ar=ar,
        lower_exact=ex_h is None or ex_h.exact,
        upper_rep_exact=rep.exact,
        ex_sub_exact=sub.exact,
        witness=witness,
    )

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Host graphs, edge-colorings and complete bipartite copies.

Vertices of a host on ``n`` vertices are ``0 .. n-1``. An edge ``(u, v)`` with
``u < v`` has the lexicographic index ``u*n - u*(u+1)/2 + (v-u-1)``, and an
edge set is kept as an ``int`` bitmask over those indices. Every search in
this package walks edges in index order, so the smallest witness under this
order is the canonical one.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import (Dict, FrozenSet, Iterable, Iterator, List, Mapping,
                    Optional, Sequence, Tuple)

import networkx as nx

from arlab.util import binom

__all__ = [
    'ArlabError',
    'UnsupportedParameterError',
    'ParameterOrderError',
    'GraphError',
    'Edge',
    'edge_index',
    'edge_pair',
    'mask_of',
    'popcount',
    'iter_bits',
    'SimpleGraph',
    'Multigraph',
    'EdgeColoring',
    'KstCopy',
    'normalize_colors',
    'enumerate_kst_copies',
    'has_rainbow_copy',
    'representing_graph',
    'edge_multiplicity',
    'simplify_multigraph',
    'find_cycle',
]

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class ArlabError(Exception):
    """Base class of errors raised by arlab."""


class UnsupportedParameterError(ArlabError, ValueError):
    """Parameters outside of the supported range (for example ``s < 2``)."""


class ParameterOrderError(UnsupportedParameterError):
    """Interior size larger than exterior size where ``s <= t`` is needed."""


class GraphError(ArlabError, ValueError):
    """Invalid vertex, loop or duplicated edge."""


def check_interior(s: int) -> None:
    """Reject interior sizes the string machinery does not define."""
    if s < 2:
        raise UnsupportedParameterError(
            'Interior size s must be at least 2, but got: {}'.format(s))


def edge_index(n: int, u: int, v: int) -> int:
    """Return lexicographic index of edge ``uv`` in ``K_n``."""
    if u == v:
        raise GraphError('Loop at vertex {} is not allowed'.format(u))
    if u > v:
        u, v = v, u
    if u < 0 or v >= n:
        raise GraphError(
            'Edge ({}, {}) has an endpoint outside 0..{}'.format(u, v, n - 1))
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@lru_cache(maxsize=None)
def _edge_table(n: int) -> Tuple[Edge, ...]:
    return tuple(combinations(range(n), 2))


def edge_pair(n: int, index: int) -> Edge:
    """Return edge ``(u, v)`` with ``u < v`` of lexicographic ``index``."""
    return _edge_table(n)[index]


def mask_of(n: int, edges: Iterable[Edge]) -> int:
    """Return bitmask of ``edges`` (duplicates collapse)."""
    mask = 0
    for u, v in edges:
        mask |= 1 << edge_index(n, u, v)
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled simple graph on vertices ``0 .. n-1``.

    Edges are stored as a bitmask over lexicographic edge indices, so equality
    and hashing compare labeled edge sets.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError('Vertex count must be >= 0: {}'.format(self.n))
        if self.mask < 0 or self.mask >> binom(self.n, 2):
            raise GraphError('Edge mask has bits beyond C({}, 2)'.format(
                self.n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'SimpleGraph':
        """Make graph from edge pairs; duplicated edges are rejected."""
        mask = 0
        for u, v in edges:
            bit = 1 << edge_index(n, u, v)
            if mask & bit:
                raise GraphError('Duplicated edge ({}, {})'.format(u, v))
            mask |= bit
        return cls(n, mask)

    @classmethod
    def complete(cls, n: int) -> 'SimpleGraph':
        """Return ``K_n``."""
        return cls(n, (1 << binom(n, 2)) - 1)

    @classmethod
    def empty(cls, n: int) -> 'SimpleGraph':
        """Return the edgeless graph on ``n`` vertices."""
        return cls(n, 0)

    @property
    def num_edges(self) -> int:
        """Return ``|E(G)|``."""
        return popcount(self.mask)

    @property
    def edge_indices(self) -> Tuple[int, ...]:
        """Return indices of edges in increasing order."""
        return tuple(iter_bits(self.mask))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Return edges ``(u, v)``, ``u < v``, sorted by index."""
        table = _edge_table(self.n)
        return tuple(table[i] for i in iter_bits(self.mask))

    @property
    def is_complete(self) -> bool:
        return self.mask == (1 << binom(self.n, 2)) - 1

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if ``uv`` is an edge of this graph."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self.mask >> edge_index(self.n, u, v) & 1)

    def contains(self, mask: int) -> bool:
        """Return True if every edge of ``mask`` is an edge of this graph."""
        return mask & self.mask == mask

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(u for u in range(self.n) if self.has_edge(u, v))

    def union(self, other: 'SimpleGraph') -> 'SimpleGraph':
        self._check_same_order(other)
        return SimpleGraph(self.n, self.mask | other.mask)

    def difference(self, other: 'SimpleGraph') -> 'SimpleGraph':
        self._check_same_order(other)
        return SimpleGraph(self.n, self.mask & ~other.mask)

    def relabel(self, perm: Sequence[int]) -> 'SimpleGraph':
        """Return graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        """Return ``networkx.Graph`` with edges inserted in index order."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def _check_same_order(self, other: 'SimpleGraph') -> None:
        if self.n != other.n:
            raise GraphError('Graphs have different orders: {} != {}'.format(
                self.n, other.n))

    def __repr__(self) -> str:
        return 'SimpleGraph(n={}, edges={})'.format(self.n, list(self.edges))


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph.

    ``multiplicity`` maps pairs ``(u, v)`` with ``u < v`` to edge counts.
    """

    n: int
    multiplicity: Tuple[Tuple[Edge, int], ...] = ()

    def __post_init__(self) -> None:
        for (u, v), mult in self.multiplicity:
            edge_index(self.n, u, v)  # validates endpoints and loops
            if u > v:
                raise GraphError('Pairs must be sorted: ({}, {})'.format(u, v))
            if mult < 1:
                raise GraphError('Multiplicity must be >= 1: {}'.format(mult))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'Multigraph':
        """Make multigraph from edges; repeated pairs add multiplicity."""
        counter = Counter(
            (min(u, v), max(u, v)) for u, v in edges)  # type: Counter
        return cls.from_counts(n, counter)

    def add_path(self, path: Sequence[int]) -> 'Multigraph':
        """Return new multigraph with the edges of ``path`` added."""
        counter = Counter(dict(self.multiplicity))  # type: Counter
        for u, v in zip(path, path[1:]):
            counter[(min(u, v), max(u, v))] += 1
        return Multigraph.from_counts(self.n, counter)

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[Edge, int]) -> 'Multigraph':
        return cls(n, tuple(sorted(counts.items(),
                                   key=lambda item: edge_index(n, *item[0]))))

    @property
    def num_edges(self) -> int:
        """Return edge count with multiplicity."""
        return sum(mult for _, mult in self.multiplicity)

    @property
    def pairs(self) -> Tuple[Edge, ...]:
        return tuple(pair for pair, _ in self.multiplicity)

    def as_dict(self) -> Dict[Edge, int]:
        return dict(self.multiplicity)


def normalize_colors(colors: Sequence[int]) -> Tuple[int, ...]:
    """Rename colors by first occurrence, so they become ``0 .. k-1``."""
    rename = {}  # type: Dict[int, int]
    result = []
    for c in colors:
        if c not in rename:
            rename[c] = len(rename)
        result.append(rename[c])
    return tuple(result)


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from host edges to color ids.

    ``colors[i]`` is the color of the ``i``-th host edge in index order.
    Color ids are normalized: scanning edges by index, each new color id
    exceeds all previously seen ids by exactly 1. Use :meth:`from_colors` to
    normalize arbitrary ids.
    """

    host: SimpleGraph
    colors: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.host.num_edges:
            raise GraphError('Coloring has {} colors for {} edges'.format(
                len(self.colors), self.host.num_edges))
        if tuple(self.colors) != normalize_colors(self.colors):
            raise GraphError('Colors are not normalized by first occurrence;'
                             ' use EdgeColoring.from_colors')

    @classmethod
    def from_colors(cls, host: SimpleGraph, colors: Iterable[int]
                    ) -> 'EdgeColoring':
        """Make coloring from arbitrary color ids (normalized here)."""
        return cls(host, normalize_colors(list(colors)))

    @classmethod
    def from_mapping(cls, host: SimpleGraph, mapping: Mapping[Edge, int]
                     ) -> 'EdgeColoring':
        """Make coloring from an ``{(u, v): color}`` mapping."""
        colors = []
        for u, v in host.edges:
            if (u, v) in mapping:
                colors.append(mapping[(u, v)])
            elif (v, u) in mapping:
                colors.append(mapping[(v, u)])
            else:
                raise GraphError('Edge ({}, {}) has no color'.format(u, v))
        return cls.from_colors(host, colors)

    @classmethod
    def monochromatic(cls, host: SimpleGraph) -> 'EdgeColoring':
        return cls(host, (0,) * host.num_edges)

    @classmethod
    def rainbow(cls, host: SimpleGraph) -> 'EdgeColoring':
        """Return the coloring with pairwise distinct colors."""
        return cls(host, tuple(range(host.num_edges)))

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    @property
    def index_colors(self) -> Dict[int, int]:
        """Return mapping from host edge index to color."""
        return dict(zip(self.host.edge_indices, self.colors))

    def color_of(self, u: int, v: int) -> int:
        """Return color of edge ``uv``; KeyError if it is not a host edge."""
        return self.index_colors[edge_index(self.host.n, u, v)]

    def color_class(self, color: int) -> SimpleGraph:
        """Return spanning subgraph of edges with ``color``."""
        return SimpleGraph(self.host.n, sum(
            1 << i for i, c in zip(self.host.edge_indices, self.colors)
            if c == color))

    def is_rainbow(self, mask: int) -> bool:
        """Return True if host edges in ``mask`` have distinct colors."""
        colors = self.index_colors
        seen = set()
        for i in iter_bits(mask):
            c = colors[i]
            if c in seen:
                return False
            seen.add(c)
        return True

    def permute_vertices(self, perm: Sequence[int]) -> 'EdgeColoring':
        """Return coloring of the relabeled host (colors renormalized)."""
        host = self.host.relabel(perm)
        mapping = {(perm[u], perm[v]): c
                   for (u, v), c in zip(self.host.edges, self.colors)}
        return EdgeColoring.from_mapping(host, mapping)


@dataclass(frozen=True, order=True)
class KstCopy:
    """One copy of ``K_{s,t'}``: interior ``X`` and exterior ``Y``.

    Both parts are kept as sorted tuples; instances order canonically by
    ``X`` then ``Y``.
    """

    X: Tuple[int, ...]
    Y: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'X', tuple(sorted(self.X)))
        object.__setattr__(self, 'Y', tuple(sorted(self.Y)))
        if len(set(self.X)) != len(self.X) or len(set(self.Y)) != len(self.Y):
            raise GraphError('Parts must not repeat vertices: {}'.format(self))
        check_interior(len(self.X))
        if len(self.Y) < 1:
            raise UnsupportedParameterError('Exterior must not be empty')
        if set(self.X) & set(self.Y):
            raise GraphError('Interior and exterior intersect: {}'.format(
                self))

    @property
    def s(self) -> int:
        return len(self.X)

    @property
    def t(self) -> int:
        return len(self.Y)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.X + self.Y)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Return the ``s*t'`` implied edges, sorted."""
        return tuple(sorted((min(x, y), max(x, y))
                            for x in self.X for y in self.Y))

    def edge_mask(self, n: int) -> int:
        return mask_of(n, self.edges)

    def to_dict(self) -> Dict[str, List[int]]:
        return {'X': list(self.X), 'Y': list(self.Y)}


@lru_cache(maxsize=64)
def _complete_copies(n: int, s: int, t: int
                     ) -> Tuple[Tuple[KstCopy, int], ...]:
    """All copies of ``K_{s,t}`` in ``K_n`` with their edge masks."""
    result = []
    if s + t > n:
        return ()
    for X in combinations(range(n), s):
        rest = [v for v in range(n) if v not in X]
        for Y in combinations(rest, t):
            if s == t and Y[0] < X[0]:
                continue  # same vertex-set pair as (Y, X)
            copy = KstCopy(X, Y)
            result.append((copy, copy.edge_mask(n)))
    return tuple(result)


def copies_with_masks(G: SimpleGraph, s: int, t: int
                      ) -> List[Tuple[KstCopy, int]]:
    """Return copies in ``G`` paired with their edge masks, canonical order."""
    check_interior(s)
    if t < 1:
        raise UnsupportedParameterError(
            'Exterior size must be at least 1, but got: {}'.format(t))
    return [(copy, mask) for copy, mask in _complete_copies(G.n, s, t)
            if G.contains(mask)]


def enumerate_kst_copies(G: SimpleGraph, s: int, t: int) -> List[KstCopy]:
    """Return every copy of ``K_{s,t}`` in ``G`` once, sorted canonically.

    When ``s == t`` the two labelings of one vertex-set pair are identified
    and the part with the smaller minimum vertex is the interior.
    """
    return [copy for copy, _ in copies_with_masks(G, s, t)]


def has_rainbow_copy(c: EdgeColoring, s: int, t: int) -> Optional[KstCopy]:
    """Return the canonically smallest rainbow copy of ``K_{s,t}``, or None."""
    colors = c.index_colors
    size = s * t
    for copy, mask in copies_with_masks(c.host, s, t):
        if len({colors[i] for i in iter_bits(mask)}) == size:
            return copy
    return None


def representing_graph(c: EdgeColoring) -> SimpleGraph:
    """Return spanning subgraph with the lowest-index edge of every color."""
    seen = set()
    mask = 0
    for i, color in zip(c.host.edge_indices, c.colors):
        if color not in seen:
            seen.add(color)
            mask |= 1 << i
    return SimpleGraph(c.host.n, mask)


def edge_multiplicity(F: Multigraph) -> int:
    """Return maximum number of parallel edges (0 for edgeless ``F``)."""
    return max((mult for _, mult in F.multiplicity), default=0)


def simplify_multigraph(F: Multigraph) -> SimpleGraph:
    """Keep one edge of every pair with multiplicity >= 1."""
    return SimpleGraph(F.n, mask_of(F.n, F.pairs))


def find_cycle(G: SimpleGraph) -> Optional[Tuple[int, ...]]:
    """Return a cycle ``v_0 .. v_{m-1}`` (closing edge implied), or None.

    Depth-first from the lowest vertex, lowest neighbor first. A graph with
    more than ``n - 1`` edges always has a cycle.
    """
    try:
        cycle = nx.find_cycle(G.to_networkx())
    except nx.NetworkXNoCycle:
        return None
    vertices = tuple(u for u, _ in cycle)
    logger.debug('Cycle found: {}'.format(vertices))
    return vertices

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Readers and writers of graph6 strings and coloring text files.

Coloring text format (UTF-8)::

    n=<int> k=<int>
    <u> <v> <color>
    ...

one line per host edge, ``u < v``, sorted by edge index.
"""

import re
from typing import Dict, List, Optional, Tuple

import networkx as nx

from arlab.graph import (Edge, EdgeColoring, GraphError, SimpleGraph,
                         edge_index)

__all__ = [
    'GraphFormatError',
    'to_graph6',
    'from_graph6',
    'ColoringParser',
    'parse_coloring',
    'format_coloring',
]

_header_re = re.compile(r'^\s*n\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s*$')
_edge_re = re.compile(r'^\s*(\d+)\s+(\d+)\s+(\d+)\s*$')


class GraphFormatError(GraphError):
    """Malformed graph6 or coloring text."""


def to_graph6(G: SimpleGraph) -> str:
    """Encode graph as header-free graph6 string."""
    data = nx.to_graph6_bytes(G.to_networkx(), header=False)
    return data.decode('ascii').strip()


def from_graph6(text: str) -> SimpleGraph:
    """Decode header-free (or headed) graph6 string."""
    data = text.strip().encode('ascii')
    try:
        graph = nx.from_graph6_bytes(data)
    except (ValueError, nx.NetworkXError) as e:
        raise GraphFormatError('Invalid graph6 string {!r}: {}'.format(
            text, e))
    n = graph.number_of_nodes()
    return SimpleGraph.from_edges(
        n, ((min(u, v), max(u, v)) for u, v in graph.edges()))


class ColoringParser:
    """Line-based parser of coloring text.

    Feed text (possibly in chunks) with :meth:`feed`, then call
    :meth:`close` to get the parsed :class:`EdgeColoring`.
    """

    def __init__(self) -> None:
        self.n = None  # type: Optional[int]
        self.k = None  # type: Optional[int]
        self.entries = []  # type: List[Tuple[Edge, int]]
        self._buffer = ''
        self._lineno = 0

    def feed(self, data: str) -> None:
        """Feed text; complete lines are parsed immediately."""
        self._buffer += data
        *lines, self._buffer = self._buffer.split('\n')
        for line in lines:
            self._handle_line(line)

    def _handle_line(self, line: str) -> None:
        self._lineno += 1
        if not line.strip():
            return
        if self.n is None:
            m = _header_re.match(line)
            if not m:
                raise GraphFormatError(
                    'Line {}: expected `n=<int> k=<int>`, got {!r}'.format(
                        self._lineno, line))
            self.n, self.k = int(m.group(1)), int(m.group(2))
            return
        m = _edge_re.match(line)
        if not m:
            raise GraphFormatError(
                'Line {}: expected `<u> <v> <color>`, got {!r}'.format(
                    self._lineno, line))
        u, v, color = (int(g) for g in m.groups())
        if not u < v:
            raise GraphFormatError('Line {}: need u < v, got {} {}'.format(
                self._lineno, u, v))
        self.entries.append(((u, v), color))

    def close(self) -> EdgeColoring:
        """Finish parsing and return coloring."""
        if self._buffer:
            self._handle_line(self._buffer)
            self._buffer = ''
        if self.n is None or self.k is None:
            raise GraphFormatError('Missing `n=<int> k=<int>` header')
        n = self.n
        indices = [edge_index(n, u, v) for (u, v), _ in self.entries]
        if indices != sorted(set(indices)):
            raise GraphFormatError('Edges must be unique and sorted by index')
        host = SimpleGraph.from_edges(n, (e for e, _ in self.entries))
        mapping = dict(self.entries)  # type: Dict[Edge, int]
        coloring = EdgeColoring.from_mapping(host, mapping)
        if coloring.num_colors != self.k:
            raise GraphFormatError(
                'Header says k={} but {} colors used'.format(
                    self.k, coloring.num_colors))
        return coloring


def parse_coloring(text: str, parser: ColoringParser = None
                   ) -> EdgeColoring:
    """Parse coloring text and return normalized coloring."""
    parser = parser or ColoringParser()
    parser.feed(text)
    return parser.close()


def format_coloring(c: EdgeColoring) -> str:
    """Return coloring text, LF line endings, trailing newline."""
    lines = ['n={} k={}'.format(c.host.n, c.num_colors)]
    for (u, v), color in zip(c.host.edges, c.colors):
        lines.append('{} {} {}'.format(u, v, color))
    return '\n'.join(lines) + '\n'

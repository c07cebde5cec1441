#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Hypothesis strategies of small graphs and colorings."""

from hypothesis import strategies as st

from arlab.graph import EdgeColoring, SimpleGraph
from arlab.util import binom


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6) -> SimpleGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    m = binom(n, 2)
    mask = draw(st.integers(min_value=0, max_value=(1 << m) - 1))
    return SimpleGraph(n, mask)


@st.composite
def colorings(draw, min_n: int = 4, max_n: int = 6,
              max_colors: int = None) -> EdgeColoring:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    host = SimpleGraph.complete(n)
    palette = max_colors or host.num_edges
    colors = draw(st.lists(st.integers(min_value=0, max_value=palette - 1),
                           min_size=host.num_edges,
                           max_size=host.num_edges))
    return EdgeColoring.from_colors(host, colors)


#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Strings, rings and string-ties of complete bipartite copies.

A *string* is a sequence ``B_1 .. B_k`` of pairwise edge-disjoint copies of
``K_{s,t'}`` whose consecutive interiors intersect. A *ring* is a string whose
first and last interiors intersect too. A *string-tie* is a string plus an
apex vertex outside all interiors, joined to ``s-1`` vertices of the first
interior and to one vertex of the last interior that is not in the first.

Validators never raise for well-typed input; they return a
:class:`ValidationReport` naming every violated clause.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from arlab.graph import (ArlabError, Edge, EdgeColoring, KstCopy, Multigraph,
                         SimpleGraph, UnsupportedParameterError,
                         check_interior, copies_with_masks, edge_index,
                         find_cycle, mask_of, simplify_multigraph)
from arlab.search import first_in_order

__all__ = [
    'NotExtractableError',
    'HostNotCompleteError',
    'ValidationReport',
    'KstString',
    'KstRing',
    'StringTie',
    'Packing',
    'validate_string',
    'validate_ring',
    'validate_string_tie',
    'find_rainbow_string_tie',
    'ring_to_string_tie',
    'greedy_maximal_packing',
    'residual_copies',
    'validate_packing',
    'interior_path_multigraph',
    'packing_to_ring',
]

logger = logging.getLogger(__name__)

# clause names used in reports
LENGTH = 'length'
PART_SIZES = 'part-sizes'
HOST_CONTAINMENT = 'host-containment'
EDGE_DISJOINTNESS = 'edge-disjointness'
CONSECUTIVE_OVERLAP = 'consecutive-overlap'
WRAP_OVERLAP = 'wrap-overlap'
APEX_EXCLUSION = 'apex-exclusion'
ANCHOR_SIZE = 'anchor-size'
ANCHOR_CONTAINMENT = 'anchor-containment'
TAIL_MEMBERSHIP = 'tail-membership'
APEX_ADJACENCY = 'apex-adjacency'
MAXIMALITY = 'maximality'
# flags (reported, never violations)
DEGENERATE = 'degenerate'
APEX_IN_EXTERIOR = 'apex-in-exterior'


class NotExtractableError(ArlabError):
    """Ring is invalid or has no string-tie among its sub-strings."""


class HostNotCompleteError(ArlabError):
    """An apex edge required by the extraction is missing from the host."""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator.

    ``violations`` lists violated clause names in check order, ``flags``
    lists remarks which do not make the structure invalid.
    """

    kind: str
    length: int
    violations: Tuple[str, ...] = ()
    flags: Tuple[str, ...] = ()
    details: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            text = 'valid {} of length {}'.format(self.kind, self.length)
        else:
            text = 'invalid {} of length {}: {}'.format(
                self.kind, self.length, ', '.join(self.violations))
        if self.flags:
            text += ' [{}]'.format(', '.join(self.flags))
        return text


@dataclass(frozen=True)
class KstString:
    """Ordered copies ``B_1 .. B_k``; see :func:`validate_string`."""

    copies: Tuple[KstCopy, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'copies', tuple(self.copies))

    @property
    def length(self) -> int:
        return len(self.copies)

    @property
    def interiors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(copy.X for copy in self.copies)

    @property
    def interior_vertices(self) -> Set[int]:
        return {v for X in self.interiors for v in X}

    @property
    def s(self) -> int:
        return self.copies[0].s

    @property
    def t(self) -> int:
        return self.copies[0].t

    def edge_mask(self, n: int) -> int:
        mask = 0
        for copy in self.copies:
            mask |= copy.edge_mask(n)
        return mask


@dataclass(frozen=True)
class KstRing:
    """A string whose first and last interiors intersect."""

    string: KstString

    @classmethod
    def of(cls, copies: Sequence[KstCopy]) -> 'KstRing':
        return cls(KstString(tuple(copies)))

    @property
    def copies(self) -> Tuple[KstCopy, ...]:
        return self.string.copies

    @property
    def length(self) -> int:
        return self.string.length


@dataclass(frozen=True)
class StringTie:
    """String plus apex joined to ``anchor`` (in ``x_1``) and ``tail``."""

    base: KstString
    apex: int
    anchor: Tuple[int, ...]
    tail: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'anchor', tuple(sorted(self.anchor)))

    @property
    def apex_edges(self) -> Tuple[Edge, ...]:
        return tuple((min(self.apex, v), max(self.apex, v))
                     for v in self.anchor + (self.tail,))

    def edge_mask(self, n: int) -> int:
        return self.base.edge_mask(n) | mask_of(n, self.apex_edges)


@dataclass(frozen=True)
class Packing:
    """Pairwise edge-disjoint copies of ``K_{s,t}`` in ``host``."""

    host: SimpleGraph
    copies: Tuple[KstCopy, ...]
    s: int
    t: int
    maximal: bool = False

    @property
    def k(self) -> int:
        return len(self.copies)


def _in_range(copy: KstCopy, n: int) -> bool:
    return all(0 <= v < n for v in copy.X + copy.Y)


def _string_violations(S: KstString, host: SimpleGraph,
                       details: List[str]) -> List[str]:
    violations = []  # type: List[str]
    if S.length < 1:
        details.append('string has no copies')
        return [LENGTH]
    s, t = S.s, S.t
    if any(copy.s != s or copy.t != t for copy in S.copies):
        violations.append(PART_SIZES)
        details.append('copies are not all K_{{{},{}}}'.format(s, t))
    if not all(_in_range(copy, host.n) for copy in S.copies):
        violations.append(HOST_CONTAINMENT)
        details.append('vertex outside 0..{}'.format(host.n - 1))
        return violations  # masks are undefined beyond n
    masks = [copy.edge_mask(host.n) for copy in S.copies]
    if not all(host.contains(mask) for mask in masks):
        violations.append(HOST_CONTAINMENT)
        details.append('copy edge missing from host')
    used = 0
    for i, mask in enumerate(masks):
        if used & mask:
            violations.append(EDGE_DISJOINTNESS)
            details.append('copy {} shares an edge with an earlier copy'
                           .format(i + 1))
            break
        used |= mask
    for i in range(S.length - 1):
        if not set(S.copies[i].X) & set(S.copies[i + 1].X):
            violations.append(CONSECUTIVE_OVERLAP)
            details.append('x_{} and x_{} are disjoint'.format(i + 1, i + 2))
            break
    return violations


def validate_string(S: KstString, host: SimpleGraph) -> ValidationReport:
    """Check every clause of the string definition."""
    details = []  # type: List[str]
    violations = _string_violations(S, host, details)
    return ValidationReport('string', S.length, tuple(violations), (),
                            tuple(details))


def validate_ring(R: KstRing, host: SimpleGraph) -> ValidationReport:
    """Check string clauses plus ``x_1 & x_k != {}``.

    A length-1 ring is valid and flagged degenerate.
    """
    details = []  # type: List[str]
    violations = _string_violations(R.string, host, details)
    flags = []
    if R.length >= 1:
        if not set(R.copies[0].X) & set(R.copies[-1].X):
            violations.append(WRAP_OVERLAP)
            details.append('x_1 and x_{} are disjoint'.format(R.length))
        if R.length == 1:
            flags.append(DEGENERATE)
    return ValidationReport('ring', R.length, tuple(violations),
                            tuple(flags), tuple(details))


def validate_string_tie(T: StringTie, host: SimpleGraph) -> ValidationReport:
    """Check base string clauses plus the apex clauses."""
    details = []  # type: List[str]
    violations = _string_violations(T.base, host, details)
    flags = []
    if T.base.length < 1:
        return ValidationReport('tie', 0, tuple(violations), (),
                                tuple(details))
    x_1 = set(T.base.copies[0].X)
    x_k = set(T.base.copies[-1].X)
    if not 0 <= T.apex < host.n or T.apex in T.base.interior_vertices:
        violations.append(APEX_EXCLUSION)
        details.append('apex {} lies in an interior'.format(T.apex))
    if len(set(T.anchor)) != T.base.s - 1:
        violations.append(ANCHOR_SIZE)
        details.append('anchor has {} vertices, need {}'.format(
            len(set(T.anchor)), T.base.s - 1))
    if not set(T.anchor) <= x_1:
        violations.append(ANCHOR_CONTAINMENT)
        details.append('anchor is not inside x_1')
    if T.tail not in x_k - x_1:
        violations.append(TAIL_MEMBERSHIP)
        details.append('tail {} is not in x_k \\ x_1'.format(T.tail))
    if not all(host.has_edge(T.apex, v) for v in T.anchor + (T.tail,)):
        violations.append(APEX_ADJACENCY)
        details.append('apex edge missing from host')
    if any(T.apex in copy.Y for copy in T.base.copies):
        flags.append(APEX_IN_EXTERIOR)
    return ValidationReport('tie', T.base.length, tuple(violations),
                            tuple(flags), tuple(details))


class _TieSearch:
    """Depth-first search of rainbow string-ties in one coloring."""

    def __init__(self, c: EdgeColoring, s: int, t: int, max_len: int) -> None:
        self.n = c.host.n
        self.host = c.host
        self.s = s
        self.max_len = max_len
        self.colors = c.index_colors
        self.copies = []  # type: List[Tuple[KstCopy, int, frozenset]]
        for copy, mask in copies_with_masks(c.host, s, t):
            palette = frozenset(self.colors[edge_index(self.n, u, v)]
                                for u, v in copy.edges)
            if len(palette) == s * t:
                self.copies.append((copy, mask, palette))
                if s == t:
                    # either part may serve as the interior of a string
                    self.copies.append((KstCopy(copy.Y, copy.X), mask,
                                        palette))
        self.copies.sort(key=lambda item: item[0])
        self.next = [
            [j for j, (other, _, _) in enumerate(self.copies)
             if set(copy.X) & set(other.X)]
            for copy, _, _ in self.copies
        ]  # type: List[List[int]]

    def from_start(self, start: int) -> Optional[StringTie]:
        copy, mask, palette = self.copies[start]
        return self._dfs([start], mask, set(palette))

    def _dfs(self, path: List[int], used: int, palette: Set[int]
             ) -> Optional[StringTie]:
        if len(path) >= 2:
            tie = self._close(path, used, palette)
            if tie is not None:
                return tie
        if len(path) >= self.max_len:
            return None
        for j in self.next[path[-1]]:
            _, mask, colors = self.copies[j]
            if mask & used or colors & palette:
                continue
            tie = self._dfs(path + [j], used | mask, palette | colors)
            if tie is not None:
                return tie
        return None

    def _close(self, path: List[int], used: int, palette: Set[int]
               ) -> Optional[StringTie]:
        copies = [self.copies[i][0] for i in path]
        x_1, x_k = copies[0].X, copies[-1].X
        tails = sorted(set(x_k) - set(x_1))
        if not tails:
            return None
        interior = {v for copy in copies for v in copy.X}
        for apex in range(self.n):
            if apex in interior:
                continue
            for anchor in combinations(x_1, self.s - 1):
                for tail in tails:
                    if self._apex_ok(apex, anchor + (tail,), used, palette):
                        return StringTie(KstString(tuple(copies)), apex,
                                         anchor, tail)
        return None

    def _apex_ok(self, apex: int, ends: Tuple[int, ...], used: int,
                 palette: Set[int]) -> bool:
        seen = set()
        for v in ends:
            if not self.host.has_edge(apex, v):
                return False
            i = edge_index(self.n, apex, v)
            if used >> i & 1:
                return False
            color = self.colors[i]
            if color in palette or color in seen:
                return False
            seen.add(color)
        return True


def find_rainbow_string_tie(c: EdgeColoring, s: int, t: int, max_len: int,
                            threads: int = 1) -> Optional[StringTie]:
    """Return the canonical rainbow ``K_{s,t}``-string-tie, or None.

    Only ties with base length ``<= max_len`` are searched. All base edges
    and apex edges must have pairwise distinct colors. Starting copies may be
    searched on worker threads; the result is the one found first in
    canonical (sequential) order.
    """
    check_interior(s)
    if max_len < 1:
        raise UnsupportedParameterError(
            'max_len must be >= 1, but got: {}'.format(max_len))
    search = _TieSearch(c, s, t, max_len)
    if max_len < 2:
        return None  # a tail needs x_k != x_1
    return first_in_order(search.from_start, range(len(search.copies)),
                          threads)


def _segments(seq: Sequence[KstCopy]) -> Iterator[Tuple[KstCopy, ...]]:
    """Contiguous segments of length >= 2, longest first."""
    for length in range(len(seq), 1, -1):
        for i in range(len(seq) - length + 1):
            yield tuple(seq[i:i + length])


def _tie_on(segment: Sequence[KstCopy], apex: int, clean: bool
            ) -> Optional[StringTie]:
    """Return tie with base ``segment`` and ``apex``, or None."""
    if len(segment) < 2 or any(apex in copy.X for copy in segment):
        return None
    if clean and any(apex in copy.Y for copy in segment):
        return None
    x_1, x_m = segment[0].X, segment[-1].X
    tails = sorted(set(x_m) - set(x_1))
    if not tails:
        return None
    return StringTie(KstString(tuple(segment)), apex, x_1[:len(x_1) - 1],
                     tails[0])


def _after(R: KstRing, start: int, first: int, stop: int) -> List[KstCopy]:
    """Copies ``start + first .. start + stop - 1`` in ring order."""
    k = R.length
    return [R.copies[(start + i) % k] for i in range(first, stop)]


def _disjoint_exterior_tie(R: KstRing) -> Optional[StringTie]:
    """Drop ``B_r`` and hang the rest of the ring from ``w``.

    ``w`` is an exterior vertex of ``B_r`` outside every interior (one
    exists by counting when the exteriors are pairwise disjoint), and the
    base is ``B_{r+1} .. B_{r-1}`` in ring order. ``r = 0`` is tried first.
    """
    interior = R.string.interior_vertices
    for r, copy in enumerate(R.copies):
        rest = _after(R, r, 1, R.length)
        for w in sorted(set(copy.Y) - interior):
            tie = _tie_on(rest, w, clean=True)
            if tie is not None:
                return tie
    return None


def _shared_exterior_tie(R: KstRing) -> Optional[StringTie]:
    """Use a vertex ``v`` shared by the exteriors of ``B_l1`` and ``B_l2``.

    With ``l2`` the first and ``l3`` the last copy after ``l1`` whose
    exterior holds ``v``, the runs strictly between ``l1`` and ``l2`` and
    strictly after ``l3`` avoid ``v`` in their exteriors; a segment of one
    of them whose interiors avoid ``v`` is the base.
    """
    k = R.length
    for l1, copy in enumerate(R.copies):
        for v in sorted(copy.Y):
            hits = [i for i in range(1, k)
                    if v in R.copies[(l1 + i) % k].Y]
            if not hits:
                continue
            l2, l3 = hits[0], hits[-1]
            for run in (_after(R, l1, 1, l2), _after(R, l1, l3 + 1, k)):
                for segment in _segments(run):
                    tie = _tie_on(segment, v, clean=True)
                    if tie is not None:
                        return tie
    return None


def _tie_candidates(R: KstRing) -> Iterator[Tuple[int, int]]:
    """Yield ``(apex, dropped copy position)`` for the generic search.

    Exterior vertices outside every interior come first; exterior vertices
    shared with interiors follow.
    """
    interior = R.string.interior_vertices
    pairs = sorted((w, r) for r, copy in enumerate(R.copies) for w in copy.Y)
    for w, r in pairs:
        if w not in interior:
            yield w, r
    for w, r in pairs:
        if w in interior:
            yield w, r


def _generic_tie(R: KstRing) -> Optional[StringTie]:
    for clean in (True, False):
        for apex, dropped in _tie_candidates(R):
            rest = _after(R, dropped, 1, R.length)
            for segment in _segments(rest):
                tie = _tie_on(segment, apex, clean)
                if tie is not None:
                    return tie
    return None


def ring_to_string_tie(R: KstRing, host: SimpleGraph) -> StringTie:
    """Extract a string-tie from a ring, dropping at least one copy.

    When the exteriors are pairwise disjoint, ``B_1`` is dropped and an
    exterior vertex of it outside all interiors is the apex over
    ``B_2 .. B_k``. Otherwise a vertex shared by two exteriors is the apex
    over a run of copies between its occurrences. When neither construction
    applies, every apex and every contiguous run of the remaining copies is
    tried; an apex inside a base exterior is used only as a last resort.

    :raises NotExtractableError: ``R`` is not a valid ring in ``host``, or no
        candidate exists (always so for rings of length 1 and 2).
    :raises HostNotCompleteError: an apex edge of the chosen tie is missing.
    """
    report = validate_ring(R, host)
    if not report.valid:
        raise NotExtractableError('Input is not a ring: {}'.format(report))
    exteriors = [set(copy.Y) for copy in R.copies]
    disjoint = all(not a & b for a, b in combinations(exteriors, 2))
    logger.debug('Ring of length {} with {} exteriors'.format(
        R.length, 'disjoint' if disjoint else 'overlapping'))
    if disjoint:
        tie = _disjoint_exterior_tie(R)
    else:
        tie = _shared_exterior_tie(R)
    if tie is None:
        tie = _generic_tie(R)
    if tie is None:
        raise NotExtractableError(
            'No string-tie inside ring of length {}'.format(R.length))
    missing = [v for v in tie.anchor + (tie.tail,)
               if not host.has_edge(tie.apex, v)]
    if missing:
        raise HostNotCompleteError(
            'Host lacks apex edges from {} to {}'.format(tie.apex, missing))
    return tie


def greedy_maximal_packing(G: SimpleGraph, s: int, t: int) -> Packing:
    """Take copies in canonical order whenever edge-disjoint from the rest.

    One pass suffices: a skipped copy already met an edge of the packing,
    and the packing only grows.
    """
    check_interior(s)
    used = 0
    chosen = []
    for copy, mask in copies_with_masks(G, s, t):
        if not used & mask:
            chosen.append(copy)
            used |= mask
    return Packing(G, tuple(chosen), s, t, maximal=True)


def residual_copies(P: Packing) -> List[KstCopy]:
    """Return copies in the host edge-disjoint from every packed copy."""
    used = 0
    for copy in P.copies:
        used |= copy.edge_mask(P.host.n)
    return [copy for copy, mask in copies_with_masks(P.host, P.s, P.t)
            if not used & mask]


def validate_packing(P: Packing) -> ValidationReport:
    """Check disjointness, containment, sizes and claimed maximality."""
    details = []  # type: List[str]
    violations = []  # type: List[str]
    if P.copies:
        violations = _string_violations(KstString(P.copies), P.host, details)
        # consecutive overlap is a string clause, not a packing clause
        violations = [v for v in violations if v != CONSECUTIVE_OVERLAP]
        if any(copy.s != P.s or copy.t != P.t for copy in P.copies) and \
                PART_SIZES not in violations:
            violations.append(PART_SIZES)
    if P.maximal and not violations and residual_copies(P):
        violations.append(MAXIMALITY)
        details.append('a further disjoint copy exists')
    return ValidationReport('packing', P.k, tuple(violations), (),
                            tuple(details))


def interior_path_multigraph(P: Packing
                             ) -> Tuple[Multigraph, Dict[Edge, int]]:
    """Return multigraph of interior paths and generating copy per pair.

    Every copy contributes the path through its sorted interior vertices, so
    the multigraph has exactly ``k*(s-1)`` edges. Each pair remembers the
    lowest index of a copy generating it.
    """
    F = Multigraph(P.host.n)
    generator = {}  # type: Dict[Edge, int]
    for i, copy in enumerate(P.copies):
        F = F.add_path(copy.X)
        for pair in zip(copy.X, copy.X[1:]):
            generator.setdefault(pair, i)
    return F, generator


def _collapse(sequence: List[int]) -> List[int]:
    """Drop cyclically consecutive duplicates."""
    result = [c for i, c in enumerate(sequence) if c != sequence[i - 1]]
    return result or sequence[:1]


def _shortest_distinct(sequence: List[int]) -> List[int]:
    """Shorten to the sub-cycle between the closest repeated copies."""
    best = None  # type: Optional[Tuple[int, int]]
    last = {}  # type: Dict[int, int]
    for j, c in enumerate(sequence):
        if c in last and (best is None or j - last[c] < best[1] - best[0]):
            best = (last[c], j)
        last[c] = j
    if best is None:
        return sequence
    return sequence[best[0]:best[1]]


def _double_edge_ring(P: Packing, F: Multigraph) -> Optional[KstRing]:
    """Return ring of the two lowest copies sharing an interior-path pair."""
    for pair, mult in F.multiplicity:
        if mult < 2:
            continue
        found = [i for i, copy in enumerate(P.copies)
                 if pair in zip(copy.X, copy.X[1:])]
        return KstRing.of([P.copies[i] for i in found[:2]])
    return None


def packing_to_ring(P: Packing) -> Optional[KstRing]:
    """Return ring read off a cycle of the interior-path multigraph.

    Cycles of the simplified graph come first: cycle edges are mapped to
    their generating copies, consecutive duplicates are collapsed and
    repeated copies shortened to the closest repetition, then the ring is
    rotated to start at its lowest copy index. When the simplified graph is
    a forest, a pair of multiplicity two gives a ring of length 2. Returns
    None when the multigraph itself is a forest.
    """
    F, generator = interior_path_multigraph(P)
    cycle = find_cycle(simplify_multigraph(F))
    if cycle is None:
        return _double_edge_ring(P, F)
    m = len(cycle)
    sequence = [generator[(min(cycle[i], cycle[(i + 1) % m]),
                           max(cycle[i], cycle[(i + 1) % m]))]
                for i in range(m)]
    sequence = _shortest_distinct(_collapse(sequence))
    start = sequence.index(min(sequence))
    sequence = sequence[start:] + sequence[:start]
    ring = KstRing.of([P.copies[i] for i in sequence])
    logger.debug('Ring of length {} from cycle of length {}'.format(
        ring.length, m))
    return ring

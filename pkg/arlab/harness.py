#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Samplers and verification runs of the string lemmas and the bounds.

Every sampled instance draws from its own generator
(:func:`arlab.util.instance_rng`), and instances are mapped in order, so a
run with a fixed seed gives the same outcome and the same certificates on
any number of threads.
"""

import csv
import io
import json
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from random import Random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from arlab.antiramsey import (BoundReport, ar_lower_construction,
                              theorem_bound)
from arlab.certificate import (EDGE_COUNT, REMAINDER_NOT_FREE,
                               TOO_MANY_COPIES, coloring_certificate,
                               packing_certificate, ring_certificate,
                               tie_certificate, violation_certificate)
from arlab.extremal import ExtremalResult, kst_family, turan_exact
from arlab.graph import (EdgeColoring, KstCopy, ParameterOrderError,
                         SimpleGraph, UnsupportedParameterError,
                         check_interior, copies_with_masks, iter_bits,
                         simplify_multigraph)
from arlab.options import get_budget, get_threads
from arlab.search import map_ordered
from arlab.parser import to_graph6
from arlab.structures import (HostNotCompleteError, KstRing,
                              NotExtractableError, Packing,
                              find_rainbow_string_tie,
                              greedy_maximal_packing,
                              interior_path_multigraph, packing_to_ring,
                              ring_to_string_tie, validate_packing,
                              validate_ring, validate_string_tie)
from arlab.util import instance_rng

__all__ = [
    'PASS',
    'FAIL',
    'INCONCLUSIVE',
    'VerificationRun',
    'sample_rainbow_free_coloring',
    'random_ring',
    'c4_decomposition_packing',
    'random_dense_packing',
    'verify_lemma1',
    'verify_lemma2',
    'verify_lemma3',
    'verify_bounds',
    'format_table',
    'TABLE_COLUMNS',
]

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

#: Column order of bound tables.
TABLE_COLUMNS = ('n', 's', 't', 'lower', 'ar', 'upper_rep', 'upper_thm',
                 'upper_kst', 'slack', 'slack_literal', 'exact', 'vacuous')


@dataclass
class VerificationRun:
    """Outcome of one verification run.

    ``counterexample`` is a violation certificate of the first failing
    instance; ``inconclusive`` collects certificates of instances the claim
    says nothing about (for example rings without any string-tie).
    ``eligible`` counts checked instances which could have failed at all.
    """

    claim: str
    params: Dict[str, Any]
    outcome: str = INCONCLUSIVE
    counterexample: Optional[Dict[str, Any]] = None
    inconclusive: List[Dict[str, Any]] = field(default_factory=list)
    instances: int = 0
    checked: int = 0
    eligible: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def failed(self) -> bool:
        return self.outcome == FAIL

    def to_dict(self) -> Dict[str, Any]:
        """Return deterministic summary (wall time left out)."""
        return {
            'claim': self.claim,
            'params': dict(self.params),
            'outcome': self.outcome,
            'instances': self.instances,
            'checked': self.checked,
            'eligible': self.eligible,
            'inconclusive': len(self.inconclusive),
            'counterexample': self.counterexample,
        }

    def summary(self) -> str:
        return '{}({}): {} ({} instances, {} checked, {} inconclusive)'.format(
            self.claim, ', '.join('{}={}'.format(k, v) for k, v in
                                  sorted(self.params.items())),
            self.outcome, self.instances, self.checked,
            len(self.inconclusive))


def _finish(run: VerificationRun, started: float) -> VerificationRun:
    run.wall_time = time.perf_counter() - started
    logger.info('{} in {:.2f}s'.format(run.summary(), run.wall_time))
    return run


def _check_order(s: int, t: int) -> None:
    check_interior(s)
    if s > t:
        raise ParameterOrderError(
            'Need s <= t, but got s={}, t={}'.format(s, t))


# Samplers

@lru_cache(maxsize=16)
def _lower_colors(n: int, s: int, t: int) -> Tuple[int, ...]:
    return ar_lower_construction(n, s, t).colors


def sample_rainbow_free_coloring(n: int, s: int, t: int, seed: int,
                                 palette: int = None, index: int = 0,
                                 max_repairs: int = None,
                                 rich: bool = False) -> EdgeColoring:
    """Sample a coloring of ``K_n`` without rainbow ``K_{s,t}``.

    Edges get uniform colors from ``palette`` ids (random size when None).
    With ``rich`` the start is the lower construction
    (:func:`arlab.antiramsey.ar_lower_construction`) where up to a quarter
    of the edges get fresh colors, and ``palette`` is ignored.

    While a rainbow copy exists, its highest-index edge takes the color of
    the copy's lowest-index edge. After ``max_repairs`` rounds every edge
    of a remaining rainbow copy is merged into one color, which always
    reduces the number of colors. The result is normalized.
    """
    _check_order(s, t)
    rng = instance_rng(seed, index)
    host = SimpleGraph.complete(n)
    m = host.num_edges
    if rich:
        colors = list(_lower_colors(n, s, t))
        fresh = max(colors, default=-1) + 1
        for i in rng.sample(range(m), rng.randint(0, m // 4)):
            colors[i] = fresh
            fresh += 1
    else:
        if palette is None:
            palette = rng.randint(1, max(m, 1))
        if palette < 1:
            raise UnsupportedParameterError(
                'palette must be >= 1, but got: {}'.format(palette))
        colors = [rng.randrange(palette) for _ in range(m)]
    copies = [tuple(iter_bits(mask))
              for _, mask in copies_with_masks(host, s, t)]
    size = s * t
    if max_repairs is None:
        max_repairs = 4 * m * max(len(copies), 1)

    def first_rainbow() -> Optional[Tuple[int, ...]]:
        for edges in copies:
            if len({colors[i] for i in edges}) == size:
                return edges
        return None

    repairs = 0
    edges = first_rainbow()
    while edges is not None:
        if repairs < max_repairs:
            colors[edges[-1]] = colors[edges[0]]
        else:
            target = colors[edges[0]]
            merged = {colors[i] for i in edges}
            colors = [target if c in merged else c for c in colors]
        repairs += 1
        edges = first_rainbow()
    if repairs > max_repairs:
        logger.warning('Sampler merged colors after {} repairs'.format(
            max_repairs))
    coloring = EdgeColoring.from_colors(host, colors)
    logger.debug('Sampled coloring of K_{} with {} colors ({} repairs)'
                 .format(n, coloring.num_colors, repairs))
    return coloring


def random_ring(s: int, t: int, length: int, rng: Random,
                overlap_exteriors: bool = False
                ) -> Tuple[KstRing, SimpleGraph]:
    """Return random ring of ``K_{s,t}`` copies and its complete host.

    Consecutive interiors (and the first and last one) share at least one
    vertex; exteriors are fresh vertices, except that with
    ``overlap_exteriors`` the first exterior shares a vertex with a later
    exterior whose interior is disjoint from the first. The host is the
    complete graph on all used vertices plus one spare vertex, and vertex
    names are shuffled.
    """
    check_interior(s)
    if length < 1 or t < 1:
        raise UnsupportedParameterError(
            'Need length >= 1 and t >= 1, got {} and {}'.format(length, t))
    counter = [0]

    def fresh(count: int) -> List[int]:
        start = counter[0]
        counter[0] += count
        return list(range(start, start + count))

    interiors = [fresh(s)]
    for i in range(1, length):
        prev = interiors[-1]
        must = [rng.choice(prev)]
        if i == length - 1 and length > 1:
            first = rng.choice(interiors[0])
            if first not in must:
                must.append(first)
        extra = rng.randint(0, s - len(must))
        pool = [v for v in {u for X in interiors for u in X} if v not in must]
        pool.sort()
        reused = rng.sample(pool, min(rng.randint(0, extra), len(pool)))
        X = must + reused
        X += fresh(s - len(X))
        interiors.append(X)
    exteriors = [fresh(t) for _ in range(length)]
    if overlap_exteriors and length >= 3:
        candidates = [j for j in range(1, length)
                      if not set(interiors[j]) & set(interiors[0])]
        if candidates:
            j = rng.choice(candidates)
            exteriors[j][0] = exteriors[0][0]
    n = counter[0] + 1
    perm = list(range(n))
    rng.shuffle(perm)
    copies = [KstCopy(tuple(perm[v] for v in X), tuple(perm[v] for v in Y))
              for X, Y in zip(interiors, exteriors)]
    return KstRing.of(copies), SimpleGraph.complete(n)


def _exact_cover(host: SimpleGraph, s: int, t: int, budget: int
                 ) -> Optional[List[KstCopy]]:
    """Decompose ``host`` into edge-disjoint copies, or return None."""
    by_edge = {}  # type: Dict[int, List[Tuple[KstCopy, int]]]
    for copy, mask in copies_with_masks(host, s, t):
        by_edge.setdefault(mask & -mask, []).append((copy, mask))
    nodes = [0]

    def dfs(left: int, chosen: List[KstCopy]) -> Optional[List[KstCopy]]:
        if not left:
            return list(chosen)
        nodes[0] += 1
        if nodes[0] > budget:
            return None
        low = left & -left
        for copy, mask in by_edge.get(low, []):
            if mask & left == mask:
                chosen.append(copy)
                found = dfs(left ^ mask, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    if host.num_edges % (s * t):
        return None
    return dfs(host.mask, [])


def c4_decomposition_packing(n: int, budget: int = None
                             ) -> Optional[Packing]:
    """Return a packing of ``K_n`` by 4-cycles covering every edge.

    For ``n = 9`` the cyclic decomposition generated by the 4-cycle
    ``0-1-5-3`` over ``Z_9`` is used; other orders fall back to an
    exact-cover search. Returns None when no decomposition is found.
    """
    host = SimpleGraph.complete(n)
    if n == 9:
        copies = []
        for i in range(9):
            a = sorted((i, (i + 5) % 9))
            b = sorted(((i + 1) % 9, (i + 3) % 9))
            X, Y = (a, b) if a[0] < b[0] else (b, a)
            copies.append(KstCopy(tuple(X), tuple(Y)))
    else:
        found = _exact_cover(host, 2, 2, get_budget(budget))
        if found is None:
            return None
        copies = found
    copies.sort()
    return Packing(host, tuple(copies), 2, 2, maximal=True)


def random_dense_packing(n: int, s: int, t: int, rng: Random) -> Packing:
    """Return random maximal packing of ``K_n`` with distinct interiors.

    Copies are tried in random order and kept when edge-disjoint from the
    packing and their interior is not used yet.
    """
    host = SimpleGraph.complete(n)
    candidates = copies_with_masks(host, s, t)
    if s == t:
        candidates = candidates + [(KstCopy(c.Y, c.X), mask)
                                   for c, mask in candidates]
    rng.shuffle(candidates)
    used = 0
    interiors = set()
    chosen = []
    for copy, mask in candidates:
        if not used & mask and copy.X not in interiors:
            chosen.append(copy)
            interiors.add(copy.X)
            used |= mask
    return Packing(host, tuple(sorted(chosen)), s, t, maximal=False)


# Lemma 1: colorings without rainbow K_{s,t} have no rainbow string-tie

def verify_lemma1(n: int, s: int, t: int, samples: int, max_len: int = 4,
                  seed: int = 0, threads: int = None,
                  palette: int = None) -> VerificationRun:
    """Search sampled rainbow-``K_{s,t}``-free colorings of ``K_n`` for
    rainbow ``K_{s,t-1}``-string-ties of base length ``<= max_len``.

    Odd samples start from the lower construction (``rich`` sampling).
    A tie needs at least ``2*s*(t-1) + s`` colors; samples with fewer colors
    are checked but not eligible, and a run without eligible samples is
    inconclusive.
    """
    _check_order(s, t)
    if t < 2:
        raise UnsupportedParameterError(
            'Need t >= 2 for K_{{s,t-1}} ties, got t={}'.format(t))
    threads = get_threads(threads)
    started = time.perf_counter()
    run = VerificationRun('lemma1', {'n': n, 's': s, 't': t,
                                     'max_len': max_len, 'seed': seed},
                          instances=samples)
    needed = 2 * s * (t - 1) + s

    def check(index: int) -> Tuple[EdgeColoring, Optional[Any]]:
        c = sample_rainbow_free_coloring(n, s, t, seed, palette, index,
                                         rich=index % 2 == 1)
        if c.num_colors < needed:
            return c, None
        return c, find_rainbow_string_tie(c, s, t - 1, max_len)

    for c, tie in map_ordered(check, range(samples), threads):
        run.checked += 1
        if c.num_colors >= needed:
            run.eligible += 1
        if tie is not None:
            run.outcome = FAIL
            run.counterexample = violation_certificate(
                'lemma1', run.params, tie_certificate(tie, c.host),
                coloring_certificate(c, s, t), base_length=tie.base.length)
            if tie.base.length >= 3:
                logger.warning('Rainbow tie found with base'
                               ' length {}'.format(tie.base.length))
            break
    else:
        if samples and not run.eligible:
            logger.warning('No sample has the {} colors a rainbow tie'
                           ' needs'.format(needed))
        run.outcome = PASS if run.eligible else INCONCLUSIVE
    return _finish(run, started)


# Lemma 2: rings contain string-ties

def _lemma2_instance(s: int, t: int, seed: int, index: int,
                     overlap_exteriors: bool
                     ) -> Tuple[str, Dict[str, Any]]:
    rng = instance_rng(seed, index)
    length = rng.randint(1, 4)
    ring, host = random_ring(s, t, length, rng, overlap_exteriors)
    cert = ring_certificate(ring, host)
    if not validate_ring(ring, host).valid:
        return 'bad-ring', cert
    try:
        tie = ring_to_string_tie(ring, host)
    except NotExtractableError as e:
        logger.warning('Ring instance {} of length {}: {}'.format(
            index, ring.length, e))
        cert['note'] = str(e)
        return INCONCLUSIVE, cert
    except HostNotCompleteError as e:
        cert['note'] = str(e)
        return FAIL, cert
    report = validate_string_tie(tie, host)
    if not report.valid:
        cert['note'] = str(report)
        cert['extracted'] = tie_certificate(tie, host)
        return FAIL, cert
    return PASS, cert


def verify_lemma2(s: int, t: int, instances: int, seed: int = 0,
                  overlap_exteriors: bool = False,
                  threads: int = None) -> VerificationRun:
    """Extract string-ties from random rings of ``K_{s,t}`` copies.

    Rings of length 1 and 2 have no string-tie and count as inconclusive.
    """
    check_interior(s)
    threads = get_threads(threads)
    started = time.perf_counter()
    run = VerificationRun('lemma2', {'s': s, 't': t, 'seed': seed,
                                     'overlap_exteriors': overlap_exteriors},
                          instances=instances)
    results = map_ordered(
        lambda i: _lemma2_instance(s, t, seed, i, overlap_exteriors),
        range(instances), threads)
    passed = 0
    for outcome, cert in results:
        if outcome == 'bad-ring':
            raise AssertionError('random_ring made an invalid ring: {}'
                                 .format(cert))
        run.checked += 1
        if outcome == FAIL:
            run.eligible += 1
            run.outcome = FAIL
            run.counterexample = violation_certificate('lemma2', run.params,
                                                       cert)
            break
        if outcome == INCONCLUSIVE:
            run.inconclusive.append(cert)
        else:
            passed += 1
            run.eligible += 1
    else:
        run.outcome = PASS if passed else INCONCLUSIVE
    return _finish(run, started)


# Lemma 3: dense packings contain rings

def _check_dense_packing(P: Packing) -> Optional[str]:
    """Return problem of the constructive part, or None."""
    report = validate_packing(P)
    if not report.valid:
        return 'invalid packing: {}'.format(report)
    F, _ = interior_path_multigraph(P)
    s = P.s
    if F.num_edges != P.k * (s - 1):
        return 'F has {} edges, expected {}'.format(F.num_edges,
                                                    P.k * (s - 1))
    simple = simplify_multigraph(F)
    if s == 2 and simple.num_edges < P.k:
        return 'simplified F has {} < k={} edges'.format(simple.num_edges,
                                                        P.k)
    ring = packing_to_ring(P)
    if ring is None:
        return 'no ring found for k={} > n-1'.format(P.k)
    ring_report = validate_ring(ring, P.host)
    if not ring_report.valid:
        return 'extracted ring is invalid: {}'.format(ring_report)
    return None


def _lemma3_numeric(n: int, s: int, t: int, rng: Random,
                    ex: List[Optional[ExtremalResult]],
                    budget: Optional[int]
                    ) -> Tuple[str, Optional[SimpleGraph], Optional[str]]:
    """Check ``e(G) <= ex + s*t*(n-1)`` on a random ``G`` without rings.

    The remainder ``G'`` (``G`` minus the packed edges) must be
    ``K_{s,t}``-free, and the packing must have at most ``n-1`` copies.
    Returns outcome, the graph unless it passed, and the failure reason.
    """
    host = SimpleGraph.complete(n)
    p = rng.uniform(0.3, 1.0)
    mask = sum(1 << i for i in range(host.num_edges) if rng.random() < p)
    G = SimpleGraph(n, mask)
    P = greedy_maximal_packing(G, s, t)
    if packing_to_ring(P) is not None:
        return PASS, None, None
    if P.k > n - 1:
        return FAIL, G, TOO_MANY_COPIES
    packed = 0
    for copy in P.copies:
        packed |= copy.edge_mask(n)
    if not kst_family(s, t).is_free(SimpleGraph(n, G.mask & ~packed)):
        return FAIL, G, REMAINDER_NOT_FREE
    slack = s * t * (n - 1)
    if G.num_edges <= slack:
        return PASS, None, None
    if ex[0] is None:
        ex[0] = turan_exact(n, kst_family(s, t), budget=budget)
    if G.num_edges <= ex[0].value + slack:
        return PASS, None, None
    return (FAIL if ex[0].exact else INCONCLUSIVE), G, EDGE_COUNT


def verify_lemma3(n: int, s: int, t: int, trials: int, seed: int = 0,
                  threads: int = None, budget: int = None
                  ) -> VerificationRun:
    """Check both parts of the packing lemma on ``K_n``.

    Constructive part: packings with ``k > n-1`` copies (random dense
    packings with distinct interiors, and the 4-cycle decomposition when
    ``s = t = 2``) yield a valid ring. Numeric part: for random subgraphs
    whose greedy maximal packing yields no ring,
    ``e(G) <= ex(K_n, K_{s,t}) + s*t*(n-1)``.
    """
    check_interior(s)
    threads = get_threads(threads)
    started = time.perf_counter()
    run = VerificationRun('lemma3', {'n': n, 's': s, 't': t, 'seed': seed},
                          instances=trials)
    if trials == 0:
        return _finish(run, started)

    packings = []  # type: List[Packing]
    if s == t == 2:
        decomposition = c4_decomposition_packing(n, budget)
        if decomposition is not None:
            packings.append(decomposition)
    packings.extend(random_dense_packing(n, s, t, instance_rng(seed, i))
                    for i in range(trials))
    dense = [P for P in packings if P.k > n - 1]
    problems = map_ordered(_check_dense_packing, dense, threads)
    for P, problem in zip(dense, problems):
        run.checked += 1
        run.eligible += 1
        if problem is not None:
            logger.error('Packing with k={}: {}'.format(P.k, problem))
            run.outcome = FAIL
            run.counterexample = violation_certificate(
                'lemma3', run.params, packing_certificate(P), note=problem)
            return _finish(run, started)

    ex = [None]  # type: List[Optional[ExtremalResult]]
    for i in range(trials):
        rng = instance_rng(seed, trials + i)
        outcome, G, reason = _lemma3_numeric(n, s, t, rng, ex, budget)
        run.checked += 1
        if outcome == INCONCLUSIVE and G is not None:
            run.inconclusive.append({'kind': 'graph', 'n': n, 's': s,
                                     't': t, 'host': to_graph6(G)})
            continue
        run.eligible += 1
        if outcome == FAIL and G is not None:
            logger.error('Graph with {} edges: {}'.format(G.num_edges,
                                                          reason))
            run.outcome = FAIL
            run.counterexample = violation_certificate(
                'lemma3', run.params, {'kind': 'graph', 'n': n,
                                       'host': to_graph6(G)},
                reason=reason, ex=ex[0].value if ex[0] else None)
            return _finish(run, started)
    run.outcome = PASS
    return _finish(run, started)


# Bound tables

def _bound_runs(reports: Sequence[BoundReport], s: int, t: int,
                witnesses: Dict[int, EdgeColoring]
                ) -> List[VerificationRun]:
    runs = []
    claims = (('sandwich', ('proposition', 'sandwich-lower',
                            'sandwich-upper')),
              ('theorem', ('theorem',)),
              ('corollary', ('corollary',)))
    for name, names in claims:
        run = VerificationRun(name, {'s': s, 't': t},
                              instances=len(reports))
        for report in reports:
            if not report.exact:
                run.inconclusive.append(report.as_row())
                continue
            run.checked += 1
            run.eligible += 1
            broken = [v for v in report.violations() if v in names]
            if broken:
                run.outcome = FAIL
                coloring = witnesses.get(report.n)
                run.counterexample = violation_certificate(
                    broken[0], dict(run.params, n=report.n),
                    coloring=coloring_certificate(coloring, s, t)
                    if coloring is not None else None,
                    row=report.as_row())
                break
        else:
            run.outcome = PASS if run.checked else INCONCLUSIVE
        runs.append(run)
    return runs


def verify_bounds(n_max: int, s: int, t: int, budget: int = None,
                  threads: int = None, n_min: int = None
                  ) -> Tuple[List[VerificationRun], List[BoundReport]]:
    """Compute bound rows for ``n_min .. n_max`` and check the inequalities.

    Rows start at ``n = s + t - 1`` (a vacuous host) unless ``n_min`` is
    given. Rows whose exact search exceeded the budget are reported but not
    checked.
    """
    _check_order(s, t)
    started = time.perf_counter()
    first = s + t - 1 if n_min is None else n_min
    reports = []
    witnesses = {}  # type: Dict[int, EdgeColoring]
    for n in range(first, n_max + 1):
        report = theorem_bound(n, s, t, budget=budget, threads=threads)
        if report.witness is not None:
            witnesses[n] = report.witness
        logger.info('n={}: lower={} ar={} upper_rep={} upper_thm={}'.format(
            n, report.lower, report.ar, report.upper_rep, report.upper_thm))
        reports.append(report)
    runs = _bound_runs(reports, s, t, witnesses)
    for run in runs:
        _finish(run, started)
    return runs, reports


def format_table(reports: Sequence[BoundReport], fmt: str = 'csv') -> str:
    """Return bound rows as CSV (LF endings, header line) or JSON."""
    rows = [report.as_row() for report in reports]
    if fmt == 'json':
        return json.dumps(rows, sort_keys=True, indent=2) + '\n'
    if fmt != 'csv':
        raise ValueError('Unknown table format: {}'.format(fmt))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_COLUMNS,
                            lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()

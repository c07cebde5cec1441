#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""JSON certificates of structures, extremal graphs, colorings and failures.

A certificate is a plain JSON object with a ``kind`` field. Serialization is
deterministic (sorted keys, no timings or node counts), so equal runs write
byte-identical files. :func:`verify_certificate` re-checks a certificate
from its content alone, with the validators of :mod:`arlab.structures` and
the VF2 based pattern check of :mod:`arlab.extremal`.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Union

from arlab.extremal import (ExtremalResult, family_from_dict, kst_family,
                            turan_exact)
from arlab.graph import (ArlabError, EdgeColoring, KstCopy, SimpleGraph,
                         has_rainbow_copy)
from arlab.parser import from_graph6, to_graph6
from arlab.structures import (HostNotCompleteError, KstRing, KstString,
                              NotExtractableError, Packing, StringTie,
                              greedy_maximal_packing, packing_to_ring,
                              ring_to_string_tie, validate_packing,
                              validate_ring, validate_string,
                              validate_string_tie)

__all__ = [
    'CertificateError',
    'CertificateCheck',
    'CLAIMS',
    'LEMMA3_REASONS',
    'TOO_MANY_COPIES',
    'REMAINDER_NOT_FREE',
    'EDGE_COUNT',
    'string_certificate',
    'ring_certificate',
    'tie_certificate',
    'packing_certificate',
    'extremal_certificate',
    'coloring_certificate',
    'violation_certificate',
    'inconclusive_certificate',
    'dumps',
    'write_certificate',
    'load_certificate',
    'check_certificate',
    'verify_certificate',
]

logger = logging.getLogger(__name__)

Document = Dict[str, Any]

#: Claims a violation certificate may refer to.
CLAIMS = ('lemma1', 'lemma2', 'lemma3', 'proposition', 'sandwich-lower',
          'sandwich-upper', 'theorem', 'corollary')

#: Reasons a numeric lemma 3 counterexample may give.
TOO_MANY_COPIES = 'too-many-copies'
REMAINDER_NOT_FREE = 'remainder-not-free'
EDGE_COUNT = 'edge-count'
LEMMA3_REASONS = (TOO_MANY_COPIES, REMAINDER_NOT_FREE, EDGE_COUNT)


class CertificateError(ArlabError):
    """Certificate file or document is malformed."""


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of :func:`check_certificate`."""

    kind: str
    messages: Sequence[str] = ()

    @property
    def valid(self) -> bool:
        return not self.messages

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return '{} certificate: valid'.format(self.kind)
        return '{} certificate: invalid\n  {}'.format(
            self.kind, '\n  '.join(self.messages))


def _host_fields(host: SimpleGraph) -> Document:
    return {'n': host.n, 'host': to_graph6(host)}


def _copies_field(copies: Sequence[KstCopy]) -> List[Dict[str, List[int]]]:
    return [copy.to_dict() for copy in copies]


def string_certificate(S: KstString, host: SimpleGraph) -> Document:
    doc = {'kind': 'string', 's': S.s, 't': S.t,
           'copies': _copies_field(S.copies)}
    doc.update(_host_fields(host))
    return doc


def ring_certificate(R: KstRing, host: SimpleGraph) -> Document:
    doc = string_certificate(R.string, host)
    doc['kind'] = 'ring'
    return doc


def tie_certificate(T: StringTie, host: SimpleGraph) -> Document:
    doc = string_certificate(T.base, host)
    doc.update(kind='tie', apex=T.apex, anchor=list(T.anchor), tail=T.tail)
    return doc


def packing_certificate(P: Packing) -> Document:
    doc = {'kind': 'packing', 's': P.s, 't': P.t, 'maximal': P.maximal,
           'copies': _copies_field(P.copies)}
    doc.update(_host_fields(P.host))
    return doc


def extremal_certificate(result: ExtremalResult) -> Document:
    """Certificate of a lower bound ``ex >= value`` (exact if flagged)."""
    return {
        'kind': 'extremal',
        'n': result.witness.n,
        'family': result.family.to_dict(),
        'value': result.value,
        'exact': result.exact,
        'witness': to_graph6(result.witness),
    }


def coloring_certificate(c: EdgeColoring, s: int, t: int) -> Document:
    """Certificate of a coloring without rainbow ``K_{s,t}``."""
    doc = {'kind': 'coloring', 's': s, 't': t, 'value': c.num_colors,
           'colors': list(c.colors)}
    doc.update(_host_fields(c.host))
    return doc


def violation_certificate(claim: str, params: Dict[str, Any],
                          counterexample: Document = None,
                          coloring: Document = None,
                          **extra: Any) -> Document:
    """Certificate of a failed claim.

    :arg str claim: one of :data:`CLAIMS`.
    :arg dict counterexample: nested certificate of the offending structure.
    :arg dict coloring: nested coloring certificate, when the claim is about
        colorings.
    """
    if claim not in CLAIMS:
        raise CertificateError('Unknown claim: {}'.format(claim))
    doc = {'kind': 'violation', 'claim': claim, 'params': dict(params)}
    if counterexample is not None:
        doc['counterexample'] = counterexample
    if coloring is not None:
        doc['coloring'] = coloring
    doc.update(extra)
    return doc


def inconclusive_certificate(instances: Sequence[Document]) -> Document:
    """Certificate listing instances a claim says nothing about."""
    return {'kind': 'inconclusive', 'instances': list(instances)}


def dumps(doc: Document) -> str:
    """Serialize deterministically; LF line endings, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + '\n'


def write_certificate(doc: Document, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(doc), encoding='utf-8')
    logger.info('Certificate written to {}'.format(path))


def load_certificate(path: Union[str, Path]) -> Document:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise CertificateError('Cannot read {}: {}'.format(path, e))
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise CertificateError('{} is not valid JSON: {}'.format(path, e))
    if not isinstance(doc, dict) or 'kind' not in doc:
        raise CertificateError('{} has no certificate object'.format(path))
    return doc


def _field(doc: Document, name: str) -> Any:
    try:
        return doc[name]
    except KeyError:
        raise CertificateError('{} certificate lacks field `{}`'.format(
            doc.get('kind', '?'), name))


def _host(doc: Document) -> SimpleGraph:
    if 'host' in doc:
        host = from_graph6(doc['host'])
        if 'n' in doc and doc['n'] != host.n:
            raise CertificateError('n={} but host has {} vertices'.format(
                doc['n'], host.n))
        return host
    return SimpleGraph.complete(int(_field(doc, 'n')))


def _copies(doc: Document) -> List[KstCopy]:
    return [KstCopy(tuple(c['X']), tuple(c['Y']))
            for c in _field(doc, 'copies')]


def _string(doc: Document) -> KstString:
    return KstString(tuple(_copies(doc)))


def _tie(doc: Document) -> StringTie:
    return StringTie(_string(doc), int(_field(doc, 'apex')),
                     tuple(_field(doc, 'anchor')), int(_field(doc, 'tail')))


def _packing(doc: Document) -> Packing:
    return Packing(_host(doc), tuple(_copies(doc)), int(_field(doc, 's')),
                   int(_field(doc, 't')), bool(doc.get('maximal', False)))


def _coloring(doc: Document) -> EdgeColoring:
    return EdgeColoring(_host(doc), tuple(_field(doc, 'colors')))


def _report_messages(report: Any) -> List[str]:
    if report.valid:
        return []
    return ['{}: {}'.format(report, detail) for detail in report.details] \
        or [str(report)]


def _check_string(doc: Document) -> List[str]:
    return _report_messages(validate_string(_string(doc), _host(doc)))


def _check_ring(doc: Document) -> List[str]:
    return _report_messages(
        validate_ring(KstRing(_string(doc)), _host(doc)))


def _check_tie(doc: Document) -> List[str]:
    return _report_messages(validate_string_tie(_tie(doc), _host(doc)))


def _check_packing(doc: Document) -> List[str]:
    return _report_messages(validate_packing(_packing(doc)))


def _check_extremal(doc: Document) -> List[str]:
    family = family_from_dict(_field(doc, 'family'))
    witness = from_graph6(_field(doc, 'witness'))
    messages = []
    if witness.n != _field(doc, 'n'):
        messages.append('witness has {} vertices, n={}'.format(
            witness.n, doc['n']))
    if witness.num_edges != _field(doc, 'value'):
        messages.append('witness has {} edges, value={}'.format(
            witness.num_edges, doc['value']))
    if not family.is_free(witness):
        messages.append('witness contains a forbidden pattern')
    return messages


def _check_coloring(doc: Document) -> List[str]:
    c = _coloring(doc)
    s, t = int(_field(doc, 's')), int(_field(doc, 't'))
    messages = []
    if c.num_colors != _field(doc, 'value'):
        messages.append('coloring uses {} colors, value={}'.format(
            c.num_colors, doc['value']))
    copy = has_rainbow_copy(c, s, t)
    if copy is not None:
        messages.append('rainbow K_{{{},{}}}: {}'.format(s, t, copy))
    return messages


def _check_lemma1(doc: Document) -> List[str]:
    coloring_doc = _field(doc, 'coloring')
    tie_doc = _field(doc, 'counterexample')
    c = _coloring(coloring_doc)
    tie = _tie(tie_doc)
    messages = []
    if tie.base.t != int(coloring_doc['t']) - 1:
        messages.append('tie exterior size {} is not t-1={}'.format(
            tie.base.t, int(coloring_doc['t']) - 1))
    if _host(tie_doc) != c.host:
        messages.append('tie host differs from coloring host')
    elif not c.is_rainbow(tie.edge_mask(c.host.n)):
        messages.append('tie is not rainbow under the coloring')
    return messages


def _check_lemma2(doc: Document) -> List[str]:
    ring_doc = _field(doc, 'counterexample')
    ring, host = KstRing(_string(ring_doc)), _host(ring_doc)
    try:
        tie = ring_to_string_tie(ring, host)
    except (NotExtractableError, HostNotCompleteError):
        return []
    if validate_string_tie(tie, host).valid:
        return ['extraction returns a valid tie; failure not reproduced']
    return []


def _check_lemma3(doc: Document) -> List[str]:
    inner = _field(doc, 'counterexample')
    messages = []
    if inner.get('kind') == 'packing':
        P = _packing(inner)
        if P.k <= P.host.n - 1:
            messages.append('packing has k={} <= n-1={}'.format(
                P.k, P.host.n - 1))
        ring = packing_to_ring(P)
        if ring is not None and validate_ring(ring, P.host).valid:
            messages.append('a valid ring is found; failure not reproduced')
        return messages
    # numeric part: a graph whose greedy packing yields no ring
    G = _host(inner)
    s, t = int(_field(doc['params'], 's')), int(_field(doc['params'], 't'))
    reason = doc.get('reason', EDGE_COUNT)
    if reason not in LEMMA3_REASONS:
        raise CertificateError('Unknown lemma3 reason: {}'.format(reason))
    P = greedy_maximal_packing(G, s, t)
    if packing_to_ring(P) is not None:
        messages.append('greedy packing of the graph yields a ring')
    if reason == TOO_MANY_COPIES:
        if P.k <= G.n - 1:
            messages.append('greedy packing has k={} <= n-1={}'.format(
                P.k, G.n - 1))
    elif reason == REMAINDER_NOT_FREE:
        packed = 0
        for copy in P.copies:
            packed |= copy.edge_mask(G.n)
        if kst_family(s, t).is_free(SimpleGraph(G.n, G.mask & ~packed)):
            messages.append('graph minus the packing is K_{{{},{}}}-free'
                            .format(s, t))
    else:
        ex = turan_exact(G.n, kst_family(s, t))
        if G.num_edges <= ex.value + s * t * (G.n - 1):
            messages.append('{} edges do not exceed ex + st(n-1) = {}'
                            .format(G.num_edges,
                                    ex.value + s * t * (G.n - 1)))
    return messages


def _check_inconclusive(doc: Document) -> List[str]:
    """Re-check that every listed instance is still undecided.

    Rings must be valid and have no extractable string-tie; graphs must have
    a ring-free greedy packing and more than ``s*t*(n-1)`` edges; bound
    rows must be inexact.
    """
    messages = []
    for i, inner in enumerate(_field(doc, 'instances')):
        kind = inner.get('kind')
        if kind == 'ring':
            ring, host = KstRing(_string(inner)), _host(inner)
            report = validate_ring(ring, host)
            if not report.valid:
                messages.append('instance {}: {}'.format(i, report))
                continue
            try:
                ring_to_string_tie(ring, host)
            except NotExtractableError:
                continue
            messages.append('instance {}: a string-tie is extracted'
                            .format(i))
        elif kind == 'graph':
            G = _host(inner)
            s, t = int(_field(inner, 's')), int(_field(inner, 't'))
            if packing_to_ring(greedy_maximal_packing(G, s, t)) is not None:
                messages.append('instance {}: greedy packing yields a ring'
                                .format(i))
            if G.num_edges <= s * t * (G.n - 1):
                messages.append('instance {}: {} edges are within'
                                ' st(n-1)'.format(i, G.num_edges))
        elif kind is None and 'exact' in inner:
            if inner['exact']:
                messages.append('instance {}: row n={} is exact'.format(
                    i, inner.get('n')))
        else:
            raise CertificateError(
                'instance {} has unknown kind {!r}'.format(i, kind))
    return messages


def _check_bound_claim(doc: Document) -> List[str]:
    row = _field(doc, 'row')
    claim = doc['claim']
    messages = []
    if 'coloring' in doc:
        if doc['coloring'].get('value') != row.get('ar'):
            messages.append('coloring value differs from row ar')
    holds = {
        'proposition': lambda: row['lower'] <= row['upper_rep'],
        'sandwich-lower': lambda: row['lower'] <= row['ar'],
        'sandwich-upper': lambda: row['ar'] <= row['upper_rep'],
        'theorem': lambda: row['ar'] <= row['upper_thm'],
        'corollary': lambda: row['ar'] <= float(row['upper_kst']),
    }  # type: Dict[str, Callable[[], bool]]
    if holds[claim]():
        messages.append('row satisfies {}; nothing is violated'.format(claim))
    return messages


def _check_violation(doc: Document) -> List[str]:
    claim = _field(doc, 'claim')
    if claim not in CLAIMS:
        raise CertificateError('Unknown claim: {}'.format(claim))
    messages = []
    for name in ('counterexample', 'coloring'):
        if name in doc and doc[name].get('kind') in _checkers:
            messages.extend('{}: {}'.format(name, m)
                            for m in _check(doc[name]))
    if claim == 'lemma1':
        messages.extend(_check_lemma1(doc))
    elif claim == 'lemma2':
        messages.extend(_check_lemma2(doc))
    elif claim == 'lemma3':
        messages.extend(_check_lemma3(doc))
    else:
        messages.extend(_check_bound_claim(doc))
    return messages


_checkers = {
    'string': _check_string,
    'ring': _check_ring,
    'tie': _check_tie,
    'packing': _check_packing,
    'extremal': _check_extremal,
    'coloring': _check_coloring,
    'violation': _check_violation,
    'inconclusive': _check_inconclusive,
}  # type: Dict[str, Callable[[Document], List[str]]]


def _check(doc: Document) -> List[str]:
    kind = doc.get('kind')
    if kind not in _checkers:
        raise CertificateError('Unknown certificate kind: {!r}'.format(kind))
    try:
        return _checkers[kind](doc)
    except CertificateError:
        raise
    except (ArlabError, ValueError, KeyError, TypeError) as e:
        return ['malformed {} certificate: {}'.format(kind, e)]


def check_certificate(doc: Document) -> CertificateCheck:
    """Re-check certificate document; never trusts recorded verdicts."""
    if not isinstance(doc, dict):
        raise CertificateError('Certificate must be a JSON object')
    return CertificateCheck(str(doc.get('kind')), tuple(_check(doc)))


def verify_certificate(source: Union[str, Path, Document]
                       ) -> CertificateCheck:
    """Load certificate from path (or take a document) and check it."""
    doc = source if isinstance(source, dict) else load_certificate(source)
    check = check_certificate(doc)
    logger.debug(str(check))
    return check


#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Command line interface of arlab.

Global options (``--seed``, ``--threads``, ``--budget``, ``--format``,
``--logging``, ``--debug``) are defined in :mod:`arlab.options` and may
appear anywhere on the command line. Exit status is 0 on pass, valid or
inconclusive results, 1 on a failed claim or invalid certificate and 2 on
usage or input errors.
"""

import logging
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import List, Optional, Sequence

from arlab import options
from arlab.antiramsey import ar_exact
from arlab.certificate import (CertificateError, coloring_certificate, dumps,
                               extremal_certificate, inconclusive_certificate,
                               verify_certificate, write_certificate)
from arlab.extremal import kst_family, minus_one_edge_family, turan_exact
from arlab.graph import ArlabError
from arlab.harness import (FAIL, VerificationRun, format_table,
                           sample_rainbow_free_coloring, verify_bounds,
                           verify_lemma1, verify_lemma2, verify_lemma3)
from arlab.parser import format_coloring

__all__ = ['main', 'verify_cert_main', 'build_parser']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _write(text: str, path: Optional[str] = None) -> None:
    if path:
        Path(path).write_text(text, encoding='utf-8')
        logger.info('Written to {}'.format(path))
    else:
        sys.stdout.write(text)


def _add_kst(parser: ArgumentParser, n: bool = True) -> None:
    if n:
        parser.add_argument('--n', type=int, required=True,
                            help='Number of host vertices.')
    parser.add_argument('--s', type=int, required=True,
                        help='Interior size of K_{s,t}.')
    parser.add_argument('--t', type=int, required=True,
                        help='Exterior size of K_{s,t}.')


def cmd_ex(args: Namespace) -> int:
    if args.family == 'minus-one-edge':
        family = minus_one_edge_family(args.s, args.t)
    else:
        family = kst_family(args.s, args.t)
    result = turan_exact(args.n, family, budget=options.get_budget(),
                         threads=options.get_threads())
    _write('ex(K_{}, {}{}) = {}{}\n'.format(
        args.n, family.name, tuple(family.params), result.value,
        '' if result.exact else ' (inexact: budget exceeded)'))
    if args.cert:
        write_certificate(extremal_certificate(result), args.cert)
    return EXIT_OK


def cmd_ar(args: Namespace) -> int:
    result = ar_exact(args.n, args.s, args.t, budget=options.get_budget(),
                      threads=options.get_threads())
    _write('AR(K_{}, K_{{{},{}}}) = {}{}\n'.format(
        args.n, args.s, args.t, result.value,
        '' if result.exact else ' (inexact: budget exceeded)'))
    if args.cert:
        write_certificate(coloring_certificate(result.witness, args.s,
                                               args.t), args.cert)
    return EXIT_OK


def _report_runs(runs: Sequence[VerificationRun], cert: Optional[str]
                 ) -> int:
    failed = [run for run in runs if run.outcome == FAIL]
    for run in runs:
        logger.info(run.summary())
    if cert:
        if failed:
            write_certificate(failed[0].counterexample or {}, cert)
        else:
            inconclusive = [c for run in runs for c in run.inconclusive]
            if inconclusive:
                write_certificate(inconclusive_certificate(inconclusive),
                                  cert)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bounds(args: Namespace) -> int:
    runs, reports = verify_bounds(args.n_max, args.s, args.t,
                                  budget=options.get_budget(),
                                  threads=options.get_threads(),
                                  n_min=args.n_min)
    _write(format_table(reports, options.config.format), args.csv)
    return _report_runs(runs, args.cert)


def cmd_verify(args: Namespace) -> int:
    seed = options.config.seed
    threads = options.get_threads()
    if args.lemma == 'lemma1':
        run = verify_lemma1(args.n, args.s, args.t, args.count,
                            max_len=args.max_len, seed=seed,
                            threads=threads)
    elif args.lemma == 'lemma2':
        run = verify_lemma2(args.s, args.t, args.count, seed=seed,
                            overlap_exteriors=args.overlap_exteriors,
                            threads=threads)
    else:
        run = verify_lemma3(args.n, args.s, args.t, args.count, seed=seed,
                            threads=threads, budget=options.get_budget())
    _write(dumps(run.to_dict()))
    return _report_runs([run], args.cert)


def cmd_verify_cert(args: Namespace) -> int:
    check = verify_certificate(args.file)
    _write(str(check) + '\n')
    return EXIT_OK if check.valid else EXIT_FAIL


def cmd_sample_coloring(args: Namespace) -> int:
    coloring = sample_rainbow_free_coloring(
        args.n, args.s, args.t, options.config.seed, palette=args.palette,
        index=args.index)
    _write(format_coloring(coloring), args.out)
    return EXIT_OK


def build_parser() -> ArgumentParser:
    """Return parser of sub-commands; global options come from options."""
    parser = ArgumentParser(
        prog='arlab', parents=[options.parser], allow_abbrev=False,
        description='Exact Turan and anti-Ramsey numbers of complete'
        ' bipartite graphs, and checks of the string lemmas.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    ex = sub.add_parser('ex', allow_abbrev=False,
                        help='exact ex(K_n, K_{s,t}) or ex(K_n, K_{s,t} - e)')
    _add_kst(ex)
    ex.add_argument('--family', choices=['kst', 'minus-one-edge'],
                    default='kst', help='Forbidden pattern (default: kst).')
    ex.add_argument('--cert', help='Write extremal certificate to file.')
    ex.set_defaults(func=cmd_ex)

    ar = sub.add_parser('ar', allow_abbrev=False,
                        help='exact AR(K_n, K_{s,t})')
    _add_kst(ar)
    ar.add_argument('--cert', help='Write coloring certificate to file.')
    ar.set_defaults(func=cmd_ar)

    bounds = sub.add_parser('bounds', allow_abbrev=False,
                            help='table of bounds for n up to N')
    bounds.add_argument('--n-max', '--n', dest='n_max', type=int,
                        required=True, help='Largest host order.')
    bounds.add_argument('--n-min', type=int, default=None,
                        help='Smallest host order (default: s+t-1).')
    _add_kst(bounds, n=False)
    bounds.add_argument('--csv', help='Write table to file.')
    bounds.add_argument('--cert', help='Write certificate of a failure.')
    bounds.set_defaults(func=cmd_bounds)

    verify = sub.add_parser('verify', allow_abbrev=False,
                            help='check a string lemma on sampled instances')
    verify.add_argument('lemma', choices=['lemma1', 'lemma2', 'lemma3'])
    verify.add_argument('--n', type=int, default=None,
                        help='Host order (lemma1, lemma3).')
    verify.add_argument('--s', type=int, required=True)
    verify.add_argument('--t', type=int, required=True,
                        help='Exterior size (t for lemma1, t\' otherwise).')
    verify.add_argument('--samples', '--instances', '--trials',
                        dest='count', type=int, default=100,
                        help='Number of sampled instances (default: 100).')
    verify.add_argument('--max-len', type=int, default=4,
                        help='Longest tie base searched (default: 4).')
    verify.add_argument('--overlap-exteriors', action='store_true',
                        help='Let ring exteriors share vertices (lemma2).')
    verify.add_argument('--cert', help='Write counterexample or'
                        ' inconclusive instances to file.')
    verify.set_defaults(func=cmd_verify)

    cert = sub.add_parser('verify-cert', allow_abbrev=False,
                          help='re-check a certificate file')
    cert.add_argument('file')
    cert.set_defaults(func=cmd_verify_cert)

    sample = sub.add_parser('sample-coloring', allow_abbrev=False,
                            help='sample coloring without rainbow K_{s,t}')
    _add_kst(sample)
    sample.add_argument('--palette', type=int, default=None,
                        help='Number of initial colors (default: random).')
    sample.add_argument('--index', type=int, default=0,
                        help='Instance number in the seeded stream.')
    sample.add_argument('--out', help='Write coloring text to file.')
    sample.set_defaults(func=cmd_sample_coloring)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run arlab command line; return exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    _, rest = options.split_command_line(argv)
    parser = build_parser()
    args = parser.parse_args(rest)
    if args.command == 'verify' and args.lemma != 'lemma2' and \
            args.n is None:
        parser.error('verify {} needs --n'.format(args.lemma))
    try:
        return args.func(args)
    except CertificateError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (ArlabError, ValueError) as e:
        logger.error('{}: {}'.format(type(e).__name__, e))
        return EXIT_USAGE


def verify_cert_main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the standalone ``verify-cert`` command."""
    argv = sys.argv[1:] if argv is None else list(argv)
    return main(['verify-cert'] + argv)

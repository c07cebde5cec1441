#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from cProfile import Profile
from pstats import Stats

from arlab.antiramsey import ar_exact
from arlab.extremal import kst_family, turan_exact
from arlab.util import suppress_logging

suppress_logging()

if __name__ == '__main__':
    profiler = Profile()
    profiler.runcall(turan_exact, 9, kst_family(2, 2))
    profiler.runcall(ar_exact, 5, 2, 2)
    stats = Stats(profiler)
    stats.strip_dirs()
    stats.sort_stats('cumulative')
    stats.print_stats(30)

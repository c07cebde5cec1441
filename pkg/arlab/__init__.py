#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""ARLAB: exact anti-Ramsey and Turan numbers for complete bipartite graphs."""

__version__ = '0.1.0'

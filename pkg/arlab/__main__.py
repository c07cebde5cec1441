#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Run ``python -m arlab``."""

import sys

from arlab.cli import main

if __name__ == '__main__':
    sys.exit(main())

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import sys
from os import path
import subprocess

from parameterized import parameterized

from .base import TestCase

root = path.dirname(path.dirname(path.abspath(__file__)))

cases = [
    ('arlab', 'antiramsey'),
    ('arlab', 'certificate'),
    ('arlab', 'cli'),
    ('arlab', 'extremal'),
    ('arlab', 'graph'),
    ('arlab', 'harness'),
    ('arlab', 'options'),
    ('arlab', 'parser'),
    ('arlab', 'search'),
    ('arlab', 'structures'),
    ('arlab', 'util'),
]


def run_python(cmd):
    return subprocess.run(
        [sys.executable, '-c', cmd],
        stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT,
        cwd=root,
    )


class TestImportModules(TestCase):
    @parameterized.expand(cases)
    def test_import(self, from_, import_):
        cmd = 'from {0} import {1}\nlist(vars({1}).items())'
        proc = run_python(cmd.format(from_, import_))
        if proc.returncode != 0:
            print(proc.stdout.decode())
        self.assertEqual(proc.returncode, 0)

    def test_arlab_import(self):
        proc = run_python('import arlab\nlist(vars(arlab).items())')
        if proc.returncode != 0:
            print(proc.stdout.decode())
        self.assertEqual(proc.returncode, 0)

    @parameterized.expand(cases)
    def test_all(self, from_, import_):
        # every name in __all__ exists
        cmd = ('from {0} import {1}\n'
               'missing = [n for n in getattr({1}, "__all__", ())\n'
               '           if not hasattr({1}, n)]\n'
               'assert not missing, missing')
        proc = run_python(cmd.format(from_, import_))
        if proc.returncode != 0:
            print(proc.stdout.decode())
        self.assertEqual(proc.returncode, 0)

    def test_main_help(self):
        proc = run_python('import sys; sys.argv = ["arlab", "--help"]\n'
                          'import runpy; runpy.run_module("arlab",'
                          ' run_name="__main__")')
        self.assertEqual(proc.returncode, 0)
        self.assertIn(b'verify-cert', proc.stdout)

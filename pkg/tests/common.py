"""
Common use helpers and utilities for all tests to leverage.
Not so disorganized as a "utils" module and not so refined as a public package.
"""
import inspect
import math
import os

import numpy as np

from prsim.graph import Graph
from prsim.graphgen import GenSpec, gen_er, gen_star

# constants

DECAY = 0.6
SQRT_C = math.sqrt(DECAY)

# end constants


def triangle_dag():
    """0 -> 1, 0 -> 2, 1 -> 2"""
    return Graph.from_edges([0, 0, 1], [1, 2, 2])


def two_node():
    """0 -> 1"""
    return Graph.from_edges([0], [1])


def two_cycle():
    """0 -> 1, 1 -> 0"""
    return Graph.from_edges([0, 1], [1, 0])


def star(n=50):
    """1 -> {2..n}, with original ids 1..n"""
    return gen_star(n)


def random_graph(n, p, seed):
    return gen_er(GenSpec("er", n, p=p, seed=seed))


def std_error(p, trials):
    """standard error of a mean of `trials` Bernoulli(p) draws"""
    return math.sqrt(max(p * (1 - p), 1e-12) / trials)


def dense_rppr(rppr, n):
    """RpprVector levels as a (levels, n) array"""
    out = np.zeros((len(rppr.levels), n))
    for level, values in enumerate(rppr.levels):
        for u, x in values.items():
            out[level, u] = x
    return out


def fixture_path(filename):
    """
    absolute path of a file in a `fixture_data` directory, adjacent to the
    current (calling) module

    i.e. in a dir like this:
      path/to/tests
      ├── test_mod.py
      └── fixture_data
          └── star.tsv

    you can call
    >>> fixture_path('star.tsv')

    in `test_mod.py` and get the abspath to star.tsv
    """
    # get calling frame
    frm = inspect.stack()[1]
    # get filename from frame, make it absolute
    modpath = os.path.abspath(frm[1])
    return os.path.join(os.path.dirname(modpath), "fixture_data", filename)

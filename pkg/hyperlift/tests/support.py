# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
import os
import unittest  # NOQA

from hyperlift.colorings import HyperedgeColoring, coloring_from_rule


TESTS_DIR = os.path.dirname(__file__)
TEST_INI = os.path.join(TESTS_DIR, 'test_hyperlift.ini')


def triangle_coloring(n, rule):
    """A 3-colored graph on n vertices, colored by rule(i, j) for i < j."""
    return coloring_from_rule(n, 2, 3, lambda e: rule(e[0], e[1]))


def flipped(f, e, value):
    """Copy of f with the hyperedge e recolored to value."""
    values = list(f.values)
    values[list(f.hyperedges()).index(tuple(e))] = value
    return HyperedgeColoring(f.n, f.r, f.q, values)

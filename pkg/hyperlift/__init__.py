# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Hypergraph lifting maps over finite fields.

The lifting map sends an s-uniform hyperedge coloring f of K_n to the
r-uniform coloring whose value on each r-set e is the sum of f over the
s-subsets of e.  This package realizes it as a linear transformation,
checks its structural properties at small scale, and builds certified
lower-bound colorings for 3-uniform hypergraph Ramsey numbers.

"""
import logging


__version__ = '0.3.0'

logger = logging.getLogger('hyperlift')

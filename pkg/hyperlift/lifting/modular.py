# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Dense rows over an odd prime field, held in a numpy array.
"""
import numpy as np
from zope.interface import implementer

from hyperlift.lifting import IRowReducer
from hyperlift.field import prime_field_ops


@implementer(IRowReducer)
class ModularRows(object):
    """IRowReducer over F_q using vectorized row operations."""

    def __init__(self, matrix, q, rhs=None):
        self.field = prime_field_ops(q)
        self.q = q
        rows = np.array(matrix, dtype=np.int64) % q
        self.nrows, self.ncols = rows.shape
        if rhs is not None:
            column = np.asarray(rhs, dtype=np.int64).reshape(-1, 1) % q
            rows = np.hstack([rows, column])
        self.rows = rows

    def find_pivot(self, col, start):
        nonzero = np.flatnonzero(self.rows[start:, col])
        if nonzero.size == 0:
            return None
        return start + int(nonzero[0])

    def swap(self, i, j):
        if i != j:
            self.rows[[i, j]] = self.rows[[j, i]]

    def normalize(self, i, col):
        inverse = self.field.inv(int(self.rows[i, col]))
        self.rows[i] = (self.rows[i] * inverse) % self.q

    def clear_column(self, pivot, col):
        factors = self.rows[:, col].copy()
        factors[pivot] = 0
        self.rows = (self.rows - np.outer(factors, self.rows[pivot])) % self.q

    def entry(self, i, j):
        return int(self.rows[i, j])

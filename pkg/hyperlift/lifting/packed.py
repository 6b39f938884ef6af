# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Bit-packed F_2 rows.

Each row is a Python int whose bit j is the entry in column j, so adding
one row to another is a single XOR however wide the matrix is.
"""
import numpy as np
from zope.interface import implementer

from hyperlift.lifting import IRowReducer


@implementer(IRowReducer)
class PackedBinaryRows(object):
    """IRowReducer over F_2 with int bitset rows."""

    def __init__(self, matrix, rhs=None):
        matrix = np.asarray(matrix, dtype=np.uint8) & 1
        self.nrows, self.ncols = matrix.shape
        packed = np.packbits(matrix, axis=1, bitorder="little")
        self.rows = [int.from_bytes(row.tobytes(), "little") for row in packed]
        if rhs is not None:
            flag = 1 << self.ncols
            self.rows = [row | flag if bit % 2 else row
                         for row, bit in zip(self.rows, rhs)]

    def find_pivot(self, col, start):
        mask = 1 << col
        for i in range(start, self.nrows):
            if self.rows[i] & mask:
                return i
        return None

    def swap(self, i, j):
        if i != j:
            self.rows[i], self.rows[j] = self.rows[j], self.rows[i]

    def normalize(self, i, col):
        # A nonzero F_2 entry is already 1.
        pass

    def clear_column(self, pivot, col):
        mask = 1 << col
        pivot_row = self.rows[pivot]
        rows = self.rows
        for i in range(self.nrows):
            if i != pivot and rows[i] & mask:
                rows[i] ^= pivot_row

    def entry(self, i, j):
        return (self.rows[i] >> j) & 1

# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
The lifting map Psi_{q,n}^{(s,r)} and its linear algebra.

apply_lift() evaluates the map by streaming over the s-subsets of every
r-set.  Everything that needs the map as a matrix (rank, kernel, image
membership, preimage counts) goes through one Gaussian elimination,
row_reduce(), which runs on an IRowReducer.  There are two of those:
PackedBinaryRows for F_2 and ModularRows for odd primes.
"""
import logging
import functools
from collections import namedtuple

import numpy as np
from zope.interface import Interface, Attribute

from hyperlift.colorings import HyperedgeColoring
from hyperlift.exceptions import (HyperliftError, ShapeError, RangeError,
                                  DomainError, ResourceLimitError)
from hyperlift.field import prime_field_ops
from hyperlift.subsets import MAX_WIDTH, binom, colex_rank, subsets_iter


logger = logging.getLogger("hyperlift.lifting")

DEFAULT_MAX_ROWS = 200000
DEFAULT_WEIGHT_BUDGET = 2 ** 20

# Coefficient vectors enumerated per numpy batch when walking a kernel.
_SPAN_CHUNK = 1 << 15


class IRowReducer(Interface):
    """Interface for the row storage used by Gaussian elimination.

    Rows are the equations of the system M.x = g, one per target
    hyperedge.  Columns 0..ncols-1 hold coefficients; when the reducer was
    built with a right-hand side, column ncols holds it.
    """

    nrows = Attribute("Number of rows.")
    ncols = Attribute("Number of coefficient columns.")

    def find_pivot(col, start):
        """Return the first row index >= start that is nonzero in col.

        Returns None if every such row has a zero in that column.
        """

    def swap(i, j):
        """Exchange rows i and j."""

    def normalize(i, col):
        """Scale row i so that its entry in column col becomes 1."""

    def clear_column(pivot, col):
        """Zero column col in every row other than pivot.

        This is done by subtracting multiples of the pivot row, whose entry
        in col must already be 1.
        """

    def entry(i, j):
        """Return the entry of row i in column j as an int."""


class LiftSpec(namedtuple("LiftSpec", "q n s r")):
    """Identifies the lifting map Psi_{q,n}^{(s,r)}."""

    __slots__ = ()

    def __new__(cls, q, n, s, r):
        q, n, s, r = int(q), int(n), int(s), int(r)
        prime_field_ops(q)
        if not 2 <= s < r <= n:
            raise ShapeError("lifting needs 2 <= s < r <= n, got s=%d r=%d n=%d"
                             % (s, r, n))
        if n > MAX_WIDTH:
            raise RangeError("at most %d vertices are supported" % MAX_WIDTH)
        return super(LiftSpec, cls).__new__(cls, q, n, s, r)

    @property
    def source_dim(self):
        return binom(self.n, self.s)

    @property
    def target_dim(self):
        return binom(self.n, self.r)

    def __str__(self):
        return "Psi_{%d,%d}^(%d,%d)" % (self.q, self.n, self.s, self.r)


KernelSummary = namedtuple("KernelSummary",
                           "rank kernel_dim kernel_basis preimage_count")


@functools.lru_cache(maxsize=64)
def _incidence(spec):
    # For each r-set, in colex order, the colex ranks of its s-subsets.
    return tuple(tuple(colex_rank(sub) for sub in subsets_iter(e, spec.s))
                 for e in subsets_iter(range(spec.n), spec.r))


def _check_source(spec, f):
    if (f.n, f.r, f.q) != (spec.n, spec.s, spec.q):
        raise ShapeError("%s needs an n=%d s=%d q=%d coloring, got %r"
                         % (spec, spec.n, spec.s, spec.q, f))


def _check_target(spec, g):
    if (g.n, g.r, g.q) != (spec.n, spec.r, spec.q):
        raise ShapeError("%s maps to n=%d r=%d q=%d colorings, got %r"
                         % (spec, spec.n, spec.r, spec.q, g))


def apply_lift(spec, f):
    """Return Psi f: each r-set gets the sum of f over its s-subsets."""
    _check_source(spec, f)
    q = spec.q
    values = f.values
    lifted = [sum(values[i] for i in sources) % q
              for sources in _incidence(spec)]
    return HyperedgeColoring(spec.n, spec.r, q, lifted)


def lift_matrix(spec, max_rows=DEFAULT_MAX_ROWS):
    """Return the C(n,r) x C(n,s) 0/1 matrix of the lifting map."""
    if spec.target_dim > max_rows:
        raise ResourceLimitError(
            "%s has %d rows, above the limit of %d; raise max_matrix_rows "
            "or use a smaller n" % (spec, spec.target_dim, max_rows))
    matrix = np.zeros((spec.target_dim, spec.source_dim), dtype=np.uint8)
    for i, sources in enumerate(_incidence(spec)):
        matrix[i, list(sources)] = 1
    return matrix


def matrix_apply(spec, matrix, f):
    """Compute matrix . f over F_q as an r-uniform coloring."""
    _check_source(spec, f)
    vector = np.asarray(f.values, dtype=np.int64)
    product = matrix.astype(np.int64).dot(vector) % spec.q
    return HyperedgeColoring(spec.n, spec.r, spec.q, product.tolist())


def get_row_reducer(matrix, q, rhs=None):
    """Return the IRowReducer suited to F_q, loaded with a copy of matrix."""
    if q == 2:
        from hyperlift.lifting.packed import PackedBinaryRows
        return PackedBinaryRows(matrix, rhs)
    from hyperlift.lifting.modular import ModularRows
    return ModularRows(matrix, q, rhs)


def row_reduce(rows):
    """Bring rows into reduced row echelon form in place.

    The pivot for each column is the first remaining row with a nonzero
    entry there, so the result is deterministic.  Returns the list of pivot
    columns; pivot i sits in row i.
    """
    pivots = []
    pivot_row = 0
    for col in range(rows.ncols):
        if pivot_row == rows.nrows:
            break
        found = rows.find_pivot(col, pivot_row)
        if found is None:
            continue
        rows.swap(pivot_row, found)
        rows.normalize(pivot_row, col)
        rows.clear_column(pivot_row, col)
        pivots.append(col)
        pivot_row += 1
    return pivots


def _reduce(spec, rhs=None, max_rows=DEFAULT_MAX_ROWS):
    rows = get_row_reducer(lift_matrix(spec, max_rows), spec.q, rhs)
    pivots = row_reduce(rows)
    logger.debug("%s: rank %d after elimination", spec, len(pivots))
    return rows, pivots


@functools.lru_cache(maxsize=64)
def rank_kernel(spec, max_rows=DEFAULT_MAX_ROWS):
    """Rank, kernel dimension, kernel basis and preimage count of spec."""
    rows, pivots = _reduce(spec, max_rows=max_rows)
    q = spec.q
    pivot_set = set(pivots)
    zero = _zero(spec.n, spec.r, q)
    basis = []
    for free in range(spec.source_dim):
        if free in pivot_set:
            continue
        values = [0] * spec.source_dim
        values[free] = 1
        for i, col in enumerate(pivots):
            values[col] = (-rows.entry(i, free)) % q
        vector = HyperedgeColoring(spec.n, spec.s, q, values)
        if apply_lift(spec, vector) != zero:
            raise HyperliftError("kernel vector for free column %d of %s "
                                 "does not lift to zero" % (free, spec))
        basis.append(vector)
    kernel_dim = len(basis)
    return KernelSummary(rank=len(pivots), kernel_dim=kernel_dim,
                         kernel_basis=tuple(basis),
                         preimage_count=q ** kernel_dim)


def _zero(n, r, q):
    return HyperedgeColoring(n, r, q, [0] * binom(n, r))


def solve_preimage(spec, g, max_rows=DEFAULT_MAX_ROWS):
    """Return some f with Psi f = g, or None if g is not in the image.

    Free variables of the elimination are set to 0, so the answer is the
    same on every run.
    """
    _check_target(spec, g)
    rows, pivots = _reduce(spec, rhs=g.values, max_rows=max_rows)
    aug = rows.ncols
    for i in range(len(pivots), rows.nrows):
        if rows.entry(i, aug):
            logger.debug("%s: target is inconsistent at row %d", spec, i)
            return None
    values = [0] * spec.source_dim
    for i, col in enumerate(pivots):
        values[col] = rows.entry(i, aug)
    return HyperedgeColoring(spec.n, spec.s, spec.q, values)


def preimage_count(spec, g, max_rows=DEFAULT_MAX_ROWS):
    """Number of colorings lifting to g: 0 or q^kernel_dim."""
    if solve_preimage(spec, g, max_rows) is None:
        return 0
    return rank_kernel(spec, max_rows).preimage_count


def _check_budget(spec, summary, budget):
    if summary.preimage_count > budget:
        raise ResourceLimitError(
            "ker %s has %d elements, above the budget of %d; raise "
            "kernel_weight_budget or use a smaller n"
            % (spec, summary.preimage_count, budget))


def _kernel_chunks(spec, budget, max_rows):
    summary = rank_kernel(spec, max_rows)
    _check_budget(spec, summary, budget)
    q, k = spec.q, summary.kernel_dim
    if k == 0:
        yield np.zeros((1, spec.source_dim), dtype=np.int64)
        return
    basis = np.array([v.values for v in summary.kernel_basis],
                     dtype=np.int64)
    powers = q ** np.arange(k, dtype=np.int64)
    total = q ** k
    for start in range(0, total, _SPAN_CHUNK):
        index = np.arange(start, min(total, start + _SPAN_CHUNK),
                          dtype=np.int64)
        coefficients = (index[:, None] // powers[None, :]) % q
        yield coefficients.dot(basis) % q


def kernel_elements(spec, budget=DEFAULT_WEIGHT_BUDGET,
                    max_rows=DEFAULT_MAX_ROWS):
    """Yield every element of the kernel of spec, the zero vector first."""
    for chunk in _kernel_chunks(spec, budget, max_rows):
        for row in chunk:
            yield HyperedgeColoring(spec.n, spec.s, spec.q, row.tolist())


def min_kernel_weight(spec, budget=DEFAULT_WEIGHT_BUDGET,
                      max_rows=DEFAULT_MAX_ROWS):
    """Minimum Hamming weight of a nonzero kernel vector.

    Two colorings with the same lift differ by a kernel vector, so this is
    the least number of hyperedges on which such colorings can differ.
    Raises DomainError when the kernel is trivial.
    """
    best = None
    for chunk in _kernel_chunks(spec, budget, max_rows):
        weights = np.count_nonzero(chunk, axis=1)
        weights = weights[weights > 0]
        if weights.size:
            low = int(weights.min())
            best = low if best is None else min(best, low)
    if best is None:
        raise DomainError("ker %s is trivial, so it has no nonzero vector"
                          % (spec,))
    logger.debug("%s: minimum kernel weight %d", spec, best)
    return best


__all__ = ["IRowReducer", "LiftSpec", "KernelSummary", "DEFAULT_MAX_ROWS",
           "DEFAULT_WEIGHT_BUDGET", "apply_lift", "lift_matrix",
           "matrix_apply", "get_row_reducer", "row_reduce", "rank_kernel",
           "solve_preimage", "preimage_count", "kernel_elements",
           "min_kernel_weight"]

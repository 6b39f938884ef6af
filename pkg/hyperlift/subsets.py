# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Binomial coefficients and colex ranking of k-subsets.

Colex order compares subsets by their largest elements first, so the rank
of a subset does not depend on the size of the ground set.  Every coloring
vector and every lifting matrix column in hyperlift is indexed this way.
"""
import math
import functools

from hyperlift.exceptions import RangeError


# Largest n (and k) accepted by binom().
MAX_WIDTH = 64


class VertexSet(tuple):
    """A strictly increasing tuple of non-negative vertex indices."""

    def __new__(cls, members=()):
        members = tuple(int(v) for v in members)
        for i, v in enumerate(members):
            if v < 0:
                raise RangeError("negative vertex %d" % (v,))
            if i and members[i - 1] >= v:
                raise RangeError("vertices must be strictly increasing: %r"
                                 % (members,))
        return super(VertexSet, cls).__new__(cls, members)

    @classmethod
    def of(cls, members):
        """Build a VertexSet from any iterable, sorting it first."""
        return cls(sorted(set(members)))

    @property
    def members(self):
        return tuple(self)

    def check_within(self, n):
        if self and self[-1] >= n:
            raise RangeError("vertex %d outside [0, %d)" % (self[-1], n))
        return self

    def __repr__(self):
        return "{%s}" % (",".join(str(v) for v in self),)


@functools.lru_cache(maxsize=None)
def binom(n, k):
    """Return C(n, k), which is 0 when k > n."""
    if n < 0 or k < 0:
        raise RangeError("binom is defined for non-negative inputs only")
    if n > MAX_WIDTH or k > MAX_WIDTH:
        raise RangeError("binom(%d, %d) exceeds the supported width %d"
                         % (n, k, MAX_WIDTH))
    return math.comb(n, k)


def colex_rank(s):
    """Return the colex rank of the subset s among subsets of its size."""
    if not s:
        raise RangeError("cannot rank the empty set")
    return sum(binom(v, i + 1) for i, v in enumerate(s))


def _largest_below(idx, k):
    # Greatest c with binom(c, k) <= idx: gallop, then bisect.
    lo = k - 1
    hi = max(k, 1)
    while binom(hi, k) <= idx:
        lo, hi = hi, min(2 * hi, MAX_WIDTH)
        if lo == MAX_WIDTH:
            raise RangeError("rank %d too large for %d-subsets" % (idx, k))
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, k) <= idx:
            lo = mid
        else:
            hi = mid
    return lo


def colex_unrank(idx, k):
    """Return the k-subset whose colex rank is idx."""
    if idx < 0:
        raise RangeError("rank must be non-negative")
    if k < 1:
        raise RangeError("subset size must be positive")
    members = [0] * k
    for i in range(k, 0, -1):
        c = _largest_below(idx, i)
        members[i - 1] = c
        idx -= binom(c, i)
    return VertexSet(members)


def _colex_positions(m, k):
    if k == 0:
        yield ()
        return
    for top in range(k - 1, m):
        for rest in _colex_positions(top, k - 1):
            yield rest + (top,)


def subsets_iter(superset, k):
    """Yield the k-subsets of superset in colex order of positions.

    Nothing is yielded when k exceeds the size of superset.
    """
    superset = tuple(superset)
    if k < 1:
        raise RangeError("subset size must be positive")
    if k > len(superset):
        return
    for positions in _colex_positions(len(superset), k):
        yield VertexSet(superset[p] for p in positions)


def all_subsets(n, k):
    """Yield every k-subset of range(n); the i-th one has colex rank i."""
    return subsets_iter(range(n), k)


def pair_parity(u, r):
    """Parity of C(u, 2) + C(r - u, 2), the edge count of two cliques."""
    if u < 0 or u >= r:
        raise RangeError("pair_parity needs 0 <= u < r, got u=%d r=%d"
                         % (u, r))
    return (binom(u, 2) + binom(r - u, 2)) % 2

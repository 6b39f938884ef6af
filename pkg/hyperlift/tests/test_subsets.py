# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
import itertools

from testfixtures import ShouldRaise

from hyperlift.exceptions import RangeError
from hyperlift.subsets import (VertexSet, binom, colex_rank, colex_unrank,
                               subsets_iter, all_subsets, pair_parity)
from hyperlift.tests.support import unittest


class TestBinom(unittest.TestCase):

    def test_small_values(self):
        self.assertEqual(binom(5, 2), 10)
        self.assertEqual(binom(3, 2), 3)
        self.assertEqual(binom(2, 3), 0)
        self.assertEqual(binom(0, 0), 1)

    def test_full_width_is_exact(self):
        self.assertEqual(binom(64, 32), 1832624140942590534)

    def test_width_is_limited(self):
        with ShouldRaise(RangeError):
            binom(65, 2)
        with ShouldRaise(RangeError):
            binom(-1, 0)


class TestColexRanking(unittest.TestCase):

    def test_rank(self):
        self.assertEqual(colex_rank(VertexSet([0, 1])), 0)
        self.assertEqual(colex_rank(VertexSet([1, 2])), 2)
        self.assertEqual(colex_rank(VertexSet([0, 1, 2])), 0)
        self.assertEqual(colex_rank(VertexSet([3, 4])), 9)

    def test_unrank(self):
        self.assertEqual(colex_unrank(0, 2), (0, 1))
        self.assertEqual(colex_unrank(2, 2), (1, 2))
        self.assertEqual(colex_unrank(9, 2), (3, 4))

    def test_round_trip(self):
        for k in range(1, 7):
            for idx in range(binom(12, k)):
                self.assertEqual(colex_rank(colex_unrank(idx, k)), idx)

    def test_unrank_near_the_width_limit(self):
        top = VertexSet([60, 61, 62, 63])
        self.assertEqual(colex_unrank(colex_rank(top), 4), top)

    def test_empty_set_has_no_rank(self):
        with ShouldRaise(RangeError):
            colex_rank(VertexSet())


class TestVertexSet(unittest.TestCase):

    def test_must_increase(self):
        with ShouldRaise(RangeError):
            VertexSet([2, 1])
        with ShouldRaise(RangeError):
            VertexSet([1, 1])
        self.assertEqual(VertexSet.of([2, 1, 2]), (1, 2))

    def test_check_within(self):
        VertexSet([0, 4]).check_within(5)
        with ShouldRaise(RangeError):
            VertexSet([0, 5]).check_within(5)

    def test_repr(self):
        self.assertEqual(repr(VertexSet([0, 3, 7])), "{0,3,7}")


class TestSubsetsIter(unittest.TestCase):

    def test_order(self):
        self.assertEqual(list(subsets_iter([0, 1, 2], 2)),
                         [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(list(subsets_iter([5, 7], 2)), [(5, 7)])

    def test_counts(self):
        for size in range(13):
            for k in range(1, size + 2):
                found = list(subsets_iter(range(size), k))
                self.assertEqual(len(found), binom(size, k))
                self.assertEqual(len(set(found)), len(found))

    def test_too_large_k_is_empty(self):
        self.assertEqual(list(subsets_iter([0, 1], 3)), [])

    def test_all_subsets_follow_rank(self):
        for idx, s in enumerate(all_subsets(7, 3)):
            self.assertEqual(colex_rank(s), idx)
            self.assertEqual(set(s), set(colex_unrank(idx, 3)))

    def test_same_sets_as_itertools(self):
        self.assertEqual(set(subsets_iter(range(6), 3)),
                         set(itertools.combinations(range(6), 3)))


class TestPairParity(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(pair_parity(1, 4), 1)
        self.assertEqual(pair_parity(2, 4), 0)
        self.assertEqual(pair_parity(2, 6), 1)

    def test_direct_computation(self):
        for r in range(1, 21):
            for u in range(r):
                expected = (u * (u - 1) // 2 +
                            (r - u) * (r - u - 1) // 2) % 2
                self.assertEqual(pair_parity(u, r), expected)

    def test_u_below_r(self):
        with ShouldRaise(RangeError):
            pair_parity(4, 4)

# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
from testfixtures import LogCapture, ShouldRaise

from hyperlift.checks import SUITE_NAMES, run_suites, format_report
from hyperlift.exceptions import DomainError
from hyperlift.tests.support import unittest


SMALL = dict(seed=1, n_max=6, samples=10, random_graphs=20)


class TestSuites(unittest.TestCase):

    def assertPasses(self, names, **kwds):
        params = dict(SMALL, **kwds)
        results = run_suites(names, **params)
        self.assertEqual([result.name for result in results], names)
        for result in results:
            self.assertGreater(result.cases, 0, result.name)
            self.assertEqual(result.failures, 0,
                             "%s: %s" % (result.name, result.detail))
        return results

    def test_algebraic_suites(self):
        self.assertPasses(["linearity", "sum-law", "complement"])

    def test_preimage_and_distance(self):
        results = self.assertPasses(["preimage", "min-distance"])
        notes = results[1].detail
        self.assertIn("Psi_{2,5}^(2,3) min kernel weight 4 (bound 4)", notes)
        self.assertIn("Psi_{2,6}^(3,4) min kernel weight 4 (bound 4)", notes)

    def test_structural_suites(self):
        self.assertPasses(["non-occurrence", "components", "classification"],
                          n_max=5)

    def test_ramsey_suites(self):
        results = self.assertPasses(["rainbow", "ramsey-small"])
        self.assertIn("R(K_5^(3)-e, K_5^(3), K_5^(3), K_5^(3), K_4^(3)-e; 3) "
                      "> 15", results[1].detail)

    def test_reports_are_reproducible(self):
        first = format_report(run_suites(["sum-law", "rainbow"], **SMALL))
        second = format_report(run_suites(["rainbow", "sum-law"], **SMALL))
        self.assertEqual(first, second)
        self.assertTrue(first.startswith("PASS sum-law "))
        self.assertTrue(first.endswith("\n"))

    def test_progress_is_logged(self):
        with LogCapture("hyperlift.checks") as logs:
            run_suites(["sum-law"], **SMALL)
        logs.check(("hyperlift.checks", "INFO",
                    "suite sum-law: 50 cases, 0 failures"))

    def test_unknown_suite(self):
        with ShouldRaise(DomainError):
            run_suites(["sum-law", "vibes"])

    def test_all_names(self):
        self.assertEqual(len(SUITE_NAMES), 11)
        self.assertEqual(SUITE_NAMES[0], "linearity")
        self.assertEqual(SUITE_NAMES[-1], "ramsey-paper")

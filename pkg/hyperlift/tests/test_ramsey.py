# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
import random

from testfixtures import LogCapture, ShouldRaise

from hyperlift.colorings import (HyperedgeColoring, constant_coloring,
                                 random_coloring)
from hyperlift.exceptions import (ShapeError, DomainError, CertificateError,
                                  ColoringParseError)
from hyperlift.lifting import LiftSpec, apply_lift
from hyperlift.ramsey import (Target, AvoidanceSpec, Certificate, CLIQUE,
                              CLIQUE_MINUS, INDUCED, CONTAINS,
                              parse_avoidance_spec, format_avoidance_spec,
                              verify_avoidance, lift_3coloring,
                              blowup_5color, block_position,
                              derive_clique_sizes, avoidance_spec_for,
                              certify_bound, bound_table, write_certificate,
                              read_certificate)
from hyperlift.structure import generate_family, find_mono_clique
from hyperlift.tests.support import unittest, triangle_coloring


PENTAGON_STATEMENT = ("R(K_5^(3)-e, K_5^(3), K_5^(3), K_5^(3), K_4^(3)-e; 3)"
                      " > 15")


def _triangle(c01, c02, c12):
    return HyperedgeColoring(3, 2, 3, [c01, c02, c12])


class TestLift3Coloring(unittest.TestCase):

    def test_triangles(self):
        self.assertEqual(lift_3coloring(_triangle(1, 1, 1)).values, (1,))
        self.assertEqual(lift_3coloring(_triangle(1, 1, 2)).values, (2,))
        self.assertEqual(lift_3coloring(_triangle(0, 1, 1)).values, (0,))
        self.assertEqual(lift_3coloring(_triangle(2, 0, 2)).values, (0,))

    def test_rainbow(self):
        self.assertEqual(lift_3coloring(_triangle(0, 1, 2)).values, (0,))
        self.assertEqual(lift_3coloring(_triangle(2, 1, 0), 2).values, (2,))

    def test_preconditions(self):
        with ShouldRaise(DomainError):
            lift_3coloring(constant_coloring(4, 2, 2, 1))
        with ShouldRaise(ShapeError):
            lift_3coloring(constant_coloring(4, 3, 3, 1))

    def test_agrees_with_merged_two_color_lift(self):
        rng = random.Random(31)
        for _ in range(50):
            n = rng.randint(3, 8)
            f = random_coloring(n, 2, 3, rng)
            lifted = lift_3coloring(f)
            spec = LiftSpec(2, n, 2, 3)
            merged = apply_lift(spec, HyperedgeColoring(
                n, 2, 2, [1 if v else 0 for v in f.values]))
            for mine, theirs in zip(lifted.values, merged.values):
                self.assertEqual(mine == 0, theirs == 0)
            for c in (1, 2):
                single = apply_lift(spec, HyperedgeColoring(
                    n, 2, 2, [1 if v == c else 0 for v in f.values]))
                for mine, theirs in zip(lifted.values, single.values):
                    if mine == c:
                        self.assertEqual(theirs, 1)


class TestBlowup(unittest.TestCase):

    def setUp(self):
        self.lifted = lift_3coloring(generate_family("pentagon"))

    def test_block_colors(self):
        blown = blowup_5color(self.lifted, 3)
        self.assertEqual(blown.shape, (15, 3, 5))
        self.assertEqual(blown.value_of([0, 1, 2]),
                         self.lifted.value_of([0, 1, 2]))
        self.assertEqual(blown.value_of([6, 7, 9]),
                         self.lifted.value_of([1, 2, 4]))
        self.assertEqual(blown.value_of([0, 5, 6]), 3)
        self.assertEqual(blown.value_of([0, 1, 14]), 3)
        self.assertEqual(blown.value_of([0, 5, 10]), 4)

    def test_within_blocks_never_new_colors(self):
        blown = blowup_5color(self.lifted, 4)
        for e, v in blown.items():
            blocks = set(block_position(x, 5)[0] for x in e)
            self.assertEqual(v >= 3, len(blocks) > 1)
            if len(blocks) > 1:
                self.assertEqual(v, len(blocks) + 1)

    def test_preconditions(self):
        with ShouldRaise(DomainError):
            blowup_5color(self.lifted, 2)
        with ShouldRaise(ShapeError):
            blowup_5color(generate_family("pentagon"), 3)
        with ShouldRaise(DomainError):
            blowup_5color(constant_coloring(5, 3, 5, 4), 3)

    def test_block_position(self):
        self.assertEqual(block_position(17, 5), (3, 2))
        self.assertEqual(block_position(4, 5), (0, 4))


class TestAvoidanceSpec(unittest.TestCase):

    def test_parse_and_format(self):
        text = "0:cliqueminus:5:contains,1:clique:5,4:cliqueminus:4:induced"
        spec = parse_avoidance_spec(text)
        self.assertEqual(spec.targets,
                         (Target(0, CLIQUE_MINUS, 5, CONTAINS),
                          Target(1, CLIQUE, 5),
                          Target(4, CLIQUE_MINUS, 4, INDUCED)))
        self.assertEqual(format_avoidance_spec(spec), text)
        self.assertEqual(parse_avoidance_spec(str(spec)), spec)

    def test_defaults(self):
        spec = parse_avoidance_spec(" 2:cliqueminus:6 , 0:clique:4 ")
        self.assertEqual(str(spec), "0:clique:4,2:cliqueminus:6:contains")
        self.assertEqual(len(parse_avoidance_spec("")), 0)

    def test_malformed(self):
        for text in ("0:clique", "x:clique:4", "0:triangle:4",
                     "0:clique:4,0:cliqueminus:5", "0:cliqueminus:5:maybe",
                     "-1:clique:4"):
            with ShouldRaise(DomainError):
                parse_avoidance_spec(text)

    def test_checked_against_coloring(self):
        f = constant_coloring(6, 3, 2, 1)
        with ShouldRaise(DomainError):
            verify_avoidance(f, AvoidanceSpec([(2, CLIQUE, 4)]))
        with ShouldRaise(DomainError):
            verify_avoidance(f, AvoidanceSpec([(1, CLIQUE, 2)]))
        with ShouldRaise(DomainError):
            verify_avoidance(f, AvoidanceSpec([(1, CLIQUE_MINUS, 3)]))

    def test_statement(self):
        spec = avoidance_spec_for((3, 3, 3), 3)
        self.assertEqual(spec.statement(3, 15), PENTAGON_STATEMENT)


class TestVerifyAvoidance(unittest.TestCase):

    def test_violation(self):
        ones = constant_coloring(5, 3, 2, 1)
        certificate = verify_avoidance(ones, parse_avoidance_spec("1:clique:4"))
        self.assertFalse(certificate.verified)
        self.assertEqual(certificate.violations[0].vertices, (0, 1, 2, 3))
        self.assertIn("violation: color=1 vertices={0,1,2,3}",
                      certificate.summary())

    def test_empty_spec(self):
        certificate = verify_avoidance(constant_coloring(5, 3, 2, 1),
                                       AvoidanceSpec())
        self.assertTrue(certificate.verified)

    def test_targets_larger_than_n(self):
        certificate = verify_avoidance(constant_coloring(5, 3, 2, 1),
                                       parse_avoidance_spec("1:clique:6"))
        self.assertTrue(certificate.verified)

    def test_pentagon_blowup(self):
        blown = blowup_5color(lift_3coloring(generate_family("pentagon")), 3)
        spec = parse_avoidance_spec("0:cliqueminus:5:contains,1:clique:5,"
                                    "2:clique:5,3:clique:5,"
                                    "4:cliqueminus:4:contains")
        certificate = verify_avoidance(blown, spec)
        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.statement, PENTAGON_STATEMENT)


class TestCertify(unittest.TestCase):

    def test_derive_clique_sizes(self):
        self.assertEqual(derive_clique_sizes(generate_family("pentagon")),
                         (3, 3, 3))
        self.assertEqual(derive_clique_sizes(constant_coloring(5, 2, 3, 1)),
                         (3, 6, 3))

    def test_pentagon(self):
        with LogCapture("hyperlift.ramsey") as logs:
            certificate = certify_bound("pentagon", 3)
        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.statement, PENTAGON_STATEMENT)
        self.assertEqual(certificate.coloring.shape, (15, 3, 5))
        self.assertIn("verified", logs.records[-1].getMessage())

    def test_base_coloring_is_accepted(self):
        certificate = certify_bound(generate_family("pentagon"), 3)
        self.assertEqual(certificate.statement, PENTAGON_STATEMENT)

    def test_gf16(self):
        base = generate_family("gf16_3coloring")
        for c in range(3):
            self.assertEqual(find_mono_clique(base, c, 3), None)
        certificate = certify_bound("gf16_3coloring", 3)
        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.statement,
                         "R(K_5^(3)-e, K_5^(3), K_5^(3), K_5^(3), "
                         "K_4^(3)-e; 3) > 48")

    def test_too_few_copies(self):
        with ShouldRaise(DomainError):
            certify_bound("gf16_3coloring", 2)

    def test_base_must_avoid_its_cliques(self):
        with ShouldRaise(CertificateError):
            certify_bound(triangle_coloring(5, lambda i, j: 1), 3,
                          cliques=(3, 3, 3))
        with ShouldRaise(DomainError):
            certify_bound("pentagon", 3, cliques=(3, 2, 3))

    def test_bound_table(self):
        rows = bound_table(3)
        self.assertEqual(len(rows), 7)
        self.assertEqual(rows[0], "R_3(K_3) = 17 => " +
                         PENTAGON_STATEMENT.replace("> 15", "> 48"))
        self.assertEqual(rows[1],
                         "R_3(K_4) >= 128 => R(K_7^(3)-e, K_7^(3), K_7^(3), "
                         "K_5^(3), K_4^(3)-e; 3) > 381")


class TestCertificateFormat(unittest.TestCase):

    def setUp(self):
        self.certificate = certify_bound("pentagon", 3)

    def test_round_trip(self):
        text = write_certificate(self.certificate)
        self.assertTrue(text.splitlines()[-1].startswith(
            "# CERT statement=%s verified=true targets=0:cliqueminus:5"
            % (PENTAGON_STATEMENT,)))
        certificate, claimed = read_certificate(text)
        self.assertTrue(claimed)
        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.statement, PENTAGON_STATEMENT)
        self.assertEqual(certificate.spec, self.certificate.spec)
        self.assertEqual(certificate.coloring, self.certificate.coloring)

    def test_corrupted_coloring_is_caught(self):
        blown = self.certificate.coloring
        values = list(blown.values)
        for i, e in enumerate(blown.hyperedges()):
            if e[-1] < 5:
                values[i] = 1
        forged = Certificate(HyperedgeColoring(15, 3, 5, values),
                             self.certificate.spec,
                             self.certificate.statement)
        with LogCapture("hyperlift.ramsey") as logs:
            certificate, claimed = read_certificate(write_certificate(forged))
        self.assertTrue(claimed)
        self.assertFalse(certificate.verified)
        self.assertEqual(certificate.violations[0].vertices, (0, 1, 2, 3, 4))
        self.assertTrue(any(r.levelname == "WARNING" for r in logs.records))

    def test_missing_cert_line(self):
        text = write_certificate(self.certificate)
        text = "\n".join(text.splitlines()[:-1]) + "\n"
        with ShouldRaise(ColoringParseError):
            read_certificate(text)

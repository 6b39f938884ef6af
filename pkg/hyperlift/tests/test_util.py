# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
import os
from unittest import mock

from testfixtures import ShouldRaise, TempDirectory

from hyperlift.exceptions import UsageError
from hyperlift.util import DEFAULT_SETTINGS, find_config_file, load_settings
from hyperlift.tests.support import unittest, TEST_INI


class TestSettings(unittest.TestCase):

    def setUp(self):
        self.dir = TempDirectory()
        self.environ = mock.patch.dict(os.environ)
        self.environ.start()
        os.environ.pop("HYPERLIFT_INI", None)

    def tearDown(self):
        self.environ.stop()
        self.dir.cleanup()

    def test_read_config(self):
        settings = load_settings(TEST_INI)
        self.assertEqual(settings["hyperlift.max_matrix_rows"], 5000)
        self.assertEqual(settings["hyperlift.kernel_weight_budget"], 4096)
        self.assertEqual(settings["hyperlift.rainbow_color"], 2)
        self.assertEqual(settings["check.seed"], 7)
        self.assertEqual(settings["check.n_max"], 5)

    def test_partial_config_keeps_defaults(self):
        path = self.dir.write("partial.ini", "[check]\nsamples = 3\n",
                              encoding="ascii")
        settings = load_settings(path)
        self.assertEqual(settings["check.samples"], 3)
        self.assertEqual(settings["check.random_graphs"], 500)
        self.assertEqual(settings["hyperlift.max_matrix_rows"], 200000)

    def test_bad_values(self):
        path = self.dir.write("bad.ini", "[hyperlift]\nrainbow_color = red\n",
                              encoding="ascii")
        with ShouldRaise(UsageError):
            load_settings(path)

    def test_missing_file(self):
        with ShouldRaise(UsageError):
            load_settings(os.path.join(self.dir.path, "nowhere.ini"))

    def test_find_config_file(self):
        self.assertEqual(find_config_file(
            os.path.join(self.dir.path, "nowhere.ini"), TEST_INI),
            os.path.abspath(TEST_INI))
        os.environ["HYPERLIFT_INI"] = TEST_INI
        self.assertEqual(find_config_file(), os.path.abspath(TEST_INI))
        self.assertEqual(load_settings()["check.n_max"], 5)

    def test_defaults_without_a_file(self):
        if find_config_file() is None:
            self.assertEqual(load_settings(), DEFAULT_SETTINGS)

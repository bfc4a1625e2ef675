# Copyright 2016 Cloudbase Solutions Srl
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import unittest

import mock

from ndim.common import constant
from ndim.common import exception
from ndim.special import numerics
from ndim.verify import base


class _Equal(base.Check):

    def _work(self):
        self.compare(2, 2, "equal")
        self.compare(1, 2, "different")
        self.skip("unsupported", "no reason")


class _Passing(base.Check):

    description = "Always passes"

    def _work(self):
        self.assert_true(True, "true")
        self.note("checked", flag=constant.FLAG_REDUCED_PRECISION)


class _Empty(base.Check):

    def _work(self):
        pass


class _Aborted(base.Check):

    def _work(self):
        self.compare(1, 1, "equal")
        raise exception.NonConvergent(series="2F1(1, 1; 1)", margin=-1)


class _PartlyFailing(base.Check):

    def _work(self):
        for case in ("first", "second", "third"):
            try:
                if case == "second":
                    raise exception.MaxTermsExceeded(series="3F2",
                                                     max_terms=10)
                self.compare(1, 1, case)
            except exception.NdimException as exc:
                self.fail(case, exc)


class TestCheck(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=20)
        self._settings = base.Settings(seed=7)

    def test_failure(self):
        result = _Equal(self._precision, self._settings).run()
        self.assertEqual(constant.CHECK_FAILED, result.status)
        self.assertFalse(result.passed)
        self.assertEqual(2, result.cases)
        self.assertEqual(1, result.skipped)
        self.assertEqual("_Equal", result.name)
        self.assertIn("failed different", result.details)

    def test_pass(self):
        result = _Passing(self._precision, self._settings).run()
        self.assertEqual(constant.CHECK_PASSED, result.status)
        self.assertTrue(result.passed)
        self.assertIn(constant.FLAG_REDUCED_PRECISION, result.flags)
        self.assertIn("checked", result.details)

    def test_skipped(self):
        result = _Empty(self._precision, self._settings).run()
        self.assertEqual(constant.CHECK_SKIPPED, result.status)
        self.assertTrue(result.passed)

    def test_aborted(self):
        result = _Aborted(self._precision, self._settings).run()
        self.assertEqual(constant.CHECK_FAILED, result.status)
        self.assertTrue(any(item.startswith("aborted")
                            for item in result.details))

    def test_case_error(self):
        result = _PartlyFailing(self._precision, self._settings).run()
        self.assertEqual(constant.CHECK_FAILED, result.status)
        self.assertEqual(3, result.cases)
        self.assertIn("failed second", result.details)
        self.assertTrue(any(item.startswith("error second")
                            for item in result.details))
        self.assertFalse(any(item.startswith("aborted")
                             for item in result.details))

    def test_tolerance(self):
        check = _Empty(self._precision, self._settings)
        self.assertEqual(self._precision.agreement_tolerance,
                         check.tolerance)
        self.assertTrue(check.compare(1, 1 + 1e-12, "close", 1e-10))
        self.assertFalse(check.compare(1, 2, "far", 1e-10))

    def test_seeded_samples(self):
        first = _Empty(self._precision, self._settings)
        second = _Empty(self._precision, self._settings)
        self.assertEqual([first.uniform(0, 1) for _ in range(5)],
                         [second.uniform(0, 1) for _ in range(5)])
        value = first.integer(-3, -1)
        self.assertTrue(-3 <= value <= -1)


class TestSettings(unittest.TestCase):

    def test_from_config(self):
        config = mock.Mock()
        config.verify.seed = 3
        config.verify.pochhammer_samples = 4
        config.verify.gauss_samples = 5
        config.verify.coalesce_samples = 6
        config.verify.representation_samples = 7
        config.verify.master_grid = 8
        config.verify.threeloop_grid = 9
        settings = base.Settings.from_config(config)
        self.assertEqual(3, settings.seed)
        self.assertEqual(7, settings.representation_samples)
        self.assertEqual(9, settings.threeloop_grid)


class TestSuite(unittest.TestCase):

    def test_run(self):
        suite = base.Suite("dummy", [_Passing, _Empty], "Two checks")
        results = suite.run(numerics.Precision(digits=20), base.Settings())
        self.assertEqual(["_Passing", "_Empty"],
                         [result.name for result in results])
        self.assertTrue(all(result.passed for result in results))

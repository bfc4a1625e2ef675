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

import mpmath

from ndim.common import exception
from ndim.special import appell
from ndim.special import numerics


class TestAppellF4(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)

    def test_in_region(self):
        self.assertTrue(appell.in_region(mpmath.mpf("0.04"),
                                         mpmath.mpf("0.09")))
        self.assertFalse(appell.in_region(mpmath.mpf("0.25"),
                                          mpmath.mpf("0.25")))

    def test_terminating_outside_region(self):
        params = appell.F4Params(-1, 2, 3, 5, 6, 10)
        result = appell.f4(params, self._precision)
        self.assertEqual(-7, result.value)
        self.assertEqual(2, result.terms)

    def test_outside_region(self):
        params = appell.F4Params("0.5", "0.5", "1.5", "1.5", "0.5", "0.5")
        self.assertRaises(exception.OutsideRegion, appell.f4, params,
                          self._precision)

    def test_reduces_to_gauss(self):
        params = appell.F4Params("0.5", "0.7", "1.3", 2, "0.3", 0)
        result = appell.f4(params, self._precision)
        with self._precision.workdps():
            expected = mpmath.hyp2f1(mpmath.mpf("0.5"), mpmath.mpf("0.7"),
                                     mpmath.mpf("1.3"), mpmath.mpf("0.3"))
            self.assertLess(numerics.relative_error(result.value, expected),
                            1e-25)

    def test_symmetry(self):
        params = appell.F4Params("0.5", "-0.3", "1.3", "2.2", "0.04",
                                 "0.09")
        first = appell.f4(params, self._precision)
        second = appell.f4(params.swapped(), self._precision)
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(first.value,
                                                    second.value), 1e-25)

    def test_max_terms(self):
        precision = numerics.Precision(digits=30, max_terms=5)
        params = appell.F4Params("0.5", "0.5", "1.5", "1.5", "0.2", "0.2")
        self.assertRaises(exception.MaxTermsExceeded, appell.f4, params,
                          precision)

    def test_denominator_pole(self):
        params = appell.F4Params(-3, 1, -1, 2, "0.1", "0.1")
        self.assertRaises(exception.DenominatorPole, appell.f4, params,
                          self._precision)

    def test_anti_diagonals(self):
        params = appell.F4Params(1, 1, 1, 1, "0.1", "0.2")
        diagonals = appell.anti_diagonals(params, self._precision)
        with self._precision.workdps():
            self.assertEqual(1, next(diagonals))
            self.assertLess(abs(next(diagonals) - mpmath.mpf("0.3")), 1e-25)
